"""Deciding whether a network sorts, plus permutation checks and statistics.

A network sorts every input over every ordered domain exactly when it
sorts every boolean input, and with ``w`` lines there are only ``2**w``
of those, so the sorting property is decidable by enumeration.  The
enumeration here is bit-parallel: lane ``i`` of the evaluation is one big
integer whose bit ``b`` holds line ``i``'s value for input number ``b``,
a comparator is an AND/OR pair on two lanes, and all ``2**w`` inputs move
through the network simultaneously.  Reported counterexamples are always
the lexicographically first failing input, recomputed through the plain
evaluator so they are independently reproducible.
"""

from __future__ import annotations

import itertools
import random
from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .core import Connector, Network
from .errors import WidthTooLarge

#: Exhaustive enumeration guard: 2**24 boolean inputs is the most this
#: module will grind through; use the sampled oracle beyond that.
MAX_EXHAUSTIVE_WIDTH = 24

#: Widths up to this get every permutation of ``range(width)`` included
#: in the sampled oracle on top of the random trials.
MAX_PERMUTATION_WIDTH = 8

_INT64_MIN = -(1 << 63)
_INT64_MAX = (1 << 63) - 1


def is_sorted(values: Sequence, descending: bool = False) -> bool:
    """Whether adjacent entries are nondecreasing (or nonincreasing)."""
    if descending:
        return all(a >= b for a, b in zip(values, values[1:]))
    return all(a <= b for a, b in zip(values, values[1:]))


def is_perm_of(s1: Sequence, s2: Sequence) -> bool:
    """Multiset equality of two sequences."""
    return Counter(s1) == Counter(s2)


@dataclass(frozen=True)
class Counterexample:
    """An input the network fails to sort, with the output it produced."""

    input: tuple
    output: tuple


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of a sorting check.

    ``mode`` is ``"exhaustive"`` (all boolean inputs in lexicographic
    order, False before True) or ``"sampled"`` (permutations of
    ``range(width)`` on small widths plus seeded random integer tuples).
    On failure ``counterexample`` holds the first offending input.
    """

    width: int
    inputs_checked: int
    mode: str
    is_sorting: bool
    counterexample: Counterexample | None = None
    seed: int | None = None
    trials: int | None = None


@dataclass(frozen=True)
class NetworkStats:
    """Layer and comparator counts of a network."""

    layers: int
    comparators: int


def _input_masks(width: int) -> list[int]:
    """Bit-parallel input lanes over all ``2**width`` boolean tuples.

    Input number ``b`` is the tuple whose line-``i`` value is bit
    ``width - 1 - i`` of ``b``, which makes increasing ``b`` enumerate
    tuples in lexicographic order.
    """
    total = 1 << width
    masks = []
    for i in range(width):
        p = width - 1 - i
        run = 1 << p
        lane = ((1 << run) - 1) << run  # one period: `run` zeros, `run` ones
        span = run << 1
        while span < total:
            lane |= lane << span
            span <<= 1
        masks.append(lane)
    return masks


def _apply_layer_bitparallel(layer: Connector, lanes: list[int]) -> list[int]:
    out = list(lanes)
    for i, j in enumerate(layer.link):
        if i < j:
            lo = lanes[i] & lanes[j]
            hi = lanes[i] | lanes[j]
            if layer.flip[i]:
                out[i], out[j] = hi, lo
            else:
                out[i], out[j] = lo, hi
    return out


def _input_tuple(number: int, width: int) -> tuple[bool, ...]:
    return tuple(bool((number >> (width - 1 - i)) & 1) for i in range(width))


def check_sorting_exhaustive(network: Network) -> VerificationReport:
    """Decide the sorting property over all ``2**width`` boolean inputs.

    Succeeds with ``inputs_checked = 2**width``; fails with the
    lexicographically first unsorted input (False orders before True) and
    the number of inputs examined up to and including it.
    """
    width = network.width
    if width > MAX_EXHAUSTIVE_WIDTH:
        raise WidthTooLarge(
            f"width {width} exceeds exhaustive guard {MAX_EXHAUSTIVE_WIDTH}"
        )
    lanes = _input_masks(width)
    for layer in network.layers:
        lanes = _apply_layer_bitparallel(layer, lanes)
    violations = 0
    for i in range(width - 1):
        violations |= lanes[i] & ~lanes[i + 1]
    if violations == 0:
        return VerificationReport(
            width=width,
            inputs_checked=1 << width,
            mode="exhaustive",
            is_sorting=True,
        )
    first = (violations & -violations).bit_length() - 1
    failing = _input_tuple(first, width)
    return VerificationReport(
        width=width,
        inputs_checked=first + 1,
        mode="exhaustive",
        is_sorting=False,
        counterexample=Counterexample(failing, network.apply(failing)),
    )


def check_sorting_oracle(
    network: Network, trials: int, seed: int = 0
) -> VerificationReport:
    """Sampled sorting check over integer tuples.

    Runs every permutation of ``range(width)`` when the width allows,
    then ``trials`` seeded random signed 64-bit tuples.  Each output must
    be a sorted permutation of its input.  Identical seeds give identical
    reports.
    """
    width = network.width
    rng = random.Random(seed)
    inputs = []
    if width <= MAX_PERMUTATION_WIDTH:
        inputs.append(itertools.permutations(range(width)))
    inputs.append(
        tuple(rng.randint(_INT64_MIN, _INT64_MAX) for _ in range(width))
        for _ in range(trials)
    )
    checked = 0
    for values in itertools.chain.from_iterable(inputs):
        checked += 1
        out = network.apply(values)
        if not (is_sorted(out) and is_perm_of(out, values)):
            return VerificationReport(
                width=width,
                inputs_checked=checked,
                mode="sampled",
                is_sorting=False,
                counterexample=Counterexample(tuple(values), out),
                seed=seed,
                trials=trials,
            )
    return VerificationReport(
        width=width,
        inputs_checked=checked,
        mode="sampled",
        is_sorting=True,
        seed=seed,
        trials=trials,
    )


def network_stats(network: Network) -> NetworkStats:
    """Layer count and total comparator count."""
    return NetworkStats(
        layers=network.size,
        comparators=sum(len(layer.pairs()) for layer in network.layers),
    )


def random_connector(
    width: int, rng: random.Random, flip_probability: float = 0.5
) -> Connector:
    """A connector from a random partial matching of the lines.

    Invariants hold by construction: a shuffled prefix of the lines is
    paired off two at a time, everything else stays unconnected.
    """
    lines = list(range(width))
    rng.shuffle(lines)
    pair_count = rng.randint(0, width // 2)
    pairs = []
    for t in range(pair_count):
        a, b = lines[2 * t], lines[2 * t + 1]
        pairs.append((a, b, rng.random() < flip_probability))
    return Connector.from_pairs(width, pairs)


def random_network(
    width: int,
    depth: int,
    rng: random.Random,
    flip_probability: float = 0.5,
) -> Network:
    """A network of ``depth`` random connectors; see :func:`random_connector`."""
    return Network(
        width,
        tuple(
            random_connector(width, rng, flip_probability) for _ in range(depth)
        ),
    )
