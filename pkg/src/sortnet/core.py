"""Connector and network representations and their application semantics.

A connector is one parallel layer of disjoint two-line comparators over a
fixed number of lines, a network is an ordered sequence of such layers,
and application threads a tuple of values through the comparators.  All
three are immutable; sharing them across threads or processes needs no
synchronization.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence, TypeVar

from .errors import (
    DegeneratePair,
    DuplicateLine,
    IndexOutOfRange,
    InvalidConnector,
    WidthMismatch,
)

V = TypeVar("V")
W = TypeVar("W")

#: A comparator pair as accepted by :meth:`Connector.from_pairs`:
#: ``(low, high)`` or ``(low, high, flipped)``.
PairSpec = "tuple[int, int] | tuple[int, int, bool]"


@dataclass(frozen=True)
class Connector:
    """One parallel layer of disjoint comparators over ``width`` lines.

    ``link[i]`` names the partner of line ``i``; ``link[i] == i`` leaves the
    line untouched.  The map must be an involution, which is exactly the
    statement that the comparator pairs are disjoint.  ``flip[i]`` selects
    the orientation of the comparator on ``{i, link[i]}``: clear means the
    lower-numbered line receives the minimum (the usual downward
    comparator), set means it receives the maximum.  Partner lines always
    carry the same flag.

    There is no unchecked way to build one of these: the constructor
    revalidates every invariant, so any reachable instance is sound.
    """

    width: int
    link: tuple[int, ...]
    flip: tuple[bool, ...]

    def __post_init__(self):
        if self.width < 0:
            raise InvalidConnector(f"width must be nonnegative, got {self.width}")
        if len(self.link) != self.width:
            raise InvalidConnector(
                f"link has {len(self.link)} entries for width {self.width}"
            )
        if len(self.flip) != self.width:
            raise InvalidConnector(
                f"flip has {len(self.flip)} entries for width {self.width}"
            )
        for i, j in enumerate(self.link):
            if not 0 <= j < self.width:
                raise InvalidConnector(f"link[{i}] = {j} not in [0, {self.width})")
            if self.link[j] != i:
                raise InvalidConnector(
                    f"link is not involutive at line {i}: {i} -> {j} -> {self.link[j]}"
                )
            if self.flip[j] != self.flip[i]:
                raise InvalidConnector(
                    f"flip differs across linked lines {i} and {j}"
                )

    @classmethod
    def from_pairs(cls, width: int, pairs: Iterable[PairSpec]) -> "Connector":
        """Build a connector from disjoint comparator pairs.

        Each pair is ``(low, high)`` or ``(low, high, flipped)``; the two
        indices may come in either order but must differ.  Lines not
        mentioned stay unconnected with a clear flip flag.
        """
        if width < 0:
            raise InvalidConnector(f"width must be nonnegative, got {width}")
        link = list(range(width))
        flip = [False] * width
        seen: set[int] = set()
        for pair in pairs:
            if len(pair) == 2:
                a, b = pair
                flipped = False
            else:
                a, b, flipped = pair
            for idx in (a, b):
                if not 0 <= idx < width:
                    raise IndexOutOfRange(f"line {idx} not in [0, {width})")
            if a == b:
                raise DegeneratePair(f"pair links line {a} to itself")
            if a in seen or b in seen:
                dup = a if a in seen else b
                raise DuplicateLine(f"line {dup} appears in more than one pair")
            seen.add(a)
            seen.add(b)
            link[a], link[b] = b, a
            flip[a] = flip[b] = bool(flipped)
        return cls(width, tuple(link), tuple(flip))

    @classmethod
    def identity(cls, width: int) -> "Connector":
        """The connector with no comparators: every line passes through."""
        return cls.from_pairs(width, ())

    def pairs(self) -> list[tuple[int, int, bool]]:
        """Comparator pairs as ``(low, high, flipped)``, ascending by low line."""
        return [
            (i, j, self.flip[i]) for i, j in enumerate(self.link) if i < j
        ]

    def apply(self, values: Sequence[V]) -> tuple[V, ...]:
        """Run the layer: each comparator sorts (or flip-sorts) its two lines.

        For a pair ``(i, j)`` with ``i < j``, line ``i`` receives the
        minimum and line ``j`` the maximum of the two input values; a set
        flip flag exchanges those roles.  Unconnected lines pass through.
        """
        if len(values) != self.width:
            raise WidthMismatch(
                f"tuple of length {len(values)} applied to width {self.width}"
            )
        out = list(values)
        for i, j in enumerate(self.link):
            if i < j:
                a, b = values[i], values[j]
                lo, hi = (a, b) if a <= b else (b, a)
                if self.flip[i]:
                    out[i], out[j] = hi, lo
                else:
                    out[i], out[j] = lo, hi
        return tuple(out)


@dataclass(frozen=True)
class Network:
    """An ordered sequence of connectors over a fixed number of lines."""

    width: int
    layers: tuple[Connector, ...]

    def __post_init__(self):
        if self.width < 0:
            raise WidthMismatch(f"width must be nonnegative, got {self.width}")
        for pos, layer in enumerate(self.layers):
            if layer.width != self.width:
                raise WidthMismatch(
                    f"layer {pos} has width {layer.width}, network has {self.width}"
                )

    @property
    def size(self) -> int:
        """Number of layers."""
        return len(self.layers)

    def apply(self, values: Sequence[V]) -> tuple[V, ...]:
        """Thread a tuple through every layer in order."""
        if len(values) != self.width:
            raise WidthMismatch(
                f"tuple of length {len(values)} applied to width {self.width}"
            )
        out = tuple(values)
        for layer in self.layers:
            out = layer.apply(out)
        return out

    def __add__(self, other: "Network") -> "Network":
        if not isinstance(other, Network):
            return NotImplemented
        if self.width != other.width:
            raise WidthMismatch(
                f"cannot concatenate widths {self.width} and {other.width}"
            )
        return Network(self.width, self.layers + other.layers)


def map_values(func: Callable[[V], W], values: Sequence[V]) -> tuple[W, ...]:
    """Apply ``func`` to every entry of a value tuple.

    When ``func`` is strictly monotone this commutes with connector and
    network application, which is what lets boolean verdicts transfer to
    arbitrary ordered domains.
    """
    return tuple(func(v) for v in values)
