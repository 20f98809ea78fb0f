"""The exchange sorter built from even/odd slicing, swaps, and jumps.

The recursion sorts the even-position and odd-position lines separately
(interleaved copies of the smaller sorter), after which the two slices
are individually sorted and their false-counts differ by a bounded
amount.  A swap layer plus a halving sequence of jump layers then closes
that gap down to at most one, which is exactly when the interleaving is
sorted as a whole.
"""

from typing import Sequence

from .combinators import neodup
from .core import Connector, Network
from .errors import ZeroWidth
from .index import iadd, inext, ipred, isub, pow2


def etake(values: Sequence) -> tuple:
    """Entries at even positions."""
    return tuple(values[::2])


def otake(values: Sequence) -> tuple:
    """Entries at odd positions."""
    return tuple(values[1::2])


def count_false(values: Sequence) -> int:
    """Number of falsy entries; the bookkeeping quantity of the jump layers."""
    return sum(1 for v in values if not v)


def uphalf(n: int) -> int:
    """Ceiling half: half of ``n + 1``."""
    return (n + 1) // 2


def ceswap(width: int) -> Connector:
    """Connector pairing each even line with its successor.

    Odd lines link back to their predecessor; on odd widths the last
    (even) line has no successor and stays unconnected.
    """
    if width == 0:
        raise ZeroWidth("ceswap needs at least one line")
    link = tuple(
        ipred(i, width) if i % 2 else inext(i, width) for i in range(width)
    )
    return Connector(width, link, (False,) * width)


def codd_jump(k: int, width: int) -> Connector:
    """Connector pairing odd line ``i`` with even line ``i + k``, for odd ``k``.

    Jumps that would leave the range are dropped (those lines stay
    unconnected), and an even ``k`` yields the identity connector.
    """
    if width == 0:
        raise ZeroWidth("codd_jump needs at least one line")
    if k % 2 == 0:
        return Connector.identity(width)
    link = tuple(
        iadd(k, i, width) if i % 2 else isub(k, i, width) for i in range(width)
    )
    return Connector(width, link, (False,) * width)


def knuth_jump_rec(width: int, count: int, jump: int) -> Network:
    """``count`` jump layers, halving the jump at each step.

    Layer ``t`` uses jump ``r_t`` where ``r_0 = jump`` and
    ``r_{t+1} = uphalf(r_t) - 1`` (never going below zero).
    """
    if width == 0:
        raise ZeroWidth("knuth_jump_rec needs at least one line")
    if jump < 0:
        raise ValueError(f"jump must be nonnegative, got {jump}")
    layers = []
    r = jump
    for _ in range(count):
        layers.append(codd_jump(r, width))
        r = max(uphalf(r) - 1, 0)
    return Network(width, tuple(layers))


def knuth_exchange(m: int) -> Network:
    """Exchange sorting network on ``2**m`` lines; ``m * (m + 1) // 2`` layers."""
    width = pow2(m)
    if m == 0:
        return Network(1, ())
    head = neodup(knuth_exchange(m - 1))
    jumps = knuth_jump_rec(width, m - 1, pow2(m - 1) - 1)
    return head + Network(width, (ceswap(width), *jumps.layers))
