"""Ways of wiring small connectors and networks into larger ones.

Two gluing schemes recur in all the generators: placing two blocks side
by side (``cmerge`` and friends) and interleaving two blocks onto the
even and odd lines (``ceomerge`` and friends).  Both preserve the connector
invariants by construction, and the constructor revalidates anyway.
"""

from .core import Connector, Network
from .errors import WidthMismatch
from .index import elift, idiv2, olift, split_index


def cswap(i: int, j: int, width: int) -> Connector:
    """The connector comparing exactly lines ``i`` and ``j``."""
    return Connector.from_pairs(width, [(i, j)])


def cmerge(c1: Connector, c2: Connector) -> Connector:
    """Place two connectors side by side on ``c1.width + c2.width`` lines.

    Lines below ``c1.width`` follow ``c1``; the rest follow ``c2`` shifted
    up.  Flip flags travel with their source connector.
    """
    m1, m2 = c1.width, c2.width
    width = m1 + m2
    link = []
    flip = []
    for i in range(width):
        side, x = split_index(i, m1, m2)
        if side == "left":
            link.append(c1.link[x])
            flip.append(c1.flip[x])
        else:
            link.append(m1 + c2.link[x])
            flip.append(c2.flip[x])
    return Connector(width, tuple(link), tuple(flip))


def nmerge(n1: Network, n2: Network) -> Network:
    """Layerwise side-by-side merge of two networks.

    Layers are paired off in order; if the operands have different depths
    the surplus layers of the longer one are dropped, so this is only
    lossless on equal-size operands (the generators never call it
    otherwise).
    """
    width = n1.width + n2.width
    layers = tuple(cmerge(a, b) for a, b in zip(n1.layers, n2.layers))
    return Network(width, layers)


def ndup(n: Network) -> Network:
    """Two side-by-side copies of a network, one per half of the lines."""
    return nmerge(n, n)


def ceomerge(c1: Connector, c2: Connector) -> Connector:
    """Interleave two equal-width connectors onto even and odd lines.

    Line ``2x`` follows ``c1`` through the even embedding and line
    ``2x + 1`` follows ``c2`` through the odd embedding, so parity is
    preserved: even lines only ever link to even lines, odd to odd.
    """
    if c1.width != c2.width:
        raise WidthMismatch(
            f"cannot interleave widths {c1.width} and {c2.width}"
        )
    m = c1.width
    link = []
    flip = []
    for i in range(m + m):
        x = idiv2(i, m)
        if i % 2:
            link.append(olift(c2.link[x], m))
            flip.append(c2.flip[x])
        else:
            link.append(elift(c1.link[x], m))
            flip.append(c1.flip[x])
    return Connector(m + m, tuple(link), tuple(flip))


def neomerge(n1: Network, n2: Network) -> Network:
    """Layerwise even/odd interleave of two equal-width networks."""
    if n1.width != n2.width:
        raise WidthMismatch(
            f"cannot interleave widths {n1.width} and {n2.width}"
        )
    layers = tuple(ceomerge(a, b) for a, b in zip(n1.layers, n2.layers))
    return Network(n1.width * 2, layers)


def neodup(n: Network) -> Network:
    """Two interleaved copies of a network: one on even lines, one on odd."""
    return neomerge(n, n)
