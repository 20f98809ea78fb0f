"""Shared strategies and enumeration helpers for the test suite."""

import itertools

from hypothesis import strategies as st

from sortnet.core import Connector, Network


def all_bool_tuples(width):
    """Every boolean tuple of the given width, lexicographic, False first."""
    return itertools.product((False, True), repeat=width)


@st.composite
def connectors(draw, width=None, max_width=8, allow_flips=True):
    """Random valid connector: a partial matching with optional flip flags."""
    w = draw(st.integers(0, max_width)) if width is None else width
    order = draw(st.permutations(list(range(w))))
    pair_count = draw(st.integers(0, w // 2))
    pairs = []
    for t in range(pair_count):
        flipped = draw(st.booleans()) if allow_flips else False
        pairs.append((order[2 * t], order[2 * t + 1], flipped))
    return Connector.from_pairs(w, pairs)


@st.composite
def networks(draw, width=None, max_width=8, max_depth=5, allow_flips=True):
    w = draw(st.integers(0, max_width)) if width is None else width
    depth = draw(st.integers(0, max_depth))
    layers = tuple(
        draw(connectors(width=w, allow_flips=allow_flips)) for _ in range(depth)
    )
    return Network(w, layers)


@st.composite
def networks_with_int_tuples(draw, max_width=8, max_depth=5, allow_flips=True):
    w = draw(st.integers(0, max_width))
    net = draw(networks(width=w, max_depth=max_depth, allow_flips=allow_flips))
    values = draw(st.lists(st.integers(-1000, 1000), min_size=w, max_size=w))
    return net, tuple(values)


@st.composite
def networks_with_bool_tuples(draw, max_width=8, max_depth=5, allow_flips=True):
    w = draw(st.integers(0, max_width))
    net = draw(networks(width=w, max_depth=max_depth, allow_flips=allow_flips))
    values = draw(st.lists(st.booleans(), min_size=w, max_size=w))
    return net, tuple(values)
