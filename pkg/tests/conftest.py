import random
from itertools import combinations

import pytest
from hypothesis import strategies as st

from gainrank.gain_core import build_graph
from gainrank.generators import FOURTH_ROOTS, PYTHAGOREAN_UNITS


def cycle(l, gains=None):
    """C_l on 0..l-1 traversed in order; gains default to 1."""
    gains = gains or [1] * l
    return build_graph(l, [(k, (k + 1) % l, gains[k]) for k in range(l)])


def path(n, gains=None):
    gains = gains or [1] * (n - 1)
    return build_graph(n, [(k, k + 1, gains[k]) for k in range(n - 1)])


@st.composite
def gain_graphs(draw, max_n=9, domain=FOURTH_ROOTS, min_n=0):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    gains = [draw(st.sampled_from(domain)) for _ in chosen]
    return build_graph(n, [(u, v, z) for (u, v), z in zip(sorted(chosen), gains)])


def exact_graphs(max_n=9):
    return gain_graphs(max_n=max_n, domain=PYTHAGOREAN_UNITS)


@pytest.fixture
def rng():
    return random.Random(20261018)
