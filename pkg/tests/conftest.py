"""Shared fixtures: the randomized small-code corpus and a few named codes.

The corpus is generated with a fixed seed so every run (and every thread
count) sees the same codes: q in {2, 3}, n <= 4, k <= 2, memory <= 2.
"""

import random

import pytest

from convinv import FieldSpec, make_code
from convinv.errors import RankDeficient

CORPUS_SEED = 20260818
CORPUS_SIZE = 220
MAX_N = 4
MAX_K = 2
MAX_MEMORY = 2


def random_code(rng: random.Random):
    q = rng.choice((2, 3))
    f = FieldSpec(q)
    n = rng.randint(1, MAX_N)
    k = rng.randint(1, min(n, MAX_K))
    while True:
        rows = []
        for _ in range(k):
            deg = rng.randint(0, MAX_MEMORY)
            row = [[rng.randrange(q) for _ in range(deg + 1)] for _ in range(n)]
            rows.append(row)
        try:
            code = make_code(f, rows)
        except RankDeficient:
            continue
        if code.delta1 <= MAX_MEMORY:
            return code


def build_corpus(size: int = CORPUS_SIZE) -> list:
    rng = random.Random(CORPUS_SEED)
    return [random_code(rng) for _ in range(size)]


@pytest.fixture(scope="session")
def corpus():
    return build_corpus()


@pytest.fixture(scope="session")
def small_corpus(corpus):
    """The first fifty corpus codes, for the slower cross-checks."""
    return corpus[:50]


@pytest.fixture
def gf2():
    return FieldSpec(2)


@pytest.fixture
def gf3():
    return FieldSpec(3)


@pytest.fixture
def basic_pair(gf2):
    """Rank-2 code whose window distances stabilize immediately."""
    return make_code(gf2, [[[1], [0]], [[0], [0, 1]]])


@pytest.fixture
def cat_pair(gf2):
    """Catastrophic code with flat window-distance profiles."""
    return make_code(gf2, [[[1], [0, 1]], [[0, 1], [1]]])


@pytest.fixture
def weight_gap(gf2):
    """Noncatastrophic code whose second generalized weight is below the
    second window-distance limit."""
    return make_code(gf2, [[[1], [0, 1], [0]], [[0], [1], [1]]])
