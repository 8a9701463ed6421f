"""Optimized searches against the naive enumerations on tiny instances.

The oracle shares no code with the optimized path: raw ordered tuples,
longhand rank checks, polynomial arithmetic only.  Agreement on every
instance small enough to enumerate is the core correctness evidence.
"""

import pytest

from convinv import (
    gen_column_distance,
    generalized_weight,
    ghw,
    unrestricted_gcd,
)
from convinv.errors import BudgetExceeded, OrderOutOfRange
from convinv.oracle import (
    naive_gen_column_distance,
    naive_genweight,
    naive_ghw,
    naive_unrestricted,
)

# enumeration count q^(r * k * (j+1)) at or below this runs in the suite
TUPLE_GATE = 300_000


def _small_enough(q: int, r: int, L: int) -> bool:
    return q ** (r * L) <= TUPLE_GATE


def test_window_distances_match_oracle(small_corpus):
    checked = 0
    for code in small_corpus:
        q, k = code.field.q, code.k
        for r in range(1, k + 1):
            for j in (0, 1, 2):
                if not _small_enough(q, r, k * (j + 1)):
                    continue
                got = gen_column_distance(code, r, j).value
                assert got == naive_gen_column_distance(code, r, j), (code, r, j)
                checked += 1
    assert checked > 150


def test_unrestricted_matches_oracle(small_corpus):
    checked = 0
    for code in small_corpus[:30]:
        q, k = code.field.q, code.k
        for j in (0, 1):
            L = k * (j + 1)
            for r in range(1, L + 1):
                if not _small_enough(q, r, L):
                    continue
                got = unrestricted_gcd(code, r, j).value
                assert got == naive_unrestricted(code, r, j), (code, r, j)
                checked += 1
    assert checked > 60


def test_ghw_matches_oracle(small_corpus):
    for code in small_corpus:
        block = code.evaluate_at_zero()
        for r in range(1, block.dim + 1):
            if not _small_enough(block.field.q, r, block.dim):
                continue
            assert ghw(block, r).value == naive_ghw(block, r)


def test_genweight_matches_oracle(small_corpus):
    checked = 0
    for code in small_corpus:
        f = code.field
        for r in range(1, code.k + 1):
            for D in (code.delta1, code.delta1 + 1):
                caps = [D - rd for rd in code.row_degrees]
                active = [i for i, c in enumerate(caps) if c >= 0]
                if len(active) < r:
                    continue
                width = sum(caps[i] + 1 for i in active)
                if f.q ** (r * width) > TUPLE_GATE:
                    continue
                got = generalized_weight(code, r, degree_bound=D).value
                assert got == naive_genweight(code, r, D), (code, r, D)
                checked += 1
    assert checked > 80


def test_oracle_validation(basic_pair):
    with pytest.raises(OrderOutOfRange):
        naive_gen_column_distance(basic_pair, 3, 0)
    with pytest.raises(OrderOutOfRange):
        naive_gen_column_distance(basic_pair, 1, -1)
    with pytest.raises(OrderOutOfRange):
        naive_unrestricted(basic_pair, 5, 1)
    with pytest.raises(OrderOutOfRange):
        naive_ghw(basic_pair.evaluate_at_zero(), 2)
    with pytest.raises(OrderOutOfRange, match="at least 1"):
        naive_genweight(basic_pair, 2, 0)


def test_oracle_refuses_large_enumerations(gf3):
    from convinv import make_code

    big = make_code(
        gf3, [[[1], [0], [2], [1]], [[0], [1], [1], [2]]]
    )
    with pytest.raises(BudgetExceeded) as exc:
        naive_gen_column_distance(big, 2, 6)
    assert exc.value.needed == 3 ** (2 * 2 * 7)
