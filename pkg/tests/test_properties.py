"""Structural invariants of the distance notions, checked over the corpus.

Each test encodes a relation that must hold for every code, so a failure
on any corpus instance is a real defect, not a flaky example.
"""

import pytest

from convinv import (
    CodeMap,
    MonomialMap,
    check_equivalence,
    check_isometry,
    check_j_equivalence,
    check_strong_isometry,
    column_distance,
    compose,
    distance_profile,
    free_distance,
    gen_column_distance,
    gen_column_distance_limit,
    ghw,
    inverse,
    is_mdp,
    limit_via_primed,
    make_code,
    mdp_horizon,
    product,
    singleton_bound,
    stabilization_bound,
    unrestricted_gcd,
)
from convinv.errors import BudgetExceeded
from convinv.poly import PolyMatrix
from convinv.structure import ConvCode


def test_window_values_never_decrease_in_j(corpus):
    for code in corpus:
        for r in range(1, code.k + 1):
            vals = distance_profile(code, r, 4).values
            assert vals == sorted(vals), (code, r)


def test_window_values_increase_in_r(corpus):
    for code in corpus:
        if code.k < 2:
            continue
        for j in (0, 1, 2):
            lo = gen_column_distance(code, 1, j).value
            hi = gen_column_distance(code, 2, j).value
            assert lo <= hi, (code, j)


def test_limits_strictly_increase_in_r_when_noncatastrophic(corpus):
    hit = 0
    for code in corpus:
        if code.k < 2 or not code.noncatastrophic:
            continue
        try:
            lo = gen_column_distance_limit(code, 1).value
            hi = gen_column_distance_limit(code, 2).value
        except BudgetExceeded:
            continue
        assert lo < hi, code
        hit += 1
    assert hit > 20


def test_limit_is_positive(corpus):
    for code in corpus:
        try:
            assert gen_column_distance_limit(code, 1).value >= 1, code
        except BudgetExceeded:
            pass


def test_noncatastrophic_window_bound(corpus):
    for code in corpus:
        if not code.noncatastrophic:
            continue
        for r in range(1, code.k + 1):
            for j in (0, 1, 2):
                v = gen_column_distance(code, r, j).value
                assert v <= (code.n - code.k) * (j + 1) + r, (code, r, j)


def test_unrestricted_at_most_restricted(corpus):
    for code in corpus:
        for r in range(1, code.k + 1):
            for j in (0, 1, 2):
                u = unrestricted_gcd(code, r, j).value
                d = gen_column_distance(code, r, j).value
                assert u <= d, (code, r, j)


def test_order_zero_window_is_block_ghw(corpus):
    for code in corpus:
        block = code.evaluate_at_zero()
        if block.dim != code.k:
            continue
        for r in range(1, code.k + 1):
            assert ghw(block, r).value == gen_column_distance(code, r, 0).value


def test_profile_turns_flat_by_the_stabilization_bound(corpus):
    hit = 0
    for code in corpus:
        for r in range(1, code.k + 1):
            b = stabilization_bound(code, r)
            if b.sharp > 30:
                continue
            prof = distance_profile(code, r, b.sharp + 3)
            tail = prof.values[b.sharp :]
            assert len(set(tail)) == 1, (code, r)
            try:
                limit = gen_column_distance_limit(code, r)
            except BudgetExceeded:
                continue
            assert limit.value == tail[0], (code, r)
            assert limit.j <= b.sharp <= b.crude
            hit += 1
    assert hit > 100


def test_primed_route_agrees_with_plain_limit(corpus):
    hit = 0
    for code in corpus:
        if not code.noncatastrophic:
            continue
        for r in range(1, code.k + 1):
            try:
                plain = gen_column_distance_limit(code, r)
                primed = limit_via_primed(code, r)
            except BudgetExceeded:
                continue
            assert primed.value == plain.value, (code, r)
            assert primed.exact == "proven"
            hit += 1
    assert hit > 50


def test_free_distance_is_order_one_limit(small_corpus):
    for code in small_corpus:
        try:
            res = free_distance(code)
        except BudgetExceeded:
            continue
        assert res.value == gen_column_distance_limit(code, 1).value


def test_submodule_windows_dominate(corpus):
    for code in corpus[:60]:
        if code.k < 2:
            continue
        sub = ConvCode(PolyMatrix(code.field, [code.rowred.rows[0]]))
        for j in (0, 1, 2):
            assert column_distance(sub, j).value >= column_distance(code, j).value


def test_mdp_means_maximal_early_column_distances(corpus, gf3):
    # a known witness plus whatever the corpus happens to contain
    witness = make_code(gf3, [[[1, 1], [1, 2]]])
    assert is_mdp(witness)
    pool = [witness] + [c for c in corpus if c.noncatastrophic][:40]
    hit = 0
    for code in pool:
        try:
            flag = is_mdp(code)
        except BudgetExceeded:
            continue
        horizon = mdp_horizon(code)
        vals = [column_distance(code, j).value for j in range(horizon + 1)]
        want = [(code.n - code.k) * (j + 1) + 1 for j in range(horizon + 1)]
        assert flag == (vals == want)
        if flag:
            assert max(vals) <= singleton_bound(code.n, code.k, code.delta)
            hit += 1
    assert hit >= 1


def _image_under(code: ConvCode, mono: MonomialMap):
    rows = [mono.apply(r) for r in code.rowred.rows]
    image = ConvCode(PolyMatrix(code.field, rows))
    return CodeMap(code, image, rows), image


def _constant_map(code: ConvCode, seed: int) -> MonomialMap:
    import random

    rng = random.Random(seed)
    perm = list(range(code.n))
    rng.shuffle(perm)
    scalars = tuple(rng.randrange(1, code.field.q) for _ in range(code.n))
    return MonomialMap(tuple(perm), scalars, (0,) * code.n)


def test_constant_monomial_images_are_equivalences(corpus):
    for i, code in enumerate(corpus[:40]):
        phi, image = _image_under(code, _constant_map(code, i))
        res = check_equivalence(phi)
        assert res.ok and res.witness.constant
        iso = check_isometry(phi)
        assert iso.ok and iso.witness.constant
        strong = check_strong_isometry(phi)
        assert strong.ok and strong.meta["certified"] is True


def test_equivalent_codes_share_all_window_values(corpus):
    for i, code in enumerate(corpus[:25]):
        phi, image = _image_under(code, _constant_map(code, 1000 + i))
        for r in range(1, code.k + 1):
            for j in (0, 1, 2):
                assert (
                    gen_column_distance(code, r, j).value
                    == gen_column_distance(image, r, j).value
                )


def test_window_agreement_is_downward_closed(corpus):
    for i, code in enumerate(corpus[:25]):
        phi, _ = _image_under(code, _constant_map(code, 2000 + i))
        if check_j_equivalence(phi, 3).ok:
            for j in (0, 1, 2):
                assert check_j_equivalence(phi, j).ok


def test_shift_isometries_preserve_limits(corpus):
    hit = 0
    for code in corpus[:40]:
        if code.n < 2:
            continue
        mono = MonomialMap(
            tuple(range(code.n)), (1,) * code.n, (1,) + (0,) * (code.n - 1)
        )
        phi, image = _image_under(code, mono)
        iso = check_isometry(phi)
        assert iso.ok
        for r in range(1, code.k + 1):
            try:
                a = gen_column_distance_limit(code, r)
                b = gen_column_distance_limit(image, r)
            except BudgetExceeded:
                continue
            assert a.value == b.value, (code, r)
            hit += 1
    assert hit > 30


def test_map_constructions_preserve_the_taxonomy(corpus):
    for i, code in enumerate(corpus[:15]):
        phi, image = _image_under(code, _constant_map(code, 3000 + i))
        assert check_equivalence(inverse(phi)).ok
        assert check_equivalence(compose(inverse(phi), phi)).ok
        other = corpus[(i + 40) % len(corpus)]
        psi, _ = _image_under(other, _constant_map(other, 4000 + i))
        if code.field == other.field:
            assert check_equivalence(product(phi, psi)).ok


def test_certificates_reveal_attaining_families(corpus):
    from convinv.sliding import window_support_size

    for code in corpus[:40]:
        for r in range(1, code.k + 1):
            res = gen_column_distance(code, r, 2)
            assert window_support_size(code, res.certificate, "plain") == res.value
