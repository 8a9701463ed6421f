"""Code construction, row reduction, module predicates, block codes."""

import pytest

from convinv import (
    ConvCode,
    FieldSpec,
    PolyMatrix,
    Polynomial,
    is_mdp,
    is_mds,
    is_noncatastrophic,
    is_strongly_mds,
    make_code,
    mdp_horizon,
    reverse_code,
    singleton_bound,
    strongly_mds_index,
)
from convinv.errors import NoncatastrophicRequired, RankDeficient
from convinv.structure import (
    express_in_basis,
    row_reduce,
    row_reduce_with_transform,
    smith_invariant_factors,
)


def test_parameters_of_named_codes(gf2, gf3, basic_pair, cat_pair, weight_gap):
    assert (basic_pair.n, basic_pair.k) == (2, 2)
    assert (basic_pair.delta, basic_pair.delta1) == (1, 1)
    assert not basic_pair.noncatastrophic
    assert cat_pair.delta == 2 and cat_pair.delta1 == 1
    assert not cat_pair.noncatastrophic
    assert weight_gap.noncatastrophic
    assert (weight_gap.delta, weight_gap.delta1) == (1, 1)
    one_row = make_code(gf2, [[[1, 1], [1], [0]]])
    assert (one_row.n, one_row.k, one_row.delta, one_row.delta1) == (3, 1, 1, 1)


def test_rank_deficient_rejected(gf2):
    with pytest.raises(RankDeficient):
        make_code(gf2, [[[1], [0]], [[1], [0]]])
    with pytest.raises(RankDeficient):
        make_code(gf2, [[[1], [1]], [[0, 1], [0, 1]]])


def test_row_reduction_minimizes_degrees(corpus):
    for code in corpus[:80]:
        lead = [row.coefficient_slice(d) for row, d in
                zip(code.rowred.rows, code.row_degrees)]
        # leading-coefficient rows must be independent (the row-reduced test)
        f = code.field
        mat = [list(r) for r in lead]
        rank = 0
        for col in range(code.n):
            piv = next((i for i in range(rank, len(mat)) if mat[i][col]), None)
            if piv is None:
                continue
            mat[rank], mat[piv] = mat[piv], mat[rank]
            inv = f.inv(mat[rank][col])
            mat[rank] = [f.mul(inv, v) for v in mat[rank]]
            for i in range(len(mat)):
                if i != rank and mat[i][col]:
                    c = mat[i][col]
                    mat[i] = [f.sub(a, f.mul(c, b)) for a, b in zip(mat[i], mat[rank])]
            rank += 1
        assert rank == code.k
        assert sorted(code.row_degrees, reverse=True) == list(code.row_degrees)


def test_row_reduce_preserves_module(corpus):
    for code in corpus[:40]:
        red = ConvCode(code.rowred)
        assert red.same_module(code)
        for row in code.gen.rows:
            assert code.contains(row)


def test_row_reduce_with_transform_is_unimodular(gf2):
    gen = PolyMatrix(gf2, [
        [Polynomial(gf2, [1, 1]), Polynomial(gf2, [0, 1]), Polynomial(gf2, [1])],
        [Polynomial(gf2, [0, 1, 1]), Polynomial(gf2, [1]), Polynomial(gf2, [0])],
    ])
    red, u = row_reduce_with_transform(gen)
    for i, row in enumerate(red.rows):
        built = None
        for j, p in enumerate(u.rows[i].entries):
            term = gen.rows[j] * p
            built = term if built is None else built + term
        assert built == row


def test_membership_and_coordinates(corpus):
    for code in corpus[:40]:
        f = code.field
        p0 = Polynomial(f, [1, 1])
        p1 = Polynomial(f, [0, 2 % f.q])
        word = code.word([p0, p1][: code.k])
        assert code.contains(word)
        coords = code.coordinates(word)
        rebuilt = None
        for p, row in zip(coords, code.rowred.rows):
            term = row * p
            rebuilt = term if rebuilt is None else rebuilt + term
        assert rebuilt == word


def test_smith_invariants_and_noncatastrophic(gf2, basic_pair, cat_pair, weight_gap):
    facs = smith_invariant_factors(basic_pair.gen)
    assert [p.deg for p in facs] == [0, 1]
    assert is_noncatastrophic(weight_gap)
    assert not is_noncatastrophic(cat_pair)
    assert not is_noncatastrophic(basic_pair)


def test_express_in_basis(gf2, weight_gap):
    rows = weight_gap.rowred
    target = rows.rows[0] * Polynomial(gf2, [1, 1]) + rows.rows[1] * Polynomial(gf2, [0, 1])
    coords = express_in_basis(target, rows)
    assert coords is not None
    assert [c.coeffs for c in coords] == [(1, 1), (0, 1)]


def test_evaluate_at_zero_dimension(basic_pair, cat_pair, weight_gap, gf2):
    assert basic_pair.evaluate_at_zero().dim == 1
    assert cat_pair.evaluate_at_zero().dim == 2
    assert weight_gap.evaluate_at_zero().dim == 2
    shift2 = make_code(gf2, [[[0, 1], [0]], [[0], [0, 1]]])
    assert shift2.evaluate_at_zero().dim == 0


def test_singleton_and_mds(gf3):
    mds = make_code(gf3, [[[1], [1], [2]], [[0, 2], [1, 1], [0]]])
    assert singleton_bound(mds.n, mds.k, mds.delta) == 3
    assert is_mds(mds)
    rev = reverse_code(mds)
    assert is_mds(rev)
    assert (rev.n, rev.k, rev.delta) == (mds.n, mds.k, mds.delta)


def test_mdp_witness(gf3, gf2):
    w = make_code(gf3, [[[1, 1], [1, 2]]])
    assert is_mdp(w)
    assert mdp_horizon(w) == 1 // 1 + 1 // 1
    assert strongly_mds_index(w) == 1 // 1 + 1
    assert is_strongly_mds(w)
    assert is_mds(w)
    plain = make_code(gf2, [[[1], [1]]])
    assert mdp_horizon(plain) == 0


def test_mds_predicates_require_noncatastrophic(cat_pair):
    with pytest.raises(NoncatastrophicRequired):
        is_mds(cat_pair)
    with pytest.raises(NoncatastrophicRequired):
        is_mdp(cat_pair)
    with pytest.raises(NoncatastrophicRequired):
        is_strongly_mds(cat_pair)


def test_reverse_code_of_final_example(gf3):
    mds = make_code(gf3, [[[1], [1], [2]], [[0, 2], [1, 1], [0]]])
    rev = reverse_code(mds)
    want = make_code(gf3, [[[1], [1], [2]], [[2], [1, 1], [0]]])
    assert rev.same_module(want)
