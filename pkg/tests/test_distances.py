"""Window distances, limits, and generalized weights through the public API."""

import json

import pytest

from convinv import (
    BlockCode,
    FieldSpec,
    column_distance,
    distance_profile,
    free_distance,
    gen_column_distance,
    gen_column_distance_limit,
    generalized_weight,
    ghw,
    limit_via_primed,
    make_code,
    stabilization_bound,
    unrestricted_gcd,
)
from convinv.errors import BudgetExceeded, NoncatastrophicRequired, OrderOutOfRange
from convinv.sliding import window_support_size


@pytest.fixture
def realizer(gf2):
    return make_code(gf2, [[[1], [0], [1]], [[0], [1], [0]]])


def test_window_values_basic_pair(basic_pair):
    assert column_distance(basic_pair, 0).value == 0
    assert gen_column_distance(basic_pair, 2, 0).value == 1
    for j in (1, 2, 3):
        assert column_distance(basic_pair, j).value == 1
        assert gen_column_distance(basic_pair, 2, j).value == 2


def test_result_shape(basic_pair):
    res = gen_column_distance(basic_pair, 2, 1)
    out = res.to_json()
    assert out["kind"] == "gencoldist"
    assert out["value"] == 2 and out["r"] == 2 and out["j"] == 1
    assert out["exact"] == "proven"
    assert out["implementation"] in ("pure", "fast")
    assert isinstance(out["nodes"], int) and out["nodes"] > 0
    json.dumps(out)


def test_certificate_reevaluates(small_corpus):
    for code in small_corpus[:25]:
        for r in range(1, code.k + 1):
            res = gen_column_distance(code, r, 1)
            assert window_support_size(code, res.certificate, "plain") == res.value


def test_primed_variant(basic_pair):
    res = gen_column_distance(basic_pair, 1, 0, variant="primed")
    assert res.kind == "gencoldist_primed"
    assert res.meta["variant"] == "primed"
    assert window_support_size(basic_pair, res.certificate, "primed") == res.value
    # the primed window sees the memory tail, so row 2 can no longer hide
    assert res.value >= column_distance(basic_pair, 0).value


def test_variant_and_range_validation(basic_pair):
    with pytest.raises(ValueError, match="variant"):
        gen_column_distance(basic_pair, 1, 0, variant="frobnicate")
    with pytest.raises(OrderOutOfRange, match="1 <= r <= k"):
        gen_column_distance(basic_pair, 3, 0)
    with pytest.raises(OrderOutOfRange, match="1 <= r <= k"):
        gen_column_distance(basic_pair, 0, 0)
    with pytest.raises(OrderOutOfRange, match="nonnegative"):
        gen_column_distance(basic_pair, 1, -1)


def test_search_budget_refusal(weight_gap):
    with pytest.raises(BudgetExceeded) as exc:
        gen_column_distance(weight_gap, 2, 2, budget=1)
    assert exc.value.needed > exc.value.limit == 1


def test_thread_count_changes_nothing(weight_gap):
    for r in (1, 2):
        one = gen_column_distance(weight_gap, r, 2, threads=1)
        many = gen_column_distance(weight_gap, r, 2, threads=4)
        assert one.value == many.value
        assert one.certificate == many.certificate
        assert one.meta["nodes"] == many.meta["nodes"]


def test_unrestricted_allows_orders_past_k(basic_pair):
    # at j = 1 the window code has dimension 3: rank-2 row (0, x) drops out
    # at j = 0 but contributes from j = 1 on
    vals = [unrestricted_gcd(basic_pair, r, 1).value for r in (1, 2, 3)]
    assert vals == sorted(vals)
    assert vals[0] == gen_column_distance(basic_pair, 1, 1).value == 1
    with pytest.raises(OrderOutOfRange, match=r"k\(j\+1\)"):
        unrestricted_gcd(basic_pair, 5, 1)
    with pytest.raises(OrderOutOfRange):
        unrestricted_gcd(basic_pair, 0, 1)


def test_unrestricted_refusal_when_window_space_too_small(gf2):
    # rank-1 code: the window at j = 0 spans a single dimension
    code = make_code(gf2, [[[1], [1]]])
    with pytest.raises(OrderOutOfRange):
        unrestricted_gcd(code, 2, 0)


def test_ghw_of_zeroth_window_code(realizer):
    block = realizer.evaluate_at_zero()
    res = ghw(block, 2)
    assert res.value == 3
    assert res.kind == "ghw" and res.j is None
    with pytest.raises(OrderOutOfRange, match="dim"):
        ghw(block, block.dim + 1)


def test_ghw_matches_order_zero_window(small_corpus):
    # the identity needs the order-zero truncation to be injective
    hit = 0
    for code in small_corpus[:25]:
        block = code.evaluate_at_zero()
        if block.dim != code.k:
            continue
        for r in range(1, code.k + 1):
            assert ghw(block, r).value == gen_column_distance(code, r, 0).value
            hit += 1
    assert hit > 10


def test_limit_proven_modes(basic_pair, weight_gap):
    for code, r, want in ((basic_pair, 1, 1), (basic_pair, 2, 2), (weight_gap, 2, 4)):
        res = gen_column_distance_limit(code, r)
        assert res.value == want
        assert res.exact == "proven"
        assert res.meta["status"] in ("ceiling", "fixpoint", "bound")
        assert res.kind == "limit"
        assert window_support_size(code, res.certificate, "plain") == res.value
        assert gen_column_distance(code, r, res.j).value == res.value


def test_limit_plateau_mode_can_stay_proven(basic_pair):
    # the sweep reaches a fixpoint before any plateau of the default width
    res = gen_column_distance_limit(basic_pair, 1, mode="plateau")
    assert res.exact == "proven"


def test_limit_plateau_window_one_trusts_the_first_value(basic_pair):
    res = gen_column_distance_limit(basic_pair, 2, mode="plateau", window=1)
    assert res.meta["status"] == "plateau"
    assert res.exact == "heuristic-plateau"
    assert res.value == gen_column_distance(basic_pair, 2, 0).value == 1


def test_limit_window_budget_refusal(weight_gap):
    with pytest.raises(BudgetExceeded) as exc:
        gen_column_distance_limit(weight_gap, 2, window_budget=1)
    assert exc.value.limit == 1
    assert exc.value.needed == stabilization_bound(weight_gap, 2).sharp


def test_limit_mode_validation(basic_pair):
    with pytest.raises(ValueError, match="mode"):
        gen_column_distance_limit(basic_pair, 1, mode="guess")
    with pytest.raises(ValueError, match="mode"):
        distance_profile(basic_pair, 1, mode="guess")


def test_profile_fixed_horizon(weight_gap):
    prof = distance_profile(weight_gap, 2, 4)
    assert len(prof.values) == 5
    assert prof.values == sorted(prof.values)
    assert prof.limit is None and prof.status == "window"
    out = prof.to_json()
    assert out["values"] == {str(j): v for j, v in enumerate(prof.values)}
    assert "limit" not in out
    with pytest.raises(OrderOutOfRange, match="nonnegative"):
        distance_profile(weight_gap, 2, -1)


def test_profile_to_the_limit(weight_gap):
    prof = distance_profile(weight_gap, 2)
    assert prof.limit is not None
    assert prof.limit.value == prof.values[-1] == 4
    assert prof.values[prof.limit.j] == prof.limit.value
    assert prof.status == prof.limit.meta["status"]
    out = prof.to_json()
    assert out["limit"]["kind"] == "limit"


def test_profile_agrees_with_single_windows(small_corpus):
    for code in small_corpus[:15]:
        prof = distance_profile(code, 1, 3)
        for j, v in enumerate(prof.values):
            assert column_distance(code, j).value == v


def test_primed_limit_route(weight_gap):
    plain = gen_column_distance_limit(weight_gap, 2)
    primed = limit_via_primed(weight_gap, 2)
    assert primed.value == plain.value
    assert primed.exact == "proven"
    assert primed.kind == "limit_primed"
    assert window_support_size(weight_gap, primed.certificate, "primed") == primed.value


def test_primed_limit_truncated_is_upper_bound(weight_gap):
    full = limit_via_primed(weight_gap, 2)
    if full.meta["j_max"] > 0:
        cut = limit_via_primed(weight_gap, 2, j_max=0)
        assert cut.exact == "upper-bound"
        assert cut.value >= full.value


def test_primed_limit_needs_noncatastrophic(cat_pair):
    assert not cat_pair.noncatastrophic
    with pytest.raises(NoncatastrophicRequired):
        limit_via_primed(cat_pair, 1)


def test_free_distance(weight_gap, cat_pair):
    res = free_distance(weight_gap)
    assert res.kind == "free"
    assert res.value == gen_column_distance_limit(weight_gap, 1).value
    assert res.meta["cross_check"] in ("genweight", "skipped")
    flat = free_distance(cat_pair)
    assert flat.value == gen_column_distance_limit(cat_pair, 1).value
    assert "cross_check" not in flat.meta


def test_generalized_weight_gap(weight_gap):
    gw = generalized_weight(weight_gap, 2)
    assert gw.value == 3
    assert gw.exact == "upper-bound"
    assert gw.meta["degree_bound"] == weight_gap.delta1 + 1
    assert gen_column_distance_limit(weight_gap, 2).value == 4


def test_generalized_weight_degree_bound_too_small(basic_pair):
    with pytest.raises(OrderOutOfRange, match="at least 1"):
        generalized_weight(basic_pair, 2, degree_bound=0)
    with pytest.raises(OrderOutOfRange, match="nonnegative"):
        generalized_weight(basic_pair, 1, degree_bound=-1)


def test_generalized_weight_budget_refusal(weight_gap):
    with pytest.raises(BudgetExceeded) as exc:
        generalized_weight(weight_gap, 2, budget=1)
    assert exc.value.needed > 1


def test_generalized_weight_certificate(weight_gap):
    from convinv.poly import PolyVector, Polynomial, support_union

    gw = generalized_weight(weight_gap, 2)
    f = weight_gap.field
    words = [
        PolyVector(f, [Polynomial(f, cs) for cs in entry]) for entry in gw.certificate
    ]
    assert len(support_union(words).positions) == gw.value
    assert all(weight_gap.contains(w) for w in words)


def test_stabilization_bounds(basic_pair, weight_gap, gf3):
    memoryless = make_code(gf3, [[[1], [2], [0]]])
    b = stabilization_bound(memoryless, 1)
    assert (b.crude, b.sharp) == (1, 1)
    for code in (basic_pair, weight_gap):
        for r in range(1, code.k + 1):
            b = stabilization_bound(code, r)
            assert 1 <= b.sharp <= b.crude
            assert b.to_json() == {"crude": b.crude, "sharp": b.sharp}


def test_block_code_direct(gf2):
    block = BlockCode(gf2, 3, [[1, 1, 0], [0, 1, 1]])
    assert ghw(block, 1).value == 2
    assert ghw(block, 2).value == 3
