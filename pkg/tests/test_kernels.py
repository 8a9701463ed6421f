"""Parity between the compiled kernels and the pure fallback.

Both implementations must visit assignments in the same order, so values,
certificates, and node counts agree exactly whenever a search completes.
"""

import numpy as np
import pytest

from convinv import _automaton
from convinv.distances import (
    _plain_pivots,
    _unrestricted_pivots,
    _window_problem,
)
from convinv.errors import BudgetExceeded
from convinv.kernels import load_fast, pure

fast = load_fast()
needs_fast = pytest.mark.skipif(fast is None, reason="compiled kernels not built")


def _problems(corpus):
    for code in corpus:
        for r in range(1, code.k + 1):
            for j in (0, 1, 2):
                cap = _automaton.weight_cap(code)
                yield code, r, j, _window_problem(code, r, j, "plain", cap), cap


def _run(mod, prob, piv, bound, budget=10**7):
    return mod.pivot_search(
        prob.gen, prob.add, prob.mul, prob.stage_starts,
        prob.fin_cols, prob.fin_starts,
        np.asarray(piv, dtype=np.int64), prob.q, bound, budget,
        joint_next=prob.joint_next, h=prob.h, block_k=prob.block_k,
    )


@needs_fast
def test_pivot_search_parity_plain(small_corpus):
    checked = 0
    for code, r, j, prob, cap in _problems(small_corpus):
        for piv in _plain_pivots(code.k, r):
            got = _run(fast, prob, piv, cap)
            want = _run(pure, prob, piv, cap)
            assert got[0] == want[0]
            assert got[2] == want[2]
            assert got[3] == want[3] is False
            if want[1] is None:
                assert got[1] is None
            else:
                assert np.array_equal(got[1], want[1])
            checked += 1
    assert checked > 100


@needs_fast
def test_pivot_search_parity_unrestricted(small_corpus):
    for code in small_corpus[:20]:
        j = 1
        N = code.k * (j + 1)
        cap = code.n * (j + 1)
        for r in range(1, N + 1):
            prob = _window_problem(code, r, j, "plain", cap)
            for piv in _unrestricted_pivots(N, code.k, r):
                got = _run(fast, prob, piv, cap)
                want = _run(pure, prob, piv, cap)
                assert got[0] == want[0] and got[2] == want[2]
                if want[1] is None:
                    assert got[1] is None
                else:
                    assert np.array_equal(got[1], want[1])


@needs_fast
def test_pivot_search_parity_primed(small_corpus):
    for code in small_corpus[:20]:
        cap = _automaton.weight_cap(code)
        prob = _window_problem(code, 1, 2, "primed", cap)
        for piv in _plain_pivots(code.k, 1):
            got = _run(fast, prob, piv, cap)
            want = _run(pure, prob, piv, cap)
            assert got[0] == want[0] and got[2] == want[2]
            if want[1] is not None:
                assert np.array_equal(got[1], want[1])


@needs_fast
def test_budget_exhaustion_flag(small_corpus):
    for code in small_corpus[:10]:
        cap = _automaton.weight_cap(code)
        prob = _window_problem(code, 1, 2, "plain", cap)
        piv = next(_plain_pivots(code.k, 1))
        got = _run(fast, prob, piv, cap, budget=3)
        want = _run(pure, prob, piv, cap, budget=3)
        assert got[3] == want[3]
        if got[3]:
            assert got[2] > 3 and want[2] > 3


@needs_fast
def test_relax_parity(small_corpus):
    for code in small_corpus:
        for r in range(1, code.k + 1):
            try:
                joint = _automaton.build_joint(code, r)
            except BudgetExceeded:
                continue
            cap = _automaton.weight_cap(code)
            dp = _automaton.initial_dp(joint, cap)
            h = np.zeros(joint.states, dtype=np.int32)
            for _ in range(4):
                f_new = fast.relax_forward(dp, joint.nxt, joint.w, cap)
                p_new = pure.relax_forward(dp, joint.nxt, joint.w, cap)
                assert np.array_equal(f_new, p_new)
                dp = f_new
                fb = fast.relax_backward(h, joint.nxt, joint.w, cap)
                pb = pure.relax_backward(h, joint.nxt, joint.w, cap)
                assert np.array_equal(fb, pb)
                h = fb


@needs_fast
def test_distance_values_agree_between_implementations(small_corpus, monkeypatch):
    from convinv import distances, kernels

    for code in small_corpus[:15]:
        for r in range(1, code.k + 1):
            monkeypatch.setattr(kernels, "pivot_search", pure.pivot_search)
            monkeypatch.setattr(kernels, "IMPLEMENTATION", "pure")
            a = distances.gen_column_distance(code, r, 1)
            monkeypatch.setattr(kernels, "pivot_search", fast.pivot_search)
            monkeypatch.setattr(kernels, "IMPLEMENTATION", "fast")
            b = distances.gen_column_distance(code, r, 1)
            assert a.value == b.value
            assert a.certificate == b.certificate
            assert a.meta["nodes"] == b.meta["nodes"]
