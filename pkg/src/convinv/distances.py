"""Distance invariants of convolutional and block codes.

All window invariants reduce to one search shape: minimize the number of
window positions touched by the row space of an r-row reduced-echelon
message matrix, with the allowed pivot columns encoding which invariant is
being computed (all pivots in the first input block for generalized column
distances, first pivot in the first block for the unrestricted variant,
anywhere for generalized Hamming weights of block codes).  The search runs
per pivot set through ``kernels.pivot_search`` and reduces deterministically,
so reports are byte-identical for any thread count.

Limits over the window index are computed on the joint encoder-state
tables (``_automaton``) and are proven whenever the relaxation run ends by
value ceiling, state-vector repetition, or the stabilization bound; the
plateau mode trades the proof for speed and marks its results inexact.
"""

from __future__ import annotations

import itertools
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as dc_field
from typing import Iterable, Iterator, Sequence

import numpy as np

from . import _automaton, kernels, sliding
from .errors import (
    BudgetExceeded,
    NoncatastrophicRequired,
    OrderOutOfRange,
    RankDeficient,
)
from .poly import PolyMatrix, PolyVector, Polynomial, support_union
from .structure import BlockCode, ConvCode, row_reduce

DEFAULT_BUDGET = 5_000_000
DEFAULT_WINDOW_BUDGET = 100_000
def _default_window(code: ConvCode) -> int:
    """Plateau window length used when the caller does not pick one."""
    return max(code.delta1 * code.k, 2) + 1
WAVE = 32


def _budget(budget: int | None) -> int:
    if budget is not None:
        return int(budget)
    env = os.environ.get("CONVINV_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


@dataclass
class StabilizationBound:
    """Window index bounds past which the r-generalized values are constant."""

    crude: int
    sharp: int

    def to_json(self) -> dict:
        return {"crude": self.crude, "sharp": self.sharp}


@dataclass
class DistanceResult:
    """One computed invariant.

    ``exact`` is one of ``"proven"`` (the value is the invariant),
    ``"heuristic-plateau"`` (a plateau stop was trusted without proof), or
    ``"upper-bound"`` (the search space was truncated, so the true value
    may be smaller).  Certificates always re-evaluate to ``value``.
    """

    kind: str
    value: int
    r: int
    j: int | None
    exact: str
    certificate: object
    meta: dict = dc_field(default_factory=dict)

    def to_json(self) -> dict:
        out = {
            "kind": self.kind,
            "value": self.value,
            "r": self.r,
            "j": self.j,
            "exact": self.exact,
            "certificate": self.certificate,
        }
        out.update(self.meta)
        return out


@dataclass
class DistanceProfile:
    kind: str
    r: int
    values: list[int]
    limit: DistanceResult | None
    status: str

    def to_json(self) -> dict:
        out = {
            "kind": self.kind,
            "r": self.r,
            "values": {str(j): v for j, v in enumerate(self.values)},
            "status": self.status,
        }
        if self.limit is not None:
            out["limit"] = self.limit.to_json()
        return out


def _check_r(code: ConvCode, r: int) -> None:
    if not 1 <= r <= code.k:
        raise OrderOutOfRange(f"order r must satisfy 1 <= r <= k = {code.k}, got {r}")


def stabilization_bound(code: ConvCode, r: int) -> StabilizationBound:
    """Proven window indices by which the r-generalized profile is flat.

    The crude bound multiplies the value ceiling by the joint state count;
    the sharp bound divides out the basis multiplicity of each r-subspace
    and takes the floor of the whole product.
    """
    _check_r(code, r)
    q, k, d1, n = code.field.q, code.k, code.delta1, code.n
    if d1 == 0:
        return StabilizationBound(1, 1)
    states = q ** (d1 * k * r)
    outer = n * (d1 + 1) + 1
    crude = outer * states
    denom = 1
    for i in range(r):
        denom *= q**r - q**i
    sharp = outer * (states - 1) // denom
    return StabilizationBound(crude, max(sharp, 1))


# ---------------------------------------------------------------------------
# search plumbing


@dataclass
class _Problem:
    gen: np.ndarray
    stage_starts: np.ndarray
    fin_cols: np.ndarray
    fin_starts: np.ndarray
    q: int
    add: np.ndarray
    mul: np.ndarray
    joint_next: np.ndarray | None = None
    h: np.ndarray | None = None
    block_k: int = 0


def _fin_auto(gen: np.ndarray, stage_starts: np.ndarray):
    """Finalize each column at the last stage with a nonzero entry in it."""
    S = stage_starts.shape[0] - 1
    widths = np.diff(stage_starts)
    msgstage = np.repeat(np.arange(S, dtype=np.int64), widths)
    nz = gen != 0
    ready = np.where(nz, msgstage[:, None], -1).max(axis=0)
    keep = np.nonzero(ready >= 0)[0]
    order = keep[np.argsort(ready[keep], kind="stable")]
    starts = np.searchsorted(ready[order], np.arange(S + 1))
    return order.astype(np.int64), starts.astype(np.int64)


def _fin_blocks(n: int, stages: int, out_blocks: int):
    """Finalize output block t at stage min(t, stages-1): block-aligned, as
    required when a cost-to-go table is attached, and counting the primed
    tail blocks at the last stage."""
    ready = np.minimum(np.arange(out_blocks * n, dtype=np.int64) // n, stages - 1)
    cols = np.arange(out_blocks * n, dtype=np.int64)
    starts = np.searchsorted(ready, np.arange(stages + 1))
    return cols, starts


def _window_problem(code: ConvCode, r: int, j: int, variant: str, cap: int) -> _Problem:
    f = code.field
    sl = sliding.sliding(code, j, variant)
    gen = sl.data
    S = j + 1
    stage_starts = np.arange(S + 1, dtype=np.int64) * code.k
    joint_next = None
    h = None
    block_k = 0
    try:
        joint = _automaton.build_joint(code, r)
        seed = _automaton.flush_seed(joint, cap) if variant == "primed" else None
        h = _automaton.cost_to_go(joint, S, cap, seed)
        joint_next = joint.nxt
        block_k = code.k
        out_blocks = S + (code.delta1 if variant == "primed" else 0)
        fin_cols, fin_starts = _fin_blocks(code.n, S, out_blocks)
    except BudgetExceeded:
        fin_cols, fin_starts = _fin_auto(gen, stage_starts)
    return _Problem(
        gen=gen, stage_starts=stage_starts, fin_cols=fin_cols, fin_starts=fin_starts,
        q=f.q, add=f.add_table, mul=f.mul_table,
        joint_next=joint_next, h=h, block_k=block_k,
    )


def _require_tables(f) -> None:
    if f.add_table is None:
        raise BudgetExceeded(
            "window searches need dense field tables (q <= 256)", needed=f.q, limit=256
        )


def _run_sets(
    prob: _Problem,
    pivot_sets: Iterable[Sequence[int]],
    bound: int,
    budget: int,
    threads: int,
):
    """Deterministic reduction over pivot sets.

    Pivot sets run in fixed-size waves; the shared bound and the abort
    decision refresh only between waves, so values, certificates, and node
    totals do not depend on the thread count.  Ties go to the earliest
    pivot set, which together with the kernel's fixed child order makes the
    winning certificate canonical.
    """
    best = bound + 1
    best_cert = None
    nodes_total = 0
    it = iter(pivot_sets)
    idx0 = 0
    pool = ThreadPoolExecutor(max_workers=threads) if threads > 1 else None
    try:
        while True:
            wave = list(itertools.islice(it, WAVE))
            if not wave:
                break
            limit = min(bound, best - 1)
            per_set = budget - nodes_total

            def one(piv):
                return kernels.pivot_search(
                    prob.gen, prob.add, prob.mul, prob.stage_starts,
                    prob.fin_cols, prob.fin_starts,
                    np.asarray(piv, dtype=np.int64), prob.q, limit, per_set,
                    joint_next=prob.joint_next, h=prob.h, block_k=prob.block_k,
                )

            if pool is None:
                results = [one(piv) for piv in wave]
            else:
                results = list(pool.map(one, wave))
            exceeded = False
            for val, cert, nodes, exc in results:
                nodes_total += nodes
                exceeded = exceeded or exc
                if cert is not None and val < best:
                    best, best_cert = int(val), cert
            if exceeded or nodes_total > budget:
                raise BudgetExceeded(
                    "node budget exhausted during the window search",
                    needed=nodes_total, limit=budget,
                )
            idx0 += len(wave)
    finally:
        if pool is not None:
            pool.shutdown(wait=False)
    if best > bound:
        return None, None, nodes_total
    return best, best_cert, nodes_total


def _plain_pivots(k: int, r: int) -> Iterator[tuple[int, ...]]:
    return itertools.combinations(range(k), r)


def _unrestricted_pivots(N: int, k: int, r: int) -> Iterator[tuple[int, ...]]:
    return (p for p in itertools.combinations(range(N), r) if p[0] < k)


def _cert_messages(cert: np.ndarray) -> list[list[int]]:
    return [[int(v) for v in row] for row in cert]


def _verify_window(code: ConvCode, messages, variant: str, value: int) -> None:
    got = sliding.window_support_size(code, messages, variant)
    if got != value:
        raise AssertionError("certificate does not re-evaluate to the reported value")


# ---------------------------------------------------------------------------
# window values at one index


def gen_column_distance(
    code: ConvCode, r: int, j: int, *,
    variant: str = "plain", budget: int | None = None, threads: int = 1,
) -> DistanceResult:
    """r-generalized window distance at index j (plain or primed window)."""
    _check_r(code, r)
    if j < 0:
        raise OrderOutOfRange(f"window index must be nonnegative, got {j}")
    if variant not in ("plain", "primed"):
        raise ValueError(f"unknown variant {variant!r}")
    _require_tables(code.field)
    cap = _automaton.weight_cap(code)
    prob = _window_problem(code, r, j, variant, cap)
    value, cert, nodes = _run_sets(
        prob, _plain_pivots(code.k, r), cap, _budget(budget), threads
    )
    if value is None:  # pragma: no cover - cap is a proven upper bound
        raise AssertionError("no subspace found under the proven value ceiling")
    messages = _cert_messages(cert)
    _verify_window(code, messages, variant, value)
    kind = "gencoldist" if variant == "plain" else "gencoldist_primed"
    return DistanceResult(
        kind=kind, value=value, r=r, j=j, exact="proven", certificate=messages,
        meta={"variant": variant, "nodes": nodes, "implementation": kernels.IMPLEMENTATION},
    )


def column_distance(
    code: ConvCode, j: int, *, budget: int | None = None, threads: int = 1
) -> DistanceResult:
    """Column distance at index j (the order-1 generalized value)."""
    res = gen_column_distance(code, 1, j, budget=budget, threads=threads)
    res.kind = "coldist"
    return res


def unrestricted_gcd(
    code: ConvCode, r: int, j: int, *, budget: int | None = None, threads: int = 1
) -> DistanceResult:
    """r-th generalized Hamming weight of the window code at index j.

    Pivots may sit anywhere as long as the first one lies in the first
    input block, so r may exceed k up to k(j+1)."""
    N = code.k * (j + 1)
    if j < 0:
        raise OrderOutOfRange(f"window index must be nonnegative, got {j}")
    if not 1 <= r <= N:
        raise OrderOutOfRange(f"order r must satisfy 1 <= r <= k(j+1) = {N}, got {r}")
    _require_tables(code.field)
    cap = code.n * (j + 1)
    prob = _window_problem(code, r, j, "plain", cap)
    value, cert, nodes = _run_sets(
        prob, _unrestricted_pivots(N, code.k, r), cap, _budget(budget), threads
    )
    if value is None:  # pragma: no cover - the whole window is an upper bound
        raise AssertionError("no subspace found under the window size ceiling")
    messages = _cert_messages(cert)
    _verify_window(code, messages, "plain", value)
    return DistanceResult(
        kind="unrestricted", value=value, r=r, j=j, exact="proven", certificate=messages,
        meta={"nodes": nodes, "implementation": kernels.IMPLEMENTATION},
    )


def ghw(block: BlockCode, r: int, *, budget: int | None = None, threads: int = 1) -> DistanceResult:
    """r-th generalized Hamming weight of a block code."""
    if not 1 <= r <= block.dim:
        raise OrderOutOfRange(f"order r must satisfy 1 <= r <= dim = {block.dim}, got {r}")
    f = block.field
    _require_tables(f)
    gen = np.array(block.basis, dtype=np.uint16)
    stage_starts = np.array([0, block.dim], dtype=np.int64)
    fin_cols, fin_starts = _fin_auto(gen, stage_starts)
    prob = _Problem(
        gen=gen, stage_starts=stage_starts, fin_cols=fin_cols, fin_starts=fin_starts,
        q=f.q, add=f.add_table, mul=f.mul_table,
    )
    value, cert, nodes = _run_sets(
        prob, itertools.combinations(range(block.dim), r), block.n, _budget(budget), threads
    )
    if value is None:  # pragma: no cover
        raise AssertionError("no subspace found under the length ceiling")
    combos = _cert_messages(cert)
    words = []
    for row in combos:
        w = np.zeros(block.n, dtype=np.uint16)
        for i, v in enumerate(row):
            w = f.add_table[w, f.mul_table[v][gen[i]]]
        words.append([int(x) for x in w])
    if int((np.array(words, dtype=np.uint16) != 0).any(axis=0).sum()) != value:
        raise AssertionError("certificate does not re-evaluate to the reported value")
    return DistanceResult(
        kind="ghw", value=value, r=r, j=None, exact="proven", certificate=words,
        meta={"nodes": nodes, "implementation": kernels.IMPLEMENTATION},
    )


# ---------------------------------------------------------------------------
# limits over the window index


def _proven_sweep(code: ConvCode, r: int, plateau: int | None, window_budget: int | None = None):
    """Run the relaxation sweep up to the stabilization bound.

    Without a plateau width, refuses upfront when the bound exceeds the
    window budget, carrying the bound in the error so the caller can opt
    into plateau mode.  With one, sweeps within the budget and raises only
    if no stop fires at all.
    """
    wb = DEFAULT_WINDOW_BUDGET if window_budget is None else int(window_budget)
    sharp = stabilization_bound(code, r).sharp
    if plateau is None and sharp > wb:
        raise BudgetExceeded(
            "the stabilization bound exceeds the proven-mode window budget",
            needed=sharp, limit=wb,
        )
    joint = _automaton.build_joint(code, r)
    cap = _automaton.weight_cap(code)
    values, status = _automaton.sweep_profile(joint, cap, min(sharp, wb), plateau)
    if status == "bound" and sharp > wb:
        raise BudgetExceeded(
            "no plateau within the window budget",
            needed=sharp, limit=wb,
        )
    return joint, cap, values, status


def _limit_result(
    code: ConvCode, r: int, values: list[int], status: str, *,
    budget: int | None, threads: int, want_certificate: bool,
) -> DistanceResult:
    limit_value = values[-1]
    jbar = values.index(limit_value)
    certificate = None
    nodes = 0
    if want_certificate:
        cap = _automaton.weight_cap(code)
        prob = _window_problem(code, r, jbar, "plain", cap)
        value, cert, nodes = _run_sets(
            prob, _plain_pivots(code.k, r), limit_value, _budget(budget), threads
        )
        if value != limit_value:
            raise AssertionError("limit certificate search disagrees with the sweep")
        certificate = _cert_messages(cert)
        _verify_window(code, certificate, "plain", limit_value)
    return DistanceResult(
        kind="limit", value=limit_value, r=r, j=jbar,
        exact="proven" if status in ("ceiling", "fixpoint", "bound") else "heuristic-plateau",
        certificate=certificate,
        meta={"status": status, "variant": "plain", "nodes": nodes,
              "implementation": kernels.IMPLEMENTATION},
    )


def _per_j_limit(
    code: ConvCode, r: int, window: int, budget: int | None, threads: int,
    window_budget: int | None = None,
):
    """Plateau fallback when the joint tables are over the size gate:
    search each window index directly until the values plateau or a proven
    stop fires.  Returns (result, values, status)."""
    cap = _automaton.weight_cap(code)
    sharp = stabilization_bound(code, r).sharp
    wb = DEFAULT_WINDOW_BUDGET if window_budget is None else int(window_budget)
    values: list[int] = []
    j = 0
    while True:
        res = gen_column_distance(code, r, j, budget=budget, threads=threads)
        values.append(res.value)
        if res.value >= cap:
            status = "ceiling"
            break
        if len(values) >= window and len(set(values[-window:])) == 1:
            status = "plateau"
            break
        if j >= sharp:
            status = "bound"
            break
        if j >= wb:
            raise BudgetExceeded(
                "no plateau within the window budget", needed=sharp, limit=wb
            )
        j += 1
    limit_value = values[-1]
    jbar = values.index(limit_value)
    if res.j != jbar:
        res = gen_column_distance(code, r, jbar, budget=budget, threads=threads)
    result = DistanceResult(
        kind="limit", value=limit_value, r=r, j=jbar,
        exact="proven" if status in ("ceiling", "bound") else "heuristic-plateau",
        certificate=res.certificate,
        meta={"status": status, "variant": "plain", "nodes": res.meta.get("nodes", 0),
              "implementation": kernels.IMPLEMENTATION},
    )
    return result, values, status


def gen_column_distance_limit(
    code: ConvCode, r: int, *,
    mode: str = "proven", window: int | None = None,
    budget: int | None = None, window_budget: int | None = None,
    threads: int = 1, want_certificate: bool = True,
) -> DistanceResult:
    """Limit of the r-generalized window distances over the window index.

    ``mode='proven'`` stops only on a proven criterion (value ceiling,
    state-vector repetition, stabilization bound) and marks the result
    exact, refusing when the stabilization bound exceeds ``window_budget``
    windows; ``mode='plateau'`` also stops after ``window`` equal values
    (default ``max(delta1*k, 2) + 1``) and marks a plateau-stopped result
    inexact.
    """
    _check_r(code, r)
    if mode not in ("proven", "plateau"):
        raise ValueError(f"unknown mode {mode!r}")
    if window is None:
        window = _default_window(code)
    _require_tables(code.field)
    try:
        _, _, values, status = _proven_sweep(
            code, r, window if mode == "plateau" else None, window_budget
        )
    except BudgetExceeded:
        if mode != "plateau":
            raise
        try:
            _automaton.build_joint(code, r)
        except BudgetExceeded:
            # tables over the size gate: fall back to per-window searches
            result, _, _ = _per_j_limit(code, r, window, budget, threads, window_budget)
            return result
        raise
    return _limit_result(
        code, r, values, status,
        budget=budget, threads=threads, want_certificate=want_certificate,
    )


def distance_profile(
    code: ConvCode, r: int, j_max: int | None = None, *,
    mode: str = "proven", window: int | None = None,
    budget: int | None = None, window_budget: int | None = None, threads: int = 1,
) -> DistanceProfile:
    """Window values for j = 0..j_max, or up to the limit when j_max is None."""
    _check_r(code, r)
    if mode not in ("proven", "plateau"):
        raise ValueError(f"unknown mode {mode!r}")
    if window is None:
        window = _default_window(code)
    _require_tables(code.field)
    if j_max is not None:
        if j_max < 0:
            raise OrderOutOfRange(f"window index must be nonnegative, got {j_max}")
        try:
            joint = _automaton.build_joint(code, r)
            cap = _automaton.weight_cap(code)
            values, _ = _automaton.sweep_profile(joint, cap, j_max, None)
            while len(values) <= j_max:  # an early proven stop cuts the sweep short
                values.append(values[-1])
        except BudgetExceeded:
            values = [
                gen_column_distance(code, r, j, budget=budget, threads=threads).value
                for j in range(j_max + 1)
            ]
        return DistanceProfile(kind="profile", r=r, values=values, limit=None, status="window")
    try:
        _, _, values, status = _proven_sweep(
            code, r, window if mode == "plateau" else None, window_budget
        )
        limit = _limit_result(
            code, r, values, status, budget=budget, threads=threads, want_certificate=True
        )
    except BudgetExceeded:
        if mode != "plateau":
            raise
        try:
            _automaton.build_joint(code, r)
        except BudgetExceeded:
            limit, values, status = _per_j_limit(
                code, r, window, budget, threads, window_budget
            )
            return DistanceProfile(
                kind="profile", r=r, values=values, limit=limit, status=status
            )
        raise
    return DistanceProfile(kind="profile", r=r, values=values, limit=limit, status=status)


def limit_via_primed(
    code: ConvCode, r: int, j_max: int | None = None, *,
    budget: int | None = None, window_budget: int | None = None, threads: int = 1,
) -> DistanceResult:
    """Limit of the r-generalized values via minima of primed windows.

    Takes the least support minimum over the primed windows at indices
    0 through ``j_max``.  Those minima reach the plain limit by one index
    past the window where the plain profile flattens, so by default
    ``j_max`` is set there and the result is proven; a caller-supplied
    smaller ``j_max`` truncates the scan and the value is only an upper
    bound.  The route replaces the plain window search with the forward
    relaxation plus a flush and serves as a cross-check on it.  Raises
    NoncatastrophicRequired for catastrophic codes, whose primed minima
    can stay strictly above the plain limit.
    """
    _check_r(code, r)
    if not code.noncatastrophic:
        raise NoncatastrophicRequired(
            "the primed-window limit identity requires a noncatastrophic code"
        )
    _require_tables(code.field)
    joint, cap, values, status = _proven_sweep(code, r, None, window_budget)
    derived = values.index(values[-1]) + 1
    if j_max is None:
        j_max = derived
    elif j_max < 0:
        raise OrderOutOfRange(f"window index must be nonnegative, got {j_max}")
    flush = _automaton.flush_seed(joint, cap)
    dp = _automaton.initial_dp(joint, cap)
    minima = [int(np.minimum(dp + flush, cap + 1).min())]
    for _ in range(j_max):
        dp = kernels.relax_forward(dp, joint.nxt, joint.w, cap)
        minima.append(int(np.minimum(dp + flush, cap + 1).min()))
    primed_value = min(minima)
    jstar = minima.index(primed_value)
    exact = "proven" if j_max >= derived else "upper-bound"
    if exact == "proven" and primed_value != values[-1]:
        raise AssertionError("primed minima disagree with the plain window limit")
    prob = _window_problem(code, r, jstar, "primed", cap)
    value, cert, nodes = _run_sets(
        prob, _plain_pivots(code.k, r), primed_value, _budget(budget), threads
    )
    if value != primed_value:
        raise AssertionError("primed certificate search disagrees with the sweep")
    messages = _cert_messages(cert)
    _verify_window(code, messages, "primed", primed_value)
    return DistanceResult(
        kind="limit_primed", value=primed_value, r=r, j=jstar, exact=exact,
        certificate=messages,
        meta={"status": status, "variant": "primed", "j_max": j_max,
              "nodes": nodes, "implementation": kernels.IMPLEMENTATION},
    )


def free_distance(code: ConvCode, *, budget: int | None = None, threads: int = 1) -> DistanceResult:
    """Least window-limit weight of a single message row (order 1).

    For a noncatastrophic code this is the least weight over nonzero
    codewords, and the value is cross-checked against the rank-1
    generalized weight at increasing degree bounds until the two routes
    agree, which must happen by one window past where the profile turns
    flat (the cross-check is skipped when its enumeration would blow the
    budget).  For a catastrophic code the window limit may fall below the
    least weight over polynomial messages, and the window limit is the
    value reported.
    """
    res = gen_column_distance_limit(code, 1, mode="proven", budget=budget, threads=threads)
    res.kind = "free"
    if code.noncatastrophic:
        agreed = False
        try:
            for D in range(code.delta1 + 1, res.j + code.delta1 + 2):
                cross = generalized_weight(code, 1, degree_bound=D, budget=budget)
                if cross.value < res.value:  # pragma: no cover - would be a real bug
                    raise AssertionError(
                        "a codeword beats the window limit reported as free distance"
                    )
                if cross.value == res.value:
                    agreed = True
                    break
            if not agreed:  # pragma: no cover - the realizer fits the last bound
                raise AssertionError(
                    "the generalized-weight route never reached the window limit"
                )
        except BudgetExceeded:
            pass
        res.meta["cross_check"] = "genweight" if agreed else "skipped"
    return res


# ---------------------------------------------------------------------------
# generalized weights of the module


def _has_poly_rank(field, rows: Sequence[PolyVector], r: int) -> bool:
    try:
        row_reduce(PolyMatrix(field, rows))
    except RankDeficient:
        return False
    return True


def generalized_weight(
    code: ConvCode, r: int, *, degree_bound: int | None = None, budget: int | None = None
) -> DistanceResult:
    """Least support-union size over r-tuples of codewords of degree at
    most ``degree_bound`` (default delta1 + 1) spanning rank r.

    Codewords of bounded degree are exactly the combinations of the
    row-reduced basis rows with per-row message degree at most the bound
    minus that row's degree (leading slices cannot cancel in a reduced
    basis), so the search enumerates one message per scaling class under
    those caps.  The value is attained by the certificate but marked as an
    upper bound, since a realizer of larger degree cannot be ruled out.
    """
    _check_r(code, r)
    f = code.field
    D = code.delta1 + 1 if degree_bound is None else int(degree_bound)
    if D < 0:
        raise OrderOutOfRange(f"degree bound must be nonnegative, got {D}")
    caps = [D - rd for rd in code.row_degrees]
    active = [i for i, c in enumerate(caps) if c >= 0]
    if len(active) < r:
        need = sorted(code.row_degrees)[r - 1]
        raise OrderOutOfRange(
            f"no rank-{r} tuple of codewords of degree <= {D} exists; "
            f"the degree bound must be at least {need}"
        )
    width = sum(caps[i] + 1 for i in active)
    total = f.q**width - 1
    count = total // (f.q - 1)
    n_budget = _budget(budget)
    tuples = math.comb(count, r)
    if tuples > n_budget:
        raise BudgetExceeded(
            "generalized weight enumeration exceeds the budget",
            needed=tuples, limit=n_budget,
        )

    # one representative per scaling class: first nonzero digit equals 1,
    # digits running through the active rows, degree ascending within a row
    messages: list[PolyVector] = []
    for m in range(1, total + 1):
        digits = []
        t = m
        for _ in range(width):
            digits.append(t % f.q)
            t //= f.q
        if next(d for d in digits if d) != 1:
            continue
        entries = [Polynomial(f)] * code.k
        pos = 0
        for i in active:
            entries[i] = Polynomial(f, digits[pos : pos + caps[i] + 1])
            pos += caps[i] + 1
        messages.append(PolyVector(f, entries))

    best: int | None = None
    best_words: tuple | None = None
    for combo in itertools.combinations(messages, r):
        if not _has_poly_rank(f, combo, r):
            continue
        words = tuple(code.word(v.entries) for v in combo)
        wt = len(support_union(words).positions)
        if best is None or wt < best:
            best = wt
            best_words = words
    if best is None:  # pragma: no cover - unit messages on active rows qualify
        raise AssertionError("no independent row family within the degree bound")
    if any(w.deg > D for w in best_words):  # pragma: no cover
        raise AssertionError("certificate codeword exceeds the degree bound")
    if len(support_union(best_words).positions) != best:
        raise AssertionError("certificate does not re-evaluate to the reported value")
    return DistanceResult(
        kind="genweight", value=best, r=r, j=None, exact="upper-bound",
        certificate=[w.to_json() for w in best_words],
        meta={"degree_bound": D},
    )
