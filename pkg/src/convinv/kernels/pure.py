"""Pure numpy implementation of the hot kernels.

Two kernels live here (and in the compiled twin ``_fast``):

* ``pivot_search``: depth-first minimum-support search over the canonical
  reduced-echelon bases with a fixed pivot set.  Children of a node are the
  value assignments of one message stage, enumerated in ascending
  lexicographic order of the stage's free entries read column-major, so the
  first minimum found is the canonical one.  Pruning discards a partial
  only when it is strictly worse than the best known bound (ties are
  explored), which keeps the first-found certificate independent of how
  bounds were sharpened by other pivot sets or threads.

* ``relax_forward`` / ``relax_backward``: one min-plus relaxation stage of
  the joint encoder-state table, used for window-distance profiles and for
  exact cost-to-go pruning tables.

Both implementations visit assignments in the same order and return the
same (value, certificate) pair; on success they count the same number of
nodes.  Only the exact stopping point under budget exhaustion may differ.
"""

from __future__ import annotations

import numpy as np

CHUNK = 8192

IMPLEMENTATION = "pure"


def relax_forward(dp: np.ndarray, nxt: np.ndarray, w: np.ndarray, cap: int) -> np.ndarray:
    """dp'[s'] = min over (s, u) with nxt[s,u] = s' of dp[s] + w[s,u], clamped."""
    out = np.full(dp.shape[0], cap + 1, dtype=np.int32)
    for u in range(nxt.shape[1]):
        np.minimum.at(out, nxt[:, u], dp + w[:, u])
    np.minimum(out, cap + 1, out=out)
    return out


def relax_backward(h: np.ndarray, nxt: np.ndarray, w: np.ndarray, cap: int) -> np.ndarray:
    """h'[s] = min over u of w[s,u] + h[nxt[s,u]], clamped."""
    out = None
    for u in range(nxt.shape[1]):
        cand = w[:, u] + h[nxt[:, u]]
        out = cand if out is None else np.minimum(out, cand)
    np.minimum(out, cap + 1, out=out)
    return out.astype(np.int32)


def pivot_search(
    gen: np.ndarray,
    add_tbl: np.ndarray,
    mul_tbl: np.ndarray,
    stage_starts: np.ndarray,
    fin_cols: np.ndarray,
    fin_starts: np.ndarray,
    pivots: np.ndarray,
    q: int,
    bound: int,
    budget: int,
    joint_next: np.ndarray | None = None,
    h: np.ndarray | None = None,
    block_k: int = 0,
):
    """Minimum window-support over the echelon bases with the given pivots.

    Returns ``(best, cert, nodes, exceeded)`` where ``best`` is the smallest
    support value not exceeding ``bound`` (or bound+1 if none), ``cert`` the
    first basis achieving it (r x N uint16) or None, ``nodes`` the number of
    stage assignments evaluated, and ``exceeded`` whether the node budget
    aborted the search.

    When ``joint_next``/``h`` are given, stages must be uniform blocks of
    width ``block_k`` and ``h[t][state]`` must be an admissible lower bound
    on the support contributed by t further stages; finalization must then
    be block-aligned so no position is counted twice.
    """
    N, L = gen.shape
    S = stage_starts.shape[0] - 1
    r = pivots.shape[0]
    pivset = {int(p) for p in pivots}
    stage_frees: list[list[tuple[int, int]]] = []
    stage_fixed: list[list[tuple[int, int]]] = []
    for s in range(S):
        lo, hi = int(stage_starts[s]), int(stage_starts[s + 1])
        frees: list[tuple[int, int]] = []
        fixed: list[tuple[int, int]] = []
        for c in range(lo, hi):
            for i in range(r):
                p = int(pivots[i])
                if c == p:
                    fixed.append((i, c))
                elif c > p and c not in pivset:
                    frees.append((i, c))
        stage_frees.append(frees)
        stage_fixed.append(fixed)

    cur = np.zeros((r, N), dtype=np.uint16)
    for i in range(r):
        cur[i, int(pivots[i])] = 1

    state = {"best": bound + 1, "cert": None, "nodes": 0, "exceeded": False}
    A = q**block_k if joint_next is not None else 0

    def rec(s: int, acc: np.ndarray, partial: int, st: int) -> None:
        frees = stage_frees[s]
        f = len(frees)
        lo = int(stage_starts[s])
        base = acc.copy()
        for (i, c) in stage_fixed[s]:
            base[i] = add_tbl[base[i], gen[c]]
        cols = fin_cols[fin_starts[s] : fin_starts[s + 1]]
        total = q**f
        leaf = s == S - 1
        track = joint_next is not None and not leaf
        if track:
            u_fixed = [0] * r
            for (i, c) in stage_fixed[s]:
                u_fixed[i] += q ** (c - lo)
        idx0 = 0
        while idx0 < total:
            if state["exceeded"]:
                return
            idx1 = min(total, idx0 + CHUNK)
            count = idx1 - idx0
            state["nodes"] += count
            if state["nodes"] > budget:
                state["exceeded"] = True
                return
            ar = np.arange(idx0, idx1, dtype=np.int64)
            digs = [(ar // (q ** (f - 1 - e))) % q for e in range(f)]
            batch = np.broadcast_to(base, (count, r, L)).copy()
            for e, (i, c) in enumerate(frees):
                batch[:, i, :] = add_tbl[batch[:, i, :], mul_tbl[digs[e]][:, gen[c]]]
            if cols.size:
                cnt = (batch[:, :, cols] != 0).any(axis=1).sum(axis=1)
            else:
                cnt = np.zeros(count, dtype=np.int64)
            vals = partial + cnt
            if track:
                us = [np.full(count, u_fixed[i], dtype=np.int64) for i in range(r)]
                for e, (i, c) in enumerate(frees):
                    us[i] = us[i] + digs[e] * (q ** (c - lo))
                U = us[0]
                for i in range(1, r):
                    U = U * A + us[i]
                stnext = joint_next[st, U]
                hvals = h[S - 1 - s][stnext]
                lows = vals + hvals
            else:
                lows = vals
                stnext = None
            # Superset filter with the current best, then a sequential
            # re-test per child so the batched walk replays the
            # one-at-a-time semantics exactly.
            cand = np.nonzero(lows <= min(bound, state["best"]))[0]
            for ci in cand:
                v = int(vals[ci])
                if leaf:
                    if v < state["best"]:
                        for e, (i, c) in enumerate(frees):
                            cur[i, c] = digs[e][ci]
                        state["best"] = v
                        state["cert"] = cur.copy()
                else:
                    lim = min(bound, state["best"])
                    if int(lows[ci]) > lim:
                        continue
                    for e, (i, c) in enumerate(frees):
                        cur[i, c] = digs[e][ci]
                    rec(s + 1, batch[ci], v, int(stnext[ci]) if track else 0)
                    if state["exceeded"]:
                        return
            idx0 = idx1

    rec(0, np.zeros((r, L), dtype=np.uint16), 0, 0)
    return state["best"], state["cert"], state["nodes"], state["exceeded"]
