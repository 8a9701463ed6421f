# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled twin of the pure kernels.

Visits stage assignments in the same ascending order as ``pure`` and
returns the same (value, certificate, nodes) triple whenever the search
completes; only the stopping point under budget exhaustion may differ.
The batched chunk-filter of the pure walk is replayed here as the
equivalent one-at-a-time bound test.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()

ctypedef cnp.uint16_t u16
ctypedef cnp.int32_t i32
ctypedef cnp.int64_t i64

IMPLEMENTATION = "fast"

cdef i64 SAT = (<i64>1) << 62


def relax_forward(dp, nxt, w, cap):
    """dp'[s'] = min over (s, u) with nxt[s,u] = s' of dp[s] + w[s,u], clamped."""
    cdef const i32[::1] dpv = np.ascontiguousarray(dp, dtype=np.int32)
    cdef const i32[:, ::1] nx = np.ascontiguousarray(nxt, dtype=np.int32)
    cdef const i32[:, ::1] wv = np.ascontiguousarray(w, dtype=np.int32)
    cdef i32 cap1 = <i32>cap + 1
    out_arr = np.full(dpv.shape[0], cap1, dtype=np.int32)
    cdef i32[::1] out = out_arr
    cdef Py_ssize_t s, u, M = nx.shape[0], A = nx.shape[1]
    cdef i32 v
    with nogil:
        for s in range(M):
            for u in range(A):
                v = dpv[s] + wv[s, u]
                if v > cap1:
                    v = cap1
                if v < out[nx[s, u]]:
                    out[nx[s, u]] = v
    return out_arr


def relax_backward(h, nxt, w, cap):
    """h'[s] = min over u of w[s,u] + h[nxt[s,u]], clamped."""
    cdef const i32[::1] hv = np.ascontiguousarray(h, dtype=np.int32)
    cdef const i32[:, ::1] nx = np.ascontiguousarray(nxt, dtype=np.int32)
    cdef const i32[:, ::1] wv = np.ascontiguousarray(w, dtype=np.int32)
    cdef i32 cap1 = <i32>cap + 1
    out_arr = np.empty(nx.shape[0], dtype=np.int32)
    cdef i32[::1] out = out_arr
    cdef Py_ssize_t s, u, M = nx.shape[0], A = nx.shape[1]
    cdef i32 best, v
    with nogil:
        for s in range(M):
            best = cap1
            for u in range(A):
                v = wv[s, u] + hv[nx[s, u]]
                if v < best:
                    best = v
            if best > cap1:
                best = cap1
            out[s] = best
    return out_arr


cdef struct _State:
    i64 best
    i64 nodes
    i64 budget
    bint exceeded
    bint has_cert


cdef inline i64 _ipow(i64 b, i64 e) noexcept nogil:
    cdef i64 out = 1
    while e > 0:
        out *= b
        e -= 1
    return out


cdef void _rec(
    Py_ssize_t s,
    Py_ssize_t S,
    Py_ssize_t r,
    Py_ssize_t L,
    i64 partial,
    i64 st,
    const u16[:, ::1] gen,
    const u16[:, ::1] add_tbl,
    const u16[:, ::1] mul_tbl,
    const i64[::1] stage_starts,
    const i64[::1] fin_cols,
    const i64[::1] fin_starts,
    const i64[::1] free_i,
    const i64[::1] free_c,
    const i64[::1] free_starts,
    const i64[::1] fixed_i,
    const i64[::1] fixed_c,
    const i64[::1] fixed_starts,
    u16[:, :, ::1] base_stack,
    u16[:, :, ::1] child_stack,
    u16[:, ::1] cur,
    u16[:, ::1] cert,
    i64[::1] digs,
    i64[::1] weights,
    bint have_joint,
    const i32[:, ::1] joint_next,
    const i32[:, ::1] h,
    i64 A,
    i64 q,
    i64 bound,
    _State* state,
) noexcept nogil:
    cdef Py_ssize_t f0 = free_starts[s], f1 = free_starts[s + 1], f = f1 - f0
    cdef Py_ssize_t x0 = fixed_starts[s], x1 = fixed_starts[s + 1]
    cdef Py_ssize_t lo = stage_starts[s]
    cdef Py_ssize_t i, col, t, e, fc
    cdef i64 idx, total, w, dig, u_val, U, lim, v, lowv, stnext
    cdef bint leaf = s == S - 1
    cdef bint track = have_joint and not leaf

    # accumulated rows after this stage's pivot (fixed) contributions
    for i in range(r):
        for col in range(L):
            base_stack[s, i, col] = 0 if s == 0 else child_stack[s - 1, i, col]
    for t in range(x0, x1):
        i = fixed_i[t]
        fc = fixed_c[t]
        for col in range(L):
            base_stack[s, i, col] = add_tbl[base_stack[s, i, col], gen[fc, col]]

    # child index weights, most significant digit first; weights beyond
    # the int64 range saturate, which keeps their digit at zero exactly
    # as the arbitrary-precision arithmetic of the pure kernel does
    total = 1
    for e in range(f - 1, -1, -1):
        weights[f0 + e] = total
        total = SAT if total > SAT // q else total * q
    # total now holds min(q**f, ~SAT); SAT exceeds any usable budget

    idx = 0
    while idx < total:
        state.nodes += 1
        if state.nodes > state.budget:
            state.exceeded = True
            return
        # decode digits and build the candidate rows
        for i in range(r):
            for col in range(L):
                child_stack[s, i, col] = base_stack[s, i, col]
        for e in range(f):
            w = weights[f0 + e]
            dig = (idx // w) % q if w < SAT else 0
            digs[f0 + e] = dig
            if dig != 0:
                i = free_i[f0 + e]
                fc = free_c[f0 + e]
                for col in range(L):
                    child_stack[s, i, col] = add_tbl[
                        child_stack[s, i, col], mul_tbl[dig, gen[fc, col]]
                    ]
        # support contributed by the columns finalized at this stage
        v = partial
        for t in range(fin_starts[s], fin_starts[s + 1]):
            col = fin_cols[t]
            for i in range(r):
                if child_stack[s, i, col] != 0:
                    v += 1
                    break
        # admissible lower bound for the remaining stages
        if track:
            U = 0
            for i in range(r):
                u_val = 0
                for t in range(x0, x1):
                    if fixed_i[t] == i:
                        u_val += _ipow(q, fixed_c[t] - lo)
                for e in range(f):
                    if free_i[f0 + e] == i and digs[f0 + e] != 0:
                        u_val += digs[f0 + e] * _ipow(q, free_c[f0 + e] - lo)
                U = U * A + u_val
            stnext = joint_next[st, U]
            lowv = v + h[S - 1 - s, stnext]
        else:
            stnext = 0
            lowv = v
        lim = state.best if state.best < bound else bound
        if lowv <= lim:
            if leaf:
                if v < state.best:
                    for e in range(f):
                        cur[free_i[f0 + e], free_c[f0 + e]] = <u16>digs[f0 + e]
                    state.best = v
                    state.has_cert = True
                    for i in range(r):
                        for col in range(cur.shape[1]):
                            cert[i, col] = cur[i, col]
            else:
                for e in range(f):
                    cur[free_i[f0 + e], free_c[f0 + e]] = <u16>digs[f0 + e]
                _rec(
                    s + 1, S, r, L, v, stnext,
                    gen, add_tbl, mul_tbl, stage_starts,
                    fin_cols, fin_starts,
                    free_i, free_c, free_starts, fixed_i, fixed_c, fixed_starts,
                    base_stack, child_stack, cur, cert, digs, weights,
                    have_joint, joint_next, h, A, q, bound, state,
                )
                if state.exceeded:
                    return
        idx += 1


def pivot_search(
    gen,
    add_tbl,
    mul_tbl,
    stage_starts,
    fin_cols,
    fin_starts,
    pivots,
    q,
    bound,
    budget,
    joint_next=None,
    h=None,
    int block_k=0,
):
    """See ``pure.pivot_search``; same contract, same visit order."""
    gen_arr = np.ascontiguousarray(gen, dtype=np.uint16)
    cdef const u16[:, ::1] gen_v = gen_arr
    cdef const u16[:, ::1] add_v = np.ascontiguousarray(add_tbl, dtype=np.uint16)
    cdef const u16[:, ::1] mul_v = np.ascontiguousarray(mul_tbl, dtype=np.uint16)
    cdef const i64[::1] starts_v = np.ascontiguousarray(stage_starts, dtype=np.int64)
    cdef const i64[::1] fcols_v = np.ascontiguousarray(fin_cols, dtype=np.int64)
    cdef const i64[::1] fstarts_v = np.ascontiguousarray(fin_starts, dtype=np.int64)
    piv_arr = np.ascontiguousarray(pivots, dtype=np.int64)

    cdef Py_ssize_t N = gen_arr.shape[0], L = gen_arr.shape[1]
    cdef Py_ssize_t S = starts_v.shape[0] - 1
    cdef Py_ssize_t r = piv_arr.shape[0]
    cdef Py_ssize_t s, i

    pivset = {int(p) for p in piv_arr}
    free_i, free_c, free_starts = [], [], [0]
    fixed_i, fixed_c, fixed_starts = [], [], [0]
    for s in range(S):
        lo, hi = int(starts_v[s]), int(starts_v[s + 1])
        for c in range(lo, hi):
            for i in range(r):
                p = int(piv_arr[i])
                if c == p:
                    fixed_i.append(i)
                    fixed_c.append(c)
                elif c > p and c not in pivset:
                    free_i.append(i)
                    free_c.append(c)
        free_starts.append(len(free_i))
        fixed_starts.append(len(fixed_i))

    cdef const i64[::1] free_i_v = np.array(free_i, dtype=np.int64)
    cdef const i64[::1] free_c_v = np.array(free_c, dtype=np.int64)
    cdef const i64[::1] free_starts_v = np.array(free_starts, dtype=np.int64)
    cdef const i64[::1] fixed_i_v = np.array(fixed_i, dtype=np.int64)
    cdef const i64[::1] fixed_c_v = np.array(fixed_c, dtype=np.int64)
    cdef const i64[::1] fixed_starts_v = np.array(fixed_starts, dtype=np.int64)

    cur_arr = np.zeros((r, N), dtype=np.uint16)
    for i in range(r):
        cur_arr[i, int(piv_arr[i])] = 1
    cert_arr = np.zeros((r, N), dtype=np.uint16)
    cdef u16[:, ::1] cur_v = cur_arr
    cdef u16[:, ::1] cert_v = cert_arr

    base_stack = np.zeros((max(S, 1), r, L), dtype=np.uint16)
    child_stack = np.zeros((max(S, 1), r, L), dtype=np.uint16)
    cdef u16[:, :, ::1] base_v = base_stack
    cdef u16[:, :, ::1] child_v = child_stack
    digs_arr = np.zeros(max(len(free_i), 1), dtype=np.int64)
    weights_arr = np.zeros(max(len(free_i), 1), dtype=np.int64)
    cdef i64[::1] digs_v = digs_arr
    cdef i64[::1] weights_v = weights_arr

    cdef bint have_joint = joint_next is not None
    cdef i64 A = 1
    dummy2 = np.zeros((1, 1), dtype=np.int32)
    cdef const i32[:, ::1] joint_v = np.ascontiguousarray(joint_next, dtype=np.int32) if have_joint else dummy2
    cdef const i32[:, ::1] h_v = np.ascontiguousarray(h, dtype=np.int32) if have_joint else dummy2
    if have_joint:
        for i in range(block_k):
            A *= <i64>q

    cdef i64 q_c = <i64>q
    cdef i64 bound_c = <i64>bound
    cdef _State state
    state.best = bound_c + 1
    state.nodes = 0
    state.budget = min(int(budget), int(SAT) - 1)
    state.exceeded = False
    state.has_cert = False

    with nogil:
        _rec(
            0, S, r, L, 0, 0,
            gen_v, add_v, mul_v, starts_v, fcols_v, fstarts_v,
            free_i_v, free_c_v, free_starts_v, fixed_i_v, fixed_c_v, fixed_starts_v,
            base_v, child_v, cur_v, cert_v, digs_v, weights_v,
            have_joint, joint_v, h_v, A, q_c, bound_c, &state,
        )

    cert = cert_arr if state.has_cert else None
    return int(state.best), cert, int(state.nodes), bool(state.exceeded)
