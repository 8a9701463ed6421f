"""Joint encoder-state tables for window-distance profiles.

A single message row of a code with memory delta1 is a finite automaton:
the state is the last delta1 input blocks (M = q^(k*delta1) states, encoded
base q^k with the most recent block in the low digits), one input block
(A = q^k choices) emits one output block whose nonzero-coordinate mask is a
table entry.  The joint automaton of r rows tracks r states and charges
each stage the popcount of the OR of the r output masks, so the minimum
over length-(j+1) paths whose first input blocks are GF(q)-independent is
exactly the r-generalized window distance at index j.

Values are relaxed stage by stage (kernels.relax_forward); the same tables
run backward give exact cost-to-go bounds for the certificate search.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from . import _gflinalg as lin
from . import kernels, sliding
from .errors import BudgetExceeded
from .structure import ConvCode

DEFAULT_TABLE_LIMIT = 1 << 22


def table_limit() -> int:
    env = os.environ.get("CONVINV_DP_LIMIT")
    return int(env) if env else DEFAULT_TABLE_LIMIT


def _popcount(a: np.ndarray) -> np.ndarray:
    """Popcount of nonnegative int64 values below 2^32."""
    v = a.astype(np.int64)
    v = v - ((v >> 1) & 0x55555555)
    v = (v & 0x33333333) + ((v >> 2) & 0x33333333)
    v = (v + (v >> 4)) & 0x0F0F0F0F
    return (v * 0x01010101) >> 24


@dataclass
class JointTables:
    r: int
    q: int
    k: int
    n: int
    delta1: int
    M: int  # single-row state count
    A: int  # single-row input count
    nxt: np.ndarray  # int32 [M^r, A^r]
    w: np.ndarray  # int32 [M^r, A^r]
    first_inputs: np.ndarray  # int64, joint inputs whose r blocks are independent

    @property
    def states(self) -> int:
        return self.nxt.shape[0]


def _row_tables(code: ConvCode):
    """(shift, mask) tables of one message row, both (M, A) int64."""
    f = code.field
    q, k, n, d1 = f.q, code.k, code.n, code.delta1
    A = q**k
    M = A**d1
    blocks = sliding.coefficient_blocks(code)
    add, mul = f.add_table, f.mul_table
    # image of every input block under each coefficient matrix
    digits = np.stack([(np.arange(A, dtype=np.int64) // (q**t)) % q for t in range(k)], axis=1)
    contrib = []
    for d in range(d1 + 1):
        img = np.zeros((A, n), dtype=np.uint16)
        for t in range(k):
            img = add[img, mul[digits[:, t]][:, blocks[d][t]]]
        contrib.append(img)
    states = np.arange(M, dtype=np.int64)
    inputs = np.arange(A, dtype=np.int64)
    if d1 == 0:
        shift = np.zeros((M, A), dtype=np.int64)
    else:
        shift = (states[:, None] % (A ** (d1 - 1))) * A + inputs[None, :]
    out = np.broadcast_to(contrib[0][None, :, :], (M, A, n)).copy()
    for e in range(1, d1 + 1):
        dig = (states // (A ** (e - 1))) % A
        out = add[out, contrib[e][dig][:, None, :]]
    coeff = (np.int64(1) << np.arange(n, dtype=np.int64))
    mask = ((out != 0).astype(np.int64) * coeff[None, None, :]).sum(axis=2)
    return shift, mask


def build_joint(code: ConvCode, r: int, limit: int | None = None) -> JointTables:
    """Joint tables for r rows; raises BudgetExceeded over the size gate."""
    if code.n > 32:
        raise BudgetExceeded("state tables support at most 32 coordinates", needed=code.n, limit=32)
    f = code.field
    if f.add_table is None:
        raise BudgetExceeded(
            "state tables need dense field tables (q <= 256)", needed=f.q, limit=256
        )
    lim = table_limit() if limit is None else limit

    def build():
        shift, mask = _row_tables(code)
        M, A = shift.shape
        if (M**r) * (A**r) > lim:
            raise BudgetExceeded(
                "joint state table exceeds the size gate",
                needed=(M**r) * (A**r),
                limit=lim,
            )
        nxt = shift
        msk = mask
        for _ in range(r - 1):
            Mp, Ap = nxt.shape
            nxt = (nxt[:, None, :, None] * M + shift[None, :, None, :]).reshape(Mp * M, Ap * A)
            msk = (msk[:, None, :, None] | mask[None, :, None, :]).reshape(Mp * M, Ap * A)
        w = _popcount(msk).astype(np.int32)
        nxt = nxt.astype(np.int32)
        # joint first inputs: the r input blocks must be GF(q)-independent
        q, k = f.q, code.k
        valid = []
        for U in range(A**r):
            rows = []
            t = U
            for _ in range(r):
                u = t % A
                t //= A
                rows.append([(u // (q**d)) % q for d in range(k)])
            # rows collected least-significant first = reverse row order;
            # independence does not depend on the order
            if lin.rank(f, rows) == r:
                valid.append(U)
        return JointTables(
            r=r, q=q, k=k, n=code.n, delta1=code.delta1, M=M, A=A,
            nxt=nxt, w=w, first_inputs=np.array(valid, dtype=np.int64),
        )

    return code.cached(("joint", r, lim), build)


def weight_cap(code: ConvCode) -> int:
    """Every window distance is at most n(delta1+1) (a single row's own
    window support never exceeds it)."""
    return code.n * (code.delta1 + 1)


def initial_dp(joint: JointTables, cap: int) -> np.ndarray:
    dp = np.full(joint.states, cap + 1, dtype=np.int32)
    first = joint.first_inputs
    np.minimum.at(dp, joint.nxt[0, first], joint.w[0, first])
    np.minimum(dp, cap + 1, out=dp)
    return dp


def flush_seed(joint: JointTables, cap: int) -> np.ndarray:
    """Support emitted by feeding delta1 zero blocks (the memory tail)."""
    seed = np.zeros(joint.states, dtype=np.int32)
    for _ in range(joint.delta1):
        seed = (joint.w[:, 0] + seed[joint.nxt[:, 0]]).astype(np.int32)
    np.minimum(seed, cap + 1, out=seed)
    return seed


def cost_to_go(joint: JointTables, stages: int, cap: int, seed: np.ndarray | None = None) -> np.ndarray:
    """h[t][state] = least support of t further stages from state (plus the
    seed, which is zero for truncated windows and the flush for full
    codewords); h has shape (stages, states)."""
    h = np.empty((max(stages, 1), joint.states), dtype=np.int32)
    h[0] = np.zeros(joint.states, dtype=np.int32) if seed is None else seed
    for t in range(1, stages):
        h[t] = kernels.relax_backward(h[t - 1], joint.nxt, joint.w, cap)
    return h


def sweep_profile(joint: JointTables, cap: int, max_windows: int, plateau: int | None = None):
    """Window values by min-plus relaxation.

    Returns (values, status) with values[j] the r-generalized window
    distance at index j and status one of 'ceiling', 'fixpoint', 'bound'
    (all three prove the limit was reached) or 'plateau' (heuristic stop
    after ``plateau`` equal values).
    """
    dp = initial_dp(joint, cap)
    values = [int(dp.min())]
    seen = {dp.tobytes(): 0}
    while True:
        if values[-1] >= cap:
            return values, "ceiling"
        if plateau is not None and len(values) >= plateau and len(set(values[-plateau:])) == 1:
            return values, "plateau"
        if len(values) - 1 >= max_windows:
            return values, "bound"
        dp = kernels.relax_forward(dp, joint.nxt, joint.w, cap)
        values.append(int(dp.min()))
        if values[-1] < values[-2]:
            raise AssertionError("window values must be nondecreasing")  # pragma: no cover
        key = dp.tobytes()
        if key in seen:
            return values, "fixpoint"
        seen[key] = len(values) - 1
