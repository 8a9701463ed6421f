"""Naive reference implementations of every distance invariant.

Each function enumerates raw message tuples with no canonical forms, no
pruning, and no shared search machinery, computing codewords through
plain polynomial arithmetic.  They exist solely to cross-check the
optimized searches on tiny instances and refuse anything larger than the
nominal tuple budget.
"""

from __future__ import annotations

import itertools

from .errors import BudgetExceeded, OrderOutOfRange
from .poly import Polynomial, PolyVector
from .structure import BlockCode, ConvCode

ORACLE_BUDGET = 100_000_000


def _gate(count: int) -> None:
    if count > ORACLE_BUDGET:
        raise BudgetExceeded(
            "naive enumeration exceeds the oracle budget",
            needed=count, limit=ORACLE_BUDGET,
        )


def _gf_rank(field, rows) -> int:
    """Row count after Gaussian elimination, written out longhand."""
    mat = [list(r) for r in rows]
    rank = 0
    cols = len(mat[0]) if mat else 0
    for c in range(cols):
        piv = next((i for i in range(rank, len(mat)) if mat[i][c]), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = field.inv(mat[rank][c])
        mat[rank] = [field.mul(inv, x) for x in mat[rank]]
        for i in range(len(mat)):
            if i != rank and mat[i][c]:
                s = mat[i][c]
                mat[i] = [field.sub(x, field.mul(s, y)) for x, y in zip(mat[i], mat[rank])]
        rank += 1
    return rank


def _poly_det(field, rows) -> Polynomial:
    """Laplace-expansion determinant of a small square polynomial matrix."""
    if len(rows) == 1:
        return rows[0][0]
    out = Polynomial(field)
    for i, row in enumerate(rows):
        if row[0].is_zero():
            continue
        minor = [r[1:] for j, r in enumerate(rows) if j != i]
        term = row[0] * _poly_det(field, minor)
        out = out + (term if i % 2 == 0 else -term)
    return out


def _poly_rank_is(field, rows, r: int) -> bool:
    """Whether the r x k polynomial matrix has rank r (some r x r minor != 0)."""
    k = len(rows[0])
    for cols in itertools.combinations(range(k), r):
        sub = [[row[c] for c in cols] for row in rows]
        if not _poly_det(field, sub).is_zero():
            return True
    return False


def _all_vectors(q: int, length: int):
    return itertools.product(range(q), repeat=length)


def _word_window(code: ConvCode, msg, j: int) -> PolyVector:
    """The codeword of a flat message (blocks of k, degree-major), truncated
    to coefficient degrees 0..j."""
    f = code.field
    k = code.k
    out = PolyVector(f, [Polynomial(f)] * code.n)
    for i, row in enumerate(code.rowred.rows):
        coeffs = [msg[s * k + i] for s in range(len(msg) // k)]
        p = Polynomial(f, coeffs)
        if not p.is_zero():
            out = out + row * p
    return out.truncate(0, j)


def _support_count(words) -> int:
    pos = set()
    for w in words:
        pos |= w.support().positions
    return len(pos)


def naive_gen_column_distance(code: ConvCode, r: int, j: int) -> int:
    """Min support union of r windowed words whose degree-0 message blocks
    are independent; every ordered tuple is tried."""
    if not 1 <= r <= code.k:
        raise OrderOutOfRange(f"order r must satisfy 1 <= r <= k = {code.k}, got {r}")
    if j < 0:
        raise OrderOutOfRange(f"window index must be nonnegative, got {j}")
    q, k = code.field.q, code.k
    L = k * (j + 1)
    _gate(q ** (r * L))
    best = None
    for tup in itertools.product(_all_vectors(q, L), repeat=r):
        blocks = [v[:k] for v in tup]
        if _gf_rank(code.field, blocks) != r:
            continue
        wt = _support_count(_word_window(code, v, j) for v in tup)
        if best is None or wt < best:
            best = wt
    return best


def naive_unrestricted(code: ConvCode, r: int, j: int) -> int:
    """Min support union of r windowed words from an independent message
    tuple whose first vector has a nonzero degree-0 block."""
    q, k = code.field.q, code.k
    L = k * (j + 1)
    if j < 0:
        raise OrderOutOfRange(f"window index must be nonnegative, got {j}")
    if not 1 <= r <= L:
        raise OrderOutOfRange(f"order r must satisfy 1 <= r <= k(j+1) = {L}, got {r}")
    _gate(q ** (r * L))
    best = None
    for tup in itertools.product(_all_vectors(q, L), repeat=r):
        if not any(tup[0][:k]):
            continue
        if _gf_rank(code.field, tup) != r:
            continue
        wt = _support_count(_word_window(code, v, j) for v in tup)
        if best is None or wt < best:
            best = wt
    return best


def naive_ghw(block: BlockCode, r: int) -> int:
    """Min support union over independent r-tuples of block codewords."""
    if not 1 <= r <= block.dim:
        raise OrderOutOfRange(
            f"order r must satisfy 1 <= r <= dim = {block.dim}, got {r}"
        )
    f = block.field
    q = f.q
    _gate(q ** (r * block.dim))
    best = None
    for tup in itertools.product(_all_vectors(q, block.dim), repeat=r):
        if _gf_rank(f, tup) != r:
            continue
        words = []
        for v in tup:
            w = [0] * block.n
            for i, coef in enumerate(v):
                if coef:
                    row = block.basis[i]
                    w = [f.add(x, f.mul(coef, y)) for x, y in zip(w, row)]
            words.append(w)
        wt = len({c for w in words for c, x in enumerate(w) if x})
        if best is None or wt < best:
            best = wt
    return best


def naive_genweight(code: ConvCode, r: int, degree_bound: int) -> int:
    """Min support union over r-tuples of codewords of degree at most the
    bound whose module span has rank r; every ordered message tuple under
    the per-row degree caps is tried."""
    if not 1 <= r <= code.k:
        raise OrderOutOfRange(f"order r must satisfy 1 <= r <= k = {code.k}, got {r}")
    D = int(degree_bound)
    if D < 0:
        raise OrderOutOfRange(f"degree bound must be nonnegative, got {D}")
    f = code.field
    caps = [D - rd for rd in code.row_degrees]
    active = [i for i, c in enumerate(caps) if c >= 0]
    if len(active) < r:
        need = sorted(code.row_degrees)[r - 1]
        raise OrderOutOfRange(
            f"no rank-{r} tuple of codewords of degree <= {D} exists; "
            f"the degree bound must be at least {need}"
        )
    width = sum(caps[i] + 1 for i in active)
    _gate(f.q ** (r * width))
    best = None
    for tup in itertools.product(_all_vectors(f.q, width), repeat=r):
        msgs = []
        for flat in tup:
            entries = [Polynomial(f)] * code.k
            pos = 0
            for i in active:
                entries[i] = Polynomial(f, flat[pos : pos + caps[i] + 1])
                pos += caps[i] + 1
            msgs.append(entries)
        if not _poly_rank_is(f, msgs, r):
            continue
        words = []
        for entries in msgs:
            w = PolyVector(f, [Polynomial(f)] * code.n)
            for p, row in zip(entries, code.rowred.rows):
                if not p.is_zero():
                    w = w + row * p
            words.append(w)
        wt = _support_count(words)
        if best is None or wt < best:
            best = wt
    return best
