"""Convolutional codes as row spaces of polynomial matrices over GF(q).

A code is the GF(q)[x]-row space of a full-row-rank k x n polynomial
matrix.  Construction row-reduces the generator (minimal row degrees, rows
sorted by degree descending), derives the invariants (internal degree
delta, memory delta1), and decides noncatastrophicity through the Smith
form.  Both generator matrices are kept; distance computations always use
the row-reduced one.
"""

from __future__ import annotations

import itertools
import math
import threading
from typing import Optional, Sequence

from . import _gflinalg as lin
from .errors import ConvinvError, NoncatastrophicRequired, RankDeficient
from .field import FieldSpec
from .poly import Polynomial, PolyMatrix, PolyVector


# -- row reduction -----------------------------------------------------------


def _leading_rows(rows: Sequence[PolyVector]) -> list[list[int]]:
    return [list(r.coefficient_slice(r.deg)) for r in rows]


def row_reduce_with_transform(mat: PolyMatrix):
    """Row-reduced form R and a unimodular U with R = U * mat.

    Iteratively cancels GF(q)-dependencies among the leading-coefficient
    rows (the row of largest degree in the dependency is replaced; ties go
    to the lowest row index), then sorts rows by degree descending (stable).
    Raises RankDeficient when a row reduces to zero.
    """
    f = mat.field
    k, n = mat.k, mat.n
    rows = list(mat.rows)
    one = Polynomial(f, [1])
    U = [[one if i == j else Polynomial(f) for j in range(k)] for i in range(k)]
    for r in rows:
        if r.is_zero():
            raise RankDeficient("rank deficient")
    while True:
        lead = _leading_rows(rows)
        dep = lin.left_kernel_vector(f, lead)
        if dep is None:
            break
        support = [i for i, a in enumerate(dep) if a]
        emax = max(rows[i].deg for i in support)
        target = next(i for i in support if rows[i].deg == emax)
        at_inv = f.inv(dep[target])
        new_row = PolyVector(f, [Polynomial(f)] * n)
        new_u = [Polynomial(f) for _ in range(k)]
        for i in support:
            mono = Polynomial(f, [0] * (emax - rows[i].deg) + [f.mul(dep[i], at_inv)])
            new_row = new_row + rows[i] * mono
            for j in range(k):
                new_u[j] = new_u[j] + U[i][j] * mono
        if new_row.is_zero():
            raise RankDeficient("rank deficient")
        rows[target] = new_row
        U[target] = new_u
    order = sorted(range(k), key=lambda i: -rows[i].deg)
    rows = [rows[i] for i in order]
    U = [U[i] for i in order]
    return PolyMatrix(f, rows), PolyMatrix(f, [PolyVector(f, u) for u in U])


def row_reduce(mat: PolyMatrix) -> PolyMatrix:
    """Row-reduced generator with the same row space (degrees descending)."""
    return row_reduce_with_transform(mat)[0]


def express_in_row_reduced(vec: PolyVector, rows: Sequence[PolyVector]) -> Optional[list[Polynomial]]:
    """Coordinates of vec in a row-reduced basis, or None if not a member.

    Peels leading slices: row-reduced bases have the predictable-degree
    property, so membership forces every quotient step to succeed.
    """
    f = vec.field
    coeffs = [Polynomial(f) for _ in rows]
    degs = [r.deg for r in rows]
    lead = _leading_rows(rows)
    cur = vec
    guard = 0
    while not cur.is_zero():
        d = cur.deg
        eligible = [i for i in range(len(rows)) if degs[i] <= d]
        if not eligible:
            return None
        sub = [lead[i] for i in eligible]
        beta = lin.solve_left(f, sub, list(cur.coefficient_slice(d)))
        if beta is None:
            return None
        for pos, i in enumerate(eligible):
            if beta[pos]:
                mono = Polynomial(f, [0] * (d - degs[i]) + [beta[pos]])
                coeffs[i] = coeffs[i] + mono
                cur = cur - rows[i] * mono
        guard += 1
        if guard > 4 * (vec.deg + 2):
            raise ConvinvError("membership reduction failed to terminate")  # pragma: no cover
    return coeffs


def express_in_basis(vec: PolyVector, mat: PolyMatrix) -> Optional[list[Polynomial]]:
    """Coordinates of vec in the rows of mat (full row rank), or None."""
    reduced, U = row_reduce_with_transform(mat)
    beta = express_in_row_reduced(vec, reduced.rows)
    if beta is None:
        return None
    k = mat.k
    out = []
    for j in range(k):
        acc = Polynomial(mat.field)
        for i in range(k):
            if beta[i] and U.rows[i].entries[j]:
                acc = acc + beta[i] * U.rows[i].entries[j]
        out.append(acc)
    return out


# -- Smith form --------------------------------------------------------------


def smith_invariant_factors(mat: PolyMatrix) -> list[Polynomial]:
    """Monic invariant factors of a polynomial matrix (zeros included)."""
    f = mat.field
    rows = [[e for e in r.entries] for r in mat.rows]
    k = len(rows)
    n = len(rows[0])
    factors = []
    pos = 0
    while pos < min(k, n):
        while True:
            best = None
            for i in range(pos, k):
                for j in range(pos, n):
                    e = rows[i][j]
                    if not e.is_zero() and (best is None or e.deg < rows[best[0]][best[1]].deg):
                        best = (i, j)
            if best is None:
                break
            bi, bj = best
            rows[pos], rows[bi] = rows[bi], rows[pos]
            for r in rows:
                r[pos], r[bj] = r[bj], r[pos]
            pivot = rows[pos][pos]
            dirty = False
            for i in range(pos + 1, k):
                if not rows[i][pos].is_zero():
                    q, rem = divmod(rows[i][pos], pivot)
                    rows[i] = [a - q * b for a, b in zip(rows[i], rows[pos])]
                    if not rem.is_zero():
                        dirty = True
            for j in range(pos + 1, n):
                if not rows[pos][j].is_zero():
                    q, rem = divmod(rows[pos][j], pivot)
                    for i in range(k):
                        rows[i][j] = rows[i][j] - q * rows[i][pos]
                    if not rem.is_zero():
                        dirty = True
            if dirty:
                continue
            stray = None
            for i in range(pos + 1, k):
                for j in range(pos + 1, n):
                    if not (rows[i][j] % pivot).is_zero():
                        stray = i
                        break
                if stray is not None:
                    break
            if stray is None:
                break
            rows[pos] = [a + b for a, b in zip(rows[pos], rows[stray])]
        if rows[pos][pos].is_zero():
            break
        factors.append(rows[pos][pos].monic())
        pos += 1
    while len(factors) < min(k, n):
        factors.append(Polynomial(f))
    return factors


# -- code objects ------------------------------------------------------------


class BlockCode:
    """A GF(q)-linear block code, held as an RREF basis."""

    __slots__ = ("field", "n", "basis")

    def __init__(self, field: FieldSpec, n: int, vectors: Sequence[Sequence[int]]):
        rows, _ = lin.rref(field, [list(v) for v in vectors]) if vectors else ([], [])
        self.field = field
        self.n = n
        self.basis = tuple(tuple(r) for r in rows)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def words(self):
        """All codewords, message-order enumeration."""
        f = self.field
        K = self.dim
        for idx in range(f.q**K):
            msg = []
            t = idx
            for _ in range(K):
                msg.append(t % f.q)
                t //= f.q
            yield tuple(lin.vecmat(f, msg, self.basis)) if K else tuple([0] * self.n)

    def __repr__(self):
        return f"BlockCode(n={self.n}, dim={self.dim})"


class ConvCode:
    """A convolutional code: the GF(q)[x]-row space of a generator matrix."""

    def __init__(self, gen: PolyMatrix):
        if gen.k > gen.n:
            raise ConvinvError("generator has more rows than columns")
        self.field = gen.field
        self.gen = gen
        self.rowred, self._transform = row_reduce_with_transform(gen)
        self.k = gen.k
        self.n = gen.n
        self.row_degrees = self.rowred.row_degrees()
        self.delta = sum(self.row_degrees)
        self.delta1 = max(self.row_degrees)
        self._verify_same_module()
        if math.comb(self.n, self.k) <= 2000:
            minor_delta = self._max_minor_degree()
            if minor_delta != self.delta:
                raise ConvinvError(
                    f"internal degree mismatch: row degrees give {self.delta}, minors give {minor_delta}"
                )  # pragma: no cover
        factors = smith_invariant_factors(self.rowred)[: self.k]
        self.noncatastrophic = all(not fct.is_zero() and fct.deg == 0 for fct in factors)
        self._cache: dict = {}
        self._lock = threading.Lock()

    def _verify_same_module(self) -> None:
        for r in self.gen.rows:
            if express_in_row_reduced(r, self.rowred.rows) is None:
                raise ConvinvError("row reduction changed the module")  # pragma: no cover

    def _max_minor_degree(self) -> int:
        best = -1
        for cols in itertools.combinations(range(self.n), self.k):
            sub = [[r.entries[c] for c in cols] for r in self.rowred.rows]
            d = _poly_det(self.field, sub)
            if not d.is_zero():
                best = max(best, d.deg)
        if best < 0:
            raise RankDeficient("rank deficient")  # pragma: no cover
        return best

    # Construction-time invariants make these plain attributes; methods
    # below are the operational surface.

    def contains(self, vec: PolyVector) -> bool:
        if vec.field != self.field or vec.n != self.n:
            return False
        return express_in_row_reduced(vec, self.rowred.rows) is not None

    def coordinates(self, vec: PolyVector) -> Optional[list[Polynomial]]:
        """Coordinates of vec in the row-reduced basis, or None."""
        return express_in_row_reduced(vec, self.rowred.rows)

    def same_module(self, other: "ConvCode") -> bool:
        return all(self.contains(r) for r in other.rowred.rows) and all(
            other.contains(r) for r in self.rowred.rows
        )

    def evaluate_at_zero(self) -> BlockCode:
        """The GF(q)-span of the constant terms of the code."""
        return BlockCode(self.field, self.n, self.rowred.coefficient_matrix(0))

    def word(self, message: Sequence[Polynomial]) -> PolyVector:
        """The codeword of a message against the row-reduced basis."""
        out = PolyVector(self.field, [Polynomial(self.field)] * self.n)
        for p, row in zip(message, self.rowred.rows):
            if isinstance(p, Polynomial):
                if not p.is_zero():
                    out = out + row * p
            elif p:
                out = out + row * Polynomial(self.field, [p])
        return out

    def cached(self, key, builder):
        with self._lock:
            if key in self._cache:
                return self._cache[key]
        value = builder()
        with self._lock:
            return self._cache.setdefault(key, value)

    def __repr__(self):
        return (
            f"ConvCode(n={self.n}, k={self.k}, delta={self.delta}, "
            f"delta1={self.delta1}, q={self.field.q}, "
            f"noncatastrophic={self.noncatastrophic})"
        )

    def params_json(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "delta": self.delta,
            "delta1": self.delta1,
            "noncatastrophic": self.noncatastrophic,
        }


def _poly_det(field: FieldSpec, sub) -> Polynomial:
    k = len(sub)
    if k == 1:
        return sub[0][0]
    out = Polynomial(field)
    for j in range(k):
        if sub[0][j].is_zero():
            continue
        minor = [[sub[i][c] for c in range(k) if c != j] for i in range(1, k)]
        term = sub[0][j] * _poly_det(field, minor)
        if j % 2:
            term = -term
        out = out + term
    return out


def code_from_matrix(gen: PolyMatrix) -> ConvCode:
    """Build a code, rejecting rank-deficient generators."""
    return ConvCode(gen)


def make_code(field: FieldSpec, rows: Sequence[Sequence]) -> ConvCode:
    """Convenience constructor from coefficient lists."""
    return ConvCode(PolyMatrix(field, rows))


def is_noncatastrophic(code: ConvCode) -> bool:
    """True iff every Smith invariant factor is a nonzero constant."""
    return code.noncatastrophic


def reverse_code(code: ConvCode) -> ConvCode:
    """The code generated by the coefficient-reversed row-reduced rows."""
    return ConvCode(PolyMatrix(code.field, [r.reverse_row() for r in code.rowred.rows]))


def singleton_bound(n: int, k: int, delta: int) -> int:
    return (n - k) * (delta // k + 1) + delta + 1


def is_mds(code: ConvCode) -> bool:
    """Free distance meets the Singleton bound (noncatastrophic only)."""
    if not code.noncatastrophic:
        raise NoncatastrophicRequired("predicate requires a noncatastrophic code")
    from . import distances

    dfree = distances.free_distance(code).value
    return dfree == singleton_bound(code.n, code.k, code.delta)


def mdp_horizon(code: ConvCode) -> int:
    if code.n == code.k:
        return 0
    return code.delta // code.k + code.delta // (code.n - code.k)


def is_mdp(code: ConvCode) -> bool:
    """Column distances meet (n-k)(j+1)+1 for every j up to the horizon."""
    if not code.noncatastrophic:
        raise NoncatastrophicRequired("predicate requires a noncatastrophic code")
    from . import distances

    for j in range(mdp_horizon(code) + 1):
        if distances.column_distance(code, j).value != (code.n - code.k) * (j + 1) + 1:
            return False
    return True


def strongly_mds_index(code: ConvCode) -> int:
    if code.n == code.k:
        return 0
    d, rem = divmod(code.delta, code.n - code.k)
    return code.delta // code.k + d + (1 if rem else 0)


def is_strongly_mds(code: ConvCode) -> bool:
    """The column distance reaches the Singleton bound at the earliest
    index where that is possible."""
    if not code.noncatastrophic:
        raise NoncatastrophicRequired("predicate requires a noncatastrophic code")
    from . import distances

    j = strongly_mds_index(code)
    return distances.column_distance(code, j).value == singleton_bound(
        code.n, code.k, code.delta
    )
