"""Polynomials, polynomial vectors and matrices over GF(q), and supports.

Coefficients are stored as canonical integer encodings (see `field`); the
constructors also accept FieldElement values.  All sequences are ascending
in degree and kept free of trailing zeros, so equality is structural.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import ConvinvError, FieldMismatch
from .field import FieldElement, FieldSpec


def _coerce_coeff(field: FieldSpec, c) -> int:
    if isinstance(c, FieldElement):
        if c.spec != field:
            raise FieldMismatch("field mismatch")
        return c.rep
    return field.check(int(c))


class Polynomial:
    """A polynomial in one variable over a fixed field."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldSpec, coeffs: Sequence = ()):
        vals = [_coerce_coeff(field, c) for c in coeffs]
        while vals and vals[-1] == 0:
            vals.pop()
        self.field = field
        self.coeffs = tuple(vals)

    # -- basics -----------------------------------------------------------

    @property
    def deg(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, d: int) -> int:
        return self.coeffs[d] if 0 <= d < len(self.coeffs) else 0

    def weight(self) -> int:
        return sum(1 for c in self.coeffs if c)

    def _check(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            raise TypeError("expected a Polynomial")
        if other.field != self.field:
            raise FieldMismatch("field mismatch")
        return other

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: "Polynomial") -> "Polynomial":
        other = self._check(other)
        f = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = f.add(out[i], c)
        return Polynomial(f, out)

    def __neg__(self) -> "Polynomial":
        f = self.field
        return Polynomial(f, [f.neg(c) for c in self.coeffs])

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-self._check(other))

    def __mul__(self, other) -> "Polynomial":
        f = self.field
        if isinstance(other, (int, FieldElement)):
            s = _coerce_coeff(f, other)
            return Polynomial(f, [f.mul(c, s) for c in self.coeffs])
        other = self._check(other)
        if self.is_zero() or other.is_zero():
            return Polynomial(f)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] = f.add(out[i + j], f.mul(a, b))
        return Polynomial(f, out)

    __rmul__ = __mul__

    def shift(self, t: int) -> "Polynomial":
        """Multiply by x^t; negative t requires divisibility by x^-t."""
        if self.is_zero():
            return self
        if t >= 0:
            return Polynomial(self.field, (0,) * t + self.coeffs)
        if any(self.coeffs[:-t]):
            raise ConvinvError("negative shift does not divide")
        return Polynomial(self.field, self.coeffs[-t:])

    def __divmod__(self, other: "Polynomial"):
        other = self._check(other)
        if other.is_zero():
            raise ConvinvError("polynomial division by zero")
        f = self.field
        rem = list(self.coeffs)
        db = other.deg
        inv_lead = f.inv(other.coeffs[-1])
        q = [0] * max(0, len(rem) - db)
        for d in range(len(rem) - 1, db - 1, -1):
            if rem[d]:
                c = f.mul(rem[d], inv_lead)
                q[d - db] = c
                for t in range(db + 1):
                    rem[d - db + t] = f.sub(rem[d - db + t], f.mul(c, other.coeffs[t]))
        return Polynomial(f, q), Polynomial(f, rem)

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[1]

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[0]

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        return self * self.field.inv(self.coeffs[-1])

    def reverse(self, d: Optional[int] = None) -> "Polynomial":
        """x^d * p(1/x) for d >= deg(p) (default d = deg(p))."""
        if self.is_zero():
            return self
        if d is None:
            d = self.deg
        if d < self.deg:
            raise ConvinvError("reversal degree below polynomial degree")
        out = [0] * (d + 1)
        for i, c in enumerate(self.coeffs):
            out[d - i] = c
        return Polynomial(self.field, out)

    def eval_zero(self) -> int:
        return self.coeff(0)

    # -- identity / formatting ---------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and other.field == self.field
            and other.coeffs == self.coeffs
        )

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for d, c in enumerate(self.coeffs):
            if not c:
                continue
            if d == 0:
                parts.append(str(c))
            elif d == 1:
                parts.append("x" if c == 1 else f"{c}x")
            else:
                parts.append(f"x^{d}" if c == 1 else f"{c}x^{d}")
        return "+".join(parts)

    def to_json(self) -> list[int]:
        return list(self.coeffs)

    @staticmethod
    def from_json(field: FieldSpec, obj: Sequence[int]) -> "Polynomial":
        return Polynomial(field, obj)


@dataclass(frozen=True)
class SupportSet:
    """A set of (coordinate, degree) positions of nonzero coefficients.

    The flat view of position (i, d) in ambient width n is d*n + i, matching
    the coordinate order of truncated-word vectors.
    """

    positions: frozenset

    def __len__(self) -> int:
        return len(self.positions)

    def flat(self, n: int) -> tuple[int, ...]:
        return tuple(sorted(d * n + i for (i, d) in self.positions))

    def __or__(self, other: "SupportSet") -> "SupportSet":
        return SupportSet(self.positions | other.positions)

    def __contains__(self, pos) -> bool:
        return pos in self.positions


class PolyVector:
    """A length-n vector of polynomials over one field."""

    __slots__ = ("field", "entries")

    def __init__(self, field: FieldSpec, entries: Sequence):
        out = []
        for e in entries:
            if isinstance(e, Polynomial):
                if e.field != field:
                    raise FieldMismatch("field mismatch")
                out.append(e)
            else:
                out.append(Polynomial(field, e))
        self.field = field
        self.entries = tuple(out)

    @property
    def n(self) -> int:
        return len(self.entries)

    def _check(self, other: "PolyVector") -> "PolyVector":
        if not isinstance(other, PolyVector):
            raise TypeError("expected a PolyVector")
        if other.field != self.field or other.n != self.n:
            raise FieldMismatch("field mismatch" if other.field != self.field else "length mismatch")
        return other

    def __add__(self, other: "PolyVector") -> "PolyVector":
        other = self._check(other)
        return PolyVector(self.field, [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: "PolyVector") -> "PolyVector":
        other = self._check(other)
        return PolyVector(self.field, [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self) -> "PolyVector":
        return PolyVector(self.field, [-a for a in self.entries])

    def __mul__(self, other) -> "PolyVector":
        """Scale by a scalar or a polynomial."""
        if isinstance(other, Polynomial):
            return PolyVector(self.field, [e * other for e in self.entries])
        return PolyVector(self.field, [e * other for e in self.entries])

    __rmul__ = __mul__

    def shift(self, t: int) -> "PolyVector":
        return PolyVector(self.field, [e.shift(t) for e in self.entries])

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in self.entries)

    @property
    def deg(self) -> int:
        """Max entry degree; -1 for the zero vector."""
        return max((e.deg for e in self.entries), default=-1)

    def weight(self) -> int:
        """Number of nonzero field coefficients across all entries."""
        return sum(e.weight() for e in self.entries)

    def support(self) -> SupportSet:
        pos = set()
        for i, e in enumerate(self.entries):
            for d, c in enumerate(e.coeffs):
                if c:
                    pos.add((i, d))
        return SupportSet(frozenset(pos))

    def truncate(self, h: int, j: int) -> "PolyVector":
        """Keep coefficient degrees in [h, j]; other coefficients are zeroed."""
        if h < 0 or j < h:
            raise ConvinvError("empty window")
        out = []
        for e in self.entries:
            c = [0] * len(e.coeffs)
            for d in range(h, min(j, e.deg) + 1):
                c[d] = e.coeffs[d]
            out.append(Polynomial(self.field, c))
        return PolyVector(self.field, out)

    def coefficient_slice(self, d: int) -> tuple[int, ...]:
        """The degree-d coefficient of each entry, as a GF(q) row."""
        return tuple(e.coeff(d) for e in self.entries)

    def reverse_row(self) -> "PolyVector":
        """x^deg * v(1/x) with deg the vector degree; zero rows unchanged."""
        d = self.deg
        if d < 0:
            return self
        return PolyVector(self.field, [e.reverse(d) if not e.is_zero() else e for e in self.entries])

    def eval_zero(self) -> tuple[int, ...]:
        return self.coefficient_slice(0)

    def __eq__(self, other):
        return (
            isinstance(other, PolyVector)
            and other.field == self.field
            and other.entries == self.entries
        )

    def __hash__(self):
        return hash((self.field, self.entries))

    def __repr__(self):
        return "(" + ", ".join(str(e) for e in self.entries) + ")"

    def to_json(self) -> list[list[int]]:
        return [e.to_json() for e in self.entries]

    @staticmethod
    def from_json(field: FieldSpec, obj: Sequence[Sequence[int]]) -> "PolyVector":
        return PolyVector(field, [Polynomial(field, row) for row in obj])


class PolyMatrix:
    """A k x n matrix of polynomials, stored as a tuple of row vectors."""

    __slots__ = ("field", "rows")

    def __init__(self, field: FieldSpec, rows: Sequence):
        out = []
        n = None
        for r in rows:
            v = r if isinstance(r, PolyVector) else PolyVector(field, r)
            if v.field != field:
                raise FieldMismatch("field mismatch")
            if n is None:
                n = v.n
            elif v.n != n:
                raise ConvinvError("ragged matrix rows")
            out.append(v)
        if not out:
            raise ConvinvError("empty matrix")
        self.field = field
        self.rows = tuple(out)

    @property
    def k(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return self.rows[0].n

    @property
    def deg(self) -> int:
        return max(r.deg for r in self.rows)

    def row_degrees(self) -> tuple[int, ...]:
        return tuple(r.deg for r in self.rows)

    def coefficient_matrix(self, d: int) -> list[list[int]]:
        return [list(r.coefficient_slice(d)) for r in self.rows]

    def __iter__(self):
        return iter(self.rows)

    def __eq__(self, other):
        return (
            isinstance(other, PolyMatrix)
            and other.field == self.field
            and other.rows == self.rows
        )

    def __hash__(self):
        return hash((self.field, self.rows))

    def __repr__(self):
        return "[" + "; ".join(repr(r) for r in self.rows) + "]"

    def to_json(self) -> list[list[list[int]]]:
        return [r.to_json() for r in self.rows]

    @staticmethod
    def from_json(field: FieldSpec, obj) -> "PolyMatrix":
        return PolyMatrix(field, [PolyVector.from_json(field, row) for row in obj])


# -- module-level op wrappers --------------------------------------------


def truncate(c: PolyVector, h: int, j: int) -> PolyVector:
    """The [h, j] coefficient window of c, zero outside."""
    return c.truncate(h, j)


def weight(c: PolyVector) -> int:
    return c.weight()


def degree(c: PolyVector) -> int:
    return c.deg


def support_union(vectors: Iterable[PolyVector]) -> SupportSet:
    """Union of the supports of a finite set of vectors.

    Equals the support of the spanned space: scaling cannot enlarge a
    support and every nonzero position of a member stays nonzero in some
    span element.
    """
    pos = frozenset()
    for v in vectors:
        pos |= v.support().positions
    return SupportSet(pos)


def coefficient_slice(c: PolyVector, d: int) -> tuple[int, ...]:
    return c.coefficient_slice(d)
