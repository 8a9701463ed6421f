"""Exact arithmetic in GF(q) for prime powers q = p^m up to 2^16.

Elements are canonical integers in [0, q): the base-p digits of the integer
are the coefficients of the residue polynomial, lowest degree first.  GF(4)
with modulus x^2 + x + 1 therefore encodes 0, 1, x, x+1 as 0, 1, 2, 3.

Multiplication and inversion go through log/antilog tables built once per
field spec; addition is digit-wise modulo p (a plain XOR when p = 2).  For
q <= 256 dense q x q add/mul numpy tables are kept as well; the search
kernels index into them directly.
"""

from __future__ import annotations

import functools
from typing import Iterator, Optional, Sequence

import numpy as np

from .errors import ConvinvError, FieldMismatch

MAX_ORDER = 1 << 16
TABLE_LIMIT = 256


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _factorize(n: int) -> list[int]:
    """Distinct prime factors of n."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# -- polynomial helpers over GF(p), coefficients as plain int tuples ----------


def _poly_trim(c: Sequence[int]) -> tuple[int, ...]:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _poly_mulmod_p(a: Sequence[int], b: Sequence[int], mod: Sequence[int], p: int) -> tuple[int, ...]:
    """(a * b) mod `mod` with coefficients mod p; `mod` is monic."""
    m = len(mod) - 1
    prod = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    for d in range(len(prod) - 1, m - 1, -1):
        f = prod[d]
        if f:
            prod[d] = 0
            for t in range(m):
                prod[d - m + t] = (prod[d - m + t] - f * mod[t]) % p
    return _poly_trim(prod[:m] if len(prod) > m else prod)


def _poly_divmod_p(a: Sequence[int], b: Sequence[int], p: int):
    """Quotient and remainder of a by b over GF(p); b nonzero."""
    a = list(a)
    db, dbv = len(b) - 1, b[-1]
    inv = pow(dbv, p - 2, p) if p > 2 else dbv
    q = [0] * max(0, len(a) - db)
    for d in range(len(a) - 1, db - 1, -1):
        if a[d]:
            f = (a[d] * inv) % p
            q[d - db] = f
            for t in range(db + 1):
                a[d - db + t] = (a[d - db + t] - f * b[t]) % p
    return _poly_trim(q), _poly_trim(a)


def _irreducible_p(c: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg(c)/2."""
    m = len(c) - 1
    if m < 1:
        return False
    if c[0] == 0:
        return m == 1
    for d in range(1, m // 2 + 1):
        for tail in range(p**d):
            div = []
            t = tail
            for _ in range(d):
                div.append(t % p)
                t //= p
            div.append(1)
            _, rem = _poly_divmod_p(c, div, p)
            if not rem:
                return False
    return True


def default_modulus(p: int, m: int) -> tuple[int, ...]:
    """Monic irreducible of degree m over GF(p) with the least tail encoding.

    The tail encoding of x^m + c_{m-1} x^{m-1} + ... + c_0 is the integer
    sum(c_i * p^i); the search returns the first irreducible in that order.
    """
    for tail in range(p**m):
        c = []
        t = tail
        for _ in range(m):
            c.append(t % p)
            t //= p
        c.append(1)
        if _irreducible_p(c, p):
            return tuple(c)
    raise ConvinvError("no irreducible modulus found")  # pragma: no cover


class FieldSpec:
    """A concrete finite field GF(p^m) with fixed element encoding.

    Parameters
    ----------
    p : prime characteristic.
    m : extension degree (default 1).
    modulus : ascending coefficient list of a monic irreducible of degree m;
        ignored when m = 1; when omitted the lexicographically least
        irreducible (by tail encoding) is used.
    """

    __slots__ = (
        "p", "m", "q", "modulus", "exp", "log",
        "add_table", "mul_table", "inv_table", "neg_table", "_pow_p",
    )

    def __init__(self, p: int, m: int = 1, modulus: Optional[Sequence[int]] = None):
        if not _is_prime(p):
            raise ConvinvError(f"characteristic {p} is not prime")
        if m < 1:
            raise ConvinvError("extension degree must be >= 1")
        q = p**m
        if q > MAX_ORDER:
            raise ConvinvError(f"field order {q} exceeds the supported maximum {MAX_ORDER}")
        self.p = p
        self.m = m
        self.q = q
        if m == 1:
            self.modulus = None
        elif modulus is None:
            self.modulus = default_modulus(p, m)
        else:
            mod = tuple(int(c) % p for c in modulus)
            if len(mod) != m + 1 or mod[-1] != 1:
                raise ConvinvError("modulus must be monic of degree m")
            if not _irreducible_p(mod, p):
                raise ConvinvError("modulus is reducible")
            self.modulus = mod
        self._pow_p = tuple(p**i for i in range(m + 1))
        self._build_tables()

    # -- encoding helpers ------------------------------------------------

    def _digits(self, a: int) -> tuple[int, ...]:
        p = self.p
        out = []
        while a:
            out.append(a % p)
            a //= p
        return tuple(out)

    def _encode(self, digits: Sequence[int]) -> int:
        a = 0
        for i, d in enumerate(digits):
            a += d * self._pow_p[i]
        return a

    def _mul_raw(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a * b) % self.p
        return self._encode(_poly_mulmod_p(self._digits(a), self._digits(b), self.modulus, self.p))

    def _pow_raw(self, a: int, e: int) -> int:
        out = 1
        base = a
        while e:
            if e & 1:
                out = self._mul_raw(out, base)
            base = self._mul_raw(base, base)
            e >>= 1
        return out

    def _build_tables(self) -> None:
        q = self.q
        if q == 2:
            gen = 1
        else:
            # smallest element (by encoding) of multiplicative order q - 1
            factors = _factorize(q - 1)
            gen = 0
            for g in range(2, q):
                if all(self._pow_raw(g, (q - 1) // f) != 1 for f in factors):
                    gen = g
                    break
            if gen == 0:
                raise ConvinvError("generator search failed")  # pragma: no cover
        # exp[i] = gen^i for i in [0, q-1); log[exp[i]] = i
        exp = np.zeros(q - 1 if q > 2 else 1, dtype=np.uint16)
        log = np.zeros(q, dtype=np.uint16)
        v = 1
        for i in range(max(q - 1, 1)):
            exp[i] = v
            log[v] = i
            v = self._mul_raw(v, gen)
        if v != 1:
            raise ConvinvError("generator search failed")  # pragma: no cover
        self.exp = exp
        self.log = log
        if q <= TABLE_LIMIT:
            idx = np.arange(q, dtype=np.int64)
            if self.p == 2:
                add = (idx[:, None] ^ idx[None, :]).astype(np.uint16)
            else:
                add = np.zeros((q, q), dtype=np.uint16)
                for a in range(q):
                    for b in range(q):
                        add[a, b] = self._add_raw(a, b)
            mul = np.zeros((q, q), dtype=np.uint16)
            for a in range(1, q):
                la = int(log[a])
                for b in range(1, q):
                    mul[a, b] = exp[(la + int(log[b])) % (q - 1)]
            self.add_table = add
            self.mul_table = mul
            self.neg_table = np.array([self._neg_raw(a) for a in range(q)], dtype=np.uint16)
            self.inv_table = np.array(
                [0] + [int(exp[(q - 1 - int(log[a])) % (q - 1)]) for a in range(1, q)],
                dtype=np.uint16,
            )
        else:
            self.add_table = None
            self.mul_table = None
            self.neg_table = None
            self.inv_table = None

    def _add_raw(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.m == 1:
            return (a + b) % self.p
        p = self.p
        out = 0
        mult = 1
        while a or b:
            out += ((a % p + b % p) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def _neg_raw(self, a: int) -> int:
        if self.p == 2:
            return a
        if self.m == 1:
            return (-a) % self.p
        p = self.p
        out = 0
        mult = 1
        while a:
            out += ((p - a % p) % p) * mult
            a //= p
            mult *= p
        return out

    # -- public scalar ops on encodings ----------------------------------

    def check(self, a: int) -> int:
        a = int(a)
        if not 0 <= a < self.q:
            raise ConvinvError(f"encoding {a} outside [0, {self.q})")
        return a

    def add(self, a: int, b: int) -> int:
        if self.add_table is not None:
            return int(self.add_table[a, b])
        return self._add_raw(a, b)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def neg(self, a: int) -> int:
        if self.neg_table is not None:
            return int(self.neg_table[a])
        return self._neg_raw(a)

    def mul(self, a: int, b: int) -> int:
        if self.mul_table is not None:
            return int(self.mul_table[a, b])
        if a == 0 or b == 0:
            return 0
        return int(self.exp[(int(self.log[a]) + int(self.log[b])) % (self.q - 1)])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ConvinvError("zero inverse")
        if self.inv_table is not None:
            return int(self.inv_table[a])
        return int(self.exp[(self.q - 1 - int(self.log[a])) % (self.q - 1)])

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        if a == 0:
            return 0 if e else 1
        return int(self.exp[(int(self.log[a]) * e) % (self.q - 1)])

    # -- element / iteration helpers -------------------------------------

    def element(self, a: int) -> "FieldElement":
        return FieldElement(self, self.check(a))

    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def elements(self) -> Iterator["FieldElement"]:
        for a in range(self.q):
            yield FieldElement(self, a)

    def nonzero(self) -> Iterator[int]:
        return iter(range(1, self.q))

    # -- identity / serialization ----------------------------------------

    def _key(self):
        return (self.p, self.m, self.modulus)

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        if self.m == 1:
            return f"GF({self.q})"
        return f"GF({self.q}; modulus={list(self.modulus)})"

    def to_json(self) -> dict:
        out = {"p": self.p, "m": self.m}
        if self.m > 1:
            out["modulus"] = list(self.modulus)
        return out

    @staticmethod
    def from_json(obj: dict) -> "FieldSpec":
        return get_field(int(obj["p"]), int(obj.get("m", 1)),
                         tuple(obj["modulus"]) if obj.get("modulus") else None)


@functools.lru_cache(maxsize=None)
def get_field(p: int, m: int = 1, modulus: Optional[tuple] = None) -> FieldSpec:
    return FieldSpec(p, m, modulus)


def GF(q: int, modulus: Optional[Sequence[int]] = None) -> FieldSpec:
    """Field of order q; q is factored into p^m."""
    if q < 2:
        raise ConvinvError("field order must be >= 2")
    fac = _factorize(q)
    if len(fac) != 1:
        raise ConvinvError(f"{q} is not a prime power")
    p = fac[0]
    m = 0
    n = q
    while n > 1:
        n //= p
        m += 1
    return get_field(p, m, tuple(modulus) if modulus is not None else None)


class FieldElement:
    """A field element: a spec plus its canonical integer encoding."""

    __slots__ = ("spec", "rep")

    def __init__(self, spec: FieldSpec, rep: int):
        self.spec = spec
        self.rep = spec.check(rep)

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.spec != self.spec:
                raise FieldMismatch("field mismatch")
            return other.rep
        if isinstance(other, int):
            return self.spec.check(other)
        raise TypeError(f"cannot combine FieldElement with {type(other).__name__}")

    def __add__(self, other):
        return FieldElement(self.spec, self.spec.add(self.rep, self._coerce(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.spec, self.spec.sub(self.rep, self._coerce(other)))

    def __rsub__(self, other):
        return FieldElement(self.spec, self.spec.sub(self._coerce(other), self.rep))

    def __neg__(self):
        return FieldElement(self.spec, self.spec.neg(self.rep))

    def __mul__(self, other):
        return FieldElement(self.spec, self.spec.mul(self.rep, self._coerce(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.spec, self.spec.div(self.rep, self._coerce(other)))

    def __rtruediv__(self, other):
        return FieldElement(self.spec, self.spec.div(self._coerce(other), self.rep))

    def __pow__(self, e: int):
        return FieldElement(self.spec, self.spec.pow(self.rep, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.spec, self.spec.inv(self.rep))

    def __int__(self):
        return self.rep

    def __index__(self):
        return self.rep

    def __bool__(self):
        return self.rep != 0

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.spec == other.spec and self.rep == other.rep
        if isinstance(other, int):
            return self.rep == other
        return NotImplemented

    def __hash__(self):
        return hash((self.spec, self.rep))

    def __repr__(self):
        return f"{self.rep}"


def arith(op: str, a: FieldElement, b: FieldElement) -> FieldElement:
    """Dispatch one of 'add', 'sub', 'mul' on two elements of one field."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ConvinvError(f"unknown arithmetic op {op!r}")


def inverse(a: FieldElement) -> FieldElement:
    """Multiplicative inverse; rejects zero."""
    return a.inverse()
