"""Decision procedures for maps between convolutional codes.

A CodeMap is a module isomorphism given by the images of the domain's
row-reduced basis rows.  The checkers classify it: agreement with some
constant monomial map on all windows up to j (j-equivalence), on every
window (equivalence), exact equality with a monomial map allowing shifts
(isometry), and degree preservation on top of that (strong isometry,
verified up to a probe bound).  All witness searches are exhaustive and
deterministic: candidates are ordered by shift radius first, then
permutation, then scalars, so the reported witness never depends on
timing or thread count.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field as dc_field

from .errors import (
    BudgetExceeded,
    FieldMismatch,
    MapInvalid,
    OrderOutOfRange,
    RankDeficient,
)
from .poly import PolyMatrix, PolyVector, Polynomial
from .structure import ConvCode, express_in_basis

DEFAULT_MAP_BUDGET = 10_000_000


@dataclass(frozen=True)
class MonomialMap:
    """The map v -> (a_0 x^{m_0} v[perm[0]], ..., a_{n-1} x^{m_{n-1}} v[perm[n-1]]).

    ``perm`` lists, per output coordinate, the source coordinate it reads;
    scalars are nonzero field encodings; a map with all shifts zero is
    constant and commutes with truncation.
    """

    perm: tuple[int, ...]
    scalars: tuple[int, ...]
    shifts: tuple[int, ...]

    def __post_init__(self):
        n = len(self.perm)
        if sorted(self.perm) != list(range(n)):
            raise MapInvalid(f"perm {self.perm} is not a permutation of 0..{n - 1}")
        if len(self.scalars) != n or len(self.shifts) != n:
            raise MapInvalid("perm, scalars, and shifts must have equal length")
        if any(a == 0 for a in self.scalars):
            raise MapInvalid("monomial map scalars must be nonzero")

    @property
    def constant(self) -> bool:
        return all(m == 0 for m in self.shifts)

    def apply(self, vec: PolyVector) -> PolyVector:
        entries = []
        for c in range(len(self.perm)):
            e = vec.entries[self.perm[c]] * self.scalars[c]
            entries.append(e.shift(self.shifts[c]))
        return PolyVector(vec.field, entries)

    def to_json(self) -> dict:
        return {
            "perm": list(self.perm),
            "scalars": list(self.scalars),
            "shifts": list(self.shifts),
        }


class CodeMap:
    """A module isomorphism domain -> codomain, fixed by basis images.

    ``images[i]`` is the image of the i-th row of the domain's row-reduced
    basis.  Construction checks that the images lie in the codomain and
    generate it, so the induced map is an isomorphism of equal-rank
    modules.
    """

    def __init__(self, domain: ConvCode, codomain: ConvCode, images):
        if domain.field != codomain.field:
            raise FieldMismatch("domain and codomain live over different fields")
        if domain.n != codomain.n:
            raise MapInvalid(
                f"domain and codomain widths differ: {domain.n} != {codomain.n}"
            )
        if domain.k != codomain.k:
            raise MapInvalid(
                f"domain and codomain ranks differ: {domain.k} != {codomain.k}"
            )
        images = [
            im if isinstance(im, PolyVector) else PolyVector(domain.field, im)
            for im in images
        ]
        if len(images) != domain.k:
            raise MapInvalid(f"expected {domain.k} images, got {len(images)}")
        for i, im in enumerate(images):
            if im.n != domain.n:
                raise MapInvalid(f"image {i} has width {im.n}, expected {domain.n}")
            if not codomain.contains(im):
                raise MapInvalid(f"image {i} does not lie in the codomain")
        try:
            image_module = ConvCode(PolyMatrix(domain.field, images))
        except RankDeficient:
            raise MapInvalid("the images are linearly dependent") from None
        if not image_module.same_module(codomain):
            raise MapInvalid("the images do not generate the codomain")
        self.domain = domain
        self.codomain = codomain
        self.images = images

    def apply(self, vec: PolyVector) -> PolyVector:
        coords = self.domain.coordinates(vec)
        if coords is None:
            raise MapInvalid("vector does not lie in the domain")
        out = PolyVector(self.domain.field, [Polynomial(self.domain.field)] * self.domain.n)
        for p, im in zip(coords, self.images):
            out = out + im * p
        return out

    def __repr__(self):
        return f"CodeMap(domain={self.domain!r}, codomain={self.codomain!r})"


def identity_map(code: ConvCode) -> CodeMap:
    return CodeMap(code, code, list(code.rowred.rows))


@dataclass
class MapVerdict:
    """Outcome of a checker: verdict in {"true", "false", "inconclusive"},
    the found witness if any, and checker-specific details in meta."""

    check: str
    verdict: str
    witness: MonomialMap | None = None
    meta: dict = dc_field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.verdict == "true"

    def to_json(self) -> dict:
        out = {"check": self.check, "verdict": self.verdict}
        out["witness"] = self.witness.to_json() if self.witness else None
        out.update(self.meta)
        return out


def _map_budget(budget: int | None) -> int:
    return DEFAULT_MAP_BUDGET if budget is None else int(budget)


def check_j_equivalence(
    phi: CodeMap, j: int, *, budget: int | None = None
) -> MapVerdict:
    """Is there a constant monomial map agreeing with phi on windows 0..j?

    Exhausts all n!(q-1)^n constant monomial maps and tests agreement with
    the basis images on the truncated window; agreement on a basis extends
    linearly because truncation commutes with constant maps, so the test
    is an exact decision.  Permutations run in lexicographic order and
    scalar vectors in field-encoding order; the first hit is the witness.
    """
    if j < 0:
        raise OrderOutOfRange(f"window index must be nonnegative, got {j}")
    n, q = phi.domain.n, phi.domain.field.q
    count = math.factorial(n) * (q - 1) ** n
    limit = _map_budget(budget)
    if count > limit:
        raise BudgetExceeded(
            "constant monomial map enumeration exceeds the budget",
            needed=count, limit=limit,
        )
    basis = [row.truncate(0, j) for row in phi.domain.rowred.rows]
    images = [im.truncate(0, j) for im in phi.images]
    for perm in itertools.permutations(range(n)):
        for scalars in itertools.product(range(1, q), repeat=n):
            cand = MonomialMap(perm, scalars, (0,) * n)
            if all(cand.apply(b) == im for b, im in zip(basis, images)):
                return MapVerdict("jequiv", "true", cand, {"j": j})
    return MapVerdict("jequiv", "false", None, {"j": j})


def check_equivalence(phi: CodeMap, *, budget: int | None = None) -> MapVerdict:
    """Is phi a j-equivalence for every j?

    Agreement with a constant monomial map up to the largest degree among
    basis rows and images forces agreement everywhere (all higher
    coefficient slices are zero on both sides), so one j-equivalence check
    at that index decides it.
    """
    t = max(
        [row.deg for row in phi.domain.rowred.rows] + [im.deg for im in phi.images]
    )
    t = max(t, 0)
    res = check_j_equivalence(phi, t, budget=budget)
    return MapVerdict("equiv", res.verdict, res.witness, {"j": t})


def _derive_column(basis, images, src: int, dst: int):
    """The unique (scalar, shift) making image column dst equal the shifted
    scaled source column src on every basis row, or None; all-zero column
    pairs yield the canonical (1, 0)."""
    f = basis[0].field
    a = m = None
    for row, im in zip(basis, images):
        s, d = row.entries[src], im.entries[dst]
        if s.is_zero() != d.is_zero():
            return None
        if a is None and not s.is_zero():
            m = d.deg - s.deg
            a = f.div(d.coeffs[-1], s.coeffs[-1])
    if a is None:
        return 1, 0
    for row, im in zip(basis, images):
        s, d = row.entries[src], im.entries[dst]
        if s.is_zero():
            continue
        if d.deg - s.deg != m:
            return None
        # compare on the side shifted upward so no divisibility is assumed
        if m >= 0:
            if (s * a).shift(m) != d:
                return None
        elif d.shift(-m) != s * a:
            return None
    return a, m


def check_isometry(phi: CodeMap, *, budget: int | None = None) -> MapVerdict:
    """Is phi given by a monomial map with integer shifts, exactly?

    Such a map permutes, scales, and shifts coordinates, so it preserves
    weights on all of the ambient module; matching all basis images
    therefore decides the matter.  For each permutation the scalar and
    shift of every output column are forced by the first basis row with a
    nonzero source entry, so the search space is the permutations alone;
    among the matches, the witness with the smallest largest shift
    magnitude wins, with permutation order breaking ties.
    """
    n, q = phi.domain.n, phi.domain.field.q
    degs = [row.deg for row in phi.domain.rowred.rows] + [im.deg for im in phi.images]
    M = max(max(degs), 0) + phi.domain.delta1
    count = math.factorial(n) * ((q - 1) * (2 * M + 1)) ** n
    limit = _map_budget(budget)
    if count > limit:
        raise BudgetExceeded(
            "monomial map enumeration exceeds the budget", needed=count, limit=limit
        )
    basis = list(phi.domain.rowred.rows)
    found: list[tuple[int, int, MonomialMap]] = []
    for idx, perm in enumerate(itertools.permutations(range(n))):
        scalars, shifts = [], []
        for dst in range(n):
            got = _derive_column(basis, phi.images, perm[dst], dst)
            if got is None:
                break
            scalars.append(got[0])
            shifts.append(got[1])
        else:
            cand = MonomialMap(tuple(perm), tuple(scalars), tuple(shifts))
            radius = max((abs(m) for m in cand.shifts), default=0)
            found.append((radius, idx, cand))
    if not found:
        return MapVerdict("isometry", "false")
    _, _, witness = min(found, key=lambda t: (t[0], t[1]))
    return MapVerdict("isometry", "true", witness)


def check_strong_isometry(
    phi: CodeMap, probe_bound: int | None = None, *, budget: int | None = None
) -> MapVerdict:
    """Does phi also preserve the degree of every codeword?

    Requires an isometry; a constant witness settles it outright (degrees
    are untouched), otherwise every codeword with message degree up to the
    probe bound (default memory + 2) is checked.  A violation is a proof
    of "false"; a clean sweep reports "true" without certification, and a
    probe too large for the budget reports "inconclusive".
    """
    iso = check_isometry(phi, budget=budget)
    if not iso.ok:
        return MapVerdict("strong", "false", None, {"reason": "not an isometry"})
    if iso.witness.constant:
        return MapVerdict(
            "strong", "true", iso.witness, {"certified": True, "probe_bound": None}
        )
    B = phi.domain.delta1 + 2 if probe_bound is None else int(probe_bound)
    if B < 0:
        raise OrderOutOfRange(f"probe bound must be nonnegative, got {B}")
    f = phi.domain.field
    k = phi.domain.k
    width = k * (B + 1)
    count = f.q**width - 1
    limit = _map_budget(budget)
    if count > limit:
        return MapVerdict(
            "strong", "inconclusive", iso.witness,
            {"certified": False, "probe_bound": B, "needed": count, "limit": limit},
        )
    basis = list(phi.domain.rowred.rows)
    for m in range(1, count + 1):
        digits = []
        t = m
        for _ in range(width):
            digits.append(t % f.q)
            t //= f.q
        c = PolyVector(f, [Polynomial(f)] * phi.domain.n)
        img = PolyVector(f, [Polynomial(f)] * phi.domain.n)
        for i in range(k):
            p = Polynomial(f, digits[i * (B + 1) : (i + 1) * (B + 1)])
            if p.is_zero():
                continue
            c = c + basis[i] * p
            img = img + phi.images[i] * p
        if c.deg != img.deg:
            return MapVerdict(
                "strong", "false", iso.witness,
                {"probe_bound": B,
                 "counterexample": {"codeword": c.to_json(), "image": img.to_json()}},
            )
    return MapVerdict(
        "strong", "true", iso.witness, {"certified": False, "probe_bound": B}
    )


# ---------------------------------------------------------------------------
# map algebra


def inverse(phi: CodeMap) -> CodeMap:
    """The inverse isomorphism codomain -> domain."""
    mat = PolyMatrix(phi.domain.field, phi.images)
    images = []
    for row in phi.codomain.rowred.rows:
        coords = express_in_basis(row, mat)
        if coords is None:  # pragma: no cover - images generate the codomain
            raise MapInvalid("codomain basis row not reachable from the images")
        out = PolyVector(phi.domain.field, [Polynomial(phi.domain.field)] * phi.domain.n)
        for p, b in zip(coords, phi.domain.rowred.rows):
            out = out + b * p
        images.append(out)
    return CodeMap(phi.codomain, phi.domain, images)


def compose(outer: CodeMap, inner: CodeMap) -> CodeMap:
    """The map outer(inner(.)): inner.domain -> outer.codomain."""
    if not inner.codomain.same_module(outer.domain):
        raise MapInvalid("inner codomain does not match outer domain")
    return CodeMap(
        inner.domain, outer.codomain, [outer.apply(im) for im in inner.images]
    )


def restrict(phi: CodeMap, subcode: ConvCode) -> CodeMap:
    """phi restricted to a subcode of its domain, onto its image module."""
    images = []
    for row in subcode.rowred.rows:
        if not phi.domain.contains(row):
            raise MapInvalid("subcode is not contained in the domain")
        images.append(phi.apply(row))
    image_module = ConvCode(PolyMatrix(phi.domain.field, images))
    return CodeMap(subcode, image_module, images)


def _pad(vec: PolyVector, left: int, right: int) -> PolyVector:
    f = vec.field
    zeros_l = [Polynomial(f)] * left
    zeros_r = [Polynomial(f)] * right
    return PolyVector(f, zeros_l + list(vec.entries) + zeros_r)


def product_code(a: ConvCode, b: ConvCode) -> ConvCode:
    """The direct product, living in width n_a + n_b."""
    if a.field != b.field:
        raise FieldMismatch("product factors live over different fields")
    rows = [_pad(r, 0, b.n) for r in a.rowred.rows]
    rows += [_pad(r, a.n, 0) for r in b.rowred.rows]
    return ConvCode(PolyMatrix(a.field, rows))


def product(phi: CodeMap, psi: CodeMap) -> CodeMap:
    """The product map on the direct product of domains and codomains.

    Every element of the product splits uniquely into its factor parts, so
    the image of a basis row is the pair of factor images; the split keeps
    the construction correct even though row reduction of the product may
    reorder or mix the padded factor rows."""
    dom = product_code(phi.domain, psi.domain)
    cod = product_code(phi.codomain, psi.codomain)
    na = phi.domain.n
    f = phi.domain.field
    images = []
    for row in dom.rowred.rows:
        u = PolyVector(f, list(row.entries[:na]))
        v = PolyVector(f, list(row.entries[na:]))
        images.append(_pad(phi.apply(u), 0, psi.domain.n) + _pad(psi.apply(v), na, 0))
    return CodeMap(dom, cod, images)


def map_algebra(op: str, *args) -> CodeMap:
    """Dispatch for the four constructions on code maps."""
    table = {
        "inverse": inverse,
        "compose": compose,
        "restrict": restrict,
        "product": product,
    }
    if op not in table:
        raise ValueError(f"unknown map operation {op!r}")
    return table[op](*args)
