"""Unital based rings with duality (fusion rings) and their arithmetic.

A ring is stored as its rank, basis labels, duality involution and the
structure tensor ``N[a][b][c]`` (multiplicity of basis element c in a*b).
:func:`validate` checks the axiom families actually used downstream: unit
law, associativity, duality normalization ``N[a][b][0] = delta(b, a*)``,
dual compatibility and involutivity.  Further axioms of the general
based-ring definition in the literature are not enforced; nothing here
depends on them.

Frobenius-Perron dimensions are exact quadratic numbers whenever the
relevant characteristic polynomial resolves within one quadratic field
(always at rank <= 2, and for external products of such rings over the
same field); otherwise they are certified intervals of width <= 1e-30
obtained from Sturm-sequence bisection, never floating point.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable

from .exactnum import QuadraticNumber, IncompatibleFieldError, solve_monic_quadratic

Tensor = tuple[tuple[tuple[int, ...], ...], ...]


class RingMismatchError(ValueError):
    """Elements of different rings combined in one operation."""


@dataclass(frozen=True)
class AxiomViolation:
    axiom: str
    index: tuple[int, ...]
    message: str

    def __str__(self) -> str:
        return f"{self.axiom} at {self.index}: {self.message}"


def _as_tensor(N) -> Tensor:
    return tuple(tuple(tuple(int(x) for x in row) for row in plane) for plane in N)


@dataclass(frozen=True)
class FusionRing:
    """Immutable based ring with duality; the unit has index 0."""

    rank: int
    labels: tuple[str, ...]
    dual: tuple[int, ...]
    N: Tensor
    # provenance of an external product, used for exact dimension lookup;
    # not part of ring identity or serialization
    factors: tuple[FusionRing, FusionRing] | None = field(
        default=None, compare=False, repr=False
    )

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(str(s) for s in self.labels))
        object.__setattr__(self, "dual", tuple(int(i) for i in self.dual))
        object.__setattr__(self, "N", _as_tensor(self.N))
        r = self.rank
        if not isinstance(r, int) or r < 1:
            raise ValueError(f"rank must be a positive integer, got {r!r}")
        if len(self.labels) != r or len(set(self.labels)) != r:
            raise ValueError("labels must be rank distinct strings")
        if sorted(self.dual) != list(range(r)):
            raise ValueError("dual must be a permutation of the basis indices")
        if len(self.N) != r or any(
            len(plane) != r or any(len(row) != r for row in plane)
            for plane in self.N
        ):
            raise ValueError("structure tensor must be rank x rank x rank")
        if any(x < 0 for plane in self.N for row in plane for x in row):
            raise ValueError("structure constants must be nonnegative")

    # -- elements -------------------------------------------------------

    def element(self, coeffs: Iterable[int]) -> RingElement:
        return RingElement(self, tuple(int(c) for c in coeffs))

    def basis_element(self, i: int) -> RingElement:
        return self.element(tuple(1 if j == i else 0 for j in range(self.rank)))

    @property
    def unit(self) -> RingElement:
        return self.basis_element(0)

    def left_multiplication_matrix(self, b: int) -> list[list[int]]:
        """Matrix of x -> basis[b] * x on coefficient columns."""
        return [[self.N[b][a][c] for a in range(self.rank)] for c in range(self.rank)]

    def __str__(self) -> str:
        return f"FusionRing(rank={self.rank}, labels={list(self.labels)})"


@dataclass(frozen=True)
class RingElement:
    """Integer linear combination of basis elements; may be virtual."""

    ring: FusionRing
    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        if len(self.coeffs) != self.ring.rank:
            raise ValueError("coefficient vector length must equal the rank")

    def _check_ring(self, other: RingElement) -> None:
        if self.ring != other.ring:
            raise RingMismatchError("elements belong to different rings")

    def __add__(self, other: RingElement) -> RingElement:
        self._check_ring(other)
        return RingElement(
            self.ring, tuple(x + y for x, y in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other: RingElement) -> RingElement:
        self._check_ring(other)
        return RingElement(
            self.ring, tuple(x - y for x, y in zip(self.coeffs, other.coeffs))
        )

    def __mul__(self, other):
        if isinstance(other, int):
            return RingElement(self.ring, tuple(other * x for x in self.coeffs))
        if isinstance(other, RingElement):
            return multiply(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def dual_class(self) -> RingElement:
        """Coefficients permuted by the duality involution."""
        c = [0] * self.ring.rank
        for i, x in enumerate(self.coeffs):
            c[self.ring.dual[i]] = x
        return RingElement(self.ring, tuple(c))

    def describe(self) -> str:
        parts = [
            f"{c}*{lbl}" for c, lbl in zip(self.coeffs, self.ring.labels) if c
        ]
        return " + ".join(parts) if parts else "0"


def multiply(x: RingElement, y: RingElement) -> RingElement:
    """Bilinear product via the structure tensor."""
    x._check_ring(y)
    r = x.ring.rank
    N = x.ring.N
    out = [0] * r
    for a, xa in enumerate(x.coeffs):
        if not xa:
            continue
        for b, yb in enumerate(y.coeffs):
            if not yb:
                continue
            row = N[a][b]
            for c in range(r):
                if row[c]:
                    out[c] += xa * yb * row[c]
    return RingElement(x.ring, tuple(out))


def hom_dim(x: RingElement, y: RingElement) -> int:
    """Dimension of Hom between the semisimple objects with classes x, y.

    For classes of actual objects this is the coefficientwise dot product;
    virtual (negative) classes are rejected.
    """
    x._check_ring(y)
    if any(c < 0 for c in x.coeffs) or any(c < 0 for c in y.coeffs):
        raise ValueError("hom_dim requires nonnegative classes")
    return sum(a * b for a, b in zip(x.coeffs, y.coeffs))


def validate(ring: FusionRing) -> list[AxiomViolation]:
    """Exhaustive axiom check; the report is empty iff the ring is valid."""
    out: list[AxiomViolation] = []
    r, N, dual = ring.rank, ring.N, ring.dual

    for b in range(r):
        for c in range(r):
            want = 1 if b == c else 0
            if N[0][b][c] != want:
                out.append(AxiomViolation(
                    "unit-law", (0, b, c),
                    f"N[0][{b}][{c}] = {N[0][b][c]}, expected {want}",
                ))
    for a in range(r):
        for c in range(r):
            want = 1 if a == c else 0
            if N[a][0][c] != want:
                out.append(AxiomViolation(
                    "unit-law", (a, 0, c),
                    f"N[{a}][0][{c}] = {N[a][0][c]}, expected {want}",
                ))

    for a in range(r):
        for b in range(r):
            for c in range(r):
                for d in range(r):
                    lhs = sum(N[a][b][e] * N[e][c][d] for e in range(r))
                    rhs = sum(N[b][c][f] * N[a][f][d] for f in range(r))
                    if lhs != rhs:
                        out.append(AxiomViolation(
                            "associativity", (a, b, c, d), f"{lhs} != {rhs}"
                        ))

    for a in range(r):
        for b in range(r):
            want = 1 if b == dual[a] else 0
            if N[a][b][0] != want:
                out.append(AxiomViolation(
                    "duality", (a, b, 0),
                    f"N[{a}][{b}][0] = {N[a][b][0]}, expected {want}",
                ))

    for a in range(r):
        for b in range(r):
            for c in range(r):
                if N[a][b][c] != N[dual[b]][dual[a]][dual[c]]:
                    out.append(AxiomViolation(
                        "dual-compatibility", (a, b, c),
                        f"N[{a}][{b}][{c}] = {N[a][b][c]} != "
                        f"N[{dual[b]}][{dual[a]}][{dual[c]}] = "
                        f"{N[dual[b]][dual[a]][dual[c]]}",
                    ))

    if dual[0] != 0:
        out.append(AxiomViolation("involution", (0,), "dual must fix the unit"))
    for a in range(r):
        if dual[dual[a]] != a:
            out.append(AxiomViolation("involution", (a,), "dual is not involutive"))

    return out


def make_kn(n: int) -> FusionRing:
    """The rank-2 ring with X*X = 1 + n*X on the basis (1, X)."""
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"n must be a nonnegative integer, got {n!r}")
    N = (
        ((1, 0), (0, 1)),
        ((0, 1), (1, n)),
    )
    return FusionRing(rank=2, labels=("1", "X"), dual=(0, 1), N=N)


def boxtimes(R: FusionRing, S: FusionRing) -> FusionRing:
    """External product; basis pairs ordered lexicographically, R-major."""
    for ring in (R, S):
        report = validate(ring)
        if report:
            raise ValueError(f"invalid input ring: {report[0]}")
    rr, rs = R.rank, S.rank
    rank = rr * rs

    def flat(i: int, j: int) -> int:
        return i * rs + j

    labels = tuple(
        f"{R.labels[i]}⊠{S.labels[j]}" for i in range(rr) for j in range(rs)
    )
    dual = tuple(
        flat(R.dual[i], S.dual[j]) for i in range(rr) for j in range(rs)
    )
    N = [[[0] * rank for _ in range(rank)] for _ in range(rank)]
    for a1 in range(rr):
        for a2 in range(rs):
            for b1 in range(rr):
                for b2 in range(rs):
                    for c1 in range(rr):
                        if not R.N[a1][b1][c1]:
                            continue
                        for c2 in range(rs):
                            N[flat(a1, a2)][flat(b1, b2)][flat(c1, c2)] = (
                                R.N[a1][b1][c1] * S.N[a2][b2][c2]
                            )
    return FusionRing(rank=rank, labels=labels, dual=dual, N=_as_tensor(N),
                      factors=(R, S))


# -- ring homomorphisms ----------------------------------------------------


@dataclass(frozen=True)
class RingHom:
    """Basis-indexed map into nonnegative classes of the target ring."""

    source: FusionRing
    target: FusionRing
    images: tuple[RingElement, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if len(self.images) != self.source.rank:
            raise ValueError("one image per source basis element required")
        for img in self.images:
            if img.ring != self.target:
                raise ValueError("images must live in the target ring")
            if any(c < 0 for c in img.coeffs):
                raise ValueError("images must have nonnegative coefficients")

    def apply(self, x: RingElement) -> RingElement:
        if x.ring != self.source:
            raise RingMismatchError("element not in the source ring")
        out = self.target.element((0,) * self.target.rank)
        for i, c in enumerate(x.coeffs):
            out = out + c * self.images[i]
        return out


@dataclass(frozen=True)
class HomViolation:
    kind: str
    index: tuple[int, ...]
    message: str

    def __str__(self) -> str:
        return f"{self.kind} at {self.index}: {self.message}"


def check_hom(h: RingHom) -> list[HomViolation]:
    """Verify unit preservation and multiplicativity on all basis pairs."""
    out: list[HomViolation] = []
    if h.images[0] != h.target.unit:
        out.append(HomViolation(
            "unit", (0,), f"image of the unit is {h.images[0].coeffs}"
        ))
    r = h.source.rank
    for a in range(r):
        for b in range(r):
            lhs = multiply(h.images[a], h.images[b])
            rhs = h.target.element((0,) * h.target.rank)
            for c in range(r):
                rhs = rhs + h.source.N[a][b][c] * h.images[c]
            if lhs != rhs:
                out.append(HomViolation(
                    "multiplicativity", (a, b),
                    f"h(a)h(b) = {lhs.coeffs} but h(ab) = {rhs.coeffs}",
                ))
    return out


# -- Frobenius-Perron dimensions -------------------------------------------

_WIDTH = Fraction(1, 10**30)


@dataclass(frozen=True)
class CertifiedDecimal:
    """Interval certificate [lo, hi] for a real algebraic number."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.hi < self.lo:
            raise ValueError("empty interval")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, x) -> bool:
        """Exact membership test for a rational or quadratic number."""
        if isinstance(x, QuadraticNumber):
            return (x >= QuadraticNumber.rational(self.lo)
                    and x <= QuadraticNumber.rational(self.hi))
        return self.lo <= x <= self.hi

    def __str__(self) -> str:
        from decimal import Decimal, localcontext

        with localcontext() as ctx:
            ctx.prec = 40
            mid = (
                Decimal(self.lo.numerator) / Decimal(self.lo.denominator)
                + Decimal(self.hi.numerator) / Decimal(self.hi.denominator)
            ) / 2
        bound = self.width / 2
        if bound == 0:
            return f"{+mid} (exact)"
        exp = 0
        while bound < 1:
            bound *= 10
            exp += 1
        return f"{+mid} (+/- 1e-{exp})"


# polynomial helpers on Fraction coefficient lists, index = degree


def _poly_trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_eval(p: list[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _poly_deriv(p: list[Fraction]) -> list[Fraction]:
    return _poly_trim([i * c for i, c in enumerate(p)][1:])


def _poly_divmod(a: list[Fraction], b: list[Fraction]):
    a = list(a)
    b = _poly_trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    _poly_trim(a)
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        coef = a[-1] / b[-1]
        q[shift] = coef
        for i, c in enumerate(b):
            a[shift + i] -= coef * c
        _poly_trim(a)
    return _poly_trim(q), a


def _poly_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a, b = _poly_trim(list(a)), _poly_trim(list(b))
    while b:
        _, r = _poly_divmod(a, b)
        a, b = b, r
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def characteristic_polynomial(mat: list[list[int]]) -> list[Fraction]:
    """Monic characteristic polynomial via the Faddeev-LeVerrier recursion."""
    n = len(mat)
    A = [[Fraction(x) for x in row] for row in mat]
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    M = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    for k in range(1, n + 1):
        AM = [
            [sum(A[i][t] * M[t][j] for t in range(n)) for j in range(n)]
            for i in range(n)
        ]
        c = -sum(AM[i][i] for i in range(n)) / k
        coeffs[n - k] = c
        M = [[AM[i][j] + (c if i == j else 0) for j in range(n)] for i in range(n)]
    return coeffs


def _squarefree_part(p: list[Fraction]) -> list[Fraction]:
    g = _poly_gcd(list(p), _poly_deriv(list(p)))
    q, r = _poly_divmod(list(p), g)
    assert not r, "gcd must divide the polynomial"
    lead = q[-1]
    return [c / lead for c in q]


def _divisors(n: int) -> list[int]:
    out = []
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            if i != n // i:
                out.append(n // i)
        i += 1
    return sorted(out)


def _rational_roots(p: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    """Deflate all rational roots; return (roots, residual monic polynomial)."""
    roots: list[Fraction] = []
    poly = _poly_trim(list(p))
    while len(poly) > 1:
        found = None
        if poly[0] == 0:
            found = Fraction(0)
        else:
            den = lcm(*[c.denominator for c in poly])
            ip = [int(c * den) for c in poly]
            content = 0
            for c in ip:
                content = gcd(content, c)
            ip = [c // content for c in ip]
            for pdiv in _divisors(abs(ip[0])):
                for qdiv in _divisors(abs(ip[-1])):
                    for cand in (Fraction(pdiv, qdiv), Fraction(-pdiv, qdiv)):
                        if _poly_eval(poly, cand) == 0:
                            found = cand
                            break
                    if found is not None:
                        break
                if found is not None:
                    break
        if found is None:
            break
        roots.append(found)
        poly, rem = _poly_divmod(poly, [-found, Fraction(1)])
        assert not rem
    if poly:
        lead = poly[-1]
        poly = [c / lead for c in poly]
    return roots, poly


def _sturm_chain(p: list[Fraction]) -> list[list[Fraction]]:
    chain = [_poly_trim(list(p)), _poly_deriv(list(p))]
    while chain[-1]:
        _, r = _poly_divmod(chain[-2], chain[-1])
        if not r:
            break
        chain.append([-c for c in r])
    return [c for c in chain if c]


def _sign_changes(chain: list[list[Fraction]], x: Fraction) -> int:
    signs = []
    for p in chain:
        v = _poly_eval(p, x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _roots_in(chain, a: Fraction, b: Fraction) -> int:
    """Number of distinct real roots in (a, b] for a squarefree polynomial."""
    return _sign_changes(chain, a) - _sign_changes(chain, b)


def _largest_eigenvalue(mat: list[list[int]]) -> QuadraticNumber | CertifiedDecimal:
    """Largest real eigenvalue, exact when it lives in a quadratic field."""
    charpoly = characteristic_polynomial(mat)
    sf = _squarefree_part(charpoly)
    rational, residual = _rational_roots(sf)
    candidates = [QuadraticNumber.rational(r) for r in rational]
    deg = len(residual) - 1
    if deg <= 0:
        if not candidates:
            raise ValueError("matrix has no real eigenvalue")
        return max(candidates)
    if deg == 1:
        candidates.append(QuadraticNumber.rational(-residual[0]))
        return max(candidates)
    if deg == 2:
        r_plus, r_minus = solve_monic_quadratic(residual[1], residual[0])
        return max(candidates + [r_plus, r_minus])

    # degree >= 3 residual: certify its largest root by Sturm bisection and
    # decide against the rational candidates exactly
    chain = _sturm_chain(residual)
    bound = Fraction(1) + max(abs(c) for c in residual[:-1])
    best_rational = max((r.to_fraction() for r in candidates), default=None)
    if best_rational is not None and _roots_in(chain, best_rational, bound) == 0:
        return QuadraticNumber.rational(best_rational)
    lo, hi = -bound, bound
    if best_rational is not None:
        lo = max(lo, best_rational)  # a residual root lies above it
    if _roots_in(chain, lo, hi) == 0:
        raise ValueError("matrix has no real eigenvalue")
    while hi - lo > _WIDTH:
        mid = (lo + hi) / 2
        if _roots_in(chain, mid, hi) >= 1:
            lo = mid
        else:
            hi = mid
    return CertifiedDecimal(lo, hi)


def fp_dims(ring: FusionRing) -> list[QuadraticNumber | CertifiedDecimal]:
    """Frobenius-Perron dimension of each basis element.

    Exact quadratic numbers at rank <= 2, for external products whose
    factor dimensions lie in one field, and whenever the characteristic
    polynomial splits into rational factors and one quadratic piece;
    certified Sturm intervals of width <= 1e-30 otherwise.
    """
    report = validate(ring)
    if report:
        raise ValueError(f"invalid ring: {report[0]}")

    if ring.factors is not None:
        R, S = ring.factors
        try:
            dR = fp_dims(R)
            dS = fp_dims(S)
            if all(isinstance(d, QuadraticNumber) for d in dR + dS):
                return [x * y for x in dR for y in dS]
        except IncompatibleFieldError:
            pass  # factor fields differ: fall back to the matrix route

    out: list[QuadraticNumber | CertifiedDecimal] = []
    for b in range(ring.rank):
        mat = ring.left_multiplication_matrix(b)
        if ring.rank == 1:
            out.append(QuadraticNumber.rational(mat[0][0]))
        elif ring.rank == 2:
            tr = Fraction(mat[0][0] + mat[1][1])
            det = Fraction(mat[0][0] * mat[1][1] - mat[0][1] * mat[1][0])
            root_plus, _ = solve_monic_quadratic(-tr, det)
            out.append(root_plus)
        else:
            out.append(_largest_eigenvalue(mat))
    return out


def element_dim(x: RingElement, dims) -> QuadraticNumber:
    """Dimension of a class given exact basis dimensions."""
    total = QuadraticNumber.rational(0)
    for c, d in zip(x.coeffs, dims):
        total = total + c * d
    return total


# -- interchange format ------------------------------------------------------


def ring_to_dict(ring: FusionRing) -> dict:
    return {
        "rank": ring.rank,
        "labels": list(ring.labels),
        "dual": list(ring.dual),
        "N": [[list(row) for row in plane] for plane in ring.N],
    }


def ring_from_dict(data: dict) -> FusionRing:
    if not isinstance(data, dict):
        raise ValueError("ring document must be an object")
    missing = {"rank", "labels", "dual", "N"} - set(data)
    if missing:
        raise ValueError(f"ring document missing fields: {sorted(missing)}")
    return FusionRing(
        rank=int(data["rank"]),
        labels=tuple(data["labels"]),
        dual=tuple(data["dual"]),
        N=_as_tensor(data["N"]),
    )


def ring_to_json(ring: FusionRing) -> str:
    return json.dumps(ring_to_dict(ring), ensure_ascii=False, indent=2) + "\n"


def ring_from_json(text: str) -> FusionRing:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ValueError(f"invalid JSON: {e}") from e
    return ring_from_dict(data)
