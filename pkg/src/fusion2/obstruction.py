"""The categorifiability decision for the rank-2 fusion rules X*X = 1 + n*X.

The decision chain: a hypothetical category with these fusion rules is
braided (via its double), the braiding block structure forces a ribbon
structure with twist mu^{-1} on X, and for n != 0 the category would be
modular because a symmetric one would need integer dimensions while the
dimension solves d^2 = 1 + n*d.  Modularity ties the twist, a root of
unity, to the dimension through the Gaussian-sum identity; since the
catalog of quadratic ``theta + theta^{-1}`` values is finite, the twist
search is total.  For n >= 2 it is empty and ``n*d > n^2 >= 4 > 2``
certifies impossibility by exact comparison.

Sign convention: designators are matched through ``theta + theta^{-1}
= n*d`` as in the source classification; the Gaussian-sum expansion
itself fixes the symmetric value to ``-n*d`` (see
:func:`gaussian_sum_defect`), and the negation exchanges the two
matching designator sets (theta <-> -theta) without affecting any
verdict, because the certificate chain only bounds absolute values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .exactnum import (
    Ordering,
    QuadraticNumber,
    TwoCosValue,
    qn_compare,
    solve_monic_quadratic,
    two_cos_catalog,
)
from .pentagon import FData2, dim_from_fdata, solve_rank2
from .poly import Poly


class InternalInconsistencyError(RuntimeError):
    """The certificate chain and the catalog search disagreed."""


@dataclass(frozen=True)
class BraidingData:
    """Action of the self-braiding of X on its two multiplicity spaces:
    a nonzero scalar on Hom(1, XX) and a square matrix on Hom(X, XX)."""

    mu: QuadraticNumber
    Lambda: tuple[tuple[QuadraticNumber, ...], ...]

    def __post_init__(self):
        object.__setattr__(
            self, "Lambda", tuple(tuple(row) for row in self.Lambda)
        )
        if self.mu.is_zero():
            raise ValueError("mu must be invertible")
        size = len(self.Lambda)
        if any(len(row) != size for row in self.Lambda):
            raise ValueError("Lambda must be square")


def ribbon_check(b: BraidingData) -> bool:
    """Exact check of the ribbon constraint Lambda^2 = mu * Id."""
    size = len(b.Lambda)
    zero = QuadraticNumber.rational(0)
    for i in range(size):
        for j in range(size):
            entry = zero
            for t in range(size):
                entry = entry + b.Lambda[i][t] * b.Lambda[t][j]
            want = b.mu if i == j else zero
            if entry != want:
                return False
    return True


def twist_of(b: BraidingData) -> QuadraticNumber:
    """The twist on X: the inverse of the braiding scalar mu."""
    return b.mu.inverse()


def symmetric_exclusion(n: int) -> bool:
    """True iff the symmetric case is excluded: d^2 = 1 + n*d has no
    integer root, i.e. n^2 + 4 is not a perfect square (all n except 0)."""
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"n must be a nonnegative integer, got {n!r}")
    radicand = n * n + 4
    root = math.isqrt(radicand)
    return root * root != radicand


def exact_dims(n: int) -> tuple[QuadraticNumber, QuadraticNumber]:
    """Both roots of d^2 = 1 + n*d, the larger (Frobenius-Perron) first."""
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"n must be a nonnegative integer, got {n!r}")
    return solve_monic_quadratic(-n, -1)


def admissible_twists(n: int) -> list[TwoCosValue]:
    """All catalog designators (m, k) with 2*cos(2*pi*k/m) = n*d exactly,
    d running over both roots.  Complete because n*d lies in a quadratic
    field and the catalog exhausts such values of roots of unity.  Empty
    for every n >= 2."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    d_plus, d_minus = exact_dims(n)
    targets = (n * d_plus, n * d_minus)
    return [entry for entry in two_cos_catalog() if entry.value in targets]


@dataclass(frozen=True)
class ObstructionCertificate:
    """Exact witnesses for impossibility at one n: the chosen conjugate
    d with d > n, the product n*d, and its comparison against 2."""

    n: int
    d_plus: QuadraticNumber
    d_minus: QuadraticNumber
    chosen_d: QuadraticNumber
    nd: QuadraticNumber
    bound: int = 2
    comparison_witness: Ordering = Ordering.GT

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "d_plus": str(self.d_plus),
            "d_minus": str(self.d_minus),
            "chosen_d": str(self.chosen_d),
            "nd": str(self.nd),
            "bound": self.bound,
            "comparison": self.comparison_witness.name,
        }


SYMMETRIC_ONLY = "symmetric_only"
ADMISSIBLE_TWISTS = "admissible_twists"
IMPOSSIBLE = "impossible"


@dataclass(frozen=True)
class ObstructionVerdict:
    kind: str
    n: int
    twists: tuple[TwoCosValue, ...] = ()
    certificate: ObstructionCertificate | None = None

    def __post_init__(self):
        if self.kind == IMPOSSIBLE:
            if (
                self.certificate is None
                or self.certificate.comparison_witness is not Ordering.GT
            ):
                raise ValueError("impossibility requires a GT certificate")
        elif self.kind not in (SYMMETRIC_ONLY, ADMISSIBLE_TWISTS):
            raise ValueError(f"unknown verdict kind {self.kind!r}")

    def to_dict(self) -> dict:
        out: dict = {"kind": self.kind, "n": self.n}
        if self.kind == ADMISSIBLE_TWISTS:
            out["twists"] = [
                {"m": t.m, "k": t.k, "value": str(t.value)} for t in self.twists
            ]
        if self.certificate is not None:
            out["certificate"] = self.certificate.to_dict()
        return out


def modular_obstruction(n: int) -> ObstructionVerdict:
    """Decide categorifiability with twists at one n.

    n = 0 admits only the symmetric structures; n = 1 returns the
    nonempty admissible twist list; n >= 2 returns impossibility with an
    exact certificate (d > n and n*d > 2, plus an exhaustive empty twist
    search).  A disagreement between the inequality chain and the catalog
    search raises, since the two must coincide.
    """
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"n must be a nonnegative integer, got {n!r}")
    if n == 0:
        return ObstructionVerdict(kind=SYMMETRIC_ONLY, n=0)
    twists = admissible_twists(n)
    if n == 1:
        if not twists:
            raise InternalInconsistencyError("n = 1 must admit twists")
        return ObstructionVerdict(
            kind=ADMISSIBLE_TWISTS, n=1, twists=tuple(twists)
        )
    d_plus, d_minus = exact_dims(n)
    if qn_compare(d_plus, QuadraticNumber.rational(n)) is not Ordering.GT:
        raise InternalInconsistencyError("d_plus must exceed n")
    nd = n * d_plus
    witness = qn_compare(nd, QuadraticNumber.rational(2))
    if witness is not Ordering.GT:
        raise InternalInconsistencyError("n*d must exceed the twist bound 2")
    if twists:
        raise InternalInconsistencyError(
            "certificate chain and twist search disagree"
        )
    certificate = ObstructionCertificate(
        n=n,
        d_plus=d_plus,
        d_minus=d_minus,
        chosen_d=d_plus,
        nd=nd,
        comparison_witness=witness,
    )
    return ObstructionVerdict(kind=IMPOSSIBLE, n=n, certificate=certificate)


def gaussian_sum_defect(n: int) -> Poly:
    """Reduced form of p_+ p_- - (1 + d^2) with p_± = 1 + theta^{±1} d^2.

    Written in the symbol ``s = theta + theta^{-1}`` (using theta *
    theta^{-1} = 1) and reduced by d^2 = 1 + n*d, the product identity
    p_+ p_- = 1 + d^2 is equivalent to s = -n*d; the returned polynomial
    is the difference p_+ p_- - (1 + d^2) - d^2*(s + n*d), which must be
    identically zero.  Exposed so tests can confirm the algebra once and
    for all n.
    """
    s, d = Poly.var("s"), Poly.var("d")
    product_minus_dim = s * d ** 2 + d ** 4 - d ** 2  # p+p- - (1 + d^2)
    defect = product_minus_dim - d ** 2 * (s + n * d)
    return _reduce_d_squared(defect, n)


def _reduce_d_squared(p: Poly, n: int) -> Poly:
    """Rewrite modulo d^2 = 1 + n*d until every d-degree is < 2."""
    while True:
        for mono, coeff in p.terms.items():
            exps = dict(mono)
            if exps.get("d", 0) >= 2:
                rest = tuple(
                    (name, e if name != "d" else e - 2) for name, e in mono
                )
                rest = tuple((name, e) for name, e in rest if e > 0)
                replacement = Poly({rest: coeff}) * (Poly.var("d") * n + 1)
                p = Poly({m: c for m, c in p.terms.items() if m != mono}) + replacement
                break
        else:
            return p


def verify_gaussian_identity(n: int) -> bool:
    """True iff the Gaussian-sum equivalence reduces to zero identically."""
    return gaussian_sum_defect(n).is_zero()


@dataclass(frozen=True)
class CategorificationDescriptor:
    """One categorification: its associator data and the dimension of X."""

    n: int
    label: str
    fdata: FData2
    dim: QuadraticNumber

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "label": self.label,
            "fdata": self.fdata.to_dict(),
            "dim": str(self.dim),
        }


def classify_rank2(n: int) -> list[CategorificationDescriptor]:
    """Categorifications of the fusion rules at one n.

    Two for n = 0 (associator signs, an order-2 group of choices), two
    for n = 1 (the coherent associator solutions, swapped by the field
    involution), none for n >= 2, where the impossibility certificate is
    available from :func:`modular_obstruction`.
    """
    verdict = modular_obstruction(n)
    if verdict.kind == IMPOSSIBLE:
        return []
    out = []
    for f in solve_rank2(0 if verdict.kind == SYMMETRIC_ONLY else 1):
        dim = dim_from_fdata(f)
        if f.n == 0:
            label = f"associator sign {f.alpha}"
        else:
            label = f"associator root a = {f.M[0][0]}"
        out.append(CategorificationDescriptor(n=n, label=label, fdata=f, dim=dim))
    return out
