"""Associativity data for the skeletal rank-2 categories with n in {0, 1}.

Conventions, fixed once: simple objects 1 and X; the associator maps
(A(x)B)(x)C -> A(x)(B(x)C).  A state of Hom(t, ((a b) c)) is labelled by
the chain of intermediate charges, and the associator component matrix
``F[a,b,c; t]`` carries old (left-bracketed) labels on columns and new
labels on rows.  Basis choices for Hom(1, X(x)X) and Hom(X, X(x)X) are
fixed so that every component with a unit slot is the literal identity.

With these conventions the only free data is the scalar ``lambda`` on the
total-charge-1 block and, for n = 1, the 2x2 matrix ``M`` on the
total-charge-X block (for n = 0 the X block is 1x1: a single sign).  The
coherence constraint on four-fold products is generated mechanically as a
polynomial system and solved by explicit substitution and elimination;
each deduction step is checked against the generated system, so a silent
convention drift fails loudly instead of producing wrong solutions.

Gauge action (basis rescalings u of Hom(1, X(x)X) and v of Hom(X, X(x)X)):
lambda is invariant, M maps to S^-1 M S with S = diag(u, v^2).  The
normalization M[0][1] = 1 therefore fixes the orbit; the residual
subgroup u = v^2 acts trivially.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .exactnum import QuadraticNumber, parse, render, solve_monic_quadratic
from .poly import Poly

UNIT, X = 0, 1


class PentagonUnverifiedError(ValueError):
    """Operation requires data that satisfies the coherence system."""


class InternalInconsistencyError(RuntimeError):
    """The generated system contradicts the coded elimination schedule."""


def _fuse(n: int, a: int, b: int) -> tuple[int, ...]:
    """Simple summands of a(x)b for the rank-2 fusion rule X*X = 1 + n*X."""
    if a == UNIT:
        return (b,)
    if b == UNIT:
        return (a,)
    return (UNIT, X) if n else (UNIT,)


@dataclass(frozen=True)
class FData2:
    """Associator data: ``lam`` and ``M`` for n = 1, a single scalar for n = 0.

    ``M`` rows and columns are indexed by the intermediate charge (unit, X).
    Invertibility of the data is enforced on construction; whether it
    satisfies the coherence system is a separate question answered by
    :func:`verify_pentagon`.
    """

    n: int
    lam: QuadraticNumber | None = None
    M: tuple[tuple[QuadraticNumber, ...], ...] | None = None
    alpha: QuadraticNumber | None = None

    def __post_init__(self):
        if self.n == 0:
            if self.alpha is None or self.lam is not None or self.M is not None:
                raise ValueError("n = 0 data is a single scalar alpha")
            if self.alpha.is_zero():
                raise ValueError("alpha must be invertible")
        elif self.n == 1:
            if self.alpha is not None or self.lam is None or self.M is None:
                raise ValueError("n = 1 data is (lambda, M)")
            if self.lam.is_zero():
                raise ValueError("lambda must be nonzero")
            if len(self.M) != 2 or any(len(row) != 2 for row in self.M):
                raise ValueError("M must be 2x2")
            if self.det().is_zero():
                raise ValueError("M must be invertible")
        else:
            raise ValueError(f"unsupported n = {self.n}")

    @classmethod
    def sign_data(cls, alpha: QuadraticNumber) -> FData2:
        return cls(n=0, alpha=alpha)

    @classmethod
    def assoc_data(cls, lam: QuadraticNumber, M) -> FData2:
        rows = tuple(tuple(row) for row in M)
        return cls(n=1, lam=lam, M=rows)

    def det(self) -> QuadraticNumber:
        m = self.M
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]

    def unknown_values(self) -> dict[str, QuadraticNumber]:
        """Exact values for every unknown of the generated system."""
        if self.n == 0:
            return {"alpha": self.alpha, "alpha_inv": self.alpha.inverse()}
        return {
            "lam": self.lam,
            "lam_inv": self.lam.inverse(),
            "m00": self.M[0][0],
            "m01": self.M[0][1],
            "m10": self.M[1][0],
            "m11": self.M[1][1],
            "det_inv": self.det().inverse(),
        }

    def galois_conjugate(self) -> FData2:
        from .exactnum import galois_conjugate as conj

        if self.n == 0:
            return FData2.sign_data(conj(self.alpha))
        return FData2.assoc_data(
            conj(self.lam),
            tuple(tuple(conj(x) for x in row) for row in self.M),
        )

    def to_dict(self) -> dict:
        if self.n == 0:
            return {"n": 0, "alpha": render(self.alpha)}
        return {
            "n": 1,
            "lambda": render(self.lam),
            "M": [[render(x) for x in row] for row in self.M],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False, indent=2) + "\n"

    @classmethod
    def from_dict(cls, data: dict) -> FData2:
        if not isinstance(data, dict) or "n" not in data:
            raise ValueError("associator document must be an object with field n")
        n = int(data["n"])
        if n == 0:
            return cls.sign_data(parse(data["alpha"]))
        if n == 1:
            rows = data["M"]
            if len(rows) != 2 or any(len(r) != 2 for r in rows):
                raise ValueError("M must be a 2x2 array")
            return cls.assoc_data(
                parse(data["lambda"]),
                tuple(tuple(parse(x) for x in row) for row in rows),
            )
        raise ValueError(f"unsupported n = {n}")

    @classmethod
    def from_json(cls, text: str) -> FData2:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise ValueError(f"invalid JSON: {e}") from e
        return cls.from_dict(data)


@dataclass(frozen=True)
class PentagonSystem:
    """Polynomial constraints in the named unknowns.

    ``equations`` holds the coherence constraints; ``side_conditions``
    holds the invertibility witnesses phrased through the formal inverse
    unknowns (lam * lam_inv = 1, det(M) * det_inv = 1).
    """

    n: int
    unknowns: tuple[str, ...]
    equations: tuple[Poly, ...]
    side_conditions: tuple[Poly, ...]

    def all_equations(self) -> tuple[Poly, ...]:
        return self.equations + self.side_conditions


def _f_entry(n: int, a: int, b: int, c: int, t: int, new: int, old: int) -> Poly:
    """Symbolic component F[a,b,c; t]_{new, old}; zero when inadmissible."""
    if old not in _fuse(n, a, b) or t not in [
        s for e in (old,) for s in _fuse(n, e, c)
    ]:
        return Poly()
    if new not in _fuse(n, b, c) or t not in _fuse(n, a, new):
        return Poly()
    if UNIT in (a, b, c):
        return Poly.const(1)
    # a = b = c = X
    if t == UNIT:
        if n == 0:
            return Poly()  # Hom(1, X^3) = 0 when X*X = 1
        return Poly.var("lam")  # 1x1 block, labels forced to (X, X)
    if n == 0:
        return Poly.var("alpha")  # 1x1 block, labels forced to (unit, unit)
    return Poly.var(f"m{new}{old}")


def pentagon_system(n: int) -> PentagonSystem:
    """Generate the full coherence system on four-fold products.

    Every object quadruple (a, b, c, d), total charge t and admissible
    state pair contributes the equation

        F[a,b,h; t]_{k,e} * F[e,c,d; t]_{h,g}
          = sum_f F[b,c,d; k]_{h,f} * F[a,f,d; t]_{k,g} * F[a,b,c; g]_{f,e}

    Trivially satisfied instances (all unit-slot components) drop out;
    the rest are deduplicated up to sign.
    """
    if n not in (0, 1):
        raise ValueError(f"unsupported n = {n}")
    objects = (UNIT, X)
    seen: set[Poly] = set()
    equations: list[Poly] = []
    for a in objects:
        for b in objects:
            for c in objects:
                for d in objects:
                    for t in objects:
                        initial = [
                            (e, g)
                            for e in _fuse(n, a, b)
                            for g in _fuse(n, e, c)
                            if t in _fuse(n, g, d)
                        ]
                        final = [
                            (k, h)
                            for h in _fuse(n, c, d)
                            for k in _fuse(n, b, h)
                            if t in _fuse(n, a, k)
                        ]
                        for k, h in final:
                            for e, g in initial:
                                lhs = _f_entry(n, a, b, h, t, k, e) * _f_entry(
                                    n, e, c, d, t, h, g
                                )
                                rhs = Poly()
                                for f in _fuse(n, b, c):
                                    rhs = rhs + (
                                        _f_entry(n, b, c, d, k, h, f)
                                        * _f_entry(n, a, f, d, t, k, g)
                                        * _f_entry(n, a, b, c, g, f, e)
                                    )
                                eq = (lhs - rhs).normalized_sign()
                                if not eq.is_zero() and eq not in seen:
                                    seen.add(eq)
                                    equations.append(eq)
    equations.sort(key=Poly.sort_key)
    lam, lam_inv = Poly.var("lam"), Poly.var("lam_inv")
    alpha, alpha_inv = Poly.var("alpha"), Poly.var("alpha_inv")
    m = {(i, j): Poly.var(f"m{i}{j}") for i in (0, 1) for j in (0, 1)}
    det = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
    if n == 0:
        return PentagonSystem(
            n=0,
            unknowns=("alpha", "alpha_inv"),
            equations=tuple(equations),
            side_conditions=(alpha * alpha_inv - 1,),
        )
    return PentagonSystem(
        n=1,
        unknowns=("lam", "lam_inv", "m00", "m01", "m10", "m11", "det_inv"),
        equations=tuple(equations),
        side_conditions=(
            lam * lam_inv - 1,
            det * Poly.var("det_inv") - 1,
        ),
    )


def verify_pentagon(f: FData2) -> bool:
    """Exact check that the data satisfies every generated constraint."""
    system = pentagon_system(f.n)
    values = f.unknown_values()
    zero = QuadraticNumber.rational(0)
    return all(
        QuadraticNumber._coerce(eq.evaluate(values)) == zero
        for eq in system.all_equations()
    )


def gauge_transform(f: FData2, u: QuadraticNumber, v: QuadraticNumber) -> FData2:
    """Rescale the Hom(1, XX) basis by u and the Hom(X, XX) basis by v."""
    if u.is_zero() or v.is_zero():
        raise ValueError("gauge scalars must be invertible")
    if f.n == 0:
        return f  # 1x1 block conjugates trivially
    s0, s1 = u, v * v
    m = f.M
    new_m = (
        (m[0][0], m[0][1] * s1 / s0),
        (m[1][0] * s0 / s1, m[1][1]),
    )
    return FData2.assoc_data(f.lam, new_m)


def _find(system_polys: list[Poly], target: Poly, context: str) -> None:
    if target.normalized_sign() not in {
        p.normalized_sign() for p in system_polys
    }:
        raise InternalInconsistencyError(
            f"elimination step not backed by the system: {context}"
        )


def solve_rank2(n: int) -> list[FData2]:
    """Complete solution list up to gauge, normalized to M[0][1] = 1.

    n = 0: the generated system is the single equation alpha^2 = 1, giving
    the two signs.  n = 1: substitution and elimination on the generated
    system pins lambda = 1 and M = [[a, 1], [a, -a]] with a^2 + a = 1; the
    two roots give the two gauge classes, swapped by the field involution.
    Each step of the schedule is asserted against the actual system.
    """
    system = pentagon_system(n)
    one = QuadraticNumber.rational(1)
    if n == 0:
        alpha_sq = (Poly.var("alpha") ** 2 - 1).normalized_sign()
        _find(list(system.equations), alpha_sq, "alpha^2 = 1")
        if len(system.equations) != 1:
            raise InternalInconsistencyError(
                f"unexpected n = 0 system size {len(system.equations)}"
            )
        plus, minus = solve_monic_quadratic(Fraction(0), Fraction(-1))
        solutions = [FData2.sign_data(plus), FData2.sign_data(minus)]
        for sol in solutions:
            if not verify_pentagon(sol):
                raise InternalInconsistencyError("n = 0 candidate fails the system")
        return solutions

    lam, m00, m01, m10, m11 = (
        Poly.var("lam"), Poly.var("m00"), Poly.var("m01"),
        Poly.var("m10"), Poly.var("m11"),
    )
    gauge_fixed = [eq.substitute("m01", 1) for eq in system.equations]

    # m11 = 0 would force m10 = 0 (hence det = 0): equation m11^2 =
    # m10*m01 + m11^3 degenerates to m10 = 0 under the gauge.
    at_m11_zero = [eq.substitute("m11", 0) for eq in gauge_fixed]
    _find(at_m11_zero, m10, "m11 = 0 forces m10 = 0, contradicting det != 0")

    # m11 != 0 turns m11*lam = m11 into lam = 1
    _find(gauge_fixed, m11 * lam - m11, "m11*(lam - 1) = 0")
    at_lam_one = [eq.substitute("lam", 1) for eq in gauge_fixed]

    # row equation m00*m01 + lam*m01*m11 = 0 becomes m00 + m11 = 0
    _find(at_lam_one, m00 + m11, "m11 = -m00")
    reduced = [eq.substitute("m11", -m00) for eq in at_lam_one]

    # m00 = lam*m01*m10 becomes m00 = m10
    _find(reduced, m00 - m10, "m10 = m00")
    reduced = [eq.substitute("m10", m00) for eq in reduced]

    # the eliminant: m00^2 + m00 - 1 = 0
    eliminant = (m00 ** 2 + m00 - 1).normalized_sign()
    _find(reduced, eliminant, "eliminant a^2 + a - 1")

    a_plus, a_minus = solve_monic_quadratic(Fraction(1), Fraction(-1))
    solutions = []
    for a in (a_plus, a_minus):
        candidate = FData2.assoc_data(one, ((a, one), (a, -a)))
        if not verify_pentagon(candidate):
            raise InternalInconsistencyError(
                f"eliminant root {a} does not satisfy the full system"
            )
        solutions.append(candidate)
    return solutions


def rigidity_scalar(f: FData2) -> QuadraticNumber:
    """Scalar of the zigzag X -> X(x)X(x)X -> X built from coevaluation
    (the chosen basis of Hom(1, XX)) and its dual evaluation.

    The zigzag factors through the associator block on total charge X;
    its value is the (unit, unit) entry of the inverse block.  Nonzero
    means the candidate duality morphisms are rigidity witnesses.
    """
    if not verify_pentagon(f):
        raise PentagonUnverifiedError("rigidity is defined for coherent data only")
    if f.n == 0:
        scalar = f.alpha.inverse()
    else:
        scalar = f.M[1][1] / f.det()
        # the opposite-handed zigzag gives the (unit, unit) entry of the
        # block itself; coherence makes both sides agree
        if scalar != f.M[0][0]:
            raise InternalInconsistencyError(
                "left and right zigzag scalars disagree on coherent data"
            )
    return scalar


def dim_from_fdata(f: FData2) -> QuadraticNumber:
    """Categorical dimension of X determined by the associator data.

    The evaluation is rescaled so the first zigzag is the identity; the
    dimension is then the inverse of the raw zigzag scalar.  For n = 1
    the result satisfies dim^2 = 1 + dim exactly; for n = 0 it is the
    sign alpha.
    """
    dim = rigidity_scalar(f).inverse()
    if f.n == 1 and dim * dim != dim + 1:
        raise InternalInconsistencyError("dimension fails its defining equation")
    if f.n == 0 and dim * dim != QuadraticNumber.rational(1):
        raise InternalInconsistencyError("invertible object dimension not a sign")
    return dim
