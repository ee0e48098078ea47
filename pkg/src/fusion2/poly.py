"""Small multivariate polynomials with integer coefficients.

Just enough machinery for the pentagon constraint systems and the
Gaussian-sum identity: addition, multiplication, substitution and exact
evaluation over any commutative coefficient domain (int, Fraction,
QuadraticNumber).  Monomials are stored as sorted ``(name, exponent)``
tuples, so polynomials hash and compare structurally.
"""

from __future__ import annotations

from typing import Any, Iterable, Mapping

Monomial = tuple[tuple[str, int], ...]


def _mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    exps: dict[str, int] = dict(m1)
    for name, e in m2:
        exps[name] = exps.get(name, 0) + e
    return tuple(sorted((n, e) for n, e in exps.items() if e != 0))


class Poly:
    """Immutable polynomial over the integers in named unknowns."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        cleaned = {m: c for m, c in (terms or {}).items() if c != 0}
        self._terms: dict[Monomial, int] = cleaned

    @classmethod
    def const(cls, c: int) -> Poly:
        return cls({(): int(c)})

    @classmethod
    def var(cls, name: str) -> Poly:
        return cls({((name, 1),): 1})

    @property
    def terms(self) -> dict[Monomial, int]:
        return dict(self._terms)

    def variables(self) -> set[str]:
        return {name for mono in self._terms for name, _ in mono}

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(m == () for m in self._terms)

    def constant_value(self) -> int:
        if not self.is_constant():
            raise ValueError(f"not a constant polynomial: {self}")
        return self._terms.get((), 0)

    def __add__(self, other: Poly | int) -> Poly:
        other = _as_poly(other)
        terms = dict(self._terms)
        for m, c in other._terms.items():
            terms[m] = terms.get(m, 0) + c
        return Poly(terms)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: Poly | int) -> Poly:
        return self + (-_as_poly(other))

    def __rsub__(self, other: Poly | int) -> Poly:
        return _as_poly(other) + (-self)

    def __mul__(self, other: Poly | int) -> Poly:
        other = _as_poly(other)
        terms: dict[Monomial, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mono_mul(m1, m2)
                terms[m] = terms.get(m, 0) + c1 * c2
        return Poly(terms)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Poly:
        if n < 0:
            raise ValueError("negative exponent")
        result = Poly.const(1)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def substitute(self, name: str, value: Poly | int) -> Poly:
        """Replace an unknown by a polynomial (or integer) everywhere."""
        value = _as_poly(value)
        result = Poly()
        for mono, coeff in self._terms.items():
            term = Poly.const(coeff)
            for var, exp in mono:
                factor = value if var == name else Poly.var(var)
                term = term * factor ** exp
            result = result + term
        return result

    def evaluate(self, values: Mapping[str, Any]) -> Any:
        """Exact evaluation; values may live in any commutative ring."""
        total: Any = 0
        for mono, coeff in self._terms.items():
            term: Any = coeff
            for var, exp in mono:
                if var not in values:
                    raise KeyError(f"no value for unknown {var!r}")
                term = term * values[var] ** exp
            total = total + term
        return total

    def normalized_sign(self) -> Poly:
        """Canonical representative of {p, -p}: leading coefficient > 0."""
        if not self._terms:
            return self
        lead = min(self._terms)
        return self if self._terms[lead] > 0 else -self

    def sort_key(self) -> tuple:
        return tuple(sorted(self._terms.items()))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for mono, coeff in sorted(self._terms.items()):
            factors = [
                name if exp == 1 else f"{name}^{exp}" for name, exp in mono
            ]
            if not factors:
                parts.append(f"{coeff:+d}")
            elif coeff == 1:
                parts.append("+" + "*".join(factors))
            elif coeff == -1:
                parts.append("-" + "*".join(factors))
            else:
                parts.append(f"{coeff:+d}*" + "*".join(factors))
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Poly({self})"


def _as_poly(x: Poly | int) -> Poly:
    return x if isinstance(x, Poly) else Poly.const(x)


def poly_sum(polys: Iterable[Poly]) -> Poly:
    total = Poly()
    for p in polys:
        total = total + p
    return total
