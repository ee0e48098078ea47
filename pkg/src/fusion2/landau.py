"""Egyptian-fraction enumeration and the dimension bound it implies.

``egyptian_solutions`` enumerates, completely and in lexicographic order,
the nondecreasing positive-integer tuples with a prescribed reciprocal
sum.  The search is the classical branch-and-bound: with ``j`` slots left
and remainder r, the next denominator x satisfies
``max(previous, ceil(1/r)) <= x <= floor(j/r)``, so the tree is finite.
``landau_d(j)`` is the largest coordinate over all solutions with sum 1;
it grows doubly exponentially (1, 2, 6, 42, 1806, 3263442, ...), hence
the hard feasibility ceiling at count 7.

``class_equation_check`` consumes character-ring block data (r_i, m_i)
of a semisimple Hopf algebra, where each trace ratio m_i is a positive
integer by the Kac-Zhu theorem, taken here as trusted input.  The checks:
sum of r_i/m_i must be exactly 1, the flattened multiset must be a valid
reciprocal-sum solution, and a claimed dimension must appear as the m of
a one-dimensional block (the integral's block) and respect the bound
d(r) at the flattened length r when that is computable.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

HARD_CEILING = 7
ENV_CEILING = "FUSION2_MAX_EGYPTIAN"


class CeilingExceededError(ValueError):
    """Enumeration length beyond the feasibility ceiling."""


def feasibility_ceiling() -> int:
    """Hard ceiling 7, possibly lowered (never raised) via the environment."""
    raw = os.environ.get(ENV_CEILING)
    if raw is None:
        return HARD_CEILING
    try:
        value = int(raw)
    except ValueError as e:
        raise ValueError(f"{ENV_CEILING} must be an integer, got {raw!r}") from e
    if value < 1:
        raise ValueError(f"{ENV_CEILING} must be >= 1, got {value}")
    return min(value, HARD_CEILING)


@dataclass(frozen=True)
class EgyptianSolution:
    """Nondecreasing positive denominators with an exact reciprocal sum."""

    xs: tuple[int, ...]
    target: Fraction

    def __post_init__(self):
        object.__setattr__(self, "xs", tuple(int(x) for x in self.xs))
        object.__setattr__(self, "target", Fraction(self.target))
        if not self.xs:
            raise ValueError("empty solution")
        if any(x < 1 for x in self.xs):
            raise ValueError("denominators must be positive")
        if any(a > b for a, b in zip(self.xs, self.xs[1:])):
            raise ValueError("denominators must be nondecreasing")
        total = sum((Fraction(1, x) for x in self.xs), Fraction(0))
        if total != self.target:
            raise ValueError(
                f"reciprocals of {self.xs} sum to {total}, not {self.target}"
            )

    def __str__(self) -> str:
        return " ".join(str(x) for x in self.xs)


def _enumerate(
    count: int, num: int, den: int, min_x: int, prefix: list[int],
    out: list[tuple[int, ...]],
) -> None:
    # invariant: num/den is in lowest terms and equals the remaining target
    if num <= 0:
        return
    if count == 1:
        # 1/x = num/den needs num = 1 (lowest terms) and x >= min_x
        if num == 1 and den >= min_x:
            out.append(tuple(prefix + [den]))
        return
    lo = max(min_x, -(-den // num))          # ceil(den/num)
    hi = (count * den) // num                # floor(count*den/num)
    for x in range(lo, hi + 1):
        new_num = num * x - den
        new_den = den * x
        if new_num == 0:
            continue  # remaining slots could not stay positive
        g = gcd(new_num, new_den)
        prefix.append(x)
        _enumerate(count - 1, new_num // g, new_den // g, x, prefix, out)
        prefix.pop()


def egyptian_solutions(count: int, target: Fraction) -> list[EgyptianSolution]:
    """All nondecreasing positive-integer tuples of the given length whose
    reciprocals sum exactly to the target, in lexicographic order."""
    if not isinstance(count, int) or count < 1:
        raise ValueError(f"count must be a positive integer, got {count!r}")
    target = Fraction(target)
    if target <= 0:
        raise ValueError(f"target must be positive, got {target}")
    if target == 1:
        return list(_unit_sum_solutions(count))
    raw: list[tuple[int, ...]] = []
    _enumerate(count, target.numerator, target.denominator, 1, [], raw)
    return [EgyptianSolution(xs, target) for xs in raw]


@lru_cache(maxsize=HARD_CEILING + 1)
def _unit_sum_solutions(count: int) -> tuple[EgyptianSolution, ...]:
    raw: list[tuple[int, ...]] = []
    _enumerate(count, 1, 1, 1, [], raw)
    one = Fraction(1)
    return tuple(EgyptianSolution(xs, one) for xs in raw)


def landau_d(count: int) -> int:
    """Largest coordinate over all length-``count`` solutions with sum 1."""
    if not isinstance(count, int) or count < 1:
        raise ValueError(f"count must be a positive integer, got {count!r}")
    ceiling = feasibility_ceiling()
    if count > ceiling:
        raise CeilingExceededError(
            f"count {count} exceeds the feasibility ceiling {ceiling}"
        )
    return max(sol.xs[-1] for sol in _unit_sum_solutions(count))


def remark2_check(count: int) -> bool:
    """Verify d(count+1) >= 2*d(count), plus the constructive witness:
    doubling a maximal solution and prepending 2 is again a solution."""
    if not isinstance(count, int) or count < 1:
        raise ValueError(f"count must be a positive integer, got {count!r}")
    d_here = landau_d(count)
    d_next = landau_d(count + 1)
    attaining = next(
        sol for sol in _unit_sum_solutions(count) if sol.xs[-1] == d_here
    )
    doubled = tuple(sorted([2] + [2 * x for x in attaining.xs]))
    witness = EgyptianSolution(doubled, Fraction(1))  # validates the sum
    if witness.xs[-1] != 2 * d_here or len(witness.xs) != count + 1:
        return False
    return d_next >= 2 * d_here


def hopf_dimension_bound(n_irreps: int) -> int:
    """Universal dimension bound d(n) for a semisimple Hopf algebra with
    ``n_irreps`` irreducible representations."""
    return landau_d(n_irreps)


@dataclass(frozen=True)
class HopfBlocks:
    """Character-ring block data: (block size r_i, trace ratio m_i) pairs,
    each m_i a positive integer, with an optional claimed dimension."""

    blocks: tuple[tuple[int, int], ...]
    claimed_dim: int | None = None

    def __post_init__(self):
        object.__setattr__(
            self, "blocks", tuple((int(r), int(m)) for r, m in self.blocks)
        )
        if not self.blocks:
            raise ValueError("at least one block required")
        for r, m in self.blocks:
            if r < 1 or m < 1:
                raise ValueError(f"block ({r}, {m}) must be positive integers")
        if self.claimed_dim is not None and self.claimed_dim < 1:
            raise ValueError("claimed dimension must be positive")


@dataclass(frozen=True)
class ClassEquationReport:
    failures: tuple[str, ...]
    notes: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def class_equation_check(h: HopfBlocks) -> ClassEquationReport:
    """Exact admissibility checks for semisimple Hopf block data."""
    failures: list[str] = []
    notes: list[str] = []

    total = sum((Fraction(r, m) for r, m in h.blocks), Fraction(0))
    if total != 1:
        failures.append(f"class equation: sum of r_i/m_i = {total}, expected 1")

    flattened = tuple(sorted(m for r, m in h.blocks for _ in range(r)))
    r_total = len(flattened)
    if total == 1:
        EgyptianSolution(flattened, Fraction(1))  # raises only on library bugs
        notes.append(
            f"flattened multiset {list(flattened)} solves the unit equation "
            f"at length {r_total}"
        )
    else:
        failures.append(
            f"flattened multiset {list(flattened)} is not a unit-sum solution"
        )

    if h.claimed_dim is not None:
        if not any(r == 1 and m == h.claimed_dim for r, m in h.blocks):
            failures.append(
                f"no one-dimensional block with m = {h.claimed_dim} "
                "(the integral's block)"
            )
        ceiling = feasibility_ceiling()
        if r_total <= ceiling:
            bound = landau_d(r_total)
            if h.claimed_dim > bound:
                failures.append(
                    f"claimed dimension {h.claimed_dim} exceeds d({r_total}) = {bound}"
                )
            else:
                notes.append(
                    f"claimed dimension {h.claimed_dim} <= d({r_total}) = {bound}"
                )
        else:
            notes.append(
                f"bound not computed: flattened length {r_total} exceeds the "
                f"feasibility ceiling {ceiling}"
            )
    return ClassEquationReport(failures=tuple(failures), notes=tuple(notes))
