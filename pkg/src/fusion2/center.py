"""Grothendieck-level model of the Drinfeld double of the rank-2 rings.

Everything happens inside the ambient product ring (the rank-2 ring with
itself; the opposite ring coincides with it because the multiplication is
commutative and the duality trivial).  The Frobenius algebra class is
``A = 1(x)1 + X(x)X``; its free bimodules decompose into the four simple
bimodule classes A, X1, X2, Y, and the induced fusion ring of the double
is an external square of the original ring, verified here by explicit
tensor comparison.

One bookkeeping subtlety is deliberately surfaced rather than hidden:
freeness of A-modules forces the classes of X1 and X2 to carry the
coefficient n on the X(x)X component, ``(0, 1, 1, n)``; the sum
X1 + X2 = (0, 2, 2, 2n) is the anchor identity.  Tests pin both.
"""

from __future__ import annotations

from dataclasses import dataclass

from .basedring import (
    FusionRing,
    RingElement,
    RingHom,
    boxtimes,
    check_hom,
    fp_dims,
    hom_dim,
    make_kn,
    multiply,
    validate,
)
from .exactnum import QuadraticNumber


class ClassBookkeepingError(RuntimeError):
    """A free-bimodule class identity failed; the model is inconsistent."""


class IsoVerificationError(RuntimeError):
    """The double's ring did not match the external square."""


BIMODULE_NAMES = ("A", "X1", "X2", "Y")


@dataclass(frozen=True)
class CenterData:
    """All Grothendieck-level data attached to the double at one n."""

    n: int
    ambient: FusionRing
    A: RingElement
    module_classes: tuple[RingElement, RingElement]
    bimodule_classes: dict[str, RingElement]
    center: FusionRing
    forgetful: RingHom


def bimodule_class_table(n: int, ambient: FusionRing) -> dict[str, RingElement]:
    """Classes of the four simple A-bimodules in the basis
    (1(x)1, 1(x)X, X(x)1, X(x)X)."""
    return {
        "A": ambient.element((1, 0, 0, 1)),
        "X1": ambient.element((0, 1, 1, n)),
        "X2": ambient.element((0, 1, 1, n)),
        "Y": ambient.element((1, n, n, n * n + 1)),
    }


def build_center_data(n: int) -> CenterData:
    """Assemble ambient ring, Frobenius algebra class, simple module and
    bimodule classes, the double's fusion ring and the forgetful map.

    All consistency checks (free-bimodule decompositions, Hom counting,
    the ring isomorphism, the forgetful homomorphism) are run; any failure
    raises, since it would mean the model itself is wrong.
    """
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"n must be a nonnegative integer, got {n!r}")
    kn = make_kn(n)
    ambient = boxtimes(kn, kn)
    A = ambient.element((1, 0, 0, 1))
    # free module on X(x)1: A * (X(x)1) = 1(x)X + X(x)1 + n X(x)X
    module_free = multiply(A, ambient.basis_element(2))
    data = CenterData(
        n=n,
        ambient=ambient,
        A=A,
        module_classes=(A, module_free),
        bimodule_classes=bimodule_class_table(n, ambient),
        center=center_ring(n),
        forgetful=forgetful_hom(n),
    )
    free_bimodule_decompositions(data)
    report = hom_counting_checks(data)
    if report:
        raise ClassBookkeepingError(f"hom counting failed: {report[0]}")
    verify_center_iso(n)
    return data


# decomposition of A*M*A asserted by the structure theory, indexed by the
# ambient basis element M; columns are multiplicities of (A, X1, X2, Y)
def _expected_decomposition(n: int, m_index: int) -> tuple[int, int, int, int]:
    if m_index == 0:
        return (1, 0, 0, 1)
    if m_index in (1, 2):
        return (0, 1, 1, n)
    return (1, n, n, n * n + 1)


def free_bimodule_decompositions(
    data: CenterData,
) -> dict[int, tuple[int, int, int, int]]:
    """Multiplicities of (A, X1, X2, Y) in each free bimodule A*M*A.

    The multiplicity of a simple bimodule B in A*M*A equals the Hom
    dimension between M and B at the level of classes, so the table is
    recomputed from dot products and then confirmed twice over: against
    the closed-form decomposition and as the exact vector identity
    class(A*M*A) = sum_i c_i * class(B_i).
    """
    out: dict[int, tuple[int, int, int, int]] = {}
    classes = [data.bimodule_classes[name] for name in BIMODULE_NAMES]
    for m_index in range(data.ambient.rank):
        m = data.ambient.basis_element(m_index)
        coeffs = tuple(hom_dim(m, cls) for cls in classes)
        expected = _expected_decomposition(data.n, m_index)
        if coeffs != expected:
            raise ClassBookkeepingError(
                f"decomposition of A*M*A for M index {m_index}: "
                f"computed {coeffs}, expected {expected}"
            )
        free = multiply(multiply(data.A, m), data.A)
        combo = data.ambient.element((0, 0, 0, 0))
        for c, cls in zip(coeffs, classes):
            combo = combo + c * cls
        if combo != free:
            raise ClassBookkeepingError(
                f"class identity failed at M index {m_index}: "
                f"{combo.coeffs} != {free.coeffs}"
            )
        out[m_index] = coeffs
    return out


def hom_counting_checks(data: CenterData) -> list[str]:
    """Hom-space dimension counts behind the bimodule classification."""
    failures: list[str] = []
    ambient = data.ambient
    unit = ambient.basis_element(0)
    a_squared = multiply(data.A, data.A)
    got = hom_dim(unit, a_squared)
    if got != 2:
        failures.append(f"dim Hom(1(x)1, A*A) = {got}, expected 2")

    y_class = data.bimodule_classes["Y"]
    for m_index in (1, 2):
        m = ambient.basis_element(m_index)
        got = hom_dim(m, y_class)
        if got != data.n:
            failures.append(
                f"dim Hom(M, Y) = {got} for M index {m_index}, expected {data.n}"
            )

    classes = [data.bimodule_classes[name] for name in BIMODULE_NAMES]
    for m_index in range(ambient.rank):
        m = ambient.basis_element(m_index)
        free = multiply(multiply(data.A, m), data.A)
        total = hom_dim(m, free)
        parts = sum(
            hom_dim(m, cls) * hom_dim(m, cls) for cls in classes
        )
        # multiplicity c_i = hom(M, B_i); hom(M, A*M*A) = sum c_i hom(M, B_i)
        if parts != total:
            failures.append(
                f"hom count mismatch at M index {m_index}: {parts} != {total}"
            )
    return failures


def center_ring(n: int) -> FusionRing:
    """Fusion ring of the double on the basis (1, X1, X2, Y).

    Products: X1^2 = 1 + n X1, X2^2 = 1 + n X2, X1 X2 = Y,
    X1 Y = X2 + n Y, X2 Y = X1 + n Y, Y^2 = 1 + n X1 + n X2 + n^2 Y;
    all basis elements self-dual.
    """
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"n must be a nonnegative integer, got {n!r}")
    r = 4
    N = [[[0] * r for _ in range(r)] for _ in range(r)]
    for b in range(r):
        N[0][b][b] = 1
        N[b][0][b] = 1
    products = {
        (1, 1): (1, n, 0, 0),
        (2, 2): (1, 0, n, 0),
        (1, 2): (0, 0, 0, 1),
        (2, 1): (0, 0, 0, 1),
        (1, 3): (0, 0, 1, n),
        (3, 1): (0, 0, 1, n),
        (2, 3): (0, 1, 0, n),
        (3, 2): (0, 1, 0, n),
        (3, 3): (1, n, n, n * n),
    }
    for (a, b), coeffs in products.items():
        N[a][b] = list(coeffs)
    ring = FusionRing(
        rank=4, labels=("1", "X1", "X2", "Y"), dual=(0, 1, 2, 3),
        N=tuple(tuple(tuple(row) for row in plane) for plane in N),
    )
    report = validate(ring)
    if report:
        raise ClassBookkeepingError(f"double's ring fails validation: {report[0]}")
    return ring


#: index bijection center -> external square under
#: 1 -> 1(x)1, X1 -> X(x)1, X2 -> 1(x)X, Y -> X(x)X
CENTER_TO_PRODUCT = (0, 2, 1, 3)


def verify_center_iso(n: int) -> tuple[int, ...]:
    """Confirm the double's ring is the external square of the rank-2 ring.

    Returns the witnessing index bijection; raises when any of the 64
    tensor entries (or the duality) disagrees after reindexing.
    """
    c = center_ring(n)
    kn = make_kn(n)
    box = boxtimes(kn, kn)
    sigma = CENTER_TO_PRODUCT
    for a in range(4):
        if sigma[c.dual[a]] != box.dual[sigma[a]]:
            raise IsoVerificationError(f"duality mismatch at index {a}")
        for b in range(4):
            for d in range(4):
                if c.N[a][b][d] != box.N[sigma[a]][sigma[b]][sigma[d]]:
                    raise IsoVerificationError(
                        f"tensor mismatch at {(a, b, d)}: "
                        f"{c.N[a][b][d]} != {box.N[sigma[a]][sigma[b]][sigma[d]]}"
                    )
    if sigma[0] != 0:
        raise IsoVerificationError("unit is not preserved")
    return sigma


def forgetful_hom(n: int) -> RingHom:
    """The forgetful map of the double onto the rank-2 ring:
    1 -> 1, X1 -> X, X2 -> X, Y -> X*X = 1 + n X."""
    c = center_ring(n)
    kn = make_kn(n)
    hom = RingHom(
        source=c,
        target=kn,
        images=(
            kn.element((1, 0)),
            kn.element((0, 1)),
            kn.element((0, 1)),
            kn.element((1, n)),
        ),
    )
    report = check_hom(hom)
    if report:
        raise ClassBookkeepingError(f"forgetful map is not a ring map: {report[0]}")
    return hom


def center_dims(n: int) -> tuple[QuadraticNumber, ...]:
    """Exact dimensions (1, d, d, d^2) of the double's basis, obtained by
    multiplicativity through the verified isomorphism with the external
    square."""
    sigma = verify_center_iso(n)
    kn = make_kn(n)
    box_dims = fp_dims(boxtimes(kn, kn))
    return tuple(box_dims[sigma[i]] for i in range(4))
