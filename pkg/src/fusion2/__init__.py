"""Exact-arithmetic toolkit for the rank-2 fusion rules X*X = 1 + n*X.

Subpackages by concern: :mod:`fusion2.exactnum` (quadratic fields and the
finite 2cos catalog), :mod:`fusion2.basedring` (fusion rings, validation,
external products, Frobenius-Perron dimensions), :mod:`fusion2.center`
(the double's Grothendieck-level bookkeeping), :mod:`fusion2.obstruction`
(categorifiability verdicts with exact certificates),
:mod:`fusion2.pentagon` (coherence systems, solving, rigidity), and
:mod:`fusion2.landau` (Egyptian-fraction enumeration, dimension bounds,
class-equation checks).  The CLI lives in :mod:`fusion2.cli`.
"""

from .exactnum import (
    IncompatibleFieldError,
    Ordering,
    ParseError,
    QuadraticNumber,
    TwoCosValue,
    galois_conjugate,
    parse,
    qn_arith,
    qn_compare,
    render,
    solve_monic_quadratic,
    two_cos_catalog,
)
from .basedring import (
    AxiomViolation,
    CertifiedDecimal,
    FusionRing,
    RingElement,
    RingHom,
    boxtimes,
    check_hom,
    element_dim,
    fp_dims,
    hom_dim,
    make_kn,
    multiply,
    ring_from_json,
    ring_to_json,
    validate,
)
from .center import (
    CenterData,
    build_center_data,
    center_dims,
    center_ring,
    forgetful_hom,
    free_bimodule_decompositions,
    hom_counting_checks,
    verify_center_iso,
)
from .obstruction import (
    BraidingData,
    CategorificationDescriptor,
    ObstructionCertificate,
    ObstructionVerdict,
    admissible_twists,
    classify_rank2,
    exact_dims,
    modular_obstruction,
    ribbon_check,
    symmetric_exclusion,
    twist_of,
    verify_gaussian_identity,
)
from .pentagon import (
    FData2,
    PentagonSystem,
    dim_from_fdata,
    gauge_transform,
    pentagon_system,
    rigidity_scalar,
    solve_rank2,
    verify_pentagon,
)
from .landau import (
    ClassEquationReport,
    EgyptianSolution,
    HopfBlocks,
    class_equation_check,
    egyptian_solutions,
    hopf_dimension_bound,
    landau_d,
    remark2_check,
)

__version__ = "0.1.0"
