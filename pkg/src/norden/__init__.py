"""Exact rational tensor calculus for left-invariant almost contact
structures with Norden metric on Lie groups.

Everything is computed in :class:`fractions.Fraction` arithmetic: no
floats, no tolerances.  The typical workflow::

    from norden import FamilyParams, generate_family, run_report

    model = generate_family(FamilyParams(n=1, lam=(2, 3)))
    report = run_report(model)
    print(report.invariants["tau"])        # Fraction(10, 1)
"""
from .classify import (
    IdentityVerdict,
    curvature_phi_kahler,
    forms_closed,
    is_f0,
    is_f11,
    is_isotropic_kahler,
    verify_identities,
)
from .connection import (
    Connection,
    covariant_derivative,
    is_metric_compatible,
    is_torsion_free,
    levi_civita,
    second_covariant_derivative,
)
from .curvature import (
    CurvaturePack,
    SectionType,
    classify_section,
    ricci_and_scalars,
    riemann,
    sectional_curvature,
)
from .errors import (
    BadParams,
    DegenerateSection,
    DimensionMismatch,
    InternalInconsistency,
    InvalidAlgebra,
    LinearlyDependent,
    NordenError,
    NotApplicable,
    ParseError,
    SingularMetric,
    ValidationError,
    ValidationReport,
    VarianceMismatch,
    Violation,
)
from .family import FamilyParams, generate_family, heisenberg_model
from .fundamental import (
    OneForms,
    SquareNorms,
    StructurePack,
    divergence,
    fundamental_tensor,
    matches_class_f11,
    nabla_eta,
    nabla_eta_from_fundamental,
    nabla_omega_star_check,
    nijenhuis,
    nijenhuis_from_brackets,
    nijenhuis_from_derivatives,
    one_forms,
    psi4,
    s_trace,
    square_norms,
    structure_pack,
    tensor_s,
)
from .lie import (
    LieAlgebra,
    algebra_from_brackets,
    bracket,
    is_solvable,
    validate,
)
from .modelfile import ModelFile, parse_model, serialize_model
from .report import (
    GeometryReport,
    all_identities_ok,
    report_to_json,
    report_to_json_dict,
    report_to_text,
    run_report,
)
from .structures import AcnModel, associated_metric, validate_structure
from .tensors import (
    Scalar,
    Tensor,
    as_scalar,
    contract,
    einsum_scalar,
    format_scalar,
    invert_symmetric,
    matrix_rank,
    row_space_basis,
    signature,
    tensor_product,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
