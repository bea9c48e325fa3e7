"""Exact apolarity computations: annihilators, Hilbert functions, and
machine-verified rank bounds and certificates for symmetric forms."""

from .annihilator import (
    Catalecticant,
    GradedIdeal,
    HilbertData,
    annihilator_graded,
    catalecticant,
    hilbert_function,
    ideal_graded_dimension,
    is_in_annihilator,
    max_generator_degree,
    minimal_generators,
    scheme_degree,
    verify_apolar_ideal,
)
from .errors import ApolarError
from .fields import QQ, Field, PrimeField, Rationals, field_create, primitive_root_of_unity
from .linalg import Matrix, RowSpan
from .poly import (
    RING_S,
    RING_T,
    Form,
    ProjectivePoint,
    coefficient_vector,
    contract,
    dual_power,
    linear_power,
    monomial_basis,
    parse_form,
)
from .ranks import (
    CompleteIntersectionDegree,
    MonomialCertificate,
    MonomialRankData,
    RankReport,
    WaringDecomposition,
    ci_degree,
    divided_power_fit,
    generator_degree_bound,
    monomial_apolar_ci,
    monomial_form,
    monomial_rank,
    monomial_rank_certificate,
    smooth_apolar_points,
    waring_fit,
)

__version__ = "0.1.0"

__all__ = [
    "ApolarError",
    "Catalecticant",
    "CompleteIntersectionDegree",
    "Field",
    "Form",
    "GradedIdeal",
    "HilbertData",
    "Matrix",
    "MonomialCertificate",
    "MonomialRankData",
    "PrimeField",
    "ProjectivePoint",
    "QQ",
    "RING_S",
    "RING_T",
    "RankReport",
    "Rationals",
    "RowSpan",
    "WaringDecomposition",
    "annihilator_graded",
    "catalecticant",
    "ci_degree",
    "coefficient_vector",
    "contract",
    "divided_power_fit",
    "dual_power",
    "field_create",
    "generator_degree_bound",
    "hilbert_function",
    "ideal_graded_dimension",
    "is_in_annihilator",
    "linear_power",
    "max_generator_degree",
    "minimal_generators",
    "monomial_apolar_ci",
    "monomial_basis",
    "monomial_form",
    "monomial_rank",
    "monomial_rank_certificate",
    "parse_form",
    "primitive_root_of_unity",
    "scheme_degree",
    "smooth_apolar_points",
    "verify_apolar_ideal",
    "waring_fit",
]
