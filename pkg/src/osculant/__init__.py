"""Exact computation of osculating spaces, fundamental forms and osculating defects."""

__version__ = "0.1.0"

from .catalog import catalog_expected, catalog_get, catalog_names
from .defects import (
    DefectReport,
    TheoremVerdict,
    check_jacobian_chain,
    check_theorem_A,
    check_theorem_B,
    defect_report,
    dual_variety_dim,
    gauss_image_dim,
    osculating_defect,
    tan_variety_dim,
    tangent_lemma_check,
)
from .forms import (
    FormSystem,
    apolar_complement,
    apolar_pair,
    associated_system,
    fundamental_form,
    jacobian,
)
from .jets import (
    Parametrization,
    SamplingConfig,
    global_laplace_basis,
    jet_matrix,
    laplace_basis,
    osc_dim,
    profile,
)
from .parser import parse_expression, parse_parametrization
from .report import Report, ReportOptions, run_report

__all__ = [
    "DefectReport", "FormSystem", "Parametrization", "Report", "ReportOptions",
    "SamplingConfig", "TheoremVerdict", "apolar_complement", "apolar_pair",
    "associated_system", "catalog_expected", "catalog_get", "catalog_names",
    "check_jacobian_chain", "check_theorem_A", "check_theorem_B", "defect_report",
    "dual_variety_dim", "fundamental_form", "gauss_image_dim", "global_laplace_basis",
    "jacobian", "jet_matrix", "laplace_basis", "osc_dim", "osculating_defect",
    "parse_expression", "parse_parametrization", "profile", "run_report",
    "tan_variety_dim", "tangent_lemma_check",
]
