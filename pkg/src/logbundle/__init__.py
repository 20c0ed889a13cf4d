"""Exact classification of plane curves by their logarithmic bundle.

Given a reduced curve or line arrangement over the rationals, the package
computes the rank-2 syzygy bundle of its Jacobian ideal, classifies it as
free / nearly free / other, extracts the jumping point and jumping lines,
and evaluates splitting types on lines by two independent methods.  All
arithmetic is exact.
"""

from .geometry import (
    Arrangement,
    BinForm,
    HomPoly,
    Lattice,
    LinearForm,
    ProjPoint,
    euler_t,
    intersection,
    lattice,
    lattice_isomorphic,
    line_through,
    product_form,
    restrict_to_line,
)
from .resolution import (
    BundleClass,
    ChernData,
    DegreeBoundExceeded,
    JacobianNotFinite,
    Presentation,
    SyzygyTriple,
    chern_data,
    classify,
    jumping_point,
    minimal_presentation,
    stability_class,
    syzygy_basis,
    tjurina,
)
from .splitting import (
    JumpReport,
    MultiRestriction,
    SplitType,
    free_test_one_line,
    jump_report,
    multi_exponents,
    nf_test_c2_one,
    rule_split,
    split_on_line,
    ziegler,
)
from .constructions import (
    KernelBundleSpec,
    Prediction,
    canonical_nf,
    family_addition,
    family_c0,
    family_deletion,
    named_example,
    predict_add,
    predict_delete,
    stable_exceptional,
    three_secant_search,
)
from .report import build_compare, build_report, build_sweep

__version__ = "0.1.0"

__all__ = [
    "Arrangement", "BinForm", "HomPoly", "Lattice", "LinearForm", "ProjPoint",
    "euler_t", "intersection", "lattice", "lattice_isomorphic", "line_through",
    "product_form", "restrict_to_line",
    "BundleClass", "ChernData", "DegreeBoundExceeded", "JacobianNotFinite",
    "Presentation", "SyzygyTriple", "chern_data", "classify", "jumping_point",
    "minimal_presentation", "stability_class", "syzygy_basis", "tjurina",
    "JumpReport", "MultiRestriction", "SplitType", "free_test_one_line",
    "jump_report", "multi_exponents", "nf_test_c2_one", "rule_split",
    "split_on_line", "ziegler",
    "KernelBundleSpec", "Prediction", "canonical_nf", "family_addition",
    "family_c0", "family_deletion", "named_example", "predict_add",
    "predict_delete", "stable_exceptional", "three_secant_search",
    "build_compare", "build_report", "build_sweep",
    "__version__",
]
