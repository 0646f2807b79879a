"""Littlewood-Richardson coefficients by exact lattice-point counting in hives."""

from .counting import (
    BARVINOK,
    NAIVE,
    CountResult,
    SignedUnimodularCone,
    count_barvinok,
    count_dilation,
    count_naive,
    decompose_cone,
    hive_hrep,
    iter_lattice_points,
    lr_coefficient,
    lr_nonzero,
)
from .errors import (
    CapExceededError,
    CountMismatchError,
    DegenerateSpanError,
    InfeasibleLatticeError,
    NoFitError,
    NoUnimodularCellError,
    SizeMismatchError,
    UnboundedError,
    WeightError,
)
from .hives import (
    HiveConstraintSystem,
    HivePattern,
    build_hive_polytope,
    dilation_rhs_identity,
    hive_indices,
    homogenize,
    is_hive_pattern,
)
from .klimyk import (
    DIRECT,
    HIVE,
    ZERO,
    DecompositionTerm,
    dominant_conjugate,
    klimyk_decompose,
    kostka,
    lr_tableau_count,
    weight_multiplicities,
)
from .polyfile import (
    polytope_from_text,
    polytope_to_text,
    read_polytope_file,
    write_polytope_file,
)
from .polyhedra import HRepPolytope, enumerate_vertices, supporting_cone
from .stretch import (
    QuasiPolynomial,
    StretchReport,
    conjecture2_report,
    fit_quasi_polynomial,
    report_to_json,
    stretched_counts,
)
from .triangulation import (
    PointConfiguration,
    Triangulation,
    hive_matrix,
    hive_triangulation,
    integral_vertex_witness,
    is_unimodular,
    placing_triangulation,
)
from .weights import WeightTriple, kostka_to_lr, make_triple, parse_weight

__version__ = "0.1.0"

__all__ = [
    "BARVINOK",
    "NAIVE",
    "DIRECT",
    "HIVE",
    "ZERO",
    "CountResult",
    "SignedUnimodularCone",
    "DecompositionTerm",
    "HiveConstraintSystem",
    "HivePattern",
    "HRepPolytope",
    "PointConfiguration",
    "QuasiPolynomial",
    "StretchReport",
    "Triangulation",
    "WeightTriple",
    "CapExceededError",
    "CountMismatchError",
    "DegenerateSpanError",
    "InfeasibleLatticeError",
    "NoFitError",
    "NoUnimodularCellError",
    "SizeMismatchError",
    "UnboundedError",
    "WeightError",
    "build_hive_polytope",
    "conjecture2_report",
    "count_barvinok",
    "count_dilation",
    "count_naive",
    "decompose_cone",
    "dilation_rhs_identity",
    "dominant_conjugate",
    "enumerate_vertices",
    "fit_quasi_polynomial",
    "hive_hrep",
    "hive_indices",
    "hive_matrix",
    "hive_triangulation",
    "homogenize",
    "integral_vertex_witness",
    "is_hive_pattern",
    "is_unimodular",
    "iter_lattice_points",
    "klimyk_decompose",
    "kostka",
    "kostka_to_lr",
    "lr_coefficient",
    "lr_nonzero",
    "lr_tableau_count",
    "make_triple",
    "parse_weight",
    "placing_triangulation",
    "polytope_from_text",
    "polytope_to_text",
    "read_polytope_file",
    "report_to_json",
    "stretched_counts",
    "supporting_cone",
    "weight_multiplicities",
    "write_polytope_file",
]
