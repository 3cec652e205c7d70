"""Exact workbench for Ulrich bundles on Fano threefolds obtained by blowing up a curve."""

from .chow import (
    A2Functional,
    ChowClass,
    FanoBlowupClass,
    IncompatibleClassError,
    RegistryError,
    TangentData,
    anticanonical_degree,
    builtin_registry,
    get_class,
    integrate,
    intersection_numbers,
    load_registry,
    polarization,
    tangent_data,
)
from .qpoly import QPoly
from .rr import ChernData, DivisorClass, euler_poly, hilbert_poly_line, ulrich_target
from .search import (
    LineCandidateReport,
    Rank2C1Report,
    check_rank2_relations,
    dual_divisor,
    enumerate_rank2_c1,
    extension_chern,
    solve_line_candidates,
)
from .ledger import (
    AcmCertificate,
    LedgerReport,
    acm_certificate,
    ext_chi_report,
    quot_dimension_report,
    tensor_rank2_with_dual,
)

__version__ = "0.1.0"
