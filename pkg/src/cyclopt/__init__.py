"""Workbench for p-ary cyclic codes with three-factor generators.

The codes studied here live in F_p[x]/(x^n - 1) with n = p^m - 1 and are
generated by (x+1) * m_1(x) * m_e(x), where m_j is the minimal polynomial
of alpha^j for a primitive alpha.  The package constructs them, measures
their minimum distance, checks sufficient and exact optimality criteria,
and scans whole exponent spaces reproducibly.
"""

from .codes import CodeSpec, construct_code, minimal_polynomial, sphere_packing_optimal
from .cyclotomy import Coset, coset_leaders, coset_of, in_C1
from .distance import (
    DistanceReport,
    Witness,
    brute_force_min_distance,
    min_distance,
    verify_witness,
)
from .errors import (
    CosetOverlapError,
    LimitError,
    ParameterError,
    PrimitivityError,
)
from .explorer import (
    ProbeReport,
    ProbeRow,
    ScanResult,
    ScanRow,
    optimal_flag,
    probe_open_problem,
    scan,
    scan_to_csv,
    scan_to_json,
    write_probe_outputs,
    write_scan_outputs,
)
from .extfield import ExtElem, FieldSpec, build_field, get_field
from .gfpoly import Poly
from .theorems import (
    OPEN_PROBLEM_IDS,
    THEOREM_IDS,
    Condition,
    ExponentFamily,
    TheoremVerdict,
    run_checker,
    solve_congruence_family,
)

__version__ = "0.1.0"

__all__ = [
    "CodeSpec",
    "Condition",
    "Coset",
    "CosetOverlapError",
    "DistanceReport",
    "ExponentFamily",
    "ExtElem",
    "FieldSpec",
    "LimitError",
    "OPEN_PROBLEM_IDS",
    "ParameterError",
    "Poly",
    "PrimitivityError",
    "ProbeReport",
    "ProbeRow",
    "ScanResult",
    "ScanRow",
    "THEOREM_IDS",
    "TheoremVerdict",
    "Witness",
    "brute_force_min_distance",
    "build_field",
    "construct_code",
    "coset_leaders",
    "coset_of",
    "get_field",
    "in_C1",
    "min_distance",
    "minimal_polynomial",
    "optimal_flag",
    "probe_open_problem",
    "run_checker",
    "scan",
    "scan_to_csv",
    "scan_to_json",
    "solve_congruence_family",
    "sphere_packing_optimal",
    "verify_witness",
    "write_probe_outputs",
    "write_scan_outputs",
]
