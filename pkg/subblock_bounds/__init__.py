"""Subblock bounds - exact sphere-packing bounds for subblock-constrained codes"""

from importlib.metadata import PackageNotFoundError
from importlib.metadata import version as get_version

from .bounds import (
    CsccBoundHandler,
    SeccBoundHandler,
    build_certificate_table1,
    build_certificate_table2,
    cscc_closed_form_t1,
    cscc_closed_form_t2,
    cscc_gen_codesize_bound,
    cscc_gsp_bound,
    cscc_reduced_lp,
    secc_best_m0_bound,
    secc_closed_form_m1,
    secc_closed_form_wL1,
    secc_gsp_bound,
    secc_m0_bound,
    secc_reduced_lp,
)
from .config import BoundsConfig, default_config
from .logging import BoundsLogger, LogConfig
from .lp import min_ratio, solve_min, verify_certificate
from .metrics import BoundsFunctionName, BoundsMetrics
from .types import (
    Certificate,
    CsccInstance,
    ReducedLP,
    SeccInstance,
    Verdict,
    WeightProfile,
)

try:
    __version__ = get_version("subblock-bounds")
except PackageNotFoundError:
    __version__ = "0.0.0"

__all__ = [
    "BoundsConfig",
    "BoundsFunctionName",
    "BoundsLogger",
    "BoundsMetrics",
    "Certificate",
    "CsccBoundHandler",
    "CsccInstance",
    "LogConfig",
    "ReducedLP",
    "SeccBoundHandler",
    "SeccInstance",
    "Verdict",
    "WeightProfile",
    "build_certificate_table1",
    "build_certificate_table2",
    "cscc_closed_form_t1",
    "cscc_closed_form_t2",
    "cscc_gen_codesize_bound",
    "cscc_gsp_bound",
    "cscc_reduced_lp",
    "default_config",
    "min_ratio",
    "secc_best_m0_bound",
    "secc_closed_form_m1",
    "secc_closed_form_wL1",
    "secc_gsp_bound",
    "secc_m0_bound",
    "secc_reduced_lp",
    "solve_min",
    "verify_certificate",
]
