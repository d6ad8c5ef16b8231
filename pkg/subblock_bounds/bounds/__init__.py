"""Finite-length bounds for CSCCs and SECCs."""

from .cscc import (
    CsccBoundHandler,
    cscc_closed_form,
    cscc_closed_form_t1,
    cscc_closed_form_t2,
    cscc_gen_codesize_bound,
    cscc_gsp_bound,
    cscc_reduced_lp,
)
from .secc import (
    SeccBoundHandler,
    build_certificate_table1,
    build_certificate_table2,
    build_secc_program,
    secc_best_m0_bound,
    secc_closed_form,
    secc_closed_form_m1,
    secc_closed_form_wL1,
    secc_gsp_bound,
    secc_m0_bound,
    secc_reduced_lp,
)

__all__ = [
    "CsccBoundHandler",
    "SeccBoundHandler",
    "build_certificate_table1",
    "build_certificate_table2",
    "build_secc_program",
    "cscc_closed_form",
    "cscc_closed_form_t1",
    "cscc_closed_form_t2",
    "cscc_gen_codesize_bound",
    "cscc_gsp_bound",
    "cscc_reduced_lp",
    "secc_best_m0_bound",
    "secc_closed_form",
    "secc_closed_form_m1",
    "secc_closed_form_wL1",
    "secc_gsp_bound",
    "secc_m0_bound",
    "secc_reduced_lp",
]
