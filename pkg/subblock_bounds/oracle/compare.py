from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from ..bounds.cscc import cscc_gsp_bound
from ..bounds.secc import secc_gsp_bound
from ..config import BoundsConfig, default_config
from ..logging import BoundsLogger
from ..lp import solve_min
from ..metrics import BoundsFunctionName, BoundsMetrics
from ..schemas import CodeFamily
from ..types.errors import DeskCapExceededError
from ..types.instances import CsccInstance, SeccInstance
from .clique import exhaustive_code_size
from .space import full_lp


@dataclass(frozen=True)
class OracleComparison:
    """Reduced program against the brute-force ground truth for one instance."""

    family: CodeFamily
    t: int
    reduced_value: Fraction
    full_value: Fraction
    code_size: int

    @property
    def reduction_equal(self) -> bool:
        return self.reduced_value == self.full_value

    @property
    def bound_valid(self) -> bool:
        return self.code_size <= self.reduced_value


def compare_with_oracle(
    family: Union[CodeFamily, str],
    m: int,
    L: int,
    w: int,
    d: int,
    config: Optional[BoundsConfig] = None,
    logger: Optional[BoundsLogger] = None,
    metrics: Optional[BoundsMetrics] = None,
) -> OracleComparison:
    """
    Solve the reduced and full programs and search for a largest code.

    Raises:
        DeskCapExceededError: the instance is too large for brute force.
    """
    config = config or default_config
    family = CodeFamily(family)
    if m * L > config.max_full_lp_length:
        raise DeskCapExceededError(
            "full-LP word length mL", m * L, config.max_full_lp_length
        )

    if family is CodeFamily.CSCC:
        inst = CsccInstance(m, L, w, d)
        reduced = cscc_gsp_bound(inst)
    else:
        inst = SeccInstance(m, L, w, d)
        reduced = secc_gsp_bound(inst, logger, metrics)

    program = full_lp(family, m, L, w, inst.t, config)
    full = solve_min(program, logger, metrics, BoundsFunctionName.FULL_LP).value
    code_size = exhaustive_code_size(family, m, L, w, d, config, logger, metrics)

    result = OracleComparison(family, inst.t, reduced, full, code_size)
    if logger is not None:
        log = logger.info if result.reduction_equal and result.bound_valid else logger.error
        log(
            f"Oracle comparison for {family.value}({m},{L},{w}) d={d}",
            category="oracle",
            auxiliary={
                "reduced": str(reduced),
                "full": str(full),
                "code_size": code_size,
                "full_shape": f"{program.shape[0]}x{program.shape[1]}",
            },
        )
    return result
