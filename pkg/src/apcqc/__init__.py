"""APC distance of logic functions over F_p and the logic-state quantum codes
built from them, with an exact Knill-Laflamme oracle."""

from .apc import UNATTAINED, ApcResult, apc_distance, char_sum
from .codec import (
    CodeSpec,
    DomainError,
    build_betas,
    build_betas_large_p,
    build_betas_small_p,
    check_wh_constraint,
    lemma1_distance,
    max_K,
    mds_saturates,
    singleton_bound_K,
    theorem3_predicate,
)
from .cyclotomic import CycInt, root_power
from .ffvec import DimensionError, FpVector, dot, wh, ws
from .kernels import BACKEND
from .klverify import PhaseState, apply_error, build_state, inner, kl_check, kl_distance
from .logicfn import FpFunction, ParseError, add_linear, parse_poly, read_table, write_table

__version__ = "0.1.0"
