"""Reconstruct tournament score sequences from score sets."""

from .bounds import BoundResult, caps_ok, exact_xn, lookahead_feasible, upper_bound_xk
from .core import (
    ExponentSet,
    PrefixState,
    ScoreSequence,
    ScoreSet,
    expand,
    first_violation,
    is_perfect_square,
    isqrt,
    landau_check,
    landau_check_grouped,
)
from .errors import InputError, InputRangeError, ResourceLimitError, ScoreSeqError
from .estimator import ScoreSequenceEnumerator, ScoreSequenceReconstructor
from .fastsearch import end_phase, reconstruct_fast
from .modular import ModularContext, build_context, check_f_witness, potential, shift_sol
from .net import Mode, Net, NetEntry, build_net, enumerate_all, reconstruct_one
from .oracle import OracleReport, brute_force_all, reid_scan

__version__ = "0.1.0"
