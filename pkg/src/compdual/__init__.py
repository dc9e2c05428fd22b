"""Operators on compositions and the dual graded / dual filtered graphs they generate."""

from .compositions import (
    ZERO,
    compositions_up_to,
    display,
    enumerate_compositions,
    enumerate_weak,
    flatten,
    largest_part,
    size,
)
from .formal import DT, ID, UT, D, FormalSum, LinearOp, U, commutator_minus
from .graphs import RankedGraph, build_Lc, build_Qc, build_Qct, build_Rc
from .operators import (
    append,
    box_add,
    box_remove,
    box_remove_set,
    eval_word,
    jdt_add,
    jdt_add_set,
)

__version__ = "0.1.0"
