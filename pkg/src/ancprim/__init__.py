"""Cyclometers of abelian number fields and primitivity of nilpotent linear groups."""

from .anc import AncGroup, Kind, parse_group
from .cyclometers import cyclometer, cyclometer_table, cyclometers
from .fields import (
    RATIONALS,
    AbelianField,
    BudgetExceeded,
    CycSpec,
    Flavor,
    canonicalize,
    compositum,
    cyclotomic,
    intersect,
    quadratic,
)
from .kernels import BACKEND
from .literals import parse_field
from .primitivity import (
    FieldDescriptor,
    Verdict,
    decide,
    decide_raw,
    describe,
    enumerate_degree,
    quadratic_field,
    witness_field,
)

__version__ = "0.1.0"
