"""Exact arithmetic for threefold canonical thresholds.

Membership in the set C and in HT2, witness divisors for elements of C, and
exhaustive sweeps of the floor/ceiling claims for the singular families.
"""

__version__ = "0.1.0"

from .arith import euclid_pair, parse_rational, format_rational, represent
from .thresholds import (
    FOUR_FIFTHS,
    CParams,
    HT2Params,
    c_member,
    c_to_ht2,
    c_witnesses,
    enumerate_interval,
    ht2_member,
    ht2_to_c,
    t3_classify,
    accumulation_clusters,
)
from .witness import build_witness, certify_witness
from .verifier import (
    inclusion_check,
    sweep_cA,
    sweep_cAn,
    sweep_cD,
    sweep_cD2,
    sweep_smooth,
)
