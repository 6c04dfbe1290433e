"""Exact hook statistics, Littlewood decompositions and q-series for self-conjugate partitions."""

from .abacus import (
    AbacusWord,
    LittlewoodImage,
    check_sc_properties,
    compose,
    decode,
    decompose,
    encode,
    is_t_core,
    t_core,
)
from .partitions import (
    Partition,
    ScSplit,
    ScType,
    a_star_oracle,
    conjugate,
    count_distinct_odd,
    enumerate_partitions,
    enumerate_self_conjugate,
    hook_lengths,
    is_self_conjugate,
    n_hooks,
    sc_split,
)
from .qseries import X, QSeries, XPoly
from .verify import VerificationReport

__version__ = "0.1.0"
