"""Compatibility exports for the service layer."""

from crossing_machine.service.bounds import (
    RationalBound,
    bound_report,
    compare_constants,
    construction_bound,
    decimal_expansion,
)
from crossing_machine.service.common import CounterConsistencyError, PatternTally, pattern_total
from crossing_machine.service.counter import (
    AngularOrder,
    HalfplaneCounts,
    angular_orders,
    apex_contributions,
    apex_halfplane_counts,
    count_crossings,
    count_patterns,
)
from crossing_machine.service.heuristic import (
    SearchTrace,
    propose,
    random_start,
    run,
    sample_offset,
    step,
)
from crossing_machine.service.oracle import (
    classify_pattern,
    is_convex_quadruple,
    oracle_count,
    oracle_pattern_tally,
    quadruple_pattern_tally,
    subset_weight_sum,
)
from crossing_machine.service.records import RecordTable, load_record_table, verify_records

__all__ = [
    "AngularOrder",
    "CounterConsistencyError",
    "HalfplaneCounts",
    "PatternTally",
    "RationalBound",
    "RecordTable",
    "SearchTrace",
    "angular_orders",
    "apex_contributions",
    "apex_halfplane_counts",
    "bound_report",
    "classify_pattern",
    "compare_constants",
    "construction_bound",
    "count_crossings",
    "count_patterns",
    "decimal_expansion",
    "is_convex_quadruple",
    "load_record_table",
    "oracle_count",
    "oracle_pattern_tally",
    "pattern_total",
    "propose",
    "quadruple_pattern_tally",
    "random_start",
    "run",
    "sample_offset",
    "step",
    "subset_weight_sum",
    "verify_records",
]
