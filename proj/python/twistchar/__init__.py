"""Exact invariants of twisted graded categories.

Symmetric-group class data, braiding character tables, Koszul signs,
exterior/symmetric power generating functions and chromatic character
decisions, all in exact arithmetic, with a brute-force tensor oracle for
cross-checking the closed forms.
"""

from ._core import (
    EnumerationLimitError,
    InversionError,
    Twist,
    TypeMismatchError,
    braiding_character,
    bz2_cardinality,
    canonical_representative,
    centralizer_order,
    chromatic_character,
    chromatic_decision,
    class_size,
    count_twists,
    cycle_counts,
    cyclic_loop_components,
    day_convolve,
    dim_shift,
    dual_stem_group,
    ext_dim,
    ext_series,
    ext_series_product,
    induced_character_value,
    integral_bz2_sq,
    is_invertible,
    koszul_sign,
    loop_bz2_integral,
    no_truncated_unit_check,
    num_cycles,
    partitions,
    perm_trace,
    projector_dim,
    series_invert,
    series_mul,
    signed_unit_eval,
    signed_unit_mul,
    stable_stem,
    transchromatic_table,
    truncated_units,
    verify_sym_ext_identity,
)

__all__ = [
    "EnumerationLimitError",
    "InversionError",
    "Twist",
    "TypeMismatchError",
    "braiding_character",
    "bz2_cardinality",
    "canonical_representative",
    "centralizer_order",
    "chromatic_character",
    "chromatic_decision",
    "class_size",
    "count_twists",
    "cycle_counts",
    "cyclic_loop_components",
    "day_convolve",
    "dim_shift",
    "dual_stem_group",
    "ext_dim",
    "ext_series",
    "ext_series_product",
    "induced_character_value",
    "integral_bz2_sq",
    "is_invertible",
    "koszul_sign",
    "loop_bz2_integral",
    "no_truncated_unit_check",
    "num_cycles",
    "partitions",
    "perm_trace",
    "projector_dim",
    "series_invert",
    "series_mul",
    "signed_unit_eval",
    "signed_unit_mul",
    "stable_stem",
    "transchromatic_table",
    "truncated_units",
    "verify_sym_ext_identity",
]

__version__ = "0.1.0"
