"""Exact proportional cake-cutting among families.

Thin Python surface over the C++ core. All rational values cross the
boundary as "p/q" strings; use fractions.Fraction to compute with them.
"""

from ._famcake import (  # noqa: F401
    Instance,
    InfeasibleTargetError,
    SearchLimitError,
    ValueMeasure,
    __version__,
    average_measure,
    comp,
    common_refinement,
    divide_average,
    divide_democratic_k,
    divide_democratic_two,
    divide_unanimous,
    evaluate,
    exact_ratio_cut,
    gen_preset,
    gen_random,
    min_components,
    min_cut_exact_search,
    nonadditivity_witness,
    positivity_min_components,
    render_svg,
    render_text,
    run_bench,
    validate_partition,
)

__all__ = [
    "Instance",
    "InfeasibleTargetError",
    "SearchLimitError",
    "ValueMeasure",
    "__version__",
    "average_measure",
    "comp",
    "common_refinement",
    "divide_average",
    "divide_democratic_k",
    "divide_democratic_two",
    "divide_unanimous",
    "evaluate",
    "exact_ratio_cut",
    "gen_preset",
    "gen_random",
    "min_components",
    "min_cut_exact_search",
    "nonadditivity_witness",
    "positivity_min_components",
    "render_svg",
    "render_text",
    "run_bench",
    "validate_partition",
]
