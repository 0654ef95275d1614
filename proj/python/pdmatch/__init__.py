"""Maximum bipartite PD-matching: solvers, classifier and generators."""

from ._pdmatch import (
    BudgetExceeded,
    ClassMismatch,
    Instance,
    ParseError,
    algorithms,
    class_label,
    classify,
    fixture,
    gen_3partition,
    gen_monotonous,
    gen_random,
    gen_types,
    gen_udep_mono,
    gen_vdep,
    solve,
    verify,
)

__all__ = [
    "BudgetExceeded",
    "ClassMismatch",
    "Instance",
    "ParseError",
    "algorithms",
    "class_label",
    "classify",
    "fixture",
    "gen_3partition",
    "gen_monotonous",
    "gen_random",
    "gen_types",
    "gen_udep_mono",
    "gen_vdep",
    "solve",
    "verify",
]
