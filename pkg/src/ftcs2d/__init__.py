"""Two-dimensional finite-type constrained systems and their graph presentations."""

from .blocks import EMPTY, Alphabet, Block, ConstraintSystem, all_blocks, embed_forbidden
from .presentation import (
    ClassView,
    Presentation,
    QuadrupleTable,
    build,
    class_connections,
    class_view,
    column_presentation,
    combined,
    quadruples,
    row_presentation,
)
from .generation import (
    DeadEnd,
    GenerationPolicy,
    GenerationStats,
    IdentifierGrid,
    NotRealizable,
    candidates,
    enumerate_blocks,
    generate_block,
    generate_col_strip,
    generate_row_strip,
    is_generated,
)
from .oracle import BudgetExceeded, count_members, enumerate_members
from .analysis import CapacityEstimate, CountTable, capacity_estimate, count_by_profile, count_periodic

__all__ = [
    "EMPTY",
    "Alphabet",
    "Block",
    "ConstraintSystem",
    "all_blocks",
    "embed_forbidden",
    "ClassView",
    "Presentation",
    "QuadrupleTable",
    "build",
    "class_connections",
    "class_view",
    "column_presentation",
    "combined",
    "quadruples",
    "row_presentation",
    "DeadEnd",
    "GenerationPolicy",
    "GenerationStats",
    "IdentifierGrid",
    "NotRealizable",
    "candidates",
    "enumerate_blocks",
    "generate_block",
    "generate_col_strip",
    "generate_row_strip",
    "is_generated",
    "BudgetExceeded",
    "count_members",
    "enumerate_members",
    "CapacityEstimate",
    "CountTable",
    "capacity_estimate",
    "count_by_profile",
    "count_periodic",
]
