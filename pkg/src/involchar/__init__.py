"""Factorizations of permutations into two involutions, and symmetric-group
characters computed by the Murnaghan-Nakayama rule."""

from .characters import (
    BorderStrip,
    CharacterTable,
    RimHookTableau,
    abs_column_sum,
    border_strips,
    char_table,
    is_cancellation_free,
    mn_character,
    rim_hook_tableaux,
)
from .counting import count_decompositions, r_poly
from .errors import ContractError, InvariantViolation, ParseError, ResourceLimitError
from .graphs import (
    GraphComponent,
    HookBlockInvolution,
    InvolutionProductGraph,
    build_graph,
    components,
    enumerate_decompositions,
    extract_hook_block,
)
from .partitions import (
    Partition,
    centralizer_order,
    enumerate_partitions,
    from_multiplicity,
    parse_partition,
    to_multiplicity,
)
from .permutations import (
    Permutation,
    canonical_of_type,
    compose,
    cycle_type,
    enumerate_involutions,
    format_cycles,
    is_involution,
    parse_cycles,
)

__version__ = "0.1.0"
