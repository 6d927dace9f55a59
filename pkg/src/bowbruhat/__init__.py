"""Bruhat-type orders on binary contingency tables, with brane and resolution calculus."""

from .brane import (BraneDiagram, TieDiagram, bct_to_tie, charges, enumerate_tie_diagrams,
                    format_diagram, hw_step, parse_diagram, separate, separated_diagram, tie_to_bct)
from .curves import (BlockSwapMove, CocharacterSpec, CurveDigraph, MatchedBlock, TangentWeight,
                     apply_block_swap, block_swap_moves, curve_digraph, geometric_relation,
                     is_attractive, matched_blocks, minimal_decomposition, tangent_weight)
from .enumeration import (BctFamily, count_bcts, enumerate_bcts, gale_ryser_feasible,
                          interchange_graph, is_connected)
from .matrix import (BinaryMatrix, CornerSelection, MarginPair, find_L2, interchange,
                     is_secondary_cover, leq_bruhat, partial_sum_matrix)
from .orders import (FiniteRelation, HasseDiagram, bruhat_relation, compare_relations, hasse,
                     secondary_hasse_direct, secondary_relation)
from .resolution import (ChargeResolution, ResolvedMatrix, check_resolution_compatibility,
                         column_resolutions, compatibility_relation, maximal_resolutions,
                         merge_columns, resolve_charges, two_column_leq)
from .sweep import SweepConfig, VerificationReport, run_sweep

__version__ = "0.1.0"
