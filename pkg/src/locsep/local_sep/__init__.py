"""Local cutvertices, local 2-separators and the checks built on them."""

from .crossing import (crosses, crosses_by_enumeration, crossing_separators, crossing_symmetry_check,
                       crossing_walk, is_totally_nested, separator_crosses)
from .insertion import (InconsistencyError, InsertionResult, PreconditionError, edge_insertion,
                        insertion_preconditions)
from .lemmas import (downward_locality_check, involution_suite, non_involution_suite, orbit_closure_check,
                     section_lemma_suite, traversal_kinds)
from .quotient import QuotientError, QuotientResult, loc2sep_to_cutvertex_check, quotient_by_involution
from .report import FAIL, PASS, SKIPPED, Check, combine, skipped
from .separators import (ConnectivityGraph, LocalSeparation, LocalSeparator, NotASeparator, connectivity_graph,
                         find_local_2separators, first_local_separator, is_local_2separator, is_local_cutvertex,
                         iter_local_2separators, local_2separations, local_cutvertices,
                         separations_from_components, separator_representatives)
from .traversal import (TraversalProfile, cycle_weak_traversal_check, cycles_through, element_traverses_at,
                        parity_lemma_check, sample_cycles,
                        short_cycles, strong_traversal_check, traversal_profile, word_walks_traverse)
