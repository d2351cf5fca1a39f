"""Exact machinery for edge decompositions into pattern copies and single
edges: decomposition families, their extremal numbers, optimal packings,
and the constructive two-pass deletion pipeline, all at desk scale.
"""

from .errors import (BudgetError, DomainError, HdecompError, ParseError,
                     SizeError)
from .graph import (Graph, complete_multipartite, named_graph, plant,
                    random_graph, turan_graph)
from .graph6 import emit_graph6, parse_graph6
from .canon import CanonicalForm, are_isomorphic, canonical_form, canonical_key
from .embed import Embedding, contains_subgraph, find_embeddings
from .coloring import chromatic_number, proper_colorings
from .enumeration import enumerate_graphs
from .family import (GraphFamily, chromatic_excess, decomposition_family,
                     is_edge_critical, minimal_subfamily)
from .extremal import (ExtremalRecord, biex, check_fact_biex_sigma,
                       extremal_number, turan_number)
from .packing import (HDecomposition, Packing, max_packing, phi_exact,
                      phi_max_over_n)
from .pipeline import (PipelineParams, decompose, lower_bound_construction,
                       verify_decomposition)

__version__ = "0.1.0"
