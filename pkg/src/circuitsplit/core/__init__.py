from .extrat import ExtRat, INF, NEG_INF, ZERO, ONE, to_ext
from .matrix import ExtMatrix, parse_matrix, serialize_matrix
from .network import (BoundaryVertex, CircularNetwork, Edge, is_noncrossing, parse_network,
                      plain_network, serialize_network)
from .systems import (CompactifiedSplitSystem, WeightedSplitSystem, canonical_side, is_arc,
                      normalize_order, parse_split_system)
from .embedding import EmbeddingReport, validate_embedding
