from .chain import ChainCheck, ChainReport, bound_chain_check
from .congestion import (SubcubicEmbedding, congestion, embedding_to_tcd, node_loads,
                         vertex_congestion_exact)
from .treecut import TreeCutDecomposition, make_tcd, screewidth_decide, screewidth_exact, tcd_width
from .treewidth import elimination_width, treewidth_exact

__all__ = [
    "ChainCheck", "ChainReport", "bound_chain_check",
    "SubcubicEmbedding", "congestion", "embedding_to_tcd", "node_loads", "vertex_congestion_exact",
    "TreeCutDecomposition", "make_tcd", "screewidth_decide", "screewidth_exact", "tcd_width",
    "elimination_width", "treewidth_exact",
]
