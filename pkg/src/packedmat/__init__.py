"""The Hopf algebra MT(k) of k-packed matrices, its bases, quotients and subalgebras."""

from .asm import Asm, VertexStats, asm_from_packed, enumerate_asm, six_vertex_stats
from .embeddings import ColoredPermutation, UniformBlockPermutation, alpha, beta, is_ubp_support
from .enumeration import count_packed, count_packed_by_size, count_packed_by_weight, enumerate_packed
from .hopf import antipode_F, coproduct_F, dual_coproduct_F, dual_product_F, product_F
from .lincomb import Element
from .matrix import PackedMatrix, format_matrix, over, parse_matrix, under

__all__ = [
    "Asm", "ColoredPermutation", "Element", "PackedMatrix", "UniformBlockPermutation", "VertexStats",
    "alpha", "antipode_F", "asm_from_packed", "beta", "coproduct_F", "count_packed",
    "count_packed_by_size", "count_packed_by_weight", "dual_coproduct_F", "dual_product_F",
    "enumerate_asm", "enumerate_packed", "format_matrix", "is_ubp_support", "over",
    "parse_matrix", "product_F", "six_vertex_stats", "under",
]
