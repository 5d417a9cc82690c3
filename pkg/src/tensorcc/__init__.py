"""Clustering coefficients of tensor products of graphs, implicit and explicit."""

from tensorcc.closed_forms import (
    ProductCcReport,
    SrgParams,
    cc_lower_bound,
    cc_upper_bound_check,
    coupling_factor,
    product_cc_report,
    product_global_cc,
    product_local_cc,
    product_triangles,
    regular_product_cc,
    srg_cc,
    srg_detect,
    srg_product_cc,
)
from tensorcc.errors import CapacityError, DomainError, GraphInputError, ParseError, TensorCCError
from tensorcc.graph import Graph
from tensorcc.product import decode, encode, product_degree, tensor_product
from tensorcc.triangles import (
    CcReport,
    cc_report,
    global_cc,
    is_triangle_free,
    local_cc,
    oracle_triangles,
    triangles_per_vertex,
)

__version__ = "0.1.0"

__all__ = [
    "CapacityError",
    "CcReport",
    "DomainError",
    "Graph",
    "GraphInputError",
    "ParseError",
    "ProductCcReport",
    "SrgParams",
    "TensorCCError",
    "cc_lower_bound",
    "cc_report",
    "cc_upper_bound_check",
    "coupling_factor",
    "decode",
    "encode",
    "global_cc",
    "is_triangle_free",
    "local_cc",
    "oracle_triangles",
    "product_cc_report",
    "product_degree",
    "product_global_cc",
    "product_local_cc",
    "product_triangles",
    "regular_product_cc",
    "srg_cc",
    "srg_detect",
    "srg_product_cc",
    "tensor_product",
    "triangles_per_vertex",
]
