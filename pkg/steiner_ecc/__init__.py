from . import fields, generators, inputs, oracle, transforms
from .tree import Tree, VertexSet, PathDescriptor, build_tree  # noqa
from .kecc import (  # noqa
    EccReport,
    avg_steiner_k_ecc,
    steiner_k_diameter,
    steiner_k_ecc,
    steiner_k_ecc_all,
    steiner_k_radius,
)
from .oracle import SteinerResult, ecc_k_bruteforce, steiner_distance  # noqa
from .transforms import (  # noqa
    TransformStep,
    collapse_to_star,
    find_transform_path,
    pi_inverse,
    pi_transform,
    stretch_to_path,
)
from .generators import generate
from .inputs import parse_edge_list, format_edge_list
from .marshalling import marshal
from .errors import SteinerError, ParseError, TreeError, ValidationError, BudgetExceeded
from .__about__ import __version__, __description__

__all__ = (
    "__version__",
    "__description__",
    "Tree",
    "VertexSet",
    "PathDescriptor",
    "build_tree",
    "EccReport",
    "steiner_k_ecc",
    "steiner_k_ecc_all",
    "avg_steiner_k_ecc",
    "steiner_k_radius",
    "steiner_k_diameter",
    "SteinerResult",
    "steiner_distance",
    "ecc_k_bruteforce",
    "TransformStep",
    "pi_transform",
    "pi_inverse",
    "find_transform_path",
    "collapse_to_star",
    "stretch_to_path",
    "generate",
    "parse_edge_list",
    "format_edge_list",
    "marshal",
    "fields",
    "generators",
    "inputs",
    "oracle",
    "transforms",
    "SteinerError",
    "ParseError",
    "TreeError",
    "ValidationError",
    "BudgetExceeded",
)
