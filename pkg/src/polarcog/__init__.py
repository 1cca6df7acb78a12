"""Polarity of cographs: recognition, certificates and minimal obstructions."""

from .catalog import Catalog, ObstructionEntry, build_catalog_k2, default_catalog, family_member
from .certify import Certificate, certify, check_certificate
from .cograph import NotCographError, build_cotree, cograph_code, enumerate_cographs, is_cograph
from .expr import eval_expr, format_expr, parse_expr
from .formats import from_edge_list, from_graph6, to_edge_list, to_graph6
from .graph import Graph
from .obstructions import (
    derive_obstructions,
    extract_minimal_obstruction,
    is_minimal_obstruction,
    pc_closure,
)
from .polarity import PolarPartition, extract_partition, is_monopolar, is_polar, is_sk_polar

__all__ = [
    "Catalog", "Certificate", "Graph", "NotCographError", "ObstructionEntry", "PolarPartition",
    "build_catalog_k2", "build_cotree", "certify", "check_certificate", "cograph_code",
    "default_catalog", "derive_obstructions", "enumerate_cographs", "eval_expr",
    "extract_minimal_obstruction", "extract_partition", "family_member", "format_expr",
    "from_edge_list", "from_graph6", "is_cograph", "is_minimal_obstruction", "is_monopolar",
    "is_polar", "is_sk_polar", "parse_expr", "pc_closure", "to_edge_list", "to_graph6",
]
