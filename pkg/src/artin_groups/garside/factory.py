"""Cached construction of Garside structures per graph."""

from functools import lru_cache
from typing import Optional

from .structure import GarsideStructure
from ..coxeter.graph import CoxeterGraph
from ..coxeter.group import build_root_system
from ..utils.config import config
from ..utils.logging import get_logger

logger = get_logger(__name__)


def get_garside_structure(graph: CoxeterGraph, max_degree: Optional[int] = None) -> GarsideStructure:
    """Build (once per graph and degree bound) the Garside structure of a spherical graph.

    Args:
        graph: Coxeter graph, every component of spherical type
        max_degree: Degree bound of the coordinate field; defaults to field.max_degree

    Returns:
        GarsideStructure over the graph's root system

    Raises:
        NonSphericalError: some component is not spherical
        FieldError: the labels need a field above the degree bound
    """
    if max_degree is None:
        max_degree = config.max_field_degree
    return _get_garside_structure(graph, max_degree)


@lru_cache(maxsize=32)
def _get_garside_structure(graph: CoxeterGraph, max_degree: int) -> GarsideStructure:
    rs = build_root_system(graph, max_degree)
    structure = GarsideStructure(rs)
    logger.info(f"Garside structure ready for {graph}: l(Delta) = {structure.delta_length}")
    return structure
