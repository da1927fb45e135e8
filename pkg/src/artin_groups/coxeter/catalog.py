"""Finite-type catalog: type identifiers, standard graphs and classification.

A connected Coxeter graph is spherical exactly when it is isomorphic, as a
labelled graph, to one of A_n, B_n, D_n, E_6, E_7, E_8, F_4, H_3, H_4 or
I_2(p). Classification matches against these catalog graphs; no sign
computation on the cosine matrix is involved.
"""

import re
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Dict, List, Optional, Tuple

import networkx as nx
from networkx.algorithms.isomorphism import categorical_edge_match

from .graph import CoxeterGraph, INFINITY, components, is_connected
from ..errors import DisconnectedGraphError, NonSphericalError
from ..utils.logging import get_logger

logger = get_logger(__name__)

FAMILIES = ('A', 'B', 'D', 'E', 'F', 'H', 'I2')

_FIXED_RANKS = {'E': (6, 7, 8), 'F': (4,), 'H': (3, 4)}
_MIN_RANK = {'A': 1, 'B': 2, 'D': 4}
_FIXED_COXETER_NUMBERS = {('E', 6): 12, ('E', 7): 18, ('E', 8): 30, ('F', 4): 12, ('H', 3): 10, ('H', 4): 30}

_edge_match = categorical_edge_match('label', None)


@dataclass(frozen=True, order=True)
class TypeID:
    """Type of a connected spherical Coxeter graph.

    `param` is the rank for A, B, D, E, F, H and the label p for I2(p).
    Use `TypeID.of` to build one: it maps I2(3) to A2 and I2(4) to B2.
    """

    family: str
    param: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.family in _FIXED_RANKS:
            if self.param not in _FIXED_RANKS[self.family]:
                raise ValueError(f"{self.family}{self.param} is not a finite type")
        elif self.family == 'I2':
            if self.param < 5:
                raise ValueError("I2(p) needs p >= 5; use TypeID.of for A2/B2")
        elif self.param < _MIN_RANK[self.family]:
            raise ValueError(f"{self.family}{self.param} needs rank >= {_MIN_RANK[self.family]}")

    @classmethod
    def of(cls, family: str, param: int) -> "TypeID":
        """Canonical constructor."""
        if family == 'I2' and param == 3:
            return cls('A', 2)
        if family == 'I2' and param == 4:
            return cls('B', 2)
        if family == 'G' and param == 2:
            return cls('I2', 6)
        return cls(family, param)

    @classmethod
    def parse(cls, text: str) -> "TypeID":
        """Parse names such as 'A3', 'E6', 'I2(5)' or 'G2'."""
        text = text.strip()
        match = re.fullmatch(r'I2\((\d+)\)', text)
        if match:
            return cls.of('I2', int(match.group(1)))
        match = re.fullmatch(r'([ABDEFGH])(\d+)', text)
        if not match:
            raise ValueError(f"cannot parse type name {text!r}")
        return cls.of(match.group(1), int(match.group(2)))

    @property
    def rank(self) -> int:
        return 2 if self.family == 'I2' else self.param

    @property
    def coxeter_number(self) -> int:
        return coxeter_number(self)

    @property
    def root_count(self) -> int:
        """|Phi| = n h."""
        return self.rank * self.coxeter_number

    @property
    def name(self) -> str:
        if self.family == 'I2':
            return f"I2({self.param})"
        return f"{self.family}{self.param}"

    def to_dict(self) -> Dict[str, Any]:
        return {"type": self.family, "param": self.param}

    def __str__(self) -> str:
        return self.name


def coxeter_number(t: TypeID) -> int:
    """Coxeter number h of an irreducible finite Coxeter group."""
    if t.family == 'A':
        return t.param + 1
    if t.family == 'B':
        return 2 * t.param
    if t.family == 'D':
        return 2 * t.param - 2
    if t.family == 'I2':
        return t.param
    return _FIXED_COXETER_NUMBERS[(t.family, t.param)]


def mu_is_identity(t: TypeID) -> bool:
    """Whether conjugation by the fundamental element fixes every generator.

    It does not exactly for A_n (n >= 2), D_n (n odd), E_6 and I2(p) (p odd).
    """
    if t.family == 'A':
        return t.param == 1
    if t.family == 'D':
        return t.param % 2 == 0
    if t.family == 'E':
        return t.param != 6
    if t.family == 'I2':
        return t.param % 2 == 0
    return True


def catalog_graph(t: TypeID) -> CoxeterGraph:
    """Standard graph of a type, vertices s1..sn in Bourbaki numbering."""
    n = t.rank
    names = tuple(f"s{i}" for i in range(1, n + 1))
    edges: List[Tuple[str, str, int]] = []

    def link(i, j, m=3):
        edges.append((names[i - 1], names[j - 1], m))

    if t.family == 'I2':
        link(1, 2, t.param)
    elif t.family == 'A':
        for i in range(1, n):
            link(i, i + 1)
    elif t.family == 'B':
        for i in range(1, n - 1):
            link(i, i + 1)
        link(n - 1, n, 4)
    elif t.family == 'D':
        for i in range(1, n - 1):
            link(i, i + 1)
        link(n - 2, n)
    elif t.family == 'E':
        link(1, 3)
        link(2, 4)
        for i in range(3, n):
            link(i, i + 1)
    elif t.family == 'F':
        link(1, 2)
        link(2, 3, 4)
        link(3, 4)
    elif t.family == 'H':
        link(1, 2, 5)
        for i in range(2, n):
            link(i, i + 1)
    return CoxeterGraph(vertices=names, edges=tuple(edges))


@lru_cache(maxsize=None)
def _catalog_nx(t: TypeID) -> nx.Graph:
    return catalog_graph(t).to_networkx()


def _candidates(g: CoxeterGraph) -> List[TypeID]:
    n = g.rank
    if n == 1:
        return [TypeID('A', 1)]
    if n == 2:
        (label,) = g.labels()
        return [TypeID.of('I2', label)]
    found = [TypeID('A', n), TypeID('B', n)]
    if n >= 4:
        found.append(TypeID('D', n))
    for family, ranks in _FIXED_RANKS.items():
        if n in ranks:
            found.append(TypeID(family, n))
    return found


def classify(g: CoxeterGraph) -> Optional[TypeID]:
    """Type of a connected graph, or None when it is not spherical.

    Raises:
        DisconnectedGraphError: g is not connected
    """
    if not is_connected(g):
        raise DisconnectedGraphError(f"classify needs a connected graph, got {g}")
    labels = g.labels()
    if any(m == INFINITY for m in labels) or len(labels) != g.rank - 1:
        return None
    if g.rank > 2 and any(m > 5 for m in labels):
        return None
    g_nx = g.to_networkx()
    for t in _candidates(g):
        if nx.is_isomorphic(g_nx, _catalog_nx(t), edge_match=_edge_match):
            logger.debug(f"Classified {g} as {t}")
            return t
    return None


def spherical_components(g: CoxeterGraph) -> List[Tuple[CoxeterGraph, TypeID]]:
    """Every connected component with its type.

    Raises:
        NonSphericalError: some component is not in the catalog
    """
    result = []
    for comp in components(g):
        t = classify(comp)
        if t is None:
            raise NonSphericalError(
                f"component on {{{', '.join(comp.vertices)}}} is not of spherical type",
                comp.vertices,
            )
        result.append((comp, t))
    return result


def require_type(g: CoxeterGraph) -> TypeID:
    """Type of a connected spherical graph, raising on anything else."""
    t = classify(g)
    if t is None:
        raise NonSphericalError(f"{g} is not of spherical type", g.vertices)
    return t


def graphs_equal(g1: CoxeterGraph, g2: CoxeterGraph) -> bool:
    """Labelled-graph isomorphism of two spherical graphs.

    Raises:
        NonSphericalError: a component of either graph is not spherical
    """
    left = Counter(t for _, t in spherical_components(g1))
    right = Counter(t for _, t in spherical_components(g2))
    return left == right


def classification_report(g: CoxeterGraph) -> Dict[str, Any]:
    """JSON-ready component listing."""
    return {
        "components": [
            {**t.to_dict(), "vertices": list(comp.vertices)}
            for comp, t in spherical_components(g)
        ]
    }


def spherical_catalog(max_rank: int = 4, dihedral: Tuple[int, int] = (5, 12)) -> List[TypeID]:
    """Connected types of rank <= max_rank plus I2(p) for p in the given range."""
    types: List[TypeID] = []
    for n in range(1, max_rank + 1):
        types.append(TypeID('A', n))
        if n >= 2:
            types.append(TypeID('B', n))
        if n >= 4:
            types.append(TypeID('D', n))
        for family, ranks in _FIXED_RANKS.items():
            if n in ranks:
                types.append(TypeID(family, n))
    if max_rank >= 2:
        lo, hi = dihedral
        types.extend(TypeID('I2', p) for p in range(lo, hi + 1))
    return types
