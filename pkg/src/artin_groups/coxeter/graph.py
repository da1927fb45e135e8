"""Coxeter graphs: data model, text format, components and the odd-label graph."""

import math
import re
from dataclasses import dataclass, field
from functools import reduce
from pathlib import Path
from typing import Dict, Iterable, List, Mapping, Optional, Tuple, Union

import networkx as nx

from ..errors import GraphParseError, UnknownGeneratorError
from ..utils.logging import get_logger

logger = get_logger(__name__)

INFINITY = math.inf

Label = Union[int, float]

NAME_PATTERN = re.compile(r'[A-Za-z][A-Za-z0-9_]*\Z')


@dataclass(frozen=True)
class CoxeterGraph:
    """A Coxeter matrix over an ordered vertex set.

    Only labels m_st >= 3 are stored; every other off-diagonal entry is 2
    and the diagonal is 1. The vertex order fixes every lexicographic
    tie-break in the library.
    """

    vertices: Tuple[str, ...]
    edges: Tuple[Tuple[str, str, Label], ...] = ()
    _index: Dict[str, int] = field(default=None, compare=False, hash=False, repr=False)
    _labels: Dict[frozenset, Label] = field(default=None, compare=False, hash=False, repr=False)

    def __post_init__(self):
        index = {v: i for i, v in enumerate(self.vertices)}
        if len(index) != len(self.vertices):
            raise ValueError("vertex names must be distinct")
        labels = {}
        normalized = []
        for s, t, m in self.edges:
            if s not in index or t not in index:
                raise UnknownGeneratorError(f"edge {s}-{t} uses an unknown vertex")
            if s == t:
                raise ValueError(f"self-loop on {s}")
            if m == 2:
                continue
            if m != INFINITY and (not isinstance(m, int) or m < 3):
                raise ValueError(f"invalid label {m!r} on edge {s}-{t}")
            key = frozenset((s, t))
            if key in labels:
                raise ValueError(f"duplicate edge {s}-{t}")
            labels[key] = m
            if index[s] > index[t]:
                s, t = t, s
            normalized.append((s, t, m))
        normalized.sort(key=lambda e: (index[e[0]], index[e[1]]))
        object.__setattr__(self, 'edges', tuple(normalized))
        object.__setattr__(self, '_index', index)
        object.__setattr__(self, '_labels', labels)

    @property
    def rank(self) -> int:
        return len(self.vertices)

    def index(self, s: str) -> int:
        """Position of a vertex in the generator order."""
        try:
            return self._index[s]
        except KeyError:
            raise UnknownGeneratorError(f"unknown generator '{s}'") from None

    def __contains__(self, s: str) -> bool:
        return s in self._index

    def m(self, s: str, t: str) -> Label:
        """Coxeter matrix entry m_st."""
        self.index(s)
        self.index(t)
        if s == t:
            return 1
        return self._labels.get(frozenset((s, t)), 2)

    def labels(self) -> List[Label]:
        return [m for _, _, m in self.edges]

    def field_modulus(self) -> int:
        """lcm of all finite labels, with absent edges contributing 2."""
        return reduce(math.lcm, [m for m in self.labels() if m != INFINITY], 2)

    def subgraph(self, vertices: Iterable[str]) -> "CoxeterGraph":
        """Full subgraph on the given vertices, in this graph's order."""
        keep = set(vertices)
        for v in keep:
            self.index(v)
        return CoxeterGraph(
            vertices=tuple(v for v in self.vertices if v in keep),
            edges=tuple(e for e in self.edges if e[0] in keep and e[1] in keep),
        )

    def rename(self, mapping: Mapping[str, str]) -> "CoxeterGraph":
        """Rename vertices; names missing from the mapping are kept."""
        def f(v):
            return mapping.get(v, v)
        return CoxeterGraph(
            vertices=tuple(f(v) for v in self.vertices),
            edges=tuple((f(s), f(t), m) for s, t, m in self.edges),
        )

    def reorder(self, order: Iterable[str]) -> "CoxeterGraph":
        """Same matrix with a different vertex order."""
        order = tuple(order)
        if sorted(order) != sorted(self.vertices):
            raise ValueError("reorder needs a permutation of the vertices")
        return CoxeterGraph(vertices=order, edges=self.edges)

    def disjoint_union(self, other: "CoxeterGraph") -> "CoxeterGraph":
        return CoxeterGraph(vertices=self.vertices + other.vertices, edges=self.edges + other.edges)

    def to_networkx(self) -> nx.Graph:
        """Graph with edges where m_st >= 3, labelled by 'label'."""
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        for s, t, m in self.edges:
            g.add_edge(s, t, label=m)
        return g

    def odd_graph(self) -> nx.Graph:
        """Unlabelled graph with an edge exactly where m_st is odd and finite."""
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from((s, t) for s, t, m in self.edges if m != INFINITY and m % 2 == 1)
        return g

    def to_text(self) -> str:
        """Serialize in the graph file grammar."""
        lines = ["vertices " + " ".join(self.vertices)]
        for s, t, m in self.edges:
            lines.append(f"edge {s} {t} {'inf' if m == INFINITY else m}")
        return "\n".join(lines) + "\n"

    def __str__(self) -> str:
        edges = ", ".join(f"{s}-{t}:{'inf' if m == INFINITY else m}" for s, t, m in self.edges)
        return f"CoxeterGraph([{' '.join(self.vertices)}]{'; ' + edges if edges else ''})"


def components(g: CoxeterGraph) -> List[CoxeterGraph]:
    """Full subgraphs on the connected components, ordered by smallest vertex name."""
    parts = [sorted(c) for c in nx.connected_components(g.to_networkx())]
    parts.sort(key=lambda c: c[0])
    return [g.subgraph(c) for c in parts]


def is_connected(g: CoxeterGraph) -> bool:
    return g.rank > 0 and nx.is_connected(g.to_networkx())


def odd_component_count(g: CoxeterGraph) -> int:
    """Number of connected components of the odd-label graph."""
    return nx.number_connected_components(g.odd_graph())


def parse_graph(text: str) -> CoxeterGraph:
    """Parse the line-oriented graph format.

    Grammar:
        # comment lines and blank lines are ignored
        vertices <name>+          exactly once, before any edge
        edge <name> <name> <label> label is an integer >= 3 or 'inf'

    Args:
        text: File contents

    Returns:
        CoxeterGraph with unlisted pairs defaulting to 2

    Raises:
        GraphParseError: on any syntax or consistency error
    """
    vertices: Optional[List[str]] = None
    seen_edges: Dict[frozenset, int] = {}
    edges: List[Tuple[str, str, Label]] = []
    line_no = 0

    for line_no, raw in enumerate(text.splitlines(), start=1):
        tokens = [(m.group(), m.start() + 1) for m in re.finditer(r'\S+', raw)]
        if not tokens or tokens[0][0].startswith('#'):
            continue
        keyword, col = tokens[0]

        if keyword == 'vertices':
            if vertices is not None:
                raise GraphParseError("'vertices' declared twice", line_no, col)
            if len(tokens) == 1:
                raise GraphParseError("'vertices' needs at least one name", line_no, col + len(keyword))
            vertices = []
            for name, name_col in tokens[1:]:
                if not NAME_PATTERN.match(name):
                    raise GraphParseError(f"invalid vertex name '{name}'", line_no, name_col)
                if name in vertices:
                    raise GraphParseError(f"duplicate vertex '{name}'", line_no, name_col)
                vertices.append(name)

        elif keyword == 'edge':
            if vertices is None:
                raise GraphParseError("'edge' before the 'vertices' declaration", line_no, col)
            if len(tokens) != 4:
                raise GraphParseError("expected 'edge <name> <name> <label>'", line_no, col)
            (s, s_col), (t, t_col), (label_text, label_col) = tokens[1:]
            for name, name_col in ((s, s_col), (t, t_col)):
                if name not in vertices:
                    raise GraphParseError(f"unknown vertex '{name}'", line_no, name_col)
            if s == t:
                raise GraphParseError(f"edge joins '{s}' to itself", line_no, t_col)
            key = frozenset((s, t))
            if key in seen_edges:
                raise GraphParseError(
                    f"duplicate edge {s}-{t} (first declared on line {seen_edges[key]})", line_no, col
                )
            seen_edges[key] = line_no
            edges.append((s, t, _parse_label(label_text, line_no, label_col)))

        else:
            raise GraphParseError(f"unknown directive '{keyword}'", line_no, col)

    if vertices is None:
        raise GraphParseError("missing 'vertices' declaration", line_no + 1, 1)

    graph = CoxeterGraph(vertices=tuple(vertices), edges=tuple(edges))
    logger.debug(f"Parsed {graph}")
    return graph


def _parse_label(text: str, line_no: int, col: int) -> Label:
    if text == 'inf':
        return INFINITY
    if not re.fullmatch(r'[0-9]+', text):
        raise GraphParseError(f"label must be an integer >= 3 or 'inf', got '{text}'", line_no, col)
    value = int(text)
    if value < 3:
        raise GraphParseError(
            f"label {value} is not allowed on an edge line (labels 2 are expressed by omission)",
            line_no, col
        )
    return value


def load_graph(path: Union[str, Path]) -> CoxeterGraph:
    """Read and parse a graph file."""
    path = Path(path)
    logger.info(f"Loading graph from {path}")
    return parse_graph(path.read_text(encoding='utf-8'))
