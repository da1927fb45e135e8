"""Brute-force references for small types.

These do not use the Garside machinery: positive words are compared by
exhaustive application of the defining relations, and weak-order meets
and joins are found by scanning all of W.
"""

from collections import deque
from itertools import product
from typing import Callable, Dict, FrozenSet, List, Tuple

from ..coxeter.graph import CoxeterGraph, INFINITY
from ..coxeter.group import RootSystem, WElem
from ..errors import InternalError
from ..garside.words import relation_word

Word = Tuple[str, ...]


def _relations(graph: CoxeterGraph) -> List[Tuple[Word, Word]]:
    rules = []
    names = graph.vertices
    for i, s in enumerate(names):
        for t in names[i + 1:]:
            m = graph.m(s, t)
            if m == INFINITY:
                continue
            a = tuple(x for x, _ in relation_word(s, t, m))
            b = tuple(x for x, _ in relation_word(t, s, m))
            rules.append((a, b))
            rules.append((b, a))
    return rules


def rewriting_closure(word: Word, graph: CoxeterGraph) -> FrozenSet[Word]:
    """Every positive word reachable from word by the braid relations."""
    rules = _relations(graph)
    seen = {tuple(word)}
    queue = deque(seen)
    while queue:
        w = queue.popleft()
        for lhs, rhs in rules:
            m = len(lhs)
            for i in range(len(w) - m + 1):
                if w[i:i + m] == lhs:
                    x = w[:i] + rhs + w[i + m:]
                    if x not in seen:
                        seen.add(x)
                        queue.append(x)
    return frozenset(seen)


def positive_word_classes(graph: CoxeterGraph, max_length: int) -> Dict[Word, int]:
    """Class label of every positive word of length <= max_length."""
    labels: Dict[Word, int] = {}
    next_label = 0
    for length in range(max_length + 1):
        for word in product(graph.vertices, repeat=length):
            if word in labels:
                continue
            for member in rewriting_closure(word, graph):
                labels[member] = next_label
            next_label += 1
    return labels


def _order(rs: RootSystem, side: str) -> Callable[[WElem, WElem], bool]:
    if side == 'left':
        return rs.prefix_le
    if side == 'right':
        return rs.suffix_le
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def _extreme(rs: RootSystem, bounds: List[WElem], le: Callable[[WElem, WElem], bool],
             longest: bool, what: str) -> WElem:
    """The unique bound of extreme length, checked to compare with every other bound.

    Raises:
        InternalError: the bounds have no unique extreme element
    """
    if not bounds:
        raise InternalError(f"no {what} in the scanned elements")
    pick = max if longest else min
    target = rs.length(pick(bounds, key=rs.length))
    top = [w for w in bounds if rs.length(w) == target]
    if len(top) != 1:
        raise InternalError(f"{len(top)} candidates of length {target} for the {what}")
    best = top[0]
    for x in bounds:
        if not (le(x, best) if longest else le(best, x)):
            raise InternalError(f"the {what} candidate does not bound every element")
    return best


def weak_order_meet(rs: RootSystem, elements: List[WElem], u: WElem, v: WElem, side: str) -> WElem:
    """Greatest common lower bound of u and v found by scanning W.

    Raises:
        InternalError: the common lower bounds have no unique greatest element
    """
    le = _order(rs, side)
    common = [w for w in elements if le(w, u) and le(w, v)]
    return _extreme(rs, common, le, True, f"{side} meet")


def weak_order_join(rs: RootSystem, elements: List[WElem], u: WElem, v: WElem, side: str) -> WElem:
    """Least common upper bound of u and v found by scanning W.

    Raises:
        InternalError: the common upper bounds have no unique least element
    """
    le = _order(rs, side)
    common = [w for w in elements if le(u, w) and le(v, w)]
    return _extreme(rs, common, le, False, f"{side} join")
