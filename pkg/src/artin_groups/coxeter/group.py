"""Finite Coxeter groups as permutation groups on their root systems.

Roots are vectors in the simple-root basis with coordinates in
Q(2cos(pi/M)). The closure of the simple roots under the simple
reflections is computed once; after that every element of W is a
permutation of root indices, so equality, length and descents are integer
computations. Positive roots occupy indices [0, P) with the simple roots
first, in vertex order; the negative of root i < P sits at i + P.
"""

from collections import deque
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

from ..algebra.algnum import AlgNum, FieldCtx, cos_pi_over, make_field
from ..errors import InternalError
from ..utils.config import config
from ..utils.logging import get_logger
from .catalog import spherical_components
from .graph import CoxeterGraph

logger = get_logger(__name__)

Vector = Tuple[AlgNum, ...]


@dataclass(frozen=True)
class WElem:
    """Element of W as a permutation of root indices."""

    perm: Tuple[int, ...]

    def __mul__(self, other: "WElem") -> "WElem":
        """Product self*other, acting as self(other(alpha))."""
        p = self.perm
        return WElem(tuple(p[j] for j in other.perm))

    def inverse(self) -> "WElem":
        inv = [0] * len(self.perm)
        for i, j in enumerate(self.perm):
            inv[j] = i
        return WElem(tuple(inv))

    def __call__(self, root: int) -> int:
        return self.perm[root]


class RootSystem:
    """Root system of a spherical Coxeter graph with its simple reflections."""

    def __init__(self, graph: CoxeterGraph, ctx: FieldCtx, roots: List[Vector],
                 positive_count: int, simple_perms: List[WElem]):
        self.graph = graph
        self.ctx = ctx
        self.roots = roots
        self.positive_count = positive_count
        self.simple_perms = simple_perms
        self.generators: Tuple[str, ...] = graph.vertices
        self.n = graph.rank
        self.identity = WElem(tuple(range(len(roots))))

    def __repr__(self) -> str:
        return f"RootSystem({self.graph}, {len(self.roots)} roots)"

    def is_positive(self, root: int) -> bool:
        return root < self.positive_count

    def negation(self, root: int) -> int:
        P = self.positive_count
        return root + P if root < P else root - P

    def generator(self, s: str) -> WElem:
        """The simple reflection of a named generator."""
        return self.simple_perms[self.graph.index(s)]

    def from_word(self, word: Iterable[str]) -> WElem:
        """Product of simple reflections, left to right."""
        return self.from_indices(self.graph.index(s) for s in word)

    def from_indices(self, indices: Iterable[int]) -> WElem:
        w = self.identity
        for i in indices:
            w = w * self.simple_perms[i]
        return w

    def length(self, w: WElem) -> int:
        """Number of positive roots sent to negative roots."""
        P = self.positive_count
        return sum(1 for i in range(P) if w.perm[i] >= P)

    def right_descent_indices(self, w: WElem) -> List[int]:
        P = self.positive_count
        return [s for s in range(self.n) if w.perm[s] >= P]

    def left_descent_indices(self, w: WElem) -> List[int]:
        P = self.positive_count
        inv = w.inverse().perm
        return [s for s in range(self.n) if inv[s] >= P]

    def descents(self, w: WElem, side: str = 'left') -> FrozenSet[str]:
        """Generators s with l(sw) < l(w) (left) or l(ws) < l(w) (right)."""
        if side == 'left':
            found = self.left_descent_indices(w)
        elif side == 'right':
            found = self.right_descent_indices(w)
        else:
            raise ValueError(f"side must be 'left' or 'right', got {side!r}")
        return frozenset(self.generators[i] for i in found)

    def reduced_indices(self, w: WElem) -> List[int]:
        """Reduced word as generator indices, peeling the smallest left descent."""
        word = []
        while True:
            descents = self.left_descent_indices(w)
            if not descents:
                return word
            s = descents[0]
            word.append(s)
            w = self.simple_perms[s] * w

    def reduced_word(self, w: WElem) -> List[str]:
        return [self.generators[i] for i in self.reduced_indices(w)]

    def longest_element(self, subset: Optional[Iterable[str]] = None) -> WElem:
        """Longest element of W, or of the standard parabolic W_X for X = subset.

        Greedy ascent: multiply on the right by the first generator of X
        that is not yet a right descent.
        """
        if subset is None:
            return self.w0
        indices = sorted({self.graph.index(s) for s in subset})
        return self._ascend(indices)

    def _ascend(self, indices: Sequence[int]) -> WElem:
        P = self.positive_count
        w = self.identity
        while True:
            for s in indices:
                if w.perm[s] < P:
                    w = w * self.simple_perms[s]
                    break
            else:
                return w

    @cached_property
    def w0(self) -> WElem:
        return self._ascend(range(self.n))

    @cached_property
    def mu_indices(self) -> Tuple[int, ...]:
        """Index permutation s -> mu(s), read off w0(alpha_s) = -alpha_mu(s)."""
        result = []
        for s in range(self.n):
            image = self.negation(self.w0.perm[s])
            if image >= self.n:
                raise InternalError("w0 does not permute the simple roots up to sign")
            result.append(image)
        return tuple(result)

    def prefix_le(self, u: WElem, v: WElem) -> bool:
        """Left weak order: l(u) + l(u^-1 v) = l(v)."""
        return self.length(u) + self.length(u.inverse() * v) == self.length(v)

    def suffix_le(self, u: WElem, v: WElem) -> bool:
        """Right weak order: l(v u^-1) + l(u) = l(v)."""
        return self.length(v * u.inverse()) + self.length(u) == self.length(v)

    def conjugate(self, w: WElem, by: WElem) -> WElem:
        return by * w * by.inverse()

    def enumerate_elements(self, limit: int = 200000) -> List[WElem]:
        """All elements of W by breadth-first search, in order of discovery."""
        seen = {self.identity}
        order = [self.identity]
        queue = deque(order)
        while queue:
            w = queue.popleft()
            for g in self.simple_perms:
                x = w * g
                if x not in seen:
                    if len(seen) >= limit:
                        raise ValueError(f"W has more than {limit} elements")
                    seen.add(x)
                    order.append(x)
                    queue.append(x)
        return order


def _simple_vector(ctx: FieldCtx, n: int, i: int) -> Vector:
    zero, one = ctx.zero(), ctx.one()
    return tuple(one if j == i else zero for j in range(n))


def build_root_system(g: CoxeterGraph, max_degree: Optional[int] = None) -> RootSystem:
    """Root system of g, cached per graph and field degree bound.

    Args:
        g: Coxeter graph, every component of spherical type
        max_degree: Degree bound of the coordinate field; defaults to field.max_degree

    Returns:
        RootSystem with the positive roots first

    Raises:
        NonSphericalError: some component of g is not of spherical type
        FieldError: the labels need a field above the degree bound
    """
    if max_degree is None:
        max_degree = config.max_field_degree
    return _build_root_system(g, max_degree)


@lru_cache(maxsize=32)
def _build_root_system(g: CoxeterGraph, max_degree: int) -> RootSystem:
    """Close the simple roots of g under the simple reflections.

    The bilinear form is B(a_s, a_t) = -cos(pi/m_st) and the reflection is
    s(v) = v - 2 B(a_s, v) a_s. A root produced by s from a positive root
    other than a_s is positive, so positivity is assigned while generating.

    Raises:
        NonSphericalError: some component of g is not of spherical type
        InternalError: the closure does not have the catalog size
    """
    types = [t for _, t in spherical_components(g)]
    expected = sum(t.root_count for t in types) // 2
    ctx = make_field(g.field_modulus(), max_degree)
    n = g.rank
    names = g.vertices

    two_b = [
        [cos_pi_over(ctx, g.m(names[s], names[t])).scale(-2) for t in range(n)]
        for s in range(n)
    ]

    def reflect(s: int, v: Vector) -> Vector:
        c = ctx.zero()
        for t in range(n):
            if v[t] and two_b[s][t]:
                c = c + two_b[s][t] * v[t]
        if not c:
            return v
        out = list(v)
        out[s] = out[s] - c
        return tuple(out)

    roots: List[Vector] = [_simple_vector(ctx, n, i) for i in range(n)]
    index = {v: i for i, v in enumerate(roots)}
    transitions: List[List[int]] = [[] for _ in range(n)]

    i = 0
    while i < len(roots):
        for s in range(n):
            if i == s:
                transitions[s].append(-1)
                continue
            image = reflect(s, roots[i])
            j = index.get(image)
            if j is None:
                j = len(roots)
                if j >= expected:
                    raise InternalError(f"root closure of {g} exceeds {expected} positive roots")
                roots.append(image)
                index[image] = j
            transitions[s].append(j)
        i += 1

    P = len(roots)
    if P != expected:
        raise InternalError(f"root closure of {g} found {P} positive roots, expected {expected}")

    simple_perms = []
    for s in range(n):
        perm = [0] * (2 * P)
        for r in range(P):
            target = s + P if r == s else transitions[s][r]
            perm[r] = target
            perm[r + P] = target - P if target >= P else target + P
        simple_perms.append(WElem(tuple(perm)))

    all_roots = roots + [tuple(-x for x in v) for v in roots]
    rs = RootSystem(g, ctx, all_roots, P, simple_perms)
    logger.info(f"Built root system of {'+'.join(map(str, types))}: {2 * P} roots over {ctx}")
    return rs
