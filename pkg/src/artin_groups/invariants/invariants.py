"""Isomorphism invariants of spherical Artin groups and the isomorphism decider.

cd is the rank, rkZ the number of components and rkAb the number of
components of the odd-label graph. mf, the largest order of a finite
subgroup of G/Z(G), is h/2 or h depending on whether mu is trivial. It is
defined for connected types only and checked against an independent table.
"""

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from ..coxeter.catalog import TypeID, catalog_graph, coxeter_number, mu_is_identity, spherical_components
from ..coxeter.graph import CoxeterGraph, odd_component_count
from ..errors import InternalError
from ..utils.logging import get_logger

logger = get_logger(__name__)

# Published values of mf by family; independent of coxeter_number/mu_is_identity.
MF_TABLE: Dict[str, Callable[[int], int]] = {
    'A': lambda n: 1 if n == 1 else n + 1,
    'B': lambda n: n,
    'D': lambda n: n - 1 if n % 2 == 0 else 2 * n - 2,
    'E': lambda n: {6: 12, 7: 9, 8: 15}[n],
    'F': lambda n: {4: 6}[n],
    'H': lambda n: {3: 5, 4: 15}[n],
    'I2': lambda p: p // 2 if p % 2 == 0 else p,
}


def tabulated_mf(t: TypeID) -> int:
    return MF_TABLE[t.family](t.param)


def mf(t: TypeID) -> int:
    """h/2 when mu = Id, h otherwise.

    Raises:
        InternalError: the value disagrees with MF_TABLE
    """
    h = coxeter_number(t)
    value = h // 2 if mu_is_identity(t) else h
    expected = tabulated_mf(t)
    if value != expected:
        raise InternalError(f"mf({t}) = {value} from the Coxeter number but {expected} in the table")
    return value


def cd(g: CoxeterGraph) -> int:
    """Cohomological dimension; raises NonSphericalError outside spherical type."""
    spherical_components(g)
    return g.rank


def rkAb(g: CoxeterGraph) -> int:
    return odd_component_count(g)


def rkZ(g: CoxeterGraph) -> int:
    return len(spherical_components(g))


@dataclass(frozen=True, order=True)
class InvariantVector:
    cd: int
    mf: int
    rkAb: int

    def to_dict(self) -> Dict[str, int]:
        return {"cd": self.cd, "mf": self.mf, "rkAb": self.rkAb}


def invariant_vector(t: TypeID) -> InvariantVector:
    return InvariantVector(cd=t.rank, mf=mf(t), rkAb=rkAb(catalog_graph(t)))


@dataclass(frozen=True, order=True)
class ComponentProfile:
    type_id: TypeID
    vector: InvariantVector
    vertices: Tuple[str, ...] = ()

    def to_dict(self) -> Dict[str, Any]:
        return {**self.type_id.to_dict(), **self.vector.to_dict()}


def component_profile(g: CoxeterGraph) -> List[ComponentProfile]:
    """Type and (cd, mf, rkAb) of every component, sorted by type."""
    profile = []
    for comp, t in spherical_components(g):
        vector = InvariantVector(cd=comp.rank, mf=mf(t), rkAb=rkAb(comp))
        profile.append(ComponentProfile(t, vector, comp.vertices))
    return sorted(profile)


def invariant_report(g: CoxeterGraph) -> Dict[str, Any]:
    """JSON-ready invariants; the top-level mf appears only for connected graphs."""
    profile = component_profile(g)
    report: Dict[str, Any] = {
        "cd": cd(g),
        "rkAb": rkAb(g),
        "rkZ": len(profile),
        "components": [{**p.to_dict(), "vertices": list(p.vertices)} for p in profile],
    }
    if len(profile) == 1:
        report["mf"] = profile[0].vector.mf
    return report


@dataclass(frozen=True)
class IsoDecision:
    isomorphic: bool
    left_profile: Tuple[ComponentProfile, ...]
    right_profile: Tuple[ComponentProfile, ...]
    rkZ_left: int
    rkZ_right: int
    explanation: str

    def to_dict(self) -> Dict[str, Any]:
        return {
            "isomorphic": self.isomorphic,
            "left": [p.to_dict() for p in self.left_profile],
            "right": [p.to_dict() for p in self.right_profile],
            "rkZ": [self.rkZ_left, self.rkZ_right],
            "explanation": self.explanation,
        }


def _separating_invariant(left: Sequence[ComponentProfile], right: Sequence[ComponentProfile]) -> Optional[str]:
    total_left = sum(p.vector.cd for p in left)
    total_right = sum(p.vector.cd for p in right)
    if total_left != total_right:
        return f"cd: {total_left} vs {total_right}"
    unmatched_left = sorted((Counter(left) - Counter(right)).elements(), key=lambda p: p.vector)
    unmatched_right = sorted((Counter(right) - Counter(left)).elements(), key=lambda p: p.vector)
    for a, b in zip(unmatched_left, unmatched_right):
        for name in ('cd', 'mf', 'rkAb'):
            x, y = getattr(a.vector, name), getattr(b.vector, name)
            if x != y:
                return f"{name}: {x} vs {y} ({a.type_id} vs {b.type_id})"
    if len(left) != len(right):
        return f"rkZ: {len(left)} vs {len(right)}"
    return None


def decide_iso(g1: CoxeterGraph, g2: CoxeterGraph) -> IsoDecision:
    """Decide G(g1) = G(g2) by comparing the multisets of component types.

    Raises:
        NonSphericalError: either graph has a non-spherical component
    """
    left = component_profile(g1)
    right = component_profile(g2)
    # Vertex names do not matter; compare (type, vector) only.
    left_key = [ComponentProfile(p.type_id, p.vector) for p in left]
    right_key = [ComponentProfile(p.type_id, p.vector) for p in right]
    isomorphic = Counter(p.type_id for p in left) == Counter(p.type_id for p in right)

    if isomorphic:
        names = " + ".join(str(p.type_id) for p in left)
        explanation = f"both graphs have components {names}"
    else:
        missing = Counter(p.type_id for p in left) - Counter(p.type_id for p in right)
        extra = Counter(p.type_id for p in right) - Counter(p.type_id for p in left)
        parts = []
        if missing:
            parts.append("only left: " + ", ".join(map(str, sorted(missing.elements()))))
        if extra:
            parts.append("only right: " + ", ".join(map(str, sorted(extra.elements()))))
        separating = _separating_invariant(left_key, right_key)
        if separating is None:
            raise InternalError(f"no invariant separates {g1} from {g2} although their types differ")
        explanation = "; ".join(parts) + f"; separated by {separating}"

    logger.info(f"decide_iso: {explanation}")
    return IsoDecision(
        isomorphic=isomorphic,
        left_profile=tuple(left_key),
        right_profile=tuple(right_key),
        rkZ_left=len(left),
        rkZ_right=len(right),
        explanation=explanation,
    )


def separation_collisions(types: Sequence[TypeID]) -> List[Tuple[TypeID, TypeID]]:
    """Pairs of distinct types with equal (cd, mf, rkAb)."""
    vectors = [(t, invariant_vector(t)) for t in types]
    return [(s, t) for (s, u), (t, v) in combinations(vectors, 2) if s != t and u == v]


def separation_check(types: Sequence[TypeID]) -> bool:
    """Whether (cd, mf, rkAb) tells every listed connected type apart."""
    collisions = separation_collisions(types)
    for s, t in collisions:
        logger.warning(f"{s} and {t} share the invariant vector {invariant_vector(s)}")
    return not collisions
