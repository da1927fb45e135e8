"""Homomorphisms between Artin groups given by images of generators."""

from typing import Dict, List, Mapping, Tuple

from .structure import GarsideStructure
from .words import ArtinWord, relation_word
from ..coxeter.graph import CoxeterGraph, INFINITY
from ..errors import UnknownGeneratorError
from ..utils.logging import get_logger

logger = get_logger(__name__)


class Homomorphism:
    """A map G(source) -> G(target) defined on generators.

    It is only a homomorphism if `respects_relations()` holds; apply()
    substitutes images letter by letter regardless.
    """

    def __init__(self, source: CoxeterGraph, target: GarsideStructure, images: Mapping[str, ArtinWord]):
        missing = [s for s in source.vertices if s not in images]
        if missing:
            raise UnknownGeneratorError(f"no image given for {', '.join(missing)}")
        extra = [s for s in images if s not in source]
        if extra:
            raise UnknownGeneratorError(f"images given for unknown generators {', '.join(extra)}")
        self.source = source
        self.target = target
        self.images: Dict[str, ArtinWord] = {s: images[s].check(target.graph) for s in source.vertices}

    def apply(self, word: ArtinWord) -> ArtinWord:
        word.check(self.source)
        result = ArtinWord()
        for s, e in word.letters:
            image = self.images[s]
            result = result * (image if e > 0 else image.inverse())
        return result

    def failing_relations(self) -> List[Tuple[str, str]]:
        """Pairs (s, t) whose braid relation is not preserved."""
        failures = []
        names = self.source.vertices
        for i, s in enumerate(names):
            for t in names[i + 1:]:
                m = self.source.m(s, t)
                if m == INFINITY:
                    continue
                lhs = self.apply(relation_word(s, t, m))
                rhs = self.apply(relation_word(t, s, m))
                if not self.target.equals(lhs, rhs):
                    logger.debug(f"Relation {s}-{t} of length {m} fails")
                    failures.append((s, t))
        return failures

    def respects_relations(self) -> bool:
        return not self.failing_relations()

    def compose(self, inner: "Homomorphism") -> "Homomorphism":
        """self o inner: apply inner first."""
        if inner.target.graph != self.source:
            raise ValueError("composition needs inner's target to be this map's source")
        return Homomorphism(inner.source, self.target, {s: self.apply(w) for s, w in inner.images.items()})

    def is_identity_on_generators(self) -> bool:
        """Whether every generator maps to itself in G; needs source == target graph."""
        if self.source != self.target.graph:
            return False
        return all(self.target.equals(w, ArtinWord.generator(s)) for s, w in self.images.items())
