"""Words in the Artin generators and their text grammar."""

import re
from dataclasses import dataclass
from typing import FrozenSet, Iterable, Iterator, Sequence, Tuple, Union

from ..coxeter.graph import CoxeterGraph
from ..errors import UnknownGeneratorError, WordParseError

Letter = Tuple[str, int]

_TOKEN = re.compile(r'([A-Za-z][A-Za-z0-9_]*)(?:\^(-?[0-9]+))?\Z')


@dataclass(frozen=True)
class ArtinWord:
    """A word of signed generators (name, +1 or -1)."""

    letters: Tuple[Letter, ...] = ()

    @classmethod
    def positive(cls, names: Iterable[str]) -> "ArtinWord":
        return cls(tuple((s, 1) for s in names))

    @classmethod
    def generator(cls, name: str, exponent: int = 1) -> "ArtinWord":
        sign = 1 if exponent > 0 else -1
        return cls(((name, sign),) * abs(exponent))

    def __mul__(self, other: "ArtinWord") -> "ArtinWord":
        return ArtinWord(self.letters + other.letters)

    def __pow__(self, k: int) -> "ArtinWord":
        base = self if k >= 0 else self.inverse()
        return ArtinWord(base.letters * abs(k))

    def inverse(self) -> "ArtinWord":
        return ArtinWord(tuple((s, -e) for s, e in reversed(self.letters)))

    def is_positive(self) -> bool:
        return all(e == 1 for _, e in self.letters)

    def degree(self) -> int:
        """Image under the homomorphism G -> Z sending every generator to 1."""
        return sum(e for _, e in self.letters)

    def names(self) -> FrozenSet[str]:
        return frozenset(s for s, _ in self.letters)

    def check(self, graph: CoxeterGraph) -> "ArtinWord":
        """Raise UnknownGeneratorError unless every letter is a vertex of graph."""
        for s, _ in self.letters:
            if s not in graph:
                raise UnknownGeneratorError(f"unknown generator '{s}'")
        return self

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(s if e == 1 else f"{s}^-1" for s, e in self.letters)

    def to_list(self) -> list:
        return [[s, e] for s, e in self.letters]


def relation_word(s: str, t: str, m: int) -> ArtinWord:
    """The alternating word s t s ... of length m."""
    if m < 2:
        raise ValueError(f"relation length must be at least 2, got {m}")
    if s == t:
        raise ValueError("relation words need two distinct generators")
    return ArtinWord.positive(s if i % 2 == 0 else t for i in range(m))


def parse_word(text: str, vertices: Union[CoxeterGraph, Sequence[str], None] = None) -> ArtinWord:
    """Parse whitespace-separated tokens 'name', 'name^-1' or 'name^k'.

    The token '1' stands for the empty word.

    Args:
        text: Word text, e.g. "s t^-1 s^3"
        vertices: Graph or vertex names to validate against

    Returns:
        ArtinWord with powers expanded

    Raises:
        WordParseError: malformed token
        UnknownGeneratorError: name not among the vertices
    """
    known = None
    if vertices is not None:
        known = set(vertices.vertices if isinstance(vertices, CoxeterGraph) else vertices)
    letters = []
    for match in re.finditer(r'\S+', text):
        token = match.group()
        if token == '1':
            continue
        parsed = _TOKEN.match(token)
        if not parsed:
            raise WordParseError(f"malformed token '{token}'", match.start() + 1)
        name, power = parsed.group(1), parsed.group(2)
        if known is not None and name not in known:
            raise UnknownGeneratorError(f"unknown generator '{name}' at position {match.start() + 1}")
        k = int(power) if power is not None else 1
        letters.extend(ArtinWord.generator(name, k).letters)
    return ArtinWord(tuple(letters))
