"""Garside structure of a spherical Artin monoid and group.

Simple elements are elements of W (a reduced word of w spells the simple
T(w)), so every divisibility question on simples is a length computation
in the root-system permutation representation.

Normal forms are left-weighted: Delta^k x1 ... xl with every x_i neither 1
nor Delta and R(x_i) containing L(x_(i+1)). They are built only by
multiplying on the left by a simple g, carrying the remainder of each
factor into the next one:

    (x1', g1) = left_weighted_pair(g, x1)
    (x2', g2) = left_weighted_pair(g1, x2)
    ...

This is correct because head(g x) = head(g head(x)). Products,
inverses, the Delta-form and right gcds are all reduced to it.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .words import ArtinWord, parse_word
from ..coxeter.catalog import mu_is_identity, require_type
from ..coxeter.graph import is_connected
from ..coxeter.group import RootSystem, WElem
from ..errors import DisconnectedGraphError, InternalError
from ..utils.logging import get_logger

logger = get_logger(__name__)

SIDES = ('left', 'right')


@dataclass(frozen=True)
class NormalForm:
    """Delta^k x1 ... xl in left-weighted form; k < 0 only for group elements."""

    k: int = 0
    factors: Tuple[WElem, ...] = ()

    def is_identity(self) -> bool:
        return self.k == 0 and not self.factors

    def is_positive(self) -> bool:
        return self.k >= 0

    @property
    def canonical_length(self) -> int:
        """Number of factors after the Delta power."""
        return len(self.factors)


@dataclass(frozen=True)
class DeltaForm:
    """w = Delta^-k p with k >= 0 minimal and p positive."""

    k: int
    p: NormalForm


@dataclass(frozen=True)
class CharneyPair:
    """w = b c^-1 with b, c positive and no common right divisor."""

    b: NormalForm
    c: NormalForm
    b_word: ArtinWord = field(default=ArtinWord(), compare=False)
    c_word: ArtinWord = field(default=ArtinWord(), compare=False)

    def to_dict(self) -> Dict[str, Any]:
        return {"b": str(self.b_word), "c": str(self.c_word)}


def degree(word: ArtinWord) -> int:
    """Sum of exponents; constant on each element of G."""
    return word.degree()


class GarsideStructure:
    """Normal forms, the word problem and the lattice operations over a root system."""

    def __init__(self, rs: RootSystem):
        self.rs = rs
        self.graph = rs.graph
        self.generators = rs.generators
        self.n = rs.n
        self.identity = rs.identity
        self.w0 = rs.w0
        self.delta_length = rs.length(self.w0)
        self._mu: Dict[WElem, WElem] = {}
        self._coxeter_powers: Dict[Tuple[str, ...], Tuple[int, bool]] = {}

    def __repr__(self) -> str:
        return f"GarsideStructure({self.graph})"

    # ------------------------------------------------------------------
    # Words and simples
    # ------------------------------------------------------------------

    def parse(self, text: str) -> ArtinWord:
        """Parse a word over this graph's generators.

        Raises:
            WordParseError: the text does not follow the word grammar
            UnknownGeneratorError: a token names no vertex
        """
        return parse_word(text, self.graph)

    def letter(self, s: str) -> WElem:
        """The simple element of a single generator."""
        return self.rs.generator(s)

    def simple(self, names: Iterable[str]) -> WElem:
        """Simple element spelled by a reduced word.

        Raises:
            ValueError: the word is not reduced in W
        """
        names = list(names)
        u = self.rs.from_word(names)
        if self.rs.length(u) != len(names):
            raise ValueError(f"'{' '.join(names)}' is not a reduced word")
        return u

    def simple_word(self, u: WElem) -> ArtinWord:
        """Lexicographically greedy reduced word of a simple."""
        return ArtinWord.positive(self.rs.reduced_word(u))

    def complement(self, u: WElem) -> WElem:
        """The simple u^-1 Delta, so that u * complement(u) = Delta."""
        return u.inverse() * self.w0

    def simple_product(self, u: WElem, v: WElem) -> Optional[WElem]:
        """T(uv) when the lengths add, otherwise None."""
        uv = u * v
        if self.rs.length(uv) == self.rs.length(u) + self.rs.length(v):
            return uv
        return None

    def left_weighted_pair(self, u: WElem, v: WElem) -> Tuple[WElem, WElem]:
        """Slide letters from the front of v onto u until R(u) contains L(v).

        The smallest letter of L(v) minus R(u) moves first; the product uv
        and the total length are unchanged.
        """
        P = self.rs.positive_count
        gens = self.rs.simple_perms
        while True:
            v_inv = v.inverse().perm
            for s in range(self.n):
                if v_inv[s] >= P and u.perm[s] < P:
                    u = u * gens[s]
                    v = gens[s] * v
                    break
            else:
                return u, v

    # ------------------------------------------------------------------
    # Delta and mu
    # ------------------------------------------------------------------

    def delta(self) -> WElem:
        """The fundamental simple Delta, i.e. w0."""
        return self.w0

    def fundamental_element(self, subset: Iterable[str]) -> WElem:
        """Delta_X = T(w_X) for a subset X of the generators."""
        return self.rs.longest_element(subset)

    def delta_word(self, k: int = 1) -> ArtinWord:
        """Spelling of Delta^k; negative k gives inverse letters."""
        return self.simple_word(self.w0) ** k

    def mu_map(self, s: str) -> str:
        """The generator mu(s) with Delta s = mu(s) Delta."""
        return self.generators[self.rs.mu_indices[self.graph.index(s)]]

    def mu_on_positive(self, word: ArtinWord) -> ArtinWord:
        """Apply mu letter by letter to a positive word.

        Raises:
            ValueError: the word has inverse letters
        """
        if not word.is_positive():
            raise ValueError("mu_on_positive needs a positive word")
        return ArtinWord.positive(self.mu_map(s) for s, _ in word.check(self.graph))

    def mu_simple(self, u: WElem) -> WElem:
        """Delta u Delta^-1, i.e. conjugation by w0 in W."""
        image = self._mu.get(u)
        if image is None:
            image = self.w0 * u * self.w0
            self._mu[u] = image
        return image

    def mu_power(self, u: WElem, k: int) -> WElem:
        return self.mu_simple(u) if k % 2 else u

    def mu_is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.rs.mu_indices))

    def center_generator(self) -> int:
        """1 when delta = Delta generates the center, 2 when delta = Delta^2.

        Raises:
            DisconnectedGraphError: the graph is not connected
            InternalError: the computed mu disagrees with the type catalog
        """
        if not is_connected(self.graph):
            raise DisconnectedGraphError(
                f"the center generator is defined per component; {self.graph} is disconnected"
            )
        fixed = self.mu_is_identity()
        if fixed != mu_is_identity(require_type(self.graph)):
            raise InternalError(f"mu computed from w0 disagrees with the catalog for {self.graph}")
        return 1 if fixed else 2

    def center_word(self) -> ArtinWord:
        """Spelling of the center generator delta."""
        return self.delta_word(self.center_generator())

    # ------------------------------------------------------------------
    # Normal forms
    # ------------------------------------------------------------------

    def _assemble(self, k: int, factors: Sequence[WElem]) -> NormalForm:
        factors = [x for x in factors if x != self.identity]
        lead = 0
        while lead < len(factors) and factors[lead] == self.w0:
            lead += 1
        return NormalForm(k + lead, tuple(factors[lead:]))

    def left_multiply(self, g: WElem, nf: NormalForm) -> NormalForm:
        """Normal form of g * nf for a simple g."""
        if g == self.identity:
            return nf
        carry = self.mu_power(g, nf.k)
        rest = nf.factors
        out: List[WElem] = []
        for i, x in enumerate(rest):
            head, carry = self.left_weighted_pair(carry, x)
            out.append(head)
            if carry == self.identity:
                out.extend(rest[i + 1:])
                break
        else:
            out.append(carry)
        return self._assemble(nf.k, out)

    def multiply(self, a: NormalForm, b: NormalForm) -> NormalForm:
        """Normal form of the product a b.

        Args:
            a: Left factor, k possibly negative
            b: Right factor, k possibly negative

        Returns:
            Left-weighted normal form of a b
        """
        result = b
        for x in reversed(a.factors):
            result = self.left_multiply(x, result)
        return NormalForm(result.k + a.k, result.factors)

    def inverse(self, a: NormalForm) -> NormalForm:
        """(Delta^k x1 ... xl)^-1 using x^-1 = complement(x) Delta^-1."""
        acc = NormalForm(-a.k)
        for x in a.factors:
            acc = self.left_multiply(self.complement(x), NormalForm(acc.k - 1, acc.factors))
        return acc

    def power(self, a: NormalForm, e: int) -> NormalForm:
        """a^e for any integer e, by repeated multiplication."""
        if e < 0:
            return self.power(self.inverse(a), -e)
        result = NormalForm()
        for _ in range(e):
            result = self.multiply(result, a)
        return result

    def group_normal_form(self, word: ArtinWord) -> NormalForm:
        """Normal form of an arbitrary word as a group element, k possibly negative."""
        word.check(self.graph)
        acc = NormalForm()
        for s, e in reversed(word.letters):
            g = self.letter(s)
            if e > 0:
                acc = self.left_multiply(g, acc)
            else:
                acc = self.left_multiply(self.complement(g), NormalForm(acc.k - 1, acc.factors))
        return acc

    def normal_form(self, word: ArtinWord) -> NormalForm:
        """Left-weighted normal form of a positive word."""
        if not word.is_positive():
            raise ValueError("normal_form needs a positive word; use group_normal_form")
        return self.group_normal_form(word)

    def spell(self, nf: NormalForm) -> ArtinWord:
        """Canonical spelling: Delta^k as k copies of the reduced word of w0, then the factors."""
        word = self.delta_word(nf.k)
        for x in nf.factors:
            word = word * self.simple_word(x)
        return word

    def describe(self, nf: NormalForm) -> Dict[str, Any]:
        """JSON-ready view: the Delta power, factor words, canonical length and spelling."""
        return {
            "k": nf.k,
            "canonical_length": nf.canonical_length,
            "factors": [self.rs.reduced_word(x) for x in nf.factors],
            "word": str(self.spell(nf)),
        }

    def twist(self, nf: NormalForm, k: int) -> NormalForm:
        """mu^k applied to every factor."""
        if k % 2 == 0:
            return nf
        return NormalForm(nf.k, tuple(self.mu_simple(x) for x in nf.factors))

    def reverse(self, nf: NormalForm) -> NormalForm:
        """Normal form of the reversed word of a positive element."""
        if nf.k < 0:
            raise ValueError("reverse is defined on positive elements")
        acc = NormalForm(nf.k)
        for x in nf.factors:
            acc = self.left_multiply(x.inverse(), acc)
        return acc

    # ------------------------------------------------------------------
    # Delta-form and Charney form
    # ------------------------------------------------------------------

    def delta_form(self, word: ArtinWord) -> DeltaForm:
        """Write word as Delta^-k p with p positive and k minimal.

        Each s^-1 becomes complement(s) Delta^-1 and every Delta^-1 moves to
        the far left, applying mu to each simple it crosses.
        """
        word.check(self.graph)
        simples: List[WElem] = []
        before: List[int] = []
        k = 0
        for s, e in word.letters:
            g = self.letter(s)
            before.append(k)
            if e > 0:
                simples.append(g)
            else:
                simples.append(self.complement(g))
                k += 1
        p = NormalForm()
        for x, seen in zip(reversed(simples), reversed(before)):
            p = self.left_multiply(self.mu_power(x, k - seen), p)
        cancel = min(k, p.k)
        return DeltaForm(k - cancel, NormalForm(p.k - cancel, p.factors))

    def charney(self, word: ArtinWord) -> CharneyPair:
        """The unique b c^-1 = word with b, c positive and b ^_R c = 1."""
        form = self.delta_form(word)
        q = self.twist(form.p, form.k)
        _, b, c = self.right_gcd(q, NormalForm(form.k))
        return CharneyPair(b, c, self.spell(b), self.spell(c))

    def equals(self, w1: ArtinWord, w2: ArtinWord) -> bool:
        """Word problem in G by comparing Charney forms."""
        return self.charney(w1) == self.charney(w2)

    def equals_by_normal_form(self, w1: ArtinWord, w2: ArtinWord) -> bool:
        """Word problem in G through the group normal form of w1 w2^-1."""
        return self.group_normal_form(w1 * w2.inverse()).is_identity()

    # ------------------------------------------------------------------
    # Lattice operations
    # ------------------------------------------------------------------

    def meet_simples(self, u: WElem, v: WElem, side: str = 'left') -> WElem:
        """Greatest common prefix (left) or suffix (right) in the weak order.

        Extends d by the smallest letter that keeps it a common divisor.

        Args:
            u: A simple element
            v: A simple element
            side: 'left' for left divisors, 'right' for right divisors

        Returns:
            u ^_L v or u ^_R v, again a simple

        Raises:
            ValueError: side is neither 'left' nor 'right'
        """
        if side not in SIDES:
            raise ValueError(f"side must be 'left' or 'right', got {side!r}")
        gens = self.rs.simple_perms
        d = self.identity
        a, b = u, v
        while True:
            if side == 'left':
                common = set(self.rs.left_descent_indices(a)) & set(self.rs.left_descent_indices(b))
            else:
                common = set(self.rs.right_descent_indices(a)) & set(self.rs.right_descent_indices(b))
            if not common:
                return d
            g = gens[min(common)]
            if side == 'left':
                d, a, b = d * g, g * a, g * b
            else:
                d, a, b = g * d, a * g, b * g

    def join_simples(self, u: WElem, v: WElem, side: str = 'left') -> WElem:
        """Least common multiple of two simples.

        Uses the order-reversing maps w -> w w0 (left) and w -> w0 w (right),
        which turn joins into meets.

        Args:
            u: A simple element
            v: A simple element
            side: 'left' for the least common left multiple, 'right' for the right one

        Returns:
            u v_L v or u v_R v, again a simple

        Raises:
            ValueError: side is neither 'left' nor 'right'
        """
        if side == 'left':
            return self.meet_simples(u * self.w0, v * self.w0, 'left') * self.w0
        if side == 'right':
            return self.w0 * self.meet_simples(self.w0 * u, self.w0 * v, 'right')
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")

    def head(self, nf: NormalForm) -> WElem:
        """Largest simple left divisor of a positive element."""
        if nf.k > 0:
            return self.w0
        return nf.factors[0] if nf.factors else self.identity

    def left_divide(self, m: WElem, nf: NormalForm) -> NormalForm:
        """m^-1 nf for a simple m that left-divides the positive element nf."""
        if m == self.identity:
            return nf
        if nf.k > 0:
            return self.left_multiply(self.complement(m), NormalForm(nf.k - 1, nf.factors))
        if not nf.factors or not self.rs.prefix_le(m, nf.factors[0]):
            raise ValueError("left_divide: the simple does not divide the element")
        rest = NormalForm(0, nf.factors[1:])
        return self.left_multiply(m.inverse() * nf.factors[0], rest)

    def left_gcd(self, p: NormalForm, q: NormalForm) -> Tuple[NormalForm, NormalForm, NormalForm]:
        """Greatest common left divisor of two positive elements.

        The head of the gcd is the meet of the heads, so whole simples are
        peeled at a time.

        Args:
            p: Positive normal form
            q: Positive normal form

        Returns:
            (g, g^-1 p, g^-1 q) with g = p ^_L q

        Raises:
            ValueError: p or q has a negative Delta power
        """
        if p.k < 0 or q.k < 0:
            raise ValueError("left_gcd is defined on positive elements")
        taken: List[WElem] = []
        while True:
            m = self.meet_simples(self.head(p), self.head(q), 'left')
            if m == self.identity:
                break
            taken.append(m)
            p = self.left_divide(m, p)
            q = self.left_divide(m, q)
        g = NormalForm()
        for m in reversed(taken):
            g = self.left_multiply(m, g)
        return g, p, q

    def right_gcd(self, p: NormalForm, q: NormalForm) -> Tuple[NormalForm, NormalForm, NormalForm]:
        """Greatest common right divisor of two positive elements.

        Reverses both elements, takes the left gcd and reverses back.

        Args:
            p: Positive normal form
            q: Positive normal form

        Returns:
            (d, p d^-1, q d^-1) with d = p ^_R q

        Raises:
            ValueError: p or q has a negative Delta power
        """
        g, a, b = self.left_gcd(self.reverse(p), self.reverse(q))
        return self.reverse(g), self.reverse(a), self.reverse(b)

    def right_gcd_positive(self, p: ArtinWord, q: ArtinWord) -> ArtinWord:
        """Canonical spelling of p ^_R q for positive words.

        Raises:
            ValueError: p or q has inverse letters
        """
        d, _, _ = self.right_gcd(self.normal_form(p), self.normal_form(q))
        return self.spell(d)

    def support(self, word: ArtinWord) -> FrozenSet[str]:
        """Generators in the canonical spelling of a positive word."""
        nf = self.normal_form(word)
        if nf.k > 0:
            return frozenset(self.generators)
        names = set()
        for x in nf.factors:
            names.update(self.rs.reduced_word(x))
        return frozenset(names)

    # ------------------------------------------------------------------
    # Coxeter elements
    # ------------------------------------------------------------------

    def coxeter_element(self, ordering: Optional[Sequence[str]] = None) -> ArtinWord:
        """Product of all generators in the given order (default: vertex order)."""
        if ordering is None:
            ordering = self.generators
        ordering = list(ordering)
        for s in ordering:
            self.graph.index(s)
        if sorted(ordering) != sorted(self.generators):
            raise ValueError(f"ordering must list every generator once, got {' '.join(ordering)}")
        return ArtinWord.positive(ordering)

    def _coxeter_power_identity(self, ordering: Optional[Sequence[str]]) -> Tuple[int, bool]:
        """(e, whether pi^e = delta), computed once per ordering."""
        pi = self.coxeter_element(ordering)
        key = tuple(s for s, _ in pi.letters)
        cached = self._coxeter_powers.get(key)
        if cached is not None:
            return cached
        t = require_type(self.graph)
        h = t.coxeter_number
        center = self.center_generator()
        if center == 1 and h % 2:
            raise InternalError(f"{t} has mu = Id but odd Coxeter number {h}")
        e = h // 2 if center == 1 else h
        holds = self.equals(pi ** e, self.delta_word(center))
        logger.debug(f"Coxeter element power check on {t} with ordering {pi}: {holds}")
        self._coxeter_powers[key] = (e, holds)
        return e, holds

    def power_check_coxeter_element(self, ordering: Optional[Sequence[str]] = None) -> bool:
        """Check pi^(h/2) = Delta when mu = Id, pi^h = Delta^2 otherwise.

        Args:
            ordering: Permutation of the generators; defaults to the vertex order

        Returns:
            Whether the identity holds for this ordering

        Raises:
            DisconnectedGraphError: the graph is not connected
            UnknownGeneratorError: the ordering names a vertex not in the graph
            ValueError: the ordering is not a permutation of the generators
        """
        return self._coxeter_power_identity(ordering)[1]

    def coxeter_element_power(self, ordering: Optional[Sequence[str]] = None) -> int:
        """Exponent e with pi^e = delta, confirmed through the word problem.

        Args:
            ordering: Permutation of the generators; defaults to the vertex order

        Returns:
            h/2 when mu = Id, h otherwise

        Raises:
            InternalError: the power identity fails
        """
        e, holds = self._coxeter_power_identity(ordering)
        if not holds:
            raise InternalError(f"Coxeter element power identity fails on {self.graph}")
        return e
