"""Property suites over the type catalog.

Every suite draws its randomness from the generator it is handed, so a
fixed seed gives an identical report.
"""

import math
import random
from itertools import combinations, product
from typing import Dict, List, Sequence, Tuple

from .base import CheckResult, SuiteRegistry, VerificationSuite
from .oracles import positive_word_classes, rewriting_closure, weak_order_join, weak_order_meet
from ..coxeter.catalog import TypeID, catalog_graph, graphs_equal, mu_is_identity, spherical_catalog
from ..coxeter.graph import CoxeterGraph, parse_graph
from ..coxeter.group import build_root_system
from ..errors import InternalError
from ..garside.factory import get_garside_structure
from ..garside.homomorphism import Homomorphism
from ..garside.structure import GarsideStructure, NormalForm
from ..garside.words import ArtinWord, parse_word, relation_word
from ..invariants.invariants import decide_iso, mf, separation_collisions, tabulated_mf
from ..utils.config import config
from ..utils.logging import get_logger

logger = get_logger(__name__)


def structure_for(t: TypeID) -> GarsideStructure:
    """Cached Garside structure of the standard graph of t."""
    return get_garside_structure(catalog_graph(t))


def random_word(rng: random.Random, names: Sequence[str], max_length: int, positive: bool = False) -> ArtinWord:
    """Uniform random word.

    Args:
        rng: The suite's seeded generator
        names: Generators to draw from
        max_length: Largest length; the length itself is uniform in [0, max_length]
        positive: Whether to draw only positive letters

    Returns:
        ArtinWord with letters of exponent 1 or -1
    """
    length = rng.randint(0, max_length)
    letters = []
    for _ in range(length):
        sign = 1 if positive or rng.random() < 0.5 else -1
        letters.append((rng.choice(names), sign))
    return ArtinWord(tuple(letters))


def summarize(name: str, failures: List[str], total: int) -> CheckResult:
    """One result for a batch of samples; the first failure is the counterexample."""
    if failures:
        return CheckResult(name, False, f"{len(failures)} of {total} fail", counterexample=failures[0])
    return CheckResult(name, True, f"{total} checked")


def expect(name: str, actual, expected) -> CheckResult:
    """Single check comparing a computed value with the expected one."""
    if actual == expected:
        return CheckResult(name, True, f"{actual}")
    return CheckResult(name, False, f"expected {expected}, got {actual}")


def _parse_type(text: str) -> TypeID:
    return TypeID.parse(text)


class MonoidSuite(VerificationSuite):
    """Normal forms against rewriting classes, lattice laws on simples, cancellativity."""

    CLASS_TYPES = ('A2', 'B2', 'I2(5)', 'A3')
    LATTICE_TYPES = ('A2', 'B2', 'I2(5)')

    @property
    def name(self) -> str:
        return "monoid"

    @property
    def description(self) -> str:
        return "normal-form uniqueness, lattice laws on simples and cancellativity"

    def run(self, rng: random.Random) -> List[CheckResult]:
        results = self._examples()
        max_length = config.monoid_max_length
        for text in self.track(self.CLASS_TYPES, desc="normal form classes"):
            results.extend(self._classes(_parse_type(text), max_length))
        for text in self.track(self.LATTICE_TYPES, desc="lattices"):
            results.extend(self._lattice(_parse_type(text)))
        results.append(self._cancellation(rng))
        return results

    def _examples(self) -> List[CheckResult]:
        G = structure_for(TypeID('A', 2))
        s, t = G.letter('s1'), G.letter('s2')
        st = G.simple(['s1', 's2'])
        return [
            expect("A2 nf(s t s t)", G.normal_form(parse_word("s1 s2 s1 s2")), NormalForm(1, (t,))),
            expect("A2 nf(s t s)", G.normal_form(parse_word("s1 s2 s1")), NormalForm(1)),
            expect("A2 nf(empty)", G.normal_form(ArtinWord()), NormalForm()),
            expect("A2 simple_product(s, t)", G.simple_product(s, t), st),
            expect("A2 simple_product(s, s)", G.simple_product(s, s), None),
        ]

    def _classes(self, t: TypeID, max_length: int) -> List[CheckResult]:
        """Positive words up to max_length: same rewriting class iff same normal form."""
        G = structure_for(t)
        labels = positive_word_classes(G.graph, max_length)
        class_nf: Dict[int, NormalForm] = {}
        split, merged = [], []
        for word, label in labels.items():
            nf = G.normal_form(ArtinWord.positive(word))
            if class_nf.setdefault(label, nf) != nf:
                split.append(" ".join(word))
        owner: Dict[NormalForm, int] = {}
        for label, nf in class_nf.items():
            if owner.setdefault(nf, label) != label:
                merged.append(str(G.spell(nf)))
        return [
            summarize(f"{t}: one normal form per rewriting class (length <= {max_length})", split, len(labels)),
            summarize(f"{t}: distinct classes have distinct normal forms", merged, len(class_nf)),
        ]

    def _lattice(self, t: TypeID) -> List[CheckResult]:
        """Meets and joins of all simples against the weak-order scan, plus the lattice laws."""
        G = structure_for(t)
        rs = G.rs
        elements = rs.enumerate_elements()
        oracle, laws, weighted = [], [], []
        for u, v in product(elements, repeat=2):
            label = f"{' '.join(rs.reduced_word(u)) or '1'} | {' '.join(rs.reduced_word(v)) or '1'}"
            for side in ('left', 'right'):
                meet = G.meet_simples(u, v, side)
                join = G.join_simples(u, v, side)
                if meet != weak_order_meet(rs, elements, u, v, side) or \
                        join != weak_order_join(rs, elements, u, v, side):
                    oracle.append(f"{side}: {label}")
                if meet != G.meet_simples(v, u, side) or join != G.join_simples(v, u, side) \
                        or G.meet_simples(u, u, side) != u or G.join_simples(u, u, side) != u \
                        or G.meet_simples(u, join, side) != u or G.join_simples(u, meet, side) != u:
                    laws.append(f"{side}: {label}")
            weighted.extend(self._weighted_failures(G, u, v, label))
        assoc = []
        for u, v, w in product(elements, repeat=3):
            for side in ('left', 'right'):
                if G.meet_simples(G.meet_simples(u, v, side), w, side) != \
                        G.meet_simples(u, G.meet_simples(v, w, side), side):
                    assoc.append(f"meet {side}")
                if G.join_simples(G.join_simples(u, v, side), w, side) != \
                        G.join_simples(u, G.join_simples(v, w, side), side):
                    assoc.append(f"join {side}")
        full = G.identity
        for s in G.generators:
            full = G.join_simples(full, G.letter(s), 'left')
        pairs = len(elements) ** 2
        return [
            summarize(f"{t}: meet/join agree with the weak-order scan", oracle, pairs),
            summarize(f"{t}: idempotence, commutativity, absorption", laws, pairs),
            summarize(f"{t}: associativity", assoc, len(elements) ** 3),
            summarize(f"{t}: left_weighted_pair preserves the product and weights the pair", weighted, pairs),
            expect(f"{t}: join of the generators is Delta", full, G.w0),
        ]

    @staticmethod
    def _weighted_failures(G: GarsideStructure, u, v, label: str) -> List[str]:
        rs = G.rs
        a, b = G.left_weighted_pair(u, v)
        before = tuple(rs.reduced_word(u) + rs.reduced_word(v))
        after = tuple(rs.reduced_word(a) + rs.reduced_word(b))
        ok = (
            rs.length(a) + rs.length(b) == rs.length(u) + rs.length(v)
            and set(rs.left_descent_indices(b)) <= set(rs.right_descent_indices(a))
            and after in rewriting_closure(before, G.graph)
            and G.left_weighted_pair(a, b) == (a, b)
        )
        return [] if ok else [label]

    def _cancellation(self, rng: random.Random) -> CheckResult:
        """Random triples: a x = a y and x a = y a hold exactly when x = y."""
        samples = config.cancellation_samples
        failures = []
        types = [_parse_type(text) for text in self.CLASS_TYPES]
        for i in self.track(range(samples), desc="cancellation"):
            G = structure_for(types[i % len(types)])
            names = G.generators
            a = ArtinWord.positive(rng.choice(names) for _ in range(rng.randint(1, 3)))
            x = random_word(rng, names, 4, positive=True)
            if rng.random() < 0.5:
                y = ArtinWord.positive(rng.choice(sorted(rewriting_closure(tuple(s for s, _ in x), G.graph))))
            else:
                y = ArtinWord.positive(rng.choice(names) for _ in range(len(x)))
            same = G.normal_form(x) == G.normal_form(y)
            left = G.normal_form(a * x) == G.normal_form(a * y)
            right = G.normal_form(x * a) == G.normal_form(y * a)
            if left != same or right != same:
                failures.append(f"a = {a}; x = {x}; y = {y}")
        return summarize("cancellativity on both sides", failures, samples)


class CharneySuite(VerificationSuite):
    """Charney forms on random words, and parabolic compatibility in A4."""

    TYPES = ('A3', 'B3', 'H3')

    @property
    def name(self) -> str:
        return "charney"

    @property
    def description(self) -> str:
        return "Charney-form invariants, agreement of both equality routes, parabolic supports"

    def run(self, rng: random.Random) -> List[CheckResult]:
        results = self._examples()
        for text in self.TYPES:
            results.extend(self._random_words(_parse_type(text), rng))
        results.extend(self._parabolic(rng))
        return results

    def _examples(self) -> List[CheckResult]:
        G = structure_for(TypeID('A', 2))

        def pair(text):
            p = G.charney(parse_word(text))
            return (str(p.b_word), str(p.c_word))

        return [
            expect("A2 charney(s^-1 t)", pair("s1^-1 s2"), ("s2 s1", "s1 s2")),
            expect("A2 charney(s t^-1)", pair("s1 s2^-1"), ("s1", "s2")),
            expect("A2 charney(t s t)", pair("s2 s1 s2"), ("s1 s2 s1", "1")),
            expect("A2 delta_form(s s^-1)", G.delta_form(parse_word("s1 s1^-1")).k, 0),
        ]

    @staticmethod
    def _mutate(rng: random.Random, G: GarsideStructure, w: ArtinWord) -> Tuple[ArtinWord, bool]:
        """A second word and whether it is known to equal w."""
        letters = list(w.letters)
        choice = rng.randrange(3)
        if choice == 0:
            s, t = rng.sample(G.generators, 2) if G.n > 1 else (G.generators[0], None)
            if t is None:
                relator = ArtinWord.generator(s) * ArtinWord.generator(s, -1)
            else:
                m = G.graph.m(s, t)
                relator = relation_word(s, t, m) * relation_word(t, s, m).inverse()
            i = rng.randint(0, len(letters))
            return ArtinWord(tuple(letters[:i]) + relator.letters + tuple(letters[i:])), True
        if choice == 1 and len(letters) > 1:
            i = rng.randrange(len(letters) - 1)
            letters[i], letters[i + 1] = letters[i + 1], letters[i]
            return ArtinWord(tuple(letters)), False
        return random_word(rng, G.generators, len(letters)), False

    def _random_words(self, t: TypeID, rng: random.Random) -> List[CheckResult]:
        """Charney-form properties on random words of t and on relation-preserving rewrites of them."""
        G = structure_for(t)
        samples = config.charney_samples
        max_length = config.charney_max_length
        failed: Dict[str, List[str]] = {k: [] for k in ('gcd', 'reconstruct', 'idempotent', 'routes', 'degree')}
        for _ in self.track(range(samples), desc=f"charney {t}"):
            w = random_word(rng, G.generators, max_length)
            pair = G.charney(w)
            d, _, _ = G.right_gcd(pair.b, pair.c)
            if not d.is_identity():
                failed['gcd'].append(str(w))
            recon = pair.b_word * pair.c_word.inverse()
            if not G.equals_by_normal_form(recon, w):
                failed['reconstruct'].append(str(w))
            again = G.charney(recon)
            if again != pair or again.b_word != pair.b_word or again.c_word != pair.c_word:
                failed['idempotent'].append(str(w))
            other, known_equal = self._mutate(rng, G, w)
            by_charney = G.equals(w, other)
            if by_charney != G.equals_by_normal_form(w, other) or (known_equal and not by_charney):
                failed['routes'].append(f"{w} vs {other}")
            if pair.b_word.degree() - pair.c_word.degree() != w.degree():
                failed['degree'].append(str(w))
        return [
            summarize(f"{t}: b and c have no common right divisor", failed['gcd'], samples),
            summarize(f"{t}: b c^-1 equals the input", failed['reconstruct'], samples),
            summarize(f"{t}: charney is idempotent", failed['idempotent'], samples),
            summarize(f"{t}: Charney and normal-form equality agree", failed['routes'], samples),
            summarize(f"{t}: degree(b) - degree(c) = degree(w)", failed['degree'], samples),
        ]

    def _parabolic(self, rng: random.Random) -> List[CheckResult]:
        """Charney forms of words over a proper subset X of A4 stay inside X and never equal Delta^k."""
        G = structure_for(TypeID('A', 4))
        samples = config.parabolic_samples
        max_length = config.charney_max_length
        deltas = {k: G.charney(G.delta_word(k)) for k in (1, 2, 3)}
        subsets = [X for r in range(1, G.n) for X in combinations(G.generators, r)]
        outside, hit = [], []
        for X in self.track(subsets, desc="parabolic subsets"):
            for _ in range(samples):
                w = random_word(rng, X, max_length)
                pair = G.charney(w)
                if not (G.support(pair.b_word) | G.support(pair.c_word)) <= set(X):
                    outside.append(f"X = {{{', '.join(X)}}}: {w}")
                p = random_word(rng, X, max_length, positive=True)
                positive_pair = G.charney(p)
                if any(positive_pair == pair_k for pair_k in deltas.values()):
                    hit.append(f"X = {{{', '.join(X)}}}: {p}")
        total = samples * len(subsets)
        return [
            summarize("A4: Charney supports stay inside the parabolic subset", outside, total),
            summarize("A4: no word over a proper subset equals Delta^k, k = 1..3", hit, total),
            expect("A4: support(Delta) is every generator", G.support(G.delta_word(1)), frozenset(G.generators)),
        ]


MU_GRID = spherical_catalog(max_rank=4, dihedral=(5, 10))


class MuSuite(VerificationSuite):
    """Properties of the involution mu and of the center generator."""

    @property
    def name(self) -> str:
        return "mu"

    @property
    def description(self) -> str:
        return "mu is an involution, Delta twists by mu, delta is central"

    def run(self, rng: random.Random) -> List[CheckResult]:
        results = []
        for t in self.track(MU_GRID, desc="mu"):
            G = structure_for(t)
            delta = G.delta_word(1)
            center = G.center_word()
            involution, twist, central = [], [], []
            for s in G.generators:
                x = ArtinWord.generator(s)
                if G.mu_map(G.mu_map(s)) != s:
                    involution.append(s)
                if not G.equals(delta * x, ArtinWord.generator(G.mu_map(s)) * delta):
                    twist.append(s)
                if not G.equals(center * x, x * center):
                    central.append(s)
            results.append(summarize(f"{t}: mu^2 = Id", involution, G.n))
            results.append(summarize(f"{t}: Delta s = mu(s) Delta", twist, G.n))
            results.append(summarize(f"{t}: delta commutes with every generator", central, G.n))
            results.append(expect(f"{t}: mu = Id matches the catalog", G.mu_is_identity(), mu_is_identity(t)))
        return results


MF_GRID = (
    [TypeID('A', n) for n in range(1, 7)]
    + [TypeID('B', n) for n in range(2, 7)]
    + [TypeID('D', n) for n in range(4, 8)]
    + [TypeID('E', n) for n in (6, 7, 8)]
    + [TypeID('F', 4), TypeID('H', 3), TypeID('H', 4)]
    + [TypeID('I2', p) for p in range(5, 11)]
)


class MfTableSuite(VerificationSuite):
    """mf computed from mu and the Coxeter number, against MF_TABLE."""

    @property
    def name(self) -> str:
        return "table1"

    @property
    def description(self) -> str:
        return "mf from mu and h against the published table; n h / 2 = l(w0)"

    def run(self, rng: random.Random) -> List[CheckResult]:
        results = []
        for t in self.track(MF_GRID, desc="table1"):
            rs = build_root_system(catalog_graph(t))
            h = t.coxeter_number
            fixed = all(i == j for i, j in enumerate(rs.mu_indices))
            from_roots = h // 2 if fixed else h
            results.append(expect(f"{t}: mf from the root system", from_roots, tabulated_mf(t)))
            try:
                results.append(expect(f"{t}: mf", mf(t), tabulated_mf(t)))
            except InternalError as e:
                results.append(CheckResult(f"{t}: mf", False, str(e)))
            results.append(expect(f"{t}: n h / 2 = l(w0)", t.rank * h // 2, rs.length(rs.w0)))
        return results


POWER_TYPES = ('B2', 'B3', 'B4', 'D4', 'F4', 'H3', 'I2(6)', 'I2(8)', 'A2', 'A3', 'A4', 'D5', 'I2(5)', 'I2(7)')


def distinct_orderings(rng: random.Random, names: Sequence[str], count: int = 3) -> List[Tuple[str, ...]]:
    """Vertex order first, then random distinct shuffles (fewer if n! < count)."""
    wanted = min(count, math.factorial(len(names)))
    found = [tuple(names)]
    while len(found) < wanted:
        order = list(names)
        rng.shuffle(order)
        if tuple(order) not in found:
            found.append(tuple(order))
    return found


class CoxeterPowerSuite(VerificationSuite):
    """The Coxeter element identity over several generator orderings."""

    @property
    def name(self) -> str:
        return "coxeter-power"

    @property
    def description(self) -> str:
        return "pi^(h/2) = Delta when mu = Id and pi^h = Delta^2 otherwise"

    def run(self, rng: random.Random) -> List[CheckResult]:
        results = []
        for text in self.track(POWER_TYPES, desc="coxeter elements"):
            t = _parse_type(text)
            G = structure_for(t)
            for ordering in distinct_orderings(rng, G.generators):
                label = f"{t} ordering {' '.join(ordering)}"
                results.append(expect(label, G.power_check_coxeter_element(ordering), True))
            results.append(expect(f"{t}: exponent of pi giving delta = mf", G.coxeter_element_power(), mf(t)))
        return results


DISCONNECTED = (
    ('A2', 'A1'), ('A1', 'A2'), ('A1', 'A1'), ('A1', 'A1', 'A1'), ('B2', 'A1'), ('I2(5)', 'A1'),
    ('A3', 'A1'), ('A1', 'A3'), ('B3', 'A1'), ('A2', 'A2'), ('H3', 'A1'), ('I2(6)', 'A2'),
)
RENAMED = ('A3', 'B3', 'D4', 'H3')


def union_graph(type_names: Sequence[str]) -> CoxeterGraph:
    """Disjoint union of standard graphs, vertices prefixed a, b, c, ... per part."""
    graph = None
    for i, text in enumerate(type_names):
        part = catalog_graph(_parse_type(text))
        prefix = chr(ord('a') + i)
        part = part.rename({v: f"{prefix}{v}" for v in part.vertices})
        graph = part if graph is None else graph.disjoint_union(part)
    return graph


def renamed_graph(t: TypeID, rng: random.Random) -> CoxeterGraph:
    """Standard graph of t with shuffled fresh names and a shuffled vertex order."""
    g = catalog_graph(t)
    fresh = [f"x{i}" for i in range(1, g.rank + 1)]
    rng.shuffle(fresh)
    g = g.rename(dict(zip(g.vertices, fresh)))
    order = list(g.vertices)
    rng.shuffle(order)
    return g.reorder(order)


def iso_catalog(rng: random.Random) -> List[Tuple[str, CoxeterGraph]]:
    """Labelled graphs compared pairwise by the iso suite.

    Args:
        rng: Generator for the renamed graphs

    Returns:
        (label, graph) pairs: connected types up to rank 4, fixed unions and renamings
    """
    graphs = [(str(t), catalog_graph(t)) for t in spherical_catalog(max_rank=4, dihedral=(5, 12))]
    graphs += [(" + ".join(names), union_graph(names)) for names in DISCONNECTED]
    graphs += [(f"{text} renamed", renamed_graph(_parse_type(text), rng)) for text in RENAMED]
    return graphs


class IsoSuite(VerificationSuite):
    """decide_iso against labelled-graph comparison on connected, disconnected and renamed graphs."""

    @property
    def name(self) -> str:
        return "iso"

    @property
    def description(self) -> str:
        return "decide_iso against labelled-graph comparison; separation of connected types"

    def run(self, rng: random.Random) -> List[CheckResult]:
        graphs = iso_catalog(rng)
        disagree, asymmetric = [], []
        pairs = [(a, b) for a in graphs for b in graphs]
        for (name1, g1), (name2, g2) in self.track(pairs, desc="iso pairs"):
            decision = decide_iso(g1, g2).isomorphic
            if decision != graphs_equal(g1, g2):
                disagree.append(f"{name1} vs {name2}")
            if decision != decide_iso(g2, g1).isomorphic:
                asymmetric.append(f"{name1} vs {name2}")
        reflexive = [name for name, g in graphs if not decide_iso(g, g).isomorphic]
        connected = spherical_catalog(max_rank=4, dihedral=(5, 12))
        collisions = [f"{s} / {t}" for s, t in separation_collisions(connected)]
        d4_b4 = decide_iso(catalog_graph(TypeID('D', 4)), catalog_graph(TypeID('B', 4)))
        renamed_a3 = decide_iso(catalog_graph(TypeID('A', 3)), renamed_graph(TypeID('A', 3), rng))
        return [
            summarize(f"decide_iso agrees with graphs_equal on {len(graphs)} graphs", disagree, len(pairs)),
            summarize("decide_iso is symmetric", asymmetric, len(pairs)),
            summarize("decide_iso is reflexive", reflexive, len(graphs)),
            summarize("(cd, mf, rkAb) separates connected types", collisions, len(connected)),
            expect("D4 vs B4 is separated by mf", "mf: 3 vs 4" in d4_b4.explanation and not d4_b4.isomorphic, True),
            expect("renaming does not change the decision", renamed_a3.isomorphic, True),
        ]


AUTOMORPHISM_GRAPH = """\
vertices s1 s2 t
edge s1 s2 3
"""


def automorphism_maps() -> Tuple[GarsideStructure, Homomorphism, Homomorphism]:
    """phi and its inverse on A2 + A1, with delta = (s1 s2)^3 central in the A2 factor."""
    G = get_garside_structure(parse_graph(AUTOMORPHISM_GRAPH))
    delta = parse_word("s1 s2 s1 s2 s1 s2", G.graph)
    t = ArtinWord.generator('t')
    phi = Homomorphism(G.graph, G, {
        's1': ArtinWord.generator('s1') * delta * t,
        's2': ArtinWord.generator('s2') * delta * t,
        't': delta * t,
    })
    phi_inverse = Homomorphism(G.graph, G, {
        's1': parse_word("s1 t^-1", G.graph),
        's2': parse_word("s2 t^-1", G.graph),
        't': delta.inverse() * t ** 7,
    })
    return G, phi, phi_inverse


class AutomorphismSuite(VerificationSuite):
    """An automorphism of A2 + A1 that does not preserve the generating set."""

    @property
    def name(self) -> str:
        return "example5"

    @property
    def description(self) -> str:
        return "the automorphism phi of A2 + A1 and its inverse, checked through the word problem"

    def run(self, rng: random.Random) -> List[CheckResult]:
        G, phi, phi_inverse = automorphism_maps()
        results = [
            summarize("phi respects the relations", [f"{s}-{t}" for s, t in phi.failing_relations()], 3),
            summarize("phi^-1 respects the relations",
                      [f"{s}-{t}" for s, t in phi_inverse.failing_relations()], 3),
        ]
        for s in G.generators:
            x = ArtinWord.generator(s)
            results.append(expect(f"phi(phi^-1({s})) = {s}", G.equals(phi.apply(phi_inverse.apply(x)), x), True))
            results.append(expect(f"phi^-1(phi({s})) = {s}", G.equals(phi_inverse.apply(phi.apply(x)), x), True))
        delta = parse_word("s1 s2 s1 s2 s1 s2", G.graph)
        t = ArtinWord.generator('t')
        results.append(expect("phi(delta) = delta^7 t^6", G.equals(phi.apply(delta), delta ** 7 * t ** 6), True))
        return results


# Global suite registry
suite_registry = SuiteRegistry()
for _suite in (MonoidSuite(), CharneySuite(), MuSuite(), MfTableSuite(), CoxeterPowerSuite(), IsoSuite(),
               AutomorphismSuite()):
    suite_registry.register(_suite)
