import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from pcgroup.graphs import Graph, complete_graph, edgeless_graph, path_graph
from pcgroup.words import (
    AmbientMismatch,
    Word,
    WordSyntaxError,
    alphabet_of,
    commutator,
    commutes,
    cyclic_reduction,
    disjoint_commuting_part,
    equal,
    is_trivial,
    letter_left_divides,
    letter_right_divides,
    nf_letters,
    normal_form,
    parabolic_membership,
    parse_word,
    reduce_letters,
)
from oracles import TrivialityOracle, oracle_length, random_graph, random_letters

P3 = path_graph(["a", "b", "c"])


def W(text, g=P3):
    return parse_word(g, text)


@st.composite
def graph_and_word(draw, max_n=5, max_len=10):
    n = draw(st.integers(1, max_n))
    vs = [chr(ord("a") + i) for i in range(n)]
    pairs = list(itertools.combinations(vs, 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    g = Graph(vs, [p for p, k in zip(pairs, keep) if k])
    letters = draw(st.lists(st.integers(0, 2 * n - 1), max_size=max_len))
    return g, Word(g, letters)


class TestParsing:
    def test_round_trip(self):
        assert str(W("a b^-1 c")) == "a b^-1 c"
        assert str(W("")) == ""

    @pytest.mark.parametrize("text", ["z", "a^2", "^-1", "a^-2"])
    def test_rejects(self, text):
        with pytest.raises(WordSyntaxError):
            W(text)

    def test_power_and_inverse(self):
        assert str(W("a b") ** 2) == "a b a b"
        assert str(W("a b") ** -1) == "b^-1 a^-1"
        assert str(Word.generator(P3, "c", -2)) == "c^-1 c^-1"

    def test_ambient_mismatch(self):
        other = path_graph(["a", "b", "c", "d"])
        with pytest.raises(AmbientMismatch):
            equal(W("a"), W("a", other))


class TestNormalForm:
    @pytest.mark.parametrize(
        "text, expected",
        [("a b a^-1", "b"), ("b a", "a b"), ("a a^-1", ""), ("c a", "c a"), ("a c a^-1", "a c a^-1"),
         ("b c b^-1 c^-1", ""), ("a b c", "a b c"), ("c b a", "b c a")],
    )
    def test_examples(self, text, expected):
        assert str(normal_form(W(text))) == expected

    def test_free_group_cancellation(self):
        g = edgeless_graph(["x", "y"])
        assert str(normal_form(W("x y y^-1 x^-1 y", g))) == "y"

    def test_free_abelian(self):
        g = complete_graph(["x", "y", "z"])
        assert str(normal_form(W("z y x z^-1 y", g))) == "x y y"

    @settings(max_examples=300, deadline=None)
    @given(graph_and_word())
    def test_idempotent_and_geodesic(self, gw):
        g, w = gw
        nf = normal_form(w)
        assert normal_form(nf) == nf
        assert len(nf) == oracle_length(g.adj, w.letters)

    @settings(max_examples=300, deadline=None)
    @given(graph_and_word(max_len=8))
    def test_triviality_matches_rewriting(self, gw):
        g, w = gw
        assert is_trivial(w) == TrivialityOracle(g.adj)(w.letters)

    @settings(max_examples=200, deadline=None)
    @given(graph_and_word(), st.data())
    def test_invariant_under_commuting_swap_and_insertion(self, gw, data):
        g, w = gw
        letters = list(w.letters)
        nf = normal_form(w)
        i = data.draw(st.integers(0, len(letters)))
        x = data.draw(st.integers(0, 2 * len(g) - 1))
        assert normal_form(Word(g, letters[:i] + [x, x ^ 1] + letters[i:])) == nf
        for j in range(len(letters) - 1):
            a, b = letters[j] >> 1, letters[j + 1] >> 1
            if a != b and g.adj[a] >> b & 1:
                swapped = letters[:j] + [letters[j + 1], letters[j]] + letters[j + 2:]
                assert normal_form(Word(g, swapped)) == nf

    @settings(max_examples=150, deadline=None)
    @given(graph_and_word(max_len=6), st.data())
    def test_congruence(self, gw, data):
        g, u = gw
        v = Word(g, data.draw(st.lists(st.integers(0, 2 * len(g) - 1), max_size=6)))
        assert normal_form(u * v) == normal_form(normal_form(u) * normal_form(v))
        assert is_trivial(u * u.inverse())

    def test_canonical_is_shortlex_least(self):
        rng = random.Random(7)
        for _ in range(200):
            g = random_graph(rng, 4)
            w = random_letters(rng, 4, rng.randrange(7))
            nf = nf_letters(g.adj, w)
            assert nf == min(_geodesics(g.adj, w))


def _geodesics(adj, word):
    """Every geodesic spelling, by exhaustive rewriting down to minimal length."""
    from oracles import swap_class

    target = oracle_length(adj, word)
    start = tuple(reduce_letters(adj, word))
    assert len(start) == target
    return swap_class(adj, start)


class TestPredicates:
    def test_commutes(self):
        assert commutes(W("a"), W("b"))
        assert not commutes(W("a"), W("c"))
        assert commutes(W("a c"), W("a c a c"))

    def test_commutator(self):
        assert is_trivial(commutator(W("a"), W("b")))
        assert not is_trivial(commutator(W("a"), W("c")))

    def test_alphabet_and_disjoint_part(self):
        assert alphabet_of(W("a b b^-1")) == {"a"}
        assert disjoint_commuting_part(W("a")) == {"b"}
        assert disjoint_commuting_part(W("a c")) == {"b"}
        assert disjoint_commuting_part(W("b")) == {"a", "c"}
        assert disjoint_commuting_part(W("a b")) == set()

    def test_divisibility(self):
        assert letter_left_divides(W("b"), W("a b c"))
        assert not letter_left_divides(W("c"), W("a c"))
        assert not letter_left_divides(W("c"), W("a b c a^-1"))
        assert letter_right_divides(W("a^-1"), W("a c a^-1"))
        assert not letter_right_divides(W("a"), W("a c"))
        with pytest.raises(ValueError):
            letter_left_divides(W("a b"), W("a"))

    def test_cyclic_reduction(self):
        conj, core = cyclic_reduction(W("a c a^-1"))
        assert (str(conj), str(core)) == ("a", "c")
        conj, core = cyclic_reduction(W("a c"))
        assert (str(conj), str(core)) == ("", "a c")

    @settings(max_examples=200, deadline=None)
    @given(graph_and_word())
    def test_cyclic_reduction_reassembles(self, gw):
        g, w = gw
        conj, core = cyclic_reduction(w)
        assert equal(conj * core * conj.inverse(), w)
        assert len(normal_form(core * core)) == 2 * len(core)

    def test_parabolic(self):
        assert parabolic_membership(W("a b a^-1"), {"b"})
        assert not parabolic_membership(W("a c"), {"a"})
        assert parabolic_membership(W(""), set())

    @settings(max_examples=100, deadline=None)
    @given(graph_and_word(max_n=4, max_len=6))
    def test_generator_commutation_matches_star(self, gw):
        g, _ = gw
        for u, v in itertools.product(g.vertices, repeat=2):
            c = commutes(Word.generator(g, u), Word.generator(g, v))
            assert c == (u == v or g.has_edge(u, v))
