import random

import pytest

from pcgroup.blocks import (
    block_decomposition,
    centralizer_basis,
    is_conjugate,
    is_generator_power_conjugate,
    least_root,
)
from pcgroup.graphs import Graph, cycle_graph, edgeless_graph, path_graph
from pcgroup.words import Word, commutes, equal, is_trivial, nf_letters, normal_form, parse_word
from oracles import brute_force_root, oracle_conjugate, random_graph, random_letters

P3 = path_graph(["a", "b", "c"])


def W(text, g=P3):
    return parse_word(g, text)


def _nontrivial(rng, g, max_len):
    while True:
        w = Word(g, random_letters(rng, len(g), rng.randrange(1, max_len + 1)))
        if not is_trivial(w):
            return w


class TestBlocks:
    def test_single_block_power(self):
        d = block_decomposition(W("a c a c"))
        assert [(str(r), e) for r, e in d.blocks] == [("a c", 2)]
        assert str(d.conjugator) == ""

    def test_conjugated(self):
        d = block_decomposition(W("a c a^-1"))
        assert str(d.conjugator) == "a"
        assert [(str(r), e) for r, e in d.blocks] == [("c", 1)]

    def test_commuting_blocks(self):
        d = block_decomposition(W("a b b c"))
        assert sorted((str(r), e) for r, e in d.blocks) == [("a c", 1), ("b", 2)]

    def test_trivial(self):
        assert block_decomposition(W("a a^-1")).blocks == ()

    def test_reassembly_random(self):
        rng = random.Random(1)
        for _ in range(400):
            g = random_graph(rng, rng.randrange(1, 6))
            w = Word(g, random_letters(rng, len(g), rng.randrange(10)))
            d = block_decomposition(w)
            core = Word(g, ())
            for i, (r, e) in enumerate(d.blocks):
                core = core * r ** e
                for r2, e2 in d.blocks[i + 1:]:
                    assert commutes(r, r2)
            p = d.conjugator
            assert equal(p * core * p.inverse(), w)


class TestLeastRoot:
    def test_examples(self):
        r, k = least_root(W("a c a c"))
        assert (str(r), k) == ("a c", 2)
        r, k = least_root(W("b b a c a c"))
        assert (str(r), k) == ("a b c", 2)
        assert least_root(W("b a c a c"))[1] == 1
        r, k = least_root(W("a a b b"))
        assert (str(r), k) == ("a b", 2)

    def test_interleaved_counts(self):
        g = Graph(["a", "b", "c"], [("a", "b")])
        r, k = least_root(W("a c b a c b", g))
        assert (str(r), k) == ("a c b", 2)

    def test_trivial_raises(self):
        with pytest.raises(ValueError):
            least_root(W(""))

    def test_against_brute_force(self):
        rng = random.Random(2)
        for _ in range(150):
            g = random_graph(rng, rng.randrange(1, 4))
            base = random_letters(rng, len(g), rng.randrange(1, 3))
            k = rng.randrange(1, 4)
            letters = nf_letters(g.adj, base * k)
            if not letters:
                continue
            # brute force assumes the word is cyclically reduced
            from pcgroup.words import cyclic_reduce_letters

            _, core = cyclic_reduce_letters(g.adj, letters)
            if len(core) > 6:
                continue
            _, bk = brute_force_root(g.adj, core)
            root, m = least_root(Word(g, core))
            assert m == bk
            assert equal(root ** m, Word(g, core))

    def test_root_power_identity_random(self):
        rng = random.Random(3)
        for _ in range(300):
            g = random_graph(rng, rng.randrange(1, 6))
            w = _nontrivial(rng, g, 8)
            k = rng.randrange(1, 4)
            r, m = least_root(w ** k)
            assert equal(r ** m, w ** k)
            assert m % k == 0
            assert least_root(r)[1] == 1


class TestCentralizer:
    def test_examples(self):
        c = centralizer_basis(W("a"))
        assert [str(x) for x in c.cyclic_parts] == ["a"]
        assert [str(x) for x in c.abelian_part] == ["b"]
        c = centralizer_basis(W("b"))
        assert [str(x) for x in c.cyclic_parts] == ["b"]
        assert [str(x) for x in c.abelian_part] == ["a", "c"]
        c = centralizer_basis(W("a c a c"))
        assert [str(x) for x in c.cyclic_parts] == ["a c"]
        assert [str(x) for x in c.abelian_part] == ["b"]

    def test_conjugated(self):
        c = centralizer_basis(W("c a c^-1"))
        assert [str(x) for x in c.cyclic_parts] == ["c a c^-1"]
        assert [str(x) for x in c.abelian_part] == ["b"]

    def test_trivial_raises(self):
        with pytest.raises(ValueError):
            centralizer_basis(W(""))

    def test_basis_commutes_random(self):
        rng = random.Random(4)
        for _ in range(500):
            g = random_graph(rng, rng.randrange(1, 6))
            w = _nontrivial(rng, g, 8)
            c = centralizer_basis(w)
            for x in c.cyclic_parts + c.abelian_part:
                assert commutes(x, w)


class TestConjugacy:
    def test_examples(self):
        assert is_conjugate(W("a c"), W("c a"))
        assert not is_conjugate(W("a"), W("c"))
        assert is_conjugate(W("a b c a^-1"), W("b c"))
        assert not is_conjugate(W("a c"), W("a c^-1"))
        assert is_conjugate(W(""), W("a a^-1"))

    def test_free_group(self):
        g = edgeless_graph(["x", "y", "z"])
        assert is_conjugate(W("x y z", g), W("z x y", g))
        assert not is_conjugate(W("x y z", g), W("x z y", g))

    def test_against_orbit_oracle(self):
        rng = random.Random(5)
        for _ in range(600):
            g = random_graph(rng, rng.randrange(1, 5))
            u = random_letters(rng, len(g), rng.randrange(7))
            if rng.random() < 0.5:
                p = random_letters(rng, len(g), rng.randrange(4))
                v = p + u + tuple(c ^ 1 for c in reversed(p))
                cut = rng.randrange(len(u) + 1)
                v = v if rng.random() < 0.5 else u[cut:] + u[:cut]
            else:
                v = random_letters(rng, len(g), rng.randrange(7))
            assert is_conjugate(Word(g, u), Word(g, v)) == oracle_conjugate(g.adj, u, v)

    def test_invariance_under_conjugation(self):
        rng = random.Random(6)
        for _ in range(300):
            g = random_graph(rng, rng.randrange(1, 6))
            w = Word(g, random_letters(rng, len(g), rng.randrange(8)))
            p = Word(g, random_letters(rng, len(g), rng.randrange(5)))
            assert is_conjugate(w, p * w * p.inverse())

    def test_generator_power_conjugate(self):
        assert is_generator_power_conjugate(W("a c a^-1")) == ("c", 1)
        assert is_generator_power_conjugate(W("b b")) == ("b", 2)
        assert is_generator_power_conjugate(W("c^-1 c^-1")) == ("c", -2)
        assert is_generator_power_conjugate(W("a c")) is None
        assert is_generator_power_conjugate(W("a b")) is None
        with pytest.raises(ValueError):
            is_generator_power_conjugate(W(""))

    def test_generator_power_in_c5(self):
        g = cycle_graph(5)
        w = W("1 3 1^-1", g)
        assert is_generator_power_conjugate(w) == ("3", 1)
        assert normal_form(w) == w
