"""Words over a defining graph and the word problem in the pc group G(graph).

A letter is encoded as the integer ``2*i`` for generator ``i`` (its position in
the graph's vertex order) and ``2*i + 1`` for its inverse. Integer order is
then exactly the canonical letter order: vertex order first, ``+`` before
``-``. Inversion is ``code ^ 1`` and the generator is ``code >> 1``.

Normal forms are computed in two passes. The first pass builds a geodesic by
cancelling each incoming letter against an earlier inverse occurrence that it
commutes past. The second pass treats the geodesic as a heap of pieces and
repeatedly emits the least minimal piece, which yields the shortlex-least
geodesic of the element.
"""
from __future__ import annotations

from typing import Iterable, Sequence

from .graphs import Graph

__all__ = [
    "Word",
    "WordSyntaxError",
    "AmbientMismatch",
    "letter",
    "parse_word",
    "reduce_letters",
    "normal_form",
    "is_trivial",
    "equal",
    "alphabet_of",
    "disjoint_commuting_part",
    "commutes",
    "letter_left_divides",
    "letter_right_divides",
    "cyclic_reduction",
    "parabolic_membership",
    "commutator",
]


class WordSyntaxError(ValueError):
    pass


class AmbientMismatch(ValueError):
    """Two words over different defining graphs were combined."""


def letter(graph: Graph, name: str, sign: int = 1) -> int:
    i = graph.index.get(name)
    if i is None:
        raise WordSyntaxError(f"letter {name!r} is not a vertex of the graph")
    if sign not in (1, -1):
        raise WordSyntaxError(f"sign must be +1 or -1, got {sign!r}")
    return 2 * i + (sign < 0)


class Word:
    """An immutable word over the vertices of ``graph``.

    Multiplication concatenates without reducing; use :func:`normal_form`
    for the canonical representative.
    """

    __slots__ = ("graph", "letters")

    def __init__(self, graph: Graph, letters: Iterable[int] = ()):
        self.graph = graph
        self.letters = tuple(letters)

    @classmethod
    def parse(cls, graph: Graph, text: str) -> "Word":
        return parse_word(graph, text)

    @classmethod
    def generator(cls, graph: Graph, name: str, exponent: int = 1) -> "Word":
        code = letter(graph, name)
        return cls(graph, [code ^ (exponent < 0)] * abs(exponent))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        return self.letters == other.letters and self.graph == other.graph

    def __hash__(self) -> int:
        return hash(self.letters)

    def __str__(self) -> str:
        names = self.graph.vertices
        return " ".join(names[c >> 1] + ("^-1" if c & 1 else "") for c in self.letters)

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"

    def __mul__(self, other: "Word") -> "Word":
        _same_ambient(self, other)
        return Word(self.graph, self.letters + other.letters)

    def __pow__(self, k: int) -> "Word":
        if k < 0:
            return self.inverse() ** (-k)
        return Word(self.graph, self.letters * k)

    def inverse(self) -> "Word":
        return Word(self.graph, [c ^ 1 for c in reversed(self.letters)])

    def signed_letters(self) -> list[tuple[str, int]]:
        return [(self.graph.vertices[c >> 1], -1 if c & 1 else 1) for c in self.letters]


def _same_ambient(*words: Word) -> None:
    g = words[0].graph
    for w in words[1:]:
        if w.graph is not g and w.graph != g:
            raise AmbientMismatch("words live over different defining graphs")


def parse_word(graph: Graph, text: str) -> Word:
    """Parse whitespace-separated tokens ``NAME`` or ``NAME^-1``; empty text is the identity."""
    codes = []
    for tok in text.split():
        if tok.endswith("^-1"):
            name, sign = tok[:-3], -1
        else:
            name, sign = tok, 1
        if not name:
            raise WordSyntaxError(f"malformed token {tok!r}")
        codes.append(letter(graph, name, sign))
    return Word(graph, codes)


# core algorithms on letter tuples -------------------------------------------

def reduce_letters(adj: Sequence[int], letters: Iterable[int]) -> list[int]:
    """Freely and commutatively reduce to a geodesic (not yet canonical).

    Each new letter scans back over letters it commutes with; meeting its
    inverse cancels both, meeting a blocking letter stops the scan.
    """
    out: list[int] = []
    for x in letters:
        gx = x >> 1
        ax = adj[gx]
        inv = x ^ 1
        j = len(out) - 1
        while j >= 0:
            y = out[j]
            if y == inv:
                del out[j]
                break
            gy = y >> 1
            if gy == gx or not (ax >> gy & 1):
                out.append(x)
                break
            j -= 1
        else:
            out.append(x)
    return out


def canonical_order(adj: Sequence[int], geodesic: Sequence[int]) -> tuple[int, ...]:
    """Shortlex-least rearrangement of a geodesic by commutations."""
    n = len(geodesic)
    if n < 2:
        return tuple(geodesic)
    # preds[i]: bitmask of earlier positions that must be emitted before i
    preds = [0] * n
    for i in range(n):
        gi = geodesic[i] >> 1
        ai = adj[gi]
        m = 0
        for j in range(i):
            gj = geodesic[j] >> 1
            if gj == gi or not (ai >> gj & 1):
                m |= 1 << j
        preds[i] = m
    done = 0
    remaining = list(range(n))
    out = []
    while remaining:
        best = None
        for i in remaining:
            if preds[i] & ~done == 0 and (best is None or geodesic[i] < geodesic[best]):
                best = i
        out.append(geodesic[best])
        done |= 1 << best
        remaining.remove(best)
    return tuple(out)


def nf_letters(adj: Sequence[int], letters: Iterable[int]) -> tuple[int, ...]:
    return canonical_order(adj, reduce_letters(adj, letters))


# public word operations ----------------------------------------------------------

def normal_form(w: Word) -> Word:
    """Canonical shortlex-least geodesic representing ``w``."""
    return Word(w.graph, nf_letters(w.graph.adj, w.letters))


def is_trivial(w: Word) -> bool:
    return not reduce_letters(w.graph.adj, w.letters)


def equal(w1: Word, w2: Word) -> bool:
    _same_ambient(w1, w2)
    return not reduce_letters(w1.graph.adj, w1.letters + w2.inverse().letters)


def alphabet_of(w: Word) -> frozenset[str]:
    names = w.graph.vertices
    return frozenset(names[c >> 1] for c in reduce_letters(w.graph.adj, w.letters))


def _support_mask(adj, letters) -> int:
    m = 0
    for c in reduce_letters(adj, letters):
        m |= 1 << (c >> 1)
    return m


def disjoint_commuting_part(w: Word) -> frozenset[str]:
    """Generators outside the support of ``w`` that commute with all of it."""
    g = w.graph
    return frozenset(g.names_of(_disjoint_commuting_mask(g.adj, _support_mask(g.adj, w.letters))))


def _disjoint_commuting_mask(adj, support: int) -> int:
    m = 0
    for i in range(len(adj)):
        if not (support >> i & 1) and adj[i] & support == support:
            m |= 1 << i
    return m


def commutator(u: Word, v: Word) -> Word:
    """The word ``u^-1 v^-1 u v`` (unreduced)."""
    _same_ambient(u, v)
    return u.inverse() * v.inverse() * u * v


def commutes_letters(adj, u: Sequence[int], v: Sequence[int]) -> bool:
    inv_u = [c ^ 1 for c in reversed(u)]
    inv_v = [c ^ 1 for c in reversed(v)]
    return not reduce_letters(adj, [*inv_u, *inv_v, *u, *v])


def commutes(w1: Word, w2: Word) -> bool:
    _same_ambient(w1, w2)
    return commutes_letters(w1.graph.adj, w1.letters, w2.letters)


def _divides(adj, code: int, geodesic: Sequence[int]) -> bool:
    g = code >> 1
    a = adj[g]
    for y in geodesic:
        if y == code:
            return True
        gy = y >> 1
        if gy == g or not (a >> gy & 1):
            return False
    return False


def letter_left_divides(l: Word, w: Word) -> bool:
    """Whether the single letter ``l`` begins some geodesic of ``w``."""
    _same_ambient(l, w)
    if len(l) != 1:
        raise ValueError("letter_left_divides expects a single letter")
    return _divides(w.graph.adj, l.letters[0], reduce_letters(w.graph.adj, w.letters))


def letter_right_divides(l: Word, w: Word) -> bool:
    _same_ambient(l, w)
    if len(l) != 1:
        raise ValueError("letter_right_divides expects a single letter")
    geo = reduce_letters(w.graph.adj, w.letters)
    return _divides(w.graph.adj, l.letters[0], geo[::-1])


def _remove_first(adj, code: int, geodesic: list[int]) -> list[int]:
    """Drop the occurrence of ``code`` that left-divides ``geodesic``."""
    i = geodesic.index(code)
    return geodesic[:i] + geodesic[i + 1:]


def cyclic_reduce_letters(adj, letters) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Return ``(conjugator, core)`` in normal form with ``w = conjugator core conjugator^-1``.

    Repeatedly peels the least letter ``x`` such that ``x`` left-divides and
    ``x^-1`` right-divides the current geodesic.
    """
    geo = reduce_letters(adj, letters)
    conj: list[int] = []
    while len(geo) >= 2:
        peeled = None
        for x in sorted(set(geo)):
            if _divides(adj, x, geo) and _divides(adj, x ^ 1, geo[::-1]):
                peeled = x
                break
        if peeled is None:
            break
        geo = _remove_first(adj, peeled, geo)
        geo = _remove_first(adj, peeled ^ 1, geo[::-1])[::-1]
        conj.append(peeled)
    return nf_letters(adj, conj), canonical_order(adj, geo)


def cyclic_reduction(w: Word) -> tuple[Word, Word]:
    conj, core = cyclic_reduce_letters(w.graph.adj, w.letters)
    return Word(w.graph, conj), Word(w.graph, core)


def parabolic_membership(w: Word, s: Iterable[str]) -> bool:
    """Whether ``w`` lies in the subgroup generated by the vertex set ``s``."""
    mask = w.graph.mask_of(s)
    return _support_mask(w.graph.adj, w.letters) & ~mask == 0
