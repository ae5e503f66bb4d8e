"""Embedding decision procedures between pc groups.

``decide_ege`` answers whether a graph is an induced subgraph of the
extension graph of another, by searching balls of growing radius up to the
conjugator-length bound. ``decide_embedding`` dispatches on the graph
classes for which every embedding can be replaced by an extension graph
embedding, so the ball search also settles the embedding question there.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Mapping, Sequence

from .blocks import block_decomposition
from .graphs import (
    ColouredGraph,
    Graph,
    _components_of_mask,
    classify,
    complement,
    find_induced_embedding,
    induced_subgraph,
    is_clique,
    is_connected_mask,
    max_clique_size,
)
from .extension import Ball, Budget, BudgetExceeded, ExtVertex, ball, grow, theoretical_radius
from .words import Word, WordSyntaxError, commutes, is_trivial, letter, nf_letters, normal_form

__all__ = [
    "Outcome",
    "Verdict",
    "GeneratorMap",
    "decide_ege",
    "decide_embedding",
    "validate_witness",
    "check_homomorphism",
    "apply_map",
    "compose_maps",
    "is_injective_on",
    "iterated_commutator",
    "commutator_nontrivial_criterion",
    "coloured_block_graph",
]

# reason tags
FOUND = "ege-witness-found"
EXHAUSTED = "ege-radius-bound-exhausted"
FINITE = "ege-extension-graph-finite"
CAPPED = "ege-cap-reached"
BUDGET = "ege-budget-exceeded"
JOIN_SPLIT = "ege-join-split"

CLIQUE_SOURCE = "clique-source"
CLIQUE_TARGET = "clique-target"
TRIANGLE_FREE_TARGET = "triangle-free-target"
TRIANGLE_BUILT_TARGET = "triangle-built-target"
FOREST_SOURCE = "forest-source"
COFOREST_SOURCE = "complement-of-forest-source"
NOT_COVERED = "general Embedding Problem not covered"


class Outcome(str, Enum):
    YES = "yes"
    NO = "no"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class Verdict:
    outcome: Outcome
    reason: str
    witness: Mapping[str, ExtVertex] | None = None
    searched_radius: int | None = None
    # radius of the ball the witness was found in; not part of the JSON form
    radius: int | None = field(default=None, compare=False)
    budget_tripped: bool = field(default=False, compare=False)

    def with_reason(self, reason: str) -> "Verdict":
        return Verdict(self.outcome, reason, self.witness, self.searched_radius, self.radius, self.budget_tripped)

    def to_dict(self, pattern: Graph | None = None) -> dict:
        witness = None
        if self.witness is not None:
            order = pattern.vertices if pattern is not None else list(self.witness)
            witness = [dict(pattern=v, **self.witness[v].to_dict()) for v in order]
        return {
            "outcome": self.outcome.value,
            "reason": self.reason,
            "witness": witness,
            "searched_radius": self.searched_radius,
        }


def _yes(b: Ball, found: Mapping[str, str], reason: str = FOUND) -> Verdict:
    witness = {p: b.vertex(h) for p, h in found.items()}
    return Verdict(Outcome.YES, reason, witness, radius=b.radius)


def _rehome(w: Word, graph: Graph) -> Word:
    names = w.graph.vertices
    return Word(graph, [letter(graph, names[c >> 1], -1 if c & 1 else 1) for c in w.letters])


def _join_factors(g: Graph) -> list[Graph]:
    co = complement(g)
    comps = _components_of_mask(co.adj, (1 << len(g)) - 1)
    return [induced_subgraph(g, g.names_of(c)) for c in comps]


def _ege_join_split(delta: Graph, gamma: Graph, cap, budget) -> Verdict:
    """A disconnected pattern lands inside one join factor of the target."""
    verdicts = []
    for factor in _join_factors(gamma):
        v = decide_ege(delta, factor, cap, budget, join_split=True)
        if v.outcome is Outcome.YES:
            witness = {
                p: ExtVertex(x.base, _rehome(x.element, gamma), _rehome(x.conjugator, gamma))
                for p, x in v.witness.items()
            }
            return Verdict(Outcome.YES, JOIN_SPLIT, witness, radius=v.radius)
        verdicts.append(v)
    if all(v.outcome is Outcome.NO for v in verdicts):
        return Verdict(Outcome.NO, JOIN_SPLIT)
    return Verdict(
        Outcome.INCONCLUSIVE,
        JOIN_SPLIT,
        searched_radius=min(v.searched_radius for v in verdicts if v.searched_radius is not None),
        budget_tripped=any(v.budget_tripped for v in verdicts),
    )


def decide_ege(
    delta: Graph,
    gamma: Graph,
    cap: int | None = None,
    budget: Budget | None = None,
    join_split: bool = False,
) -> Verdict:
    """Is ``delta`` an induced subgraph of the extension graph of ``gamma``?

    Radii ``0, 1, ...`` are searched up to ``cap`` (default: the theoretical
    bound). ``No`` is only returned once the bound is exhausted or the ball
    stopped growing, so a cap below the bound yields ``Inconclusive``.
    """
    if not len(delta) or not len(gamma):
        raise ValueError("both graphs must be non-empty")
    bound = theoretical_radius(delta, gamma)
    limit = bound if cap is None else min(cap, bound)
    if limit < 0:
        raise ValueError("cap must be non-negative")
    n = len(delta)
    if (
        join_split
        and len(_join_factors(gamma)) >= 2
        and not is_connected_mask(delta.adj, (1 << n) - 1)
    ):
        return _ege_join_split(delta, gamma, cap, budget)

    b = ball(gamma, 0, budget or Budget())
    while True:
        found = find_induced_embedding(delta, b.graph)
        if found is not None:
            return _yes(b, found)
        if b.complete:
            return Verdict(Outcome.NO, FINITE)
        if b.radius >= limit:
            break
        try:
            b = grow(b)
        except BudgetExceeded as exc:
            return Verdict(Outcome.INCONCLUSIVE, BUDGET, searched_radius=exc.radius, budget_tripped=True)
    if limit == bound:
        return Verdict(Outcome.NO, EXHAUSTED)
    return Verdict(Outcome.INCONCLUSIVE, CAPPED, searched_radius=limit)


def validate_witness(delta: Graph, gamma: Graph, witness: Mapping[str, ExtVertex]) -> bool:
    """Independent check of an extension graph embedding via the word problem."""
    if set(witness) != set(delta.vertices):
        return False
    images = [witness[v] for v in delta.vertices]
    if len({x.element.letters for x in images}) != len(images):
        return False
    for x in images:
        conj = x.conjugator
        base = Word.generator(gamma, x.base)
        if normal_form(conj * base * conj.inverse()) != normal_form(x.element):
            return False
    for (i, u), (j, v) in itertools.combinations(enumerate(delta.vertices), 2):
        if commutes(images[i].element, images[j].element) != delta.has_edge(u, v):
            return False
    return True


def _clique_witness(delta: Graph, gamma: Graph) -> Verdict:
    found = find_induced_embedding(delta, gamma)
    b = ball(gamma, 0)
    names = {v: f"v{i}" for i, v in enumerate(gamma.vertices)}
    return _yes(b, {p: names[h] for p, h in found.items()}, CLIQUE_SOURCE)


def decide_embedding(
    delta: Graph,
    gamma: Graph,
    cap: int | None = None,
    budget: Budget | None = None,
    path_convention: str = "edges",
    join_split: bool = False,
) -> Verdict:
    """Does G(delta) embed in G(gamma)? Decided where the graph classes allow it.

    Free abelian sources and targets are settled by clique sizes. For a
    triangle-free or triangle-built target, and for a forest or
    complement-of-forest source, embeddings exist exactly when extension
    graph embeddings do, so the answer is the ball search.
    """
    if not len(delta) or not len(gamma):
        raise ValueError("both graphs must be non-empty")
    if is_clique(delta):
        if max_clique_size(gamma) >= len(delta):
            return _clique_witness(delta, gamma)
        return Verdict(Outcome.NO, CLIQUE_SOURCE)
    if is_clique(gamma):
        return Verdict(Outcome.NO, CLIQUE_TARGET)
    tgt = classify(gamma, path_convention)
    src = classify(delta, path_convention)
    covered = [
        tag
        for tag, holds in (
            (FOREST_SOURCE, src.forest),
            (COFOREST_SOURCE, src.complement_of_forest),
            (TRIANGLE_FREE_TARGET, tgt.triangle_free),
            (TRIANGLE_BUILT_TARGET, tgt.triangle_built),
        )
        if holds
    ]
    if not covered:
        return Verdict(Outcome.INCONCLUSIVE, NOT_COVERED)
    reason = "+".join(covered)
    v = decide_ege(delta, gamma, cap, budget, join_split)
    return v.with_reason(f"{reason}: {v.reason}")


# maps between pc groups ----------------------------------------------------------

@dataclass(frozen=True)
class GeneratorMap:
    source: Graph
    target: Graph
    images: Mapping[str, Word]

    def __post_init__(self):
        missing = set(self.source.vertices) - set(self.images)
        if missing:
            raise ValueError(f"no image for {sorted(missing)}")
        for name, w in self.images.items():
            if name not in self.source.index:
                raise WordSyntaxError(f"{name!r} is not a source generator")
            if w.graph != self.target:
                raise WordSyntaxError(f"image of {name!r} is not a word over the target")

    @classmethod
    def from_strings(cls, source: Graph, target: Graph, images: Mapping[str, str]) -> "GeneratorMap":
        return cls(source, target, {k: Word.parse(target, v) for k, v in images.items()})


def check_homomorphism(m: GeneratorMap) -> bool:
    """Every commuting pair of source generators must map to commuting images."""
    return all(commutes(m.images[u], m.images[v]) for u, v in m.source.edges())


def apply_map(m: GeneratorMap, w: Word) -> Word:
    if w.graph != m.source:
        raise WordSyntaxError("word is not over the map's source graph")
    names = m.source.vertices
    images = [m.images[v].letters for v in names]
    out: list[int] = []
    for c in w.letters:
        img = images[c >> 1]
        if c & 1:
            out.extend(x ^ 1 for x in reversed(img))
        else:
            out.extend(img)
    return Word(m.target, nf_letters(m.target.adj, out))


def compose_maps(first: GeneratorMap, second: GeneratorMap) -> GeneratorMap:
    """``second`` after ``first``."""
    if first.target != second.source:
        raise ValueError("maps do not compose")
    return GeneratorMap(first.source, second.target, {v: apply_map(second, w) for v, w in first.images.items()})


def is_injective_on(m: GeneratorMap, words: Iterable[Word]) -> bool:
    return all(is_trivial(w) == is_trivial(apply_map(m, w)) for w in words)


def _check_distinct(g: Graph, vs: Sequence[str]) -> None:
    if len(vs) < 2:
        raise ValueError("an iterated commutator needs at least two vertices")
    if len(set(vs)) != len(vs):
        raise ValueError("vertices must be pairwise distinct")
    for v in vs:
        if v not in g.index:
            raise WordSyntaxError(f"unknown vertex {v!r}")


def iterated_commutator(g: Graph, vs: Sequence[str]) -> Word:
    """Left-normed ``[x1, ..., xk] = [x1, ..., x(k-1)]^-1 xk^-1 [x1, ..., x(k-1)] xk``, unreduced."""
    _check_distinct(g, vs)
    c = Word.generator(g, vs[0])
    for v in vs[1:]:
        x = Word.generator(g, v)
        c = c.inverse() * x.inverse() * c * x
    return c


def commutator_nontrivial_criterion(g: Graph, vs: Sequence[str]) -> bool:
    """Every prefix set of ``vs`` (from length two on) spans a connected subgraph of the complement."""
    _check_distinct(g, vs)
    co = complement(g).adj
    mask = 1 << g.index[vs[0]]
    for v in vs[1:]:
        mask |= 1 << g.index[v]
        if not is_connected_mask(co, mask):
            return False
    return True


def coloured_block_graph(gamma: Graph, words: Sequence[Word]) -> ColouredGraph:
    """Commutation graph on the block elements of a tuple, coloured by tuple position.

    Vertex ``i.j`` is the j-th block of the i-th entry, as the element
    ``conjugator root^e conjugator^-1``. Equal blocks coming from different
    entries stay distinct vertices and are joined, as inflation copies would be.
    """
    blocks: list[Word] = []
    names: list[str] = []
    colour: dict[str, int] = {}
    for i, w in enumerate(words, 1):
        if w.graph != gamma:
            raise WordSyntaxError(f"tuple entry {i} is not a word over the graph")
        dec = block_decomposition(w)
        if not dec.blocks:
            raise ValueError(f"tuple entry {i} is trivial and has no blocks")
        p = dec.conjugator
        for j, (root, e) in enumerate(dec.blocks, 1):
            blocks.append(normal_form(p * root ** e * p.inverse()))
            name = f"{i}.{j}"
            names.append(name)
            colour[name] = i
    edges = [
        (names[a], names[b])
        for a, b in itertools.combinations(range(len(blocks)), 2)
        if blocks[a] == blocks[b] or commutes(blocks[a], blocks[b])
    ]
    return ColouredGraph(Graph(names, edges), colour)
