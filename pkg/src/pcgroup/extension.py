"""Finite balls of the extension graph.

A vertex of the extension graph is a conjugate ``v y v^-1`` of a generator
``y``; it is identified by the normal form of that element. The ball of
radius ``r`` holds every conjugate with ``|v| <= r`` and joins two vertices
when they commute.

Balls grow breadth first: the level ``r+1`` candidates are the level ``r``
elements conjugated by one more signed letter, so only minimal conjugators
are ever extended.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field

from .graphs import Graph, _components_of_mask
from .words import Word, commutes_letters, cyclic_reduce_letters, letter, nf_letters

__all__ = [
    "ExtVertex",
    "Ball",
    "Budget",
    "BudgetExceeded",
    "canonical_vertex",
    "ball",
    "grow",
    "theoretical_radius",
]

DEFAULT_MAX_VERTICES = 100_000
DEFAULT_MAX_CONJUGATES = 5_000_000


class BudgetExceeded(RuntimeError):
    """Ball construction hit a resource cap. ``radius`` is the last complete radius."""

    def __init__(self, message: str, radius: int):
        super().__init__(message)
        self.radius = radius


@dataclass(frozen=True)
class Budget:
    max_vertices: int = DEFAULT_MAX_VERTICES
    max_conjugates: int = DEFAULT_MAX_CONJUGATES

    @classmethod
    def from_env(cls) -> "Budget":
        return cls(
            int(os.environ.get("PCGROUP_BUDGET_VERTICES", DEFAULT_MAX_VERTICES)),
            int(os.environ.get("PCGROUP_BUDGET_CONJUGATES", DEFAULT_MAX_CONJUGATES)),
        )


@dataclass(frozen=True)
class ExtVertex:
    base: str
    element: Word
    conjugator: Word

    def __eq__(self, other):
        if not isinstance(other, ExtVertex):
            return NotImplemented
        return self.element == other.element

    def __hash__(self):
        return hash(self.element.letters)

    def to_dict(self) -> dict:
        return {"base": self.base, "conjugator": str(self.conjugator), "element": str(self.element)}


def _conjugate(p, x):
    return [*p, *x, *(c ^ 1 for c in reversed(p))]


def _vertex_from_element(graph: Graph, element: tuple[int, ...]) -> ExtVertex:
    conj, core = cyclic_reduce_letters(graph.adj, element)
    if len(core) != 1 or core[0] & 1:
        raise ValueError(f"{Word(graph, element)} is not a conjugate of a generator")
    return ExtVertex(graph.vertices[core[0] >> 1], Word(graph, element), Word(graph, conj))


def canonical_vertex(g: Graph, base: str, v: Word) -> ExtVertex:
    """The vertex ``v base v^-1`` with its minimal conjugator.

    Stripping right divisors of ``v`` that commute with ``base`` is exactly
    what cyclic reduction of the conjugate undoes, so the conjugator is read
    back from the element.
    """
    code = letter(g, base)
    element = nf_letters(g.adj, _conjugate(v.letters, [code]))
    return _vertex_from_element(g, element)


@dataclass
class _Table:
    elements: list = field(default_factory=list)
    conjugators: list = field(default_factory=list)
    bases: list = field(default_factory=list)
    index: dict = field(default_factory=dict)
    adj: list = field(default_factory=list)
    level_start: list = field(default_factory=list)
    enumerated: int = 0


class Ball:
    """The induced subgraph of the extension graph on conjugators of length at most ``radius``.

    ``graph`` uses the vertex identifiers ``v0, v1, ...`` in table order; the
    ``vertices`` list carries the provenance of each identifier.
    """

    def __init__(self, source: Graph, radius: int, table: _Table, budget: Budget, complete: bool):
        self.source = source
        self.radius = radius
        self.budget = budget
        self.complete = complete
        self._table = table
        n = len(table.elements)
        self.vertices = [
            ExtVertex(source.vertices[table.bases[i] >> 1], Word(source, table.elements[i]), Word(source, table.conjugators[i]))
            for i in range(n)
        ]
        self.graph = Graph._from_masks([f"v{i}" for i in range(n)], table.adj)

    def __len__(self):
        return len(self.vertices)

    def vertex(self, ident: str) -> ExtVertex:
        return self.vertices[self.graph.index[ident]]

    def to_dict(self) -> dict:
        d = self.graph.to_dict()
        d["provenance"] = [dict(vertex=name, **v.to_dict()) for name, v in zip(self.graph.vertices, self.vertices)]
        return d


def _initial(source: Graph) -> _Table:
    t = _Table()
    t.level_start.append(0)
    for i in range(len(source)):
        el = (2 * i,)
        t.index[el] = i
        t.elements.append(el)
        t.conjugators.append(())
        t.bases.append(2 * i)
        t.adj.append(source.adj[i])
    t.enumerated = len(source)
    return t


def _extend(source: Graph, t: _Table, radius: int, budget: Budget) -> bool:
    """Add level ``radius + 1`` in place. Returns False when no vertex was added."""
    adj = source.adj
    lo = t.level_start[-1]
    hi = len(t.elements)
    found: dict[tuple[int, ...], tuple] = {}
    letters = range(2 * len(source))
    for i in range(lo, hi):
        el = t.elements[i]
        for x in letters:
            t.enumerated += 1
            if t.enumerated > budget.max_conjugates:
                raise BudgetExceeded(
                    f"enumerated more than {budget.max_conjugates} conjugates while building radius {radius + 1}",
                    radius,
                )
            new = nf_letters(adj, [x, *el, x ^ 1])
            if new in t.index or new in found:
                continue
            conj, core = cyclic_reduce_letters(adj, new)
            found[new] = (core[0], conj)
    if not found:
        return False
    if hi + len(found) > budget.max_vertices:
        raise BudgetExceeded(
            f"radius {radius + 1} would hold {hi + len(found)} vertices (cap {budget.max_vertices})", radius
        )
    order = sorted(found, key=lambda e: (found[e][0], found[e][1]))
    t.level_start.append(hi)
    for el in order:
        base, conj = found[el]
        k = len(t.elements)
        t.index[el] = k
        t.elements.append(el)
        t.conjugators.append(conj)
        t.bases.append(base)
        t.adj.append(0)
    # new vertices against everything; old pairs are unchanged
    for k in range(hi, len(t.elements)):
        ek = t.elements[k]
        mask = 0
        for j in range(k):
            if commutes_letters(adj, ek, t.elements[j]):
                mask |= 1 << j
                t.adj[j] |= 1 << k
        t.adj[k] = mask
    return True


def _copy_table(t: _Table) -> _Table:
    return _Table(
        list(t.elements), list(t.conjugators), list(t.bases), dict(t.index),
        list(t.adj), list(t.level_start), t.enumerated,
    )


def ball(g: Graph, radius: int, budget: Budget | None = None) -> Ball:
    if radius < 0:
        raise ValueError("radius must be non-negative")
    b = Ball(g, 0, _initial(g), budget or Budget(), complete=False)
    for _ in range(radius):
        b = grow(b)
    return b


def grow(b: Ball) -> Ball:
    """The ball of radius ``b.radius + 1``; existing identifiers keep their meaning."""
    if b.complete:
        return Ball(b.source, b.radius + 1, b._table, b.budget, complete=True)
    t = _copy_table(b._table)
    added = _extend(b.source, t, b.radius, b.budget)
    # with nothing new at this level, nothing is new at any later level either
    return Ball(b.source, b.radius + 1, t, b.budget, complete=not added)


def theoretical_radius(delta: Graph, gamma: Graph) -> int:
    """Conjugator length bound for extension graph embeddings of ``delta`` into ``gamma``.

    ``n^2 M`` when ``delta`` is connected, else ``4 K n^2 M^(K+1)`` with ``K``
    the number of components, ``n = |V(delta)|`` and ``M = |V(gamma)|``.
    """
    if not len(delta) or not len(gamma):
        raise ValueError("both graphs must be non-empty")
    n, m = len(delta), len(gamma)
    k = len(_components_of_mask(delta.adj, (1 << n) - 1))
    if k == 1:
        return n * n * m
    return 4 * k * n * n * m ** (k + 1)
