"""Universal equivalence of pc groups for the classes where it is decidable.

Two pc groups G(d) and G(g) are universally equivalent exactly when each
embeds tamely into the other's inflation (by the generator count of the
other side). Where the target class makes tame embeddings coincide with
extension graph embeddings, that is two ball searches.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Mapping

from .embedding import Outcome, Verdict, GeneratorMap, decide_ege
from .extension import Budget
from .graphs import (
    Graph,
    _closed_star_mask,
    _has_triangle,
    deflation,
    inflation,
    inflation_name,
    is_atomic,
    is_isomorphic,
    is_triangle_built,
)
from .words import Word

__all__ = [
    "Equivalence",
    "EqVerdict",
    "deflation_triangle_sentence_holds",
    "decide_universal_equivalence",
    "discriminating_retraction",
]

ATOMIC = "atomic-rigidity"
SENTENCE = "deflation-triangle-sentence-separates"
TRIANGLE_FREE_DEFLATION = "triangle-free-deflation"
TRIANGLE_BUILT = "triangle-built"
NO_CLASS = "no covered class"


class Equivalence(str, Enum):
    EQUIVALENT = "equivalent"
    NOT_EQUIVALENT = "not_equivalent"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class EqVerdict:
    outcome: Equivalence
    reason: str
    detail: tuple[Verdict, Verdict] | None = None
    # the graphs each detail verdict's witness is over, for serialisation
    patterns: tuple[Graph, Graph] | None = None

    @property
    def budget_tripped(self) -> bool:
        return bool(self.detail) and any(v.budget_tripped for v in self.detail)

    def to_dict(self) -> dict:
        detail = None
        if self.detail is not None:
            detail = []
            for direction, v, pat in zip(
                ("delta_into_gamma_inflation", "gamma_into_delta_inflation"), self.detail, self.patterns
            ):
                d = v.to_dict(pat)
                d["direction"] = direction
                detail.append(d)
        return {"outcome": self.outcome.value, "reason": self.reason, "detail": detail}


def deflation_triangle_sentence_holds(g: Graph) -> bool:
    """No three pairwise adjacent vertices with pairwise distinct closed stars."""
    n = len(g)
    stars = [_closed_star_mask(g, i) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if not g.adj[i] >> j & 1 or stars[i] == stars[j]:
                continue
            common = g.adj[i] & g.adj[j] & ~((1 << (j + 1)) - 1)
            while common:
                low = common & -common
                k = low.bit_length() - 1
                common ^= low
                if stars[k] != stars[i] and stars[k] != stars[j]:
                    return False
    return True


def _triangle_free_deflation(g: Graph) -> bool:
    return not _has_triangle(deflation(g))


def _mutual_searches(d: Graph, g: Graph, cap, budget, reason: str) -> EqVerdict:
    forward = decide_ege(d, inflation(g, len(d)), cap, budget)
    backward = decide_ege(g, inflation(d, len(g)), cap, budget)
    detail = (forward, backward)
    outcomes = {forward.outcome, backward.outcome}
    if outcomes == {Outcome.YES}:
        result = Equivalence.EQUIVALENT
    elif Outcome.NO in outcomes:
        result = Equivalence.NOT_EQUIVALENT
    else:
        result = Equivalence.INCONCLUSIVE
    return EqVerdict(result, reason, detail, (d, g))


def decide_universal_equivalence(
    d: Graph,
    g: Graph,
    cap: int | None = None,
    budget: Budget | None = None,
    path_convention: str = "edges",
) -> EqVerdict:
    """Decide whether G(d) and G(g) have the same universal theory.

    Atomic pairs are equivalent iff isomorphic. If either deflation is
    triangle-free, the universal sentence it encodes either separates the
    groups or both mutual ball searches decide. A triangle-built side also
    reduces to the two ball searches.
    """
    if not len(d) or not len(g):
        raise ValueError("both graphs must be non-empty")
    budget = budget or Budget()
    if is_atomic(d) and is_atomic(g):
        ok = is_isomorphic(d, g)
        return EqVerdict(Equivalence.EQUIVALENT if ok else Equivalence.NOT_EQUIVALENT, ATOMIC)
    d_tf, g_tf = _triangle_free_deflation(d), _triangle_free_deflation(g)
    if d_tf != g_tf:
        return EqVerdict(Equivalence.NOT_EQUIVALENT, SENTENCE)
    if d_tf:
        return _mutual_searches(d, g, cap, budget, TRIANGLE_FREE_DEFLATION)
    if is_triangle_built(g, path_convention) or is_triangle_built(d, path_convention):
        return _mutual_searches(d, g, cap, budget, TRIANGLE_BUILT)
    return EqVerdict(Equivalence.INCONCLUSIVE, NO_CLASS)


def discriminating_retraction(d: Graph, m: int, exponents: Mapping[tuple[str, int], int]) -> GeneratorMap:
    """Map ``inflation(d, m)`` onto ``d`` sending copy ``v#j`` to ``v^s`` with ``s = exponents[v, j]``.

    Copies of one vertex share a star, so the images commute wherever the
    copies do and the map is a homomorphism.
    """
    if m < 1:
        raise ValueError("m must be positive")
    source = inflation(d, m)
    images = {}
    for v in d.vertices:
        for j in range(1, m + 1):
            try:
                s = exponents[v, j]
            except KeyError:
                raise ValueError(f"no exponent for copy {j} of {v!r}") from None
            if s == 0:
                raise ValueError(f"exponent for copy {j} of {v!r} is zero")
            images[inflation_name(v, j)] = Word.generator(d, v, s)
    return GeneratorMap(source, d, images)
