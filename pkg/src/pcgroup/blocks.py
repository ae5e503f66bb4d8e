"""Block decompositions, least roots, centralisers and conjugacy.

A cyclically reduced element splits into blocks: the letters whose
generators fall into one connected component of the non-commutation graph
restricted to the support. Blocks pairwise commute, so the block words are
just the corresponding subsequences of the geodesic.
"""
from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import Sequence

from .graphs import _bits, _components_of_mask, complement
from .words import (
    Word,
    _disjoint_commuting_mask,
    _same_ambient,
    canonical_order,
    cyclic_reduce_letters,
    nf_letters,
    reduce_letters,
)

__all__ = [
    "BlockDecomposition",
    "CentralizerBasis",
    "block_decomposition",
    "least_root",
    "centralizer_basis",
    "is_conjugate",
    "is_generator_power_conjugate",
]


@dataclass(frozen=True)
class BlockDecomposition:
    conjugator: Word
    blocks: tuple[tuple[Word, int], ...]

    def to_dict(self) -> dict:
        return {
            "conjugator": str(self.conjugator),
            "blocks": [{"root": str(r), "exponent": e} for r, e in self.blocks],
        }


@dataclass(frozen=True)
class CentralizerBasis:
    cyclic_parts: tuple[Word, ...]
    abelian_part: tuple[Word, ...]

    def to_dict(self) -> dict:
        return {
            "cyclic_parts": [str(w) for w in self.cyclic_parts],
            "abelian_part": [str(w) for w in self.abelian_part],
        }


def _noncommutation_adj(adj: Sequence[int]) -> list[int]:
    full = (1 << len(adj)) - 1
    return [full & ~m & ~(1 << i) for i, m in enumerate(adj)]


def _split_blocks(adj, core: Sequence[int]) -> list[tuple[int, ...]]:
    """Block words of a cyclically reduced geodesic, ordered by least generator."""
    support = 0
    for c in core:
        support |= 1 << (c >> 1)
    co = _noncommutation_adj(adj)
    blocks = []
    for comp in _components_of_mask(co, support):
        blocks.append(canonical_order(adj, [c for c in core if comp >> (c >> 1) & 1]))
    return blocks


def _power(letters: Sequence[int], k: int) -> list[int]:
    return list(letters) * k


def _block_root(adj, block: Sequence[int]) -> tuple[tuple[int, ...], int]:
    """Least root of a single cyclically reduced block given as a geodesic.

    If ``block = r^k`` then, since geodesic length is multiplicative here,
    the first ``count(x)/k`` occurrences of every letter ``x`` are exactly the
    occurrences of the first copy of ``r``. So for each candidate exponent
    the candidate root is read off occurrence counts and then verified.
    """
    counts = Counter(block)
    g = reduce(gcd, counts.values())
    for k in sorted((d for d in range(1, g + 1) if g % d == 0), reverse=True):
        if k == 1:
            break
        quota = {x: n // k for x, n in counts.items()}
        seen: Counter = Counter()
        cand = []
        for c in block:
            if seen[c] < quota[c]:
                seen[c] += 1
                cand.append(c)
        root = nf_letters(adj, cand)
        if nf_letters(adj, _power(root, k)) == tuple(block):
            return root, k
    return tuple(block), 1


def _decompose(adj, letters):
    conj, core = cyclic_reduce_letters(adj, letters)
    blocks = [_block_root(adj, b) for b in _split_blocks(adj, core)]
    return conj, core, blocks


def block_decomposition(w: Word) -> BlockDecomposition:
    adj = w.graph.adj
    conj, _core, blocks = _decompose(adj, w.letters)
    return BlockDecomposition(
        Word(w.graph, conj),
        tuple((Word(w.graph, r), e) for r, e in blocks),
    )


def _conjugate(adj, p: Sequence[int], x: Sequence[int]) -> tuple[int, ...]:
    """Normal form of ``p x p^-1``."""
    return nf_letters(adj, [*p, *x, *(c ^ 1 for c in reversed(p))])


def least_root(w: Word) -> tuple[Word, int]:
    adj = w.graph.adj
    conj, core, blocks = _decompose(adj, w.letters)
    if not core:
        raise ValueError("the trivial element has no least root")
    m = reduce(gcd, (e for _, e in blocks))
    root_core = []
    for r, e in blocks:
        root_core.extend(_power(r, e // m))
    return Word(w.graph, _conjugate(adj, conj, root_core)), m


def centralizer_basis(w: Word) -> CentralizerBasis:
    """Generators of the centraliser: conjugated block roots and the conjugated disjoint commuting generators."""
    adj = w.graph.adj
    conj, core, blocks = _decompose(adj, w.letters)
    if not core:
        raise ValueError("the centraliser of the identity is the whole group")
    support = 0
    for c in core:
        support |= 1 << (c >> 1)
    cyclic = []
    for r, _ in blocks:
        cw = Word(w.graph, _conjugate(adj, conj, r))
        if cw not in cyclic:
            cyclic.append(cw)
    abelian = []
    for i in _bits(_disjoint_commuting_mask(adj, support)):
        aw = Word(w.graph, _conjugate(adj, conj, [2 * i]))
        if aw not in abelian:
            abelian.append(aw)
    return CentralizerBasis(tuple(cyclic), tuple(abelian))


def _cyclic_class_key(adj, root: tuple[int, ...]) -> tuple[int, ...]:
    """Least normal form over the orbit of length-preserving single-letter conjugations."""
    n = len(root)
    letters = sorted({c for c in root} | {c ^ 1 for c in root})
    seen = {root}
    queue = deque([root])
    while queue:
        cur = queue.popleft()
        for x in letters:
            nxt = nf_letters(adj, [x ^ 1, *cur, x])
            if len(nxt) == n and nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return min(seen)


def _conjugacy_invariant(adj, letters) -> list[tuple[int, tuple[int, ...]]]:
    _conj, _core, blocks = _decompose(adj, letters)
    return sorted((e, _cyclic_class_key(adj, r)) for r, e in blocks)


def is_conjugate(w1: Word, w2: Word) -> bool:
    _same_ambient(w1, w2)
    adj = w1.graph.adj
    return _conjugacy_invariant(adj, w1.letters) == _conjugacy_invariant(adj, w2.letters)


def is_generator_power_conjugate(b: Word) -> tuple[str, int] | None:
    """``(y, k)`` when ``b`` is conjugate to ``y^k`` for a generator ``y``; otherwise ``None``."""
    adj = b.graph.adj
    _conj, core, blocks = _decompose(adj, b.letters)
    if not core:
        raise ValueError("the trivial element is not a generator power")
    if len(blocks) != 1:
        return None
    root, e = blocks[0]
    if len(root) != 1:
        return None
    code = root[0]
    return b.graph.vertices[code >> 1], -e if code & 1 else e
