"""Brute-force oracles used by the tests.

Words are plain tuples of letter codes (2*i for generator i, 2*i+1 for its
inverse) and the only graph input is the adjacency test. The triviality,
length, ball and root oracles never touch the package's word-problem code.
The conjugacy orbit oracle uses ``nf_letters`` only as a canonical key for
orbit members; normal forms are themselves checked against the rewriting
oracle.
"""
from __future__ import annotations

import itertools
import random
from collections import deque

from pcgroup.graphs import Graph
from pcgroup.words import nf_letters


def _commute(adj, x, y):
    gx, gy = x >> 1, y >> 1
    return gx != gy and bool(adj[gx] >> gy & 1)


def swap_class(adj, word):
    """All words reachable by swapping adjacent commuting letters."""
    word = tuple(word)
    seen = {word}
    queue = deque([word])
    while queue:
        w = queue.popleft()
        for i in range(len(w) - 1):
            if _commute(adj, w[i], w[i + 1]):
                v = w[:i] + (w[i + 1], w[i]) + w[i + 2:]
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
    return seen


class TrivialityOracle:
    """Rewriting oracle: a word is trivial iff swaps and adjacent inverse-pair
    cancellations reach the empty word. Results are memoised per swap class."""

    def __init__(self, adj):
        self.adj = adj
        self.memo = {(): True}

    def __call__(self, word) -> bool:
        word = tuple(word)
        if word in self.memo:
            return self.memo[word]
        if len(word) % 2:
            self.memo[word] = False
            return False
        cls = swap_class(self.adj, word)
        result = False
        for w in cls:
            for i in range(len(w) - 1):
                if w[i] ^ 1 == w[i + 1] and self(w[:i] + w[i + 2:]):
                    result = True
                    break
            if result:
                break
        for w in cls:
            self.memo[w] = result
        return result


def oracle_length(adj, word) -> int:
    """Geodesic length via BFS over swaps and cancellations (exhaustive)."""
    best = len(word)
    seen = {tuple(word)}
    queue = deque([tuple(word)])
    while queue:
        w = queue.popleft()
        best = min(best, len(w))
        for i in range(len(w) - 1):
            if w[i] ^ 1 == w[i + 1]:
                v = w[:i] + w[i + 2:]
            elif _commute(adj, w[i], w[i + 1]):
                v = w[:i] + (w[i + 1], w[i]) + w[i + 2:]
            else:
                continue
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return best


def inverse(word):
    return tuple(c ^ 1 for c in reversed(word))


def oracle_equal(oracle: TrivialityOracle, u, v) -> bool:
    return oracle(tuple(u) + inverse(v))


def oracle_commute(oracle: TrivialityOracle, u, v) -> bool:
    return oracle(inverse(u) + inverse(v) + tuple(u) + tuple(v))


def _min_length_conjugates(adj, word):
    """Conjugates reachable by single-letter conjugations that never increase
    geodesic length, restricted to the minimal length reached."""
    letters = range(2 * len(adj))
    start = nf_letters(adj, word)
    seen = {start}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for x in letters:
            v = nf_letters(adj, (x ^ 1,) + w + (x,))
            if len(v) <= len(w) and v not in seen:
                seen.add(v)
                queue.append(v)
    m = min(len(w) for w in seen)
    return m, {w for w in seen if len(w) == m}


def oracle_conjugate(adj, u, v) -> bool:
    """Orbit oracle: descend both words by length-non-increasing conjugations
    and compare the minimal-length orbits."""
    mu, su = _min_length_conjugates(adj, u)
    mv, sv = _min_length_conjugates(adj, v)
    return mu == mv and bool(su & sv)


# graph enumeration -----------------------------------------------------------

def all_graphs(n: int):
    """Every labeled graph on vertices "0".."n-1"."""
    vs = [str(i) for i in range(n)]
    pairs = list(itertools.combinations(vs, 2))
    for mask in range(1 << len(pairs)):
        yield Graph(vs, [p for k, p in enumerate(pairs) if mask >> k & 1])


def graphs_up_to_iso(n: int):
    vs = list(range(n))
    pairs = list(itertools.combinations(vs, 2))
    seen = set()
    out = []
    for mask in range(1 << len(pairs)):
        edges = [p for k, p in enumerate(pairs) if mask >> k & 1]
        key = min(
            tuple(sorted(tuple(sorted((perm[a], perm[b]))) for a, b in edges))
            for perm in itertools.permutations(vs)
        )
        if key not in seen:
            seen.add(key)
            out.append(Graph([str(i) for i in vs], [(str(a), str(b)) for a, b in edges]))
    return out


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    vs = [chr(ord("a") + i) for i in range(n)]
    return Graph(vs, [e for e in itertools.combinations(vs, 2) if rng.random() < p])


def random_letters(rng: random.Random, n_gens: int, length: int):
    return tuple(rng.randrange(2 * n_gens) for _ in range(length))


def brute_force_ball(g: Graph, radius: int):
    """Distinct conjugates v y v^-1 over every word v of length <= radius, as
    oracle-reduced representatives, with their pairwise commutation."""
    oracle = TrivialityOracle(g.adj)
    letters = range(2 * len(g))
    reps = []
    for r in range(radius + 1):
        for v in itertools.product(letters, repeat=r):
            for i in range(len(g)):
                el = v + (2 * i,) + inverse(v)
                if not any(oracle_equal(oracle, el, other) for other in reps):
                    reps.append(el)
    edges = {
        (a, b)
        for a, b in itertools.combinations(range(len(reps)), 2)
        if oracle_commute(oracle, reps[a], reps[b])
    }
    return reps, edges, oracle


def brute_force_root(adj, word):
    """(root, k) with k maximal among words r of length |geodesic|/k with r^k = word.
    Searches all letter sequences, so only for short words."""
    oracle = TrivialityOracle(adj)
    n = oracle_length(adj, word)
    n_letters = 2 * len(adj)
    for k in range(n, 1, -1):
        if n % k:
            continue
        for r in itertools.product(range(n_letters), repeat=n // k):
            if oracle_equal(oracle, r * k, word):
                return r, k
    return None, 1
