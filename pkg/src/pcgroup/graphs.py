"""Finite simplicial graphs and the graph-level constructions used by the deciders.

Graphs are immutable. Vertex order is fixed at construction (input order) and
every iteration, canonical name and witness search respects it. Adjacency is
stored as one integer bitmask per vertex, indexed by position.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

__all__ = [
    "Graph",
    "ColouredGraph",
    "GraphFormatError",
    "ClassReport",
    "induced_subgraph",
    "complement",
    "star",
    "connected_components",
    "deflation",
    "inflation",
    "graph_substitution",
    "classify",
    "find_induced_embedding",
    "brute_force_induced_embedding",
    "is_isomorphic",
    "complete_graph",
    "edgeless_graph",
    "path_graph",
    "cycle_graph",
    "star_graph",
    "disjoint_union",
    "max_clique_size",
]


class GraphFormatError(ValueError):
    """Raised for malformed graph input (JSON or constructor arguments)."""


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """A finite simplicial graph with a fixed vertex order.

    >>> g = Graph(["a", "b", "c"], [("a", "b"), ("b", "c")])
    >>> sorted(g.neighbors("b"))
    ['a', 'c']
    """

    __slots__ = ("vertices", "index", "adj", "_hash")

    def __init__(self, vertices: Iterable[str], edges: Iterable[Sequence[str]] = ()):
        vertices = tuple(vertices)
        index = {}
        for i, v in enumerate(vertices):
            if not isinstance(v, str):
                raise GraphFormatError(f"vertex names must be strings, got {v!r}")
            if v in index:
                raise GraphFormatError(f"duplicate vertex {v!r}")
            index[v] = i
        adj = [0] * len(vertices)
        for e in edges:
            if len(e) != 2:
                raise GraphFormatError(f"edge must have two endpoints: {e!r}")
            u, v = e
            if u not in index or v not in index:
                raise GraphFormatError(f"edge {e!r} names an unknown vertex")
            if u == v:
                raise GraphFormatError(f"self-loop at {u!r}")
            i, j = index[u], index[v]
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        self.vertices = vertices
        self.index = index
        self.adj = tuple(adj)
        self._hash = None

    @classmethod
    def _from_masks(cls, vertices: Sequence[str], adj: Sequence[int]) -> "Graph":
        g = cls.__new__(cls)
        g.vertices = tuple(vertices)
        g.index = {v: i for i, v in enumerate(g.vertices)}
        g.adj = tuple(adj)
        g._hash = None
        return g

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, v) -> bool:
        return v in self.index

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.vertices == other.vertices and self.adj == other.adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.vertices, self.adj))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph({list(self.vertices)!r}, {self.edges()!r})"

    def _idx(self, v: str) -> int:
        try:
            return self.index[v]
        except KeyError:
            raise KeyError(f"unknown vertex {v!r}") from None

    def has_edge(self, u: str, v: str) -> bool:
        return bool(self.adj[self._idx(u)] >> self._idx(v) & 1)

    def neighbors(self, v: str) -> frozenset[str]:
        return frozenset(self.vertices[j] for j in _bits(self.adj[self._idx(v)]))

    def degree(self, v: str) -> int:
        return self.adj[self._idx(v)].bit_count()

    def edges(self) -> list[tuple[str, str]]:
        """Edges as (earlier, later) pairs in vertex order."""
        out = []
        for i, u in enumerate(self.vertices):
            for j in _bits(self.adj[i] >> (i + 1) << (i + 1)):
                out.append((u, self.vertices[j]))
        return out

    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    def mask_of(self, vs: Iterable[str]) -> int:
        m = 0
        for v in vs:
            m |= 1 << self._idx(v)
        return m

    def names_of(self, mask: int) -> list[str]:
        return [self.vertices[i] for i in _bits(mask)]

    # JSON -----------------------------------------------------------------

    def to_dict(self) -> dict:
        return {"vertices": list(self.vertices), "edges": [list(e) for e in self.edges()]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: Mapping) -> "Graph":
        if not isinstance(data, Mapping) or set(data) - {"vertices", "edges"} or "vertices" not in data:
            raise GraphFormatError('graph JSON must be an object with "vertices" and "edges"')
        vertices = data["vertices"]
        edges = data.get("edges", [])
        if not isinstance(vertices, list) or not isinstance(edges, list):
            raise GraphFormatError('"vertices" and "edges" must be arrays')
        seen = set()
        for e in edges:
            if not isinstance(e, list) or len(e) != 2 or not all(isinstance(x, str) for x in e):
                raise GraphFormatError(f"edge must be a 2-element string array: {e!r}")
            key = frozenset(e)
            if key in seen:
                raise GraphFormatError(f"duplicate edge {e!r}")
            seen.add(key)
        return cls(vertices, edges)

    @classmethod
    def from_json(cls, text: str) -> "Graph":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise GraphFormatError(f"invalid JSON: {exc}") from None
        return cls.from_dict(data)


@dataclass(frozen=True)
class ColouredGraph:
    graph: Graph
    colour: Mapping[str, int]

    def __post_init__(self):
        if set(self.colour) != set(self.graph.vertices):
            raise GraphFormatError("every vertex needs exactly one colour")
        used = set(self.colour.values())
        if used and used != set(range(1, max(used) + 1)):
            raise GraphFormatError("colours must form a contiguous range starting at 1")

    def to_dict(self) -> dict:
        d = self.graph.to_dict()
        d["colours"] = [self.colour[v] for v in self.graph.vertices]
        return d


# constructors ---------------------------------------------------------------

def _names(spec, prefix=""):
    if isinstance(spec, int):
        return [f"{prefix}{i}" for i in range(1, spec + 1)]
    return list(spec)


def complete_graph(n) -> Graph:
    vs = _names(n)
    return Graph(vs, itertools.combinations(vs, 2))


def edgeless_graph(n) -> Graph:
    return Graph(_names(n))


def path_graph(n) -> Graph:
    """Path through the given vertices (or through ``1..n``) in order."""
    vs = _names(n)
    return Graph(vs, zip(vs, vs[1:]))


def cycle_graph(n) -> Graph:
    vs = _names(n)
    if len(vs) < 3:
        raise GraphFormatError("a cycle needs at least 3 vertices")
    return Graph(vs, list(zip(vs, vs[1:])) + [(vs[-1], vs[0])])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves}; the centre comes first in vertex order."""
    vs = ["0"] + _names(leaves)
    return Graph(vs, [("0", v) for v in vs[1:]])


def disjoint_union(*graphs: Graph) -> Graph:
    vs, edges = [], []
    for g in graphs:
        vs.extend(g.vertices)
        edges.extend(g.edges())
    return Graph(vs, edges)


# basic operations -----------------------------------------------------------

def induced_subgraph(g: Graph, s: Iterable[str]) -> Graph:
    """The subgraph of ``g`` spanned by ``s``, keeping ``g``'s vertex order."""
    mask = g.mask_of(s)
    keep = list(_bits(mask))
    pos = {old: new for new, old in enumerate(keep)}
    adj = []
    for old in keep:
        m = 0
        for j in _bits(g.adj[old] & mask):
            m |= 1 << pos[j]
        adj.append(m)
    return Graph._from_masks([g.vertices[i] for i in keep], adj)


def complement(g: Graph) -> Graph:
    full = (1 << len(g)) - 1
    return Graph._from_masks(g.vertices, [full & ~m & ~(1 << i) for i, m in enumerate(g.adj)])


def star(g: Graph, v: str) -> frozenset[str]:
    """Closed star: ``v`` together with its neighbours."""
    return g.neighbors(v) | {v}


def _closed_star_mask(g: Graph, i: int) -> int:
    return g.adj[i] | (1 << i)


def _components_of_mask(adj: Sequence[int], mask: int) -> list[int]:
    comps = []
    rest = mask
    while rest:
        seed = rest & -rest
        comp = seed
        frontier = seed
        while frontier:
            nxt = 0
            for i in _bits(frontier):
                nxt |= adj[i]
            nxt &= mask & ~comp
            comp |= nxt
            frontier = nxt
        comps.append(comp)
        rest &= ~comp
    return comps


def connected_components(g: Graph) -> list[frozenset[str]]:
    """Components ordered by their least vertex."""
    comps = _components_of_mask(g.adj, (1 << len(g)) - 1)
    return [frozenset(g.names_of(c)) for c in comps]


def is_connected_mask(adj: Sequence[int], mask: int) -> bool:
    return len(_components_of_mask(adj, mask)) <= 1


def deflation(g: Graph) -> Graph:
    """Quotient by equal closed stars; each class is named by its least member.

    Since the classes are represented by their least members and adjacency
    does not depend on the representative, the deflation is literally the
    subgraph induced by those representatives.
    """
    seen = set()
    reps = []
    for i in range(len(g)):
        st = _closed_star_mask(g, i)
        if st not in seen:
            seen.add(st)
            reps.append(g.vertices[i])
    return induced_subgraph(g, reps)


def deflation_classes(g: Graph) -> dict[str, list[str]]:
    """Map each deflation vertex (least member) to its class, in vertex order."""
    classes: dict[int, list[str]] = {}
    for i, v in enumerate(g.vertices):
        classes.setdefault(_closed_star_mask(g, i), []).append(v)
    return {members[0]: members for members in classes.values()}


def inflation_name(v: str, i) -> str:
    return f"{v}#{i}"


def inflation(g: Graph, n: int) -> Graph:
    """The n-inflation: every vertex becomes an n-clique of same-star copies.

    Copies are named ``v#1 .. v#n`` and listed vertex by vertex; copy ``#1``
    carries the canonical embedding of ``g``.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"inflation needs n >= 1, got {n!r}")
    return graph_substitution(g, [complete_graph(n)] * len(g))


def graph_substitution(base: Graph, parts: Sequence[Graph]) -> Graph:
    """Replace vertex i of ``base`` by ``parts[i]``, fully joining parts along base edges.

    The vertex ``p`` of the part substituted for ``v`` is named ``v#p``.
    """
    if len(parts) != len(base):
        raise ValueError(f"need {len(base)} parts, got {len(parts)}")
    offsets = []
    total = 0
    for p in parts:
        offsets.append(total)
        total += len(p)
    blocks = [((1 << len(p)) - 1) << off for p, off in zip(parts, offsets)]
    names = []
    adj = []
    for i, (v, p) in enumerate(zip(base.vertices, parts)):
        outside = 0
        for j in _bits(base.adj[i]):
            outside |= blocks[j]
        for k, pv in enumerate(p.vertices):
            names.append(inflation_name(v, pv))
            adj.append((p.adj[k] << offsets[i]) | outside)
    if len(set(names)) != len(names):
        raise GraphFormatError("substituted vertex names collide")
    return Graph._from_masks(names, adj)


# predicates -------------------------------------------------------------------

def _has_triangle(g: Graph) -> bool:
    for i in range(len(g)):
        higher = g.adj[i] >> (i + 1) << (i + 1)
        for j in _bits(higher):
            if g.adj[j] & higher:
                return True
    return False


def _girth_at_least_5(g: Graph) -> bool:
    if _has_triangle(g):
        return False
    # A (not necessarily induced) 4-cycle exists iff two vertices share two neighbours.
    for i, j in itertools.combinations(range(len(g)), 2):
        if (g.adj[i] & g.adj[j]).bit_count() >= 2:
            return False
    return True


def _is_forest(g: Graph) -> bool:
    return g.edge_count() == len(g) - len(_components_of_mask(g.adj, (1 << len(g)) - 1))


def _has_induced_path(g: Graph, edges: int) -> bool:
    return find_induced_embedding(path_graph(edges + 1), g) is not None


def is_triangle_built(g: Graph, path_convention: str = "edges") -> bool:
    """No induced square and no induced P_3.

    ``path_convention`` fixes what P_3 means: ``"edges"`` (a path with three
    edges) or ``"vertices"`` (a path on three vertices).
    """
    if path_convention == "edges":
        path_edges = 3
    elif path_convention == "vertices":
        path_edges = 2
    else:
        raise ValueError(f"unknown path convention {path_convention!r}")
    if find_induced_embedding(cycle_graph(4), g) is not None:
        return False
    return not _has_induced_path(g, path_edges)


def is_atomic(g: Graph) -> bool:
    n = len(g)
    full = (1 << n) - 1
    if n == 0 or not is_connected_mask(g.adj, full):
        return False
    if any(m.bit_count() < 2 for m in g.adj):
        return False
    if not _girth_at_least_5(g):
        return False
    for i in range(n):
        rest = full & ~_closed_star_mask(g, i)
        if rest.bit_count() > 1 and not is_connected_mask(g.adj, rest):
            return False
    return True


def max_clique_size(g: Graph) -> int:
    best = 0

    def grow(size, cand):
        nonlocal best
        if size > best:
            best = size
        if size + cand.bit_count() <= best:
            return
        for i in _bits(cand):
            cand &= ~(1 << i)
            grow(size + 1, cand & g.adj[i])

    grow(0, (1 << len(g)) - 1)
    return best


@dataclass(frozen=True)
class ClassReport:
    connected: bool
    clique: bool
    join: bool
    forest: bool
    triangle_free: bool
    triangle_built: bool
    complement_of_forest: bool
    atomic: bool
    weakly_chordal: bool

    def to_dict(self) -> dict:
        return {
            "connected": self.connected,
            "clique": self.clique,
            "join": self.join,
            "forest": self.forest,
            "triangle_free": self.triangle_free,
            "triangle_built": self.triangle_built,
            "complement_of_forest": self.complement_of_forest,
            "atomic": self.atomic,
            "weakly_chordal": self.weakly_chordal,
        }


def is_clique(g: Graph) -> bool:
    full = (1 << len(g)) - 1
    return all(m | (1 << i) == full for i, m in enumerate(g.adj))


def is_join(g: Graph) -> bool:
    co = complement(g)
    return len(_components_of_mask(co.adj, (1 << len(g)) - 1)) >= 2


def is_triangle_free(g: Graph) -> bool:
    return not _has_triangle(g)


def is_weakly_chordal(g: Graph) -> bool:
    # Literal reading of the source's parenthetical: no triangles and no
    # induced paths with more than 3 edges. This is not the textbook notion.
    return not _has_triangle(g) and not _has_induced_path(g, 4)


def classify(g: Graph, path_convention: str = "edges") -> ClassReport:
    full = (1 << len(g)) - 1
    return ClassReport(
        connected=is_connected_mask(g.adj, full),
        clique=is_clique(g),
        join=is_join(g),
        forest=_is_forest(g),
        triangle_free=is_triangle_free(g),
        triangle_built=is_triangle_built(g, path_convention),
        complement_of_forest=_is_forest(complement(g)),
        atomic=is_atomic(g),
        weakly_chordal=is_weakly_chordal(g),
    )


# induced subgraph search --------------------------------------------------------

def find_induced_embedding(pattern: Graph, host: Graph) -> dict[str, str] | None:
    """Lexicographically least induced embedding of ``pattern`` into ``host``.

    Pattern vertices are assigned in their own order and host candidates are
    tried in host order, so the first complete assignment is the least one.
    Forward checking keeps one candidate bitmask per unassigned pattern vertex.
    """
    k, n = len(pattern), len(host)
    if k > n:
        return None
    if k == 0:
        return {}
    full = (1 << n) - 1
    pdeg = [m.bit_count() for m in pattern.adj]
    hdeg = [m.bit_count() for m in host.adj]
    domains = []
    for i in range(k):
        d = 0
        for h in range(n):
            if hdeg[h] >= pdeg[i]:
                d |= 1 << h
        if not d:
            return None
        domains.append(d)
    assignment = [0] * k

    def search(i, domains):
        if i == k:
            return True
        cand = domains[i]
        pa = pattern.adj[i]
        while cand:
            low = cand & -cand
            h = low.bit_length() - 1
            cand ^= low
            nbr = host.adj[h]
            non = full & ~nbr & ~low
            new = list(domains)
            ok = True
            for j in range(i + 1, k):
                d = new[j] & (nbr if pa >> j & 1 else non)
                if not d:
                    ok = False
                    break
                new[j] = d
            if ok:
                assignment[i] = h
                if search(i + 1, new):
                    return True
        return False

    if not search(0, domains):
        return None
    return {pattern.vertices[i]: host.vertices[assignment[i]] for i in range(k)}


def _is_induced_map(pattern: Graph, host: Graph, image: Sequence[int]) -> bool:
    for i, j in itertools.combinations(range(len(pattern)), 2):
        if bool(pattern.adj[i] >> j & 1) != bool(host.adj[image[i]] >> image[j] & 1):
            return False
    return True


def brute_force_induced_embedding(pattern: Graph, host: Graph) -> dict[str, str] | None:
    """Try every injection in lexicographic order. Testing oracle only."""
    for image in itertools.permutations(range(len(host)), len(pattern)):
        if _is_induced_map(pattern, host, image):
            return {pattern.vertices[i]: host.vertices[h] for i, h in enumerate(image)}
    return None


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    if len(g1) != len(g2) or g1.edge_count() != g2.edge_count():
        return False
    if sorted(m.bit_count() for m in g1.adj) != sorted(m.bit_count() for m in g2.adj):
        return False
    return find_induced_embedding(g1, g2) is not None
