"""Simple graphs on dense vertex labels, orientations, and graph6 I/O.

A :class:`Graph` stores one adjacency bitmask per vertex.  Vertices are the
integers ``0..n-1``.  Everything here is immutable, so graphs and
orientations can be shared freely between worker processes.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import DomainError, Graph6Error


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or len(self.adj) != self.n:
            raise DomainError("adjacency rows must match the vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise DomainError(f"vertex {v} is adjacent to a vertex outside 0..{self.n - 1}")
            if row >> v & 1:
                raise DomainError(f"loop at vertex {v}")
            for w in _bits(row):
                if not self.adj[w] >> v & 1:
                    raise DomainError(f"adjacency not symmetric at {v}-{w}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for a, b in edges:
            if not (0 <= a < n and 0 <= b < n):
                raise DomainError(f"edge {a}-{b} out of range for n={n}")
            if a == b:
                raise DomainError(f"loop at vertex {a}")
            rows[a] |= 1 << b
            rows[b] |= 1 << a
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(a, b)`` with ``a < b`` in lexicographic order."""
        return [(a, b) for a in range(self.n) for b in _bits(self.adj[a] >> (a + 1) << (a + 1))]

    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def has_edge(self, a: int, b: int) -> bool:
        return bool(self.adj[a] >> b & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph, relabelled to ``0..len(vertices)-1`` in the given order."""
        index = {v: i for i, v in enumerate(vertices)}
        return Graph.from_edges(
            len(vertices),
            [(index[a], index[b]) for a, b in self.edges() if a in index and b in index],
        )

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph.from_edges(self.n, [(perm[a], perm[b]) for a, b in self.edges()])

    def components(self) -> list[list[int]]:
        seen = 0
        comps = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp = 1 << s
            frontier = comp
            while frontier:
                nxt = 0
                for v in _bits(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(list(_bits(comp)))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        return all(self.has_edge(a, b) for a, b in combinations(vs, 2))

    def clique_number(self) -> int:
        best = 0

        def grow(size: int, candidates: int) -> None:
            nonlocal best
            if size > best:
                best = size
            while candidates:
                if size + candidates.bit_count() <= best:
                    return
                low = candidates & -candidates
                v = low.bit_length() - 1
                candidates ^= low
                grow(size + 1, candidates & self.adj[v])

        grow(0, (1 << self.n) - 1)
        return best

    def spanning_forest(self) -> list[tuple[int, int]]:
        """BFS forest edges ``(a, b)`` with ``a < b``, roots taken in vertex order."""
        seen = 0
        tree = []
        for root in range(self.n):
            if seen >> root & 1:
                continue
            seen |= 1 << root
            queue = [root]
            for v in queue:
                for w in _bits(self.adj[v] & ~seen):
                    seen |= 1 << w
                    queue.append(w)
                    tree.append((min(v, w), max(v, w)))
        return sorted(tree)


# -- standard constructions ------------------------------------------------


def complete(m: int) -> Graph:
    if m < 1:
        raise DomainError("complete graph needs at least one vertex")
    return Graph.from_edges(m, combinations(range(m), 2))


def cycle(n: int) -> Graph:
    if n < 3:
        raise DomainError("cycle needs at least three vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise DomainError("path needs at least one vertex")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise DomainError("both sides of a complete bipartite graph must be nonempty")
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.n
    return Graph.from_edges(g.n + h.n, g.edges() + [(a + shift, b + shift) for a, b in h.edges()])


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union of ``g`` and ``h`` plus every edge between them."""
    union = disjoint_union(g, h)
    cross = [(a, g.n + b) for a in range(g.n) for b in range(h.n)]
    return Graph.from_edges(union.n, union.edges() + cross)


# -- the G_n family --------------------------------------------------------


@dataclass(frozen=True)
class LabeledGn:
    """``2K_m`` joined to ``2K_1`` with its parts named.

    Layout is fixed: ``u = 0``, ``v = 1``, ``q1 = 2..m+1``, ``q2 = m+2..2m+1``.
    """

    graph: Graph
    u: int
    v: int
    q1: tuple[int, ...]
    q2: tuple[int, ...]
    m: int

    @property
    def n(self) -> int:
        return self.graph.n


def construct_gn(n: int) -> LabeledGn:
    if n < 4 or n % 2:
        raise DomainError(f"G_n needs an even n >= 4, got {n}")
    m = (n - 2) // 2
    hubs = Graph.empty(2)
    cliques = disjoint_union(complete(m), complete(m))
    # join puts the hubs first, so u=0, v=1 and the cliques follow in order
    g = join(hubs, cliques)
    return LabeledGn(g, 0, 1, tuple(range(2, m + 2)), tuple(range(m + 2, 2 * m + 2)), m)


# -- orientations ----------------------------------------------------------


@dataclass(frozen=True)
class Orientation:
    """Every edge of ``graph`` directed once.

    ``arcs[i]`` is the directed version of ``graph.edges()[i]``.
    """

    graph: Graph
    arcs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        edges = self.graph.edges()
        if len(edges) != len(self.arcs):
            raise DomainError("orientation must direct every edge exactly once")
        for (a, b), (t, h) in zip(edges, self.arcs):
            if (min(t, h), max(t, h)) != (a, b):
                raise DomainError(f"arc {t}->{h} does not orient edge {a}-{b}")

    @classmethod
    def from_arcs(cls, graph: Graph, arcs: Iterable[tuple[int, int]]) -> "Orientation":
        by_edge = {}
        for t, h in arcs:
            key = (min(t, h), max(t, h))
            if key in by_edge:
                raise DomainError(f"edge {key} oriented twice")
            by_edge[key] = (t, h)
        try:
            ordered = tuple(by_edge.pop(e) for e in graph.edges())
        except KeyError as exc:
            raise DomainError(f"edge {exc.args[0]} not oriented") from None
        if by_edge:
            raise DomainError(f"arcs {sorted(by_edge)} are not edges of the graph")
        return cls(graph, ordered)

    @classmethod
    def from_bits(cls, graph: Graph, bits: int) -> "Orientation":
        """Bit ``i`` set reverses edge ``i`` (``a<b`` becomes ``b->a``)."""
        return cls(graph, tuple((b, a) if bits >> i & 1 else (a, b) for i, (a, b) in enumerate(graph.edges())))

    @classmethod
    def by_vertex_order(cls, graph: Graph, order: Sequence[int] | None = None) -> "Orientation":
        """Acyclic orientation pointing from earlier to later vertices of ``order``."""
        rank = {v: i for i, v in enumerate(order if order is not None else range(graph.n))}
        return cls(graph, tuple((a, b) if rank[a] < rank[b] else (b, a) for a, b in graph.edges()))

    def outdegrees(self) -> list[int]:
        out = [0] * self.graph.n
        for t, _ in self.arcs:
            out[t] += 1
        return out

    def indegrees(self) -> list[int]:
        deg = [0] * self.graph.n
        for _, h in self.arcs:
            deg[h] += 1
        return deg

    def outdegree(self, v: int) -> int:
        return sum(1 for t, _ in self.arcs if t == v)

    def indegree(self, v: int) -> int:
        return sum(1 for _, h in self.arcs if h == v)

    def max_outdegree(self) -> int:
        return max(self.outdegrees(), default=0)

    def max_indegree(self) -> int:
        return max(self.indegrees(), default=0)

    def reversed(self) -> "Orientation":
        return Orientation(self.graph, tuple((h, t) for t, h in self.arcs))

    def is_acyclic(self) -> bool:
        indeg = self.indegrees()
        out = [[] for _ in range(self.graph.n)]
        for t, h in self.arcs:
            out[t].append(h)
        stack = [v for v in range(self.graph.n) if indeg[v] == 0]
        seen = 0
        while stack:
            v = stack.pop()
            seen += 1
            for w in out[v]:
                indeg[w] -= 1
                if indeg[w] == 0:
                    stack.append(w)
        return seen == self.graph.n

    def to_json(self) -> list[list[int]]:
        return [[t, h] for t, h in self.arcs]


def max_outdegree(d: Orientation) -> int:
    return d.max_outdegree()


def orient_gn(g: LabeledGn) -> Orientation:
    """u -> Q1 -> v -> Q2 -> u, cliques oriented by increasing vertex id."""
    q1 = set(g.q1)
    arcs = []
    for a, b in g.graph.edges():
        if a == g.u:
            arcs.append((a, b) if b in q1 else (b, a))
        elif a == g.v:
            arcs.append((b, a) if b in q1 else (a, b))
        else:
            arcs.append((a, b))
    return Orientation(g.graph, tuple(arcs))


# -- graph6 ----------------------------------------------------------------


def _encode_n(n: int) -> str:
    if n < 63:
        return chr(63 + n)
    if n < 258048:
        return "~" + "".join(chr(63 + (n >> s & 63)) for s in (12, 6, 0))
    return "~~" + "".join(chr(63 + (n >> s & 63)) for s in (30, 24, 18, 12, 6, 0))


def to_graph6(g: Graph) -> str:
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = "".join(chr(63 + int("".join(map(str, bits[i:i + 6])), 2)) for i in range(0, len(bits), 6))
    return _encode_n(g.n) + body


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 string (an optional ``>>graph6<<`` header is accepted)."""
    s = text.strip("\r\n")
    start = 0
    if s.startswith(">>graph6<<"):
        start = len(">>graph6<<")
    data = s[start:]
    if not data:
        raise Graph6Error("empty graph6 string", start)
    for i, ch in enumerate(data):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"byte {ord(ch)} outside 63..126", start + i)
    vals = [ord(ch) - 63 for ch in data]
    if vals[0] != 63:
        n, pos = vals[0], 1
    elif len(vals) >= 2 and vals[1] == 63:
        if len(vals) < 8:
            raise Graph6Error("truncated 8-byte vertex count", start + len(vals))
        n, pos = 0, 8
        for x in vals[2:8]:
            n = n << 6 | x
    else:
        if len(vals) < 4:
            raise Graph6Error("truncated 4-byte vertex count", start + len(vals))
        n, pos = 0, 4
        for x in vals[1:4]:
            n = n << 6 | x
    need = (n * (n - 1) // 2 + 5) // 6
    body = vals[pos:]
    if len(body) < need:
        raise Graph6Error(f"expected {need} edge bytes, found {len(body)}", start + len(vals))
    if len(body) > need:
        raise Graph6Error("trailing data after edge bytes", start + pos + need)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[tuple[int, str, Graph | Graph6Error]]:
    """Yield ``(line_number, text, graph_or_error)`` for each nonblank line."""
    for lineno, line in enumerate(lines, 1):
        text = line.strip()
        if not text:
            continue
        try:
            yield lineno, text, parse_graph6(text)
        except Graph6Error as exc:
            yield lineno, text, exc
