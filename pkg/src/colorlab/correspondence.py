"""Correspondence (DP) colouring.

A cover gives every vertex the colours ``0..size-1`` and every edge a
partial matching between the colours of its endpoints; a colouring must
avoid matched pairs.  Matchings are stored once per edge ``(a, b)`` with
``a < b`` as pairs ``(colour at a, colour at b)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from math import factorial
from typing import Mapping, Sequence

from .coloring import ListAssignment, _check_lists, _k_core, chromatic_number, CHROMATIC_MAX_VERTICES
from .density import degeneracy
from .errors import DomainError, GuardError
from .graph import Graph, LabeledGn, construct_gn, cycle
from .orientations import Certified

DEFAULT_BUDGET = 10**8


def _key(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True, eq=True)
class Cover:
    sizes: tuple[int, ...]
    matchings: Mapping[tuple[int, int], frozenset[tuple[int, int]]]

    def __post_init__(self):
        for (a, b), pairs in self.matchings.items():
            if not a < b:
                raise DomainError(f"matching key {(a, b)} must have a < b")
            left = [x for x, _ in pairs]
            right = [y for _, y in pairs]
            if len(set(left)) != len(left) or len(set(right)) != len(right):
                raise DomainError(f"matching on {a}-{b} is not a partial matching")
            if any(not 0 <= x < self.sizes[a] for x in left) or any(not 0 <= y < self.sizes[b] for y in right):
                raise DomainError(f"matching on {a}-{b} uses a colour outside the lists")

    __hash__ = None  # matchings is a dict

    @classmethod
    def from_perms(cls, g: Graph, k: int, perms: Mapping[tuple[int, int], Sequence[int]] | None = None) -> "Cover":
        """Full cover with lists ``0..k-1``; edges missing from ``perms`` get the identity."""
        perms = dict(perms or {})
        matchings = {}
        for e in g.edges():
            p = perms.pop(e, range(k))
            if sorted(p) != list(range(k)):
                raise DomainError(f"{list(p)} is not a permutation of 0..{k - 1}")
            matchings[e] = frozenset(enumerate(p))
        if perms:
            raise DomainError(f"edges {sorted(perms)} are not in the graph")
        return cls((k,) * g.n, matchings)

    @classmethod
    def from_pairs(cls, sizes: Sequence[int], matchings: Mapping[tuple[int, int], object]) -> "Cover":
        out = {}
        for (a, b), pairs in matchings.items():
            pairs = frozenset((int(x), int(y)) for x, y in pairs)
            if a > b:
                a, b = b, a
                pairs = frozenset((y, x) for x, y in pairs)
            out[(a, b)] = pairs
        return cls(tuple(sizes), out)

    @property
    def k(self) -> int:
        if len(set(self.sizes)) > 1:
            raise DomainError("cover has lists of different sizes")
        return self.sizes[0] if self.sizes else 0

    def pairs(self, a: int, b: int) -> frozenset[tuple[int, int]]:
        """Matched pairs as ``(colour at a, colour at b)``."""
        if a < b:
            return self.matchings[(a, b)]
        return frozenset((y, x) for x, y in self.matchings[(b, a)])

    def mapping(self, a: int, b: int) -> dict[int, int]:
        return dict(self.pairs(a, b))

    def is_full(self) -> bool:
        return all(
            len(pairs) == self.sizes[a] == self.sizes[b] for (a, b), pairs in self.matchings.items()
        )

    def perm(self, a: int, b: int) -> tuple[int, ...]:
        m = self.mapping(a, b)
        if len(m) != self.sizes[a]:
            raise DomainError(f"matching on {a}-{b} is not full")
        return tuple(m[i] for i in range(self.sizes[a]))

    def with_matching(self, a: int, b: int, pairs) -> "Cover":
        new = dict(self.matchings)
        key = _key(a, b)
        pairs = frozenset(pairs) if a < b else frozenset((y, x) for x, y in pairs)
        new[key] = pairs
        return Cover(self.sizes, new)

    def check_graph(self, g: Graph) -> None:
        if len(self.sizes) != g.n:
            raise DomainError(f"cover has {len(self.sizes)} lists, graph has {g.n} vertices")
        if set(self.matchings) != set(g.edges()):
            raise DomainError("cover edges do not match the graph edges")

    def to_json(self) -> dict:
        edges = sorted(self.matchings)
        out: dict = {}
        if self.sizes and len(set(self.sizes)) == 1:
            out["k"] = self.sizes[0]
        else:
            out["sizes"] = list(self.sizes)
        out["edges"] = [list(e) for e in edges]
        if self.is_full():
            out["perms"] = [list(self.perm(a, b)) for a, b in edges]
        else:
            out["matchings"] = [sorted(list(p) for p in self.matchings[e]) for e in edges]
        return out

    @classmethod
    def from_json(cls, data: Mapping, n: int | None = None) -> "Cover":
        edges = [tuple(e) for e in data["edges"]]
        if "sizes" in data:
            sizes = list(data["sizes"])
        else:
            if n is None:
                n = 1 + max((v for e in edges for v in e), default=-1)
            sizes = [data["k"]] * n
        if "perms" in data:
            match = {e: list(enumerate(p)) for e, p in zip(edges, data["perms"])}
        else:
            match = {e: [tuple(p) for p in pairs] for e, pairs in zip(edges, data["matchings"])}
        return cls.from_pairs(sizes, match)


@dataclass
class BadCover:
    """An uncolourable cover, with the spanning forest it is normalised on."""

    cover: Cover
    tree: list[tuple[int, int]]

    def to_json(self) -> dict:
        return {**self.cover.to_json(), "tree": [list(e) for e in self.tree]}


def _conflicts(g: Graph, cover: Cover) -> list[dict[int, list[int]]]:
    """``conf[v][w][c]`` is the bitmask of colours at ``w`` ruled out by colour ``c`` at ``v``."""
    conf: list[dict[int, list[int]]] = [dict() for _ in range(g.n)]
    for (a, b), pairs in cover.matchings.items():
        ab = [0] * cover.sizes[a]
        ba = [0] * cover.sizes[b]
        for x, y in pairs:
            ab[x] |= 1 << y
            ba[y] |= 1 << x
        conf[a][b] = ab
        conf[b][a] = ba
    return conf


def _solve_cover(g: Graph, sizes: Sequence[int], conf: list[dict[int, list[int]]]) -> list[int] | None:
    n = g.n
    avail = [(1 << s) - 1 for s in sizes]
    color = [-1] * n

    def solve(uncolored: int) -> bool:
        if not uncolored:
            return True
        best, best_count = -1, 1 << 30
        m = uncolored
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            cnt = avail[v].bit_count()
            if cnt < best_count:
                if cnt == 0:
                    return False
                best, best_count = v, cnt
        v = best
        rest = uncolored & ~(1 << v)
        nbrs = [(w, row) for w, row in conf[v].items() if rest >> w & 1]
        choices = avail[v]
        while choices:
            bit = choices & -choices
            choices ^= bit
            c = bit.bit_length() - 1
            saved = []
            ok = True
            for w, row in nbrs:
                hit = avail[w] & row[c]
                if hit:
                    saved.append((w, hit))
                    avail[w] ^= hit
                    if not avail[w]:
                        ok = False
                        break
            if ok:
                color[v] = c
                if solve(rest):
                    return True
            for w, hit in saved:
                avail[w] |= hit
        color[v] = -1
        return False

    return color if solve((1 << n) - 1) else None


def is_lc_colorable(g: Graph, cover: Cover) -> list[int] | None:
    """A colouring avoiding every matched pair, or None if there is none."""
    cover.check_graph(g)
    return _solve_cover(g, cover.sizes, _conflicts(g, cover))


def is_valid_dp_coloring(g: Graph, cover: Cover, coloring: Sequence[int]) -> bool:
    if len(coloring) != g.n or any(not 0 <= c < s for c, s in zip(coloring, cover.sizes)):
        return False
    return all((coloring[a], coloring[b]) not in cover.matchings[(a, b)] for a, b in g.edges())


def from_lists(g: Graph, lists: ListAssignment) -> Cover:
    """Cover matching exactly the common colours of adjacent lists.

    Vertex ``v``'s list is reindexed in sorted order: index ``i`` stands for
    ``sorted(lists[v])[i]``.
    """
    checked = _check_lists(g, lists)
    matchings = {}
    for a, b in g.edges():
        pos_b = {c: j for j, c in enumerate(checked[b])}
        matchings[(a, b)] = frozenset((i, pos_b[c]) for i, c in enumerate(checked[a]) if c in pos_b)
    return Cover(tuple(len(c) for c in checked), matchings)


def bad_cover_c4() -> tuple[Graph, Cover]:
    """The 4-cycle 0-1-2-3-0 with lists of size 2, twisted on edge 2-3."""
    g = cycle(4)
    return g, Cover.from_perms(g, 2, {(2, 3): (1, 0)})


def bad_cover_gn(n: int) -> tuple[LabeledGn, Cover]:
    """Identity matchings except a cyclic shift ``i -> i+1 mod k`` from u into Q2, k = n/2."""
    g = construct_gn(n)
    k = n // 2
    shift = tuple((i + 1) % k for i in range(k))
    return g, Cover.from_perms(g.graph, k, {(g.u, q): shift for q in g.q2})


def _check_forest(g: Graph, tree: Sequence[tuple[int, int]]) -> list[tuple[int, int]]:
    tree = sorted(_key(a, b) for a, b in tree)
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in tree:
        if not g.has_edge(a, b):
            raise DomainError(f"tree edge {a}-{b} is not an edge of the graph")
        ra, rb = find(a), find(b)
        if ra == rb:
            raise DomainError("tree edges contain a cycle")
        parent[ra] = rb
    if len(tree) != g.n - len(g.components()):
        raise DomainError("tree does not span every component")
    return tree


def normalize_cover(
    g: Graph, cover: Cover, tree: Sequence[tuple[int, int]] | None = None
) -> tuple[Cover, list[tuple[int, ...]]]:
    """Relabel colours per vertex so that every tree edge carries the identity.

    Returns the new cover and ``relabel`` with ``relabel[v][old] = new``; a
    colouring ``phi`` of the input becomes ``relabel[v][phi[v]]``.
    """
    cover.check_graph(g)
    if not cover.is_full():
        raise DomainError("normalisation needs full matchings")
    tree = _check_forest(g, tree if tree is not None else g.spanning_forest())
    tree_adj: list[list[int]] = [[] for _ in range(g.n)]
    for a, b in tree:
        tree_adj[a].append(b)
        tree_adj[b].append(a)
    relabel: list[list[int] | None] = [None] * g.n
    for root in range(g.n):
        if relabel[root] is not None:
            continue
        relabel[root] = list(range(cover.sizes[root]))
        queue = [root]
        for p in queue:
            for c in sorted(tree_adj[p]):
                if relabel[c] is not None:
                    continue
                m = cover.mapping(p, c)
                r = [0] * cover.sizes[c]
                for x, y in m.items():
                    r[y] = relabel[p][x]
                relabel[c] = r
                queue.append(c)
    matchings = {
        (a, b): frozenset((relabel[a][x], relabel[b][y]) for x, y in pairs)
        for (a, b), pairs in cover.matchings.items()
    }
    return Cover(cover.sizes, matchings), [tuple(r) for r in relabel]


def adversary_cost(g: Graph, k: int) -> int:
    """(k!)^(|E| - |V| + components) * k^|V|: covers times colourings, after tree normalisation."""
    cyclomatic = g.num_edges - g.n + len(g.components())
    return factorial(k) ** cyclomatic * k**g.n


def is_k_dp_colorable(g: Graph, k: int, budget: int = DEFAULT_BUDGET) -> tuple[bool, BadCover | None]:
    """Whether every cover with lists of size k is colourable.

    Only full matchings that are the identity on a BFS spanning forest are
    tried: extra matched pairs never help colouring, and relabelling colours
    along the forest turns any full cover into such a one.  Vertices of
    degree < k are peeled first and each remaining component is searched on
    its own.  Permutations on the other edges run in lexicographic order;
    the first uncolourable cover is the witness.
    """
    if k < 1:
        raise DomainError("list size must be positive")
    core = _k_core(g, k)
    if not core:
        return True, None
    h = g.induced(core)
    parts = [h.induced(comp) for comp in h.components()]
    for part in parts:
        cost = adversary_cost(part, k)
        if cost > budget:
            raise GuardError(f"cover search needs about {cost} steps, budget is {budget}")
    for comp, part in zip(h.components(), parts):
        tree = set(part.spanning_forest())
        free = [e for e in part.edges() if e not in tree]
        base = Cover.from_perms(part, k)
        conf = _conflicts(part, base)
        for choice in product(list(permutations(range(k))), repeat=len(free)):
            for (a, b), p in zip(free, choice):
                ab = [1 << y for y in p]
                ba = [0] * k
                for x, y in enumerate(p):
                    ba[y] = 1 << x
                conf[a][b] = ab
                conf[b][a] = ba
            if _solve_cover(part, base.sizes, conf) is None:
                outer = [core[v] for v in comp]
                perms = {_key(outer[a], outer[b]): _oriented(p, outer[a] < outer[b]) for (a, b), p in zip(free, choice)}
                cover = Cover.from_perms(g, k, perms)
                tree_g = sorted(_key(outer[a], outer[b]) for a, b in tree)
                return False, BadCover(cover, tree_g)
    return True, None


def _oriented(p: Sequence[int], keep: bool) -> tuple[int, ...]:
    if keep:
        return tuple(p)
    inv = [0] * len(p)
    for x, y in enumerate(p):
        inv[y] = x
    return tuple(inv)


def dp_colorable_bruteforce(g: Graph, k: int, limit: int = 10**7) -> tuple[bool, Cover | None]:
    """Independent oracle: every full cover, every colouring, no reductions."""
    m = g.num_edges
    if factorial(k) ** m * k**g.n > limit:
        raise GuardError("brute-force cover enumeration over limit")
    edges = g.edges()
    perms = list(permutations(range(k)))
    colorings = list(product(range(k), repeat=g.n))
    for choice in product(perms, repeat=m):
        forbidden = [(a, b, p) for (a, b), p in zip(edges, choice)]
        if not any(all(p[col[a]] != col[b] for a, b, p in forbidden) for col in colorings):
            return False, Cover.from_perms(g, k, dict(zip(edges, choice)))
    return True, None


def dp_chromatic_number(g: Graph, budget: int = DEFAULT_BUDGET) -> Certified:
    """Least k such that ``g`` is k-correspondence-colourable, or a certified interval.

    Searched upward from the chromatic number; degeneracy + 1 closes the
    range from above.  A refused search leaves the interval open rather
    than guessing.
    """
    if g.n == 0:
        return Certified(0, 0, "empty", "empty", exhaustive=True)
    if g.n <= CHROMATIC_MAX_VERTICES:
        lower, lower_by = chromatic_number(g)[0], "chromatic_number"
    else:
        lower, lower_by = g.clique_number(), "clique_number"
    upper, upper_by = degeneracy(g) + 1, "degeneracy+1"
    witness = None
    searched = False
    k = lower
    while k < upper:
        try:
            ok, bad = is_k_dp_colorable(g, k, budget)
        except GuardError:
            return Certified(k, upper, lower_by, upper_by, witness, exhaustive=searched)
        searched = True
        if ok:
            return Certified(k, k, lower_by, "is_k_dp_colorable", witness, exhaustive=True)
        witness, lower, lower_by = bad, k + 1, "is_k_dp_colorable"
        k += 1
    return Certified(upper, upper, lower_by, upper_by, witness, exhaustive=searched)
