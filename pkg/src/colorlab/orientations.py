"""Eulerian parity counts and the Alon-Tarsi number.

Eulerian subdigraphs are counted by a transfer-matrix sweep over the arcs:
the state is the current out-minus-in balance of every vertex that still
has unprocessed arcs, and a vertex is checked against its target balance
as soon as its last arc has been seen.  The plain ``2^|E|`` enumeration is
kept as an independent oracle.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from math import floor
from typing import Iterator, Sequence

from .coloring import CHROMATIC_MAX_VERTICES, chromatic_number
from .density import degeneracy_order, mad
from .errors import DomainError, GuardError, InvariantViolation
from .graph import Graph, LabeledGn, Orientation, orient_gn

BRUTEFORCE_MAX_EDGES = 26
PARITY_MAX_EDGES = 64
AT_SEARCH_MAX_EDGES = 14
AT_LOCAL_SEARCH_STATES = 256


@dataclass(frozen=True)
class ParityCounts:
    even: int
    odd: int

    @property
    def difference(self) -> int:
        return self.even - self.odd

    def __add__(self, other: "ParityCounts") -> "ParityCounts":
        return ParityCounts(self.even + other.even, self.odd + other.odd)

    def as_tuple(self) -> tuple[int, int, int]:
        return self.even, self.odd, self.difference


@dataclass(frozen=True)
class AlmostEulerianProfile:
    source: int
    sink: int
    counts: tuple[ParityCounts, ...]

    def __post_init__(self):
        if not self.counts or self.counts[0].even < 1:
            raise InvariantViolation("order-0 count must include the empty subdigraph")


def _arc_order(arcs: Sequence[tuple[int, int]], n: int) -> list[tuple[int, int]]:
    # close low-numbered vertices first so the live frontier stays small
    return sorted(arcs, key=lambda a: (max(a), min(a)))


def _count_balanced(n: int, arcs: Sequence[tuple[int, int]], target: Sequence[int]) -> ParityCounts:
    """Count arc subsets where every vertex has out - in == target[v], split by parity."""
    remaining = [0] * n
    for t, h in arcs:
        remaining[t] += 1
        remaining[h] += 1
    for v in range(n):
        if remaining[v] == 0 and target[v] != 0:
            return ParityCounts(0, 0)
    states: dict[tuple[int, ...], list[int]] = {(0,) * n: [1, 0]}
    for t, h in _arc_order(arcs, n):
        remaining[t] -= 1
        remaining[h] -= 1
        nxt: dict[tuple[int, ...], list[int]] = defaultdict(lambda: [0, 0])
        for bal, (ev, od) in states.items():
            for take in (False, True):
                if take:
                    b = list(bal)
                    b[t] += 1
                    b[h] -= 1
                    cnt = (od, ev)
                else:
                    b = list(bal)
                    cnt = (ev, od)
                ok = True
                for w in (t, h):
                    gap = target[w] - b[w]
                    if remaining[w] == 0:
                        if gap:
                            ok = False
                            break
                        b[w] = 0
                    elif abs(gap) > remaining[w]:
                        ok = False
                        break
                if ok:
                    slot = nxt[tuple(b)]
                    slot[0] += cnt[0]
                    slot[1] += cnt[1]
        states = nxt
    ev, od = states.get((0,) * n, [0, 0])
    return ParityCounts(ev, od)


def eulerian_parity(d: Orientation) -> ParityCounts:
    """Even and odd Eulerian (balanced, spanning) subdigraphs of ``d``."""
    if len(d.arcs) > PARITY_MAX_EDGES:
        raise GuardError(f"parity count limited to {PARITY_MAX_EDGES} edges, got {len(d.arcs)}")
    return _count_balanced(d.graph.n, d.arcs, [0] * d.graph.n)


def eulerian_parity_bruteforce(d: Orientation) -> ParityCounts:
    """Same counts as :func:`eulerian_parity` by trying every arc subset."""
    m = len(d.arcs)
    if m > BRUTEFORCE_MAX_EDGES:
        raise GuardError(f"subset enumeration limited to {BRUTEFORCE_MAX_EDGES} edges, got {m}")
    n = d.graph.n
    even = odd = 0
    for mask in range(1 << m):
        bal = [0] * n
        for i, (t, h) in enumerate(d.arcs):
            if mask >> i & 1:
                bal[t] += 1
                bal[h] -= 1
        if not any(bal):
            if mask.bit_count() % 2:
                odd += 1
            else:
                even += 1
    return ParityCounts(even, odd)


def almost_eulerian_counts(d: Orientation, s: int, t: int) -> AlmostEulerianProfile:
    """Parity counts of almost-Eulerian subdigraphs from ``s`` to ``t`` by order.

    Order ``j`` runs over ``0..outdeg(s)``.  Arcs into ``s`` or out of ``t``
    can never be used, so they are dropped before counting.
    """
    n = d.graph.n
    if s == t or not (0 <= s < n and 0 <= t < n):
        raise DomainError("source and sink must be distinct vertices")
    if len(d.arcs) > PARITY_MAX_EDGES:
        raise GuardError(f"parity count limited to {PARITY_MAX_EDGES} edges, got {len(d.arcs)}")
    usable = [(a, b) for a, b in d.arcs if b != s and a != t]
    counts = []
    for j in range(d.outdegree(s) + 1):
        target = [0] * n
        target[s] = j
        target[t] = -j
        counts.append(_count_balanced(n, usable, target))
    return AlmostEulerianProfile(s, t, tuple(counts))


def almost_eulerian_bruteforce(d: Orientation, s: int, t: int) -> list[ParityCounts]:
    """Oracle for :func:`almost_eulerian_counts` straight from the definition."""
    m = len(d.arcs)
    if m > BRUTEFORCE_MAX_EDGES:
        raise GuardError(f"subset enumeration limited to {BRUTEFORCE_MAX_EDGES} edges, got {m}")
    n = d.graph.n
    tallies = [[0, 0] for _ in range(d.outdegree(s) + 1)]
    for mask in range(1 << m):
        out = [0] * n
        inn = [0] * n
        for i, (a, b) in enumerate(d.arcs):
            if mask >> i & 1:
                out[a] += 1
                inn[b] += 1
        if inn[s] or out[t] or out[s] != inn[t]:
            continue
        if any(out[v] != inn[v] for v in range(n) if v not in (s, t)):
            continue
        tallies[out[s]][mask.bit_count() % 2] += 1
    return [ParityCounts(e, o) for e, o in tallies]


@dataclass
class SumOfSquaresReport:
    n: int
    direct: ParityCounts
    forward: AlmostEulerianProfile
    backward: AlmostEulerianProfile
    sum_of_squares: int
    ok: bool = field(default=True)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "even": self.direct.even,
            "odd": self.direct.odd,
            "difference": self.direct.difference,
            "e": [c.even for c in self.forward.counts],
            "o": [c.odd for c in self.forward.counts],
            "sum_of_squares": self.sum_of_squares,
            "ok": self.ok,
        }


def verify_sum_of_squares(g: LabeledGn) -> SumOfSquaresReport:
    """Check that the parity difference of ``orient_gn(g)`` equals sum (e_j - o_j)^2 > 0.

    Also checks the u->v / v->u symmetry and the even/odd totals
    ``sum(e_j^2 + o_j^2)`` and ``sum(2 e_j o_j)``.
    """
    d = orient_gn(g)
    direct = eulerian_parity(d)
    fwd = almost_eulerian_counts(d, g.u, g.v)
    bwd = almost_eulerian_counts(d, g.v, g.u)
    if fwd.counts != bwd.counts:
        raise InvariantViolation(f"u->v counts {fwd.counts} differ from v->u counts {bwd.counts}")
    e = [c.even for c in fwd.counts]
    o = [c.odd for c in fwd.counts]
    sos = sum((a - b) ** 2 for a, b in zip(e, o))
    if direct.even != sum(a * a + b * b for a, b in zip(e, o)):
        raise InvariantViolation("even Eulerian count does not split into almost-Eulerian pairs")
    if direct.odd != sum(2 * a * b for a, b in zip(e, o)):
        raise InvariantViolation("odd Eulerian count does not split into almost-Eulerian pairs")
    if direct.difference != sos:
        raise InvariantViolation(f"difference {direct.difference} != sum of squares {sos}")
    if sos < 1:
        raise InvariantViolation("sum of squares is not positive")
    return SumOfSquaresReport(g.n, direct, fwd, bwd, sos)


def orientations_with_cap(g: Graph, cap: int) -> Iterator[Orientation]:
    """Orientations with every outdegree <= cap, lexicographic in the direction vector.

    Edge ``i`` is first tried as ``a->b`` (``a < b``), then reversed.
    """
    edges = g.edges()
    m = len(edges)
    out = [0] * g.n
    arcs: list[tuple[int, int]] = []

    def rec(i: int) -> Iterator[Orientation]:
        if i == m:
            yield Orientation(g, tuple(arcs))
            return
        a, b = edges[i]
        for t, h in ((a, b), (b, a)):
            if out[t] < cap:
                out[t] += 1
                arcs.append((t, h))
                yield from rec(i + 1)
                arcs.pop()
                out[t] -= 1

    if cap < 0:
        return
    yield from rec(0)


def alon_tarsi_number(g: Graph) -> tuple[int, Orientation]:
    """Least k with an orientation of outdegree < k and unequal even/odd Eulerian counts.

    Searches the whole orientation space for each k in turn.  Always
    terminates: an acyclic orientation has difference exactly 1.
    """
    if g.num_edges > AT_SEARCH_MAX_EDGES:
        raise GuardError(f"orientation search limited to {AT_SEARCH_MAX_EDGES} edges, got {g.num_edges}")
    k = 1
    while True:
        for d in orientations_with_cap(g, k - 1):
            if eulerian_parity(d).difference != 0:
                return k, d
        k += 1


def at_upper_witness(g: Graph, k: int, d: Orientation) -> bool:
    """True iff ``d`` certifies AT(g) <= k."""
    if d.graph != g:
        raise DomainError("orientation is not an orientation of this graph")
    return d.max_outdegree() <= k - 1 and eulerian_parity(d).difference != 0


def orientation_with_bounded_outdegree(g: Graph, k: int) -> Orientation | None:
    """An orientation with all outdegrees <= k, or None if none exists.

    Starts from the low-to-high orientation and repeatedly reverses a
    directed path from an overloaded vertex to one with spare capacity.
    When no such path exists the vertices reachable from the overloaded one
    span more than ``k`` edges per vertex, so no orientation can work.
    """
    if k < 0:
        return None
    n = g.n
    out = [set() for _ in range(n)]
    for a, b in g.edges():
        out[a].add(b)
    for v in range(n):
        while len(out[v]) > k:
            parent = {v: None}
            queue = [v]
            found = None
            for x in queue:
                for y in sorted(out[x]):
                    if y in parent:
                        continue
                    parent[y] = x
                    if len(out[y]) < k:
                        found = y
                        break
                    queue.append(y)
                if found is not None:
                    break
            if found is None:
                return None
            y = found
            while parent[y] is not None:
                x = parent[y]
                out[x].remove(y)
                out[y].add(x)
                y = x
    return Orientation.from_arcs(g, [(a, b) for a in range(n) for b in out[a]])


@dataclass
class Certified:
    """A parameter pinned between certified bounds.

    ``lower_by`` and ``upper_by`` name the routine that certified each side;
    ``exhaustive`` marks values settled by a complete search.
    """

    lower: int
    upper: int
    lower_by: str
    upper_by: str
    witness: object = None
    exhaustive: bool = False

    @property
    def value(self) -> int | None:
        return self.lower if self.lower == self.upper else None

    @property
    def certificate(self) -> str:
        if self.value is None:
            return "interval"
        return "exhaustive" if self.exhaustive else "witness+lower-bound"


def at_lower_bound(g: Graph) -> tuple[int, str]:
    """max(chromatic number, floor(mad/2) + 1) with the name of the winning bound."""
    by_mad = floor(mad(g) / 2) + 1 if g.num_edges else 1
    if g.n <= CHROMATIC_MAX_VERTICES:
        chi = chromatic_number(g)[0]
        if chi >= by_mad:
            return chi, "chromatic_number"
    return by_mad, "mad/2"


def certify_at(g: Graph) -> Certified:
    """Alon-Tarsi number by full search when within guard, otherwise by bounds.

    Outside the guard, the upper side tries the minimum-outdegree
    orientations produced by :func:`orientation_with_bounded_outdegree`
    before falling back to the acyclic degeneracy orientation.
    """
    if g.n == 0:
        return Certified(0, 0, "empty", "empty", exhaustive=True)
    if g.num_edges <= AT_SEARCH_MAX_EDGES:
        k, d = alon_tarsi_number(g)
        return Certified(k, k, "alon_tarsi_number", "alon_tarsi_number", d, exhaustive=True)
    lower, lower_by = at_lower_bound(g)
    degen, order = degeneracy_order(g)
    # each vertex keeps at most `degen` neighbours peeled after it
    witness = Orientation.by_vertex_order(g, order)
    upper, upper_by = degen + 1, "acyclic_degeneracy_orientation"
    for cap in range(max(lower - 1, 0), degen):
        d = orientation_with_bounded_outdegree(g, cap)
        if d is None:
            continue
        d = _nonzero_parity_near(d, cap) if g.num_edges <= PARITY_MAX_EDGES else None
        if d is not None:
            witness, upper, upper_by = d, cap + 1, "bounded_outdegree_orientation"
            break
    return Certified(lower, upper, lower_by, upper_by, witness)


def _nonzero_parity_near(start: Orientation, cap: int, limit: int = AT_LOCAL_SEARCH_STATES) -> Orientation | None:
    """Breadth-first walk over single-arc reversals that keep outdegrees <= cap.

    Orientations sharing an outdegree sequence have the same parity
    difference up to sign, so states are deduplicated by that sequence.
    Visits at most ``limit`` sequences in a fixed order and returns the
    first orientation with nonzero parity difference.
    """
    seen = {tuple(start.outdegrees())}
    queue = [start]
    for d in queue:
        if eulerian_parity(d).difference != 0:
            return d
        out = d.outdegrees()
        for i, (t, h) in enumerate(d.arcs):
            if out[h] >= cap:
                continue
            out[t] -= 1
            out[h] += 1
            key = tuple(out)
            if key not in seen and len(seen) < limit:
                seen.add(key)
                queue.append(Orientation(d.graph, d.arcs[:i] + ((h, t),) + d.arcs[i + 1:]))
            out[t] += 1
            out[h] -= 1
    return None


def alon_tarsi_bruteforce(g: Graph, max_edges: int = 12) -> tuple[int, Orientation]:
    """Independent oracle: every orientation, parity by plain subset enumeration."""
    m = g.num_edges
    if m > max_edges:
        raise GuardError(f"brute-force orientation scan limited to {max_edges} edges, got {m}")
    best = None
    for bits in range(1 << m):
        d = Orientation.from_bits(g, bits)
        k = d.max_outdegree() + 1
        if best is not None and k >= best[0]:
            continue
        if eulerian_parity_bruteforce(d).difference != 0:
            best = (k, d)
    return best
