"""Degeneracy and exact maximum average degree."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .errors import DomainError, GuardError
from .graph import Graph

MAD_MAX_VERTICES = 20


def degeneracy_order(g: Graph) -> tuple[int, list[int]]:
    """Minimum-degree peeling; ties broken by smallest vertex id.

    Returns ``(degeneracy, removal_order)``.
    """
    alive = (1 << g.n) - 1
    order = []
    k = 0
    for _ in range(g.n):
        v = min(range(g.n), key=lambda w: ((g.adj[w] & alive).bit_count(), w) if alive >> w & 1 else (g.n, w))
        k = max(k, (g.adj[v] & alive).bit_count())
        alive &= ~(1 << v)
        order.append(v)
    return k, order


def degeneracy(g: Graph) -> int:
    if g.n == 0:
        raise DomainError("degeneracy of the empty graph is undefined")
    return degeneracy_order(g)[0]


def format_rational(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def mad(g: Graph) -> Fraction:
    """Maximum of ``2|E(H)|/|V(H)|`` over induced subgraphs ``H``.

    Edge counts of all vertex subsets are built incrementally: removing the
    lowest vertex of a subset drops exactly its neighbours inside the subset.
    """
    if g.n > MAD_MAX_VERTICES:
        raise GuardError(f"mad enumeration limited to {MAD_MAX_VERTICES} vertices, got {g.n}")
    if g.num_edges == 0:
        return Fraction(0)
    size = 1 << g.n
    edges = [0] * size
    best_e, best_v = 0, 1
    for mask in range(1, size):
        low = (mask & -mask).bit_length() - 1
        rest = mask & (mask - 1)
        e = edges[rest] + (g.adj[low] & rest).bit_count()
        edges[mask] = e
        v = mask.bit_count()
        if e * best_v > best_e * v:
            best_e, best_v = e, v
    return Fraction(2 * best_e, best_v)


def mad_bruteforce(g: Graph) -> Fraction:
    """Independent check of :func:`mad`: scan the edge list for every subset."""
    if g.n > MAD_MAX_VERTICES:
        raise GuardError(f"mad enumeration limited to {MAD_MAX_VERTICES} vertices, got {g.n}")
    edges = g.edges()
    best = Fraction(0)
    for size in range(1, g.n + 1):
        for subset in combinations(range(g.n), size):
            members = set(subset)
            count = sum(1 for a, b in edges if a in members and b in members)
            best = max(best, Fraction(2 * count, size))
    return best
