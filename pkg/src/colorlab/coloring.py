"""Chromatic number, list colouring and choosability by exhaustive search."""

from __future__ import annotations

from typing import Sequence

from .density import degeneracy
from .errors import DomainError, GuardError
from .graph import Graph

CHROMATIC_MAX_VERTICES = 16
CHOOSABILITY_MAX_VERTICES = 8
CHOOSABILITY_MAX_K = 3

ListAssignment = Sequence[frozenset[int] | set[int] | Sequence[int]]
Coloring = list[int]


def _check_lists(g: Graph, lists: ListAssignment) -> list[list[int]]:
    if len(lists) != g.n:
        raise DomainError(f"need one list per vertex, got {len(lists)} for n={g.n}")
    out = []
    for v, lst in enumerate(lists):
        colors = sorted(set(lst))
        if not colors:
            raise DomainError(f"list of vertex {v} is empty")
        if colors[0] < 0:
            raise DomainError("colors must be nonnegative integers")
        out.append(colors)
    return out


def _solve_lists(adj: Sequence[int], avail: list[int]) -> Coloring | None:
    """Backtracking over colour bitmasks; ``avail`` is modified in place.

    Branches on the uncoloured vertex with the fewest remaining colours
    (ties by vertex id), trying colours in increasing order.
    """
    n = len(adj)
    color = [-1] * n

    def solve(uncolored: int) -> bool:
        if not uncolored:
            return True
        best, best_count = -1, n + 64
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
        choices = avail[v]
        nbrs = adj[v] & rest
        while choices:
            bit = choices & -choices
            choices ^= bit
            touched = []
            ok = True
            m = nbrs
            while m:
                low = m & -m
                w = low.bit_length() - 1
                m ^= low
                if avail[w] & bit:
                    avail[w] ^= bit
                    touched.append(w)
                    if not avail[w]:
                        ok = False
            if ok:
                color[v] = bit.bit_length() - 1
                if solve(rest):
                    return True
            for w in touched:
                avail[w] |= bit
        color[v] = -1
        return False

    return color if solve((1 << n) - 1) else None


def l_coloring_exists(g: Graph, lists: ListAssignment) -> Coloring | None:
    """A proper colouring choosing each colour from the vertex's list, or None."""
    checked = _check_lists(g, lists)
    avail = [sum(1 << c for c in colors) for colors in checked]
    return _solve_lists(g.adj, avail)


def is_k_colorable(g: Graph, k: int) -> Coloring | None:
    if k <= 0:
        return [] if g.n == 0 else None
    return l_coloring_exists(g, [range(k)] * g.n)


def chromatic_number(g: Graph) -> tuple[int, Coloring]:
    """Least k admitting a proper k-colouring, with a witness colouring."""
    if g.n > CHROMATIC_MAX_VERTICES:
        raise GuardError(f"chromatic number limited to {CHROMATIC_MAX_VERTICES} vertices, got {g.n}")
    if g.n == 0:
        return 0, []
    k = max(1, g.clique_number())
    while True:
        coloring = is_k_colorable(g, k)
        if coloring is not None:
            return k, coloring
        k += 1


def _k_core(g: Graph, k: int) -> list[int]:
    """Vertices surviving repeated deletion of vertices of degree < k."""
    alive = (1 << g.n) - 1
    changed = True
    while changed:
        changed = False
        for v in range(g.n):
            if alive >> v & 1 and (g.adj[v] & alive).bit_count() < k:
                alive &= ~(1 << v)
                changed = True
    return [v for v in range(g.n) if alive >> v & 1]


def _bad_class_cover(g: Graph, k: int) -> list[list[int]] | None:
    """Search for k-list assignments with no list colouring, one colour class at a time.

    An assignment is a multiset of colour classes (the vertex set carrying
    each colour) covering every vertex exactly k times; listing the classes
    in non-increasing bitmask order removes colour renaming entirely.
    Classes of size one are skipped: a colour private to one vertex can be
    swapped for a shared one without making the assignment colourable.
    Adding classes only enlarges lists, so once a partial assignment is
    colourable every completion is, and the branch is cut.
    """
    n = g.n
    full = (1 << n) - 1
    subsets = [s for s in range(full, 0, -1) if s.bit_count() >= 2]
    cover = [0] * n
    classes: list[int] = []

    def colorable() -> bool:
        avail = [0] * n
        for c, cls in enumerate(classes):
            bit = 1 << c
            m = cls
            while m:
                low = m & -m
                avail[low.bit_length() - 1] |= bit
                m ^= low
        return _solve_lists(g.adj, avail) is not None

    def rec(start: int, saturated: int, touched: int) -> bool:
        if touched == full and colorable():
            return False
        if saturated == full:
            return True
        for idx in range(start, len(subsets)):
            cls = subsets[idx]
            if cls & saturated:
                continue
            sat = saturated
            m = cls
            while m:
                low = m & -m
                v = low.bit_length() - 1
                m ^= low
                cover[v] += 1
                if cover[v] == k:
                    sat |= low
            classes.append(cls)
            if rec(idx, sat, touched | cls):
                return True
            classes.pop()
            m = cls
            while m:
                low = m & -m
                cover[low.bit_length() - 1] -= 1
                m ^= low
        return False

    if n < 2 or not rec(0, 0, 0):
        return None
    return [[c for c, cls in enumerate(classes) if cls >> v & 1] for v in range(n)]


def is_k_choosable(g: Graph, k: int) -> tuple[bool, list[list[int]] | None]:
    """Whether every assignment of k-element lists admits a list colouring.

    On failure the returned witness is a bad list assignment for all of
    ``g`` (vertices outside the obstruction get lists reusing its colours).
    Vertices of degree < k are peeled first since they can always be
    coloured last.
    """
    if k < 1:
        raise DomainError("list size must be positive")
    if g.n > CHOOSABILITY_MAX_VERTICES or k > CHOOSABILITY_MAX_K:
        raise GuardError(
            f"choosability limited to n <= {CHOOSABILITY_MAX_VERTICES}, k <= {CHOOSABILITY_MAX_K}; "
            f"got n={g.n}, k={k}"
        )
    core = _k_core(g, k)
    if not core:
        return True, None
    h = g.induced(core)
    for comp in h.components():
        lists = _bad_class_cover(h.induced(comp), k)
        if lists is not None:
            witness = [list(range(k)) for _ in range(g.n)]
            for i, v in enumerate(comp):
                witness[core[v]] = lists[i]
            return False, witness
    return True, None


def list_chromatic_number(g: Graph) -> int:
    """Least k such that ``g`` is k-choosable.

    The search starts at the chromatic number and stops at degeneracy + 1,
    which greedy colouring already certifies.
    """
    if g.n == 0:
        return 0
    lower, _ = chromatic_number(g)
    upper = degeneracy(g) + 1
    for k in range(lower, upper):
        if is_k_choosable(g, k)[0]:
            return k
    return upper
