"""Quadric-generation checks for matroid toric ideals.

The degree-d fiber over a multidegree collects all d-multisets of bases
with that element-count vector. Two multisets are joined by an edge when
one double swap relates them: replace bases B1, B2 in the multiset by
B1' = B1 - x + y, B2' = B2 - y + x (both must again be bases). Every fiber
being connected in degree d certifies that the toric ideal needs no
minimal generators in that degree beyond quadrics; a disconnected fiber
only yields candidate witnesses (the certificate is one-directional).
"""
from __future__ import annotations

import itertools
from math import comb

from .errors import InternalInvariantViolation, InvalidInput, TooLarge
from .matroids import Matroid

DEFAULT_BUDGET = 10_000_000


def symmetric_exchange_neighbors(M: Matroid, pair):
    """All unordered basis pairs reachable from `pair` by one double swap.

    `pair` is two bases (tuples); the result is sorted and deduplicated,
    excluding the input pair itself.
    """
    b1, b2 = (tuple(sorted(b)) for b in pair)
    bset = {frozenset(b) for b in M.bases()}
    if frozenset(b1) not in bset or frozenset(b2) not in bset:
        raise InvalidInput("pair must consist of bases")
    out = set()
    s1, s2 = set(b1), set(b2)
    for x in s1 - s2:
        for y in s2 - s1:
            n1 = frozenset(s1 - {x} | {y})
            n2 = frozenset(s2 - {y} | {x})
            if n1 in bset and n2 in bset:
                cand = tuple(sorted((tuple(sorted(n1)), tuple(sorted(n2)))))
                if cand != (b1, b2) and cand != (b2, b1):
                    out.add(cand)
    return sorted(out)


class FiberGraph:
    """One toric fiber: vertices are sorted d-tuples of bases."""

    def __init__(self, degree, multidegree, vertices, adjacency):
        self.degree = degree
        self.multidegree = multidegree
        self.vertices = vertices
        self.adjacency = adjacency
        self.components = _components(vertices, adjacency)

    @property
    def n_components(self):
        return len(self.components)


def _components(vertices, adjacency):
    # breadth-first from each unvisited vertex, one visited set per fiber
    from collections import deque

    seen = set()
    comps = []
    for v in vertices:
        if v in seen:
            continue
        comp = []
        queue = deque([v])
        seen.add(v)
        while queue:
            cur = queue.popleft()
            comp.append(cur)
            for nb in adjacency[cur]:
                if nb not in seen:
                    seen.add(nb)
                    queue.append(nb)
        comps.append(sorted(comp))
    return comps


def _multidegree(multiset, n):
    deg = [0] * n
    for b in multiset:
        for e in b:
            deg[e] += 1
    return tuple(deg)


def toric_fibers(M: Matroid, d, budget=DEFAULT_BUDGET, jobs=1):
    """All degree-d fibers as FiberGraph objects, sorted by multidegree.

    The number of d-multisets of bases is C(#bases + d - 1, d); above
    `budget` the enumeration refuses (TooLarge) rather than thrash.
    jobs > 1 builds fiber graphs in a thread pool; the fiber order (and
    hence all downstream output) is unchanged.
    """
    if d < 1:
        raise InvalidInput(f"degree must be >= 1, got {d}")
    bases = M.bases()
    count = comb(len(bases) + d - 1, d)
    if count > budget:
        raise TooLarge(
            f"{count} degree-{d} monomials exceed the budget {budget}"
        )
    groups = {}
    for ms in itertools.combinations_with_replacement(bases, d):
        groups.setdefault(_multidegree(ms, M.size), []).append(ms)
    bset = {frozenset(b) for b in bases}

    def build(mdeg):
        verts = sorted(groups[mdeg])
        vset = set(verts)
        adjacency = {v: [] for v in verts}
        for v in verts:
            nbs = set()
            for i, j in itertools.combinations(range(d), 2):
                s1, s2 = set(v[i]), set(v[j])
                for x in s1 - s2:
                    for y in s2 - s1:
                        f1 = frozenset(s1 - {x} | {y})
                        f2 = frozenset(s2 - {y} | {x})
                        if f1 in bset and f2 in bset:
                            rest = list(v[:i]) + list(v[i + 1:j]) + list(v[j + 1:])
                            w = tuple(
                                sorted(rest + [tuple(sorted(f1)), tuple(sorted(f2))])
                            )
                            if w != v:
                                nbs.add(w)
            for w in nbs:
                if w not in vset:
                    # double swaps preserve the multidegree; escaping the
                    # fiber means this module miscomputed a move
                    raise InternalInvariantViolation(
                        f"exchange move left the fiber: {w} from {v}"
                    )
                adjacency[v].append(w)
            adjacency[v].sort()
        return FiberGraph(d, mdeg, verts, adjacency)

    order = sorted(groups)
    if jobs and jobs > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=jobs) as ex:
            return list(ex.map(build, order))
    return [build(mdeg) for mdeg in order]


def check_degree(M: Matroid, d, budget=DEFAULT_BUDGET, jobs=1):
    """Connectivity report for all degree-d fibers.

    d >= 3: degrees 1 and 2 say nothing about generators beyond quadrics.
    The verdict is one-directional: all fibers connected certifies no
    degree-d minimal generators; a disconnected fiber is only a candidate
    witness (reported with the lex-least vertex of each component).
    """
    if not isinstance(d, int) or d < 3:
        raise InvalidInput(f"degree must be an integer >= 3, got {d}")
    fibers = toric_fibers(M, d, budget, jobs=jobs)
    witnesses = []
    max_fiber = 0
    total = 0
    for fg in fibers:
        total += len(fg.vertices)
        max_fiber = max(max_fiber, len(fg.vertices))
        if fg.n_components > 1:
            witnesses.append(
                {
                    "multidegree": list(fg.multidegree),
                    "n_components": fg.n_components,
                    "component_representatives": [
                        [list(b) for b in comp[0]] for comp in fg.components
                    ],
                }
            )
    all_connected = not witnesses
    return {
        "degree": d,
        "n_bases": len(M.bases()),
        "n_fibers": len(fibers),
        "n_monomials": total,
        "max_fiber_size": max_fiber,
        "all_connected": all_connected,
        "verdict": (
            f"no minimal generators in degree {d}"
            if all_connected
            else f"candidate witness: disconnected degree-{d} fiber"
        ),
        "witnesses": witnesses,
    }
