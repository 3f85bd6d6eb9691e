"""Exhaustive enumeration of small connected Brauer graphs.

A rotation system on k edges is a permutation of the 2k half-edges whose
cycles are the vertices with their cyclic order; the end-swap involution
recovers the graph.  Enumerating all permutations and keeping one
representative per isomorphism class (canonical form by traversal from
every starting half-edge) yields every connected graph with every
rotation system, loops and multiple edges included.
"""
from __future__ import annotations

from itertools import permutations, product
from typing import Iterator

from .graph import BrauerGraph, HalfEdge


def _iota(d: int) -> int:
    return d ^ 1  # darts 2i, 2i+1 are the two ends of edge i


def _connected(sigma: tuple[int, ...]) -> bool:
    n = len(sigma)
    seen = {0}
    stack = [0]
    while stack:
        d = stack.pop()
        for nd in (sigma[d], _iota(d)):
            if nd not in seen:
                seen.add(nd)
                stack.append(nd)
    return len(seen) == n


def _canonical_key(sigma: tuple[int, ...]) -> tuple[int, ...]:
    """Minimal traversal encoding over all starting half-edges."""
    n = len(sigma)
    best = None
    for start in range(n):
        label = {start: 0}
        order = [start]
        i = 0
        while i < len(order):
            d = order[i]
            for nd in (sigma[d], _iota(d)):
                if nd not in label:
                    label[nd] = len(order)
                    order.append(nd)
            i += 1
        enc = []
        for d in order:
            enc.append(label[sigma[d]])
            enc.append(label[_iota(d)])
        enc = tuple(enc)
        if best is None or enc < best:
            best = enc
    return best


def rotation_systems(n_edges: int) -> Iterator[tuple[int, ...]]:
    """One permutation per isomorphism class of connected rotation systems."""
    darts = list(range(2 * n_edges))
    seen: set[tuple[int, ...]] = set()
    for perm in permutations(darts):
        if not _connected(perm):
            continue
        key = _canonical_key(perm)
        if key in seen:
            continue
        seen.add(key)
        yield perm


def _graph_from_sigma(sigma: tuple[int, ...],
                      multiplicities: tuple[int, ...]) -> BrauerGraph:
    n_edges = len(sigma) // 2
    # vertices = cycles of sigma
    seen: set[int] = set()
    cycles: list[list[int]] = []
    for d in range(len(sigma)):
        if d in seen:
            continue
        cyc = [d]
        seen.add(d)
        nd = sigma[d]
        while nd != d:
            cyc.append(nd)
            seen.add(nd)
            nd = sigma[nd]
        cycles.append(cyc)
    vertex_of_dart = {}
    for vi, cyc in enumerate(cycles):
        for d in cyc:
            vertex_of_dart[d] = f"v{vi}"
    vertices = [(f"v{vi}", multiplicities[vi]) for vi in range(len(cycles))]
    edges = [
        (f"e{i}", (vertex_of_dart[2 * i], vertex_of_dart[2 * i + 1]))
        for i in range(n_edges)
    ]
    rotation = {
        f"v{vi}": [HalfEdge(f"e{d // 2}", d % 2) for d in cyc]
        for vi, cyc in enumerate(cycles)
    }
    return BrauerGraph(vertices, edges, rotation)


def census(max_edges: int, max_multiplicity: int) -> Iterator[BrauerGraph]:
    """All connected Brauer graphs with at most ``max_edges`` edges, every
    rotation system up to isomorphism, and every multiplicity pattern up to
    ``max_multiplicity``."""
    for k in range(1, max_edges + 1):
        for sigma in rotation_systems(k):
            n_vertices = len({_cycle_id(sigma, d) for d in range(2 * k)})
            for mults in product(range(1, max_multiplicity + 1), repeat=n_vertices):
                yield _graph_from_sigma(sigma, mults)


def _cycle_id(sigma: tuple[int, ...], d: int) -> int:
    cur = d
    best = d
    while True:
        cur = sigma[cur]
        if cur == d:
            return best
        best = min(best, cur)
