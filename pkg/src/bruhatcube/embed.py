"""
Geometric embeddings of Bruhat graphs and the good-embedding predicate:
vertices on a common sphere, every rank-2 coset picture flat.

The geometric embedding sends u to the point whose i-th coordinate is
u^{-1}(i), i.e. u acting on the base point rho = (0, 1, ..., n-1) by
coordinate permutation.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

import numpy as np

from .bruhat import BruhatGraph, IntervalPoset, bruhat_graph
from .perm import Perm, compose, inverse


@dataclass(frozen=True)
class EmbeddedGraph:
    graph: BruhatGraph
    coordinates: dict[Perm, tuple[float, ...]]
    rho: tuple[int, ...]


def geometric_embedding(iv: IntervalPoset) -> EmbeddedGraph:
    """
    Embed the interval's Bruhat graph: u maps to u(rho), the base point
    with coordinates permuted by u.
    """
    n = len(iv.bottom)
    rho = tuple(range(n))
    coords = {u: tuple(float(v) for v in inverse(u)) for u in iv.elements}
    return EmbeddedGraph(graph=bruhat_graph(iv), coordinates=coords, rho=rho)


def _rank2_subgroups(n: int) -> list[list[Perm]]:
    """Rank-2 reflection subgroups: the S_3 on each 3-subset of values
    and the Klein group of each pair of disjoint transpositions."""
    subgroups: list[list[Perm]] = []
    for triple in combinations(range(n), 3):
        group = []
        for img in ((0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0),
                    (2, 0, 1), (2, 1, 0)):
            perm = list(range(n))
            for pos, val in zip(triple, img):
                perm[pos] = triple[val]
            group.append(tuple(perm))
        subgroups.append(group)
    for quad in combinations(range(n), 4):
        a, b, c, d = quad
        for (p1, p2) in (((a, b), (c, d)), ((a, c), (b, d)), ((a, d), (b, c))):
            group = [tuple(range(n))]
            for pairs in ((p1,), (p2,), (p1, p2)):
                perm = list(range(n))
                for u, v in pairs:
                    perm[u], perm[v] = perm[v], perm[u]
                group.append(tuple(perm))
            subgroups.append(group)
    return subgroups


def _coset_pieces(elements: Iterable[Perm]) -> list[frozenset[Perm]]:
    elements = list(elements)
    element_set = set(elements)
    n = len(elements[0])
    found: set[frozenset[Perm]] = set()
    out: list[frozenset[Perm]] = []
    for group in _rank2_subgroups(n):
        done: set[Perm] = set()
        for u in elements:
            if u in done:
                continue
            coset = {compose(u, w) for w in group}
            done |= coset
            hit = frozenset(coset & element_set)
            if len(hit) >= 2 and hit not in found:
                found.add(hit)
                out.append(hit)
    return out


def rank2_cosets(iv: IntervalPoset) -> list[frozenset[Perm]]:
    """
    Intersections of the interval with cosets of rank-2 reflection
    subgroups, of size at least 2, deduplicated.
    """
    return _coset_pieces(iv.elements)


def _sphere_deviation(points: np.ndarray) -> float:
    """
    Smallest-residual witness for "the points lie on a common sphere":
    solve 2 <p, c> + beta = |p|^2 for (c, beta) in least squares and
    return the max deviation of point-to-centre distances, scaled by
    the mean distance.
    """
    npts = points.shape[0]
    if npts <= 2:
        return 0.0
    rhs = (points ** 2).sum(axis=1)
    system = np.hstack([2.0 * points, np.ones((npts, 1))])
    sol, *_ = np.linalg.lstsq(system, rhs, rcond=None)
    center = sol[:-1]
    dists = np.linalg.norm(points - center, axis=1)
    mean = dists.mean()
    return float(np.max(np.abs(dists - mean)) / max(mean, 1.0))


def _planarity_defect(points: np.ndarray) -> float:
    """Third singular value of the centered points, relative to the first."""
    centered = points - points.mean(axis=0)
    svals = np.linalg.svd(centered, compute_uv=False)
    if len(svals) < 3 or svals[0] == 0.0:
        return 0.0
    return float(svals[2] / svals[0])


def check_good_embedding(eg: EmbeddedGraph, tol: float = 1e-9) -> bool:
    """
    True when (a) some sphere carries all vertex images within tol and
    (b) every rank-2 coset picture with >= 4 points is flat within tol
    (relative third singular value).
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    verts = list(eg.graph.vertices)
    points = np.array([eg.coordinates[u] for u in verts], dtype=float)
    if _sphere_deviation(points) > tol:
        return False
    for coset in _coset_pieces(verts):
        if len(coset) < 4:
            continue
        pts = np.array([eg.coordinates[u] for u in sorted(coset)], dtype=float)
        if _planarity_defect(pts) > tol:
            return False
    return True


def embedding_json(eg: EmbeddedGraph) -> dict:
    verts = list(eg.graph.vertices)
    index = {u: i for i, u in enumerate(verts)}
    return {
        "vertices": [" ".join(map(str, u)) for u in verts],
        "points": [list(eg.coordinates[u]) for u in verts],
        "edges": [[index[u], index[v], f"({a},{b})"]
                  for u, v, (a, b) in eg.graph.edges],
    }
