"""
Bruhat order on S_n: rank-matrix comparison, covers, interval posets,
boolean-interval detection and Bruhat graphs.

Comparison uses the rank matrix E_w(i, j) = #{k <= j : w(k) >= i};
w is then below v exactly when E_w <= E_v entrywise.  Row i = 0 and
column j = n-1 are forced (j+1 and n-i), so the scan skips them.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .perm import Perm, compose, inverse, length


def ehresmann(p: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    """
    The n x n rank matrix of p: entry (i, j) counts positions k <= j
    with p(k) >= i.

    >>> ehresmann((1, 0))
    ((1, 2), (1, 1))
    """
    n = len(p)
    rows = []
    for i in range(n):
        acc = 0
        row = []
        for j in range(n):
            if p[j] >= i:
                acc += 1
            row.append(acc)
        rows.append(tuple(row))
    return tuple(rows)


def bruhat_leq(x: Sequence[int], y: Sequence[int]) -> bool:
    """
    Decide x <= y in Bruhat order by entrywise rank-matrix comparison,
    exiting on the first violated entry.

    >>> bruhat_leq((0, 2, 1, 3), (3, 1, 2, 0))
    True
    >>> bruhat_leq((1, 0, 2), (0, 2, 1))
    False
    """
    n = len(x)
    if n != len(y):
        raise ValueError(f"degree mismatch: {n} vs {len(y)}")
    # E(i, j) counted column by column; only i >= 1, j <= n-2 carry content.
    for i in range(1, n):
        ex = ey = 0
        for j in range(n - 1):
            if x[j] >= i:
                ex += 1
            if y[j] >= i:
                ey += 1
            if ex > ey:
                return False
    return True


def covers(x: Perm, ceiling: Optional[Perm] = None) -> set[Perm]:
    """
    All y covering x: y = x.t for a transposition t with l(y) = l(x) + 1,
    optionally restricted to y <= ceiling.

    Right multiplication by the transposition of positions (i, j) swaps
    x(i) and x(j); it is a cover exactly when x(i) < x(j) with no value
    between them at an intermediate position.
    """
    n = len(x)
    result = set()
    for i in range(n):
        for j in range(i + 1, n):
            if x[i] >= x[j]:
                continue
            if any(x[i] < x[k] < x[j] for k in range(i + 1, j)):
                continue
            img = list(x)
            img[i], img[j] = img[j], img[i]
            y = tuple(img)
            if ceiling is None or bruhat_leq(y, ceiling):
                result.add(y)
    return result


def cocovers(y: Perm, floor: Optional[Perm] = None) -> set[Perm]:
    """All x covered by y, optionally restricted to x >= floor."""
    n = len(y)
    result = set()
    for i in range(n):
        for j in range(i + 1, n):
            if y[i] <= y[j]:
                continue
            if any(y[j] < y[k] < y[i] for k in range(i + 1, j)):
                continue
            img = list(y)
            img[i], img[j] = img[j], img[i]
            x = tuple(img)
            if floor is None or bruhat_leq(floor, x):
                result.add(x)
    return result


@dataclass(frozen=True)
class IntervalPoset:
    """A Bruhat interval [bottom, top] with its Hasse diagram."""

    bottom: Perm
    top: Perm
    elements: tuple[Perm, ...]
    hasse_edges: frozenset[tuple[Perm, Perm]]

    def rank(self, z: Perm) -> int:
        return length(z) - length(self.bottom)

    @property
    def rank_length(self) -> int:
        return length(self.top) - length(self.bottom)

    def __len__(self) -> int:
        return len(self.elements)


def interval(x: Perm, y: Perm) -> IntervalPoset:
    """
    Materialize [x, y] = {z : x <= z <= y} by upward cover-BFS from x,
    pruning candidates with z <= y.

    Raises ValueError when x is not below y.
    """
    if not bruhat_leq(x, y):
        raise ValueError("empty interval: bottom is not below top")
    seen = {x}
    frontier = [x]
    edges = set()
    while frontier:
        nxt = []
        for u in frontier:
            for v in covers(u, ceiling=y):
                edges.add((u, v))
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
    elements = tuple(sorted(seen, key=lambda z: (length(z), z)))
    return IntervalPoset(bottom=x, top=y, elements=elements,
                         hasse_edges=frozenset(edges))


def is_boolean_interval(x: Perm, y: Perm) -> Optional[int]:
    """
    Return k = l(y) - l(x) when [x, y] is poset-isomorphic to the boolean
    lattice B_k, else None.

    The certificate maps each z to its atom set S(z) = {atoms a <= z};
    with |[x, y]| = 2^k, exactly k atoms, |S(z)| = rank(z) and injectivity,
    checking S(z1) <= S(z2) <=> z1 <= z2 on all pairs certifies the
    isomorphism in both directions.
    """
    if not bruhat_leq(x, y):
        raise ValueError("not an interval: bottom is not below top")
    k = length(y) - length(x)
    iv = interval(x, y)
    if len(iv.elements) != 2 ** k:
        return None
    atoms = sorted(covers(x, ceiling=y))
    if len(atoms) != k:
        return None
    lx = length(x)
    masks = []
    for z in iv.elements:
        mask = 0
        for bit, a in enumerate(atoms):
            if bruhat_leq(a, z):
                mask |= 1 << bit
        if mask.bit_count() != length(z) - lx:
            return None
        masks.append(mask)
    if len(set(masks)) != len(masks):
        return None
    for i, z1 in enumerate(iv.elements):
        for j, z2 in enumerate(iv.elements):
            if (masks[i] & ~masks[j] == 0) != bruhat_leq(z1, z2):
                return None
    return k


@dataclass(frozen=True)
class BruhatGraph:
    """
    Directed reflection graph of an interval: edge u -> v whenever
    u <= v and u = t.v for a transposition t (left multiplication),
    labelled by t as a sorted value pair.
    """

    vertices: tuple[Perm, ...]
    edges: tuple[tuple[Perm, Perm, tuple[int, int]], ...]


def bruhat_graph(iv: IntervalPoset) -> BruhatGraph:
    """
    Build the Bruhat graph on iv.elements.  u = t.v holds exactly when
    u.v^{-1} is a transposition, which we read off directly.
    """
    edges = []
    for v in iv.elements:
        vinv = inverse(v)
        for u in iv.elements:
            if length(u) >= length(v):
                continue
            t = compose(u, vinv)
            moved = [i for i in range(len(t)) if t[i] != i]
            if len(moved) != 2:
                continue
            if bruhat_leq(u, v):
                a, b = moved
                edges.append((u, v, (a, b)))
    edges.sort()
    return BruhatGraph(vertices=iv.elements, edges=tuple(edges))


def interval_json(iv: IntervalPoset) -> dict:
    """JSON form: one-line element strings plus Hasse edges as index pairs."""
    index = {z: i for i, z in enumerate(iv.elements)}
    hasse = sorted([index[u], index[v]] for u, v in iv.hasse_edges)
    return {
        "bottom": " ".join(map(str, iv.bottom)),
        "top": " ".join(map(str, iv.top)),
        "elements": [" ".join(map(str, z)) for z in iv.elements],
        "hasse": hasse,
    }
