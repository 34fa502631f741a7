"""
Kazhdan-Lusztig R-polynomials and the d-invariant.

Polynomials in q are tuples of integer coefficients, lowest degree first;
the zero polynomial is the empty tuple.  R_{x,y} is computed by the
descent recursion on the smallest right descent of y; d_{x,y} is the
negated second-highest coefficient of R_{x,y}, and has its own cheaper
recursion plus an independent diamond-closure formulation for
cross-checking on small intervals.
"""
from __future__ import annotations

from itertools import combinations
from typing import Optional

from .bruhat import IntervalPoset, bruhat_leq
from .perm import Perm, length

Poly = tuple[int, ...]

ZERO: Poly = ()
ONE: Poly = (1,)


def poly_normalize(coeffs: list[int]) -> Poly:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def poly_add(a: Poly, b: Poly) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return poly_normalize(out)


def poly_mul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ZERO
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return poly_normalize(out)


def poly_pow(a: Poly, k: int) -> Poly:
    out = ONE
    for _ in range(k):
        out = poly_mul(out, a)
    return out


def format_poly(p: Poly) -> str:
    """
    Human form, highest degree first: "q^4 - 4q^3 + 6q^2 - 4q + 1".

    >>> format_poly((1, -2, 1))
    'q^2 - 2q + 1'
    """
    if not p:
        return "0"
    parts = []
    for d in range(len(p) - 1, -1, -1):
        c = p[d]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if d == 0:
            term = str(mag)
        else:
            qpow = "q" if d == 1 else f"q^{d}"
            term = qpow if mag == 1 else f"{mag}{qpow}"
        parts.append((sign, term))
    first_sign, first_term = parts[0]
    text = ("-" if first_sign == "-" else "") + first_term
    for sign, term in parts[1:]:
        text += f" {sign} {term}"
    return text


QM1: Poly = (-1, 1)  # q - 1


def _smallest_descent(y: Perm) -> int:
    """Smallest 1-indexed i with y(i-1) > y(i); -1 if y is the identity."""
    for i in range(1, len(y)):
        if y[i - 1] > y[i]:
            return i
    return -1


def _right_mult_simple(p: Perm, i: int) -> Perm:
    """p . s_i for 1-indexed i: swap positions i-1 and i."""
    img = list(p)
    img[i - 1], img[i] = img[i], img[i - 1]
    return tuple(img)


def r_polynomial(x: Perm, y: Perm,
                 cache: Optional[dict[tuple[Perm, Perm], Poly]] = None) -> Poly:
    """
    R_{x,y}(q) by the descent recursion: with s the smallest right descent
    of y, R = R_{xs,ys} if xs < x, else q R_{xs,ys} + (q-1) R_{x,ys}.

    A private memo table is used per call unless the caller passes one in.
    """
    if len(x) != len(y):
        raise ValueError(f"degree mismatch: {len(x)} vs {len(y)}")
    if cache is None:
        cache = {}
    return _r_poly(x, y, cache)


def _r_poly(x: Perm, y: Perm, cache: dict) -> Poly:
    if x == y:
        return ONE
    key = (x, y)
    hit = cache.get(key)
    if hit is not None:
        return hit
    if not bruhat_leq(x, y):
        cache[key] = ZERO
        return ZERO
    i = _smallest_descent(y)
    ys = _right_mult_simple(y, i)
    xs = _right_mult_simple(x, i)
    if x[i - 1] > x[i]:  # x s_i < x
        result = _r_poly(xs, ys, cache)
    else:
        result = poly_add(poly_mul((0, 1), _r_poly(xs, ys, cache)),
                          poly_mul(QM1, _r_poly(x, ys, cache)))
    cache[key] = result
    return result


def d_invariant(x: Perm, y: Perm,
                cache: Optional[dict[tuple[Perm, Perm], int]] = None) -> int:
    """
    d_{x,y} by the three-case recursion descending on the smallest right
    descent s of y:

        d_{x,y} = d_{xs,ys}        if xs < x
                = d_{x,ys} + 1     if xs > x and xs is not below ys
                = d_{x,ys}         if xs > x and xs <= ys

    Requires x <= y.
    """
    if not bruhat_leq(x, y):
        raise ValueError("d-invariant undefined: x is not below y")
    if cache is None:
        cache = {}
    return _d_inv(x, y, cache)


def _d_inv(x: Perm, y: Perm, cache: dict) -> int:
    if x == y:
        return 0
    key = (x, y)
    hit = cache.get(key)
    if hit is not None:
        return hit
    i = _smallest_descent(y)
    ys = _right_mult_simple(y, i)
    if x[i - 1] > x[i]:
        xs = _right_mult_simple(x, i)
        result = _d_inv(xs, ys, cache)
    else:
        xs = _right_mult_simple(x, i)
        result = _d_inv(x, ys, cache)
        if not bruhat_leq(xs, ys):
            result += 1
    cache[key] = result
    return result


def d_from_r(x: Perm, y: Perm,
             cache: Optional[dict[tuple[Perm, Perm], Poly]] = None) -> int:
    """
    Read d_{x,y} off the R-polynomial as minus the coefficient of
    q^{l(y)-l(x)-1}; an independent route to d_invariant.
    """
    if not bruhat_leq(x, y):
        raise ValueError("d-invariant undefined: x is not below y")
    k = length(y) - length(x)
    if k == 0:
        return 0
    r = r_polynomial(x, y, cache)
    return -r[k - 1]


def d_via_diamond_closure(iv: IntervalPoset, cap: int = 16) -> int:
    """
    Minimum size of an edge set whose diamond closure is the full Hasse
    diagram of the interval.  The closure repeatedly completes any diamond
    (length-2 subinterval) that already holds two adjacent edges.

    Exhaustive over edge subsets in increasing size, so the edge count is
    capped (default 16).
    """
    edges = sorted(iv.hasse_edges)
    n_edges = len(edges)
    if n_edges > cap:
        raise ValueError(f"{n_edges} Hasse edges exceed cap {cap}")
    if n_edges == 0:
        return 0
    edge_index = {e: i for i, e in enumerate(edges)}

    ups: dict[Perm, list[Perm]] = {}
    for u, v in edges:
        ups.setdefault(u, []).append(v)

    # Each diamond u < {a, b} < v is stored as its 4 edge indices
    # (u->a, u->b, a->v, b->v); any two edges sharing a vertex force
    # the other two.
    diamonds = []
    for u, above in ups.items():
        for a, b in combinations(sorted(above), 2):
            for v in ups.get(a, ()):
                if v in ups.get(b, ()):
                    diamonds.append((edge_index[(u, a)], edge_index[(u, b)],
                                     edge_index[(a, v)], edge_index[(b, v)]))

    full = (1 << n_edges) - 1

    def closure(mask: int) -> int:
        changed = True
        while changed:
            changed = False
            for ua, ub, av, bv in diamonds:
                dmask = (1 << ua) | (1 << ub) | (1 << av) | (1 << bv)
                if mask & dmask == dmask:
                    continue
                have_ua = mask >> ua & 1
                have_ub = mask >> ub & 1
                have_av = mask >> av & 1
                have_bv = mask >> bv & 1
                if ((have_ua and have_ub) or (have_av and have_bv)
                        or (have_ua and have_av) or (have_ub and have_bv)):
                    mask |= dmask
                    changed = True
        return mask

    for size in range(1, n_edges + 1):
        for subset in combinations(range(n_edges), size):
            mask = 0
            for i in subset:
                mask |= 1 << i
            if closure(mask) == full:
                return size
    return n_edges


def reading_lower_bound(n: int) -> int:
    """
    Lower bound n - 1 + floor((n-2)/2) for the largest boolean interval
    rank in S_n.

    >>> reading_lower_bound(16)
    22
    """
    if n < 2:
        raise ValueError("defined for n >= 2")
    return n - 1 + (n - 2) // 2
