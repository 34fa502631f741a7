"""
Permutations of [n] = {0, ..., n-1} in one-line notation.

A permutation is any sequence ``p`` with ``p[i] = p(i)``; functions return
tuples, which are hashable and safe to share between workers.  Composition
follows ``compose(p, q)(i) = p(q(i))``, so a word of simple reflections
multiplies left-to-right by swapping adjacent *positions*.
"""
from __future__ import annotations

from typing import Iterable, Sequence

Perm = tuple[int, ...]


def is_permutation(seq: Sequence[int]) -> bool:
    """
    Check that seq is a permutation of {0, ..., len(seq)-1}.

    >>> [is_permutation(s) for s in [(0, 1), (1, 1), (0, 2), (2, 1, 0)]]
    [True, False, False, True]
    """
    n = len(seq)
    seen = [False] * n
    for v in seq:
        if not 0 <= v < n or seen[v]:
            return False
        seen[v] = True
    return True


def identity(n: int) -> Perm:
    return tuple(range(n))


def longest_element(n: int) -> Perm:
    """
    The order-reversing permutation i -> n-1-i, the longest element of S_n.

    >>> longest_element(4)
    (3, 2, 1, 0)
    """
    return tuple(n - 1 - i for i in range(n))


def transposition(n: int, a: int, b: int) -> Perm:
    """The transposition exchanging a and b inside S_n (0-indexed)."""
    if not (0 <= a < n and 0 <= b < n and a != b):
        raise ValueError(f"invalid transposition ({a},{b}) in S_{n}")
    img = list(range(n))
    img[a], img[b] = img[b], img[a]
    return tuple(img)


def compose(p: Sequence[int], q: Sequence[int]) -> Perm:
    """
    Compose permutations: compose(p, q)(i) = p(q(i)).

    >>> compose((1, 2, 0), (1, 2, 0))
    (2, 0, 1)
    """
    if len(p) != len(q):
        raise ValueError(f"degree mismatch: {len(p)} vs {len(q)}")
    return tuple(p[v] for v in q)


def inverse(p: Sequence[int]) -> Perm:
    """
    >>> inverse((1, 2, 0))
    (2, 0, 1)
    """
    inv = [0] * len(p)
    for i, v in enumerate(p):
        inv[v] = i
    return tuple(inv)


def length(p: Sequence[int]) -> int:
    """
    Number of inversions: pairs i < j with p(i) > p(j).

    >>> length((3, 2, 1, 0))
    6
    """
    n = len(p)
    return sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])


def from_word(n: int, letters: Iterable[int]) -> Perm:
    """
    Product of simple reflections s_{l} for l in letters, multiplied
    left-to-right.  Letters are 1-indexed: s_l swaps positions l-1 and l.

    >>> from_word(3, [1, 2])
    (1, 2, 0)
    """
    img = list(range(n))
    for l in letters:
        if not 1 <= l <= n - 1:
            raise ValueError(f"letter {l} outside 1..{n - 1}")
        img[l - 1], img[l] = img[l], img[l - 1]
    return tuple(img)


def from_cycles(n: int, cycles: Iterable[tuple[int, int]]) -> Perm:
    """
    Product of transpositions given as 1-indexed pairs (a, b), multiplied
    left-to-right; (a, b) exchanges the values a-1 and b-1.

    >>> from_cycles(4, [(1, 3)])
    (2, 1, 0, 3)
    """
    result = identity(n)
    for a, b in cycles:
        if not (1 <= a <= n and 1 <= b <= n):
            raise ValueError(f"cycle entry ({a},{b}) outside 1..{n}")
        result = compose(result, transposition(n, a - 1, b - 1))
    return result


def parse_perm(text: str) -> Perm:
    """
    Parse a space- or comma-separated one-line form, e.g. "0 2 1 3".

    Raises ValueError naming the first offending token.
    """
    tokens = text.replace(",", " ").split()
    if not tokens:
        raise ValueError("empty permutation text")
    img = []
    for tok in tokens:
        try:
            img.append(int(tok))
        except ValueError:
            raise ValueError(f"bad permutation token {tok!r}") from None
    p = tuple(img)
    if not is_permutation(p):
        raise ValueError(f"not a permutation of 0..{len(p) - 1}: {text!r}")
    return p


def format_perm(p: Sequence[int]) -> str:
    return " ".join(str(v) for v in p)
