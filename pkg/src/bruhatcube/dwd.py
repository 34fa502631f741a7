"""
Dyadically well-distributed permutations of S_{2^m} and their hypercube
coordinates.

A permutation of [2^m] is well distributed when, at every interior level
0 < k < m, each basic k-interval of the domain sends exactly one point
into each basic (m-k)-interval of the range.  The coordinate map reads,
for every complementary block (domain level k1, range level k2,
k1 + k2 = m + 1), whether its two matrix entries sit identity-like (0)
or crossed (1); columns decode back by binary halving, one coordinate
bit per step.

Identification of [2^m] with bit strings puts the first bit most
significant: (a_0, ..., a_{m-1}) <-> sum a_i 2^{m-1-i}.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from random import Random
from typing import Iterator, Optional, Sequence

from .perm import Perm

FULL_ENUMERATION_BIT_CAP = 24


class SizeGuardError(Exception):
    """Raised when an exhaustive operation would explode combinatorially."""


def _log2_degree(n: int) -> int:
    m = n.bit_length() - 1
    if n < 1 or 1 << m != n:
        raise ValueError(f"degree {n} is not a power of two")
    return m


def bit_reverse(value: int, m: int) -> int:
    """Reverse the m-bit binary expansion of value."""
    out = 0
    for _ in range(m):
        out = (out << 1) | (value & 1)
        value >>= 1
    return out


@dataclass(frozen=True)
class BasicInterval:
    """Basic k-interval [c 2^k, (c+1) 2^k - 1] inside [2^m]."""

    m: int
    k: int
    index: int

    @property
    def start(self) -> int:
        return self.index << self.k

    @property
    def stop(self) -> int:
        return (self.index + 1) << self.k

    @property
    def prefix(self) -> tuple[int, ...]:
        """The fixed (m - k)-bit prefix shared by all members."""
        return tuple((self.index >> (self.m - self.k - 1 - i)) & 1
                     for i in range(self.m - self.k))


@dataclass(frozen=True)
class ComplementaryBlock:
    """Domain interval S at level k1, range interval T at level k2 = m+1-k1."""

    S: BasicInterval
    T: BasicInterval

    @property
    def m(self) -> int:
        return self.S.m


def complementary_blocks(m: int) -> list[ComplementaryBlock]:
    """
    All m 2^{m-1} complementary blocks, ordered by (k1, S.index, T.index).
    This order fixes the coordinate indices used everywhere else.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    blocks = []
    for k1 in range(1, m + 1):
        k2 = m + 1 - k1
        for s_idx in range(1 << (m - k1)):
            for t_idx in range(1 << (k1 - 1)):
                blocks.append(ComplementaryBlock(
                    S=BasicInterval(m, k1, s_idx),
                    T=BasicInterval(m, k2, t_idx)))
    return blocks


def block_position(m: int, k1: int, s_idx: int, t_idx: int) -> int:
    """Index of a complementary block in the canonical order."""
    return ((k1 - 1) << (m - 1)) + (s_idx << (k1 - 1)) + t_idx


@dataclass(frozen=True)
class CubeCoordinates:
    """One bit per complementary block, in canonical block order."""

    m: int
    bits: tuple[int, ...]

    def __post_init__(self):
        expected = self.m << (self.m - 1)
        if len(self.bits) != expected:
            raise ValueError(f"need {expected} bits for m={self.m}, "
                             f"got {len(self.bits)}")
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError("bits must be 0 or 1")

    def weight(self) -> int:
        return sum(self.bits)

    def __str__(self) -> str:
        return "".join(map(str, self.bits))


def parse_coordinates(text: str, m: Optional[int] = None) -> CubeCoordinates:
    """Parse a bit string like "0110"; m is inferred from the length."""
    bits = tuple(int(c) for c in text.strip())
    if m is None:
        for cand in range(1, 32):
            if cand << (cand - 1) == len(bits):
                m = cand
                break
        else:
            raise ValueError(f"bit string length {len(bits)} is not m*2^(m-1)")
    return CubeCoordinates(m=m, bits=bits)


def is_dwd(p: Sequence[int]) -> bool:
    """
    Test dyadic well-distribution: every fundamental block at every
    interior level holds exactly one matrix entry.

    Per level k1 the n cells (domain block, range block) receive n points,
    so "exactly one each" is "no cell twice", checked in a single pass.
    """
    n = len(p)
    m = _log2_degree(n)
    for k1 in range(1, m):
        k2 = m - k1
        seen = bytearray(n)
        for i in range(n):
            cell = ((i >> k1) << k1) | (p[i] >> k2)
            if seen[cell]:
                return False
            seen[cell] = 1
    return True


def gen_x(m: int) -> Perm:
    """
    The bit-reversal permutation of S_{2^m}, the bottom of the hypercube.

    >>> gen_x(2)
    (0, 2, 1, 3)
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    return tuple(bit_reverse(a, m) for a in range(1 << m))


def gen_y(m: int) -> Perm:
    """
    The complemented bit-reversal permutation, the top of the hypercube.

    >>> gen_y(2)
    (3, 1, 2, 0)
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    mask = (1 << m) - 1
    return tuple(bit_reverse(a, m) ^ mask for a in range(1 << m))


def _block_points(p: Sequence[int], m: int, k1: int, s_idx: int,
                  t_idx: int) -> tuple[int, int]:
    """The two domain points of S sent into T, in increasing order."""
    k2 = m + 1 - k1
    lo = s_idx << k1
    hits = [i for i in range(lo, lo + (1 << k1)) if p[i] >> k2 == t_idx]
    if len(hits) != 2:
        raise ValueError("block does not hold exactly two points; "
                         "permutation is not well distributed")
    return hits[0], hits[1]


def encode_phi(p: Sequence[int]) -> CubeCoordinates:
    """
    Hypercube coordinates of a well-distributed permutation: for each
    complementary block, 0 when its two points increase together and 1
    when they cross.
    """
    n = len(p)
    m = _log2_degree(n)
    if not is_dwd(p):
        raise ValueError("permutation is not dyadically well distributed")
    bits = []
    for k1 in range(1, m + 1):
        k2 = m + 1 - k1
        for s_idx in range(1 << (m - k1)):
            for t_idx in range(1 << (k1 - 1)):
                a, b = _block_points(p, m, k1, s_idx, t_idx)
                bits.append(0 if p[a] < p[b] else 1)
    return CubeCoordinates(m=m, bits=tuple(bits))


def decode_phi(c: CubeCoordinates) -> Perm:
    """
    Invert the coordinate map by column blocking: for each domain point,
    walk levels k1 = 1..m, using the governing block's bit together with
    the point's k1-th low bit to keep one half of the candidate range.
    """
    m = c.m
    n = 1 << m
    bits = c.bits
    img = []
    for a in range(n):
        t_idx = 0
        for k1 in range(1, m + 1):
            beta = bits[block_position(m, k1, a >> k1, t_idx)]
            half = (a >> (k1 - 1)) & 1
            t_idx = (t_idx << 1) | (half ^ beta)
        img.append(t_idx)
    return tuple(img)


def flip(p: Sequence[int], block: ComplementaryBlock) -> Perm:
    """
    Exchange the images of the two points of a complementary block
    (right multiplication by their transposition).  The result is again
    well distributed and its length moves by exactly 1.
    """
    m = block.m
    if _log2_degree(len(p)) != m:
        raise ValueError("block size does not match permutation degree")
    if not is_dwd(p):
        raise ValueError("permutation is not dyadically well distributed")
    a, b = _block_points(p, m, block.S.k, block.S.index, block.T.index)
    img = list(p)
    img[a], img[b] = img[b], img[a]
    return tuple(img)


def enumerate_dwd(m: int, sample: Optional[int] = None,
                  seed: int = 0) -> Iterator[Perm]:
    """
    Yield well-distributed permutations by decoding coordinate vectors.

    Full mode (sample=None) runs over all 2^{m 2^{m-1}} vectors in
    canonical bit order and is refused above 2^24; sampling mode decodes
    `sample` seeded random vectors instead.
    """
    dim = m << (m - 1)
    if sample is None:
        if dim > FULL_ENUMERATION_BIT_CAP:
            raise SizeGuardError(
                f"full enumeration needs 2^{dim} decodes; "
                f"use sampling for m >= 4")
        for bits in product((0, 1), repeat=dim):
            yield decode_phi(CubeCoordinates(m=m, bits=bits))
    else:
        rng = Random(seed)
        for _ in range(sample):
            bits = tuple(rng.randrange(2) for _ in range(dim))
            yield decode_phi(CubeCoordinates(m=m, bits=bits))
