"""
Base-t generalization: t-adically well-distributed permutations of
S_{t^m}, their S_t-valued block coordinates, (0,m,2)-net export and
verification, digital nets from the unitriangular double coset, and
generalized Sudoku validation.

Digit strings put the first digit most significant:
(a_0, ..., a_{m-1}) <-> sum a_i t^{m-1-i}.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations as iter_permutations
from itertools import product
from typing import Optional, Sequence

from .bruhat import bruhat_leq
from .dwd import SizeGuardError
from .perm import Perm, compose, identity, inverse, is_permutation

BRUTE_FORCE_DEGREE_CAP = 9
DIGITAL_COSET_M_CAP = 4


def _check_degree(n: int, t: int, m: int) -> None:
    if t < 2 or m < 1:
        raise ValueError("need t >= 2 and m >= 1")
    if n != t ** m:
        raise ValueError(f"degree {n} is not {t}^{m}")


def digits_of(value: int, t: int, m: int) -> tuple[int, ...]:
    """Base-t digits of value, most significant first."""
    out = []
    for _ in range(m):
        out.append(value % t)
        value //= t
    return tuple(reversed(out))


def value_of(digits: Sequence[int], t: int) -> int:
    v = 0
    for d in digits:
        v = v * t + d
    return v


def is_dwd_t(p: Sequence[int], t: int, m: int) -> bool:
    """
    Every basic t-adic k1-interval of the domain must send exactly one
    point into every basic k2-interval of the range, for k1 + k2 = m.
    Levels 0 and m hold automatically.
    """
    _check_degree(len(p), t, m)
    for k1 in range(1, m):
        dom_size = t ** k1
        ran_size = t ** (m - k1)
        seen = bytearray(len(p))
        for i, v in enumerate(p):
            cell = (i // dom_size) * dom_size + v // ran_size
            if seen[cell]:
                return False
            seen[cell] = 1
    return True


def gen_x_t(t: int, m: int) -> Perm:
    """
    Base-t digit reversal, the bottom of the t-adic interval.

    >>> gen_x_t(3, 2)
    (0, 3, 6, 1, 4, 7, 2, 5, 8)
    """
    if t < 2 or m < 1:
        raise ValueError("need t >= 2 and m >= 1")
    return tuple(value_of(digits_of(a, t, m)[::-1], t) for a in range(t ** m))


def gen_y_t(t: int, m: int) -> Perm:
    """
    Complemented digit reversal, the top of the t-adic interval.

    >>> gen_y_t(3, 2)
    (8, 5, 2, 7, 4, 1, 6, 3, 0)
    """
    if t < 2 or m < 1:
        raise ValueError("need t >= 2 and m >= 1")
    return tuple(value_of([t - 1 - d for d in digits_of(a, t, m)[::-1]], t)
                 for a in range(t ** m))


def t_block_position(t: int, m: int, k1: int, s_idx: int, t_idx: int) -> int:
    """Canonical index of the complementary block (k1, s_idx, t_idx)."""
    return (k1 - 1) * t ** (m - 1) + s_idx * t ** (k1 - 1) + t_idx


@dataclass(frozen=True)
class TCubeCoordinates:
    """One S_t label per t-adic complementary block, canonical order."""

    t: int
    m: int
    labels: tuple[Perm, ...]

    def __post_init__(self):
        expected = self.m * self.t ** (self.m - 1)
        if len(self.labels) != expected:
            raise ValueError(f"need {expected} labels, got {len(self.labels)}")
        for lab in self.labels:
            if len(lab) != self.t or not is_permutation(lab):
                raise ValueError(f"label {lab} is not a permutation of "
                                 f"degree {self.t}")


def encode_phi_t(p: Sequence[int], t: int, m: int) -> TCubeCoordinates:
    """
    Label each complementary block (domain level k1, range level k2,
    k1 + k2 = m + 1) by the S_t pattern of its t points: the point in
    domain sub-interval r lands in range sub-interval label(r).
    """
    _check_degree(len(p), t, m)
    if not is_dwd_t(p, t, m):
        raise ValueError("permutation is not t-adically well distributed")
    labels = []
    for k1 in range(1, m + 1):
        k2 = m + 1 - k1
        dom_size = t ** k1
        sub_dom = t ** (k1 - 1)
        ran_size = t ** k2
        sub_ran = t ** (k2 - 1)
        for s_idx in range(t ** (m - k1)):
            for t_idx in range(t ** (k1 - 1)):
                lo = s_idx * dom_size
                hits = [i for i in range(lo, lo + dom_size)
                        if p[i] // ran_size == t_idx]
                label = [0] * t
                for i in hits:
                    label[(i - lo) // sub_dom] = (p[i] - t_idx * ran_size) // sub_ran
                lab = tuple(label)
                if len(hits) != t or not is_permutation(lab):
                    raise ValueError("block pattern is not a permutation")
                labels.append(lab)
    return TCubeCoordinates(t=t, m=m, labels=tuple(labels))


def decode_phi_t(c: TCubeCoordinates) -> Perm:
    """
    Invert the labelling column by column: at step k1 the governing
    block's label sends the point's k1-th low digit to the surviving
    range sub-interval.
    """
    t, m = c.t, c.m
    n = t ** m
    img = []
    for a in range(n):
        t_idx = 0
        for k1 in range(1, m + 1):
            s_idx = a // t ** k1
            label = c.labels[t_block_position(t, m, k1, s_idx, t_idx)]
            digit = (a // t ** (k1 - 1)) % t
            t_idx = t_idx * t + label[digit]
        img.append(t_idx)
    return tuple(img)


def count_dwd_t(t: int, m: int, force: bool = False) -> int:
    """
    Count t-adically well-distributed permutations by brute force over
    all of S_{t^m}.  Refused above degree 9 unless forced.
    """
    n = t ** m
    if n > BRUTE_FORCE_DEGREE_CAP and not force:
        raise SizeGuardError(f"brute force over S_{n} refused; "
                             f"cap is degree {BRUTE_FORCE_DEGREE_CAP}")
    return sum(1 for p in iter_permutations(range(n)) if is_dwd_t(p, t, m))


@dataclass(frozen=True)
class NetPointSet:
    """Integer point set {(j, p(j))}; divide by t^m for the unit square."""

    t: int
    m: int
    points: tuple[tuple[int, int], ...]


def net_points(p: Sequence[int], t: int, m: int) -> NetPointSet:
    _check_degree(len(p), t, m)
    return NetPointSet(t=t, m=m,
                       points=tuple((j, p[j]) for j in range(len(p))))


def is_net(pts: NetPointSet) -> bool:
    """
    Verify the net property directly on the point set: every fundamental
    box at every level k1 + k2 = m holds exactly one point.  This stays
    independent of the permutation-side test is_dwd_t.
    """
    t, m = pts.t, pts.m
    n = t ** m
    if len(pts.points) != n:
        raise ValueError(f"need exactly {n} points")
    if sorted(x for x, _ in pts.points) != list(range(n)):
        raise ValueError("x-coordinates are not a complete residue set")
    if sorted(y for _, y in pts.points) != list(range(n)):
        raise ValueError("y-coordinates are not a complete residue set")
    for k1 in range(m + 1):
        xs = t ** k1
        ys = t ** (m - k1)
        counts = bytearray(n)
        for x, y in pts.points:
            # box (x // xs, y // ys); there are xs range boxes per domain box
            cell = (x // xs) * xs + y // ys
            if counts[cell]:
                return False
            counts[cell] = 1
    return True


def format_net(pts: NetPointSet) -> str:
    lines = [f"# net t={pts.t} m={pts.m}"]
    for x, y in sorted(pts.points):
        lines.append(f"{x} {y}")
    return "\n".join(lines) + "\n"


def parse_net(text: str) -> NetPointSet:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("#"):
        raise ValueError("missing net header line '# net t=<t> m=<m>'")
    header = lines[0].lstrip("#").split()
    fields = dict(part.split("=") for part in header if "=" in part)
    try:
        t, m = int(fields["t"]), int(fields["m"])
    except (KeyError, ValueError):
        raise ValueError(f"bad net header: {lines[0]!r}") from None
    points = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"bad net point line: {ln!r}")
        points.append((int(parts[0]), int(parts[1])))
    return NetPointSet(t=t, m=m, points=tuple(points))


def _matrix_perm(rows: Sequence[int], m: int) -> Perm:
    """
    Permutation of [2^m] induced by an invertible matrix over GF(2),
    given as row bitmasks.  Digit i multiplies 2^i, so an
    upper-triangular row r reads only digits of significance >= r and
    the matrix then maps every basic interval onto a basic interval.
    """
    n = 1 << m
    img = []
    for v in range(n):
        w = 0
        for r in range(m):
            acc = rows[r] & v
            w |= (acc.bit_count() & 1) << r
        img.append(w)
    return tuple(img)


def unitriangular_group(m: int) -> list[Perm]:
    """All upper-unitriangular m x m matrices over GF(2), as permutations."""
    free = [(r, c) for r in range(m) for c in range(r + 1, m)]
    perms = []
    for choice in product((0, 1), repeat=len(free)):
        rows = [1 << r for r in range(m)]
        for (r, c), bit in zip(free, choice):
            if bit:
                rows[r] |= 1 << c
        perms.append(_matrix_perm(rows, m))
    return perms


def digital_net_coset(m: int, include_translations: bool = False,
                      force: bool = False) -> list[Perm]:
    """
    The double coset B x_m B of the bit-reversal permutation, B being the
    unitriangular group acting linearly on digit strings; these are the
    digital nets.  With include_translations the affine group B (x) GF(2)^m
    is used on both sides instead.
    """
    if m > DIGITAL_COSET_M_CAP and not force:
        raise SizeGuardError(f"digital coset refused for m={m}; "
                             f"cap is m={DIGITAL_COSET_M_CAP}")
    from .dwd import gen_x

    group = unitriangular_group(m)
    if include_translations:
        n = 1 << m
        group = [tuple(p[v] ^ b for v in range(n))
                 for p in group for b in range(n)]
    x = gen_x(m)
    left = [compose(g, x) for g in group]
    coset = {compose(lx, g) for lx in left for g in group}
    return sorted(coset)


@dataclass(frozen=True)
class SudokuGrid:
    """t^m x t^m grid of symbols 1..t^m, rows listed top to bottom."""

    t: int
    m: int
    cells: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = self.t ** self.m
        if len(self.cells) != n or any(len(r) != n for r in self.cells):
            raise ValueError(f"grid must be {n} x {n}")


def parse_sudoku(text: str, t: int, m: int) -> SudokuGrid:
    rows = []
    for ln in text.splitlines():
        ln = ln.strip()
        if ln:
            rows.append(tuple(int(tok) for tok in ln.split()))
    return SudokuGrid(t=t, m=m, cells=tuple(rows))


def sudoku_symbol_perms(g: SudokuGrid) -> list[Optional[Perm]]:
    """
    The position permutation of each symbol v: row r -> column of v in
    row r.  None when a symbol repeats within a column (not a bijection).
    Raises when some row is not a bijection of the symbols.
    """
    n = g.t ** g.m
    cols: list[list[int]] = [[-1] * n for _ in range(n)]
    for r, row in enumerate(g.cells):
        if sorted(row) != list(range(1, n + 1)):
            raise ValueError(f"row {r} is not a bijection of 1..{n}")
        for c, v in enumerate(row):
            cols[v - 1][r] = c
    return [tuple(col) if is_permutation(col) else None for col in cols]


def validate_sudoku(g: SudokuGrid) -> bool:
    """
    A grid is a generalized Sudoku when every symbol's position
    permutation is t-adically well distributed and the ratio of any two
    of them is fixed-point free.
    """
    perms = sudoku_symbol_perms(g)
    if any(p is None for p in perms):
        return False
    for p in perms:
        if not is_dwd_t(p, g.t, g.m):
            return False
    for i in range(len(perms)):
        inv = inverse(perms[i])
        for j in range(i + 1, len(perms)):
            ratio = compose(perms[j], inv)
            if any(ratio[k] == k for k in range(len(ratio))):
                return False
    return True
