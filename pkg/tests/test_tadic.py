import random
from itertools import permutations

import pytest

from bruhatcube.perm import identity, length
from bruhatcube.bruhat import bruhat_leq
from bruhatcube.dwd import SizeGuardError, bit_reverse, gen_x, gen_y, is_dwd
from bruhatcube.tadic import (NetPointSet, SudokuGrid, TCubeCoordinates,
                              count_dwd_t, decode_phi_t, digital_net_coset,
                              encode_phi_t, format_net, gen_x_t, gen_y_t,
                              is_dwd_t, is_net, net_points, parse_net,
                              parse_sudoku, sudoku_symbol_perms,
                              t_block_position, validate_sudoku)

# transcription of the published 8 x 8 two-adic grid, rows top to bottom
SUDOKU_8 = """
1 4 5 6 2 3 8 7
2 3 8 7 5 6 1 4
5 6 1 4 8 7 2 3
8 7 3 2 1 4 5 6
4 1 6 5 3 2 7 8
3 2 7 8 6 5 4 1
6 5 4 1 7 8 3 2
7 8 2 3 4 1 6 5
"""

# a solved standard Sudoku
SUDOKU_9 = """
5 3 4 6 7 8 9 1 2
6 7 2 1 9 5 3 4 8
1 9 8 3 4 2 5 6 7
8 5 9 7 6 1 4 2 3
4 2 6 8 5 3 7 9 1
7 1 3 9 2 4 8 5 6
9 6 1 5 3 7 2 8 4
2 8 7 4 1 9 6 3 5
3 4 5 2 8 6 1 7 9
"""

# cyclic latin square: rows and columns fine, boxes violated
LATIN_9 = "\n".join(" ".join(str((r + c) % 9 + 1) for c in range(9))
                    for r in range(9))

EXAMPLE_9 = (4, 1, 8, 2, 7, 3, 0, 5, 6)  # transcribed 3-adic matrix figure


def test_specialization_to_dyadic():
    for p in permutations(range(4)):
        assert is_dwd_t(p, 2, 2) == is_dwd(p)


def test_degree_checks():
    with pytest.raises(ValueError):
        is_dwd_t(identity(8), 3, 2)
    with pytest.raises(ValueError):
        is_dwd_t(identity(6), 2, 2)


def test_published_nine_by_nine_matrix():
    assert is_dwd_t(EXAMPLE_9, 3, 2)
    assert not is_dwd_t(identity(9), 3, 2)


def test_generators():
    assert gen_x_t(3, 1) == (0, 1, 2)
    assert gen_y_t(3, 1) == (2, 1, 0)
    assert gen_x_t(3, 2) == (0, 3, 6, 1, 4, 7, 2, 5, 8)
    assert gen_y_t(3, 2) == (8, 5, 2, 7, 4, 1, 6, 3, 0)
    assert gen_x_t(2, 3) == gen_x(3)
    assert gen_y_t(2, 3) == gen_y(3)


def test_encode_matches_figure_labels():
    coords = encode_phi_t(EXAMPLE_9, 3, 2)
    # column labels sigma_1..sigma_3 then row labels tau_1..tau_3,
    # written 0-indexed
    assert coords.labels == ((1, 0, 2), (0, 2, 1), (0, 1, 2),
                             (1, 2, 0), (1, 0, 2), (2, 1, 0))


def test_encode_of_digit_reversal_is_all_identity():
    coords = encode_phi_t(gen_x_t(3, 2), 3, 2)
    assert all(lab == (0, 1, 2) for lab in coords.labels)
    coords_top = encode_phi_t(gen_y_t(3, 2), 3, 2)
    assert all(lab == (2, 1, 0) for lab in coords_top.labels)


def test_covering_move_changes_one_label_and_length():
    coords = encode_phi_t(EXAMPLE_9, 3, 2)
    labels = list(coords.labels)
    pos = t_block_position(3, 2, 1, 2, 0)
    assert labels[pos] == (0, 1, 2)
    labels[pos] = (1, 0, 2)
    moved = decode_phi_t(TCubeCoordinates(3, 2, tuple(labels)))
    assert moved == (4, 1, 8, 2, 7, 3, 5, 0, 6)
    assert length(moved) == length(EXAMPLE_9) + 1


def test_roundtrip_seeded_random_labels():
    rng = random.Random(31)
    s3 = list(permutations(range(3)))
    for _ in range(1000):
        labels = tuple(s3[rng.randrange(6)] for _ in range(6))
        p = decode_phi_t(TCubeCoordinates(3, 2, labels))
        assert is_dwd_t(p, 3, 2)
        assert encode_phi_t(p, 3, 2).labels == labels


def test_count_small():
    assert count_dwd_t(3, 1) == 6
    assert count_dwd_t(2, 2) == 16
    with pytest.raises(SizeGuardError):
        count_dwd_t(2, 4)


def test_order_isomorphism_sampled_t3():
    rng = random.Random(41)
    s3 = list(permutations(range(3)))
    leq3 = {(a, b): bruhat_leq(a, b) for a in s3 for b in s3}
    for _ in range(1000):
        l1 = tuple(s3[rng.randrange(6)] for _ in range(6))
        l2 = tuple(s3[rng.randrange(6)] for _ in range(6))
        p1 = decode_phi_t(TCubeCoordinates(3, 2, l1))
        p2 = decode_phi_t(TCubeCoordinates(3, 2, l2))
        compwise = all(leq3[(a, b)] for a, b in zip(l1, l2))
        assert compwise == bruhat_leq(p1, p2)


def test_net_points_and_check():
    pts = net_points(gen_x(4), 2, 4)
    assert is_net(pts)
    assert all(y == bit_reverse(x, 4) for x, y in pts.points)
    assert not is_net(net_points(identity(4), 2, 2))


def test_net_matches_dwd_on_s4():
    for p in permutations(range(4)):
        assert is_net(net_points(p, 2, 2)) == is_dwd(p)


def test_net_file_roundtrip():
    pts = net_points(gen_x(3), 2, 3)
    text = format_net(pts)
    assert text.splitlines()[0] == "# net t=2 m=3"
    assert parse_net(text) == pts


def test_net_malformed_inputs():
    with pytest.raises(ValueError):
        parse_net("0 0\n1 1\n")
    bad = NetPointSet(t=2, m=1, points=((0, 0), (1, 0)))
    with pytest.raises(ValueError):
        is_net(bad)


def test_digital_coset_sizes_and_membership():
    assert digital_net_coset(1) == [gen_x(1)]
    for m in (2, 3):
        coset = digital_net_coset(m)
        assert len(coset) == 2 ** (m * (m - 1))
        x, y = gen_x(m), gen_y(m)
        for p in coset:
            assert is_dwd(p)
            assert bruhat_leq(x, p) and bruhat_leq(p, y)


def test_digital_coset_guard_and_translations():
    with pytest.raises(SizeGuardError):
        digital_net_coset(5)
    affine = digital_net_coset(2, include_translations=True)
    assert set(digital_net_coset(2)) <= set(affine)
    assert all(is_dwd(p) for p in affine)


def test_sudoku_published_grid_and_symbol_perm():
    grid = parse_sudoku(SUDOKU_8, 2, 3)
    perms = sudoku_symbol_perms(grid)
    assert perms[0] == (0, 6, 2, 4, 1, 7, 3, 5)
    assert validate_sudoku(grid)


def test_sudoku_grid_row_and_column_interpretations_fail():
    # the rows themselves are not well distributed; only the
    # symbol-position reading validates
    grid = parse_sudoku(SUDOKU_8, 2, 3)
    rows_as_perms = [tuple(v - 1 for v in row) for row in grid.cells]
    assert not all(is_dwd(p) for p in rows_as_perms)


def test_sudoku_corruption_detected():
    rows = [list(r) for r in parse_sudoku(SUDOKU_8, 2, 3).cells]
    rows[0][0], rows[0][1] = rows[0][1], rows[0][0]
    corrupted = SudokuGrid(t=2, m=3, cells=tuple(tuple(r) for r in rows))
    assert not validate_sudoku(corrupted)


def test_sudoku_standard_nine():
    grid = parse_sudoku(SUDOKU_9, 3, 2)
    assert validate_sudoku(grid)


def test_sudoku_latin_square_box_violation():
    grid = parse_sudoku(LATIN_9, 3, 2)
    assert not validate_sudoku(grid)


def test_sudoku_bad_row_is_structural_error():
    text = SUDOKU_8.replace("1 4 5 6 2 3 8 7", "1 1 5 6 2 3 8 7")
    with pytest.raises(ValueError):
        validate_sudoku(parse_sudoku(text, 2, 3))
