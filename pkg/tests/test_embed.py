import math

import numpy as np
import pytest

from bruhatcube.perm import from_word, identity, longest_element
from bruhatcube.bruhat import interval
from bruhatcube.dwd import gen_x, gen_y
from bruhatcube.embed import (EmbeddedGraph, check_good_embedding,
                              embedding_json, geometric_embedding,
                              rank2_cosets)


def test_s2_embedding():
    eg = geometric_embedding(interval(identity(2), longest_element(2)))
    assert eg.coordinates[(0, 1)] == (0.0, 1.0)
    assert eg.coordinates[(1, 0)] == (1.0, 0.0)
    assert check_good_embedding(eg)


def test_hypercube_images_distinct_and_equal_norm():
    iv = interval(gen_x(2), gen_y(2))
    eg = geometric_embedding(iv)
    pts = [eg.coordinates[u] for u in iv.elements]
    assert len(set(pts)) == 16
    norms = {math.fsum(c * c for c in p) for p in pts}
    assert len(norms) == 1


def test_rank2_cosets_full_s3():
    cosets = rank2_cosets(interval(identity(3), longest_element(3)))
    assert sorted(len(c) for c in cosets) == [6]


def test_rank2_cosets_commuting_diamond():
    iv = interval(identity(4), from_word(4, [1, 3]))
    sizes = sorted(len(c) for c in rank2_cosets(iv))
    assert sizes[-1] == 4
    assert len(iv) == 4


def test_rank2_shapes_on_short_s4_intervals():
    from itertools import permutations
    from bruhatcube.bruhat import bruhat_leq
    from bruhatcube.perm import length
    for x in permutations(range(4)):
        for y in permutations(range(4)):
            if bruhat_leq(x, y) and length(y) - length(x) <= 3:
                for coset in rank2_cosets(interval(x, y)):
                    assert len(coset) in (2, 3, 4, 6)


def test_good_embedding_hypercube():
    iv = interval(gen_x(2), gen_y(2))
    assert check_good_embedding(geometric_embedding(iv), tol=1e-9)


def test_good_embedding_single_edge():
    iv = interval(identity(3), (1, 0, 2))
    assert check_good_embedding(geometric_embedding(iv), tol=1e-9)


def test_good_embedding_the_coxeter_diamond():
    # centroid of this diamond is off the natural sphere centre; the
    # fitted-centre check must still accept it
    iv = interval(identity(3), from_word(3, [1, 2]))
    assert check_good_embedding(geometric_embedding(iv), tol=1e-9)


def test_perturbed_hexagon_fails():
    iv = interval(identity(3), longest_element(3))
    eg = geometric_embedding(iv)
    coords = dict(eg.coordinates)
    victim = iv.elements[2]
    shift = 0.1 / math.sqrt(3)
    coords[victim] = tuple(c + shift for c in coords[victim])
    bad = EmbeddedGraph(graph=eg.graph, coordinates=coords, rho=eg.rho)
    assert not check_good_embedding(bad, tol=1e-9)


def test_tol_validation():
    iv = interval(identity(2), longest_element(2))
    with pytest.raises(ValueError):
        check_good_embedding(geometric_embedding(iv), tol=0.0)


def test_embedding_json_schema():
    iv = interval(identity(3), longest_element(3))
    blob = embedding_json(geometric_embedding(iv))
    assert set(blob) == {"vertices", "points", "edges"}
    assert len(blob["vertices"]) == len(blob["points"]) == 6
    for i, j, label in blob["edges"]:
        assert 0 <= i < 6 and 0 <= j < 6
        assert label.startswith("(")
    assert all(len(p) == 3 for p in blob["points"])


def test_sphere_deviation_is_tiny_for_geometric():
    from bruhatcube.embed import _sphere_deviation
    iv = interval(gen_x(2), gen_y(2))
    eg = geometric_embedding(iv)
    pts = np.array([eg.coordinates[u] for u in iv.elements])
    assert _sphere_deviation(pts) < 1e-12
