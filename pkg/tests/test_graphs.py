import json
import math

import numpy as np
import pytest

from nimspec import graphs
from nimspec.errors import (
    DataUnavailableError,
    InvalidParameterError,
    UnsupportedConstructionError,
)
from nimspec.graphs import (
    build_su2_affine_graph,
    build_su2_graph,
    build_su3_graph,
    by_id,
    eigen_moment,
    eigendata,
    truncate_infinite_graph,
)
from nimspec.paths import moment_path_count


def test_a3_is_path_with_sqrt2_radius():
    g = build_su2_graph("A", 3)
    assert g.n_vertices == 3
    assert g.distinguished == 0
    assert abs(g.spectral_radius() - math.sqrt(2)) < 1e-12


def test_e6_shape():
    g = build_su2_graph("E", 6)
    assert sorted(g.degrees()) == [1, 1, 1, 2, 2, 3]
    assert g.coxeter_h == 12


def test_d4_star_shape():
    g = build_su2_graph("D", 4)
    assert sorted(g.degrees()) == [1, 1, 1, 3]
    assert g.degree(g.distinguished) == 1


@pytest.mark.parametrize("family,n", [("A", 0), ("D", 3), ("E", 5), ("Tadpole", 0)])
def test_su2_range_errors(family, n):
    with pytest.raises(InvalidParameterError):
        build_su2_graph(family, n)


def test_affine_cycle_and_mckay_shapes():
    c4 = build_su2_affine_graph("A1", 4)
    assert c4.n_vertices == 4 and all(d == 2 for d in c4.degrees())
    e8 = build_su2_affine_graph("E1", 8)
    assert e8.n_vertices == 9
    d4 = build_su2_affine_graph("D1", 4)
    assert sorted(d4.degrees()) == [1, 1, 1, 1, 4]
    with pytest.raises(InvalidParameterError):
        build_su2_affine_graph("A1", 5)      # odd cycles are not in the family


@pytest.mark.parametrize("gid", ["A(5)", "D(6)", "E(7)", "Tad(3)"])
def test_dynkin_radius_below_two(gid):
    assert by_id(gid).spectral_radius() < 2 - 1e-6


@pytest.mark.parametrize("gid", ["Aff-A(6)", "Aff-D(7)", "Aff-E(6)", "Aff-E(7)", "Aff-E(8)"])
def test_affine_radius_exactly_two(gid):
    assert abs(by_id(gid).spectral_radius() - 2.0) < 1e-12


def test_affine_distinguished_degree():
    # extended vertex has degree 1 except on cycles where it has degree 2
    for gid in ["Aff-D(5)", "Aff-E(6)", "Aff-E(7)", "Aff-E(8)"]:
        g = by_id(gid)
        assert g.degree(g.distinguished) == 1
    g = by_id("Aff-A(6)")
    assert g.degree(g.distinguished) == 2


def test_dynkin_star_has_lowest_pf_weight():
    for gid in ["A(6)", "D(5)", "D(6)", "E(6)", "E(7)", "E(8)"]:
        g = by_id(gid)
        a = np.array(g.adjacency, dtype=float)
        vals, vecs = np.linalg.eigh(a)
        pf = np.abs(vecs[:, np.argmax(vals)])
        assert pf[g.distinguished] <= pf.min() + 1e-9, gid


def test_truncations():
    t = truncate_infinite_graph("AinfInf", 6)
    assert t.n_vertices == 13 and t.vertices[t.distinguished] == 0
    t = truncate_infinite_graph("SU3_A6inf", 2)
    assert t.n_vertices == 19
    t = truncate_infinite_graph("SU3_Ainf", 3)
    assert t.n_vertices == 10
    t = truncate_infinite_graph("Dinf", 4)
    assert sorted(t.degrees()) == [1, 1, 1, 2, 2, 3]


def test_hexagonal_truncation_radius_increases_to_three():
    radii = [
        truncate_infinite_graph("SU3_A6inf", d).spectral_radius() for d in (2, 4, 6)
    ]
    assert radii == sorted(radii)
    assert radii[-1] < 3.0 and radii[-1] > 2.8


def test_su3_triangle_graphs():
    g4 = build_su3_graph("A", 4)
    assert g4.n_vertices == 3
    # the fusion triangle at the smallest level is the directed 3-cycle
    assert sorted(sum(row) for row in g4.adjacency) == [1, 1, 1]
    assert not g4.symmetric

    g5 = build_su3_graph("A", 5)
    assert g5.n_vertices == 6
    out_degrees = {sum(row) for row in g5.adjacency}
    assert out_degrees <= {1, 2, 3}
    at = tuple(zip(*g5.adjacency))
    assert at != g5.adjacency

    star8 = build_su3_graph("Astar", 8)
    a3 = build_su2_graph("A", 3)
    expect = tuple(
        tuple(a3.adjacency[i][j] + (i == j) for j in range(3)) for i in range(3)
    )
    assert star8.adjacency == expect

    with pytest.raises(UnsupportedConstructionError):
        build_su3_graph("Astar", 7)


def test_su3_distinguished_out_degree_one():
    for l in range(4, 9):
        g = build_su3_graph("A", l)
        assert sum(g.adjacency[g.distinguished]) == 1


def test_eigendata_unitarity_and_moments():
    for gid in ["A(5)", "D(4)", "D(7)", "E(6)", "E(7)", "E(8)",
                "SU3-A(5)", "SU3-A(8)", "SU3-Astar(8)"]:
        ed = eigendata(gid)
        assert abs(ed.total_mass() - 1) < 1e-12
    # where adjacency exists, eigen sums must reproduce exact path counts
    # for every order up to m + n = 10
    for gid in ["A(6)", "D(5)", "E(7)", "SU3-A(6)", "SU3-Astar(8)"]:
        ed = eigendata(gid)
        g = by_id(gid)
        for m in range(11):
            for n in (range(11 - m) if not g.symmetric else [0]):
                em = eigen_moment(ed, m, n)
                assert abs(em - moment_path_count(g, m, n)) < 1e-9, (gid, m, n)


def test_eigendata_su2_eigenvalues_are_coxeter_cosines():
    for gid in ["A(5)", "D(6)", "E(6)", "E(7)", "E(8)"]:
        g = by_id(gid)
        ed = eigendata(gid)
        spectrum = sorted(np.linalg.eigvalsh(np.array(g.adjacency, dtype=float)))
        listed = sorted(
            e.eigenvalue.real for e in ed.entries for _ in range(e.multiplicity)
        )
        assert max(abs(a - b) for a, b in zip(spectrum, listed)) < 1e-12


def test_e6_eigendata_weights():
    w = {e.exponent: e.weight for e in eigendata("E(6)").entries}
    assert abs(w[1] - (3 - math.sqrt(3)) / 24) < 1e-15
    assert abs(w[4] - 0.25) < 1e-15


def test_exceptional_eigendata_tables():
    ed = eigendata("SU3-E(8)")
    w = {tuple(e.exponent): e.weight for e in ed.entries}
    assert abs(w[(0, 0)] - (2 - math.sqrt(2)) / 24) < 1e-15
    assert abs(w[(5, 0)] - w[(0, 5)]) < 1e-15
    ed12 = eigendata("SU3-E1(12)")
    w12 = {tuple(e.exponent): e.weight for e in ed12.entries}
    for lam in [(2, 2), (5, 2), (2, 5)]:
        assert abs(w12[lam] - 2 / 9) < 1e-15


def test_eigendata_unavailable():
    with pytest.raises(DataUnavailableError):
        eigendata("SU3-E(24)")


def test_graph_json_roundtrip():
    g = by_id("SU3-A(5)")
    blob = json.loads(json.dumps(g.to_json()))
    assert blob["adjacency"] == [list(r) for r in g.adjacency]
    assert blob["distinguished"] == g.distinguished
    assert blob["coxeter_h"] == 5
