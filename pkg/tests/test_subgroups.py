import math

import numpy as np
import pytest

from nimspec.errors import InvalidParameterError
from nimspec.graphs import by_id
from nimspec.paths import moment_path_count
from nimspec.series import hilbert_su2, rational_series
from nimspec.subgroups import (
    class_data,
    generate_group,
    kostant_trivial,
    molien_series_trivial,
    moment_generating_series,
    reference_table,
    subgroup_moment,
)

ORDERS = [("Z2n", 2, 4), ("Z2n", 3, 6), ("BD", 4, 8), ("BD", 5, 12),
          ("BT", None, 24), ("BO", None, 48), ("BI", None, 120)]


@pytest.mark.parametrize("name,n,order", ORDERS)
def test_group_orders(name, n, order):
    g = generate_group(name, n)
    assert g.order == order
    for el in g.elements:
        assert abs(np.linalg.det(el) - 1) < 1e-10


def test_bad_parameters():
    with pytest.raises(InvalidParameterError):
        generate_group("Z2n", 0)
    with pytest.raises(InvalidParameterError):
        generate_group("BD", 2)


def test_bt_class_table():
    cd = class_data(generate_group("BT"))
    assert [r.size for r in cd.rows] == [1, 1, 6, 4, 4, 4, 4]
    assert [r.chi_rho for r in cd.rows] == [2, -2, 0, 1, -1, -1, 1]


def test_bi_class_table_golden_ratio():
    cd = class_data(generate_group("BI"))
    mu_p = (1 + math.sqrt(5)) / 2
    assert any(abs(r.chi_rho - mu_p) < 1e-9 for r in cd.rows)
    assert [r.size for r in cd.rows] == [1, 1, 12, 12, 12, 12, 30, 20, 20]


def test_z4_classes():
    cd = class_data(generate_group("Z2n", 2))
    assert [r.size for r in cd.rows] == [1, 1, 1, 1]
    assert sorted(round(r.chi_rho) for r in cd.rows) == [-2, 0, 0, 2]


def test_class_sizes_sum_to_order():
    for name, n, order in ORDERS:
        cd = class_data(generate_group(name, n))
        assert cd.order == order
        assert all(-2 - 1e-12 <= r.chi_rho <= 2 + 1e-12 for r in cd.rows)


def test_theta_column():
    cd = class_data(generate_group("BT"))
    thetas = {r.label: r.theta for r in cd.rows}
    assert thetas["1"] == pytest.approx(0.0)
    assert thetas["-1"] == pytest.approx(0.5)
    assert thetas["tau"] == pytest.approx(0.25)
    assert thetas["mu"] == pytest.approx(1 / 6)


GROUP_GRAPH = [("Z2n", 2, "Aff-A(4)"), ("Z2n", 3, "Aff-A(6)"),
               ("BD", 4, "Aff-D(4)"), ("BD", 5, "Aff-D(5)"),
               ("BT", None, "Aff-E(6)"), ("BO", None, "Aff-E(7)"),
               ("BI", None, "Aff-E(8)")]


@pytest.mark.parametrize("name,n,gid", GROUP_GRAPH)
def test_subgroup_moments_match_mckay_graph(name, n, gid):
    cd = class_data(generate_group(name, n))
    g = by_id(gid)
    for m in range(13):
        assert abs(subgroup_moment(cd, m) - moment_path_count(g, m)) < 1e-9


def test_moment_examples():
    bt = class_data(generate_group("BT"))
    assert subgroup_moment(bt, 2) == pytest.approx(1.0)
    assert subgroup_moment(bt, 0) == pytest.approx(1.0)
    z4 = class_data(generate_group("Z2n", 2))
    assert subgroup_moment(z4, 2) == pytest.approx(2.0)


def test_moment_generating_series_examples():
    bt = class_data(generate_group("BT"))
    s = moment_generating_series(bt, 4)
    assert [round(c) for c in s.coeffs] == [1, 0, 1, 0, 2]
    z4 = class_data(generate_group("Z2n", 2))
    assert [round(c) for c in moment_generating_series(z4, 2).coeffs] == [1, 0, 2]


def test_molien_matches_closed_forms():
    cases = [("BT", [(1, 12)], [(-1, 6), (-1, 8)]),
             ("BI", [(1, 30)], [(-1, 12), (-1, 20)])]
    for name, num, den in cases:
        grp = generate_group(name)
        mol = molien_series_trivial(grp, 40)
        closed = rational_series(num, den, 40)
        assert mol.max_difference(closed) < 1e-9
        assert mol.coeffs[0] == pytest.approx(1.0)


def test_kostant_equals_molien_and_hilbert():
    for name, n, gid in GROUP_GRAPH:
        grp = generate_group(name, n)
        cd = class_data(grp)
        kost = kostant_trivial(cd, 40)
        mol = molien_series_trivial(grp, 40)
        assert kost.max_difference(mol) < 1e-9
        g = by_id(gid)
        hid = hilbert_su2(g, 40).entry(g.distinguished, g.distinguished)
        assert kost.max_difference(hid) < 1e-9


def test_table_mismatch_detection():
    # a deliberately wrong reference row must be flagged, not silently used
    rows = reference_table("BT")
    assert rows[2][1] == 6
