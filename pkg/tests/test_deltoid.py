import cmath
import math
import random
from fractions import Fraction

import pytest

from nimspec import deltoid
from nimspec.errors import InvalidParameterError
from nimspec.graphs import su3_exponent_angles, su3_psi_star


def test_phi_values():
    assert deltoid.phi((Fraction(0), Fraction(0))) == pytest.approx(3 + 0j)
    w = cmath.exp(2j * math.pi / 3)
    assert deltoid.phi((Fraction(1, 3), Fraction(2, 3))) == pytest.approx(3 * w)
    assert abs(deltoid.phi((Fraction(0), Fraction(1, 3)))) < 1e-12


def test_s3_orbit():
    orbit = deltoid.s3_orbit((Fraction(1, 8), Fraction(1, 8)))
    assert len(orbit) == 6
    assert (Fraction(7, 8), Fraction(7, 8)) in orbit
    assert set(deltoid.s3_orbit((Fraction(0), Fraction(0)))) == {(0, 0)}
    generic = deltoid.s3_orbit((Fraction(1, 7), Fraction(3, 11)))
    assert len(set(generic)) == 6


def test_jacobian_forms_agree():
    rng = random.Random(7)
    for _ in range(1000):
        p = (rng.random(), rng.random())
        jt = deltoid.jacobian(p, "theta")
        js = deltoid.jacobian(p, "sine_product")
        jo = deltoid.jacobian(p, "omega")
        ja = deltoid.jacobian(p, "abs_z")
        assert abs(jt - js) < 1e-12 * max(1, abs(jt))
        assert abs(jt - jo) < 1e-10
        assert abs(jt * jt - ja * ja) < 1e-9 * max(1.0, jt * jt)


def test_jacobian_table_values():
    j = deltoid.jacobian((Fraction(1, 8), Fraction(1, 8)))
    assert j * j / (16 * math.pi ** 4) == pytest.approx(3 - 2 * math.sqrt(2))
    j = deltoid.jacobian((Fraction(5, 12), Fraction(6, 12)))
    assert j * j / (16 * math.pi ** 4) == pytest.approx(3 / 4)
    # vanishes along theta_1 = 2 theta_2
    assert deltoid.jacobian((Fraction(2, 7), Fraction(1, 7))) == 0.0


def test_jacobian_s3_invariance_of_square():
    rng = random.Random(3)
    for _ in range(200):
        p = (rng.random(), rng.random())
        j2 = deltoid.jacobian(p, "theta") ** 2
        for q in deltoid.s3_orbit(p):
            assert abs(deltoid.jacobian(q, "theta") ** 2 - j2) < 1e-12 * max(1.0, j2)


def test_jacobian_sign_constant_per_domain():
    # the sign of J is constant on each of the six fundamental domains
    # (which three are negative is a labelling convention, so only the
    # constancy is asserted)
    rng = random.Random(11)
    base_points = []
    while len(base_points) < 200:
        p = (rng.random(), rng.random())
        if deltoid.fundamental_domain_contains(p) and abs(
            deltoid.jacobian(p, "theta")
        ) > 1e-6:
            base_points.append(p)
    for g_index in range(6):
        signs = {
            deltoid.jacobian(deltoid.s3_orbit(p)[g_index], "theta") > 0
            for p in base_points
        }
        assert len(signs) == 1
    # and exactly three domains carry each sign
    one_orbit = deltoid.s3_orbit(base_points[0])
    positives = sum(deltoid.jacobian(q, "theta") > 0 for q in one_orbit)
    assert positives == 3


def test_pf_eigenvector_is_jacobian():
    for l in (5, 7, 9):
        for lam, _ in [((0, 0), None), ((1, 0), None), ((l - 4, 1), None)]:
            t = su3_exponent_angles(l, lam)
            jv = deltoid.jacobian(t, "sine_product")
            assert abs(su3_psi_star(l, lam) + jv / (2 * math.sqrt(3) * math.pi ** 2 * l)) < 1e-12


def test_invert_phi_special_points():
    assert deltoid.invert_phi(3 + 0j) == [1 + 0j, 1 + 0j, 1 + 0j]
    roots = deltoid.invert_phi(0j)
    got = sorted(cmath.phase(w) % (2 * math.pi) for w in roots)
    expect = sorted(2 * math.pi * k / 3 for k in range(3))
    assert all(abs(a - b) < 1e-9 for a, b in zip(got, expect))


def test_invert_phi_recovers_boundary_orbit_member():
    z = deltoid.phi((Fraction(1, 7), Fraction(2, 7)))
    roots = deltoid.invert_phi(z)
    target = cmath.exp(2j * math.pi / 7)
    assert min(abs(w - target) for w in roots) < 1e-9


def test_invert_phi_roundtrip_on_interior():
    rng = random.Random(5)
    done = 0
    while done < 1000:
        t = (rng.random(), rng.random())
        z = deltoid.phi(t)
        if deltoid.discriminant(z).real < 1e-8:
            continue
        done += 1
        for w1, w2 in deltoid.invert_phi_pairs(z):
            assert abs(w1 + 1 / w2 + w2 / w1 - z) < 1e-9
            assert abs(abs(w1) - 1) < 1e-9


def test_invert_phi_rejects_outside():
    with pytest.raises(InvalidParameterError):
        deltoid.invert_phi(3 + 3j)


def test_dl_grid():
    assert len(deltoid.generate_Dl(4)) == 48
    pts = deltoid.generate_Dl(6)
    assert len(pts) == 108
    assert len(pts) == 3 * 6 * 6
    pset = set(pts)
    for p in pts:
        for q in deltoid.s3_orbit(p):
            assert q in pset
    # interior-of-C members of D_6 correspond to the level-3 fusion triangle
    strict = [
        p for p in pts
        if 2 * p[1] - p[0] >= Fraction(1, 6) and 2 * p[0] - p[1] >= Fraction(1, 6)
        and p[0] + p[1] <= 1 - Fraction(1, 6)
    ]
    assert len(strict) == 10


def test_fundamental_domain():
    assert deltoid.fundamental_domain_contains((Fraction(1, 3), Fraction(1, 3)))
    assert not deltoid.fundamental_domain_contains((0.9, 0.1))
    rng = random.Random(2)
    for _ in range(300):
        p = (rng.random(), rng.random())
        orbit = deltoid.s3_orbit(p)
        hits = [q for q in orbit if deltoid.fundamental_domain_contains(q)]
        assert len(hits) == 1


def test_boundary_parameterization():
    for k in range(200):
        z = deltoid.boundary_point(1.0, k / 200)
        d = deltoid.discriminant(z)
        assert abs(d) < 1e-9
        assert deltoid.in_deltoid(z)
    inside = deltoid.boundary_point(0.5, 0.1)
    assert deltoid.discriminant(inside).real > 0


def test_density_grid_masks_outside():
    rows = list(deltoid.density_grid(40))
    assert len(rows) == 1600
    outside = [r for r in rows if math.isnan(r[2])]
    inside = [r for r in rows if not math.isnan(r[2])]
    assert outside and inside
    assert all(r[3] > 0 for r in inside if not math.isnan(r[3]))
    # a point well outside the deltoid must be masked
    far = [r for r in rows if r[0] < -2.5 and abs(r[1]) > 2.5]
    assert all(math.isnan(r[2]) for r in far)
