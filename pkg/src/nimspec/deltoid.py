"""Geometry of the map Phi: T^2 -> deltoid, the S3 action on the torus,
the Jacobian of the change of variables in its several equivalent forms,
deltoid membership, the cubic inversion of Phi, and the D_l grids.

Angles are taken in [0,1); rational angles are kept as Fractions so that
grid membership and S3 orbits are exact.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from typing import Iterable, List, Tuple, Union

from .errors import InvalidParameterError

Angle = Union[Fraction, float]
TorusPoint = Tuple[Angle, Angle]

TWO_PI = 2 * math.pi


def _wrap(x: Angle) -> Angle:
    return x % 1


def _to_float(x: Angle) -> float:
    return float(x)


def phi(p: TorusPoint) -> complex:
    """Phi(w1, w2) = w1 + w2^{-1} + w1^{-1} w2."""
    w1 = cmath.exp(2j * math.pi * _to_float(p[0]))
    w2 = cmath.exp(2j * math.pi * _to_float(p[1]))
    return w1 + 1 / w2 + w2 / w1


# The S3 action on exponents, generated by T2 (order 2) and T3 (order 3).
_T2 = ((0, -1), (-1, 0))
_T3 = ((0, -1), (1, -1))


def _mat_apply(mat, p: TorusPoint) -> TorusPoint:
    return (
        _wrap(mat[0][0] * p[0] + mat[0][1] * p[1]),
        _wrap(mat[1][0] * p[0] + mat[1][1] * p[1]),
    )


def _mat_mul(a, b):
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(2)) for j in range(2))
        for i in range(2)
    )


_S3_MATRICES = []
for _g in (((1, 0), (0, 1)), _T3, _mat_mul(_T3, _T3)):
    _S3_MATRICES.append(_g)
    _S3_MATRICES.append(_mat_mul(_T2, _g))


def s3_orbit(p: TorusPoint) -> List[TorusPoint]:
    """The 6 images of p under <T2, T3> (with repeats on fixed loci)."""
    orbit = [_mat_apply(g, p) for g in _S3_MATRICES]
    z = phi(p)
    for q in orbit:
        if abs(phi(q) - z) > 1e-12:
            raise AssertionError("Phi is not constant on the S3 orbit")
    return orbit


def discriminant(z: complex) -> complex:
    """27 - 18 z zbar + 4 z^3 + 4 zbar^3 - z^2 zbar^2 (real on C)."""
    zb = z.conjugate()
    return 27 - 18 * z * zb + 4 * z ** 3 + 4 * zb ** 3 - (z * zb) ** 2


def in_deltoid(z: complex, tol: float = 1e-9) -> bool:
    d = discriminant(z)
    return abs(d.imag) < tol and d.real >= -tol


def jacobian(p: TorusPoint, form: str = "theta") -> float:
    """Jacobian of Phi at p in one of four equivalent forms.

    theta and sine_product agree exactly; omega agrees up to rounding;
    abs_z returns |J| computed from the discriminant at z = Phi(p).
    """
    t1, t2 = _to_float(p[0]), _to_float(p[1])
    if form == "theta":
        return 4 * math.pi ** 2 * (
            math.sin(TWO_PI * (t1 + t2))
            - math.sin(TWO_PI * (2 * t1 - t2))
            - math.sin(TWO_PI * (2 * t2 - t1))
        )
    if form == "sine_product":
        return -16 * math.pi ** 2 * (
            math.sin((2 * t2 - t1) * math.pi)
            * math.sin((2 * t1 - t2) * math.pi)
            * math.sin((t1 + t2) * math.pi)
        )
    if form == "omega":
        w1 = cmath.exp(2j * math.pi * t1)
        w2 = cmath.exp(2j * math.pi * t2)
        val = -2 * math.pi ** 2 * 1j * (
            w1 * w2 - 1 / (w1 * w2) - w1 ** 2 / w2 + w2 / w1 ** 2
            - w2 ** 2 / w1 + w1 / w2 ** 2
        )
        if abs(val.imag) > 1e-9:
            raise AssertionError("omega-form Jacobian should be real")
        return val.real
    if form == "abs_z":
        d = discriminant(phi(p))
        return 2 * math.pi ** 2 * math.sqrt(max(d.real, 0.0))
    raise InvalidParameterError(f"unknown Jacobian form {form!r}")


def _polish_root(w: complex, z: complex) -> complex:
    """Newton-polish a root of p(w) = w^3 - z w^2 + zbar w - 1.

    Along the deltoid boundary the cubic has a double root; there the
    residual is quadratically flat, so the position is recovered from
    p'(w) = 0 instead (a full-precision quadratic).
    """
    zb = z.conjugate()

    def p(x):
        return x ** 3 - z * x ** 2 + zb * x - 1

    dp = 3 * w ** 2 - 2 * z * w + zb
    if abs(dp) < 1e-4:
        disc = cmath.sqrt(z * z - 3 * zb)
        for cand in ((z + disc) / 3, (z - disc) / 3):
            if abs(cand - w) < 1e-4 and abs(p(cand)) <= abs(p(w)) + 1e-14:
                return cand
    for _ in range(60):
        f = p(w)
        if abs(f) < 1e-15:
            break
        df = 3 * w ** 2 - 2 * z * w + zb
        if abs(df) < 1e-8:
            break
        w = w - f / df
    return w


def invert_phi(z: complex, tol: float = 1e-9) -> List[complex]:
    """The three roots w of w^3 - z w^2 + zbar w - 1 = 0 (values of omega_1).

    The omega_2 roots are the conjugates of these; for z inside the deltoid
    all three roots are unimodular.  Cusps (where the cube root P
    degenerates) return the triple root z/3; boundary double roots are
    Newton-polished.
    """
    if not in_deltoid(z, tol=math.sqrt(tol)):
        raise InvalidParameterError(f"{z} lies outside the deltoid")
    zb = z.conjugate()
    d = discriminant(z)
    p3 = 27 - 9 * z * zb + 2 * z ** 3 + 3 * math.sqrt(3) * cmath.sqrt(d)
    mag = abs(p3) ** (1 / 3)
    if mag < 1e-7:
        w = z / 3
        return [w, w, w]
    ang = cmath.phase(p3) / 3
    while ang < 0:
        ang += 2 * math.pi / 3
    while ang >= 2 * math.pi / 3:
        ang -= 2 * math.pi / 3
    big_p = mag * cmath.exp(1j * ang)
    c = 2 ** (1 / 3)
    roots = []
    for k in range(3):
        eps = cmath.exp(2j * math.pi * k / 3)
        w = (z + big_p * eps / c + c * eps.conjugate() * (z * z - 3 * zb) / big_p) / 3
        roots.append(_polish_root(w, z))
    for w in roots:
        if abs(w ** 3 - z * w ** 2 + zb * w - 1) > tol:
            raise AssertionError(f"cubic root {w} fails the residual check at z={z}")
    return roots


def invert_phi_pairs(z: complex, tol: float = 1e-9) -> List[Tuple[complex, complex]]:
    """(omega_1, omega_2) preimage pairs of z: each omega_1 root is paired
    with the conjugated root that reproduces z under Phi."""
    roots = invert_phi(z, tol=tol)
    pairs = []
    for w1 in roots:
        best = None
        for w2 in (r.conjugate() for r in roots):
            val = w1 + 1 / w2 + w2 / w1
            if best is None or abs(val - z) < best[0]:
                best = (abs(val - z), w2)
        pairs.append((w1, best[1]))
    return pairs


def generate_Dl(l: int) -> List[Tuple[Fraction, Fraction]]:
    """All (q1/3l, q2/3l) with q1 + q2 = 0 mod 3; exactly 3 l^2 points."""
    if l < 4:
        raise InvalidParameterError("D_l grid needs l >= 4")
    pts = [
        (Fraction(q1, 3 * l), Fraction(q2, 3 * l))
        for q1 in range(3 * l)
        for q2 in range(3 * l)
        if (q1 + q2) % 3 == 0
    ]
    assert len(pts) == 3 * l * l
    return pts


def fundamental_domain_contains(p: TorusPoint) -> bool:
    """Boundary-inclusive test for the fundamental domain C of T^2 / S3."""
    t1, t2 = p
    return 2 * t2 - t1 >= 0 and 2 * t1 - t2 >= 0 and t1 + t2 <= 1


def boundary_point(r: float, t: float) -> complex:
    """Deltoid parameterization; r = 1 traces the boundary curve."""
    x = r * (2 * math.cos(TWO_PI * t) + math.cos(2 * TWO_PI * t))
    y = r * (2 * math.sin(TWO_PI * t) - math.sin(2 * TWO_PI * t))
    return complex(x, y)


def density_grid(n: int) -> Iterable[tuple]:
    """Rows (x, y, |J|, 1/|J|) over a bounding box, NaN outside the deltoid.

    This is the plotting payload for the continuous deltoid measures: the
    1/|J| density integrates the torus-uniform spectral measure and |J| the
    group-invariant one.
    """
    nan = float("nan")
    for i in range(n):
        x = -3.0 + 6.0 * i / (n - 1)
        for j in range(n):
            y = -3.0 + 6.0 * j / (n - 1)
            z = complex(x, y)
            d = discriminant(z)
            if d.real < 0 or abs(d.imag) > 1e-9:
                yield (x, y, nan, nan)
            else:
                aj = 2 * math.pi ** 2 * math.sqrt(max(d.real, 0.0))
                yield (x, y, aj, (1.0 / aj) if aj > 1e-12 else nan)
