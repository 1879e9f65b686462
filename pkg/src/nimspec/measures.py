"""Discrete measures on the circle and the 2-torus: atoms at exact rational
angles, weighted by the densities that appear in the spectral measures of the
graph catalogue (alpha_j(u) = 2 Im(u^j)^2, the squared Jacobian on the torus).

Moments are evaluated two independent ways wherever possible: a direct atom
sum in complex floats, and an exact rational route through the Fourier
coefficients of the measure (uniform root-of-unity measures and the alpha_j
densities all have rational Fourier transforms).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, List, Optional, Sequence, Tuple, Union

import numpy as np

from . import deltoid
from .errors import InvalidParameterError, NoClosedFormError
from .graphs import eigendata, su3_exponent_angles

Weight = Union[Fraction, float]


@dataclass
class DiscreteMeasure:
    dimension: int
    atoms: dict                     # angle key -> weight; keys are Fraction or (Fraction, Fraction)
    provenance: str
    fourier: Optional[Callable[[int], Fraction]] = None   # 1D only: r -> integral of u^r

    def total_mass(self) -> float:
        return float(sum(self.atoms.values()))

    def atoms_sorted(self) -> list:
        return sorted(self.atoms.items())

    def to_json(self) -> dict:
        def fmt(theta):
            if self.dimension == 1:
                return f"{theta.numerator}/{theta.denominator}"
            return [f"{t.numerator}/{t.denominator}" for t in theta]

        return {
            "dimension": self.dimension,
            "atoms": [
                {"theta": fmt(t), "weight": float(w)} for t, w in self.atoms_sorted()
            ],
            "provenance": self.provenance,
        }


def _merge(a: dict, b: dict, cb=None) -> dict:
    out = dict(a)
    for k, w in b.items():
        out[k] = out.get(k, 0) + (cb * w if cb is not None else w)
    return out


def add(mu: DiscreteMeasure, nu: DiscreteMeasure) -> DiscreteMeasure:
    if mu.dimension != nu.dimension:
        raise InvalidParameterError("cannot add measures of different dimension")
    fr = None
    if mu.fourier is not None and nu.fourier is not None:
        fmu, fnu = mu.fourier, nu.fourier
        fr = lambda r: fmu(r) + fnu(r)
    return DiscreteMeasure(
        mu.dimension,
        _merge(mu.atoms, nu.atoms),
        f"({mu.provenance} + {nu.provenance})",
        fr,
    )


def scale(c: Weight, mu: DiscreteMeasure) -> DiscreteMeasure:
    fr = None
    if mu.fourier is not None and isinstance(c, (Fraction, int)):
        fmu, cc = mu.fourier, Fraction(c)
        fr = lambda r: cc * fmu(r)
    return DiscreteMeasure(
        mu.dimension,
        {k: c * w for k, w in mu.atoms.items()},
        f"{c}*{mu.provenance}",
        fr,
    )


def combine(*terms) -> DiscreteMeasure:
    """Linear combination [(c1, mu1), (c2, mu2), ...]."""
    acc = scale(terms[0][0], terms[0][1])
    for c, mu in terms[1:]:
        acc = add(acc, scale(c, mu))
    return acc


# -- 1D primitives -----------------------------------------------------------

def uniform_roots(n_roots: int, provenance: Optional[str] = None) -> DiscreteMeasure:
    """Uniform measure on the n-th roots of unity."""
    if n_roots < 1:
        raise InvalidParameterError("need at least one root of unity")
    atoms = {Fraction(j, n_roots): Fraction(1, n_roots) for j in range(n_roots)}
    return DiscreteMeasure(
        1, atoms, provenance or f"u[{n_roots}]",
        fourier=lambda r: Fraction(1) if r % n_roots == 0 else Fraction(0),
    )


def d_measure(n: int) -> DiscreteMeasure:
    """d_n: uniform on the 2n-th roots of unity."""
    if n < 1:
        raise InvalidParameterError("d_n needs n >= 1")
    mu = uniform_roots(2 * n)
    mu.provenance = f"d_{n}"
    return mu


def dprime_measure(n: int) -> DiscreteMeasure:
    """d'_n = 2 d_{2n} - d_n: uniform on the 4n-th roots of odd order."""
    mu = combine((Fraction(2), d_measure(2 * n)), (Fraction(-1), d_measure(n)))
    mu.provenance = f"d'_{n}"
    return mu


def ddprime_measure(n: int) -> DiscreteMeasure:
    """d''_n = (3 d'_{3n} - d'_n)/2: uniform on 12n-th roots of order 6k+-1."""
    mu = combine(
        (Fraction(3, 2), dprime_measure(3 * n)), (Fraction(-1, 2), dprime_measure(n))
    )
    mu.provenance = f"d''_{n}"
    return mu


def dirac(theta: Fraction, weight: Weight = 1) -> DiscreteMeasure:
    theta = Fraction(theta) % 1
    fr = None
    if theta.denominator in (1, 2):
        sign = 1 if theta == 0 else -1
        wq = Fraction(weight) if isinstance(weight, (int, Fraction)) else None
        if wq is not None:
            fr = lambda r: wq * (sign ** r)
    return DiscreteMeasure(1, {theta: weight}, f"delta_{theta}", fr)


def alpha_value(theta: float, j: int = 1) -> float:
    """alpha_j(u) = 2 Im(u^j)^2 at u = e^{2 pi i theta}."""
    return 2 * math.sin(2 * math.pi * j * theta) ** 2


def with_alpha(mu: DiscreteMeasure, j: int = 1) -> DiscreteMeasure:
    """Multiply a 1D measure by the density alpha_j."""
    if mu.dimension != 1:
        raise InvalidParameterError("alpha densities act on circle measures")
    atoms = {t: w * alpha_value(float(t), j) for t, w in mu.atoms.items()}
    fr = None
    if mu.fourier is not None:
        fmu = mu.fourier
        # alpha_j(u) = 1 - (u^{2j} + u^{-2j})/2 acts as a Fourier convolution
        fr = lambda r: fmu(r) - Fraction(1, 2) * (fmu(r + 2 * j) + fmu(r - 2 * j))
    name = f"alpha_{j}" if j != 1 else "alpha"
    return DiscreteMeasure(1, atoms, f"{name}*{mu.provenance}", fr)


# -- 2D primitives -----------------------------------------------------------

def product_measure(mu: DiscreteMeasure, nu: DiscreteMeasure) -> DiscreteMeasure:
    if mu.dimension != 1 or nu.dimension != 1:
        raise InvalidParameterError("product needs two circle measures")
    atoms = {
        (t1, t2): w1 * w2
        for t1, w1 in mu.atoms.items()
        for t2, w2 in nu.atoms.items()
    }
    return DiscreteMeasure(2, atoms, f"({mu.provenance} x {nu.provenance})")


def dl_measure(l: int) -> DiscreteMeasure:
    """d^(l): uniform measure on the 3 l^2 points of the grid D_l."""
    pts = deltoid.generate_Dl(l)
    w = Fraction(1, len(pts))
    return DiscreteMeasure(2, {p: w for p in pts}, f"d^({l})")


def with_j2(mu: DiscreteMeasure) -> DiscreteMeasure:
    """Multiply a torus measure by J(theta1, theta2)^2 / (24 pi^4)."""
    if mu.dimension != 2:
        raise InvalidParameterError("J^2 density acts on torus measures")
    atoms = {}
    for (t1, t2), w in mu.atoms.items():
        jv = deltoid.jacobian((t1, t2), "sine_product")
        atoms[(t1, t2)] = float(w) * jv * jv / (24 * math.pi ** 4)
    return DiscreteMeasure(2, atoms, f"J^2/(24pi^4)*{mu.provenance}")


# -- composition-tree entry point ---------------------------------------------

def make_measure(spec) -> DiscreteMeasure:
    """Build a measure from a composition tree, e.g.
    ("sum", ("scale", Fraction(1,2), ("d", 3)), ("alpha", ("d", 12)))."""
    if isinstance(spec, DiscreteMeasure):
        return spec
    op = spec[0]
    if op == "d":
        return d_measure(spec[1])
    if op == "dprime":
        return dprime_measure(spec[1])
    if op == "ddprime":
        return ddprime_measure(spec[1])
    if op == "roots":
        return uniform_roots(spec[1])
    if op == "dirac":
        return dirac(Fraction(spec[1]), *spec[2:])
    if op == "dl":
        return dl_measure(spec[1])
    if op == "alpha":
        return with_alpha(make_measure(spec[1]))
    if op == "alpha_j":
        return with_alpha(make_measure(spec[2]), j=spec[1])
    if op == "j2":
        return with_j2(make_measure(spec[1]))
    if op == "product":
        return product_measure(make_measure(spec[1]), make_measure(spec[2]))
    if op == "scale":
        return scale(spec[1], make_measure(spec[2]))
    if op == "sum":
        return combine(*[(1, make_measure(s)) for s in spec[1:]])
    raise InvalidParameterError(f"unknown measure spec node {op!r}")


# -- moment evaluation -------------------------------------------------------

def moment_t(mu: DiscreteMeasure, m: int, shift: int = 0) -> float:
    """Integral of (u + u^{-1} + shift)^m, by direct atom summation."""
    if mu.dimension != 1:
        raise InvalidParameterError("moment_t needs a circle measure")
    total = 0j
    for t, w in mu.atoms.items():
        u = cmath.exp(2j * math.pi * float(t))
        total += complex(w) * (u + 1 / u + shift) ** m
    if abs(total.imag) > 1e-12 * max(1.0, abs(total.real)):
        raise AssertionError(f"moment has imaginary residue {total.imag}")
    return total.real


def moment_t_exact(mu: DiscreteMeasure, m: int, shift: int = 0) -> Optional[Fraction]:
    """Exact rational moment via the Fourier transform, when available.

    (u + u^{-1} + shift)^m expands into powers u^{i-j};   only rational
    Fourier coefficients enter.
    """
    if mu.fourier is None:
        return None
    total = Fraction(0)
    if shift == 0:
        for k in range(m + 1):
            total += math.comb(m, k) * mu.fourier(m - 2 * k)
    else:
        s = Fraction(shift)
        for i in range(m + 1):
            for j in range(m - i + 1):
                k = m - i - j
                coeff = (
                    math.factorial(m)
                    // (math.factorial(i) * math.factorial(j) * math.factorial(k))
                )
                total += coeff * s ** k * mu.fourier(i - j)
    return total


def circle_series(mu: DiscreteMeasure, order: int) -> list:
    """Taylor coefficients of int (1 - q u)^{-1} d mu, i.e. the Fourier
    moments int u^m d mu for m = 0..order; exact when possible."""
    if mu.fourier is not None:
        return [mu.fourier(m) for m in range(order + 1)]
    out = []
    for m in range(order + 1):
        val = sum(
            complex(w) * cmath.exp(2j * math.pi * float(t)) ** m
            for t, w in mu.atoms.items()
        )
        if abs(val.imag) > 1e-10:
            raise AssertionError("circle series should be real for symmetric measures")
        out.append(val.real)
    return out


def moment_t2(mu: DiscreteMeasure, m: int, n: int) -> complex:
    """Integral of Phi^m conj(Phi)^n for a torus measure."""
    if mu.dimension != 2:
        raise InvalidParameterError("moment_t2 needs a torus measure")
    total = 0j
    for (t1, t2), w in mu.atoms.items():
        z = deltoid.phi((t1, t2))
        total += complex(w) * z ** m * z.conjugate() ** n
    return total


# -- canonical measures ------------------------------------------------------

def canonical_measure(graph_id: str) -> DiscreteMeasure:
    """The closed-form spectral measure of a catalogue graph (over T or T^2)."""
    import re

    m = re.match(r"^(?P<fam>[A-Za-z0-9\-]+?)\((?P<arg>\d+)\)$", graph_id)
    if not m:
        raise InvalidParameterError(f"cannot parse graph id {graph_id!r}")
    fam, arg = m.group("fam"), int(m.group("arg"))
    if fam == "A":
        mu = with_alpha(d_measure(arg + 1))
    elif fam == "D":
        mu = with_alpha(dprime_measure(arg - 1))
    elif fam == "E" and arg == 6:
        mu = add(
            with_alpha(d_measure(12)),
            combine(
                (Fraction(1, 2), d_measure(12)),
                (Fraction(-1, 2), d_measure(6)),
                (Fraction(-1, 2), d_measure(4)),
                (Fraction(1, 2), d_measure(3)),
            ),
        )
    elif fam == "E" and arg == 7:
        mu = combine(
            (Fraction(2, 3), with_alpha(ddprime_measure(3), j=2)),
            (Fraction(1, 3), dprime_measure(1)),
        )
    elif fam == "E" and arg == 8:
        a13_d5 = add(
            with_alpha(ddprime_measure(5), j=1), with_alpha(ddprime_measure(5), j=3)
        )
        mu = combine((Fraction(2, 3), a13_d5), (Fraction(-1, 3), ddprime_measure(1)))
    elif fam == "Aff-A":
        if arg % 2 != 0:
            raise InvalidParameterError("affine A measure needs an even cycle")
        mu = d_measure(arg // 2)
    elif fam == "Aff-D":
        mu = combine(
            (Fraction(1, 2), d_measure(arg - 2)), (Fraction(1, 2), dprime_measure(1))
        )
    elif fam == "Aff-E" and arg in (6, 7, 8):
        k = {6: 3, 7: 4, 8: 6}[arg]
        j = {6: 2, 7: 3, 8: 5}[arg]
        mu = combine(
            (Fraction(1), with_alpha(d_measure(k))),
            (Fraction(-1, 2), d_measure(k)),
            (Fraction(1, 2), d_measure(j)),
        )
    elif fam == "SU3-A":
        mu = with_j2(dl_measure(arg))
    elif fam == "SU3-D":
        if arg % 3 != 0 or arg < 6:
            raise InvalidParameterError("SU3-D needs index 3k, k >= 2")
        mu = with_j2(product_measure(uniform_roots(arg), uniform_roots(arg)))
        mu.provenance = f"J^2/(24pi^4)*(d_{arg}/2 x d_{arg}/2)"
    elif fam == "SU3-Astar":
        mu = with_alpha(uniform_roots(arg))
    elif fam in ("SU3-E", "SU3-E1"):
        raise NoClosedFormError(
            f"{graph_id} has no root-of-unity closed form; use eigendata atoms"
        )
    else:
        raise InvalidParameterError(f"no canonical measure for {graph_id!r}")
    mu.provenance = f"{graph_id}: {mu.provenance}"
    return mu


def canonical_graph_moment(graph_id: str, m: int, n: int = 0) -> complex:
    """Moment of the canonical measure in the chart of its graph family
    (SU(2): (u+1/u)^{m+n};  SU3-Astar: shifted by +1;  SU(3): R_{m,n})."""
    mu = canonical_measure(graph_id)
    if mu.dimension == 2:
        return moment_t2(mu, m, n)
    if graph_id.startswith("SU3-Astar"):
        return complex(moment_t(mu, m + n, shift=1))
    return complex(moment_t(mu, m + n))


def exceptional_measure_atoms(graph_id: str) -> DiscreteMeasure:
    """S3-symmetrized torus atom list for the exceptional SU(3) graphs,
    assembled from eigendata (these measures are not root-of-unity
    combinations; this is their atom-list representation)."""
    ed = eigendata(graph_id)
    l = 8 if graph_id.startswith("SU3-E(") else 12
    atoms: dict = {}
    for e in ed.entries:
        t = su3_exponent_angles(l, e.exponent)
        w = e.weight * e.multiplicity
        for q in deltoid.s3_orbit(t):
            atoms[q] = atoms.get(q, 0.0) + w / 6.0
    return DiscreteMeasure(2, atoms, f"{graph_id}: S3-orbit atoms of eigendata")


# -- linear solver for measure decompositions --------------------------------

@dataclass
class FitResult:
    feasible: bool
    coefficients: Optional[list]
    residual: float                       # max |A c - b| at the least-squares fit
    certificate: list = field(default_factory=list)  # (row, residual) of inconsistent rows

    @property
    def max_certificate_residual(self) -> float:
        return max((abs(r) for _, r in self.certificate), default=0.0)


def fit_linear_system(rows: Sequence[Sequence[float]], rhs: Sequence[float],
                      tol: float = 1e-9) -> FitResult:
    """Solve rows * c = rhs; on inconsistency report which equations fail.

    Sequential elimination (in the given row order) produces the
    certificate: a row that reduces to 0 = r with |r| > tol is inconsistent.
    Rational inputs are eliminated exactly.
    """
    exact = all(
        isinstance(x, (int, Fraction)) for row in rows for x in row
    ) and all(isinstance(x, (int, Fraction)) for x in rhs)
    work = [
        ([Fraction(x) for x in row] if exact else [float(x) for x in row])
        + [Fraction(b) if exact else float(b)]
        for row, b in zip(rows, rhs)
    ]
    ncols = len(rows[0])
    pivots: List[Tuple[int, list]] = []
    certificate = []
    for ri, row in enumerate(work):
        row = list(row)
        for col, prow in pivots:
            f = row[col] / prow[col]
            if f:
                row = [a - f * b for a, b in zip(row, prow)]
        lead = None
        for c in range(ncols):
            if (row[c] != 0) if exact else (abs(row[c]) > 1e-12):
                lead = c
                break
        if lead is None:
            r = row[-1]
            if (r != 0) if exact else (abs(r) > tol):
                certificate.append((ri, float(r)))
        else:
            # Gauss-Jordan: clear the new pivot column from earlier pivots so
            # each pivot row meets only its own column among pivot columns
            for k, (col0, prow0) in enumerate(pivots):
                f = prow0[lead] / row[lead]
                if f:
                    pivots[k] = (col0, [a - f * b for a, b in zip(prow0, row)])
            pivots.append((lead, row))

    a = np.array([[float(x) for x in row] for row in rows], dtype=float)
    b = np.array([float(x) for x in rhs], dtype=float)
    coeffs, *_ = np.linalg.lstsq(a, b, rcond=None)
    residual = float(np.max(np.abs(a @ coeffs - b))) if len(rhs) else 0.0
    feasible = residual < tol and not certificate
    sol = None
    if feasible:
        if exact:
            solution = [Fraction(0)] * ncols
            for col, prow in pivots:
                acc = prow[-1]
                for c in range(ncols):
                    if c != col:
                        acc -= prow[c] * solution[c]
                solution[col] = acc / prow[col]
            sol = solution
        else:
            sol = [float(c) for c in coeffs]
    return FitResult(feasible, sol, residual, certificate)


def cyclotomic_fit(target: DiscreteMeasure, basis: Sequence[DiscreteMeasure],
                   tol: float = 1e-9) -> FitResult:
    """Express target as a linear combination of the basis measures, by
    comparing weights atom-by-atom on the union of their supports."""
    if not basis:
        raise InvalidParameterError("empty basis")
    keys = sorted(set(target.atoms) | {k for mu in basis for k in mu.atoms})
    rows = [[mu.atoms.get(k, 0) for mu in basis] for k in keys]
    rhs = [target.atoms.get(k, 0) for k in keys]
    return fit_linear_system(rows, rhs, tol=tol)


def cyclotomic_basis(n_divides: int) -> List[DiscreteMeasure]:
    """The cyclotomic candidates {d_n, alpha d_n : n | N} (alpha d_1 = 0 is
    omitted, matching the definition of cyclotomic measures)."""
    divisors = [n for n in range(1, n_divides + 1) if n_divides % n == 0]
    out: List[DiscreteMeasure] = [d_measure(n) for n in divisors]
    out += [with_alpha(d_measure(n)) for n in divisors if n >= 2]
    return out


def exceptional_obstruction_system(graph_id: str):
    """The three-equation linear system showing the exceptional SU(3)
    spectral measures are not built from uniform / J^2-weighted grids.

    Rows are (1, J(theta)^2 / 16 pi^4) at three grid points that any
    candidate combination must weight together; the right side holds the
    actual measure weights at those points.
    """
    if graph_id == "SU3-E(8)":
        probes = [
            (Fraction(8, 24), Fraction(13, 24)),
            (Fraction(7, 24), Fraction(8, 24)),
            (Fraction(10, 24), Fraction(11, 24)),
        ]
        ed = {tuple(e.exponent): e.weight for e in eigendata(graph_id).entries}
        rhs = [ed[(5, 0)], ed[(2, 1)], ed[(2, 3)]]
    elif graph_id == "SU3-E1(12)":
        probes = [
            (Fraction(1, 12), Fraction(1, 12)),
            (Fraction(5, 12), Fraction(5, 12)),
            (Fraction(5, 12), Fraction(6, 12)),
        ]
        ed = {tuple(e.exponent): e.weight for e in eigendata(graph_id).entries}
        rhs = [ed[(0, 0)], ed[(4, 4)], 0.0]
    else:
        raise InvalidParameterError(f"no obstruction system for {graph_id!r}")
    rows = []
    for p in probes:
        jv = deltoid.jacobian(p, "sine_product")
        rows.append([1.0, jv * jv / (16 * math.pi ** 4)])
    return rows, rhs
