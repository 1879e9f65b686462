"""Truncated power series (scalar and matrix) with exact rational
coefficients, and the series invariants of the graph catalogue: Hilbert
series of pre-projective and CY3-type path algebras, loop generating
functions, T and Theta series by independent routes, Kostant numerator
extraction, and Molien series of abelian SU(3) subgroups.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

from .errors import (
    FailedIdentityError,
    InvalidParameterError,
    SymmetryError,
)
from .graphs import Graph, _cycle_graph, by_id, su3_rotation

Number = Union[int, Fraction, float, complex]


@dataclass
class TruncatedSeries:
    coeffs: list
    var: str = "q"

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    # -- constructors --------------------------------------------------------

    @staticmethod
    def zero(order: int, var: str = "q") -> "TruncatedSeries":
        return TruncatedSeries([Fraction(0)] * (order + 1), var)

    @staticmethod
    def one(order: int, var: str = "q") -> "TruncatedSeries":
        s = TruncatedSeries.zero(order, var)
        s.coeffs[0] = Fraction(1)
        return s

    @staticmethod
    def from_coeffs(coeffs: Sequence[Number], order: Optional[int] = None,
                    var: str = "q") -> "TruncatedSeries":
        c = list(coeffs)
        if order is not None:
            c = (c + [0] * (order + 1))[: order + 1]
        return TruncatedSeries(c, var)

    @staticmethod
    def geometric(c: Number, order: int, var: str = "q") -> "TruncatedSeries":
        """1 / (1 - c q)."""
        out = [1]
        for _ in range(order):
            out.append(out[-1] * c)
        return TruncatedSeries(out, var)

    @staticmethod
    def inverse_quadratic(chi: Number, order: int, var: str = "t") -> "TruncatedSeries":
        """1 / (1 - chi t + t^2)."""
        a = [1, chi]
        for k in range(2, order + 1):
            a.append(chi * a[k - 1] - a[k - 2])
        return TruncatedSeries(a[: order + 1], var)

    # -- arithmetic ----------------------------------------------------------

    def _zip(self, other: "TruncatedSeries"):
        n = min(self.order, other.order)
        return n, self.coeffs, other.coeffs

    def __add__(self, other):
        n, a, b = self._zip(other)
        return TruncatedSeries([a[k] + b[k] for k in range(n + 1)], self.var)

    def __sub__(self, other):
        n, a, b = self._zip(other)
        return TruncatedSeries([a[k] - b[k] for k in range(n + 1)], self.var)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            n = min(self.order, other.order)
            out = [0] * (n + 1)
            for i, ai in enumerate(self.coeffs[: n + 1]):
                if ai == 0:
                    continue
                for j in range(0, n + 1 - i):
                    bj = other.coeffs[j]
                    if bj != 0:
                        out[i + j] += ai * bj
            return TruncatedSeries(out, self.var)
        return TruncatedSeries([c * other for c in self.coeffs], self.var)

    __rmul__ = __mul__

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coeffs], self.var)

    def inverse(self) -> "TruncatedSeries":
        a0 = self.coeffs[0]
        if a0 == 0:
            raise InvalidParameterError("series inverse needs a unit constant term")
        inv0 = Fraction(1, 1) / a0 if isinstance(a0, (int, Fraction)) else 1.0 / a0
        out = [inv0]
        for k in range(1, self.order + 1):
            acc = 0
            for j in range(1, k + 1):
                aj = self.coeffs[j] if j < len(self.coeffs) else 0
                acc += aj * out[k - j]
            out.append(-inv0 * acc)
        return TruncatedSeries(out, self.var)

    def compose(self, inner: "TruncatedSeries") -> "TruncatedSeries":
        """self(inner), requiring inner to have zero constant term."""
        if inner.coeffs[0] != 0:
            raise InvalidParameterError("composition needs zero constant term")
        order = inner.order
        acc = TruncatedSeries.zero(order, inner.var)
        for c in reversed(self.coeffs):
            acc = acc * inner
            acc.coeffs[0] = acc.coeffs[0] + c
        return acc

    def even_part_sqrt(self) -> "TruncatedSeries":
        """Coefficients of q^{2k} reinterpreted at q^k (asserting odd = 0)."""
        for k in range(1, self.order + 1, 2):
            if self.coeffs[k] != 0:
                raise FailedIdentityError(f"odd coefficient at degree {k} is nonzero")
        return TruncatedSeries(self.coeffs[::2], self.var)

    def substitute_q_squared(self, order: int) -> "TruncatedSeries":
        """self(q^2) to the given order."""
        out = [0] * (order + 1)
        for k, c in enumerate(self.coeffs):
            if 2 * k > order:
                break
            out[2 * k] = c
        return TruncatedSeries(out, self.var)

    def close_to(self, other: "TruncatedSeries", tol: float = 0.0) -> bool:
        n = min(self.order, other.order)
        for k in range(n + 1):
            if abs(complex(self.coeffs[k]) - complex(other.coeffs[k])) > tol:
                return False
        return True

    def max_difference(self, other: "TruncatedSeries") -> float:
        n = min(self.order, other.order)
        return max(
            abs(complex(self.coeffs[k]) - complex(other.coeffs[k]))
            for k in range(n + 1)
        )

    def is_polynomial_of_degree(self, d: int, tol: float = 0.0) -> bool:
        return all(
            abs(complex(c)) <= tol for c in self.coeffs[d + 1:]
        )

    def to_json(self) -> dict:
        def fmt(c):
            if isinstance(c, Fraction):
                return f"{c.numerator}/{c.denominator}"
            if isinstance(c, int):
                return f"{c}/1"
            return repr(float(c))

        return {"variable": self.var, "order": self.order,
                "coeffs": [fmt(c) for c in self.coeffs]}


def poly_from_factors(factors: Sequence[Tuple[int, int]], order: int) -> TruncatedSeries:
    """Product of (1 + sign * q^k) over (sign, k) pairs, as a series."""
    out = TruncatedSeries.one(order)
    for sign, k in factors:
        f = TruncatedSeries.zero(order)
        f.coeffs[0] = Fraction(1)
        if k <= order:
            f.coeffs[k] = Fraction(sign)
        out = out * f
    return out


def rational_series(num: Sequence[Tuple[int, int]], den: Sequence[Tuple[int, int]],
                    order: int) -> TruncatedSeries:
    return poly_from_factors(num, order) * poly_from_factors(den, order).inverse()


# ---------------------------------------------------------------------------
# integer matrices
# ---------------------------------------------------------------------------

Matrix = Tuple[Tuple[int, ...], ...]


def mat_identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_zero(n: int) -> Matrix:
    return tuple(tuple(0 for _ in range(n)) for _ in range(n))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    bt = tuple(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


def mat_add(a: Matrix, b: Matrix, sign: int = 1) -> Matrix:
    return tuple(
        tuple(x + sign * y for x, y in zip(ra, rb)) for ra, rb in zip(a, b)
    )


def mat_transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a))


def mat_scale(c: int, a: Matrix) -> Matrix:
    return tuple(tuple(c * x for x in row) for row in a)


@dataclass
class MatrixSeries:
    graph_id: str
    mats: list                  # list of Matrix, index = degree
    var: str = "t"

    @property
    def order(self) -> int:
        return len(self.mats) - 1

    @property
    def size(self) -> int:
        return len(self.mats[0])

    def entry(self, i: int, j: int) -> TruncatedSeries:
        return TruncatedSeries([m[i][j] for m in self.mats], self.var)

    def total_at_one(self) -> int:
        """Sum of all coefficients of all entries (requires termination)."""
        return sum(sum(sum(row) for row in m) for m in self.mats)

    def to_json(self) -> dict:
        return {
            "graph_id": self.graph_id,
            "variable": self.var,
            "order": self.order,
            "coefficient_matrices": [[list(r) for r in m] for m in self.mats],
        }


# ---------------------------------------------------------------------------
# SU(2) pre-projective Hilbert series
# ---------------------------------------------------------------------------

def su2_involution(graph: Graph) -> Matrix:
    """The numerator permutation: the unique nontrivial involution for A_n,
    D_odd and E6; the identity for D_even, E7, E8 and tadpoles."""
    n = graph.n_vertices
    fam = graph.id.split("(")[0]
    idx = {v: i for i, v in enumerate(graph.vertices)}
    perm = list(range(n))
    if fam == "A":
        for i, v in enumerate(graph.vertices):
            perm[i] = idx[n + 1 - v]
    elif fam == "D" and n % 2 == 1:
        perm[idx[1]], perm[idx[2]] = idx[2], idx[1]
    elif fam == "E" and n == 6:
        swaps = {1: 5, 5: 1, 2: 4, 4: 2, 3: 3, 6: 6}
        for v, w in swaps.items():
            perm[idx[v]] = idx[w]
    p = [[0] * n for _ in range(n)]
    for i, j in enumerate(perm):
        p[i][j] = 1
    return tuple(tuple(row) for row in p)


def _check_automorphism(p: Matrix, adj: Matrix, transpose_too: bool = False) -> None:
    if mat_mul(p, adj) != mat_mul(adj, p):
        raise SymmetryError("numerator permutation does not commute with the adjacency")
    if transpose_too:
        at = mat_transpose(adj)
        if mat_mul(p, at) != mat_mul(at, p):
            raise SymmetryError("numerator permutation does not commute with Delta^T")


def hilbert_su2(graph: Graph, order: int = 40) -> MatrixSeries:
    """Matrix Hilbert series of the pre-projective algebra of an unoriented
    graph: (1 + P t^h)(1 - Delta t + t^2)^{-1} for ADET graphs (a matrix
    polynomial of degree h - 2), (1 - Delta t + t^2)^{-1} otherwise."""
    if not graph.symmetric:
        raise InvalidParameterError("hilbert_su2 needs an unoriented graph")
    fam = graph.id.split("(")[0]
    adet = fam in ("A", "D", "E", "Tad")
    adj = graph.adjacency
    n = graph.n_vertices
    h = graph.coxeter_h if adet else None
    p = su2_involution(graph) if adet else None
    if p is not None:
        _check_automorphism(p, adj)
    mats: List[Matrix] = [mat_identity(n)]
    for k in range(1, order + 1):
        m = mat_mul(adj, mats[k - 1])
        if k >= 2:
            m = mat_add(m, mats[k - 2], sign=-1)
        if adet and k == h:
            m = mat_add(m, p)
        mats.append(m)
    hs = MatrixSeries(graph.id, mats)
    if adet:
        for k in range(h - 1, order + 1):
            if mats[k] != mat_zero(n):
                raise FailedIdentityError(
                    f"{graph.id}: pre-projective series fails to terminate at degree {k}"
                )
    for m in mats:
        if any(x < 0 for row in m for x in row):
            raise FailedIdentityError(f"{graph.id}: negative Hilbert coefficient")
    return hs


def su2_numerator(hs: MatrixSeries, graph: Graph) -> List[Matrix]:
    """Coefficients of (1 - Delta t + t^2) * H, for identity checks."""
    adj = graph.adjacency
    n = graph.n_vertices
    out = []
    for k in range(hs.order + 1):
        m = hs.mats[k]
        if k >= 1:
            m = mat_add(m, mat_mul(adj, hs.mats[k - 1]), sign=-1)
        if k >= 2:
            m = mat_add(m, hs.mats[k - 2])
        out.append(m)
    return out


# ---------------------------------------------------------------------------
# SU(3) Hilbert series
# ---------------------------------------------------------------------------

def hilbert_su3(graph: Graph, p: Optional[Matrix] = None, h: Optional[int] = None,
                order: Optional[int] = None) -> MatrixSeries:
    """(1 - P t^h)(1 - Delta t + Delta^T t^2 - t^3)^{-1} for a directed
    SU(3) fusion graph; P defaults to the triangle rotation for A^(l) and
    the identity for A^(l)*."""
    adj = graph.adjacency
    adjt = mat_transpose(adj)
    n = graph.n_vertices
    fam = graph.id.split("(")[0]
    if h is None:
        h = graph.coxeter_h
    if h is None:
        raise InvalidParameterError("hilbert_su3 needs the Coxeter number h")
    if p is None:
        if fam == "SU3-A":
            p = su3_rotation(graph)
        else:
            p = mat_identity(n)
    _check_automorphism(p, adj, transpose_too=True)
    if order is None:
        order = 3 * h
    mats: List[Matrix] = [mat_identity(n)]
    for k in range(1, order + 1):
        m = mat_mul(adj, mats[k - 1])
        if k >= 2:
            m = mat_add(m, mat_mul(adjt, mats[k - 2]), sign=-1)
        if k >= 3:
            m = mat_add(m, mats[k - 3])
        if k == h:
            m = mat_add(m, p, sign=-1)
        mats.append(m)
    hs = MatrixSeries(graph.id, mats)
    for m in mats:
        if any(x < 0 for row in m for x in row):
            raise FailedIdentityError(f"{graph.id}: negative Hilbert coefficient")
    return hs


def su3_numerator(hs: MatrixSeries, graph: Graph) -> List[Matrix]:
    """Coefficients of (1 - Delta t + Delta^T t^2 - t^3) * H."""
    adj = graph.adjacency
    adjt = mat_transpose(adj)
    out = []
    for k in range(hs.order + 1):
        m = hs.mats[k]
        if k >= 1:
            m = mat_add(m, mat_mul(adj, hs.mats[k - 1]), sign=-1)
        if k >= 2:
            m = mat_add(m, mat_mul(adjt, hs.mats[k - 2]))
        if k >= 3:
            m = mat_add(m, hs.mats[k - 3], sign=-1)
        out.append(m)
    return out


def cy3_hilbert(mckay: Graph, order: int = 30) -> MatrixSeries:
    """(1 - Delta t + Delta^T t^2 - t^3)^{-1} for a subgroup McKay graph."""
    adj = mckay.adjacency
    adjt = mat_transpose(adj)
    n = mckay.n_vertices
    mats: List[Matrix] = [mat_identity(n)]
    for k in range(1, order + 1):
        m = mat_mul(adj, mats[k - 1])
        if k >= 2:
            m = mat_add(m, mat_mul(adjt, mats[k - 2]), sign=-1)
        if k >= 3:
            m = mat_add(m, mats[k - 3])
        mats.append(m)
    return MatrixSeries(mckay.id, mats)


def abelian_mckay(m: int, weights: Tuple[int, int, int]) -> Graph:
    """McKay graph of the cyclic subgroup of SU(3) acting by the diagonal
    matrix with character weights (a, b, c); needs a + b + c = 0 mod m."""
    if m < 2:
        raise InvalidParameterError("cyclic subgroup needs order >= 2")
    a, b, c = (w % m for w in weights)
    if (a + b + c) % m != 0:
        raise InvalidParameterError("weights must sum to 0 mod m (det = 1)")
    adj = [[0] * m for _ in range(m)]
    for k in range(m):
        for w in (a, b, c):
            adj[k][(k + w) % m] += 1
    return Graph(
        id=f"McKay-Z{m}{(a, b, c)}",
        vertices=tuple(range(m)),
        adjacency=tuple(tuple(r) for r in adj),
        distinguished=0,
        coxeter_h=None,
        symmetric=False,
    )


def molien_abelian(m: int, weights: Tuple[int, int, int], j: int,
                   order: int) -> TruncatedSeries:
    """Molien series of the symmetric algebra of the dual module for the
    cyclic subgroup: coefficient k counts degree-k monomials of character j.

    Exact, by enumeration of monomial weights: the dual module carries the
    negated weights.
    """
    a, b, c = (w % m for w in weights)
    coeffs = []
    for k in range(order + 1):
        cnt = 0
        for x in range(k + 1):
            for y in range(k + 1 - x):
                z = k - x - y
                if (-(a * x + b * y + c * z)) % m == j % m:
                    cnt += 1
        coeffs.append(Fraction(cnt))
    return TruncatedSeries(coeffs, "t")


def molien_abelian_det(m: int, weights: Tuple[int, int, int], j: int,
                       order: int) -> TruncatedSeries:
    """Same series by the determinant form (1/m) sum_g chi_j(g)* /
    det(1 - conj(rho(g)) t), in complex floats; a cross-check route."""
    import cmath

    a, b, c = (w % m for w in weights)
    coeffs = [0j] * (order + 1)
    for g in range(m):
        eps = [cmath.exp(-2j * math.pi * g * w / m) for w in (a, b, c)]
        den = TruncatedSeries.one(order)
        for e in eps:
            den = den * TruncatedSeries.from_coeffs([1, -e], order)
        inv = den.inverse()
        chi_conj = cmath.exp(-2j * math.pi * g * j / m)
        for k in range(order + 1):
            coeffs[k] += chi_conj * inv.coeffs[k] / m
    out = []
    for cc in coeffs:
        if abs(cc.imag) > 1e-9:
            raise AssertionError("Molien coefficients must be real")
        out.append(cc.real)
    return TruncatedSeries(out, "t")


# ---------------------------------------------------------------------------
# loop series, T series, Theta series
# ---------------------------------------------------------------------------

def loop_series(graph: Graph, order: int) -> TruncatedSeries:
    """f(z) = sum_k [Delta^{2k}]_{*,*} z^k (exact loop counts)."""
    from .paths import moment_path_count

    return TruncatedSeries(
        [Fraction(moment_path_count(graph, 2 * k)) for k in range(order + 1)], "z"
    )


_T_CLOSED_FORMS: Dict[str, Callable[[int, int], tuple]] = {}


def t_closed_form(graph_id: str, order: int) -> TruncatedSeries:
    """The tabulated closed forms of the T series."""
    import re

    m = re.match(r"^(?P<fam>[A-Za-z0-9\-]+?)\((?P<arg>\d+)\)$", graph_id)
    if not m:
        raise InvalidParameterError(f"cannot parse graph id {graph_id!r}")
    fam, k = m.group("fam"), int(m.group("arg"))
    if fam == "A":
        num, den = [(-1, k)], [(-1, k + 1)]
    elif fam == "D":
        # as derived from the measure alpha d'_{n-1} (and from loop counts);
        # tables sometimes print this row with the index shifted by one
        num, den = [(1, k - 2)], [(1, k - 1)]
    elif fam == "E" and k == 6:
        num, den = [(-1, 6), (-1, 8)], [(-1, 3), (-1, 12)]
    elif fam == "E" and k == 7:
        num, den = [(-1, 9), (-1, 12)], [(-1, 4), (-1, 18)]
    elif fam == "E" and k == 8:
        num, den = [(-1, 10), (-1, 15), (-1, 18)], [(-1, 5), (-1, 9), (-1, 30)]
    elif fam == "Aff-A":
        if k % 2 != 0:
            raise InvalidParameterError("affine A closed form needs an even cycle")
        num, den = [(1, k // 2)], [(-1, 1), (-1, k // 2)]
    elif fam == "Aff-D":
        num, den = [(1, k - 1)], [(-1, 2), (-1, k - 2)]
    elif fam == "Aff-E" and k == 6:
        num, den = [(1, 6)], [(-1, 3), (-1, 4)]
    elif fam == "Aff-E" and k == 7:
        num, den = [(1, 9)], [(-1, 4), (-1, 6)]
    elif fam == "Aff-E" and k == 8:
        num, den = [(1, 15)], [(-1, 6), (-1, 10)]
    else:
        raise InvalidParameterError(f"no closed-form T series for {graph_id!r}")
    return rational_series(num, den, order)


def _one_plus_q(order: int) -> TruncatedSeries:
    return TruncatedSeries.from_coeffs([Fraction(1), Fraction(1)], order)


def _w_substitution(order: int) -> TruncatedSeries:
    """q / (1 + q)^2 as a series."""
    q = TruncatedSeries.from_coeffs([Fraction(0), Fraction(1)], order)
    return q * (_one_plus_q(order) * _one_plus_q(order)).inverse()


def t_series(graph_id: str, order: int = 40, route: str = "closed_form") -> TruncatedSeries:
    """T series of a graph by one of three routes: the tabulated closed form,
    the circle-moment series of the canonical measure, or composition of the
    loop series with q/(1+q)^2."""
    if route == "closed_form":
        return t_closed_form(graph_id, order)
    if route == "measure":
        from .measures import canonical_measure, circle_series

        mu = canonical_measure(graph_id)
        g = TruncatedSeries(circle_series(mu, 2 * order), "q")
        g_sqrt = g.even_part_sqrt()          # G(q^{1/2}); odd moments vanish
        num = 2 * g_sqrt - TruncatedSeries.one(order)
        den = TruncatedSeries.from_coeffs([1, -1], order)
        return num * den.inverse()
    if route == "f_compose":
        graph = by_id(graph_id)
        f = loop_series(graph, order)
        composed = TruncatedSeries(f.coeffs, "q").compose(_w_substitution(order))
        return composed * _one_plus_q(order).inverse()
    raise InvalidParameterError(f"unknown T-series route {route!r}")


def theta_series(graph_id: str, order: int = 24, route: str = "measure") -> TruncatedSeries:
    """Theta series: multiplicities of irreducible Temperley-Lieb modules.

    measure route: Theta(q^2) = 2 G(q) + q^2 - 1 with G the circle-moment
    series;  f route: Theta(q) = q + (1-q)/(1+q) * f(q/(1+q)^2)."""
    if route == "measure":
        from .measures import canonical_measure, circle_series

        mu = canonical_measure(graph_id)
        g = TruncatedSeries(circle_series(mu, 2 * order), "q")
        g_even = g.even_part_sqrt()
        coeffs = [2 * c for c in g_even.coeffs]
        coeffs[0] -= 1
        if order >= 1:
            coeffs[1] += 1
        return TruncatedSeries(coeffs[: order + 1], "q")
    if route == "f":
        graph = by_id(graph_id)
        f = loop_series(graph, order)
        composed = TruncatedSeries(f.coeffs, "q").compose(_w_substitution(order))
        one_minus = TruncatedSeries.from_coeffs([1, -1], order)
        out = composed * one_minus * _one_plus_q(order).inverse()
        out.coeffs[1] = out.coeffs[1] + 1
        return out
    raise InvalidParameterError(f"unknown Theta route {route!r}")


def generalized_t(graph: Graph, order: int = 24) -> MatrixSeries:
    """The matrix series (1+q)^{-1} ftilde(q/(1+q)^2) evaluated at q = t^2,
    where ftilde(z) = (1 - z^{1/2} Delta)^{-1} is handled in the auxiliary
    variable w = z^{1/2} = t/(1+t^2).

    Coded independently of hilbert_su2; the two must agree entrywise.
    """
    if not graph.symmetric:
        raise InvalidParameterError("generalized T series needs an unoriented graph")
    n = graph.n_vertices
    t = TruncatedSeries.from_coeffs([Fraction(0), Fraction(1)], order)
    one_t2 = TruncatedSeries.from_coeffs([Fraction(1), Fraction(0), Fraction(1)], order)
    w = t * one_t2.inverse()
    prefactor = one_t2.inverse()
    entries = [[TruncatedSeries.zero(order, "t") for _ in range(n)] for _ in range(n)]
    power = mat_identity(n)
    wk = TruncatedSeries.one(order, "t")
    for k in range(order + 1):
        term_scalar = wk * prefactor
        for i in range(n):
            for j in range(n):
                if power[i][j]:
                    entries[i][j] = entries[i][j] + power[i][j] * term_scalar
        power = mat_mul(power, graph.adjacency)
        wk = wk * w
    mats = []
    for k in range(order + 1):
        mats.append(
            tuple(tuple(entries[i][j].coeffs[k] for j in range(n)) for i in range(n))
        )
    return MatrixSeries(graph.id, mats)


def g_composition_route(cd, order: int) -> TruncatedSeries:
    """(1 + t^2)^{-1} G(t / (1 + t^2)) with G the moment generating series of
    a subgroup's class data.

    The raw composition has exponentially large alternating intermediate
    coefficients (character values up to 2 raised to the order), so floats
    lose everything; the character values are rationalized to 40 digits and
    the composition runs in exact arithmetic.
    """
    n = cd.order
    g = TruncatedSeries.zero(order)
    scale = 10 ** 40
    for r in cd.rows:
        chi = Fraction(round(r.chi_rho * scale), scale)
        g = g + TruncatedSeries.geometric(chi, order) * Fraction(r.size, n)
    one_t2 = TruncatedSeries.from_coeffs([Fraction(1), Fraction(0), Fraction(1)], order)
    inner = TruncatedSeries.from_coeffs([Fraction(0), Fraction(1)], order) * one_t2.inverse()
    composed = TruncatedSeries(g.coeffs, "t").compose(inner) * one_t2.inverse()
    return TruncatedSeries([float(c) for c in composed.coeffs], "t")


# ---------------------------------------------------------------------------
# Kostant numerators
# ---------------------------------------------------------------------------

_KOSTANT_AB = {"E": {6: (6, 8), 7: (8, 12), 8: (12, 20)}}


def kostant_parameters(graph_id: str) -> Tuple[int, int]:
    """(a, b) with a + b = h + 2 and a b = 2 |Gamma|."""
    import re

    m = re.match(r"^(?P<fam>[ADE])\((?P<arg>\d+)\)$", graph_id)
    if not m:
        raise InvalidParameterError(f"no Kostant parameters for {graph_id!r}")
    fam, k = m.group("fam"), int(m.group("arg"))
    if fam == "A":
        return (2, k + 1)
    if fam == "D":
        return (4, 2 * k - 4)
    return _KOSTANT_AB["E"][k]


def kostant_affine_partner(graph_id: str) -> Graph:
    import re

    m = re.match(r"^(?P<fam>[ADE])\((?P<arg>\d+)\)$", graph_id)
    fam, k = m.group("fam"), int(m.group("arg"))
    if fam == "A":
        return _cycle_graph(k + 1, id_=f"McKay-Z({k + 1})")
    if fam == "D":
        return by_id(f"Aff-D({k})")
    return by_id(f"Aff-E({k})")


def kostant_closed_form_check(graph_id: str, order: Optional[int] = None) -> list:
    """For each vertex gamma of the affine partner, multiply the Hilbert
    column H_{gamma, id} by (1 - t^a)(1 - t^b) and assert the product is a
    polynomial of degree <= a + b - 2; returns the numerators z_gamma."""
    a, b = kostant_parameters(graph_id)
    if order is None:
        order = 2 * (a + b)
    affine = kostant_affine_partner(graph_id)
    hs = hilbert_su2(affine, order)
    star = affine.distinguished
    denom = poly_from_factors([(-1, a), (-1, b)], order)
    out = []
    for gamma in range(affine.n_vertices):
        col = hs.entry(gamma, star)
        z = col * denom
        for k in range(a + b - 1, order + 1):
            if z.coeffs[k] != 0:
                raise FailedIdentityError(
                    f"{graph_id}: vertex {affine.vertices[gamma]} numerator "
                    f"fails to truncate at degree {k}"
                )
        out.append(TruncatedSeries(z.coeffs[: a + b - 1], "t"))
    return out
