"""Graph catalogue: ADE / affine Dynkin diagrams, truncated infinite graphs,
SU(3) fusion graphs, and closed-form eigendata (exponents, eigenvalues,
squared first-entry weights) for each of them.

Vertex conventions follow the usual diagram pictures: for A_n the
distinguished vertex * is the endpoint 1, for D_n it is the tail-end vertex n
(the two fork tips are vertices 1 and 2), for E_n it is the degree-1 vertex of
lowest Perron-Frobenius weight, and for every affine diagram it is the
extended vertex (the identity representation of the McKay subgroup).
"""

from __future__ import annotations

import cmath
import json
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from typing import Optional, Union

import numpy as np

from .errors import (
    DataUnavailableError,
    InvalidParameterError,
    UnsupportedConstructionError,
)

Exponent = Union[int, tuple, str]


@dataclass(frozen=True)
class Graph:
    id: str
    vertices: tuple
    adjacency: tuple          # tuple of tuples of non-negative ints
    distinguished: int        # index into vertices
    coxeter_h: Optional[int] = None
    symmetric: bool = True    # SU(2) graphs; False for directed SU(3) graphs
    trunc_depth: Optional[int] = None

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    def degree(self, i: int) -> int:
        return sum(self.adjacency[i])

    def degrees(self) -> list:
        return [self.degree(i) for i in range(self.n_vertices)]

    def spectral_radius(self) -> float:
        a = np.array(self.adjacency, dtype=float)
        return float(max(abs(np.linalg.eigvals(a))))

    def index_of(self, label) -> int:
        return self.vertices.index(label)

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "vertices": [str(v) for v in self.vertices],
            "adjacency": [list(row) for row in self.adjacency],
            "distinguished": self.distinguished,
            "coxeter_h": self.coxeter_h,
        }


@dataclass(frozen=True)
class EigenEntry:
    exponent: Exponent
    eigenvalue: complex
    weight: float             # |psi^exponent_*|^2
    multiplicity: int = 1


@dataclass(frozen=True)
class EigenData:
    graph_id: str
    entries: tuple

    def total_mass(self) -> float:
        return sum(e.weight * e.multiplicity for e in self.entries)

    def to_json(self) -> dict:
        return {
            "graph_id": self.graph_id,
            "entries": [
                {
                    "exponent": list(e.exponent) if isinstance(e.exponent, tuple) else e.exponent,
                    "eigenvalue": [e.eigenvalue.real, e.eigenvalue.imag],
                    "weight": e.weight,
                    "multiplicity": e.multiplicity,
                }
                for e in self.entries
            ],
        }


def _graph_from(id_, labels, edges, star, h=None, symmetric=True, depth=None, loops=()):
    """Assemble a Graph from an undirected edge list (plus optional loops)."""
    n = len(labels)
    idx = {v: i for i, v in enumerate(labels)}
    adj = [[0] * n for _ in range(n)]
    for u, v in edges:
        adj[idx[u]][idx[v]] += 1
        adj[idx[v]][idx[u]] += 1
    for u in loops:
        adj[idx[u]][idx[u]] += 1
    return Graph(
        id=id_,
        vertices=tuple(labels),
        adjacency=tuple(tuple(row) for row in adj),
        distinguished=idx[star],
        coxeter_h=h,
        symmetric=symmetric,
        trunc_depth=depth,
    )


def _directed_graph(id_, labels, directed_edges, star, h=None, depth=None):
    n = len(labels)
    idx = {v: i for i, v in enumerate(labels)}
    adj = [[0] * n for _ in range(n)]
    for u, v in directed_edges:
        adj[idx[u]][idx[v]] += 1
    return Graph(
        id=id_,
        vertices=tuple(labels),
        adjacency=tuple(tuple(row) for row in adj),
        distinguished=idx[star],
        coxeter_h=h,
        symmetric=False,
        trunc_depth=depth,
    )


# ---------------------------------------------------------------------------
# SU(2): Dynkin, tadpole and affine diagrams
# ---------------------------------------------------------------------------

def build_su2_graph(family: str, n: int) -> Graph:
    """Dynkin diagram A_n, D_n, E_n or tadpole Tad_n with its * vertex."""
    if family == "A":
        if n < 1:
            raise InvalidParameterError("A_n needs n >= 1")
        labels = list(range(1, n + 1))
        edges = [(i, i + 1) for i in range(1, n)]
        return _graph_from(f"A({n})", labels, edges, star=1, h=n + 1)
    if family == "D":
        if n < 4:
            raise InvalidParameterError("D_n needs n >= 4")
        labels = list(range(1, n + 1))
        edges = [(1, 3), (2, 3)] + [(i, i + 1) for i in range(3, n)]
        return _graph_from(f"D({n})", labels, edges, star=n, h=2 * n - 2)
    if family == "E":
        if n not in (6, 7, 8):
            raise InvalidParameterError("E_n needs n in {6, 7, 8}")
        if n == 6:
            edges = [(1, 2), (2, 3), (3, 4), (4, 5), (3, 6)]
            h = 12
        elif n == 7:
            edges = [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 7)]
            h = 18
        else:
            edges = [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (5, 8)]
            h = 30
        return _graph_from(f"E({n})", list(range(1, n + 1)), edges, star=1, h=h)
    if family == "Tadpole":
        if n < 1:
            raise InvalidParameterError("Tad_n needs n >= 1")
        labels = list(range(1, n + 1))
        edges = [(i, i + 1) for i in range(1, n)]
        return _graph_from(f"Tad({n})", labels, edges, star=1, h=2 * n + 1, loops=(n,))
    raise InvalidParameterError(f"unknown SU(2) family {family!r}")


def _cycle_graph(m: int, id_: Optional[str] = None) -> Graph:
    """m-cycle (McKay graph of the cyclic group Z_m); m = 2 gives a double bond."""
    if m < 2:
        raise InvalidParameterError("cycle needs >= 2 vertices")
    labels = list(range(m))
    adj = [[0] * m for _ in range(m)]
    for i in range(m):
        adj[i][(i + 1) % m] += 1
        adj[(i + 1) % m][i] += 1
    return Graph(
        id=id_ or f"Aff-A({m})",
        vertices=tuple(labels),
        adjacency=tuple(tuple(row) for row in adj),
        distinguished=0,
        coxeter_h=None,
        symmetric=True,
    )


def build_su2_affine_graph(family: str, n: int) -> Graph:
    """Affine Dynkin diagram; * is always the extended vertex."""
    if family == "A1":
        # n is the vertex count of the cycle; only even cycles are the McKay
        # graphs A^(1)_{2m} used here.
        if n < 2 or n % 2 != 0:
            raise InvalidParameterError("affine A needs an even vertex count >= 2")
        return _cycle_graph(n)
    if family == "D1":
        if n < 4:
            raise InvalidParameterError("affine D_n needs n >= 4")
        labels = [0] + list(range(1, n + 1))
        edges = [(1, 3), (2, 3)] + [(i, i + 1) for i in range(3, n)] + [(0, n - 1)]
        return _graph_from(f"Aff-D({n})", labels, edges, star=0)
    if family == "E1":
        if n not in (6, 7, 8):
            raise InvalidParameterError("affine E_n needs n in {6, 7, 8}")
        base = build_su2_graph("E", n)
        attach = {6: 6, 7: 6, 8: 1}[n]   # tip extending an arm to the affine shape
        labels = [0] + list(base.vertices)
        edges = []
        for i, row in enumerate(base.adjacency):
            for j in range(i + 1, len(row)):
                for _ in range(row[j]):
                    edges.append((base.vertices[i], base.vertices[j]))
        edges.append((0, attach))
        return _graph_from(f"Aff-E({n})", labels, edges, star=0)
    raise InvalidParameterError(f"unknown affine family {family!r}")


# ---------------------------------------------------------------------------
# Truncations of infinite graphs
# ---------------------------------------------------------------------------

def truncate_infinite_graph(kind: str, depth: int) -> Graph:
    """Finite induced subgraph of radius `depth` around *; moments with
    m+n <= depth agree with the infinite graph."""
    if depth < 1:
        raise InvalidParameterError("depth must be >= 1")
    if kind == "AinfInf":
        labels = list(range(-depth, depth + 1))
        edges = [(i, i + 1) for i in range(-depth, depth)]
        return _graph_from(f"Trunc-Ainfinf({depth})", labels, edges, star=0, depth=depth)
    if kind == "Ainf":
        labels = list(range(1, depth + 2))
        edges = [(i, i + 1) for i in range(1, depth + 1)]
        return _graph_from(f"Trunc-Ainf({depth})", labels, edges, star=1, depth=depth)
    if kind == "Dinf":
        labels = [1, 2] + list(range(3, depth + 3))
        edges = [(1, 3), (2, 3)] + [(i, i + 1) for i in range(3, depth + 2)]
        return _graph_from(f"Trunc-Dinf({depth})", labels, edges, star=1, depth=depth)
    if kind == "SU3_Ainf":
        return _su3_triangle(f"Trunc-SU3Ainf({depth})", depth, depth=depth)
    if kind == "SU3_A6inf":
        verts = {(0, 0)}
        frontier = {(0, 0)}
        steps = [(1, 0), (0, -1), (-1, 1), (-1, 0), (0, 1), (1, -1)]
        for _ in range(depth):
            frontier = {
                (v[0] + s[0], v[1] + s[1]) for v in frontier for s in steps
            } - verts
            verts |= frontier
        labels = sorted(verts)
        fwd = [(1, 0), (0, -1), (-1, 1)]
        directed = [
            (v, (v[0] + s[0], v[1] + s[1]))
            for v in labels
            for s in fwd
            if (v[0] + s[0], v[1] + s[1]) in verts
        ]
        return _directed_graph(
            f"Trunc-SU3A6inf({depth})", labels, directed, star=(0, 0), depth=depth
        )
    raise InvalidParameterError(f"unknown infinite graph kind {kind!r}")


def _su3_triangle(id_: str, size: int, h: Optional[int] = None, depth: Optional[int] = None) -> Graph:
    """Directed graph on {(l1,l2) >= 0, l1+l2 <= size} with the fusion edges."""
    labels = [
        (l1, l2)
        for s in range(size + 1)
        for l1 in range(s + 1)
        for l2 in (s - l1,)
    ]
    labels.sort()
    inside = set(labels)
    directed = []
    for (l1, l2) in labels:
        for tgt in ((l1 + 1, l2), (l1, l2 - 1), (l1 - 1, l2 + 1)):
            if tgt in inside:
                directed.append(((l1, l2), tgt))
    return _directed_graph(id_, labels, directed, star=(0, 0), h=h, depth=depth)


# ---------------------------------------------------------------------------
# SU(3) fusion graphs
# ---------------------------------------------------------------------------

def build_su3_graph(family: str, l: int) -> Graph:
    """SU(3) graph: A^(l) (directed triangle) or A^(l)* for even l."""
    if family == "A":
        if l < 4:
            raise InvalidParameterError("A^(l) needs l >= 4")
        return _su3_triangle(f"SU3-A({l})", l - 3, h=l)
    if family == "Astar":
        if l < 4:
            raise InvalidParameterError("A^(l)* needs l >= 4")
        if l % 2 != 0:
            raise UnsupportedConstructionError(
                "odd-l A^(l)* has no adjacency construction here; use eigendata"
            )
        m = l // 2
        base = build_su2_graph("A", m - 1)
        adj = [list(row) for row in base.adjacency]
        for i in range(m - 1):
            adj[i][i] += 1
        return Graph(
            id=f"SU3-Astar({l})",
            vertices=base.vertices,
            adjacency=tuple(tuple(row) for row in adj),
            distinguished=0,
            coxeter_h=l,
            symmetric=True,
        )
    raise InvalidParameterError(f"unknown SU(3) family {family!r}")


def su3_rotation(graph: Graph) -> tuple:
    """Order-3 rotation (l1,l2) -> (size-l1-l2, l1) of SU3-A(l) as a
    permutation matrix (tuple of rows)."""
    size = max(v[0] + v[1] for v in graph.vertices)
    n = graph.n_vertices
    idx = {v: i for i, v in enumerate(graph.vertices)}
    p = [[0] * n for _ in range(n)]
    for v in graph.vertices:
        w = (size - v[0] - v[1], v[0])
        p[idx[v]][idx[w]] = 1
    return tuple(tuple(row) for row in p)


# ---------------------------------------------------------------------------
# Graph id parsing
# ---------------------------------------------------------------------------

_ID_RE = re.compile(r"^(?P<fam>[A-Za-z0-9\-]+?)\((?P<arg>-?\d+)\)$")


def by_id(graph_id: str) -> Graph:
    """Build the graph named by an id like 'A(5)', 'Aff-E(7)', 'SU3-A(6)',
    'Trunc-Ainfinf(8)'."""
    m = _ID_RE.match(graph_id)
    if not m:
        raise InvalidParameterError(f"cannot parse graph id {graph_id!r}")
    fam, arg = m.group("fam"), int(m.group("arg"))
    if fam == "A":
        return build_su2_graph("A", arg)
    if fam == "D":
        return build_su2_graph("D", arg)
    if fam == "E":
        return build_su2_graph("E", arg)
    if fam == "Tad":
        return build_su2_graph("Tadpole", arg)
    if fam == "Aff-A":
        return build_su2_affine_graph("A1", arg)
    if fam == "Aff-D":
        return build_su2_affine_graph("D1", arg)
    if fam == "Aff-E":
        return build_su2_affine_graph("E1", arg)
    if fam == "SU3-A":
        return build_su3_graph("A", arg)
    if fam == "SU3-Astar":
        return build_su3_graph("Astar", arg)
    if fam == "Trunc-Ainf":
        return truncate_infinite_graph("Ainf", arg)
    if fam == "Trunc-Ainfinf":
        return truncate_infinite_graph("AinfInf", arg)
    if fam == "Trunc-Dinf":
        return truncate_infinite_graph("Dinf", arg)
    if fam == "Trunc-SU3Ainf":
        return truncate_infinite_graph("SU3_Ainf", arg)
    if fam == "Trunc-SU3A6inf":
        return truncate_infinite_graph("SU3_A6inf", arg)
    if fam in ("SU3-D", "SU3-E", "SU3-E1"):
        raise DataUnavailableError(
            f"{graph_id} is served as eigendata only (no adjacency figure here)"
        )
    raise InvalidParameterError(f"unknown graph id {graph_id!r}")


# ---------------------------------------------------------------------------
# Eigendata
# ---------------------------------------------------------------------------

def _su2_eigendata_an(n: int) -> list:
    h = n + 1
    return [
        EigenEntry(j, complex(2 * math.cos(j * math.pi / h)),
                   (2.0 / h) * math.sin(j * math.pi / h) ** 2, 1)
        for j in range(1, n + 1)
    ]


def _su2_eigendata_dn(n: int) -> list:
    h = 2 * n - 2
    out = []
    if n % 2 == 0:
        mid = n - 1                       # doubled odd exponent
        for j in range(1, 2 * n - 2, 2):
            w = (2.0 / h) * math.sin(j * math.pi / h) ** 2
            if j == mid:
                out.append(EigenEntry((j, "pm"), complex(2 * math.cos(j * math.pi / h)), w, 2))
            else:
                out.append(EigenEntry(j, complex(2 * math.cos(j * math.pi / h)), 2 * w, 1))
    else:
        for j in range(1, 2 * n - 2, 2):
            w = (4.0 / h) * math.sin(j * math.pi / h) ** 2
            out.append(EigenEntry(j, complex(2 * math.cos(j * math.pi / h)), w, 1))
        # exponent n-1 is even; its eigenvector vanishes at the tail vertex
        out.append(EigenEntry(n - 1, complex(0.0), 0.0, 1))
    return out


_E_EXPONENTS = {6: (1, 4, 5, 7, 8, 11), 7: (1, 5, 7, 9, 11, 13, 17),
                8: (1, 7, 11, 13, 17, 19, 23, 29)}
_E_FUSION_P = {7: (1, 9, 17), 8: (1, 11, 19, 29)}


def _su2_eigendata_en(n: int) -> list:
    h = {6: 12, 7: 18, 8: 30}[n]
    out = []
    if n == 6:
        w = {1: (3 - math.sqrt(3)) / 24, 11: (3 - math.sqrt(3)) / 24,
             4: 0.25, 8: 0.25,
             5: (3 + math.sqrt(3)) / 24, 7: (3 + math.sqrt(3)) / 24}
        for j in _E_EXPONENTS[6]:
            out.append(EigenEntry(j, complex(2 * math.cos(j * math.pi / 12)), w[j], 1))
        return out
    ps = _E_FUSION_P[n]

    def s(i, j):
        return math.sqrt(2.0 / h) * math.sin(i * j * math.pi / h)

    for j in _E_EXPONENTS[n]:
        weight = s(1, j) * sum(s(i, j) for i in ps)
        out.append(EigenEntry(j, complex(2 * math.cos(j * math.pi / h)), weight, 1))
    return out


def su3_exponent_angles(l: int, lam: tuple) -> tuple:
    """(theta1, theta2) of an SU(3) exponent (l1,l2) at level l-3, exact."""
    l1, l2 = lam
    return (Fraction(l1 + 2 * l2 + 3, 3 * l), Fraction(2 * l1 + l2 + 3, 3 * l))


def su3_eigenvalue(l: int, lam: tuple) -> complex:
    t1, t2 = su3_exponent_angles(l, lam)
    w1 = cmath.exp(2j * math.pi * float(t1))
    w2 = cmath.exp(2j * math.pi * float(t2))
    return w1 + 1 / w2 + w2 / w1


def su3_psi_star(l: int, lam: tuple) -> float:
    """First (apex) entry of the eigenvector of A^(l) at exponent lam."""
    a, b = lam[0] + 1, lam[1] + 1
    return (2.0 / (l * math.sqrt(3))) * (
        math.sin(2 * a * math.pi / l) + math.sin(2 * b * math.pi / l)
        - math.sin(2 * (a + b) * math.pi / l)
    )


def _su3_eigendata_a(l: int) -> list:
    from .deltoid import jacobian  # local import to avoid a cycle

    out = []
    for l1 in range(l - 2):
        for l2 in range(l - 2 - l1):
            lam = (l1, l2)
            t1, t2 = su3_exponent_angles(l, lam)
            jv = jacobian((t1, t2), "sine_product")
            w = jv * jv / (12 * math.pi ** 4 * l * l)
            psi = su3_psi_star(l, lam)
            jpsi = -jv / (2 * math.sqrt(3) * math.pi ** 2 * l)
            if abs(psi - jpsi) > 1e-12:
                raise AssertionError(
                    f"eigenvector/Jacobian mismatch at {lam}: {psi} vs {jpsi}"
                )
            out.append(EigenEntry(lam, su3_eigenvalue(l, lam), w, 1))
    return out


def _su3_eigendata_d(n: int) -> list:
    if n < 6 or n % 3 != 0:
        raise InvalidParameterError("D^(n) needs n = 3k, k >= 2")
    from .deltoid import jacobian

    k = n // 3
    out = []
    total = 0.0
    for l1 in range(n - 2):
        for l2 in range(n - 2 - l1):
            if (l1 - l2) % 3 != 0 or (l1, l2) == (k - 1, k - 1):
                continue
            lam = (l1, l2)
            t1, t2 = su3_exponent_angles(n, lam)
            jv = jacobian((t1, t2), "sine_product")
            w = jv * jv / (4 * math.pi ** 4 * n * n)
            total += w
            out.append(EigenEntry(lam, su3_eigenvalue(n, lam), w, 1))
    # the triple exponent (k-1,k-1) sits at eigenvalue 0, so only the sum of
    # its three weights is determined; unitarity fixes it
    out.append(EigenEntry((k - 1, k - 1), complex(0.0), (1.0 - total) / 3.0, 3))
    return out


def _su3_eigendata_astar(l: int) -> list:
    out = []
    for j in range((l - 3) // 2 + 1):
        beta = 2 * math.cos(2 * math.pi * (j + 1) / l) + 1
        w = (4.0 / l) * math.sin(2 * math.pi * (j + 1) / l) ** 2
        out.append(EigenEntry((j, j), complex(beta), w, 1))
    return out


def _load_exceptional(graph_id: str) -> list:
    ref = resources.files("nimspec").joinpath("data/su3_exceptional.json")
    tables = json.loads(ref.read_text())
    if graph_id not in tables:
        raise DataUnavailableError(f"no eigendata table for {graph_id}")
    return [
        EigenEntry(
            tuple(e["exponent"]) if isinstance(e["exponent"], list) else e["exponent"],
            complex(e["eigenvalue"][0], e["eigenvalue"][1]),
            e["weight"],
            e["multiplicity"],
        )
        for e in tables[graph_id]["entries"]
    ]


def eigendata(graph_id: str) -> EigenData:
    """Closed-form (exponent, eigenvalue, |psi_*|^2, multiplicity) data."""
    m = _ID_RE.match(graph_id)
    if not m:
        raise DataUnavailableError(f"cannot parse graph id {graph_id!r}")
    fam, arg = m.group("fam"), int(m.group("arg"))
    if fam == "A":
        entries = _su2_eigendata_an(arg)
    elif fam == "D":
        entries = _su2_eigendata_dn(arg)
    elif fam == "E":
        entries = _su2_eigendata_en(arg)
    elif fam == "SU3-A":
        entries = _su3_eigendata_a(arg)
    elif fam == "SU3-D":
        entries = _su3_eigendata_d(arg)
    elif fam == "SU3-Astar":
        entries = _su3_eigendata_astar(arg)
    elif fam in ("SU3-E", "SU3-E1"):
        entries = _load_exceptional(graph_id)
    else:
        raise DataUnavailableError(f"no tabulated eigendata for {graph_id}")
    ed = EigenData(graph_id, tuple(entries))
    mass = ed.total_mass()
    if abs(mass - 1.0) > 1e-12:
        raise AssertionError(f"eigendata for {graph_id} has mass {mass}")
    return ed


def eigen_moment(ed: EigenData, m: int, n: int = 0) -> complex:
    """Sum over exponents of mult * weight * beta^m * conj(beta)^n."""
    return sum(
        e.multiplicity * e.weight * e.eigenvalue ** m * e.eigenvalue.conjugate() ** n
        for e in ed.entries
    )
