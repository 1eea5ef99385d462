"""Brute-force censuses of two small cone resolutions over prime fields.

Both examples follow the same pattern: a projective cone X cut out by the
2x2 minors of a matrix of coordinates, and a graph variety in X x P^1 cut
out by the row equations of the same matrix contracted against (-v, u).
The projection graph -> X is then one-to-one away from the cone vertex and
has a full P^1 over the vertex.

  * quadric cone: [[x, y], [z, w]] in P^4 with coordinates x, y, z, w, t;
    the single minor x*w - y*z = 0 is a quadric cone with vertex
    [0:0:0:0:1].
  * segre cone: [[x0, x1], [x2, x3], [x4, x5]] in P^6; the three minors cut
    out the cone over the rank-one locus, i.e. over P^2 x P^1.

Everything here runs on plain integer tuples mod p, independently of the
symbolic stack, so the counts can serve as an oracle for it.  Points are
enumerated with canonical representatives (first nonzero coordinate 1).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .fields import PrimeField, matrix_rank


@dataclass(frozen=True)
class ConeExample:
    name: str
    coords: int  # number of homogeneous coordinates, cone variable last
    rows: tuple[tuple[int, int], ...]  # matrix rows as coordinate index pairs

    @property
    def vertex(self) -> tuple[int, ...]:
        return (0,) * (self.coords - 1) + (1,)

    @property
    def codim_x(self) -> int:
        # rank-one locus of an r x 2 matrix has codimension r - 1
        return len(self.rows) - 1

    @property
    def codim_graph(self) -> int:
        return len(self.rows)

    def minor_pairs(self) -> list[tuple[int, int]]:
        return list(itertools.combinations(range(len(self.rows)), 2))


def quadric_cone() -> ConeExample:
    return ConeExample("quadric-cone", 5, ((0, 1), (2, 3)))


def segre_cone() -> ConeExample:
    return ConeExample("segre-cone", 7, ((0, 1), (2, 3), (4, 5)))


CONE_EXAMPLES = {"quadric-cone": quadric_cone, "segre-cone": segre_cone}


def projective_points(p: int, n: int) -> Iterator[tuple[int, ...]]:
    """Canonical representatives of P^(n-1) over F_p: first nonzero entry 1."""
    for lead in range(n):
        prefix = (0,) * lead + (1,)
        for tail in itertools.product(range(p), repeat=n - lead - 1):
            yield prefix + tail


def _on_cone(example: ConeExample, p: int, pt: tuple[int, ...]) -> bool:
    for r, s in example.minor_pairs():
        (r0, r1), (s0, s1) = example.rows[r], example.rows[s]
        if (pt[r0] * pt[s1] - pt[r1] * pt[s0]) % p:
            return False
    return True


def _enumerate(example: ConeExample, p: int):
    """All rational points of X and of the graph, by exhaustive scan."""
    PrimeField(p)  # validates p: prime, >= 5
    dirs = list(projective_points(p, 2))
    xs = []
    graph = []
    for pt in projective_points(p, example.coords):
        in_x = _on_cone(example, p, pt)
        if in_x:
            xs.append(pt)
        for u, v in dirs:
            for i0, i1 in example.rows:
                if (u * pt[i1] - v * pt[i0]) % p:
                    break
            else:
                graph.append((pt, (u, v)))
    return xs, graph


@dataclass(frozen=True)
class CensusReport:
    example: str
    p: int
    x_count: int
    graph_count: int
    vertex_fiber: int
    off_vertex_ok: bool  # every non-vertex X point has exactly one graph point
    stray: int  # graph points projecting outside X (must be 0)

    @property
    def ok(self) -> bool:
        return (
            self.stray == 0
            and self.vertex_fiber == self.p + 1
            and self.off_vertex_ok
            and self.graph_count == self.x_count - 1 + (self.p + 1)
        )


def cone_census(example: ConeExample, p: int) -> CensusReport:
    """Count X and graph points and tally the graph fibers over X."""
    xs, graph = _enumerate(example, p)
    x_set = set(xs)
    fiber_sizes: dict = {}
    stray = 0
    for pt, _ in graph:
        if pt in x_set:
            fiber_sizes[pt] = fiber_sizes.get(pt, 0) + 1
        else:
            stray += 1
    vertex = example.vertex
    off_vertex_ok = all(
        fiber_sizes.get(pt, 0) == 1 for pt in xs if pt != vertex
    )
    return CensusReport(
        example=example.name,
        p=p,
        x_count=len(xs),
        graph_count=len(graph),
        vertex_fiber=fiber_sizes.get(vertex, 0),
        off_vertex_ok=off_vertex_ok,
        stray=stray,
    )


@dataclass(frozen=True)
class SmoothnessReport:
    example: str
    p: int
    graph_points: int
    graph_deficient: tuple  # graph points where the Jacobian rank drops
    x_points: int
    x_deficient: tuple  # X points where the Jacobian rank drops

    @property
    def ok(self) -> bool:
        # the graph must be smooth everywhere; X exactly at the vertex
        return not self.graph_deficient and len(self.x_deficient) == 1

    def x_singular_is_vertex(self, example: ConeExample) -> bool:
        return tuple(self.x_deficient) == (example.vertex,)


def smoothness_probe(example: ConeExample, p: int) -> SmoothnessReport:
    """Jacobian-rank probe at every rational point.

    All defining equations are multihomogeneous, so by the Euler relations
    the rank of the Jacobian in homogeneous coordinates equals the rank in
    any affine chart through the point; full rank means codim-many
    independent differentials, i.e. a smooth point.
    """
    field = PrimeField(p)
    xs, graph = _enumerate(example, p)
    n = example.coords

    x_deficient = []
    for pt in xs:
        rows = []
        for r, s in example.minor_pairs():
            (r0, r1), (s0, s1) = example.rows[r], example.rows[s]
            row = [0] * n
            row[r0] = pt[s1] % p
            row[s1] = pt[r0] % p
            row[r1] = -pt[s0] % p
            row[s0] = -pt[r1] % p
            rows.append(row)
        if matrix_rank(field, rows) < example.codim_x:
            x_deficient.append(pt)

    graph_deficient = []
    for pt, (u, v) in graph:
        rows = []
        for i0, i1 in example.rows:
            row = [0] * (n + 2)
            row[i0] = -v % p
            row[i1] = u % p
            row[n] = pt[i1] % p  # d/du
            row[n + 1] = -pt[i0] % p  # d/dv
            rows.append(row)
        if matrix_rank(field, rows) < example.codim_graph:
            graph_deficient.append((pt, (u, v)))

    return SmoothnessReport(
        example=example.name,
        p=p,
        graph_points=len(graph),
        graph_deficient=tuple(graph_deficient),
        x_points=len(xs),
        x_deficient=tuple(x_deficient),
    )
