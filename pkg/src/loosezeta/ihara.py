"""Inverse Ihara zeta functions by two independent determinant routes.

Both take a finite connected graph with no degree-1 vertices and rank
|E| - |V| + 1 >= 1 and produce the same degree-2|E| polynomial in u with
constant term 1: once as (1 - u^2)^(r-1) det(1 - A u + Q u^2) over the
vertices, once as det(1 - u E) over the 2|E| oriented edges.  The
shared ingredient is only the exact determinant kernel.
"""

from __future__ import annotations

from .loosegraph import LooseGraph, is_connected
from .polyring import Poly, PolyMatrix


class IharaDomainError(ValueError):
    """Input outside the Ihara domain (tree, degree-1 vertex, loose edges...)."""


def _validate(g: LooseGraph) -> int:
    """Check the domain and return the rank |E| - |V| + 1."""
    if g.loose or g.free:
        raise IharaDomainError("Ihara zeta is defined for graphs only (no loose or free edges)")
    if not g.vertices:
        raise IharaDomainError("empty graph")
    if not is_connected(g):
        raise IharaDomainError("graph must be connected")
    if g.n_edges == g.n_vertices - 1:
        raise IharaDomainError("input is a tree; its Ihara zeta function is trivial")
    if any(g.graph_degree(v) < 2 for v in g.vertices):
        raise IharaDomainError("vertices of degree 1 are not allowed")
    return g.n_edges - g.n_vertices + 1


def ihara_inverse(g: LooseGraph) -> Poly:
    """(1 - u^2)^(rank-1) * det(1 - A u + Q u^2) with Q = diag(degree - 1)."""
    rank = _validate(g)
    vs = list(g.vertices)
    pos = {v: i for i, v in enumerate(vs)}
    n = len(vs)
    rows: list[list[Poly]] = [[Poly.zero()] * n for _ in range(n)]
    for i, v in enumerate(vs):
        rows[i][i] = Poly((1, 0, g.graph_degree(v) - 1))
    for a, b in g.edges:
        rows[pos[a]][pos[b]] = Poly((0, -1))
        rows[pos[b]][pos[a]] = Poly((0, -1))
    det = PolyMatrix(rows).det()
    return Poly((1, 0, -1)) ** (rank - 1) * det


def edge_matrix_inverse(g: LooseGraph) -> Poly:
    """det(1 - u E) over oriented edges; E_ij = 1 iff edge i feeds edge j
    without backtracking.  Orientations i and i + |E| are inverses."""
    _validate(g)
    m = g.n_edges
    oriented = [(a, b) for a, b in g.edges] + [(b, a) for a, b in g.edges]
    size = 2 * m
    rows: list[list[Poly]] = [[Poly.zero()] * size for _ in range(size)]
    minus_u = Poly((0, -1))
    for i in range(size):
        rows[i][i] = Poly.one()
    for i, (_, head) in enumerate(oriented):
        inverse_index = i + m if i < m else i - m
        for j, (tail, _) in enumerate(oriented):
            if j != inverse_index and tail == head:
                rows[i][j] = rows[i][j] + minus_u
    return PolyMatrix(rows).det()
