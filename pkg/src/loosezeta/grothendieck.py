"""Counting polynomials (Grothendieck-ring classes) of loose graphs.

The class of a loose graph is the integer polynomial P with P(q) =
number of F_q-rational points of the associated scheme for every prime
power q.  Closed points sit at the vertices; each vertex of degree d
carries a local affine space of dimension d whose directions are the
incident edges (loose edges point at phantom directions).

The engine follows the surgery recursion: split into components, apply
the loose-tree formula, strip loose/free edges against an explicit
correction, peel a vertex adjacent to everything, and otherwise resolve
a fundamental edge while subtracting the resolution difference of the
edge's neighborhood.

The neighborhood pieces are evaluated by inclusion-exclusion over the
local affine charts (equivalently, over cliques of real vertices): for a
clique S with c(S) common chart directions the intersection of charts
contributes (L-1)^(|S|-1) * L^c(S).  This evaluates each piece *as
embedded*, which matters when two of its loose edges point at the same
outside vertex, and it terminates without recursion.
"""

from __future__ import annotations

from dataclasses import dataclass
from random import Random
from typing import AbstractSet, Mapping

from .loosegraph import (
    LooseGraph,
    LooseGraphError,
    NeighborhoodData,
    connected_components,
    delete_vertex,
    induced,
    is_connected,
    is_loose_tree,
    neighborhood,
    reduce,
    resolve,
    spanning_tree,
    tree_profile,
)
from .polyring import L, Poly


class InternalError(RuntimeError):
    """The recursion failed to shrink its input (implementation bug)."""


# ---------------------------------------------------------------------------
# Closed forms
# ---------------------------------------------------------------------------


def tree_class(t: LooseGraph) -> Poly:
    """Class of a connected loose tree from its degree spectrum.

    With n_i vertices of degree d_i > 1, I = (number of such vertices) - 1
    and E endpoints of degree 1, the class is sum n_i L^d_i - I*L + I + E.
    An isolated vertex is a single closed point and returns 1 (the formula
    itself is only meaningful for trees with at least one edge).
    """
    if t.free:
        raise LooseGraphError("tree_class(): input has free edges")
    if not t.vertices:
        raise LooseGraphError("tree_class(): empty input")
    if not is_connected(t):
        raise LooseGraphError("tree_class(): input disconnected")
    if t.n_edges != t.n_vertices - 1:
        raise LooseGraphError("tree_class(): input has a cycle")
    if t.n_vertices == 1 and not t.loose:
        return Poly.one()
    profile = tree_profile(t)
    inner = profile.inner_minus_one
    result = Poly.const(inner + profile.endpoints) - inner * L
    for d, n in profile.degree_counts:
        result = result + n * L**d
    return result


def star_class(n: int, k: int) -> Poly:
    """Class of the loose star with n edges, k of which have an endpoint."""
    if n < 1:
        raise LooseGraphError("star_class(): n must be >= 1")
    if not 0 <= k <= n:
        raise LooseGraphError("star_class(): need 0 <= k <= n")
    return L**n + k


def cone_class(g1: LooseGraph, g2: LooseGraph) -> Poly:
    """Class of the cone joining every vertex of g1 to every vertex of g2.

    Computed from the classes of the reduced parts plus one degree
    correction per vertex carrying loose edges; collapses to the plain
    product formula when both parts are graphs.
    """
    if g1.free or g2.free:
        raise LooseGraphError("cone_class(): parts must not have free edges")
    overlap = g1.vertex_set() & g2.vertex_set()
    if overlap:
        raise LooseGraphError(f"cone_class(): overlapping labels {sorted(overlap)}")
    m1, m2 = g1.n_vertices, g2.n_vertices
    p1 = class_polynomial(reduce(g1)[0])
    p2 = class_polynomial(reduce(g2)[0])
    corr1 = Poly.zero()
    for v in g1.vertices:
        corr1 = corr1 + L ** g1.degree(v) - L ** g1.graph_degree(v)
    corr2 = Poly.zero()
    for w in g2.vertices:
        corr2 = corr2 + L ** g2.degree(w) - L ** g2.graph_degree(w)
    return p1 * L**m2 + p2 * L**m1 - p1 * p2 * (L - 1) + L**m2 * corr1 + L**m1 * corr2


# ---------------------------------------------------------------------------
# Embedded chart classes
# ---------------------------------------------------------------------------


def chart_class(charts: Mapping[str, AbstractSet[str]]) -> Poly:
    """Point count of a union of affine charts, one per real vertex.

    ``charts[v]`` holds the direction tokens of v: real vertices are the
    keys, any other token is a phantom direction.  Tokens are identities,
    so two charts pointing at the same outside vertex share that
    coordinate.  Inclusion-exclusion over cliques of real vertices; for a
    clique S the charts intersect in (L-1)^(|S|-1) L^{#common tokens}.
    """
    reals = sorted(charts)
    sets = {v: frozenset(s) for v, s in charts.items()}
    pow_lm1 = [Poly.one()]
    for _ in reals:
        pow_lm1.append(pow_lm1[-1] * (L - 1))
    total = Poly.zero()

    def extend(common: frozenset[str], cand: tuple[str, ...], size: int) -> Poly:
        # size = clique size before extension; adding one vertex flips the sign
        acc = Poly.zero()
        positive = size % 2 == 0
        for i, u in enumerate(cand):
            new_common = common & sets[u]
            term = pow_lm1[size] * L ** len(new_common)
            acc = acc + (term if positive else -term)
            new_cand = tuple(w for w in cand[i + 1 :] if w in sets[u])
            if new_cand:
                acc = acc + extend(new_common, new_cand, size + 1)
        return acc

    for i, v in enumerate(reals):
        total = total + L ** len(sets[v])
        cand = tuple(u for u in reals[i + 1 :] if u in sets[v])
        if cand:
            total = total + extend(sets[v], cand, 1)
    return total


def _cone_charts(
    charts: Mapping[str, frozenset[str]], tips: tuple[str, ...]
) -> dict[str, frozenset[str]]:
    """Charts of the cone that joins one or two tip vertices to every real
    vertex of a piece (tips become real; the pair of tips is an edge)."""
    base = frozenset(charts)
    out = {v: s | frozenset(tips) for v, s in charts.items()}
    if len(tips) == 2:
        out[tips[0]] = base | {tips[1]}
        out[tips[1]] = base | {tips[0]}
    else:
        out[tips[0]] = base
    return out


def component_piece_classes(nd: NeighborhoodData) -> list[tuple[Poly, Poly, Poly]]:
    """Embedded classes ([C^j], [C^j_x], [C^j_y]) per component of gl."""
    gl = dict(nd.charts_gl)
    glx = dict(nd.charts_glx)
    gly = dict(nd.charts_gly)
    out = []
    for comp in nd.components:
        out.append(
            (
                chart_class({v: gl[v] for v in comp}),
                chart_class({v: glx[v] for v in comp}),
                chart_class({v: gly[v] for v in comp}),
            )
        )
    return out


# ---------------------------------------------------------------------------
# Resolution differences and local classes
# ---------------------------------------------------------------------------


def resolution_difference(g: LooseGraph, edge: tuple[str, str]) -> Poly:
    """class(resolve(g, edge)) - class(g), from the edge neighborhood only.

    Evaluated as L^2*[gl] - (L-1)*[glx] - (L-1)*[gly] - [C(gl,xy)]
    + [C(glx,xy)] - [C(glx,y)] + [C(gly,xy)] - [C(gly,x)], with the first
    three classes summed over the connected components of gl and every
    bracket taken as an embedded chart class.
    """
    nd = neighborhood(g, edge)
    x, y = nd.x, nd.y
    gl = dict(nd.charts_gl)
    glx = dict(nd.charts_glx)
    gly = dict(nd.charts_gly)
    cls_gl = cls_glx = cls_gly = Poly.zero()
    for cj, cjx, cjy in component_piece_classes(nd):
        cls_gl = cls_gl + cj
        cls_glx = cls_glx + cjx
        cls_gly = cls_gly + cjy
    c_gl_xy = chart_class(_cone_charts(gl, (x, y)))
    c_glx_xy = chart_class(_cone_charts(glx, (x, y)))
    c_glx_y = chart_class(_cone_charts(glx, (y,)))
    c_gly_xy = chart_class(_cone_charts(gly, (x, y)))
    c_gly_x = chart_class(_cone_charts(gly, (x,)))
    return (
        L**2 * cls_gl
        - (L - 1) * cls_glx
        - (L - 1) * cls_gly
        - c_gl_xy
        + c_glx_xy
        - c_glx_y
        + c_gly_xy
        - c_gly_x
    )


def _restricted(g: LooseGraph, edge: tuple[str, str]) -> LooseGraph:
    """Induced subgraph on the union of unit balls around the edge's ends."""
    x, y = edge
    keep = {x, y} | set(g.neighbors(x)) | set(g.neighbors(y))
    return induced(g, keep)


def local_before(g: LooseGraph, edge: tuple[str, str]) -> Poly:
    """Class of g restricted to the projective span of the edge's unit balls."""
    if not g.is_reduced():
        raise LooseGraphError("local_before(): graph must be reduced")
    return class_polynomial(_restricted(g, edge))


def local_after(g: LooseGraph, edge: tuple[str, str]) -> Poly:
    """Class of the same restriction after resolving the edge."""
    if not g.is_reduced():
        raise LooseGraphError("local_after(): graph must be reduced")
    return class_polynomial(resolve(_restricted(g, edge), edge))


# ---------------------------------------------------------------------------
# The class polynomial
# ---------------------------------------------------------------------------

# shared across callers; inserts are idempotent (same key, same value), so
# concurrent use under the GIL is safe
_memo: dict[tuple, Poly] = {}


def canonical_key(g: LooseGraph) -> tuple:
    """Cheap isomorphism-respecting memo key (degree-refined relabeling).

    Ties are broken by original labels, so isomorphic graphs with
    different labels may get different keys; identical keys always mean
    equal classes, which is all correctness needs.
    """
    adj = g.adjacency()
    lm = g.loose_map()
    color: dict[str, object] = {v: (len(adj[v]), lm.get(v, 0)) for v in g.vertices}
    for _ in range(2):
        color = {v: (color[v], tuple(sorted(color[u] for u in adj[v]))) for v in g.vertices}
    order = sorted(g.vertices, key=lambda v: (color[v], v))
    index = {v: i for i, v in enumerate(order)}
    edges = tuple(sorted(tuple(sorted((index[a], index[b]))) for a, b in g.edges))
    loose = tuple(sorted((index[v], k) for v, k in g.loose))
    return (g.n_vertices, edges, loose, g.free)


def _measure(g: LooseGraph) -> tuple[int, int, int]:
    return (g.n_vertices, g.n_edges, g.n_loose + g.free)


def class_polynomial(g: LooseGraph) -> Poly:
    """Counting polynomial of the scheme attached to a loose graph.

    Satisfies P(q) = number of F_q-points for all prime powers q and
    P(1) = number of vertices.
    """
    if g.is_empty():
        return Poly.zero()
    key = canonical_key(g)
    cached = _memo.get(key)
    if cached is not None:
        return cached

    def recurse(child: LooseGraph, parent: LooseGraph) -> Poly:
        if _measure(child) >= _measure(parent):
            raise InternalError("class_polynomial(): recursion did not shrink the graph")
        return class_polynomial(child)

    comps = connected_components(g)
    if len(comps) > 1:
        result = Poly.zero()
        for c in comps:
            result = result + recurse(c, g)
    else:
        c = comps[0]
        if not c.vertices:
            result = L - 1  # a single free edge is a multiplicative group
        elif is_loose_tree(c):
            result = tree_class(c)
        elif not c.is_reduced():
            reduced_graph, correction = reduce(c)
            result = recurse(reduced_graph, c) + correction
        else:
            apex = next(
                (v for v in sorted(c.vertices) if c.graph_degree(v) == c.n_vertices - 1),
                None,
            )
            if apex is not None:
                result = L ** c.graph_degree(apex) + recurse(delete_vertex(c, apex), c)
            else:
                _, fundamental = spanning_tree(c)
                e = fundamental[0]
                result = recurse(resolve(c, e), c) - resolution_difference(c, e)
    _memo[key] = result
    return result


# ---------------------------------------------------------------------------
# Surgery traces
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SurgeryStep:
    """One unresolve step: the loose graph at this stage, the edge whose
    resolution leads a stage back toward the tree, the difference delta =
    class(resolved) - class(this graph), and the running class."""

    graph_before: LooseGraph
    resolved_edge: tuple[str, str]
    delta: Poly
    running_class: Poly


@dataclass(frozen=True)
class SurgeryTrace:
    """Full surgery bookkeeping from the loose spanning tree back to the
    input graph; running classes satisfy running_i = running_{i-1} - delta_i
    with running_0 the tree class and the last running the graph's class."""

    steps: tuple[SurgeryStep, ...]
    final_tree: LooseGraph
    final_tree_class: Poly

    @property
    def result_class(self) -> Poly:
        return self.steps[-1].running_class if self.steps else self.final_tree_class


def surgery_trace(g: LooseGraph, rng: Random | None = None) -> SurgeryTrace:
    """Resolve fundamental edges down to a loose spanning tree, recording
    each difference; reported in unresolve order like a worked table."""
    if g.is_empty() or not is_connected(g):
        raise LooseGraphError("surgery_trace(): connected input required")
    downward: list[tuple[LooseGraph, tuple[str, str], Poly]] = []
    h = g
    while not is_loose_tree(h):
        reduced_graph, _ = reduce(h)
        _, fundamental = spanning_tree(h, rng)
        e = fundamental[0]
        downward.append((h, e, resolution_difference(reduced_graph, e)))
        h = resolve(h, e)
    tree_value = tree_class(h)
    steps: list[SurgeryStep] = []
    running = tree_value
    for graph_before, e, delta in reversed(downward):
        running = running - delta
        steps.append(SurgeryStep(graph_before, e, delta, running))
    return SurgeryTrace(tuple(steps), h, tree_value)
