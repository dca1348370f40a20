"""Loose graphs: data model, text format, generators and structural algorithms.

A loose graph is an undirected loopless graph whose edges may have two,
one ("loose edge") or zero ("free edge") endpoints.  Loose edges are
interchangeable and stored as per-vertex counts; free edges as a single
count.  All values are immutable; every operation returns a new graph.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from random import Random
from typing import Iterable, Mapping

from .polyring import L, Poly

_NAME_RE = re.compile(r"[A-Za-z0-9_]+\Z")


class LooseGraphError(ValueError):
    """Structural error: loops, duplicate edges, undeclared vertices, ..."""


class ParseError(LooseGraphError):
    """Malformed `.lg` text; carries a 1-based line number."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class GenerateError(LooseGraphError):
    """Unknown family or invalid parameters passed to generate()."""


def _norm_edge(a: str, b: str) -> tuple[str, str]:
    return (a, b) if a <= b else (b, a)


@dataclass(frozen=True)
class LooseGraph:
    """Immutable loose graph.

    vertices: labels in declaration order (first-mention order for parsed
    graphs).  edges: canonical sorted pairs.  loose: (vertex, count) pairs
    sorted by vertex with positive counts.  free: number of free edges.
    """

    vertices: tuple[str, ...] = ()
    edges: tuple[tuple[str, str], ...] = ()
    loose: tuple[tuple[str, int], ...] = ()
    free: int = 0

    @classmethod
    def build(
        cls,
        vertices: Iterable[str] = (),
        edges: Iterable[tuple[str, str]] = (),
        loose: Mapping[str, int] | Iterable[tuple[str, int]] = (),
        free: int = 0,
    ) -> "LooseGraph":
        """Validate and normalize; the only sanctioned constructor."""
        vs = list(vertices)
        vset = set(vs)
        if len(vs) != len(vset):
            raise LooseGraphError("duplicate vertex label")
        for v in vs:
            if not _NAME_RE.match(v):
                raise LooseGraphError(f"invalid vertex name {v!r}")
        eset: set[tuple[str, str]] = set()
        for a, b in edges:
            if a == b:
                raise LooseGraphError(f"loop at vertex {a!r}")
            if a not in vset or b not in vset:
                raise LooseGraphError(f"edge {a!r}-{b!r} uses an undeclared vertex")
            e = _norm_edge(a, b)
            if e in eset:
                raise LooseGraphError(f"duplicate edge {a!r}-{b!r}")
            eset.add(e)
        loose_items = loose.items() if isinstance(loose, Mapping) else loose
        lmap: dict[str, int] = {}
        for v, k in loose_items:
            if v not in vset:
                raise LooseGraphError(f"loose edge at undeclared vertex {v!r}")
            if k < 0:
                raise LooseGraphError("negative loose-edge count")
            if k:
                lmap[v] = lmap.get(v, 0) + k
        if free < 0:
            raise LooseGraphError("negative free-edge count")
        return cls(
            vertices=tuple(vs),
            edges=tuple(sorted(eset)),
            loose=tuple(sorted(lmap.items())),
            free=free,
        )

    # -- queries -----------------------------------------------------------

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @property
    def n_loose(self) -> int:
        return sum(k for _, k in self.loose)

    def vertex_set(self) -> frozenset[str]:
        return frozenset(self.vertices)

    def edge_set(self) -> frozenset[tuple[str, str]]:
        return frozenset(self.edges)

    def loose_map(self) -> dict[str, int]:
        return dict(self.loose)

    def has_edge(self, a: str, b: str) -> bool:
        return _norm_edge(a, b) in self.edge_set()

    def adjacency(self) -> dict[str, list[str]]:
        """Neighbor lists in sorted order."""
        adj: dict[str, list[str]] = {v: [] for v in self.vertices}
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        for v in adj:
            adj[v].sort()
        return adj

    def neighbors(self, v: str) -> tuple[str, ...]:
        if v not in self.vertex_set():
            raise LooseGraphError(f"no vertex {v!r}")
        return tuple(sorted(b if a == v else a for a, b in self.edges if v in (a, b)))

    def graph_degree(self, v: str) -> int:
        """Number of incident 2-vertex edges."""
        return len(self.neighbors(v))

    def loose_count(self, v: str) -> int:
        return self.loose_map().get(v, 0)

    def degree(self, v: str) -> int:
        """Full degree: 2-vertex edges plus loose edges at v."""
        return self.graph_degree(v) + self.loose_count(v)

    def is_reduced(self) -> bool:
        return not self.loose and self.free == 0

    def is_empty(self) -> bool:
        return not self.vertices and self.free == 0


# ---------------------------------------------------------------------------
# `.lg` text format
# ---------------------------------------------------------------------------


def parse(text: str, strict: bool = False) -> LooseGraph:
    """Parse the line-based `.lg` format.

    Lines: ``# comment``, ``vertex NAME``, ``edge A B``, ``loose A``,
    ``free``.  Vertex order is first-mention order.  In strict mode a
    vertex must be declared before use in an edge/loose line.
    """
    vertices: list[str] = []
    vset: set[str] = set()
    edges: list[tuple[str, str]] = []
    eset: set[tuple[str, str]] = set()
    loose: dict[str, int] = {}
    free = 0

    def mention(name: str, lineno: int) -> None:
        if not _NAME_RE.match(name):
            raise ParseError(lineno, f"invalid name {name!r}")
        if name not in vset:
            if strict:
                raise ParseError(lineno, f"undeclared vertex {name!r} (strict mode)")
            vset.add(name)
            vertices.append(name)

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        kind, args = fields[0], fields[1:]
        if kind == "vertex":
            if len(args) != 1:
                raise ParseError(lineno, "vertex takes exactly one name")
            name = args[0]
            if not _NAME_RE.match(name):
                raise ParseError(lineno, f"invalid name {name!r}")
            if name in vset:
                raise ParseError(lineno, f"vertex {name!r} declared twice")
            vset.add(name)
            vertices.append(name)
        elif kind == "edge":
            if len(args) != 2:
                raise ParseError(lineno, "edge takes exactly two names")
            a, b = args
            if a == b:
                raise ParseError(lineno, f"loop at vertex {a!r}")
            mention(a, lineno)
            mention(b, lineno)
            e = _norm_edge(a, b)
            if e in eset:
                raise ParseError(lineno, f"duplicate edge {a} {b}")
            eset.add(e)
            edges.append(e)
        elif kind == "loose":
            if len(args) != 1:
                raise ParseError(lineno, "loose takes exactly one name")
            mention(args[0], lineno)
            loose[args[0]] = loose.get(args[0], 0) + 1
        elif kind == "free":
            if args:
                raise ParseError(lineno, "free takes no arguments")
            free += 1
        else:
            raise ParseError(lineno, f"unknown directive {kind!r}")
    return LooseGraph.build(vertices, edges, loose, free)


def serialize(g: LooseGraph) -> str:
    """Canonical `.lg` text: vertices sorted, then edges sorted."""
    out: list[str] = [f"vertex {v}" for v in sorted(g.vertices)]
    out.extend(f"edge {a} {b}" for a, b in sorted(g.edges))
    for v, k in g.loose:
        out.extend([f"loose {v}"] * k)
    out.extend(["free"] * g.free)
    return "\n".join(out) + ("\n" if out else "")


# ---------------------------------------------------------------------------
# Generators
# ---------------------------------------------------------------------------


def _labels(n: int) -> list[str]:
    return [f"v{i}" for i in range(1, n + 1)]


def generate(family: str, *params: int) -> LooseGraph:
    """Built-in families: complete n, star n k, path n, cycle n, affine n,
    projective n, johnson n k, hexahedron."""

    def need(k: int) -> None:
        if len(params) != k:
            raise GenerateError(f"{family} takes {k} parameter(s), got {len(params)}")

    if family == "complete":
        need(1)
        (n,) = params
        if n < 1:
            raise GenerateError("complete needs n >= 1")
        vs = _labels(n)
        return LooseGraph.build(vs, [(a, b) for i, a in enumerate(vs) for b in vs[i + 1 :]])
    if family == "projective":
        need(1)
        (n,) = params
        if n < 0:
            raise GenerateError("projective needs n >= 0")
        return generate("complete", n + 1)
    if family == "star":
        need(2)
        n, k = params
        if n < 1:
            raise GenerateError("star needs n >= 1")
        if not 0 <= k <= n:
            raise GenerateError("star needs 0 <= k <= n")
        center = "v0"
        ends = _labels(k)
        return LooseGraph.build([center] + ends, [(center, e) for e in ends], {center: n - k})
    if family == "affine":
        need(1)
        (n,) = params
        if n < 0:
            raise GenerateError("affine needs n >= 0")
        return LooseGraph.build(["o"], (), {"o": n})
    if family == "path":
        need(1)
        (n,) = params
        if n < 1:
            raise GenerateError("path needs n >= 1")
        vs = _labels(n)
        return LooseGraph.build(vs, list(zip(vs, vs[1:])))
    if family == "cycle":
        need(1)
        (n,) = params
        if n < 3:
            raise GenerateError("cycle needs n >= 3")
        vs = _labels(n)
        return LooseGraph.build(vs, list(zip(vs, vs[1:])) + [(vs[-1], vs[0])])
    if family == "johnson":
        need(2)
        n, k = params
        if not 1 <= k <= n:
            raise GenerateError("johnson needs 1 <= k <= n")
        subsets = []
        for mask in range(1 << n):
            bits = [i + 1 for i in range(n) if mask >> i & 1]
            if len(bits) == k:
                subsets.append(tuple(bits))
        subsets.sort()
        label = {s: "s" + "".join(map(str, s)) for s in subsets}
        edges = [
            (label[a], label[b])
            for i, a in enumerate(subsets)
            for b in subsets[i + 1 :]
            if len(set(a) & set(b)) == k - 1
        ]
        return LooseGraph.build([label[s] for s in subsets], edges)
    if family == "hexahedron":
        need(0)
        vs = [format(i, "03b") for i in range(8)]
        edges = [
            (a, b)
            for i, a in enumerate(vs)
            for b in vs[i + 1 :]
            if sum(x != y for x, y in zip(a, b)) == 1
        ]
        return LooseGraph.build(vs, edges)
    raise GenerateError(f"unknown family {family!r}")


# ---------------------------------------------------------------------------
# Structural algorithms
# ---------------------------------------------------------------------------


def induced(g: LooseGraph, keep: Iterable[str]) -> LooseGraph:
    """Induced subgraph on a vertex subset; loose counts of kept vertices
    are retained, edges leaving the subset are dropped entirely."""
    ks = set(keep)
    if not ks <= g.vertex_set():
        raise LooseGraphError("induced(): unknown vertex in subset")
    return LooseGraph.build(
        [v for v in g.vertices if v in ks],
        [e for e in g.edges if e[0] in ks and e[1] in ks],
        {v: k for v, k in g.loose if v in ks},
        0,
    )


def delete_vertex(g: LooseGraph, v: str) -> LooseGraph:
    """Remove a vertex together with all incident (and loose) edges."""
    if v not in g.vertex_set():
        raise LooseGraphError(f"no vertex {v!r}")
    rest = [w for w in g.vertices if w != v]
    sub = induced(g, rest)
    return LooseGraph.build(sub.vertices, sub.edges, sub.loose, g.free)


def reduce(g: LooseGraph) -> tuple[LooseGraph, Poly]:
    """Strip loose and free edges; return the reduced graph and the class
    correction sum(L^deg(v) - L^deg_reduced(v)) + free*(L - 1)."""
    corr = Poly.zero()
    for v, k in g.loose:
        d = g.degree(v)
        corr = corr + L**d - L ** (d - k)
    corr = corr + g.free * (L - 1)
    return LooseGraph.build(g.vertices, g.edges, (), 0), corr


def resolve(g: LooseGraph, edge: tuple[str, str]) -> LooseGraph:
    """Replace a 2-vertex edge by one loose edge at each former endpoint."""
    a, b = edge
    e = _norm_edge(a, b)
    if e not in g.edge_set():
        raise LooseGraphError(f"resolve(): {a!r}-{b!r} is not a 2-vertex edge of the graph")
    lm = g.loose_map()
    lm[a] = lm.get(a, 0) + 1
    lm[b] = lm.get(b, 0) + 1
    return LooseGraph.build(g.vertices, [f for f in g.edges if f != e], lm, g.free)


def connected_components(g: LooseGraph) -> list[LooseGraph]:
    """Partition into connected pieces; each free edge is its own component."""
    adj = g.adjacency()
    seen: set[str] = set()
    comps: list[LooseGraph] = []
    for v in g.vertices:
        if v in seen:
            continue
        queue = deque([v])
        seen.add(v)
        part = []
        while queue:
            w = queue.popleft()
            part.append(w)
            for u in adj[w]:
                if u not in seen:
                    seen.add(u)
                    queue.append(u)
        comps.append(induced(g, part))
    comps.extend(LooseGraph.build((), (), (), 1) for _ in range(g.free))
    return comps


def is_connected(g: LooseGraph) -> bool:
    return len(connected_components(g)) == 1


def is_loose_tree(g: LooseGraph) -> bool:
    """Connected loose graph whose reduced graph is acyclic; no free edges."""
    if g.free or not g.vertices:
        return False
    return is_connected(g) and g.n_edges == g.n_vertices - 1


@dataclass(frozen=True)
class TreeProfile:
    """Degree bookkeeping of a loose tree: counts of degrees > 1, the inner
    count I = (#inner vertices) - 1 and the number E of degree-1 vertices."""

    degree_counts: tuple[tuple[int, int], ...]
    inner_minus_one: int
    endpoints: int


def tree_profile(t: LooseGraph) -> TreeProfile:
    if not is_loose_tree(t):
        raise LooseGraphError("tree_profile() needs a connected loose tree")
    counts: dict[int, int] = {}
    endpoints = 0
    for v in t.vertices:
        d = t.degree(v)
        if d == 1:
            endpoints += 1
        elif d > 1:
            counts[d] = counts.get(d, 0) + 1
    inner = sum(counts.values())
    return TreeProfile(tuple(sorted(counts.items())), inner - 1, endpoints)


def spanning_tree(
    g: LooseGraph, rng: Random | None = None
) -> tuple[LooseGraph, tuple[tuple[str, str], ...]]:
    """Spanning tree keeping all loose edges, plus the fundamental edges.

    Deterministic by default: BFS from the lexicographically smallest
    vertex with neighbors visited in label order, fundamental edges
    sorted.  Pass an rng to randomize root, visit order and edge order.
    """
    if not g.vertices:
        raise LooseGraphError("spanning_tree(): empty input")
    if not is_connected(g):
        raise LooseGraphError("spanning_tree(): disconnected input")
    adj = g.adjacency()
    if rng is None:
        root = min(g.vertices)
    else:
        root = rng.choice(g.vertices)
    tree_edges: set[tuple[str, str]] = set()
    seen = {root}
    queue = deque([root])
    while queue:
        v = queue.popleft()
        nbrs = list(adj[v])
        if rng is not None:
            rng.shuffle(nbrs)
        for u in nbrs:
            if u not in seen:
                seen.add(u)
                tree_edges.add(_norm_edge(v, u))
                queue.append(u)
    fundamental = [e for e in g.edges if e not in tree_edges]
    fundamental.sort()
    if rng is not None:
        rng.shuffle(fundamental)
    tree = LooseGraph.build(g.vertices, sorted(tree_edges), g.loose_map(), g.free)
    return tree, tuple(fundamental)


def cone(base: LooseGraph, vertex_part: LooseGraph) -> LooseGraph:
    """Join every base vertex to every vertex-part vertex; loose edges of
    both parts are retained.  Label sets must be disjoint."""
    overlap = base.vertex_set() & vertex_part.vertex_set()
    if overlap:
        raise LooseGraphError(f"cone(): overlapping labels {sorted(overlap)}")
    join = [(a, b) for a in base.vertices for b in vertex_part.vertices]
    lm = base.loose_map()
    lm.update(vertex_part.loose_map())
    return LooseGraph.build(
        list(base.vertices) + list(vertex_part.vertices),
        list(base.edges) + list(vertex_part.edges) + join,
        lm,
        base.free + vertex_part.free,
    )


# ---------------------------------------------------------------------------
# Edge neighborhoods for surgery
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class NeighborhoodData:
    """The auxiliary loose graphs around an edge xy of a reduced graph.

    ``delta`` is the plain graph induced on the punctured union of unit
    balls, ``g`` the plain graph on the common neighbors.  ``gl``,
    ``glx``, ``gly`` are the loose graphs on the common neighbors whose
    loose edges stand for delta-edges leaving the common-neighbor set
    (into the whole ball, the x-ball, the y-ball respectively); the
    ``charts_*`` mappings record where each such edge actually points,
    which the class computations need.  The five cones follow the same
    naming.  ``components`` partitions the common neighbors into the
    connected components of ``gl``.
    """

    x: str
    y: str
    delta: LooseGraph
    g: LooseGraph
    gl: LooseGraph
    glx: LooseGraph
    gly: LooseGraph
    cone_gl_xy: LooseGraph
    cone_glx_xy: LooseGraph
    cone_glx_y: LooseGraph
    cone_gly_xy: LooseGraph
    cone_gly_x: LooseGraph
    components: tuple[tuple[str, ...], ...]
    charts_gl: tuple[tuple[str, frozenset[str]], ...]
    charts_glx: tuple[tuple[str, frozenset[str]], ...]
    charts_gly: tuple[tuple[str, frozenset[str]], ...]


def _loose_view(common: list[str], charts: dict[str, frozenset[str]]) -> LooseGraph:
    cset = set(common)
    edges = [(u, v) for u in common for v in charts[u] if v in cset and u < v]
    loose = {v: len(charts[v] - cset) for v in common}
    return LooseGraph.build(sorted(common), edges, loose)


def _cone_view(view: LooseGraph, tips: list[str]) -> LooseGraph:
    base_vertices = list(view.vertices)
    edges = list(view.edges) + [(t, v) for t in tips for v in base_vertices]
    if len(tips) == 2:
        edges.append((tips[0], tips[1]))
    return LooseGraph.build(sorted(base_vertices + tips), edges, view.loose_map())


def neighborhood(g: LooseGraph, edge: tuple[str, str]) -> NeighborhoodData:
    """Extract the surgery neighborhood of a 2-vertex edge.

    The input must be reduced; the computation that uses this data
    reduces first, so loose edges of the ambient graph never appear here.
    """
    if not g.is_reduced():
        raise LooseGraphError("neighborhood(): graph must be reduced first")
    x, y = edge
    if _norm_edge(x, y) not in g.edge_set():
        raise LooseGraphError(f"neighborhood(): {x!r}-{y!r} is not an edge")
    nx = set(g.neighbors(x))
    ny = set(g.neighbors(y))
    common = sorted(nx & ny)
    delta_vertices = (nx | ny) - {x, y}
    delta = induced(g, delta_vertices)
    gsub = induced(g, common)

    charts_gl: dict[str, frozenset[str]] = {}
    charts_glx: dict[str, frozenset[str]] = {}
    charts_gly: dict[str, frozenset[str]] = {}
    for v in common:
        nv = set(g.neighbors(v))
        charts_gl[v] = frozenset(nv & delta_vertices)
        charts_glx[v] = frozenset(nv & (nx - {y}))
        charts_gly[v] = frozenset(nv & (ny - {x}))

    # components of gl = components of g on the common neighbors
    comp_of: dict[str, int] = {}
    comps: list[list[str]] = []
    cset = set(common)
    for v in common:
        if v in comp_of:
            continue
        idx = len(comps)
        stack = [v]
        comp_of[v] = idx
        part = []
        while stack:
            w = stack.pop()
            part.append(w)
            for u in charts_gl[w]:
                if u in cset and u not in comp_of:
                    comp_of[u] = idx
                    stack.append(u)
        comps.append(sorted(part))

    gl = _loose_view(common, charts_gl)
    glx = _loose_view(common, charts_glx)
    gly = _loose_view(common, charts_gly)
    return NeighborhoodData(
        x=x,
        y=y,
        delta=delta,
        g=gsub,
        gl=gl,
        glx=glx,
        gly=gly,
        cone_gl_xy=_cone_view(gl, [x, y]),
        cone_glx_xy=_cone_view(glx, [x, y]),
        cone_glx_y=_cone_view(glx, [y]),
        cone_gly_xy=_cone_view(gly, [x, y]),
        cone_gly_x=_cone_view(gly, [x]),
        components=tuple(tuple(c) for c in comps),
        charts_gl=tuple(sorted(charts_gl.items())),
        charts_glx=tuple(sorted(charts_glx.items())),
        charts_gly=tuple(sorted(charts_gly.items())),
    )


# ---------------------------------------------------------------------------
# Ambient projective space
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AmbientSpace:
    """Coordinates of the ambient projective space: one per vertex, one per
    loose edge (its phantom direction) and two per free edge."""

    coordinates: tuple[str, ...]

    @property
    def dimension(self) -> int:
        return len(self.coordinates) - 1


def ambient_space(g: LooseGraph) -> AmbientSpace:
    coords = list(g.vertices)
    for v, k in g.loose:
        coords.extend(f"{v}#loose{i}" for i in range(k))
    for j in range(g.free):
        coords.extend((f"#free{j}a", f"#free{j}b"))
    return AmbientSpace(tuple(coords))
