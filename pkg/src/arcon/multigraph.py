"""Finite topological multigraphs.

A graph here is the combinatorial presentation of a compact connected
1-complex: a finite set of vertices plus a finite multiset of edges, where
loops and parallel edges are allowed.  Loops count twice toward degree.
Degree-2 vertices are topologically invisible, so homeomorphism questions
are settled on the smoothed normal form produced by :func:`smooth`.

Instances are immutable value objects; every operation returns a new graph.
"""

from __future__ import annotations

from typing import Iterable, Mapping, NamedTuple, Sequence, Union

Id = Union[int, str]


class GraphError(ValueError):
    """Structurally invalid graph data or unknown vertex/edge ids."""


class ParseError(GraphError):
    """Malformed graph text."""


class BoundExceeded(GraphError):
    """A size-bounded operation was asked to exceed its configured bound."""


def idkey(x: Id):
    """Deterministic sort key that lets int and str ids coexist."""
    if isinstance(x, bool):  # bool is an int subclass; refuse quietly via str
        return (1, 0, str(x))
    if isinstance(x, int):
        return (0, x, "")
    return (1, 0, str(x))


class Edge(NamedTuple):
    eid: Id
    a: Id
    b: Id

    @property
    def is_loop(self) -> bool:
        return self.a == self.b

    def pair(self) -> tuple[Id, Id]:
        """Endpoints as an ordered pair (sorted by id key)."""
        return (self.a, self.b) if idkey(self.a) <= idkey(self.b) else (self.b, self.a)

    def other(self, v: Id) -> Id:
        if v == self.a:
            return self.b
        if v == self.b:
            return self.a
        raise GraphError(f"vertex {v!r} is not an endpoint of edge {self.eid!r}")


class Multigraph:
    """Immutable multigraph with loops and parallel edges.

    ``vertices`` is the sorted tuple of vertex ids, ``edges`` the tuple of
    :class:`Edge` records sorted by edge id.  Equality and hashing follow the
    labeled content, so two graphs are ``==`` only when vertices, edge ids and
    endpoint orientations all agree; use :func:`are_homeomorphic` for the
    topological question.
    """

    __slots__ = ("_vertices", "_edges", "_cache", "__weakref__")

    def __init__(self, vertices: Iterable[Id], edges: Iterable[Edge]):
        vlist = list(vertices)
        vset = set(vlist)
        if len(vset) != len(vlist):
            raise GraphError("duplicate vertex id")
        elist = [Edge(*e) for e in edges]
        if not elist:
            raise GraphError("a graph needs at least one edge")
        eids = [e.eid for e in elist]
        if len(set(eids)) != len(eids):
            raise GraphError("duplicate edge id")
        for e in elist:
            if e.a not in vset or e.b not in vset:
                raise GraphError(f"edge {e.eid!r} has a dangling endpoint")
        self._vertices: tuple[Id, ...] = tuple(sorted(vset, key=idkey))
        self._edges: tuple[Edge, ...] = tuple(sorted(elist, key=lambda e: idkey(e.eid)))
        self._cache: dict = {}

    # -- basic accessors ---------------------------------------------------

    @property
    def vertices(self) -> tuple[Id, ...]:
        return self._vertices

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self._edges

    def __eq__(self, other) -> bool:
        if not isinstance(other, Multigraph):
            return NotImplemented
        return self._vertices == other._vertices and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._vertices, self._edges))

    def __repr__(self) -> str:
        return f"Multigraph({len(self._vertices)} vertices, {len(self._edges)} edges)"

    def edge(self, eid: Id) -> Edge:
        try:
            return self.edge_map[eid]
        except KeyError:
            raise GraphError(f"unknown edge {eid!r}") from None

    @property
    def edge_map(self) -> Mapping[Id, Edge]:
        m = self._cache.get("edge_map")
        if m is None:
            m = {e.eid: e for e in self._edges}
            self._cache["edge_map"] = m
        return m

    @property
    def degrees(self) -> Mapping[Id, int]:
        d = self._cache.get("degrees")
        if d is None:
            d = {v: 0 for v in self._vertices}
            for e in self._edges:
                d[e.a] += 1
                d[e.b] += 1
            self._cache["degrees"] = d
        return d

    def degree(self, v: Id) -> int:
        try:
            return self.degrees[v]
        except KeyError:
            raise GraphError(f"unknown vertex {v!r}") from None

    def incident(self, v: Id) -> tuple[Edge, ...]:
        inc = self._cache.get("incident")
        if inc is None:
            inc = {u: [] for u in self._vertices}
            for e in self._edges:
                inc[e.a].append(e)
                if not e.is_loop:
                    inc[e.b].append(e)
            inc = {u: tuple(es) for u, es in inc.items()}
            self._cache["incident"] = inc
        try:
            return inc[v]
        except KeyError:
            raise GraphError(f"unknown vertex {v!r}") from None

    def loops_at(self, v: Id) -> int:
        return sum(1 for e in self.incident(v) if e.is_loop)

    def is_connected(self) -> bool:
        c = self._cache.get("connected")
        if c is None:
            seen = {self._vertices[0]}
            stack = [self._vertices[0]]
            while stack:
                u = stack.pop()
                for e in self.incident(u):
                    w = e.other(u)
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            c = len(seen) == len(self._vertices)
            self._cache["connected"] = c
        return c

    # -- topological operations --------------------------------------------

    def subdivide(self, eid: Id, k: int) -> tuple["Multigraph", tuple[Id, ...]]:
        """Replace edge ``eid`` by a path through ``k`` fresh degree-2 vertices.

        Returns the new graph and the fresh vertex ids in order along the
        edge starting from endpoint ``a``.
        """
        if k < 1:
            raise GraphError("subdivision count must be >= 1")
        e = self.edge(eid)
        taken = set(self._vertices)
        fresh: list[Id] = []
        for i in range(1, k + 1):
            name = f"{eid}.{i}"
            while name in taken:
                name += "'"
            taken.add(name)
            fresh.append(name)
        chain = [e.a, *fresh, e.b]
        new_edges = [x for x in self._edges if x.eid != eid]
        for i in range(len(chain) - 1):
            ne = f"{eid}#{i}" if i else eid
            existing = {x.eid for x in new_edges}
            while ne in existing:
                ne = str(ne) + "'"
            new_edges.append(Edge(ne, chain[i], chain[i + 1]))
        return Multigraph(list(self._vertices) + fresh, new_edges), tuple(fresh)


def build(vertices: Iterable[Id], edges: Iterable[Sequence[Id]]) -> Multigraph:
    """Construct a validated multigraph.

    ``edges`` entries are either ``(a, b)`` pairs, in which case edge ids
    ``e0, e1, ...`` are assigned in order, or explicit ``(eid, a, b)`` triples.
    """
    elist = []
    auto = 0
    for entry in edges:
        entry = tuple(entry)
        if len(entry) == 2:
            elist.append(Edge(f"e{auto}", entry[0], entry[1]))
            auto += 1
        elif len(entry) == 3:
            elist.append(Edge(*entry))
        else:
            raise GraphError(f"edge entry {entry!r} is neither a pair nor a triple")
    return Multigraph(vertices, elist)


def _suppressible(g: Multigraph, v: Id) -> tuple[Edge, Edge] | None:
    """The two distinct edges at a degree-2 vertex, or None.

    A vertex carrying a single loop has degree 2 but both edge-ends belong to
    the same edge, so it is not suppressible; that is the circle normal form.
    """
    if g.degree(v) != 2:
        return None
    inc = g.incident(v)
    if len(inc) != 2:  # single loop
        return None
    return inc[0], inc[1]


def smooth(g: Multigraph) -> Multigraph:
    """Suppress degree-2 vertices until none remain.

    The result is the homeomorphism normal form: merging the two edges at a
    suppressible vertex never changes the underlying space.  A cycle collapses
    to the one-vertex one-loop circle form, whose lone vertex is the only
    degree-2 vertex a smoothed graph may contain.
    """
    if not g.is_connected():
        raise GraphError("smooth expects a connected graph")
    got = g._cache.get("smoothed")
    if got is not None:
        return got
    cur = g
    while True:
        target = None
        for v in cur.vertices:
            pair = _suppressible(cur, v)
            if pair is not None:
                target = (v, pair)
                break
        if target is None:
            break
        v, (e1, e2) = target
        if e1 is e2:
            raise GraphError("internal: loop misclassified as suppressible")
        a, b = e1.other(v), e2.other(v)
        keep = e1.eid if idkey(e1.eid) <= idkey(e2.eid) else e2.eid
        edges = [x for x in cur.edges if x.eid not in (e1.eid, e2.eid)]
        edges.append(Edge(keep, a, b))
        cur = Multigraph([u for u in cur.vertices if u != v], edges)
    g._cache["smoothed"] = cur
    return cur


def branch_points(g: Multigraph) -> frozenset[Id]:
    """Vertices of the smoothed form with degree >= 3.

    Smoothing only deletes degree-2 vertices and preserves the degrees of the
    survivors, so these are exactly the points of local degree >= 3.
    """
    s = smooth(g)
    return frozenset(v for v in s.vertices if s.degree(v) >= 3)


def graph_endpoints(g: Multigraph) -> frozenset[Id]:
    """Degree-1 vertices of the smoothed form."""
    s = smooth(g)
    return frozenset(v for v in s.vertices if s.degree(v) == 1)


def terminal_edges(g: Multigraph) -> tuple[Edge, ...]:
    """Edges of the smoothed form incident to a degree-1 vertex."""
    s = smooth(g)
    ends = graph_endpoints(g)
    return tuple(e for e in s.edges if e.a in ends or e.b in ends)


# -- germ/segment structure ------------------------------------------------
#
# A germ is an edge-end at a vertex: one local direction.  Walking a germ
# through degree-2 vertices until the first vertex of degree != 2 yields the
# maximal branch-free segment in that direction.


class Germ(NamedTuple):
    vertex: Id
    edge: Edge
    side: int  # 0: leaves along a->b, 1: leaves along b->a


class Segment(NamedTuple):
    start: Id
    end: Id
    edges: tuple[Edge, ...]  # in walk order from start
    germ: Germ               # the germ at start this segment realizes


def germs(g: Multigraph, v: Id) -> tuple[Germ, ...]:
    """All edge-ends at ``v`` in deterministic order; a loop contributes two."""
    out = []
    for e in sorted(g.incident(v), key=lambda e: idkey(e.eid)):
        if e.is_loop:
            out.append(Germ(v, e, 0))
            out.append(Germ(v, e, 1))
        else:
            out.append(Germ(v, e, 0 if e.a == v else 1))
    return tuple(out)


def walk_segment(g: Multigraph, germ: Germ) -> Segment:
    """Follow a germ through degree-2 vertices to the first branching/end vertex.

    Loops at the start vertex are their own segments (start == end).  The walk
    is well defined because an interior degree-2 vertex has exactly one way
    onward.
    """
    v = germ.vertex
    e = germ.edge
    if e.is_loop:
        return Segment(v, v, (e,), germ)
    edges = [e]
    cur = e.other(v)
    prev_edge = e
    while cur != v and g.degree(cur) == 2:
        inc = g.incident(cur)
        nxt = inc[0] if inc[0].eid != prev_edge.eid else inc[1]
        if nxt.is_loop:  # degree-2 via a lone loop cannot continue a chain
            break
        edges.append(nxt)
        prev_edge = nxt
        cur = nxt.other(cur)
    return Segment(v, cur, tuple(edges), germ)


def segments_from(g: Multigraph, v: Id) -> tuple[Segment, ...]:
    return tuple(walk_segment(g, gm) for gm in germs(g, v))


# -- text format -------------------------------------------------------------
#
# One edge per line as two whitespace-separated names ("a a" is a loop,
# repeat a line for parallel edges); "v NAME" declares an isolated vertex.
# Blank lines and text after "#" are ignored.  "v v" is read as a loop at a
# vertex named "v", since a lone-vertex declaration of "v" would be
# indistinguishable.


def parse_graph_text(text: str) -> Multigraph:
    vertices: list[Id] = []
    vseen: set[Id] = set()
    pairs: list[tuple[Id, Id]] = []

    def declare(name: Id) -> None:
        if name not in vseen:
            vseen.add(name)
            vertices.append(name)

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) == 2 and tokens[0] == "v" and tokens[1] != "v":
            declare(tokens[1])
            continue
        if len(tokens) != 2:
            raise ParseError(f"line {lineno}: expected 'NAME NAME' or 'v NAME', got {raw!r}")
        a, b = tokens
        declare(a)
        declare(b)
        pairs.append((a, b))
    if not pairs:
        raise ParseError("no edges declared")
    return build(vertices, pairs)


def format_graph_text(g: Multigraph) -> str:
    """Serialize to the line format; parse(format(g)) is isomorphic to g."""
    lines = []
    touched = set()
    for e in g.edges:
        a, b = str(e.a), str(e.b)
        if a == "v" and b != "v":  # avoid emitting a vertex declaration
            a, b = b, a
        lines.append(f"{a} {b}")
        touched.add(e.a)
        touched.add(e.b)
    for v in g.vertices:
        if v not in touched:
            lines.append(f"v {v}")
    return "\n".join(lines) + "\n"
