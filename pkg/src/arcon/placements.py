"""Point placements on a multigraph.

An n-point configuration is tested only through its combinatorial shadow: the
set of marked vertices plus, per edge, how many of the points sit in that
edge's interior.  Self-homeomorphisms fixing the vertices can slide interior
points anywhere along their edge, so coverability by one arc depends only on
this data; the refine-based oracle in :mod:`arcon.arcsearch` double-checks
that reduction empirically.

Placements are enumerated in lexicographic order of (sorted marked vertices,
count vector), with the count vector indexed by edges sorted by (endpoint
pair, edge id).  Only orbit representatives under the automorphism group are
yielded: the representative is the lex-least orbit member.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping

from .multigraph import GraphError, Id, Multigraph, idkey
from .symmetry import GraphIndex, graph_index


@dataclass(frozen=True)
class Placement:
    """n marked points: a vertex subset plus per-edge interior counts.

    ``counts`` stores only nonzero entries, sorted by edge id.
    """

    marks: frozenset
    counts: tuple[tuple[Id, int], ...]

    @property
    def n(self) -> int:
        return len(self.marks) + sum(c for _, c in self.counts)

    def count_map(self) -> dict[Id, int]:
        return dict(self.counts)

    def validate(self, g: Multigraph) -> None:
        for v in self.marks:
            if v not in g.degrees:
                raise GraphError(f"placement marks unknown vertex {v!r}")
        for eid, c in self.counts:
            g.edge(eid)
            if c < 0:
                raise GraphError("negative interior count")

    @staticmethod
    def of(g: Multigraph, marks=(), counts: Mapping[Id, int] | None = None) -> "Placement":
        cm = dict(counts or {})
        p = Placement(
            frozenset(marks),
            tuple(sorted(((e, c) for e, c in cm.items() if c), key=lambda t: idkey(t[0]))),
        )
        p.validate(g)
        return p


def _to_placement(gi: GraphIndex, marks: tuple[int, ...], cvec: tuple[int, ...]) -> Placement:
    return Placement(
        frozenset(gi.vids[v] for v in marks),
        tuple(sorted(((gi.slot_eids[s], c) for s, c in enumerate(cvec) if c),
                     key=lambda t: idkey(t[0]))),
    )


def _to_indexed(gi: GraphIndex, p: Placement) -> tuple[tuple[int, ...], tuple[int, ...]]:
    marks = tuple(sorted(gi.vpos[v] for v in p.marks))
    cvec = [0] * gi.nslots
    cm = p.count_map()
    for s, eid in enumerate(gi.slot_eids):
        cvec[s] = cm.get(eid, 0)
    return marks, tuple(cvec)


def _compositions(total: int, nslots: int, prev_slot) -> Iterator[tuple[int, ...]]:
    """Count vectors summing to ``total``, lex ascending, class-sorted.

    ``prev_slot[s]`` points at the previous slot of the same parallel class
    (or -1); within a class only ascending runs are produced, because any
    other arrangement is the image of one of these under a parallel-edge
    swap.
    """
    vec = [0] * nslots

    def rec(s: int, rem: int) -> Iterator[tuple[int, ...]]:
        if s == nslots - 1:
            p = prev_slot[s]
            if p < 0 or vec[p] <= rem:
                vec[s] = rem
                yield tuple(vec)
                vec[s] = 0
            return
        lo = 0 if prev_slot[s] < 0 else vec[prev_slot[s]]
        for c in range(lo, rem + 1):
            vec[s] = c
            yield from rec(s + 1, rem - c)
        vec[s] = 0

    if nslots == 0:
        if total == 0:
            yield ()
        return
    yield from rec(0, total)


def _subsets_lex(ids: tuple[int, ...], maxlen: int) -> Iterator[tuple[int, ...]]:
    """Subsets as sorted tuples in lexicographic tuple order ((), (0,), (0,1)...)."""
    n = len(ids)

    def rec(start: int, acc: list[int]) -> Iterator[tuple[int, ...]]:
        yield tuple(acc)
        if len(acc) == maxlen:
            return
        for i in range(start, n):
            acc.append(ids[i])
            yield from rec(i + 1, acc)
            acc.pop()

    yield from rec(0, [])


def _candidates(gi: GraphIndex, n: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All class-sorted (marks, counts) with |marks| + sum(counts) = n, lex order."""
    for marks in _subsets_lex(tuple(range(gi.n)), n):
        rem = n - len(marks)
        for cvec in _compositions(rem, gi.nslots, gi.prev_slot):
            yield marks, cvec


def iter_placements_indexed(gi: GraphIndex, n: int):
    """Orbit representatives in lex order, as indexed (marks, counts) pairs.

    With no collapsed twin blocks, canonicity splits: the mark set must be
    lex-least over the group, and the count vector lex-least under the mark
    set's stabilizer; rejecting a mark set discards all its count vectors at
    once, and surviving mark sets usually have trivial stabilizers.
    """
    sym = gi.symmetry()
    if sym.trivial:
        yield from _candidates(gi, n)
        return
    if sym.blocks:
        is_canonical = sym.is_canonical
        for marks, cvec in _candidates(gi, n):
            if is_canonical(marks, cvec):
                yield marks, cvec
        return
    autos = sym.fast_autos
    nslots, prev = gi.nslots, gi.prev_slot
    for marks in _subsets_lex(tuple(range(gi.n)), n):
        lm = list(marks)
        stab = []
        reject = False
        for vperm, sp in autos:
            im = sorted(vperm[v] for v in marks)
            if im < lm:
                reject = True
                break
            if im == lm:
                stab.append(sp)
        if reject:
            continue
        rem = n - len(marks)
        if not stab:
            for cvec in _compositions(rem, nslots, prev):
                yield marks, cvec
            continue
        for cvec in _compositions(rem, nslots, prev):
            ok = True
            for sp in stab:
                for t in range(nslots):
                    d = cvec[sp[t]] - cvec[t]
                    if d < 0:
                        ok = False
                        break
                    if d > 0:
                        break
                if not ok:
                    break
            if ok:
                yield marks, cvec


def enumerate_placements(g: Multigraph, n: int) -> Iterator[Placement]:
    """One representative per automorphism orbit of n-point placements.

    Representatives appear in lexicographic order of (sorted marked vertex
    indices, count vector); each is the lex-least member of its orbit, so the
    stream is deterministic and schedule independent.
    """
    if n < 1:
        raise GraphError("placement size must be >= 1")
    if not g.is_connected():
        raise GraphError("placement enumeration expects a connected graph")
    gi = graph_index(g)
    for marks, cvec in iter_placements_indexed(gi, n):
        yield _to_placement(gi, marks, cvec)


# -- realization ---------------------------------------------------------------


def _realize_masks(gi: GraphIndex, marks: tuple[int, ...], cvec: tuple[int, ...]):
    """Adjacency bitmasks of the subdivided graph plus the marked-vertex mask.

    Marked interior points become fresh marked vertices; loops additionally
    receive unmarked subdivision vertices so no loop survives (two points on
    a bare loop, one extra next to a single marked point).  Parallel edges
    collapse to one adjacency bit, which is harmless for vertex-simple path
    existence.
    """
    n = gi.n
    nmask = [0] * n
    marked = 0
    for v in marks:
        marked |= 1 << v
    nxt = n
    pairs = gi.slot_pairs
    for s in range(gi.nslots):
        c = cvec[s]
        i, j = pairs[s]
        extra = 0
        if i == j:
            extra = 2 - c if c < 2 else 0
        if c == 0 and extra == 0:
            nmask[i] |= 1 << j
            nmask[j] |= 1 << i
            continue
        chain = list(range(nxt, nxt + c + extra))
        nxt += c + extra
        for _ in range(c + extra):
            nmask.append(0)
        for k in chain[:c]:
            marked |= 1 << k
        prev = i
        for k in chain:
            nmask[prev] |= 1 << k
            nmask[k] |= 1 << prev
            prev = k
        nmask[prev] |= 1 << j
        nmask[j] |= 1 << prev
    return nmask, marked


def realize(g: Multigraph, p: Placement) -> tuple[Multigraph, frozenset]:
    """Subdivide ``g`` so the placement's interior points become vertices.

    Returns the subdivided graph and the full marked set (placement vertex
    marks plus the fresh interior vertices).  Loops are subdivided past their
    marked points so the result is loop-free.
    """
    p.validate(g)
    cm = p.count_map()
    cur = g
    marked = set(p.marks)
    for e in g.edges:
        c = cm.get(e.eid, 0)
        extra = 0
        if e.is_loop:
            extra = 2 - c if c < 2 else 0
        if c + extra == 0:
            continue
        cur, fresh = cur.subdivide(e.eid, c + extra)
        marked.update(fresh[:c])
    return cur, frozenset(marked)
