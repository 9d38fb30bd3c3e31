"""Isomorphism machinery for small multigraphs.

Three related jobs live here:

* canonical codes (``canonical_form``): a byte string equal for two graphs
  exactly when they are isomorphic as multigraphs with loops,
* explicit automorphisms (``automorphisms``): vertex/edge permutation pairs,
* placement symmetry (:class:`PlacementSymmetry`): a compiled form of the
  automorphism action on point placements, used to enumerate placements one
  per orbit without materializing large groups.

Everything works on an integer-indexed view (:class:`GraphIndex`).  The
canonical code is the minimum relabeled edge list over all labelings
consistent with iterated degree refinement; individualization handles ties
and mutually interchangeable (twin) vertices are branched only once.
"""

from __future__ import annotations

import itertools
from typing import Sequence

from .multigraph import BoundExceeded, GraphError, Multigraph, idkey

# Search/size bounds.  Census graphs stay far below these; the errors exist
# so misuse fails loudly instead of hanging.
CANON_NODE_BUDGET = 500_000
SKELETON_AUTO_LIMIT = 50_000
AUTOMORPHISM_PAIR_LIMIT = 100_000
DEFAULT_MAX_CANON_VERTICES = 12


class GraphIndex:
    """Integer-indexed adjacency view of a multigraph.

    Vertices are numbered by sorted id; edge slots are numbered with parallel
    classes consecutive (sorted by endpoint pair, then edge id).  Placement
    count vectors are indexed by slot.
    """

    __slots__ = (
        "g", "n", "vids", "vpos", "loops", "mult", "deg",
        "nslots", "slot_pairs", "slot_eids", "classes", "class_of_pair",
        "prev_slot", "_colors", "_symmetry",
    )

    def __init__(self, g: Multigraph):
        self.g = g
        self.vids = g.vertices
        self.n = len(self.vids)
        self.vpos = {v: i for i, v in enumerate(self.vids)}
        n = self.n
        self.loops = [0] * n
        self.mult = [[0] * n for _ in range(n)]
        indexed = []
        for e in g.edges:
            i, j = self.vpos[e.a], self.vpos[e.b]
            if i > j:
                i, j = j, i
            if i == j:
                self.loops[i] += 1
            else:
                self.mult[i][j] += 1
                self.mult[j][i] += 1
            indexed.append(((i, j), idkey(e.eid), e.eid))
        indexed.sort(key=lambda t: (t[0], t[1]))
        self.nslots = len(indexed)
        self.slot_pairs = tuple(t[0] for t in indexed)
        self.slot_eids = tuple(t[2] for t in indexed)
        classes: list[tuple[int, int, int, int]] = []
        self.class_of_pair: dict[tuple[int, int], int] = {}
        prev: list[int] = []
        start = 0
        for s, pair in enumerate(self.slot_pairs):
            if s > 0 and pair != self.slot_pairs[s - 1]:
                p0 = self.slot_pairs[start]
                classes.append((p0[0], p0[1], start, s))
                self.class_of_pair[p0] = len(classes) - 1
                start = s
            prev.append(s - 1 if s > start else -1)
        p0 = self.slot_pairs[start]
        classes.append((p0[0], p0[1], start, self.nslots))
        self.class_of_pair[p0] = len(classes) - 1
        self.classes = tuple(classes)
        self.prev_slot = tuple(prev)
        self.deg = [self.loops[i] * 2 + sum(self.mult[i]) for i in range(n)]
        self._colors: list[int] | None = None
        self._symmetry: PlacementSymmetry | None = None

    # -- refinement ---------------------------------------------------------

    def refined_colors(self) -> list[int]:
        if self._colors is None:
            init = _rank([(self.deg[v], self.loops[v]) for v in range(self.n)])
            self._colors = _refine(self.n, self.loops, self.mult, init)
        return self._colors

    def symmetry(self) -> "PlacementSymmetry":
        if self._symmetry is None:
            self._symmetry = PlacementSymmetry(self)
        return self._symmetry


def graph_index(g: Multigraph) -> GraphIndex:
    gi = g._cache.get("index")
    if gi is None:
        gi = GraphIndex(g)
        g._cache["index"] = gi
    return gi


def _rank(keys: Sequence) -> list[int]:
    order = {k: r for r, k in enumerate(sorted(set(keys)))}
    return [order[k] for k in keys]


def _refine(n: int, loops: Sequence[int], mult: Sequence[Sequence[int]],
            colors: list[int]) -> list[int]:
    """Iterate neighborhood color signatures to a stable partition."""
    while True:
        sigs = []
        for v in range(n):
            row = mult[v]
            nb = sorted((colors[u], row[u]) for u in range(n) if row[u])
            sigs.append((colors[v], loops[v], tuple(nb)))
        new = _rank(sigs)
        if new == colors:
            return colors
        colors = new


def _twins(loops: Sequence[int], mult: Sequence[Sequence[int]], i: int, j: int) -> bool:
    """True when swapping i and j is an automorphism."""
    if loops[i] != loops[j]:
        return False
    ri, rj = mult[i], mult[j]
    for k in range(len(ri)):
        if k == i or k == j:
            continue
        if ri[k] != rj[k]:
            return False
    return True


# -- canonical labeling ------------------------------------------------------


def _code_items(n: int, loops, mult, perm: Sequence[int]) -> list[tuple[int, int, int]]:
    items = []
    for i in range(n):
        if loops[i]:
            items.append((perm[i], perm[i], loops[i]))
        row = mult[i]
        for j in range(i + 1, n):
            if row[j]:
                a, b = perm[i], perm[j]
                if a > b:
                    a, b = b, a
                items.append((a, b, row[j]))
    items.sort()
    return items


def _canonical_items(n: int, loops, mult, budget: int = CANON_NODE_BUDGET):
    """Minimum relabeled edge list over refinement-consistent labelings."""
    best: list[tuple[int, int, int]] | None = None
    nodes = 0
    colors0 = _refine(n, loops, mult, _rank([(sum(mult[v]) + 2 * loops[v], loops[v])
                                             for v in range(n)]))

    def rec(colors: list[int]) -> None:
        nonlocal best, nodes
        nodes += 1
        if nodes > budget:
            raise BoundExceeded("canonicalization search budget exceeded")
        groups: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            groups.setdefault(c, []).append(v)
        target = None
        for c in sorted(groups):
            if len(groups[c]) > 1:
                target = groups[c]
                break
        if target is None:
            items = _code_items(n, loops, mult, colors)
            if best is None or items < best:
                best = items
            return
        all_twins = all(_twins(loops, mult, target[0], w) for w in target[1:])
        branch = target[:1] if all_twins else target
        for v in branch:
            nxt = [c * 2 for c in colors]
            nxt[v] -= 1
            rec(_refine(n, loops, mult, _rank(nxt)))

    rec(colors0)
    assert best is not None
    return best


def canonical_form(g: Multigraph, max_vertices: int = DEFAULT_MAX_CANON_VERTICES) -> bytes:
    """Byte code identifying the isomorphism class of ``g``.

    Two multigraphs produce equal codes exactly when they are isomorphic
    (loops and parallel edges included).  Raises :class:`BoundExceeded` above
    ``max_vertices``.
    """
    gi = graph_index(g)
    if gi.n > max_vertices:
        raise BoundExceeded(f"canonical_form limited to {max_vertices} vertices, got {gi.n}")
    cached = g._cache.get("canon")
    if cached is None:
        items = _canonical_items(gi.n, gi.loops, gi.mult)
        out = bytearray([gi.n])
        for a, b, m in items:
            out.extend((a, b, m))
        cached = bytes(out)
        g._cache["canon"] = cached
    return cached


def are_homeomorphic(g1: Multigraph, g2: Multigraph) -> bool:
    """Topological equivalence: canonical codes of smoothed forms agree."""
    from .multigraph import smooth

    if not (g1.is_connected() and g2.is_connected()):
        raise GraphError("are_homeomorphic expects connected graphs")
    return canonical_form(smooth(g1)) == canonical_form(smooth(g2))


# -- explicit automorphisms ---------------------------------------------------


def _vertex_autos(n: int, loops, mult, colors: Sequence[int],
                  limit: int) -> list[tuple[int, ...]]:
    """All vertex permutations preserving loops and multiplicities.

    Individualization-refinement: pick the first color class with more than
    one vertex, pin its first vertex on the domain side against every member
    on the range side, refine both sides, and prune when the color
    histograms diverge.  Each automorphism is reached in exactly one branch
    (its image of the pinned vertex), and leaves are verified directly.
    """
    autos: list[tuple[int, ...]] = []
    base = list(colors)

    def histogram(cs: Sequence[int]):
        h: dict[int, int] = {}
        for c in cs:
            h[c] = h.get(c, 0) + 1
        return sorted(h.items())

    def rec(dom: list[int], rng: list[int]) -> None:
        dom = _refine(n, loops, mult, dom)
        rng = _refine(n, loops, mult, rng)
        if histogram(dom) != histogram(rng):
            return
        target = None
        groups: dict[int, list[int]] = {}
        for v, c in enumerate(dom):
            groups.setdefault(c, []).append(v)
        for c in sorted(groups):
            if len(groups[c]) > 1:
                target = (c, groups[c][0])
                break
        if target is None:
            pos = {c: v for v, c in enumerate(rng)}
            perm = tuple(pos[dom[v]] for v in range(n))
            for v in range(n):
                if loops[perm[v]] != loops[v]:
                    return
                row, prow = mult[v], mult[perm[v]]
                for u in range(v + 1, n):
                    if row[u] != prow[perm[u]]:
                        return
            autos.append(perm)
            if len(autos) > limit:
                raise BoundExceeded("automorphism group larger than the configured bound")
            return
        c, v = target
        for w in range(n):
            if rng[w] != c:
                continue
            dom2 = [x * 2 for x in dom]
            dom2[v] -= 1
            rng2 = [x * 2 for x in rng]
            rng2[w] -= 1
            rec(_rank(dom2), _rank(rng2))

    rec(base[:], base[:])
    return autos


def automorphisms(g: Multigraph, limit: int = AUTOMORPHISM_PAIR_LIMIT):
    """The full automorphism group as explicit (vertex map, edge map) pairs.

    A pair maps vertex ids to vertex ids and edge ids to edge ids; parallel
    edges (and parallel loops) may permute freely above any vertex
    permutation, so the group size is |vertex autos| * prod(class sizes!).
    Raises :class:`BoundExceeded` when that count exceeds ``limit``.
    """
    gi = graph_index(g)
    vautos = _vertex_autos(gi.n, gi.loops, gi.mult, gi.refined_colors(), limit)
    class_sizes = [e - s for (_, _, s, e) in gi.classes]
    total = len(vautos)
    for sz in class_sizes:
        for f in range(2, sz + 1):
            total *= f
        if total > limit:
            raise BoundExceeded("automorphism pair count exceeds the configured bound")
    if total > limit:
        raise BoundExceeded("automorphism pair count exceeds the configured bound")
    class_slots = [list(range(s, e)) for (_, _, s, e) in gi.classes]
    pairs = []
    for va in vautos:
        vmap = {gi.vids[i]: gi.vids[va[i]] for i in range(gi.n)}
        targets = []
        for (i, j, s, e) in gi.classes:
            ti, tj = va[i], va[j]
            if ti > tj:
                ti, tj = tj, ti
            tcls = gi.class_of_pair[(ti, tj)]
            targets.append(class_slots[tcls])
        for assignment in itertools.product(
            *[itertools.permutations(t) for t in targets]
        ):
            emap = {}
            for (ci, (_, _, s, e)) in enumerate(gi.classes):
                for off, slot in enumerate(range(s, e)):
                    emap[gi.slot_eids[slot]] = gi.slot_eids[assignment[ci][off]]
            pairs.append((vmap, emap))
    return pairs


# -- placement symmetry --------------------------------------------------------


class _Block:
    __slots__ = ("members", "nbrs", "nbr_classes")

    def __init__(self, members: tuple[int, ...], nbrs: tuple[int, ...],
                 nbr_classes: tuple[int, ...]):
        self.members = members          # sorted vertex indices
        self.nbrs = nbrs                # sorted neighbor vertex indices
        # nbr_classes[k*len(nbrs)+t] = class index of (members[k], nbrs[t])
        self.nbr_classes = nbr_classes


class PlacementSymmetry:
    """Compiled automorphism action on placements.

    Collapses interchangeable-vertex (twin) classes into blocks where safe,
    enumerates the remaining skeleton automorphisms explicitly, and answers
    the canonicity question for a placement: is (marks, counts) the
    lexicographically least member of its orbit?  Block-internal symmetry is
    folded in by sorting per-member payloads instead of enumerating the
    blocks' factorial groups.
    """

    __slots__ = ("gi", "blocks", "block_of", "skeleton", "fast_autos", "trivial")

    def __init__(self, gi: GraphIndex):
        self.gi = gi
        colors = gi.refined_colors()
        n = gi.n
        self.block_of = [-1] * n
        self.blocks: list[_Block] = []
        self._choose_blocks(colors)
        self.skeleton = self._skeleton_autos()
        self.trivial = len(self.skeleton) == 1 and not self.blocks
        self.fast_autos: list[tuple[tuple[int, ...], tuple[int, ...]]] = []
        if not self.blocks:
            for vperm in self.skeleton:
                if vperm == tuple(range(n)):
                    continue
                self.fast_autos.append((vperm, self._slot_perm(vperm)))

    # .. block selection ....................................................

    def _choose_blocks(self, colors: Sequence[int]) -> None:
        gi = self.gi
        n = gi.n
        groups: dict[int, list[int]] = {}
        for v in range(n):
            groups.setdefault(colors[v], []).append(v)
        # split each color group into twin classes
        color_classes: dict[int, list[list[int]]] = {}
        for c, members in groups.items():
            classes: list[list[int]] = []
            for v in members:
                for cl in classes:
                    if _twins(gi.loops, gi.mult, cl[0], v):
                        cl.append(v)
                        break
                else:
                    classes.append([v])
            color_classes[c] = classes
        collapsed: set[int] = set()
        # a color group is collapsed as a whole or not at all, so that every
        # automorphism maps collapsed blocks onto collapsed blocks
        for c in sorted(color_classes):
            classes = color_classes[c]
            if any(len(cl) < 2 for cl in classes):
                continue
            ok = True
            for cl in classes:
                v0 = cl[0]
                if gi.loops[v0] or any(gi.mult[x][y] for x in cl for y in cl if x < y):
                    ok = False
                    break
                for x in cl:
                    row = gi.mult[x]
                    for u in range(n):
                        if row[u] and (u in collapsed or any(u in c2 for c2 in classes)):
                            ok = False
                            break
                    if not ok:
                        break
                if not ok:
                    break
            if not ok:
                continue
            for cl in classes:
                members = tuple(sorted(cl))
                nbrs = tuple(sorted(u for u in range(n) if gi.mult[members[0]][u]))
                ncls = []
                for m in members:
                    for u in nbrs:
                        a, b = (m, u) if m < u else (u, m)
                        ncls.append(gi.class_of_pair[(a, b)])
                bi = len(self.blocks)
                self.blocks.append(_Block(members, nbrs, tuple(ncls)))
                for m in members:
                    self.block_of[m] = bi
                    collapsed.add(m)

    # .. skeleton enumeration ................................................

    def _skeleton_autos(self) -> list[tuple[int, ...]]:
        gi = self.gi
        n = gi.n
        if not self.blocks:
            vautos = _vertex_autos(n, gi.loops, gi.mult, gi.refined_colors(),
                                   SKELETON_AUTO_LIMIT)
            return vautos
        # quotient: one node per block plus the uncollapsed vertices
        singles = [v for v in range(n) if self.block_of[v] == -1]
        qn = len(self.blocks) + len(singles)
        qpos: dict[tuple[str, int], int] = {}
        for bi in range(len(self.blocks)):
            qpos[("b", bi)] = bi
        for k, v in enumerate(singles):
            qpos[("v", v)] = len(self.blocks) + k
        qloops = [0] * qn
        qmult = [[0] * qn for _ in range(qn)]
        sizes = [0] * qn
        for bi, blk in enumerate(self.blocks):
            sizes[bi] = len(blk.members)
            m0 = blk.members[0]
            for u in blk.nbrs:
                qmult[bi][qpos[("v", u)]] = gi.mult[m0][u]
                qmult[qpos[("v", u)]][bi] = gi.mult[m0][u]
        for k, v in enumerate(singles):
            i = len(self.blocks) + k
            sizes[i] = 1
            qloops[i] = gi.loops[v]
            for k2 in range(k + 1, len(singles)):
                w = singles[k2]
                j = len(self.blocks) + k2
                qmult[i][j] = qmult[j][i] = gi.mult[v][w]
        is_block = [1 if i < len(self.blocks) else 0 for i in range(qn)]
        init = _rank([(is_block[i], sizes[i], qloops[i],
                       sum(qmult[i]) + 2 * qloops[i]) for i in range(qn)])
        qcolors = _refine(qn, qloops, qmult, init)
        qautos = _vertex_autos(qn, qloops, qmult, qcolors, SKELETON_AUTO_LIMIT)
        lifted = []
        for qa in qautos:
            vperm = [-1] * n
            ok = True
            for bi, blk in enumerate(self.blocks):
                tb = qa[bi]
                if tb >= len(self.blocks) or len(self.blocks[tb].members) != len(blk.members):
                    ok = False
                    break
                for src, dst in zip(blk.members, self.blocks[tb].members):
                    vperm[src] = dst
            if not ok:
                continue
            for k, v in enumerate(singles):
                t = qa[len(self.blocks) + k] - len(self.blocks)
                if t < 0:
                    ok = False
                    break
                vperm[v] = singles[t]
            if ok and self._is_vertex_auto(vperm):
                lifted.append(tuple(vperm))
        return lifted

    def _is_vertex_auto(self, vperm: Sequence[int]) -> bool:
        gi = self.gi
        for v in range(gi.n):
            if gi.loops[vperm[v]] != gi.loops[v]:
                return False
            row = gi.mult[v]
            prow = gi.mult[vperm[v]]
            for u in range(v + 1, gi.n):
                if row[u] != prow[vperm[u]]:
                    return False
        return True

    def _slot_perm(self, vperm: Sequence[int]) -> tuple[int, ...]:
        """image[t] = counts[sp[t]] for class-sorted count vectors."""
        gi = self.gi
        sp = [0] * gi.nslots
        for (i, j, s, e) in gi.classes:
            ti, tj = vperm[i], vperm[j]
            if ti > tj:
                ti, tj = tj, ti
            (_, _, ts, te) = gi.classes[gi.class_of_pair[(ti, tj)]]
            for off in range(e - s):
                sp[ts + off] = s + off
        return tuple(sp)

    # .. canonicity ..........................................................

    def is_canonical(self, marks: tuple[int, ...], cvec: tuple[int, ...]) -> bool:
        """Is (marks, counts) lex-least in its orbit?

        ``marks`` is a sorted tuple of vertex indices and ``cvec`` a
        class-sorted count vector (ascending within each parallel class).
        """
        if self.trivial:
            return True
        if not self.blocks:
            for vperm, sp in self.fast_autos:
                if marks:
                    im = sorted(vperm[v] for v in marks)
                    if im < list(marks):
                        return False
                    if im != list(marks):
                        continue
                for t in range(len(cvec)):
                    d = cvec[sp[t]] - cvec[t]
                    if d < 0:
                        return False
                    if d > 0:
                        break
            return True
        self_key = (marks, cvec)
        for vperm in self.skeleton:
            if self._image_key(marks, cvec, vperm) < self_key:
                return False
        return True

    def min_key(self, marks: tuple[int, ...], cvec: tuple[int, ...]):
        """Orbit-minimal (marks, counts) key; exposed for cross-validation."""
        if self.trivial:
            return (marks, cvec)
        best = None
        for vperm in self.skeleton:
            key = self._image_key(marks, cvec, vperm)
            if best is None or key < best:
                best = key
        return best

    def _image_key(self, marks: tuple[int, ...], cvec: tuple[int, ...],
                   vperm: Sequence[int]):
        gi = self.gi
        out_counts = [0] * gi.nslots
        out_marks = []
        mset = set(marks)
        block_of = self.block_of
        for v in marks:
            if block_of[v] == -1:
                out_marks.append(vperm[v])
        for (i, j, s, e) in gi.classes:
            if block_of[i] != -1 or block_of[j] != -1:
                continue
            ti, tj = vperm[i], vperm[j]
            if ti > tj:
                ti, tj = tj, ti
            (_, _, ts, te) = gi.classes[gi.class_of_pair[(ti, tj)]]
            for off in range(e - s):
                out_counts[ts + off] = cvec[s + off]
        for bi, blk in enumerate(self.blocks):
            tbi = self.block_of[vperm[blk.members[0]]]
            tblk = self.blocks[tbi]
            width = len(blk.nbrs)
            # neighbor order by image id; same permutation applies to every member
            nbr_order = sorted(range(width), key=lambda t: vperm[blk.nbrs[t]])
            payloads = []
            for k, m in enumerate(blk.members):
                word = [0 if m in mset else 1]
                for t in nbr_order:
                    ci = blk.nbr_classes[k * width + t]
                    (_, _, s, e) = gi.classes[ci]
                    word.append(cvec[s:e])
                payloads.append(tuple(word))
            payloads.sort()
            for rank, word in enumerate(payloads):
                tgt = tblk.members[rank]
                if word[0] == 0:
                    out_marks.append(tgt)
                for wi, t in enumerate(nbr_order):
                    u = blk.nbrs[t]
                    tu = vperm[u]
                    a, b = (tgt, tu) if tgt < tu else (tu, tgt)
                    (_, _, ts, te) = gi.classes[gi.class_of_pair[(a, b)]]
                    vals = word[1 + wi]
                    for off, val in enumerate(vals):
                        out_counts[ts + off] = val
        out_marks.sort()
        return (tuple(out_marks), tuple(out_counts))
