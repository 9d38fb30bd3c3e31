"""Exhaustive census of small graph homeomorphism classes.

Every connected multigraph without suppressible degree-2 vertices (vertex
degrees 1 or >= 3, plus the one-loop circle at a single edge) represents one
homeomorphism class, and every class with a given smoothed edge count has
exactly one such representative up to isomorphism.  This module enumerates
them, filters by planarity, runs arc-connectivity profiles over them with a
resumable checkpoint, and verifies minimal-edge-count claims.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator, Optional

from .arcsearch import ac_number
from .multigraph import BoundExceeded, GraphError, Multigraph, build
from .symmetry import canonical_form, graph_index

MAX_CENSUS_EDGES = 11
CHECKPOINT_FORMAT = 1


# -- enumeration ----------------------------------------------------------------


def _degree_sequences(total: int, vcount: int) -> Iterator[tuple[int, ...]]:
    """Non-increasing sequences of ``vcount`` degrees from {1, 3, 4, ...} summing to total."""

    def rec(remaining: int, slots: int, cap: int, acc: list[int]) -> Iterator[tuple[int, ...]]:
        if slots == 0:
            if remaining == 0:
                yield tuple(acc)
            return
        if remaining < slots or remaining > slots * cap:
            return
        for d in range(min(cap, remaining - slots + 1), 0, -1):
            if d == 2:
                continue
            acc.append(d)
            yield from rec(remaining - d, slots - 1, d, acc)
            acc.pop()

    yield from rec(total, vcount, total, [])


def _matrices(degseq: tuple[int, ...]) -> Iterator[tuple[list[int], list[list[int]]]]:
    """Loop counts and multiplicity matrices realizing a degree sequence."""
    n = len(degseq)
    loops = [0] * n
    mult = [[0] * n for _ in range(n)]
    res = list(degseq)

    def fill_row(i: int) -> Iterator[tuple[list[int], list[list[int]]]]:
        if i == n:
            yield loops[:], [row[:] for row in mult]
            return
        cols = list(range(i + 1, n))

        def assign(ci: int, rem: int) -> Iterator[tuple[list[int], list[list[int]]]]:
            if ci == len(cols):
                if rem == 0:
                    yield from fill_row(i + 1)
                return
            j = cols[ci]
            hi = min(rem, res[j])
            for m in range(hi + 1):
                mult[i][j] = mult[j][i] = m
                res[j] -= m
                yield from assign(ci + 1, rem - m)
                res[j] += m
            mult[i][j] = mult[j][i] = 0

        for li in range(res[i] // 2 + 1):
            loops[i] = li
            yield from assign(0, res[i] - 2 * li)
        loops[i] = 0

    yield from fill_row(0)


def _matrix_graph(loops: list[int], mult: list[list[int]]) -> Multigraph:
    n = len(loops)
    edges = []
    t = 0
    for i in range(n):
        for _ in range(loops[i]):
            edges.append((f"e{t}", i, i))
            t += 1
        for j in range(i + 1, n):
            for _ in range(mult[i][j]):
                edges.append((f"e{t}", i, j))
                t += 1
    return build(range(n), edges)


def _matrix_connected(loops: list[int], mult: list[list[int]]) -> bool:
    n = len(mult)
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in range(n):
            if w not in seen and mult[u][w]:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


def reduced_multigraphs(edge_count: int, max_edges: int = MAX_CENSUS_EDGES
                        ) -> Iterator[Multigraph]:
    """One representative per homeomorphism class with ``edge_count`` smoothed edges.

    Connected multigraphs with all degrees 1 or >= 3, deduplicated by
    canonical form; the one-loop circle joins the census at a single edge.
    Deterministic order: vertex count, then degree sequence, then matrix.
    """
    if edge_count < 1:
        raise GraphError("edge_count must be >= 1")
    if edge_count > max_edges:
        raise BoundExceeded(f"census limited to {max_edges} edges, asked for {edge_count}")
    if edge_count == 1:
        yield build(["a"], [("e0", "a", "a")])  # circle: the sanctioned degree-2 form
    seen: set[bytes] = set()
    total = 2 * edge_count
    for vcount in range(1, edge_count + 2):
        for degseq in _degree_sequences(total, vcount):
            for loops, mult in _matrices(degseq):
                if not _matrix_connected(loops, mult):
                    continue
                g = _matrix_graph(loops, mult)
                code = canonical_form(g)
                if code not in seen:
                    seen.add(code)
                    yield g


# -- planarity -------------------------------------------------------------------

_minor_memo: dict[bytes, bool] = {}


def _simple_adj(g: Multigraph) -> list[int]:
    """Underlying simple graph as adjacency bitmasks (loops dropped, parallels merged)."""
    gi = graph_index(g)
    adj = [0] * gi.n
    for (i, j) in gi.slot_pairs:
        if i != j:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    return adj


def _bits(mask: int) -> Iterator[int]:
    while mask:
        b = mask & -mask
        mask ^= b
        yield b.bit_length() - 1


def _has_k5(adj: list[int], verts: int) -> bool:
    cand = [v for v in _bits(verts) if bin(adj[v] & verts).count("1") >= 4]
    from itertools import combinations

    for quad in combinations(cand, 5):
        ok = True
        for x in quad:
            for y in quad:
                if x < y and not (adj[x] >> y) & 1:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return True
    return False


def _has_k33(adj: list[int], verts: int) -> bool:
    from itertools import combinations

    cand = [v for v in _bits(verts) if bin(adj[v] & verts).count("1") >= 3]
    for triple in combinations(cand, 3):
        common = verts
        tm = 0
        for v in triple:
            common &= adj[v]
            tm |= 1 << v
        if bin(common & ~tm).count("1") >= 3:
            return True
    return False


def _adj_key(adj: dict[int, set[int]]) -> bytes:
    n = len(adj)
    order = sorted(adj)
    pos = {v: i for i, v in enumerate(order)}
    loops = [0] * n
    mult = [[0] * n for _ in range(n)]
    for v, nbrs in adj.items():
        for w in nbrs:
            mult[pos[v]][pos[w]] = 1
    from .symmetry import _canonical_items

    items = _canonical_items(n, loops, mult)
    out = bytearray([n])
    for a, b, m in items:
        out.extend((a, b, m))
    return bytes(out)


def _reduce_core(adj: dict[int, set[int]]) -> dict[int, set[int]]:
    """Strip degree <= 1 vertices and suppress degree-2 vertices.

    Minor-closed both ways for the K5/K3,3 question, so the core decides
    planarity for the original graph.
    """
    adj = {v: set(ns) for v, ns in adj.items()}
    changed = True
    while changed:
        changed = False
        for v in list(adj):
            ns = adj.get(v)
            if ns is None:
                continue
            if len(ns) <= 1:
                for w in ns:
                    adj[w].discard(v)
                del adj[v]
                changed = True
            elif len(ns) == 2:
                a, b = sorted(ns)
                adj[a].discard(v)
                adj[b].discard(v)
                del adj[v]
                if a != b:
                    adj[a].add(b)
                    adj[b].add(a)
                changed = True
    return adj


def _has_forbidden_minor(adj: dict[int, set[int]]) -> bool:
    adj = _reduce_core(adj)
    n = len(adj)
    ecount = sum(len(ns) for ns in adj.values()) // 2
    if n < 5 or ecount < 9:
        return False
    key = _adj_key(adj)
    got = _minor_memo.get(key)
    if got is not None:
        return got
    order = sorted(adj)
    pos = {v: i for i, v in enumerate(order)}
    masks = [0] * n
    for v, ns in adj.items():
        for w in ns:
            masks[pos[v]] |= 1 << pos[w]
    verts = (1 << n) - 1
    if _has_k5(masks, verts) or _has_k33(masks, verts):
        _minor_memo[key] = True
        return True
    result = False
    seen_children: set[bytes] = set()
    for v in order:
        for w in sorted(adj[v]):
            if w <= v:
                continue
            child = {x: set(ns) for x, ns in adj.items()}
            # contract w into v
            for x in child[w]:
                if x != v:
                    child[x].discard(w)
                    child[x].add(v)
                    child[v].add(x)
            child[v].discard(w)
            child[v].discard(v)
            del child[w]
            ck = _adj_key(_reduce_core(child))
            if ck in seen_children:
                continue
            seen_children.add(ck)
            if _has_forbidden_minor(child):
                result = True
                break
        if result:
            break
    if len(_minor_memo) < 200_000:
        _minor_memo[key] = result
    return result


def is_planar(g: Multigraph) -> bool:
    """Planarity of the underlying space.

    Loops and parallel edges never matter, so the test runs on the simple
    underlying graph: edge-count quick accept, Euler-bound quick reject, then
    an exhaustive K5/K3,3 minor search by contraction.
    """
    if not g.is_connected():
        raise GraphError("is_planar expects a connected graph")
    gi = graph_index(g)
    if gi.n > 16:
        raise BoundExceeded("planarity test limited to 16 vertices")
    adjm = _simple_adj(g)
    ecount = sum(bin(m).count("1") for m in adjm) // 2
    if ecount <= 8 or gi.n <= 4:
        return True
    if gi.n >= 3 and ecount > 3 * gi.n - 6:
        return False
    adj = {v: set(_bits(adjm[v])) for v in range(gi.n)}
    return not _has_forbidden_minor(adj)


# -- profile search ---------------------------------------------------------------


def parse_profile(expr: str) -> tuple[str, int]:
    """Profile grammar: ``=k`` or ``=k,!k+1`` (ac-number exactly k) or ``omega``."""
    expr = expr.strip()
    if expr == "omega":
        return ("omega", 0)
    if expr.startswith("="):
        body = expr[1:]
        if "," in body:
            left, right = body.split(",", 1)
            if not right.startswith("!"):
                raise GraphError(f"bad profile {expr!r}")
            k = int(left)
            if int(right[1:]) != k + 1:
                raise GraphError(f"bad profile {expr!r}: expected !{k + 1}")
        else:
            k = int(body)
        if not 2 <= k <= 6:
            raise GraphError("profile level must be in 2..6")
        return ("exact", k)
    raise GraphError(f"bad profile {expr!r}")


@dataclass(frozen=True)
class SearchTask:
    edges_min: int
    edges_max: int
    profile: str
    planar_only: bool = False
    checkpoint: Optional[str] = None
    jobs: int = 1

    def __post_init__(self):
        if self.edges_min < 1 or self.edges_max < self.edges_min:
            raise GraphError("bad edge range")
        parse_profile(self.profile)


@dataclass(frozen=True)
class SearchRecord:
    canon: str  # hex canonical code
    edges: int
    planar: bool
    ac: str     # "2".."6" or "omega"
    omega: bool

    def to_json(self) -> str:
        return json.dumps(
            {"canon": self.canon, "edges": self.edges, "planar": self.planar,
             "ac": self.ac, "omega": self.omega},
            sort_keys=True, separators=(",", ":"))

    @staticmethod
    def from_json(line: str) -> "SearchRecord":
        d = json.loads(line)
        return SearchRecord(d["canon"], d["edges"], d["planar"], str(d["ac"]), d["omega"])


def _record_matches(rec: SearchRecord, profile: str) -> bool:
    kind, k = parse_profile(profile)
    if kind == "omega":
        return rec.omega
    return (not rec.omega) and rec.ac == str(k)


def _profile_worker(payload):
    """Top-level worker: rebuild a graph from its edge list, profile it."""
    vcount, edges, canon_hex, k = payload
    g = build(range(vcount), edges)
    prof = ac_number(g, cap=7, counterexamples="probe")
    return SearchRecord(canon_hex, k, is_planar(g), prof.label, prof.omega)


def _checkpoint_header(task: SearchTask) -> str:
    return json.dumps(
        {"format": CHECKPOINT_FORMAT, "edges_min": task.edges_min,
         "edges_max": task.edges_max, "profile": task.profile,
         "planar_only": task.planar_only},
        sort_keys=True, separators=(",", ":"))


def search(task: SearchTask, stop_after: Optional[int] = None) -> Iterator[SearchRecord]:
    """Profile every census graph in range, checkpointing as it goes.

    Emits one record per processed graph whose profile matches the task (in
    census order, so re-runs and resumed runs produce the same stream).  The
    checkpoint file is append-only: a header line with the task parameters,
    then one JSON record per processed graph; on resume, codes present in the
    file are not recomputed.  ``stop_after`` (testing hook) aborts after that
    many newly processed graphs.
    """
    done: dict[str, SearchRecord] = {}
    out = None
    if task.checkpoint:
        import os

        header = _checkpoint_header(task)
        if os.path.exists(task.checkpoint):
            with open(task.checkpoint, "r", encoding="utf-8") as fh:
                lines = [ln for ln in fh.read().splitlines() if ln.strip()]
            if not lines or lines[0] != header:
                raise GraphError("checkpoint file does not match this task")
            for ln in lines[1:]:
                rec = SearchRecord.from_json(ln)
                done[rec.canon] = rec
            out = open(task.checkpoint, "a", encoding="utf-8")
        else:
            out = open(task.checkpoint, "w", encoding="utf-8")
            out.write(header + "\n")
            out.flush()
    processed = 0
    pool = None
    try:
        if task.jobs > 1:
            from concurrent.futures import ProcessPoolExecutor

            pool = ProcessPoolExecutor(max_workers=task.jobs)
        for k in range(task.edges_min, task.edges_max + 1):
            batch = []
            for g in reduced_multigraphs(k):
                if task.planar_only and not is_planar(g):
                    continue
                code = canonical_form(g).hex()
                if code in done:
                    rec = done[code]
                    if _record_matches(rec, task.profile):
                        yield rec
                    continue
                gi = graph_index(g)
                edges = [(e.eid, gi.vpos[e.a], gi.vpos[e.b]) for e in g.edges]
                batch.append((gi.n, edges, code, k))
            mapper = pool.map(_profile_worker, batch, chunksize=4) if pool \
                else map(_profile_worker, batch)
            for rec in mapper:
                if out is not None:
                    out.write(rec.to_json() + "\n")
                    out.flush()
                done[rec.canon] = rec
                processed += 1
                if _record_matches(rec, task.profile):
                    yield rec
                if stop_after is not None and processed >= stop_after:
                    return
    finally:
        if pool is not None:
            pool.shutdown()
        if out is not None:
            out.close()


# -- minimality -------------------------------------------------------------------

MINIMAL_EDGE_BUDGET = {2: 3, 3: 4, 4: 5, 5: 6, 6: 9}


@dataclass(frozen=True)
class MinimalityReport:
    """Outcome of sweeping all censuses below a claimed minimal edge count."""

    n: int
    budget: int
    census_sizes: tuple[tuple[int, int], ...]  # (edge count, classes examined)
    violations: tuple[str, ...]                # canon hex of graphs with ac == n
    witness_name: str
    witness_ok: bool

    @property
    def ok(self) -> bool:
        return not self.violations and self.witness_ok


def verify_minimality(n: int, max_edges: Optional[int] = None) -> MinimalityReport:
    """Check that no graph below the known edge budget has ac-number exactly n.

    Edge counts are counts of smoothed edges (degree-2 vertices suppressed,
    circle = one loop).  ``max_edges`` truncates the sweep for a partial
    (faster) report; the full claim needs the default budget-1 sweep.
    """
    from . import corpus

    if n not in MINIMAL_EDGE_BUDGET:
        raise GraphError("minimality is tracked for ac-numbers 2..6")
    budget = MINIMAL_EDGE_BUDGET[n]
    top = budget - 1 if max_edges is None else min(max_edges, budget - 1)
    sizes = []
    violations = []
    for k in range(1, top + 1):
        count = 0
        for g in reduced_multigraphs(k):
            count += 1
            prof = ac_number(g, cap=n + 1, counterexamples="probe")
            if prof.number == n:
                violations.append(canonical_form(g).hex())
        sizes.append((k, count))
    name, builder = corpus.MINIMAL_WITNESSES[n]
    wg = builder()
    wprof = ac_number(wg, cap=n + 1, counterexamples="probe")
    return MinimalityReport(n, budget, tuple(sizes), tuple(violations),
                            name, wprof.number == n)
