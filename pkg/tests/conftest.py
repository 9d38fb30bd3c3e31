"""Shared fixtures and independent oracles.

The oracles here deliberately avoid the library's clever paths: orbit counts
come from explicit automorphism pairs plus union-find, canonical-code checks
from a minimum over all vertex permutations, and censuses from
generate-everything-and-deduplicate.  Tests freeze values computed by these.
"""

from __future__ import annotations

import itertools

import pytest
from hypothesis import settings

from arcon import build, canonical_form
from arcon.multigraph import idkey
from arcon.symmetry import automorphisms

settings.register_profile("ci", deadline=None, max_examples=40)
settings.load_profile("ci")


def naive_orbit_count(g, n: int) -> int:
    """Orbits of raw n-point placements under the explicit automorphism pairs."""
    eids = sorted((e.eid for e in g.edges), key=idkey)
    eidx = {e: i for i, e in enumerate(eids)}
    raw = set()
    for j in range(0, min(n, len(g.vertices)) + 1):
        for S in itertools.combinations(g.vertices, j):
            for combo in itertools.combinations_with_replacement(range(len(eids)), n - j):
                counts = [0] * len(eids)
                for c in combo:
                    counts[c] += 1
                raw.add((frozenset(S), tuple(counts)))
    pairs = automorphisms(g)
    seen: set = set()
    orbits = 0
    for p in raw:
        if p in seen:
            continue
        orbits += 1
        stack = [p]
        seen.add(p)
        while stack:
            S, counts = stack.pop()
            for vmap, emap in pairs:
                S2 = frozenset(vmap[v] for v in S)
                c2 = [0] * len(eids)
                for e, i in eidx.items():
                    c2[eidx[emap[e]]] = counts[i]
                q = (S2, tuple(c2))
                if q not in seen:
                    seen.add(q)
                    stack.append(q)
    return orbits


def naive_code(g):
    """Minimum relabeled edge list over every vertex permutation (<= 7 vertices)."""
    verts = g.vertices
    assert len(verts) <= 7, "naive canonicalization oracle is factorial"
    best = None
    for perm in itertools.permutations(range(len(verts))):
        pos = dict(zip(verts, perm))
        items = sorted(
            (min(pos[e.a], pos[e.b]), max(pos[e.a], pos[e.b])) for e in g.edges
        )
        if best is None or items < best:
            best = items
    return (len(verts), tuple(best))


def naive_census_codes(k: int) -> set:
    """Canonical codes of every valid census member, generated the dumb way."""
    seen = set()
    for v in range(1, k + 2):
        pairs = [(i, j) for i in range(v) for j in range(i, v)]
        for combo in itertools.combinations_with_replacement(pairs, k):
            used = {x for ab in combo for x in ab}
            if used != set(range(v)):
                continue
            g = build(range(v), [(f"e{t}", a, b) for t, (a, b) in enumerate(combo)])
            if not g.is_connected():
                continue
            ok = True
            for u in range(v):
                if g.degree(u) == 2 and not (v == 1 and len(g.incident(u)) == 1):
                    ok = False
                    break
            if ok:
                seen.add(canonical_form(g))
    return seen


def relabeled(g, rng):
    """A randomly relabeled copy of ``g`` (same isomorphism class)."""
    names = [f"x{i}" for i in range(len(g.vertices))]
    rng.shuffle(names)
    vmap = dict(zip(g.vertices, names))
    enames = [f"f{i}" for i in range(len(g.edges))]
    rng.shuffle(enames)
    return build(
        names,
        [(enames[i], vmap[e.a], vmap[e.b]) for i, e in enumerate(g.edges)],
    )


@pytest.fixture(scope="session")
def small_census():
    """Census by edge count for k <= 5, reused across tests."""
    from arcon.census import reduced_multigraphs

    return {k: list(reduced_multigraphs(k)) for k in range(1, 6)}
