"""Reference graphs with documented arc-connectivity values.

These are the standard small examples from the classification of n-arc
connected graphs; the verifier replays them against the search engine.  Each
entry records what is claimed about the graph so a report can say what a
mismatch would contradict.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .classify import HomeoClass
from .multigraph import Multigraph, build


def arc() -> Multigraph:
    return build(["a", "b"], [("a", "b")])


def circle() -> Multigraph:
    return build(["a"], [("a", "a")])


def figure_eight() -> Multigraph:
    return build(["a"], [("a", "a"), ("a", "a")])


def lollipop() -> Multigraph:
    return build(["a", "b"], [("a", "a"), ("a", "b")])


def dumbbell() -> Multigraph:
    return build(["a", "b"], [("a", "a"), ("a", "b"), ("b", "b")])


def theta() -> Multigraph:
    return build(["a", "b"], [("a", "b"), ("a", "b"), ("a", "b")])


def triod() -> Multigraph:
    return star(3)


def star(k: int) -> Multigraph:
    leaves = [f"l{i}" for i in range(k)]
    return build(["c"] + leaves, [("c", leaf) for leaf in leaves])


def circle_two_whiskers() -> Multigraph:
    """A circle with a free arc hanging off each of two distinct points."""
    return build(
        ["a", "b", "t1", "t2"],
        [("a", "b"), ("a", "b"), ("a", "t1"), ("b", "t2")],
    )


def circle_two_chords() -> Multigraph:
    """A circle through three points with chords joining consecutive pairs."""
    return build(
        ["v1", "v2", "v3"],
        [("v1", "v2"), ("v2", "v3"), ("v3", "v1"), ("v1", "v2"), ("v2", "v3")],
    )


def circle_three_spokes() -> Multigraph:
    """A circle through three points, each joined to a hub (same space as K4)."""
    return build(
        ["v1", "v2", "v3", "c"],
        [("v1", "v2"), ("v2", "v3"), ("v3", "v1"), ("c", "v1"), ("c", "v2"), ("c", "v3")],
    )


def k33() -> Multigraph:
    us = ["u1", "u2", "u3"]
    ws = ["w1", "w2", "w3"]
    return build(us + ws, [(u, w) for u in us for w in ws])


def double_circle(spokes: int) -> Multigraph:
    """Two concentric circles joined by ``spokes`` radial arcs."""
    outer = [f"o{i}" for i in range(spokes)]
    inner = [f"i{i}" for i in range(spokes)]
    edges = []
    for i in range(spokes):
        edges.append((outer[i], outer[(i + 1) % spokes]))
        edges.append((inner[i], inner[(i + 1) % spokes]))
        edges.append((outer[i], inner[i]))
    return build(outer + inner, edges)


def triple_triod() -> Multigraph:
    """Three branch points in a row, each with its own free legs."""
    return build(
        ["a", "b", "c", "pa1", "pa2", "pb", "pc1", "pc2"],
        [("a", "b"), ("b", "c"),
         ("a", "pa1"), ("a", "pa2"), ("b", "pb"), ("c", "pc1"), ("c", "pc2")],
    )


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    builder: Callable[[], Multigraph]
    ac: str                    # "2".."6" or "omega"
    homeo: HomeoClass
    planar: bool
    claim: str


CORPUS: tuple[CorpusEntry, ...] = (
    CorpusEntry("arc", arc, "omega", HomeoClass.ARC, True,
                "the arc lies in the coverable family"),
    CorpusEntry("circle", circle, "omega", HomeoClass.CIRCLE, True,
                "the circle lies in the coverable family"),
    CorpusEntry("figure-eight", figure_eight, "omega", HomeoClass.FIGURE_EIGHT, True,
                "the figure eight lies in the coverable family"),
    CorpusEntry("lollipop", lollipop, "omega", HomeoClass.LOLLIPOP, True,
                "the lollipop lies in the coverable family"),
    CorpusEntry("dumbbell", dumbbell, "omega", HomeoClass.DUMBBELL, True,
                "the dumbbell lies in the coverable family"),
    CorpusEntry("theta", theta, "omega", HomeoClass.THETA, True,
                "the theta curve lies in the coverable family"),
    CorpusEntry("triod", triod, "2", HomeoClass.OTHER, True,
                "the simple triod is 2-ac but not 3-ac, minimal at 3 edges"),
    CorpusEntry("circle-two-whiskers", circle_two_whiskers, "3", HomeoClass.OTHER, True,
                "circle plus two whiskers is 3-ac but not 4-ac, minimal at 4 edges"),
    CorpusEntry("circle-two-chords", circle_two_chords, "4", HomeoClass.OTHER, True,
                "circle plus two chords is 4-ac but not 5-ac, minimal at 5 edges"),
    CorpusEntry("circle-three-spokes", circle_three_spokes, "5", HomeoClass.OTHER, True,
                "circle plus hub and three spokes is 5-ac but not 6-ac, minimal at 6 edges"),
    CorpusEntry("k33", k33, "6", HomeoClass.OTHER, False,
                "K3,3 is 6-ac but not 7-ac, minimal at 9 edges, and nonplanar"),
    CorpusEntry("double-circle-4", lambda: double_circle(4), "6", HomeoClass.OTHER, True,
                "the 4-spoke double circle (12 edges) is planar and 6-ac but not 7-ac"),
    CorpusEntry("double-circle-5", lambda: double_circle(5), "6", HomeoClass.OTHER, True,
                "the 5-spoke double circle (15 edges) is planar and 6-ac but not 7-ac"),
)


def entry(name: str) -> CorpusEntry:
    for ce in CORPUS:
        if ce.name == name:
            return ce
    raise KeyError(name)


# smallest known example for each exact ac-number, keyed by that number
MINIMAL_WITNESSES: dict[int, tuple[str, Callable[[], Multigraph]]] = {
    2: ("triod", triod),
    3: ("circle-two-whiskers", circle_two_whiskers),
    4: ("circle-two-chords", circle_two_chords),
    5: ("circle-three-spokes", circle_three_spokes),
    6: ("k33", k33),
}
