"""Covering arcs and counterexamples, concretely.

Shows a witness path for a coverable placement on the theta curve, then the
placement that defeats the simple triod, then the constructed 7-point
obstruction on K3,3.

Run:  python demos/demo_witnesses.py
"""

from arcon import ac_number, covering_arc, is_n_ac, obstruction_7
from arcon import corpus
from arcon.placements import Placement, realize


def show_witness(name, g, placement):
    sub, marked = realize(g, placement)
    w = covering_arc(sub, marked)
    print(f"{name}: marks={sorted(map(str, placement.marks))} "
          f"counts={dict(placement.counts)}")
    if w is None:
        print("  -> no covering arc exists")
    else:
        print("  -> arc:", " - ".join(str(v) for v in w.vertices))


def main() -> None:
    theta = corpus.theta()
    show_witness("theta, one point inside each parallel edge", theta,
                 Placement.of(theta, (), {"e0": 1, "e1": 1, "e2": 1}))

    triod = corpus.triod()
    ok, cex = is_n_ac(triod, 3)
    print(f"\ntriod is 3-ac: {ok}")
    show_witness("triod, the failing placement", triod, cex)

    k33 = corpus.k33()
    p = obstruction_7(k33)
    print(f"\nK3,3 ac-number: {ac_number(k33).label}")
    show_witness("K3,3, constructed 7-point obstruction", k33, p)


if __name__ == "__main__":
    main()
