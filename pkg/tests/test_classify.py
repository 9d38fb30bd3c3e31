import pytest

from arcon import (
    GraphError,
    HomeoClass,
    build,
    covering_arc,
    cross_check,
    homeo_class,
    is_7ac_theorem,
    is_n_ac,
    necessary_conditions,
    obstruction_7,
    reduced_graph,
)
from arcon import corpus
from arcon.classify import RULE_2DEG4, RULE_3BRANCH, RULE_DEG5
from arcon.placements import realize


class TestReducedGraph:
    def test_lollipop_reduces_to_circle(self):
        red = reduced_graph(corpus.lollipop())
        assert not red.degenerate
        assert homeo_class(red.graph) is HomeoClass.CIRCLE

    def test_triod_degenerates(self):
        red = reduced_graph(corpus.triod())
        assert red.degenerate
        assert homeo_class(red.graph) is HomeoClass.ARC

    def test_circle_two_whiskers(self):
        red = reduced_graph(corpus.circle_two_whiskers())
        assert not red.degenerate
        assert homeo_class(red.graph) is HomeoClass.CIRCLE

    def test_no_terminal_edges_left(self):
        from arcon import terminal_edges

        g = build("abcdt", [("a", "b"), ("b", "c"), ("c", "a"), ("a", "d"), ("d", "t")])
        red = reduced_graph(g)
        assert not red.degenerate
        assert terminal_edges(red.graph) == ()

    def test_theta_already_reduced(self):
        red = reduced_graph(corpus.theta())
        assert red.graph == corpus.theta()

    def test_prune_implication_and_converse_failure(self):
        # pruning preserves coverability levels; the converse fails on the triod
        g = corpus.triod()
        red = reduced_graph(g).graph
        ok, _ = is_n_ac(red, 3)
        assert ok  # the leftover arc is 3-ac
        bad, _ = is_n_ac(g, 3)
        assert not bad  # while the triod itself is not


class TestHomeoClass:
    def test_subdivided_dumbbell(self):
        g, _ = corpus.dumbbell().subdivide("e0", 3)
        g, _ = g.subdivide("e1", 1)
        assert homeo_class(g) is HomeoClass.DUMBBELL

    def test_k33_is_other(self):
        assert homeo_class(corpus.k33()) is HomeoClass.OTHER

    def test_four_cycle_is_circle(self):
        g = build("abcd", [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")])
        assert homeo_class(g) is HomeoClass.CIRCLE

    def test_two_loops_one_vertex_plus_stick_is_not_dumbbell(self):
        # same vertex/edge/loop counts as the dumbbell, different space
        g = build("ab", [("a", "a"), ("a", "a"), ("a", "b")])
        assert homeo_class(g) is HomeoClass.OTHER

    def test_all_six_recognized(self):
        expect = {
            "arc": HomeoClass.ARC, "circle": HomeoClass.CIRCLE,
            "figure-eight": HomeoClass.FIGURE_EIGHT, "lollipop": HomeoClass.LOLLIPOP,
            "dumbbell": HomeoClass.DUMBBELL, "theta": HomeoClass.THETA,
        }
        for name, cls in expect.items():
            assert homeo_class(corpus.entry(name).builder()) is cls

    def test_is_7ac_theorem(self):
        assert is_7ac_theorem(corpus.theta())
        assert is_7ac_theorem(corpus.arc())
        assert not is_7ac_theorem(corpus.double_circle(5))


class TestNecessaryConditions:
    def test_five_star(self):
        rep = necessary_conditions(corpus.star(5))
        assert RULE_DEG5 in rep.fired
        assert rep.refutes(5)

    def test_k33(self):
        rep = necessary_conditions(corpus.k33())
        assert RULE_3BRANCH in rep.fired
        assert rep.branch_count == 6

    def test_figure_eight_clean(self):
        rep = necessary_conditions(corpus.figure_eight())
        assert rep.fired == ()
        assert rep.branch_count == 1 and rep.max_branch_degree == 4

    def test_two_deg4_rule(self):
        g = build("ab", [("a", "b"), ("a", "b"), ("a", "a"), ("b", "b")])
        rep = necessary_conditions(g)
        assert RULE_2DEG4 in rep.fired

    def test_computed_on_smoothed_form(self):
        g, _ = corpus.star(5).subdivide("e0", 2)
        rep = necessary_conditions(g)
        assert rep.max_branch_degree == 5 and RULE_DEG5 in rep.fired


class TestObstruction7:
    @pytest.mark.parametrize("builder", [corpus.triple_triod, corpus.k33,
                                         lambda: corpus.double_circle(4)])
    def test_placement_is_uncoverable(self, builder):
        g = builder()
        p = obstruction_7(g)
        assert p.n == 7 and not p.marks
        sub, marked = realize(g, p)
        assert covering_arc(sub, marked) is None

    def test_works_through_subdivision(self):
        g, _ = corpus.triple_triod().subdivide("e0", 2)
        p = obstruction_7(g)
        sub, marked = realize(g, p)
        assert covering_arc(sub, marked) is None

    def test_loop_supplies_two_germs(self):
        # branch points carrying loops: germs come in pairs from the loop halves
        g = build(
            "abc",
            [("a", "a"), ("a", "b"), ("b", "b"), ("b", "c"), ("c", "c")],
        )
        p = obstruction_7(g)
        sub, marked = realize(g, p)
        assert covering_arc(sub, marked) is None

    def test_requires_three_branch_points(self):
        with pytest.raises(GraphError, match="3 branch points"):
            obstruction_7(corpus.dumbbell())


class TestCrossCheck:
    def test_six_collapsible_shapes(self):
        for name in ("arc", "circle", "figure-eight", "lollipop", "dumbbell", "theta"):
            assert cross_check(corpus.entry(name).builder(), check_eight=True)

    def test_k33(self):
        assert cross_check(corpus.k33())

    def test_circle_three_spokes(self):
        assert cross_check(corpus.circle_three_spokes())
