from fractions import Fraction

import pytest
from hypothesis import given, settings

from intdigraph import (Digraph, Interval, IntervalRep, extract_duf_ordering,
                        is_reflexive, normalize, realize_digraph,
                        set_is_absorbing, set_is_dominating, set_is_independent,
                        verify_representation, verify_set,
                        check_reflexive_interval_ordering, verify_duf_ordering)
from intdigraph.errors import DimensionMismatch, MalformedInterval, NotReflexive
from intdigraph.fixtures import two_vertex_example_rep

from conftest import all_subsets, brute_realize, interval_reps


class TestInterval:
    def test_validation(self):
        with pytest.raises(MalformedInterval):
            Interval(2, 1)
        with pytest.raises(MalformedInterval):
            Interval("x", 1)

    def test_degenerate_allowed(self):
        assert Interval(3, 3).intersects(Interval(0, 3))

    def test_closed_touching(self):
        assert Interval(0, 1).intersects(Interval(1, 2))
        assert not Interval(0, 1).intersects(Interval(Fraction(3, 2), 2))


class TestNormalize:
    def test_shared_endpoint_keeps_loop(self):
        rep = IntervalRep([(Interval(0, 1), Interval(1, 2))])
        nrep = normalize(rep)
        assert nrep.lt[0] < nrep.rs[0]  # still intersecting after ranking
        g = realize_digraph(nrep)
        assert g.loops == (True,)

    def test_distinct_input_is_order_isomorphic(self):
        rep = IntervalRep([(Interval(0, 3), Interval(5, 8)),
                           (Interval(10, 12), Interval(1, 7))])
        nrep = normalize(rep)
        ranks = sorted(nrep.ls + nrep.rs + nrep.lt + nrep.rt)
        assert ranks == list(range(8))
        assert realize_digraph(nrep) == brute_realize(rep)

    def test_degenerate_target_inside_source(self):
        rep = IntervalRep([(Interval(0, 2), Interval(3, 4)),
                           (Interval(5, 6), Interval(1, 1))])
        before = brute_realize(rep)
        after = realize_digraph(normalize(rep))
        assert before == after
        assert before.has_edge(0, 1)

    def test_idempotent(self):
        nrep = normalize(two_vertex_example_rep())
        assert normalize(nrep) is nrep


class TestRealize:
    def test_two_vertex_example(self):
        g = realize_digraph(two_vertex_example_rep())
        assert sorted(g.edges()) == [(0, 1)]
        assert g.loops == (True, True)
        assert g == brute_realize(two_vertex_example_rep())

    def test_single_vertex_loop_only(self):
        g = realize_digraph(IntervalRep([(Interval(0, 1), Interval(0, 1))]))
        assert g.m == 0 and g.loops == (True,)

    def test_disjoint_pairs_edgeless(self):
        rep = IntervalRep([(Interval(0, 1), Interval(10, 11)),
                           (Interval(20, 21), Interval(2, 3))])
        g = realize_digraph(rep)
        assert g.m == 0 and g.loops == (False, False)


class TestVerifyRepresentation:
    def test_match(self):
        rep = two_vertex_example_rep()
        assert verify_representation(rep, realize_digraph(rep))

    def test_edge_removed(self):
        rep = two_vertex_example_rep()
        assert not verify_representation(rep, Digraph(2, [], loops=[0, 1]))

    def test_empty(self):
        assert verify_representation(IntervalRep([]), Digraph(0))

    def test_size_mismatch(self):
        with pytest.raises(DimensionMismatch):
            verify_representation(two_vertex_example_rep(), Digraph(3))


class TestIsReflexive:
    def test_examples(self):
        assert is_reflexive(IntervalRep([(Interval(0, 1), Interval(0, 1))]))
        assert not is_reflexive(IntervalRep([(Interval(0, 1), Interval(2, 3))]))

    def test_adjusted_always_reflexive(self):
        rep = IntervalRep([(Interval(2, 9), Interval(2, 4)),
                           (Interval(5, 6), Interval(5, 11))])
        assert rep.adjusted and is_reflexive(rep)


class TestExtractDufOrdering:
    def test_two_vertex_example(self):
        ordering = extract_duf_ordering(normalize(two_vertex_example_rep()))
        assert ordering.perm == (0, 1) and ordering.role == "duf"

    def test_single_vertex(self):
        nrep = normalize(IntervalRep([(Interval(0, 1), Interval(0, 1))]))
        assert extract_duf_ordering(nrep).perm == (0,)

    def test_not_reflexive(self):
        nrep = normalize(IntervalRep([(Interval(0, 1), Interval(2, 3))]))
        with pytest.raises(NotReflexive) as exc:
            extract_duf_ordering(nrep)
        assert exc.value.vertex == 0

    def test_passes_both_checks(self):
        nrep = normalize(two_vertex_example_rep())
        g = realize_digraph(nrep)
        ordering = extract_duf_ordering(nrep)
        assert check_reflexive_interval_ordering(g, ordering) is None
        assert verify_duf_ordering(g, ordering) is None


@settings(max_examples=200, deadline=None)
@given(interval_reps())
def test_realize_matches_brute_pairwise(rep):
    assert realize_digraph(rep) == brute_realize(rep)


@settings(max_examples=200, deadline=None)
@given(interval_reps())
def test_normalization_preserves_realized_digraph(rep):
    assert realize_digraph(normalize(rep)) == realize_digraph(rep)


@settings(max_examples=100, deadline=None)
@given(interval_reps(max_n=6))
def test_interval_checkers_agree_with_definition(rep):
    g = realize_digraph(rep)
    for s in list(all_subsets(rep.n))[:40]:
        assert set_is_independent(rep, s) == \
            verify_set(g, s, "independent").all_checks_pass()
        assert set_is_absorbing(rep, s) == \
            verify_set(g, s, "absorbing").all_checks_pass()
        assert set_is_dominating(rep, s) == \
            verify_set(g, s, "dominating").all_checks_pass()


@settings(max_examples=150, deadline=None)
@given(interval_reps(reflexive=True))
def test_reflexive_reps_yield_valid_orderings(rep):
    nrep = normalize(rep)
    assert is_reflexive(nrep)
    g = realize_digraph(nrep)
    ordering = extract_duf_ordering(nrep)
    assert verify_duf_ordering(g, ordering) is None
    assert check_reflexive_interval_ordering(g, ordering) is None
