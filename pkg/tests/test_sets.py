import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from monadica import sets
from monadica.core import make
from monadica.errors import (
    DomainError,
    EmptySetError,
    LengthUndefined,
    NotMonadic,
    NotRepresentable,
    UnboundedError,
)
from monadica.sets import (
    GeneralizedSet,
    Interval,
    RealSet,
    hat_interval,
    member,
    monad,
    shadow,
)

INF = math.inf


class TestNormalization:
    def test_touching_closed_intervals_merge(self):
        got = RealSet((Interval(0, 1, True, True), Interval(1, 2, True, True)))
        assert got == RealSet.closed(0, 2)

    def test_open_touching_intervals_do_not_merge(self):
        got = RealSet((Interval(0, 1, True, False), Interval(1, 2, False, True)))
        assert len(got.intervals) == 2

    def test_half_closed_touch_merges(self):
        got = RealSet((Interval(0, 1, True, False), Interval(1, 2, True, True)))
        assert got == RealSet.closed(0, 2)

    def test_point_closes_an_open_endpoint(self):
        got = RealSet((Interval(0, 1, False, False),), (1.0,))
        assert got == RealSet.interval(0, 1, False, True)

    def test_point_bridges_two_open_intervals(self):
        got = RealSet((Interval(0, 1, False, False), Interval(1, 2, False, False)), (1.0,))
        assert got == RealSet.open(0, 2)

    def test_interior_points_are_absorbed(self):
        assert RealSet((Interval(0, 2, True, True),), (1.0,)) == RealSet.closed(0, 2)

    def test_degenerate_intervals(self):
        assert RealSet((Interval(3, 3, True, True),)) == RealSet.point(3)
        assert RealSet((Interval(3, 3, False, True),)).is_empty

    def test_bad_endpoints_rejected(self):
        with pytest.raises(DomainError):
            RealSet((Interval(2, 1, True, True),))
        with pytest.raises(DomainError):
            RealSet((Interval(math.nan, 1, True, True),))
        with pytest.raises(DomainError):
            RealSet((), (INF,))

    def test_infinite_endpoints_forced_open(self):
        got = RealSet((Interval(-INF, 0, True, True),))
        assert got.intervals[0].lo_closed is False


class TestBooleanAlgebra:
    def test_union_intersect_difference(self):
        a, b = RealSet.closed(0, 2), RealSet.closed(1, 3)
        assert a.union(b) == RealSet.closed(0, 3)
        assert a.intersect(b) == RealSet.closed(1, 2)
        assert a.difference(b) == RealSet.interval(0, 1, True, False)

    def test_complement_round_trip(self):
        s = RealSet((Interval(0, 1, True, False),), (2.0,))
        assert s.complement().complement() == s

    def test_complement_of_a_point(self):
        got = RealSet.point(0).complement()
        assert got == RealSet(
            (Interval(-INF, 0, False, False), Interval(0, INF, False, False))
        )

    def test_adjacent_closed_intervals_meet_in_a_point(self):
        assert RealSet.closed(0, 1).intersect(RealSet.closed(1, 2)) == RealSet.point(1)


class TestTopology:
    def test_interior_closure_boundary(self):
        s = RealSet((Interval(0, 1, True, False),), (2.0,))
        assert s.interior() == RealSet.open(0, 1)
        assert s.closure() == RealSet((Interval(0, 1, True, True),), (2.0,))
        assert s.boundary() == RealSet((), (0.0, 1.0, 2.0))
        assert s.exterior() == RealSet(
            (Interval(-INF, 0, False, False), Interval(1, 2, False, False),
             Interval(2, INF, False, False))
        )

    def test_predicates(self):
        assert RealSet.open(0, 1).is_open
        assert RealSet.closed(0, 1).is_closed and RealSet.closed(0, 1).is_compact
        assert not RealSet.open(0, 1).is_compact
        assert not RealSet.interval(0, INF, True, False).is_compact
        assert RealSet.closed(0, 1).is_connected
        assert not RealSet.closed(0, 1).union(RealSet.closed(2, 3)).is_connected
        assert RealSet.empty().is_connected


class TestMonadsAndShadows:
    def test_monad_of_empty_set(self):
        assert monad(RealSet.empty()).is_empty

    def test_shadow_of_monad_recovers_the_base(self):
        s = RealSet.closed(0, 1)
        assert shadow(monad(s)) == s

    def test_monad_of_shadow_recovers_monadic_sets(self):
        g = monad(RealSet.open(0, 2))
        assert monad(shadow(g)) == g

    def test_membership_uses_the_shadow(self):
        assert member(make(0.5, {"e:1": 1}), monad(RealSet.closed(0, 1)))
        assert member(make(0, {"e:1": 1}), monad(RealSet.point(0)))
        assert not member(make(1.5, {"e:1": 1}), monad(RealSet.closed(0, 1)))

    def test_extras_admit_only_the_bare_real(self):
        g = GeneralizedSet(RealSet.closed(0, 1), (2.0,))
        assert member(make(1, {"e:1": 1}), g)
        assert member(make(2), g)
        assert not member(make(2, {"e:1": 1}), g)

    def test_extras_inside_the_base_are_redundant(self):
        g = GeneralizedSet(RealSet.closed(0, 1), (0.5,))
        assert g.extras == ()

    def test_union_and_intersection_of_monads(self):
        a, b = RealSet.closed(0, 1), RealSet.closed(2, 3)
        assert sets.union(monad(a), monad(b)) == monad(a.union(b))
        mid = sets.intersect(monad(RealSet.closed(0, 2)), monad(RealSet.closed(2, 4)))
        assert mid == monad(RealSet.point(2))

    def test_difference_of_monads(self):
        got = sets.difference(monad(RealSet.closed(0, 2)), monad(RealSet.closed(1, 3)))
        assert got == monad(RealSet.interval(0, 1, True, False))

    def test_difference_cannot_puncture_a_monad(self):
        g1 = monad(RealSet.closed(0, 2))
        g2 = GeneralizedSet(RealSet.empty(), (1.0,))
        with pytest.raises(NotRepresentable):
            sets.difference(g1, g2)

    def test_intersection_sees_extras(self):
        g1 = GeneralizedSet(RealSet.closed(0, 1), (5.0,))
        g2 = GeneralizedSet(RealSet.closed(4, 6), ())
        got = sets.intersect(g1, g2)
        assert got == GeneralizedSet(RealSet.empty(), (5.0,))


class TestHatIntervals:
    def test_kinds_are_monads_of_real_intervals(self):
        assert hat_interval("closed", 0, 1) == monad(RealSet.closed(0, 1))
        assert hat_interval("open", 0, 1) == monad(RealSet.open(0, 1))
        assert hat_interval("half_lo", 0, 1) == monad(RealSet.interval(0, 1, True, False))
        assert hat_interval("half_hi", 0, 1) == monad(RealSet.interval(0, 1, False, True))
        assert hat_interval("ray_ge", 2) == monad(RealSet.interval(2, INF, True, False))
        assert hat_interval("full") == monad(RealSet.reals())

    def test_degenerate_intervals(self):
        assert hat_interval("closed", 3, 3) == monad(RealSet.point(3))
        assert hat_interval("open", 3, 3).is_empty
        assert sets.length(hat_interval("closed", 3, 3)) == 0.0
        assert sets.length(hat_interval("open", 3, 3)) == 0.0

    def test_out_of_order_endpoints_rejected(self):
        with pytest.raises(DomainError):
            hat_interval("closed", 2, 1)

    def test_length(self):
        assert sets.length(hat_interval("half_hi", 1, 4)) == 3.0
        with pytest.raises(LengthUndefined):
            sets.length(hat_interval("ray_ge", 0))
        with pytest.raises(LengthUndefined):
            sets.length(monad(RealSet.closed(0, 1).union(RealSet.closed(2, 3))))
        with pytest.raises(LengthUndefined):
            sets.length(GeneralizedSet(RealSet.open(0, 1), (2.0,)))

    def test_adjacent_closed_hats_meet_in_the_shared_monad(self):
        got = sets.intersect(hat_interval("closed", 0, 1), hat_interval("closed", 1, 2))
        assert got == monad(RealSet.point(1))


class TestMonadTopology:
    def test_interior_commutes_with_monad(self):
        assert sets.interior(monad(RealSet.closed(0, 1))) == monad(RealSet.open(0, 1))

    def test_predicates_delegate_to_the_base(self):
        assert sets.is_compact(monad(RealSet.closed(0, 1)))
        assert not sets.is_compact(monad(RealSet.open(0, 1)))
        assert not sets.is_connected(
            monad(RealSet.closed(0, 1).union(RealSet.closed(2, 3)))
        )

    def test_operations_require_monadic_sets(self):
        g = GeneralizedSet(RealSet.closed(0, 1), (2.0,))
        with pytest.raises(NotMonadic):
            sets.interior(g)
        with pytest.raises(NotMonadic):
            sets.is_open(g)


class TestBounds:
    def test_real_supremum_of_an_open_interval(self):
        assert sets.sup_r(monad(RealSet.open(0, 1))) == 1.0
        assert sets.inf_r(monad(RealSet.open(0, 1))) == 0.0

    def test_attained_extrema(self):
        assert sets.max_r(monad(RealSet.closed(0, 1))) == 1.0
        assert sets.max_r(monad(RealSet.open(0, 1))) is None
        assert sets.min_r(monad(RealSet.interval(0, 1, True, False))) == 0.0

    def test_upper_bounds_are_shadow_level(self):
        g = monad(RealSet.open(0, 1))
        assert sets.is_upper_bound(make(1, {"e:1": 1}), g)
        assert sets.is_upper_bound(make(1), g)
        assert not sets.is_upper_bound(make(0.75), g)
        assert sets.is_lower_bound(make(0, {"h": -1}), g)

    def test_empty_and_unbounded_errors(self):
        with pytest.raises(EmptySetError):
            sets.sup_r(monad(RealSet.empty()))
        with pytest.raises(UnboundedError):
            sets.sup_r(hat_interval("ray_ge", 0))
        assert sets.is_upper_bound(make(0), monad(RealSet.empty()))
        assert not sets.is_upper_bound(make(0), hat_interval("ray_ge", 0))

    def test_extras_count_for_bounds(self):
        g = GeneralizedSet(RealSet.open(0, 1), (4.0,))
        assert sets.sup_r(g) == 4.0
        assert sets.max_r(g) == 4.0


class TestWireFormat:
    def test_set_round_trip(self):
        g = GeneralizedSet(
            RealSet((Interval(0, 1, True, False), Interval(2, INF, False, False)), (1.5,)),
            (-3.0,),
        )
        assert sets.set_from_json(sets.set_to_json(g)) == g

    def test_infinite_endpoints_encode_as_strings(self):
        doc = sets.set_to_dict(hat_interval("ray_lt", 2))
        assert doc["intervals"][0]["lo"] == "-inf"
        assert doc["intervals"][0]["hi"] == 2.0


_grid = st.sampled_from([k / 2 for k in range(-6, 7)])
_realsets = st.builds(
    lambda ivs, pts: RealSet(
        tuple(Interval(min(a, b), max(a, b), lc, hc) for a, b, lc, hc in ivs),
        tuple(pts),
    ),
    st.lists(st.tuples(_grid, _grid, st.booleans(), st.booleans()), max_size=3),
    st.lists(_grid, max_size=2),
)
_samples = [k / 4 for k in range(-13, 14)]


@settings(deadline=None, max_examples=80, derandomize=True)
@given(_realsets, _realsets)
def test_boolean_operations_agree_with_pointwise_membership(a, b):
    union, inter, diff = a.union(b), a.intersect(b), a.difference(b)
    for p in _samples:
        assert union.contains(p) == (a.contains(p) or b.contains(p))
        assert inter.contains(p) == (a.contains(p) and b.contains(p))
        assert diff.contains(p) == (a.contains(p) and not b.contains(p))
        assert a.complement().contains(p) == (not a.contains(p))


@settings(deadline=None, max_examples=80, derandomize=True)
@given(_realsets, _realsets)
def test_monad_operator_preserves_boolean_structure(a, b):
    assert monad(a.union(b)) == sets.union(monad(a), monad(b))
    assert monad(a.intersect(b)) == sets.intersect(monad(a), monad(b))
    assert monad(a.difference(b)) == sets.difference(monad(a), monad(b))
    assert shadow(monad(a)) == a
    assert monad(monad(a)) == monad(a)


@settings(deadline=None, max_examples=80, derandomize=True)
@given(_realsets)
def test_interior_and_closure_sandwich_the_set(a):
    interior, closed = a.interior(), a.closure()
    for p in _samples:
        if interior.contains(p):
            assert a.contains(p)
        if a.contains(p):
            assert closed.contains(p)
    assert interior.interior() == interior
    assert closed.closure() == closed
