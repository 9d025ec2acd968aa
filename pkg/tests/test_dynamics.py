import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gdyn.algebra import trivial_action
from gdyn.corpus import enumerate_systems
from gdyn.dynamics import (
    GSystem,
    IterateCache,
    Invariance,
    f_orbit,
    gf_orbit,
    gf_periodic_mask,
    gf_periodic_points,
    invariance,
    nfold_system,
    periodic_points,
    product_system,
    saturate_backward,
    saturate_forward,
    trivialized,
)
from gdyn.errors import LimitError, ValidationError
from gdyn.topology import Space, compose, discrete_space, identity_table


class TestIterateCache:
    def test_identity(self):
        c = IterateCache(identity_table(3))
        assert (c.preperiod, c.period) == (0, 1)
        assert c.powers == ((0, 1, 2),)

    def test_rotation(self):
        c = IterateCache((1, 2, 3, 0))
        assert (c.preperiod, c.period) == (0, 4)
        assert c.powers[-1] == (0, 1, 2, 3)

    def test_constant(self):
        c = IterateCache((0, 0, 0))
        assert (c.preperiod, c.period) == (1, 1)
        assert c.horizon == 2

    def test_transient_then_cycle(self):
        # 0 -> 1 -> 2 -> 3 -> 4 -> 2
        c = IterateCache((1, 2, 3, 4, 2))
        assert (c.preperiod, c.period) == (2, 3)
        assert c.horizon == 5
        assert list(c.cycle_exponents()) == [3, 4, 5]

    def test_reduce_rejects_zero(self):
        c = IterateCache((1, 0))
        with pytest.raises(ValueError):
            c.reduce(0)

    def test_reduce_law(self):
        # reduce(m) picks the exponent with an equal table, verified by
        # composing from scratch
        for f in [(1, 2, 3, 4, 2), (0, 0, 0), (1, 0, 2), (1, 2, 0, 4, 5, 3)]:
            c = IterateCache(f)
            t = tuple(f)
            for m in range(1, 3 * c.horizon + 6):
                assert c.table(m) == t
                r = c.reduce(m)
                assert 1 <= r <= c.horizon
                assert c.powers[r - 1] == t
                t = compose(tuple(f), t)

    def test_reduce_fixed_on_window(self):
        c = IterateCache((1, 2, 3, 4, 2))
        assert [c.reduce(m) for m in range(1, 6)] == [1, 2, 3, 4, 5]
        assert c.reduce(6) == 3
        assert c.reduce(8) == 5
        assert c.reduce(9) == 3


class TestGSystem:
    def test_rejects_discontinuous_map(self):
        sp = Space(("a", "b"), (0b01, 0b11))
        act = trivial_action(sp)
        with pytest.raises(ValidationError, match="not continuous at b"):
            GSystem(act, (1, 0))

    def test_cache_is_memoized(self, fixture_map):
        sys = fixture_map["rot4"].system
        assert sys.cache() is sys.cache()
        assert (sys.cache().preperiod, sys.cache().period) == (0, 4)

    def test_pseudoequivariant_flags(self, fixture_map):
        assert fixture_map["z4mod2"].system.pseudoequivariant()
        assert not fixture_map["skew3"].system.pseudoequivariant()


class TestOrbits:
    def test_f_orbit_interval_limits(self, fixture_map):
        sys = fixture_map["interval-tails"].system
        sp = sys.space
        for ell in ("-1", "0", "1"):
            x = sp.index[ell]
            assert f_orbit(sys, x) == 1 << x
            assert gf_orbit(sys, x) == 1 << x

    def test_f_orbit_steps_through_cycle(self, fixture_map):
        sys = fixture_map["rot4"].system
        assert f_orbit(sys, 0) == sys.space.full

    def test_gf_orbit_saturates(self, fixture_map):
        sys = fixture_map["z4mod2"].system
        assert gf_orbit(sys, 0) == sys.space.full

    def test_gf_orbit_vs_saturate_forward(self):
        # the forward saturation always contains the g.f^k(x) union and
        # coincides with it when orbits are mapped onto orbits
        for sys in itertools.islice(enumerate_systems(3, ("Z2", "Z3")), 500):
            for x in range(sys.space.n):
                go = gf_orbit(sys, x)
                sf = saturate_forward(sys, 1 << x)
                assert go & ~sf == 0
                if sys.pseudoequivariant():
                    assert go == sf


class TestPeriodicity:
    def test_periodic_points_skew3(self, fixture_map):
        # 0 -> 2, 1 -> 0, 2 -> 2: only the fixed point 2 is periodic
        sys = fixture_map["skew3"].system
        assert periodic_points(sys) == 0b100

    def test_gf_periodic_two_triangles(self, fixture_map):
        sys = fixture_map["two-triangles"].system
        pts = dict(gf_periodic_points(sys))
        a = sys.space.index["a"]
        assert pts[a] == 2
        assert gf_periodic_mask(sys) == sys.space.full

    def test_periodic_subset_of_gf_periodic(self):
        for sys in itertools.islice(enumerate_systems(3, ("Z2",)), 400):
            assert periodic_points(sys) & ~gf_periodic_mask(sys) == 0

    def test_gf_periodic_least_exponent(self):
        # the reported k is least: f^j(x) leaves the orbit for j < k
        for sys in itertools.islice(enumerate_systems(3, ("Z3",)), 300):
            c = sys.cache()
            for x, k in gf_periodic_points(sys):
                orb = sys.action.orbit(x)
                assert (orb >> c.powers[k - 1][x]) & 1
                for j in range(1, k):
                    assert not (orb >> c.powers[j - 1][x]) & 1


class TestInvariance:
    def test_double_mod5(self, fixture_map):
        # doubling mod 5 is a bijection fixing 0, so both {0} and its
        # complement are invariant in every sense
        sys = fixture_map["double-mod5"].system
        zero = 1 << sys.space.index["0"]
        rest = sys.space.full & ~zero
        assert invariance(sys, zero) == Invariance(True, True, True, True)
        assert invariance(sys, rest) == Invariance(True, True, True, True)
        # a set meeting both orbits nontrivially is not invariant
        part = zero | (1 << sys.space.index["1"])
        inv = invariance(sys, part)
        assert not inv.forward and not inv.group

    def test_saturate_backward_contains_forward_preimages(self, fixture_map):
        sys = fixture_map["double-mod5"].system
        zero = 1 << sys.space.index["0"]
        b = saturate_backward(sys, zero)
        # 0 only reachable from 0 (doubling hits 0 only from 0 mod 5)
        assert b == zero

    def test_empty_and_full_are_invariant(self, fixture_map):
        for fx in fixture_map.values():
            sys = fx.system
            assert saturate_forward(sys, 0) == 0
            assert saturate_forward(sys, sys.space.full) == sys.space.full


class TestProducts:
    def test_product_cache_parameters(self, fixture_map):
        s = fixture_map["rot4"].system
        p = product_system(s, s)
        assert p.space.n == 16
        assert (p.cache().preperiod, p.cache().period) == (0, 4)

    def test_nfold_one_is_same_system(self, fixture_map):
        s = fixture_map["disc2-swap"].system
        assert nfold_system(s, 1) is s

    def test_nfold_two_equals_product(self, fixture_map):
        s = fixture_map["disc2-swap"].system
        assert nfold_system(s, 2) == product_system(s, s)

    def test_nfold_limit(self, fixture_map):
        s = fixture_map["double-mod5"].system  # 5 points, 5^7 > 20000
        with pytest.raises(LimitError):
            nfold_system(s, 7)
        with pytest.raises(ValueError):
            nfold_system(s, 0)

    def test_product_map_componentwise(self, fixture_map):
        s1 = fixture_map["disc2-swap"].system
        s2 = fixture_map["sierpinski-id"].system
        p = product_system(s1, s2)
        n2 = s2.space.n
        for x in range(s1.space.n):
            for y in range(n2):
                assert p.f[x * n2 + y] == s1.f[x] * n2 + s2.f[y]

    def test_trivialized_forgets_group(self, fixture_map):
        s = fixture_map["z2swap-id"].system
        t = trivialized(s)
        assert t.group.order == 1
        assert t.f == s.f
        assert t.space is s.space


@given(st.lists(st.integers(0, 5), min_size=6, max_size=6))
@settings(max_examples=60, deadline=None)
def test_cache_agrees_with_direct_composition(f):
    sp = discrete_space(tuple("abcdef"))
    sys = GSystem(trivial_action(sp), f)
    c = sys.cache()
    t = tuple(f)
    for m in range(1, c.horizon + 3):
        assert c.table(m) == t
        t = compose(tuple(f), t)
    # minimality: f^1 .. f^(p+q-1) are pairwise distinct; the last stored
    # table closes the cycle (equals f^p, or the identity when p = 0)
    tables = [c.powers[m - 1] for m in range(1, c.horizon + 1)]
    assert len(set(tables[:-1])) == c.horizon - 1
    if c.preperiod == 0:
        assert tables[-1] == identity_table(sp.n)
        assert len(set(tables)) == c.horizon
    else:
        assert tables[-1] == tables[c.preperiod - 1]
