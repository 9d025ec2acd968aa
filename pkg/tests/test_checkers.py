import itertools

import pytest

from gdyn import checkers as ck
from gdyn.algebra import trivial_action
from gdyn.corpus import enumerate_systems
from gdyn.dynamics import GSystem, trivialized
from gdyn.errors import PreconditionError, ValidationError
from gdyn.topology import compose, discrete_space, map_image
from tests.conftest import refute_pair


def _one_point_system():
    return GSystem(trivial_action(discrete_space(("x",))), (0,))


class TestHitSets:
    def test_rot4_single_step(self, fixture_map):
        sys = fixture_map["rot4"].system
        h = ck.n_g_hits(sys, 0b0001, 0b0010)
        assert h == ck.NgHits(exponents=(1,), eventual=False, preperiod=0, period=4)

    def test_z2swap_eventual(self, fixture_map):
        sys = fixture_map["z2swap-id"].system
        h = ck.n_g_hits(sys, 0b01, 0b10)
        assert h.exponents == (1,)
        assert h.eventual

    def test_rejects_empty(self, fixture_map):
        sys = fixture_map["rot4"].system
        with pytest.raises(ValidationError, match="nonempty"):
            ck.n_g_hits(sys, 0, 0b0001)
        with pytest.raises(ValidationError, match="carrier"):
            ck.n_g_hits(sys, 0b0001, 1 << 9)

    def test_hits_match_definition(self, fixture_map):
        # every reported exponent genuinely hits, every omitted one does not
        sys = fixture_map["two-triangles"].system
        c = sys.cache()
        for u in sys.space.min_open:
            for v in sys.space.min_open:
                h = ck.n_g_hits(sys, u, v)
                sat = sys.action.saturate(v)
                for k in range(1, c.horizon + 1):
                    hit = bool(map_image(c.powers[k - 1], u) & sat)
                    assert hit == (k in h.exponents)


def _check_gt_certificate(sys, cert):
    u_names, v_names, k, g_name = cert
    u = sys.space.mask(u_names)
    v = sys.space.mask(v_names)
    t = sys.f
    for _ in range(k - 1):
        t = compose(sys.f, t)
    g = sys.group.index[g_name]
    assert sys.action.translate(g, map_image(t, u)) & v


class TestTransitivity:
    def test_verdicts_on_fixtures(self, fixture_map):
        for fx in fixture_map.values():
            assert ck.is_g_transitive(fx.system).verdict == fx.expected["gt"]
            assert ck.is_totally_g_transitive(fx.system).verdict == fx.expected["tgt"]

    def test_disc2_tgt_witness(self, fixture_map):
        rep = ck.is_totally_g_transitive(fixture_map["disc2-swap"].system)
        assert not rep.verdict
        assert rep.witness == {"m": 2, "U": ("a",), "V": ("b",)}

    def test_interval_tgt_witness(self, fixture_map):
        rep = ck.is_totally_g_transitive(fixture_map["interval-tails"].system)
        assert rep.witness == {"m": 2, "U": ("-3/4",), "V": ("-2/3",)}

    def test_false_tgt_witness_is_genuine(self, fixture_map):
        for name in ("disc2-swap", "interval-tails"):
            sys = fixture_map[name].system
            w = ck.is_totally_g_transitive(sys).witness
            refute_pair(sys, w["U"], w["V"], m=w["m"])

    def test_true_gt_certificates_replay(self, fixture_map):
        for name in ("rot4", "z4mod2", "two-triangles"):
            sys = fixture_map[name].system
            rep = ck.is_g_transitive(sys)
            assert rep.verdict
            for cert in rep.witness["certificates"]:
                _check_gt_certificate(sys, cert)

    def test_true_tgt_certificates_replay(self, fixture_map):
        sys = fixture_map["z2swap-id"].system
        rep = ck.is_totally_g_transitive(sys)
        assert rep.verdict
        for m, u_names, v_names, k, g_name in rep.witness["certificates"]:
            _check_gt_certificate(sys, (u_names, v_names, k, g_name))

    def test_false_gt_witness_is_genuine(self, fixture_map):
        sys = fixture_map["double-mod5"].system
        rep = ck.is_g_transitive(sys)
        assert not rep.verdict
        refute_pair(sys, rep.witness["U"], rep.witness["V"])


class TestMixing:
    def test_verdicts_on_fixtures(self, fixture_map):
        for fx in fixture_map.values():
            assert ck.is_weakly_g_mixing(fx.system).verdict == fx.expected["wgm"]
            assert ck.is_strongly_g_mixing(fx.system).verdict == fx.expected["sgm"]

    def test_rot4_wgm_witness(self, fixture_map):
        rep = ck.is_weakly_g_mixing(fixture_map["rot4"].system)
        assert rep.witness == {"U": ("0",), "V": ("0",), "E": ("0",), "F": ("1",)}

    def test_rot4_sgm_witness(self, fixture_map):
        rep = ck.is_strongly_g_mixing(fixture_map["rot4"].system)
        assert rep.witness == {"U": ("0",), "V": ("0",), "missing_exponent": 1}
        # replay: at the missing exponent no translate of the image meets V
        sys = fixture_map["rot4"].system
        u = sys.space.mask(rep.witness["U"])
        v = sys.space.mask(rep.witness["V"])
        k = rep.witness["missing_exponent"]
        img = map_image(sys.cache().powers[k - 1], u)
        assert not (img & sys.action.saturate(v))
        assert k in sys.cache().cycle_exponents()

    def test_sgm_true_witness_replay(self, fixture_map):
        sys = fixture_map["z2swap-id"].system
        rep = ck.is_strongly_g_mixing(sys)
        assert rep.verdict
        assert rep.witness["threshold"] == 1
        for u_names, v_names, k, g_name in rep.witness["certificates"]:
            _check_gt_certificate(sys, (u_names, v_names, k, g_name))

    def test_wgm_witness_pair_fails_jointly(self, fixture_map):
        # the reported 4-tuple admits no single exponent serving both pairs
        sys = fixture_map["rot4"].system
        w = ck.is_weakly_g_mixing(sys).witness
        c = sys.cache()
        u = sys.space.mask(w["U"])
        v = sys.space.mask(w["V"])
        e = sys.action.saturate(sys.space.mask(w["E"]))
        f = sys.action.saturate(sys.space.mask(w["F"]))
        for k in range(1, c.horizon + 1):
            t = c.powers[k - 1]
            assert not (map_image(t, u) & e and map_image(t, v) & f)

    def test_nfold_one_equals_gt(self, fixture_map):
        for fx in fixture_map.values():
            rep = ck.is_n_fold_transitive(fx.system, 1)
            assert rep.verdict == fx.expected["gt"]
            assert rep.prop == "nfold:1"

    def test_nfold_two_equals_wgm(self, fixture_map):
        for fx in fixture_map.values():
            if fx.system.space.n ** 2 > 200:
                continue
            rep = ck.is_n_fold_transitive(fx.system, 2)
            assert rep.verdict == fx.expected["wgm"]

    def test_nfold_rejects_zero(self, fixture_map):
        with pytest.raises(PreconditionError):
            ck.is_n_fold_transitive(fixture_map["rot4"].system, 0)


class TestMinimality:
    def test_verdicts_on_fixtures(self, fixture_map):
        for fx in fixture_map.values():
            assert ck.is_g_minimal(fx.system).verdict == fx.expected["gm"]

    def test_sierpinski_gm_witness(self, fixture_map):
        rep = ck.is_g_minimal(fixture_map["sierpinski-id"].system)
        assert rep.witness == {"x": "b", "orbit_closure": ("b",)}

    def test_double_mod5_gm_witness(self, fixture_map):
        rep = ck.is_g_minimal(fixture_map["double-mod5"].system)
        assert rep.witness == {"x": "0", "orbit_closure": ("0",)}

    def test_g_transitive_points_sierpinski(self, fixture_map):
        assert ck.g_transitive_points(fixture_map["sierpinski-id"].system) == 0b01

    def test_minimal_sets_interval(self, fixture_map):
        sys = fixture_map["interval-tails"].system
        sets = ck.g_minimal_sets(sys)
        assert [sys.space.names(m) for m in sets] == [("-1",), ("0",), ("1",)]

    def test_minimal_sets_properties(self):
        # each reported core satisfies the definition, pairwise disjoint;
        # without orbit preservation the saturated orbit need not be
        # forward invariant and the list may be legitimately empty
        for sys in itertools.islice(enumerate_systems(3, ("Z2", "Z3")), 400):
            sets = ck.g_minimal_sets(sys)
            if sys.pseudoequivariant():
                assert sets
            for a in sets:
                assert sys.space.closure(a) == a
                assert map_image(sys.f, a) & ~a == 0
                assert sys.action.saturate(a) == a
            for a, b in itertools.combinations(sets, 2):
                assert a & b == 0

    def test_gm_iff_unique_full_minimal_set(self, fixture_map):
        for fx in fixture_map.values():
            sets = ck.g_minimal_sets(fx.system)
            assert (sets == [fx.system.space.full]) == fx.expected["gm"]

    def test_cover_trivial_space(self):
        assert ck.minimality_cover_criterion(_one_point_system())

    def test_cover_equals_gm_when_pseudoequivariant(self, fixture_map):
        for fx in fixture_map.values():
            if fx.system.pseudoequivariant():
                assert ck.minimality_cover_criterion(fx.system) == fx.expected["gm"]

    def test_quotient_minimality_z4(self, fixture_map):
        qm = ck.quotient_minimality(fixture_map["z4mod2"].system)
        assert qm == ck.QuotientMinimality(gm=True, induced_minimal=True)

    def test_quotient_minimality_interval(self, fixture_map):
        qm = ck.quotient_minimality(fixture_map["interval-tails"].system)
        assert qm == ck.QuotientMinimality(gm=False, induced_minimal=False)

    def test_quotient_minimality_requires_p1(self, fixture_map):
        with pytest.raises(PreconditionError, match="pseudoequivariant"):
            ck.quotient_minimality(fixture_map["skew3"].system)


class TestSgmCondition:
    def test_applies_and_confirms(self, fixture_map):
        for sys in (
            fixture_map["sierpinski-id"].system,
            fixture_map["z2swap-id"].system,
            _one_point_system(),
        ):
            cond = ck.sgm_sufficient_condition(sys)
            assert cond.applies
            assert cond.conclusion_checked is True

    def test_rot4_no_returning_neighbourhood(self, fixture_map):
        cond = ck.sgm_sufficient_condition(fixture_map["rot4"].system)
        assert not cond.applies
        assert "eventually returns" in cond.note
        assert cond.conclusion_checked is None

    def test_skew3_not_pseudoequivariant(self, fixture_map):
        cond = ck.sgm_sufficient_condition(fixture_map["skew3"].system)
        assert not cond.applies
        assert cond.note == "map is not pseudoequivariant"

    def test_double_mod5_not_transitive(self, fixture_map):
        cond = ck.sgm_sufficient_condition(fixture_map["double-mod5"].system)
        assert not cond.applies
        assert cond.note == "system is not transitive"

    def test_sound_on_sweep(self):
        # whenever the condition applies the conclusion holds
        applied = 0
        for sys in itertools.islice(enumerate_systems(3, ("Z2",)), 400):
            cond = ck.sgm_sufficient_condition(sys)
            if cond.applies:
                applied += 1
                assert cond.conclusion_checked is True
        assert applied > 0


class TestProductMinimality:
    def test_minimal_pair(self, fixture_map):
        s = fixture_map["z2swap-id"].system
        pm = ck.product_minimality_criterion(s, s)
        assert pm == ck.ProductMinimality(product_minimal=True, criterion=True)

    def test_nonminimal_pair(self, fixture_map):
        s = fixture_map["rot4"].system
        pm = ck.product_minimality_criterion(s, s)
        assert pm == ck.ProductMinimality(product_minimal=False, criterion=False)

    def test_mixed_groups(self, fixture_map):
        s1 = fixture_map["z2swap-id"].system
        s2 = _one_point_system()
        pm = ck.product_minimality_criterion(s1, s2)
        assert pm.product_minimal == pm.criterion


class TestPreconditionsAndReports:
    def test_flags(self, fixture_map):
        for fx in fixture_map.values():
            flags = ck.precondition_flags(fx.system)
            assert flags.pseudoequivariant == fx.expected["p1"]
            assert flags.dense_gf_periodic == fx.expected["p2"]

    def test_full_report_keys(self, fixture_map):
        rep = ck.full_report(fixture_map["z4mod2"].system)
        assert set(rep) == {"p1", "p2", "gt", "tgt", "wgm", "sgm", "gm",
                            "diagram_violations"}
        assert rep["diagram_violations"] == ()
        for key in ("gt", "tgt", "wgm", "sgm", "gm"):
            assert isinstance(rep[key], ck.PropertyReport)
            assert rep[key].prop == key

    def test_full_report_consistent_everywhere(self, fixture_map):
        for fx in fixture_map.values():
            assert ck.full_report(fx.system)["diagram_violations"] == ()

    def test_diagram_violations_fabricated(self):
        row = {"p1": True, "p2": True, "gt": False, "tgt": True,
               "wgm": False, "sgm": True, "gm": True}
        out = ck.diagram_violations(row)
        assert "sgm->wgm" in out
        assert "tgt->gt" in out
        assert "gm->gt" in out
        assert "p1&p2&tgt->wgm" in out

    def test_trivialized_z2swap_not_transitive(self, fixture_map):
        sys = trivialized(fixture_map["z2swap-id"].system)
        rep = ck.is_g_transitive(sys)
        assert not rep.verdict
        refute_pair(sys, rep.witness["U"], rep.witness["V"])
