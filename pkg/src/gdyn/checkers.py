"""Decision procedures for transitivity, mixing and minimality of a
continuous map on a finite G-space.

Two reductions make every property decidable by a finite scan:

* the iterate cache bounds all quantifiers over exponents by the window
  [1, p+q], since composed tables repeat beyond it;
* because G is a group, "some translate of A meets V" is equivalent to
  "A meets the orbit saturation of V", which removes the inner search
  over group elements;
* universal quantifiers over nonempty open sets are monotone in both
  arguments, so they are decided on the basis of minimal opens.

Every checker returns a PropertyReport whose witness makes the verdict
auditable: false verdicts carry a concrete failing pair of basis opens
(plus the iterate exponent where relevant), true verdicts carry per-pair
(exponent, group element) certificates when small enough.  An
independent brute-force module (`gdyn.oracle`) re-derives all verdicts
from the raw definitions; the test suite keeps the two in agreement.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass

from .algebra import is_pseudoequivariant, quotient, require_induced, trivial_action
from .bitsets import bits
from .dynamics import (
    GSystem,
    gf_orbit,
    gf_periodic_mask,
    nfold_system,
    product_system,
)
from .errors import PreconditionError, ValidationError
from .topology import map_image, map_preimage

CertificateLimit = 10_000


@dataclass(frozen=True)
class Preconditions:
    pseudoequivariant: bool
    dense_gf_periodic: bool


@dataclass(frozen=True)
class PropertyReport:
    prop: str
    verdict: bool
    witness: Mapping | None
    preconditions: Preconditions
    note: str = ""


def precondition_flags(sys: GSystem) -> Preconditions:
    return Preconditions(
        pseudoequivariant=sys.pseudoequivariant(),
        dense_gf_periodic=sys.space.is_dense(gf_periodic_mask(sys)),
    )


# -- hit sets ---------------------------------------------------------------


@dataclass(frozen=True)
class NgHits:
    """Exponents k in [1, p+q] with g.f^k(U) meeting V for some g,
    together with whether every large exponent is a hit."""

    exponents: tuple[int, ...]
    eventual: bool
    preperiod: int
    period: int


def n_g_hits(sys: GSystem, u: int, v: int) -> NgHits:
    if not u or not v:
        raise ValidationError("hit set: U and V must be nonempty")
    if u & ~sys.space.full or v & ~sys.space.full:
        raise ValidationError("hit set: U and V must be subsets of the carrier")
    c = sys.cache()
    sat = sys.action.saturate(v)
    ks = tuple(
        k for k in range(1, c.horizon + 1)
        if map_image(c.powers[k - 1], u) & sat
    )
    cyc = set(c.cycle_exponents())
    eventual = cyc.issubset(ks)
    return NgHits(ks, eventual, c.preperiod, c.period)


class _Ctx:
    """Shared per-system scan state: deduplicated basis, saturations and
    memoized images of basis sets under iterate tables."""

    __slots__ = ("sys", "cache", "basis", "sat", "_img")

    def __init__(self, sys: GSystem):
        self.sys = sys
        self.cache = sys.cache()
        seen: dict[int, None] = {}
        for m in sys.space.min_open:
            seen.setdefault(m)
        self.basis = list(seen)
        self.sat = {v: sys.action.saturate(v) for v in self.basis}
        self._img: dict[tuple[int, int], int] = {}

    def img(self, u: int, k: int) -> int:
        key = (u, k)
        out = self._img.get(key)
        if out is None:
            out = map_image(self.cache.powers[k - 1], u)
            self._img[key] = out
        return out

    def find_g(self, img: int, v: int) -> int:
        for g in range(self.sys.group.order):
            if self.sys.action.translate(g, img) & v:
                return g
        raise RuntimeError("internal: saturation hit without a witnessing element")


def _names(sys: GSystem, mask: int) -> tuple[str, ...]:
    return sys.space.names(mask)


# -- transitivity -------------------------------------------------------------


def is_g_transitive(sys: GSystem) -> PropertyReport:
    """Every pair of nonempty opens is linked by some translated iterate:
    for all U, V there are k >= 1 and g with g.f^k(U) meeting V."""
    ctx = _Ctx(sys)
    flags = precondition_flags(sys)
    hits: list[tuple[int, int, int]] = []
    for u in ctx.basis:
        for v in ctx.basis:
            sat = ctx.sat[v]
            for k in range(1, ctx.cache.horizon + 1):
                if ctx.img(u, k) & sat:
                    hits.append((u, v, k))
                    break
            else:
                return PropertyReport(
                    "gt", False, {"U": _names(sys, u), "V": _names(sys, v)}, flags
                )
    witness = _gt_certificates(ctx, hits)
    return PropertyReport("gt", True, witness, flags)


def _gt_certificates(ctx: _Ctx, hits: list[tuple[int, int, int]]) -> Mapping:
    if len(hits) > CertificateLimit:
        return {"summary": f"{len(hits)} basis pairs verified"}
    sys = ctx.sys
    certs = tuple(
        (_names(sys, u), _names(sys, v), k, sys.group.elements[ctx.find_g(ctx.img(u, k), v)])
        for u, v, k in hits
    )
    return {"certificates": certs}


def is_totally_g_transitive(sys: GSystem) -> PropertyReport:
    """Every iterate f^m, m >= 1, is itself G-transitive.  Distinct tables
    of iterates all occur with m <= p+q, so the scan is finite; the inner
    exponent search for f^m walks the reduced exponents m*j."""
    ctx = _Ctx(sys)
    flags = precondition_flags(sys)
    c = ctx.cache
    seen_tables: set[tuple[int, ...]] = set()
    all_hits: list[tuple[int, int, int, int]] = []
    for m in range(1, c.horizon + 1):
        t = c.powers[m - 1]
        if t in seen_tables:
            continue
        seen_tables.add(t)
        for u in ctx.basis:
            for v in ctx.basis:
                sat = ctx.sat[v]
                for j in range(1, c.horizon + 1):
                    if ctx.img(u, c.reduce(m * j)) & sat:
                        all_hits.append((m, u, v, c.reduce(m * j)))
                        break
                else:
                    return PropertyReport(
                        "tgt",
                        False,
                        {"m": m, "U": _names(sys, u), "V": _names(sys, v)},
                        flags,
                    )
    if len(all_hits) > CertificateLimit:
        witness: Mapping = {"summary": f"{len(all_hits)} (iterate, pair) checks verified"}
    else:
        witness = {
            "certificates": tuple(
                (m, _names(sys, u), _names(sys, v), k,
                 sys.group.elements[ctx.find_g(ctx.img(u, k), v)])
                for m, u, v, k in all_hits
            )
        }
    return PropertyReport("tgt", True, witness, flags)


def is_weakly_g_mixing(sys: GSystem) -> PropertyReport:
    """The doubled map f x f on the product space is (G x G)-transitive.

    Computed twice, by structurally different routes: once on the
    explicitly constructed product system, once directly on the base
    system by asking for a single exponent serving two basis pairs at
    once.  The two routes must agree.
    """
    direct = _wgm_direct(sys)
    prod_verdict = is_g_transitive(product_system(sys, sys)).verdict
    if prod_verdict != direct.verdict:
        raise RuntimeError("internal: weak mixing routes disagree")
    return direct


def _wgm_direct(sys: GSystem) -> PropertyReport:
    ctx = _Ctx(sys)
    flags = precondition_flags(sys)
    horizon = ctx.cache.horizon
    pairs = [(u, e) for u in ctx.basis for e in ctx.basis]
    hmask: dict[tuple[int, int], int] = {}
    for u, e in pairs:
        sat = ctx.sat[e]
        m = 0
        for k in range(1, horizon + 1):
            if ctx.img(u, k) & sat:
                m |= 1 << k
        hmask[(u, e)] = m
    certs = []
    for u, e in pairs:
        m1 = hmask[(u, e)]
        for v, w in pairs:
            joint = m1 & hmask[(v, w)]
            if not joint:
                return PropertyReport(
                    "wgm",
                    False,
                    {
                        "U": _names(sys, u), "V": _names(sys, v),
                        "E": _names(sys, e), "F": _names(sys, w),
                    },
                    flags,
                )
            certs.append((u, v, e, w, joint.bit_length() - 1))
    if len(certs) > CertificateLimit:
        witness: Mapping = {"summary": f"{len(certs)} basis 4-tuples verified"}
    else:
        witness = {
            "certificates": tuple(
                (
                    _names(sys, u), _names(sys, v), _names(sys, e), _names(sys, w), k,
                    sys.group.elements[ctx.find_g(ctx.img(u, k), e)],
                    sys.group.elements[ctx.find_g(ctx.img(v, k), w)],
                )
                for u, v, e, w, k in certs
            )
        }
    return PropertyReport("wgm", True, witness, flags)


def is_n_fold_transitive(sys: GSystem, n: int, max_carrier: int = 20000) -> PropertyReport:
    """G^n-transitivity of the n-fold product map."""
    if n < 1:
        raise PreconditionError("n-fold transitivity: n must be >= 1")
    prod = nfold_system(sys, n, max_carrier=max_carrier)
    rep = is_g_transitive(prod)
    return PropertyReport(
        f"nfold:{n}", rep.verdict, rep.witness, precondition_flags(sys),
        note=f"product carrier of {prod.space.n} points",
    )


def is_strongly_g_mixing(sys: GSystem) -> PropertyReport:
    """For every pair of nonempty opens, all sufficiently large exponents
    hit: some translate of f^n(U) meets V for every n beyond a threshold.
    Decided on the recurring exponents [p+1, p+q]."""
    ctx = _Ctx(sys)
    flags = precondition_flags(sys)
    cyc = list(ctx.cache.cycle_exponents())
    certs = []
    for u in ctx.basis:
        for v in ctx.basis:
            sat = ctx.sat[v]
            for k in cyc:
                if not (ctx.img(u, k) & sat):
                    return PropertyReport(
                        "sgm",
                        False,
                        {"U": _names(sys, u), "V": _names(sys, v), "missing_exponent": k},
                        flags,
                    )
            certs.extend((u, v, k) for k in cyc)
    if len(certs) > CertificateLimit:
        witness: Mapping = {
            "summary": f"{len(certs)} (pair, exponent) checks verified",
            "threshold": ctx.cache.preperiod + 1,
        }
    else:
        witness = {
            "threshold": ctx.cache.preperiod + 1,
            "certificates": tuple(
                (_names(sys, u), _names(sys, v), k,
                 sys.group.elements[ctx.find_g(ctx.img(u, k), v)])
                for u, v, k in certs
            ),
        }
    return PropertyReport("sgm", True, witness, flags)


# -- minimality ---------------------------------------------------------------


def g_transitive_points(sys: GSystem) -> int:
    """Mask of points whose saturated forward orbit is dense."""
    out = 0
    for x in range(sys.space.n):
        if sys.space.is_dense(gf_orbit(sys, x)):
            out |= 1 << x
    return out


def is_g_minimal(sys: GSystem) -> PropertyReport:
    """Every point has a dense saturated forward orbit."""
    flags = precondition_flags(sys)
    trans = g_transitive_points(sys)
    if trans == sys.space.full:
        return PropertyReport(
            "gm", True, {"summary": "all points have dense saturated orbits"}, flags
        )
    x = next(bits(sys.space.full & ~trans))
    return PropertyReport(
        "gm",
        False,
        {
            "x": sys.space.points[x],
            "orbit_closure": _names(sys, sys.space.closure(gf_orbit(sys, x))),
        },
        flags,
    )


def g_minimal_sets(sys: GSystem) -> list[int]:
    """All minimal dynamical cores: nonempty closed sets, invariant under
    the map and under every translation, in which every point has orbit
    closure equal to the whole set.

    For pseudoequivariant maps the relation x -> y iff y lies in the
    closure of the saturated orbit of x is a preorder, and the cores are
    exactly its terminal equivalence classes.  The general path collects
    the least closed invariant superset of each point and filters by the
    definition; on pseudoequivariant systems both paths agree and this is
    asserted.
    """
    general = _minimal_sets_general(sys)
    if sys.pseudoequivariant():
        fast = _minimal_sets_terminal_classes(sys)
        if fast != general:
            raise RuntimeError("internal: minimal-set routes disagree")
    return general


def _minimal_sets_terminal_classes(sys: GSystem) -> list[int]:
    n = sys.space.n
    reach = [sys.space.closure(gf_orbit(sys, x)) for x in range(n)]
    out = []
    for x in range(n):
        cls = 0
        rx = reach[x]
        for y in bits(rx):
            if (reach[y] >> x) & 1:
                cls |= 1 << y
        if cls == rx and rx not in out:
            out.append(rx)
    return sorted(out, key=lambda m: m & -m)


def _minimal_sets_general(sys: GSystem) -> list[int]:
    n = sys.space.n
    candidates: list[int] = []
    for x in range(n):
        s = 1 << x
        while True:
            grown = sys.space.closure(s | map_image(sys.f, s) | sys.action.saturate(s))
            if grown == s:
                break
            s = grown
        if s not in candidates:
            candidates.append(s)
    out = []
    for a in candidates:
        if all(sys.space.closure(gf_orbit(sys, y)) == a for y in bits(a)):
            out.append(a)
    return sorted(out, key=lambda m: m & -m)


def minimality_cover_criterion(sys: GSystem) -> bool:
    """For every basis open U some finite union of translated iterate
    preimages of U covers the space.  The union is monotone in the depth
    and all distinct preimage tables occur within the iterate horizon, so
    the search depth p+q+|X| is exhaustive.  Equivalent to minimality for
    pseudoequivariant maps."""
    c = sys.cache()
    n = sys.space.n
    depth = c.horizon + n
    for u in {m: None for m in sys.space.min_open}:
        covered = sys.action.saturate(u)
        pre = u
        d = 0
        while covered != sys.space.full and d < depth:
            pre = map_preimage(sys.f, pre, n)
            covered |= sys.action.saturate(pre)
            d += 1
        if covered != sys.space.full:
            return False
    return True


@dataclass(frozen=True)
class QuotientMinimality:
    gm: bool
    induced_minimal: bool


def quotient_minimality(sys: GSystem) -> QuotientMinimality:
    """Minimality of the system against minimality of the induced map on
    the orbit space (with the group forgotten).  Requires a
    pseudoequivariant map, otherwise no induced map exists."""
    if not sys.pseudoequivariant():
        raise PreconditionError(
            "quotient minimality: the map is not pseudoequivariant"
        )
    qs = quotient(sys.action, sys.f)
    induced = require_induced(qs)
    q_sys = GSystem(trivial_action(qs.space), induced)
    return QuotientMinimality(
        gm=is_g_minimal(sys).verdict,
        induced_minimal=is_g_minimal(q_sys).verdict,
    )


@dataclass(frozen=True)
class SgmCondition:
    """Outcome of the sufficient condition for strong mixing: the map is
    pseudoequivariant and transitive, some point has a dense saturated
    orbit, and that point's minimal neighbourhood eventually returns to
    itself at every large exponent.  ``conclusion_checked`` records the
    strong-mixing verdict whenever the condition applies (None
    otherwise)."""

    applies: bool
    conclusion_checked: bool | None
    note: str


_FiniteSpaceNote = (
    "second countability and non-meagerness hold for every nonempty finite "
    "space: the finitely many minimal opens form a base, and any minimal "
    "nonempty open set lies in the closure of each of its points, so no "
    "cover by nowhere dense sets exists"
)


def sgm_sufficient_condition(sys: GSystem) -> SgmCondition:
    if not sys.pseudoequivariant():
        return SgmCondition(False, None, "map is not pseudoequivariant")
    if not is_g_transitive(sys).verdict:
        return SgmCondition(False, None, "system is not transitive")
    trans = g_transitive_points(sys)
    c = sys.cache()
    for x in bits(trans):
        w = sys.space.min_open[x]
        sat = sys.action.saturate(w)
        if all(map_image(c.powers[k - 1], w) & sat for k in c.cycle_exponents()):
            ok = is_strongly_g_mixing(sys).verdict
            return SgmCondition(True, ok, _FiniteSpaceNote)
    return SgmCondition(
        False, None, "no dense-orbit point whose neighbourhood eventually returns"
    )


@dataclass(frozen=True)
class ProductMinimality:
    product_minimal: bool
    criterion: bool


def product_minimality_criterion(s1: GSystem, s2: GSystem) -> ProductMinimality:
    """Minimality of the product system against the orbit-closure
    membership criterion: for all points x, y and group elements g, k,
    both (g.f(x), y) and (x, k.h(y)) lie in the closure of the saturated
    product orbit of (x, y)."""
    prod = product_system(s1, s2)
    pm = is_g_minimal(prod).verdict
    n2 = s2.space.n
    crit = True
    for x in range(s1.space.n):
        for y in range(n2):
            r = prod.space.closure(gf_orbit(prod, x * n2 + y))
            for g in range(s1.group.order):
                if not (r >> (s1.action.act[g][s1.f[x]] * n2 + y)) & 1:
                    crit = False
                    break
            if crit:
                for k in range(s2.group.order):
                    if not (r >> (x * n2 + s2.action.act[k][s2.f[y]])) & 1:
                        crit = False
                        break
            if not crit:
                break
        if not crit:
            break
    return ProductMinimality(product_minimal=pm, criterion=crit)


# -- aggregate report ----------------------------------------------------------


def full_report(sys: GSystem) -> dict:
    """All diagram properties with precondition flags and the per-row
    consistency check used by the command-line report."""
    flags = precondition_flags(sys)
    row = {
        "p1": flags.pseudoequivariant,
        "p2": flags.dense_gf_periodic,
        "gt": is_g_transitive(sys),
        "tgt": is_totally_g_transitive(sys),
        "wgm": is_weakly_g_mixing(sys),
        "sgm": is_strongly_g_mixing(sys),
        "gm": is_g_minimal(sys),
    }
    row["diagram_violations"] = diagram_violations(
        {k: (v.verdict if isinstance(v, PropertyReport) else v) for k, v in row.items()}
    )
    return row


def diagram_violations(row: Mapping) -> tuple[str, ...]:
    """Implications that the verdict pattern violates (empty when sound)."""
    p1, p2 = row["p1"], row["p2"]
    gt, tgt, wgm, sgm, gm = row["gt"], row["tgt"], row["wgm"], row["sgm"], row["gm"]
    checks = [
        ("sgm->wgm", not sgm or wgm),
        ("sgm->tgt", not sgm or tgt),
        ("tgt->gt", not tgt or gt),
        ("gm->gt", not gm or gt),
        ("p1&wgm->tgt", not (p1 and wgm) or tgt),
        ("p1&p2&tgt->wgm", not (p1 and p2 and tgt) or wgm),
    ]
    return tuple(name for name, ok in checks if not ok)
