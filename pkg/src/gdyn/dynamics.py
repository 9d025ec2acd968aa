"""Dynamical systems: a continuous self-map on a finite G-space.

The central decidability device is the iterate cache.  On a finite
carrier the sequence of composed tables f, f^2, f^3, ... is eventually
periodic: there are minimal p >= 0 and q >= 1 with f^(p+q) = f^p.  Every
"for all n" or "there exists n" quantifier over iterates is then decided
on the finite window n in [1, p+q], and the eventually-periodic tail is
exactly the exponents reducing into [p+1, p+q].
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from .algebra import Action, is_pseudoequivariant, product_action, trivial_action
from .bitsets import bits
from .errors import LimitError, ValidationError
from .topology import (
    Space,
    check_table,
    compose,
    find_discontinuity,
    identity_table,
    map_image,
    map_preimage,
    product,
)


class IterateCache:
    """Tables of f^1 .. f^(p+q) with the minimal preperiod/period pair."""

    __slots__ = ("powers", "preperiod", "period")

    def __init__(self, f: Sequence[int]):
        n = len(f)
        seen: dict[tuple[int, ...], int] = {identity_table(n): 0}
        powers: list[tuple[int, ...]] = []
        t = tuple(f)
        m = 1
        while t not in seen:
            seen[t] = m
            powers.append(t)
            t = compose(tuple(f), t)
            m += 1
        j = seen[t]
        self.preperiod = j
        self.period = m - j
        powers.append(t)  # f^(p+q), equal to f^p as a table
        self.powers = tuple(powers)

    def reduce(self, m: int) -> int:
        """The exponent in [1, p+q] whose table equals f^m (m >= 1)."""
        if m < 1:
            raise ValueError("reduce: exponent must be >= 1")
        horizon = self.preperiod + self.period
        if m <= horizon:
            return m
        return self.preperiod + 1 + (m - self.preperiod - 1) % self.period

    def table(self, m: int) -> tuple[int, ...]:
        return self.powers[self.reduce(m) - 1]

    @property
    def horizon(self) -> int:
        return self.preperiod + self.period

    def cycle_exponents(self) -> range:
        """Exponents whose tables recur infinitely often."""
        return range(self.preperiod + 1, self.preperiod + self.period + 1)


class GSystem:
    """An action together with a continuous self-map of its space."""

    __slots__ = ("action", "f", "_cache", "_pseudo")

    def __init__(self, action: Action, f: Sequence[int]):
        table = check_table(action.space, f)
        bad = find_discontinuity(action.space, table)
        if bad is not None:
            p = action.space.points
            raise ValidationError(
                f"map: not continuous at {p[bad]}: the image of its minimal "
                f"neighbourhood is not contained in min_open({p[table[bad]]})"
            )
        self.action = action
        self.f = table
        self._cache: IterateCache | None = None
        self._pseudo: bool | None = None

    @property
    def space(self) -> Space:
        return self.action.space

    @property
    def group(self):
        return self.action.group

    def cache(self) -> IterateCache:
        if self._cache is None:
            self._cache = IterateCache(self.f)
        return self._cache

    def pseudoequivariant(self) -> bool:
        if self._pseudo is None:
            self._pseudo = is_pseudoequivariant(self.action, self.f)
        return self._pseudo

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GSystem) and self.action == other.action and self.f == other.f

    def __hash__(self) -> int:
        return hash((self.action, self.f))

    def __repr__(self) -> str:
        return f"GSystem({self.space.n} points, {self.group.name or self.group.order})"


# -- orbits -----------------------------------------------------------------


def f_orbit(sys: GSystem, x: int) -> int:
    """Mask of {f^k(x) : k >= 0}."""
    out = 0
    y = x
    while not (out >> y) & 1:
        out |= 1 << y
        y = sys.f[y]
    return out


def gf_orbit(sys: GSystem, x: int) -> int:
    """Mask of {g.f^k(x) : g in G, k >= 0}."""
    return sys.action.saturate(f_orbit(sys, x))


def periodic_points(sys: GSystem) -> int:
    """Mask of x with f^k(x) = x for some k >= 1."""
    c = sys.cache()
    out = 0
    for x in range(sys.space.n):
        if any(t[x] == x for t in c.powers):
            out |= 1 << x
    return out


def gf_periodic_points(sys: GSystem) -> list[tuple[int, int]]:
    """Points x with g.f^k(x) = x for some g and k >= 1, with the least
    such k.  Since g ranges over a group, the condition at exponent k is
    f^k(x) in G(x)."""
    c = sys.cache()
    out = []
    for x in range(sys.space.n):
        orb = sys.action.orbit(x)
        for k in range(1, c.horizon + 1):
            if (orb >> c.powers[k - 1][x]) & 1:
                out.append((x, k))
                break
    return out


def gf_periodic_mask(sys: GSystem) -> int:
    out = 0
    for x, _ in gf_periodic_points(sys):
        out |= 1 << x
    return out


def saturate_forward(sys: GSystem, a: int) -> int:
    """Least superset of a closed under the map image and all translations.

    For pseudoequivariant maps this equals the union of all g.f^k(a),
    k >= 0; in general it is the least fixed point containing that union.
    """
    s = a
    while True:
        grown = s | map_image(sys.f, s) | sys.action.saturate(s)
        if grown == s:
            return s
        s = grown


def saturate_backward(sys: GSystem, a: int) -> int:
    """Least superset of a closed under the map preimage and translations."""
    s = a
    n = sys.space.n
    while True:
        grown = s | map_preimage(sys.f, s, n) | sys.action.saturate(s)
        if grown == s:
            return s
        s = grown


@dataclass(frozen=True)
class Invariance:
    forward: bool   # f(A) <= A
    backward: bool  # preimage of A under f <= A
    exact: bool     # f(A) == A
    group: bool     # g.A == A for every g


def invariance(sys: GSystem, a: int) -> Invariance:
    img = map_image(sys.f, a)
    pre = map_preimage(sys.f, a, sys.space.n)
    return Invariance(
        forward=not (img & ~a),
        backward=not (pre & ~a),
        exact=img == a,
        group=sys.action.saturate(a) == a,
    )


# -- products ----------------------------------------------------------------


def product_system(s1: GSystem, s2: GSystem) -> GSystem:
    """The product map on the product space with the componentwise action."""
    prod_space = product(s1.space, s2.space)
    act = product_action(s1.action, s2.action, prod_space)
    n2 = s2.space.n
    f = tuple(
        s1.f[x] * n2 + s2.f[y]
        for x in range(s1.space.n)
        for y in range(n2)
    )
    return GSystem(act, f)


def nfold_system(sys: GSystem, n: int, max_carrier: int = 20000) -> GSystem:
    if n < 1:
        raise ValueError("nfold_system: n must be >= 1")
    if sys.space.n ** n > max_carrier:
        raise LimitError(
            f"nfold_system: {sys.space.n}^{n} points exceeds the bound {max_carrier}"
        )
    out = sys
    for _ in range(n - 1):
        out = product_system(out, sys)
    return out


def trivialized(sys: GSystem) -> GSystem:
    """The same map with the group forgotten (trivial action)."""
    return GSystem(trivial_action(sys.space), sys.f)
