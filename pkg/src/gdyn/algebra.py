"""Finite groups given by multiplication tables, and their actions on
finite spaces by homeomorphisms.

Groups are validated exhaustively at construction (totality,
associativity, identity, inverses); actions are validated against the
action axioms and every translation is checked to be a homeomorphism.
Both are immutable value types.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from .bitsets import bits
from .errors import PreconditionError, ValidationError
from .topology import Space, compose, identity_table, is_continuous, map_image


class Group:
    __slots__ = ("name", "elements", "index", "mul", "identity", "inv")

    def __init__(self, elements: Sequence[str], mul: Sequence[Sequence[int]], name: str = ""):
        elems = tuple(elements)
        if not elems:
            raise ValidationError("group: no elements")
        if len(set(elems)) != len(elems):
            raise ValidationError("group: duplicate element names")
        n = len(elems)
        table = tuple(tuple(row) for row in mul)
        if len(table) != n or any(len(row) != n for row in table):
            raise ValidationError("group: multiplication table must be n x n")
        for row in table:
            for v in row:
                if not (0 <= v < n):
                    raise ValidationError("group: table entry outside the element list")
        # identity
        ident = None
        for e in range(n):
            if all(table[e][x] == x and table[x][e] == x for x in range(n)):
                ident = e
                break
        if ident is None:
            raise ValidationError("group: no identity element")
        # associativity, exhaustive
        for a in range(n):
            for b in range(n):
                ab = table[a][b]
                row_a = table[a]
                for c in range(n):
                    if table[ab][c] != row_a[table[b][c]]:
                        raise ValidationError(
                            f"group: associativity fails at "
                            f"({elems[a]}, {elems[b]}, {elems[c]})"
                        )
        # inverses
        inv = [None] * n
        for a in range(n):
            for b in range(n):
                if table[a][b] == ident and table[b][a] == ident:
                    inv[a] = b
                    break
            if inv[a] is None:
                raise ValidationError(f"group: no inverse for {elems[a]}")
        self.name = name
        self.elements = elems
        self.index = {g: i for i, g in enumerate(elems)}
        self.mul = table
        self.identity = ident
        self.inv = tuple(inv)

    @property
    def order(self) -> int:
        return len(self.elements)

    def generators(self) -> tuple[int, ...]:
        """A small generating set, found greedily in element order."""
        gens: list[int] = []
        closed = {self.identity}
        for a in range(self.order):
            if a in closed:
                continue
            gens.append(a)
            frontier = list(closed | {a})
            closed = set(closed)
            closed.add(a)
            while frontier:
                x = frontier.pop()
                for y in list(closed):
                    for z in (self.mul[x][y], self.mul[y][x]):
                        if z not in closed:
                            closed.add(z)
                            frontier.append(z)
        return tuple(gens)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Group)
            and self.elements == other.elements
            and self.mul == other.mul
        )

    def __hash__(self) -> int:
        return hash((self.elements, self.mul))

    def __repr__(self) -> str:
        return f"Group({self.name or ','.join(self.elements)})"


def cyclic_group(n: int) -> Group:
    if n < 1:
        raise ValidationError("cyclic_group: order must be >= 1")
    elems = tuple(str(i) for i in range(n))
    mul = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    return Group(elems, mul, name=f"Z{n}")


def klein_group() -> Group:
    elems = ("e", "a", "b", "ab")
    # componentwise xor on two Z2 coordinates
    coords = {0: (0, 0), 1: (1, 0), 2: (0, 1), 3: (1, 1)}
    rev = {v: k for k, v in coords.items()}
    mul = tuple(
        tuple(
            rev[(coords[i][0] ^ coords[j][0], coords[i][1] ^ coords[j][1])]
            for j in range(4)
        )
        for i in range(4)
    )
    return Group(elems, mul, name="Z2xZ2")


def symmetric_group_3() -> Group:
    perms = [
        (0, 1, 2), (1, 2, 0), (2, 0, 1),  # rotations
        (0, 2, 1), (2, 1, 0), (1, 0, 2),  # transpositions
    ]
    names = ("e", "r", "rr", "s", "rs", "rrs")
    idx = {p: i for i, p in enumerate(perms)}
    mul = tuple(
        tuple(idx[tuple(p[q[k]] for k in range(3))] for q in perms)
        for p in perms
    )
    return Group(names, mul, name="S3")


_CATALOG: dict[str, Group] | None = None


def catalog() -> dict[str, Group]:
    """Validated stock groups: Z1..Z8, the Klein four-group, S3."""
    global _CATALOG
    if _CATALOG is None:
        groups = [cyclic_group(n) for n in range(1, 9)] + [klein_group(), symmetric_group_3()]
        _CATALOG = {g.name: g for g in groups}
    return _CATALOG


class Action:
    """A left action of a finite group on a finite space, every
    translation a homeomorphism.  ``act[g][x]`` is the point g.x."""

    __slots__ = ("group", "space", "act", "_orbit_of")

    def __init__(self, group: Group, space: Space, act: Sequence[Sequence[int]]):
        table = tuple(tuple(row) for row in act)
        n, m = space.n, group.order
        if len(table) != m or any(len(row) != n for row in table):
            raise ValidationError("action: table must be |G| x |X|")
        for row in table:
            for v in row:
                if not (0 <= v < n):
                    raise ValidationError("action: table entry outside the carrier")
        e = group.identity
        for x in range(n):
            if table[e][x] != x:
                raise ValidationError(
                    f"action: identity must act trivially, moves {space.points[x]}"
                )
        for g in range(m):
            for h in range(m):
                gh = group.mul[g][h]
                for x in range(n):
                    if table[g][table[h][x]] != table[gh][x]:
                        raise ValidationError(
                            f"action: compatibility fails at "
                            f"({group.elements[g]}, {group.elements[h]}, {space.points[x]})"
                        )
        for g in range(m):
            row = table[g]
            if len(set(row)) != n:
                raise ValidationError(
                    f"action: translation by {group.elements[g]} is not a bijection"
                )
            if not is_continuous(space, row):
                raise ValidationError(
                    f"action: translation by {group.elements[g]} is not continuous"
                )
            if not is_continuous(space, table[group.inv[g]]):
                raise ValidationError(
                    f"action: inverse translation of {group.elements[g]} is not continuous"
                )
        self.group = group
        self.space = space
        self.act = table
        orbit_of = []
        for x in range(n):
            o = 0
            for g in range(m):
                o |= 1 << table[g][x]
            orbit_of.append(o)
        self._orbit_of = tuple(orbit_of)

    def orbit(self, x: int) -> int:
        """Bitmask of G(x)."""
        return self._orbit_of[x]

    def saturate(self, a: int) -> int:
        """Union of all translates of a (the smallest G-invariant superset)."""
        out = 0
        for x in bits(a):
            out |= self._orbit_of[x]
        return out

    def translate(self, g: int, a: int) -> int:
        return map_image(self.act[g], a)

    def orbits(self) -> list[int]:
        """Orbit partition, ordered by smallest member."""
        seen = 0
        out = []
        for x in range(self.space.n):
            if not (seen >> x) & 1:
                o = self._orbit_of[x]
                out.append(o)
                seen |= o
        return out

    def is_trivial(self) -> bool:
        return all(row == tuple(range(self.space.n)) for row in self.act)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Action)
            and self.group == other.group
            and self.space == other.space
            and self.act == other.act
        )

    def __hash__(self) -> int:
        return hash((self.group, self.space, self.act))


def trivial_action(space: Space) -> Action:
    return Action(cyclic_group(1), space, (identity_table(space.n),))


def action_from_tables(group: Group, space: Space, rows: Sequence[Sequence[int]]) -> Action:
    return Action(group, space, rows)


def product_group(g1: Group, g2: Group) -> Group:
    names = tuple(f"({a}|{b})" for a in g1.elements for b in g2.elements)
    n2 = g2.order
    mul = []
    for a1 in range(g1.order):
        for b1 in range(n2):
            row = []
            for a2 in range(g1.order):
                for b2 in range(n2):
                    row.append(g1.mul[a1][a2] * n2 + g2.mul[b1][b2])
            mul.append(row)
    return Group(names, mul, name=f"{g1.name}x{g2.name}")


def product_action(a1: Action, a2: Action, prod_space: Space) -> Action:
    """Componentwise action of G1 x G2 on the product space."""
    g = product_group(a1.group, a2.group)
    n1, n2 = a1.space.n, a2.space.n
    rows = []
    for i in range(a1.group.order):
        for j in range(a2.group.order):
            row = []
            for x in range(n1):
                gx = a1.act[i][x] * n2
                for y in range(n2):
                    row.append(gx + a2.act[j][y])
            rows.append(row)
    return Action(g, prod_space, rows)


# -- equivariance ----------------------------------------------------------


def is_equivariant(action: Action, f: Sequence[int]) -> bool:
    """f(g.x) == g.f(x) for every g and x."""
    return equivariance_failure(action, f) is None


def equivariance_failure(action: Action, f: Sequence[int]) -> tuple[int, int] | None:
    for g, row in enumerate(action.act):
        for x in range(action.space.n):
            if f[row[x]] != row[f[x]]:
                return g, x
    return None


def is_pseudoequivariant(action: Action, f: Sequence[int]) -> bool:
    """f(G(x)) == G(f(x)) for every x: f permutes orbits setwise."""
    return pseudoequivariance_failure(action, f) is None


def pseudoequivariance_failure(action: Action, f: Sequence[int]) -> int | None:
    for x in range(action.space.n):
        if map_image(f, action.orbit(x)) != action.orbit(f[x]):
            return x
    return None


# -- quotient by the group -------------------------------------------------


@dataclass(frozen=True)
class QuotientSystem:
    """Orbit space of an action, with the projection and (when the map
    is pseudoequivariant) the induced map on orbits.

    Orbits are named after their smallest member and ordered by it.
    """

    space: Space
    proj: tuple[int, ...]
    orbit_masks: tuple[int, ...]
    induced: tuple[int, ...] | None


def quotient(action: Action, f: Sequence[int] | None = None) -> QuotientSystem:
    src = action.space
    orbit_masks = tuple(action.orbits())
    k = len(orbit_masks)
    proj = [0] * src.n
    for o, mask in enumerate(orbit_masks):
        for x in bits(mask):
            proj[x] = o

    def preimage_of(orbset: int) -> int:
        pre = 0
        for o in bits(orbset):
            pre |= orbit_masks[o]
        return pre

    # smallest open orbit set containing each orbit, by saturation fixpoint
    mo = []
    for o in range(k):
        s = 1 << o
        while True:
            pre = preimage_of(s)
            grow = 0
            for x in bits(pre):
                for y in bits(src.min_open[x] & ~pre):
                    grow |= 1 << proj[y]
            if not grow:
                break
            s |= grow
        mo.append(s)
    names = tuple(src.points[next(bits(m))] for m in orbit_masks)
    qspace = Space(names, mo)

    # the projection must be continuous, onto and open; all three are
    # guaranteed by construction, so a failure here is an internal bug
    for s in _open_orbit_sets_exhaustive(qspace):
        if not src.is_open(preimage_of(s)):
            raise RuntimeError("internal: quotient projection not continuous")
    if len(set(proj)) != k:
        raise RuntimeError("internal: quotient projection not onto")
    for x in range(src.n):
        img = 0
        for y in bits(src.min_open[x]):
            img |= 1 << proj[y]
        if not qspace.is_open(img):
            raise RuntimeError("internal: quotient projection not open")

    induced = None
    if f is not None and is_pseudoequivariant(action, f):
        induced = tuple(proj[f[next(bits(m))]] for m in orbit_masks)
        for x in range(src.n):
            if induced[proj[x]] != proj[f[x]]:
                raise RuntimeError("internal: induced map does not commute with projection")
        if not is_continuous(qspace, induced):
            raise RuntimeError("internal: induced map not continuous on the quotient")
    return QuotientSystem(qspace, tuple(proj), orbit_masks, induced)


def _open_orbit_sets_exhaustive(qspace: Space):
    if qspace.n <= 12:
        yield from qspace.opens()
    else:
        # too many subsets to sweep; check the generating basis only
        yield from qspace.min_open


def require_induced(qs: QuotientSystem) -> tuple[int, ...]:
    if qs.induced is None:
        raise PreconditionError(
            "quotient: the map is not pseudoequivariant, no induced map on orbits exists"
        )
    return qs.induced
