import pytest

from gdyn import fixtures
from gdyn.bitsets import bits
from gdyn.topology import map_image


@pytest.fixture(scope="session")
def fixture_map():
    return {fx.name: fx for fx in fixtures()}


def brute_opens(space):
    """All open sets by unioning basis elements in every combination."""
    found = {0}
    frontier = [0]
    while frontier:
        s = frontier.pop()
        for m in space.min_open:
            t = s | m
            if t not in found:
                found.add(t)
                frontier.append(t)
    return found


def brute_closure(space, a):
    """Intersection of all closed supersets."""
    out = space.full
    for o in brute_opens(space):
        c = space.full & ~o
        if a & ~c == 0:
            out &= c
    return out


def refute_pair(sys, u_names, v_names, m=1, horizon_pad=4):
    """Confirm by direct search that no translated iterate of f^m sends
    U into contact with V: the definition quantifies over k >= 1 and all
    group elements, so a false verdict must survive this scan."""
    space = sys.space
    u = space.mask(u_names)
    v = space.mask(v_names)
    c = sys.cache()
    g_rows = sys.action.act
    t = c.table(m)
    cur = u
    for _ in range(c.horizon + horizon_pad):
        cur = map_image(t, cur)
        for row in g_rows:
            tr = 0
            for x in bits(cur):
                tr |= 1 << row[x]
            assert not (tr & v), "witness pair is actually reachable"
