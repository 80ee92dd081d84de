import itertools
import random
from fractions import Fraction

import pytest

from cycloset import get_engine, star_product, table_poset, zn_poset
from cycloset.circle import CircleOrder, RationalPoint


@pytest.fixture(scope="session")
def zn8():
    return zn_poset(8)


@pytest.fixture(scope="session")
def zn8_engine(zn8):
    return get_engine(zn8)


@pytest.fixture(scope="session")
def zz2():
    return star_product(2)


def winding_sum_poset(perms, weights, auto="id"):
    """Cocycle sum(w_i * winding of circle arrangement perm_i); always valid."""
    m = len(perms[0])
    order = CircleOrder()
    pos = [
        {x: RationalPoint(Fraction(perm.index(x), m)) for x in range(m)}
        for perm in perms
    ]
    entries = {}
    for t in itertools.product(range(m), repeat=3):
        if t[0] == t[1] or t[1] == t[2]:
            continue
        entries[t] = sum(
            w * order.winding(p[t[0]], p[t[1]], p[t[2]])
            for w, p in zip(weights, pos)
        )
    return table_poset(list(range(m)), entries, auto=auto)


def random_winding_sum(rng: random.Random, m: int, parts: int = 2, total: int | None = None):
    perms = []
    for _ in range(parts):
        p = list(range(m))
        rng.shuffle(p)
        perms.append(p)
    if total is None:
        weights = [rng.randint(1, 2) for _ in range(parts)]
    else:
        cuts = sorted(rng.randint(1, total - 1) for _ in range(parts - 1))
        weights = [b - a for a, b in zip([0] + cuts, cuts + [total])]
        weights = [w for w in weights if w] or [total]
        perms = perms[: len(weights)]
    return winding_sum_poset(perms, weights), sum(weights)
