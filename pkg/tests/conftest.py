"""Shared fields, generator systems and random corpora for the test suite.

Random data is always drawn from seeded generators so failures reproduce.
"""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from frobnf.nf_core import NumberField
from frobnf.semigroup import check_generators


@pytest.fixture(scope="session")
def q_field():
    return NumberField.from_spec([-1, 1], [["1"]])


@pytest.fixture(scope="session")
def sqrt2_field():
    return NumberField.from_spec([-2, 0, 1], [[1, 0], [0, 1]])


@pytest.fixture(scope="session")
def sqrt5_field():
    # ring basis {1, (1 + sqrt5)/2}
    return NumberField.from_spec(
        [-5, 0, 1], [[1, 0], [Fraction(1, 2), Fraction(1, 2)]])


@pytest.fixture(scope="session")
def cubic_field():
    # x^3 - 4x + 1 is totally real with squarefree discriminant 229
    return NumberField.from_spec(
        [1, -4, 0, 1], [[1, 0, 0], [0, 1, 0], [0, 0, 1]])


@pytest.fixture(scope="session")
def ex1_system(sqrt2_field):
    """1, 4 + sqrt2, 6 + 2 sqrt2 over Q(sqrt2)."""
    K = sqrt2_field
    return check_generators([K.one(), K.element([4, 1]), K.element([6, 2])])


@pytest.fixture(scope="session")
def q35_system(q_field):
    return check_generators([q_field.element([3]), q_field.element([5])])


@pytest.fixture(scope="session")
def q23_system(q_field):
    return check_generators([q_field.element([2]), q_field.element([3])])


def random_positive_element(field, rng: random.Random):
    """A nonzero totally positive element with small coordinates.

    The rational part is padded far enough above the conjugate spread of the
    irrational part that positivity holds at every place by construction.
    """
    d = field.degree
    if d == 1:
        return field.element([rng.randint(1, 9)])
    if d == 2:
        b = rng.randint(-2, 2)
        a = 2 * abs(b) + rng.randint(1, 4)
        return field.element([a, b])
    tail = [rng.randint(-1, 1) for _ in range(d - 1)]
    pad = sum((3 + 2 * i) * abs(t) for i, t in enumerate(tail))
    return field.element([pad + rng.randint(1, 3)] + tail)


def random_valid_system(field, rng: random.Random, n=None):
    """A generator system with all three certificates true.

    Always includes 1 and one element whose irrational coordinate pattern
    forces unit minors, so spanning holds by construction; positivity comes
    from random_positive_element.
    """
    d = field.degree
    if n is None:
        n = d + rng.choice([1, 1, 2])
    gens = [field.one()]
    for j in range(1, d):
        coords = [0] * d
        coords[j] = 1
        coords[0] = {1: 0, 2: 3}.get(d, 5)  # pad to stay totally positive
        if d == 3 and j == 2:
            coords[0] = 6
        gens.append(field.element(coords))
    while len(gens) < n:
        gens.append(random_positive_element(field, rng))
    sys_ = check_generators(gens)
    assert sys_.all_certified(), "constructed system must certify"
    return sys_


@pytest.fixture(scope="session")
def system_pool(q_field, sqrt2_field, sqrt5_field, cubic_field):
    """A reusable pool of certified systems across all four fields."""
    rng = random.Random(20240801)
    pool = []
    for _ in range(8):
        pool.append(random_valid_system(sqrt2_field, rng))
    for _ in range(5):
        pool.append(random_valid_system(sqrt5_field, rng))
    for _ in range(4):
        pool.append(random_valid_system(cubic_field, rng))
    for _ in range(3):
        coins = sorted(rng.sample(range(2, 20), rng.choice([2, 3])))
        import math
        if math.gcd(*coins) != 1:
            coins.append(coins[-1] + 1)
        pool.append(check_generators(
            [q_field.element([c]) for c in coins]))
    return pool
