import random

import pytest

from koszul.fields import PrimeField, Q
from koszul.rings import GradedPolyRing, Polynomial


@pytest.fixture
def r1():
    return GradedPolyRing(Q, [("x1", 2)])


@pytest.fixture
def r2():
    return GradedPolyRing(Q, [("x1", 2), ("x2", 2)])


@pytest.fixture
def r3():
    return GradedPolyRing(Q, [("x1", 2), ("x2", 2), ("x3", 2)])


@pytest.fixture
def r4():
    return GradedPolyRing(Q, [(f"x{i}", 2) for i in range(1, 5)])


@pytest.fixture
def r2_f2():
    return GradedPolyRing(PrimeField(2), [("x1", 2), ("x2", 2)])


def random_homogeneous(ring, rng, codegree, max_terms=3) -> Polynomial:
    """A random nonzero homogeneous polynomial of the given codegree."""
    basis = ring.graded_piece_basis(codegree)
    if not basis:
        raise ValueError(f"no monomials of codegree {codegree}")
    terms = {}
    for m in rng.sample(basis, min(len(basis), rng.randint(1, max_terms))):
        c = rng.randint(-3, 3)
        if c:
            terms[m] = ring.field.coerce(c)
    if not terms:
        terms[rng.choice(basis)] = ring.field.one
    return Polynomial(ring, terms)


def random_poly(ring, rng, max_codegree=8, max_terms=4) -> Polynomial:
    """A random polynomial, possibly inhomogeneous, possibly zero."""
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        d = 2 * rng.randint(0, max_codegree // 2)
        basis = ring.graded_piece_basis(d)
        m = rng.choice(basis)
        c = rng.randint(-4, 4)
        if c:
            terms[m] = ring.field.coerce(c)
    return Polynomial(ring, terms)


def seeded(seed: int) -> random.Random:
    return random.Random(seed)
