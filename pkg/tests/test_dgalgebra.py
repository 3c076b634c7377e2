import pytest

from koszul.dgalgebra import DGAlgebra
from koszul.errors import InputError
from koszul.fields import PrimeField, Q
from koszul.groebner import Ideal
from koszul.rings import GradedPolyRing

from conftest import seeded


@pytest.fixture
def sullivan():
    return DGAlgebra(
        Q, [("u", 2), ("v", 2), ("x", 3), ("y", 3)], {"x": "u^2", "y": "u*v"}
    )


def test_sullivan_model_cohomology(sullivan):
    # the quotient Q[u,v,t]/(u^2, uv, ut, t^2) with |t| = 5, counted by codegree
    assert sullivan.cohomology_dims(12) == [1, 0, 2, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1]


def test_polynomial_generator_matches_hilbert_function():
    a = DGAlgebra(Q, [("u", 2)], {})
    ring = GradedPolyRing(Q, [("u", 2)])
    expansion = Ideal(ring, []).hilbert_series().expansion(10)
    assert a.cohomology_dims(10) == expansion


def test_exterior_generator():
    a = DGAlgebra(Q, [("x", 3)], {})
    assert a.cohomology_dims(7) == [1, 0, 0, 1, 0, 0, 0, 0]


def test_two_even_zero_differential_matches_free_ring():
    a = DGAlgebra(Q, [("u", 2), ("v", 4)], {})
    ring = GradedPolyRing(Q, [("u", 2), ("v", 4)])
    assert a.cohomology_dims(12) == Ideal(ring, []).hilbert_series().expansion(12)


def test_d_squared_rejected():
    with pytest.raises(InputError):
        DGAlgebra(Q, [("u", 2), ("x", 3)], {"u": "x", "x": "u^2"})


def test_wrong_codegree_rejected():
    with pytest.raises(InputError):
        DGAlgebra(Q, [("u", 2), ("x", 3)], {"x": "u"})


def test_graded_commutativity(sullivan):
    rng = seeded(19)
    monos = [m for d in range(0, 9) for m in sullivan.basis(d)]
    for _ in range(200):
        a, b = rng.choice(monos), rng.choice(monos)
        ab = sullivan.mul_poly({a: Q.one}, {b: Q.one})
        ba = sullivan.mul_poly({b: Q.one}, {a: Q.one})
        sign = (-1) ** (sullivan.codegree(a) * sullivan.codegree(b))
        flipped = {m: sign * c for m, c in ba.items()}
        assert ab == flipped


def test_multiplication_associative(sullivan):
    rng = seeded(21)
    monos = [m for d in range(0, 7) for m in sullivan.basis(d)]
    for _ in range(150):
        a, b, c = (rng.choice(monos) for _ in range(3))
        left = sullivan.mul_poly(sullivan.mul_poly({a: Q.one}, {b: Q.one}), {c: Q.one})
        right = sullivan.mul_poly({a: Q.one}, sullivan.mul_poly({b: Q.one}, {c: Q.one}))
        assert left == right


def test_leibniz_rule(sullivan):
    rng = seeded(25)
    monos = [m for d in range(0, 7) for m in sullivan.basis(d)]
    for _ in range(150):
        a, b = rng.choice(monos), rng.choice(monos)
        prod = sullivan.mul_poly({a: Q.one}, {b: Q.one})
        d_prod = sullivan.d_poly(prod)
        da_b = sullivan.mul_poly(sullivan.d_mono(a), {b: Q.one})
        sign = (-1) ** sullivan.codegree(a)
        a_db = sullivan.mul_poly({a: Q.one}, sullivan.d_mono(b))
        rhs = dict(da_b)
        for m, c in a_db.items():
            sullivan.add_term(rhs, m, sign * c)
        assert d_prod == rhs


def test_odd_squares_vanish(sullivan):
    x = {(0, 0, 1, 0): Q.one}
    assert sullivan.mul_poly(x, x) == {}


def test_prime_field_coefficients():
    a = DGAlgebra(
        PrimeField(2), [("u", 2), ("v", 2), ("x", 3), ("y", 3)], {"x": "u^2", "y": "u*v"}
    )
    dims = a.cohomology_dims(8)
    assert dims[0] == 1 and len(dims) == 9


def test_json_round_trip(sullivan):
    again = DGAlgebra.from_json(sullivan.to_json())
    assert again.cohomology_dims(8) == sullivan.cohomology_dims(8)
