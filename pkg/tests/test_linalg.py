from fractions import Fraction

from koszul.fields import PrimeField, Q
from koszul.linalg import rank, rank_int_bareiss, rank_mod_p, rank_poly
from koszul.rings import GradedPolyRing

from conftest import seeded


def _rank_gauss(rows):
    """Plain Fraction Gaussian elimination, the reference."""
    rows = [[Fraction(x) for x in r] for r in rows]
    rank_ = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(rank_, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[rank_], rows[piv] = rows[piv], rows[rank_]
        for i in range(len(rows)):
            if i != rank_ and rows[i][c]:
                f = rows[i][c] / rows[rank_][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank_])]
        rank_ += 1
    return rank_


def test_bareiss_matches_gauss():
    rng = seeded(3)
    for _ in range(120):
        nr, nc = rng.randint(1, 6), rng.randint(1, 6)
        m = [[rng.randint(-4, 4) for _ in range(nc)] for _ in range(nr)]
        assert rank_int_bareiss([r[:] for r in m]) == _rank_gauss(m)


def test_rank_mod_p():
    assert rank_mod_p([[2, 4], [2, 4]], 2) == 0
    assert rank_mod_p([[2, 4], [1, 2]], 2) == 1
    assert rank_mod_p([[2, 4], [1, 2]], 3) == 1
    assert rank_mod_p([[1, 0], [0, 1]], 5) == 2


def test_rank_field_dispatch():
    rows = [[Fraction(1, 2), Fraction(1)], [Fraction(1), Fraction(2)]]
    assert rank(rows, Q) == 1
    assert rank([[1, 1], [1, 0]], PrimeField(2)) == 2
    assert rank([], Q) == 0


def test_rank_poly_matches_scalar_on_constants():
    ring = GradedPolyRing(Q, [("x", 2), ("y", 2)])
    rng = seeded(5)
    for _ in range(60):
        nr, nc = rng.randint(1, 5), rng.randint(1, 5)
        ints = [[rng.randint(-3, 3) for _ in range(nc)] for _ in range(nr)]
        polys = [[ring.constant(v) for v in row] for row in ints]
        assert rank_poly(polys) == _rank_gauss(ints)


def test_rank_poly_generic():
    ring = GradedPolyRing(Q, [("x", 2), ("y", 2)])
    x, y = ring.variable(0), ring.variable(1)
    # rows proportional over the fraction field
    assert rank_poly([[x, x * y], [y, y * y]]) == 1
    assert rank_poly([[x, y], [y, x]]) == 2
    # Koszul syzygy matrix drops rank
    z = ring.zero()
    assert rank_poly([[y], [-x]]) == 1
    assert rank_poly([[z, z], [z, z]]) == 0
