import pytest

from koszul.errors import InputError
from koszul.fields import PrimeField
from koszul.groebner import HilbertSeries
from koszul.stanley_reisner import (
    SimplicialComplex,
    dj_cohomology,
    is_complete_intersection,
    minimal_nonfaces,
    soci_tower,
    sr_ideal,
    sr_ring,
)
from koszul.supports import is_regular_sequence, monomial_koszul_regular

from conftest import seeded


@pytest.fixture
def cycle4():
    return SimplicialComplex(4, [[1, 2], [2, 3], [3, 4], [1, 4]])


def random_complex(rng, m):
    n_facets = rng.randint(0, 5)
    facets = []
    for _ in range(n_facets):
        size = rng.randint(1, m)
        facets.append(rng.sample(range(1, m + 1), size))
    return SimplicialComplex(m, facets)


def test_facet_normalization():
    k = SimplicialComplex(3, [[1], [1, 2], [1, 2], [3]])
    assert k.facets == frozenset({frozenset({1, 2}), frozenset({3})})
    with pytest.raises(InputError):
        SimplicialComplex(2, [[3]])


def test_minimal_nonfaces_examples(cycle4):
    assert [sorted(s) for s in minimal_nonfaces(cycle4)] == [[1, 3], [2, 4]]
    assert minimal_nonfaces(SimplicialComplex.full_simplex(4)) == []
    iso3 = SimplicialComplex(3, [[1], [2], [3]])
    assert [sorted(s) for s in minimal_nonfaces(iso3)] == [[1, 2], [1, 3], [2, 3]]


def test_sr_ideal_examples(cycle4):
    assert [str(g) for g in sr_ideal(cycle4).gens] == ["x1*x3", "x2*x4"]
    assert sr_ideal(SimplicialComplex.full_simplex(3)).gens == ()
    iso3 = SimplicialComplex(3, [[1], [2], [3]])
    assert [str(g) for g in sr_ideal(iso3).gens] == ["x1*x2", "x1*x3", "x2*x3"]


def test_missing_vertices_become_generators():
    k = SimplicialComplex(3, [[1, 2]])  # vertex 3 absent
    assert [sorted(s) for s in minimal_nonfaces(k)] == [[3]]


def test_complete_intersection_examples(cycle4):
    res = is_complete_intersection(cycle4, verify=True)
    assert res.ci and res.krull_dimension == 2 == res.expected_dimension
    assert res.sequence_strings(sr_ring(cycle4)) == ["x1*x3", "x2*x4"]
    full = is_complete_intersection(SimplicialComplex.full_simplex(4))
    assert full.ci and full.sequence == []
    iso3 = is_complete_intersection(SimplicialComplex(3, [[1], [2], [3]]))
    assert not iso3.ci and iso3.krull_dimension == 1


def test_soci_tower_cycle4(cycle4):
    tower = soci_tower(cycle4)
    assert tower.sphere_codegrees() == [5, 5]
    assert tower.stages[-1].complex.is_full_simplex()
    payload = tower.to_json()
    assert payload["stages"][0]["removed_generator"] == "x2*x4"
    assert payload["stages"][0]["facets"] == [[1, 2, 4], [2, 3, 4]]


def test_soci_tower_trivial_and_errors():
    assert soci_tower(SimplicialComplex.full_simplex(3)).stages == []
    with pytest.raises(InputError):
        soci_tower(SimplicialComplex(3, [[1], [2], [3]]))


def test_soci_tower_single_edge_ideal():
    k = SimplicialComplex(3, [[1, 2], [2, 3]])
    tower = soci_tower(k)
    assert tower.sphere_codegrees() == [5]
    assert tower.stages[0].complex.is_full_simplex()


def test_tower_with_missing_vertex_gives_sphere_3():
    k = SimplicialComplex(2, [[1]])
    tower = soci_tower(k)
    assert tower.sphere_codegrees() == [3]


def test_dj_cohomology_examples(cycle4):
    ideal, series = dj_cohomology(cycle4)
    assert [str(g) for g in ideal.gens] == ["x1*x3", "x2*x4"]
    assert series == HilbertSeries({0: 1, 4: -2, 8: 1}, (2, 2, 2, 2))
    _, free = dj_cohomology(SimplicialComplex.full_simplex(3))
    assert free == HilbertSeries({0: 1}, (2, 2, 2))
    _, single = dj_cohomology(SimplicialComplex(1, [[1]]))
    assert str(single) == "1/((1-t^2))"


def test_dj_over_prime_field(cycle4):
    ideal, series = dj_cohomology(cycle4, PrimeField(2))
    assert series.expansion(8) == dj_cohomology(cycle4)[1].expansion(8)


def test_tower_stages_count_and_parity():
    rng = seeded(71)
    seen = 0
    for _ in range(60):
        k = random_complex(rng, rng.randint(1, 5))
        res = is_complete_intersection(k)
        if not res.ci:
            continue
        tower = soci_tower(k)
        seen += 1
        assert len(tower.stages) == len(res.sequence)
        for s in tower.stages:
            assert s.sphere_codegree % 2 == 1 and s.sphere_codegree >= 3
    assert seen >= 5


def test_krull_dimension_equals_max_facet_size():
    rng = seeded(73)
    for _ in range(100):
        m = rng.randint(1, 6)
        k = random_complex(rng, m)
        ideal = sr_ideal(k)
        expected = max((len(f) for f in k.facets), default=0)
        assert ideal.krull_dimension() == expected


def test_ci_hilbert_product_form():
    rng = seeded(79)
    checked = 0
    for _ in range(80):
        k = random_complex(rng, rng.randint(1, 6))
        res = is_complete_intersection(k)
        if not res.ci:
            continue
        checked += 1
        num = {0: 1}
        for s in res.sequence:
            w = 2 * len(s)
            num = {d: c for d, c in num.items()}
            shifted = {d + w: -c for d, c in num.items()}
            for d, c in shifted.items():
                num[d] = num.get(d, 0) + c
            num = {d: c for d, c in num.items() if c}
        assert sr_ideal(k).hilbert_series() == HilbertSeries(num, (2,) * k.m)
    assert checked >= 5


def test_ci_agrees_with_regularity_oracles():
    rng = seeded(83)
    for _ in range(200):
        k = random_complex(rng, rng.randint(1, 5))
        gens = minimal_nonfaces(k)
        ring = sr_ring(k)
        monos = [
            ring.monomial(tuple(1 if i + 1 in s else 0 for i in range(k.m)))
            for s in gens
        ]
        combinatorial = is_complete_intersection(k).ci
        hilbert = is_regular_sequence(ring, monos).regular if monos else True
        koszul = monomial_koszul_regular(ring, [m.leading_monomial() for m in monos])
        assert combinatorial == hilbert == koszul


def test_json_round_trip(cycle4):
    again = SimplicialComplex.from_json(cycle4.to_json())
    assert again == cycle4
