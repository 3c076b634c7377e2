"""Acceptance suite: one test per criterion, exact tolerances, stated time limits.

Run with `pytest tests/test_acceptance.py -v -s` to see one line per criterion.
"""
import random
import time

from koszul.complexes import GradedModulePresentation
from koszul.dgalgebra import DGAlgebra
from koszul.fields import PrimeField, Q
from koszul.groebner import Ideal
from koszul.rings import GradedPolyRing, Polynomial
from koszul.linalg import rank
from koszul.stanley_reisner import (
    SimplicialComplex,
    dj_cohomology,
    is_complete_intersection,
    minimal_nonfaces,
    soci_tower,
    sr_ring,
)
from koszul.supports import (
    SpecSubset,
    is_power_torsion,
    is_regular_sequence,
    koszul_complex,
    minimal_transversals,
    monomial_koszul_regular,
    support_module,
    torsion_submodule_dims,
)
from koszul.thick import (
    AugmentedAlgebraModel,
    adams_injectivity_bound,
    classify_thick,
    koszul_generator_for,
    po_triangle_check,
    supp_tensor_check,
)

from test_thick import all_closed_subsets


def _report(name, elapsed, limit, detail=""):
    print(f"ACCEPTANCE {name}: PASS in {elapsed:.2f}s (limit {limit}s) {detail}")


def test_criterion_1_sullivan_model():
    start = time.time()
    algebra = DGAlgebra(
        Q, [("u", 2), ("v", 2), ("x", 3), ("y", 3)], {"x": "u^2", "y": "u*v"}
    )
    dims = algebra.cohomology_dims(12)
    assert dims == [1, 0, 2, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1]
    elapsed = time.time() - start
    assert elapsed < 10
    _report("1 (Sullivan model)", elapsed, 10, f"dims={dims}")


def test_criterion_2_davis_januszkiewicz():
    start = time.time()
    cycle4 = SimplicialComplex(4, [[1, 2], [2, 3], [3, 4], [1, 4]])
    res = is_complete_intersection(cycle4, verify=True)
    ring = sr_ring(cycle4)
    assert res.ci and res.sequence_strings(ring) == ["x1*x3", "x2*x4"]
    tower = soci_tower(cycle4)
    assert len(tower.stages) == 2
    assert tower.sphere_codegrees() == [5, 5]
    assert tower.stages[-1].complex.is_full_simplex()
    _ideal, series = dj_cohomology(cycle4)
    # (1 - t^4)^2 / (1 - t^2)^4, expanded to order 20 by an independent route
    expected = [0] * 21
    expected[0], expected[4], expected[8] = 1, -2, 1
    for _ in range(4):
        for i in range(2, 21):
            expected[i] += expected[i - 2]
    assert series.expansion(20) == expected
    elapsed = time.time() - start
    assert elapsed < 5
    _report("2 (Davis-Januszkiewicz 4-cycle)", elapsed, 5, "spheres=(5,5)")


def test_criterion_3_ci_oracle_agreement():
    start = time.time()
    rng = random.Random(20260811)
    agreements = 0
    for _ in range(200):
        m = rng.randint(1, 6)
        facets = [
            rng.sample(range(1, m + 1), rng.randint(1, m))
            for _ in range(rng.randint(0, 5))
        ]
        complex_ = SimplicialComplex(m, facets)
        gens = minimal_nonfaces(complex_)
        ring = sr_ring(complex_)
        monos = [
            ring.monomial(tuple(1 if v + 1 in s else 0 for v in range(m)))
            for s in gens
        ]
        disjoint = is_complete_intersection(complex_).ci
        hilbert = is_regular_sequence(ring, monos).regular if monos else True
        koszul = monomial_koszul_regular(ring, [mn.leading_monomial() for mn in monos])
        assert disjoint == hilbert == koszul, (m, facets)
        agreements += 1
    assert agreements == 200
    elapsed = time.time() - start
    assert elapsed < 60
    _report("3 (CI oracle agreement)", elapsed, 60, "200/200")


def test_criterion_4_power_torsion_dictionary():
    start = time.time()
    rng = random.Random(46)
    agreements = 0
    for field in (PrimeField(2), Q):
        ring = GradedPolyRing(field, [("x1", 2), ("x2", 2), ("x3", 2)])
        for _ in range(50):
            j_exps = [
                tuple(rng.randint(0, 2) for _ in range(3))
                for _ in range(rng.randint(1, 3))
            ]
            j_exps = [e for e in j_exps if any(e)] or [(1, 0, 0)]
            i_exps = [
                tuple(rng.randint(0, 2) for _ in range(3))
                for _ in range(rng.randint(1, 2))
            ]
            i_exps = [e for e in i_exps if any(e)] or [(0, 1, 0)]
            module = GradedModulePresentation.cyclic(
                ring, [ring.monomial(e) for e in j_exps]
            )
            ideal = Ideal(ring, [ring.monomial(e) for e in i_exps])
            torsion = is_power_torsion(module, ideal)
            v_of_i = SpecSubset.closure_of(
                3,
                minimal_transversals(
                    [{k + 1 for k, e in enumerate(g) if e} for g in i_exps], 3
                ),
            )
            support_inclusion = support_module(module) <= v_of_i
            dims_match = (
                torsion_submodule_dims(module, ideal, 20) == module.dims_table(20)
            )
            assert torsion == support_inclusion == dims_match
            agreements += 1
    assert agreements == 100
    elapsed = time.time() - start
    assert elapsed < 60
    _report("4 (power-torsion dictionary)", elapsed, 60, "100/100, F2 and Q")


def test_criterion_5_support_tensor_formula():
    start = time.time()
    rng = random.Random(52)
    ring = GradedPolyRing(Q, [("x1", 2), ("x2", 2), ("x3", 2)])

    def random_tuple():
        monos = []
        for _ in range(rng.randint(1, 3)):
            e = tuple(rng.randint(0, 2) for _ in range(3))
            if any(e):
                monos.append(ring.monomial(e))
        return monos or [ring.variable(0)]

    checks = 0
    for _ in range(100):
        x = koszul_complex(ring, random_tuple())
        y = koszul_complex(ring, random_tuple())
        assert supp_tensor_check(x, y)
        checks += 1
    assert checks == 100
    elapsed = time.time() - start
    assert elapsed < 60
    _report("5 (support tensor formula)", elapsed, 60, "100/100")


def test_criterion_6_classification_round_trip():
    start = time.time()
    for nvars in (1, 2):
        ring = GradedPolyRing(Q, [(f"x{i}", 2) for i in range(1, nvars + 1)])
        subsets = all_closed_subsets(nvars)
        assert len(subsets) == (3 if nvars == 1 else 6)
        for subset in subsets:
            generator = koszul_generator_for(ring, subset)
            gens = [] if generator.is_zero() else [generator]
            assert classify_thick(ring, gens) == subset
    elapsed = time.time() - start
    assert elapsed < 5
    _report("6 (classification round trip)", elapsed, 5, "3+6 subsets, exhaustive")


def test_criterion_7_adams_tower():
    start = time.time()
    ring = GradedPolyRing(Q, [("x", 2)])
    model = AugmentedAlgebraModel(ring, ["x"])
    for n in range(1, 5):
        table = model.quotient(n).homology_table(30)
        expected = {(0, 2 * j): 1 for j in range(n)}
        assert table.entries == expected  # k[x]/(x^n)
    for n in range(1, 5):
        assert po_triangle_check(model, n, 30)
    for k in range(1, 5):
        module = koszul_complex(ring, [f"x^{k}"])
        assert adams_injectivity_bound(model, module, 8, 30) == k
    elapsed = time.time() - start
    assert elapsed < 30
    _report("7 (Adams tower on k[x])", elapsed, 30, "quotients, triangles, bounds 1..4")


def test_criterion_8_groebner_degreewise_oracle():
    start = time.time()
    rng = random.Random(88)
    ring = GradedPolyRing(Q, [("x1", 2), ("x2", 2)])

    def random_homogeneous(d, max_terms=3):
        basis = ring.graded_piece_basis(d)
        terms = {}
        for mono in rng.sample(basis, min(len(basis), rng.randint(1, max_terms))):
            c = rng.randint(-3, 3)
            if c:
                terms[mono] = Q.coerce(c)
        if not terms:
            terms[rng.choice(basis)] = Q.one
        return Polynomial(ring, terms)

    def member_by_span(p, ideal):
        d = p.homogeneous_codegree()
        basis = ring.graded_piece_basis(d)
        index = {mono: i for i, mono in enumerate(basis)}
        rows = []
        for g in ideal.gens:
            for mu in ring.graded_piece_basis(d - g.homogeneous_codegree()):
                vec = [Q.zero] * len(basis)
                for mono, c in g.scale_term(mu, Q.one).terms.items():
                    vec[index[mono]] = c
                rows.append(vec)
        target = [Q.zero] * len(basis)
        for mono, c in p.terms.items():
            target[index[mono]] = c
        base = rank(rows, Q) if rows else 0
        return rank(rows + [target], Q) == base

    agreements = 0
    for _ in range(100):
        gens = [
            random_homogeneous(2 * rng.randint(1, 4))
            for _ in range(rng.randint(1, 3))
        ]
        ideal = Ideal(ring, gens)
        d = 2 * rng.randint(1, 8)
        p = random_homogeneous(d)
        if rng.random() < 0.4:
            g = rng.choice(gens)
            dg = g.homogeneous_codegree()
            if d >= dg:
                p = g * random_homogeneous(d - dg)
        assert ideal.member(p) == member_by_span(p, ideal)
        agreements += 1
    assert agreements == 100
    elapsed = time.time() - start
    assert elapsed < 60
    _report("8 (Groebner degreewise oracle)", elapsed, 60, "100/100, codegrees <= 16")
