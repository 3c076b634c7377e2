import pytest

from koszul.complexes import GradedModulePresentation, cone, identity_map, unit_complex
from koszul.errors import InputError
from koszul.fields import PrimeField, Q
from koszul.groebner import Ideal
from koszul.rings import GradedPolyRing
from koszul.supports import (
    SpecSubset,
    is_power_torsion,
    is_regular_sequence,
    koszul_complex,
    koszul_regularity_check,
    minimal_transversals,
    monomial_koszul_regular,
    monomial_saturation,
    support_complex,
    support_member,
    support_module,
    torsion_submodule_dims,
)

from conftest import seeded


def _subset(m, lists):
    return SpecSubset(m, [frozenset(p) for p in lists])


def test_spec_subset_closure_validation():
    with pytest.raises(InputError):
        _subset(2, [[1]])  # not closed: missing [1, 2]
    s = _subset(2, [[1], [1, 2]])
    assert s.minimal_primes() == [frozenset({1})]
    assert SpecSubset.closure_of(2, [frozenset({1})]) == s


def test_minimal_transversals():
    assert minimal_transversals([{1, 2}], 2) == [frozenset({1}), frozenset({2})]
    assert minimal_transversals([{1, 3}, {2, 4}], 4) == [
        frozenset({1, 2}),
        frozenset({1, 4}),
        frozenset({2, 3}),
        frozenset({3, 4}),
    ]
    assert minimal_transversals([], 3) == [frozenset()]
    assert minimal_transversals([set()], 3) == []


def test_support_module_examples(r2):
    m = GradedModulePresentation.cyclic(r2, ["x1"])
    assert support_module(m).to_json() == [[1], [1, 2]]
    m2 = GradedModulePresentation.cyclic(r2, ["x1*x2"])
    assert support_module(m2).to_json() == [[1], [2], [1, 2]]
    free = GradedModulePresentation(r2, [0], [], [[]])
    assert support_module(free) == SpecSubset.all_primes(2)


def test_support_module_refuses_non_monomial(r2):
    m = GradedModulePresentation.cyclic(r2, ["x1+x2"])
    with pytest.raises(InputError):
        support_module(m)
    # the membership test still serves such modules
    assert support_member(frozenset({1, 2}), m)
    assert not support_member(frozenset({1}), m)


def test_support_member_examples(r2):
    m = GradedModulePresentation.cyclic(r2, ["x1^2"])
    assert support_member(frozenset({1}), m)
    assert not support_member(frozenset({2}), GradedModulePresentation.cyclic(r2, ["x1"]))
    assert not support_member(frozenset(), GradedModulePresentation.cyclic(r2, ["x1"]))
    p = Ideal(r2, ["x1"])
    assert support_member(p, m)


def test_support_complex_examples(r2):
    k1 = koszul_complex(r2, ["x1"])
    assert support_complex(k1).to_json() == [[1], [1, 2]]
    assert support_complex(unit_complex(r2)) == SpecSubset.all_primes(2)
    contractible = cone(identity_map(k1))
    assert support_complex(contractible) == SpecSubset.empty(2)


def test_support_invariants(r2):
    k1 = koszul_complex(r2, ["x1"])
    k2 = koszul_complex(r2, ["x2"])
    assert support_complex(k1.translate(3)) == support_complex(k1)
    assert support_complex(k1.direct_sum(k2)) == support_complex(k1).union(
        support_complex(k2)
    )
    # supp(Koszul on the variables of p) = V(p)
    s = support_complex(koszul_complex(r2, ["x1", "x2"]))
    assert s.to_json() == [[1, 2]]


def test_cone_support_containment(r2):
    rng = seeded(51)
    monos = ["x1", "x2", "x1*x2", "x1^2"]
    for _ in range(5):
        x = koszul_complex(r2, rng.sample(monos, 2))
        f = identity_map(x)
        c = cone(f)
        u = support_complex(x)
        assert support_complex(c) <= u.union(u)


def test_injective_presentation_supports_agree(r3):
    rng = seeded(53)
    for _ in range(10):
        exps = tuple(rng.randint(0, 2) for _ in range(3))
        if not any(exps):
            continue
        m = GradedModulePresentation.cyclic(r3, [r3.monomial(exps)])
        assert support_complex(m.presentation_complex()) == support_module(m)


def test_power_torsion_examples(r1, r2):
    m = GradedModulePresentation.cyclic(r1, ["x1^3"])
    assert is_power_torsion(m, Ideal(r1, ["x1"]))
    m2 = GradedModulePresentation.cyclic(r2, ["x1"])
    assert not is_power_torsion(m2, Ideal(r2, ["x2"]))
    m3 = GradedModulePresentation.cyclic(r2, ["x1*x2"])
    assert not is_power_torsion(m3, Ideal(r2, ["x1"]))


def test_torsion_dims_examples(r1, r2):
    m = GradedModulePresentation.cyclic(r1, ["x1^2"])
    assert torsion_submodule_dims(m, Ideal(r1, ["x1"]), 6) == [1, 0, 1, 0, 0, 0, 0]
    free = GradedModulePresentation(r1, [0], [], [[]])
    assert torsion_submodule_dims(free, Ideal(r1, ["x1"]), 6) == [0] * 7
    m2 = GradedModulePresentation.cyclic(r2, ["x1*x2"])
    assert torsion_submodule_dims(m2, Ideal(r2, ["x1"]), 8) == [0, 0, 1, 0, 1, 0, 1, 0, 1]


def test_torsion_stabilization_beyond_first_plateau(r1):
    # (0 : x) = (0 : x^2) = 0 in degree 0 of k[x]/(x^3), yet 1 is x^3-torsion;
    # the saturation route must see through the plateau
    m = GradedModulePresentation.cyclic(r1, ["x1^3"])
    dims = torsion_submodule_dims(m, Ideal(r1, ["x1"]), 6)
    assert dims == m.dims_table(6)


def test_monomial_saturation():
    # (x^3 : x^infty) = (1); ((x y) : x^infty) = (y)
    assert monomial_saturation([(3,)], [(1,)]) == [(0,)]
    assert monomial_saturation([(1, 1)], [(1, 0)]) == [(0, 1)]


def test_torsion_direct_sum_split(r2):
    # two cyclic summands via a one-entry-per-column matrix
    m = GradedModulePresentation(
        r2, [0, 0], [2, 4], [["x1", "0"], ["0", "x2^2"]]
    )
    dims = torsion_submodule_dims(m, Ideal(r2, ["x1", "x2"]), 6)
    s1 = torsion_submodule_dims(
        GradedModulePresentation.cyclic(r2, ["x1"]), Ideal(r2, ["x1", "x2"]), 6
    )
    s2 = torsion_submodule_dims(
        GradedModulePresentation.cyclic(r2, ["x2^2"]), Ideal(r2, ["x1", "x2"]), 6
    )
    assert dims == [a + b for a, b in zip(s1, s2)]


def test_torsion_rejects_entangled_presentation(r2):
    m = GradedModulePresentation(
        r2, [0, 0], [2], [["x1"], ["x2"]]
    )
    with pytest.raises(InputError):
        torsion_submodule_dims(m, Ideal(r2, ["x1"]), 4)


def test_power_torsion_dictionary_randomized():
    rng = seeded(59)
    for field in (Q, PrimeField(2)):
        ring = GradedPolyRing(field, [("x1", 2), ("x2", 2), ("x3", 2)])
        for _ in range(30):
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
            m = GradedModulePresentation.cyclic(ring, [ring.monomial(e) for e in j_exps])
            ideal = Ideal(ring, [ring.monomial(e) for e in i_exps])
            torsion = is_power_torsion(m, ideal)
            vi = SpecSubset.closure_of(
                3,
                minimal_transversals(
                    [{i + 1 for i, e in enumerate(g) if e} for g in i_exps], 3
                ),
            )
            supp = support_module(m)
            assert torsion == (supp <= vi)
            d_max = 12
            dims_equal = torsion_submodule_dims(m, ideal, d_max) == m.dims_table(d_max)
            assert torsion == dims_equal


def test_torsion_zero_and_unit_ideal(r2):
    m = GradedModulePresentation.cyclic(r2, ["x1*x2"])
    zero = Ideal(r2, [])
    assert is_power_torsion(m, zero)
    assert torsion_submodule_dims(m, zero, 8) == m.dims_table(8)
    unit = Ideal(r2, ["1"])
    assert not is_power_torsion(m, unit)
    assert torsion_submodule_dims(m, unit, 8) == [0] * 9
    zero_module = GradedModulePresentation.cyclic(r2, ["1"])
    assert is_power_torsion(zero_module, unit)
    assert torsion_submodule_dims(zero_module, unit, 4) == zero_module.dims_table(4)


def test_koszul_support_is_vanishing_locus(r3):
    # fiber-rank route vs combinatorial V(I): two independent computations
    from koszul.supports import spec_subset_of_monomial_ideal

    rng = seeded(91)
    for _ in range(15):
        exps = []
        for _ in range(rng.randint(1, 3)):
            e = tuple(rng.randint(0, 2) for _ in range(3))
            if any(e):
                exps.append(e)
        if not exps:
            continue
        k = koszul_complex(r3, [r3.monomial(e) for e in exps])
        assert k.violations() == []
        assert support_complex(k) == spec_subset_of_monomial_ideal(3, exps)


def test_regular_sequence_examples(r2, r4):
    assert is_regular_sequence(r2, ["x1", "x2"]).regular
    assert is_regular_sequence(r4, ["x1*x3", "x2*x4"]).regular
    assert not is_regular_sequence(r2, ["x1", "x1*x2"]).regular
    cert = is_regular_sequence(r2, ["x1"], Ideal(r2, ["x1*x2"]))
    assert not cert.regular  # x1 kills the class of x2


def test_regular_sequence_rejects_bad_input(r2):
    with pytest.raises(InputError):
        is_regular_sequence(r2, ["x1+x1^2"])
    with pytest.raises(InputError):
        is_regular_sequence(r2, ["0"])
    with pytest.raises(InputError):
        is_regular_sequence(r2, ["2"])


def test_regular_sequence_permutation_invariance(r4):
    rng = seeded(61)
    for _ in range(20):
        supports = [
            {1, 2},
            {3},
            {4},
        ]
        gens = []
        for s in rng.sample(supports, rng.randint(1, 3)):
            exps = tuple(rng.randint(1, 2) if i + 1 in s else 0 for i in range(4))
            gens.append(r4.monomial(exps))
        base = is_regular_sequence(r4, gens).regular
        for _ in range(4):
            shuffled = gens[:]
            rng.shuffle(shuffled)
            assert is_regular_sequence(r4, shuffled).regular == base


def test_koszul_oracle_matches_hilbert(r3):
    rng = seeded(67)
    for _ in range(40):
        gens = []
        for _ in range(rng.randint(1, 3)):
            exps = tuple(rng.randint(0, 2) for _ in range(3))
            if any(exps):
                gens.append(exps)
        if not gens:
            continue
        hilbert = is_regular_sequence(r3, [r3.monomial(e) for e in gens]).regular
        koszul = monomial_koszul_regular(r3, gens)
        assert hilbert == koszul


def test_koszul_regularity_general_path(r2):
    # non-monomial elements go through the degreewise homology route
    assert koszul_regularity_check(r2, ["x1+x2", "x1-x2"])
    assert not koszul_regularity_check(r2, ["x1+x2", "x1+x2"])
    # and with an ambient quotient: x1 is a zero divisor mod (x1*x2)
    assert not koszul_regularity_check(r2, ["x1"], Ideal(r2, ["x1*x2"]))
    assert koszul_regularity_check(r2, ["x1"], Ideal(r2, ["x2^2"]))
