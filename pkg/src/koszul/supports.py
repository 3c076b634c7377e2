"""Supports over coordinate primes, Koszul complexes, power torsion, regular sequences.

The prime universe is the coordinate primes: ideals generated by subsets of
the variables, the empty subset standing in for (0).  Supports of monomial
data land here exactly; general primes are only ever queried through the
membership test.
"""
from __future__ import annotations

from dataclasses import dataclass

from .complexes import (
    FreeComplex,
    GradedModulePresentation,
    cone,
    multiplication_map,
    unit_complex,
)
from .errors import InputError, InvariantViolation
from .groebner import (
    HilbertSeries,
    Ideal,
    minimalize_monomials,
    monomial_colon,
    monomial_intersect,
    _poly_mul_dict,
)
from .linalg import rank_poly, rank_sign_matrix
from .rings import GradedPolyRing, mono_divides, mono_support


def prime_sort_key(p: frozenset) -> tuple:
    return (len(p), sorted(p))


class SpecSubset:
    """A specialization-closed set of coordinate primes of k[x_1..x_m].

    Primes are frozensets of 1-based variable indices; the empty set is (0).
    """

    __slots__ = ("m", "primes")

    def __init__(self, m: int, primes, close=False):
        primes = {frozenset(p) for p in primes}
        for p in primes:
            if not all(isinstance(i, int) and 1 <= i <= m for i in p):
                raise InputError(f"prime {sorted(p)} out of range 1..{m}")
        if close:
            primes = self._close(m, primes)
        elif not self.is_specialization_closed(m, primes):
            raise InputError("prime set is not specialization closed")
        self.m = m
        self.primes = frozenset(primes)

    @staticmethod
    def _close(m, primes):
        out = set()
        universe = list(range(1, m + 1))
        for p in primes:
            rest = [i for i in universe if i not in p]
            for mask in range(1 << len(rest)):
                q = set(p)
                for b, i in enumerate(rest):
                    if mask >> b & 1:
                        q.add(i)
                out.add(frozenset(q))
        return out

    @staticmethod
    def is_specialization_closed(m, primes) -> bool:
        primes = set(primes)
        for p in primes:
            for i in range(1, m + 1):
                if i not in p and frozenset(p | {i}) not in primes:
                    return False
        return True

    @classmethod
    def closure_of(cls, m, primes) -> "SpecSubset":
        return cls(m, primes, close=True)

    @classmethod
    def empty(cls, m) -> "SpecSubset":
        return cls(m, [])

    @classmethod
    def all_primes(cls, m) -> "SpecSubset":
        return cls.closure_of(m, [frozenset()])

    def minimal_primes(self) -> list:
        mins = [
            p
            for p in self.primes
            if not any(q < p for q in self.primes)
        ]
        return sorted(mins, key=prime_sort_key)

    def union(self, other: "SpecSubset") -> "SpecSubset":
        self._check(other)
        return SpecSubset(self.m, self.primes | other.primes)

    def intersection(self, other: "SpecSubset") -> "SpecSubset":
        self._check(other)
        return SpecSubset(self.m, self.primes & other.primes)

    def _check(self, other):
        if self.m != other.m:
            raise InputError("prime universes of different sizes")

    def __le__(self, other):
        self._check(other)
        return self.primes <= other.primes

    def __contains__(self, p) -> bool:
        return frozenset(p) in self.primes

    def __eq__(self, other):
        return (
            isinstance(other, SpecSubset)
            and self.m == other.m
            and self.primes == other.primes
        )

    def __hash__(self):
        return hash((self.m, self.primes))

    def __len__(self):
        return len(self.primes)

    def to_json(self):
        return [sorted(p) for p in sorted(self.primes, key=prime_sort_key)]

    @classmethod
    def from_json(cls, m, data) -> "SpecSubset":
        if not isinstance(data, list):
            raise InputError("spec subset JSON must be a list of index lists")
        return cls(m, [frozenset(p) for p in data])

    def __repr__(self):
        return f"SpecSubset({self.to_json()})"


# ---------------------------------------------------------------------------
# minimal transversals (minimal primes of monomial ideals)


def minimal_transversals(edges, m: int) -> list:
    """Inclusion-minimal hitting sets of a hypergraph on {1..m} (1-based).

    An empty edge is unhittable; no edges at all are hit by the empty set.
    """
    edges = [frozenset(e) for e in edges]
    if any(not e for e in edges):
        return []
    partial = [frozenset()]
    for e in sorted(edges, key=len):
        nxt = set()
        for t in partial:
            if t & e:
                nxt.add(t)
            else:
                for v in e:
                    nxt.add(t | {v})
        partial = list(nxt)
    out = [t for t in partial if not any(u < t for u in partial)]
    return sorted(out, key=prime_sort_key)


def spec_subset_of_monomial_ideal(m: int, exps_list) -> SpecSubset:
    """V(I) over coordinate primes for the monomial ideal with these generators."""
    gens = minimalize_monomials(exps_list)
    edges = [set(i + 1 for i in mono_support(e)) for e in gens]
    mins = minimal_transversals(edges, m)
    return SpecSubset.closure_of(m, mins)


# ---------------------------------------------------------------------------
# module and complex supports


def support_module(M: GradedModulePresentation) -> SpecSubset:
    """V(Fitt_0 M): minimal primes by hypergraph transversals, closed upward."""
    fitt = M.fitting_ideal()
    if not fitt.is_monomial():
        raise InputError(
            "Fitting ideal is not monomial; use support_member for general primes"
        )
    if not fitt.gens:
        return SpecSubset.all_primes(M.ring.nvars)
    return spec_subset_of_monomial_ideal(
        M.ring.nvars, fitt.minimal_monomial_generators()
    )


def coordinate_prime_ideal(ring: GradedPolyRing, p) -> Ideal:
    return Ideal(ring, [ring.variable(i - 1) for i in sorted(p)])


def support_member(p, M: GradedModulePresentation) -> bool:
    """Is the prime p in supp M?  p is a coordinate prime or an Ideal."""
    if isinstance(p, Ideal):
        prime = p
        if prime.ring != M.ring:
            raise InputError("prime and module live over different rings")
    else:
        prime = coordinate_prime_ideal(M.ring, p)
    fitt = M.fitting_ideal()
    return all(prime.member(g) for g in fitt.gens)


def _fiber_is_exact(x: FreeComplex, kill) -> bool:
    """Exactness of x (x) residue field of the coordinate prime on `kill` (0-based).

    Variables in the prime are set to zero; the remaining ones become units
    of the fraction field, so each free summand contributes one dimension
    and ranks are taken by fraction-free elimination on polynomial matrices.
    """
    ranks = {}
    for n, mat in x.diffs.items():
        killed = [[e.kill_variables(kill) for e in row] for row in mat]
        ranks[n] = rank_poly(killed)
    for n, shifts in x.terms.items():
        if len(shifts) != ranks.get(n, 0) + ranks.get(n - 1, 0):
            return False
    return True


def support_complex(x: FreeComplex) -> SpecSubset:
    """Primes where the complex stays inexact after passing to the residue field."""
    m = x.ring.nvars
    hit = []
    for mask in range(1 << m):
        p = frozenset(i + 1 for i in range(m) if mask >> i & 1)
        kill = [i - 1 for i in p]
        if not _fiber_is_exact(x, kill):
            hit.append(p)
    if not SpecSubset.is_specialization_closed(m, hit):
        raise InvariantViolation("support of a complex failed specialization closure")
    return SpecSubset(m, hit)


# ---------------------------------------------------------------------------
# Koszul complexes


def koszul_complex(ring, elements, module: GradedModulePresentation | None = None) -> FreeComplex:
    """Iterated cone over multiplication maps; 2^n free summands for n elements."""
    k = unit_complex(ring)
    for s in elements:
        if isinstance(s, str):
            s = ring.parse(s)
        if s.ring != ring:
            raise InputError("Koszul element lives in a different ring")
        if s.is_zero:
            raise InputError("Koszul elements must be nonzero")
        if s.homogeneous_codegree() is None:
            raise InputError(f"Koszul element {s} is not homogeneous")
        k = cone(multiplication_map(k, s))
    if module is not None:
        if module.ring != ring:
            raise InputError("module lives in a different ring")
        k = k.tensor(module.presentation_complex())
    return k


# ---------------------------------------------------------------------------
# power torsion


def is_power_torsion(M: GradedModulePresentation, I: Ideal) -> bool:
    """True iff every generator of I lies in sqrt(Fitt_0 M), i.e. supp M <= V(I)."""
    if I.ring != M.ring:
        raise InputError("module and ideal live over different rings")
    fitt = M.fitting_ideal()
    return all(fitt.radical_member(g) for g in I.gens)


def _monomial_row_ideals(M: GradedModulePresentation):
    """Split a presentation into cyclic summands R(-a_i)/J_i when possible.

    Works when F_0 has rank one, or when every column of the matrix touches
    at most one row (the relations then split by target generator).  Raises
    otherwise; torsion dimensions need more than degreewise data there.
    """
    r = len(M.target_shifts)
    rows = [[] for _ in range(r)]
    for j in range(len(M.source_shifts)):
        touched = [i for i in range(r) if not M.matrix[i][j].is_zero]
        if len(touched) > 1:
            raise InputError(
                "torsion dimensions need a cyclic or generator-split presentation"
            )
        if touched:
            rows[touched[0]].append(M.matrix[touched[0]][j])
    out = []
    for i in range(r):
        for e in rows[i]:
            if not e.is_monomial:
                raise InputError("torsion dimensions are computed for monomial data")
        out.append(
            (M.target_shifts[i], minimalize_monomials([e.leading_monomial() for e in rows[i]]))
        )
    return out


def monomial_saturation(j_exps, i_exps) -> list:
    """Minimal generators of (J : I^infty) for monomial ideals, by colon chains.

    Consecutive equality of the ascending chain J : I^n is a sound stop: the
    chain satisfies Q_{n+1} = (Q_n : I), so one repeat fixes it forever.
    """
    cur = minimalize_monomials(j_exps)
    while True:
        nxt = None
        for g in i_exps:
            c = monomial_colon(cur, g)
            nxt = c if nxt is None else monomial_intersect(nxt, c)
        if nxt is None or nxt == cur:
            return cur
        cur = nxt


def _monomial_member(exps_list, mono) -> bool:
    return any(mono_divides(g, mono) for g in exps_list)


def torsion_submodule_dims(M: GradedModulePresentation, I: Ideal, d_max: int) -> list:
    """Dimensions of the I-power-torsion submodule of M in codegrees 0..d_max."""
    if I.ring != M.ring:
        raise InputError("module and ideal live over different rings")
    if not I.is_monomial():
        raise InputError("torsion dimensions are computed for monomial ideals")
    i_exps = I.minimal_monomial_generators()
    ring = M.ring
    dims = [0] * (d_max + 1)
    if not i_exps:
        # (0 : (0)) is everything: the zero ideal makes every element torsion
        return M.dims_table(d_max)
    for shift, j_exps in _monomial_row_ideals(M):
        sat = monomial_saturation(j_exps, i_exps)
        for d in range(d_max + 1):
            for mu in ring.graded_piece_basis(d - shift):
                if _monomial_member(sat, mu) and not _monomial_member(j_exps, mu):
                    dims[d] += 1
    return dims


# ---------------------------------------------------------------------------
# regular sequences


@dataclass
class RegularSequenceCertificate:
    regular: bool
    quotient_series: HilbertSeries
    expected_series: HilbertSeries

    def to_json(self):
        return {
            "regular": self.regular,
            "quotient_series": str(self.quotient_series),
            "expected_series": str(self.expected_series),
        }


def is_regular_sequence(ring, elements, ambient: Ideal | None = None) -> RegularSequenceCertificate:
    """Exact Hilbert-series criterion: the quotient series must factor as
    the ambient series times prod (1 - t^{|y_i|})."""
    elements = [ring.parse(e) if isinstance(e, str) else e for e in elements]
    for e in elements:
        if e.ring != ring:
            raise InputError("sequence element lives in a different ring")
        if e.is_zero:
            raise InputError("sequence elements must be nonzero")
        d = e.homogeneous_codegree()
        if d is None:
            raise InputError(f"sequence element {e} is not homogeneous")
        if d == 0:
            raise InputError("sequence elements must have positive codegree")
    if ambient is None:
        ambient = Ideal(ring, [])
    if ambient.ring != ring:
        raise InputError("ambient ideal lives in a different ring")
    quotient = ambient.extended(elements).hilbert_series()
    expected_num = dict(ambient.hilbert_series().numerator)
    for e in elements:
        expected_num = _poly_mul_dict(
            expected_num, {0: 1, e.homogeneous_codegree(): -1}
        )
    expected = HilbertSeries(expected_num, ring.codegrees)
    return RegularSequenceCertificate(quotient == expected, quotient, expected)


def monomial_koszul_regular(ring, exps_list) -> bool:
    """Koszul oracle for monomial sequences: vanishing of all positive Koszul
    homology, checked multidegree by multidegree.

    In multidegree alpha the Koszul complex collapses to the simplicial
    chains of {S : deg(S) <= alpha}, a matrix of signs, so each block is a
    small exact rank computation.  Candidate multidegrees stop at the
    componentwise total, where the face set is the full simplex.
    """
    n = len(exps_list)
    if n == 0:
        return True
    total = tuple(sum(e[i] for e in exps_list) for i in range(ring.nvars))
    deg_cache = {(): (0,) * ring.nvars}

    def subsets_leq(alpha):
        found = [()]
        for i in range(n):
            more = []
            gi = exps_list[i]
            for s in found:
                ds = deg_cache[s]
                d2 = tuple(a + b for a, b in zip(ds, gi))
                if all(x <= y for x, y in zip(d2, alpha)):
                    s2 = s + (i,)
                    deg_cache[s2] = d2
                    more.append(s2)
            found.extend(more)
        return found

    for alpha in _boxed_by_degree(ring.codegrees, total, ring.codegree(total)):
        faces = subsets_leq(alpha)
        by_size = {}
        for s in faces:
            by_size.setdefault(len(s), []).append(s)
        max_k = max(by_size)
        if max_k == 0:
            continue
        ranks = {}
        for k in range(1, max_k + 1):
            rows_idx = {s: r for r, s in enumerate(by_size.get(k - 1, []))}
            cols = by_size.get(k, [])
            rows = [[0] * len(cols) for _ in rows_idx]
            for c, s in enumerate(cols):
                for pos in range(len(s)):
                    t = s[:pos] + s[pos + 1 :]
                    rows[rows_idx[t]][c] = -1 if pos % 2 else 1
            ranks[k] = rank_sign_matrix(rows) if rows and cols else 0
        for k in range(1, max_k + 1):
            dim = len(by_size.get(k, [])) - ranks.get(k, 0) - ranks.get(k + 1, 0)
            if dim:
                return False
    return True


def _boxed_by_degree(weights, total, d_top):
    """Exponent tuples componentwise <= total, in ascending weighted degree.

    Ascending order lets the regularity sweep stop at the first failure
    without materializing the whole box.
    """
    for d in range(d_top + 1):
        yield from _boxed_of_degree(weights, total, d)


def _boxed_of_degree(weights, total, d):
    if not weights:
        if d == 0:
            yield ()
        return
    w = weights[0]
    for e in range(min(total[0], d // w) + 1):
        for rest in _boxed_of_degree(weights[1:], total[1:], d - e * w):
            yield (e,) + rest


def koszul_regularity_check(
    ring, elements, ambient: Ideal | None = None, d_max: int | None = None
) -> bool:
    """Koszul homology oracle: H^i of the Koszul complex over ring/ambient
    vanishes for i != 0 in codegrees <= d_max (default: total codegree)."""
    elements = [ring.parse(e) if isinstance(e, str) else e for e in elements]
    if not elements:
        return True
    if (ambient is None or not ambient.gens) and all(e.is_monomial for e in elements):
        return monomial_koszul_regular(ring, [e.leading_monomial() for e in elements])
    if len(elements) > 12:
        raise InputError("Koszul oracle limited to 12 non-monomial elements")
    if d_max is None:
        d_max = sum(e.homogeneous_codegree() for e in elements)
        if ambient is not None:
            d_max += sum(g.homogeneous_codegree() for g in ambient.gens)
    k = koszul_complex(ring, elements)
    table = k.homology_table(d_max, modulus=ambient if ambient and ambient.gens else None)
    return all(n == 0 for (n, _d) in table.entries)
