"""Homogeneous ideal arithmetic: Buchberger, membership, radicals, Hilbert series.

The reduced Groebner basis for the ring's fixed order is unique, so every
ideal-level answer here is canonical.  Hilbert series are kept in closed
form (integer numerator over prod (1-t^w)) and only expanded on request.
"""
from __future__ import annotations

import heapq
from itertools import combinations

from .errors import InputError, InvariantViolation
from .rings import (
    GradedPolyRing,
    Polynomial,
    mono_div,
    mono_divides,
    mono_gcd,
    mono_lcm,
)


class _ZeroRingType:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "ZeroRing"


ZERO_RING = _ZeroRingType()


# ---------------------------------------------------------------------------
# division and Buchberger


def normal_form(p: Polynomial, basis) -> Polynomial:
    """Remainder of p under full division by the list `basis`."""
    ring = p.ring
    fld = ring.field
    rem_terms = {}
    work = p
    while not work.is_zero:
        m = work.leading_monomial()
        c = work.terms[m]
        for g in basis:
            gl = g.leading_monomial()
            if mono_divides(gl, m):
                q = mono_div(m, gl)
                work = work - g.scale_term(q, fld.div(c, g.leading_coeff()))
                break
        else:
            rem_terms[m] = c
            work = work - Polynomial(ring, {m: c})
    return Polynomial(ring, rem_terms)


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    fld = f.ring.field
    fl, gl = f.leading_monomial(), g.leading_monomial()
    l = mono_lcm(fl, gl)
    a = f.scale_term(mono_div(l, fl), fld.inv(f.leading_coeff()))
    b = g.scale_term(mono_div(l, gl), fld.inv(g.leading_coeff()))
    return a - b


def buchberger(gens) -> list:
    """A (non-reduced) Groebner basis; deterministic pair order."""
    basis = [g.monic() for g in gens if not g.is_zero]
    basis.sort(key=lambda g: g.ring.sort_key(g.leading_monomial()))
    if not basis:
        return []
    ring = basis[0].ring
    pairs = []
    for i, j in combinations(range(len(basis)), 2):
        l = mono_lcm(basis[i].leading_monomial(), basis[j].leading_monomial())
        heapq.heappush(pairs, (ring.codegree(l), i, j))
    while pairs:
        _, i, j = heapq.heappop(pairs)
        f, g = basis[i], basis[j]
        fl, gl = f.leading_monomial(), g.leading_monomial()
        if mono_gcd(fl, gl) == (0,) * ring.nvars:
            continue  # coprime leading terms: S-polynomial reduces to zero
        r = normal_form(s_polynomial(f, g), basis)
        if not r.is_zero:
            basis.append(r.monic())
            k = len(basis) - 1
            for i2 in range(k):
                l = mono_lcm(basis[i2].leading_monomial(), r.leading_monomial())
                heapq.heappush(pairs, (ring.codegree(l), i2, k))
    return basis


def reduce_basis(basis) -> list:
    """The reduced Groebner basis: minimal, monic, tails fully reduced, sorted."""
    if not basis:
        return []
    ring = basis[0].ring
    # minimal: drop any element whose leading monomial another one divides
    kept = []
    lms = [g.leading_monomial() for g in basis]
    for i, g in enumerate(basis):
        gl = lms[i]
        drop = False
        for j, other in enumerate(basis):
            if i == j:
                continue
            if mono_divides(lms[j], gl) and (lms[j] != gl or j < i):
                drop = True
                break
        if not drop:
            kept.append(g.monic())
    # inter-reduce tails until stable
    changed = True
    while changed:
        changed = False
        for i in range(len(kept)):
            others = kept[:i] + kept[i + 1 :]
            r = normal_form(kept[i], others) if others else kept[i]
            if r.terms != kept[i].terms:
                if r.is_zero:
                    raise InvariantViolation("minimal basis element reduced to zero")
                kept[i] = r.monic()
                changed = True
    kept.sort(key=lambda g: ring.sort_key(g.leading_monomial()))
    return kept


# ---------------------------------------------------------------------------
# Hilbert series


class HilbertSeries:
    """Closed form numerator / prod_w (1-t^w) with an exact integer numerator."""

    __slots__ = ("numerator", "denominator_weights")

    def __init__(self, numerator: dict, denominator_weights):
        self.numerator = {d: c for d, c in numerator.items() if c}
        self.denominator_weights = tuple(sorted(denominator_weights))

    def expansion(self, order: int) -> list:
        """Power-series coefficients in codegrees 0..order."""
        coeffs = [0] * (order + 1)
        for d, c in self.numerator.items():
            if 0 <= d <= order:
                coeffs[d] += c
        for w in self.denominator_weights:
            for i in range(w, order + 1):
                coeffs[i] += coeffs[i - w]
        return coeffs

    def pole_order(self) -> int:
        """Order of the pole at t=1 (the Krull dimension of the quotient)."""
        num = dict(self.numerator)
        mult = 0
        while num and sum(num.values()) == 0:
            # synthetic division by (1-t): b_k = sum_{j<=k} a_j
            top = max(num)
            run, quot = 0, {}
            for d in range(top + 1):
                run += num.get(d, 0)
                if run:
                    quot[d] = run
            num = quot
            mult += 1
        return len(self.denominator_weights) - mult

    def __eq__(self, other):
        return (
            isinstance(other, HilbertSeries)
            and self.numerator == other.numerator
            and self.denominator_weights == other.denominator_weights
        )

    def __hash__(self):
        return hash((frozenset(self.numerator.items()), self.denominator_weights))

    def numerator_str(self) -> str:
        if not self.numerator:
            return "0"
        out = []
        for d in sorted(self.numerator):
            c = self.numerator[d]
            neg, mag = c < 0, abs(c)
            if d == 0:
                body = str(mag)
            elif mag == 1:
                body = f"t^{d}"
            else:
                body = f"{mag}*t^{d}"
            if not out:
                out.append(f"-{body}" if neg else body)
            else:
                out.append(f"-{body}" if neg else f"+{body}")
        return "".join(out)

    def __str__(self):
        num = self.numerator_str()
        if not self.denominator_weights:
            return num
        if len(self.numerator) > 1:
            num = f"({num})"
        counts = {}
        for w in self.denominator_weights:
            counts[w] = counts.get(w, 0) + 1
        den = "*".join(
            f"(1-t^{w})" + (f"^{k}" if k > 1 else "") for w, k in sorted(counts.items())
        )
        return f"{num}/({den})"

    def __repr__(self):
        return f"HilbertSeries({self})"


def _poly_mul_dict(a: dict, b: dict) -> dict:
    out = {}
    for d1, c1 in a.items():
        for d2, c2 in b.items():
            d = d1 + d2
            out[d] = out.get(d, 0) + c1 * c2
    return {d: c for d, c in out.items() if c}


def minimalize_monomials(exps_list) -> list:
    """Inclusion-minimal monomial generators, canonically sorted."""
    out = []
    for e in sorted(set(exps_list), key=lambda e: (sum(e), e)):
        if not any(mono_divides(f, e) for f in out):
            out.append(e)
    return out


def monomial_colon(exps_list, g) -> list:
    """Minimal generators of (exps_list) : x^g."""
    return minimalize_monomials([mono_div(e, mono_gcd(e, g)) for e in exps_list])


def monomial_intersect(a_list, b_list) -> list:
    """Minimal generators of the intersection of two monomial ideals."""
    return minimalize_monomials([mono_lcm(a, b) for a in a_list for b in b_list])


_INCL_EXCL_LIMIT = 12


def monomial_quotient_numerator(ring: GradedPolyRing, exps_list) -> dict:
    """Numerator of the Hilbert series of ring/(monomial ideal).

    Inclusion-exclusion over the lcm lattice for few generators; for larger
    inputs the equivalent colon recursion
    N(I+(m)) = N(I) - t^{|m|} N(I:m) keeps things polynomial-sized.
    """
    gens = minimalize_monomials(exps_list)
    if len(gens) <= _INCL_EXCL_LIMIT:
        num = {}
        n = len(gens)
        for mask in range(1 << n):
            l = (0,) * ring.nvars
            bits = 0
            m = mask
            i = 0
            while m:
                if m & 1:
                    l = mono_lcm(l, gens[i])
                    bits += 1
                m >>= 1
                i += 1
            d = ring.codegree(l)
            num[d] = num.get(d, 0) + (-1 if bits % 2 else 1)
        return {d: c for d, c in num.items() if c}
    return _numerator_recursive(ring, gens)


def _numerator_recursive(ring, gens) -> dict:
    if not gens:
        return {0: 1}
    if len(gens) == 1:
        d = ring.codegree(gens[0])
        return {0: 1, d: -1} if d else {}
    last = gens[-1]
    rest = gens[:-1]
    n_rest = _numerator_recursive(ring, rest)
    n_colon = _numerator_recursive(ring, monomial_colon(rest, last))
    d = ring.codegree(last)
    out = dict(n_rest)
    for e, c in n_colon.items():
        out[e + d] = out.get(e + d, 0) - c
    return {e: c for e, c in out.items() if c}


# ---------------------------------------------------------------------------
# ideals


class Ideal:
    """A homogeneous ideal with a lazily cached reduced Groebner basis."""

    __slots__ = ("ring", "gens", "_gb")

    def __init__(self, ring: GradedPolyRing, gens=()):
        self.ring = ring
        cleaned = []
        for g in gens:
            if not isinstance(g, Polynomial):
                g = ring.parse(g)
            if g.ring != ring:
                raise InputError("ideal generator lives in a different ring")
            if g.is_zero:
                continue
            if not g.is_homogeneous():
                raise InputError(f"ideal generator {g} is not homogeneous")
            cleaned.append(g)
        self.gens = tuple(cleaned)
        self._gb = None

    def groebner_basis(self) -> list:
        if self._gb is None:
            self._gb = reduce_basis(buchberger(list(self.gens)))
        return self._gb

    def normal_form(self, p: Polynomial) -> Polynomial:
        if p.ring != self.ring:
            raise InputError("polynomial lives in a different ring")
        return normal_form(p, self.groebner_basis())

    def member(self, p: Polynomial) -> bool:
        return self.normal_form(p).is_zero

    __contains__ = member

    def is_unit_ideal(self) -> bool:
        gb = self.groebner_basis()
        return len(gb) == 1 and gb[0].is_constant and not gb[0].is_zero

    def radical_member(self, p: Polynomial) -> bool:
        """p in sqrt(I), by the extra-variable trick; the grading is forgotten."""
        if p.ring != self.ring:
            raise InputError("polynomial lives in a different ring")
        if p.is_zero:
            raise InputError("radical membership of the zero polynomial")
        name = "t"
        while name in self.ring.names:
            name += "_"
        ext = GradedPolyRing(
            self.ring.field,
            list(zip(self.ring.names, self.ring.codegrees)) + [(name, 2)],
        )
        lifted = [Polynomial(ext, {m + (0,): c for m, c in g.terms.items()}) for g in self.gens]
        tp = Polynomial(ext, {m + (1,): c for m, c in p.terms.items()})
        one_minus_tp = ext.one() - tp
        gb = reduce_basis(buchberger(lifted + [one_minus_tp]))
        return len(gb) == 1 and gb[0].is_constant

    def is_monomial(self) -> bool:
        return all(g.is_monomial for g in self.groebner_basis())

    def minimal_monomial_generators(self) -> list:
        """Exponent tuples of the minimal generators; requires a monomial ideal."""
        if not self.is_monomial():
            raise InputError("not a monomial ideal")
        return minimalize_monomials([g.leading_monomial() for g in self.groebner_basis()])

    def leading_term_exponents(self) -> list:
        return minimalize_monomials([g.leading_monomial() for g in self.groebner_basis()])

    def hilbert_series(self) -> HilbertSeries:
        """Hilbert series of ring/I, through the leading-term ideal."""
        num = monomial_quotient_numerator(self.ring, self.leading_term_exponents())
        return HilbertSeries(num, self.ring.codegrees)

    def krull_dimension(self):
        """Krull dimension of ring/I; the unit ideal gives ZERO_RING."""
        if self.is_unit_ideal():
            return ZERO_RING
        return self.hilbert_series().pole_order()

    def extended(self, extra) -> "Ideal":
        return Ideal(self.ring, list(self.gens) + list(extra))

    def __eq__(self, other):
        return (
            isinstance(other, Ideal)
            and self.ring == other.ring
            and self.groebner_basis() == other.groebner_basis()
        )

    def __hash__(self):
        return hash((self.ring, tuple(self.groebner_basis())))

    def to_json(self):
        return {
            "ring": self.ring.to_json(),
            "gens": [str(g) for g in self.gens],
        }

    def __repr__(self):
        return f"Ideal({', '.join(str(g) for g in self.gens) or '0'})"
