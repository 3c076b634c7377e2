"""Graded polynomial rings k[x_1..x_m] with positive even codegrees.

Monomials are exponent tuples; polynomials are sparse maps from exponent
tuples to nonzero field elements.  The canonical term order is graded
reverse lexicographic on the weighted codegree, ties broken from the last
variable backwards; it is fixed once so that every printed basis, Groebner
basis and JSON report is reproducible.
"""
from __future__ import annotations

import re

from .errors import InputError, InvariantViolation
from .fields import field_from_json

# ---------------------------------------------------------------------------
# exponent-tuple helpers (shared with groebner and supports)


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a, b):
    """True when x^a divides x^b."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(b, a):
    return tuple(y - x for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_gcd(a, b):
    return tuple(min(x, y) for x, y in zip(a, b))


def mono_support(a):
    return frozenset(i for i, e in enumerate(a) if e)


class GradedPolyRing:
    __slots__ = ("field", "names", "codegrees", "_index", "_basis_cache")

    def __init__(self, field, variables):
        names = tuple(n for n, _ in variables)
        codegrees = tuple(w for _, w in variables)
        if len(set(names)) != len(names):
            raise InputError("variable names must be unique")
        for n in names:
            if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", n):
                raise InputError(f"bad variable name {n!r}")
        for w in codegrees:
            if not isinstance(w, int) or w <= 0 or w % 2:
                raise InputError(f"codegree {w!r} must be a positive even integer")
        self.field = field
        self.names = names
        self.codegrees = codegrees
        self._index = {n: i for i, n in enumerate(names)}
        self._basis_cache = {}

    @property
    def nvars(self) -> int:
        return len(self.names)

    def codegree(self, exps) -> int:
        return sum(e * w for e, w in zip(exps, self.codegrees))

    def sort_key(self, exps):
        """Ascending canonical order key (weighted grevlex)."""
        return (self.codegree(exps), tuple(-e for e in reversed(exps)))

    def graded_piece_basis(self, d: int):
        """All monomials of codegree exactly d, largest first."""
        if d < 0:
            return []
        cached = self._basis_cache.get(d)
        if cached is None:
            out = list(self._enumerate(0, d))
            out.sort(key=self.sort_key, reverse=True)
            cached = self._basis_cache[d] = out
        return cached

    def _enumerate(self, i, d):
        if i == self.nvars:
            if d == 0:
                yield ()
            return
        w = self.codegrees[i]
        for e in range(d // w + 1):
            for rest in self._enumerate(i + 1, d - e * w):
                yield (e,) + rest

    # -- element constructors

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return Polynomial(self, {(0,) * self.nvars: self.field.one})

    def variable(self, i: int) -> "Polynomial":
        exps = tuple(1 if j == i else 0 for j in range(self.nvars))
        return Polynomial(self, {exps: self.field.one})

    def monomial(self, exps, coeff=None) -> "Polynomial":
        exps = tuple(exps)
        if len(exps) != self.nvars or any(e < 0 for e in exps):
            raise InputError(f"bad exponent vector {exps!r}")
        c = self.field.one if coeff is None else self.field.coerce(coeff)
        return Polynomial(self, {exps: c})

    def constant(self, c) -> "Polynomial":
        return Polynomial(self, {(0,) * self.nvars: self.field.coerce(c)})

    def parse(self, text: str) -> "Polynomial":
        terms = {}
        for coeff, factors in _parse_terms(text):
            exps = [0] * self.nvars
            for name, e in factors:
                i = self._index.get(name)
                if i is None:
                    raise InputError(f"unknown variable {name!r} in {text!r}")
                exps[i] += e
            key = tuple(exps)
            c = self.field.add(terms.get(key, self.field.zero), self.field.coerce(coeff))
            if c == self.field.zero:
                terms.pop(key, None)
            else:
                terms[key] = c
        return Polynomial(self, terms)

    def monomial_str(self, exps) -> str:
        parts = []
        for name, e in zip(self.names, exps):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"

    def to_json(self):
        return {
            "field": self.field.to_json(),
            "vars": [{"name": n, "codegree": w} for n, w in zip(self.names, self.codegrees)],
        }

    @staticmethod
    def from_json(obj) -> "GradedPolyRing":
        if not isinstance(obj, dict) or "field" not in obj or "vars" not in obj:
            raise InputError("ring JSON needs 'field' and 'vars'")
        try:
            variables = [(v["name"], v["codegree"]) for v in obj["vars"]]
        except (TypeError, KeyError) as exc:
            raise InputError("each ring variable needs 'name' and 'codegree'") from exc
        return GradedPolyRing(field_from_json(obj["field"]), variables)

    def __eq__(self, other):
        return (
            isinstance(other, GradedPolyRing)
            and self.field == other.field
            and self.names == other.names
            and self.codegrees == other.codegrees
        )

    def __hash__(self):
        return hash((self.field, self.names, self.codegrees))

    def __repr__(self):
        vs = ", ".join(f"{n}:{w}" for n, w in zip(self.names, self.codegrees))
        return f"GradedPolyRing({self.field!r}; {vs})"


class Polynomial:
    """Sparse exact polynomial; immutable after construction."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: GradedPolyRing, terms: dict):
        self.ring = ring
        self.terms = {m: c for m, c in terms.items() if c != ring.field.zero}

    # -- predicates

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_constant(self) -> bool:
        return all(not any(m) for m in self.terms)

    @property
    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_homogeneous(self) -> bool:
        degs = {self.ring.codegree(m) for m in self.terms}
        return len(degs) <= 1

    def homogeneous_codegree(self):
        """Codegree if homogeneous, None otherwise; zero polynomial is an error."""
        if self.is_zero:
            raise InputError("the zero polynomial has no codegree")
        degs = {self.ring.codegree(m) for m in self.terms}
        if len(degs) == 1:
            return degs.pop()
        return None

    # -- leading data (canonical order)

    def leading_monomial(self):
        return max(self.terms, key=self.ring.sort_key)

    def leading_coeff(self):
        return self.terms[self.leading_monomial()]

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: self.ring.sort_key(t[0]), reverse=True)

    # -- arithmetic

    def _check_ring(self, other):
        if self.ring != other.ring:
            raise InputError("polynomials live in different rings")

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_ring(other)
        fld = self.ring.field
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = fld.add(out.get(m, fld.zero), c)
            if s == fld.zero:
                out.pop(m, None)
            else:
                out[m] = s
        return Polynomial(self.ring, out)

    def __neg__(self):
        fld = self.ring.field
        return Polynomial(self.ring, {m: fld.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        fld = self.ring.field
        if not isinstance(other, Polynomial):
            c = fld.coerce(other)
            return Polynomial(self.ring, {m: fld.mul(v, c) for m, v in self.terms.items()})
        self._check_ring(other)
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                s = fld.add(out.get(m, fld.zero), fld.mul(c1, c2))
                if s == fld.zero:
                    out.pop(m, None)
                else:
                    out[m] = s
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise InputError("negative polynomial power")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def scale_term(self, exps, coeff):
        """self * coeff*x^exps, cheaper than building the factor."""
        fld = self.ring.field
        return Polynomial(
            self.ring, {mono_mul(m, exps): fld.mul(c, coeff) for m, c in self.terms.items()}
        )

    def monic(self):
        if self.is_zero:
            return self
        fld = self.ring.field
        inv = fld.inv(self.leading_coeff())
        return Polynomial(self.ring, {m: fld.mul(c, inv) for m, c in self.terms.items()})

    def kill_variables(self, indices) -> "Polynomial":
        """Substitute 0 for the given variable indices."""
        return Polynomial(
            self.ring,
            {m: c for m, c in self.terms.items() if not any(m[i] for i in indices)},
        )

    def divexact(self, other: "Polynomial") -> "Polynomial":
        """Exact quotient self/other; raises if the division leaves a remainder."""
        if other.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        fld = self.ring.field
        lm, lc = other.leading_monomial(), other.leading_coeff()
        rem = self
        quo = {}
        while not rem.is_zero:
            m = rem.leading_monomial()
            if not mono_divides(lm, m):
                raise InvariantViolation("inexact polynomial division")
            q = mono_div(m, lm)
            c = fld.div(rem.terms[m], lc)
            quo[q] = c
            rem = rem - other.scale_term(q, c)
        return Polynomial(self.ring, quo)

    # -- comparisons and hashing

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __bool__(self):
        return not self.is_zero

    def __str__(self):
        if self.is_zero:
            return "0"
        fld = self.ring.field
        out = []
        for m, c in self.sorted_terms():
            # prime-field coefficients are canonical representatives in [0, p)
            neg = c < 0
            mag = -c if neg else c
            ms = self.ring.monomial_str(m)
            if ms == "1":
                body = fld.format(mag)
            elif mag == fld.one:
                body = ms
            else:
                body = f"{fld.format(mag)}*{ms}"
            if not out:
                out.append(f"-{body}" if neg else body)
            else:
                out.append(f"-{body}" if neg else f"+{body}")
        return "".join(out)

    def __repr__(self):
        return f"<{self}>"


# ---------------------------------------------------------------------------
# term-level parser, shared with the dg-algebra layer

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[*^/+-]))")


def _tokenize(text: str):
    pos, out = 0, []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise InputError(f"cannot tokenize {text!r} at position {pos}")
        if m.group("int") is not None:
            out.append(("int", m.group("int")))
        elif m.group("name") is not None:
            out.append(("name", m.group("name")))
        else:
            out.append(("op", m.group("op")))
        pos = m.end()
    return out


def _parse_terms(text: str):
    """Parse `term (+|- term)*` into (coeff-string, [(name, exponent), ...]) pairs.

    A term is `*`-separated factors: integer or a/b coefficients and
    variables with optional `^ int` exponents.
    """
    toks = _tokenize(text)
    if not toks:
        raise InputError("empty polynomial text")
    out = []
    i = 0

    def parse_term(i, sign):
        coeff_num, coeff_den = None, None
        factors = []
        expect_factor = True
        while i < len(toks):
            kind, val = toks[i]
            if kind == "op" and val in "+-":
                break
            if not expect_factor:
                if kind == "op" and val == "*":
                    i += 1
                    expect_factor = True
                    continue
                if kind == "op" and val == "/" and coeff_den is None and coeff_num is not None:
                    if i + 1 < len(toks) and toks[i + 1][0] == "int":
                        coeff_den = toks[i + 1][1]
                        i += 2
                        continue
                raise InputError(f"unexpected {val!r} in polynomial text")
            if kind == "int":
                if coeff_num is not None:
                    raise InputError("two coefficients in one term")
                coeff_num = val
                i += 1
                expect_factor = False
                continue
            if kind == "name":
                e = 1
                i += 1
                if i + 1 < len(toks) and toks[i] == ("op", "^") and toks[i + 1][0] == "int":
                    e = int(toks[i + 1][1])
                    i += 2
                elif i < len(toks) and toks[i] == ("op", "^"):
                    raise InputError("'^' must be followed by an integer")
                factors.append((val, e))
                expect_factor = False
                continue
            raise InputError(f"unexpected token {val!r} in polynomial text")
        if expect_factor:
            raise InputError(f"dangling operator in {text!r}")
        coeff = coeff_num if coeff_num is not None else "1"
        if coeff_den is not None:
            coeff = f"{coeff}/{coeff_den}"
        if sign < 0:
            coeff = f"-{coeff}"
        out.append((coeff, factors))
        return i

    sign = 1
    if toks and toks[0] == ("op", "-"):
        sign, i = -1, 1
    elif toks and toks[0] == ("op", "+"):
        i = 1
    i = parse_term(i, sign)
    while i < len(toks):
        kind, val = toks[i]
        if kind != "op" or val not in "+-":
            raise InputError(f"expected '+' or '-' in {text!r}")
        i = parse_term(i + 1, 1 if val == "+" else -1)
    return out
