"""Free graded-commutative dg algebras and their cohomology.

Generators may have any positive codegree: even generators are polynomial,
odd generators square to zero.  The differential is given on generators
(codegree +1) and extended as a graded derivation; cohomology is computed
degreewise on the monomial basis, so every reported dimension is exact.
"""
from __future__ import annotations

from .errors import InputError
from .linalg import rank
from .rings import _parse_terms


class DGAlgebra:
    __slots__ = ("field", "names", "codegrees", "_index", "diff")

    def __init__(self, field, generators, differential):
        """`generators`: list of (name, codegree); `differential`: name -> dg polynomial.

        Differential values may be strings (parsed in the generators) or
        term dicts; omitted generators get zero differential.
        """
        names = tuple(n for n, _ in generators)
        codegrees = tuple(w for _, w in generators)
        if len(set(names)) != len(names):
            raise InputError("generator names must be unique")
        for w in codegrees:
            if not isinstance(w, int) or w < 1:
                raise InputError("generator codegrees must be positive integers")
        self.field = field
        self.names = names
        self.codegrees = codegrees
        self._index = {n: i for i, n in enumerate(names)}
        self.diff = {}
        for name, value in differential.items():
            i = self._index.get(name)
            if i is None:
                raise InputError(f"differential given for unknown generator {name!r}")
            poly = self.parse(value) if isinstance(value, str) else dict(value)
            if poly:
                want = codegrees[i] + 1
                degs = {self.codegree(m) for m in poly}
                if degs != {want}:
                    raise InputError(
                        f"d({name}) must be homogeneous of codegree {want}"
                    )
                self.diff[name] = poly
        for name in self.names:
            dd = self.d_poly(self.d_gen(self._index[name]))
            if dd:
                raise InputError(f"d(d({name})) != 0")

    # -- monomials: exponent tuples, odd exponents <= 1

    def is_odd(self, i: int) -> bool:
        return self.codegrees[i] % 2 == 1

    def codegree(self, exps) -> int:
        return sum(e * w for e, w in zip(exps, self.codegrees))

    def mul_mono(self, a, b):
        """(sign, exps) for the product of two normal-form monomials, or None."""
        sign = 1
        for i, eb in enumerate(b):
            if not eb or not self.is_odd(i):
                continue
            if a[i]:
                return None  # odd square
            swaps = sum(
                1 for j in range(i + 1, len(a)) if a[j] and self.is_odd(j)
            )
            if swaps % 2:
                sign = -sign
        return sign, tuple(x + y for x, y in zip(a, b))

    # -- polynomials: dict exps -> coeff

    def zero_poly(self):
        return {}

    def add_term(self, poly, exps, coeff):
        fld = self.field
        c = fld.add(poly.get(exps, fld.zero), coeff)
        if c == fld.zero:
            poly.pop(exps, None)
        else:
            poly[exps] = c

    def mul_poly(self, a: dict, b: dict) -> dict:
        fld = self.field
        out = {}
        for ma, ca in a.items():
            for mb, cb in b.items():
                r = self.mul_mono(ma, mb)
                if r is None:
                    continue
                sign, m = r
                c = fld.mul(ca, cb)
                if sign < 0:
                    c = fld.neg(c)
                self.add_term(out, m, c)
        return out

    def parse(self, text: str) -> dict:
        out = {}
        n = len(self.names)
        for coeff, factors in _parse_terms(text):
            term = {(0,) * n: self.field.coerce(coeff)}
            for name, e in factors:
                i = self._index.get(name)
                if i is None:
                    raise InputError(f"unknown generator {name!r}")
                gen = {tuple(1 if j == i else 0 for j in range(n)): self.field.one}
                for _ in range(e):
                    term = self.mul_poly(term, gen)
            for m, c in term.items():
                self.add_term(out, m, c)
        return out

    def d_gen(self, i: int) -> dict:
        return dict(self.diff.get(self.names[i], {}))

    def d_mono(self, exps) -> dict:
        """Graded derivation on one monomial."""
        fld = self.field
        out = {}
        n = len(exps)
        prefix_parity = 0
        for i in range(n):
            e = exps[i]
            if e:
                dgi = self.diff.get(self.names[i])
                if dgi:
                    before = tuple(exps[j] if j < i else 0 for j in range(n))
                    after = tuple(exps[j] if j > i else 0 for j in range(n))
                    if self.is_odd(i):
                        middle = dict(dgi)
                    else:
                        # d(g^e) = e g^{e-1} dg; g even commutes freely
                        middle = {
                            m: fld.mul(c, fld.coerce(e)) for m, c in dgi.items()
                        }
                        before = tuple(
                            before[j] + (e - 1 if j == i else 0) for j in range(n)
                        )
                    part = self.mul_poly({before: fld.one}, middle)
                    part = self.mul_poly(part, {after: fld.one})
                    if prefix_parity % 2:
                        part = {m: fld.neg(c) for m, c in part.items()}
                    for m, c in part.items():
                        self.add_term(out, m, c)
                prefix_parity += e * self.codegrees[i]
        return out

    def d_poly(self, poly: dict) -> dict:
        fld = self.field
        out = {}
        for m, c in poly.items():
            for m2, c2 in self.d_mono(m).items():
                self.add_term(out, m2, fld.mul(c, c2))
        return out

    # -- bases and cohomology

    def basis(self, d: int) -> list:
        """All normal-form monomials of codegree d, in a fixed order."""
        out = []

        def rec(i, rest, acc):
            if i == len(self.names):
                if rest == 0:
                    out.append(tuple(acc))
                return
            w = self.codegrees[i]
            top = 1 if self.is_odd(i) else rest // w
            for e in range(min(top, rest // w) + 1):
                rec(i + 1, rest - e * w, acc + [e])

        rec(0, d, [])
        out.sort()
        return out

    def cohomology_dims(self, d_max: int) -> list:
        """dim H^d for d = 0..d_max."""
        bases = {d: self.basis(d) for d in range(d_max + 2)}
        ranks = {}
        for d in range(d_max + 1):
            src = bases[d]
            tgt = bases[d + 1]
            index = {m: k for k, m in enumerate(tgt)}
            rows = [[self.field.zero] * len(src) for _ in tgt]
            for col, m in enumerate(src):
                for m2, c in self.d_mono(m).items():
                    rows[index[m2]][col] = self.field.add(
                        rows[index[m2]][col], c
                    )
            ranks[d] = rank(rows, self.field) if src and tgt else 0
        dims = []
        for d in range(d_max + 1):
            dims.append(len(bases[d]) - ranks[d] - ranks.get(d - 1, 0))
        return dims

    def to_json(self):
        return {
            "field": self.field.to_json(),
            "gens": [
                {"name": n, "codegree": w} for n, w in zip(self.names, self.codegrees)
            ],
            "d": {
                n: self.poly_str(self.diff[n]) for n in self.names if n in self.diff
            },
        }

    def poly_str(self, poly: dict) -> str:
        if not poly:
            return "0"
        items = sorted(poly.items(), key=lambda t: (self.codegree(t[0]), t[0]))
        parts = []
        for m, c in items:
            factors = []
            for name, e in zip(self.names, m):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            body = "*".join(factors) if factors else "1"
            neg = c < 0
            mag = -c if neg else c
            if factors and mag == self.field.one:
                s = body
            elif factors:
                s = f"{self.field.format(mag)}*{body}"
            else:
                s = self.field.format(mag)
            if not parts:
                parts.append(f"-{s}" if neg else s)
            else:
                parts.append(f"-{s}" if neg else f"+{s}")
        return "".join(parts)

    @staticmethod
    def from_json(obj, field=None) -> "DGAlgebra":
        from .fields import Q, field_from_json

        if not isinstance(obj, dict) or "gens" not in obj:
            raise InputError("dg algebra JSON needs 'gens'")
        fld = field_from_json(obj["field"]) if "field" in obj else (field or Q)
        try:
            gens = [(g["name"], g["codegree"]) for g in obj["gens"]]
        except (TypeError, KeyError) as exc:
            raise InputError("each dg generator needs 'name' and 'codegree'") from exc
        return DGAlgebra(fld, gens, obj.get("d", {}))
