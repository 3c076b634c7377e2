"""Bounded complexes of shifted free graded modules, with exact degreewise homology.

Conventions, fixed once:
  * cohomological indexing; the differential raises the index by 1;
  * a shift list entry `a` denotes a free summand R(-a), generator in codegree a;
  * a matrix from shifts `src` to shifts `tgt` has entry (i, j) homogeneous of
    codegree src[j] - tgt[i] (or zero), so all maps preserve codegree.

Homology is computed one codegree at a time by expanding each free summand
into its monomial basis; no resolutions or syzygies are ever built, every
reported dimension is exact.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import InputError, InvariantViolation
from .groebner import Ideal, normal_form
from .linalg import rank
from .rings import GradedPolyRing, Polynomial, mono_divides

# ---------------------------------------------------------------------------
# polynomial matrices (tuples of tuples)


def mat_from_strings(ring, rows):
    return tuple(
        tuple(ring.parse(e) if isinstance(e, str) else e for e in row) for row in rows
    )


def mat_zero(ring, nrows, ncols):
    z = ring.zero()
    return tuple((z,) * ncols for _ in range(nrows))


def mat_mul(a, b, ring):
    if not a or not b:
        return ()
    ncols_a = len(a[0])
    if ncols_a != len(b):
        raise InvariantViolation("matrix shape mismatch in product")
    ncols_b = len(b[0]) if b else 0
    out = []
    for i in range(len(a)):
        row = []
        for j in range(ncols_b):
            s = ring.zero()
            for k in range(ncols_a):
                if not a[i][k].is_zero and not b[k][j].is_zero:
                    s = s + a[i][k] * b[k][j]
            row.append(s)
        out.append(tuple(row))
    return tuple(out)


def mat_is_zero(a):
    return all(e.is_zero for row in a for e in row)


def mat_neg(a):
    return tuple(tuple(-e for e in row) for row in a)


def _check_entry_codegrees(src_shifts, tgt_shifts, mat, what):
    if len(mat) != len(tgt_shifts) or any(len(row) != len(src_shifts) for row in mat):
        raise InputError(f"{what}: matrix shape does not match the shift lists")
    for i, row in enumerate(mat):
        for j, e in enumerate(row):
            if e.is_zero:
                continue
            d = e.homogeneous_codegree()
            want = src_shifts[j] - tgt_shifts[i]
            if d is None or d != want:
                raise InputError(
                    f"{what}: entry ({i},{j}) must be homogeneous of codegree {want}"
                )


# ---------------------------------------------------------------------------
# graded pieces

# a basis element of a graded piece is a pair (summand index, exponent tuple)


def piece_basis(ring, shifts, d):
    out = []
    for j, a in enumerate(shifts):
        for m in ring.graded_piece_basis(d - a):
            out.append((j, m))
    return out


def _quotient_basis(ring, lead_exps, d):
    return [m for m in ring.graded_piece_basis(d) if not any(mono_divides(l, m) for l in lead_exps)]


def piece_basis_mod(ring, shifts, d, lead_exps):
    out = []
    for j, a in enumerate(shifts):
        for m in _quotient_basis(ring, lead_exps, d - a):
            out.append((j, m))
    return out


def scalar_matrix(ring, src_shifts, tgt_shifts, mat, d, modulus: Ideal | None = None):
    """The matrix of a shift-respecting polynomial map on the codegree-d piece.

    With `modulus` the map is taken over ring/modulus: bases are the standard
    monomials and entries are reduced to normal form first.
    """
    fld = ring.field
    if modulus is None:
        src = piece_basis(ring, src_shifts, d)
        tgt = piece_basis(ring, tgt_shifts, d)
        reduce = None
    else:
        gb = modulus.groebner_basis()
        lead = [g.leading_monomial() for g in gb]
        src = piece_basis_mod(ring, src_shifts, d, lead)
        tgt = piece_basis_mod(ring, tgt_shifts, d, lead)
        reduce = gb
    tgt_index = {bm: k for k, bm in enumerate(tgt)}
    rows = [[fld.zero] * len(src) for _ in tgt]
    for col, (j, mu) in enumerate(src):
        for i in range(len(tgt_shifts)):
            e = mat[i][j]
            if e.is_zero:
                continue
            prod = e.scale_term(mu, fld.one)
            if reduce is not None:
                prod = normal_form(prod, reduce)
            for nu, c in prod.terms.items():
                k = tgt_index.get((i, nu))
                if k is None:
                    if reduce is None:
                        raise InvariantViolation("image escaped the graded piece")
                    continue
                rows[k][col] = fld.add(rows[k][col], c)
    return rows, len(src), len(tgt)


# ---------------------------------------------------------------------------
# homology tables


@dataclass
class HomologyTable:
    """Nonzero homology dimensions per (cohomological index, codegree <= d_max)."""

    d_max: int
    entries: dict

    def dim(self, n: int, d: int) -> int:
        return self.entries.get((n, d), 0)

    def euler(self, d: int) -> int:
        return sum(((-1) ** n) * v for (n, dd), v in self.entries.items() if dd == d)

    def total_dim(self) -> int:
        return sum(self.entries.values())

    def is_zero(self) -> bool:
        return not self.entries

    def to_json(self):
        items = sorted(self.entries.items())
        return {
            "d_max": self.d_max,
            "entries": [
                {"index": n, "codegree": d, "dim": v} for (n, d), v in items
            ],
        }

    def __eq__(self, other):
        return (
            isinstance(other, HomologyTable)
            and self.d_max == other.d_max
            and self.entries == other.entries
        )


# ---------------------------------------------------------------------------
# chain complexes


class FreeComplex:
    """A bounded complex of shifted free modules with index-raising differentials."""

    __slots__ = ("ring", "terms", "diffs")

    def __init__(self, ring, terms, diffs, check=True):
        self.ring = ring
        self.terms = {n: tuple(s) for n, s in terms.items() if len(tuple(s))}
        self.diffs = {}
        for n, mat in diffs.items():
            if n in self.terms and (n + 1) in self.terms:
                m = tuple(tuple(row) for row in mat)
                if any(not e.is_zero for row in m for e in row):
                    self.diffs[n] = m
        if check:
            problems = self.violations()
            if problems:
                raise InputError("; ".join(problems))

    def violations(self) -> list:
        """All failures of d**2 = 0 and shift compatibility, by index."""
        out = []
        for n, mat in self.diffs.items():
            try:
                _check_entry_codegrees(self.terms[n], self.terms[n + 1], mat, f"d^{n}")
            except InputError as exc:
                out.append(str(exc))
        for n in self.diffs:
            if (n + 1) in self.diffs:
                try:
                    comp = mat_mul(self.diffs[n + 1], self.diffs[n], self.ring)
                except InvariantViolation as exc:
                    out.append(f"d^{n + 1} d^{n}: {exc}")
                    continue
                if not mat_is_zero(comp):
                    out.append(f"d^{n + 1} d^{n} != 0")
        return out

    # -- basic queries

    def indices(self):
        return sorted(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def diff(self, n):
        if n in self.diffs:
            return self.diffs[n]
        src = self.terms.get(n, ())
        tgt = self.terms.get(n + 1, ())
        return mat_zero(self.ring, len(tgt), len(src))

    def total_rank(self) -> int:
        return sum(len(s) for s in self.terms.values())

    def piece_dim(self, n: int, d: int, modulus: Ideal | None = None) -> int:
        shifts = self.terms.get(n, ())
        if modulus is None:
            return sum(len(self.ring.graded_piece_basis(d - a)) for a in shifts)
        lead = [g.leading_monomial() for g in modulus.groebner_basis()]
        return sum(len(_quotient_basis(self.ring, lead, d - a)) for a in shifts)

    def scalar_diff(self, n: int, d: int, modulus: Ideal | None = None):
        src = self.terms.get(n, ())
        tgt = self.terms.get(n + 1, ())
        return scalar_matrix(self.ring, src, tgt, self.diff(n), d, modulus)

    def homology_table(self, d_max: int, modulus: Ideal | None = None) -> HomologyTable:
        """dim H^n in every codegree 0..d_max, by exact ranks; empty when zero."""
        entries = {}
        if not self.terms:
            return HomologyTable(d_max, entries)
        lo, hi = min(self.terms), max(self.terms)
        for d in range(d_max + 1):
            ranks = {}
            for n in range(lo - 1, hi + 1):
                rows, ncols, _ = self.scalar_diff(n, d, modulus)
                ranks[n] = rank(rows, self.ring.field) if ncols else 0
            for n in range(lo, hi + 1):
                dim = self.piece_dim(n, d, modulus) - ranks[n] - ranks[n - 1]
                if dim < 0:
                    raise InvariantViolation("negative homology dimension")
                if dim:
                    entries[(n, d)] = dim
        return HomologyTable(d_max, entries)

    # -- constructions

    def twist(self, w: int) -> "FreeComplex":
        """Tensor with R(-w): all shifts move up by w."""
        return FreeComplex(
            self.ring,
            {n: tuple(a + w for a in s) for n, s in self.terms.items()},
            self.diffs,
            check=False,
        )

    def translate(self, k: int) -> "FreeComplex":
        """Shift indices: result^n = self^{n+k}; differentials pick up (-1)^k."""
        terms = {n - k: s for n, s in self.terms.items()}
        if k % 2 == 0:
            diffs = {n - k: m for n, m in self.diffs.items()}
        else:
            diffs = {n - k: mat_neg(m) for n, m in self.diffs.items()}
        return FreeComplex(self.ring, terms, diffs, check=False)

    def direct_sum(self, other: "FreeComplex") -> "FreeComplex":
        if self.ring != other.ring:
            raise InputError("complexes live over different rings")
        terms = {}
        for n in set(self.terms) | set(other.terms):
            terms[n] = self.terms.get(n, ()) + other.terms.get(n, ())
        diffs = {}
        for n in set(self.diffs) | set(other.diffs):
            a = self.terms.get(n, ())
            b = other.terms.get(n, ())
            ta = self.terms.get(n + 1, ())
            tb = other.terms.get(n + 1, ())
            da, db = self.diff(n), other.diff(n)
            rows = []
            for i in range(len(ta)):
                rows.append(tuple(da[i]) + (self.ring.zero(),) * len(b))
            for i in range(len(tb)):
                rows.append((self.ring.zero(),) * len(a) + tuple(db[i]))
            diffs[n] = tuple(rows)
        return FreeComplex(self.ring, terms, diffs, check=False)

    def tensor(self, other: "FreeComplex") -> "FreeComplex":
        """Total complex of the double complex, Koszul sign (-1)^p on the second factor."""
        if self.ring != other.ring:
            raise InputError("complexes live over different rings")
        ring = self.ring
        if self.is_zero() or other.is_zero():
            return FreeComplex(ring, {}, {}, check=False)
        layout = {}
        terms = {}
        for n in range(
            min(self.terms) + min(other.terms), max(self.terms) + max(other.terms) + 1
        ):
            blocks = []
            shifts = []
            for p in sorted(self.terms):
                q = n - p
                if q not in other.terms:
                    continue
                sa, sb = self.terms[p], other.terms[q]
                blocks.append((p, q, len(shifts), len(sa), len(sb)))
                for a in sa:
                    for b in sb:
                        shifts.append(a + b)
            if shifts:
                layout[n] = blocks
                terms[n] = tuple(shifts)
        diffs = {}
        for n in terms:
            if (n + 1) not in terms:
                continue
            src_blocks = layout[n]
            tgt_blocks = {(p, q): off for p, q, off, _, _ in layout[n + 1]}
            nrows = len(terms[n + 1])
            ncols = len(terms[n])
            z = ring.zero()
            rows = [[z] * ncols for _ in range(nrows)]
            for p, q, off, na, nb in src_blocks:
                # d_X tensor 1
                if (p + 1, q) in tgt_blocks and p in self.diffs:
                    toff = tgt_blocks[(p + 1, q)]
                    dx = self.diffs[p]
                    for i2 in range(len(self.terms[p + 1])):
                        for i in range(na):
                            e = dx[i2][i]
                            if e.is_zero:
                                continue
                            for j in range(nb):
                                rows[toff + i2 * nb + j][off + i * nb + j] = e
                # (-1)^p 1 tensor d_Y
                if (p, q + 1) in tgt_blocks and q in other.diffs:
                    toff = tgt_blocks[(p, q + 1)]
                    dy = other.diffs[q]
                    sign = -1 if p % 2 else 1
                    nb2 = len(other.terms[q + 1])
                    for j2 in range(nb2):
                        for j in range(nb):
                            e = dy[j2][j]
                            if e.is_zero:
                                continue
                            if sign < 0:
                                e = -e
                            for i in range(na):
                                rows[toff + i * nb2 + j2][off + i * nb + j] = e
            diffs[n] = tuple(tuple(r) for r in rows)
        return FreeComplex(ring, terms, diffs, check=False)

    def to_json(self, include_ring=True):
        out = {
            "terms": {str(n): list(s) for n, s in sorted(self.terms.items())},
            "diffs": {
                str(n): [[str(e) for e in row] for row in m]
                for n, m in sorted(self.diffs.items())
            },
        }
        if include_ring:
            out = {"ring": self.ring.to_json(), **out}
        return out

    @staticmethod
    def from_json(obj, ring=None) -> "FreeComplex":
        if not isinstance(obj, dict):
            raise InputError("complex JSON must be an object")
        if obj.get("ring") is not None:
            ring = GradedPolyRing.from_json(obj["ring"])
        if ring is None:
            raise InputError("complex JSON needs a ring (inline or from context)")
        try:
            terms = {int(k): tuple(v) for k, v in obj.get("terms", {}).items()}
            diffs = {
                int(k): mat_from_strings(ring, v) for k, v in obj.get("diffs", {}).items()
            }
        except (TypeError, ValueError, AttributeError) as exc:
            raise InputError(f"bad complex JSON: {exc}") from exc
        for shifts in terms.values():
            if not all(isinstance(a, int) for a in shifts):
                raise InputError("term shifts must be integers")
        for n, mat in diffs.items():
            nrows = len(terms.get(n + 1, ()))
            ncols = len(terms.get(n, ()))
            if len(mat) != nrows or any(len(row) != ncols for row in mat):
                raise InputError(
                    f"diffs[{n}] must be a {nrows}x{ncols} matrix for the given terms"
                )
        return FreeComplex(ring, terms, diffs, check=True)

    def __eq__(self, other):
        return (
            isinstance(other, FreeComplex)
            and self.ring == other.ring
            and self.terms == other.terms
            and {n: m for n, m in self.diffs.items()}
            == {n: m for n, m in other.diffs.items()}
        )

    def __repr__(self):
        ranks = ", ".join(f"{n}:{len(s)}" for n, s in sorted(self.terms.items()))
        return f"FreeComplex({ranks or 'zero'})"


def unit_complex(ring) -> FreeComplex:
    return FreeComplex(ring, {0: (0,)}, {}, check=False)


def zero_complex(ring) -> FreeComplex:
    return FreeComplex(ring, {}, {}, check=False)


# ---------------------------------------------------------------------------
# chain maps and cones


class ChainMap:
    """A codegree-preserving chain map between two complexes over one ring."""

    __slots__ = ("source", "target", "mats")

    def __init__(self, source: FreeComplex, target: FreeComplex, mats, check=True):
        if source.ring != target.ring:
            raise InputError("chain map between complexes over different rings")
        self.source = source
        self.target = target
        self.mats = {}
        for n, m in mats.items():
            if n in source.terms and n in target.terms:
                mm = tuple(tuple(row) for row in m)
                if any(not e.is_zero for row in mm for e in row):
                    self.mats[n] = mm
        if check:
            self.validate()

    def mat(self, n):
        if n in self.mats:
            return self.mats[n]
        src = self.source.terms.get(n, ())
        tgt = self.target.terms.get(n, ())
        return mat_zero(self.source.ring, len(tgt), len(src))

    def validate(self):
        ring = self.source.ring
        for n, m in self.mats.items():
            _check_entry_codegrees(self.source.terms[n], self.target.terms[n], m, f"f^{n}")
        for n in set(self.source.terms) | set(self.target.terms):
            left = mat_mul(self.target.diff(n), self.mat(n), ring)
            right = mat_mul(self.mat(n + 1), self.source.diff(n), ring)
            la = not mat_is_zero(left) if left else False
            ra = not mat_is_zero(right) if right else False
            if not left and not right:
                continue
            if left and right:
                diff = tuple(
                    tuple(a - b for a, b in zip(lr, rr)) for lr, rr in zip(left, right)
                )
                if not mat_is_zero(diff):
                    raise InputError(f"not a chain map at index {n}")
            elif la or ra:
                raise InputError(f"not a chain map at index {n}")

    def scalar_at(self, n: int, d: int):
        return scalar_matrix(
            self.source.ring,
            self.source.terms.get(n, ()),
            self.target.terms.get(n, ()),
            self.mat(n),
            d,
        )


def identity_map(x: FreeComplex) -> ChainMap:
    ring = x.ring
    mats = {}
    for n, s in x.terms.items():
        mats[n] = tuple(
            tuple(ring.one() if i == j else ring.zero() for j in range(len(s)))
            for i in range(len(s))
        )
    return ChainMap(x, x, mats, check=False)


def cone(f: ChainMap) -> FreeComplex:
    """Mapping cone: cone^n = X^{n+1} (+) Y^n, d(x, y) = (-dx, f x + dy)."""
    x, y = f.source, f.target
    ring = x.ring
    terms = {}
    for n in set(k - 1 for k in x.terms) | set(y.terms):
        s = x.terms.get(n + 1, ()) + y.terms.get(n, ())
        if s:
            terms[n] = s
    diffs = {}
    for n in terms:
        if (n + 1) not in terms:
            continue
        xs, ys = x.terms.get(n + 1, ()), y.terms.get(n, ())
        xt, yt = x.terms.get(n + 2, ()), y.terms.get(n + 1, ())
        dx = x.diff(n + 1)
        dy = y.diff(n)
        fm = f.mat(n + 1)
        z = ring.zero()
        rows = []
        for i in range(len(xt)):
            rows.append(tuple(-dx[i][j] for j in range(len(xs))) + (z,) * len(ys))
        for i in range(len(yt)):
            rows.append(tuple(fm[i][j] for j in range(len(xs))) + tuple(dy[i]))
        diffs[n] = tuple(rows)
    return FreeComplex(ring, terms, diffs, check=False)


def multiplication_map(x: FreeComplex, s: Polynomial) -> ChainMap:
    """Multiplication by a homogeneous s as a chain map x(-|s|) -> x."""
    if s.is_zero:
        raise InputError("multiplication by zero has no Koszul object")
    w = s.homogeneous_codegree()
    if w is None:
        raise InputError(f"{s} is not homogeneous")
    src = x.twist(w)
    mats = {}
    for n, shifts in x.terms.items():
        mats[n] = tuple(
            tuple(s if i == j else x.ring.zero() for j in range(len(shifts)))
            for i in range(len(shifts))
        )
    return ChainMap(src, x, mats, check=False)


def tensor_map(f: ChainMap, g: ChainMap) -> ChainMap:
    """f (x) g on the tensor complexes; no signs arise for index-0 maps."""
    src = f.source.tensor(g.source)
    tgt = f.target.tensor(g.target)
    ring = src.ring
    mats = {}
    for n in src.terms:
        if n not in tgt.terms:
            continue
        src_blocks = _tensor_blocks(f.source, g.source, n)
        tgt_blocks = {(p, q): off for p, q, off, _, _ in _tensor_blocks(f.target, g.target, n)}
        z = ring.zero()
        rows = [[z] * len(src.terms[n]) for _ in range(len(tgt.terms[n]))]
        for p, q, off, na, nb in src_blocks:
            if (p, q) not in tgt_blocks:
                continue
            toff = tgt_blocks[(p, q)]
            fm = f.mat(p)
            gm = g.mat(q)
            nta = len(f.target.terms.get(p, ()))
            ntb = len(g.target.terms.get(q, ()))
            for i2 in range(nta):
                for i in range(na):
                    fe = fm[i2][i]
                    if fe.is_zero:
                        continue
                    for j2 in range(ntb):
                        for j in range(nb):
                            ge = gm[j2][j]
                            if ge.is_zero:
                                continue
                            rows[toff + i2 * ntb + j2][off + i * nb + j] = fe * ge
        mats[n] = tuple(tuple(r) for r in rows)
    return ChainMap(src, tgt, mats, check=False)


def _tensor_blocks(x: FreeComplex, y: FreeComplex, n: int):
    blocks = []
    off = 0
    for p in sorted(x.terms):
        q = n - p
        if q not in y.terms:
            continue
        na, nb = len(x.terms[p]), len(y.terms[q])
        blocks.append((p, q, off, na, nb))
        off += na * nb
    return blocks


# ---------------------------------------------------------------------------
# module presentations


class GradedModulePresentation:
    """A finitely generated graded module as coker of a shift-respecting matrix."""

    __slots__ = ("ring", "target_shifts", "source_shifts", "matrix")

    def __init__(self, ring, target_shifts, source_shifts, matrix):
        self.ring = ring
        self.target_shifts = tuple(target_shifts)
        self.source_shifts = tuple(source_shifts)
        self.matrix = tuple(
            tuple(ring.parse(e) if isinstance(e, str) else e for e in row) for row in matrix
        )
        if not self.target_shifts:
            raise InputError("presentation needs at least one target generator")
        _check_entry_codegrees(
            self.source_shifts, self.target_shifts, self.matrix, "presentation"
        )

    def dim(self, d: int) -> int:
        rows, ncols, _ = scalar_matrix(
            self.ring, self.source_shifts, self.target_shifts, self.matrix, d
        )
        free_dim = sum(len(self.ring.graded_piece_basis(d - a)) for a in self.target_shifts)
        r = rank(rows, self.ring.field) if ncols else 0
        return free_dim - r

    def dims_table(self, d_max: int) -> list:
        return [self.dim(d) for d in range(d_max + 1)]

    def fitting_ideal(self) -> Ideal:
        """The 0-th Fitting ideal: all maximal minors of the presentation matrix."""
        r = len(self.target_shifts)
        cols = len(self.source_shifts)
        if cols < r:
            return Ideal(self.ring, [])
        gens = []
        for sel in combinations(range(cols), r):
            sub = [[self.matrix[i][j] for j in sel] for i in range(r)]
            gens.append(_poly_det(sub, self.ring))
        return Ideal(self.ring, [g for g in gens if not g.is_zero])

    def presentation_complex(self) -> FreeComplex:
        """The two-term complex F1 -> F0 in indices -1, 0."""
        terms = {0: self.target_shifts}
        diffs = {}
        if self.source_shifts:
            terms[-1] = self.source_shifts
            diffs[-1] = self.matrix
        return FreeComplex(self.ring, terms, diffs, check=False)

    def to_json(self, include_ring=True):
        out = {
            "target_shifts": list(self.target_shifts),
            "source_shifts": list(self.source_shifts),
            "matrix": [[str(e) for e in row] for row in self.matrix],
        }
        if include_ring:
            out = {"ring": self.ring.to_json(), **out}
        return out

    @staticmethod
    def from_json(obj, ring=None) -> "GradedModulePresentation":
        if not isinstance(obj, dict):
            raise InputError("module JSON must be an object")
        if obj.get("ring") is not None:
            ring = GradedPolyRing.from_json(obj["ring"])
        if ring is None:
            raise InputError("module JSON needs a ring (inline or from context)")
        try:
            return GradedModulePresentation(
                ring,
                obj.get("target_shifts", [0]),
                obj.get("source_shifts", []),
                obj.get("matrix", []),
            )
        except (TypeError, KeyError) as exc:
            raise InputError(f"bad module JSON: {exc}") from exc

    @staticmethod
    def cyclic(ring, gens, shift=0) -> "GradedModulePresentation":
        """R(-shift)/(gens) as a presentation."""
        gens = [ring.parse(g) if isinstance(g, str) else g for g in gens]
        gens = [g for g in gens if not g.is_zero]
        shifts = []
        for g in gens:
            d = g.homogeneous_codegree()
            if d is None:
                raise InputError(f"cyclic relation {g} is not homogeneous")
            shifts.append(shift + d)
        return GradedModulePresentation(ring, (shift,), tuple(shifts), (tuple(gens),))

    def __repr__(self):
        return (
            f"GradedModulePresentation({len(self.target_shifts)} gens, "
            f"{len(self.source_shifts)} relations)"
        )


def _poly_det(rows, ring) -> Polynomial:
    n = len(rows)
    if n == 0:
        return ring.one()
    if n == 1:
        return rows[0][0]
    det = ring.zero()
    for j in range(n):
        e = rows[0][j]
        if e.is_zero:
            continue
        minor = [[rows[i][k] for k in range(n) if k != j] for i in range(1, n)]
        sub = _poly_det(minor, ring)
        term = e * sub
        det = det + term if j % 2 == 0 else det - term
    return det
