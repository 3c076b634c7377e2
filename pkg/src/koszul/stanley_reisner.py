"""Simplicial complexes, Stanley-Reisner ideals, the complete-intersection
test, and the tower of odd-sphere stages that trims one face-ideal generator
at a time.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import InputError, InvariantViolation
from .fields import Q
from .groebner import Ideal, ZERO_RING
from .rings import GradedPolyRing
from .supports import is_regular_sequence


class SimplicialComplex:
    """Facet-presented complex on {1..m}; faces are implied, the empty face always present."""

    __slots__ = ("m", "facets")

    def __init__(self, m: int, facets):
        if not isinstance(m, int) or m < 0:
            raise InputError("vertex count must be a non-negative integer")
        sets = []
        for f in facets:
            f = frozenset(f)
            if not all(isinstance(i, int) and 1 <= i <= m for i in f):
                raise InputError(f"facet {sorted(f)} out of range 1..{m}")
            sets.append(f)
        # drop dominated facets (downward closure makes them redundant)
        maximal = [f for f in sets if not any(f < g for g in sets)]
        self.m = m
        self.facets = frozenset(maximal)

    def is_face(self, sigma) -> bool:
        sigma = frozenset(sigma)
        return not sigma or any(sigma <= f for f in self.facets)

    def dim(self) -> int:
        """dim K = max face size - 1; the empty complex {<>} has dimension -1."""
        return max((len(f) for f in self.facets), default=0) - 1

    @classmethod
    def full_simplex(cls, m: int) -> "SimplicialComplex":
        return cls(m, [range(1, m + 1)] if m else [])

    def is_full_simplex(self) -> bool:
        return self == SimplicialComplex.full_simplex(self.m)

    @classmethod
    def from_nonface_supports(cls, m: int, supports) -> "SimplicialComplex":
        """The complex whose faces are exactly the sets containing no given support."""
        supports = [frozenset(s) for s in supports]
        faces = []
        for mask in range(1 << m):
            sigma = frozenset(i + 1 for i in range(m) if mask >> i & 1)
            if not any(s <= sigma for s in supports):
                faces.append(sigma)
        face_set = set(faces)
        facets = [
            f
            for f in faces
            if not any((f | {v}) in face_set for v in range(1, m + 1) if v not in f)
        ]
        return cls(m, facets)

    def to_json(self):
        return {
            "m": self.m,
            "facets": [sorted(f) for f in sorted(self.facets, key=lambda f: (len(f), sorted(f)))],
        }

    @staticmethod
    def from_json(obj) -> "SimplicialComplex":
        if not isinstance(obj, dict) or "m" not in obj:
            raise InputError("complex JSON needs 'm' and 'facets'")
        return SimplicialComplex(obj["m"], obj.get("facets", []))

    def __eq__(self, other):
        return (
            isinstance(other, SimplicialComplex)
            and self.m == other.m
            and self.facets == other.facets
        )

    def __hash__(self):
        return hash((self.m, self.facets))

    def __repr__(self):
        return f"SimplicialComplex(m={self.m}, facets={[sorted(f) for f in self.facets]})"


def minimal_nonfaces(k: SimplicialComplex) -> list:
    """Supports of the inclusion-minimal non-faces, canonically sorted.

    The corresponding squarefree monomials minimally generate the face ideal.
    """
    out = []
    for size in range(1, k.m + 1):
        for combo in combinations(range(1, k.m + 1), size):
            sigma = frozenset(combo)
            if k.is_face(sigma):
                continue
            if all(k.is_face(sigma - {v}) for v in sigma):
                out.append(sigma)
    return sorted(out, key=lambda s: (len(s), sorted(s)))


def sr_ring(k: SimplicialComplex, field=Q) -> GradedPolyRing:
    return GradedPolyRing(field, [(f"x{i}", 2) for i in range(1, k.m + 1)])


def _support_monomial(ring, support):
    exps = tuple(1 if (i + 1) in support else 0 for i in range(ring.nvars))
    return ring.monomial(exps)


def sr_ideal(k: SimplicialComplex, field=Q) -> Ideal:
    ring = sr_ring(k, field)
    return Ideal(ring, [_support_monomial(ring, s) for s in minimal_nonfaces(k)])


@dataclass
class CompleteIntersectionResult:
    ci: bool
    sequence: list | None  # supports of the generators, in canonical order
    krull_dimension: int
    expected_dimension: int | None  # m - n when ci

    def sequence_strings(self, ring) -> list:
        return [str(_support_monomial(ring, s)) for s in self.sequence or []]


def is_complete_intersection(k: SimplicialComplex, field=Q, verify=False) -> CompleteIntersectionResult:
    """Disjoint-support test on the minimal face-ideal generators.

    Pairwise disjoint supports are necessary for the generators to form a
    regular sequence and, squarefree monomials being what they are, also
    sufficient.  The certificate carries the Krull dimension count m - n;
    `verify` reruns the Hilbert-series regularity oracle on the sequence.
    """
    gens = minimal_nonfaces(k)
    disjoint = all(
        not (a & b) for a, b in combinations(gens, 2)
    )
    ideal = sr_ideal(k, field)
    kdim = ideal.krull_dimension()
    if kdim is ZERO_RING:
        # only the empty complex on m = 0 vertices... the face ideal never
        # contains 1, so this cannot happen for a valid complex
        raise InvariantViolation("face ideal is the unit ideal")
    if not disjoint:
        return CompleteIntersectionResult(False, None, kdim, None)
    expected = k.m - len(gens)
    if kdim != expected:
        raise InvariantViolation(
            f"dimension count got {kdim}, expected m-n={expected}"
        )
    if verify:
        ring = ideal.ring
        cert = is_regular_sequence(ring, [_support_monomial(ring, s) for s in gens])
        if not cert.regular:
            raise InvariantViolation("disjoint supports but Hilbert oracle disagrees")
    return CompleteIntersectionResult(True, gens, kdim, expected)


@dataclass
class TowerStage:
    complex: SimplicialComplex
    removed_support: frozenset
    sphere_codegree: int


@dataclass
class SociTower:
    """Stages of odd-sphere fibrations trimming the face ideal one generator at a time."""

    stages: list

    def sphere_codegrees(self) -> list:
        return [s.sphere_codegree for s in self.stages]

    def to_json(self, ring=None):
        out = []
        for s in self.stages:
            exps = sorted(s.removed_support)
            entry = {
                "removed_generator": "*".join(f"x{i}" for i in exps),
                "sphere_codegree": s.sphere_codegree,
                "facets": s.complex.to_json()["facets"],
            }
            out.append(entry)
        return {"stages": out}


def soci_tower(k: SimplicialComplex, field=Q) -> SociTower:
    """Remove the last minimal generator at each stage; record the odd sphere.

    Each stage replaces K by the complex of the remaining generators, whose
    sphere has codegree 2|support| + 1; the tower ends at the full simplex.
    """
    res = is_complete_intersection(k, field)
    if not res.ci:
        raise InputError("face ideal is not generated by a regular sequence")
    gens = list(res.sequence or [])
    stages = []
    while gens:
        removed = gens.pop()  # canonical order puts the stage generator last
        nxt = SimplicialComplex.from_nonface_supports(k.m, gens)
        if minimal_nonfaces(nxt) != sorted(gens, key=lambda s: (len(s), sorted(s))):
            raise InvariantViolation("tower stage changed the remaining generators")
        stages.append(TowerStage(nxt, removed, 2 * len(removed) + 1))
    if stages and not stages[-1].complex.is_full_simplex():
        raise InvariantViolation("tower did not end at the full simplex")
    if not stages and not k.is_full_simplex():
        raise InvariantViolation("empty tower requires the full simplex")
    return SociTower(stages)


def dj_cohomology(k: SimplicialComplex, field=Q):
    """Presentation and Hilbert series of the Stanley-Reisner ring, which is
    the cohomology of the associated Davis-Januszkiewicz space."""
    ideal = sr_ideal(k, field)
    return ideal, ideal.hilbert_series()
