"""Pydantic request/response models: the wire format of the service and CLI.

Decoders turn validated payloads into core objects, raising InputError for
anything semantic (shape errors never get past pydantic).
"""
from __future__ import annotations

from typing import Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field

from .complexes import FreeComplex, GradedModulePresentation, HomologyTable
from .dgalgebra import DGAlgebra
from .errors import InputError
from .fields import Q, field_from_json
from .groebner import Ideal
from .rings import GradedPolyRing
from .stanley_reisner import SimplicialComplex


class StrictModel(BaseModel):
    model_config = ConfigDict(extra="forbid")


class FpModel(StrictModel):
    Fp: int


FieldModel = Union[Literal["Q"], FpModel]


class VarModel(StrictModel):
    name: str
    codegree: int


class RingModel(StrictModel):
    field: FieldModel
    vars: list[VarModel]


class IdealModel(StrictModel):
    ring: Optional[RingModel] = None
    gens: list[str] = Field(default_factory=list)


class ModuleModel(StrictModel):
    ring: Optional[RingModel] = None
    target_shifts: list[int] = Field(default_factory=lambda: [0])
    source_shifts: list[int] = Field(default_factory=list)
    matrix: list[list[str]] = Field(default_factory=list)


class ComplexModel(StrictModel):
    ring: Optional[RingModel] = None
    terms: dict[str, list[int]] = Field(default_factory=dict)
    diffs: dict[str, list[list[str]]] = Field(default_factory=dict)


class DGGenModel(StrictModel):
    name: str
    codegree: int


class DGAlgebraModel(StrictModel):
    field: FieldModel = "Q"
    gens: list[DGGenModel]
    d: dict[str, str] = Field(default_factory=dict)


class SimplicialModel(StrictModel):
    m: int
    facets: list[list[int]] = Field(default_factory=list)


# -- decoders


def decode_field(spec: FieldModel):
    return field_from_json("Q" if spec == "Q" else {"Fp": spec.Fp})


def decode_ring(model: RingModel) -> GradedPolyRing:
    return GradedPolyRing(
        decode_field(model.field), [(v.name, v.codegree) for v in model.vars]
    )


def _resolve_ring(inline: Optional[RingModel], fallback: Optional[RingModel], what: str):
    if inline is not None:
        return decode_ring(inline)
    if fallback is not None:
        return decode_ring(fallback)
    raise InputError(f"{what} needs a ring, inline or via the 'ring' input")


def decode_ideal(model: IdealModel, ring: Optional[RingModel] = None) -> Ideal:
    r = _resolve_ring(model.ring, ring, "ideal")
    return Ideal(r, [r.parse(g) for g in model.gens])


def decode_module(model: ModuleModel, ring: Optional[RingModel] = None) -> GradedModulePresentation:
    r = _resolve_ring(model.ring, ring, "module")
    return GradedModulePresentation(
        r, model.target_shifts, model.source_shifts, model.matrix
    )


def decode_complex(model: ComplexModel, ring: Optional[RingModel] = None) -> FreeComplex:
    r = _resolve_ring(model.ring, ring, "complex")
    payload = {"terms": model.terms, "diffs": model.diffs}
    return FreeComplex.from_json(payload, ring=r)


def decode_dg(model: DGAlgebraModel) -> DGAlgebra:
    return DGAlgebra(
        decode_field(model.field),
        [(g.name, g.codegree) for g in model.gens],
        model.d,
    )


def decode_simplicial(model: SimplicialModel) -> SimplicialComplex:
    return SimplicialComplex(model.m, model.facets)


# -- response models


class HomologyEntryModel(StrictModel):
    index: int
    codegree: int
    dim: int


class HomologyModel(StrictModel):
    d_max: int
    entries: list[HomologyEntryModel]

    @staticmethod
    def from_table(table: HomologyTable) -> "HomologyModel":
        return HomologyModel(
            d_max=table.d_max,
            entries=[
                HomologyEntryModel(index=n, codegree=d, dim=v)
                for (n, d), v in sorted(table.entries.items())
            ],
        )


class SupportResponse(StrictModel):
    minimal_primes: list[list[int]]
    closure: list[list[int]]


class KoszulResponse(StrictModel):
    complex: dict
    homology: HomologyModel


class RegseqResponse(StrictModel):
    regular: bool
    quotient_series: str
    expected_series: str
    quotient_expansion: list[int]
    expected_expansion: list[int]
    koszul_check: Optional[bool] = None


class TorsionResponse(StrictModel):
    d_max: int
    dims: list[int]


class SrCiResponse(StrictModel):
    ci: bool
    sequence: Optional[list[str]] = None


class TowerStageModel(StrictModel):
    removed_generator: str
    sphere_codegree: int
    facets: list[list[int]]


class SociTowerResponse(StrictModel):
    stages: list[TowerStageModel]


class DjResponse(StrictModel):
    ideal_gens: list[str]
    series: str
    expansion: list[int]


class HilbertResponse(StrictModel):
    series: str
    expansion: list[int]


class ThickClassifyResponse(StrictModel):
    minimal_primes: list[list[int]]
    closure: list[list[int]]


class ThickGeneratorResponse(StrictModel):
    complex: dict


class AdamsResponse(StrictModel):
    bound: Optional[Union[int, Literal["NotFound"]]] = None
    n_max: int
    d_max: int
    quotient: Optional[int] = None
    quotient_homology: Optional[HomologyModel] = None


class PoCheckResponse(StrictModel):
    ok: bool
    n: int
    d_max: int


class FfOrderResponse(StrictModel):
    order: Literal["XleqY", "YleqX", "Both", "Incomparable"]


class DgCohomologyResponse(StrictModel):
    d_max: int
    dims: list[int]


class ErrorResponse(StrictModel):
    error: dict


# -- request models


class SupportRequest(StrictModel):
    module: Optional[ModuleModel] = None
    complex: Optional[ComplexModel] = None
    ring: Optional[RingModel] = None


class KoszulRequest(StrictModel):
    ring: RingModel
    elements: list[str]
    module: Optional[ModuleModel] = None
    d_max: int = 30


class RegseqRequest(StrictModel):
    ring: RingModel
    elements: list[str]
    ideal: Optional[IdealModel] = None
    koszul_check: bool = False
    expand: int = 20


class TorsionRequest(StrictModel):
    module: ModuleModel
    ideal: IdealModel
    ring: Optional[RingModel] = None
    d_max: int = 30


class SrCiRequest(StrictModel):
    complex: SimplicialModel
    field: FieldModel = "Q"


class SociTowerRequest(StrictModel):
    complex: SimplicialModel
    field: FieldModel = "Q"


class DjRequest(StrictModel):
    complex: SimplicialModel
    field: FieldModel = "Q"
    expand: int = 20


class HilbertRequest(StrictModel):
    ideal: IdealModel
    ring: Optional[RingModel] = None
    expand: int = 30


class ThickClassifyRequest(StrictModel):
    generators: list[ComplexModel] = Field(default_factory=list)
    ring: Optional[RingModel] = None


class ThickGeneratorRequest(StrictModel):
    ring: RingModel
    subset: list[list[int]]


class AdamsRequest(StrictModel):
    ring: RingModel
    sequence: list[str]
    module: Optional[ComplexModel] = None
    n_max: int = 8
    d_max: int = 30
    quotient: Optional[int] = None


class PoCheckRequest(StrictModel):
    ring: RingModel
    sequence: list[str]
    n: int
    d_max: int = 30


class FfOrderRequest(StrictModel):
    x: ComplexModel
    y: ComplexModel
    ring: Optional[RingModel] = None


class DgCohomologyRequest(StrictModel):
    algebra: DGAlgebraModel
    d_max: int = 30


COMMAND_SCHEMAS = {
    "support": (SupportRequest, SupportResponse),
    "koszul": (KoszulRequest, KoszulResponse),
    "regseq": (RegseqRequest, RegseqResponse),
    "torsion": (TorsionRequest, TorsionResponse),
    "sr-ci": (SrCiRequest, SrCiResponse),
    "soci-tower": (SociTowerRequest, SociTowerResponse),
    "dj": (DjRequest, DjResponse),
    "hilbert": (HilbertRequest, HilbertResponse),
    "thick-classify": (ThickClassifyRequest, ThickClassifyResponse),
    "thick-generator": (ThickGeneratorRequest, ThickGeneratorResponse),
    "adams": (AdamsRequest, AdamsResponse),
    "po-check": (PoCheckRequest, PoCheckResponse),
    "ff-order": (FfOrderRequest, FfOrderResponse),
    "dg-cohomology": (DgCohomologyRequest, DgCohomologyResponse),
}


def write_schema_files(directory) -> list:
    """Publish one JSON schema file per command response, plus the error shape."""
    import json
    import pathlib

    directory = pathlib.Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for name, (_req, resp) in sorted(COMMAND_SCHEMAS.items()):
        path = directory / f"{name}.response.json"
        path.write_text(json.dumps(resp.model_json_schema(), indent=2, sort_keys=True) + "\n")
        written.append(path)
    path = directory / "error.response.json"
    path.write_text(
        json.dumps(ErrorResponse.model_json_schema(), indent=2, sort_keys=True) + "\n"
    )
    written.append(path)
    return written
