"""FastAPI service wrapping the library; one POST endpoint per operation.

The handler functions are plain request-model -> response-model functions,
so the CLI can dispatch through them in-process and stay byte-deterministic;
run the server with `uvicorn koszul.service:app`.
"""
from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse

from . import schemas as S
from .errors import InputError, InvariantViolation
from .stanley_reisner import (
    dj_cohomology,
    is_complete_intersection,
    soci_tower,
    sr_ideal,
)
from .supports import (
    SpecSubset,
    is_regular_sequence,
    koszul_complex,
    koszul_regularity_check,
    support_complex,
    support_module,
    torsion_submodule_dims,
)
from .thick import (
    AugmentedAlgebraModel,
    adams_injectivity_bound,
    classify_thick,
    ff_order_check,
    koszul_generator_for,
    po_triangle_check,
)


def run_support(req: S.SupportRequest) -> S.SupportResponse:
    if (req.module is None) == (req.complex is None):
        raise InputError("support wants exactly one of 'module' or 'complex'")
    if req.module is not None:
        subset = support_module(S.decode_module(req.module, req.ring))
    else:
        subset = support_complex(S.decode_complex(req.complex, req.ring))
    return S.SupportResponse(
        minimal_primes=[sorted(p) for p in subset.minimal_primes()],
        closure=subset.to_json(),
    )


def run_koszul(req: S.KoszulRequest) -> S.KoszulResponse:
    ring = S.decode_ring(req.ring)
    module = S.decode_module(req.module, req.ring) if req.module else None
    k = koszul_complex(ring, req.elements, module)
    return S.KoszulResponse(
        complex=k.to_json(),
        homology=S.HomologyModel.from_table(k.homology_table(req.d_max)),
    )


def run_regseq(req: S.RegseqRequest) -> S.RegseqResponse:
    ring = S.decode_ring(req.ring)
    ambient = S.decode_ideal(req.ideal, req.ring) if req.ideal else None
    cert = is_regular_sequence(ring, req.elements, ambient)
    kc = None
    if req.koszul_check:
        kc = koszul_regularity_check(ring, req.elements, ambient)
    return S.RegseqResponse(
        regular=cert.regular,
        quotient_series=str(cert.quotient_series),
        expected_series=str(cert.expected_series),
        quotient_expansion=cert.quotient_series.expansion(req.expand),
        expected_expansion=cert.expected_series.expansion(req.expand),
        koszul_check=kc,
    )


def run_torsion(req: S.TorsionRequest) -> S.TorsionResponse:
    module = S.decode_module(req.module, req.ring)
    ideal = S.decode_ideal(req.ideal, req.ring or req.module.ring)
    dims = torsion_submodule_dims(module, ideal, req.d_max)
    return S.TorsionResponse(d_max=req.d_max, dims=dims)


def run_sr_ci(req: S.SrCiRequest) -> S.SrCiResponse:
    k = S.decode_simplicial(req.complex)
    field = S.decode_field(req.field)
    res = is_complete_intersection(k, field, verify=True)
    if not res.ci:
        return S.SrCiResponse(ci=False, sequence=None)
    ring = sr_ideal(k, field).ring
    return S.SrCiResponse(ci=True, sequence=res.sequence_strings(ring))


def run_soci_tower(req: S.SociTowerRequest) -> S.SociTowerResponse:
    k = S.decode_simplicial(req.complex)
    tower = soci_tower(k, S.decode_field(req.field))
    payload = tower.to_json()
    return S.SociTowerResponse(
        stages=[S.TowerStageModel(**stage) for stage in payload["stages"]]
    )


def run_dj(req: S.DjRequest) -> S.DjResponse:
    k = S.decode_simplicial(req.complex)
    ideal, series = dj_cohomology(k, S.decode_field(req.field))
    return S.DjResponse(
        ideal_gens=[str(g) for g in ideal.gens],
        series=str(series),
        expansion=series.expansion(req.expand),
    )


def run_hilbert(req: S.HilbertRequest) -> S.HilbertResponse:
    ideal = S.decode_ideal(req.ideal, req.ring)
    series = ideal.hilbert_series()
    return S.HilbertResponse(series=str(series), expansion=series.expansion(req.expand))


def run_thick_classify(req: S.ThickClassifyRequest) -> S.ThickClassifyResponse:
    ring = None
    complexes = []
    for c in req.generators:
        x = S.decode_complex(c, req.ring)
        if ring is None:
            ring = x.ring
        complexes.append(x)
    if ring is None:
        if req.ring is None:
            raise InputError("thick-classify with no generators needs a ring")
        ring = S.decode_ring(req.ring)
    subset = classify_thick(ring, complexes)
    return S.ThickClassifyResponse(
        minimal_primes=[sorted(p) for p in subset.minimal_primes()],
        closure=subset.to_json(),
    )


def run_thick_generator(req: S.ThickGeneratorRequest) -> S.ThickGeneratorResponse:
    ring = S.decode_ring(req.ring)
    subset = SpecSubset.from_json(ring.nvars, req.subset)
    return S.ThickGeneratorResponse(complex=koszul_generator_for(ring, subset).to_json())


def run_adams(req: S.AdamsRequest) -> S.AdamsResponse:
    ring = S.decode_ring(req.ring)
    model = AugmentedAlgebraModel(ring, req.sequence)
    if req.module is None and req.quotient is None:
        raise InputError("adams wants a 'module' (for the bound) or 'quotient' stage")
    bound = None
    if req.module is not None:
        m = S.decode_complex(req.module, req.ring)
        found = adams_injectivity_bound(model, m, req.n_max, req.d_max)
        bound = found if found is not None else "NotFound"
    homology = None
    if req.quotient is not None:
        if req.quotient < 1:
            raise InputError("quotient stage wants n >= 1")
        homology = S.HomologyModel.from_table(
            model.quotient(req.quotient).homology_table(req.d_max)
        )
    return S.AdamsResponse(
        bound=bound,
        n_max=req.n_max,
        d_max=req.d_max,
        quotient=req.quotient,
        quotient_homology=homology,
    )


def run_po_check(req: S.PoCheckRequest) -> S.PoCheckResponse:
    ring = S.decode_ring(req.ring)
    model = AugmentedAlgebraModel(ring, req.sequence)
    return S.PoCheckResponse(
        ok=po_triangle_check(model, req.n, req.d_max), n=req.n, d_max=req.d_max
    )


def run_ff_order(req: S.FfOrderRequest) -> S.FfOrderResponse:
    x = S.decode_complex(req.x, req.ring)
    y = S.decode_complex(req.y, req.ring)
    return S.FfOrderResponse(order=ff_order_check(x, y))


def run_dg_cohomology(req: S.DgCohomologyRequest) -> S.DgCohomologyResponse:
    algebra = S.decode_dg(req.algebra)
    return S.DgCohomologyResponse(
        d_max=req.d_max, dims=algebra.cohomology_dims(req.d_max)
    )


HANDLERS = {
    "support": run_support,
    "koszul": run_koszul,
    "regseq": run_regseq,
    "torsion": run_torsion,
    "sr-ci": run_sr_ci,
    "soci-tower": run_soci_tower,
    "dj": run_dj,
    "hilbert": run_hilbert,
    "thick-classify": run_thick_classify,
    "thick-generator": run_thick_generator,
    "adams": run_adams,
    "po-check": run_po_check,
    "ff-order": run_ff_order,
    "dg-cohomology": run_dg_cohomology,
}


app = FastAPI(
    title="koszul",
    description="Exact graded-ring computations: supports, Koszul complexes, "
    "Stanley-Reisner towers, thick-subcategory classification.",
    version="0.1.0",
)


@app.exception_handler(InputError)
async def _input_error(_request: Request, exc: InputError):
    return JSONResponse(status_code=400, content={"error": {"message": str(exc)}})


@app.exception_handler(InvariantViolation)
async def _invariant_error(_request: Request, exc: InvariantViolation):
    return JSONResponse(status_code=500, content={"error": {"message": str(exc)}})


@app.exception_handler(RequestValidationError)
async def _validation_error(_request: Request, exc: RequestValidationError):
    return JSONResponse(
        status_code=422, content={"error": {"message": "invalid request", "detail": exc.errors()}}
    )


def _register(name, handler, req_model, resp_model):
    def endpoint(req):
        return handler(req)

    # set the annotation directly: postponed-evaluation strings would not
    # resolve inside this closure
    endpoint.__annotations__ = {"req": req_model, "return": resp_model}
    endpoint.__name__ = name.replace("-", "_")
    app.post(
        f"/{name}", response_model=resp_model, response_model_exclude_none=True, name=name
    )(endpoint)
    return endpoint


for _name, _handler in HANDLERS.items():
    _req, _resp = S.COMMAND_SCHEMAS[_name]
    _register(_name, _handler, _req, _resp)


@app.get("/")
def index():
    return {"service": "koszul", "commands": sorted(HANDLERS)}
