"""FastAPI surface over the handlers.

Run with:  uvicorn fibalg.service.app:app
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from ..core import (
    InadmissibleVacuumError,
    NoAdmissibleVacuumError,
    NonPhysicalSequenceError,
    TruncationError,
)
from . import handlers
from .models import (
    AdmissibleRequest,
    AdmissibleResponse,
    ChainRequest,
    ChainResponse,
    ClassifyRequest,
    ClassifyResponse,
    RegionsRequest,
    RegionsResponse,
    RepRequest,
    RepResponse,
    SpectrumRequest,
    SpectrumResponse,
)

app = FastAPI(
    title="fibalg",
    description="Two-step ladder algebras: representations, spectra, "
                "stability and vacuum admissibility.",
    version="0.1.0",
)

_DOMAIN_ERRORS = (ValueError, TruncationError, NonPhysicalSequenceError,
                  NoAdmissibleVacuumError, InadmissibleVacuumError)


def _guard(fn, req):
    try:
        return fn(req)
    except _DOMAIN_ERRORS as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}


@app.post("/classify", response_model=ClassifyResponse)
def classify(req: ClassifyRequest) -> ClassifyResponse:
    return _guard(handlers.handle_classify, req)


@app.post("/spectrum", response_model=SpectrumResponse)
def spectrum(req: SpectrumRequest) -> SpectrumResponse:
    return _guard(handlers.handle_spectrum, req)


@app.post("/rep", response_model=RepResponse)
def rep(req: RepRequest) -> RepResponse:
    return _guard(handlers.handle_rep, req)


@app.post("/admissible", response_model=AdmissibleResponse)
def admissible(req: AdmissibleRequest) -> AdmissibleResponse:
    return _guard(handlers.handle_admissible, req)


@app.post("/chain", response_model=ChainResponse)
def chain(req: ChainRequest) -> ChainResponse:
    return _guard(handlers.handle_chain, req)


@app.post("/regions", response_model=RegionsResponse)
def regions(req: RegionsRequest) -> RegionsResponse:
    return _guard(handlers.handle_regions, req)
