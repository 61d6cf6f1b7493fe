"""FastAPI application exposing the simulator as a stateless JSON service."""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .. import __version__
from . import handlers
from .models import (
    BellRequest,
    ClusterCnotRequest,
    ClusterTransportRequest,
    EntropyRequest,
    FidelityRequest,
    GhzRequest,
    GroverRequest,
    PtraceCheckRequest,
    RunOutput,
    ShorRequest,
    TeleportRequest,
    WernerRequest,
)

app = FastAPI(
    title="dmsim",
    version=__version__,
    description="Density-matrix quantum computer simulation service",
)


def _run(handler, request) -> RunOutput:
    try:
        return handler(request)
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc


@app.get("/health")
def health() -> dict:
    return {"status": "ok", "version": __version__}


@app.post("/bell", response_model=RunOutput)
def bell(request: BellRequest) -> RunOutput:
    return _run(handlers.run_bell, request)


@app.post("/ghz", response_model=RunOutput)
def ghz(request: GhzRequest) -> RunOutput:
    return _run(handlers.run_ghz, request)


@app.post("/werner", response_model=RunOutput)
def werner(request: WernerRequest) -> RunOutput:
    return _run(handlers.run_werner, request)


@app.post("/teleport", response_model=RunOutput)
def teleport(request: TeleportRequest) -> RunOutput:
    return _run(handlers.run_teleport, request)


@app.post("/grover", response_model=RunOutput)
def grover(request: GroverRequest) -> RunOutput:
    return _run(handlers.run_grover, request)


@app.post("/shor", response_model=RunOutput)
def shor(request: ShorRequest) -> RunOutput:
    return _run(handlers.run_shor, request)


@app.post("/cluster/transport", response_model=RunOutput)
def cluster_transport(request: ClusterTransportRequest) -> RunOutput:
    return _run(handlers.run_cluster_transport, request)


@app.post("/cluster/cnot", response_model=RunOutput)
def cluster_cnot(request: ClusterCnotRequest) -> RunOutput:
    return _run(handlers.run_cluster_cnot, request)


@app.post("/ptrace-check", response_model=RunOutput)
def ptrace_check(request: PtraceCheckRequest) -> RunOutput:
    return _run(handlers.run_ptrace_check, request)


@app.post("/entropy", response_model=RunOutput)
def entropy(request: EntropyRequest) -> RunOutput:
    return _run(handlers.run_entropy, request)


@app.post("/fidelity", response_model=RunOutput)
def fidelity(request: FidelityRequest) -> RunOutput:
    return _run(handlers.run_fidelity, request)
