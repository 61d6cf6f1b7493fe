"""Pydantic request/response models for the simulation service.

Every endpoint answers with the same envelope: the command name, the echoed
parameters, the seed that was used, and a results object.  Complex numbers
are serialized as [re, im] pairs throughout.
"""

from __future__ import annotations

from typing import Any, Literal

from pydantic import BaseModel, Field, model_validator


class RunOutput(BaseModel):
    command: str
    params: dict[str, Any]
    seed: int
    results: dict[str, Any]


class BellRequest(BaseModel):
    a: int = Field(0, ge=0, le=1)
    b: int = Field(0, ge=0, le=1)
    seed: int = 0


class GhzRequest(BaseModel):
    a: int = Field(0, ge=0, le=1)
    b: int = Field(0, ge=0, le=1)
    c: int = Field(0, ge=0, le=1)
    seed: int = 0


class WernerRequest(BaseModel):
    model_config = {"populate_by_name": True}

    lam: float = Field(alias="lambda", ge=0.0, le=1.0)
    a: int = Field(0, ge=0, le=1)
    b: int = Field(0, ge=0, le=1)
    seed: int = 0


class TeleportRequest(BaseModel):
    variant: Literal["one", "bell", "two"]
    seed: int = 0
    branch: list[int] | None = None
    a: int = Field(0, ge=0, le=1)
    b: int = Field(0, ge=0, le=1)


class GroverRequest(BaseModel):
    n: int = Field(ge=1, le=12)
    marked: list[int] = Field(min_length=1)
    iters: int | None = Field(None, ge=0)
    seed: int = 0


class ShorRequest(BaseModel):
    N: int = Field(ge=3, le=64)
    x: int = Field(ge=2)
    method: Literal["density", "statevector", "dft"] = "dft"
    runs: int = Field(1, ge=1, le=10000)
    n1: int | None = Field(None, ge=1, le=12)
    n2: int | None = Field(None, ge=1, le=8)
    store_register2: bool = True
    seed: int = 0


class ClusterTransportRequest(BaseModel):
    seed: int = 0
    branch: int | None = Field(None, ge=0, le=1)


class ClusterCnotRequest(BaseModel):
    seed: int = 0
    branches: list[int] | None = None


class PtraceCheckRequest(BaseModel):
    n: int = Field(3, ge=1, le=6)
    trials: int = Field(100, ge=1, le=100000)
    seed: int = 0


class DensityMatrixPayload(BaseModel):
    """Explicit density matrix: dimension 2**n_qubits, row-major [re, im]."""

    n_qubits: int = Field(ge=0, le=10)
    entries: list[list[float]]


class StateInput(BaseModel):
    """A state given either by name (e.g. "bell:01", "werner:0.5:00",
    "uniform:3", "ghz:000", "ket:101") or as an explicit matrix."""

    spec: str | None = None
    matrix: DensityMatrixPayload | None = None

    @model_validator(mode="after")
    def _exactly_one(self) -> "StateInput":
        if (self.spec is None) == (self.matrix is None):
            raise ValueError("provide exactly one of 'spec' or 'matrix'")
        return self


class EntropyRequest(BaseModel):
    state: StateInput
    seed: int = 0


class FidelityRequest(BaseModel):
    state1: StateInput
    state2: StateInput
    seed: int = 0
