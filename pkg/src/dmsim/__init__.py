"""Density-matrix quantum computer simulator.

Core layers: multi-qubit state vectors (:mod:`dmsim.qstate`), Pauli operator
machinery (:mod:`dmsim.pauli`), logic gates (:mod:`dmsim.gates`), density
matrices and their functionals (:mod:`dmsim.density`), special entangled
states (:mod:`dmsim.states`), and algorithm drivers
(:mod:`dmsim.algorithms`).  A FastAPI service (:mod:`dmsim.service`) and a
thin CLI (:mod:`dmsim.cli`) expose the demos with JSON output.
"""

from .density import (
    DensityMatrix,
    MeasurementRecord,
    correlation_tensor,
    entropy,
    evolve,
    fidelity,
    from_state,
    maximally_mixed,
    measure,
    measure_branch,
    polarization,
    ptrace,
    ptrace_direct,
    purity,
)
from .gates import (
    cnot,
    controlled_op,
    controlled_x,
    controlled_y,
    cphase,
    crot,
    had,
    had_mask,
    hadamard1,
    hall,
    swap,
    three_op,
    toffoli,
    two_op,
)
from .pauli import (
    PauliCoefficients,
    PauliIndex,
    QOperator,
    identity,
    pauli_coefficients,
    proj_general,
    projector,
    rot_axis,
    rot_to,
    sigma,
    sp,
    tensor_op,
)
from .qstate import BasisKind, StateVector, inner, ket, ketv, random_state, tensor_state
from .states import bell, ghz, uniform, werner

__version__ = "0.1.0"

__all__ = [
    "BasisKind",
    "DensityMatrix",
    "MeasurementRecord",
    "PauliCoefficients",
    "PauliIndex",
    "QOperator",
    "StateVector",
    "__version__",
    "bell",
    "cnot",
    "controlled_op",
    "controlled_x",
    "controlled_y",
    "correlation_tensor",
    "cphase",
    "crot",
    "entropy",
    "evolve",
    "fidelity",
    "from_state",
    "ghz",
    "had",
    "had_mask",
    "hadamard1",
    "hall",
    "identity",
    "inner",
    "ket",
    "ketv",
    "maximally_mixed",
    "measure",
    "measure_branch",
    "pauli_coefficients",
    "polarization",
    "proj_general",
    "projector",
    "ptrace",
    "ptrace_direct",
    "purity",
    "random_state",
    "rot_axis",
    "rot_to",
    "sigma",
    "sp",
    "swap",
    "tensor_op",
    "tensor_state",
    "three_op",
    "toffoli",
    "two_op",
    "uniform",
    "werner",
]
