"""End-to-end algorithm drivers: teleportation, Grover, Shor, cluster model."""

from .cluster import (
    ClusterCnotOutcome,
    ClusterTransportOutcome,
    cluster_cnot,
    cluster_cnot_branches,
    cluster_prepare,
    cluster_transport,
    cluster_transport_branches,
)
from .grover import (
    GroverProblem,
    GroverResult,
    default_iterations,
    grover_diffusion,
    grover_oracle,
    grover_phase_oracle,
    grover_search,
)
from .shor import (
    QftMethod,
    ShorMethod,
    ShorResult,
    ShorRun,
    continued_fraction_period,
    dft_matrix,
    modexp_load,
    outcome_distribution,
    qft,
    shor_factor,
)
from .teleport import (
    TeleportOutcome,
    teleport_bell,
    teleport_bell_branches,
    teleport_one,
    teleport_one_branches,
    teleport_two,
    teleport_two_branches,
)

__all__ = [
    "ClusterCnotOutcome",
    "ClusterTransportOutcome",
    "GroverProblem",
    "GroverResult",
    "QftMethod",
    "ShorMethod",
    "ShorResult",
    "ShorRun",
    "TeleportOutcome",
    "cluster_cnot",
    "cluster_cnot_branches",
    "cluster_prepare",
    "cluster_transport",
    "cluster_transport_branches",
    "continued_fraction_period",
    "default_iterations",
    "dft_matrix",
    "grover_diffusion",
    "grover_oracle",
    "grover_phase_oracle",
    "grover_search",
    "modexp_load",
    "outcome_distribution",
    "qft",
    "shor_factor",
    "teleport_bell",
    "teleport_bell_branches",
    "teleport_one",
    "teleport_one_branches",
    "teleport_two",
    "teleport_two_branches",
]
