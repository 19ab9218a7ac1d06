"""Double Jaynes-Cummings model: closed-form evolution and entanglement measures.

States are lists of nine complex amplitudes ordered c1..c5, d1..d4.
"""

from ._core import (
    DomainError,
    ModelParams,
    SubsystemParams,
    bell_phi,
    bell_psi,
    concurrences,
    death_revival_scan,
    drift,
    embed,
    evolve,
    geninv,
    invariant_E,
    jc_to_dissipative_time,
    oracle_evolve,
    random_state,
    sudden_death_onset,
    wedge_entanglement,
)

__all__ = [
    "DomainError",
    "ModelParams",
    "SubsystemParams",
    "bell_phi",
    "bell_psi",
    "concurrences",
    "death_revival_scan",
    "drift",
    "embed",
    "evolve",
    "geninv",
    "invariant_E",
    "jc_to_dissipative_time",
    "oracle_evolve",
    "random_state",
    "sudden_death_onset",
    "wedge_entanglement",
]
