"""Entanglement transfer in a lossy two-cavity-plus-fiber network with
parity-deformed radiation fields.

Two atom qubits sit in separate leaky cavities joined by a lossy fiber mode.
All three field modes obey a parity-deformed Heisenberg algebra controlled by
Wigner parameters lambda_i; the dissipative dynamics in the single-excitation
sector has a closed-form solution in the dressed basis, against which an
independent fourth-order master-equation integrator is kept as an oracle.
"""

__version__ = "0.1.0"

from .algebra import (
    DeformedModeSpec,
    annihilator_matrix,
    creator_matrix,
    parity_matrix,
    symmetric_product_diag,
)
from .network import (
    NetworkParams,
    DressedBasis,
    assemble_hamiltonian,
    assemble_tensor_hamiltonian,
    project_single_excitation,
    diagonalize,
    bare_to_dressed,
    dressed_to_bare,
)
from .dynamics import (
    DecayRates,
    decay_rates,
    jump_operators,
    liouvillian,
    propagate_closed_form,
    integrate_oracle,
    oracle_trajectory,
    assert_valid_state,
)
from .observables import (
    TwoQubitState,
    PopulationRecord,
    two_qubit_state,
    concurrence,
    mode_populations,
)
from .scenarios import (
    DEFAULT_SAMPLES,
    PRESET_WINDOWS,
    ScenarioConfig,
    cavity_bell_initial,
    atom_cavity_bell_initial,
    custom_pure_initial,
    initial_state_density,
    figure_preset,
    uncontrolled,
)
from .runner import (
    COLUMNS,
    OracleDeviationError,
    RunConfig,
    TimeSeries,
    VerifyReport,
    simulate,
    run,
    sweep,
    verify,
    write_series,
)

__all__ = [
    "DeformedModeSpec",
    "annihilator_matrix",
    "creator_matrix",
    "parity_matrix",
    "symmetric_product_diag",
    "NetworkParams",
    "DressedBasis",
    "assemble_hamiltonian",
    "assemble_tensor_hamiltonian",
    "project_single_excitation",
    "diagonalize",
    "bare_to_dressed",
    "dressed_to_bare",
    "DecayRates",
    "decay_rates",
    "jump_operators",
    "liouvillian",
    "propagate_closed_form",
    "integrate_oracle",
    "oracle_trajectory",
    "assert_valid_state",
    "TwoQubitState",
    "PopulationRecord",
    "two_qubit_state",
    "concurrence",
    "mode_populations",
    "ScenarioConfig",
    "cavity_bell_initial",
    "atom_cavity_bell_initial",
    "custom_pure_initial",
    "initial_state_density",
    "figure_preset",
    "uncontrolled",
    "DEFAULT_SAMPLES",
    "PRESET_WINDOWS",
    "COLUMNS",
    "OracleDeviationError",
    "RunConfig",
    "TimeSeries",
    "VerifyReport",
    "simulate",
    "run",
    "sweep",
    "verify",
    "write_series",
]
