"""Entropic uncertainty with a quantum memory under Pauli noise applied
directly, through the quantum switch, or through the quantum time-flip.

The package has two fully independent computation paths:

* a brute-force path (``channels``, ``superprocess``, ``uncertainty``) that
  evolves explicit 4x4 density matrices through Kraus operators, and
* a closed-form path (``analytic``) built on the Bell-diagonal correlation
  coefficients,

and a sweep engine (``scan``) plus CLI (``maeur``) that cross-check them
against each other while regenerating figure data as CSV.
"""

from .analytic import (
    AdvantageVerdict,
    BellDiagonalCoeffs,
    coeffs_single_use,
    coeffs_switch,
    coeffs_timeflip,
    saturation_predicate,
    switch_advantage,
    timeflip_advantage,
    uncertainty_closed_form,
)
from .channels import (
    KrausChannel,
    PauliChannel,
    ShrinkFactors,
    apply_channel,
    check_fujiwara_algoet,
    pauli_to_kraus,
    shrink_factors,
    transpose_channel,
)
from .matcore import (
    DEFAULT_TOL,
    PAULIS,
    bell_state,
    binary_entropy,
    hermitian_eigenvalues,
    kron,
    partial_trace_A,
    von_neumann_entropy,
)
from .scan import (
    CSV_COLUMNS,
    NoCrossover,
    ScanRow,
    SweepSpec,
    emit_csv,
    find_crossover,
    oracle_report,
    random_pauli_channel,
    read_csv,
    scan_simplex,
    simplex_grid,
    sweep_1d,
    verify_oracle_equivalence,
)
from .superprocess import (
    BlockDecomposition,
    ControlReadout,
    Superchannel,
    apply_superchannel,
    apply_to_memory,
    build_switch,
    build_timeflip,
    readout_control,
)
from .uncertainty import (
    MeasurementPair,
    UncertaintyReport,
    conditional_entropy,
    evaluate_maeur,
    maassen_uffink_bound,
    post_measurement_state,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
