"""Polynomial entanglement invariants for four-qubit pure states.

The package computes the degree-8 and degree-12 invariants S and T and the
degree-24 hyperdeterminant S**3 - 27*T**2 through an iterated lift of the
2x2 determinant, and applies them to exactly solvable four-site spin chains
(transverse-field Ising, XXZ/Heisenberg, Haldane-Shastry), to random-state
and random-matrix ensembles, and to thermal ensembles.
"""

from .errors import (
    ArityMismatch,
    BadRange,
    DegenerateJInvariant,
    HDet4Error,
    InvalidCoupling,
    NonOrthonormalBasis,
    NonUnitaryFactor,
    NotHermitian,
    OutOfOrderingRange,
    SingularAtZeroField,
    UnknownState,
)
from .invariants import (
    InvariantTriple,
    apply_local_unitary,
    concurrence,
    hdet2,
    hdet4_magnitude,
    invariants_of,
    j_invariant,
    lift_p4,
    normalize,
    random_su2,
    tangle_direct,
    tangle_via_lift,
    tensor_product,
)
from .poly import (
    QuarticBinomial,
    poly_add,
    poly_mul,
    quadratic_discriminant,
    quartic_hdet,
    quartic_st,
)
from .states import (
    FAMILIES,
    NAMED_STATES,
    ZERO_FAMILIES,
    family_arity,
    named_state,
    verstraete_invariants_closed_form,
    verstraete_state,
)
from .spectra import Level, SpectralDecomposition, eig_hermitian, ground_state
from .models import (
    ISING_ORDER_LAMBDA_MAX,
    heisenberg_energy,
    hs_dimerized_invariants_closed_form,
    hs_dimerized_state,
    hs_invariants_closed_form,
    hs_state,
    ising_branch_state,
    ising_eigenstate_analytic,
    ising_energies_analytic,
    ising_hamiltonian,
    ising_invariants_analytic,
    rvb_state,
    rvb_superposition,
    xxz_eigensystem_analytic,
    xxz_hamiltonian,
)
from .thermal import (
    SubspaceMinResult,
    minimize_over_subspace,
    thermal_invariant,
)
from .ensembles import (
    HDetStats,
    MATRIX_KINDS,
    STATE_KINDS,
    ensemble_hdet_stats,
    sample_matrix,
    sample_state,
)

__version__ = "0.1.0"

__all__ = [
    "ArityMismatch",
    "BadRange",
    "DegenerateJInvariant",
    "FAMILIES",
    "HDet4Error",
    "HDetStats",
    "ISING_ORDER_LAMBDA_MAX",
    "InvalidCoupling",
    "InvariantTriple",
    "Level",
    "MATRIX_KINDS",
    "NAMED_STATES",
    "NonOrthonormalBasis",
    "NonUnitaryFactor",
    "NotHermitian",
    "OutOfOrderingRange",
    "QuarticBinomial",
    "STATE_KINDS",
    "SingularAtZeroField",
    "SpectralDecomposition",
    "SubspaceMinResult",
    "UnknownState",
    "ZERO_FAMILIES",
    "apply_local_unitary",
    "concurrence",
    "eig_hermitian",
    "ensemble_hdet_stats",
    "family_arity",
    "ground_state",
    "hdet2",
    "hdet4_magnitude",
    "heisenberg_energy",
    "hs_dimerized_invariants_closed_form",
    "hs_dimerized_state",
    "hs_invariants_closed_form",
    "hs_state",
    "invariants_of",
    "ising_branch_state",
    "ising_eigenstate_analytic",
    "ising_energies_analytic",
    "ising_hamiltonian",
    "ising_invariants_analytic",
    "j_invariant",
    "lift_p4",
    "minimize_over_subspace",
    "named_state",
    "normalize",
    "poly_add",
    "poly_mul",
    "quadratic_discriminant",
    "quartic_hdet",
    "quartic_st",
    "random_su2",
    "rvb_state",
    "rvb_superposition",
    "sample_matrix",
    "sample_state",
    "tangle_direct",
    "tangle_via_lift",
    "tensor_product",
    "thermal_invariant",
    "verstraete_invariants_closed_form",
    "verstraete_state",
    "xxz_eigensystem_analytic",
    "xxz_hamiltonian",
]
