"""SL-invariant combs and entanglement invariants for qubits, qutrits and ququarts."""

from ._core import (
    Comb,
    DegeneratePivot,
    SamplerExhausted,
    ShapeMismatch,
    SizeCapExceeded,
    UnsupportedDimension,
    circ_product,
    comb_qubit,
    comb_spin1_order3,
    comb_spin1_order6,
    comb_spin32_order2,
    comb_spin32_order4,
    comb_trace_pairing,
    generator_basis,
    invariant,
    invariant_names,
    o_operator,
    operator_schmidt_decompose,
    orthogonalization_coefficient,
    orthogonalize,
    permutation_from_generators,
    random_pure_state,
    random_sl,
    sl_invariance_check,
    sn_twist,
    swap_operator,
    tabulation_deviations,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
