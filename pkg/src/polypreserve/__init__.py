"""Polynomials that map nonnegative matrices to nonnegative matrices."""

from .matrix import (
    CirculantSpec,
    JordanSpec,
    MatrixQ,
    circulant,
    cyclic_shift,
    embed_diag,
    eval_on_jordan,
    eval_on_scaled_circulant,
    jordan_block,
    mat_poly_eval,
)
from .membership import (
    MEMBER,
    NON_MEMBER,
    UNKNOWN,
    ConditionEntry,
    Verdict,
    classify,
    decide_low_degree,
    is_nonneg_on_halfline,
    run_battery,
)
from .poly import Poly, ResidueDecomposition, residue_decompose, residue_part, roots_of_unity_part
from .search import (
    SearchConfig,
    WitnessResult,
    circulant_witness,
    descent_search,
    jordan_witness,
    random_search,
)
from .spectra import Spectrum, check_jll, check_trace_conditions

__version__ = "0.1.0"
