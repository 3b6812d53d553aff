"""Expected length of products of random reflections in the finite Coxeter
families A, B, D, I2(m) and in the r-colored permutation groups G(r,1,n).

Three independent routes to every expectation — closed formulas, exact
rational Markov evolution, and Monte Carlo — plus the cross-check suites
that hold them to exact (or stated-tolerance) agreement.
"""

from .elements import (
    DihedralElement,
    Family,
    Gens,
    GroupSpec,
    Measure,
    Permutation,
    SignedPermutation,
    enumerate_group,
    guard_limit,
    index_pairs,
    in_index_domain,
    multiply,
    reflections_of,
    simple_reflections_of,
)
from .errors import (
    CoxwalkError,
    DParityViolation,
    InvalidRank,
    OrderLimitExceeded,
    SpecMismatch,
    UnsupportedFamily,
)
from .lengths import (
    abs_length_A,
    abs_length_bfs,
    abs_length_dihedral,
    abs_length_table,
    b_inversion_count,
    coxeter_length,
    d_inversion_count,
    descent_count,
    dihedral_length_table,
    inversion_count,
)
from .closedform import (
    ExpectationResult,
    INFINITE,
    closed_form,
    expected_abslength_G_EH,
    expected_abslength_I2_S,
    expected_abslength_I2_T,
    expected_length_A_S_bm,
    expected_length_A_S_eriksen,
    expected_length_A_T,
    expected_length_B_T,
    expected_length_D_T,
    expected_length_I2_S_troili,
    expected_length_I2_T,
    formula_for,
    lemma_bd_v,
    pair_prob_A,
    pair_prob_B,
    pair_prob_D,
)
from .exactengine import (
    AntisymMatrix,
    DSpaceFunction,
    ExactDist,
    PairTable,
    apply_Q_A,
    apply_Q_BD,
    evolve_distribution,
    evolve_pairtable,
    expectation,
    iterate_distributions,
    iterate_pairtables,
    make_statistic,
    pair_probability,
)
from .montecarlo import SimResult, simulate, trial_choices

__version__ = "0.1.0"

__all__ = [
    "AntisymMatrix",
    "CoxwalkError",
    "DihedralElement",
    "DParityViolation",
    "DSpaceFunction",
    "ExactDist",
    "ExpectationResult",
    "Family",
    "Gens",
    "GroupSpec",
    "INFINITE",
    "InvalidRank",
    "Measure",
    "OrderLimitExceeded",
    "PairTable",
    "Permutation",
    "SignedPermutation",
    "SimResult",
    "SpecMismatch",
    "UnsupportedFamily",
    "abs_length_A",
    "abs_length_bfs",
    "abs_length_dihedral",
    "abs_length_table",
    "apply_Q_A",
    "apply_Q_BD",
    "b_inversion_count",
    "closed_form",
    "coxeter_length",
    "d_inversion_count",
    "descent_count",
    "dihedral_length_table",
    "enumerate_group",
    "evolve_distribution",
    "evolve_pairtable",
    "expectation",
    "expected_abslength_G_EH",
    "expected_abslength_I2_S",
    "expected_abslength_I2_T",
    "expected_length_A_S_bm",
    "expected_length_A_S_eriksen",
    "expected_length_A_T",
    "expected_length_B_T",
    "expected_length_D_T",
    "expected_length_I2_S_troili",
    "expected_length_I2_T",
    "formula_for",
    "guard_limit",
    "in_index_domain",
    "index_pairs",
    "inversion_count",
    "iterate_distributions",
    "iterate_pairtables",
    "lemma_bd_v",
    "make_statistic",
    "multiply",
    "pair_prob_A",
    "pair_prob_B",
    "pair_prob_D",
    "pair_probability",
    "reflections_of",
    "simple_reflections_of",
    "simulate",
    "trial_choices",
]
