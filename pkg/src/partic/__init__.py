"""Exact computations in the partic algebra, a quotient of the local plactic algebra.

The package provides the monomial normal form and graded basis enumeration,
a brute-force rewriting oracle that certifies them at desk scale, the
faithful action on bosonic particle configurations with its input/output
labelling, the graded center, and relation checks for the affine variant.
"""
from __future__ import annotations

from .affine import (
    AffineConfiguration,
    AffineWord,
    affine_act_gen,
    affine_act_word,
    affine_configurations,
    affine_relation_instances,
    find_relation_counterexample,
    verify_relation_on_module,
)
from .center import (
    center_basis_in_degree,
    central_candidate,
    commutes_with_generators,
    expected_center_dimension,
    nullspace,
)
from .core import (
    AlgebraElement,
    LinearCombination,
    MultiDegree,
    NormalMonomial,
    Word,
    check_rank,
    multidegree,
    multidegrees_up_to,
    nm_to_word,
    normal_condition,
)
from .normal_form import (
    element_product,
    enumerate_basis,
    gen_element,
    gen_monomial,
    left_mul_gen,
    nm_product,
    normalize,
    normalize_right_to_left,
    right_mul_gen,
)
from .particles import (
    ANNIHILATED,
    Configuration,
    IoLabel,
    ModuleElement,
    act_element,
    act_gen,
    act_word,
    configurations,
    faithfulness_check,
    io_label,
    label_mul,
    label_mul_via_monomial,
    min_input,
    monomial_from_io,
    output_of,
)
from .rewriting import (
    PARTIC,
    PLACTIC,
    RelationSet,
    RewriteRule,
    congruence_class,
    congruence_partition,
    count_classes,
    one_step_rewrites,
    partic_rules,
    plactic_rules,
    relation_set,
    words_equivalent,
    words_with_degree,
)
from .verify import VerifyCheck, VerifyConfig, VerifyReport, run_verify

__version__ = "0.1.0"
