"""Affine symmetric group, cores, the affine nilCoxeter algebra, and
k-Schur functions, with exact closed formulas for maximal rectangles."""

from .affine import AffinePermutation, reflect_word, rotate_word
from .alcoves import (
    act,
    act_linear,
    alcove_of,
    centroid,
    fundamental_centroid,
    fundamental_weight,
    gamma_vectors,
    is_dominant,
    label,
    pseudo_translation,
    reflect,
    reflect_linear,
    simple_root,
    translation,
)
from .cores import (
    bounded_to_core,
    conjugate,
    content,
    core_to_bounded,
    is_core,
    is_k_bounded,
    k_bounded_partitions,
    partitions_in_box,
    s_action,
    skew_reading_word,
    u_action,
    union_partitions,
    w_of_partition,
)
from .documents import ExpansionDocument
from .nilcoxeter import (
    AlgebraElement,
    act_on_core,
    basis_times_generator,
    cyclically_decreasing,
    cyclically_decreasing_word,
    h,
    h_product,
    kschur,
    kschur_h_expansion,
    lr_coefficient,
    pieri_partitions,
    verify_pieri,
)
from .rectangles import (
    Rectangle,
    act_on_partition,
    all_rectangles,
    by_columns,
    by_readings,
    by_translations,
    by_windows,
    column_choice,
    translation_weight,
    transpose_weight,
    verify_commutation,
    verify_equivalences,
    verify_main,
)
from .reports import Check, Report

__version__ = "0.1.0"
