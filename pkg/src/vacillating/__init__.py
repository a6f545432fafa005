"""Descent-preserving bijection between SO(3) vacillating tableaux and
pairs (standard Young tableau, orthogonal Littlewood-Richardson tableau)."""

from .arcs import algo5, algo6, algo6_prefixes, check_concatenation, check_evacuation_conjecture, is_dyck_preimage
from .core import (
    Partition,
    StandardYoungTableau,
    VacillatingWord,
    concat_syt,
    concat_word,
    enumerate_syt,
    enumerate_vacillating,
    evacuation,
    partition_validate,
    syt_descents,
    syt_validate,
    word_descents,
    word_validate,
    word_weight,
)
from .crystal import generate_Td, lr_crystal
from .forward import algo1_expand, algo3_insert, forward, pad_parity, strip_suffix
from .harness import emit_table, frobenius_descent_multisets, verify_all
from .inverse import algo2_contract, algo4_extract, inverse, is_three_row_position, pad_word, strip_triple
from .lr import OrthLRTableau, classify_case, enumerate_lr, validate_lr

__all__ = [name for name in dir() if not name.startswith("_")]
