"""Exact linear representations of braid groups over Laurent polynomial rings."""

from laurent_linear.linear_reps import (
    KernelReport,
    LetterError,
    LinearRep,
    bigelow_words,
    braid_matrix,
    commutator,
    kernel_check,
    letter_block,
    local_block,
    matrix_of_letter,
    theta,
    theta_conjugate,
    variables,
)
from laurent_linear.matrices import Block, LaurentMatrix, block_inverse, block_product
from laurent_linear.polynomials import LaurentPoly, VariableMismatchError

__all__ = [
    "Block",
    "KernelReport",
    "LaurentMatrix",
    "LaurentPoly",
    "LetterError",
    "LinearRep",
    "VariableMismatchError",
    "bigelow_words",
    "block_inverse",
    "block_product",
    "braid_matrix",
    "commutator",
    "kernel_check",
    "letter_block",
    "local_block",
    "matrix_of_letter",
    "theta",
    "theta_conjugate",
    "variables",
]
