"""Exact scalars, polynomials, resultants and factorization."""
from .factor import (
    BadPrimeError,
    FactorPattern,
    IrreducibilityResult,
    certify_irreducible_over_Q,
    degree_pattern,
    factor_mod_p,
    factor_small_over_Q,
    find_irreducible_prime,
    rational_roots,
    reduce_mod_p,
    roots_mod_p,
)
from .fields import GF, QQ, FieldMismatchError, Fp, PrimeField, field_of, is_prime, is_square_mod_p
from .multipoly import MultiPoly
from .numberfield import NFElement, NumberField, ReducibleModulusError, number_field
from .poly import (
    ZERO_DEGREE,
    UniPoly,
    inverse_mod,
    poly_gcd,
    poly_xgcd,
    primitive_part,
    proportional,
    squarefree_decomposition,
    squarefree_part,
)
from .resultant import first_subresultant, resultant, sylvester_matrix


def nf_inverse(e: NFElement) -> NFElement:
    return e.inverse()


__all__ = [
    "BadPrimeError", "FactorPattern", "FieldMismatchError", "Fp", "GF", "IrreducibilityResult",
    "MultiPoly", "NFElement", "NumberField", "PrimeField", "QQ", "ReducibleModulusError",
    "UniPoly", "ZERO_DEGREE", "certify_irreducible_over_Q", "degree_pattern", "factor_mod_p",
    "factor_small_over_Q", "field_of", "find_irreducible_prime", "first_subresultant",
    "inverse_mod", "is_prime", "is_square_mod_p", "nf_inverse", "number_field", "poly_gcd",
    "poly_xgcd", "primitive_part", "proportional", "rational_roots", "reduce_mod_p",
    "resultant", "roots_mod_p", "squarefree_decomposition", "squarefree_part", "sylvester_matrix",
]
