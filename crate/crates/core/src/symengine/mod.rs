//! Exact symmetric-polynomial engine: sparse polynomials over alphabets of
//! linear forms, extraction of monomial-symmetric coefficients, and the
//! monomial/Schur change of basis.

mod basis;
mod poly;

pub use basis::{
    check_block_symmetry, m_to_schur, schur_at_alphabet, schur_expand, schur_to_m, to_mvector,
    MVector, SchurVector, VarBlock,
};
pub use poly::{
    alphabet_product, alphabet_product_with, elementary_all, elementary_all_with,
    elementary_of_alphabet, is_nonnegative, Alphabet, LinearForm, Monomial, MonomialPoly,
    ProductStrategy, MAX_DEGREE, MAX_VARS,
};
