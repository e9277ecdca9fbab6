//! Exact algebra of the quantum sphere SU_q(2) and the spectral-action
//! coefficients of torsion perturbations `D + Φ`.
//!
//! Elements are stored in the normal-ordered basis `a^α b^β (b*)^γ` where
//! negative `α` stands for `(a*)^{|α|}`. Coefficients are exact, either
//! complex rationals at a fixed `0 < q < 1` or rational functions of a
//! symbolic `q`.

mod algebra;
mod binomial;
mod integrals;
mod io;
mod scalar;
mod torsion;

pub use algebra::{
    adjoint, diagonal_part, from_diagonal, mul_generator, mul_word, normal_order_product, power,
    rho_automorphism, AlgebraElement, Generator, Monomial,
};
pub use binomial::{
    a_power_expansion, a_power_expansion_engine, quantum_binomial, quantum_binomial_by_product,
};
pub use integrals::{
    action_leading, diagonal_is_rho_invariant, integral_bbstar_d2, scale_invariant_terms,
    zeta_invariant_closed, zeta_invariant_engine, ActionCoefficients, ScaleInvariantTerms,
};
pub use io::{
    parse_torsion_json, to_symbolic, torsion_from_records, torsion_to_records, TorsionRecord,
};
pub use scalar::{render_complex, ComplexRational, Deformation, QParam, Scalar, SymbolicQ};
pub use torsion::{
    is_selfadjoint, random_coefficient, random_element, random_hermitian, selfadjoint_violation,
    RandomShape, TorsionElement,
};
