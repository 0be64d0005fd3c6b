//! Scalar special functions and the arithmetic sequences built on them.

mod gamma;
mod incgamma;
mod mobius;
mod squares;
mod theta;
mod xi;
mod zeta;

pub use gamma::{gamma_complex, ln_gamma_complex};
pub use incgamma::{incomplete_gamma_lower, incomplete_gamma_upper};
pub use mobius::{mobius_sieve, MOBIUS_CAPACITY};
pub use squares::{
    binomial, sum_of_squares_r, sum_of_squares_r_table, sum_of_squares_rprime,
    sum_of_squares_rprime_table, SQUARES_MAX_K, SQUARES_MAX_N,
};
pub use theta::{phi, psi_theta};
pub use xi::{xi, xi_real, Xi, Xi_real};
pub use zeta::zeta_complex;

/// Stieltjes constants γ₀, γ₁, γ₂ of the Laurent expansion of ζ at s = 1.
pub(crate) const STIELTJES: [f64; 3] = [
    0.577_215_664_901_532_9,
    -0.072_815_845_483_676_72,
    -0.009_690_363_192_872_318,
];
