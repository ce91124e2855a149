//! Exact Schubert calculus and regular nilpotent Hessenberg combinatorics:
//! permutations, polynomials over `Z` and `Q`, divided differences, Schubert
//! polynomials, the generators `f_{i,j}`, Gröbner bases, and identity sweeps.

pub mod hessenberg;
pub mod ideal;
pub mod permutation;
pub mod polynomial;
pub mod report;
pub mod schubert;
pub mod verify;

pub use hessenberg::{
    alternating_schubert_sum, f_poly, f_via_chain, verify_theorem, w_kij, Corner, HessenbergError,
    HessenbergFunction,
};
pub use ideal::graded::GradedIdeal;
pub use ideal::{
    groebner, hessenberg_ideal, hilbert_series, GroebnerBasis, HilbertSeries, IdealError,
};
pub use permutation::{Permutation, PermutationError};
pub use polynomial::{Monomial, PolyError, Polynomial, QPoly, ZPoly};
pub use report::{CaseFailure, VerificationReport};
pub use schubert::{monk_expand, schubert, ChainRule, MonkExpansion, SchubertError};
pub use verify::{run_check, Check, VerifyError};
