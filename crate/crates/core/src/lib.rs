#![forbid(unsafe_code)]

//! Exact arithmetic for monomial ideals in a polynomial ring: canonical
//! minimal generators, powers, colon ideals, irreducible decomposition,
//! associated primes, v-numbers, and the stabilization indices of the
//! sequences Ass(I^k) and v(I^k).
//!
//! Coefficients never appear: every computation in scope is determined by
//! exponent vectors alone, so ideals are represented by their unique minimal
//! monomial generating sets in graded-lex order and equality is structural.

pub mod context;
pub mod decompose;
pub mod error;
pub mod families;
pub mod ideal;
pub mod monomial;
pub mod prime;
pub mod stability;
pub mod text;
pub mod verify;
pub mod vnumber;

pub use context::VariableContext;
pub use decompose::{
    associated_primes, find_witness, irreducible_decomposition, minimal_primes, AssSet,
    IrreducibleComponent,
};
pub use error::IdealError;
pub use ideal::MonomialIdeal;
pub use monomial::Monomial;
pub use prime::MonomialPrime;
pub use stability::{
    build_profile, build_profile_capped, check_index_inequalities, detect_astab, detect_vstab,
    detect_vstab_p, Detection, PowerProfile, StabilityEstimate,
};
pub use vnumber::{v_global, v_p, vm_two_variable, VReport};
