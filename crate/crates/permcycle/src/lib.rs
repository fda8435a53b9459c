//! Permutation polynomials with prescribed cycle type over finite fields
//! of odd order.
//!
//! The crate builds binomial, trinomial, general r-term cyclotomic and
//! geometric-sum permutation polynomials whose cycle structure is known
//! in advance from the multiplicative orders of the chosen units,
//! computes their compositional inverses, and checks everything against
//! an exhaustive evaluation oracle. Family enumeration reproduces whole
//! count tables per field.
//!
//! All computation is exact integer arithmetic; there is no floating
//! point and no randomness anywhere.

pub mod analyze;
pub mod construct;
pub mod cycle;
pub mod error;
pub mod families;
pub mod field;
pub mod poly;

pub use analyze::{
    compose_is_identity, coset_multipliers, eval_table, multiplication_cycle_type,
    verify_construction, verify_poly, PermTable, VerifyReport,
};
pub use construct::{
    construct_bin, construct_cyclotomic, construct_geom_sum, construct_tri,
    inverse_construction, predicted_cycle_type, vandermonde_coeffs, Construction, Family,
};
pub use cycle::CycleType;
pub use error::{Error, Result};
pub use families::{
    closed_form_count, count_family, distinct_polynomials, divisors, enumerate_family,
    euler_phi, factor_pairs, reproduce_table, verify_all, FamilyRow, Pool, TableOptions,
};
pub use field::{Field, FieldRef};
pub use poly::SparsePoly;
