//! Coefficients, monomials, orders and sparse polynomials.

mod field;
mod ideal;
mod monomial;
mod order;
mod poly;
pub mod text;

pub use field::{PrimeField, DEFAULT_PRIME};
pub use ideal::GradedIdeal;
pub use monomial::{Monomial, VarMask, MAX_EXPONENT, MAX_VARS};
pub use order::{ModuleOrder, MonomialOrder, PositionRule, TermKey};
pub use poly::{Poly, Ring, Term};
