//! Exact calculus for univariate rational power and Laurent series kept in
//! partial-fraction form.
//!
//! The central operation is the Hadamard product [`hadamard()`], evaluated
//! through a closed multiplication table on the basis `z^n`,
//! `1/(1−αz)^m`. Alongside it live the Cauchy product (via partial
//! fractions), the Heisenberg–Weyl algebra in normally ordered form with its
//! Bargmann–Fock action ([`hw`]), and a windowed coefficient [`oracle`]
//! that checks every closed formula.

pub mod error;
pub mod factored;
pub mod grid;
pub mod hadamard;
pub mod hw;
pub mod oracle;
pub mod scalar;
pub mod series;
pub mod syntax;

pub use error::{Error, Result};
pub use factored::{FactoredFraction, LaurentPoly};
pub use hadamard::{diag_apply, diag_element, dilate, hadamard, hadamard_basis};
pub use hw::{bf_apply, bf_apply_word, normal_order, Degree, Letter, NormalForm, Word};
pub use oracle::{truncate, truncate_at, TruncatedSeries, DEFAULT_DEPTH};
pub use scalar::{binomial, falling_factorial, factorial, rising_factorial, Scalar};
pub use series::{BasisTerm, Mode, RationalSeries};
