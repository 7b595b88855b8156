//! Exact arithmetic for hypergeometric Bernoulli numbers and polynomials.
//!
//! The crate computes the family `B_{N,n}(x)` generated by
//! `(t^N/N!) e^{xt} / (e^t - T_{N-1}(t))`, where `T_k` is the degree-`k`
//! Taylor polynomial of `e^t`, together with sums of products
//! `S_{N,n}^{(p)}` of these polynomials. `N = 1` recovers the classical
//! Bernoulli numbers and polynomials.
//!
//! Everything is exact: scalars are arbitrary-precision rationals, and the
//! convolution identities satisfied by the family are machine-verified as
//! exact rational equalities over configurable parameter grids — never by
//! floating-point comparison.
//!
//! Layout:
//! - [`rational`]: the exact scalar type and its `p/q` text form
//! - [`combinatorics`]: factorials, binomial/multinomial coefficients
//! - [`polynomial`]: dense univariate polynomials over the rationals
//! - [`series`]: truncated formal power series over a coefficient ring
//! - [`bernoulli`]: the memoized `B_{N,n}` table, generating-function
//!   series, and the defining Appell-style axioms
//! - [`sums`]: sums of products by enumeration, recurrence, and a
//!   subset-sum closed form
//! - [`identity`]: the identity checkers and sweep driver

pub mod bernoulli;
pub mod combinatorics;
pub mod identity;
pub mod polynomial;
pub mod rational;
pub mod ring;
pub mod series;
pub mod sums;

pub use bernoulli::{hb_series, taylor_poly, HbPolynomial, HbTable};
pub use identity::{run_suite, Failure, IdentityId, IdentityReport, ParamGrid};
pub use polynomial::Polynomial;
pub use rational::{parse_rational, rat, rat_int, Rational};
pub use ring::Ring;
pub use series::{exp_series, NonInvertibleSeries, TruncatedSeries};
