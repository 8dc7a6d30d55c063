//! Numerical evaluation of the sophomore's dream function
//!
//! ```text
//! f(t,a) = t ∫₀¹ (ax)^(-tx) dx,        f(1,1) = Σ n⁻ⁿ ≈ 1.2913
//! ```
//!
//! for complex `t` and real nonzero `a`, together with the closed-form
//! asymptotic and interpolation approximations that describe it, and a
//! locator for its non-trivial zeros in the left complex half-plane.
//!
//! The crate is organized around three independent evaluation routes
//! (power series, incomplete-gamma series, adaptive quadrature) that
//! cross-validate each other, a family of error-function based
//! approximations with an automatic regime selector, and Newton refinement
//! of zero locations seeded by their asymptotic law.

pub mod asymptotics;
pub mod eval;
pub mod special;
pub mod zeros;

mod quad;

pub use num_complex::Complex64;

pub use eval::{EvalPoint, Method, MethodResult, QuadratureConfig};
