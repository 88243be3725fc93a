//! Self-contained special-function and quadrature kernel.
//!
//! Everything here is a pure function of its arguments; no global state.

mod quad;
mod special;

pub use quad::{integrate_semi_infinite, integrate_semi_infinite_with_breaks, QuadratureSpec};
pub use special::{digamma, ln_gamma};
pub(crate) use special::{digamma_unchecked, gamma_pos};
