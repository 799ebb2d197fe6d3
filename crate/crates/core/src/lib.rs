//! Exact operator calculus for ordinary differential operators with regular
//! singular points: Bessel operators, Darboux transformations, wave operators,
//! bispectral certificates and the reduction-to-Bessel classification pipeline.
//!
//! Everything is computed in exact arithmetic over the rationals or a simple
//! algebraic extension of them; there is no floating point anywhere in the
//! crate. Truncated objects (series at infinity, pseudo-differential tails)
//! carry explicit precision windows so that every verification states exactly
//! what has been checked.

pub mod error;
pub mod exact;

// pub mod bessel;
// pub mod bispectral;
// pub mod classify;
// pub mod darboux;
// pub mod diffop;
// pub mod jsonio;
// pub mod psdo;
// pub mod textio;

pub use error::Error;
pub use exact::scalar::{NumberField, Scalar};
