//! Exact scalar and coefficient arithmetic: rationals and simple algebraic
//! extensions, dense and Laurent polynomials, truncated series at infinity,
//! rational functions, log-monomial functions and bivariate helpers.

// pub mod bipoly;
// pub mod laurent;
// pub mod linalg;
// pub mod logfn;
pub mod poly;
// pub mod ratfunc;
pub mod scalar;
// pub mod series;



pub use poly::Poly;

pub use scalar::{NumberField, Scalar};

