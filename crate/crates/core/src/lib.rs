//! Exact computation with corings over small fields: comodules, dual rings,
//! measurings, coring extensions and the functors they induce, descent data,
//! and composition of extensions.
//!
//! Every object is finite-dimensional and presented by matrices over 𝔽_p or
//! ℚ. Tensor products over an algebra are realized as explicit quotients of
//! tensor products over the field, and every axiom is checked exactly on
//! basis elements.

pub mod algmod;
pub mod cli;
pub mod constructions;
pub mod coring;
pub mod descent;
pub mod error;
pub mod exactla;
pub mod extension;
pub mod field;
pub mod fixtures;
pub mod limits;
pub mod tensorcat;

pub use error::{Axiom, Error, Result};
pub use exactla::{Mat, QuotientSpace};
pub use field::{Field, Scalar};
