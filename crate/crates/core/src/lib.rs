//! Computational toolkit for degree-1 del Pezzo surfaces over finite fields.
//!
//! Modules, bottom up: [`gfield`] (finite fields), [`polyfq`] (polynomials and
//! binary forms), [`matfq`] (small linear algebra), [`genpos`] (points in
//! general position), [`excomb`] (Weyl-group tables and type identification),
//! [`sextic`] (the surface engine), [`bounds`] (existence thresholds) and
//! [`sweep`] (normal-form enumeration).

pub mod bounds;
pub mod data;
pub mod error;
pub mod excomb;
pub mod gfield;
pub mod polyfq;
pub mod matfq;
pub mod genpos;
pub mod sextic;
pub mod sweep;

pub use error::{Error, Result};
