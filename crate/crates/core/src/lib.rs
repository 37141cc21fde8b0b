#![no_std]

extern crate alloc;

pub mod endo;
pub mod enumerate;
pub mod error;
pub mod field;
pub mod fixtures;
pub mod homological;
pub mod linalg;
pub mod monomial;
pub mod nakayama;
pub mod quiver;
pub mod repr;

pub use error::Error;
pub use field::{Field, Fp, Rational};
pub use monomial::{MonomialAlgebra, PathId, Side, Sides};
pub use quiver::{Arrow, Path, Quiver, Shape};
