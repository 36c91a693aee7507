//! Exact rational and integer linear algebra.

pub mod elimination;
pub mod matrix;
pub mod rational;
pub mod snf;

pub use elimination::{determinant, image_basis, inverse, kernel_basis, preimage, rank, rref};
pub use matrix::{IntegerMatrix, Matrix, RationalMatrix, Vector};
pub use rational::{format_rational, parse_rational, rat, ratio, Integer, Rational};
pub use snf::{smith_normal_form, SnfResult};
