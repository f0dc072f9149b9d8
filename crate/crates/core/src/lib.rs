//! Exact Seifert-matrix calculus for odd-dimensional disk knots.

pub mod blanchfield;
pub mod cli;
pub mod cobordism;
pub mod error;
pub mod farber_levine;
pub mod generate;
pub mod io;
pub mod linalg;
pub mod ring;
pub mod seifert;
pub mod sequiv;

pub use error::{Error, Result};
