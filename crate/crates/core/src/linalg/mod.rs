//! Dense exact linear algebra.

pub mod laurent_det;
pub mod matrix;
pub mod snf;

pub use laurent_det::{conjugate_matrix, constant_matrix, det_laurent, inverse_laurent, pencil};
pub use matrix::{IntMatrix, Matrix, RatMatrix};
pub use snf::{cokernel_orders, poly_smith_diagonal, smith, solve_int, Smith};
