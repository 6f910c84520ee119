//! Exact arithmetic for quaternion rings, the cubic Jordan algebra `H3(B)`,
//! Freudenthal's space `W`, the embedding of `GSp6` into its similitude
//! group, and the root-system bookkeeping for the constant term of the
//! associated Eisenstein series.

pub mod clifford;
pub mod ctable;
pub mod diffop;
pub mod error;
pub mod freudenthal;
pub mod gsp6;
pub mod hermspace;
pub mod jordan;
pub mod matrix;
pub mod par;
pub mod quat;
pub mod random;
pub mod scalar;
pub mod verify;

pub use error::{Error, Result};
pub use scalar::{Gaussian, Rational, Scalar};
