//! Finite, exactly checkable models of the non-commutative analytic Toeplitz
//! algebra `L_n` on depth-truncated Fock spaces: its comultiplication, the
//! convolution algebra on its predual, and corepresentations.
//!
//! All matrices are indexed by words in length-lexicographic order, and tensor
//! products are row-major (first factor slowest).

pub mod corep;
pub mod error;
pub mod exec;
pub mod fock;
pub mod hopf;
pub mod predual;
pub mod random;
pub mod regrep;
pub mod series;
pub mod wandering;
pub mod word;

pub use error::{Error, Result};
pub use exec::Exec;
pub use series::FourierSeries;
pub use word::{max_common_prefix, Alphabet, Word};
