//! Fourier codes: linear block codes over GF(p) whose codewords are
//! eigensequences of the unitary Fourier number theoretic transform.
//!
//! The crate is organized bottom-up:
//!
//! - [`gf`]: exact prime-field arithmetic and number-theoretic helpers
//!   (modular square roots, element orders, parameter validation).
//! - [`matrix`]: dense matrices over GF(p) and the column-stable row
//!   reduction used for code construction.
//! - [`fntt`]: the unitary transform itself, contexts, and even/odd
//!   sequence machinery.
//! - [`eigen`]: eigenvalue types, eigensequence predicates and builders,
//!   and the eigenvalue multiplicity table.
//! - [`code`]: code construction (H = [I|P], G = [-P^T|I]), distance
//!   bounds, a brute-force exact-distance oracle, and parameter tables.
//! - [`decode`]: syndrome computation and the single/double error
//!   correction ladder.
//! - [`sim`]: a deterministic Monte-Carlo channel simulator.

pub mod code;
pub mod decode;
pub mod eigen;
pub mod fntt;
pub mod gf;
pub mod matrix;
pub mod sim;

pub use code::{construct, dmin_exact, ds_check, smallest_valid_prime, CodeError, FourierCode};
pub use decode::{decode, syndrome, DecodeMethod, DecodeOutcome, DecodeStatus};
pub use eigen::{Eigenvalue, EigenvalueSymbol};
pub use fntt::{ContextOptions, FnttContext, Sequence};
pub use gf::{PrimeModulus, Residue};
pub use matrix::Matrix;
