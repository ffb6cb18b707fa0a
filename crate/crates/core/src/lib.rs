//! Exact computations for height `p - 1` real E-theory `EO` at an odd prime `p`.
//!
//! The crate is organised bottom-up:
//!
//! - [`fp`]: dense linear algebra over `F_p`.
//! - [`reps`] and [`mu_ring`]: the representation ring of `F_p[C_p]`, tensor and
//!   symmetric powers, each paired with a brute-force oracle.
//! - [`comodule`]: graded `P(1)_*`-comodules as graded spaces with a nilpotent
//!   operator `θ` of degree `2(p-1)`, and their decomposition into shifted `W_l`.
//! - [`splitting`]: the `EO ∧ Z ≃ EO ∧ ⋁ Σ^s X_l` splitting engine.
//! - [`sseq`]: the homotopy fixed point spectral sequence of `EO`, the algebraic
//!   Atiyah-Hirzebruch spectral sequence of `EO ∧ X_l`, and chart output.
//! - [`cli`]: the command-line front end used by the `eocalc` binary.

pub mod cli;
pub mod comodule;
pub mod error;
pub mod fp;
pub mod mu_ring;
pub mod reps;
pub mod splitting;
pub mod sseq;

pub use error::{Error, Result};
pub use fp::{FpMatrix, Prime};
pub use mu_ring::{mu_to_rep, rep_to_mu, MuRing, MuRingElement};
pub use reps::RepElement;
