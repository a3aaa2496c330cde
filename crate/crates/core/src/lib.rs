//! Steady-state simulator for a driven optomechanical cavity with a
//! Bose-Einstein condensate inside.
//!
//! The pipeline runs in four stages, one module each:
//!
//! 1. [`model`]: physical inputs and derived rates (κ, ξ, η, Ω_c, ω_B, n̄, β).
//! 2. [`steady_state`]: mean-field branches, bistability window and threshold.
//! 3. [`linear_dynamics`]: drift and diffusion matrices, Routh-Hurwitz
//!    stability, Lyapunov covariance.
//! 4. [`gaussian_measures`]: incoherent occupations and logarithmic negativity.
//!
//! [`sweep`] ties them together into one-dimensional parameter sweeps with
//! CSV/JSON output and the reference figure presets.
//!
//! ```
//! use optomech::model::{derive_quantities, SystemParams};
//! use optomech::steady_state::threshold_power;
//!
//! let params = SystemParams::reference().without_bec();
//! let kappa = derive_quantities(&params).unwrap().kappa;
//! let p = threshold_power(&params, 4.0 * kappa).unwrap().unwrap();
//! assert!(p > 0.2 && p < 0.23);
//! ```

pub mod error;
pub mod gaussian_measures;
pub mod linear_dynamics;
pub mod model;
pub mod steady_state;
pub mod sweep;

pub use error::{Error, Result};
