//! Polynomial SL(2,C)^⊗4 invariants of pure four-qubit states.
//!
//! The crate evaluates the generators of the invariant algebra (`A`, `B1`,
//! `B2`, `B3`, `C`) together with the derived invariants `D`, `L`, `M`, `N`
//! and `X`, uses them to tell SLOCC classes apart, and sorts states into
//! tangle-pattern families.
//!
//! ```
//! use tangle_core::{classifier, invariants, ket};
//!
//! let ghz = ket::parse_ket("|0000> + |1111>").unwrap();
//! let inv = invariants::InvariantSet::of(&ghz);
//! assert!((inv.a.re - 2.0).abs() < 1e-12);
//! let label = classifier::classify(&ghz, 1e-9).unwrap();
//! assert_eq!(label.general, classifier::Family::Ghz);
//! ```

pub mod catalog;
pub mod classifier;
pub mod error;
pub mod invariants;
pub mod ket;
pub mod state;

mod serde_complex;

pub use error::{Error, Result};
pub use invariants::InvariantSet;
pub use state::{LocalOperator, Permutation, PureState4};

pub use num_complex::Complex64;
