//! Combinatorics of integrable highest weight modules of affine sl_n:
//! crystal graphs on coloured multipartitions, level-l paths with their
//! energy function, the q-deformed Fock space action, the ♯ involution on
//! restricted paths and multipartitions, branching-function series (by
//! enumeration and by the theta/eta closed formula), and the resulting
//! Jantzen-Seitz classification of simple Ariki-Koike modules.
//!
//! All arithmetic is exact: integers, arbitrary-precision rationals and
//! integer Laurent polynomials in q.  No floating point anywhere.
//!
//! Redundant computation routes (crystal vs path enumeration, enumeration vs
//! theta formula, end-colour vs t_jk criteria) are first-class citizens and
//! are cross-checked by the high-level entry points.

pub mod branching;
pub mod crystal;
pub mod error;
pub mod fock;
pub mod laurent;
pub mod multipartition;
pub mod path;
pub mod series;
pub mod sharp;
pub mod weights;

pub use branching::{branching_series, js_generating_function, js_modules, BranchingMethod};
pub use crystal::{character, relabel, CrystalGraph};
pub use error::{Error, Result};
pub use fock::{FockVector, TensorFockVector};
pub use laurent::LaurentPoly;
pub use multipartition::{ColoredMultipartition, FockAmbient, Partition};
pub use path::{pi, EtaStep, Path};
pub use series::{eta_power, theta_series, ShiftedSeries};
pub use sharp::{js_membership_fundamental, sharp_multipartition, sharp_path};
pub use weights::{AffineWeight, ClassicalWeight, Rat};
