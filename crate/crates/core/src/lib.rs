//! Exact computations with Hall-Littlewood polynomials: the modified family
//! `Q'`, the families `Q` and `P`, their behaviour under the argument shifts
//! `X + 1`, `X - 1` and `t^r - X`, and machine checks of the associated
//! generating-function and scalar-product identities.
//!
//! All arithmetic is exact over `Z[t, 1/t]`.

pub mod algebra;
pub mod alphabet;
pub mod basis;
pub mod error;
pub mod format;
pub mod hall_littlewood;
pub mod identities;
pub mod partition;
pub mod report;
pub mod symmetrize;
pub mod tableaux;
pub mod verification;

pub use algebra::{LaurentPoly, VarSet, XPoly};
pub use alphabet::{Alphabet, Letter};
pub use basis::{Basis, BasisExpansion};
pub use error::{Error, Result};
pub use partition::{IntVector, Partition};
pub use report::Comparison;
pub use tableaux::{PlanePartitionLayers, Tableau};
