//! Exact ordinary and b-fold chromatic polynomials.
//!
//! A b-fold λ-colouring assigns every vertex a set of `b` colours from a
//! palette of `λ`, adjacent vertices getting disjoint sets. Counting them
//! reduces to ordinary colourings of the blow-up graph `G^b`
//! ([`blowup::blow_up`]), whose chromatic polynomial is computed exactly by
//! memoized deletion–contraction ([`chromatic::ChromaticEngine`]). Closed
//! forms for complete graphs, trees and forests live in [`fractional`]; the
//! brute-force enumerator in [`oracle`] checks all of it.
//!
//! ```
//! use bfold_core::graph::{generate, GraphKind};
//! use bfold_core::fractional::fractional_count;
//!
//! let k3 = generate(&GraphKind::Complete(3)).unwrap();
//! assert_eq!(fractional_count(&k3, 6, 2).unwrap(), 90.into());
//! ```

pub mod blowup;
pub mod chromatic;
pub mod error;
pub mod exec;
pub mod fractional;
pub mod graph;
pub mod oracle;
pub mod poly;
pub mod selfcheck;

pub use error::{Error, Result};
pub use exec::Execution;
pub use graph::{CanonicalKey, Graph, GraphKind};
pub use poly::Polynomial;
