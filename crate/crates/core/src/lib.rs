//! Torsion pairs and n-torsion pairs over type-A quivers.
//!
//! The crate models two families of module categories: modules over
//! linearly oriented A-type quivers (and disjoint unions of them), where
//! every indecomposable is an interval, and tubes, the nilpotent modules over
//! an oriented cycle. On top of those it provides
//!
//! * a torsion-theoretic toolkit generic over a finite [`Category`] model:
//!   perpendicular categories, torsion and n-torsion pair checks,
//!   filtrations, and the passage between n-torsion pairs and nested series
//!   of torsion pairs ([`torsion`]);
//! * the correspondence between torsion pairs of a linear quiver and part
//!   partitions of its vertices ([`classify_an`], [`partition`]);
//! * the classification of tube torsion pairs by a vertex set and a
//!   residual pair ([`classify_tube`]);
//! * independent brute-force and linear-algebra oracles ([`oracle`]);
//! * JSON certificates and Graphviz export for the command line tool.
//!
//! ```
//! use torsionkit::{classify_an, LinearCategory};
//!
//! let a3 = LinearCategory::linear(3).unwrap();
//! assert_eq!(classify_an::enumerate_torsion_pairs(&a3).unwrap().len(), 14);
//! ```

pub mod an;
pub mod category;
pub mod cert;
pub mod classify_an;
pub mod classify_tube;
pub mod error;
pub mod export;
pub mod oracle;
pub mod partition;
pub mod quiver;
pub mod torsion;
pub mod tube;

pub use an::{Interval, LinearCategory};
pub use category::{Category, Subcategory};
pub use classify_tube::{TubeKind, TubeTorsionPair};
pub use error::{Error, Result};
pub use partition::{PartPartition, PartitionKind};
pub use quiver::{Quiver, Shape, Vertex};
pub use torsion::{NTorsionPair, TorsionPair, TorsionSeries};
pub use tube::{Tube, TubeModule, TubeSubcategory};
