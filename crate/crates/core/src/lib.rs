//! Jordan types of linear forms on graded complete intersections `k[x,y]/(f,g)`.
//!
//! Partitions with the diagonal lengths of a CI Hilbert function are handled
//! combinatorially (branch labels, hook codes, CIJT tests) and exactly over Q
//! (quotients, multiplication maps, Hessians, explicit realizations).

pub mod algebra;
pub mod codes;
pub mod error;
pub mod hessians;
pub mod linalg;
pub mod partition;
pub mod poly;
pub mod realize;
pub mod tables;

pub use error::{Error, Result};
pub use partition::{HilbertFunction, JordanDegreeType, Partition};
pub use poly::{BivariatePoly, Q};
