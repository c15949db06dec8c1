pub mod collapse;
pub mod complex;
pub mod constructions;
pub mod duality;
pub mod error;
pub mod face;
pub mod homology;
pub mod hypertree;
pub mod rng;

pub use complex::{HasseEdge, SimplicialComplex};
pub use error::{Error, Result};
pub use face::Face;
