//! Generalized external order of ordered matroids, antimatroids and
//! join-distributive lattices.

pub mod activity;
pub mod antimatroid;
pub mod check;
pub mod corpus;
pub mod error;
pub mod external;
pub mod fixtures;
pub mod gf;
pub mod io;
pub mod jd;
pub mod lattice;
pub mod matroid;
pub mod minors;
pub mod subset;

pub use error::{Error, Result};
pub use matroid::Matroid;
pub use subset::{Element, GroundOrder, Subset};
