pub mod algebra;
pub mod canon;
pub mod deltamatroid;
pub mod error;
pub mod fixtures;
pub mod formats;
pub mod fourregular;
pub mod graphs;
pub mod isotropic;
pub mod matroid;
pub mod pu;
pub mod recognize;

pub use error::{Error, Result};
