pub mod abelian;
pub mod algebra;
pub mod arith;
pub mod class2;
pub mod cocycle;
pub mod cyclotomic;
pub mod error;
pub mod extension;
pub mod field;
pub mod frobenius;
pub mod group_algebra;
pub mod instances;
pub mod linalg;
pub mod modmat;
pub mod oracle;
pub mod pgroup;
pub mod pipeline;
pub mod problem;
pub mod quiver;
pub mod report;
pub mod scalar;
pub mod snf;

pub use error::{Error, Result};
