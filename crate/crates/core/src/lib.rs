// `!(x > 0.0)` style checks reject NaN along with out-of-range values.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod config;
pub mod copula;
pub mod diagonal;
pub mod error;
pub mod estimators;
pub mod markov;
pub mod measures;
pub mod quadrature;
pub mod regions;
pub mod cli;
pub mod output;

pub use copula::{LowerSemilinearCopula, SampleBatch};
pub use diagonal::{make_family, random_diagonal, Diagonal, FamilySpec};
pub use error::{Error, Result};
pub use measures::MeasureVector;
pub use regions::RegionPair;
