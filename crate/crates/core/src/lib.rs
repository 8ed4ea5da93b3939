//! Exact-arithmetic engine for relative polar curves, local intersection
//! multiplicities, and stalk cohomology of iterated vanishing cycles on
//! stratified complexes.

pub mod budget;
pub mod error;
pub mod factor;
pub mod poly;

pub use budget::Budget;
pub use error::{Error, GermDim, Result};
