//! Exact polynomial and rational-function arithmetic over the integers,
//! and power-series prefixes of rational functions.

mod poly;
mod rational;
mod series;

pub use poly::Polynomial;
pub use rational::{RationalFunction, RfOp};
pub use series::{series_expand, series_expand_rational, SeriesPrefix};
