//! Indices, skew Young diagrams, diagonal intervals, the weak/strict
//! interleaving orders, and enumeration of summation regions.

mod interval;
mod region;
mod shape;
mod ssyt;

pub use interval::{is_consecutive, rel_strict, rel_weak, IntTuple, Interval};
pub use region::{Cmp, RegionSpec};
pub use shape::{DiagIndex, LinearIndex, SkewShape};
pub use ssyt::{
    chain_to_filling, enumerate_ssyt, for_each_diag_chain, for_each_ssyt, Filling,
};
