//! The three [`ComponentTracker`](crate::component::ComponentTracker)
//! implementations:
//!
//! * [`GeneralTracker`] — pair bit matrix plus component list, valid for the
//!   full range `0 <= ell < 2k`, O(n^2) space.
//! * [`DisjointTracker`] — representative array, valid for `ell <= k` where
//!   components never overlap, O(n) space.
//! * [`UnweightedTracker`] — single membership mask recomputed per grouping
//!   vertex, valid for the full range on unit weights processed in
//!   vertex-grouped order, O(n) space.

mod disjoint;
mod general;
mod matrix;
mod unweighted;

pub use disjoint::DisjointTracker;
pub use general::{AbsorbStats, GeneralTracker};
pub use matrix::PairMatrix;
pub use unweighted::UnweightedTracker;
