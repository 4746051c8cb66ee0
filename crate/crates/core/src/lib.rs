//! Element-centralizer structure of finite groups.
//!
//! Groups are dense multiplication tables ([`group::FiniteGroup`]). On top of
//! that the crate computes the distinct element centralizers of a group, the
//! centers `Z(x)` of those centralizers, the induced family of subgroups of
//! `G/Z(G)`, and the predicates and numeric bounds built from them. The
//! [`verifier`] module runs named checks of those relationships over a
//! catalog of constructed groups.

pub mod analytics;
pub mod constructions;
pub mod error;
pub mod group;
pub mod io;
pub mod numbers;
pub mod verifier;

pub use error::{AnalyticsError, GroupError};
pub use group::{isomorphic, FiniteGroup, QuotientResult, Subgroup};
