//! Dimension of the odd theta-graph coinvariant space for finite groups.
//!
//! For a finite group π the space 𝒜_Θ^odd(ℂπ) is the space of coinvariants
//! of Sym³ℂπ under (π×π)⋊ℤ₂, where (g,h) acts by x ↦ g x h⁻¹ and the ℤ₂
//! factor by x ↦ x⁻¹. Its dimension is (d₁ + d₂)/2 with
//!
//! * d₁ the dimension of the (π×π)-coinvariants of Sym³ℂπ, and
//! * d₂ the trace of the involution on them,
//!
//! and the same with ℂπ replaced by the augmentation kernel Ker ε.
//!
//! The crate computes these numbers along independent routes that are
//! checked against each other:
//!
//! | route | module |
//! |---|---|
//! | closed forms for spherical 3-manifold groups | [`closed_forms`] |
//! | class sums and character tables | [`conjugacy`], [`characters`] |
//! | Burnside averaging over the acting group | [`burnside`] |
//! | explicit orbit enumeration, theta-diagram counting | [`burnside`], [`diagrams`] |

pub mod burnside;
pub mod characters;
pub mod closed_forms;
pub mod compute;
pub mod conjugacy;
pub mod coset;
pub mod cyclo;
pub mod diagrams;
mod error;
pub mod expr;
pub mod group;
pub mod report;
pub mod word;

pub use error::{Error, Result};

pub use expr::GroupExpr;
pub use group::{Family, FiniteGroup};
pub use report::{DimensionReport, Method};
