//! Genus-2 curve pairs whose Jacobians are isomorphic as unpolarized
//! abelian surfaces: the four explicit one-parameter families, the gluing of
//! two elliptic curves along their 2-torsion, Igusa invariants, and the
//! resultant / finite-field analyses that separate the members of each pair.

pub mod distinct;
pub mod ellcurve;
pub mod error;
pub mod exact;
pub mod families;
pub mod glue;
pub mod igusa;
pub mod obstruction;
pub mod reproduce;

pub use error::{Error, Result};

#[cfg(test)]
pub(crate) mod testutil;
