//! Exact invariants of binary sextics and of pairs of binary cubics.

pub mod config;
pub mod error;
pub mod field;
pub mod form;
pub mod invgen;
pub mod multipoly;
pub mod pair;
pub mod parse;
pub mod reference;
pub mod resultant;
pub mod sextic;
mod upoly;

pub use error::{Error, Result};
pub use field::{Field, FieldSpec, PrimeField, Rationals};
pub use form::{BinaryForm, Matrix2, ProjPoint};
pub use multipoly::MultiPoly;
pub use config::{CTuple, OrbitGroup, Permutation};
pub use invgen::{standard_tables, TableSet};
pub use pair::{CubicPair, PairInvariants};
pub use sextic::{SexticClass, SexticInvariants};
