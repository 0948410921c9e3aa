//! Finite Weyl groups, Bruhat order and Kazhdan-Lusztig polynomials, with
//! Grothendieck-group bookkeeping for B-equivariant D-modules on flag
//! varieties in characteristic zero and in positive characteristic.
//!
//! ```
//! use std::sync::Arc;
//! use schubert_kl::{KlTable, WeylGroup};
//!
//! let group = Arc::new(WeylGroup::new("A3".parse().unwrap()).unwrap());
//! let kl = KlTable::new(group.clone());
//! let w = group.parse_word("1 2 3 2 1").unwrap();
//! let v = group.parse_word("1 3").unwrap();
//! assert_eq!(kl.kl(v, w).unwrap().to_string(), "1 + q");
//! ```

pub mod cartan;
pub mod cli;
pub mod coxeter;
pub mod demo;
pub mod error;
pub mod kgroup;
pub mod kl;
pub mod poly;
pub mod schubert;

pub use cartan::{CartanType, Family};
pub use coxeter::{Element, ParabolicSubset, Side, WeylGroup};
pub use error::{Error, Result};
pub use kgroup::{Basis, KGClass, Regime};
pub use kl::KlTable;
pub use poly::Polynomial;
pub use schubert::SchubertDatum;
