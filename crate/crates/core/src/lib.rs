//! Closure systems given by implicational bases or by irreducible closed
//! sets, and the algorithms translating between the two for acyclic convex
//! geometries.
//!
//! ```
//! use cskit::fixtures::fixture_a;
//! use cskit::ics_enum::{enumerate_irr, EnumConfig};
//!
//! let ib = fixture_a();
//! let irr = enumerate_irr(&ib, EnumConfig::default()).unwrap();
//! assert_eq!(irr.total(), 8);
//! ```

pub mod acyclic;
pub mod base;
pub mod closure;
pub mod critgen;
pub mod error;
pub mod exec;
pub mod fixtures;
pub mod hypergraph;
pub mod ics_enum;
pub mod instances;
pub mod mib_gen;
pub mod set;

pub use base::{Implication, ImplicationalBase};
pub use closure::ClosureOperator;
pub use error::{Error, Result};
pub use exec::Execution;
pub use set::{AttachedFamily, Element, ElementSet, GroundSet, SetFamily};
