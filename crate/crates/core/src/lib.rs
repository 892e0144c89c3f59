//! Exact commutative algebra for Rees algebras of modules.
//!
//! Polynomial rings over `GF(p)` and `QQ`, Groebner bases of ideals and
//! submodules, presentations of modules over quotient rings, and the Rees
//! algebras attached to them.

pub mod coefficients;
mod engine;
pub mod error;
pub mod freemod;
pub mod groebner;
pub mod integrality;
pub mod modpres;
pub mod polyring;
pub mod rees;

pub use coefficients::{FieldElement, FieldSpec};
pub use error::{Error, Result};
pub use freemod::{ModuleVector, PolyMatrix, Submodule};
pub use groebner::{Dimension, GroebnerBasis, QuotientRing};
pub use integrality::{GradedPower, IntegralityStatus, IntegralityVerdict};
pub use modpres::{ModuleMap, ModulePresentation};
pub use polyring::{Ideal, Monomial, MonomialOrder, OrderKind, PolyRing, Polynomial};
pub use rees::{Provenance, ReesComparison, ReesPresentation};
