//! Irreducible divisor graphs of finite commutative rings.
//!
//! Builds finite rings from compact specs, classifies elements under the
//! usual associate and irreducibility notions, constructs the `α-β` divisor
//! graphs of an element, decides ring-level factorization properties and
//! checks the theorems relating them across a corpus of rings.

pub mod associates;
pub mod atoms;
pub mod error;
pub mod extnat;
pub mod factor;
pub mod graph;
pub mod harness;
pub mod lab;
pub mod props;
pub mod report;
pub mod ring;

pub use associates::{AssocKind, BetaPartition, Relations};
pub use atoms::{AtomKind, AtomProfile};
pub use error::{Error, Result};
pub use extnat::ExtNat;
pub use factor::{EnumOptions, Enumeration, Factorization, LengthSet};
pub use graph::{phi, DivisorGraph, PseudoClique, Vertex};
pub use harness::{run_suite, Corpus, Status, SuiteConfig, SuiteReport, TheoremReport};
pub use lab::Lab;
pub use props::{ElementScope, PropertyReport, StructureClass, Verdict};
pub use ring::{BuildOptions, ElementId, ElementSet, FiniteRing, PowerCycle, RingSpec, TableFile};
