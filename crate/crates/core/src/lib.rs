//! Exact-arithmetic toolkit for finite-dimensional weak Hopf algebras over the
//! rationals and for their partial actions on algebras.
//!
//! Everything here is verified, not assumed: structures are plain tables of
//! rational structure constants, and every axiom, lemma, and construction is
//! checked by exhaustive evaluation on basis tuples with exact arithmetic.
//! The main layers, bottom up:
//!
//! * [`linalg`] - arbitrary-precision rationals, dense matrices, canonical
//!   row-reduced subspaces, quotient spaces, Kronecker products.
//! * [`algebra`], [`coalgebra`], [`wha`] - finite-dimensional algebras,
//!   coalgebras, and weak Hopf algebras, with axiom checkers, the canonical
//!   counital projections, and an exhaustive structural lemma suite.
//! * [`groupoid`] - finite groupoids, their algebras, and subgroup enumeration
//!   inside isotropy groups.
//! * [`paction`] - partial module algebras: axiom and symmetry checkers,
//!   derived identities, globality tests, the groupoid correspondence, and the
//!   classification of partial actions on the ground field.
//! * [`smash`] - partial smash products `A # H` over the left counital
//!   subalgebra, with the unital corner.
//! * [`globalize`] - convolution algebras, standard globalizations, minimality,
//!   and comparison morphisms between globalizations.
//! * [`morita`] - the Morita context linking the partial smash product with the
//!   smash product of the globalization.
//! * [`files`] - JSON readers and writers for groupoids, algebras, weak Hopf
//!   algebras, and actions, with exact rationals as `"p/q"` strings.
//!
//! Failures are reported through [`report::VerificationReport`], which records
//! the offending law, basis indices, and both sides of the first few failing
//! instances.

pub mod algebra;
pub mod coalgebra;
pub mod error;
pub mod files;
pub mod globalize;
pub mod groupoid;
pub mod linalg;
pub mod morita;
pub mod paction;
pub mod report;
pub mod smash;
pub mod wha;

pub use algebra::Algebra;
pub use coalgebra::Coalgebra;
pub use error::{Error, Result};
pub use groupoid::{FiniteGroupoid, GroupTable, PartialGroupoidAction};
pub use linalg::{Matrix, QuotientSpace, Rat, Subspace};
pub use paction::{GroundFieldAction, PartialAction};
pub use report::VerificationReport;
pub use globalize::{ConvolutionAlgebra, Globalization, ModuleAlgebra};
pub use morita::MoritaContextData;
pub use smash::{PartialSmashAlgebra, SmashAlgebra, SmashCoefficients};
pub use wha::{CounitalMaps, WeakHopf};
