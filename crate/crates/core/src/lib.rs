//! Finite set-theoretic solutions of the Yang–Baxter equation built from
//! semi-braces and strong semilattices.
//!
//! - [`catalog`]: named groups, maps and standard instances.
//! - [`finalg`]: table-driven semigroups, groups, semilattices and maps.
//! - [`semibrace`]: left semi-braces and their generalizations.
//! - [`ybesol`]: braid verification, classification, index and period.
//! - [`sslattice`]: strong semilattices of solutions and of semi-braces.

pub mod catalog;
pub mod error;
pub mod finalg;
pub mod semibrace;
pub mod sslattice;
pub mod ybesol;

pub use error::{Error, Result};
pub use finalg::{
    check_associative, check_homomorphism, complete_regular_inverses, is_clifford, BandKind, CarrierMap, CayleyTable,
    CompletelyRegular, FiniteGroup, FiniteSemigroup, Semilattice, Triple, Verdict,
};
pub use semibrace::{GeneralizedLeftSemiBrace, LeftSemiBrace, SemibraceVerdict, ZappaSzep};
pub use sslattice::SemilatticeSystem;
pub use ybesol::{classify, index_period, is_solution, power, SetSolution, SolutionProfile};
