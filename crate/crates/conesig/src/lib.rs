//! Symmetric cones as direct sums of irreducible factors, their signature
//! invariant, and searches over that invariant.
//!
//! Every symmetric cone decomposes, uniquely up to order, into irreducible
//! factors drawn from five families: Lorentz cones `L^n` and the cones of
//! positive semidefinite matrices over the reals, the complexes, the
//! quaternions (each for `n >= 3`), and the 3 by 3 octonion Hermitian
//! matrices. This crate represents such decompositions canonically
//! ([`Cone`]), computes the signature pairing real dimension with Lyapunov
//! rank ([`Signature`]), and answers the question the signature was built
//! for: which non-isomorphic cones share one ([`Relation::Simulacra`]).
//!
//! The [`search`] module enumerates cones and finds simulacra exhaustively
//! with sound pruning. The [`constructions`] module produces closed-form
//! witnesses at sizes enumeration cannot touch. Cone expressions like
//! `"H3(C) + 2*L5 + R4"` parse via [`parse_cone`] or [`str::parse`].
//!
//! ```
//! use conesig::{parse_cone, Relation};
//!
//! let a = parse_cone("H3(R)").unwrap();
//! let b = parse_cone("L4 + R2").unwrap();
//! assert_eq!(a.signature(), b.signature());
//! assert_eq!(a.relation(&b), Relation::Simulacra);
//! ```

pub mod cone;
pub mod constructions;
pub mod expr;
pub mod partitions;
pub mod search;

pub use cone::{lorentz_rank, Cone, ConeError, Factor, FactorKind, Relation, Signature};
pub use expr::{parse_cone, ExprError};
pub use search::{enumerate_cones, find_simulacra, has_simulacra, SearchPolicy};
