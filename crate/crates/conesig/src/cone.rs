//! Canonical symmetric cones and their signatures.
//!
//! Every symmetric cone decomposes, uniquely up to order, into a direct sum
//! of irreducible factors drawn from five families: Lorentz cones `L^n` and
//! the cones of positive semidefinite Hermitian matrices `H_n(F)` over the
//! reals, complexes, quaternions, and (for 3x3 matrices only) octonions.
//! This module stores that decomposition as a sorted multiset with the
//! degenerate sizes rewritten away, so that two [`Cone`] values are
//! Jordan-isomorphic exactly when they are equal.
//!
//! The signature of a cone is the pair (dimension, Lyapunov rank). Both
//! components are additive over direct sums and invariant under linear
//! isomorphism, which is what makes the signature a cheap isomorphism
//! obstruction: cones that share a signature without being equal are called
//! simulacra of each other.

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

/// The five families of irreducible symmetric cones.
///
/// The order of the variants is load-bearing: it is the tie-break order used
/// when two factors of equal dimension are compared (see [`Factor`]'s `Ord`
/// implementation).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum FactorKind {
    /// Second-order cone `L^n` of dimension `n`.
    Lorentz,
    /// Real symmetric positive semidefinite `n x n` matrices, `H_n(R)`.
    RealPsd,
    /// Complex Hermitian positive semidefinite `n x n` matrices, `H_n(C)`.
    ComplexPsd,
    /// Quaternion Hermitian positive semidefinite `n x n` matrices, `H_n(H)`.
    QuaternionPsd,
    /// Octonion Hermitian positive semidefinite matrices, `H_n(O)`.
    /// Only `n <= 3` corresponds to a Euclidean Jordan algebra.
    OctonionPsd,
}

/// One irreducible building block together with its size parameter.
///
/// `n` is the cone dimension for [`FactorKind::Lorentz`] and the matrix size
/// for the four matrix kinds. A `Factor` value may be pre-canonical (for
/// example `L2` or `H1(H)`); [`Cone::canonicalize`] rewrites such factors
/// into their canonical equivalents. Canonical factors satisfy:
///
/// - Lorentz: `n == 1` or `n >= 3` (never 0, never 2),
/// - RealPsd, ComplexPsd, QuaternionPsd: `n >= 3`,
/// - OctonionPsd: `n == 3` exactly.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Factor {
    pub kind: FactorKind,
    pub n: u32,
}

/// Lyapunov rank of the Lorentz cone `L^n`, extended to all sizes.
///
/// For canonical sizes (`n == 1`, `n >= 3`) this is `(n^2 - n + 2) / 2`. The
/// two degenerate sizes are covered consistently: `L^0` is the trivial cone
/// (rank 0, where the raw formula would give 1) and `L^2` is the quadrant
/// (rank 2, which the formula already yields). Search pruning and rank
/// bookkeeping over integer partitions rely on this function being total.
pub fn lorentz_rank(n: u128) -> u128 {
    if n == 0 {
        0
    } else {
        (n * n - n + 2) / 2
    }
}

impl Factor {
    pub fn new(kind: FactorKind, n: u32) -> Factor {
        Factor { kind, n }
    }

    pub fn lorentz(n: u32) -> Factor {
        Factor::new(FactorKind::Lorentz, n)
    }

    pub fn real_psd(n: u32) -> Factor {
        Factor::new(FactorKind::RealPsd, n)
    }

    pub fn complex_psd(n: u32) -> Factor {
        Factor::new(FactorKind::ComplexPsd, n)
    }

    pub fn quaternion_psd(n: u32) -> Factor {
        Factor::new(FactorKind::QuaternionPsd, n)
    }

    pub fn octonion_psd(n: u32) -> Factor {
        Factor::new(FactorKind::OctonionPsd, n)
    }

    /// Dimension of the factor as a real vector space.
    ///
    /// Total on all sizes, canonical or not: `L^n` has dimension `n`, and the
    /// matrix cones have dimension `n(n+1)/2`, `n^2`, `2n^2 - n`, and
    /// `4n^2 - 3n` over R, C, H, O respectively.
    pub fn dim(&self) -> u128 {
        let n = self.n as u128;
        match self.kind {
            FactorKind::Lorentz => n,
            FactorKind::RealPsd => n * (n + 1) / 2,
            FactorKind::ComplexPsd => n * n,
            FactorKind::QuaternionPsd => 2 * n * n - n,
            FactorKind::OctonionPsd => 4 * n * n - 3 * n,
        }
    }

    /// Lyapunov rank of a canonical factor.
    ///
    /// The closed forms are only valid on the canonical ranges; applied
    /// blindly they go wrong on the degenerate sizes (`L^0` would get rank 1,
    /// `H_0(C)` rank -1, `H_1(H)` rank 4). Non-canonical factors therefore
    /// produce an error instead of a silently wrong number.
    pub fn rank(&self) -> Result<u128, ConeError> {
        if !self.is_canonical() {
            return Err(ConeError::NonCanonicalFactor { factor: *self });
        }
        Ok(self.rank_canonical())
    }

    /// Rank without the canonicity check, for factors already known to be
    /// canonical (everything stored inside a [`Cone`]).
    pub(crate) fn rank_canonical(&self) -> u128 {
        debug_assert!(self.is_canonical(), "rank of non-canonical {self}");
        let n = self.n as u128;
        match self.kind {
            FactorKind::Lorentz => lorentz_rank(n),
            FactorKind::RealPsd => n * n,
            FactorKind::ComplexPsd => 2 * n * n - 1,
            FactorKind::QuaternionPsd => 4 * n * n,
            FactorKind::OctonionPsd => 79,
        }
    }

    /// Whether the factor lies in the canonical range of its family.
    pub fn is_canonical(&self) -> bool {
        match self.kind {
            FactorKind::Lorentz => self.n == 1 || self.n >= 3,
            FactorKind::RealPsd | FactorKind::ComplexPsd | FactorKind::QuaternionPsd => {
                self.n >= 3
            }
            FactorKind::OctonionPsd => self.n == 3,
        }
    }
}

/// Factors sort by descending dimension, then by the declaration order of
/// [`FactorKind`], then by `n`. Sorting a factor list with this order is all
/// that canonical form requires beyond the rewriting rules.
impl Ord for Factor {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .dim()
            .cmp(&self.dim())
            .then_with(|| self.kind.cmp(&other.kind))
            .then_with(|| self.n.cmp(&other.n))
    }
}

impl PartialOrd for Factor {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FactorKind::Lorentz => write!(f, "L{}", self.n),
            FactorKind::RealPsd => write!(f, "H{}(R)", self.n),
            FactorKind::ComplexPsd => write!(f, "H{}(C)", self.n),
            FactorKind::QuaternionPsd => write!(f, "H{}(H)", self.n),
            FactorKind::OctonionPsd => write!(f, "H{}(O)", self.n),
        }
    }
}

/// The pair (dimension, Lyapunov rank).
///
/// Signatures add componentwise over direct sums. For every symmetric cone
/// `dim <= rank`, with equality exactly for orthants.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Signature {
    pub dim: u128,
    pub rank: u128,
}

impl Signature {
    pub const ZERO: Signature = Signature { dim: 0, rank: 0 };

    pub fn new(dim: u128, rank: u128) -> Signature {
        Signature { dim, rank }
    }
}

impl std::ops::Add for Signature {
    type Output = Signature;

    fn add(self, rhs: Signature) -> Signature {
        Signature {
            dim: self.dim + rhs.dim,
            rank: self.rank + rhs.rank,
        }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.dim, self.rank)
    }
}

/// Verdict comparing two canonical cones.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Relation {
    /// Equal factor multisets, hence Jordan-isomorphic cones.
    Isomorphic,
    /// Equal signatures but different factor multisets.
    Simulacra,
    /// Different signatures.
    Distinct,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Relation::Isomorphic => "Isomorphic",
            Relation::Simulacra => "Simulacra",
            Relation::Distinct => "Distinct",
        };
        f.write_str(s)
    }
}

/// Errors from factor and cone construction.
#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum ConeError {
    /// Octonion Hermitian matrices form a Euclidean Jordan algebra only up
    /// to size 3, so `H4(O)` and beyond denote no symmetric cone at all.
    #[error("H{n}(O) does not exist: octonion Hermitian matrices form a Euclidean Jordan algebra only for sizes 0 through 3")]
    NoOctonionAlgebra { n: u32 },
    /// The rank formulas are wrong outside the canonical ranges; the caller
    /// skipped canonicalization.
    #[error("rank of non-canonical factor {factor} is undefined; canonicalize first")]
    NonCanonicalFactor { factor: Factor },
}

/// A symmetric cone in canonical form: a sorted multiset of canonical
/// factors. The empty multiset is the trivial cone.
///
/// Construction goes through [`Cone::canonicalize`] (or the convenience
/// constructors), so every `Cone` in circulation upholds the factor
/// invariants. Equality of `Cone` values coincides with Jordan isomorphism
/// of the cones they denote, and the derived ordering is the fixed total
/// order used for deterministic search output.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Cone {
    factors: Vec<Factor>,
}

impl Cone {
    /// The trivial cone, an empty direct sum.
    pub fn empty() -> Cone {
        Cone::default()
    }

    /// The Lorentz cone `L^n` in canonical form. `L0` is the trivial cone
    /// and `L2` is the quadrant, so the result is not always a single factor.
    pub fn lorentz(n: u32) -> Cone {
        Cone::canonicalize([Factor::lorentz(n)])
            .expect("Lorentz factors always canonicalize")
    }

    /// The nonnegative orthant of dimension `n`: a sum of `n` rays.
    pub fn orthant(n: u32) -> Cone {
        Cone {
            factors: vec![Factor::lorentz(1); n as usize],
        }
    }

    /// Rewrites raw factors into canonical form and sorts them.
    ///
    /// The rewrites: zero-size factors vanish; size-1 matrix factors and
    /// `L2`'s two halves become rays `L1`; the size-2 matrix cones are
    /// Lorentz cones in disguise (`H2(R) = L3`, `H2(C) = L4`, `H2(H) = L6`,
    /// `H2(O) = L10`). Everything else is kept as is.
    ///
    /// Fails only on octonion factors of size 4 or more, which denote no
    /// symmetric cone.
    pub fn canonicalize(raw: impl IntoIterator<Item = Factor>) -> Result<Cone, ConeError> {
        let mut factors = Vec::new();
        for f in raw {
            match (f.kind, f.n) {
                (FactorKind::OctonionPsd, n) if n >= 4 => {
                    return Err(ConeError::NoOctonionAlgebra { n });
                }
                (_, 0) => {}
                (FactorKind::Lorentz, 2) => {
                    factors.push(Factor::lorentz(1));
                    factors.push(Factor::lorentz(1));
                }
                (FactorKind::Lorentz, _) => factors.push(f),
                (_, 1) => factors.push(Factor::lorentz(1)),
                (FactorKind::RealPsd, 2) => factors.push(Factor::lorentz(3)),
                (FactorKind::ComplexPsd, 2) => factors.push(Factor::lorentz(4)),
                (FactorKind::QuaternionPsd, 2) => factors.push(Factor::lorentz(6)),
                (FactorKind::OctonionPsd, 2) => factors.push(Factor::lorentz(10)),
                _ => factors.push(f),
            }
        }
        factors.sort_unstable();
        Ok(Cone { factors })
    }

    /// Builds a cone from factors already known to be canonical and sorted.
    pub(crate) fn from_sorted_canonical(factors: Vec<Factor>) -> Cone {
        debug_assert!(factors.iter().all(Factor::is_canonical));
        debug_assert!(factors.windows(2).all(|w| w[0] <= w[1]));
        Cone { factors }
    }

    /// The canonical factors, sorted in the fixed total order.
    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    /// Dimension of the cone, the sum of its factor dimensions.
    pub fn dim(&self) -> u128 {
        self.factors.iter().map(Factor::dim).sum()
    }

    /// The (dimension, Lyapunov rank) pair. Computed by summation in one
    /// pass; cones with very many factors pay linear cost per call.
    pub fn signature(&self) -> Signature {
        let mut sig = Signature::ZERO;
        for f in &self.factors {
            sig.dim += f.dim();
            sig.rank += f.rank_canonical();
        }
        sig
    }

    /// Direct sum of two cones: the union of their factor multisets.
    pub fn direct_sum(&self, other: &Cone) -> Cone {
        let mut factors = Vec::with_capacity(self.factors.len() + other.factors.len());
        factors.extend_from_slice(&self.factors);
        factors.extend_from_slice(&other.factors);
        factors.sort_unstable();
        Cone { factors }
    }

    /// How this cone relates to another: equal multisets are isomorphic,
    /// equal signatures with different multisets are simulacra, and anything
    /// else is distinct.
    pub fn relation(&self, other: &Cone) -> Relation {
        if self == other {
            Relation::Isomorphic
        } else if self.signature() == other.signature() {
            Relation::Simulacra
        } else {
            Relation::Distinct
        }
    }

    /// Removes `other`'s factor multiset from this cone's, or returns `None`
    /// if `other` is not contained in it. Used to peel a known summand off a
    /// direct sum.
    pub fn remove_submultiset(&self, other: &Cone) -> Option<Cone> {
        let mut remaining = Vec::with_capacity(self.factors.len());
        let mut to_remove = other.factors.iter().peekable();
        for f in &self.factors {
            match to_remove.peek() {
                Some(&&r) if r == *f => {
                    to_remove.next();
                }
                _ => remaining.push(*f),
            }
        }
        if to_remove.peek().is_some() {
            None
        } else {
            Some(Cone { factors: remaining })
        }
    }
}

/// Canonical text form: factors in sorted order joined by " + ", with the
/// trailing run of `k` rays coalesced into the orthant notation `Rk`. The
/// trivial cone prints as "R0". Examples: "L11 + L5 + L3 + R8", "H3(C)",
/// "R2".
impl fmt::Display for Cone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ray = Factor::lorentz(1);
        let first_ray = self.factors.partition_point(|g| *g != ray);
        let rays = self.factors.len() - first_ray;
        let mut sep = "";
        for g in &self.factors[..first_ray] {
            write!(f, "{sep}{g}")?;
            sep = " + ";
        }
        if rays > 0 || self.factors.is_empty() {
            write!(f, "{sep}R{rays}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(dim: u128, rank: u128) -> Signature {
        Signature::new(dim, rank)
    }

    #[test]
    fn factor_dimensions_match_closed_forms() {
        assert_eq!(Factor::lorentz(5).dim(), 5);
        assert_eq!(Factor::real_psd(3).dim(), 6);
        assert_eq!(Factor::complex_psd(3).dim(), 9);
        assert_eq!(Factor::quaternion_psd(3).dim(), 15);
        assert_eq!(Factor::octonion_psd(3).dim(), 27);
        // Pre-canonical sizes still have well-defined dimensions.
        assert_eq!(Factor::lorentz(0).dim(), 0);
        assert_eq!(Factor::real_psd(2).dim(), 3);
        assert_eq!(Factor::octonion_psd(2).dim(), 10);
    }

    #[test]
    fn factor_ranks_match_closed_forms() {
        assert_eq!(Factor::lorentz(4).rank(), Ok(7));
        assert_eq!(Factor::lorentz(1).rank(), Ok(1));
        assert_eq!(Factor::real_psd(3).rank(), Ok(9));
        assert_eq!(Factor::complex_psd(3).rank(), Ok(17));
        assert_eq!(Factor::quaternion_psd(3).rank(), Ok(36));
        assert_eq!(Factor::octonion_psd(3).rank(), Ok(79));
    }

    #[test]
    fn rank_of_degenerate_factors_is_an_error() {
        for bad in [
            Factor::lorentz(0),
            Factor::lorentz(2),
            Factor::real_psd(1),
            Factor::complex_psd(0),
            Factor::quaternion_psd(2),
            Factor::octonion_psd(1),
        ] {
            assert_eq!(
                bad.rank(),
                Err(ConeError::NonCanonicalFactor { factor: bad }),
                "{bad} should have no direct rank"
            );
        }
    }

    #[test]
    fn lorentz_rank_covers_the_degenerate_sizes() {
        assert_eq!(lorentz_rank(0), 0);
        assert_eq!(lorentz_rank(1), 1);
        assert_eq!(lorentz_rank(2), 2);
        assert_eq!(lorentz_rank(3), 4);
        assert_eq!(lorentz_rank(10), 46);
        assert_eq!(lorentz_rank(100), 4951);
    }

    #[test]
    fn canonicalize_rewrites_degenerate_factors() {
        let cases: Vec<(Factor, Vec<Factor>)> = vec![
            (Factor::lorentz(0), vec![]),
            (Factor::lorentz(2), vec![Factor::lorentz(1); 2]),
            (Factor::real_psd(0), vec![]),
            (Factor::real_psd(1), vec![Factor::lorentz(1)]),
            (Factor::complex_psd(1), vec![Factor::lorentz(1)]),
            (Factor::real_psd(2), vec![Factor::lorentz(3)]),
            (Factor::complex_psd(2), vec![Factor::lorentz(4)]),
            (Factor::quaternion_psd(2), vec![Factor::lorentz(6)]),
            (Factor::octonion_psd(2), vec![Factor::lorentz(10)]),
            (Factor::octonion_psd(3), vec![Factor::octonion_psd(3)]),
        ];
        for (raw, expected) in cases {
            let cone = Cone::canonicalize([raw]).unwrap();
            assert_eq!(cone.factors(), expected.as_slice(), "canonicalize {raw}");
        }
    }

    #[test]
    fn canonicalize_rejects_large_octonion_matrices() {
        assert_eq!(
            Cone::canonicalize([Factor::octonion_psd(4)]),
            Err(ConeError::NoOctonionAlgebra { n: 4 })
        );
        assert_eq!(
            Cone::canonicalize([Factor::octonion_psd(5)]),
            Err(ConeError::NoOctonionAlgebra { n: 5 })
        );
    }

    #[test]
    fn canonicalize_drops_trivial_summands() {
        let cone = Cone::canonicalize([Factor::lorentz(0), Factor::lorentz(5)]).unwrap();
        assert_eq!(cone.factors(), &[Factor::lorentz(5)]);
    }

    #[test]
    fn factors_sort_big_to_small_with_kind_tiebreak() {
        // L6 and H3(R) share dimension 6; the Lorentz factor sorts first.
        let cone = Cone::canonicalize([
            Factor::lorentz(1),
            Factor::real_psd(3),
            Factor::lorentz(6),
            Factor::complex_psd(3),
        ])
        .unwrap();
        assert_eq!(
            cone.factors(),
            &[
                Factor::complex_psd(3),
                Factor::lorentz(6),
                Factor::real_psd(3),
                Factor::lorentz(1),
            ]
        );
    }

    #[test]
    fn signatures_from_the_closed_forms() {
        let h3r = Cone::canonicalize([Factor::real_psd(3)]).unwrap();
        assert_eq!(h3r.signature(), sig(6, 9));

        let witness =
            Cone::canonicalize([Factor::lorentz(4), Factor::lorentz(1), Factor::lorentz(1)])
                .unwrap();
        assert_eq!(witness.signature(), sig(6, 9));

        assert_eq!(Cone::empty().signature(), Signature::ZERO);
        assert_eq!(Cone::orthant(8).signature(), sig(8, 8));
        assert_eq!(Cone::lorentz(2).signature(), sig(2, 2));
    }

    #[test]
    fn relation_distinguishes_the_three_verdicts() {
        let h3r = Cone::canonicalize([Factor::real_psd(3)]).unwrap();
        let witness =
            Cone::canonicalize([Factor::lorentz(4), Factor::lorentz(1), Factor::lorentz(1)])
                .unwrap();
        assert_eq!(h3r.relation(&witness), Relation::Simulacra);
        assert_eq!(Cone::lorentz(3).relation(&Cone::lorentz(3)), Relation::Isomorphic);

        let l5 = Cone::lorentz(5);
        let l4_l1 = Cone::canonicalize([Factor::lorentz(4), Factor::lorentz(1)]).unwrap();
        assert_eq!(l5.signature(), sig(5, 11));
        assert_eq!(l4_l1.signature(), sig(5, 8));
        assert_eq!(l5.relation(&l4_l1), Relation::Distinct);
    }

    #[test]
    fn orthant_is_a_sum_of_rays() {
        assert_eq!(
            Cone::orthant(2),
            Cone::canonicalize([Factor::lorentz(1), Factor::lorentz(1)]).unwrap()
        );
        assert_eq!(Cone::orthant(0), Cone::empty());
        assert_eq!(Cone::lorentz(2), Cone::orthant(2));
    }

    #[test]
    fn direct_sum_merges_multisets() {
        let a = Cone::canonicalize([Factor::lorentz(4), Factor::lorentz(1)]).unwrap();
        let b = Cone::canonicalize([Factor::real_psd(3), Factor::lorentz(9)]).unwrap();
        let sum = a.direct_sum(&b);
        assert_eq!(
            sum.factors(),
            &[
                Factor::lorentz(9),
                Factor::real_psd(3),
                Factor::lorentz(4),
                Factor::lorentz(1),
            ]
        );
        assert_eq!(sum.signature(), sig(20, 54));
        assert_eq!(a.direct_sum(&Cone::empty()), a);
    }

    #[test]
    fn remove_submultiset_peels_summands() {
        let sum = Cone::canonicalize([
            Factor::lorentz(5),
            Factor::lorentz(5),
            Factor::lorentz(1),
        ])
        .unwrap();
        let l5 = Cone::lorentz(5);
        let peeled = sum.remove_submultiset(&l5).unwrap();
        assert_eq!(
            peeled.factors(),
            &[Factor::lorentz(5), Factor::lorentz(1)]
        );
        // Only one L1 is present, so removing the quadrant fails.
        assert_eq!(sum.remove_submultiset(&Cone::orthant(2)), None);
        assert_eq!(sum.remove_submultiset(&Cone::empty()), Some(sum.clone()));
        assert_eq!(sum.remove_submultiset(&sum), Some(Cone::empty()));
    }

    #[test]
    fn display_coalesces_trailing_rays() {
        let octo_witness = Cone::canonicalize([
            Factor::lorentz(11),
            Factor::lorentz(5),
            Factor::lorentz(3),
        ])
        .unwrap()
        .direct_sum(&Cone::orthant(8));
        assert_eq!(octo_witness.to_string(), "L11 + L5 + L3 + R8");
        assert_eq!(Cone::empty().to_string(), "R0");
        assert_eq!(Cone::orthant(1).to_string(), "R1");
        assert_eq!(Cone::lorentz(2).to_string(), "R2");
        assert_eq!(Cone::lorentz(7).to_string(), "L7");
        let h = Cone::canonicalize([Factor::quaternion_psd(4)]).unwrap();
        assert_eq!(h.to_string(), "H4(H)");
    }

    #[test]
    fn signature_display_is_a_pair() {
        assert_eq!(sig(27, 79).to_string(), "(27, 79)");
    }
}
