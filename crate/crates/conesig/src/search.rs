//! Exhaustive enumeration of canonical cones by dimension and pruned search
//! for simulacra of a target cone.
//!
//! A canonical cone of dimension `d` is a multiset of matrix factors of
//! total dimension at most `d` together with an integer partition of the
//! remaining dimension read as Lorentz factor sizes. Enumeration walks
//! exactly that product space, skipping partitions that contain a part 2
//! (the quadrant `L2` is already covered by 1+1).
//!
//! The simulacra search prunes a partial cone with dimension deficit `d'`
//! only when no completion can hit the target rank: every symmetric cone of
//! dimension `d'` has rank at least `d'` (the orthant is strictly minimal)
//! and at most `lorentz_rank(d')` (the Lorentz cone is strictly maximal), so
//! a branch dies exactly when `current_rank + lorentz_rank(d') <
//! target_rank` or `current_rank + d' > target_rank`. Both bounds hold over
//! all symmetric cones, so the pruning never loses a witness.

use std::ops::ControlFlow;

use crate::cone::{lorentz_rank, Cone, Factor, FactorKind, Relation};
use crate::partitions::{partitions, walk_partitions, PartitionConstraints, PartitionSink, Partitions};

/// A set of matrix factor kinds. Lorentz factors are always admissible in a
/// search (they are what integer partitions denote), so the set ranges over
/// the four matrix families only and ignores attempts to insert
/// [`FactorKind::Lorentz`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct KindSet(u8);

impl KindSet {
    pub const EMPTY: KindSet = KindSet(0);
    pub const ALL_MATRIX: KindSet = KindSet(0b1111);

    fn bit(kind: FactorKind) -> u8 {
        match kind {
            FactorKind::Lorentz => 0,
            FactorKind::RealPsd => 1,
            FactorKind::ComplexPsd => 2,
            FactorKind::QuaternionPsd => 4,
            FactorKind::OctonionPsd => 8,
        }
    }

    pub fn with(self, kind: FactorKind) -> KindSet {
        KindSet(self.0 | Self::bit(kind))
    }

    pub fn contains(self, kind: FactorKind) -> bool {
        let bit = Self::bit(kind);
        bit != 0 && self.0 & bit != 0
    }
}

impl FromIterator<FactorKind> for KindSet {
    fn from_iter<I: IntoIterator<Item = FactorKind>>(kinds: I) -> KindSet {
        kinds.into_iter().fold(KindSet::EMPTY, KindSet::with)
    }
}

/// Constraints on a search or enumeration space.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SearchPolicy {
    /// Whether matrix factors may appear at all.
    pub allow_nonlorentz: bool,
    /// Which matrix families may appear; consulted only when
    /// `allow_nonlorentz` is set.
    pub allowed_kinds: KindSet,
    /// Upper bound on the size of Lorentz factors, unbounded when `None`.
    pub max_lorentz_part: Option<u32>,
    /// Stop a simulacra search after this many witnesses, unbounded when
    /// `None`. Enumeration ignores this field.
    pub max_results: Option<usize>,
}

impl SearchPolicy {
    /// Everything admissible: all five families, no part bound, no result
    /// cap. Searches under this policy are exhaustive.
    pub fn full() -> SearchPolicy {
        SearchPolicy {
            allow_nonlorentz: true,
            allowed_kinds: KindSet::ALL_MATRIX,
            max_lorentz_part: None,
            max_results: None,
        }
    }

    /// Direct sums of Lorentz cones only.
    pub fn lorentz_only() -> SearchPolicy {
        SearchPolicy {
            allow_nonlorentz: false,
            allowed_kinds: KindSet::EMPTY,
            max_lorentz_part: None,
            max_results: None,
        }
    }

    pub fn with_max_lorentz_part(mut self, bound: Option<u32>) -> SearchPolicy {
        self.max_lorentz_part = bound;
        self
    }

    pub fn with_max_results(mut self, cap: Option<usize>) -> SearchPolicy {
        self.max_results = cap;
        self
    }

    pub fn with_allowed_kinds(mut self, kinds: KindSet) -> SearchPolicy {
        self.allowed_kinds = kinds;
        self
    }

    /// The matrix factors this policy admits in a cone of dimension `d`,
    /// largest first.
    fn matrix_factors(&self, d: u128) -> Vec<Factor> {
        if !self.allow_nonlorentz {
            return Vec::new();
        }
        let mut factors = nonlorentz_factors_up_to(d);
        factors.retain(|f| self.allowed_kinds.contains(f.kind));
        factors
    }
}

/// Every canonical matrix factor of dimension at most `d`, each exactly
/// once, sorted largest first: `H_n(R)` for dimensions 6, 10, 15, 21, ...,
/// `H_n(C)` for 9, 16, 25, ..., `H_n(H)` for 15, 28, 45, ..., and `H3(O)`
/// at 27.
pub fn nonlorentz_factors_up_to(d: u128) -> Vec<Factor> {
    let kinds = [
        FactorKind::RealPsd,
        FactorKind::ComplexPsd,
        FactorKind::QuaternionPsd,
        FactorKind::OctonionPsd,
    ];
    let mut out = Vec::new();
    for kind in kinds {
        let mut n: u32 = 3;
        loop {
            let f = Factor::new(kind, n);
            if f.dim() > d {
                break;
            }
            out.push(f);
            if kind == FactorKind::OctonionPsd {
                break;
            }
            match n.checked_add(1) {
                Some(next) => n = next,
                None => break,
            }
        }
    }
    out.sort_unstable();
    out
}

/// All multisets of the given matrix factors with total dimension at most
/// `d`, paired with the dimension left over for Lorentz factors. The empty
/// multiset is always included (and is the only one when `factors` is
/// empty).
fn matrix_prefixes(d: u32, factors: &[Factor]) -> Vec<(Vec<Factor>, u32)> {
    fn rec(
        factors: &[Factor],
        start: usize,
        left: u32,
        prefix: &mut Vec<Factor>,
        out: &mut Vec<(Vec<Factor>, u32)>,
    ) {
        out.push((prefix.clone(), left));
        for j in start..factors.len() {
            let fdim = factors[j].dim();
            if fdim > u128::from(left) {
                continue;
            }
            prefix.push(factors[j]);
            rec(factors, j, left - fdim as u32, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(factors, 0, d, &mut Vec::new(), &mut out);
    out
}

/// Streams every canonical cone of dimension exactly `d` admitted by the
/// policy, each exactly once.
pub fn enumerate_cones(d: u32, policy: &SearchPolicy) -> ConeEnumeration {
    let prefixes = matrix_prefixes(d, &policy.matrix_factors(u128::from(d)));
    ConeEnumeration {
        prefixes,
        next_prefix: 0,
        current: None,
        max_lorentz_part: policy.max_lorentz_part,
    }
}

/// Iterator over the cones of a fixed dimension. See [`enumerate_cones`].
pub struct ConeEnumeration {
    prefixes: Vec<(Vec<Factor>, u32)>,
    next_prefix: usize,
    current: Option<(usize, Partitions)>,
    max_lorentz_part: Option<u32>,
}

impl Iterator for ConeEnumeration {
    type Item = Cone;

    fn next(&mut self) -> Option<Cone> {
        loop {
            if let Some((index, parts)) = &mut self.current {
                if let Some(sizes) = parts.next() {
                    let prefix = &self.prefixes[*index].0;
                    let mut factors: Vec<Factor> =
                        Vec::with_capacity(prefix.len() + sizes.len());
                    factors.extend_from_slice(prefix);
                    factors.extend(sizes.iter().map(|&p| Factor::lorentz(p)));
                    factors.sort_unstable();
                    return Some(Cone::from_sorted_canonical(factors));
                }
                self.current = None;
                self.next_prefix += 1;
            }
            if self.next_prefix >= self.prefixes.len() {
                return None;
            }
            let fill = self.prefixes[self.next_prefix].1;
            let constraints = PartitionConstraints::new(fill)
                .with_skip_two(true)
                .with_max_part(self.max_lorentz_part);
            self.current = Some((self.next_prefix, partitions(constraints)));
        }
    }
}

/// All policy-admissible canonical cones sharing the target's signature
/// without being equal to it, sorted in the fixed cone order. With
/// `max_results` set, the search stops after that many witnesses (which
/// ones it keeps is deterministic but not specified); otherwise the result
/// is exhaustive. The trivial target has no simulacra.
pub fn find_simulacra(target: &Cone, policy: &SearchPolicy) -> Vec<Cone> {
    let signature = target.signature();
    if signature.dim == 0 {
        return Vec::new();
    }
    let d: u32 = signature
        .dim
        .try_into()
        .expect("search dimension exceeds the u32 range");
    let max_results = policy.max_results.unwrap_or(usize::MAX);
    if max_results == 0 {
        return Vec::new();
    }
    let mut search = SimulacraSearch {
        target,
        target_rank: signature.rank,
        d,
        factors: policy.matrix_factors(signature.dim),
        max_lorentz_part: policy.max_lorentz_part,
        max_results,
        prefix: Vec::new(),
        found: Vec::new(),
    };
    // Break means the result cap was hit; either way the search is over.
    let _ = search.explore(0, 0, 0);
    let mut found = search.found;
    found.sort_unstable();
    found
}

/// Some witness sharing the target's signature under the policy, if one
/// exists. Equivalent to a search capped at one result.
pub fn has_simulacra(target: &Cone, policy: &SearchPolicy) -> Option<Cone> {
    let capped = policy.with_max_results(Some(1));
    find_simulacra(target, &capped).pop()
}

struct SimulacraSearch<'a> {
    target: &'a Cone,
    target_rank: u128,
    d: u32,
    factors: Vec<Factor>,
    max_lorentz_part: Option<u32>,
    max_results: usize,
    prefix: Vec<Factor>,
    found: Vec<Cone>,
}

impl SimulacraSearch<'_> {
    /// Visits every matrix-factor multiset extending the current prefix from
    /// `factors[start..]`, filling the rest of the dimension with Lorentz
    /// factors at each node.
    fn explore(&mut self, start: usize, prefix_dim: u32, prefix_rank: u128) -> ControlFlow<()> {
        let fill = self.d - prefix_dim;
        let constraints = PartitionConstraints::new(fill)
            .with_skip_two(true)
            .with_max_part(self.max_lorentz_part);
        let mut sink = FillSink {
            target: self.target,
            target_rank: self.target_rank,
            prefix: &self.prefix,
            fill,
            placed: Vec::new(),
            placed_dim: 0,
            rank: prefix_rank,
            found: &mut self.found,
            max_results: self.max_results,
        };
        walk_partitions(constraints, &mut sink)?;

        for j in start..self.factors.len() {
            let factor = self.factors[j];
            if factor.dim() > u128::from(fill) {
                continue;
            }
            let next_dim = prefix_dim + factor.dim() as u32;
            let next_rank = prefix_rank + factor.rank_canonical();
            let deficit = u128::from(self.d - next_dim);
            if next_rank + lorentz_rank(deficit) < self.target_rank
                || next_rank + deficit > self.target_rank
            {
                continue;
            }
            self.prefix.push(factor);
            let flow = self.explore(j, next_dim, next_rank);
            self.prefix.pop();
            flow?;
        }
        ControlFlow::Continue(())
    }
}

/// Partition sink that accounts Lorentz ranks incrementally and applies the
/// two sound pruning bounds at every placed part.
struct FillSink<'a> {
    target: &'a Cone,
    target_rank: u128,
    prefix: &'a [Factor],
    fill: u32,
    placed: Vec<u32>,
    placed_dim: u32,
    rank: u128,
    found: &'a mut Vec<Cone>,
    max_results: usize,
}

impl PartitionSink for FillSink<'_> {
    fn push(&mut self, part: u32) -> bool {
        let rank = self.rank + lorentz_rank(u128::from(part));
        let deficit = u128::from(self.fill - self.placed_dim - part);
        if rank + lorentz_rank(deficit) < self.target_rank
            || rank + deficit > self.target_rank
        {
            return false;
        }
        self.placed.push(part);
        self.placed_dim += part;
        self.rank = rank;
        true
    }

    fn pop(&mut self, part: u32) {
        self.placed.pop();
        self.placed_dim -= part;
        self.rank -= lorentz_rank(u128::from(part));
    }

    fn leaf(&mut self) -> ControlFlow<()> {
        if self.rank != self.target_rank {
            // Only reachable for the empty fill; pushed parts are pruned to
            // land exactly on the target rank.
            return ControlFlow::Continue(());
        }
        let mut factors: Vec<Factor> =
            Vec::with_capacity(self.prefix.len() + self.placed.len());
        factors.extend_from_slice(self.prefix);
        factors.extend(self.placed.iter().map(|&p| Factor::lorentz(p)));
        factors.sort_unstable();
        let cone = Cone::from_sorted_canonical(factors);
        if cone == *self.target {
            return ControlFlow::Continue(());
        }
        self.found.push(cone);
        if self.found.len() >= self.max_results {
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    }
}

/// Numeric report on the three sufficiency conditions for a subproblem pair
/// `(K, n)`, plus the conclusion they are known to imply.
///
/// With `(dim, rank)` the signature of `K`:
///
/// - `c1`: `n >= 2 + rank - dim`,
/// - `c2`: `n >= 2 + lorentz_rank(1 + dim) - rank`,
/// - `c3`: `n >= 15`,
/// - `n_exceeds_twice_dim`: `n > 2 * dim`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ConditionReport {
    pub c1: bool,
    pub c2: bool,
    pub c3: bool,
    pub n_exceeds_twice_dim: bool,
}

impl ConditionReport {
    pub fn all_three(&self) -> bool {
        self.c1 && self.c2 && self.c3
    }
}

/// Evaluates the three conditions for the pair `(K, n)`. The comparisons
/// are rearranged to avoid subtraction, so no intermediate can underflow.
pub fn check_conditions(k: &Cone, n: u32) -> ConditionReport {
    let signature = k.signature();
    let n = u128::from(n);
    ConditionReport {
        c1: n + signature.dim >= 2 + signature.rank,
        c2: n + signature.rank >= 2 + lorentz_rank(1 + signature.dim),
        c3: n >= 15,
        n_exceeds_twice_dim: n > 2 * signature.dim,
    }
}

/// The simulacra of `K + L^n` that do not decompose as a simulacrum of `K`
/// plus an intact `L^n` summand. An empty result means solving the
/// `K + L^n` problem reduces to solving the `K` problem.
///
/// Removability is tested against the canonical form of `L^n` (for `n = 2`
/// that is the two rays of the quadrant), and the leftover cone is
/// re-validated through its signature rather than trusted.
pub fn subproblem_violations(k: &Cone, n: u32, policy: &SearchPolicy) -> Vec<Cone> {
    let ln = Cone::lorentz(n);
    let sum = k.direct_sum(&ln);
    find_simulacra(&sum, policy)
        .into_iter()
        .filter(|j| match j.remove_submultiset(&ln) {
            None => true,
            Some(rest) => rest.relation(k) != Relation::Simulacra,
        })
        .collect()
}

/// Whether every simulacrum of `K + L^n` found under the policy contains a
/// removable `L^n` whose removal leaves a simulacrum of `K`. Vacuously true
/// when `K + L^n` has no simulacra at all.
pub fn verify_subproblem_reduction(k: &Cone, n: u32, policy: &SearchPolicy) -> bool {
    subproblem_violations(k, n, policy).is_empty()
}
