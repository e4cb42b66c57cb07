//! Closed-form simulacra witnesses.
//!
//! Each matrix family admits an explicit sum of Lorentz cones and rays with
//! the same signature, except the complex family at its smallest size,
//! which has no simulacrum at all. The functions here build those witnesses
//! directly from the published formulas instead of searching for them, so
//! they stay cheap at sizes far beyond what enumeration can reach.

use thiserror::Error;

use crate::cone::{Cone, Factor, FactorKind};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Error)]
pub enum ConstructionError {
    #[error("parameter {got} is out of range; this construction needs at least {min}")]
    OutOfRange { min: u32, got: u32 },
}

fn require_at_least(min: u32, got: u32) -> Result<(), ConstructionError> {
    if got < min {
        return Err(ConstructionError::OutOfRange { min, got });
    }
    Ok(())
}

fn orthant_size(count: u64) -> u32 {
    u32::try_from(count).expect("orthant too large to materialize")
}

/// `L^{n+1} + R^{(n^2-n-2)/2}`, a simulacrum of `H_n(R)` for `n >= 3`.
///
/// At `n = 2` the formula degenerates: `L^3` is isomorphic to `H_2(R)`
/// rather than a simulacrum of it.
pub fn simulacrum_real_psd(n: u32) -> Result<Cone, ConstructionError> {
    require_at_least(3, n)?;
    let n64 = u64::from(n);
    let rays = (n64 * n64 - n64 - 2) / 2;
    Ok(Cone::canonicalize(
        [Factor::lorentz(n + 1)]
            .into_iter()
            .chain(orthant_factors(rays)),
    )
    .expect("all factors are canonical"))
}

/// `2 L^{n+1} + R^{n^2-5n+6} + L^4 + (n-4) L^3`, a simulacrum of `H_n(C)`
/// for `n >= 4`.
///
/// `H_3(C)` has no simulacrum at all, so `n = 3` is out of range rather
/// than merely outside the formula's reach.
pub fn simulacrum_complex_psd(n: u32) -> Result<Cone, ConstructionError> {
    require_at_least(4, n)?;
    let n64 = u64::from(n);
    let rays = n64 * n64 + 6 - 5 * n64;
    let mut factors = vec![Factor::lorentz(n + 1), Factor::lorentz(n + 1), Factor::lorentz(4)];
    factors.extend(std::iter::repeat_n(Factor::lorentz(3), (n - 4) as usize));
    factors.extend(orthant_factors(rays));
    Ok(Cone::canonicalize(factors).expect("all factors are canonical"))
}

/// `L^{2n+2} + R^{2n^2-3n-2}`, a simulacrum of `H_n(H)` for `n >= 3`.
pub fn simulacrum_quaternion_psd(n: u32) -> Result<Cone, ConstructionError> {
    require_at_least(3, n)?;
    let n64 = u64::from(n);
    let rays = 2 * n64 * n64 - 3 * n64 - 2;
    Ok(Cone::canonicalize(
        [Factor::lorentz(2 * n + 2)]
            .into_iter()
            .chain(orthant_factors(rays)),
    )
    .expect("all factors are canonical"))
}

/// `L^11 + L^5 + L^3 + R^8`, a simulacrum of `H_3(O)`, the lone octonion
/// cone. Signature (27, 79).
pub fn simulacrum_octonion_psd() -> Cone {
    Cone::canonicalize([
        Factor::lorentz(11),
        Factor::lorentz(5),
        Factor::lorentz(3),
        Factor::lorentz(1),
        Factor::lorentz(1),
        Factor::lorentz(1),
        Factor::lorentz(1),
        Factor::lorentz(1),
        Factor::lorentz(1),
        Factor::lorentz(1),
        Factor::lorentz(1),
    ])
    .expect("all factors are canonical")
}

/// `L^7 + L^3 + R^8`, a simulacrum of `H_3(C) + H_3(C)` with signature
/// (18, 34). A single `H_3(C)` has no simulacra, but two copies already do.
pub fn simulacrum_double_complex() -> Cone {
    Cone::canonicalize(
        [Factor::lorentz(7), Factor::lorentz(3)]
            .into_iter()
            .chain(orthant_factors(8)),
    )
    .expect("all factors are canonical")
}

/// Replaces every matrix factor by its all-Lorentz witness, preserving the
/// signature. Returns `None` when the cone contains an `H_3(C)` factor,
/// since that factor has no all-Lorentz equivalent. A cone that is already
/// a sum of Lorentz factors comes back unchanged.
pub fn lorentzify(cone: &Cone) -> Option<Cone> {
    let mut factors: Vec<Factor> = Vec::new();
    for f in cone.factors() {
        let replacement = match f.kind {
            FactorKind::Lorentz => {
                factors.push(*f);
                continue;
            }
            FactorKind::RealPsd => simulacrum_real_psd(f.n),
            FactorKind::ComplexPsd => {
                if f.n == 3 {
                    return None;
                }
                simulacrum_complex_psd(f.n)
            }
            FactorKind::QuaternionPsd => simulacrum_quaternion_psd(f.n),
            FactorKind::OctonionPsd => Ok(simulacrum_octonion_psd()),
        };
        let replacement = replacement.expect("canonical factor sizes are in range");
        factors.extend_from_slice(replacement.factors());
    }
    factors.sort_unstable();
    Some(Cone::from_sorted_canonical(factors))
}

/// The parameters behind [`big_lnln_simulacrum`]. For `n >= 100` write
/// `n = 5m + k` with `0 <= k <= 4`; then `r` is the remainder of
/// `m - k^2 + 1` by 3, and `alpha` and `gamma` are the counts fixed by
///
/// ```text
/// alpha = (m - 4k^2 + 15k - 14 - r) / 3
/// gamma = 2m - 22k - (4m - 16k^2 - 68 + 5r) / 3
/// ```
///
/// Both divisions are exact and both results are nonnegative whenever
/// `m >= 20`, which `n >= 100` guarantees.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct BigLnLnParams {
    pub n: u32,
    pub m: u32,
    pub k: u32,
    pub r: u32,
    pub alpha: u32,
    pub gamma: u32,
}

impl BigLnLnParams {
    pub fn new(n: u32) -> Result<BigLnLnParams, ConstructionError> {
        require_at_least(100, n)?;
        let m = n / 5;
        let k = n % 5;
        let (mi, ki) = (i64::from(m), i64::from(k));
        let r = (mi - ki * ki + 1).rem_euclid(3);

        let alpha_num = mi - 4 * ki * ki + 15 * ki - 14 - r;
        assert!(
            alpha_num >= 0 && alpha_num % 3 == 0,
            "alpha formula must yield a nonnegative integer at n = {n}, got numerator {alpha_num}"
        );
        let inner = 4 * mi - 16 * ki * ki - 68 + 5 * r;
        assert!(
            inner % 3 == 0,
            "gamma formula must divide evenly at n = {n}, got numerator {inner}"
        );
        let gamma = 2 * mi - 22 * ki - inner / 3;
        assert!(gamma >= 0, "gamma must be nonnegative at n = {n}, got {gamma}");

        Ok(BigLnLnParams {
            n,
            m,
            k,
            r: r as u32,
            alpha: (alpha_num / 3) as u32,
            gamma: gamma as u32,
        })
    }
}

/// A simulacrum of `L^n + L^n` for any `n >= 100`, built in closed form:
///
/// ```text
/// L^{7m+k} + L^{m+3k-4} + alpha copies of L^4 + r copies of L^3 + R^gamma
/// ```
///
/// Its largest factor is `L^{n+2m}`, so it can never coincide with the
/// target. Small `n` is refused; below 100 the exhaustive search or the
/// curated table is the tool instead.
pub fn big_lnln_simulacrum(n: u32) -> Result<Cone, ConstructionError> {
    let p = BigLnLnParams::new(n)?;
    let big = u32::try_from(7 * u64::from(p.m) + u64::from(p.k))
        .expect("Lorentz factor size exceeds the supported range");
    let mut factors = vec![Factor::lorentz(big), Factor::lorentz(p.m + 3 * p.k - 4)];
    factors.extend(std::iter::repeat_n(Factor::lorentz(4), p.alpha as usize));
    factors.extend(std::iter::repeat_n(Factor::lorentz(3), p.r as usize));
    factors.extend(orthant_factors(u64::from(p.gamma)));
    Ok(Cone::canonicalize(factors).expect("all factors are canonical"))
}

/// The family showing the first sufficiency condition cannot be weakened.
///
/// For `K = L^m` with `m >= 5`, the largest `n` violating that condition is
/// `n = 1 + rank(K) - dim(K)`, and at exactly that `n` the sum `K + L^n`
/// has the simulacrum `R^{m-1} + L^{n+1}`, which contains no `L^n` summand
/// to peel off. Returns `(n, K + L^n, R^{m-1} + L^{n+1})`.
pub fn condition1_boundary_counterexample(
    m: u32,
) -> Result<(u32, Cone, Cone), ConstructionError> {
    require_at_least(5, m)?;
    let m64 = u64::from(m);
    let n = u32::try_from(1 + (m64 * m64 - m64 + 2) / 2 - m64)
        .expect("Lorentz factor size exceeds the supported range");
    let left = Cone::canonicalize([Factor::lorentz(m), Factor::lorentz(n)])
        .expect("all factors are canonical");
    let right = Cone::canonicalize(
        [Factor::lorentz(n + 1)]
            .into_iter()
            .chain(orthant_factors(m64 - 1)),
    )
    .expect("all factors are canonical");
    Ok((n, left, right))
}

fn orthant_factors(count: u64) -> impl Iterator<Item = Factor> {
    std::iter::repeat_n(Factor::lorentz(1), orthant_size(count) as usize)
}
