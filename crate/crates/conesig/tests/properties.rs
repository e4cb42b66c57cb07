//! Cross-module invariants: randomized structural properties and the
//! exhaustive desk-scale sweeps that pin down the search and the rank
//! bounds.

use proptest::prelude::*;

use conesig::cone::{lorentz_rank, Cone, Factor, FactorKind, Relation, Signature};
use conesig::constructions::{
    big_lnln_simulacrum, lorentzify, simulacrum_complex_psd, simulacrum_quaternion_psd,
    simulacrum_real_psd, BigLnLnParams,
};
use conesig::expr::parse_cone;
use conesig::partitions::{partitions, PartitionConstraints};
use conesig::search::{
    check_conditions, enumerate_cones, find_simulacra, subproblem_violations, SearchPolicy,
};

fn factor_strategy() -> impl Strategy<Value = Factor> {
    (0u8..5, 0u32..=40).prop_map(|(kind, n)| match kind {
        0 => Factor::lorentz(n),
        1 => Factor::real_psd(n),
        2 => Factor::complex_psd(n),
        3 => Factor::quaternion_psd(n),
        // Octonion sizes above 3 name no algebra; stay in the valid range.
        _ => Factor::octonion_psd(n % 4),
    })
}

fn cone_strategy() -> impl Strategy<Value = Cone> {
    prop::collection::vec(factor_strategy(), 0..8)
        .prop_map(|factors| Cone::canonicalize(factors).expect("sizes are in range"))
}

proptest! {
    #[test]
    fn signature_is_additive_over_direct_sums(a in cone_strategy(), b in cone_strategy()) {
        prop_assert_eq!(a.direct_sum(&b).signature(), a.signature() + b.signature());
    }

    #[test]
    fn canonicalization_is_idempotent(c in cone_strategy()) {
        let again = Cone::canonicalize(c.factors().iter().copied()).expect("already canonical");
        prop_assert_eq!(again, c);
    }

    #[test]
    fn display_and_parse_round_trip(c in cone_strategy()) {
        let text = c.to_string();
        prop_assert_eq!(parse_cone(&text).expect("display emits valid syntax"), c);
    }

    #[test]
    fn relation_is_symmetric_and_signature_consistent(
        a in cone_strategy(),
        b in cone_strategy(),
    ) {
        let verdict = a.relation(&b);
        prop_assert_eq!(verdict, b.relation(&a));
        match verdict {
            Relation::Isomorphic => prop_assert_eq!(&a, &b),
            Relation::Simulacra => {
                prop_assert_ne!(&a, &b);
                prop_assert_eq!(a.signature(), b.signature());
            }
            Relation::Distinct => prop_assert_ne!(a.signature(), b.signature()),
        }
    }

    #[test]
    fn direct_summands_can_be_removed(a in cone_strategy(), b in cone_strategy()) {
        prop_assert_eq!(a.direct_sum(&b).remove_submultiset(&b), Some(a));
    }

    #[test]
    fn lorentzify_preserves_signature_or_reports_the_obstruction(c in cone_strategy()) {
        let has_h3c = c
            .factors()
            .iter()
            .any(|f| f.kind == FactorKind::ComplexPsd && f.n == 3);
        match lorentzify(&c) {
            None => prop_assert!(has_h3c),
            Some(flat) => {
                prop_assert!(!has_h3c);
                prop_assert_eq!(flat.signature(), c.signature());
                prop_assert!(flat.factors().iter().all(|f| f.kind == FactorKind::Lorentz));
            }
        }
    }

    #[test]
    fn partition_stream_matches_naive_recursion(
        total in 0u32..=28,
        min_part in 0u32..=5,
        max_part in proptest::option::of(0u32..=30),
        skip_two in any::<bool>(),
    ) {
        let constraints = PartitionConstraints::new(total)
            .with_min_part(min_part)
            .with_max_part(max_part)
            .with_skip_two(skip_two);
        let mut stream = partitions(constraints);
        let mut streamed = Vec::new();
        while let Some(parts) = stream.next() {
            prop_assert!(parts.windows(2).all(|w| w[0] <= w[1]));
            prop_assert_eq!(parts.iter().sum::<u32>(), total);
            streamed.push(parts.to_vec());
        }
        prop_assert_eq!(streamed, naive_partitions(constraints));
    }
}

fn naive_partitions(c: PartitionConstraints) -> Vec<Vec<u32>> {
    fn rec(rem: u32, floor: u32, c: &PartitionConstraints, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        for part in floor..=rem {
            if let Some(max) = c.max_part {
                if part > max {
                    break;
                }
            }
            if c.skip_two && part == 2 {
                continue;
            }
            cur.push(part);
            rec(rem - part, part, c, cur, out);
            cur.pop();
        }
    }
    let floor = c.min_part.max(1);
    let mut out = Vec::new();
    rec(c.total, floor, &c, &mut Vec::new(), &mut out);
    out
}

/// The matrix-family signature formulas remain correct one step below the
/// canonical range: at size 2 they reproduce the signature of the Lorentz
/// cone each family collapses to.
#[test]
fn size_two_matrix_formulas_agree_with_their_lorentz_images() {
    let cases: [(u128, u128, u32); 3] = [
        (2 * 3 / 2, 4, 3),      // real: n(n+1)/2 and n*n
        (4, 2 * 4 - 1, 4),      // complex: n*n and 2n*n - 1
        (2 * 4 - 2, 4 * 4, 6),  // quaternion: 2n*n - n and 4n*n
    ];
    for (dim, rank, image) in cases {
        let lorentz = Cone::lorentz(image).signature();
        assert_eq!(Signature::new(dim, rank), lorentz);
    }
}

#[test]
fn lorentz_rank_is_superadditive_with_known_equality_cases() {
    for x in 0u128..=1000 {
        for y in x..=(1000 - x) {
            let lhs = lorentz_rank(x) + lorentz_rank(y);
            let rhs = lorentz_rank(x + y);
            assert!(lhs <= rhs, "f({x}) + f({y}) > f({})", x + y);
            let equality = lhs == rhs;
            let expected = x.min(y) == 0 || (x == 1 && y == 1);
            assert_eq!(equality, expected, "equality pattern at ({x}, {y})");
        }
    }
}

#[test]
fn orthant_is_strictly_minimal_and_lorentz_strictly_maximal_up_to_dim_12() {
    for d in 0u32..=12 {
        let orthant = Cone::orthant(d);
        let lorentz = Cone::lorentz(d);
        for c in enumerate_cones(d, &SearchPolicy::full()) {
            let rank = c.signature().rank;
            assert!(rank >= u128::from(d));
            assert_eq!(rank == u128::from(d), c == orthant, "minimality at {c}");
            assert!(rank <= lorentz_rank(u128::from(d)));
            assert_eq!(
                rank == lorentz_rank(u128::from(d)),
                c == lorentz,
                "maximality at {c}"
            );
        }
    }
}

#[test]
fn enumeration_is_sound_up_to_dim_12() {
    for d in 0u32..=12 {
        for c in enumerate_cones(d, &SearchPolicy::full()) {
            assert_eq!(c.dim(), u128::from(d));
            let again = Cone::canonicalize(c.factors().iter().copied()).unwrap();
            assert_eq!(again, c, "emitted cone must already be canonical");
        }
    }
}

#[test]
fn three_conditions_force_n_past_twice_the_dimension() {
    for d in 0u32..=12 {
        for k in enumerate_cones(d, &SearchPolicy::full()) {
            for n in 1u32..=400 {
                let report = check_conditions(&k, n);
                if report.c1 && report.c2 && report.c3 {
                    assert!(report.n_exceeds_twice_dim, "K = {k}, n = {n}");
                }
            }
        }
    }
}

/// For every target of dimension at most 20, the pruned search returns
/// exactly the other cones with the target's signature.
#[test]
fn search_is_complete_up_to_dim_20() {
    use std::collections::HashMap;
    for d in 0u32..=20 {
        let cones: Vec<Cone> = enumerate_cones(d, &SearchPolicy::full()).collect();
        let mut by_signature: HashMap<Signature, Vec<usize>> = HashMap::new();
        for (i, c) in cones.iter().enumerate() {
            by_signature.entry(c.signature()).or_default().push(i);
        }
        for (i, target) in cones.iter().enumerate() {
            let mut expected: Vec<Cone> = by_signature[&target.signature()]
                .iter()
                .filter(|&&j| j != i)
                .map(|&j| cones[j].clone())
                .collect();
            expected.sort_unstable();
            let found = find_simulacra(target, &SearchPolicy::full());
            assert_eq!(found, expected, "target {target}");
            for witness in &found {
                assert_eq!(witness.relation(target), Relation::Simulacra);
            }
        }
    }
}

/// Where the first condition holds, no simulacrum of `K + L^n` may contain
/// a Lorentz factor larger than `n`.
#[test]
fn no_simulacrum_grows_a_lorentz_factor_past_n_when_condition_one_holds() {
    for d in 0u32..=6 {
        for k in enumerate_cones(d, &SearchPolicy::full()) {
            for n in 1u32..=20 {
                if !check_conditions(&k, n).c1 {
                    continue;
                }
                let sum = k.direct_sum(&Cone::lorentz(n));
                for j in find_simulacra(&sum, &SearchPolicy::full()) {
                    let biggest = j
                        .factors()
                        .iter()
                        .filter(|f| f.kind == FactorKind::Lorentz)
                        .map(|f| f.n)
                        .max()
                        .unwrap_or(0);
                    assert!(biggest <= n, "K = {k}, n = {n}, J = {j}");
                }
            }
        }
    }
}

/// The bound above is sharp: one step below the first condition's
/// threshold, `L^5 + L^7` already has a simulacrum with an `L^8` factor,
/// and that simulacrum leaves no intact `L^7` to remove.
#[test]
fn condition_one_is_sharp_at_the_boundary() {
    let k = Cone::lorentz(5);
    assert!(check_conditions(&k, 8).c1);
    assert!(!check_conditions(&k, 7).c1);
    let violations = subproblem_violations(&k, 7, &SearchPolicy::full());
    assert!(
        violations.contains(&parse_cone("L8 + R4").unwrap()),
        "{violations:?}"
    );
}

#[test]
fn closed_form_witnesses_hold_up_to_size_200() {
    for n in 3u32..=200 {
        let target = Cone::canonicalize([Factor::real_psd(n)]).unwrap();
        assert_eq!(
            simulacrum_real_psd(n).unwrap().relation(&target),
            Relation::Simulacra
        );
        let target = Cone::canonicalize([Factor::quaternion_psd(n)]).unwrap();
        assert_eq!(
            simulacrum_quaternion_psd(n).unwrap().relation(&target),
            Relation::Simulacra
        );
        if n >= 4 {
            let target = Cone::canonicalize([Factor::complex_psd(n)]).unwrap();
            assert_eq!(
                simulacrum_complex_psd(n).unwrap().relation(&target),
                Relation::Simulacra
            );
        }
    }
}

#[test]
fn big_lnln_parameters_stay_integral_up_to_ten_thousand() {
    for n in 100u32..=10_000 {
        // The constructor asserts integrality and nonnegativity internally.
        let p = BigLnLnParams::new(n).unwrap();
        assert_eq!(5 * p.m + p.k, n);
        assert!(p.k <= 4 && p.r <= 2);
    }
    for n in 100u32..=500 {
        let target = Cone::lorentz(n).direct_sum(&Cone::lorentz(n));
        assert_eq!(
            big_lnln_simulacrum(n).unwrap().relation(&target),
            Relation::Simulacra,
            "n = {n}"
        );
    }
}
