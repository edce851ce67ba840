//! Independent oracles for the derived values: a from-scratch closure of the
//! inclusion diagram checked against the lattice, brute-force minima, and
//! closed-form constants recomputed here rather than imported from the crate.

use distcalc::expr::{infer, parse, InferError};
use distcalc::space::{Space, SpaceKind, ALL_KINDS};
use distcalc::table::convolutor_space;

/// The diagram edges, re-typed here: top chain, bottom chain, the two
/// vertical inclusions, with `D_L∞` seated between `Ḃ` and `O_C`.
fn oracle_edges() -> Vec<(SpaceKind, SpaceKind)> {
    use SpaceKind::*;
    vec![
        (D, S),
        (S, DLp),
        (DLp, BDot),
        (BDot, DLInf),
        (DLInf, OC),
        (BDot, OC),
        (OC, OM),
        (OM, E),
        (EPrime, OMPrime),
        (OMPrime, OCPrime),
        (OCPrime, DPrimeL1),
        (DPrimeL1, DPrimeLq),
        (DPrimeLq, SPrime),
        (SPrime, DPrime),
        (D, EPrime),
        (E, DPrime),
    ]
}

/// Reflexive-transitive closure by Floyd–Warshall over the 15 kinds.
#[allow(clippy::needless_range_loop)]
fn oracle_closure() -> [[bool; 15]; 15] {
    let mut reach = [[false; 15]; 15];
    for k in 0..15 {
        reach[k][k] = true;
    }
    for (a, b) in oracle_edges() {
        reach[a as usize][b as usize] = true;
    }
    for k in 0..15 {
        for i in 0..15 {
            for j in 0..15 {
                if reach[i][k] && reach[k][j] {
                    reach[i][j] = true;
                }
            }
        }
    }
    reach
}

fn plainish(kind: SpaceKind) -> Space {
    match kind {
        SpaceKind::DLp => Space::d_lp(2.0, 1).unwrap(),
        SpaceKind::DPrimeLq => Space::d_prime_lq(2.0, 1).unwrap(),
        k => Space::plain(k, 1),
    }
}

#[test]
fn inclusion_agrees_with_the_independent_closure() {
    let reach = oracle_closure();
    for &a in &ALL_KINDS {
        for &b in &ALL_KINDS {
            let expected = reach[a as usize][b as usize];
            let got = plainish(a).includes_into(&plainish(b)).unwrap();
            assert_eq!(got, expected, "{:?} ⊆ {:?}", a, b);
        }
    }
}

#[test]
fn least_common_superspace_agrees_with_brute_force() {
    let reach = oracle_closure();
    for &a in &ALL_KINDS {
        for &b in &ALL_KINDS {
            // brute force: minima of the common-superspace set in the closure
            let commons: Vec<SpaceKind> = ALL_KINDS
                .iter()
                .copied()
                .filter(|&c| reach[a as usize][c as usize] && reach[b as usize][c as usize])
                .collect();
            let minima: Vec<SpaceKind> = commons
                .iter()
                .copied()
                .filter(|&c| {
                    commons
                        .iter()
                        .all(|&d| d == c || !reach[d as usize][c as usize])
                })
                .collect();
            let expected = if minima.len() == 1 {
                Some(minima[0])
            } else {
                None
            };
            let got = plainish(a).least_common_superspace(&plainish(b)).unwrap();
            assert_eq!(got.map(|s| s.kind()), expected, "lcs({a:?}, {b:?})");
        }
    }
}

#[test]
fn lcs_of_s_and_compact_distributions_is_the_full_space() {
    // frozen from the brute-force oracle over the encoded diagram: the only
    // common superspace of S and E' among the printed inclusions is D'
    let s = Space::plain(SpaceKind::S, 1);
    let ep = Space::plain(SpaceKind::EPrime, 1);
    assert_eq!(
        s.least_common_superspace(&ep).unwrap(),
        Some(Space::plain(SpaceKind::DPrime, 1))
    );
}

#[test]
fn tempered_against_general_distributions_is_not_admissible() {
    // neither S' ⊆ C(D') = E' nor D' ⊆ C(S') = OC' holds in the lattice
    let sp = Space::plain(SpaceKind::SPrime, 1);
    let dp = Space::plain(SpaceKind::DPrime, 1);
    assert!(!sp.includes_into(&convolutor_space(&dp).unwrap()).unwrap());
    assert!(!dp.includes_into(&convolutor_space(&sp).unwrap()).unwrap());
    let e = parse("(S:S') conv (T:D')", 1).unwrap();
    assert!(matches!(infer(&e), Err(InferError::NotAdmissible { .. })));
}

#[test]
fn binomial_row_sums_give_the_leibniz_constant() {
    fn binom(n: u64, k: u64) -> u64 {
        if k > n {
            return 0;
        }
        let mut acc = 1u64;
        for i in 0..k {
            acc = acc * (n - i) / (i + 1);
        }
        acc
    }
    for m in 0..=8u64 {
        let row_sum: u64 = (0..=m).map(|j| binom(m, j)).sum();
        assert_eq!(row_sum, 1u64 << m, "Σ_j C({m},j)");
    }
}

#[test]
fn dual_pairing_is_the_conjugate_exponent() {
    // spot values of 1/p + 1/q = 1 recomputed directly
    for (p, q) in [(2.0f64, 2.0f64), (1.25, 5.0), (1.5, 3.0), (4.0, 4.0 / 3.0)] {
        assert!((1.0 / p + 1.0 / q - 1.0).abs() < 1e-12);
        let dual = Space::d_lp(p, 1).unwrap().dual().unwrap();
        assert_eq!(dual.kind(), SpaceKind::DPrimeLq);
        assert!((dual.param().unwrap() - q).abs() < 1e-9, "q for p={p}");
    }
}
