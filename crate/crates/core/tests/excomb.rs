//! Class tables, exceptional classes and orbit-trace identification.

use std::collections::BTreeSet;

use dp1::excomb::{self, Group, OrbitTrace};
use proptest::prelude::*;

/// x^n - 1 as the product of the cyclotomic polynomials of the divisors of n.
#[test]
fn cyclotomic_products() {
    for n in 1..=30u32 {
        let mut acc = vec![1i64];
        for d in (1..=n).filter(|d| n % d == 0) {
            let c = excomb::cyclotomic(d);
            let mut out = vec![0i64; acc.len() + c.len() - 1];
            for (i, a) in acc.iter().enumerate() {
                for (j, b) in c.iter().enumerate() {
                    out[i + j] += a * b;
                }
            }
            acc = out;
        }
        let mut want = vec![0i64; n as usize + 1];
        want[0] = -1;
        want[n as usize] = 1;
        assert_eq!(acc, want, "n = {n}");
    }
}

#[test]
fn exceptional_classes_are_the_240_roots() {
    let cs = excomb::exceptional_classes();
    let distinct: BTreeSet<(i8, [i8; 8])> = cs.iter().map(|c| (c.d, c.m)).collect();
    assert_eq!(distinct.len(), 240);
    for c in &cs {
        let sq: i32 = c.m.iter().map(|&m| (m as i32).pow(2)).sum();
        let deg: i32 = c.m.iter().map(|&m| m as i32).sum();
        // E^2 = -1 and E.K = -1
        assert_eq!((c.d as i32).pow(2) - sq, -1);
        assert_eq!(3 * c.d as i32 - deg, 1);
    }
}

/// Traces from eigenvalues, computed in floating point.
fn float_trace(r: &excomb::ClassRecord, n: u32) -> f64 {
    1.0 + r
        .eigenvalues
        .iter()
        .map(|&(m, k)| (2.0 * std::f64::consts::PI * (k * n) as f64 / m as f64).cos())
        .sum::<f64>()
}

#[test]
fn traces_agree_with_eigenvalues_and_orbits() {
    let t = excomb::tables();
    for g in [Group::E7, Group::E8] {
        for r in t.group(g) {
            let seq = excomb::trace_sequence(r, 6).unwrap();
            let fixed = excomb::fixed_curve_counts(r, 6);
            for n in 1..=6u32 {
                let tn = seq[n as usize - 1];
                assert!((tn as f64 - float_trace(r, n)).abs() < 1e-6, "{} {} n={n}", g.name(), r.index);
                // curves fixed by F^n counted from the orbit type
                let direct: u32 = r.orbit_type.iter().filter(|(s, _)| n % s == 0).map(|(s, m)| s * m).sum();
                assert_eq!(fixed[n as usize - 1], direct as u64);
            }
            assert_eq!(r.eigenvalues.len(), g.rank());
        }
    }
}

#[test]
fn twists_are_involutions() {
    for g in [Group::E7, Group::E8] {
        for r in excomb::tables().group(g) {
            let t = excomb::twist(g, r.index).unwrap();
            assert_eq!(excomb::twist(g, t).unwrap(), r.index);
            assert!(excomb::twist_by_eigenvalues(g, r.index).contains(&t));
            let tr = excomb::tables().record(g, t).unwrap();
            assert_eq!(tr.trace, 2 - r.trace, "{} {}", g.name(), r.index);
        }
    }
}

/// Data a type-`index` surface would produce; realizable counts need q >= 8.
fn synthetic(index: usize, q: u64, depth_a: usize, depth_b: usize) -> OrbitTrace {
    let t = excomb::tables();
    let tr = t.traces(Group::E8, index);
    let r = t.record(Group::E8, index).unwrap();
    let a = (1..=depth_a)
        .map(|n| {
            let qn = (q as i128).pow(n as u32);
            (qn * qn + tr[n - 1] as i128 * qn + 1) as u64
        })
        .collect();
    let b = (1..=depth_b as u32).map(|n| r.orbit_type.iter().filter(|o| o.0 == n).map(|o| o.1 as u64).sum()).collect();
    OrbitTrace { q, a, b }
}

#[test]
fn full_data_determines_the_type() {
    for i in 1..=112 {
        let id = excomb::identify_type(&synthetic(i, 9, 7, 2)).unwrap();
        assert_eq!(id.candidates, vec![i]);
        assert!(id.resolved);
    }
}

#[test]
fn shallow_data_leaves_ambiguity() {
    let sizes: Vec<usize> = (1..=112)
        .map(|i| excomb::identify_type(&synthetic(i, 8, 1, 0)).unwrap().candidates.len())
        .collect();
    assert!(sizes.iter().any(|&s| s > 1));
}

proptest! {
    #[test]
    fn identification_contains_the_source(i in 1usize..=112, q in 8u64..=20, da in 1usize..=7, db in 0usize..=3) {
        let id = excomb::identify_type(&synthetic(i, q, da, db)).unwrap();
        prop_assert!(id.candidates.contains(&i));
        for &c in &id.candidates {
            prop_assert!(excomb::consistent(&synthetic(i, q, da, db), c));
        }
    }

    #[test]
    fn perturbed_counts_are_rejected(i in 1usize..=112, q in 8u64..30, delta in 1u64..5) {
        let mut ot = synthetic(i, q, 2, 1);
        ot.a[0] += delta * q + 1;
        prop_assert!(!excomb::consistent(&ot, i));
    }

    #[test]
    fn blowups_of_any_permutation_match_a_row(perm in Just((0..8).collect::<Vec<usize>>()).prop_shuffle()) {
        let p: [usize; 8] = perm.try_into().unwrap();
        let bs = excomb::blowup_orbit_structure(&p);
        let total: u32 = bs.orbits.iter().map(|(s, m)| s * m).sum();
        prop_assert_eq!(total, 240);
        let canonical = excomb::blowup_orbit_structure(&excomb::perm_with_cycle_type(&excomb::cycle_type(&p)));
        prop_assert_eq!(&bs, &canonical);
        prop_assert_eq!(excomb::match_blowup(&bs).len(), 1);
    }
}
