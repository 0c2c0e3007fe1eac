use std::collections::BTreeSet;

use dp1::gfield::Elem;
use dp1::sextic::{self, Sextic};
use dp1::sweep::{self, Family, SweepOptions, TypeStatus};

/// Monomials x^i y^j z^k w^l carrying a free coefficient, and the fixed
/// terms, for each family as written in its defining equation.
type Mono = (u32, u32, u32, u32);

fn form(deg: u32, zk: u32, wl: u32) -> Vec<Mono> {
    (0..=deg).map(|j| (deg - j, j, zk, wl)).collect()
}

fn members_of(q: u64) -> Vec<(Vec<(Mono, Elem)>, Vec<Mono>)> {
    let sextic_f6 = form(6, 0, 0);
    match q {
        2 => {
            let free = [form(1, 1, 1), form(3, 0, 1), form(4, 1, 0), sextic_f6].concat();
            vec![(vec![], free)]
        }
        3 => {
            let mut out = Vec::new();
            for (fixed, a) in [
                (vec![((2, 0, 2, 0), 1), ((0, 2, 2, 0), 1)], [(3, 1, 1, 0), (2, 2, 1, 0)]),
                (vec![((2, 0, 2, 0), 1), ((0, 2, 2, 0), 2)], [(3, 1, 1, 0), (2, 2, 1, 0)]),
                (vec![((2, 0, 2, 0), 1)], [(1, 3, 1, 0), (0, 4, 1, 0)]),
                (vec![((2, 0, 2, 0), 2)], [(1, 3, 1, 0), (0, 4, 1, 0)]),
            ] {
                out.push((fixed, [a.to_vec(), sextic_f6.clone()].concat()));
            }
            let last = [form(4, 1, 0), vec![(5, 1, 0, 0), (4, 2, 0, 0), (2, 4, 0, 0), (1, 5, 0, 0)]].concat();
            out.push((vec![], last));
            out
        }
        _ => unreachable!(),
    }
}

/// Coefficient vector of a sextic, keyed by monomial.
fn coefficient(codes: &[Elem], m: Mono) -> Elem {
    let shapes = [(1, 1, 1), (2, 2, 0), (3, 0, 1), (4, 1, 0), (6, 0, 0)];
    let mut base = 0;
    for (d, zk, wl) in shapes {
        if m.2 == zk && m.3 == wl && m.0 + m.1 == d {
            return codes[base + m.1 as usize];
        }
        base += d as usize + 1;
    }
    panic!("not a coefficient monomial {m:?}")
}

fn all_monomials() -> Vec<Mono> {
    [form(1, 1, 1), form(2, 2, 0), form(3, 0, 1), form(4, 1, 0), form(6, 0, 0)].concat()
}

#[test]
fn families_are_the_defined_sets() {
    for q in [2, 3] {
        let fams = sweep::families(q).unwrap();
        let defs = members_of(q);
        assert_eq!(fams.len(), defs.len());
        for (fam, (fixed, free)) in fams.iter().zip(&defs) {
            assert_eq!(fam.cardinality(), q.pow(free.len() as u32));
            let mut seen = BTreeSet::new();
            for s in sweep::enumerate_family(fam).unwrap() {
                let c = s.codes();
                for m in all_monomials() {
                    let want = fixed.iter().find(|(fm, _)| *fm == m).map(|&(_, v)| v);
                    match want {
                        Some(v) => assert_eq!(coefficient(&c, m), v),
                        None if !free.contains(&m) => assert_eq!(coefficient(&c, m), 0, "{m:?}"),
                        None => {}
                    }
                }
                assert!(seen.insert(c));
            }
            assert_eq!(seen.len() as u64, fam.cardinality());
        }
    }
}

#[test]
fn unknown_family_is_rejected() {
    assert!(sweep::select(3, Some(6)).is_err());
    assert!(sweep::families(5).is_err());
    assert_eq!(sweep::select(4, Some(15)).unwrap()[0].id, 15);
}

/// 4096 members over F_2 with f1 = x, f3 = y^3 and free f4, f6.
fn small_family() -> Family {
    let mut fixed = vec![0; 21];
    fixed[0] = 1;
    fixed[8] = 1;
    Family { q: 2, id: 1, fixed, free_slots: (9..21).collect() }
}

fn opts(batch: u64) -> SweepOptions {
    SweepOptions { batch, ..Default::default() }
}

#[test]
fn worker_count_does_not_change_report() {
    let fams = [small_family()];
    let run = |threads| {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
        pool.install(|| sweep::run_sweep(2, &fams, &opts(256)).unwrap())
    };
    assert_eq!(run(1).canonical(), run(4).canonical());
}

#[test]
fn resume_reproduces_report() {
    let fams = [small_family()];
    let dir = tempfile::tempdir().unwrap();
    let ck = dir.path().join("ck.json");
    let straight = sweep::run_sweep(2, &fams, &opts(256)).unwrap();
    let first = SweepOptions { checkpoint: Some(ck.clone()), max_batches: Some(5), ..opts(256) };
    let part = sweep::run_sweep(2, &fams, &first).unwrap();
    assert!(!part.complete);
    assert_eq!(sweep::load_checkpoint(&ck).unwrap().cursor, 5 * 256);
    let rest = SweepOptions { resume: Some(ck.clone()), ..opts(256) };
    let resumed = sweep::run_sweep(2, &fams, &rest).unwrap();
    assert_eq!(straight.canonical(), resumed.canonical());
    assert_eq!(resumed.lineage.len(), 1);

    // a checkpoint from another sweep or another version is refused
    let other = SweepOptions { resume: Some(ck.clone()), ..opts(512) };
    assert!(sweep::run_sweep(2, &fams, &other).is_err());
    let mut st = sweep::load_checkpoint(&ck).unwrap();
    st.version += 1;
    std::fs::write(&ck, serde_json::to_string(&st).unwrap()).unwrap();
    assert!(sweep::run_sweep(2, &fams, &rest).is_err());
}

/// The pruned sweep finds exactly the types that full classification of
/// every member finds, and never claims absence on a partial family list.
#[test]
fn pruning_loses_no_type() {
    let fam = small_family();
    let rep = sweep::run_sweep(2, &[fam.clone()], &opts(256)).unwrap();
    assert_eq!(rep.counters.enumerated, 4096);
    assert_eq!(rep.counters.enumerated, rep.counters.smooth + rep.counters.singular);
    let f = fam.field().unwrap();
    let mut brute = BTreeSet::new();
    let mut smooth = 0;
    for m in 0..fam.cardinality() {
        let s = fam.member(&f, m);
        if !sextic::is_smooth(&s).unwrap().is_smooth() {
            continue;
        }
        smooth += 1;
        let c = sextic::classify(&s, 7, 2).unwrap();
        assert!(c.identification.resolved);
        brute.insert(c.identification.candidates[0]);
    }
    assert_eq!(smooth, rep.counters.smooth);
    assert_eq!(rep.found(), brute);
    assert!(rep.absent().is_empty());
    assert!(rep.types.values().all(|s| !matches!(s, TypeStatus::Absent)));
    rep.verify().unwrap();
}

#[test]
fn found_examples_reverify_from_codes() {
    let rep = sweep::run_sweep(2, &[small_family()], &opts(1024)).unwrap();
    let mut json: serde_json::Value = serde_json::from_str(&serde_json::to_string(&rep).unwrap()).unwrap();
    let back: sweep::SweepReport = serde_json::from_value(json.clone()).unwrap();
    back.verify().unwrap();
    // tamper with one example's point count
    let (t, _) = rep.types.iter().find(|(_, s)| matches!(s, TypeStatus::Found(_))).unwrap();
    json["types"][t.to_string()]["orbit_trace"]["a"][0] = serde_json::json!(0);
    let bad: sweep::SweepReport = serde_json::from_value(json).unwrap();
    assert!(bad.verify().is_err());
}

#[test]
fn random_mode_is_seeded() {
    let a = sweep::run_random(5, 200, 7).unwrap();
    let b = sweep::run_random(5, 200, 7).unwrap();
    assert_eq!(a.canonical(), b.canonical());
    assert!(a.absent().is_empty());
    for (t, s) in &a.types {
        if let TypeStatus::Found(ex) = s {
            let f = dp1::gfield::make_field(5, 1).unwrap();
            let s = Sextic::from_codes(f, &ex.codes).unwrap();
            assert_eq!(s.f1.c.iter().chain(&s.f2.c).chain(&s.f3.c).filter(|&&c| c != 0).count(), 0);
            assert!(sextic::weil_consistent(&ex.orbit_trace, *t));
        }
    }
}
