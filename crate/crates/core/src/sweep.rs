//! Exhaustive enumeration of normal-form families of sextics, with a
//! deterministic depth policy and resumable checkpoints.

use std::collections::{BTreeMap, BTreeSet};
use std::path::{Path, PathBuf};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::excomb::{self, Identification, OrbitTrace};
use crate::gfield::{make_field, Elem, FieldRef};
use crate::sextic::{self, Sextic, POINT_BUDGET};

pub const CHECKPOINT_VERSION: u32 = 1;
pub const BATCH: u64 = 4096;
pub const TYPES: usize = 112;
/// b2 is part of the depth policy only while q^6 quadratics stay below this.
pub const SWEEP_CURVE_BUDGET: u128 = 1 << 18;

/// Code positions of the five coefficient forms in the 21-vector.
const F1: usize = 0;
const F2: usize = 2;
const F3: usize = 5;
const F4: usize = 9;
const F6: usize = 14;

/// A family: fixed coefficient codes plus free positions ranging over F_q.
/// Member code m has digit i (base q, least significant first) at slot i.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Family {
    pub q: u64,
    pub id: usize,
    pub fixed: Vec<Elem>,
    pub free_slots: Vec<usize>,
}

impl Family {
    pub fn cardinality(&self) -> u64 {
        self.q.pow(self.free_slots.len() as u32)
    }

    pub fn field(&self) -> Result<FieldRef> {
        field_of(self.q)
    }

    pub fn codes(&self, member: u64) -> Vec<Elem> {
        let mut c = self.fixed.clone();
        let mut m = member;
        for &s in &self.free_slots {
            c[s] = m % self.q;
            m /= self.q;
        }
        c
    }

    pub fn member(&self, field: &FieldRef, member: u64) -> Sextic {
        Sextic::from_codes(field.clone(), &self.codes(member)).expect("family codes in range")
    }

    /// Which coefficients are free and which are pinned.
    pub fn describe(&self) -> String {
        let names = slot_names();
        let free: Vec<&str> = self.free_slots.iter().map(|&s| names[s].as_str()).collect();
        let pinned: Vec<String> = self
            .fixed
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, c)| format!("{}={}", names[i], c))
            .collect();
        format!("free [{}] pinned [{}]", free.join(" "), pinned.join(" "))
    }
}

/// Monomial labels of the 21 coefficient positions.
pub fn slot_names() -> Vec<String> {
    let mut out = Vec::new();
    for (tag, d) in [("wz", 1), ("z2", 2), ("w", 3), ("z", 4), ("", 6)] {
        for i in 0..=d {
            out.push(format!("{tag}x{}y{}", d - i, i));
        }
    }
    out
}

fn field_of(q: u64) -> Result<FieldRef> {
    let (p, k) = crate::gfield::prime_power(q).ok_or_else(|| Error::FieldOutOfRange(q.to_string()))?;
    make_field(p, k)
}

fn range(a: usize, b: usize) -> Vec<usize> {
    (a..b).collect()
}

fn family(q: u64, id: usize, pins: &[(usize, Elem)], free: Vec<usize>) -> Family {
    let mut fixed = vec![0; 21];
    for &(i, c) in pins {
        fixed[i] = c;
    }
    Family { q, id, fixed, free_slots: free }
}

/// The normal-form families over F_2, F_3, F_4 and F_7, numbered from 1.
pub fn families(q: u64) -> Result<Vec<Family>> {
    let cat = |parts: &[&[usize]]| parts.concat();
    let f1 = range(F1, F2);
    let f3 = range(F3, F4);
    let f4 = range(F4, F6);
    let f6 = range(F6, 21);
    // f6 monomial x^{6-i} y^i sits at F6 + i
    let m6 = |is: &[usize]| is.iter().map(|i| F6 + i).collect::<Vec<_>>();
    match q {
        2 => Ok(vec![family(2, 1, &[], cat(&[&f1, &f3, &f4, &f6]))]),
        3 => {
            let a = |is: &[usize]| is.iter().map(|i| F4 + i).collect::<Vec<_>>();
            Ok(vec![
                family(3, 1, &[(F2, 1), (F2 + 2, 1)], cat(&[&a(&[1, 2]), &f6])),
                family(3, 2, &[(F2, 1), (F2 + 2, 2)], cat(&[&a(&[1, 2]), &f6])),
                family(3, 3, &[(F2, 1)], cat(&[&a(&[3, 4]), &f6])),
                family(3, 4, &[(F2, 2)], cat(&[&a(&[3, 4]), &f6])),
                family(3, 5, &[], cat(&[&f4, &m6(&[1, 2, 4, 5])])),
            ])
        }
        4 => {
            let (al, al2) = (2, 3);
            let mut out = vec![
                family(4, 1, &[(F1, 1)], cat(&[&f3, &[F4 + 4], &f6])),
                family(4, 2, &[], cat(&[&f4, &m6(&[1, 3, 5])])),
            ];
            for c in [1, al, al2] {
                out.push(family(4, out.len() + 1, &[(F3, c)], cat(&[&f4, &m6(&[0, 2, 3, 5])])));
            }
            out.push(family(4, 6, &[(F3 + 2, 1)], cat(&[&f4, &m6(&[1, 2, 5, 6])])));
            let cubics: [[Elem; 4]; 3] = [[1, 0, 0, 1], [1, 1, al, 0], [1, 0, 0, al]];
            let f = field_of(4)?;
            for g in cubics {
                for c in [1, al, al2] {
                    let pins: Vec<(usize, Elem)> = (0..4).map(|i| (F3 + i, f.mul(c, g[i]))).collect();
                    out.push(family(4, out.len() + 1, &pins, cat(&[&f4, &m6(&[0, 4, 5, 6])])));
                }
            }
            Ok(out)
        }
        7 => {
            let mut quartics = Vec::new();
            for a in [1, 3] {
                for c in [1, 3] {
                    for d in 0..4 {
                        for e in 0..7 {
                            quartics.push([a, 0, c, d, e]);
                        }
                    }
                }
            }
            for a in [1, 3] {
                for d in 0..4 {
                    for e in [0, 1, 3] {
                        quartics.push([a, 0, 0, d, e]);
                    }
                }
            }
            Ok(quartics
                .iter()
                .enumerate()
                .map(|(i, f)| {
                    let pins: Vec<(usize, Elem)> = (0..5).map(|j| (F4 + j, f[j])).collect();
                    family(7, i + 1, &pins, f6.clone())
                })
                .collect())
        }
        _ => Err(Error::NoSuchFamily(format!("no normal-form families over F_{q}"))),
    }
}

/// The reduced form for free-coefficient mode: f1, f3 killed away from
/// characteristic 2 and f2 killed away from characteristic 3.
pub fn free_family(q: u64) -> Result<Family> {
    let f = field_of(q)?;
    let mut free = Vec::new();
    if f.p() == 2 {
        free.extend(range(F1, F2));
        free.extend(range(F3, F4));
    }
    if f.p() == 3 {
        free.extend(range(F2, F3));
    }
    free.extend(range(F4, 21));
    Ok(family(q, 0, &[], free))
}

pub fn select(q: u64, fam: Option<usize>) -> Result<Vec<Family>> {
    let all = families(q)?;
    match fam {
        None => Ok(all),
        Some(i) => all
            .into_iter()
            .find(|f| f.id == i)
            .map(|f| vec![f])
            .ok_or_else(|| Error::NoSuchFamily(format!("family {i} over F_{q}"))),
    }
}

/// Every member of the family in member-code order.
pub fn enumerate_family(fam: &Family) -> Result<impl Iterator<Item = Sextic> + '_> {
    let field = fam.field()?;
    Ok((0..fam.cardinality()).map(move |m| fam.member(&field, m)))
}

/// A found example with its evidence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Example {
    pub family: usize,
    pub member: u64,
    pub codes: Vec<Elem>,
    pub orbit_trace: OrbitTrace,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnresolvedSet {
    pub candidates: Vec<usize>,
    pub first: Example,
    pub count: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counters {
    pub enumerated: u64,
    pub singular: u64,
    pub smooth: u64,
    /// smooth members whose data went beyond a1, b1
    pub deepened: u64,
    /// smooth members whose type was pinned down
    pub classified: u64,
    pub unresolved: u64,
}

/// Merged frontier of a sweep; this is what checkpoints hold.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepState {
    pub version: u32,
    pub q: u64,
    pub families: Vec<usize>,
    pub batch: u64,
    /// global index of the next member, counting across the families in order
    pub cursor: u64,
    pub found: BTreeMap<usize, Example>,
    pub unresolved: Vec<UnresolvedSet>,
    pub counters: Counters,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum TypeStatus {
    Found(Example),
    Absent,
    Unresolved { candidate_sets: Vec<Vec<usize>> },
    Pending,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub q: u64,
    pub families: Vec<usize>,
    pub cardinality: u64,
    pub complete: bool,
    pub counters: Counters,
    pub types: BTreeMap<usize, TypeStatus>,
    pub unresolved: Vec<UnresolvedSet>,
    pub wall_clock_secs: f64,
    pub lineage: Vec<String>,
}

impl SweepReport {
    pub fn found(&self) -> BTreeSet<usize> {
        self.with_status(|s| matches!(s, TypeStatus::Found(_)))
    }

    pub fn absent(&self) -> BTreeSet<usize> {
        self.with_status(|s| matches!(s, TypeStatus::Absent))
    }

    fn with_status(&self, pred: impl Fn(&TypeStatus) -> bool) -> BTreeSet<usize> {
        self.types.iter().filter(|(_, s)| pred(s)).map(|(&t, _)| t).collect()
    }

    /// Serialization without timing and lineage.
    pub fn canonical(&self) -> String {
        let mut r = self.clone();
        r.wall_clock_secs = 0.0;
        r.lineage.clear();
        serde_json::to_string(&r).expect("serializable")
    }

    /// Re-derives every found example from its coefficients alone.
    pub fn verify(&self) -> Result<()> {
        let field = field_of(self.q)?;
        for (&t, st) in &self.types {
            if let TypeStatus::Found(ex) = st {
                let s = Sextic::from_codes(field.clone(), &ex.codes)?;
                sextic::require_smooth(&s)?;
                let ot = sextic::orbit_trace(&s, ex.orbit_trace.a.len() as u32, ex.orbit_trace.b.len() as u32)?;
                if ot != ex.orbit_trace {
                    return Err(Error::Verification(format!("type {t}: orbit-trace data differ")));
                }
                let id = excomb::identify_type(&ot)?;
                if id.candidates != vec![t] || !sextic::weil_consistent(&ot, t) {
                    return Err(Error::Verification(format!("type {t}: data identify {:?}", id.candidates)));
                }
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct SweepOptions {
    pub checkpoint: Option<PathBuf>,
    pub resume: Option<PathBuf>,
    /// stop after this many batches (for interrupted runs)
    pub max_batches: Option<u64>,
    pub batch: u64,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions { checkpoint: None, resume: None, max_batches: None, batch: BATCH }
    }
}

enum Outcome {
    Singular,
    /// smooth; shallow data rule out every needed type
    Skipped,
    Resolved { ty: usize, ot: OrbitTrace, deep: bool },
    Unresolved { candidates: Vec<usize>, ot: OrbitTrace },
}

/// Depth policy. a1, b1 for every smooth member; then a2, b2, then a3..a7,
/// each step taken only while some candidate is still needed. An a_n on
/// which all candidates agree is filled in from their common trace;
/// `SweepReport::verify` recomputes every entry.
fn examine(s: &Sextic, needed: &BTreeSet<usize>) -> Result<Outcome> {
    if !sextic::is_smooth(s)?.is_smooth() {
        return Ok(Outcome::Singular);
    }
    let q = s.q() as u128;
    let mut ot = sextic::orbit_trace_unchecked(s, 1, 1)?;
    let mut id = excomb::identify_type(&ot)?;
    let mut deep = false;
    let live = |id: &Identification| id.candidates.iter().any(|t| needed.contains(t));
    let mut step = 0;
    while !id.resolved && live(&id) {
        step += 1;
        deep = true;
        let n = ot.a.len() as u32 + 1;
        if step == 1 {
            ot.a.push(sextic::point_count(s, 2)?);
            if q.pow(6) <= SWEEP_CURVE_BUDGET {
                ot.b = sextic::peel_orbits(&[sextic::curve_count(s, 1)?, sextic::curve_count(s, 2)?])?;
            }
        } else {
            if n > 7 || q.pow(2 * n) > POINT_BUDGET {
                break;
            }
            // a_n carries no information when every candidate predicts the same value
            let t = excomb::tables();
            let predicted: BTreeSet<i64> =
                id.candidates.iter().map(|&c| t.traces(excomb::Group::E8, c)[n as usize - 1]).collect();
            if predicted.len() == 1 {
                let tn = *predicted.first().unwrap() as i128;
                let qn = q.pow(n) as i128;
                ot.a.push((qn * qn + tn * qn + 1) as u64);
                continue;
            }
            ot.a.push(sextic::point_count(s, n)?);
        }
        id = excomb::identify_among(&ot, id.candidates.iter().copied())?;
    }
    if id.resolved {
        Ok(Outcome::Resolved { ty: id.candidates[0], ot, deep })
    } else if live(&id) {
        Ok(Outcome::Unresolved { candidates: id.candidates, ot })
    } else {
        Ok(Outcome::Skipped)
    }
}

fn locate(fams: &[Family], mut g: u64) -> (usize, u64) {
    for (i, f) in fams.iter().enumerate() {
        if g < f.cardinality() {
            return (i, g);
        }
        g -= f.cardinality();
    }
    unreachable!("cursor past end")
}

fn needed(state: &SweepState) -> BTreeSet<usize> {
    (1..=TYPES).filter(|t| !state.found.contains_key(t)).collect()
}

fn merge(state: &mut SweepState, fam: &Family, member: u64, out: Outcome) {
    let c = &mut state.counters;
    c.enumerated += 1;
    let example = |ot: OrbitTrace| Example { family: fam.id, member, codes: fam.codes(member), orbit_trace: ot };
    match out {
        Outcome::Singular => c.singular += 1,
        Outcome::Skipped => c.smooth += 1,
        Outcome::Resolved { ty, ot, deep } => {
            c.smooth += 1;
            c.classified += 1;
            c.deepened += deep as u64;
            state.found.entry(ty).or_insert_with(|| example(ot));
        }
        Outcome::Unresolved { candidates, ot } => {
            c.smooth += 1;
            c.deepened += 1;
            c.unresolved += 1;
            match state.unresolved.iter_mut().find(|u| u.candidates == candidates) {
                Some(u) => u.count += 1,
                None => state.unresolved.push(UnresolvedSet { candidates, first: example(ot), count: 1 }),
            }
        }
    }
}

fn write_atomic(path: &Path, text: &str) -> Result<()> {
    let tmp = path.with_extension("tmp");
    std::fs::write(&tmp, text)?;
    std::fs::rename(&tmp, path)?;
    Ok(())
}

pub fn load_checkpoint(path: &Path) -> Result<SweepState> {
    Ok(serde_json::from_str(&std::fs::read_to_string(path)?)?)
}

/// Runs the normal-form sweep over the given families. Members are taken in
/// batches; the needed-type set is fixed at the start of each batch, so the
/// result does not depend on the number of worker threads.
pub fn run_sweep(q: u64, fams: &[Family], opts: &SweepOptions) -> Result<SweepReport> {
    let start = Instant::now();
    let ids: Vec<usize> = fams.iter().map(|f| f.id).collect();
    let total: u64 = fams.iter().map(|f| f.cardinality()).sum();
    let field = field_of(q)?;
    let mut lineage = Vec::new();
    let mut state = match &opts.resume {
        Some(p) => {
            let st = load_checkpoint(p)?;
            if st.version != CHECKPOINT_VERSION {
                return Err(Error::Checkpoint(format!("version {} (expected {CHECKPOINT_VERSION})", st.version)));
            }
            if st.q != q || st.families != ids || st.batch != opts.batch {
                return Err(Error::Checkpoint("checkpoint is for a different sweep".into()));
            }
            lineage.push(format!("resumed {} at {}", p.display(), st.cursor));
            st
        }
        None => SweepState {
            version: CHECKPOINT_VERSION,
            q,
            families: ids.clone(),
            batch: opts.batch,
            cursor: 0,
            found: BTreeMap::new(),
            unresolved: Vec::new(),
            counters: Counters::default(),
        },
    };
    let mut batches = 0;
    while state.cursor < total && opts.max_batches.map_or(true, |m| batches < m) {
        let end = (state.cursor + opts.batch).min(total);
        let need = needed(&state);
        let outs: Vec<(usize, u64, Outcome)> = (state.cursor..end)
            .into_par_iter()
            .map(|g| {
                let (fi, m) = locate(fams, g);
                examine(&fams[fi].member(&field, m), &need).map(|o| (fi, m, o))
            })
            .collect::<Result<_>>()?;
        for (fi, m, o) in outs {
            merge(&mut state, &fams[fi], m, o);
        }
        state.cursor = end;
        batches += 1;
        if let Some(p) = &opts.checkpoint {
            write_atomic(p, &serde_json::to_string(&state)?)?;
            if lineage.last().map_or(true, |l: &String| !l.starts_with("checkpoint")) {
                lineage.push(format!("checkpoint {}", p.display()));
            }
        }
    }
    let full = families(q).map_or(false, |all| all == fams);
    Ok(report(&state, total, full, start.elapsed().as_secs_f64(), lineage))
}

fn report(state: &SweepState, total: u64, full: bool, secs: f64, lineage: Vec<String>) -> SweepReport {
    let complete = state.cursor == total;
    let mut types = BTreeMap::new();
    for t in 1..=TYPES {
        let sets: Vec<Vec<usize>> =
            state.unresolved.iter().filter(|u| u.candidates.contains(&t)).map(|u| u.candidates.clone()).collect();
        let st = match state.found.get(&t) {
            Some(ex) => TypeStatus::Found(ex.clone()),
            None if !sets.is_empty() => TypeStatus::Unresolved { candidate_sets: sets },
            None if complete && full => TypeStatus::Absent,
            None => TypeStatus::Pending,
        };
        types.insert(t, st);
    }
    SweepReport {
        q: state.q,
        families: state.families.clone(),
        cardinality: total,
        complete,
        counters: state.counters.clone(),
        types,
        unresolved: state.unresolved.clone(),
        wall_clock_secs: secs,
        lineage,
    }
}

/// Random members of the reduced form; only existence can be concluded.
pub fn run_random(q: u64, samples: u64, seed: u64) -> Result<SweepReport> {
    let start = Instant::now();
    let fam = free_family(q)?;
    let field = fam.field()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let members: Vec<u64> = (0..samples).map(|_| rng.gen_range(0..fam.cardinality())).collect();
    let mut state = SweepState {
        version: CHECKPOINT_VERSION,
        q,
        families: vec![0],
        batch: BATCH,
        cursor: 0,
        found: BTreeMap::new(),
        unresolved: Vec::new(),
        counters: Counters::default(),
    };
    for chunk in members.chunks(BATCH as usize) {
        let need = needed(&state);
        let outs: Vec<Outcome> =
            chunk.par_iter().map(|&m| examine(&fam.member(&field, m), &need)).collect::<Result<_>>()?;
        for (&m, o) in chunk.iter().zip(outs) {
            merge(&mut state, &fam, m, o);
        }
    }
    state.cursor = samples;
    let mut r = report(&state, samples, false, start.elapsed().as_secs_f64(), vec![format!("seed {seed}")]);
    r.complete = false;
    Ok(r)
}

/// Claims that accompany a fixture as `<name>.claim.json`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claim {
    #[serde(rename = "type")]
    pub type_index: Option<usize>,
    #[serde(default)]
    pub a: Vec<u64>,
    #[serde(default)]
    pub b: Vec<u64>,
    pub splitting_degree: Option<u32>,
    pub eckardt_points: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureReport {
    pub q: u64,
    pub smooth: bool,
    pub orbit_trace: OrbitTrace,
    pub candidates: Vec<usize>,
    pub weil_consistent: bool,
    pub splitting_degree: Option<u32>,
    pub curves: Option<usize>,
    pub eckardt_points: Option<usize>,
    pub concurrency: Option<usize>,
}

pub fn claim_path(fixture: &Path) -> PathBuf {
    fixture.with_extension("claim.json")
}

/// Recomputes smoothness, the orbit-trace data and the claimed type of a
/// fixture and fails on any disagreement with its claim file.
pub fn verify_fixture(path: &Path) -> Result<FixtureReport> {
    let s = Sextic::parse(&std::fs::read_to_string(path)?)?;
    let cp = claim_path(path);
    let claim: Claim =
        if cp.exists() { serde_json::from_str(&std::fs::read_to_string(cp)?)? } else { Claim::default() };
    let fail = |m: String| Err(Error::Verification(m));
    if !sextic::is_smooth(&s)?.is_smooth() {
        return fail("surface is singular".into());
    }
    let cls = sextic::classify(&s, (claim.a.len() as u32).max(1), (claim.b.len() as u32).max(1))?;
    let ot = cls.orbit_trace.clone();
    if ot.a.len() < claim.a.len() || ot.a[..claim.a.len()] != claim.a[..] {
        return fail(format!("point counts {:?} differ from claim {:?}", ot.a, claim.a));
    }
    if ot.b.len() < claim.b.len() || ot.b[..claim.b.len()] != claim.b[..] {
        return fail(format!("orbit counts {:?} differ from claim {:?}", ot.b, claim.b));
    }
    let cands = cls.identification.candidates.clone();
    if let Some(t) = claim.type_index {
        if cands != vec![t] {
            return fail(format!("claimed type {t}, data identify {cands:?}"));
        }
    }
    let weil = cands.iter().all(|&t| sextic::weil_consistent(&ot, t));
    if !weil {
        return fail("Weil relation violated".into());
    }
    let mut rep = FixtureReport {
        q: s.q(),
        smooth: true,
        orbit_trace: ot,
        candidates: cands,
        weil_consistent: weil,
        splitting_degree: None,
        curves: None,
        eckardt_points: None,
        concurrency: None,
    };
    if claim.splitting_degree.is_some() || claim.eckardt_points.is_some() {
        let e = sextic::eckardt_points(&s)?;
        if claim.splitting_degree.is_some_and(|d| d != e.splitting_degree) {
            return fail(format!("splitting degree {}", e.splitting_degree));
        }
        if e.curves != 240 {
            return fail(format!("{} curves over the splitting field", e.curves));
        }
        if claim.eckardt_points.is_some_and(|n| n != e.eckardt_points.len()) {
            return fail(format!("{} Eckardt points", e.eckardt_points.len()));
        }
        rep.splitting_degree = Some(e.splitting_degree);
        rep.curves = Some(e.curves);
        rep.eckardt_points = Some(e.eckardt_points.len());
        rep.concurrency = Some(e.max_concurrency);
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cardinalities() {
        let total = |q| families(q).unwrap().iter().map(|f| f.cardinality()).sum::<u64>();
        assert_eq!(total(2), 262144);
        assert_eq!(total(3), 98415);
        assert_eq!(total(4), 20250624);
        assert_eq!(total(7), 112001848);
        assert_eq!(families(3).unwrap().len(), 5);
        assert_eq!(families(4).unwrap().len(), 15);
        assert!(families(5).is_err());
    }

    #[test]
    fn members_are_distinct() {
        for f in families(3).unwrap() {
            let codes: BTreeSet<Vec<Elem>> = (0..f.cardinality()).map(|m| f.codes(m)).collect();
            assert_eq!(codes.len() as u64, f.cardinality());
        }
    }
}
