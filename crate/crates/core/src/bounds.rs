//! Lower bounds for degree-1 types obtained by blowing up a rational point
//! off the bad locus of a degree-2 surface.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::excomb::{self, Group};
use crate::gfield::prime_power;

/// Degree-2 data entering the bad-locus bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Deg2Profile {
    pub e7_type: usize,
    /// rational (-1)-curves
    pub n: u64,
    /// orbits of length 2, 3 or 4
    pub m: u64,
    pub trace: i64,
    pub existence_threshold_deg2: u64,
}

impl Deg2Profile {
    pub fn of(e7_type: usize) -> Result<Deg2Profile> {
        let t = excomb::tables();
        let r = t.record(Group::E7, e7_type).ok_or(Error::NoMatchingClass)?;
        let n = r.orbit_type.iter().filter(|o| o.0 == 1).map(|o| o.1 as u64).sum();
        let m = r.orbit_type.iter().filter(|o| (2..=4).contains(&o.0)).map(|o| o.1 as u64).sum();
        Ok(Deg2Profile { e7_type, n, m, trace: r.trace, existence_threshold_deg2: t.deg2_min_q(e7_type) })
    }

    /// N(q) = q^2 + a q + 1.
    pub fn points(&self, q: u64) -> i128 {
        let q = q as i128;
        q * q + self.trace as i128 * q + 1
    }
}

/// The bound B(q): n(q+1) + m + q + 1 + 6 sqrt(q) for odd q and
/// n(q+1) + m + 2(q+1) for even q.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BadLocusBound {
    pub q: u64,
    /// integer part of the bound (all of it for even q)
    pub rational: i128,
    /// whether 6 sqrt(q) is added
    pub hasse_weil: bool,
}

impl BadLocusBound {
    pub fn value(&self) -> f64 {
        self.rational as f64 + if self.hasse_weil { 6.0 * (self.q as f64).sqrt() } else { 0.0 }
    }

    /// Exact N > B.
    pub fn exceeded_by(&self, n_points: i128) -> bool {
        let l = n_points - self.rational;
        if !self.hasse_weil {
            return l > 0;
        }
        l > 0 && l * l > 36 * self.q as i128
    }
}

pub fn bad_locus_bound(profile: &Deg2Profile, q: u64) -> BadLocusBound {
    let qi = q as i128;
    let base = profile.n as i128 * (qi + 1) + profile.m as i128;
    if q % 2 == 1 {
        BadLocusBound { q, rational: base + qi + 1, hasse_weil: true }
    } else {
        BadLocusBound { q, rational: base + 2 * (qi + 1), hasse_weil: false }
    }
}

/// Whether a rational point off the bad locus is guaranteed over F_q.
pub fn guaranteed(profile: &Deg2Profile, q: u64) -> bool {
    bad_locus_bound(profile, q).exceeded_by(profile.points(q))
}

/// Prime powers of the given parity in increasing order, up to `limit`.
pub fn prime_powers(odd: bool, limit: u64) -> impl Iterator<Item = u64> {
    (2..=limit).filter(move |&q| (q % 2 == 1) == odd && prime_power(q).is_some())
}

/// Scan limit; past it N - B is increasing for every profile (n <= 56, a >= -7).
const SCAN: u64 = 4096;

/// Least prime power q of the parity such that N > B for q and every larger
/// prime power of that parity.
pub fn bound_threshold(profile: &Deg2Profile, odd: bool) -> u64 {
    let qs: Vec<u64> = prime_powers(odd, SCAN).collect();
    let last_fail = qs.iter().rposition(|&q| !guaranteed(profile, q));
    match last_fail {
        None => qs[0],
        Some(i) => qs[i + 1],
    }
}

/// Least prime power of the parity that is >= `min`.
fn at_least(min: u64, odd: bool) -> u64 {
    prime_powers(odd, SCAN).find(|&q| q >= min).expect("scan range")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParentThreshold {
    pub profile: Deg2Profile,
    pub odd: u64,
    pub even: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Threshold {
    pub deg1_type: usize,
    pub q0: u64,
    pub q0_even: u64,
    pub parents: Vec<ParentThreshold>,
}

/// Degree-2 parents of a degree-1 type.
pub fn parents(deg1_type: usize) -> Result<Vec<usize>> {
    excomb::tables()
        .deg1_deg2
        .iter()
        .find(|(d, _)| *d == deg1_type)
        .map(|(_, p)| p.clone())
        .ok_or(Error::NoLowerBound(deg1_type))
}

/// (q0, q0'): beyond these the degree-1 type exists iff its degree-2 parent does.
/// With one parent the bare bound threshold is used; with several the
/// thresholds are clipped to each parent's existence bound and the minimum is taken.
pub fn existence_threshold(deg1_type: usize) -> Result<Threshold> {
    let ps = parents(deg1_type)?;
    let clip = ps.len() > 1;
    let mut parents = Vec::new();
    for e7 in ps {
        let profile = Deg2Profile::of(e7)?;
        let mut odd = bound_threshold(&profile, true);
        let mut even = bound_threshold(&profile, false);
        if clip {
            odd = odd.max(at_least(profile.existence_threshold_deg2, true));
            even = even.max(at_least(profile.existence_threshold_deg2, false));
        }
        parents.push(ParentThreshold { profile, odd, even });
    }
    let q0 = parents.iter().map(|p| p.odd).min().unwrap();
    let q0_even = parents.iter().map(|p| p.even).min().unwrap();
    Ok(Threshold { deg1_type, q0, q0_even, parents })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    #[serde(rename = "type")]
    pub type_index: usize,
    pub q0: u64,
    pub q0_even: u64,
    pub expected_q0: u64,
    pub expected_q0_even: u64,
}

impl TableRow {
    pub fn matches(&self) -> bool {
        self.q0 == self.expected_q0 && self.q0_even == self.expected_q0_even
    }
}

/// Recomputes every row of the shipped lower-bound table.
pub fn lower_bounds_table() -> Result<Vec<TableRow>> {
    excomb::tables()
        .lower_bounds
        .iter()
        .map(|r| {
            let t = existence_threshold(r.type_index)?;
            Ok(TableRow {
                type_index: r.type_index,
                q0: t.q0,
                q0_even: t.q0_even,
                expected_q0: r.q0,
                expected_q0_even: r.q0_even,
            })
        })
        .collect()
}

/// Per-q comparison lines for one parent, up to and including its thresholds.
pub fn derivation(profile: &Deg2Profile, upto: u64) -> Vec<(u64, i128, f64, bool)> {
    (2..=upto)
        .filter(|&q| prime_power(q).is_some())
        .map(|q| {
            let b = bad_locus_bound(profile, q);
            let n = profile.points(q);
            (q, n, b.value(), b.exceeded_by(n))
        })
        .collect()
}
