//! Points of P^2 in general position and the orbit-constrained search for
//! Galois-stable configurations.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gfield::{self, make_field, Elem, Field, FieldRef};
use crate::matfq::{self, MatFq};

pub type Point = [Elem; 3];

/// Normalizes so that the first nonzero coordinate is 1.
pub fn normalize(f: &Field, p: Point) -> Point {
    let lead = *p.iter().find(|&&c| c != 0).expect("zero vector is not a point");
    let inv = f.inv(lead);
    [f.mul(p[0], inv), f.mul(p[1], inv), f.mul(p[2], inv)]
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Criterion {
    Collinear,
    Conic,
    SingularCubic,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub criterion: Criterion,
    /// indices into the input list; for `SingularCubic` the first index is the singular point
    pub subset: Vec<usize>,
}

pub fn line_matrix(pts: &[Point]) -> MatFq {
    MatFq::from_rows(&pts.iter().map(|p| p.to_vec()).collect::<Vec<_>>())
}

pub fn conic_matrix(f: &Field, pts: &[Point]) -> MatFq {
    let rows: Vec<Vec<Elem>> = pts
        .iter()
        .map(|&[x, y, z]| vec![f.sqr(x), f.sqr(y), f.sqr(z), f.mul(x, y), f.mul(x, z), f.mul(y, z)])
        .collect();
    MatFq::from_rows(&rows)
}

/// The 11x10 matrix whose kernel detects a cubic through all eight points that
/// is singular at point `i`. Coefficients 2 and 3 are reduced mod p.
pub fn cubic_matrix(f: &Field, pts: &[Point], i: usize) -> MatFq {
    let mut rows: Vec<Vec<Elem>> = pts
        .iter()
        .map(|&[x, y, z]| {
            let (x2, y2, z2) = (f.sqr(x), f.sqr(y), f.sqr(z));
            vec![
                f.mul(x2, x),
                f.mul(y2, y),
                f.mul(z2, z),
                f.mul(x2, y),
                f.mul(x2, z),
                f.mul(x, y2),
                f.mul(y2, z),
                f.mul(x, z2),
                f.mul(y, z2),
                f.mul(f.mul(x, y), z),
            ]
        })
        .collect();
    let [x, y, z] = pts[i];
    let two = f.from_int(2);
    let three = f.from_int(3);
    let (x2, y2, z2) = (f.sqr(x), f.sqr(y), f.sqr(z));
    let (xy, xz, yz) = (f.mul(x, y), f.mul(x, z), f.mul(y, z));
    rows.push(vec![f.mul(three, x2), 0, 0, f.mul(two, xy), f.mul(two, xz), y2, 0, z2, 0, yz]);
    rows.push(vec![0, f.mul(three, y2), 0, x2, 0, f.mul(two, xy), f.mul(two, yz), 0, z2, xz]);
    rows.push(vec![0, 0, f.mul(three, z2), 0, x2, 0, y2, f.mul(two, xz), f.mul(two, yz), xy]);
    MatFq::from_rows(&rows)
}

fn det3(f: &Field, a: &Point, b: &Point, c: &Point) -> Elem {
    let t1 = f.mul(a[0], f.sub(f.mul(b[1], c[2]), f.mul(b[2], c[1])));
    let t2 = f.mul(a[1], f.sub(f.mul(b[0], c[2]), f.mul(b[2], c[0])));
    let t3 = f.mul(a[2], f.sub(f.mul(b[0], c[1]), f.mul(b[1], c[0])));
    f.add(f.sub(t1, t2), t3)
}

fn combinations(n: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(r);
    fn rec(start: usize, n: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < r - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, r, cur, out);
            cur.pop();
        }
    }
    rec(0, n, r, &mut cur, &mut out);
    out
}

/// Checks the three general-position criteria; `Ok(None)` means general position.
pub fn check_general_position(f: &Field, points: &[Point]) -> Result<Option<Violation>> {
    if points.len() > 8 {
        return Err(Error::TooManyPoints);
    }
    let pts: Vec<Point> = points.iter().map(|&p| normalize(f, p)).collect();
    for i in 0..pts.len() {
        for j in 0..i {
            if pts[i] == pts[j] {
                return Err(Error::DuplicatePoints);
            }
        }
    }
    for s in combinations(pts.len(), 3) {
        if det3(f, &pts[s[0]], &pts[s[1]], &pts[s[2]]) == 0 {
            return Ok(Some(Violation { criterion: Criterion::Collinear, subset: s }));
        }
    }
    for s in combinations(pts.len(), 6) {
        let sub: Vec<Point> = s.iter().map(|&i| pts[i]).collect();
        if matfq::det(f, &conic_matrix(f, &sub))? == 0 {
            return Ok(Some(Violation { criterion: Criterion::Conic, subset: s }));
        }
    }
    if pts.len() == 8 {
        for i in 0..8 {
            if matfq::kernel_dim(f, &cubic_matrix(f, &pts, i)) > 0 {
                let mut subset = vec![i];
                subset.extend((0..8).filter(|&j| j != i));
                return Ok(Some(Violation { criterion: Criterion::SingularCubic, subset }));
            }
        }
    }
    Ok(None)
}

/// Incremental test: `pts[..n-1]` already in general position, last point new.
fn extends_general_position(f: &Field, pts: &[Point]) -> bool {
    let n = pts.len();
    let new = &pts[n - 1];
    for i in 0..n - 1 {
        for j in 0..i {
            if det3(f, &pts[j], &pts[i], new) == 0 {
                return false;
            }
        }
    }
    if n >= 6 {
        for s in combinations(n - 1, 5) {
            let mut sub: Vec<Point> = s.iter().map(|&i| pts[i]).collect();
            sub.push(*new);
            if matfq::det(f, &conic_matrix(f, &sub)).unwrap() == 0 {
                return false;
            }
        }
    }
    true
}

fn cubic_ok(f: &Field, pts: &[Point]) -> bool {
    pts.len() < 8 || (0..8).all(|i| matfq::kernel_dim(f, &cubic_matrix(f, pts, i)) == 0)
}

/// Requested closed points: `counts[j-1]` points of degree j.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitSpec {
    pub counts: Vec<usize>,
}

impl OrbitSpec {
    pub fn new(counts: Vec<usize>) -> Self {
        OrbitSpec { counts }
    }
    pub fn total(&self) -> usize {
        self.counts.iter().enumerate().map(|(i, n)| (i + 1) * n).sum()
    }
    pub fn parse(s: &str) -> Result<Self> {
        let counts = s
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad orbit spec {s}"))))
            .collect::<Result<Vec<_>>>()?;
        if counts.is_empty() {
            return Err(Error::Parse("empty orbit spec".into()));
        }
        Ok(OrbitSpec { counts })
    }
    fn degrees(&self) -> Vec<u32> {
        self.counts
            .iter()
            .enumerate()
            .flat_map(|(i, &n)| std::iter::repeat((i + 1) as u32).take(n))
            .collect()
    }
}

/// A Galois-stable configuration. `orbits` lists each closed point as its
/// degree and the conjugate points over F_{q^j}; `points` holds all geometric
/// points over the common field `field`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Configuration {
    pub q: String,
    pub field: String,
    pub orbit_spec: OrbitSpec,
    pub orbits: Vec<(u32, Vec<Point>)>,
    pub points: Vec<Point>,
}

impl Configuration {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "q": self.q,
            "orbits": self.orbits.iter().map(|(j, pts)| serde_json::json!([j, pts])).collect::<Vec<_>>(),
        })
    }
}

fn lcm(a: u32, b: u32) -> u32 {
    fn gcd(a: u32, b: u32) -> u32 {
        if b == 0 { a } else { gcd(b, a % b) }
    }
    a / gcd(a, b) * b
}

struct Slot {
    deg: u32,
    small: FieldRef,
    emb: std::sync::Arc<gfield::Embedding>,
    /// x and y candidate coordinates (codes in F_{q^j})
    coords: Vec<Elem>,
    /// extra points on z = 0 (normalized, in F_{q^j})
    line_pts: Vec<Point>,
}

struct Search {
    base: FieldRef,
    big: FieldRef,
    slots: Vec<Slot>,
    fixed: Vec<Point>,
}

impl Search {
    fn slot_len(&self, s: usize) -> usize {
        let sl = &self.slots[s];
        sl.coords.len() * sl.coords.len() + sl.line_pts.len()
    }

    /// Candidate `idx` of slot `s` as a representative point in F_{q^j}, if valid.
    fn candidate(&self, s: usize, idx: usize) -> Option<Point> {
        let sl = &self.slots[s];
        let n = sl.coords.len();
        let f = &*sl.small;
        let kq = self.base.k();
        let pt = if idx < n * n {
            let (x, y) = (sl.coords[idx / n], sl.coords[idx % n]);
            let dx = f.element_degree(x, kq).unwrap();
            let dy = f.element_degree(y, kq).unwrap();
            if lcm(dx, dy) != sl.deg {
                return None;
            }
            // lexicographically least among conjugates
            for t in 1..sl.deg {
                let cx = f.frob_pow(x, t * kq);
                let cy = f.frob_pow(y, t * kq);
                if (cx, cy) < (x, y) {
                    return None;
                }
            }
            [x, y, 1]
        } else {
            sl.line_pts[idx - n * n]
        };
        Some(pt)
    }

    fn conjugates(&self, s: usize, p: Point) -> Vec<Point> {
        let sl = &self.slots[s];
        let kq = self.base.k();
        let big = &*self.big;
        (0..sl.deg)
            .map(|t| {
                let c = p.map(|a| sl.emb.apply(sl.small.frob_pow(a, t * kq)));
                normalize(big, c)
            })
            .collect()
    }

    fn dfs(&self, s: usize, start: usize, pts: &mut Vec<Point>, chosen: &mut Vec<(usize, Point)>) -> bool {
        if s == self.slots.len() {
            return cubic_ok(&self.big, pts);
        }
        let len = self.slot_len(s);
        for idx in start..len {
            if self.try_candidate(s, idx, pts, chosen) {
                return true;
            }
        }
        false
    }

    fn try_candidate(&self, s: usize, idx: usize, pts: &mut Vec<Point>, chosen: &mut Vec<(usize, Point)>) -> bool {
        let Some(p) = self.candidate(s, idx) else { return false };
        let conj = self.conjugates(s, p);
        let base_len = pts.len();
        let mut ok = true;
        for c in &conj {
            if pts.contains(c) {
                ok = false;
                break;
            }
            pts.push(*c);
            if !extends_general_position(&self.big, pts) {
                ok = false;
                break;
            }
        }
        if ok {
            chosen.push((s, p));
            let next_start = if s + 1 < self.slots.len() && self.slots[s + 1].deg == self.slots[s].deg { idx + 1 } else { 0 };
            if self.dfs(s + 1, next_start, pts, chosen) {
                return true;
            }
            chosen.pop();
        }
        pts.truncate(base_len);
        false
    }
}

/// Searches for a Galois-stable configuration in general position with the
/// given orbit structure. `Ok(None)` certifies exhaustive non-existence.
pub fn search_configuration(q: u64, spec: &OrbitSpec) -> Result<Option<Configuration>> {
    if spec.total() > 8 {
        return Err(Error::SpecOverflow);
    }
    let base = gfield::field_of_order(q)?;
    let degs = spec.degrees();
    let l = degs.iter().fold(1, |a, &b| lcm(a, b));
    let big = make_field(base.p(), base.k() * l)?;
    let n1 = spec.counts.first().copied().unwrap_or(0);
    let frame = n1 >= 4;
    let coord_pts: [Point; 4] = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]];
    let nfixed = if frame { 4 } else { n1.min(3) };
    let fixed: Vec<Point> = coord_pts[..nfixed].to_vec();
    let free: Vec<u32> = degs.iter().copied().skip(nfixed).collect();
    let kq = base.k();
    let mut slots = Vec::new();
    for &j in &free {
        let small = make_field(base.p(), kq * j)?;
        let emb = gfield::embedding(&small, &big)?;
        let mut coords = Vec::new();
        for a in 0..small.q() {
            let d = small.element_degree(a, kq)?;
            let keep = if frame { a != 0 && d == j } else { j / d < 3 };
            if keep {
                coords.push(a);
            }
        }
        let mut line_pts = Vec::new();
        if !frame && j <= 2 {
            for a in 0..small.q() {
                if small.element_degree(a, kq)? == j {
                    line_pts.push([a, 1, 0]);
                }
            }
            if j == 1 {
                line_pts.push([1, 0, 0]);
            }
        }
        slots.push(Slot { deg: j, small, emb, coords, line_pts });
    }
    let search = Search { base: base.clone(), big: big.clone(), slots, fixed: fixed.clone() };
    let pts0: Vec<Point> = search.fixed.clone();
    for i in 1..pts0.len() {
        if !extends_general_position(&big, &pts0[..=i]) {
            return Ok(None);
        }
    }
    let found: Option<Vec<(usize, Point)>> = if search.slots.is_empty() {
        cubic_ok(&big, &pts0).then(Vec::new)
    } else {
        let len = search.slot_len(0);
        (0..len).into_par_iter().find_map_first(|idx| {
            let mut pts = pts0.clone();
            let mut chosen = Vec::new();
            search.try_candidate(0, idx, &mut pts, &mut chosen).then_some(chosen)
        })
    };
    let Some(chosen) = found else { return Ok(None) };
    let mut orbits: Vec<(u32, Vec<Point>)> = fixed.iter().map(|&p| (1, vec![p])).collect();
    let mut points = fixed.clone();
    for (s, p) in chosen {
        let sl = &search.slots[s];
        let small = &*sl.small;
        let conj: Vec<Point> = (0..sl.deg).map(|t| normalize(small, p.map(|a| small.frob_pow(a, t * kq)))).collect();
        points.extend(search.conjugates(s, p));
        orbits.push((sl.deg, conj));
    }
    Ok(Some(Configuration { q: base.tag(), field: big.tag(), orbit_spec: spec.clone(), orbits, points }))
}

/// Recomputes orbit lengths of a configuration's points under Frobenius over F_q.
pub fn orbit_lengths(base: &Field, big: &Field, points: &[Point]) -> Vec<u32> {
    let kq = base.k();
    let mut seen = vec![false; points.len()];
    let mut out = Vec::new();
    for i in 0..points.len() {
        if seen[i] {
            continue;
        }
        let mut len = 0;
        let mut cur = points[i];
        loop {
            let j = points.iter().position(|p| *p == cur).expect("configuration not Frobenius-stable");
            if seen[j] {
                break;
            }
            seen[j] = true;
            len += 1;
            cur = normalize(big, cur.map(|a| big.frob_pow(a, kq)));
        }
        out.push(len);
    }
    out.sort();
    out
}

/// Points [1 : a : a^3] for a in the given list.
pub fn twisted_cubic_points(f: &Field, alphas: &[Elem]) -> Vec<Point> {
    alphas.iter().map(|&a| [1, a, f.mul(f.sqr(a), a)]).collect()
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Type35Witness {
    /// the shift x in F_q (None when the configuration came from the search fallback)
    pub x: Option<Elem>,
    pub configuration: Configuration,
}

/// Two degree-4 points in general position: for q >= 59 the normal-basis
/// construction [1 : a_i : a_i^3], [1 : a_i + x : a_i^3]; otherwise Algorithm 1.
pub fn type35_witness(q: u64) -> Result<Type35Witness> {
    let base = gfield::field_of_order(q)?;
    let spec = OrbitSpec::new(vec![0, 0, 0, 2]);
    if q < 59 {
        let cfg = search_configuration(q, &spec)?.expect("type 35 configurations exist for every q");
        return Ok(Type35Witness { x: None, configuration: cfg });
    }
    let big = make_field(base.p(), base.k() * 4)?;
    let emb = gfield::embedding(&base, &big)?;
    let alphas = gfield::normal_basis(&base, 4)?;
    for x in 1..base.q() {
        let xe = emb.apply(x);
        let shifted: Vec<Elem> = alphas.iter().map(|&a| big.add(a, xe)).collect();
        let p = twisted_cubic_points(&big, &alphas);
        let qd: Vec<Point> = p.iter().zip(&shifted).map(|(pt, &s)| [1, s, pt[2]]).collect();
        let mut all = p.clone();
        all.extend(qd.iter().copied());
        if check_general_position(&big, &all)?.is_none() {
            let points: Vec<Point> = all.iter().map(|&pt| normalize(&big, pt)).collect();
            let cfg = Configuration {
                q: base.tag(),
                field: big.tag(),
                orbit_spec: spec,
                orbits: vec![(4, p), (4, qd)],
                points,
            };
            return Ok(Type35Witness { x: Some(x), configuration: cfg });
        }
    }
    unreachable!("a valid shift exists for q >= 59")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frame_and_line() {
        let f = make_field(5, 1).unwrap();
        let frame = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]];
        assert_eq!(check_general_position(&f, &frame).unwrap(), None);
        let v = check_general_position(&f, &[[1, 0, 0], [0, 1, 0], [1, 1, 0]]).unwrap().unwrap();
        assert_eq!(v.criterion, Criterion::Collinear);
        assert_eq!(check_general_position(&f, &[[1, 0, 0], [2, 0, 0]]), Err(Error::DuplicatePoints));
        assert_eq!(check_general_position(&f, &[[1, 0, 0]; 9]), Err(Error::TooManyPoints));
    }

    #[test]
    fn small_searches() {
        let c = search_configuration(2, &OrbitSpec::new(vec![4])).unwrap().unwrap();
        assert_eq!(c.points.len(), 4);
        assert!(search_configuration(2, &OrbitSpec::new(vec![5])).unwrap().is_none());
        assert_eq!(search_configuration(2, &OrbitSpec::new(vec![9])).unwrap_err(), Error::SpecOverflow);
    }
}
