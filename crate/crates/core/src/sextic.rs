//! Degree-1 del Pezzo surfaces as sextics
//! w^2 + z^3 + wz f1 + z^2 f2 + w f3 + z f4 + f6 in P(1,1,2,3):
//! smoothness, point counts, (-1)-curves, Orbit-Trace data and Eckardt points.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::excomb::{self, Identification, OrbitTrace};
use crate::gfield::{self, make_field, Elem, Field, FieldRef};
use crate::polyfq::{self, BinForm, P1Point};

/// Degrees of f1, f2, f3, f4, f6.
pub const DEGREES: [usize; 5] = [1, 2, 3, 4, 6];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sextic {
    pub field: FieldRef,
    pub f1: BinForm,
    pub f2: BinForm,
    pub f3: BinForm,
    pub f4: BinForm,
    pub f6: BinForm,
}

impl Sextic {
    /// From the 21 coefficient codes (f1: x,y; f2: x^2,xy,y^2; ...; f6: x^6..y^6).
    pub fn from_codes(field: FieldRef, codes: &[Elem]) -> Result<Sextic> {
        if codes.len() != 21 {
            return Err(Error::Parse(format!("expected 21 coefficients, got {}", codes.len())));
        }
        if let Some(&c) = codes.iter().find(|&&c| c >= field.q()) {
            return Err(Error::Parse(format!("coefficient {c} outside F_{}", field.q())));
        }
        let mut it = codes.iter().copied();
        let mut take = |d: usize| BinForm::new(it.by_ref().take(d + 1).collect());
        Ok(Sextic { f1: take(1), f2: take(2), f3: take(3), f4: take(4), f6: take(6), field })
    }

    pub fn codes(&self) -> Vec<Elem> {
        self.forms().iter().flat_map(|f| f.c.iter().copied()).collect()
    }

    pub fn forms(&self) -> [&BinForm; 5] {
        [&self.f1, &self.f2, &self.f3, &self.f4, &self.f6]
    }

    pub fn q(&self) -> u64 {
        self.field.q()
    }

    /// Text format: field tag, then the 21 codes; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Sextic> {
        let mut toks = text.lines().map(|l| l.split('#').next().unwrap()).flat_map(|l| l.split_whitespace());
        let tag = toks.next().ok_or_else(|| Error::Parse("empty surface file".into()))?;
        let (p, k) = gfield::parse_tag(tag)?;
        let field = make_field(p, k)?;
        let codes: Vec<Elem> = toks
            .map(|t| t.parse::<Elem>().map_err(|_| Error::Parse(format!("bad coefficient {t:?}"))))
            .collect::<Result<_>>()?;
        Sextic::from_codes(field, &codes)
    }

    pub fn render(&self) -> String {
        let mut s = format!("{}\n", self.field.tag());
        for f in self.forms() {
            let row: Vec<String> = f.c.iter().map(|c| c.to_string()).collect();
            s.push_str(&row.join(" "));
            s.push('\n');
        }
        s
    }

    /// Human-readable equation.
    pub fn equation(&self) -> String {
        let mut parts = vec!["w^2".to_string(), "z^3".to_string()];
        for (f, m) in self.forms().into_iter().zip(["w*z", "z^2", "w", "z", ""]) {
            if f.is_zero() {
                continue;
            }
            let r = f.render();
            parts.push(if m.is_empty() { r } else { format!("{m}*({r})") });
        }
        parts.join(" + ")
    }

    /// The same surface over F_{q^n}.
    pub fn base_change(&self, n: u32) -> Result<Sextic> {
        if n == 1 {
            return Ok(self.clone());
        }
        let big = make_field(self.field.p(), self.field.k() * n)
            .map_err(|_| Error::ExtensionOutOfRange(format!("F_{}^{n}", self.q())))?;
        let emb = gfield::embedding(&self.field, &big)?;
        let m = |f: &BinForm| f.map(|a| emb.apply(a));
        Ok(Sextic { f1: m(&self.f1), f2: m(&self.f2), f3: m(&self.f3), f4: m(&self.f4), f6: m(&self.f6), field: big })
    }

    /// Value of the defining polynomial.
    pub fn eval(&self, x: Elem, y: Elem, z: Elem, w: Elem) -> Elem {
        let f = &*self.field;
        let v = self.values(x, y);
        let mut r = f.add(f.sqr(w), f.mul(f.sqr(z), z));
        r = f.add(r, f.mul(f.mul(w, z), v[0]));
        r = f.add(r, f.mul(f.sqr(z), v[1]));
        r = f.add(r, f.mul(w, v[2]));
        r = f.add(r, f.mul(z, v[3]));
        f.add(r, v[4])
    }

    /// (f1, f2, f3, f4, f6) evaluated at (x, y).
    pub fn values(&self, x: Elem, y: Elem) -> [Elem; 5] {
        let f = &*self.field;
        [self.f1.eval(f, x, y), self.f2.eval(f, x, y), self.f3.eval(f, x, y), self.f4.eval(f, x, y), self.f6.eval(f, x, y)]
    }

    /// Partial derivatives (F_x, F_y, F_z, F_w) at a point.
    pub fn gradient(&self, x: Elem, y: Elem, z: Elem, w: Elem) -> [Elem; 4] {
        let f = &*self.field;
        let v = self.values(x, y);
        let d = |g: fn(&Field, &BinForm) -> BinForm| -> [Elem; 5] {
            let fs = self.forms();
            std::array::from_fn(|i| g(f, fs[i]).eval(f, x, y))
        };
        let dx = d(dx);
        let dy = d(dy);
        let lin = |t: [Elem; 5]| {
            let mut r = f.mul(f.mul(w, z), t[0]);
            r = f.add(r, f.mul(f.sqr(z), t[1]));
            r = f.add(r, f.mul(w, t[2]));
            r = f.add(r, f.mul(z, t[3]));
            f.add(r, t[4])
        };
        let two = f.from_int(2);
        let three = f.from_int(3);
        let fz = {
            let mut r = f.mul(three, f.sqr(z));
            r = f.add(r, f.mul(w, v[0]));
            r = f.add(r, f.mul(f.mul(two, z), v[1]));
            f.add(r, v[3])
        };
        let fw = {
            let mut r = f.mul(two, w);
            r = f.add(r, f.mul(z, v[0]));
            f.add(r, v[2])
        };
        [lin(dx), lin(dy), fz, fw]
    }

    /// Weierstrass discriminant of the fibration [x:y], a binary form of degree 12.
    pub fn discriminant(&self) -> BinForm {
        let f = &*self.field;
        let c = |n: i64| f.from_int(n);
        let a1 = self.f1.scale(f, c(-1));
        let a2 = self.f2.scale(f, c(-1));
        let a3 = self.f3.clone();
        let a4 = self.f4.clone();
        let a6 = self.f6.scale(f, c(-1));
        let m = |a: &BinForm, b: &BinForm| a.mul(f, b);
        let b2 = m(&a1, &a1).add(f, &a2.scale(f, c(4)));
        let b4 = a4.scale(f, c(2)).add(f, &m(&a1, &a3));
        let b6 = m(&a3, &a3).add(f, &a6.scale(f, c(4)));
        let b8 = m(&m(&a1, &a1), &a6)
            .add(f, &m(&a2, &a6).scale(f, c(4)))
            .sub(f, &m(&m(&a1, &a3), &a4))
            .add(f, &m(&a2, &m(&a3, &a3)))
            .sub(f, &m(&a4, &a4));
        m(&m(&b2, &b2), &b8)
            .scale(f, c(-1))
            .sub(f, &m(&b4, &m(&b4, &b4)).scale(f, c(8)))
            .sub(f, &m(&b6, &b6).scale(f, c(27)))
            .add(f, &m(&b2, &m(&b4, &b6)).scale(f, c(9)))
    }
}

fn dx(f: &Field, g: &BinForm) -> BinForm {
    if g.deg == 0 {
        return BinForm::zero(0);
    }
    let d = g.deg;
    BinForm { deg: d - 1, c: (0..d).map(|i| f.mul(f.from_int((d - i) as i64), g.c[i])).collect() }
}

fn dy(f: &Field, g: &BinForm) -> BinForm {
    if g.deg == 0 {
        return BinForm::zero(0);
    }
    let d = g.deg;
    BinForm { deg: d - 1, c: (1..=d).map(|i| f.mul(f.from_int(i as i64), g.c[i])).collect() }
}

// ---------------------------------------------------------------------------
// Smoothness.

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularPoint {
    /// field of the coordinates, e.g. "3^2"
    pub field: String,
    pub coords: [Elem; 4],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Smoothness {
    Smooth,
    /// Singular; a witness point when the singular locus is finite.
    Singular(Option<SingularPoint>),
}

impl Smoothness {
    pub fn is_smooth(&self) -> bool {
        matches!(self, Smoothness::Smooth)
    }
}

/// Decides smoothness exactly.
///
/// A singular point lies over a root of the discriminant of multiplicity at
/// least 2 (a simple root gives a regular nodal fiber), so only those fibers
/// are examined. A discriminant vanishing identically means singular: either
/// the generic fiber has a rational singular point, or the fibration is
/// quasi-elliptic, which forces reducible fibers and hence singular points
/// on the sextic model.
pub fn is_smooth(s: &Sextic) -> Result<Smoothness> {
    let f = &*s.field;
    // base point [0:0:-1:1]
    let g = s.gradient(0, 0, f.neg(1), 1);
    if g[2] == 0 && g[3] == 0 {
        return Ok(Smoothness::Singular(Some(SingularPoint { field: f.tag(), coords: [0, 0, f.neg(1), 1] })));
    }
    let disc = s.discriminant();
    if disc.is_zero() {
        return Ok(Smoothness::Singular(None));
    }
    let u = disc.dehomogenize();
    let inf_mult = 12 - polyfq::deg(&u) as usize;
    if inf_mult >= 1 {
        if let Some(w) = fiber_singularity(s, 1, 0)? {
            return Ok(Smoothness::Singular(Some(w)));
        }
    }
    let m = polyfq::monic(f, &u);
    let repeated: Vec<polyfq::Poly> =
        polyfq::squarefree(f, &m).into_iter().filter(|(_, e)| *e >= 2).map(|(g, _)| g).collect();
    for g in repeated {
        for (h, d) in polyfq::distinct_degree(f, &g) {
            let sd = s.base_change(d as u32)?;
            let big = &*sd.field;
            let emb = gfield::embedding(&s.field, &sd.field)?;
            let hb: Vec<Elem> = h.iter().map(|&a| emb.apply(a)).collect();
            for (t, _) in polyfq::roots(big, &hb) {
                if let Some(w) = fiber_singularity(&sd, t, 1)? {
                    return Ok(Smoothness::Singular(Some(w)));
                }
            }
        }
    }
    Ok(Smoothness::Smooth)
}

/// Singular point of the surface on the fiber over [x0:y0], if any.
fn fiber_singularity(s: &Sextic, x0: Elem, y0: Elem) -> Result<Option<SingularPoint>> {
    let f = &*s.field;
    let [a1, a2, a3, a4, a6] = s.values(x0, y0);
    let mut cands: Vec<(Elem, Elem)> = Vec::new();
    if f.p() == 2 {
        if a1 != 0 {
            let z = f.div(a3, a1);
            let w = f.div(f.add(f.sqr(z), a4), a1);
            cands.push((z, w));
        } else if a3 == 0 {
            let z = f.sqrt(a4).unwrap();
            let rhs = f.add(f.add(f.mul(f.sqr(z), z), f.mul(f.sqr(z), a2)), f.add(f.mul(z, a4), a6));
            cands.push((z, f.sqrt(rhs).unwrap()));
        }
    } else {
        // w = -(a1 z + a3)/2, z a multiple root of the resulting cubic
        let inv2 = f.inv(f.from_int(2));
        let inv4 = f.sqr(inv2);
        let b2 = f.sub(a2, f.mul(f.sqr(a1), inv4));
        let b4 = f.sub(a4, f.mul(f.mul(a1, a3), inv2));
        let b6 = f.sub(a6, f.mul(f.sqr(a3), inv4));
        for (z, m) in polyfq::roots(f, &[b6, b4, b2, 1]) {
            if m >= 2 {
                let w = f.neg(f.mul(f.add(f.mul(a1, z), a3), inv2));
                cands.push((z, w));
            }
        }
    }
    for (z, w) in cands {
        if s.eval(x0, y0, z, w) == 0 && s.gradient(x0, y0, z, w).iter().all(|&g| g == 0) {
            return Ok(Some(SingularPoint { field: f.tag(), coords: [x0, y0, z, w] }));
        }
    }
    Ok(None)
}

pub fn require_smooth(s: &Sextic) -> Result<()> {
    if is_smooth(s)?.is_smooth() {
        Ok(())
    } else {
        Err(Error::NotDelPezzo)
    }
}

// ---------------------------------------------------------------------------
// Points.

/// Points of P^1 over the field of `f`: (1, t) for all t, then (0, 1).
pub fn p1_points(f: &Field) -> Vec<P1Point> {
    (0..f.q()).map(|t| (1, t)).chain(std::iter::once((0, 1))).collect()
}

/// #X(F_{q^n}) without the smoothness check.
pub fn point_count(s: &Sextic, n: u32) -> Result<u64> {
    let sn = s.base_change(n)?;
    let f = &*sn.field;
    let fiber = |&(x, y): &P1Point| -> u64 {
        let [a1, a2, a3, a4, a6] = sn.values(x, y);
        let mut acc = 0u64;
        for z in 0..f.q() {
            let z2 = f.sqr(z);
            let b = f.add(f.mul(a1, z), a3);
            let c = f.add(f.add(f.mul(z2, z), f.mul(a2, z2)), f.add(f.mul(a4, z), a6));
            acc += polyfq::monic_quadratic_roots(f, b, c) as u64;
        }
        acc
    };
    let pts = p1_points(f);
    let total: u64 = if f.q() >= 64 { pts.par_iter().map(fiber).sum() } else { pts.iter().map(fiber).sum() };
    Ok(1 + total)
}

/// a_n = #X(F_{q^n}).
pub fn count_points(s: &Sextic, n: u32) -> Result<u64> {
    require_smooth(s)?;
    point_count(s, n)
}

// ---------------------------------------------------------------------------
// (-1)-curves.

/// The curve z = Q(x,y), w = C(x,y).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ExceptionalCurve {
    /// degree over the base field of the least field containing all coefficients
    pub ext_degree: u32,
    pub q: BinForm,
    pub c: BinForm,
}

#[derive(Clone, Debug)]
pub struct CurveSet {
    /// the field F_{q^n} the coefficients live in
    pub field: FieldRef,
    pub n: u32,
    pub curves: Vec<ExceptionalCurve>,
}

/// Solutions C of F(x, y, Q, C) = 0 for one quadratic Q over the field of `s`.
pub fn curves_for_quadratic(s: &Sextic, q: &BinForm) -> Vec<BinForm> {
    let f = &*s.field;
    let a = q.mul(f, &s.f1).add(f, &s.f3);
    let q2 = q.mul(f, q);
    let b = q2.mul(f, q).add(f, &q2.mul(f, &s.f2)).add(f, &q.mul(f, &s.f4)).add(f, &s.f6);
    polyfq::solve_t_quadratic(f, &a, &b)
}

fn quadratic_from_code(q: u64, mut code: u64) -> BinForm {
    let mut c = vec![0; 3];
    for v in c.iter_mut() {
        *v = code % q;
        code /= q;
    }
    BinForm::new(c)
}

/// Largest F_{q^n} curve enumeration accepted (q^{3n} quadratics).
pub const CURVE_BUDGET: u64 = 1 << 27;

fn check_budget(s: &Sextic, n: u32) -> Result<u64> {
    let qn = (s.q() as u128).pow(n);
    let space = qn.pow(3);
    if space > CURVE_BUDGET as u128 {
        return Err(Error::ExtensionOutOfRange(format!("curve enumeration over F_{}^{n} too large", s.q())));
    }
    Ok(space as u64)
}

/// All (-1)-curves defined over F_{q^n}, without the smoothness check.
pub fn curves_over(s: &Sextic, n: u32) -> Result<CurveSet> {
    let space = check_budget(s, n)?;
    let sn = s.base_change(n)?;
    let f = &*sn.field;
    let bd = s.field.k();
    let curves: Vec<ExceptionalCurve> = (0..space)
        .into_par_iter()
        .flat_map_iter(|code| {
            let q = quadratic_from_code(f.q(), code);
            let sols = curves_for_quadratic(&sn, &q);
            sols.into_iter().map(move |c| (q.clone(), c))
        })
        .map(|(q, c)| {
            let ext_degree = q
                .c
                .iter()
                .chain(&c.c)
                .map(|&a| f.element_degree(a, bd).unwrap())
                .fold(1, |acc, d| acc / gcd(acc, d) * d);
            ExceptionalCurve { ext_degree, q, c }
        })
        .collect();
    Ok(CurveSet { field: sn.field.clone(), n, curves })
}

/// Number of (-1)-curves defined over F_{q^n}, without the smoothness check.
pub fn curve_count(s: &Sextic, n: u32) -> Result<u64> {
    let space = check_budget(s, n)?;
    let sn = s.base_change(n)?;
    let qn = sn.field.q();
    Ok((0..space).into_par_iter().map(|code| curves_for_quadratic(&sn, &quadratic_from_code(qn, code)).len() as u64).sum())
}

pub fn exceptional_curves(s: &Sextic, n: u32) -> Result<CurveSet> {
    require_smooth(s)?;
    curves_over(s, n)
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 { a } else { gcd(b, a % b) }
}

// ---------------------------------------------------------------------------
// Orbit-Trace data.

/// b_1..b_k from cumulative counts C_1..C_k by peeling off divisors.
pub fn peel_orbits(counts: &[u64]) -> Result<Vec<u64>> {
    let mut b = Vec::with_capacity(counts.len());
    for n in 1..=counts.len() {
        let lower: u64 = (1..n).filter(|d| n % d == 0).map(|d| d as u64 * b[d - 1]).sum();
        let rest = counts[n - 1]
            .checked_sub(lower)
            .filter(|r| r % n as u64 == 0)
            .ok_or_else(|| Error::Verification(format!("curve counts {counts:?} are not an orbit decomposition")))?;
        b.push(rest / n as u64);
    }
    Ok(b)
}

/// Orbit-Trace data (a_1..a_{depth_a}, b_1..b_{depth_b}), smoothness checked.
pub fn orbit_trace(s: &Sextic, depth_a: u32, depth_b: u32) -> Result<OrbitTrace> {
    require_smooth(s)?;
    orbit_trace_unchecked(s, depth_a, depth_b)
}

pub fn orbit_trace_unchecked(s: &Sextic, depth_a: u32, depth_b: u32) -> Result<OrbitTrace> {
    let a = (1..=depth_a).map(|n| point_count(s, n)).collect::<Result<Vec<_>>>()?;
    let counts = (1..=depth_b).map(|n| curve_count(s, n)).collect::<Result<Vec<_>>>()?;
    Ok(OrbitTrace { q: s.q(), a, b: peel_orbits(&counts)? })
}

/// Cost cap for a_n (q^{2n} fiber evaluations).
pub const POINT_BUDGET: u128 = 1 << 26;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Classification {
    pub orbit_trace: OrbitTrace,
    pub identification: Identification,
}

/// Computes Orbit-Trace data at the given depths (b capped by the curve
/// budget), extends a_n up to a_7 while the type is unresolved, and identifies.
pub fn classify(s: &Sextic, depth_a: u32, depth_b: u32) -> Result<Classification> {
    require_smooth(s)?;
    let q = s.q() as u128;
    let mut db = depth_b.max(1);
    while db > 1 && q.pow(3 * db) > CURVE_BUDGET as u128 {
        db -= 1;
    }
    let mut ot = orbit_trace_unchecked(s, depth_a.max(1), db)?;
    let mut id = excomb::identify_type(&ot)?;
    while !id.resolved && ot.a.len() < 7 {
        let n = ot.a.len() as u32 + 1;
        if q.pow(2 * n) > POINT_BUDGET {
            break;
        }
        ot.a.push(point_count(s, n)?);
        id = excomb::identify_among(&ot, id.candidates.iter().copied())?;
    }
    Ok(Classification { orbit_trace: ot, identification: id })
}

/// a_n = q^{2n} + t_n q^n + 1 for all computed n, with t from the E8 table.
pub fn weil_consistent(ot: &OrbitTrace, e8_type: usize) -> bool {
    let t = excomb::tables().traces(excomb::Group::E8, e8_type);
    ot.a.iter().enumerate().all(|(i, &a)| {
        let qn = (ot.q as i128).pow(i as u32 + 1);
        a as i128 == qn * qn + t[i] as i128 * qn + 1
    })
}

// ---------------------------------------------------------------------------
// Generalized Eckardt points.

/// Maximal number of concurrent (-1)-curves in the given characteristic.
pub fn max_concurrency(p: u64) -> usize {
    match p {
        2 => 16,
        3 => 12,
        _ => 10,
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EckardtReport {
    /// degree of the extension over which all 240 curves are defined
    pub splitting_degree: u32,
    /// field of the point coordinates
    pub point_field: String,
    pub curves: usize,
    /// concurrency -> number of points where exactly that many curves meet (>= 2)
    pub histogram: BTreeMap<usize, usize>,
    pub max_concurrency: usize,
    /// points attaining the characteristic maximum, with their concurrency
    pub eckardt_points: Vec<([Elem; 4], usize)>,
}

/// Least n (from the candidate types' class orders, capped at 24) over which
/// all 240 curves are defined.
pub fn splitting_degree(s: &Sextic) -> Result<u32> {
    let cls = classify(s, 2, 1)?;
    let t = excomb::tables();
    let mut orders: Vec<u32> = cls
        .identification
        .candidates
        .iter()
        .map(|&i| t.record(excomb::Group::E8, i).unwrap().order())
        .collect();
    orders.sort();
    orders.dedup();
    for n in orders {
        if n > 24 {
            break;
        }
        if curve_count(s, n)? == 240 {
            return Ok(n);
        }
    }
    Err(Error::ExtensionOutOfRange("splitting field degree exceeds 24".into()))
}

pub fn eckardt_points(s: &Sextic) -> Result<EckardtReport> {
    require_smooth(s)?;
    let n = splitting_degree(s)?;
    let set = curves_over(s, n)?;
    if set.curves.len() != 240 {
        return Err(Error::Verification(format!("{} curves over the splitting field", set.curves.len())));
    }
    // intersection points lie in at most a quadratic extension of the splitting field
    let big = make_field(s.field.p(), set.field.k() * 2)
        .map_err(|_| Error::ExtensionOutOfRange("point field".into()))?;
    let emb = gfield::embedding(&set.field, &big)?;
    let bf = &*big;
    let lifted: Vec<(BinForm, BinForm)> =
        set.curves.iter().map(|c| (c.q.map(|a| emb.apply(a)), c.c.map(|a| emb.apply(a)))).collect();
    let sf = &*set.field;
    let pairs: Vec<(usize, usize)> = (0..240).flat_map(|i| (i + 1..240).map(move |j| (i, j))).collect();
    let hits: Vec<([Elem; 4], usize, usize)> = pairs
        .par_iter()
        .flat_map_iter(|&(i, j)| {
            let (ci, cj) = (&set.curves[i], &set.curves[j]);
            let dq = ci.q.sub(sf, &cj.q);
            let dc = ci.c.sub(sf, &cj.c);
            let g = if dq.is_zero() { dc } else if dc.is_zero() { dq } else { polyfq::binform_gcd(sf, &dq, &dc) };
            let mut out = Vec::new();
            if g.deg > 0 && !g.is_zero() {
                let gb = g.map(|a| emb.apply(a));
                for ((x, y), _) in polyfq::projective_roots_here(bf, &gb) {
                    let z = lifted[i].0.eval(bf, x, y);
                    let w = lifted[i].1.eval(bf, x, y);
                    out.push(([x, y, z, w], i, j));
                }
            }
            out.into_iter()
        })
        .collect();
    let mut through: HashMap<[Elem; 4], BTreeSet<usize>> = HashMap::new();
    for (pt, i, j) in hits {
        let e = through.entry(pt).or_default();
        e.insert(i);
        e.insert(j);
    }
    let mut histogram = BTreeMap::new();
    for v in through.values() {
        *histogram.entry(v.len()).or_insert(0) += 1;
    }
    let maxc = max_concurrency(s.field.p());
    let mut eck: Vec<([Elem; 4], usize)> =
        through.into_iter().filter(|(_, v)| v.len() >= maxc).map(|(p, v)| (p, v.len())).collect();
    eck.sort();
    Ok(EckardtReport {
        splitting_degree: n,
        point_field: big.tag(),
        curves: 240,
        histogram,
        max_concurrency: maxc,
        eckardt_points: eck,
    })
}
