//! Univariate polynomials and binary forms over finite fields.
//!
//! Univariate polynomials are coefficient vectors, constant term first, kept
//! trimmed (no trailing zeros; the zero polynomial is the empty vector).
//! Binary forms store the coefficient of x^{d-i} y^i at index i.

use std::cmp::Ordering;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::gfield::{self, Elem, Field, FieldRef};

pub type Poly = Vec<Elem>;

pub fn trim(mut a: Poly) -> Poly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

/// Degree, with -1 for the zero polynomial.
pub fn deg(a: &[Elem]) -> isize {
    a.len() as isize - 1
}

pub fn poly_add(f: &Field, a: &[Elem], b: &[Elem]) -> Poly {
    let n = a.len().max(b.len());
    let r = (0..n)
        .map(|i| f.add(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
        .collect();
    trim(r)
}

pub fn poly_sub(f: &Field, a: &[Elem], b: &[Elem]) -> Poly {
    let n = a.len().max(b.len());
    let r = (0..n)
        .map(|i| f.sub(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
        .collect();
    trim(r)
}

pub fn poly_scale(f: &Field, a: &[Elem], c: Elem) -> Poly {
    trim(a.iter().map(|&x| f.mul(x, c)).collect())
}

pub fn poly_mul(f: &Field, a: &[Elem], b: &[Elem]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut r = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            r[i + j] = f.add(r[i + j], f.mul(x, y));
        }
    }
    trim(r)
}

/// Quotient and remainder; panics on division by zero.
pub fn poly_divrem(f: &Field, a: &[Elem], b: &[Elem]) -> (Poly, Poly) {
    assert!(!b.is_empty(), "polynomial division by zero");
    let mut r = trim(a.to_vec());
    if r.len() < b.len() {
        return (vec![], r);
    }
    let db = b.len() - 1;
    let inv = f.inv(b[db]);
    let mut qt = vec![0; r.len() - db];
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let c = f.mul(r[dr], inv);
        qt[dr - db] = c;
        for j in 0..=db {
            r[dr - db + j] = f.sub(r[dr - db + j], f.mul(c, b[j]));
        }
        r = trim(r);
    }
    (trim(qt), r)
}

pub fn poly_rem(f: &Field, a: &[Elem], b: &[Elem]) -> Poly {
    poly_divrem(f, a, b).1
}

pub fn monic(f: &Field, a: &[Elem]) -> Poly {
    match a.last() {
        None => vec![],
        Some(&l) => poly_scale(f, a, f.inv(l)),
    }
}

/// Monic gcd (empty if both inputs are zero).
pub fn poly_gcd(f: &Field, a: &[Elem], b: &[Elem]) -> Poly {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let r = poly_rem(f, &a, &b);
        a = b;
        b = r;
    }
    monic(f, &a)
}

pub fn derivative(f: &Field, a: &[Elem]) -> Poly {
    trim(a.iter().enumerate().skip(1).map(|(i, &c)| f.mul(f.from_int(i as i64), c)).collect())
}

pub fn poly_eval(f: &Field, a: &[Elem], x: Elem) -> Elem {
    a.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
}

pub fn mulmod(f: &Field, a: &[Elem], b: &[Elem], m: &[Elem]) -> Poly {
    poly_rem(f, &poly_mul(f, a, b), m)
}

pub fn powmod(f: &Field, a: &[Elem], mut e: u128, m: &[Elem]) -> Poly {
    let mut base = poly_rem(f, a, m);
    let mut r = poly_rem(f, &[1], m);
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(f, &r, &base, m);
        }
        e >>= 1;
        if e > 0 {
            base = mulmod(f, &base, &base, m);
        }
    }
    r
}

fn cmp_poly(a: &[Elem], b: &[Elem]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.iter().rev().cmp(b.iter().rev()))
}

/// Univariate polynomial bundled with its field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    pub field: FieldRef,
    pub coeffs: Poly,
}

impl UniPoly {
    pub fn new(field: FieldRef, coeffs: Vec<Elem>) -> Self {
        UniPoly { field, coeffs: trim(coeffs) }
    }
    pub fn degree(&self) -> isize {
        deg(&self.coeffs)
    }
}

/// Factorization into monic irreducibles with multiplicities, sorted by
/// (degree, coefficients from the top). The leading coefficient is the unit.
pub fn factor(f: &UniPoly) -> Result<(Elem, Vec<(UniPoly, u32)>)> {
    let fl = &*f.field;
    if f.coeffs.is_empty() {
        return Err(Error::FactorZero);
    }
    let unit = *f.coeffs.last().unwrap();
    let m = monic(fl, &f.coeffs);
    let mut out: Vec<(Poly, u32)> = Vec::new();
    for (sq, mult) in squarefree(fl, &m) {
        for (g, d) in distinct_degree(fl, &sq) {
            for h in equal_degree(fl, &g, d) {
                out.push((h, mult));
            }
        }
    }
    out.sort_by(|a, b| cmp_poly(&a.0, &b.0));
    // merge equal factors (cannot happen for a correct squarefree split, kept defensive)
    let mut merged: Vec<(Poly, u32)> = Vec::new();
    for (g, m) in out {
        match merged.last_mut() {
            Some((h, mm)) if *h == g => *mm += m,
            _ => merged.push((g, m)),
        }
    }
    Ok((
        unit,
        merged.into_iter().map(|(g, m)| (UniPoly::new(f.field.clone(), g), m)).collect(),
    ))
}

/// Square-free decomposition of a monic polynomial: pairs (squarefree part, multiplicity).
pub fn squarefree(f: &Field, a: &[Elem]) -> Vec<(Poly, u32)> {
    let mut out = Vec::new();
    if a.len() <= 1 {
        return out;
    }
    let p = f.p() as usize;
    let d = derivative(f, a);
    let mut c = poly_gcd(f, a, &d);
    let mut w = poly_divrem(f, a, &c).0;
    let mut i = 1;
    while w.len() > 1 {
        let y = poly_gcd(f, &w, &c);
        let fac = poly_divrem(f, &w, &y).0;
        if fac.len() > 1 {
            out.push((monic(f, &fac), i));
        }
        w = y;
        c = poly_divrem(f, &c, &w).0;
        i += 1;
    }
    if c.len() > 1 {
        // c is a p-th power
        let root: Poly = (0..c.len()).step_by(p).map(|j| f.pth_root(c[j])).collect();
        for (g, m) in squarefree(f, &monic(f, &root)) {
            out.push((g, m * p as u32));
        }
    }
    out
}

/// Distinct-degree factorization of a monic squarefree polynomial.
pub fn distinct_degree(f: &Field, a: &[Elem]) -> Vec<(Poly, usize)> {
    let q = f.q() as u128;
    let mut out = Vec::new();
    let mut rest = a.to_vec();
    let x = vec![0, 1];
    let mut h = poly_rem(f, &x, &rest);
    let mut i = 1;
    while deg(&rest) >= 2 * i as isize {
        h = powmod(f, &h, q, &rest);
        let g = poly_gcd(f, &poly_sub(f, &h, &x), &rest);
        if g.len() > 1 {
            rest = poly_divrem(f, &rest, &g).0;
            h = poly_rem(f, &h, &rest);
            out.push((g, i));
        }
        i += 1;
    }
    if rest.len() > 1 {
        let d = rest.len() - 1;
        out.push((rest, d));
    }
    out
}

/// Seeds for equal-degree splitting, in canonical order: the polynomials whose
/// base-q digit expansion is s = q, q+1, ... (so x, x+1, ... first). In
/// characteristic 2 the seeds are x times these, from s = 1.
fn seed(f: &Field, mut s: u128, len: usize) -> Poly {
    let q = f.q() as u128;
    let mut v = Vec::with_capacity(len);
    for _ in 0..len {
        v.push((s % q) as u64);
        s /= q;
    }
    trim(v)
}

/// Equal-degree splitting (deterministic) of a monic squarefree product of
/// irreducibles of degree d.
pub fn equal_degree(f: &Field, a: &[Elem], d: usize) -> Vec<Poly> {
    let n = a.len() - 1;
    if n == d {
        return vec![a.to_vec()];
    }
    let q = f.q() as u128;
    // in characteristic 2 the trace is additive, so constant terms never split
    let even = f.p() == 2;
    let mut s = if even { 1 } else { q };
    loop {
        let t = if even {
            let mut t = vec![0];
            t.extend(seed(f, s, n - 1));
            trim(t)
        } else {
            seed(f, s, n)
        };
        s += 1;
        if t.len() <= 1 {
            continue;
        }
        let u = if f.p() == 2 {
            // absolute trace of t in F_q[x]/(a) of degree k*d over F_2
            let kd = f.k() as usize * d;
            let mut acc = poly_rem(f, &t, a);
            let mut cur = acc.clone();
            for _ in 1..kd {
                cur = mulmod(f, &cur, &cur, a);
                acc = poly_add(f, &acc, &cur);
            }
            acc
        } else {
            // t^{(q^d - 1)/2} = N(t)^{(q-1)/2}, N(t) = t^{1 + q + ... + q^{d-1}}
            let mut cur = poly_rem(f, &t, a);
            let mut acc = cur.clone();
            for _ in 1..d {
                cur = powmod(f, &cur, q, a);
                acc = mulmod(f, &acc, &cur, a);
            }
            let e = powmod(f, &acc, (q - 1) / 2, a);
            poly_sub(f, &e, &[1])
        };
        let g = poly_gcd(f, a, &u);
        if g.len() > 1 && g.len() < a.len() {
            let h = poly_divrem(f, a, &g).0;
            let mut r = equal_degree(f, &g, d);
            r.extend(equal_degree(f, &monic(f, &h), d));
            return r;
        }
    }
}

/// Roots (with multiplicity) of a univariate polynomial lying in its own field.
pub fn roots(f: &Field, a: &[Elem]) -> Vec<(Elem, u32)> {
    let a = trim(a.to_vec());
    if a.len() <= 1 {
        return vec![];
    }
    let m = monic(f, &a);
    let xq = powmod(f, &[0, 1], f.q() as u128, &m);
    let g = poly_gcd(f, &m, &poly_sub(f, &xq, &[0, 1]));
    if g.len() <= 1 {
        return vec![];
    }
    let mut out = Vec::new();
    for lin in equal_degree(f, &g, 1) {
        let r = f.neg(lin[0]);
        let mut mult = 0;
        let mut cur = m.clone();
        loop {
            let (qt, rem) = poly_divrem(f, &cur, &lin);
            if !rem.is_empty() {
                break;
            }
            mult += 1;
            cur = qt;
        }
        out.push((r, mult));
    }
    out.sort();
    out
}

/// Number of distinct roots of a w^2 + b w + c in the field.
pub fn quadratic_root_count(f: &Field, a: Elem, b: Elem, c: Elem) -> Result<u32> {
    if a == 0 {
        return Err(Error::NotQuadratic);
    }
    if f.p() == 2 {
        if b == 0 {
            return Ok(1);
        }
        let t = f.div(f.mul(a, c), f.sqr(b));
        return Ok(if f.trace2(t) == 0 { 2 } else { 0 });
    }
    let disc = f.sub(f.sqr(b), f.mul(f.from_int(4), f.mul(a, c)));
    Ok(if disc == 0 {
        1
    } else if f.is_square(disc) {
        2
    } else {
        0
    })
}

/// Root count of the monic quadratic w^2 + b w + c (hot path).
#[inline]
pub fn monic_quadratic_roots(f: &Field, b: Elem, c: Elem) -> u32 {
    if f.p() == 2 {
        if b == 0 {
            return 1;
        }
        let t = f.div(c, f.sqr(b));
        return if f.trace2(t) == 0 { 2 } else { 0 };
    }
    let disc = f.sub(f.sqr(b), f.mul(f.from_int(4), c));
    if disc == 0 {
        1
    } else if f.is_square(disc) {
        2
    } else {
        0
    }
}

/// Homogeneous binary form of degree `deg`; `c[i]` is the coefficient of x^{deg-i} y^i.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
pub struct BinForm {
    pub deg: usize,
    pub c: Vec<Elem>,
}

impl BinForm {
    pub fn zero(deg: usize) -> Self {
        BinForm { deg, c: vec![0; deg + 1] }
    }

    pub fn new(c: Vec<Elem>) -> Self {
        assert!(!c.is_empty());
        BinForm { deg: c.len() - 1, c }
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|&x| x == 0)
    }

    pub fn add(&self, f: &Field, o: &BinForm) -> BinForm {
        assert_eq!(self.deg, o.deg);
        BinForm { deg: self.deg, c: self.c.iter().zip(&o.c).map(|(&a, &b)| f.add(a, b)).collect() }
    }

    pub fn sub(&self, f: &Field, o: &BinForm) -> BinForm {
        assert_eq!(self.deg, o.deg);
        BinForm { deg: self.deg, c: self.c.iter().zip(&o.c).map(|(&a, &b)| f.sub(a, b)).collect() }
    }

    pub fn scale(&self, f: &Field, s: Elem) -> BinForm {
        BinForm { deg: self.deg, c: self.c.iter().map(|&a| f.mul(a, s)).collect() }
    }

    pub fn mul(&self, f: &Field, o: &BinForm) -> BinForm {
        let mut c = vec![0; self.deg + o.deg + 1];
        for (i, &a) in self.c.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.c.iter().enumerate() {
                c[i + j] = f.add(c[i + j], f.mul(a, b));
            }
        }
        BinForm { deg: self.deg + o.deg, c }
    }

    pub fn eval(&self, f: &Field, x: Elem, y: Elem) -> Elem {
        // Horner in y/x-free form: sum c_i x^{d-i} y^i
        let mut xp = vec![1; self.deg + 1];
        for i in 1..=self.deg {
            xp[i] = f.mul(xp[i - 1], x);
        }
        let mut r = 0;
        let mut yp = 1;
        for i in 0..=self.deg {
            if self.c[i] != 0 {
                r = f.add(r, f.mul(self.c[i], f.mul(xp[self.deg - i], yp)));
            }
            yp = f.mul(yp, y);
        }
        r
    }

    /// Maps coefficients through a field embedding.
    pub fn map(&self, e: impl Fn(Elem) -> Elem) -> BinForm {
        BinForm { deg: self.deg, c: self.c.iter().map(|&a| e(a)).collect() }
    }

    /// f(x, 1) as a univariate polynomial in x.
    pub fn dehomogenize(&self) -> Poly {
        trim(self.c.iter().rev().copied().collect())
    }

    /// Renders in monomial notation, e.g. "x^5*y + 3*x^3*y^3".
    pub fn render(&self) -> String {
        let mut s = String::new();
        for (i, &a) in self.c.iter().enumerate() {
            if a == 0 {
                continue;
            }
            if !s.is_empty() {
                s.push_str(" + ");
            }
            let (ex, ey) = (self.deg - i, i);
            let mono: Vec<String> = [("x", ex), ("y", ey)]
                .iter()
                .filter(|(_, e)| *e > 0)
                .map(|(v, e)| if *e == 1 { v.to_string() } else { format!("{v}^{e}") })
                .collect();
            if mono.is_empty() {
                let _ = write!(s, "{a}");
            } else if a == 1 {
                s.push_str(&mono.join("*"));
            } else {
                let _ = write!(s, "{a}*{}", mono.join("*"));
            }
        }
        if s.is_empty() {
            s.push('0');
        }
        s
    }

    /// Parses the `render` grammar for a form of the given degree. Coefficients
    /// are field element codes; repeated monomials are added.
    pub fn parse(f: &Field, deg: usize, s: &str) -> Result<BinForm> {
        let mut out = BinForm::zero(deg);
        let s = s.trim();
        if s == "0" {
            return Ok(out);
        }
        for term in s.split('+') {
            let term = term.trim();
            let mut coef: Elem = 1;
            let (mut ex, mut ey) = (0usize, 0usize);
            for factor in term.split('*') {
                let factor = factor.trim();
                let (base, e) = match factor.split_once('^') {
                    Some((b, e)) => (b.trim(), e.trim().parse::<usize>().map_err(|_| Error::Parse(term.into()))?),
                    None => (factor, 1),
                };
                match base {
                    "x" => ex += e,
                    "y" => ey += e,
                    num => {
                        let v: Elem = num.parse().map_err(|_| Error::Parse(format!("bad term {term}")))?;
                        if v >= f.q() {
                            return Err(Error::Parse(format!("coefficient {v} outside field")));
                        }
                        coef = f.mul(coef, f.pow(v, e as u128));
                    }
                }
            }
            if ex + ey != deg {
                return Err(Error::Parse(format!("term {term} is not of degree {deg}")));
            }
            out.c[ey] = f.add(out.c[ey], coef);
        }
        Ok(out)
    }
}

/// A point of P^1 normalized so the first nonzero coordinate is 1.
pub type P1Point = (Elem, Elem);

pub fn normalize_p1(f: &Field, x: Elem, y: Elem) -> P1Point {
    if x != 0 {
        (1, f.div(y, x))
    } else {
        (0, 1)
    }
}

/// Projective roots over F_{q^n} with multiplicities; coordinates are codes in
/// the field F_{q^n}.
pub fn projective_roots(f: &FieldRef, form: &BinForm, n: u32) -> Result<(FieldRef, Vec<(P1Point, u32)>)> {
    if form.is_zero() {
        return Err(Error::IdenticallyZero);
    }
    let big = gfield::make_field(f.p(), f.k() * n)?;
    let emb = gfield::embedding(f, &big)?;
    let g = form.map(|a| emb.apply(a));
    Ok((big.clone(), projective_roots_here(&big, &g)))
}

/// Projective roots in the form's own field.
pub fn projective_roots_here(f: &Field, form: &BinForm) -> Vec<(P1Point, u32)> {
    let u = form.dehomogenize();
    let mut out = Vec::new();
    let drop = form.deg as isize - deg(&u);
    if drop > 0 {
        out.push(((1, 0), drop as u32));
    }
    for (r, m) in roots(f, &u) {
        out.push((normalize_p1(f, r, 1), m));
    }
    out.sort();
    out
}

/// Square root of an even-degree binary form, if it is a square.
/// The result is unique up to sign; the sign is fixed by taking the smaller
/// code for the first nonzero coefficient.
pub fn binform_sqrt(f: &Field, b: &BinForm) -> Result<Option<BinForm>> {
    if b.deg % 2 == 1 {
        return Err(Error::OddDegree(b.deg));
    }
    let m = b.deg / 2;
    let mut t = BinForm::zero(m);
    if f.p() == 2 {
        for (i, &c) in b.c.iter().enumerate() {
            if i % 2 == 1 {
                if c != 0 {
                    return Ok(None);
                }
            } else {
                t.c[i / 2] = f.sqrt(c).unwrap();
            }
        }
        return Ok(Some(t));
    }
    let Some(i0) = b.c.iter().position(|&c| c != 0) else {
        return Ok(Some(t));
    };
    if i0 % 2 == 1 {
        return Ok(None);
    }
    let j0 = i0 / 2;
    let Some(t0) = f.sqrt(b.c[i0]) else {
        return Ok(None);
    };
    t.c[j0] = t0;
    let inv2t0 = f.inv(f.mul(f.from_int(2), t0));
    for j in j0 + 1..=m {
        let s = j0 + j;
        let mut acc = b.c[s];
        for l in j0 + 1..j {
            acc = f.sub(acc, f.mul(t.c[l], t.c[s - l]));
        }
        t.c[j] = f.mul(acc, inv2t0);
    }
    if t.mul(f, &t) == *b {
        Ok(Some(t))
    } else {
        Ok(None)
    }
}

/// All binary forms T of degree d = deg A with T^2 + A T + B = 0, where
/// deg B = 2d. Returns 0, 1 or 2 solutions, sorted.
pub fn solve_t_quadratic(f: &Field, a: &BinForm, b: &BinForm) -> Vec<BinForm> {
    let d = a.deg;
    debug_assert_eq!(b.deg, 2 * d);
    let mut sols = Vec::new();
    if f.p() != 2 {
        // T = (-A +- sqrt(A^2 - 4B)) / 2
        let disc = a.mul(f, a).sub(f, &b.scale(f, f.from_int(4)));
        if let Ok(Some(r)) = binform_sqrt(f, &disc) {
            let half = f.inv(f.from_int(2));
            let na = a.scale(f, f.neg(1));
            sols.push(na.add(f, &r).scale(f, half));
            if !r.is_zero() {
                sols.push(na.sub(f, &r).scale(f, half));
            }
        }
    } else if a.is_zero() {
        if let Ok(Some(r)) = binform_sqrt(f, b) {
            sols.push(r);
        }
    } else if let Some(t) = solve_char2_linear(f, a, b) {
        sols.push(t.add(f, a));
        sols.push(t);
    }
    sols.sort();
    sols
}

/// Characteristic 2, A != 0: T -> T^2 + A T is F_2-linear on the bit
/// coordinates of T's coefficients; solve T^2 + A T = B by elimination.
fn solve_char2_linear(f: &Field, a: &BinForm, b: &BinForm) -> Option<BinForm> {
    let d = a.deg;
    let k = f.k() as usize;
    let nvars = (d + 1) * k;
    assert!(nvars <= 128, "char-2 system too large");
    let neqs = (2 * d + 1) * k;
    // columns: image of each unit unknown
    let mut rows = vec![0u128; neqs];
    for j in 0..=d {
        for bit in 0..k {
            let e = 1u64 << bit;
            let var = j * k + bit;
            // (e x^{d-j} y^j)^2 contributes e^2 at index 2j; A*T contributes a_i e at i + j
            let mut img = vec![0u64; 2 * d + 1];
            img[2 * j] = f.sqr(e);
            for (i, &ai) in a.c.iter().enumerate() {
                img[i + j] ^= f.mul(ai, e);
            }
            for (ci, &v) in img.iter().enumerate() {
                let mut v = v;
                while v != 0 {
                    let tb = v.trailing_zeros() as usize;
                    rows[ci * k + tb] |= 1u128 << var;
                    v &= v - 1;
                }
            }
        }
    }
    let mut rhs: Vec<u8> = (0..neqs).map(|r| ((b.c[r / k] >> (r % k)) & 1) as u8).collect();
    // Gaussian elimination
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..nvars {
        let bitm = 1u128 << col;
        let Some(pr) = (row..neqs).find(|&r| rows[r] & bitm != 0) else { continue };
        rows.swap(row, pr);
        rhs.swap(row, pr);
        for r in 0..neqs {
            if r != row && rows[r] & bitm != 0 {
                rows[r] ^= rows[row];
                rhs[r] ^= rhs[row];
            }
        }
        pivots.push(col);
        row += 1;
    }
    if (row..neqs).any(|r| rhs[r] != 0) {
        return None;
    }
    let mut t = BinForm::zero(d);
    for (r, &col) in pivots.iter().enumerate() {
        if rhs[r] == 1 {
            t.c[col / k] |= 1u64 << (col % k);
        }
    }
    Some(t)
}

/// Monic gcd of two binary forms as a binary form (degree = number of common
/// projective roots with multiplicity). Both inputs must be nonzero.
pub fn binform_gcd(f: &Field, a: &BinForm, b: &BinForm) -> BinForm {
    let ua = a.dehomogenize();
    let ub = b.dehomogenize();
    let inf_a = a.deg - deg(&ua) as usize;
    let inf_b = b.deg - deg(&ub) as usize;
    let inf = inf_a.min(inf_b);
    let g = poly_gcd(f, &ua, &ub);
    let gd = g.len() - 1;
    let total = gd + inf;
    // x-polynomial g(x) times y^inf, homogenized: coefficient of x^{gd-i} y^{i+inf}
    let mut c = vec![0; total + 1];
    for (i, &v) in g.iter().enumerate() {
        // g has constant first: term v x^i -> x^i y^{gd - i + inf}
        c[total - i] = v;
    }
    BinForm { deg: total, c }
}
