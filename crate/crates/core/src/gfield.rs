//! Finite fields F_{p^k} presented by Conway polynomials.
//!
//! Elements are plain `u64` codes: the element Σ c_i x^i (x the class of the
//! generator, c_i in [0, p)) has code Σ c_i p^i. Fields with at most 2^20
//! elements carry log/exp tables (and Zech logarithms in odd characteristic),
//! larger ones fall back to schoolbook polynomial arithmetic.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use once_cell::sync::Lazy;
use serde::{Deserialize, Serialize};

use crate::data;
use crate::error::{Error, Result};
use crate::polyfq;

pub type Elem = u64;

const TABLE_LIMIT: u64 = 1 << 20;
const NO_ZECH: u32 = u32::MAX;

/// Serializable description of a field: characteristic, degree and modulus
/// (constant term first).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDesc {
    pub p: u64,
    pub k: u32,
    pub modulus: Vec<u64>,
}

impl FieldDesc {
    pub fn tag(&self) -> String {
        format!("{}^{}", self.p, self.k)
    }
}

struct Tables {
    log: Vec<u32>,
    exp: Vec<u32>,
    zech: Vec<u32>,
}

pub struct Field {
    p: u64,
    k: u32,
    q: u64,
    modulus: Vec<u64>,
    /// modulus as a bit mask including x^k (characteristic 2 only)
    mod_bits: u64,
    tab: Option<Tables>,
    /// F_2-linear trace functional: Tr(a) = parity(a & tmask) (characteristic 2)
    tmask: u64,
    generator: Elem,
}

pub type FieldRef = Arc<Field>;

impl std::fmt::Debug for Field {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "F({}^{})", self.p, self.k)
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.k == other.k
    }
}
impl Eq for Field {}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits a prime power into (p, k).
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let (mut r, mut k) = (q, 0);
    while r % p == 0 {
        r /= p;
        k += 1;
    }
    (r == 1).then_some((p, k))
}

/// Parses "p^k" or a plain prime power "q".
pub fn parse_tag(s: &str) -> Result<(u64, u32)> {
    let s = s.trim();
    if let Some((a, b)) = s.split_once('^') {
        let p = a.trim().parse().map_err(|_| Error::Parse(format!("bad field tag {s}")))?;
        let k = b.trim().parse().map_err(|_| Error::Parse(format!("bad field tag {s}")))?;
        Ok((p, k))
    } else {
        let q: u64 = s.parse().map_err(|_| Error::Parse(format!("bad field size {s}")))?;
        prime_power(q).ok_or_else(|| Error::Parse(format!("{q} is not a prime power")))
    }
}

static CONWAY: Lazy<HashMap<(u64, u32), Vec<u64>>> = Lazy::new(|| {
    let text = data::load("conway.dat").expect("conway.dat");
    let mut m = HashMap::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let v: Vec<u64> = line.split_whitespace().map(|t| t.parse().expect("conway.dat entry")).collect();
        m.insert((v[0], v[1] as u32), v[2..].to_vec());
    }
    m
});

static FIELDS: Lazy<Mutex<HashMap<(u64, u32), FieldRef>>> = Lazy::new(|| Mutex::new(HashMap::new()));

/// Returns the (memoized) field F_{p^k}.
pub fn make_field(p: u64, k: u32) -> Result<FieldRef> {
    if !is_prime(p) {
        return Err(Error::InvalidCharacteristic(p));
    }
    if k == 0 {
        return Err(Error::FieldOutOfRange(format!("{p}^{k}")));
    }
    if let Some(f) = FIELDS.lock().unwrap().get(&(p, k)) {
        return Ok(f.clone());
    }
    let modulus = CONWAY
        .get(&(p, k))
        .cloned()
        .ok_or_else(|| Error::FieldOutOfRange(format!("{p}^{k}")))?;
    let f = Arc::new(Field::build(p, k, modulus));
    let mut reg = FIELDS.lock().unwrap();
    Ok(reg.entry((p, k)).or_insert(f).clone())
}

/// Field of order q (a prime power).
pub fn field_of_order(q: u64) -> Result<FieldRef> {
    let (p, k) = prime_power(q).ok_or_else(|| Error::FieldOutOfRange(format!("{q} is not a prime power")))?;
    make_field(p, k)
}

impl Field {
    fn build(p: u64, k: u32, modulus: Vec<u64>) -> Field {
        let q = p.pow(k);
        let mod_bits = if p == 2 {
            modulus.iter().enumerate().fold(0u64, |acc, (i, &c)| acc | (c << i))
        } else {
            0
        };
        let generator = if k == 1 { (p - modulus[0]) % p } else { p };
        let mut f = Field { p, k, q, modulus, mod_bits, tab: None, tmask: 0, generator };
        if q <= TABLE_LIMIT {
            f.tab = Some(f.build_tables());
        }
        if p == 2 {
            let mut m = 0u64;
            for i in 0..k {
                let b = 1u64 << i;
                let (mut s, mut t) = (b, b);
                for _ in 1..k {
                    t = f.mul(t, t);
                    s ^= t;
                }
                debug_assert!(s <= 1);
                m |= s << i;
            }
            f.tmask = m;
        }
        f
    }

    fn build_tables(&self) -> Tables {
        let n = (self.q - 1) as usize;
        let mut exp = vec![0u32; 2 * n];
        let mut log = vec![0u32; self.q as usize];
        let mut x: Elem = 1;
        for i in 0..n {
            assert!(i == 0 || x != 1, "Conway generator not primitive for {}^{}", self.p, self.k);
            exp[i] = x as u32;
            log[x as usize] = i as u32;
            x = self.mul_slow(x, self.generator);
        }
        assert_eq!(x, 1);
        for i in n..2 * n {
            exp[i] = exp[i - n];
        }
        let mut zech = Vec::new();
        if self.p != 2 && self.k > 1 {
            zech = vec![NO_ZECH; n];
            for (i, z) in zech.iter_mut().enumerate() {
                let s = self.add_digits(exp[i] as u64, 1);
                if s != 0 {
                    *z = log[s as usize];
                }
            }
        }
        Tables { log, exp, zech }
    }

    pub fn p(&self) -> u64 {
        self.p
    }
    pub fn k(&self) -> u32 {
        self.k
    }
    /// Number of elements.
    pub fn q(&self) -> u64 {
        self.q
    }
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }
    pub fn generator(&self) -> Elem {
        self.generator
    }
    pub fn desc(&self) -> FieldDesc {
        FieldDesc { p: self.p, k: self.k, modulus: self.modulus.clone() }
    }
    pub fn tag(&self) -> String {
        format!("{}^{}", self.p, self.k)
    }
    pub fn has_tables(&self) -> bool {
        self.tab.is_some()
    }

    /// Coefficients of an element in the polynomial basis.
    pub fn digits(&self, mut a: Elem) -> Vec<u64> {
        let mut d = Vec::with_capacity(self.k as usize);
        for _ in 0..self.k {
            d.push(a % self.p);
            a /= self.p;
        }
        d
    }

    pub fn from_digits(&self, d: &[u64]) -> Elem {
        d.iter().rev().fold(0, |acc, &c| acc * self.p + c % self.p)
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        if self.p == 2 {
            return a ^ b;
        }
        if self.k == 1 {
            let s = a + b;
            return if s >= self.p { s - self.p } else { s };
        }
        if let Some(t) = &self.tab {
            if a == 0 {
                return b;
            }
            if b == 0 {
                return a;
            }
            let n = self.q - 1;
            let la = t.log[a as usize] as u64;
            let lb = t.log[b as usize] as u64;
            let d = if lb >= la { lb - la } else { lb + n - la };
            let z = t.zech[d as usize];
            if z == NO_ZECH {
                return 0;
            }
            return t.exp[(la + z as u64) as usize] as u64;
        }
        self.add_digits(a, b)
    }

    fn add_digits(&self, mut a: Elem, mut b: Elem) -> Elem {
        let p = self.p;
        let (mut r, mut pw) = (0, 1);
        while a > 0 || b > 0 {
            let mut d = a % p + b % p;
            if d >= p {
                d -= p;
            }
            r += d * pw;
            pw *= p;
            a /= p;
            b /= p;
        }
        r
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        if self.p == 2 || a == 0 {
            return a;
        }
        if self.k == 1 {
            return self.p - a;
        }
        if let Some(t) = &self.tab {
            let n = self.q - 1;
            return t.exp[(t.log[a as usize] as u64 + n / 2) as usize] as u64;
        }
        let p = self.p;
        let (mut a, mut r, mut pw) = (a, 0, 1);
        while a > 0 {
            r += ((p - a % p) % p) * pw;
            pw *= p;
            a /= p;
        }
        r
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        if self.p == 2 {
            return a ^ b;
        }
        if self.k == 1 {
            return if a >= b { a - b } else { a + self.p - b };
        }
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a == 0 || b == 0 {
            return 0;
        }
        if let Some(t) = &self.tab {
            return t.exp[(t.log[a as usize] + t.log[b as usize]) as usize] as u64;
        }
        if self.k == 1 {
            return ((a as u128 * b as u128) % self.p as u128) as u64;
        }
        self.mul_slow(a, b)
    }

    fn mul_slow(&self, a: Elem, b: Elem) -> Elem {
        if self.k == 1 {
            return ((a as u128 * b as u128) % self.p as u128) as u64;
        }
        if self.p == 2 {
            let mut prod: u128 = 0;
            let mut bb = b;
            let mut i = 0;
            while bb != 0 {
                if bb & 1 == 1 {
                    prod ^= (a as u128) << i;
                }
                bb >>= 1;
                i += 1;
            }
            let k = self.k as usize;
            for i in (k..2 * k - 1).rev() {
                if (prod >> i) & 1 == 1 {
                    prod ^= (self.mod_bits as u128) << (i - k);
                }
            }
            return prod as u64;
        }
        let p = self.p;
        let k = self.k as usize;
        let da = self.digits(a);
        let db = self.digits(b);
        let mut prod = vec![0u64; 2 * k - 1];
        for i in 0..k {
            if da[i] == 0 {
                continue;
            }
            for j in 0..k {
                prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
            }
        }
        for i in (k..2 * k - 1).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            for j in 0..k {
                prod[i - k + j] = (prod[i - k + j] + c * (p - self.modulus[j])) % p;
            }
        }
        self.from_digits(&prod[..k])
    }

    #[inline]
    pub fn sqr(&self, a: Elem) -> Elem {
        self.mul(a, a)
    }

    /// a^e with e an arbitrary non-negative integer.
    pub fn pow(&self, a: Elem, e: u128) -> Elem {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let n = (self.q - 1) as u128;
        let e = e % n;
        if let Some(t) = &self.tab {
            let l = (t.log[a as usize] as u128 * e) % n;
            return t.exp[l as usize] as u64;
        }
        let (mut base, mut e, mut r) = (a, e, 1);
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        r
    }

    pub fn inv(&self, a: Elem) -> Elem {
        assert!(a != 0, "inverse of zero");
        if let Some(t) = &self.tab {
            let n = (self.q - 1) as u32;
            let l = t.log[a as usize];
            return t.exp[((n - l) % n) as usize] as u64;
        }
        self.pow(a, (self.q - 2) as u128)
    }

    pub fn div(&self, a: Elem, b: Elem) -> Elem {
        self.mul(a, self.inv(b))
    }

    /// Discrete log base the field generator (tabled fields only).
    pub fn log(&self, a: Elem) -> Option<u64> {
        if a == 0 {
            return None;
        }
        self.tab.as_ref().map(|t| t.log[a as usize] as u64)
    }

    /// Embeds an integer into the prime field.
    pub fn from_int(&self, n: i64) -> Elem {
        n.rem_euclid(self.p as i64) as u64
    }

    /// x^p.
    #[inline]
    pub fn frob(&self, a: Elem) -> Elem {
        if self.p == 2 {
            return self.mul(a, a);
        }
        self.pow(a, self.p as u128)
    }

    /// Unique p-th root (inverse Frobenius).
    pub fn pth_root(&self, a: Elem) -> Elem {
        let mut r = a;
        for _ in 1..self.k {
            r = self.frob(r);
        }
        r
    }

    /// x^{q^t} for q = p^base_degree.
    pub fn frobenius(&self, a: Elem, t: u64, base_degree: u32) -> Result<Elem> {
        if base_degree == 0 || self.k % base_degree != 0 {
            return Err(Error::IncoherentTower { base: base_degree, degree: self.k });
        }
        let e = ((t % self.k as u64) * base_degree as u64) % self.k as u64;
        Ok(self.frob_pow(a, e as u32))
    }

    /// x^{p^e}.
    pub fn frob_pow(&self, a: Elem, e: u32) -> Elem {
        let e = e % self.k;
        if a == 0 || e == 0 {
            return a;
        }
        if let Some(t) = &self.tab {
            let n = self.q - 1;
            let mut m = 1u64;
            for _ in 0..e {
                m = (m * self.p) % n;
            }
            let l = (t.log[a as usize] as u64 * m) % n;
            return t.exp[l as usize] as u64;
        }
        let mut r = a;
        for _ in 0..e {
            r = self.frob(r);
        }
        r
    }

    /// Least m >= 1 with x^{q^m} = x, q = p^base_degree.
    pub fn element_degree(&self, a: Elem, base_degree: u32) -> Result<u32> {
        if base_degree == 0 || self.k % base_degree != 0 {
            return Err(Error::IncoherentTower { base: base_degree, degree: self.k });
        }
        let r = self.k / base_degree;
        for m in 1..=r {
            if r % m == 0 && self.frob_pow(a, m * base_degree) == a {
                return Ok(m);
            }
        }
        unreachable!()
    }

    /// Absolute trace to F_2 (characteristic 2 only).
    #[inline]
    pub fn trace2(&self, a: Elem) -> u32 {
        debug_assert_eq!(self.p, 2);
        (a & self.tmask).count_ones() & 1
    }

    pub fn is_square(&self, a: Elem) -> bool {
        if a == 0 || self.p == 2 {
            return true;
        }
        if let Some(t) = &self.tab {
            return t.log[a as usize] % 2 == 0;
        }
        self.pow(a, ((self.q - 1) / 2) as u128) == 1
    }

    /// A square root if one exists; of the two roots the smaller code.
    pub fn sqrt(&self, a: Elem) -> Option<Elem> {
        if a == 0 {
            return Some(0);
        }
        if self.p == 2 {
            if let Some(t) = &self.tab {
                let n = self.q - 1;
                let l = t.log[a as usize] as u64;
                let h = if l % 2 == 0 { l / 2 } else { (l + n) / 2 };
                return Some(t.exp[h as usize] as u64);
            }
            return Some(self.pth_root(a));
        }
        if !self.is_square(a) {
            return None;
        }
        let r = if let Some(t) = &self.tab {
            t.exp[(t.log[a as usize] / 2) as usize] as u64
        } else {
            self.tonelli_shanks(a)
        };
        let s = self.neg(r);
        Some(r.min(s))
    }

    fn tonelli_shanks(&self, a: Elem) -> Elem {
        let n = self.q - 1;
        let (mut s, mut odd) = (0u32, n);
        while odd % 2 == 0 {
            odd /= 2;
            s += 1;
        }
        let z = (2..self.q).find(|&z| !self.is_square(z)).expect("non-residue");
        let mut m = s;
        let mut c = self.pow(z, odd as u128);
        let mut t = self.pow(a, odd as u128);
        let mut r = self.pow(a, ((odd + 1) / 2) as u128);
        while t != 1 {
            let mut i = 0;
            let mut tt = t;
            while tt != 1 {
                tt = self.mul(tt, tt);
                i += 1;
            }
            let mut b = c;
            for _ in 0..(m - i - 1) {
                b = self.mul(b, b);
            }
            m = i;
            c = self.mul(b, b);
            t = self.mul(t, c);
            r = self.mul(r, b);
        }
        r
    }

    /// Evaluates a polynomial over F_p (coefficients as residues, constant first) at a.
    pub fn eval_prime_poly(&self, coeffs: &[u64], a: Elem) -> Elem {
        coeffs.iter().rev().fold(0, |acc, &c| self.add(self.mul(acc, a), c % self.p))
    }
}

/// Canonical embedding F_{p^m} -> F_{p^n}: the generator of the source goes
/// to g^{(p^n-1)/(p^m-1)} for g the generator of the target. This is a root of
/// the source Conway polynomial, and these choices compose along towers.
pub struct Embedding {
    pub from: FieldRef,
    pub to: FieldRef,
    basis: Vec<Elem>,
}

impl Embedding {
    pub fn apply(&self, a: Elem) -> Elem {
        if self.from.k == 1 {
            return a;
        }
        let p = self.from.p;
        let (mut a, mut r) = (a, 0);
        for &b in &self.basis {
            let d = a % p;
            if d != 0 {
                r = self.to.add(r, self.to.mul(d, b));
            }
            a /= p;
        }
        r
    }
}

static EMBEDDINGS: Lazy<Mutex<HashMap<(u64, u32, u32), Arc<Embedding>>>> = Lazy::new(|| Mutex::new(HashMap::new()));

pub fn embedding(from: &FieldRef, to: &FieldRef) -> Result<Arc<Embedding>> {
    if from.p != to.p {
        return Err(Error::InvalidCharacteristic(to.p));
    }
    if to.k % from.k != 0 {
        return Err(Error::NoEmbedding { from: from.k, to: to.k });
    }
    let key = (from.p, from.k, to.k);
    if let Some(e) = EMBEDDINGS.lock().unwrap().get(&key) {
        return Ok(e.clone());
    }
    let exp = (to.q - 1) / (from.q - 1);
    let gamma = to.pow(to.generator, exp as u128);
    debug_assert_eq!(to.eval_prime_poly(&from.modulus, gamma), 0);
    let mut basis = Vec::with_capacity(from.k as usize);
    let mut x = 1;
    for _ in 0..from.k {
        basis.push(x);
        x = to.mul(x, gamma);
    }
    let e = Arc::new(Embedding { from: from.clone(), to: to.clone(), basis });
    Ok(EMBEDDINGS.lock().unwrap().entry(key).or_insert(e).clone())
}

pub fn embed(x: Elem, from: &FieldRef, to: &FieldRef) -> Result<Elem> {
    Ok(embedding(from, to)?.apply(x))
}

/// Normal basis of F_{q^r} over F_q (q the order of `base`): the conjugates of
/// the least-code element whose conjugates are linearly independent.
pub fn normal_basis(base: &FieldRef, r: u32) -> Result<Vec<Elem>> {
    let big = make_field(base.p, base.k * r)?;
    if r == 1 {
        return Ok(vec![1]);
    }
    // x^r - 1
    let mut xr1 = vec![0; r as usize + 1];
    xr1[0] = big.neg(1);
    xr1[r as usize] = 1;
    for a in 1..big.q {
        let conj: Vec<Elem> = (0..r).map(|i| big.frob_pow(a, i * base.k)).collect();
        let g = polyfq::poly_gcd(&big, &xr1, &conj);
        if g.len() == 1 {
            return Ok(conj);
        }
    }
    unreachable!("normal basis theorem")
}
