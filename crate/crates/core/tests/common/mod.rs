//! Brute-force oracles shared by the integration tests. They use only field
//! arithmetic and expand the sextic monomial by monomial.

#![allow(dead_code)]

use dp1::gfield::{embedding, make_field, Elem, Field, FieldRef};
use dp1::sextic::Sextic;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Coefficients of one sextic over a field, in the 21-code order.
pub struct Raw {
    pub field: FieldRef,
    pub codes: Vec<Elem>,
}

/// (z exponent, w exponent, form degree) of the five coefficient forms.
const SHAPE: [(u32, u32, usize); 5] = [(1, 1, 1), (2, 0, 2), (0, 1, 3), (1, 0, 4), (0, 0, 6)];

impl Raw {
    pub fn over(s: &Sextic, n: u32) -> Raw {
        let big = make_field(s.field.p(), s.field.k() * n).unwrap();
        let e = embedding(&s.field, &big).unwrap();
        Raw { codes: s.codes().iter().map(|&c| e.apply(c)).collect(), field: big }
    }

    /// All monomials c x^i y^j z^k w^l of the sextic.
    fn monomials(&self) -> Vec<(Elem, [u32; 4])> {
        let mut out = vec![(1, [0, 0, 0, 2]), (1, [0, 0, 3, 0])];
        let mut idx = 0;
        for (zk, wl, d) in SHAPE {
            for i in 0..=d {
                out.push((self.codes[idx], [(d - i) as u32, i as u32, zk, wl]));
                idx += 1;
            }
        }
        out
    }

    pub fn eval(&self, v: [Elem; 4]) -> Elem {
        eval_monos(&self.field, &self.monomials(), v)
    }

    /// The four partial derivatives.
    pub fn grad(&self, v: [Elem; 4]) -> [Elem; 4] {
        let f = &*self.field;
        let monos = self.monomials();
        std::array::from_fn(|var| {
            let d: Vec<(Elem, [u32; 4])> = monos
                .iter()
                .filter(|(_, e)| e[var] > 0)
                .map(|&(c, mut e)| {
                    let k = f.from_int(e[var] as i64);
                    e[var] -= 1;
                    (f.mul(c, k), e)
                })
                .collect();
            eval_monos(f, &d, v)
        })
    }
}

fn eval_monos(f: &Field, monos: &[(Elem, [u32; 4])], v: [Elem; 4]) -> Elem {
    let mut acc = 0;
    for &(c, e) in monos {
        if c == 0 {
            continue;
        }
        let mut t = c;
        for i in 0..4 {
            t = f.mul(t, f.pow(v[i], e[i] as u128));
        }
        acc = f.add(acc, t);
    }
    acc
}

/// #X(F_{q^n}) by enumerating every nonzero (x,y,z,w) and dividing by the
/// free weighted scaling action.
pub fn count_oracle(s: &Sextic, n: u32) -> u64 {
    let r = Raw::over(s, n);
    let q = r.field.q();
    let mut sols = 0u64;
    for x in 0..q {
        for y in 0..q {
            for z in 0..q {
                for w in 0..q {
                    if (x, y, z, w) != (0, 0, 0, 0) && r.eval([x, y, z, w]) == 0 {
                        sols += 1;
                    }
                }
            }
        }
    }
    assert_eq!(sols % (q - 1), 0);
    sols / (q - 1)
}

/// Coefficients (x^6 .. y^6) of F(x, y, Q(x,y), T(x,y)).
fn substituted(r: &Raw, qf: &[Elem; 3], t: &[Elem; 4]) -> [Elem; 7] {
    let f = &*r.field;
    let mul = |a: &[Elem], b: &[Elem]| -> Vec<Elem> {
        let mut c = vec![0; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                c[i + j] = f.add(c[i + j], f.mul(x, y));
            }
        }
        c
    };
    let c = &r.codes;
    let (f1, f2, f3, f4, f6) = (&c[0..2], &c[2..5], &c[5..9], &c[9..14], &c[14..21]);
    let terms = [
        mul(t, t),
        mul(&mul(qf, qf), qf),
        mul(&mul(t, qf), f1),
        mul(&mul(qf, qf), f2),
        mul(t, f3),
        mul(qf, f4),
        f6.to_vec(),
    ];
    let mut out = [0; 7];
    for term in terms {
        for (i, &v) in term.iter().enumerate() {
            out[i] = f.add(out[i], v);
        }
    }
    out
}

/// Number of pairs (Q, T) over F_{q^n} with F(x, y, Q, T) = 0. Coefficient j
/// of the substitution depends only on T_0..T_j for j <= 3, so partial T are
/// rejected as soon as one of those coefficients is nonzero.
pub fn curve_oracle(s: &Sextic, n: u32) -> u64 {
    let r = Raw::over(s, n);
    let q = r.field.q();
    let mut count = 0;
    if q.pow(7) <= 1 << 14 {
        for code in 0..q.pow(7) {
            let d: Vec<Elem> = (0..7).map(|i| (code / q.pow(i)) % q).collect();
            if substituted(&r, &[d[0], d[1], d[2]], &[d[3], d[4], d[5], d[6]]) == [0; 7] {
                count += 1;
            }
        }
        return count;
    }
    for code in 0..q.pow(3) {
        let qf = [code % q, (code / q) % q, code / (q * q)];
        let mut partial: Vec<[Elem; 4]> = vec![[0; 4]];
        for j in 0..4 {
            let mut next = Vec::new();
            for t in &partial {
                for v in 0..q {
                    let mut t2 = *t;
                    t2[j] = v;
                    if substituted(&r, &qf, &t2)[j] == 0 {
                        next.push(t2);
                    }
                }
            }
            partial = next;
        }
        count += partial.iter().filter(|t| substituted(&r, &qf, t) == [0; 7]).count() as u64;
    }
    count
}

/// A singular point over F_{q^n} by exhaustive search of the cone.
pub fn singular_oracle(s: &Sextic, n: u32) -> Option<[Elem; 4]> {
    let r = Raw::over(s, n);
    let q = r.field.q();
    let p1 = (0..q).map(|t| (1, t)).chain(std::iter::once((0, 1)));
    for (x, y) in p1 {
        for z in 0..q {
            for w in 0..q {
                let v = [x, y, z, w];
                if r.eval(v) == 0 && r.grad(v) == [0; 4] {
                    return Some(v);
                }
            }
        }
    }
    // the base point [0:0:-1:1]
    let f = &*r.field;
    let v = [0, 0, f.neg(1), 1];
    (r.grad(v) == [0; 4]).then_some(v)
}

pub fn random_sextic(f: &FieldRef, rng: &mut ChaCha8Rng) -> Sextic {
    let codes: Vec<Elem> = (0..21).map(|_| rng.gen_range(0..f.q())).collect();
    Sextic::from_codes(f.clone(), &codes).unwrap()
}

pub fn random_smooth(f: &FieldRef, rng: &mut ChaCha8Rng) -> Sextic {
    loop {
        let s = random_sextic(f, rng);
        if dp1::sextic::is_smooth(&s).unwrap().is_smooth() {
            return s;
        }
    }
}
