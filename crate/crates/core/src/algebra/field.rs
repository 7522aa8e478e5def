//! Arithmetic in GF(p^m) for p^m <= 256.
//!
//! Elements are integers in `[0, q)` whose base-p digits are the coefficients
//! of a polynomial of degree < m (little-endian). The modulus uses the same
//! encoding and is kept exactly as supplied.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// An element of a finite field, identified by its digit encoding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Scalar(u8);

impl Scalar {
    pub const ZERO: Scalar = Scalar(0);
    pub const ONE: Scalar = Scalar(1);

    pub fn value(self) -> u8 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

struct Tables {
    p: u32,
    m: u32,
    q: u32,
    modulus: u64,
    add: Vec<u8>,
    neg: Vec<u8>,
    exp: Vec<u8>,
    log: Vec<u8>,
}

/// A validated finite field GF(p^m) with precomputed tables.
///
/// Cloning is cheap. Two specs are equal when `p`, `m` and the modulus agree;
/// different moduli give isomorphic but distinct fields.
#[derive(Clone)]
pub struct FieldSpec(Arc<Tables>);

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.m == other.0.m && self.0.modulus == other.0.modulus)
    }
}

impl Eq for FieldSpec {}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GF({}^{}; modulus {})",
            self.0.p, self.0.m, self.0.modulus
        )
    }
}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn digits(mut v: u64, p: u32, len: usize) -> Vec<u32> {
    let mut out = vec![0; len];
    for d in out.iter_mut() {
        *d = (v % p as u64) as u32;
        v /= p as u64;
    }
    out
}

fn undigits(ds: &[u32], p: u32) -> u64 {
    ds.iter().rev().fold(0u64, |acc, &d| acc * p as u64 + d as u64)
}

/// Remainder of `a` modulo the monic polynomial `b` over GF(p).
fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    while r.len() > db {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - db;
        if lead != 0 {
            for (i, &c) in b.iter().enumerate() {
                let t = (lead * c) % p;
                r[shift + i] = (r[shift + i] + p - t) % p;
            }
        }
        r.pop();
    }
    r
}

impl FieldSpec {
    /// Builds GF(p^m). For `m = 1` the modulus may be omitted and defaults to
    /// the polynomial `x` (encoded as `p`).
    pub fn new(p: u32, m: u32, modulus: Option<u64>) -> Result<FieldSpec> {
        if !is_prime(p) {
            return Err(Error::NonPrime(p));
        }
        if m == 0 {
            return Err(Error::ZeroDegree);
        }
        let q = (p as u64).checked_pow(m).unwrap_or(u64::MAX);
        if q > 256 {
            return Err(Error::FieldTooLarge(q));
        }
        let q = q as u32;
        let modulus = match modulus {
            Some(v) => v,
            None if m == 1 => p as u64,
            None => return Err(Error::MissingModulus(m)),
        };
        if modulus < q as u64 || modulus >= 2 * q as u64 {
            return Err(Error::InvalidModulus {
                p,
                degree: m,
                modulus,
            });
        }
        let poly = digits(modulus, p, m as usize + 1);
        // Trial division by every monic polynomial of degree 1..=m/2.
        for deg in 1..=m / 2 {
            let count = (p as u64).pow(deg);
            for low in 0..count {
                let mut divisor = digits(low, p, deg as usize);
                divisor.push(1);
                if poly_rem(&poly, &divisor, p).iter().all(|&c| c == 0) {
                    return Err(Error::ReducibleModulus(modulus));
                }
            }
        }

        let qs = q as usize;
        let mut add = vec![0u8; qs * qs];
        for a in 0..q {
            let da = digits(a as u64, p, m as usize);
            for b in 0..q {
                let db = digits(b as u64, p, m as usize);
                let s: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a as usize * qs + b as usize] = undigits(&s, p) as u8;
            }
        }
        let neg: Vec<u8> = (0..q)
            .map(|a| {
                let d: Vec<u32> = digits(a as u64, p, m as usize)
                    .into_iter()
                    .map(|x| (p - x) % p)
                    .collect();
                undigits(&d, p) as u8
            })
            .collect();

        let slow_mul = |a: u32, b: u32| -> u32 {
            let da = digits(a as u64, p, m as usize);
            let db = digits(b as u64, p, m as usize);
            let mut prod = vec![0u32; 2 * m as usize];
            for (i, x) in da.iter().enumerate() {
                for (j, y) in db.iter().enumerate() {
                    prod[i + j] = (prod[i + j] + x * y) % p;
                }
            }
            let r = poly_rem(&prod, &poly, p);
            undigits(&r, p) as u32
        };

        // Find a primitive element and build exp/log tables.
        let order = q - 1;
        let mut exp = Vec::new();
        for g in 1..q {
            let mut powers = Vec::with_capacity(order as usize);
            let mut x = 1u32;
            for _ in 0..order {
                powers.push(x as u8);
                x = slow_mul(x, g);
                if x == 1 {
                    break;
                }
            }
            if powers.len() == order as usize {
                exp = powers;
                break;
            }
        }
        debug_assert_eq!(exp.len(), order as usize);
        let mut log = vec![0u8; qs];
        for (i, &e) in exp.iter().enumerate() {
            log[e as usize] = i as u8;
        }

        Ok(FieldSpec(Arc::new(Tables {
            p,
            m,
            q,
            modulus,
            add,
            neg,
            exp,
            log,
        })))
    }

    /// GF(p) with the canonical modulus.
    pub fn prime(p: u32) -> Result<FieldSpec> {
        FieldSpec::new(p, 1, None)
    }

    pub fn p(&self) -> u32 {
        self.0.p
    }

    pub fn m(&self) -> u32 {
        self.0.m
    }

    pub fn q(&self) -> u32 {
        self.0.q
    }

    pub fn modulus(&self) -> u64 {
        self.0.modulus
    }

    pub fn is_binary(&self) -> bool {
        self.0.q == 2
    }

    pub fn elem(&self, value: u32) -> Result<Scalar> {
        if value < self.0.q {
            Ok(Scalar(value as u8))
        } else {
            Err(Error::NotAnElement {
                value,
                q: self.0.q,
            })
        }
    }

    /// All field elements in encoding order.
    pub fn elements(&self) -> impl Iterator<Item = Scalar> {
        (0..self.0.q).map(|v| Scalar(v as u8))
    }

    #[inline]
    pub fn add(&self, a: Scalar, b: Scalar) -> Scalar {
        Scalar(self.0.add[a.0 as usize * self.0.q as usize + b.0 as usize])
    }

    #[inline]
    pub fn neg(&self, a: Scalar) -> Scalar {
        Scalar(self.0.neg[a.0 as usize])
    }

    #[inline]
    pub fn sub(&self, a: Scalar, b: Scalar) -> Scalar {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Scalar, b: Scalar) -> Scalar {
        if a.0 == 0 || b.0 == 0 {
            return Scalar(0);
        }
        let t = &self.0;
        let order = t.q as usize - 1;
        let s = t.log[a.0 as usize] as usize + t.log[b.0 as usize] as usize;
        Scalar(t.exp[s % order])
    }

    pub fn inv(&self, a: Scalar) -> Result<Scalar> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        let t = &self.0;
        let order = t.q as usize - 1;
        Ok(Scalar(t.exp[(order - t.log[a.0 as usize] as usize) % order]))
    }

    pub fn div(&self, a: Scalar, b: Scalar) -> Result<Scalar> {
        Ok(self.mul(a, self.inv(b)?))
    }
}
