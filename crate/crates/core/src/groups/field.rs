use crate::counting::is_prime_power;
use crate::error::{Error, Result};

/// Small finite field with full add/mul tables; elements are indices
/// `0..q` encoding polynomials over the prime field in base-p digits.
#[derive(Clone, Debug)]
pub struct FiniteField {
    p: u64,
    k: u32,
    q: u64,
    modulus: Vec<u8>,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

const FIELD_CAP: u64 = 16;

fn digits(mut e: u64, p: u64, k: u32) -> Vec<u64> {
    let mut out = vec![0; k as usize];
    for d in out.iter_mut() {
        *d = e % p;
        e /= p;
    }
    out
}

fn undigits(ds: &[u64], p: u64) -> u64 {
    ds.iter().rev().fold(0, |acc, &d| acc * p + d)
}

/// Multiply two F_p[x] polynomials given by digit vectors, reduce by the
/// monic modulus.
fn poly_mul_mod(a: &[u64], b: &[u64], modulus: &[u64], p: u64) -> Vec<u64> {
    let k = modulus.len() - 1;
    let mut prod = vec![0u64; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    for deg in (k..prod.len()).rev() {
        let c = prod[deg];
        if c == 0 {
            continue;
        }
        prod[deg] = 0;
        for (i, &m) in modulus.iter().take(k).enumerate() {
            let sub = c * m % p;
            prod[deg - k + i] = (prod[deg - k + i] + p * p - sub) % p;
        }
    }
    prod.truncate(k.max(1));
    prod
}

fn has_root(poly: &[u64], p: u64) -> bool {
    (0..p).any(|x| {
        poly.iter()
            .rev()
            .fold(0u64, |acc, &c| (acc * x + c) % p)
            == 0
    })
}

/// Irreducibility over F_p by trial division, enough for degree <= 4.
fn is_irreducible_fp(poly: &[u64], p: u64) -> bool {
    let deg = poly.len() - 1;
    if deg == 1 {
        return true;
    }
    if has_root(poly, p) {
        return false;
    }
    if deg <= 3 {
        return true;
    }
    // degree 4: also exclude products of two irreducible quadratics
    let mut quads = Vec::new();
    for c0 in 0..p {
        for c1 in 0..p {
            let cand = vec![c0, c1, 1];
            if !has_root(&cand, p) {
                quads.push(cand);
            }
        }
    }
    for a in &quads {
        for b in &quads {
            let mut prod = vec![0u64; 5];
            for (i, &x) in a.iter().enumerate() {
                for (j, &y) in b.iter().enumerate() {
                    prod[i + j] = (prod[i + j] + x * y) % p;
                }
            }
            if prod == *poly {
                return false;
            }
        }
    }
    true
}

impl FiniteField {
    /// Build the field with `q` elements; the modulus is the
    /// lexicographically smallest monic irreducible (coefficient tuple
    /// read from the constant term up), and `x` itself for prime fields.
    pub fn new(q: u64) -> Result<FiniteField> {
        let (p, k) = is_prime_power(q).ok_or(Error::NotPrimePower(q))?;
        if q > FIELD_CAP {
            return Err(Error::ScaleCap(format!("field size {q}")));
        }
        let modulus: Vec<u64> = if k == 1 {
            vec![0, 1]
        } else {
            let mut found = None;
            'scan: for tuple in 0..q {
                let mut cand = digits(tuple, p, k);
                cand.push(1);
                if is_irreducible_fp(&cand, p) {
                    found = Some(cand);
                    break 'scan;
                }
            }
            found.expect("an irreducible of every degree exists")
        };
        let qi = q as usize;
        let mut add = vec![0u8; qi * qi];
        let mut mul = vec![0u8; qi * qi];
        let mut neg = vec![0u8; qi];
        let mut inv = vec![0u8; qi];
        for a in 0..q {
            let da = digits(a, p, k);
            let nd: Vec<u64> = da.iter().map(|&d| (p - d) % p).collect();
            neg[a as usize] = undigits(&nd, p) as u8;
            for b in 0..q {
                let db = digits(b, p, k);
                let sum: Vec<u64> = da.iter().zip(&db).map(|(&x, &y)| (x + y) % p).collect();
                add[(a * q + b) as usize] = undigits(&sum, p) as u8;
                let prod = poly_mul_mod(&da, &db, &modulus, p);
                mul[(a * q + b) as usize] = undigits(&prod, p) as u8;
            }
        }
        for a in 1..q {
            let j = (1..q)
                .find(|&b| mul[(a * q + b) as usize] == 1)
                .expect("every nonzero element is invertible");
            inv[a as usize] = j as u8;
        }
        let field = FiniteField {
            p,
            k,
            q,
            modulus: modulus.iter().map(|&c| c as u8).collect(),
            add,
            mul,
            neg,
            inv,
        };
        debug_assert!(field.has_generator());
        Ok(field)
    }

    fn has_generator(&self) -> bool {
        (1..self.q).any(|a| {
            // order of a in the multiplicative group
            let mut acc = a as u8;
            let mut e = 1u64;
            while acc != 1 {
                acc = self.mul(acc, a as u8);
                e += 1;
            }
            e == self.q - 1
        })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn extension_degree(&self) -> u32 {
        self.k
    }

    /// Modulus coefficients from the constant term up, monic.
    pub fn modulus(&self) -> &[u8] {
        &self.modulus
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg[b as usize])
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: u8) -> u8 {
        self.neg[a as usize]
    }

    /// Multiplicative inverse; `a` must be nonzero.
    #[inline]
    pub fn inv(&self, a: u8) -> u8 {
        debug_assert!(a != 0);
        self.inv[a as usize]
    }

    pub fn one_neg(&self) -> u8 {
        self.neg(1)
    }

    pub fn elements(&self) -> impl Iterator<Item = u8> {
        0..self.q as u8
    }

    /// Order of a nonzero element in the multiplicative group.
    pub fn element_order(&self, a: u8) -> u64 {
        assert!(a != 0);
        let mut acc = a;
        let mut e = 1;
        while acc != 1 {
            acc = self.mul(acc, a);
            e += 1;
        }
        e
    }
}

/// The element orders are consistent with the cyclic group of size q-1.
pub fn orders_divide_group(field: &FiniteField) -> bool {
    (1..field.q()).all(|a| (field.q() - 1) % field.element_order(a as u8) == 0)
}
