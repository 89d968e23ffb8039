use super::field::FiniteField;
use crate::error::{Error, Result};
use serde::Serialize;

/// Polynomials over the field are coefficient vectors from the constant
/// term up; catalogue entries are monic with nonzero constant term.
pub type Poly = Vec<u8>;

pub fn poly_deg(f: &Poly) -> usize {
    f.len() - 1
}

fn poly_trim(mut f: Poly) -> Poly {
    while f.len() > 1 && *f.last().unwrap() == 0 {
        f.pop();
    }
    f
}

pub fn poly_mul(a: &Poly, b: &Poly, field: &FiniteField) -> Poly {
    let mut out = vec![0u8; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = field.add(out[i + j], field.mul(x, y));
        }
    }
    poly_trim(out)
}

/// Remainder of `a` by a nonzero `b`.
pub fn poly_rem(a: &Poly, b: &Poly, field: &FiniteField) -> Poly {
    let db = poly_deg(b);
    if db == 0 {
        assert!(b[0] != 0, "division by zero polynomial");
        return vec![0];
    }
    let lead_inv = field.inv(b[db]);
    let mut rem = poly_trim(a.clone());
    while poly_deg(&rem) >= db && !poly_is_zero(&rem) {
        let dr = poly_deg(&rem);
        let factor = field.mul(rem[dr], lead_inv);
        for (i, &c) in b.iter().enumerate() {
            rem[dr - db + i] = field.sub(rem[dr - db + i], field.mul(factor, c));
        }
        rem = poly_trim(rem);
    }
    rem
}

pub fn poly_is_zero(f: &Poly) -> bool {
    f.iter().all(|&c| c == 0)
}

pub fn poly_divides(d: &Poly, f: &Poly, field: &FiniteField) -> bool {
    poly_is_zero(&poly_rem(f, d, field))
}

pub fn poly_gcd(a: &Poly, b: &Poly, field: &FiniteField) -> Poly {
    let (mut x, mut y) = (poly_trim(a.clone()), poly_trim(b.clone()));
    while !poly_is_zero(&y) {
        let r = poly_rem(&x, &y, field);
        x = y;
        y = r;
    }
    // normalize monic
    if !poly_is_zero(&x) {
        let s = field.inv(*x.last().unwrap());
        for c in x.iter_mut() {
            *c = field.mul(*c, s);
        }
    }
    x
}

pub fn poly_eval(f: &Poly, x: u8, field: &FiniteField) -> u8 {
    f.iter()
        .rev()
        .fold(0, |acc, &c| field.add(field.mul(acc, x), c))
}

/// `base^e mod m` with `m` monic.
pub fn poly_pow_mod(base: &Poly, mut e: u64, m: &Poly, field: &FiniteField) -> Poly {
    let mut acc = vec![1u8];
    let mut b = poly_rem(base, m, field);
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_rem(&poly_mul(&acc, &b, field), m, field);
        }
        e >>= 1;
        if e > 0 {
            b = poly_rem(&poly_mul(&b, &b, field), m, field);
        }
    }
    acc
}

pub fn is_palindromic(f: &Poly) -> bool {
    f.iter().eq(f.iter().rev())
}

/// The reciprocal normalized to monic: reverse the coefficients and
/// divide by the old constant term (which must be nonzero).
pub fn involution(f: &Poly, field: &FiniteField) -> Poly {
    assert!(f[0] != 0);
    let s = field.inv(f[0]);
    f.iter().rev().map(|&c| field.mul(c, s)).collect()
}

/// Deterministic irreducibility test: no root, then the field-power
/// criterion (`x^(q^n) = x` mod f and coprimality at maximal subfields).
pub fn is_irreducible(f: &Poly, field: &FiniteField) -> bool {
    let n = poly_deg(f);
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    if (0..field.q() as u8).any(|x| poly_eval(f, x, field) == 0) {
        return false;
    }
    if n <= 3 {
        return true;
    }
    let x = vec![0u8, 1];
    let qn = field
        .q()
        .checked_pow(n as u32)
        .expect("q^n fits in u64 at oracle scale");
    let frob = poly_pow_mod(&x, qn, f, field);
    if frob != poly_rem(&x, f, field) {
        return false;
    }
    let mut primes = Vec::new();
    let mut rest = n;
    let mut d = 2;
    while d * d <= rest {
        if rest % d == 0 {
            primes.push(d);
            while rest % d == 0 {
                rest /= d;
            }
        }
        d += 1;
    }
    if rest > 1 {
        primes.push(rest);
    }
    for l in primes {
        let sub = poly_pow_mod(&x, field.q().pow((n / l) as u32), f, field);
        let mut diff: Poly = sub.clone();
        // sub - x
        if diff.len() < 2 {
            diff.resize(2, 0);
        }
        diff[1] = field.sub(diff[1], 1);
        let diff = poly_trim(diff);
        if poly_is_zero(&diff) {
            return false;
        }
        if poly_deg(&poly_gcd(&diff, f, field)) != 0 {
            return false;
        }
    }
    true
}

/// Multiplicative order of an irreducible polynomial: the order of `x` in
/// the residue field, found by stripping primes from `q^deg - 1`.
pub fn poly_order(f: &Poly, field: &FiniteField) -> u64 {
    let n = poly_deg(f) as u32;
    let group = field.q().pow(n) - 1;
    let x = vec![0u8, 1];
    let mut e = group;
    let mut rest = group;
    let mut l = 2u64;
    let mut primes = Vec::new();
    while l * l <= rest {
        if rest % l == 0 {
            primes.push(l);
            while rest % l == 0 {
                rest /= l;
            }
        }
        l += 1;
    }
    if rest > 1 {
        primes.push(rest);
    }
    for l in primes {
        while e % l == 0 && poly_pow_mod(&x, e / l, f, field) == vec![1u8] {
            e /= l;
        }
    }
    e
}

pub fn is_p_power(mut n: u64, p: u64) -> bool {
    while n % p == 0 {
        n /= p;
    }
    n == 1
}

/// One classified monic polynomial with nonzero constant term.
#[derive(Clone, Debug, Serialize)]
pub struct PolyRecord {
    pub coeffs: Vec<u8>,
    pub irreducible: bool,
    pub self_reciprocal: bool,
    /// Multiplicative order, computed for irreducible entries.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<u64>,
}

/// Exhaustive classified catalogue of monic polynomials with nonzero
/// constant term, by degree.
pub struct PolyCatalogue {
    field: FiniteField,
    max_deg: u32,
    by_degree: Vec<Vec<PolyRecord>>,
}

const CATALOGUE_POLY_CAP: u64 = 20_000_000;

impl PolyCatalogue {
    pub fn new(field: FiniteField, max_deg: u32) -> Result<PolyCatalogue> {
        let q = field.q();
        if max_deg > 10 || q.pow(max_deg) > CATALOGUE_POLY_CAP {
            return Err(Error::ScaleCap(format!(
                "catalogue of degree {max_deg} over F_{q}"
            )));
        }
        let mut by_degree: Vec<Vec<PolyRecord>> = vec![Vec::new()];
        let mut irreducibles: Vec<Vec<Poly>> = vec![Vec::new()];
        for deg in 1..=max_deg {
            let mut records = Vec::new();
            let mut irr_here = Vec::new();
            let free = q.pow(deg - 1);
            for c0 in 1..q {
                for rest in 0..free {
                    let mut coeffs = Vec::with_capacity(deg as usize + 1);
                    coeffs.push(c0 as u8);
                    let mut code = rest;
                    for _ in 1..deg {
                        coeffs.push((code % q) as u8);
                        code /= q;
                    }
                    coeffs.push(1);
                    // trial division by lower-degree irreducibles
                    let irreducible = deg == 1
                        || (1..=deg / 2).all(|d| {
                            irreducibles[d as usize]
                                .iter()
                                .all(|g| !poly_divides(g, &coeffs, &field))
                        });
                    let order = irreducible.then(|| poly_order(&coeffs, &field));
                    if irreducible {
                        irr_here.push(coeffs.clone());
                    }
                    records.push(PolyRecord {
                        self_reciprocal: is_palindromic(&coeffs),
                        irreducible,
                        coeffs,
                        order,
                    });
                }
            }
            by_degree.push(records);
            irreducibles.push(irr_here);
        }
        Ok(PolyCatalogue {
            field,
            max_deg,
            by_degree,
        })
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn max_deg(&self) -> u32 {
        self.max_deg
    }

    pub fn records(&self, deg: u32) -> &[PolyRecord] {
        &self.by_degree[deg as usize]
    }

    /// Count of irreducible monic polynomials of the given degree (the
    /// nonzero-constant restriction is built into the enumeration).
    pub fn im_count(&self, deg: u32) -> u64 {
        self.records(deg).iter().filter(|r| r.irreducible).count() as u64
    }

    /// Count of self-reciprocal irreducibles of degree `2d`.
    pub fn srim_minus_count(&self, d: u32) -> u64 {
        self.records(2 * d)
            .iter()
            .filter(|r| r.irreducible && r.self_reciprocal)
            .count() as u64
    }

    /// Count of involution-swapped pairs of irreducibles of degree `d`.
    pub fn srim_plus_count(&self, d: u32) -> u64 {
        let moved = self
            .records(d)
            .iter()
            .filter(|r| r.irreducible && involution(&r.coeffs, &self.field) != r.coeffs)
            .count() as u64;
        assert!(moved % 2 == 0);
        moved / 2
    }

    pub fn im_p_count(&self, deg: u32, p: u64) -> u64 {
        self.records(deg)
            .iter()
            .filter(|r| r.irreducible && is_p_power(r.order.unwrap(), p))
            .count() as u64
    }

    pub fn srim_minus_p_count(&self, d: u32, p: u64) -> u64 {
        self.records(2 * d)
            .iter()
            .filter(|r| r.irreducible && r.self_reciprocal && is_p_power(r.order.unwrap(), p))
            .count() as u64
    }

    pub fn srim_plus_p_count(&self, d: u32, p: u64) -> u64 {
        let moved = self
            .records(d)
            .iter()
            .filter(|r| {
                r.irreducible
                    && is_p_power(r.order.unwrap(), p)
                    && involution(&r.coeffs, &self.field) != r.coeffs
            })
            .count() as u64;
        assert!(moved % 2 == 0);
        moved / 2
    }

    /// Irreducible monic polynomials of the given degree.
    pub fn irreducibles(&self, deg: u32) -> impl Iterator<Item = &Poly> {
        self.records(deg)
            .iter()
            .filter(|r| r.irreducible)
            .map(|r| &r.coeffs)
    }

    /// Factor a monic polynomial with nonzero constant term into
    /// irreducibles with multiplicities, by trial division.
    pub fn factor(&self, f: &Poly) -> Vec<(Poly, u32)> {
        let mut rest = f.clone();
        let mut out: Vec<(Poly, u32)> = Vec::new();
        let mut d = 1;
        while poly_deg(&rest) > 0 {
            assert!(d <= self.max_deg, "factor degree beyond catalogue");
            for g in self.irreducibles(d) {
                let mut mult = 0;
                while poly_divides(g, &rest, &self.field) {
                    rest = poly_quotient(&rest, g, &self.field);
                    mult += 1;
                }
                if mult > 0 {
                    out.push((g.clone(), mult));
                }
            }
            d += 1;
        }
        out
    }

    /// JSON-lines dump of one degree layer, for goldens and debugging.
    pub fn dump_degree(&self, deg: u32) -> String {
        let mut out = String::new();
        for r in self.records(deg) {
            out.push_str(&serde_json::to_string(r).expect("record serializes"));
            out.push('\n');
        }
        out
    }
}

fn poly_quotient(f: &Poly, d: &Poly, field: &FiniteField) -> Poly {
    // long division, exact
    let mut rem = f.clone();
    let dd = poly_deg(d);
    let mut quot = vec![0u8; f.len() - dd];
    let lead_inv = field.inv(d[dd]);
    for k in (0..quot.len()).rev() {
        let idx = k + dd;
        let factor = field.mul(rem[idx], lead_inv);
        quot[k] = factor;
        if factor != 0 {
            for (i, &c) in d.iter().enumerate() {
                rem[k + i] = field.sub(rem[k + i], field.mul(factor, c));
            }
        }
    }
    debug_assert!(poly_is_zero(&rem));
    poly_trim(quot)
}

/// Direct count of self-reciprocal irreducible monic polynomials of
/// degree `2d`, by enumerating the `q^d` palindromic candidates and
/// testing irreducibility. Reaches degrees beyond the full catalogue cap.
pub fn srim_minus_count_direct(field: &FiniteField, d: u32) -> u64 {
    let q = field.q();
    let free = q.pow(d);
    let mut count = 0u64;
    // small irreducibles for cheap rejection before the full test
    let mut small: Vec<Poly> = Vec::new();
    for deg in 2..=3u32.min(2 * d - 1) {
        for code in 0..q.pow(deg) {
            let mut f = Vec::with_capacity(deg as usize + 1);
            let mut c = code;
            for _ in 0..deg {
                f.push((c % q) as u8);
                c /= q;
            }
            f.push(1);
            if f[0] != 0 && is_irreducible(&f, field) {
                small.push(f);
            }
        }
    }
    for code in 0..free {
        // palindromic monic: a_0 = a_2d = 1, a_i = a_{2d-i}, free a_1..a_d
        let mut f = vec![0u8; 2 * d as usize + 1];
        f[0] = 1;
        f[2 * d as usize] = 1;
        let mut c = code;
        for i in 1..=d as usize {
            let digit = (c % q) as u8;
            c /= q;
            f[i] = digit;
            f[2 * d as usize - i] = digit;
        }
        if (0..q as u8).any(|x| poly_eval(&f, x, field) == 0) {
            continue;
        }
        if small.iter().any(|g| poly_divides(g, &f, field)) {
            continue;
        }
        if is_irreducible(&f, field) {
            count += 1;
        }
    }
    count
}

/// Direct pair count at degree `d`: swapped pairs of irreducibles, from a
/// scan of all monic degree-`d` polynomials with nonzero constant term.
pub fn srim_plus_count_direct(field: &FiniteField, d: u32) -> u64 {
    let q = field.q();
    let mut irr = 0u64;
    let mut fixed = 0u64;
    for c0 in 1..q {
        for code in 0..q.pow(d - 1) {
            let mut f = Vec::with_capacity(d as usize + 1);
            f.push(c0 as u8);
            let mut c = code;
            for _ in 1..d {
                f.push((c % q) as u8);
                c /= q;
            }
            f.push(1);
            if !is_irreducible(&f, field) {
                continue;
            }
            irr += 1;
            if involution(&f, field) == f {
                fixed += 1;
            }
        }
    }
    assert!((irr - fixed) % 2 == 0);
    (irr - fixed) / 2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::{eval_count, im_poly, srim_minus_poly, srim_plus_poly, Parity};

    #[test]
    fn polynomial_arithmetic() {
        let f = FiniteField::new(3).unwrap();
        let a = vec![1, 1]; // x + 1
        let b = vec![2, 1]; // x + 2
        assert_eq!(poly_mul(&a, &b, &f), vec![2, 0, 1]); // x^2 + 2
        let prod = poly_mul(&a, &b, &f);
        assert!(poly_divides(&a, &prod, &f));
        assert!(!poly_divides(&vec![0, 1], &prod, &f));
        assert_eq!(poly_gcd(&prod, &a, &f), a);
    }

    #[test]
    fn irreducibility_examples() {
        let f2 = FiniteField::new(2).unwrap();
        assert!(is_irreducible(&vec![1, 1, 1], &f2)); // x^2+x+1
        assert!(!is_irreducible(&vec![1, 0, 1], &f2)); // (x+1)^2
        assert!(is_irreducible(&vec![1, 1, 0, 0, 1], &f2)); // x^4+x+1
        assert!(!is_irreducible(&vec![1, 1, 1, 1, 1, 1, 1, 1, 1], &f2)); // Phi_9 = (deg 6)(deg 2)? no: composite
        let f3 = FiniteField::new(3).unwrap();
        assert!(is_irreducible(&vec![1, 0, 1], &f3)); // x^2+1
    }

    #[test]
    fn orders() {
        let f3 = FiniteField::new(3).unwrap();
        // x^2 + 1 divides x^4 - 1: order 4
        assert_eq!(poly_order(&vec![1, 0, 1], &f3), 4);
        // x - 1 has order 1
        assert_eq!(poly_order(&vec![2, 1], &f3), 1);
        let f2 = FiniteField::new(2).unwrap();
        // x^2 + x + 1 has order 3
        assert_eq!(poly_order(&vec![1, 1, 1], &f2), 3);
    }

    #[test]
    fn catalogue_counts_match_formulas() {
        for q in [2u64, 3, 4] {
            let field = FiniteField::new(q).unwrap();
            let cat = PolyCatalogue::new(field, 6).unwrap();
            let parity = Parity::of(q);
            for d in 1..=6u32 {
                assert_eq!(cat.im_count(d), eval_count(&im_poly(d), q), "IM d={d} q={q}");
                assert_eq!(
                    cat.srim_plus_count(d),
                    eval_count(&srim_plus_poly(d, parity), q),
                    "SRIM+ d={d} q={q}"
                );
            }
            for d in 1..=3u32 {
                assert_eq!(
                    cat.srim_minus_count(d),
                    eval_count(&srim_minus_poly(d, parity), q),
                    "SRIM- d={d} q={q}"
                );
            }
        }
    }

    #[test]
    fn direct_srim_enumeration_matches() {
        for q in [2u64, 3] {
            let field = FiniteField::new(q).unwrap();
            let parity = Parity::of(q);
            for d in 1..=5u32 {
                assert_eq!(
                    srim_minus_count_direct(&field, d),
                    eval_count(&srim_minus_poly(d, parity), q),
                    "q={q} d={d}"
                );
            }
        }
    }

    #[test]
    fn p_power_order_catalogue() {
        let field = FiniteField::new(3).unwrap();
        let cat = PolyCatalogue::new(field, 4).unwrap();
        // x^2 + 1 is the unique self-reciprocal irreducible 2-power order
        // polynomial of degree >= 2 over F_3.
        assert_eq!(cat.srim_minus_p_count(1, 2), 1);
        assert_eq!(cat.srim_minus_p_count(2, 2), 0);
        let two_power: Vec<&Poly> = cat
            .records(2)
            .iter()
            .filter(|r| r.irreducible && r.self_reciprocal && is_p_power(r.order.unwrap(), 2))
            .map(|r| &r.coeffs)
            .collect();
        assert_eq!(two_power, vec![&vec![1, 0, 1]]);
    }

    #[test]
    fn degree_one_involution_fixed_points() {
        let field = FiniteField::new(5).unwrap();
        let cat = PolyCatalogue::new(field, 2).unwrap();
        let fixed: Vec<Poly> = cat
            .records(1)
            .iter()
            .filter(|r| involution(&r.coeffs, cat.field()) == r.coeffs)
            .map(|r| r.coeffs.clone())
            .collect();
        // x - 1 = x + 4 and x + 1
        assert_eq!(fixed, vec![vec![1, 1], vec![4, 1]]);
    }

    #[test]
    fn im3_over_f2() {
        let field = FiniteField::new(2).unwrap();
        let cat = PolyCatalogue::new(field, 3).unwrap();
        let irr: Vec<&Poly> = cat.irreducibles(3).collect();
        assert_eq!(irr, vec![&vec![1, 1, 0, 1], &vec![1, 0, 1, 1]]);
    }

    #[test]
    fn factorization_roundtrip() {
        let field = FiniteField::new(3).unwrap();
        let cat = PolyCatalogue::new(field, 6).unwrap();
        // (x^2+1)^2 (x+1)
        let f = poly_mul(
            &poly_mul(&vec![1, 0, 1], &vec![1, 0, 1], cat.field()),
            &vec![1, 1],
            cat.field(),
        );
        let factors = cat.factor(&f);
        let mut total = vec![1u8];
        for (g, m) in &factors {
            for _ in 0..*m {
                total = poly_mul(&total, g, cat.field());
            }
        }
        assert_eq!(total, f);
        assert_eq!(factors.len(), 2);
    }
}
