use super::{rat, rat_abs, rat_int, rat_to_string, BigRat, Coeff};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::str::FromStr;

/// Dense polynomial in the indeterminate `q` with exact rational
/// coefficients, stored by ascending power with trailing zeros trimmed.
/// Two equal polynomials always have identical representations; the zero
/// polynomial is the empty coefficient vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QPoly {
    coeffs: Vec<BigRat>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPoly::constant(rat(1))
    }

    /// The polynomial `q`.
    pub fn q() -> Self {
        QPoly::from_coeffs(vec![rat(0), rat(1)])
    }

    pub fn constant(c: BigRat) -> Self {
        QPoly::from_coeffs(vec![c])
    }

    pub fn from_int(n: i64) -> Self {
        QPoly::constant(rat(n))
    }

    /// `c * q^deg`.
    pub fn monomial(c: BigRat, deg: usize) -> Self {
        let mut coeffs = vec![rat(0); deg + 1];
        coeffs[deg] = c;
        QPoly::from_coeffs(coeffs)
    }

    /// Build from ascending coefficients, trimming to canonical form.
    pub fn from_coeffs(coeffs: Vec<BigRat>) -> Self {
        let mut p = QPoly { coeffs };
        p.trim();
        p
    }

    /// Integer coefficients ascending, mostly for tests.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        QPoly::from_coeffs(coeffs.iter().map(|&c| rat(c)).collect())
    }

    fn trim(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if Zero::is_zero(c)) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, deg: usize) -> BigRat {
        self.coeffs.get(deg).cloned().unwrap_or_else(|| rat(0))
    }

    pub fn coeffs(&self) -> &[BigRat] {
        &self.coeffs
    }

    /// Constant term if the polynomial is constant.
    pub fn as_constant(&self) -> Option<BigRat> {
        match self.coeffs.len() {
            0 => Some(rat(0)),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn add(&self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(&self.coeff(i) + &rhs.coeff(i));
        }
        QPoly::from_coeffs(out)
    }

    pub fn sub(&self, rhs: &QPoly) -> QPoly {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![rat(0); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if Zero::is_zero(a) {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly::from_coeffs(out)
    }

    pub fn scale(&self, r: &BigRat) -> QPoly {
        QPoly::from_coeffs(self.coeffs.iter().map(|c| c * r).collect())
    }

    pub fn pow(&self, e: u32) -> QPoly {
        let mut acc = QPoly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Substitute `q -> q^d`.
    pub fn subst_q_pow(&self, d: u32) -> QPoly {
        if self.is_zero() || d == 1 {
            return self.clone();
        }
        let mut out = vec![rat(0); (self.coeffs.len() - 1) * d as usize + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i * d as usize] = c.clone();
        }
        QPoly::from_coeffs(out)
    }

    pub fn eval(&self, x: &BigRat) -> BigRat {
        let mut acc = rat(0);
        for c in self.coeffs.iter().rev() {
            acc = &acc * x + c;
        }
        acc
    }

    pub fn eval_int(&self, x: &BigInt) -> BigRat {
        self.eval(&rat_int(x.clone()))
    }

    pub fn eval_u64(&self, x: u64) -> BigRat {
        self.eval_int(&BigInt::from(x))
    }

    /// True if every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }
}

impl Coeff for QPoly {
    fn zero() -> Self {
        QPoly::zero()
    }
    fn one() -> Self {
        QPoly::one()
    }
    fn is_zero(&self) -> bool {
        QPoly::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        QPoly::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        QPoly::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        QPoly::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        QPoly::neg(self)
    }
    fn from_rat(r: &BigRat) -> Self {
        QPoly::constant(r.clone())
    }
    fn scale_rat(&self, r: &BigRat) -> Self {
        self.scale(r)
    }
    /// Units of the polynomial ring are the nonzero constants.
    fn try_invert(&self) -> Option<Self> {
        let c = self.as_constant()?;
        if Zero::is_zero(&c) {
            None
        } else {
            Some(QPoly::constant(c.recip()))
        }
    }
}

impl fmt::Display for QPoly {
    /// Canonical rendering: terms in descending degree, e.g. `3*q^2 + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for deg in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[deg];
            if Zero::is_zero(c) {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = rat_abs(c);
            let unit = mag.is_one();
            if deg == 0 {
                write!(f, "{}", rat_to_string(&mag))?;
            } else {
                if !unit {
                    write!(f, "{}*", rat_to_string(&mag))?;
                }
                if deg == 1 {
                    write!(f, "q")?;
                } else {
                    write!(f, "q^{deg}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for QPoly {
    type Err = Error;

    /// Parse the canonical rendering produced by `Display`.
    fn from_str(s: &str) -> Result<QPoly> {
        let text = s.trim();
        if text.is_empty() {
            return Err(Error::PolyParse(s.to_string()));
        }
        if text == "0" {
            return Ok(QPoly::zero());
        }
        let err = || Error::PolyParse(s.to_string());
        let mut acc = QPoly::zero();
        // Split into signed terms on " + " / " - ", honoring a leading sign.
        let mut rest = text;
        let mut sign = 1i64;
        if let Some(r) = rest.strip_prefix('-') {
            sign = -1;
            rest = r.trim_start();
        }
        loop {
            let (term, next) = match (rest.find(" + "), rest.find(" - ")) {
                (Some(p), Some(m)) if p < m => (&rest[..p], Some((1, &rest[p + 3..]))),
                (Some(_), Some(m)) => (&rest[..m], Some((-1, &rest[m + 3..]))),
                (Some(p), None) => (&rest[..p], Some((1, &rest[p + 3..]))),
                (None, Some(m)) => (&rest[..m], Some((-1, &rest[m + 3..]))),
                (None, None) => (rest, None),
            };
            acc = acc.add(&parse_term(term.trim(), sign).ok_or_else(err)?);
            match next {
                Some((s, r)) => {
                    sign = s;
                    rest = r;
                }
                None => break,
            }
        }
        Ok(acc)
    }
}

fn parse_term(term: &str, sign: i64) -> Option<QPoly> {
    let (coeff_text, deg) = if let Some(idx) = term.find('q') {
        let deg = match term[idx + 1..].strip_prefix('^') {
            Some(e) => e.parse::<usize>().ok()?,
            None if term[idx + 1..].is_empty() => 1,
            None => return None,
        };
        let head = term[..idx].trim_end_matches('*').trim();
        (head, deg)
    } else {
        (term, 0)
    };
    let mag = if coeff_text.is_empty() {
        rat(1)
    } else if let Some((n, d)) = coeff_text.split_once('/') {
        BigRat::new(n.trim().parse().ok()?, d.trim().parse().ok()?)
    } else {
        BigRat::from_integer(coeff_text.parse().ok()?)
    };
    Some(QPoly::monomial(&mag * rat(sign), deg))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly_multinomial;

    #[test]
    fn canonical_trim() {
        let p = QPoly::from_coeffs(vec![rat(1), rat(0), rat(0)]);
        assert_eq!(p.degree(), Some(0));
        assert_eq!(QPoly::zero().degree(), None);
        assert_eq!(QPoly::from_ints(&[0]), QPoly::zero());
    }

    #[test]
    fn display_roundtrip_examples() {
        let cases = [
            QPoly::from_ints(&[1, 0, 3]),
            QPoly::from_ints(&[0, -1, 1]),
            QPoly::from_ints(&[-2]),
            QPoly::zero(),
            QPoly::from_coeffs(vec![rat(0), super::super::ratio(-1, 2), super::super::ratio(1, 2)]),
        ];
        assert_eq!(cases[0].to_string(), "3*q^2 + 1");
        assert_eq!(cases[1].to_string(), "q^2 - q");
        assert_eq!(cases[4].to_string(), "1/2*q^2 - 1/2*q");
        for p in &cases {
            let back: QPoly = p.to_string().parse().unwrap();
            assert_eq!(&back, p);
            assert_eq!(back.to_string(), p.to_string());
        }
    }

    #[test]
    fn multinomial_single_choice() {
        // binom(q; 1) = q
        let m = QPoly::q();
        assert_eq!(poly_multinomial(&m, &[1]).unwrap(), QPoly::q());
    }

    #[test]
    fn multinomial_negative_index() {
        // binom(q-1; -2) = (q-1)(q-2)/2
        let m = QPoly::from_ints(&[-1, 1]);
        let got = poly_multinomial(&m, &[-2]).unwrap();
        let want = QPoly::from_ints(&[-1, 1])
            .mul(&QPoly::from_ints(&[-2, 1]))
            .scale(&super::super::ratio(1, 2));
        assert_eq!(got, want);
    }

    #[test]
    fn multinomial_double_negation_clause() {
        // binom(-(q-1); -3) = binom(q+1, 3) = (q+1)q(q-1)/6
        let m = QPoly::from_ints(&[1, -1]);
        let got = poly_multinomial(&m, &[-3]).unwrap();
        let want = QPoly::from_ints(&[1, 1])
            .mul(&QPoly::q())
            .mul(&QPoly::from_ints(&[-1, 1]))
            .scale(&super::super::ratio(1, 6));
        assert_eq!(got, want);
    }

    #[test]
    fn multinomial_errors() {
        assert!(poly_multinomial(&QPoly::q(), &[]).is_err());
        assert!(poly_multinomial(&QPoly::q(), &[2, -1]).is_err());
    }

    #[test]
    fn multinomial_zero_index_is_neutral() {
        let m = QPoly::from_ints(&[5, 2]);
        assert_eq!(
            poly_multinomial(&m, &[0, 2]).unwrap(),
            poly_multinomial(&m, &[2]).unwrap()
        );
        assert_eq!(poly_multinomial(&m, &[0]).unwrap(), QPoly::one());
    }

    #[test]
    fn subst_and_eval() {
        let p = QPoly::from_ints(&[1, 0, 3]); // 3q^2+1
        assert_eq!(p.subst_q_pow(2), QPoly::from_ints(&[1, 0, 0, 0, 3]));
        assert_eq!(p.eval_u64(2), rat(13));
    }
}
