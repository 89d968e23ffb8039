use super::{rat, BigRat, Coeff, QPoly};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use std::fmt;

/// Power series in `x` truncated at a fixed order `N`: terms of degree
/// `> N` are unknown, never assumed zero, and every stored coefficient is
/// exact. The coefficient type selects the mode: `TruncSeries<QPoly>` is
/// symbolic in `q`, `TruncSeries<BigRat>` has `q` specialized.
#[derive(Clone, PartialEq, Debug)]
pub struct TruncSeries<C: Coeff> {
    coeffs: Vec<C>,
}

impl<C: Coeff> TruncSeries<C> {
    pub fn zero(order: usize) -> Self {
        TruncSeries {
            coeffs: vec![C::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(C::one(), order)
    }

    pub fn constant(c: C, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// `c * x^k`, zero if `k` exceeds the order.
    pub fn monomial(c: C, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// Construct from coefficients `c_0..c_N`.
    pub fn from_coeffs(coeffs: Vec<C>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least the constant term");
        TruncSeries { coeffs }
    }

    /// `1 - c * x^k`.
    pub fn one_minus(c: &C, k: usize, order: usize) -> Self {
        let mut s = Self::one(order);
        if k <= order && k > 0 {
            s.coeffs[k] = c.neg();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &C {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0] == C::one() && self.coeffs[1..].iter().all(C::is_zero)
    }

    fn check_order(&self, rhs: &Self, op: &str) {
        assert_eq!(
            self.order(),
            rhs.order(),
            "truncation order mismatch in series {op}"
        );
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.check_order(rhs, "add");
        TruncSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.check_order(rhs, "sub");
        TruncSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(C::neg).collect(),
        }
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, rhs: &Self) -> Self {
        self.check_order(rhs, "mul");
        let n = self.order();
        let mut out = vec![C::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n + 1 - i).enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        TruncSeries { coeffs: out }
    }

    /// Multiply every coefficient by a constant.
    pub fn scale(&self, c: &C) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect(),
        }
    }

    /// Substitute `x -> c*x`: the n-th coefficient picks up `c^n`.
    pub fn scale_x(&self, c: &C) -> Self {
        let mut power = C::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for (n, a) in self.coeffs.iter().enumerate() {
            if n > 0 {
                power = power.mul(c);
            }
            out.push(a.mul(&power));
        }
        TruncSeries { coeffs: out }
    }

    /// Multiplicative inverse; the constant term must be a unit.
    pub fn inv(&self) -> Result<Self> {
        let c0 = self.coeffs[0]
            .try_invert()
            .ok_or(Error::NonInvertibleConstant)?;
        let n = self.order();
        let mut out = vec![C::zero(); n + 1];
        out[0] = c0.clone();
        for k in 1..=n {
            let mut acc = C::zero();
            for j in 1..=k {
                if self.coeffs[j].is_zero() {
                    continue;
                }
                acc = acc.add(&self.coeffs[j].mul(&out[k - j]));
            }
            out[k] = acc.mul(&c0).neg();
        }
        Ok(TruncSeries { coeffs: out })
    }

    /// Integer power by repeated squaring; negative exponents invert first.
    pub fn pow(&self, e: i64) -> Result<Self> {
        let (mut base, mut e) = if e < 0 {
            (self.inv()?, e.unsigned_abs())
        } else {
            (self.clone(), e as u64)
        };
        let mut acc = Self::one(self.order());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        Ok(acc)
    }

    /// Formal exponential; requires a zero constant term.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::ExpNeedsZeroConstant);
        }
        let n = self.order();
        let mut out = vec![C::zero(); n + 1];
        out[0] = C::one();
        for k in 1..=n {
            let mut acc = C::zero();
            for j in 1..=k {
                if self.coeffs[j].is_zero() {
                    continue;
                }
                let term = self.coeffs[j].scale_rat(&rat(j as i64));
                acc = acc.add(&term.mul(&out[k - j]));
            }
            out[k] = acc.scale_rat(&BigRat::new(BigInt::from(1), BigInt::from(k)));
        }
        Ok(TruncSeries { coeffs: out })
    }

    /// Formal logarithm; requires constant term 1.
    pub fn log(&self) -> Result<Self> {
        if self.coeffs[0] != C::one() {
            return Err(Error::LogNeedsUnitConstant);
        }
        let n = self.order();
        let mut out = vec![C::zero(); n + 1];
        for k in 1..=n {
            let mut acc = self.coeffs[k].scale_rat(&rat(k as i64));
            for j in 1..k {
                if out[j].is_zero() || self.coeffs[k - j].is_zero() {
                    continue;
                }
                let term = out[j].scale_rat(&rat(j as i64));
                acc = acc.sub(&term.mul(&self.coeffs[k - j]));
            }
            out[k] = acc.scale_rat(&BigRat::new(BigInt::from(1), BigInt::from(k)));
        }
        Ok(TruncSeries { coeffs: out })
    }

    /// `self^e` for a coefficient-valued exponent, via `exp(e*log(self))`;
    /// requires constant term 1.
    pub fn pow_coeff(&self, e: &C) -> Result<Self> {
        self.log()?.scale(e).exp()
    }
}

impl TruncSeries<QPoly> {
    /// Specialize `q` to a rational value, leaving a numeric series.
    pub fn eval_q(&self, q: &BigRat) -> TruncSeries<BigRat> {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|p| p.eval(q)).collect(),
        }
    }

    pub fn eval_q_u64(&self, q: u64) -> TruncSeries<BigRat> {
        self.eval_q(&super::rat_int(BigInt::from(q)))
    }

    /// Substitute `q -> q^d` in every coefficient.
    pub fn subst_q_pow(&self, d: u32) -> TruncSeries<QPoly> {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|p| p.subst_q_pow(d)).collect(),
        }
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(QPoly::is_integral)
    }
}

impl TruncSeries<BigRat> {
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(BigRat::is_integer)
    }

    /// Coefficients as integers; panics if any coefficient is non-integral.
    pub fn integer_coeffs(&self) -> Vec<BigInt> {
        self.coeffs.iter().map(super::to_integer).collect()
    }
}

impl<C: Coeff> fmt::Display for TruncSeries<C> {
    /// `c0 + c1*x + ... + O(x^{N+1})`, compound coefficients parenthesized.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() && !(n == 0 && self.coeffs.iter().all(C::is_zero)) {
                continue;
            }
            if wrote {
                write!(f, " + ")?;
            }
            wrote = true;
            let text = c.to_string();
            let compound = text.contains(' ') || (n > 0 && text.starts_with('-'));
            match (n, compound) {
                (0, _) => write!(f, "{text}")?,
                (_, true) => write!(f, "({text})*")?,
                (_, false) if text == "1" => {}
                (_, false) => write!(f, "{text}*")?,
            }
            if n == 1 {
                write!(f, "x")?;
            } else if n > 1 {
                write!(f, "x^{n}")?;
            }
        }
        write!(f, " + O(x^{})", self.order() + 1)
    }
}
