//! Exact arithmetic substrate: big rationals, dense polynomials in `q`,
//! and truncated formal power series in `x`.
//!
//! Every value is immutable after construction and all operations are pure,
//! so values can be shared or sent across threads freely. There is no
//! floating point anywhere in this crate.

mod poly;
mod series;

pub use poly::QPoly;
pub use series::TruncSeries;

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator (num-rational maintains both invariants).
pub type BigRat = num_rational::BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> BigRat {
    BigRat::from_integer(BigInt::from(n))
}

/// Rational `n/d`.
pub fn ratio(n: i64, d: i64) -> BigRat {
    BigRat::new(BigInt::from(n), BigInt::from(d))
}

/// Rational from a big integer.
pub fn rat_int(n: BigInt) -> BigRat {
    BigRat::from_integer(n)
}

/// Coefficient ring of a truncated series: either [`BigRat`] (numeric mode,
/// `q` specialized) or [`QPoly`] (symbolic mode). The two modes are distinct
/// types, so mixed-mode arithmetic is rejected at compile time.
pub trait Coeff: Clone + PartialEq + std::fmt::Debug + std::fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Embed a rational constant.
    fn from_rat(r: &BigRat) -> Self;
    /// Exact multiplication by a rational scalar.
    fn scale_rat(&self, r: &BigRat) -> Self;
    /// Multiplicative inverse, if the element is a unit.
    fn try_invert(&self) -> Option<Self>;
}

impl Coeff for BigRat {
    fn zero() -> Self {
        <BigRat as Zero>::zero()
    }
    fn one() -> Self {
        <BigRat as One>::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_rat(r: &BigRat) -> Self {
        r.clone()
    }
    fn scale_rat(&self, r: &BigRat) -> Self {
        self * r
    }
    fn try_invert(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

/// Generalized multinomial coefficient over any coefficient ring.
///
/// For nonnegative indices this is the falling-factorial product
/// `m(m-1)...(m+1-sum k) / (k_1! ... k_s!)`; a list of nonpositive indices
/// flips the sign by `(-1)^(sum |k|)` and uses the absolute values. Mixed
/// signs are undefined and rejected. Zero indices are neutral.
pub fn multinomial<C: Coeff>(m: &C, ks: &[i64]) -> Result<C> {
    if ks.is_empty() {
        return Err(Error::EmptyMultinomial);
    }
    let any_pos = ks.iter().any(|&k| k > 0);
    let any_neg = ks.iter().any(|&k| k < 0);
    if any_pos && any_neg {
        return Err(Error::MixedSignMultinomial(ks.to_vec()));
    }
    let mags: Vec<u64> = ks.iter().map(|&k| k.unsigned_abs()).collect();
    let total: u64 = mags.iter().sum();
    let mut num = C::one();
    for i in 0..total {
        let shifted = m.sub(&C::from_rat(&rat(i as i64)));
        num = num.mul(&shifted);
    }
    let mut denom = BigInt::one();
    for &k in &mags {
        for j in 2..=k {
            denom *= BigInt::from(j);
        }
    }
    let mut out = num.scale_rat(&BigRat::new(BigInt::one(), denom));
    if any_neg && total % 2 == 1 {
        out = out.neg();
    }
    Ok(out)
}

/// [`multinomial`] specialized to polynomials in `q`.
pub fn poly_multinomial(m: &QPoly, ks: &[i64]) -> Result<QPoly> {
    multinomial(m, ks)
}

/// Exact integer n! as a rational.
pub fn factorial_rat(n: u64) -> BigRat {
    let mut f = BigInt::one();
    for j in 2..=n {
        f *= BigInt::from(j);
    }
    rat_int(f)
}

/// True if the rational is an integer (denominator 1).
pub fn is_integer(r: &BigRat) -> bool {
    r.is_integer()
}

/// Integer part of a rational known to be integral.
pub fn to_integer(r: &BigRat) -> BigInt {
    debug_assert!(r.is_integer(), "expected integer, got {r}");
    r.to_integer()
}

/// Render a rational canonically: `n` or `n/d`.
pub fn rat_to_string(r: &BigRat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// abs of a rational, handy for display code.
pub fn rat_abs(r: &BigRat) -> BigRat {
    r.abs()
}
