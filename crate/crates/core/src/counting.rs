//! Counting sequences for irreducible monic polynomials over finite fields:
//! plain counts, self-reciprocal and self-dual variants, and the p-power
//! order refinements, together with the elementary arithmetic functions
//! they are built from.

use crate::algebra::{rat_int, ratio, BigRat, QPoly};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::One;

/// Parity of the field size `q`, the pervasive case split in the
/// self-reciprocal counting formulas.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Parity {
    Odd,
    Even,
}

impl Parity {
    pub fn of(q: u64) -> Parity {
        if q % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// Validated parameters for p-power order counting: a prime `p` and a
/// prime power `q` with `p` not dividing `q`. The field size is kept as a
/// big integer because the recurrences substitute `q -> q^d`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PrimaryParams {
    p: u64,
    q: BigInt,
}

impl PrimaryParams {
    pub fn new(p: u64, q: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if is_prime_power(q).is_none() {
            return Err(Error::NotPrimePower(q));
        }
        if q % p == 0 {
            return Err(Error::PrimeDividesFieldSize { p, q });
        }
        Ok(PrimaryParams {
            p,
            q: BigInt::from(q),
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    pub fn q_u64(&self) -> u64 {
        u64::try_from(&self.q).expect("field size exceeds u64")
    }

    /// Same parameters with `q` replaced by `q^d` (still a prime power
    /// prime to `p`).
    pub fn q_power(&self, d: u32) -> PrimaryParams {
        PrimaryParams {
            p: self.p,
            q: self.q.pow(d),
        }
    }

    /// `q` reduced modulo `m`.
    pub fn q_mod(&self, m: u64) -> u64 {
        u64::try_from(num_integer::Integer::mod_floor(&self.q, &BigInt::from(m)))
            .expect("residue fits")
    }

    /// Multiplicative order of `q` modulo `m`.
    pub fn ord_mod(&self, m: u64) -> u64 {
        mult_order(self.q_mod(m), m)
    }

    /// p-part of `q^n + sign` as a u64.
    pub fn p_part_qn(&self, n: u32, sign: i64) -> u64 {
        let v = self.q.pow(n) + BigInt::from(sign);
        p_part_big(&v, self.p)
    }

    /// p-part of `q^n + sign` as a big integer exponentiated by `e`.
    pub fn p_part_qn_pow(&self, n: u32, sign: i64, e: u32) -> BigInt {
        BigInt::from(self.p_part_qn(n, sign)).pow(e)
    }

    /// The p-class invariant: prime powers with equal invariants have
    /// identical p-power order counting sequences.
    pub fn p_class_invariant(&self) -> (u64, u32) {
        if self.p == 2 {
            (self.q_mod(8), padic_val_big(&(self.q.pow(2) - 1), 2))
        } else {
            let e = self.ord_mod(self.p);
            let v = padic_val_big(&(self.q.pow(e as u32) - 1), self.p);
            (e, v)
        }
    }
}

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

/// Decompose a prime power as `(p, k)`.
pub fn is_prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = q;
    let mut d = 2;
    while d * d <= q {
        if q % d == 0 {
            p = d;
            break;
        }
        d += 1;
    }
    let mut rest = q;
    let mut k = 0;
    while rest > 1 {
        if rest % p != 0 {
            return None;
        }
        rest /= p;
        k += 1;
    }
    Some((p, k))
}

pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1);
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

fn factorize(n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut rest = n;
    let mut d = 2;
    while d * d <= rest {
        if rest % d == 0 {
            let mut e = 0;
            while rest % d == 0 {
                rest /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if rest > 1 {
        out.push((rest, 1));
    }
    out
}

pub fn moebius(n: u64) -> Result<i64> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    let mut mu = 1i64;
    for (_, e) in factorize(n) {
        if e > 1 {
            return Ok(0);
        }
        mu = -mu;
    }
    Ok(mu)
}

pub fn euler_phi(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    let mut phi = n;
    for (p, _) in factorize(n) {
        phi = phi / p * (p - 1);
    }
    Ok(phi)
}

pub fn padic_val(n: u64, p: u64) -> u32 {
    assert!(n > 0 && p >= 2);
    let mut v = 0;
    let mut rest = n;
    while rest % p == 0 {
        rest /= p;
        v += 1;
    }
    v
}

pub fn p_part(n: u64, p: u64) -> u64 {
    p.pow(padic_val(n, p))
}

pub fn padic_val_big(n: &BigInt, p: u64) -> u32 {
    assert!(!num_traits::Zero::is_zero(n));
    let p = BigInt::from(p);
    let mut v = 0;
    let mut rest = n.clone();
    loop {
        let (div, rem) = num_integer::Integer::div_rem(&rest, &p);
        if !num_traits::Zero::is_zero(&rem) {
            return v;
        }
        rest = div;
        v += 1;
    }
}

pub fn p_part_big(n: &BigInt, p: u64) -> u64 {
    p.checked_pow(padic_val_big(n, p))
        .expect("p-part overflows u64")
}

/// Least `e >= 1` with `a^e = 1 mod m`; the order modulo 1 is 1.
pub fn mult_order(a: u64, m: u64) -> u64 {
    assert!(m >= 1);
    if m == 1 {
        return 1;
    }
    let a = (a % m) as u128;
    let m128 = m as u128;
    assert!(
        num_integer::Integer::gcd(&(a as u64), &m) == 1,
        "multiplicative order needs gcd(a, m) = 1"
    );
    let mut acc = a % m128;
    let mut e = 1;
    while acc != 1 {
        acc = acc * a % m128;
        e += 1;
    }
    e
}

/// Checked variant of [`mult_order`].
pub fn try_mult_order(a: u64, m: u64) -> Result<u64> {
    if m == 0 {
        return Err(Error::ZeroArgument);
    }
    if m > 1 && num_integer::Integer::gcd(&(a % m), &m) != 1 {
        return Err(Error::NotCoprime { a, m });
    }
    Ok(mult_order(a, m))
}

/// Number of irreducible monic polynomials of degree `d` over `F_q` with
/// nonzero constant term, as a polynomial in `q`.
pub fn im_poly(d: u32) -> QPoly {
    assert!(d >= 1);
    let mut acc = QPoly::zero();
    for e in divisors(d as u64) {
        let mu = moebius(e).unwrap();
        if mu == 0 {
            continue;
        }
        let term = QPoly::monomial(crate::algebra::rat(mu), (d as u64 / e) as usize)
            .add(&QPoly::from_int(-mu));
        acc = acc.add(&term);
    }
    acc.scale(&ratio(1, d as i64))
}

/// Number of self-reciprocal irreducible monic polynomials of degree `2d`.
pub fn srim_minus_poly(d: u32, parity: Parity) -> QPoly {
    assert!(d >= 1);
    let mut acc = QPoly::zero();
    for e in divisors(d as u64) {
        if e % 2 == 0 {
            continue;
        }
        let mu = moebius(e).unwrap();
        if mu == 0 {
            continue;
        }
        let power = QPoly::monomial(crate::algebra::rat(mu), (d as u64 / e) as usize);
        let term = match parity {
            Parity::Odd => power.add(&QPoly::from_int(-mu)),
            Parity::Even => power,
        };
        acc = acc.add(&term);
    }
    acc.scale(&ratio(1, 2 * d as i64))
}

/// Number of unordered pairs of non-self-reciprocal irreducible monic
/// polynomials of degree `d` swapped by the reciprocal involution.
pub fn srim_plus_poly(d: u32, parity: Parity) -> QPoly {
    assert!(d >= 1);
    if d == 1 {
        let shift = match parity {
            Parity::Odd => -3,
            Parity::Even => -2,
        };
        return QPoly::from_ints(&[shift, 1]).scale(&ratio(1, 2));
    }
    let mut acc = im_poly(d);
    if d % 2 == 0 {
        acc = acc.sub(&srim_minus_poly(d / 2, parity));
    }
    acc.scale(&ratio(1, 2))
}

/// Number of self-dual irreducible monic polynomials of degree `d`
/// (vanishes for even `d >= 2`).
pub fn sdim_minus_poly(d: u32) -> QPoly {
    assert!(d >= 1);
    if d % 2 == 0 {
        return QPoly::zero();
    }
    // Divisor sums give d*SDIM-_d = sum_{e | d} mu(d/e)(q^e + 1) on odd d.
    let mut acc = QPoly::zero();
    for e in divisors(d as u64) {
        let mu = moebius(d as u64 / e).unwrap();
        if mu == 0 {
            continue;
        }
        let term = QPoly::monomial(crate::algebra::rat(mu), e as usize).add(&QPoly::from_int(mu));
        acc = acc.add(&term);
    }
    acc.scale(&ratio(1, d as i64))
}

/// Number of swapped pairs of non-self-dual irreducible monic polynomials
/// of degree `d`.
pub fn sdim_plus_poly(d: u32) -> QPoly {
    assert!(d >= 1);
    // 2m*SDIM+_m = sum_{e | m} mu(m/e) A(e) with
    // A(e) = q^(2e) - 1 - sum_{t | 2e, t odd} t*SDIM-_t.
    let residual = |e: u64| -> QPoly {
        let mut a = QPoly::monomial(crate::algebra::rat(1), 2 * e as usize)
            .add(&QPoly::from_int(-1));
        for t in divisors(2 * e) {
            if t % 2 == 1 {
                a = a.sub(&sdim_minus_poly(t as u32).scale(&crate::algebra::rat(t as i64)));
            }
        }
        a
    };
    let mut acc = QPoly::zero();
    for e in divisors(d as u64) {
        let mu = moebius(d as u64 / e).unwrap();
        if mu == 0 {
            continue;
        }
        acc = acc.add(&residual(e).scale(&crate::algebra::rat(mu)));
    }
    acc.scale(&ratio(1, 2 * d as i64))
}

fn count_from_rat(r: BigRat, what: &str) -> u64 {
    assert!(r.is_integer(), "{what} must be an integer, got {r}");
    let n = r.to_integer();
    assert!(n >= BigInt::from(0), "{what} must be nonnegative, got {n}");
    u64::try_from(n).expect("count overflows u64")
}

/// Number of irreducible monic p-power order polynomials of degree `d`.
pub fn im_p(d: u32, ctx: &PrimaryParams) -> u64 {
    assert!(d >= 1);
    // (1/d) * sum of phi(p^n) over n >= 0 with ord_{p^n}(q) = d; the order
    // is nondecreasing in n, so the loop stops at the first overshoot.
    let mut total: u64 = 0;
    let mut pn: u128 = 1;
    loop {
        if pn > u64::MAX as u128 {
            break;
        }
        let ord = ctx.ord_mod(pn as u64);
        if ord > d as u64 {
            break;
        }
        if ord == d as u64 {
            total += euler_phi(pn as u64).unwrap();
        }
        pn *= ctx.p as u128;
    }
    assert!(total % d as u64 == 0);
    total / d as u64
}

/// The maximal p-part `(q^n + 1)_p` whose multiplicative order at `q` is
/// `2d`; 1 when no `n` qualifies (and then the associated count is zero).
pub fn max_p_part_condition(d: u32, ctx: &PrimaryParams) -> u64 {
    assert!(d >= 1);
    let target = 2 * d as u64;
    // The possible p-parts of q^n + 1 form a short, explicit list.
    let candidates: Vec<u64> = if ctx.p == 2 {
        vec![ctx.p_part_qn(1, 1), 2]
    } else {
        let k = ctx.ord_mod(ctx.p);
        if k % 2 != 0 {
            Vec::new()
        } else {
            let n0 = (k / 2) as u32;
            let base = ctx.p_part_qn(n0, 1);
            // base * p^j for j >= 0; the order is nondecreasing in j.
            let mut value = base;
            let mut out = Vec::new();
            loop {
                if ctx.ord_mod(value) > target {
                    break;
                }
                out.push(value);
                value = match value.checked_mul(ctx.p) {
                    Some(v) => v,
                    None => break,
                };
            }
            out
        }
    };
    candidates
        .into_iter()
        .filter(|&v| ctx.ord_mod(v) == target)
        .max()
        .unwrap_or(1)
}

/// Number of self-reciprocal irreducible monic p-power order polynomials
/// of degree `2d`.
pub fn srim_minus_p(d: u32, ctx: &PrimaryParams) -> u64 {
    assert!(d >= 1);
    let m_max = max_p_part_condition(d, ctx);
    let mut total = 0u64;
    let mut m = 1u64;
    while m <= m_max {
        if m_max % m == 0 && ctx.ord_mod(m) == 2 * d as u64 {
            total += euler_phi(m).unwrap();
        }
        m = match m.checked_mul(ctx.p) {
            Some(v) => v,
            None => break,
        };
    }
    assert!(total % (2 * d as u64) == 0);
    total / (2 * d as u64)
}

/// Number of swapped pairs of non-self-reciprocal irreducible monic
/// p-power order polynomials of degree `d`.
pub fn srim_plus_p(d: u32, ctx: &PrimaryParams) -> u64 {
    assert!(d >= 1);
    if d == 1 {
        let qm1 = ctx.p_part_qn(1, -1);
        let reduced = if ctx.p == 2 { qm1 - 2 } else { qm1 - 1 };
        assert!(reduced % 2 == 0);
        return reduced / 2;
    }
    let im = im_p(d, ctx);
    let fixed = if d % 2 == 0 { srim_minus_p(d / 2, ctx) } else { 0 };
    assert!(im >= fixed && (im - fixed) % 2 == 0);
    (im - fixed) / 2
}

/// Evaluate a counting polynomial at a concrete prime power, asserting
/// the result is a nonnegative integer.
pub fn eval_count(poly: &QPoly, q: u64) -> u64 {
    count_from_rat(poly.eval(&rat_int(BigInt::from(q))), "polynomial count")
}

pub fn big_pow(base: u64, e: u32) -> BigInt {
    BigInt::from(base).pow(e)
}

pub fn one_big() -> BigInt {
    BigInt::one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn arithmetic_functions() {
        assert_eq!(moebius(6).unwrap(), 1);
        assert_eq!(moebius(4).unwrap(), 0);
        assert_eq!(moebius(30).unwrap(), -1);
        assert_eq!(euler_phi(9).unwrap(), 6);
        assert_eq!(p_part(80, 2), 16);
        assert_eq!(padic_val(80, 2), 4);
        assert!(moebius(0).is_err());
    }

    #[test]
    fn multiplicative_orders() {
        assert_eq!(mult_order(3, 4), 2);
        assert_eq!(mult_order(2, 7), 3);
        assert_eq!(mult_order(3, 8), 2);
        assert_eq!(mult_order(5, 1), 1);
        assert!(try_mult_order(2, 4).is_err());
    }

    #[test]
    fn prime_power_detection() {
        assert_eq!(is_prime_power(8), Some((2, 3)));
        assert_eq!(is_prime_power(9), Some((3, 2)));
        assert_eq!(is_prime_power(12), None);
        assert_eq!(is_prime_power(1), None);
        assert!(PrimaryParams::new(2, 4).is_err());
        assert!(PrimaryParams::new(4, 3).is_err());
        assert!(PrimaryParams::new(2, 3).is_ok());
    }

    #[test]
    fn im_small_degrees() {
        assert_eq!(im_poly(1), QPoly::from_ints(&[-1, 1]));
        // (q^2 - q)/2
        assert_eq!(
            im_poly(2),
            QPoly::from_coeffs(vec![rat(0), ratio(-1, 2), ratio(1, 2)])
        );
        assert_eq!(eval_count(&im_poly(3), 2), 2);
    }

    #[test]
    fn srim_figure_polynomials() {
        // Odd-q table for n = 1..7.
        let minus: [QPoly; 7] = [
            QPoly::from_ints(&[-1, 1]).scale(&ratio(1, 2)),
            QPoly::from_ints(&[-1, 0, 1]).scale(&ratio(1, 4)),
            QPoly::from_ints(&[0, -1, 0, 1]).scale(&ratio(1, 6)),
            QPoly::from_ints(&[-1, 0, 0, 0, 1]).scale(&ratio(1, 8)),
            QPoly::from_ints(&[0, -1, 0, 0, 0, 1]).scale(&ratio(1, 10)),
            QPoly::from_ints(&[0, 0, -1, 0, 0, 0, 1]).scale(&ratio(1, 12)),
            QPoly::from_ints(&[0, -1, 0, 0, 0, 0, 0, 1]).scale(&ratio(1, 14)),
        ];
        let plus: [QPoly; 7] = [
            QPoly::from_ints(&[-3, 1]).scale(&ratio(1, 2)),
            QPoly::from_ints(&[1, -2, 1]).scale(&ratio(1, 4)),
            QPoly::from_ints(&[0, -1, 0, 1]).scale(&ratio(1, 6)),
            QPoly::from_ints(&[1, 0, -2, 0, 1]).scale(&ratio(1, 8)),
            QPoly::from_ints(&[0, -1, 0, 0, 0, 1]).scale(&ratio(1, 10)),
            QPoly::from_ints(&[0, 2, -1, -2, 0, 0, 1]).scale(&ratio(1, 12)),
            QPoly::from_ints(&[0, -1, 0, 0, 0, 0, 0, 1]).scale(&ratio(1, 14)),
        ];
        for n in 1..=7u32 {
            assert_eq!(srim_minus_poly(n, Parity::Odd), minus[n as usize - 1], "minus n={n}");
            assert_eq!(srim_plus_poly(n, Parity::Odd), plus[n as usize - 1], "plus n={n}");
        }
    }

    #[test]
    fn srim_even_branch() {
        // SRIM-_2(even q) = q^2/4, so 1 at q=2.
        assert_eq!(eval_count(&srim_minus_poly(2, Parity::Even), 2), 1);
        assert_eq!(srim_plus_poly(1, Parity::Even), QPoly::from_ints(&[-2, 1]).scale(&ratio(1, 2)));
    }

    #[test]
    fn srim_doubling_lemma() {
        // 2^k SRIM-_{2^k m}(q) = SRIM-_m(q^{2^k})
        for parity in [Parity::Odd, Parity::Even] {
            for m in 1..=3u32 {
                for k in 0..=3u32 {
                    let lhs = srim_minus_poly(2u32.pow(k) * m, parity)
                        .scale(&rat(2i64.pow(k)));
                    let rhs = srim_minus_poly(m, parity).subst_q_pow(2u32.pow(k));
                    assert_eq!(lhs, rhs, "m={m} k={k} {parity:?}");
                }
            }
        }
    }

    #[test]
    fn srim_sum_lemma() {
        for n in 1..=10u32 {
            let odd = srim_minus_poly(n, Parity::Odd).add(&srim_plus_poly(n, Parity::Odd));
            let expect_odd = if n == 1 {
                im_poly(1).sub(&QPoly::one())
            } else {
                im_poly(n)
            };
            assert_eq!(odd, expect_odd, "odd q, n={n}");
            let even = srim_minus_poly(n, Parity::Even).add(&srim_plus_poly(n, Parity::Even));
            assert_eq!(even, im_poly(n), "even q, n={n}");
        }
    }

    #[test]
    fn sdim_values() {
        assert_eq!(sdim_minus_poly(1), QPoly::from_ints(&[1, 1]));
        assert_eq!(sdim_minus_poly(2), QPoly::zero());
        assert_eq!(sdim_minus_poly(4), QPoly::zero());
        // (q^3 - q)/3
        assert_eq!(
            sdim_minus_poly(3),
            QPoly::from_ints(&[0, -1, 0, 1]).scale(&ratio(1, 3))
        );
        // Pair count in degree 1: (q-2)(q+1)/2.
        assert_eq!(
            sdim_plus_poly(1),
            QPoly::from_ints(&[-2, 1])
                .mul(&QPoly::from_ints(&[1, 1]))
                .scale(&ratio(1, 2))
        );
    }

    #[test]
    fn p_power_counts_q3() {
        let ctx = PrimaryParams::new(2, 3).unwrap();
        // IM_d(2,3): 2 for d in {1,4,8,...}, 3 for d = 2, else 0.
        assert_eq!(im_p(1, &ctx), 2);
        assert_eq!(im_p(2, &ctx), 3);
        assert_eq!(im_p(3, &ctx), 0);
        assert_eq!(im_p(4, &ctx), 2);
        assert_eq!(im_p(8, &ctx), 2);
        assert_eq!(srim_minus_p(1, &ctx), 1);
        for d in 2..=8 {
            assert_eq!(srim_minus_p(d, &ctx), 0, "d={d}");
        }
        assert_eq!(srim_plus_p(1, &ctx), 0);
        assert_eq!(srim_plus_p(2, &ctx), 1);
        assert_eq!(srim_plus_p(4, &ctx), 1);
        assert_eq!(srim_plus_p(8, &ctx), 1);
    }

    #[test]
    fn p_power_counts_q9() {
        let ctx = PrimaryParams::new(2, 9).unwrap();
        assert_eq!(im_p(1, &ctx), 8);
        assert_eq!(im_p(2, &ctx), 4);
        for d in 1..=8 {
            assert_eq!(srim_minus_p(d, &ctx), 0);
        }
        assert_eq!(srim_plus_p(1, &ctx), 3);
        assert_eq!(srim_plus_p(2, &ctx), 2);
        assert_eq!(srim_plus_p(4, &ctx), 2);
    }

    #[test]
    fn p_power_counts_q5_and_q7() {
        // q = 5 represents the class of -3: no self-reciprocal 2-power
        // order polynomials, and a single swapped pair in degrees 2^j.
        let ctx = PrimaryParams::new(2, 5).unwrap();
        for d in 1..=8 {
            assert_eq!(srim_minus_p(d, &ctx), 0);
        }
        assert_eq!(srim_plus_p(1, &ctx), 1);
        assert_eq!(srim_plus_p(2, &ctx), 1);
        // q = 7 represents the class of -9: 3 self-reciprocal ones in
        // degree 2 and pairs 2^e = 2 from degree 2 on.
        let ctx7 = PrimaryParams::new(2, 7).unwrap();
        assert_eq!(srim_minus_p(1, &ctx7), 3);
        assert_eq!(srim_minus_p(2, &ctx7), 0);
        assert_eq!(srim_plus_p(1, &ctx7), 0);
        assert_eq!(srim_plus_p(2, &ctx7), 2);
        assert_eq!(srim_plus_p(4, &ctx7), 2);
    }

    #[test]
    fn max_p_part_examples() {
        assert_eq!(
            max_p_part_condition(1, &PrimaryParams::new(2, 3).unwrap()),
            4
        );
        assert_eq!(
            max_p_part_condition(1, &PrimaryParams::new(2, 5).unwrap()),
            1
        );
        assert_eq!(
            max_p_part_condition(1, &PrimaryParams::new(3, 2).unwrap()),
            3
        );
    }

    #[test]
    fn im_p_degree_one_matches_sylow() {
        let ctx = PrimaryParams::new(2, 5).unwrap();
        assert_eq!(im_p(1, &ctx), 4); // (5-1)_2
        let ctx = PrimaryParams::new(3, 4).unwrap();
        assert_eq!(im_p(1, &ctx), 3); // (4-1)_3
    }

    #[test]
    fn p_class_invariance() {
        // Pairs of prime powers in the same p-class must produce the same
        // p-power order counting sequences.
        let pairs = [(2u64, 81u64, 17u64), (2, 6561, 97), (2, 5, 13), (3, 64, 19), (3, 262144, 109)];
        for (p, q1, q2) in pairs {
            let a = PrimaryParams::new(p, q1).unwrap();
            let b = PrimaryParams::new(p, q2).unwrap();
            assert_eq!(a.p_class_invariant(), b.p_class_invariant(), "classes of {q1},{q2}");
            for d in 1..=8 {
                assert_eq!(im_p(d, &a), im_p(d, &b), "IM p={p} d={d}");
                assert_eq!(srim_minus_p(d, &a), srim_minus_p(d, &b), "SRIM- p={p} d={d}");
                assert_eq!(srim_plus_p(d, &a), srim_plus_p(d, &b), "SRIM+ p={p} d={d}");
            }
        }
    }

    #[test]
    fn counts_nonnegative_at_prime_powers() {
        for q in [2u64, 3, 4, 5, 7, 8, 9] {
            let parity = Parity::of(q);
            for d in 1..=10 {
                eval_count(&im_poly(d), q);
                eval_count(&srim_minus_poly(d, parity), q);
                eval_count(&srim_plus_poly(d, parity), q);
                eval_count(&sdim_minus_poly(d), q);
                eval_count(&sdim_plus_poly(d), q);
            }
        }
    }
}
