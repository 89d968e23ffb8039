//! Every route to the generating functions of the equivariant reduced
//! Euler characteristics: closed products, exponential ratios, the direct
//! coefficient sum over weak compositions, the transform recurrence, the
//! infinite-product exponents, the fixed-`n` expansions in the rank
//! variable, and the p-primary variants of all of them. Routes with the
//! same parameters must produce identical coefficients; several functions
//! assert that internally.
//!
//! Index convention: `fsp_*(r, ...)` always returns the r-th generating
//! function. The direct coefficient formula is naturally indexed one step
//! lower, which [`fsp_direct_coeff`] documents explicitly.

use crate::algebra::{
    factorial_rat, multinomial, rat, rat_int, ratio, BigRat, QPoly, TruncSeries,
};
use crate::counting::{
    divisors, moebius, srim_minus_p, srim_minus_poly, srim_plus_p, srim_plus_poly, Parity,
    PrimaryParams,
};
use crate::partitions::{partitions_of, sign_functions, ts_transform};
use num_bigint::BigInt;
use num_traits::One;
use std::collections::HashMap;

/// Sign selector for the two transformed linear-group series.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn unit(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// Identifies one of the independent computation routes.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Route {
    ClosedProduct,
    Exponential,
    DirectCoeff,
    TsRecurrence,
    InfiniteProduct,
    GspExpansion,
    GspRecurrence,
}

/// A computed series tagged with its route and parameters, used by the
/// cross-route checker and the CLI self-check.
#[derive(Clone, Debug)]
pub struct RouteResult {
    pub route: Route,
    pub r: u32,
    pub q: u64,
    pub p: Option<u64>,
    pub series: TruncSeries<BigRat>,
}

fn binom_u64(n: u32, k: u32) -> u64 {
    if k > n {
        return 0;
    }
    let mut acc = 1u64;
    for i in 0..k as u64 {
        acc = acc * (n as u64 - i) / (i + 1);
    }
    acc
}

/// Closed product form of the r-th generating function, symbolically in
/// `q`: the empty product 1 for r = 1, otherwise a product of factors
/// `(1 - q^j x)^(-binom(r-1, j))` over `j` of parity opposite to `r-1`.
pub fn fsp_closed(r: u32, order: usize) -> TruncSeries<QPoly> {
    assert!(r >= 1);
    let s = r - 1;
    let mut acc = TruncSeries::one(order);
    for j in 0..=s {
        if j % 2 == s % 2 {
            continue;
        }
        let factor = TruncSeries::one_minus(&QPoly::monomial(rat(1), j as usize), 1, order);
        let e = -(binom_u64(s, j) as i64);
        acc = acc.mul(&factor.pow(e).expect("unit constant"));
    }
    acc
}

/// [`fsp_closed`] specialized at a concrete `q`.
pub fn fsp_closed_at(r: u32, q: u64, order: usize) -> TruncSeries<BigRat> {
    fsp_closed(r, order).eval_q_u64(q)
}

/// Exponential-ratio form at a fixed prime power:
/// `exp(sum (q^n+1)^(r-1) x^n/2n) / exp(sum (q^n-1)^(r-1) x^n/2n)`.
pub fn fsp_exponential(r: u32, q: u64, order: usize) -> TruncSeries<BigRat> {
    assert!(r >= 1);
    exp_ratio(order, |n| {
        let qn = BigInt::from(q).pow(n);
        let plus = rat_int((&qn + BigInt::one()).pow(r - 1));
        let minus = rat_int((&qn - BigInt::one()).pow(r - 1));
        (plus, minus)
    })
}

/// Shared builder for ratios of exponentials of `sum c_n^± x^n / 2n`.
fn exp_ratio(order: usize, weights: impl Fn(u32) -> (BigRat, BigRat)) -> TruncSeries<BigRat> {
    let mut plus = TruncSeries::zero(order);
    let mut minus = TruncSeries::zero(order);
    for n in 1..=order {
        let (wp, wm) = weights(n as u32);
        let den = BigRat::new(BigInt::one(), BigInt::from(2 * n as i64));
        plus = plus.add(&TruncSeries::monomial(wp * &den, n, order));
        minus = minus.add(&TruncSeries::monomial(wm * &den, n, order));
    }
    plus
        .exp()
        .expect("zero constant")
        .mul(&minus.exp().expect("zero constant").inv().expect("unit"))
}

/// Coefficient of `x^n` in the (r+1)-th generating function, by the sum
/// over weak compositions of `n` into slots `j` of parity opposite to `r`.
/// Note the index shift: this routes around the closed product for the
/// function of index `r + 1`.
pub fn fsp_direct_coeff(r: u32, n: u32) -> QPoly {
    assert!(r >= 1 && n >= 1);
    let slots: Vec<u32> = (0..=r).filter(|j| j % 2 != r % 2).collect();
    let mut total = QPoly::zero();
    let mut composition = vec![0u32; slots.len()];
    fn rec(
        slots: &[u32],
        r: u32,
        idx: usize,
        rem: u32,
        composition: &mut Vec<u32>,
        total: &mut QPoly,
    ) {
        if idx == slots.len() {
            if rem != 0 {
                return;
            }
            let mut coeff = rat(1);
            let mut degree = 0usize;
            for (k, &j) in slots.iter().enumerate() {
                let nj = composition[k];
                let m = rat(-(binom_u64(r, j) as i64));
                let mut c = multinomial(&m, &[nj as i64]).unwrap();
                if nj % 2 == 1 {
                    c = -c;
                }
                coeff *= c;
                degree += (j * nj) as usize;
            }
            *total = total.add(&QPoly::monomial(coeff, degree));
            return;
        }
        for nj in 0..=rem {
            composition[idx] = nj;
            rec(slots, r, idx + 1, rem - nj, composition, total);
        }
        composition[idx] = 0;
    }
    rec(&slots, r, 0, n, &mut composition, &mut total);
    total
}

/// Coefficient of `x^n` in the r-th generating function via the direct
/// composition formula (`r = 1` degenerates to the constant series 1).
pub fn fsp_coeff(r: u32, n: u32) -> QPoly {
    assert!(r >= 1);
    if n == 0 {
        return QPoly::one();
    }
    if r == 1 {
        return QPoly::zero();
    }
    fsp_direct_coeff(r - 1, n)
}

/// Closed product form of the r-th transformed linear (`+`) or unitary
/// (`-`) generating function, with `x` inserted in every factor.
pub fn fgl_product(sign: Sign, r: u32, order: usize) -> TruncSeries<QPoly> {
    assert!(r >= 1);
    let s = r - 1;
    let mut acc = TruncSeries::one(order);
    for j in 0..=s {
        // factor (1 - (sign 1)^(s+1) (sign q)^j x)^((-1)^(s-j) binom(s,j))
        let neg = match sign {
            Sign::Plus => false,
            Sign::Minus => (s + 1 + j) % 2 == 1,
        };
        let c = QPoly::monomial(rat(if neg { -1 } else { 1 }), j as usize);
        let mut e = binom_u64(s, j) as i64;
        if (s - j) % 2 == 1 {
            e = -e;
        }
        acc = acc.mul(
            &TruncSeries::one_minus(&c, 1, order)
                .pow(e)
                .expect("unit constant"),
        );
    }
    acc
}

/// The infinite-product exponent `a_r^±(q, n)` of the linear/unitary
/// series: `(1/n) sum_{d | n} (±1)^d mu(n/d) (q^d - (±1)^d)^(r-1)`.
pub fn fgl_exponent_a(sign: Sign, r: u32, n: u32) -> QPoly {
    assert!(r >= 1 && n >= 1);
    let mut acc = QPoly::zero();
    for d in divisors(n as u64) {
        let mu = moebius(n as u64 / d).unwrap();
        if mu == 0 {
            continue;
        }
        let unit = if d % 2 == 0 { 1 } else { sign.unit() };
        let base = QPoly::monomial(rat(1), d as usize).add(&QPoly::from_int(-unit));
        let mut term = base.pow(r - 1).scale(&rat(mu));
        if unit == -1 {
            term = term.neg();
        }
        acc = acc.add(&term);
    }
    acc.scale(&ratio(1, n as i64))
}

/// p-primary analogue of [`fgl_exponent_a`], at concrete parameters.
pub fn fgl_exponent_a_p(sign: Sign, r: u32, n: u32, ctx: &PrimaryParams) -> BigRat {
    assert!(r >= 1 && n >= 1);
    let mut acc = rat(0);
    for d in divisors(n as u64) {
        let mu = moebius(n as u64 / d).unwrap();
        if mu == 0 {
            continue;
        }
        let unit = if d % 2 == 0 { 1i64 } else { sign.unit() };
        let ppart = ctx.p_part_qn_pow(d as u32, -unit, r - 1);
        let signed = if unit == -1 { -mu } else { mu };
        acc += rat_int(ppart) * rat(signed);
    }
    acc / rat(n as i64)
}

/// The p-primary linear/unitary series as the finite product
/// `prod (1 - x^n)^(a_r^±(p, q, n))` through the truncation order.
pub fn fgl_p_series(sign: Sign, r: u32, ctx: &PrimaryParams, order: usize) -> TruncSeries<BigRat> {
    let mut acc = TruncSeries::one(order);
    for n in 1..=order {
        let e = fgl_exponent_a_p(sign, r, n as u32, ctx);
        assert!(e.is_integer(), "product exponent must be integral");
        let factor = TruncSeries::one_minus(&rat(1), n, order);
        acc = acc.mul(&factor.pow_coeff(&e).expect("constant 1"));
    }
    acc
}

/// Infinite-product exponent `c_{r+1}(q, n)` of the symplectic series:
/// `(1/2n) sum_{d | n} mu(n/d) ((q^d-1)^r - (q^d+1)^r)`.
pub fn product_exponent_c(r: u32, n: u32) -> QPoly {
    assert!(r >= 1 && n >= 1);
    let mut acc = QPoly::zero();
    for d in divisors(n as u64) {
        let mu = moebius(n as u64 / d).unwrap();
        if mu == 0 {
            continue;
        }
        let minus = QPoly::monomial(rat(1), d as usize)
            .add(&QPoly::from_int(-1))
            .pow(r);
        let plus = QPoly::monomial(rat(1), d as usize)
            .add(&QPoly::from_int(1))
            .pow(r);
        acc = acc.add(&minus.sub(&plus).scale(&rat(mu)));
    }
    acc.scale(&ratio(1, 2 * n as i64))
}

/// p-primary analogue of [`product_exponent_c`].
pub fn product_exponent_c_p(r: u32, n: u32, ctx: &PrimaryParams) -> BigInt {
    assert!(r >= 1 && n >= 1);
    let mut acc = rat(0);
    for d in divisors(n as u64) {
        let mu = moebius(n as u64 / d).unwrap();
        if mu == 0 {
            continue;
        }
        let minus = ctx.p_part_qn_pow(d as u32, -1, r);
        let plus = ctx.p_part_qn_pow(d as u32, 1, r);
        acc += rat_int(minus - plus) * rat(mu);
    }
    acc /= rat(2 * n as i64);
    assert!(acc.is_integer(), "c exponent must be integral");
    acc.to_integer()
}

/// The r-th generating function as the truncated infinite product
/// `prod_n (1 - x^n)^(c_r(q, n))`, symbolically.
pub fn fsp_infinite_product(r: u32, order: usize) -> TruncSeries<QPoly> {
    assert!(r >= 1);
    let mut acc = TruncSeries::one(order);
    if r == 1 {
        return acc;
    }
    for n in 1..=order {
        let e = product_exponent_c(r - 1, n as u32);
        let factor = TruncSeries::one_minus(&QPoly::one(), n, order);
        acc = acc.mul(&factor.pow_coeff(&e).expect("constant 1"));
    }
    acc
}

/// Numeric variant of [`fsp_infinite_product`].
pub fn fsp_infinite_product_at(r: u32, q: u64, order: usize) -> TruncSeries<BigRat> {
    fsp_infinite_product(r, order).eval_q_u64(q)
}

/// The r-th generating function via the transform recurrence, iterated
/// from the constant series for the given parity branch, symbolically.
pub fn fsp_ts_recurrence(r: u32, parity: Parity, order: usize) -> TruncSeries<QPoly> {
    assert!(r >= 1);
    let mut f = TruncSeries::<QPoly>::one(order);
    for s in 1..r {
        let fgl_minus = fgl_product(Sign::Minus, s, order);
        let fgl_plus = fgl_product(Sign::Plus, s, order);
        let t_minus = ts_transform(
            |d| srim_minus_poly(d, parity),
            |m, d| fgl_minus.coeff(m as usize).subst_q_pow(d),
            order,
        );
        let t_plus = ts_transform(
            |d| srim_plus_poly(d, parity),
            |m, d| fgl_plus.coeff(m as usize).subst_q_pow(d),
            order,
        );
        let f_pow = match parity {
            Parity::Odd => f.mul(&f),
            Parity::Even => f.clone(),
        };
        f = f_pow.mul(&t_minus).mul(&t_plus);
    }
    f
}

/// Numeric transform recurrence: weights and inputs are specialized at
/// `q`, with `q -> q^d` realized by evaluating at the power.
pub fn fsp_ts_recurrence_at(r: u32, q: u64, order: usize) -> TruncSeries<BigRat> {
    assert!(r >= 1);
    let parity = Parity::of(q);
    let q_rat = rat_int(BigInt::from(q));
    let qpow = |d: u32| rat_int(BigInt::from(q).pow(d));
    let mut f = TruncSeries::<BigRat>::one(order);
    for s in 1..r {
        let fgl_minus = fgl_product(Sign::Minus, s, order);
        let fgl_plus = fgl_product(Sign::Plus, s, order);
        // Only the transformed input picks up q -> q^d; the weight
        // sequence is evaluated at q itself.
        let t_minus = ts_transform(
            |d| srim_minus_poly(d, parity).eval(&q_rat),
            |m, d| fgl_minus.coeff(m as usize).eval(&qpow(d)),
            order,
        );
        let t_plus = ts_transform(
            |d| srim_plus_poly(d, parity).eval(&q_rat),
            |m, d| fgl_plus.coeff(m as usize).eval(&qpow(d)),
            order,
        );
        let f_pow = match parity {
            Parity::Odd => f.mul(&f),
            Parity::Even => f.clone(),
        };
        f = f_pow.mul(&t_minus).mul(&t_plus);
    }
    f
}

/// p-primary generating function by the exponential route of the p-part
/// weights.
pub fn fsp_p_exponential(r: u32, ctx: &PrimaryParams, order: usize) -> TruncSeries<BigRat> {
    assert!(r >= 1);
    exp_ratio(order, |n| {
        (
            rat_int(ctx.p_part_qn_pow(n, 1, r - 1)),
            rat_int(ctx.p_part_qn_pow(n, -1, r - 1)),
        )
    })
}

/// p-primary generating function by the transform recurrence with p-power
/// order counts and p-primary product inputs.
pub fn fsp_p_recurrence(r: u32, ctx: &PrimaryParams, order: usize) -> TruncSeries<BigRat> {
    assert!(r >= 1);
    let mut f = TruncSeries::<BigRat>::one(order);
    for s in 1..r {
        // The transform substitutes q -> q^d into the input coefficient
        // sequences, i.e. evaluates the p-primary series at the power.
        let mut minus_cache: HashMap<u32, TruncSeries<BigRat>> = HashMap::new();
        let mut plus_cache: HashMap<u32, TruncSeries<BigRat>> = HashMap::new();
        let t_minus = ts_transform(
            |d| rat(srim_minus_p(d, ctx) as i64),
            |m, d| {
                minus_cache
                    .entry(d)
                    .or_insert_with(|| fgl_p_series(Sign::Minus, s, &ctx.q_power(d), order))
                    .coeff(m as usize)
                    .clone()
            },
            order,
        );
        let t_plus = ts_transform(
            |d| rat(srim_plus_p(d, ctx) as i64),
            |m, d| {
                plus_cache
                    .entry(d)
                    .or_insert_with(|| fgl_p_series(Sign::Plus, s, &ctx.q_power(d), order))
                    .coeff(m as usize)
                    .clone()
            },
            order,
        );
        let f_pow = if ctx.p() == 2 { f.mul(&f) } else { f.clone() };
        f = f_pow.mul(&t_minus).mul(&t_plus);
    }
    f
}

/// p-primary generating function; computed by both independent routes,
/// which must agree, and checked to have integer coefficients.
pub fn fsp_p(r: u32, ctx: &PrimaryParams, order: usize) -> TruncSeries<BigRat> {
    let by_exp = fsp_p_exponential(r, ctx, order);
    let by_rec = fsp_p_recurrence(r, ctx, order);
    assert_eq!(
        by_exp, by_rec,
        "p-primary routes disagree at r={r}, p={}, q={}",
        ctx.p(),
        ctx.q()
    );
    assert!(by_exp.is_integral(), "p-primary series must be integral");
    by_exp
}

fn gsp_expansion_with(
    n: u32,
    q: u64,
    order: usize,
    pole: impl Fn(&BigInt) -> BigInt,
) -> TruncSeries<BigRat> {
    if n == 0 {
        return TruncSeries::from_coeffs(vec![rat(1); order + 1]);
    }
    let mut coeffs = vec![rat(0); order + 1];
    for lam in partitions_of(n) {
        let seq = lam.nonincreasing();
        let weight = rat_int(lam.class_size())
            / rat_int(BigInt::from(2).pow(lam.num_parts()));
        for eps in sign_functions(lam.num_parts()) {
            let mut u = BigInt::one();
            let mut sign = 1i64;
            for (i, &part) in seq.iter().enumerate() {
                u *= BigInt::from(q).pow(part) + BigInt::from(eps[i] as i64);
                sign *= eps[i] as i64;
            }
            let u = pole(&u);
            // sign * weight / (1 - u x) contributes sign*weight*u^k at x^k.
            let scale = &weight * rat(sign);
            let mut upow = BigInt::one();
            for c in coeffs.iter_mut() {
                *c += &scale * rat_int(upow.clone());
                upow *= &u;
            }
        }
    }
    // The accumulated coefficients are n! times the series; they must
    // already be integers.
    let scaled = TruncSeries::from_coeffs(coeffs);
    assert!(scaled.is_integral(), "n! times the series must be integral");
    scaled.scale(&factorial_rat(n as u64).recip())
}

/// Fixed-`n` generating function in the rank variable, by the partition
/// expansion with signed pole weights.
pub fn gsp_expansion(n: u32, q: u64, order: usize) -> TruncSeries<BigRat> {
    gsp_expansion_with(n, q, order, BigInt::clone)
}

/// Fixed-`n` generating function by the scaling recurrence
/// `2n G_n(x) = sum_j [G_{n-j}((q^j+1)x) - G_{n-j}((q^j-1)x)]`.
pub fn gsp_recurrence(n: u32, q: u64, order: usize) -> TruncSeries<BigRat> {
    let mut table: Vec<TruncSeries<BigRat>> =
        vec![TruncSeries::from_coeffs(vec![rat(1); order + 1])];
    for k in 1..=n {
        let mut acc = TruncSeries::zero(order);
        for j in 1..=k {
            let qj = BigInt::from(q).pow(j);
            let prev = &table[(k - j) as usize];
            let plus = prev.scale_x(&rat_int(&qj + 1));
            let minus = prev.scale_x(&rat_int(&qj - 1));
            acc = acc.add(&plus.sub(&minus));
        }
        table.push(acc.scale(&ratio(1, 2 * k as i64)));
    }
    table.pop().unwrap()
}

/// p-primary fixed-`n` expansion: identical shape with each pole value
/// replaced by its p-part.
pub fn gsp_p(n: u32, ctx: &PrimaryParams, order: usize) -> TruncSeries<BigRat> {
    let p = ctx.p();
    gsp_expansion_with(n, ctx.q_u64(), order, |u| {
        BigInt::from(crate::counting::p_part_big(u, p))
    })
}

/// Verifies the self-similar recurrence
/// `F_{r+1}(q, x) = F_r(q, qx)/(1 - q^(r-1) x) * prod_j F_{r-j}(q, q^(j-1) x)`
/// coefficient-wise through the order, symbolically.
pub fn fsp_r_recurrence_check(r: u32, order: usize) -> bool {
    assert!(r >= 1);
    let lhs = fsp_closed(r + 1, order);
    let mut rhs = fsp_closed(r, order).scale_x(&QPoly::q());
    let pole = TruncSeries::one_minus(&QPoly::monomial(rat(1), r as usize - 1), 1, order);
    rhs = rhs.mul(&pole.inv().expect("unit constant"));
    for j in 1..r {
        let scaled = fsp_closed(r - j, order).scale_x(&QPoly::monomial(rat(1), j as usize - 1));
        rhs = rhs.mul(&scaled);
    }
    lhs == rhs
}

/// All numeric routes to the r-th generating function at `q`, for the
/// cross-route agreement check.
pub fn fsp_all_routes(r: u32, q: u64, order: usize) -> Vec<RouteResult> {
    let mk = |route, series| RouteResult {
        route,
        r,
        q,
        p: None,
        series,
    };
    vec![
        mk(Route::ClosedProduct, fsp_closed_at(r, q, order)),
        mk(Route::Exponential, fsp_exponential(r, q, order)),
        mk(Route::DirectCoeff, {
            let coeffs = (0..=order)
                .map(|n| fsp_coeff(r, n as u32).eval_u64(q))
                .collect();
            TruncSeries::from_coeffs(coeffs)
        }),
        mk(Route::TsRecurrence, fsp_ts_recurrence_at(r, q, order)),
        mk(Route::InfiniteProduct, fsp_infinite_product_at(r, q, order)),
    ]
}

/// True if every route agrees coefficient-wise.
pub fn fsp_routes_agree(r: u32, q: u64, order: usize) -> bool {
    let routes = fsp_all_routes(r, q, order);
    routes.windows(2).all(|w| w[0].series == w[1].series)
}
