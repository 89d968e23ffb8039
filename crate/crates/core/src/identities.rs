//! Machine verification of the partition identities: the linear, unitary,
//! and symplectic families, the signed-weight variants, and the master
//! identities tying the infinite-product exponents to the closed forms.
//! Everything is checked symbolically in `Q[q]` up to a degree bound, and
//! a failure carries the first offending degree with both sides rendered
//! canonically.

use crate::algebra::{multinomial, rat, BigRat, Coeff, QPoly, TruncSeries};
use crate::counting::{
    im_poly, sdim_minus_poly, sdim_plus_poly, srim_minus_poly, srim_plus_poly, Parity,
    PrimaryParams,
};
use crate::genfun::{fgl_exponent_a, fgl_product, fsp_closed, product_exponent_c, Sign};
use crate::partitions::{partitions_of, t2_eps, Partition};
use num_bigint::BigInt;
use serde::Serialize;

/// Outcome of one identity check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "lowercase")]
pub enum IdentityStatus {
    Pass,
    Fail {
        degree: usize,
        lhs: String,
        rhs: String,
    },
}

/// One verified identity with its parameters; serializes to a JSON object
/// per line for the machine-readable report stream.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub id: String,
    pub epsilon: i8,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub parity: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<u64>,
    pub max_degree: usize,
    #[serde(flatten)]
    pub status: IdentityStatus,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.status == IdentityStatus::Pass
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

fn parity_name(parity: Parity) -> String {
    match parity {
        Parity::Odd => "odd".into(),
        Parity::Even => "even".into(),
    }
}

pub(crate) fn compare_series<C: Coeff>(
    lhs: &TruncSeries<C>,
    rhs: &TruncSeries<C>,
) -> IdentityStatus {
    for n in 0..=lhs.order() {
        if lhs.coeff(n) != rhs.coeff(n) {
            return IdentityStatus::Fail {
                degree: n,
                lhs: lhs.coeff(n).to_string(),
                rhs: rhs.coeff(n).to_string(),
            };
        }
    }
    IdentityStatus::Pass
}

/// `1 + sum_{n >= 1} [sum over partitions of n of term] x^(stride*n)`.
fn partition_series(
    order: usize,
    stride: usize,
    mut term: impl FnMut(&Partition) -> QPoly,
) -> TruncSeries<QPoly> {
    let mut out = TruncSeries::one(order);
    let mut n = 1usize;
    while stride * n <= order {
        let mut sum = QPoly::zero();
        for lam in partitions_of(n as u32) {
            sum = sum.add(&term(&lam));
        }
        out = out.add(&TruncSeries::monomial(sum, stride * n, order));
        n += 1;
    }
    out
}

fn signed(s: QPoly, eps: i8) -> QPoly {
    if eps == -1 {
        s.neg()
    } else {
        s
    }
}

fn ratio_series(num: TruncSeries<QPoly>, den: TruncSeries<QPoly>, eps: i8) -> TruncSeries<QPoly> {
    num.mul(&den.inv().expect("unit constant"))
        .pow(eps as i64)
        .expect("unit constant")
}

fn one_minus_qx(order: usize) -> TruncSeries<QPoly> {
    TruncSeries::one_minus(&QPoly::q(), 1, order)
}

fn one_minus_x(order: usize) -> TruncSeries<QPoly> {
    TruncSeries::one_minus(&QPoly::one(), 1, order)
}

fn one_plus_x(order: usize) -> TruncSeries<QPoly> {
    TruncSeries::one_minus(&QPoly::from_int(-1), 1, order)
}

fn one_plus_qx(order: usize) -> TruncSeries<QPoly> {
    TruncSeries::one_minus(&QPoly::q().neg(), 1, order)
}

/// Sides of the linear-case identity: partition sums of binomials in the
/// irreducible counts against `((1-qx)/(1-x))^eps`.
pub fn gl_sides(eps: i8, order: usize) -> (TruncSeries<QPoly>, TruncSeries<QPoly>) {
    let lhs = partition_series(order, 1, |lam| {
        let mut term = QPoly::one();
        for &(d, e) in lam.parts() {
            let s = signed(im_poly(d), eps);
            term = term.mul(&multinomial(&s, &[-(e as i64)]).unwrap());
        }
        term
    });
    let rhs = ratio_series(one_minus_qx(order), one_minus_x(order), eps);
    (lhs, rhs)
}

pub fn verify_gl(eps: i8, order: usize) -> IdentityReport {
    let (lhs, rhs) = gl_sides(eps, order);
    IdentityReport {
        id: "gl".into(),
        epsilon: eps,
        parity: None,
        r: None,
        p: None,
        q: None,
        max_degree: order,
        status: compare_series(&lhs, &rhs),
    }
}

/// Sides of the unitary-case identity: the self-dual factor in `x` times
/// the pair factor in `x^2` against `((1-qx)/(1+x))^eps`.
pub fn gu_sides(eps: i8, order: usize) -> (TruncSeries<QPoly>, TruncSeries<QPoly>) {
    let minus_factor = partition_series(order, 1, |lam| {
        let mut term = QPoly::one();
        for &(d, e) in lam.parts() {
            let s = signed(sdim_minus_poly(d), eps);
            term = term.mul(&multinomial(&s, &[-(e as i64)]).unwrap());
        }
        term
    });
    let plus_factor = partition_series(order, 2, |lam| {
        let mut term = QPoly::one();
        for &(d, e) in lam.parts() {
            let s = signed(sdim_plus_poly(d), eps);
            term = term.mul(&multinomial(&s, &[-(e as i64)]).unwrap());
        }
        term
    });
    let lhs = minus_factor.mul(&plus_factor);
    let rhs = ratio_series(one_minus_qx(order), one_plus_x(order), eps);
    (lhs, rhs)
}

pub fn verify_gu(eps: i8, order: usize) -> IdentityReport {
    let (lhs, rhs) = gu_sides(eps, order);
    IdentityReport {
        id: "gu".into(),
        epsilon: eps,
        parity: None,
        r: None,
        p: None,
        q: None,
        max_degree: order,
        status: compare_series(&lhs, &rhs),
    }
}

/// Sides of the mixed self-reciprocal identity: the minus factor takes
/// positive multiplicity indices, the plus factor negative ones, and the
/// convolution telescopes to `(1/(1-x))^eps`.
pub fn tsts_sides(
    eps: i8,
    parity: Parity,
    order: usize,
) -> (TruncSeries<QPoly>, TruncSeries<QPoly>) {
    let minus_factor = partition_series(order, 1, |lam| {
        let mut term = QPoly::one();
        for &(d, e) in lam.parts() {
            let s = signed(srim_minus_poly(d, parity), eps);
            term = term.mul(&multinomial(&s, &[e as i64]).unwrap());
        }
        term
    });
    let plus_factor = partition_series(order, 1, |lam| {
        let mut term = QPoly::one();
        for &(d, e) in lam.parts() {
            let s = signed(srim_plus_poly(d, parity), eps);
            term = term.mul(&multinomial(&s, &[-(e as i64)]).unwrap());
        }
        term
    });
    let lhs = minus_factor.mul(&plus_factor);
    let rhs = one_minus_x(order).pow(-(eps as i64)).expect("unit");
    (lhs, rhs)
}

pub fn verify_tsts(eps: i8, parity: Parity, order: usize) -> IdentityReport {
    let (lhs, rhs) = tsts_sides(eps, parity, order);
    IdentityReport {
        id: "tsts".into(),
        epsilon: eps,
        parity: Some(parity_name(parity)),
        r: None,
        p: None,
        q: None,
        max_degree: order,
        status: compare_series(&lhs, &rhs),
    }
}

/// Family selector for the signed-weight partition identities.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum T2Family {
    SdimMinus,
    SrimMinus,
}

/// Sides of the signed-weight identities: partition sums of `T2^eps`
/// weights of the self-dual or self-reciprocal counts against their
/// closed rational forms.
pub fn t2_family_sides(
    family: T2Family,
    eps: i8,
    parity: Parity,
    order: usize,
) -> (TruncSeries<QPoly>, TruncSeries<QPoly>) {
    let weights = |d: u32| match family {
        T2Family::SdimMinus => sdim_minus_poly(d),
        T2Family::SrimMinus => srim_minus_poly(d, parity),
    };
    let lhs = partition_series(order, 1, |lam| {
        let mut term = QPoly::one();
        for &(d, e) in lam.parts() {
            term = term.mul(&t2_eps(&weights(d), e, eps));
        }
        term
    });
    let rhs = match family {
        T2Family::SdimMinus => {
            let num = one_plus_x(order).mul(&one_plus_qx(order));
            let den = one_minus_x(order).mul(&one_minus_qx(order));
            ratio_series(num, den, eps)
        }
        T2Family::SrimMinus => match parity {
            Parity::Odd => ratio_series(one_minus_x(order), one_minus_qx(order), eps),
            Parity::Even => ratio_series(TruncSeries::one(order), one_minus_qx(order), eps),
        },
    };
    (lhs, rhs)
}

pub fn verify_t2_family(
    family: T2Family,
    eps: i8,
    parity: Parity,
    order: usize,
) -> IdentityReport {
    let (lhs, rhs) = t2_family_sides(family, eps, parity, order);
    IdentityReport {
        id: match family {
            T2Family::SdimMinus => "t2-sdim".into(),
            T2Family::SrimMinus => "t2-srim".into(),
        },
        epsilon: eps,
        parity: match family {
            T2Family::SdimMinus => None,
            T2Family::SrimMinus => Some(parity_name(parity)),
        },
        r: None,
        p: None,
        q: None,
        max_degree: order,
        status: compare_series(&lhs, &rhs),
    }
}

/// Family selector for the master identities.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MasterFamily {
    APlus,
    AMinus,
    C,
}

impl MasterFamily {
    pub fn id(self) -> &'static str {
        match self {
            MasterFamily::APlus => "master-aplus",
            MasterFamily::AMinus => "master-aminus",
            MasterFamily::C => "master-c",
        }
    }
}

/// Sides of the symbolic master identities: partition sums over the
/// infinite-product exponents against the closed products of rank `r+1`.
pub fn master_sides(
    family: MasterFamily,
    eps: i8,
    r: u32,
    order: usize,
) -> (TruncSeries<QPoly>, TruncSeries<QPoly>) {
    let exponent = |d: u32| match family {
        MasterFamily::APlus => fgl_exponent_a(Sign::Plus, r + 1, d),
        MasterFamily::AMinus => fgl_exponent_a(Sign::Minus, r + 1, d),
        MasterFamily::C => product_exponent_c(r, d),
    };
    let lhs = partition_series(order, 1, |lam| {
        let mut term = QPoly::one();
        for &(d, e) in lam.parts() {
            let s = signed(exponent(d), eps);
            term = term.mul(&multinomial(&s, &[-(e as i64)]).unwrap());
        }
        term
    });
    let closed = match family {
        MasterFamily::APlus => fgl_product(Sign::Plus, r + 1, order),
        MasterFamily::AMinus => fgl_product(Sign::Minus, r + 1, order),
        MasterFamily::C => fsp_closed(r + 1, order),
    };
    let rhs = closed.pow(eps as i64).expect("unit constant");
    (lhs, rhs)
}

pub fn verify_master(family: MasterFamily, eps: i8, r: u32, order: usize) -> IdentityReport {
    let (lhs, rhs) = master_sides(family, eps, r, order);
    IdentityReport {
        id: family.id().into(),
        epsilon: eps,
        parity: None,
        r: Some(r),
        p: None,
        q: None,
        max_degree: order,
        status: compare_series(&lhs, &rhs),
    }
}

/// Numeric p-primary master identities at concrete `(p, q)`: the same
/// partition sums with p-part exponents, against the exponential forms.
pub fn master_p_sides(
    family: MasterFamily,
    eps: i8,
    r: u32,
    ctx: &PrimaryParams,
    order: usize,
) -> (TruncSeries<BigRat>, TruncSeries<BigRat>) {
    let exponent = |d: u32| match family {
        MasterFamily::APlus => crate::genfun::fgl_exponent_a_p(Sign::Plus, r + 1, d, ctx),
        MasterFamily::AMinus => crate::genfun::fgl_exponent_a_p(Sign::Minus, r + 1, d, ctx),
        MasterFamily::C => {
            crate::algebra::rat_int(crate::genfun::product_exponent_c_p(r, d, ctx))
        }
    };
    let mut lhs = TruncSeries::one(order);
    for n in 1..=order {
        let mut sum = rat(0);
        for lam in partitions_of(n as u32) {
            let mut term = rat(1);
            for &(d, e) in lam.parts() {
                let mut s = exponent(d);
                if eps == -1 {
                    s = -s;
                }
                term *= multinomial(&s, &[-(e as i64)]).unwrap();
            }
            sum += term;
        }
        lhs = lhs.add(&TruncSeries::monomial(sum, n, order));
    }
    // Right sides are the exponential expressions of the p-part weights.
    let rhs = match family {
        MasterFamily::C => {
            let mut arg = TruncSeries::zero(order);
            for n in 1..=order {
                let w = crate::algebra::rat_int(
                    ctx.p_part_qn_pow(n as u32, 1, r) - ctx.p_part_qn_pow(n as u32, -1, r),
                ) * BigRat::new(BigInt::from(eps), BigInt::from(2 * n as i64));
                arg = arg.add(&TruncSeries::monomial(w, n, order));
            }
            arg.exp().expect("zero constant")
        }
        MasterFamily::APlus | MasterFamily::AMinus => {
            let unit = |n: u32| -> i64 {
                match family {
                    MasterFamily::APlus => 1,
                    _ => {
                        if n % 2 == 0 {
                            1
                        } else {
                            -1
                        }
                    }
                }
            };
            let mut arg = TruncSeries::zero(order);
            for n in 1..=order {
                let u = unit(n as u32);
                let w = crate::algebra::rat_int(ctx.p_part_qn_pow(n as u32, -u, r))
                    * BigRat::new(BigInt::from(-(eps as i64) * u), BigInt::from(n as i64));
                arg = arg.add(&TruncSeries::monomial(w, n, order));
            }
            arg.exp().expect("zero constant")
        }
    };
    (lhs, rhs)
}

pub fn verify_master_p(
    family: MasterFamily,
    eps: i8,
    r: u32,
    ctx: &PrimaryParams,
    order: usize,
) -> IdentityReport {
    let (lhs, rhs) = master_p_sides(family, eps, r, ctx, order);
    IdentityReport {
        id: format!("{}-p", family.id()),
        epsilon: eps,
        parity: None,
        r: Some(r),
        p: Some(ctx.p()),
        q: Some(u64::try_from(ctx.q()).unwrap_or(0)),
        max_degree: order,
        status: compare_series(&lhs, &rhs),
    }
}

/// The binomial partition lemma: `sum_{lambda |- n} binom(m; E(lambda))`
/// equals the weak-composition count `binom(-m; -n)` for every `n` up to
/// the bound.
pub fn verify_binomial_lemma(m: &QPoly, n_max: usize) -> IdentityReport {
    let lhs = partition_series(n_max, 1, |lam| {
        let ks: Vec<i64> = lam.multiplicities().iter().map(|&e| e as i64).collect();
        multinomial(m, &ks).unwrap()
    });
    let mut rhs = TruncSeries::one(n_max);
    for n in 1..=n_max {
        rhs = rhs.add(&TruncSeries::monomial(
            multinomial(&m.neg(), &[-(n as i64)]).unwrap(),
            n,
            n_max,
        ));
    }
    IdentityReport {
        id: "basic".into(),
        epsilon: 1,
        parity: None,
        r: None,
        p: None,
        q: None,
        max_degree: n_max,
        status: compare_series(&lhs, &rhs),
    }
}

/// Identity ids accepted by [`verify_selected`].
pub const IDENTITY_IDS: &[&str] = &[
    "basic",
    "gl",
    "gu",
    "tsts",
    "t2-sdim",
    "t2-srim",
    "master-aplus",
    "master-aminus",
    "master-c",
    "master-p",
];

/// Run the full symbolic suite (plus small p-primary master spot checks)
/// at the given degree bound.
pub fn verify_all(order: usize) -> Vec<IdentityReport> {
    verify_selected(IDENTITY_IDS, order, 4)
}

/// Run the named identities; master families sweep `r = 1..=r_max`.
pub fn verify_selected(ids: &[&str], order: usize, r_max: u32) -> Vec<IdentityReport> {
    let mut out = Vec::new();
    for &id in ids {
        match id {
            "basic" => {
                out.push(verify_binomial_lemma(&QPoly::q(), order));
                out.push(verify_binomial_lemma(&QPoly::from_ints(&[-1, 1]), order));
            }
            "gl" => {
                for eps in [1, -1] {
                    out.push(verify_gl(eps, order));
                }
            }
            "gu" => {
                for eps in [1, -1] {
                    out.push(verify_gu(eps, order));
                }
            }
            "tsts" => {
                for eps in [1, -1] {
                    for parity in [Parity::Odd, Parity::Even] {
                        out.push(verify_tsts(eps, parity, order));
                    }
                }
            }
            "t2-sdim" => {
                for eps in [1, -1] {
                    out.push(verify_t2_family(T2Family::SdimMinus, eps, Parity::Odd, order));
                }
            }
            "t2-srim" => {
                for eps in [1, -1] {
                    for parity in [Parity::Odd, Parity::Even] {
                        out.push(verify_t2_family(T2Family::SrimMinus, eps, parity, order));
                    }
                }
            }
            "master-aplus" | "master-aminus" | "master-c" => {
                let family = match id {
                    "master-aplus" => MasterFamily::APlus,
                    "master-aminus" => MasterFamily::AMinus,
                    _ => MasterFamily::C,
                };
                for r in 1..=r_max {
                    for eps in [1, -1] {
                        out.push(verify_master(family, eps, r, order));
                    }
                }
            }
            "master-p" => {
                for (p, q) in [(2u64, 3u64), (3, 2)] {
                    let ctx = PrimaryParams::new(p, q).unwrap();
                    for family in [MasterFamily::APlus, MasterFamily::AMinus, MasterFamily::C] {
                        for r in 1..=r_max.min(3) {
                            for eps in [1, -1] {
                                out.push(verify_master_p(family, eps, r, &ctx, order.min(6)));
                            }
                        }
                    }
                }
            }
            other => panic!("unknown identity id {other:?}"),
        }
    }
    out
}
