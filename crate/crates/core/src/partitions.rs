//! Integer partitions, multisets of pairs, and the sequence transform that
//! convolves a counting sequence with a coefficient sequence evaluated at
//! powers of `q`. This is the combinatorial engine behind the recurrences
//! and the partition identities.

use crate::algebra::{multinomial, rat_int, Coeff, QPoly};
use num_bigint::BigInt;
use num_traits::One;
use std::collections::BTreeMap;

/// Integer partition stored as `(value, multiplicity)` pairs with strictly
/// increasing values.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Partition {
    parts: Vec<(u32, u32)>,
    n: u64,
}

impl Partition {
    pub fn from_nonincreasing(seq: &[u32]) -> Partition {
        let mut parts: Vec<(u32, u32)> = Vec::new();
        for &v in seq.iter().rev() {
            assert!(v >= 1, "partition parts must be positive");
            match parts.last_mut() {
                Some((value, mult)) if *value == v => *mult += 1,
                _ => parts.push((v, 1)),
            }
        }
        let n = seq.iter().map(|&v| v as u64).sum();
        Partition { parts, n }
    }

    pub fn empty() -> Partition {
        Partition {
            parts: Vec::new(),
            n: 0,
        }
    }

    /// The partitioned integer `n`.
    pub fn n(&self) -> u64 {
        self.n
    }

    /// `(value, multiplicity)` pairs, ascending values.
    pub fn parts(&self) -> &[(u32, u32)] {
        &self.parts
    }

    /// Number of parts counted with multiplicity.
    pub fn num_parts(&self) -> u32 {
        self.parts.iter().map(|&(_, m)| m).sum()
    }

    pub fn multiplicity(&self, value: u32) -> u32 {
        self.parts
            .iter()
            .find(|&&(v, _)| v == value)
            .map_or(0, |&(_, m)| m)
    }

    /// The multiset of multiplicities.
    pub fn multiplicities(&self) -> Vec<u32> {
        self.parts.iter().map(|&(_, m)| m).collect()
    }

    /// The partition as a nonincreasing sequence of parts.
    pub fn nonincreasing(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.num_parts() as usize);
        for &(v, m) in self.parts.iter().rev() {
            out.extend(std::iter::repeat(v).take(m as usize));
        }
        out
    }

    /// Conjugacy class length of this cycle type in the symmetric group:
    /// `n! / prod(E(b)! * b^E(b))`.
    pub fn class_size(&self) -> BigInt {
        let mut denom = BigInt::one();
        for &(v, m) in &self.parts {
            for j in 2..=m as u64 {
                denom *= BigInt::from(j);
            }
            denom *= BigInt::from(v as u64).pow(m);
        }
        let mut num = BigInt::one();
        for j in 2..=self.n {
            num *= BigInt::from(j);
        }
        let (quot, rem) = num_integer::Integer::div_rem(&num, &denom);
        assert!(num_traits::Zero::is_zero(&rem));
        quot
    }
}

/// All partitions of `n`, in reverse lexicographic order on nonincreasing
/// part sequences (so `[n]` first and all-ones last).
pub fn partitions_of(n: u32) -> Partitions {
    Partitions {
        current: if n == 0 { Vec::new() } else { vec![n] },
        fresh: true,
    }
}

pub struct Partitions {
    current: Vec<u32>,
    fresh: bool,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.fresh {
            self.fresh = false;
            return Some(Partition::from_nonincreasing(&self.current));
        }
        // Absorb the trailing run of 1s, decrement the last part > 1, and
        // redistribute greedily.
        let mut rem = 0u32;
        while matches!(self.current.last(), Some(1)) {
            self.current.pop();
            rem += 1;
        }
        let last = self.current.last_mut()?;
        *last -= 1;
        rem += 1;
        let cap = *last;
        while rem > cap {
            self.current.push(cap);
            rem -= cap;
        }
        self.current.push(rem);
        Some(Partition::from_nonincreasing(&self.current))
    }
}

/// Number of partitions of `n` (by enumeration; test-scale only).
pub fn partition_count(n: u32) -> u64 {
    partitions_of(n).count() as u64
}

/// Multiset of pairs `(m, d)` with multiplicities; the total weight is
/// `sum m*d*e(m,d)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PairMultiset {
    pairs: Vec<((u32, u32), u32)>,
    weight: u64,
}

impl PairMultiset {
    pub fn pairs(&self) -> &[((u32, u32), u32)] {
        &self.pairs
    }

    pub fn weight(&self) -> u64 {
        self.weight
    }

    /// Multiplicities grouped by the second component `d`, ascending `d`;
    /// the inner lists keep the enumeration order of the pairs.
    pub fn grouped_by_d(&self) -> BTreeMap<u32, Vec<u32>> {
        let mut map: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
        for &((_, d), e) in &self.pairs {
            map.entry(d).or_default().push(e);
        }
        map
    }
}

/// All multisets of pairs of total weight `n`, exactly once each, in a
/// fixed deterministic order. The stream is bounded-memory and can be
/// recreated at will.
pub fn pair_multisets(n: u32) -> PairMultisets {
    let mut pairs = Vec::new();
    for m in 1..=n {
        for d in 1..=n {
            if (m as u64) * (d as u64) <= n as u64 {
                pairs.push((m, d));
            }
        }
    }
    // Heaviest pairs first so the weight-1 pair comes last and absorbs any
    // remainder; ties broken by descending first component.
    pairs.sort_by_key(|&(m, d)| (std::cmp::Reverse((m as u64) * (d as u64)), std::cmp::Reverse(m)));
    PairMultisets {
        n: n as u64,
        pairs,
        stack: Vec::new(),
        state: WalkState::Fresh,
    }
}

pub struct PairMultisets {
    n: u64,
    pairs: Vec<(u32, u32)>,
    stack: Vec<Frame>,
    state: WalkState,
}

#[derive(Clone, Copy)]
struct Frame {
    idx: usize,
    mult: u64,
    rem_after: u64,
}

enum WalkState {
    Fresh,
    Running,
    Done,
}

impl PairMultisets {
    fn weight(&self, idx: usize) -> u64 {
        let (m, d) = self.pairs[idx];
        m as u64 * d as u64
    }

    /// Extend the stack to a leaf, assigning maximal multiplicities.
    fn descend(&mut self, mut idx: usize, mut rem: u64) {
        while idx < self.pairs.len() {
            let w = self.weight(idx);
            let mult = rem / w;
            rem -= mult * w;
            self.stack.push(Frame {
                idx,
                mult,
                rem_after: rem,
            });
            idx += 1;
        }
    }

    fn emit(&self) -> PairMultiset {
        let pairs: Vec<((u32, u32), u32)> = self
            .stack
            .iter()
            .filter(|f| f.mult > 0)
            .map(|f| (self.pairs[f.idx], f.mult as u32))
            .collect();
        PairMultiset {
            pairs,
            weight: self.n,
        }
    }

    fn at_valid_leaf(&self) -> bool {
        self.stack.last().map_or(self.n == 0, |f| f.rem_after == 0)
    }
}

impl Iterator for PairMultisets {
    type Item = PairMultiset;

    fn next(&mut self) -> Option<PairMultiset> {
        loop {
            match self.state {
                WalkState::Done => return None,
                WalkState::Fresh => {
                    self.state = WalkState::Running;
                    let n = self.n;
                    self.descend(0, n);
                    if self.n == 0 {
                        self.state = WalkState::Done;
                        return Some(self.emit());
                    }
                }
                WalkState::Running => {
                    // Backtrack: lower the deepest positive multiplicity.
                    loop {
                        match self.stack.last_mut() {
                            None => {
                                self.state = WalkState::Done;
                                return None;
                            }
                            Some(f) if f.mult == 0 => {
                                self.stack.pop();
                            }
                            Some(f) => {
                                f.mult -= 1;
                                let w = self.pairs[f.idx].0 as u64 * self.pairs[f.idx].1 as u64;
                                f.rem_after += w;
                                let (idx, rem) = (f.idx + 1, f.rem_after);
                                self.descend(idx, rem);
                                break;
                            }
                        }
                    }
                }
            }
            if self.at_valid_leaf() {
                return Some(self.emit());
            }
        }
    }
}

/// The transform of Definition-style pair-multiset convolution: the n-th
/// output coefficient sums, over all pair multisets of weight n, the
/// product of multinomials of `s(d)` over the multiplicities sharing that
/// `d` with the product of `a(m, d)^e` factors, where `a(m, d)` is the m-th
/// input coefficient with `q` replaced by `q^d`.
pub fn ts_transform<C: Coeff>(
    mut s: impl FnMut(u32) -> C,
    mut a: impl FnMut(u32, u32) -> C,
    order: usize,
) -> crate::algebra::TruncSeries<C> {
    let mut coeffs = Vec::with_capacity(order + 1);
    coeffs.push(C::one());
    let mut s_cache: BTreeMap<u32, C> = BTreeMap::new();
    let mut a_cache: BTreeMap<(u32, u32), C> = BTreeMap::new();
    for n in 1..=order {
        let mut total = C::zero();
        for mu in pair_multisets(n as u32) {
            let mut term = C::one();
            for (d, mults) in mu.grouped_by_d() {
                let sd = s_cache.entry(d).or_insert_with(|| s(d)).clone();
                let ks: Vec<i64> = mults.iter().map(|&e| e as i64).collect();
                term = term.mul(&multinomial(&sd, &ks).expect("positive multiplicities"));
                if term.is_zero() {
                    break;
                }
            }
            if term.is_zero() {
                continue;
            }
            for &((m, d), e) in mu.pairs() {
                let base = a_cache.entry((m, d)).or_insert_with(|| a(m, d)).clone();
                for _ in 0..e {
                    term = term.mul(&base);
                }
            }
            total = total.add(&term);
        }
        coeffs.push(total);
    }
    crate::algebra::TruncSeries::from_coeffs(coeffs)
}

/// Signed partition weight `T2^eps(m, n)`: computed both as the partition
/// sum `eps^n * sum_{lambda |- n} 2^r(lambda) binom(m; E(lambda))` and as
/// its closed-form expansion in binomials; the two must agree.
pub fn t2_eps(m: &QPoly, n: u32, eps: i8) -> QPoly {
    assert!(n >= 1);
    assert!(eps == 1 || eps == -1);
    let mut by_partitions = QPoly::zero();
    for lam in partitions_of(n) {
        let ks: Vec<i64> = lam.multiplicities().iter().map(|&e| e as i64).collect();
        let b = multinomial(m, &ks).expect("positive multiplicities");
        let two_r = rat_int(BigInt::from(2).pow(lam.num_parts()));
        by_partitions = by_partitions.add(&b.scale(&two_r));
    }
    if eps == -1 && n % 2 == 1 {
        by_partitions = by_partitions.neg();
    }
    let mut closed = QPoly::zero();
    for i in 1..=n {
        let outer = multinomial(
            &QPoly::from_int(n as i64 - 1),
            &[eps as i64 * (n as i64 - i as i64)],
        )
        .unwrap();
        let inner = multinomial(m, &[eps as i64 * i as i64]).unwrap();
        let two_i = rat_int(BigInt::from(2).pow(i));
        closed = closed.add(&outer.mul(&inner).scale(&two_i));
    }
    assert_eq!(
        by_partitions, closed,
        "partition sum and closed form of T2 disagree at n={n}, eps={eps}"
    );
    closed
}

/// All sign assignments of the given length, in binary order: bit k of
/// the counter set means -1 in position k.
pub fn sign_functions(len: u32) -> impl Iterator<Item = Vec<i8>> {
    (0..(1u64 << len)).map(move |bits| {
        (0..len)
            .map(|k| if bits >> k & 1 == 1 { -1 } else { 1 })
            .collect()
    })
}

/// Ordered partitions (compositions) of `n`, each as a part sequence.
pub fn ordered_partitions(n: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(rem: u32, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rem == 0 {
            out.push(current.clone());
            return;
        }
        for first in (1..=rem).rev() {
            current.push(first);
            rec(rem - first, current, out);
            current.pop();
        }
    }
    rec(n, &mut current, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{poly_multinomial, rat, ratio, TruncSeries};
    use crate::counting::{im_poly, srim_minus_poly, Parity};

    #[test]
    fn partition_counts() {
        let expect = [1u64, 1, 2, 3, 5, 7, 11, 15, 22, 30];
        for (n, &want) in expect.iter().enumerate() {
            assert_eq!(partition_count(n as u32), want, "p({n})");
        }
    }

    #[test]
    fn partition_order_is_reverse_lex() {
        let seqs: Vec<Vec<u32>> = partitions_of(4).map(|p| p.nonincreasing()).collect();
        assert_eq!(
            seqs,
            vec![
                vec![4],
                vec![3, 1],
                vec![2, 2],
                vec![2, 1, 1],
                vec![1, 1, 1, 1]
            ]
        );
    }

    #[test]
    fn partition_of_zero() {
        let all: Vec<Partition> = partitions_of(0).collect();
        assert_eq!(all, vec![Partition::empty()]);
    }

    #[test]
    fn partitions_of_seven_contains_example() {
        let target = Partition::from_nonincreasing(&[2, 2, 1, 1, 1]);
        assert!(partitions_of(7).any(|p| p == target));
        assert_eq!(target.multiplicity(1), 3);
        assert_eq!(target.multiplicity(2), 2);
        assert_eq!(target.num_parts(), 5);
    }

    #[test]
    fn pair_multiset_counts() {
        assert_eq!(pair_multisets(0).count(), 1);
        assert_eq!(pair_multisets(1).count(), 1);
        assert_eq!(pair_multisets(2).count(), 3);
        assert_eq!(pair_multisets(3).count(), 5);
        assert_eq!(pair_multisets(4).count(), 11);
    }

    #[test]
    fn pair_multisets_are_distinct_and_weighted() {
        for n in 0..=8u32 {
            let all: Vec<PairMultiset> = pair_multisets(n).collect();
            for mu in &all {
                let w: u64 = mu
                    .pairs()
                    .iter()
                    .map(|&((m, d), e)| m as u64 * d as u64 * e as u64)
                    .sum();
                assert_eq!(w, n as u64);
            }
            for i in 0..all.len() {
                for j in i + 1..all.len() {
                    assert_ne!(all[i], all[j]);
                }
            }
        }
    }

    #[test]
    fn bijection_with_partition_tuples() {
        // sum over partitions of n of prod p(E(lambda, b)) = |M_n|
        for n in 0..=10u32 {
            let lhs: u64 = partitions_of(n)
                .map(|lam| {
                    lam.multiplicities()
                        .iter()
                        .map(|&e| partition_count(e))
                        .product::<u64>()
                })
                .sum();
            assert_eq!(lhs, pair_multisets(n).count() as u64, "n={n}");
        }
    }

    #[test]
    fn class_sizes() {
        assert_eq!(
            Partition::from_nonincreasing(&[1, 1, 1]).class_size(),
            1.into()
        );
        assert_eq!(Partition::from_nonincreasing(&[5]).class_size(), 24.into());
        assert_eq!(
            Partition::from_nonincreasing(&[2, 1]).class_size(),
            3.into()
        );
    }

    #[test]
    fn basic_binomial_lemma() {
        // sum_{lambda |- n} binom(m; E(lambda)) = binom(-m; -n) for m = q.
        let m = QPoly::q();
        for n in 1..=8u32 {
            let mut lhs = QPoly::zero();
            for lam in partitions_of(n) {
                let ks: Vec<i64> = lam.multiplicities().iter().map(|&e| e as i64).collect();
                lhs = lhs.add(&poly_multinomial(&m, &ks).unwrap());
            }
            let rhs = poly_multinomial(&m.neg(), &[-(n as i64)]).unwrap();
            assert_eq!(lhs, rhs, "n={n}");
        }
    }

    #[test]
    fn transform_of_one_minus_x_im() {
        // With the irreducible counts as weights, 1 - x maps to
        // (1 - qx)/(1 - x).
        let order = 8;
        let minus_one = QPoly::from_int(-1);
        let got = ts_transform(
            |d| im_poly(d),
            |m, _d| if m == 1 { minus_one.clone() } else { QPoly::zero() },
            order,
        );
        let want = TruncSeries::one_minus(&QPoly::q(), 1, order)
            .mul(&TruncSeries::one_minus(&QPoly::one(), 1, order).inv().unwrap());
        assert_eq!(got, want);
    }

    #[test]
    fn transform_of_zero_sequence_is_one() {
        let got = ts_transform(|_| QPoly::zero(), |_, _| QPoly::one(), 6);
        assert!(got.is_one());
    }

    #[test]
    fn transform_multiplicative_in_weights() {
        // T_{S+S'}(1-x) = T_S(1-x) * T_{S'}(1-x)
        let s1 = |d: u32| QPoly::from_ints(&[d as i64, 1]);
        let s2 = |d: u32| QPoly::from_ints(&[1, (d % 3) as i64, 2]);
        let a = |m: u32, _d: u32| {
            if m == 1 {
                QPoly::from_int(-1)
            } else {
                QPoly::zero()
            }
        };
        let order = 7;
        let lhs = ts_transform(|d| s1(d).add(&s2(d)), a, order);
        let rhs = ts_transform(s1, a, order).mul(&ts_transform(s2, a, order));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn transform_closed_forms() {
        // The four partition-sum expansions of T_S((1 +- x^k)^{+-1}).
        let order = 10;
        let suts: Vec<(&str, Box<dyn Fn(u32) -> QPoly>)> = vec![
            ("im", Box::new(im_poly)),
            ("srim-odd", Box::new(|d| srim_minus_poly(d, Parity::Odd))),
            ("srim-even", Box::new(|d| srim_minus_poly(d, Parity::Even))),
        ];
        for (name, s) in &suts {
            for k in [1usize, 2] {
                for plus in [false, true] {
                    for inverse in [false, true] {
                        let a = |m: u32, _d: u32| {
                            // coefficients of (1 +- x^k)^{+-1}
                            if m as usize % k != 0 {
                                return QPoly::zero();
                            }
                            let j = m as usize / k;
                            let c: i64 = match (plus, inverse) {
                                (true, false) => {
                                    if j == 1 {
                                        1
                                    } else {
                                        0
                                    }
                                }
                                (false, false) => {
                                    if j == 1 {
                                        -1
                                    } else {
                                        0
                                    }
                                }
                                (true, true) => {
                                    if j % 2 == 0 {
                                        1
                                    } else {
                                        -1
                                    }
                                }
                                (false, true) => 1,
                            };
                            QPoly::from_int(c)
                        };
                        let got = ts_transform(|d| s(d), a, order);
                        // partition-sum side
                        let mut want = TruncSeries::one(order);
                        for n in 1..=order {
                            if (k * n) > order {
                                break;
                            }
                            let mut sum = QPoly::zero();
                            for lam in partitions_of(n as u32) {
                                let mut term = QPoly::one();
                                for &(d, e) in lam.parts() {
                                    let sd = s(d);
                                    let signed = match (plus, inverse) {
                                        (false, true) => {
                                            poly_multinomial(&sd.neg(), &[-(e as i64)]).unwrap()
                                        }
                                        (false, false) => {
                                            poly_multinomial(&sd, &[-(e as i64)]).unwrap()
                                        }
                                        (true, true) => {
                                            poly_multinomial(&sd.neg(), &[e as i64]).unwrap()
                                        }
                                        (true, false) => {
                                            poly_multinomial(&sd, &[e as i64]).unwrap()
                                        }
                                    };
                                    term = term.mul(&signed);
                                }
                                sum = sum.add(&term);
                            }
                            want = want.add(&TruncSeries::monomial(sum, k * n, order));
                        }
                        assert_eq!(got, want, "{name} k={k} plus={plus} inv={inverse}");
                    }
                }
            }
        }
    }

    #[test]
    fn t2_values() {
        assert_eq!(t2_eps(&QPoly::q(), 1, 1), QPoly::from_ints(&[0, 2]));
        assert_eq!(t2_eps(&QPoly::q(), 1, -1), QPoly::from_ints(&[0, -2]));
        assert_eq!(t2_eps(&QPoly::q(), 2, -1), QPoly::from_ints(&[0, 0, 2]));
        assert_eq!(t2_eps(&QPoly::q(), 2, 1), QPoly::from_ints(&[0, 0, 2]));
        // (4/3)q^3 + (2/3)q
        assert_eq!(
            t2_eps(&QPoly::q(), 3, 1),
            QPoly::from_coeffs(vec![rat(0), ratio(2, 3), rat(0), ratio(4, 3)])
        );
        // (2/3)q^4 + (4/3)q^2
        assert_eq!(
            t2_eps(&QPoly::q(), 4, 1),
            QPoly::from_coeffs(vec![rat(0), rat(0), ratio(4, 3), rat(0), ratio(2, 3)])
        );
    }

    #[test]
    fn ordered_partition_counts() {
        for n in 1..=8u32 {
            assert_eq!(ordered_partitions(n).len() as u64, 1u64 << (n - 1));
        }
    }
}
