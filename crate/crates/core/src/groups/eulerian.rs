use super::group::SymplecticGroup;
use crate::counting::{euler_phi, is_prime, padic_val};
use crate::error::{Error, Result};
use crate::partitions::partitions_of;
use num_bigint::BigInt;
use num_traits::One;
use std::collections::{HashMap, HashSet};

/// Finite abelian group presented by invariant factors `d_1 | d_2 | ...`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AbelianGroup {
    factors: Vec<u64>,
}

impl AbelianGroup {
    pub fn new(factors: Vec<u64>) -> Result<AbelianGroup> {
        for w in factors.windows(2) {
            if w[1] % w[0] != 0 {
                return Err(Error::BadInvariantFactors);
            }
        }
        if factors.iter().any(|&d| d < 2) {
            return Err(Error::BadInvariantFactors);
        }
        Ok(AbelianGroup { factors })
    }

    pub fn trivial() -> AbelianGroup {
        AbelianGroup {
            factors: Vec::new(),
        }
    }

    pub fn cyclic(n: u64) -> AbelianGroup {
        if n == 1 {
            AbelianGroup::trivial()
        } else {
            AbelianGroup { factors: vec![n] }
        }
    }

    pub fn invariant_factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn order(&self) -> u64 {
        self.factors.iter().product()
    }

    fn prime_divisors(&self) -> Vec<u64> {
        let mut primes: Vec<u64> = Vec::new();
        for &d in &self.factors {
            let mut rest = d;
            let mut p = 2;
            while p * p <= rest {
                if rest % p == 0 {
                    if !primes.contains(&p) {
                        primes.push(p);
                    }
                    while rest % p == 0 {
                        rest /= p;
                    }
                }
                p += 1;
            }
            if rest > 1 && !primes.contains(&rest) {
                primes.push(rest);
            }
        }
        primes.sort_unstable();
        primes
    }

    /// Rank of the Sylow p-subgroup.
    pub fn p_rank(&self, p: u64) -> u32 {
        self.factors.iter().filter(|&&d| d % p == 0).count() as u32
    }

    fn phi_zr_at_p(&self, r: u32, p: u64) -> BigInt {
        let m: u32 = self
            .factors
            .iter()
            .map(|&d| padic_val(d, p))
            .sum();
        let d = self.p_rank(p);
        let mut acc = BigInt::from(p).pow(r * (m - d));
        for j in 0..d {
            acc *= BigInt::from(p).pow(r) - BigInt::from(p).pow(j);
        }
        acc
    }

    /// Number of epimorphisms from the free abelian group of rank `r`:
    /// the product over primes of `|B_p|^r prod_j (1 - p^(j-r))`.
    pub fn phi_zr(&self, r: u32) -> BigInt {
        assert!(r >= 1);
        let mut acc = BigInt::one();
        for p in self.prime_divisors() {
            acc *= self.phi_zr_at_p(r, p);
        }
        acc
    }

    /// Number of epimorphisms from `Z x Z_p^(r-1)`: full rank at `p`,
    /// cyclic quotients away from `p`.
    pub fn phi_zpr(&self, r: u32, p: u64) -> BigInt {
        assert!(r >= 1 && is_prime(p));
        let mut acc = BigInt::one();
        for s in self.prime_divisors() {
            if s == p {
                acc *= self.phi_zr_at_p(r, s);
            } else if self.p_rank(s) <= 1 {
                let part: u64 = self
                    .factors
                    .iter()
                    .map(|&d| s.pow(padic_val(d, s)))
                    .product();
                acc *= BigInt::from(euler_phi(part).unwrap());
            } else {
                return BigInt::from(0);
            }
        }
        acc
    }

    fn element_count(&self) -> u64 {
        self.order().max(1)
    }

    fn add(&self, a: u64, b: u64) -> u64 {
        let mut out = 0u64;
        let mut scale = 1u64;
        let (mut x, mut y) = (a, b);
        for &d in &self.factors {
            out += ((x + y) % d) * scale;
            x /= d;
            y /= d;
            scale *= d;
        }
        out
    }

    fn element_order(&self, a: u64) -> u64 {
        let mut ord = 1u64;
        let mut x = a;
        for &d in &self.factors {
            let c = x % d;
            x /= d;
            let o = d / num_integer::Integer::gcd(&c, &d);
            ord = num_integer::Integer::lcm(&ord, &o);
        }
        ord
    }

    fn generates(&self, gens: &[u64]) -> bool {
        let n = self.element_count() as usize;
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut stack = vec![0u64];
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for &g in gens {
                let y = self.add(x, g);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        count == n
    }

    /// Count generating r-tuples by exhaustive closure, the independent
    /// oracle for [`AbelianGroup::phi_zr`]. Desk scale only.
    pub fn epi_count_direct(&self, r: u32) -> u64 {
        let n = self.element_count();
        let mut gens = vec![0u64; r as usize];
        let mut count = 0u64;
        loop {
            if self.generates(&gens) {
                count += 1;
            }
            // odometer over r slots
            let mut i = 0;
            loop {
                if i == r as usize {
                    return count;
                }
                gens[i] += 1;
                if gens[i] < n {
                    break;
                }
                gens[i] = 0;
                i += 1;
            }
        }
    }

    /// Direct count with slots beyond the first restricted to p-power
    /// order elements, the oracle for [`AbelianGroup::phi_zpr`].
    pub fn epi_count_direct_p(&self, r: u32, p: u64) -> u64 {
        let n = self.element_count();
        let p_power: Vec<u64> = (0..n)
            .filter(|&x| {
                let mut o = self.element_order(x);
                while o % p == 0 {
                    o /= p;
                }
                o == 1
            })
            .collect();
        let mut count = 0u64;
        let mut gens = vec![0u64; r as usize];
        fn rec(
            b: &AbelianGroup,
            slot: usize,
            n: u64,
            p_power: &[u64],
            gens: &mut Vec<u64>,
            count: &mut u64,
        ) {
            if slot == gens.len() {
                if b.generates(gens) {
                    *count += 1;
                }
                return;
            }
            if slot == 0 {
                for x in 0..n {
                    gens[0] = x;
                    rec(b, 1, n, p_power, gens, count);
                }
            } else {
                for &x in p_power {
                    gens[slot] = x;
                    rec(b, slot + 1, n, p_power, gens, count);
                }
            }
        }
        rec(self, 0, n, &p_power, &mut gens, &mut count);
        count
    }
}

/// All isomorphism types of abelian groups of order `n`, by combining
/// partitions of the prime exponents into invariant factors.
pub fn abelian_groups_of_order(n: u64) -> Vec<AbelianGroup> {
    assert!(n >= 1);
    if n == 1 {
        return vec![AbelianGroup::trivial()];
    }
    let mut rest = n;
    let mut primes: Vec<(u64, u32)> = Vec::new();
    let mut p = 2;
    while p * p <= rest {
        if rest % p == 0 {
            let mut e = 0;
            while rest % p == 0 {
                rest /= p;
                e += 1;
            }
            primes.push((p, e));
        }
        p += 1;
    }
    if rest > 1 {
        primes.push((rest, 1));
    }
    // choose a partition of each exponent, then align descending
    let choices: Vec<Vec<Vec<u32>>> = primes
        .iter()
        .map(|&(_, e)| {
            partitions_of(e)
                .map(|lam| lam.nonincreasing())
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut pick = vec![0usize; primes.len()];
    loop {
        let len = pick
            .iter()
            .zip(&choices)
            .map(|(&i, c)| c[i].len())
            .max()
            .unwrap();
        let mut factors = vec![1u64; len];
        for ((&(p, _), &i), c) in primes.iter().zip(&pick).zip(&choices) {
            for (j, &e) in c[i].iter().enumerate() {
                factors[j] *= p.pow(e);
            }
        }
        factors.reverse();
        out.push(AbelianGroup::new(factors).expect("aligned factors form a chain"));
        let mut i = 0;
        loop {
            if i == pick.len() {
                return out;
            }
            pick[i] += 1;
            if pick[i] < choices[i].len() {
                break;
            }
            pick[i] = 0;
            i += 1;
        }
    }
}

/// Every subgroup of a small enumerated group, as sorted index lists.
pub fn all_subgroups(group: &SymplecticGroup) -> Vec<Vec<u32>> {
    assert!(group.len() <= 400, "subgroup lattice at desk scale only");
    let identity = group.identity_index();
    let closure = |gens: &[u32]| -> Vec<u32> {
        let mut seen = HashSet::new();
        seen.insert(identity);
        let mut stack = vec![identity];
        while let Some(x) = stack.pop() {
            for &g in gens {
                let y = group.mul_idx(x, g);
                if seen.insert(y) {
                    stack.push(y);
                }
            }
        }
        let mut v: Vec<u32> = seen.into_iter().collect();
        v.sort_unstable();
        v
    };
    let mut known: HashMap<Vec<u32>, ()> = HashMap::new();
    let trivial = vec![identity];
    known.insert(trivial.clone(), ());
    let mut queue = vec![trivial];
    while let Some(h) = queue.pop() {
        for g in 0..group.len() as u32 {
            if h.binary_search(&g).is_ok() {
                continue;
            }
            let mut gens = h.clone();
            gens.push(g);
            let k = closure(&gens);
            if !known.contains_key(&k) {
                known.insert(k.clone(), ());
                queue.push(k);
            }
        }
    }
    let mut out: Vec<Vec<u32>> = known.into_keys().collect();
    out.sort();
    out
}

/// Invariant factors of an abelian subgroup, reconstructed from torsion
/// counts; `None` if the members do not commute.
pub fn abelian_invariants(group: &SymplecticGroup, members: &[u32]) -> Option<AbelianGroup> {
    for (i, &a) in members.iter().enumerate() {
        for &b in &members[i + 1..] {
            if !group.commute(a, b) {
                return None;
            }
        }
    }
    let order = members.len() as u64;
    if order == 1 {
        return Some(AbelianGroup::trivial());
    }
    let orders: Vec<u64> = members
        .iter()
        .map(|&g| group.element_order(g) as u64)
        .collect();
    let mut per_prime: Vec<(u64, Vec<u32>)> = Vec::new();
    for p in prime_divisors_u64(order) {
        let m = padic_val(order, p);
        // s_k = log_p #{x : x^(p^k) = 1} determines the conjugate type
        let mut lambda_conj = Vec::new();
        let mut prev = 0u32;
        for k in 1..=m {
            let pk = p.pow(k);
            let count = orders.iter().filter(|&&o| pk % o == 0).count() as u64;
            let s = padic_val(count, p);
            lambda_conj.push(s - prev);
            prev = s;
            if s == m {
                break;
            }
        }
        // conjugate back: part i of lambda = #{k : lambda_conj[k] > i}
        let max_part = *lambda_conj.first().unwrap_or(&0);
        let lambda: Vec<u32> = (0..max_part)
            .map(|i| lambda_conj.iter().filter(|&&c| c > i).count() as u32)
            .collect();
        per_prime.push((p, lambda));
    }
    let len = per_prime
        .iter()
        .map(|(_, l)| l.len())
        .max()
        .unwrap_or(0);
    let mut factors = vec![1u64; len];
    for (p, lambda) in per_prime {
        for (j, &e) in lambda.iter().enumerate() {
            factors[j] *= p.pow(e);
        }
    }
    factors.reverse();
    let group_rec = AbelianGroup::new(factors).ok()?;
    assert_eq!(group_rec.order(), order, "reconstructed order");
    Some(group_rec)
}

fn prime_divisors_u64(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut rest = n;
    let mut p = 2;
    while p * p <= rest {
        if rest % p == 0 {
            out.push(p);
            while rest % p == 0 {
                rest /= p;
            }
        }
        p += 1;
    }
    if rest > 1 {
        out.push(rest);
    }
    out
}

/// Number of commuting r-tuples, recursively through centralizers.
pub fn hom_count(group: &SymplecticGroup, r: u32) -> BigInt {
    fn rec(group: &SymplecticGroup, r: u32, members: &[u32]) -> BigInt {
        if r == 0 {
            return BigInt::one();
        }
        let mut total = BigInt::from(0);
        for &g in members {
            let cent = group.centralizer(g, members);
            total += rec(group, r - 1, &cent);
        }
        total
    }
    let all: Vec<u32> = (0..group.len() as u32).collect();
    rec(group, r, &all)
}

/// The same count through the subgroup lattice: homomorphisms from the
/// free abelian group land in abelian subgroups, sorted by their image.
pub fn hom_count_via_subgroups(group: &SymplecticGroup, r: u32) -> BigInt {
    let mut total = BigInt::from(0);
    for members in all_subgroups(group) {
        if let Some(b) = abelian_invariants(group, &members) {
            total += b.phi_zr(r);
        }
    }
    total
}

/// Number of conjugation orbits of commuting r-tuples, by canonical forms.
pub fn commuting_tuple_class_count(group: &SymplecticGroup, r: u32) -> u64 {
    let all: Vec<u32> = (0..group.len() as u32).collect();
    let mut tuples: Vec<Vec<u32>> = vec![Vec::new()];
    for _ in 0..r {
        let mut next = Vec::new();
        for t in &tuples {
            let members: Vec<u32> = all
                .iter()
                .copied()
                .filter(|&h| t.iter().all(|&g| group.commute(g, h)))
                .collect();
            for h in members {
                let mut t2 = t.clone();
                t2.push(h);
                next.push(t2);
            }
        }
        tuples = next;
    }
    let mut canon = HashSet::new();
    for t in &tuples {
        let best = all
            .iter()
            .map(|&x| {
                t.iter()
                    .map(|&g| group.conjugate(g, x))
                    .collect::<Vec<u32>>()
            })
            .min()
            .unwrap();
        canon.insert(best);
    }
    canon.len() as u64
}

/// The two counting routes agree, and the normalized count of one rank
/// higher equals the class count of commuting r-tuples.
pub fn hom_count_check(group: &SymplecticGroup, r: u32) -> bool {
    let direct = hom_count(group, r);
    if direct != hom_count_via_subgroups(group, r) {
        return false;
    }
    let classes = commuting_tuple_class_count(group, r);
    let up = hom_count(group, r + 1);
    up == BigInt::from(classes) * BigInt::from(group.len() as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::divisors;

    #[test]
    fn phi_formulas() {
        // rank-2 elementary abelian of order 4
        let b = AbelianGroup::new(vec![2, 2]).unwrap();
        assert_eq!(b.phi_zr(2), BigInt::from(6));
        assert_eq!(b.phi_zr(1), BigInt::from(0));
        // cyclic groups give the totient
        for n in [2u64, 6, 12, 30] {
            assert_eq!(
                AbelianGroup::cyclic(n).phi_zr(1),
                BigInt::from(euler_phi(n).unwrap())
            );
        }
        // non-cyclic away from p kills the p-adic count
        assert_eq!(b.phi_zpr(2, 3), BigInt::from(0));
        assert_eq!(b.phi_zpr(2, 2), BigInt::from(6));
    }

    #[test]
    fn cyclic_divisor_sum() {
        // sum over subgroups of C_n of phi at rank r recovers n^r
        for n in [4u64, 6, 12] {
            for r in [1u32, 2, 3] {
                let total: BigInt = divisors(n)
                    .into_iter()
                    .map(|d| AbelianGroup::cyclic(d).phi_zr(r))
                    .sum();
                assert_eq!(total, BigInt::from(n).pow(r), "n={n} r={r}");
            }
        }
    }

    #[test]
    fn direct_epi_counts_match_formula() {
        for n in 1..=64u64 {
            for b in abelian_groups_of_order(n) {
                for r in [1u32, 2] {
                    assert_eq!(
                        BigInt::from(b.epi_count_direct(r)),
                        b.phi_zr(r),
                        "order {n}, factors {:?}, r={r}",
                        b.invariant_factors()
                    );
                }
            }
        }
        // deeper rank on the small ones
        for n in 1..=16u64 {
            for b in abelian_groups_of_order(n) {
                assert_eq!(BigInt::from(b.epi_count_direct(3)), b.phi_zr(3));
            }
        }
    }

    #[test]
    fn direct_p_adic_epi_counts_match_formula() {
        for n in 1..=24u64 {
            for b in abelian_groups_of_order(n) {
                for p in [2u64, 3] {
                    assert_eq!(
                        BigInt::from(b.epi_count_direct_p(2, p)),
                        b.phi_zpr(2, p),
                        "order {n}, factors {:?}, p={p}",
                        b.invariant_factors()
                    );
                }
            }
        }
    }

    #[test]
    fn abelian_type_enumeration() {
        assert_eq!(abelian_groups_of_order(1).len(), 1);
        assert_eq!(abelian_groups_of_order(8).len(), 3);
        assert_eq!(abelian_groups_of_order(36).len(), 4);
        let types = abelian_groups_of_order(12);
        assert_eq!(types.len(), 2);
        for b in &types {
            assert_eq!(b.order(), 12);
        }
    }
}
