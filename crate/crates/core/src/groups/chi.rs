use super::group::SymplecticGroup;
use super::poset::{isotropic_poset, IsotropicPoset};
use crate::algebra::{rat, rat_int, BigRat};
use crate::error::{Error, Result};
use num_bigint::BigInt;

/// Brute-force oracle for the equivariant reduced Euler characteristics
/// of the isotropic-subspace poset: fixed-subposet masks per group
/// element, a centralizer-class recursion, and the direct normalized sum
/// as an independent cross-check.
pub struct ChiOracle {
    group: SymplecticGroup,
    poset: IsotropicPoset,
    fixed: Vec<u128>,
}

impl ChiOracle {
    pub fn new(n: usize, q: u64) -> Result<ChiOracle> {
        let group = SymplecticGroup::new(n, q)?;
        let poset = isotropic_poset(n, group.field());
        let fixed = group
            .elements()
            .iter()
            .map(|g| {
                let mut mask = 0u128;
                for (i, u) in poset.elements().iter().enumerate() {
                    if u.apply(g, group.field()) == *u {
                        mask |= 1 << i;
                    }
                }
                mask
            })
            .collect();
        Ok(ChiOracle {
            group,
            poset,
            fixed,
        })
    }

    pub fn group(&self) -> &SymplecticGroup {
        &self.group
    }

    pub fn poset(&self) -> &IsotropicPoset {
        &self.poset
    }

    /// Subposet fixed (setwise) by every element of the tuple.
    pub fn fixed_mask(&self, elements: &[u32]) -> u128 {
        elements
            .iter()
            .fold(self.poset.full_mask(), |m, &g| m & self.fixed[g as usize])
    }

    /// Average of the fixed-subposet Euler characteristics over a
    /// subgroup, the base of the recursion.
    fn chi_one(&self, mask: u128, members: &[u32]) -> BigRat {
        let total: i64 = members
            .iter()
            .map(|&h| self.poset.reduced_euler_char_mask(mask & self.fixed[h as usize]))
            .sum();
        rat(total) / rat(members.len() as i64)
    }

    fn chi_rec(&self, r: u32, mask: u128, members: &[u32], p_power: Option<u64>) -> BigRat {
        if r == 1 {
            return self.chi_one(mask, members);
        }
        let candidates: Vec<u32> = match p_power {
            None => members.to_vec(),
            Some(p) => members
                .iter()
                .copied()
                .filter(|&h| {
                    let mut o = self.group.element_order(h) as u64;
                    while o % p == 0 {
                        o /= p;
                    }
                    o == 1
                })
                .collect(),
        };
        let mut total = BigRat::from_integer(BigInt::from(0));
        for (rep, _class) in self.group.classes_of(&candidates, members) {
            let cent = self.group.centralizer(rep, members);
            total += self.chi_rec(r - 1, mask & self.fixed[rep as usize], &cent, p_power);
        }
        total
    }

    fn all_members(&self) -> Vec<u32> {
        (0..self.group.len() as u32).collect()
    }

    /// The r-th equivariant reduced Euler characteristic, by the
    /// class-centralizer recursion. The result is asserted integral.
    pub fn chi_r(&self, r: u32) -> BigInt {
        assert!(r >= 1);
        let value = self.chi_rec(r, self.poset.full_mask(), &self.all_members(), None);
        assert!(value.is_integer(), "chi_{r} must be an integer: {value}");
        value.to_integer()
    }

    /// p-primary variant: beyond the first level only p-power order
    /// classes contribute.
    pub fn chi_r_p(&self, r: u32, p: u64) -> BigInt {
        assert!(r >= 1);
        let value = self.chi_rec(r, self.poset.full_mask(), &self.all_members(), Some(p));
        assert!(value.is_integer(), "chi_{r}^{p} must be an integer: {value}");
        value.to_integer()
    }

    /// Direct normalized sum over commuting r-tuples, r <= 2; the
    /// independent check of the recursion. The pair sum scans all |G|^2
    /// pairs, so it is capped below the largest supported group.
    pub fn chi_r_direct(&self, r: u32) -> Result<BigInt> {
        let full = self.poset.full_mask();
        let mut total = BigInt::from(0);
        match r {
            1 => {
                for g in 0..self.group.len() as u32 {
                    total += self
                        .poset
                        .reduced_euler_char_mask(full & self.fixed[g as usize]);
                }
            }
            2 => {
                if self.group.len() > 5000 {
                    return Err(Error::ScaleCap(format!(
                        "direct pair summation over |G| = {}",
                        self.group.len()
                    )));
                }
                let members = self.all_members();
                for g in 0..self.group.len() as u32 {
                    let mg = full & self.fixed[g as usize];
                    for &h in &members {
                        if self.group.commute(g, h) {
                            total += self
                                .poset
                                .reduced_euler_char_mask(mg & self.fixed[h as usize]);
                        }
                    }
                }
            }
            _ => {
                return Err(Error::ScaleCap(format!(
                    "direct summation supports r <= 2, got {r}"
                )))
            }
        }
        let value = rat_int(total) / rat(self.group.len() as i64);
        assert!(value.is_integer(), "direct chi_{r} must be integral");
        Ok(value.to_integer())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sp2_f2_chi_values() {
        let oracle = ChiOracle::new(1, 2).unwrap();
        assert_eq!(oracle.chi_r(1), BigInt::from(0));
        assert_eq!(oracle.chi_r(2), BigInt::from(-1));
        assert_eq!(oracle.chi_r(3), BigInt::from(-4));
        assert_eq!(oracle.chi_r_direct(1).unwrap(), BigInt::from(0));
        assert_eq!(oracle.chi_r_direct(2).unwrap(), BigInt::from(-1));
    }

    #[test]
    fn sp2_f3_chi_values() {
        let oracle = ChiOracle::new(1, 3).unwrap();
        assert_eq!(oracle.chi_r(1), BigInt::from(0));
        assert_eq!(oracle.chi_r(2), BigInt::from(-1));
        // -chi_3 = q + (q+1)(q-1) = first table column: 6 at q = 3
        assert_eq!(oracle.chi_r(3), BigInt::from(-6));
        assert_eq!(oracle.chi_r_direct(2).unwrap(), BigInt::from(-1));
    }

    #[test]
    fn p_primary_examples() {
        let oracle = ChiOracle::new(1, 3).unwrap();
        // coefficients of the 2-primary series at q=3: r=2 gives 1, r=3
        // gives 6 (with the sign convention of the generating function).
        assert_eq!(oracle.chi_r_p(2, 2), BigInt::from(-1));
        assert_eq!(oracle.chi_r_p(3, 2), BigInt::from(-6));
        // p dividing q kills everything
        assert_eq!(oracle.chi_r_p(2, 3), BigInt::from(0));
        assert_eq!(oracle.chi_r_p(3, 3), BigInt::from(0));
    }

    #[test]
    fn p_dividing_q_vanishes_elsewhere() {
        let oracle = ChiOracle::new(1, 2).unwrap();
        assert_eq!(oracle.chi_r_p(2, 2), BigInt::from(0));
        assert_eq!(oracle.chi_r_p(3, 2), BigInt::from(0));
    }
}
