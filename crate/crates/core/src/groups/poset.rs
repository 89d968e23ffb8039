use super::field::FiniteField;
use super::matrix::form;
use super::subspace::Subspace;
use std::collections::HashSet;

/// The poset of nonzero totally isotropic subspaces of the symplectic
/// 2n-space, with elements in a fixed canonical order (by dimension, then
/// echelon bytes) and the full order relation precomputed. Subsets are
/// handled as bitmasks, so the poset is capped at 128 elements, which
/// covers every supported brute-force size.
#[derive(Clone, Debug)]
pub struct IsotropicPoset {
    elements: Vec<Subspace>,
    below: Vec<Vec<usize>>,
}

fn canonical_lines(n: usize, field: &FiniteField) -> Vec<Subspace> {
    let dim = 2 * n;
    let q = field.q();
    let total = q.pow(dim as u32);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for code in 1..total {
        let mut v = Vec::with_capacity(dim);
        let mut c = code;
        for _ in 0..dim {
            v.push((c % q) as u8);
            c /= q;
        }
        let s = Subspace::from_spanning(&[v], field);
        if seen.insert(s.key()) {
            out.push(s);
        }
    }
    out
}

pub fn isotropic_poset(n: usize, field: &FiniteField) -> IsotropicPoset {
    // All 1-dimensional subspaces are isotropic; higher dimensions extend
    // an isotropic subspace by perpendicular lines outside it.
    let lines = canonical_lines(n, field);
    let mut layers: Vec<Vec<Subspace>> = vec![lines.clone()];
    for _dim in 2..=n {
        let prev = layers.last().unwrap();
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for u in prev {
            for line in &lines {
                let gen = &line.basis()[0];
                if u.contains(gen, field) {
                    continue;
                }
                if u.basis().iter().any(|b| form(b, gen, n, field) != 0) {
                    continue;
                }
                let mut vectors = u.basis().to_vec();
                vectors.push(gen.clone());
                let w = Subspace::from_spanning(&vectors, field);
                debug_assert!(w.is_totally_isotropic(n, field));
                if seen.insert(w.key()) {
                    next.push(w);
                }
            }
        }
        layers.push(next);
    }
    let mut elements: Vec<Subspace> = layers.into_iter().flatten().collect();
    elements.sort_by_key(|s| (s.dim(), s.key()));
    assert!(elements.len() <= 128, "poset exceeds the bitmask capacity");
    let below = elements
        .iter()
        .enumerate()
        .map(|(i, u)| {
            (0..i)
                .filter(|&j| {
                    elements[j].dim() < u.dim() && u.contains_subspace(&elements[j], field)
                })
                .collect()
        })
        .collect();
    IsotropicPoset { elements, below }
}

impl IsotropicPoset {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Subspace] {
        &self.elements
    }

    pub fn full_mask(&self) -> u128 {
        if self.elements.len() == 128 {
            u128::MAX
        } else {
            (1u128 << self.elements.len()) - 1
        }
    }

    /// Number of order relations `U < W`.
    pub fn relation_count(&self) -> usize {
        self.below.iter().map(Vec::len).sum()
    }

    pub fn count_by_dim(&self, d: usize) -> usize {
        self.elements.iter().filter(|s| s.dim() == d).count()
    }

    /// Longest chain length within the poset.
    pub fn height(&self) -> usize {
        let mut h = vec![0usize; self.elements.len()];
        let mut best = 0;
        for i in 0..self.elements.len() {
            h[i] = 1 + self.below[i].iter().map(|&j| h[j]).max().unwrap_or(0);
            best = best.max(h[i]);
        }
        best
    }

    /// Reduced Euler characteristic of the order complex of the induced
    /// subposet on `mask`: the alternating chain count, with the empty
    /// poset contributing -1.
    pub fn reduced_euler_char_mask(&self, mask: u128) -> i64 {
        // c[i] = signed count of chains with maximum i; adding a new top
        // flips the sign of every chain below it.
        let mut c = vec![0i64; self.elements.len()];
        let mut total = -1i64;
        for i in 0..self.elements.len() {
            if mask >> i & 1 == 0 {
                continue;
            }
            let mut acc = 1i64;
            for &j in &self.below[i] {
                if mask >> j & 1 == 1 {
                    acc -= c[j];
                }
            }
            c[i] = acc;
            total += acc;
        }
        total
    }

    pub fn reduced_euler_char(&self) -> i64 {
        self.reduced_euler_char_mask(self.full_mask())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_one_is_an_antichain() {
        let f = FiniteField::new(3).unwrap();
        let p = isotropic_poset(1, &f);
        assert_eq!(p.len(), 4);
        assert_eq!(p.relation_count(), 0);
        assert_eq!(p.reduced_euler_char(), 3);
        assert_eq!(p.height(), 1);
    }

    #[test]
    fn sp4_f2_generalized_quadrangle() {
        let f = FiniteField::new(2).unwrap();
        let p = isotropic_poset(2, &f);
        assert_eq!(p.count_by_dim(1), 15);
        assert_eq!(p.count_by_dim(2), 15);
        assert_eq!(p.relation_count(), 45);
        assert_eq!(p.height(), 2);
    }

    #[test]
    fn sp4_f3_counts() {
        let f = FiniteField::new(3).unwrap();
        let p = isotropic_poset(2, &f);
        assert_eq!(p.count_by_dim(1), 40);
        // (q^2 + 1)(q + 1) Lagrangian planes
        assert_eq!(p.count_by_dim(2), 40);
        // each plane contains q + 1 isotropic lines
        assert_eq!(p.relation_count(), 160);
    }

    #[test]
    fn euler_char_conventions() {
        let f = FiniteField::new(2).unwrap();
        let p = isotropic_poset(2, &f);
        // empty subposet
        assert_eq!(p.reduced_euler_char_mask(0), -1);
        // a single point
        assert_eq!(p.reduced_euler_char_mask(1), 0);
        // two incomparable points of the same dimension
        let mask = 0b11;
        assert_eq!(p.reduced_euler_char_mask(mask), 1);
    }
}
