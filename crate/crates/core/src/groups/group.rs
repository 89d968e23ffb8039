use super::field::FiniteField;
use super::matrix::{form, is_symplectic, symplectic_form, FqMatrix};
use crate::error::{Error, Result};
use std::collections::HashMap;

/// Order of the symplectic group of rank `n` over `F_q`.
pub fn symplectic_group_order(n: u32, q: u64) -> u128 {
    let mut order = (q as u128).pow(n * n);
    for i in 1..=n {
        order *= (q as u128).pow(2 * i) - 1;
    }
    order
}

const GROUP_CAP: u128 = 1_000_000;

/// Fully enumerated symplectic group with index tables: elements in the
/// deterministic basis-completion order, inverses, element orders, and
/// fast index multiplication through a hash of canonical matrix keys.
pub struct SymplecticGroup {
    field: FiniteField,
    n: usize,
    j: FqMatrix,
    elements: Vec<FqMatrix>,
    index: HashMap<Vec<u8>, u32>,
    inverses: Vec<u32>,
    orders: Vec<u32>,
}

fn all_vectors(dim: usize, q: u64) -> Vec<Vec<u8>> {
    let total = q.pow(dim as u32);
    (0..total)
        .map(|code| {
            let mut v = Vec::with_capacity(dim);
            let mut c = code;
            for _ in 0..dim {
                v.push((c % q) as u8);
                c /= q;
            }
            v
        })
        .collect()
}

impl SymplecticGroup {
    /// Enumerate by completing hyperbolic pairs: each slot scans all
    /// vectors subject to the pairing constraints against the images
    /// already chosen, which visits every element exactly once.
    pub fn new(n: usize, q: u64) -> Result<SymplecticGroup> {
        let order = symplectic_group_order(n as u32, q);
        if order > GROUP_CAP {
            return Err(Error::ScaleCap(format!("|Sp({}, {q})| = {order}", 2 * n)));
        }
        let field = FiniteField::new(q)?;
        let dim = 2 * n;
        let vectors = all_vectors(dim, q);
        let mut elements = Vec::with_capacity(order as usize);
        // chosen[2i] is the image of e_{i+1}, chosen[2i+1] of e_{-(i+1)}.
        let mut chosen: Vec<Vec<u8>> = Vec::with_capacity(dim);
        fn extend(
            n: usize,
            field: &FiniteField,
            vectors: &[Vec<u8>],
            chosen: &mut Vec<Vec<u8>>,
            elements: &mut Vec<FqMatrix>,
        ) {
            if chosen.len() == 2 * n {
                let mut rows = vec![Vec::new(); 2 * n];
                for (slot, v) in chosen.iter().enumerate() {
                    let row = if slot % 2 == 0 { slot / 2 } else { n + slot / 2 };
                    rows[row] = v.clone();
                }
                elements.push(FqMatrix::from_rows(&rows));
                return;
            }
            let completing_pair = chosen.len() % 2 == 1;
            for v in vectors {
                if v.iter().all(|&x| x == 0) {
                    continue;
                }
                let ok = chosen.iter().enumerate().all(|(slot, u)| {
                    let want = if completing_pair && slot == chosen.len() - 1 {
                        1
                    } else {
                        0
                    };
                    form(u, v, n, field) == want
                });
                if ok {
                    chosen.push(v.clone());
                    extend(n, field, vectors, chosen, elements);
                    chosen.pop();
                }
            }
        }
        extend(n, &field, &vectors, &mut chosen, &mut elements);
        assert_eq!(elements.len() as u128, order, "enumeration count");
        let mut index = HashMap::with_capacity(elements.len());
        for (i, g) in elements.iter().enumerate() {
            index.insert(g.key().to_vec(), i as u32);
        }
        let j = symplectic_form(n, &field);
        debug_assert!(elements.iter().all(|g| is_symplectic(g, &j, &field)));
        let inverses = elements
            .iter()
            .map(|g| index[g.inverse(&field).key()])
            .collect();
        let identity = index[FqMatrix::identity(dim).key()];
        let orders = elements
            .iter()
            .map(|g| {
                let mut acc = g.clone();
                let mut e = 1u32;
                while index[acc.key()] != identity {
                    acc = acc.mul(g, &field);
                    e += 1;
                }
                e
            })
            .collect();
        Ok(SymplecticGroup {
            field,
            n,
            j,
            elements,
            index,
            inverses,
            orders,
        })
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn form_matrix(&self) -> &FqMatrix {
        &self.j
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn matrix(&self, i: u32) -> &FqMatrix {
        &self.elements[i as usize]
    }

    pub fn elements(&self) -> &[FqMatrix] {
        &self.elements
    }

    pub fn identity_index(&self) -> u32 {
        self.index[FqMatrix::identity(2 * self.n).key()]
    }

    pub fn index_of(&self, g: &FqMatrix) -> u32 {
        self.index[g.key()]
    }

    pub fn mul_idx(&self, a: u32, b: u32) -> u32 {
        let m = self.elements[a as usize].mul(&self.elements[b as usize], &self.field);
        self.index[m.key()]
    }

    pub fn inverse_idx(&self, a: u32) -> u32 {
        self.inverses[a as usize]
    }

    pub fn element_order(&self, a: u32) -> u32 {
        self.orders[a as usize]
    }

    /// Order prime to the field characteristic.
    pub fn is_semisimple(&self, a: u32) -> bool {
        self.orders[a as usize] as u64 % self.field.p() != 0
    }

    /// Hash-free commutation test on the matrices themselves.
    pub fn commute(&self, a: u32, b: u32) -> bool {
        let (ma, mb) = (&self.elements[a as usize], &self.elements[b as usize]);
        ma.mul(mb, &self.field) == mb.mul(ma, &self.field)
    }

    /// `x g x^{-1}` by indices.
    pub fn conjugate(&self, g: u32, x: u32) -> u32 {
        self.mul_idx(self.mul_idx(x, g), self.inverses[x as usize])
    }

    /// Centralizer of `g` within the given members.
    pub fn centralizer(&self, g: u32, members: &[u32]) -> Vec<u32> {
        members
            .iter()
            .copied()
            .filter(|&h| self.commute(g, h))
            .collect()
    }

    /// Conjugacy classes of `candidates` under conjugation by `members`,
    /// as (representative, class) pairs; the representative is the class
    /// element with the least matrix key.
    pub fn classes_of(&self, candidates: &[u32], members: &[u32]) -> Vec<(u32, Vec<u32>)> {
        let mut seen = std::collections::HashSet::new();
        let mut out = Vec::new();
        for &g in candidates {
            if seen.contains(&g) {
                continue;
            }
            let mut class: Vec<u32> = members.iter().map(|&x| self.conjugate(g, x)).collect();
            class.sort_unstable();
            class.dedup();
            seen.extend(class.iter().copied());
            let rep = *class
                .iter()
                .min_by_key(|&&h| self.elements[h as usize].key())
                .unwrap();
            out.push((rep, class));
        }
        out
    }

    /// Conjugacy classes of the full group.
    pub fn conjugacy_classes(&self) -> Vec<(u32, Vec<u32>)> {
        let all: Vec<u32> = (0..self.len() as u32).collect();
        self.classes_of(&all, &all)
    }

    /// JSON-lines dump of the class table: canonical representative
    /// entries, class size, and element order per class.
    pub fn dump_classes(&self) -> String {
        let mut out = String::new();
        for (rep, class) in self.conjugacy_classes() {
            let record = serde_json::json!({
                "representative": self.elements[rep as usize].key(),
                "size": class.len(),
                "order": self.element_order(rep),
            });
            out.push_str(&record.to_string());
            out.push('\n');
        }
        out
    }
}
