use super::field::FiniteField;
use super::matrix::{form, FqMatrix};

/// Subspace of the row-vector space, stored as a reduced row-echelon
/// basis so that equal subspaces have identical representations.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<Vec<u8>>,
}

fn rref(mut rows: Vec<Vec<u8>>, field: &FiniteField) -> Vec<Vec<u8>> {
    let width = rows.first().map_or(0, Vec::len);
    let mut pivot_row = 0;
    for col in 0..width {
        let Some(r) = (pivot_row..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(pivot_row, r);
        let s = field.inv(rows[pivot_row][col]);
        for v in rows[pivot_row].iter_mut() {
            *v = field.mul(*v, s);
        }
        for r in 0..rows.len() {
            if r == pivot_row || rows[r][col] == 0 {
                continue;
            }
            let factor = rows[r][col];
            for j in 0..width {
                let sub = field.mul(factor, rows[pivot_row][j]);
                rows[r][j] = field.sub(rows[r][j], sub);
            }
        }
        pivot_row += 1;
        if pivot_row == rows.len() {
            break;
        }
    }
    rows.truncate(pivot_row);
    rows.retain(|row| row.iter().any(|&v| v != 0));
    rows
}

impl Subspace {
    pub fn from_spanning(vectors: &[Vec<u8>], field: &FiniteField) -> Subspace {
        let ambient = vectors.first().map_or(0, Vec::len);
        Subspace {
            ambient,
            rows: rref(vectors.to_vec(), field),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[Vec<u8>] {
        &self.rows
    }

    /// Flat canonical bytes: dimension then the echelon rows.
    pub fn key(&self) -> Vec<u8> {
        let mut k = vec![self.rows.len() as u8];
        for row in &self.rows {
            k.extend_from_slice(row);
        }
        k
    }

    /// Reduce `v` against the echelon basis; zero remainder = membership.
    pub fn contains(&self, v: &[u8], field: &FiniteField) -> bool {
        let mut v = v.to_vec();
        for row in &self.rows {
            let lead = row.iter().position(|&x| x != 0).unwrap();
            if v[lead] != 0 {
                let factor = v[lead];
                for j in 0..v.len() {
                    let sub = field.mul(factor, row[j]);
                    v[j] = field.sub(v[j], sub);
                }
            }
        }
        v.iter().all(|&x| x == 0)
    }

    pub fn contains_subspace(&self, other: &Subspace, field: &FiniteField) -> bool {
        other.rows.iter().all(|row| self.contains(row, field))
    }

    /// Image under a group element acting on row vectors.
    pub fn apply(&self, g: &FqMatrix, field: &FiniteField) -> Subspace {
        let d = g.dim();
        let mapped: Vec<Vec<u8>> = self
            .rows
            .iter()
            .map(|row| {
                let mut out = vec![0u8; d];
                for (i, &c) in row.iter().enumerate() {
                    if c == 0 {
                        continue;
                    }
                    for (j, o) in out.iter_mut().enumerate() {
                        *o = field.add(*o, field.mul(c, g.get(i, j)));
                    }
                }
                out
            })
            .collect();
        Subspace::from_spanning(&mapped, field)
    }

    /// All basis pairs pair to zero under the alternating form.
    pub fn is_totally_isotropic(&self, n: usize, field: &FiniteField) -> bool {
        for (i, u) in self.rows.iter().enumerate() {
            for v in &self.rows[i + 1..] {
                if form(u, v, n, field) != 0 {
                    return false;
                }
            }
        }
        true
    }
}
