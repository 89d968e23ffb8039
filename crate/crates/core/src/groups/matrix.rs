use super::field::FiniteField;

/// Square matrix over a small finite field, row-major entries.
/// Vectors act on the right (`v -> v g`), so the rows are the images of
/// the standard basis.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FqMatrix {
    dim: usize,
    entries: Vec<u8>,
}

impl FqMatrix {
    pub fn zero(dim: usize) -> FqMatrix {
        FqMatrix {
            dim,
            entries: vec![0; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> FqMatrix {
        let mut m = FqMatrix::zero(dim);
        for i in 0..dim {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<u8>]) -> FqMatrix {
        let dim = rows.len();
        let mut m = FqMatrix::zero(dim);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), dim);
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.entries[i * self.dim + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u8) {
        self.entries[i * self.dim + j] = v;
    }

    pub fn row(&self, i: usize) -> &[u8] {
        &self.entries[i * self.dim..(i + 1) * self.dim]
    }

    /// Row-major entry bytes, the canonical dictionary key.
    pub fn key(&self) -> &[u8] {
        &self.entries
    }

    pub fn mul(&self, rhs: &FqMatrix, field: &FiniteField) -> FqMatrix {
        let d = self.dim;
        let mut out = FqMatrix::zero(d);
        for i in 0..d {
            for k in 0..d {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..d {
                    let b = rhs.get(k, j);
                    if b == 0 {
                        continue;
                    }
                    let cur = out.get(i, j);
                    out.set(i, j, field.add(cur, field.mul(a, b)));
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> FqMatrix {
        let d = self.dim;
        let mut out = FqMatrix::zero(d);
        for i in 0..d {
            for j in 0..d {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    /// Gauss-Jordan inverse; the matrix must be invertible.
    pub fn inverse(&self, field: &FiniteField) -> FqMatrix {
        let d = self.dim;
        let mut a = self.clone();
        let mut b = FqMatrix::identity(d);
        for col in 0..d {
            let pivot = (col..d)
                .find(|&r| a.get(r, col) != 0)
                .expect("matrix is invertible");
            for j in 0..d {
                let (x, y) = (a.get(col, j), a.get(pivot, j));
                a.set(col, j, y);
                a.set(pivot, j, x);
                let (x, y) = (b.get(col, j), b.get(pivot, j));
                b.set(col, j, y);
                b.set(pivot, j, x);
            }
            let s = field.inv(a.get(col, col));
            for j in 0..d {
                a.set(col, j, field.mul(a.get(col, j), s));
                b.set(col, j, field.mul(b.get(col, j), s));
            }
            for r in 0..d {
                if r == col {
                    continue;
                }
                let factor = a.get(r, col);
                if factor == 0 {
                    continue;
                }
                for j in 0..d {
                    let sub = field.mul(factor, a.get(col, j));
                    a.set(r, j, field.sub(a.get(r, j), sub));
                    let sub = field.mul(factor, b.get(col, j));
                    b.set(r, j, field.sub(b.get(r, j), sub));
                }
            }
        }
        b
    }

    fn determinant_of(rows: &[usize], cols: &[usize], m: &FqMatrix, field: &FiniteField) -> u8 {
        // Laplace expansion; submatrices here are at most 4x4.
        if rows.len() == 1 {
            return m.get(rows[0], cols[0]);
        }
        let mut det = 0u8;
        for (k, &c) in cols.iter().enumerate() {
            let a = m.get(rows[0], c);
            if a == 0 {
                continue;
            }
            let sub_rows: Vec<usize> = rows[1..].to_vec();
            let sub_cols: Vec<usize> = cols
                .iter()
                .copied()
                .filter(|&cc| cc != c)
                .collect();
            let minor = Self::determinant_of(&sub_rows, &sub_cols, m, field);
            let term = field.mul(a, minor);
            det = if k % 2 == 0 {
                field.add(det, term)
            } else {
                field.sub(det, term)
            };
        }
        det
    }

    /// Characteristic polynomial, coefficients from the constant term up,
    /// monic of degree `dim`, via sums of principal minors.
    pub fn char_poly(&self, field: &FiniteField) -> Vec<u8> {
        let d = self.dim;
        let mut coeffs = vec![0u8; d + 1];
        coeffs[d] = 1;
        // e_k = sum of principal k x k minors; the coefficient of x^(d-k)
        // is (-1)^k e_k.
        for k in 1..=d {
            let mut e = 0u8;
            let mut idx: Vec<usize> = (0..k).collect();
            loop {
                e = field.add(e, Self::determinant_of(&idx, &idx, self, field));
                if !next_combination(&mut idx, d) {
                    break;
                }
            }
            coeffs[d - k] = if k % 2 == 0 { e } else { field.neg(e) };
        }
        coeffs
    }
}

/// Advance a strictly increasing k-subset of `0..d`; false when exhausted.
fn next_combination(idx: &mut [usize], d: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < d - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// The alternating form matrix with identity blocks off the diagonal.
pub fn symplectic_form(n: usize, field: &FiniteField) -> FqMatrix {
    let mut j = FqMatrix::zero(2 * n);
    for i in 0..n {
        j.set(i, n + i, 1);
        j.set(n + i, i, field.one_neg());
    }
    j
}

/// Evaluate the alternating form on two row vectors.
pub fn form(u: &[u8], v: &[u8], n: usize, field: &FiniteField) -> u8 {
    let mut acc = 0u8;
    for i in 0..n {
        acc = field.add(acc, field.mul(u[i], v[n + i]));
        acc = field.sub(acc, field.mul(u[n + i], v[i]));
    }
    acc
}

/// Whether `g J g^t = J`.
pub fn is_symplectic(g: &FqMatrix, j: &FqMatrix, field: &FiniteField) -> bool {
    g.mul(j, field).mul(&g.transpose(), field) == *j
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_roundtrip() {
        let f = FiniteField::new(3).unwrap();
        let m = FqMatrix::from_rows(&[vec![1, 2], vec![1, 1]]);
        let inv = m.inverse(&f);
        assert_eq!(m.mul(&inv, &f), FqMatrix::identity(2));
    }

    #[test]
    fn char_poly_small() {
        let f = FiniteField::new(5).unwrap();
        // diag(2, 3): (x-2)(x-3) = x^2 - 5x + 6 = x^2 + 1 over F_5
        let m = FqMatrix::from_rows(&[vec![2, 0], vec![0, 3]]);
        assert_eq!(m.char_poly(&f), vec![1, 0, 1]);
        // companion-type check over F_2
        let f2 = FiniteField::new(2).unwrap();
        let c = FqMatrix::from_rows(&[vec![0, 1], vec![1, 1]]);
        // char poly x^2 + x + 1
        assert_eq!(c.char_poly(&f2), vec![1, 1, 1]);
    }

    #[test]
    fn form_is_alternating() {
        let f = FiniteField::new(3).unwrap();
        let n = 2;
        for a in 0..81u64 {
            let u: Vec<u8> = (0..4).map(|i| ((a / 3u64.pow(i)) % 3) as u8).collect();
            assert_eq!(form(&u, &u, n, &f), 0);
        }
    }

    #[test]
    fn identity_is_symplectic() {
        let f = FiniteField::new(4).unwrap();
        let j = symplectic_form(2, &f);
        assert!(is_symplectic(&FqMatrix::identity(4), &j, &f));
    }
}
