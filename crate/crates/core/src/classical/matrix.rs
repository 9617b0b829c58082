use crate::ff::Gf;

/// Square matrix over a table field, row-major. Matrices act on row
/// vectors from the right: row `i` is the image of the `i`-th basis vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    n: usize,
    data: Vec<u32>,
}

impl Matrix {
    pub fn identity(n: usize) -> Self {
        let mut data = vec![0; n * n];
        for i in 0..n {
            data[i * n + i] = 1;
        }
        Matrix { n, data }
    }

    pub fn zero(n: usize) -> Self {
        Matrix {
            n,
            data: vec![0; n * n],
        }
    }

    pub fn from_rows(rows: &[Vec<u32>]) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            assert_eq!(row.len(), n, "matrix must be square");
            data.extend_from_slice(row);
        }
        Matrix { n, data }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.n + j] = v;
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        (0..self.n).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn mul(&self, other: &Matrix, gf: &Gf) -> Matrix {
        let n = self.n;
        let mut out = Matrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if b != 0 {
                        let cur = out.get(i, j);
                        out.set(i, j, gf.add(cur, gf.mul(a, b)));
                    }
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Matrix {
        let n = self.n;
        let mut out = Matrix::zero(n);
        for i in 0..n {
            for j in 0..n {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    pub fn map(&self, f: impl Fn(u32) -> u32) -> Matrix {
        Matrix {
            n: self.n,
            data: self.data.iter().map(|&x| f(x)).collect(),
        }
    }

    /// The row vector `v·M`.
    pub fn apply(&self, v: &[u32], gf: &Gf) -> Vec<u32> {
        let mut out = vec![0u32; self.n];
        self.apply_into(v, gf, &mut out);
        out
    }

    pub fn apply_into(&self, v: &[u32], gf: &Gf, out: &mut [u32]) {
        out.iter_mut().for_each(|x| *x = 0);
        for (i, &c) in v.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                let m = self.get(i, j);
                if m != 0 {
                    *o = gf.add(*o, gf.mul(c, m));
                }
            }
        }
    }

    pub fn determinant(&self, gf: &Gf) -> u32 {
        let n = self.n;
        let mut a = self.clone();
        let mut det = 1u32;
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| a.get(r, col) != 0) else {
                return 0;
            };
            if pivot != col {
                for j in 0..n {
                    let t = a.get(pivot, j);
                    a.set(pivot, j, a.get(col, j));
                    a.set(col, j, t);
                }
                det = gf.neg(det);
            }
            let pv = a.get(col, col);
            det = gf.mul(det, pv);
            let inv = gf.inv(pv).expect("nonzero pivot");
            for r in col + 1..n {
                let factor = gf.mul(a.get(r, col), inv);
                if factor == 0 {
                    continue;
                }
                for j in col..n {
                    let v = gf.sub(a.get(r, j), gf.mul(factor, a.get(col, j)));
                    a.set(r, j, v);
                }
            }
        }
        det
    }

    pub fn is_scalar(&self) -> bool {
        let d = self.get(0, 0);
        (0..self.n).all(|i| (0..self.n).all(|j| self.get(i, j) == if i == j { d } else { 0 }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinant_and_products() {
        let gf = Gf::new(7, 1).unwrap();
        let a = Matrix::from_rows(&[vec![1, 2], vec![3, 4]]);
        // 1*4 - 2*3 = -2 = 5 mod 7
        assert_eq!(a.determinant(&gf), 5);
        let i = Matrix::identity(2);
        assert_eq!(a.mul(&i, &gf), a);
        assert_eq!(a.apply(&[1, 0], &gf), vec![1, 2]);
        let sq = a.mul(&a, &gf);
        assert_eq!(sq.rows(), vec![vec![0, 3], vec![1, 1]]);
        assert_eq!(sq.determinant(&gf), gf.mul(5, 5));
        assert!(Matrix::identity(3).is_scalar());
        assert!(!a.is_scalar());
    }
}
