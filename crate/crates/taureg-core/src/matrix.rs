//! Dense exact matrices over GF(p) with fraction-free Gauss-Jordan
//! elimination. Zero-by-n and n-by-zero shapes are first-class citizens:
//! most representation-theoretic edge cases (zero modules, empty vertex
//! spaces) flow through here.

use crate::fp::{Fp, Scalar};
use crate::sampler::Sampler;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
    fp: Fp,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize, fp: Fp) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![0; rows * cols],
            fp,
        }
    }

    pub fn identity(n: usize, fp: Fp) -> Self {
        let mut m = Matrix::zeros(n, n, fp);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Rows given as slices of already-reduced scalars.
    pub fn from_rows(rows: &[Vec<Scalar>], cols: usize, fp: Fp) -> Self {
        let mut m = Matrix::zeros(rows.len(), cols, fp);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "row length mismatch");
            m.data[i * cols..(i + 1) * cols].copy_from_slice(r);
        }
        m
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        fp: Fp,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Self {
        let mut m = Matrix::zeros(rows, cols, fp);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn random(rows: usize, cols: usize, fp: Fp, sampler: &mut Sampler) -> Self {
        Matrix::from_fn(rows, cols, fp, |_, _| sampler.scalar(fp))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn fp(&self) -> Fp {
        self.fp
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Scalar {
        debug_assert!(i < self.rows && j < self.cols);
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        debug_assert!(i < self.rows && j < self.cols);
        debug_assert!(v < self.fp.modulus());
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, self.fp, |i, j| self.get(j, i))
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut m = self.clone();
        for (a, &b) in m.data.iter_mut().zip(other.data.iter()) {
            *a = self.fp.add(*a, b);
        }
        m
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut m = self.clone();
        for (a, &b) in m.data.iter_mut().zip(other.data.iter()) {
            *a = self.fp.sub(*a, b);
        }
        m
    }

    pub fn scale(&self, c: Scalar) -> Matrix {
        let mut m = self.clone();
        for a in m.data.iter_mut() {
            *a = self.fp.mul(*a, c);
        }
        m
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let fp = self.fp;
        let mut m = Matrix::zeros(self.rows, other.cols, fp);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b != 0 {
                        let cur = m.get(i, j);
                        m.set(i, j, fp.add(cur, fp.mul(a, b)));
                    }
                }
            }
        }
        m
    }

    /// Stack horizontally: [self | other].
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        Matrix::from_fn(self.rows, self.cols + other.cols, self.fp, |i, j| {
            if j < self.cols {
                self.get(i, j)
            } else {
                other.get(i, j - self.cols)
            }
        })
    }

    /// Stack vertically: [self; other].
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        Matrix::from_fn(self.rows + other.rows, self.cols, self.fp, |i, j| {
            if i < self.rows {
                self.get(i, j)
            } else {
                other.get(i - self.rows, j)
            }
        })
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn select_columns(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(self.rows, idx.len(), self.fp, |i, j| self.get(i, idx[j]))
    }

    /// In-place reduced row echelon form; returns pivot column indices in order.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let fp = self.fp;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let mut pr = None;
            for i in r..self.rows {
                if self.get(i, c) != 0 {
                    pr = Some(i);
                    break;
                }
            }
            let Some(pr) = pr else { continue };
            if pr != r {
                for j in 0..self.cols {
                    let a = self.get(r, j);
                    let b = self.get(pr, j);
                    self.set(r, j, b);
                    self.set(pr, j, a);
                }
            }
            let inv = fp.inv(self.get(r, c));
            for j in c..self.cols {
                let v = self.get(r, j);
                self.set(r, j, fp.mul(v, inv));
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let factor = self.get(i, c);
                if factor == 0 {
                    continue;
                }
                for j in c..self.cols {
                    let v = self.get(i, j);
                    let w = self.get(r, j);
                    self.set(i, j, fp.sub(v, fp.mul(factor, w)));
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref_in_place().len()
    }

    /// Columns form a basis of the right kernel {x : self * x = 0}.
    pub fn kernel_basis(&self) -> Matrix {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let pivot_set: Vec<bool> = {
            let mut s = vec![false; self.cols];
            for &c in &pivots {
                s[c] = true;
            }
            s
        };
        let free: Vec<usize> = (0..self.cols).filter(|&c| !pivot_set[c]).collect();
        let fp = self.fp;
        let mut k = Matrix::zeros(self.cols, free.len(), fp);
        for (jk, &f) in free.iter().enumerate() {
            k.set(f, jk, 1);
            for (r, &pc) in pivots.iter().enumerate() {
                let v = m.get(r, f);
                if v != 0 {
                    k.set(pc, jk, fp.neg(v));
                }
            }
        }
        k
    }

    /// Solve self * X = rhs for all columns at once. None if inconsistent.
    pub fn solve(&self, rhs: &Matrix) -> Option<Matrix> {
        assert_eq!(self.rows, rhs.rows, "solve shape mismatch");
        let mut aug = self.hstack(rhs);
        let pivots = aug.rref_in_place();
        if pivots.iter().any(|&c| c >= self.cols) {
            return None;
        }
        let fp = self.fp;
        let mut x = Matrix::zeros(self.cols, rhs.cols, fp);
        for (r, &pc) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.set(pc, j, aug.get(r, self.cols + j));
            }
        }
        Some(x)
    }

    /// Right inverse for a full-row-rank matrix: self * X = I.
    pub fn right_inverse(&self) -> Option<Matrix> {
        self.solve(&Matrix::identity(self.rows, self.fp))
    }

    /// Full-row-rank projection q with q * self = 0; rows(q) = rows(self) - rank(self).
    /// The rows span the left kernel of self.
    pub fn cokernel_projection(&self) -> Matrix {
        self.transpose().kernel_basis().transpose()
    }

    /// Basis of the column space: the original columns at the pivot positions.
    pub fn column_space_basis(&self) -> Matrix {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        self.select_columns(&pivots)
    }

    /// Coordinate positions whose standard basis vectors complete the column
    /// space of `self` to the full ambient space K^rows.
    pub fn column_space_complement(&self) -> Vec<usize> {
        let mut t = self.transpose();
        let pivots = t.rref_in_place();
        let mut is_pivot = vec![false; self.rows];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        (0..self.rows).filter(|&i| !is_pivot[i]).collect()
    }

    /// Flatten row-major (used to coordinatize spaces of morphisms).
    pub fn flatten(&self) -> &[Scalar] {
        &self.data
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f5() -> Fp {
        Fp::new(5)
    }

    #[test]
    fn rank_kernel_small() {
        let fp = f5();
        let m = Matrix::from_rows(&[vec![1, 2, 0], vec![2, 4, 0]], 3, fp);
        assert_eq!(m.rank(), 1);
        let k = m.kernel_basis();
        assert_eq!(k.cols(), 2);
        assert!(m.mul(&k).is_zero());
    }

    #[test]
    fn zero_shapes() {
        let fp = f5();
        let a = Matrix::zeros(0, 3, fp);
        assert_eq!(a.rank(), 0);
        assert_eq!(a.kernel_basis().cols(), 3);
        let b = Matrix::zeros(3, 0, fp);
        assert_eq!(b.rank(), 0);
        assert_eq!(b.kernel_basis().cols(), 0);
        assert_eq!(b.cokernel_projection().rows(), 3);
        let c = a.mul(&b);
        assert_eq!((c.rows(), c.cols()), (0, 0));
    }

    #[test]
    fn cokernel_projection_contract() {
        let fp = f5();
        let m = Matrix::from_rows(&[vec![1, 0], vec![2, 0], vec![0, 0]], 2, fp);
        let q = m.cokernel_projection();
        assert_eq!(q.rows(), 3 - m.rank());
        assert!(q.mul(&m).is_zero());
        assert_eq!(q.rank(), q.rows());
    }

    /// Exhaustive: solve succeeds iff rank(a) == rank(a|b), all 2x2 over GF(5).
    #[test]
    fn solve_iff_rank_equality_gf5() {
        let fp = f5();
        for bits in 0..625u32 {
            let e = |k: u32| ((bits / 5u32.pow(k)) % 5) as u64;
            let a = Matrix::from_rows(&[vec![e(0), e(1)], vec![e(2), e(3)]], 2, fp);
            for bv in 0..25u32 {
                let b = Matrix::from_rows(&[vec![(bv % 5) as u64], vec![(bv / 5) as u64]], 1, fp);
                let aug = a.hstack(&b);
                let solvable = a.rank() == aug.rank();
                match a.solve(&b) {
                    Some(x) => {
                        assert!(solvable);
                        assert_eq!(a.mul(&x), b);
                    }
                    None => assert!(!solvable),
                }
            }
        }
    }

    #[test]
    fn column_space_complement_completes() {
        let fp = f5();
        let m = Matrix::from_rows(&[vec![1, 1], vec![2, 2], vec![0, 0]], 2, fp);
        let basis = m.column_space_basis();
        let comp = m.column_space_complement();
        assert_eq!(basis.cols() + comp.len(), 3);
        let mut full = basis;
        for &i in &comp {
            let mut e = Matrix::zeros(3, 1, fp);
            e.set(i, 0, 1);
            full = full.hstack(&e);
        }
        assert_eq!(full.rank(), 3);
    }

    #[test]
    fn mul_mod_matches_bigint_reference() {
        use num_bigint::BigUint;
        let fp = Fp::default();
        let p = BigUint::from(fp.modulus());
        let mut s = Sampler::seeded(0x5eed, 1);
        for _ in 0..10_000 {
            let a = s.scalar(fp);
            let b = s.scalar(fp);
            let want = (BigUint::from(a) * BigUint::from(b)) % &p;
            assert_eq!(BigUint::from(fp.mul(a, b)), want);
        }
    }

    proptest! {
        #[test]
        fn rank_plus_nullity(rows in 0usize..6, cols in 0usize..6, seed in any::<u64>()) {
            let fp = f5();
            let mut s = Sampler::seeded(seed, 1);
            let m = Matrix::random(rows, cols, fp, &mut s);
            let k = m.kernel_basis();
            prop_assert_eq!(m.rank() + k.cols(), cols);
            prop_assert!(m.mul(&k).is_zero());
            prop_assert_eq!(k.rank(), k.cols());
        }

        #[test]
        fn cokernel_dims(rows in 0usize..6, cols in 0usize..6, seed in any::<u64>()) {
            let fp = f5();
            let mut s = Sampler::seeded(seed, 1);
            let m = Matrix::random(rows, cols, fp, &mut s);
            let q = m.cokernel_projection();
            prop_assert_eq!(q.rows(), rows - m.rank());
            prop_assert!(q.mul(&m).is_zero());
            prop_assert_eq!(q.rank(), q.rows());
        }

        #[test]
        fn rref_is_projector_invariant(rows in 1usize..5, cols in 1usize..5, seed in any::<u64>()) {
            // rank of product bounded by min rank; transpose preserves rank
            let fp = f5();
            let mut s = Sampler::seeded(seed, 1);
            let m = Matrix::random(rows, cols, fp, &mut s);
            prop_assert_eq!(m.rank(), m.transpose().rank());
        }
    }
}
