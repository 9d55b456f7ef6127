//! Dense exact-rational linear algebra: elimination, rank, determinants,
//! linear solves, null spaces, and affine projections.

use num_traits::Zero;

use crate::qvec::QVec;
use crate::rat::Rat;

/// Row-major matrix over `Rat`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl QMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: &[QVec]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |v| v.dim());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            debug_assert_eq!(row.dim(), c);
            data.extend(row.coords().iter().cloned());
        }
        QMatrix {
            rows: r,
            cols: c,
            data,
        }
    }

    pub fn from_int_rows(rows: &[Vec<i64>]) -> Self {
        QMatrix::from_rows(
            &rows
                .iter()
                .map(|r| QVec::from_ints(r))
                .collect::<Vec<_>>(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> QVec {
        QVec::new(self.data[i * self.cols..(i + 1) * self.cols].to_vec())
    }

    pub fn col(&self, j: usize) -> QVec {
        QVec::new((0..self.rows).map(|i| self.get(i, j).clone()).collect())
    }

    pub fn transpose(&self) -> QMatrix {
        let mut out = QMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn mat_vec(&self, v: &QVec) -> QVec {
        debug_assert_eq!(self.cols, v.dim());
        QVec::new((0..self.rows).map(|i| self.row(i).dot(v)).collect())
    }

    /// Reduced row echelon form in place; returns pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self.get(r, c).recip();
            for j in c..self.cols {
                let v = self.get(r, j) * &inv;
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i != r && !self.get(i, c).is_zero() {
                    let f = self.get(i, c).clone();
                    for j in c..self.cols {
                        let v = self.get(i, j) - &f * self.get(r, j);
                        self.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Determinant of a square matrix, by fraction-exact elimination.
    pub fn det(&self) -> Rat {
        assert_eq!(self.rows, self.cols, "det of non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rat::from_integer(1.into());
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.get(i, c).is_zero()) else {
                return Rat::zero();
            };
            if p != c {
                m.swap_rows(c, p);
                det = -det;
            }
            let pivot = m.get(c, c).clone();
            det *= &pivot;
            let inv = pivot.recip();
            for i in c + 1..n {
                if m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c) * &inv;
                for j in c..n {
                    let v = m.get(i, j) - &f * m.get(c, j);
                    m.set(i, j, v);
                }
            }
        }
        det
    }

    /// One solution of `A x = b` (free variables set to zero), or `None` if
    /// the system is inconsistent.
    pub fn solve(&self, b: &QVec) -> Option<QVec> {
        debug_assert_eq!(self.rows, b.dim());
        let mut aug = QMatrix::zero(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let pivots = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![Rat::zero(); self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = aug.get(r, self.cols).clone();
        }
        Some(QVec::new(x))
    }

    /// Basis of the kernel `{x : A x = 0}`.
    pub fn null_space(&self) -> Vec<QVec> {
        let mut m = self.clone();
        let pivots = m.rref();
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![Rat::zero(); self.cols];
            v[free] = Rat::from_integer(1.into());
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = -m.get(r, free).clone();
            }
            basis.push(QVec::new(v));
        }
        basis
    }
}

/// Rank of a set of vectors.
pub fn rank_of(vectors: &[QVec]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    QMatrix::from_rows(vectors).rank()
}

/// Orthogonal projection of `p` onto the affine subspace
/// `{x : <normals[e], x> = offsets[e]}`. The normals must be linearly
/// independent. Exact: solves the normal equations over `Q`.
pub fn project_onto_affine(p: &QVec, normals: &[QVec], offsets: &[Rat]) -> QVec {
    debug_assert_eq!(normals.len(), offsets.len());
    if normals.is_empty() {
        return p.clone();
    }
    let k = normals.len();
    // residual r_e = <n_e, p> - c_e; solve (N N^T) y = r; q = p - N^T y
    let r = QVec::new(
        normals
            .iter()
            .zip(offsets.iter())
            .map(|(n, c)| n.dot(p) - c)
            .collect(),
    );
    let mut gram = QMatrix::zero(k, k);
    for i in 0..k {
        for j in 0..k {
            gram.set(i, j, normals[i].dot(&normals[j]));
        }
    }
    let y = gram.solve(&r).expect("independent normals give invertible Gram matrix");
    let mut q = p.clone();
    for (e, n) in normals.iter().enumerate() {
        q = q.sub(&n.scale(&y[e]));
    }
    q
}

/// Component of `v` orthogonal to the span of `normals` (independent set).
pub fn reject_from_span(v: &QVec, normals: &[QVec]) -> QVec {
    let zeros = vec![Rat::zero(); normals.len()];
    project_onto_affine(v, normals, &zeros)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, ratio};

    #[test]
    fn rank_det_solve() {
        let a = QMatrix::from_int_rows(&[vec![1, 0, 1], vec![0, 1, 1], vec![1, 1, 2]]);
        assert_eq!(a.rank(), 2);
        let sq = QMatrix::from_int_rows(&[vec![1, 2], vec![3, 4]]);
        assert_eq!(sq.det(), rat(-2));
        let b = QVec::from_ints(&[3, 7]);
        let x = sq.solve(&b).unwrap();
        assert_eq!(sq.mat_vec(&x), b);
        let inconsistent = QMatrix::from_int_rows(&[vec![1, 1], vec![1, 1]]);
        assert!(inconsistent.solve(&QVec::from_ints(&[0, 1])).is_none());
    }

    #[test]
    fn null_space_spans_kernel() {
        let a = QMatrix::from_int_rows(&[vec![1, 1, 1]]);
        let ns = a.null_space();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(a.mat_vec(v).is_zero());
        }
    }

    #[test]
    fn affine_projection() {
        // project (2,0) onto the line x+y=1
        let q = project_onto_affine(
            &QVec::from_ints(&[2, 0]),
            &[QVec::from_ints(&[1, 1])],
            &[rat(1)],
        );
        assert_eq!(q, QVec::new(vec![ratio(3, 2), ratio(-1, 2)]));
        // projecting a point already on the subspace is the identity
        let p = QVec::new(vec![ratio(1, 2), ratio(1, 2)]);
        assert_eq!(
            project_onto_affine(&p, &[QVec::from_ints(&[1, 1])], &[rat(1)]),
            p
        );
    }
}
