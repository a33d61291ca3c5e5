//! Dense symmetric linear algebra, generic over the scalar type.
//!
//! Everything here is deterministic: no pivoting heuristics that depend on
//! allocation order, no threads. The eigensolver is the classic
//! Householder tridiagonalization followed by implicit-shift QL iteration.

use num_traits::Float;

/// Scalar trait for the numeric kernel. `f32` and `f64` both qualify.
pub trait Real:
    Float + num_traits::NumAssign + num_traits::FromPrimitive + std::fmt::Debug + Default + 'static
{
    /// Convenience for converting small constants.
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("constant conversion")
    }
}

impl<T> Real for T where
    T: Float + num_traits::NumAssign + num_traits::FromPrimitive + std::fmt::Debug + Default + 'static
{
}

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Mat<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Real> Mat<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    pub fn from_rows(rows: usize, cols: usize, data: Vec<F>) -> Self {
        assert_eq!(data.len(), rows * cols, "row-major data length mismatch");
        Mat { rows, cols, data }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[F] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [F] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// y = A x
    pub fn matvec(&self, x: &[F], y: &mut [F]) {
        assert_eq!(x.len(), self.cols);
        assert_eq!(y.len(), self.rows);
        for i in 0..self.rows {
            let row = self.row(i);
            let mut acc = F::zero();
            for (a, b) in row.iter().zip(x.iter()) {
                acc += *a * *b;
            }
            y[i] = acc;
        }
    }

    /// y = Aᵀ x
    pub fn tr_matvec(&self, x: &[F], y: &mut [F]) {
        assert_eq!(x.len(), self.rows);
        assert_eq!(y.len(), self.cols);
        for v in y.iter_mut() {
            *v = F::zero();
        }
        for i in 0..self.rows {
            let xi = x[i];
            if xi == F::zero() {
                continue;
            }
            let row = self.row(i);
            for (yj, aij) in y.iter_mut().zip(row.iter()) {
                *yj += *aij * xi;
            }
        }
    }

    /// A Aᵀ (symmetric, rows × rows).
    pub fn gram_rows(&self) -> Mat<F> {
        let r = self.rows;
        let mut g = Mat::zeros(r, r);
        for i in 0..r {
            for j in i..r {
                let mut acc = F::zero();
                for (a, b) in self.row(i).iter().zip(self.row(j).iter()) {
                    acc += *a * *b;
                }
                g[(i, j)] = acc;
                g[(j, i)] = acc;
            }
        }
        g
    }

    pub fn matmul(&self, other: &Mat<F>) -> Mat<F> {
        assert_eq!(self.cols, other.rows);
        let mut out = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let aik = self[(i, k)];
                if aik == F::zero() {
                    continue;
                }
                let orow = other.row(k);
                let out_row = out.row_mut(i);
                for (o, b) in out_row.iter_mut().zip(orow.iter()) {
                    *o += aik * *b;
                }
            }
        }
        out
    }
}

impl<F> std::ops::Index<(usize, usize)> for Mat<F> {
    type Output = F;
    fn index(&self, (i, j): (usize, usize)) -> &F {
        &self.data[i * self.cols + j]
    }
}

impl<F> std::ops::IndexMut<(usize, usize)> for Mat<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        &mut self.data[i * self.cols + j]
    }
}

/// Eigendecomposition of a symmetric matrix: `values` ascending, `vectors`
/// column `k` is the eigenvector for `values[k]`.
#[derive(Clone, Debug)]
pub struct SymEigen<F> {
    pub values: Vec<F>,
    pub vectors: Mat<F>,
}

/// Full eigendecomposition of a dense symmetric matrix.
///
/// Householder reduction to tridiagonal form followed by tridiagonal QL
/// with implicit Wilkinson shifts; eigenpairs are sorted ascending.
/// Only the lower triangle of `a` is read.
pub fn sym_eigen<F: Real>(a: &Mat<F>) -> SymEigen<F> {
    let n = a.rows();
    assert_eq!(n, a.cols(), "matrix must be square");
    let mut z = a.clone();
    let mut d = vec![F::zero(); n];
    let mut e = vec![F::zero(); n];
    tred2(&mut z, &mut d, &mut e);
    tql2(&mut d, &mut e, &mut z);
    sort_eigen(&mut d, &mut z);
    SymEigen { values: d, vectors: z }
}

/// Eigenvalues only (same reduction, vector accumulation skipped).
pub fn sym_eigenvalues<F: Real>(a: &Mat<F>) -> Vec<F> {
    // Accumulating vectors costs an extra O(n^3) with a small constant;
    // for the sizes here the split is not worth a second code path.
    sym_eigen(a).values
}

fn sort_eigen<F: Real>(d: &mut [F], z: &mut Mat<F>) {
    let n = d.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| d[i].partial_cmp(&d[j]).expect("NaN eigenvalue"));
    let dd: Vec<F> = order.iter().map(|&k| d[k]).collect();
    d.copy_from_slice(&dd);
    let old = z.clone();
    for (new_col, &old_col) in order.iter().enumerate() {
        for r in 0..n {
            z[(r, new_col)] = old[(r, old_col)];
        }
    }
}

/// Householder reduction of a real symmetric matrix to tridiagonal form.
/// On exit `z` holds the accumulated orthogonal transform, `d` the
/// diagonal, `e[1..]` the subdiagonal.
fn tred2<F: Real>(z: &mut Mat<F>, d: &mut [F], e: &mut [F]) {
    let n = d.len();
    for i in (1..n).rev() {
        let l = i - 1;
        let mut h = F::zero();
        let mut scale = F::zero();
        if l > 0 {
            for k in 0..=l {
                scale += z[(i, k)].abs();
            }
            if scale == F::zero() {
                e[i] = z[(i, l)];
            } else {
                for k in 0..=l {
                    let v = z[(i, k)] / scale;
                    z[(i, k)] = v;
                    h += v * v;
                }
                let mut f = z[(i, l)];
                let g = if f >= F::zero() { -h.sqrt() } else { h.sqrt() };
                e[i] = scale * g;
                h -= f * g;
                z[(i, l)] = f - g;
                f = F::zero();
                for j in 0..=l {
                    z[(j, i)] = z[(i, j)] / h;
                    let mut g = F::zero();
                    for k in 0..=j {
                        g += z[(j, k)] * z[(i, k)];
                    }
                    for k in (j + 1)..=l {
                        g += z[(k, j)] * z[(i, k)];
                    }
                    e[j] = g / h;
                    f += e[j] * z[(i, j)];
                }
                let hh = f / (h + h);
                for j in 0..=l {
                    let f = z[(i, j)];
                    let g = e[j] - hh * f;
                    e[j] = g;
                    for k in 0..=j {
                        let delta = f * e[k] + g * z[(i, k)];
                        z[(j, k)] -= delta;
                    }
                }
            }
        } else {
            e[i] = z[(i, l)];
        }
        d[i] = h;
    }
    d[0] = F::zero();
    e[0] = F::zero();
    for i in 0..n {
        if d[i] != F::zero() {
            for j in 0..i {
                let mut g = F::zero();
                for k in 0..i {
                    g += z[(i, k)] * z[(k, j)];
                }
                for k in 0..i {
                    let delta = g * z[(k, i)];
                    z[(k, j)] -= delta;
                }
            }
        }
        d[i] = z[(i, i)];
        z[(i, i)] = F::one();
        for j in 0..i {
            z[(j, i)] = F::zero();
            z[(i, j)] = F::zero();
        }
    }
}

/// QL with implicit shifts on a tridiagonal matrix, accumulating the
/// transform into `z`.
fn tql2<F: Real>(d: &mut [F], e: &mut [F], z: &mut Mat<F>) {
    let n = d.len();
    if n == 0 {
        return;
    }
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = F::zero();

    for l in 0..n {
        let mut iter = 0usize;
        loop {
            // Find a small subdiagonal element.
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= F::epsilon() * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            assert!(iter <= 60, "QL iteration failed to converge");
            let two = F::of(2.0);
            let mut g = (d[l + 1] - d[l]) / (two * e[l]);
            let mut r = hypot(g, F::one());
            g = d[m] - d[l] + e[l] / (g + sign(r, g));
            let mut s = F::one();
            let mut c = F::one();
            let mut p = F::zero();
            let mut underflow = false;
            for i in (l..m).rev() {
                let mut f = s * e[i];
                let b = c * e[i];
                r = hypot(f, g);
                e[i + 1] = r;
                if r == F::zero() {
                    // Rotation annihilated early; recover and retry the sweep.
                    d[i + 1] -= p;
                    e[m] = F::zero();
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + two * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                for k in 0..n {
                    f = z[(k, i + 1)];
                    z[(k, i + 1)] = s * z[(k, i)] + c * f;
                    z[(k, i)] = c * z[(k, i)] - s * f;
                }
            }
            if underflow {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = F::zero();
        }
    }
}

fn hypot<F: Real>(a: F, b: F) -> F {
    let (a, b) = (a.abs(), b.abs());
    let (big, small) = if a > b { (a, b) } else { (b, a) };
    if big == F::zero() {
        return F::zero();
    }
    let r = small / big;
    big * (F::one() + r * r).sqrt()
}

fn sign<F: Real>(a: F, b: F) -> F {
    if b >= F::zero() {
        a.abs()
    } else {
        -a.abs()
    }
}

/// Cholesky factor of a symmetric positive definite matrix (lower
/// triangular, in place). Returns `None` if a pivot drops below `eps`.
#[derive(Clone, Debug)]
pub struct Cholesky<F> {
    l: Mat<F>,
}

impl<F: Real> Cholesky<F> {
    pub fn new(a: &Mat<F>) -> Option<Self> {
        let n = a.rows();
        assert_eq!(n, a.cols());
        let mut l = Mat::zeros(n, n);
        for i in 0..n {
            for j in 0..=i {
                let mut sum = a[(i, j)];
                for k in 0..j {
                    sum -= l[(i, k)] * l[(j, k)];
                }
                if i == j {
                    if sum <= F::zero() {
                        return None;
                    }
                    l[(i, i)] = sum.sqrt();
                } else {
                    l[(i, j)] = sum / l[(j, j)];
                }
            }
        }
        Some(Cholesky { l })
    }

    /// Solve A x = b in place.
    pub fn solve(&self, b: &mut [F]) {
        let n = self.l.rows();
        assert_eq!(b.len(), n);
        // L y = b
        for i in 0..n {
            let mut sum = b[i];
            for k in 0..i {
                sum -= self.l[(i, k)] * b[k];
            }
            b[i] = sum / self.l[(i, i)];
        }
        // Lᵀ x = y
        for i in (0..n).rev() {
            let mut sum = b[i];
            for k in (i + 1)..n {
                sum -= self.l[(k, i)] * b[k];
            }
            b[i] = sum / self.l[(i, i)];
        }
    }
}
