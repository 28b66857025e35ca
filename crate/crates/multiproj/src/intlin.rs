//! Exact integer linear algebra: Smith and Hermite normal forms, saturated
//! kernel lattices (with torsion congruences), rank, and finite-index tests.
//!
//! Matrices follow the mathematical convention that columns are vectors, so
//! the degree map of a graded ring is a matrix whose columns are the variable
//! degrees. All arithmetic is exact `i64` with overflow detection.

// Eliminations touch several rows of one matrix at a time; index loops are
// the natural shape for them.
#![allow(clippy::needless_range_loop)]

use crate::arith;
use crate::Result;

/// Dense integer matrix, row-major storage.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> IntMatrix {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> IntMatrix {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Build from row slices; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<i64>>) -> IntMatrix {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(nrows * ncols);
        for r in &rows {
            assert_eq!(r.len(), ncols, "ragged rows");
            data.extend_from_slice(r);
        }
        IntMatrix {
            rows: nrows,
            cols: ncols,
            data,
        }
    }

    /// Build from column vectors.
    pub fn from_cols(ambient: usize, cols: &[Vec<i64>]) -> IntMatrix {
        let mut m = IntMatrix::zeros(ambient, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), ambient, "column length mismatch");
            for (i, &x) in c.iter().enumerate() {
                m.set(i, j, x);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[i64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<i64> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn col_vecs(&self) -> Vec<Vec<i64>> {
        (0..self.cols).map(|c| self.col(c)).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    /// Checked matrix product.
    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        assert_eq!(self.cols, other.rows, "shape mismatch in matrix product");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = 0i64;
                for l in 0..self.cols {
                    acc = arith::add_mul(acc, self.get(i, l), other.get(l, j))?;
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    /// Checked matrix-vector product (vector as column).
    pub fn mul_vec(&self, v: &[i64]) -> Result<Vec<i64>> {
        assert_eq!(
            self.cols,
            v.len(),
            "shape mismatch in matrix-vector product"
        );
        (0..self.rows).map(|r| arith::dot(self.row(r), v)).collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            let t = self.get(a, c);
            self.set(a, c, self.get(b, c));
            self.set(b, c, t);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            let t = self.get(r, a);
            self.set(r, a, self.get(r, b));
            self.set(r, b, t);
        }
    }

    /// row_i += q * row_j
    fn row_op(&mut self, i: usize, q: i64, j: usize) -> Result<()> {
        for c in 0..self.cols {
            let v = arith::add_mul(self.get(i, c), q, self.get(j, c))?;
            self.set(i, c, v);
        }
        Ok(())
    }

    /// col_i += q * col_j
    fn col_op(&mut self, i: usize, q: i64, j: usize) -> Result<()> {
        for r in 0..self.rows {
            let v = arith::add_mul(self.get(r, i), q, self.get(r, j))?;
            self.set(r, i, v);
        }
        Ok(())
    }

    fn negate_col(&mut self, c: usize) -> Result<()> {
        for r in 0..self.rows {
            let v = arith::neg(self.get(r, c))?;
            self.set(r, c, v);
        }
        Ok(())
    }
}

/// Result of a Smith normal form computation: `U * A * V = D` with `U`, `V`
/// unimodular and `D` diagonal with a divisibility chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    /// The positive diagonal entries `d_1 | d_2 | ...`; zeros are omitted.
    pub invariant_factors: Vec<i64>,
}

/// Smith normal form with transformation matrices.
///
/// Pivoting always selects the smallest nonzero entry of the working
/// submatrix, which keeps intermediate growth modest and the output
/// deterministic.
pub fn smith_normal_form(a: &IntMatrix) -> Result<SmithDecomposition> {
    let (m, n) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);

    let mut t = 0usize;
    'outer: while t < m.min(n) {
        // Smallest nonzero entry of the submatrix [t.., t..].
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..m {
            for j in t..n {
                let x = d.get(i, j);
                if x != 0 && pivot.is_none_or(|(pi, pj)| x.abs() < d.get(pi, pj).abs()) {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else {
            break;
        };
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);

        // Clear row and column t by Euclidean steps.
        loop {
            let p = d.get(t, t);
            debug_assert_ne!(p, 0);
            let mut smaller: Option<(usize, usize)> = None;
            for i in t + 1..m {
                let x = d.get(i, t);
                if x != 0 {
                    let q = x.div_euclid(p);
                    d.row_op(i, arith::neg(q)?, t)?;
                    u.row_op(i, arith::neg(q)?, t)?;
                    if d.get(i, t) != 0 {
                        smaller = Some((i, t));
                    }
                }
            }
            for j in t + 1..n {
                let x = d.get(t, j);
                if x != 0 {
                    let q = x.div_euclid(p);
                    d.col_op(j, arith::neg(q)?, t)?;
                    v.col_op(j, arith::neg(q)?, t)?;
                    if d.get(t, j) != 0 {
                        smaller = Some((t, j));
                    }
                }
            }
            match smaller {
                Some((i, j)) => {
                    // A nonzero remainder is strictly smaller than the pivot;
                    // move it into the pivot position and repeat.
                    d.swap_rows(t, i.max(t));
                    u.swap_rows(t, i.max(t));
                    if j > t {
                        d.swap_cols(t, j);
                        v.swap_cols(t, j);
                    }
                }
                None => break,
            }
        }

        // Pivot must divide every remaining entry; if not, fold the offending
        // row into row t and re-reduce.
        let p = d.get(t, t);
        for i in t + 1..m {
            for j in t + 1..n {
                if d.get(i, j) % p != 0 {
                    d.row_op(t, 1, i)?;
                    u.row_op(t, 1, i)?;
                    continue 'outer;
                }
            }
        }
        t += 1;
    }

    // Positive diagonal.
    for i in 0..m.min(n) {
        if d.get(i, i) < 0 {
            d.negate_col(i)?;
            v.negate_col(i)?;
        }
    }

    let invariant_factors: Vec<i64> = (0..m.min(n))
        .map(|i| d.get(i, i))
        .filter(|&x| x != 0)
        .collect();
    Ok(SmithDecomposition {
        u,
        d,
        v,
        invariant_factors,
    })
}

/// Canonical row Hermite normal form. Returns only the nonzero rows: pivots
/// are positive, strictly to the right of the pivot above, entries above a
/// pivot are reduced into `[0, pivot)`, and entries below are zero.
pub fn row_hnf(a: &IntMatrix) -> Result<IntMatrix> {
    let (m, n) = (a.rows(), a.cols());
    let mut h = a.clone();
    let mut r = 0usize;
    for c in 0..n {
        if r == m {
            break;
        }
        loop {
            // Smallest nonzero entry of column c among rows >= r.
            let mut best: Option<usize> = None;
            for i in r..m {
                let x = h.get(i, c);
                if x != 0 && best.is_none_or(|b| x.abs() < h.get(b, c).abs()) {
                    best = Some(i);
                }
            }
            let Some(b) = best else {
                break;
            };
            h.swap_rows(r, b);
            let p = h.get(r, c);
            let mut dirty = false;
            for i in r + 1..m {
                let x = h.get(i, c);
                if x != 0 {
                    let q = x.div_euclid(p);
                    h.row_op(i, arith::neg(q)?, r)?;
                    dirty = dirty || h.get(i, c) != 0;
                }
            }
            if !dirty {
                break;
            }
        }
        if h.get(r, c) == 0 {
            continue;
        }
        if h.get(r, c) < 0 {
            for j in 0..n {
                h.set(r, j, arith::neg(h.get(r, j))?);
            }
        }
        let p = h.get(r, c);
        for i in 0..r {
            let q = h.get(i, c).div_euclid(p);
            if q != 0 {
                h.row_op(i, arith::neg(q)?, r)?;
            }
        }
        r += 1;
    }
    Ok(IntMatrix::from_rows(
        h.row_vecs().into_iter().take(r).collect(),
    ))
}

/// Column Hermite normal form (columns generate the same lattice).
pub fn column_hnf(a: &IntMatrix) -> Result<IntMatrix> {
    Ok(row_hnf(&a.transpose())?.transpose())
}

/// A basis of a sublattice of `Z^ambient_dim`, stored as the columns of a
/// matrix in canonical column Hermite normal form.
///
/// Columns are always linearly independent over the rationals, so the basis
/// represents its subgroup exactly. Kernels of integer matrices are
/// automatically saturated (the quotient is torsion-free); congruence kernels
/// coming from torsion gradings are generally proper finite-index sublattices
/// of their saturation, and are represented exactly as such.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeBasis {
    ambient_dim: usize,
    basis: IntMatrix,
}

impl LatticeBasis {
    /// Canonicalize a spanning set of columns into a basis.
    pub fn from_spanning_cols(ambient_dim: usize, cols: &[Vec<i64>]) -> Result<LatticeBasis> {
        let m = IntMatrix::from_cols(ambient_dim, cols);
        let h = column_hnf(&m)?;
        let basis = if h.cols() == 0 {
            IntMatrix::zeros(ambient_dim, 0)
        } else {
            debug_assert_eq!(h.rows(), ambient_dim);
            h
        };
        Ok(LatticeBasis { ambient_dim, basis })
    }

    /// The standard lattice `Z^n`.
    pub fn standard(n: usize) -> LatticeBasis {
        LatticeBasis {
            ambient_dim: n,
            basis: IntMatrix::identity(n),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn rank(&self) -> usize {
        self.basis.cols()
    }

    /// Basis matrix; columns are the basis vectors.
    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn columns(&self) -> Vec<Vec<i64>> {
        self.basis.col_vecs()
    }

    /// Pivot row of each basis column (strictly increasing).
    fn pivot_rows(&self) -> Vec<usize> {
        let mut pivots = Vec::with_capacity(self.rank());
        let mut r = 0usize;
        for j in 0..self.basis.cols() {
            while r < self.ambient_dim && self.basis.get(r, j) == 0 {
                r += 1;
            }
            debug_assert!(r < self.ambient_dim, "HNF column without pivot");
            pivots.push(r);
        }
        pivots
    }

    /// Integer coordinates of `v` in this basis, or `None` when `v` is not in
    /// the lattice. Solved by forward substitution on the HNF pivot rows.
    pub fn coords_of(&self, v: &[i64]) -> Result<Option<Vec<i64>>> {
        assert_eq!(v.len(), self.ambient_dim);
        let pivots = self.pivot_rows();
        let r = self.rank();
        let mut x = vec![0i64; r];
        for j in 0..r {
            let p = pivots[j];
            let mut rhs = v[p];
            for l in 0..j {
                rhs = arith::sub(rhs, arith::mul(self.basis.get(p, l), x[l])?)?;
            }
            let d = self.basis.get(p, j);
            if rhs % d != 0 {
                return Ok(None);
            }
            x[j] = rhs / d;
        }
        // Verify the non-pivot rows as well.
        if self.basis.mul_vec(&x)? == v {
            Ok(Some(x))
        } else {
            Ok(None)
        }
    }

    pub fn contains(&self, v: &[i64]) -> Result<bool> {
        Ok(self.coords_of(v)?.is_some())
    }
}

/// Kernel of an integer matrix as a saturated lattice, via Smith normal form.
pub fn kernel_of(a: &IntMatrix) -> Result<LatticeBasis> {
    let n = a.cols();
    if a.rows() == 0 {
        return Ok(LatticeBasis::standard(n));
    }
    let snf = smith_normal_form(a)?;
    let r = snf.invariant_factors.len();
    let cols: Vec<Vec<i64>> = (r..n).map(|j| snf.v.col(j)).collect();
    LatticeBasis::from_spanning_cols(n, &cols)
}

/// Lattice of all `v` in `Z^k` with `a_free v = 0` and `a_tor v = 0 mod m_i`
/// rowwise. Torsion congruences are handled by stacking scaled identity
/// columns (auxiliary unknowns for the multiples of `m_i`) and projecting the
/// combined kernel back to the first `k` coordinates.
pub fn kernel_lattice(
    a_free: &IntMatrix,
    a_tor: &IntMatrix,
    moduli: &[i64],
) -> Result<LatticeBasis> {
    let k = a_free.cols().max(a_tor.cols());
    assert!(
        a_free.rows() == 0 || a_free.cols() == k,
        "column count mismatch"
    );
    assert!(
        a_tor.rows() == 0 || a_tor.cols() == k,
        "column count mismatch"
    );
    assert_eq!(a_tor.rows(), moduli.len(), "one modulus per torsion row");
    assert!(
        moduli.iter().all(|&m| m >= 2),
        "torsion moduli must be >= 2"
    );

    let s = a_free.rows();
    let t = a_tor.rows();
    if s == 0 && t == 0 {
        return Ok(LatticeBasis::standard(k));
    }

    let mut stacked = IntMatrix::zeros(s + t, k + t);
    for i in 0..s {
        for j in 0..k {
            stacked.set(i, j, a_free.get(i, j));
        }
    }
    for i in 0..t {
        for j in 0..k {
            stacked.set(s + i, j, a_tor.get(i, j));
        }
        stacked.set(s + i, k + i, moduli[i]);
    }

    let full = kernel_of(&stacked)?;
    let projected: Vec<Vec<i64>> = full
        .columns()
        .into_iter()
        .map(|c| c[..k].to_vec())
        .collect();
    LatticeBasis::from_spanning_cols(k, &projected)
}

/// Rational rank of a matrix.
pub fn rank(a: &IntMatrix) -> Result<usize> {
    arith::rank_rows(&a.row_vecs())
}

/// Whether the given free-part degree vectors span a finite-index subgroup of
/// `Z^s`, i.e. whether their rational rank is `s`. For `s = 0` the trivial
/// group has index 1 in itself.
pub fn finite_index(vectors: &[Vec<i64>], s: usize) -> Result<bool> {
    assert!(
        vectors.iter().all(|v| v.len() == s),
        "vector length mismatch"
    );
    if s == 0 {
        return Ok(true);
    }
    Ok(arith::rank_rows(vectors)? == s)
}
