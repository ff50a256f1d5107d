//! Exact dense linear algebra over prime fields GF(p).
//!
//! Everything downstream (radicals, Hom spaces, certificate searches) reduces
//! to the operations here: deterministic reduced row echelon form, kernel
//! bases and affine solves. No floating point, no randomized pivoting.

use crate::{Error, Result};

/// Residues are stored as `u32` in `[0, p)`.
pub type Fp = u32;

/// Largest admissible modulus (exclusive).
pub const MAX_MODULUS: u32 = 1 << 16;
/// Largest admissible matrix side. Constraint systems (Hom solves over
/// modules of moderate dimension) can be several times wider than the
/// underlying objects, so this sits well above the algebra/module caps.
pub const MAX_MATRIX_SIDE: usize = 1 << 14;

pub fn fp_add(a: Fp, b: Fp, p: u32) -> Fp {
    let s = a + b;
    if s >= p { s - p } else { s }
}

pub fn fp_sub(a: Fp, b: Fp, p: u32) -> Fp {
    if a >= b { a - b } else { a + p - b }
}

pub fn fp_neg(a: Fp, p: u32) -> Fp {
    if a == 0 { 0 } else { p - a }
}

pub fn fp_mul(a: Fp, b: Fp, p: u32) -> Fp {
    ((a as u64 * b as u64) % p as u64) as Fp
}

pub fn fp_pow(mut a: Fp, mut e: u64, p: u32) -> Fp {
    let mut acc: Fp = 1 % p;
    while e > 0 {
        if e & 1 == 1 {
            acc = fp_mul(acc, a, p);
        }
        a = fp_mul(a, a, p);
        e >>= 1;
    }
    acc
}

/// Multiplicative inverse; `p` must be prime and `a` nonzero.
pub fn fp_inv(a: Fp, p: u32) -> Fp {
    debug_assert!(a % p != 0, "inverse of zero mod {p}");
    fp_pow(a % p, p as u64 - 2, p)
}

pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Checks the modulus cap and primality once, at construction boundaries.
pub fn check_modulus(p: u32) -> Result<()> {
    if p >= MAX_MODULUS {
        return Err(Error::CapExceeded(format!(
            "modulus {p} exceeds cap {MAX_MODULUS}"
        )));
    }
    if !is_prime(p) {
        return Err(Error::Invalid(format!("modulus {p} is not prime")));
    }
    Ok(())
}

/// Dense row-major matrix over GF(p).
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub p: u32,
    data: Vec<Fp>,
}

impl std::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Matrix {}x{} mod {} [", self.rows, self.cols, self.p)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", &self.data[r * self.cols..(r + 1) * self.cols])?;
        }
        write!(f, "]")
    }
}

/// Outcome of `rref`: the reduced matrix, pivot columns and rank.
pub struct Rref {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize, p: u32) -> Self {
        assert!(
            rows <= MAX_MATRIX_SIDE && cols <= MAX_MATRIX_SIDE,
            "matrix side exceeds cap {MAX_MATRIX_SIDE}"
        );
        Matrix { rows, cols, p, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize, p: u32) -> Self {
        let mut m = Matrix::zero(n, n, p);
        for i in 0..n {
            m.set(i, i, 1 % p);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Fp>>, p: u32) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut m = Matrix::zero(r, c, p);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, v % p);
            }
        }
        m
    }

    pub fn from_flat(rows: usize, cols: usize, data: Vec<Fp>, p: u32) -> Self {
        assert_eq!(data.len(), rows * cols);
        let data = data.into_iter().map(|v| v % p).collect();
        Matrix { rows, cols, p, data }
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Fp {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Fp) {
        self.data[r * self.cols + c] = v % self.p;
    }

    pub fn row(&self, r: usize) -> &[Fp] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn rows_vec(&self) -> Vec<Vec<Fp>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zero(self.cols, self.rows, self.p);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn check_same_modulus(&self, other: &Matrix) -> Result<()> {
        if self.p != other.p {
            return Err(Error::ModulusMismatch(self.p, other.p));
        }
        Ok(())
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_modulus(other)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "add {}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let p = self.p;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| fp_add(a, b, p))
            .collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, p, data })
    }

    pub fn scale(&self, c: Fp) -> Matrix {
        let p = self.p;
        let c = c % p;
        let data = self.data.iter().map(|&a| fp_mul(a, c, p)).collect();
        Matrix { rows: self.rows, cols: self.cols, p, data }
    }

    pub fn add_scaled_assign(&mut self, other: &Matrix, c: Fp) {
        let p = self.p;
        for (a, &b) in self.data.iter_mut().zip(&other.data) {
            *a = fp_add(*a, fp_mul(b, c, p), p);
        }
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_modulus(other)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "mul {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let p = self.p as u64;
        let mut out = Matrix::zero(self.rows, other.cols, self.p);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k) as u64;
                if a == 0 {
                    continue;
                }
                let orow = &other.data[k * other.cols..(k + 1) * other.cols];
                let dst = &mut out.data[i * other.cols..(i + 1) * other.cols];
                for (d, &b) in dst.iter_mut().zip(orow) {
                    *d = ((*d as u64 + a * b as u64) % p) as Fp;
                }
            }
        }
        Ok(out)
    }

    /// Matrix-vector product `self * v`.
    pub fn apply(&self, v: &[Fp]) -> Vec<Fp> {
        assert_eq!(self.cols, v.len());
        let p = self.p as u64;
        let mut out = vec![0u32; self.rows];
        for i in 0..self.rows {
            let mut acc = 0u64;
            let row = self.row(i);
            for (a, &b) in row.iter().zip(v) {
                acc += *a as u64 * b as u64;
                if acc >= u64::MAX / 2 {
                    acc %= p;
                }
            }
            out[i] = (acc % p) as Fp;
        }
        out
    }

    /// Deterministic reduced row echelon form with leftmost pivots.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let p = m.p;
        let mut pivots = Vec::new();
        let mut pr = 0usize; // next pivot row
        for col in 0..m.cols {
            if pr == m.rows {
                break;
            }
            // first nonzero entry in this column at or below pr
            let mut sel = None;
            for r in pr..m.rows {
                if m.get(r, col) != 0 {
                    sel = Some(r);
                    break;
                }
            }
            let Some(sel) = sel else { continue };
            if sel != pr {
                for c in 0..m.cols {
                    let a = m.get(pr, c);
                    let b = m.get(sel, c);
                    m.set(pr, c, b);
                    m.set(sel, c, a);
                }
            }
            let inv = fp_inv(m.get(pr, col), p);
            for c in col..m.cols {
                let v = fp_mul(m.get(pr, c), inv, p);
                m.set(pr, c, v);
            }
            for r in 0..m.rows {
                if r == pr {
                    continue;
                }
                let f = m.get(r, col);
                if f == 0 {
                    continue;
                }
                let neg = fp_neg(f, p);
                for c in col..m.cols {
                    let v = fp_add(m.get(r, c), fp_mul(m.get(pr, c), neg, p), p);
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            pr += 1;
        }
        let rank = pivots.len();
        Rref { matrix: m, pivots, rank }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of the right kernel `{v : M v = 0}`, one vector per non-pivot column.
    pub fn kernel_basis(&self) -> Vec<Vec<Fp>> {
        let Rref { matrix: r, pivots, rank } = self.rref();
        let p = self.p;
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::with_capacity(self.cols - rank);
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![0u32; self.cols];
            v[free] = 1 % p;
            for (prow, &pcol) in pivots.iter().enumerate() {
                v[pcol] = fp_neg(r.get(prow, free), p);
            }
            basis.push(v);
        }
        basis
    }

    /// Solve `M x = b`. Returns a particular solution and a kernel basis, or
    /// `None` when the system is inconsistent.
    pub fn solve_affine(&self, b: &[Fp]) -> Result<Option<(Vec<Fp>, Vec<Vec<Fp>>)>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "solve: {} rows vs rhs length {}",
                self.rows,
                b.len()
            )));
        }
        let p = self.p;
        // augmented matrix [M | b]
        let mut aug = Matrix::zero(self.rows, self.cols + 1, p);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c));
            }
            aug.set(r, self.cols, b[r] % p);
        }
        let Rref { matrix: rm, pivots, .. } = aug.rref();
        if pivots.contains(&self.cols) {
            return Ok(None); // pivot in the constant column: inconsistent
        }
        let mut x = vec![0u32; self.cols];
        for (prow, &pcol) in pivots.iter().enumerate() {
            x[pcol] = rm.get(prow, self.cols);
        }
        Ok(Some((x, self.kernel_basis())))
    }

    /// Inverse of a square matrix, if it exists.
    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let p = self.p;
        let mut aug = Matrix::zero(n, 2 * n, p);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c));
            }
            aug.set(r, n + r, 1 % p);
        }
        let Rref { matrix: rm, rank, pivots } = aug.rref();
        if rank < n || pivots.iter().take(n).enumerate().any(|(i, &c)| c != i) {
            return None;
        }
        let mut inv = Matrix::zero(n, n, p);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, rm.get(r, n + c));
            }
        }
        Some(inv)
    }

    /// Horizontal stack of blocks along the diagonal is not needed; this glues
    /// `self` on top of `other`.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        assert_eq!(self.p, other.p);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix { rows: self.rows + other.rows, cols: self.cols, p: self.p, data }
    }
}

/// A subspace of GF(p)^n kept in rref canonical form, so equality of
/// subspaces is entrywise comparison of bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    pub ambient: usize,
    pub p: u32,
    /// rref rows; empty for the zero subspace.
    pub basis: Vec<Vec<Fp>>,
}

impl Subspace {
    pub fn zero(ambient: usize, p: u32) -> Self {
        Subspace { ambient, p, basis: Vec::new() }
    }

    pub fn from_spanning(ambient: usize, p: u32, vectors: &[Vec<Fp>]) -> Self {
        if vectors.is_empty() {
            return Subspace::zero(ambient, p);
        }
        let m = Matrix::from_rows(vectors.to_vec(), p);
        assert_eq!(m.cols, ambient);
        let r = m.rref();
        let basis = (0..r.rank).map(|i| r.matrix.row(i).to_vec()).collect();
        Subspace { ambient, p, basis }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, v: &[Fp]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    /// Reduce `v` against the rref basis; the residue is zero iff `v` lies in
    /// the subspace.
    pub fn reduce(&self, v: &[Fp]) -> Vec<Fp> {
        let p = self.p;
        let mut w: Vec<Fp> = v.iter().map(|&x| x % p).collect();
        for row in &self.basis {
            let lead = row.iter().position(|&x| x != 0).expect("nonzero rref row");
            let f = w[lead];
            if f != 0 {
                let neg = fp_neg(f, p);
                for (wi, &ri) in w.iter_mut().zip(row) {
                    *wi = fp_add(*wi, fp_mul(ri, neg, p), p);
                }
            }
        }
        w
    }

    /// Coordinates of `v` in this rref basis, if `v` lies in the subspace.
    pub fn coords(&self, v: &[Fp]) -> Option<Vec<Fp>> {
        let p = self.p;
        let mut w: Vec<Fp> = v.iter().map(|&x| x % p).collect();
        let mut coords = vec![0u32; self.basis.len()];
        for (i, row) in self.basis.iter().enumerate() {
            let lead = row.iter().position(|&x| x != 0).expect("nonzero rref row");
            let f = w[lead];
            if f != 0 {
                coords[i] = f;
                let neg = fp_neg(f, p);
                for (wi, &ri) in w.iter_mut().zip(row) {
                    *wi = fp_add(*wi, fp_mul(ri, neg, p), p);
                }
            }
        }
        if w.iter().all(|&x| x == 0) {
            Some(coords)
        } else {
            None
        }
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        Subspace::from_spanning(self.ambient, self.p, &all)
    }

    /// Intersection via the kernel of the stacked coefficient matrix.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        if self.dim() == 0 || other.dim() == 0 {
            return Subspace::zero(self.ambient, self.p);
        }
        let p = self.p;
        // columns: coefficients on self.basis then other.basis;
        // rows: ambient coordinates; solve  sum a_i u_i - sum b_j v_j = 0.
        let mut m = Matrix::zero(self.ambient, self.dim() + other.dim(), p);
        for (j, u) in self.basis.iter().enumerate() {
            for i in 0..self.ambient {
                m.set(i, j, u[i]);
            }
        }
        for (j, v) in other.basis.iter().enumerate() {
            for i in 0..self.ambient {
                m.set(i, self.dim() + j, fp_neg(v[i], p));
            }
        }
        let mut vectors = Vec::new();
        for k in m.kernel_basis() {
            let mut w = vec![0u32; self.ambient];
            for (j, u) in self.basis.iter().enumerate() {
                let c = k[j];
                if c != 0 {
                    for i in 0..self.ambient {
                        w[i] = fp_add(w[i], fp_mul(c, u[i], p), p);
                    }
                }
            }
            vectors.push(w);
        }
        Subspace::from_spanning(self.ambient, self.p, &vectors)
    }
}

pub fn vec_add(a: &[Fp], b: &[Fp], p: u32) -> Vec<Fp> {
    a.iter().zip(b).map(|(&x, &y)| fp_add(x, y, p)).collect()
}

pub fn vec_scale(a: &[Fp], c: Fp, p: u32) -> Vec<Fp> {
    a.iter().map(|&x| fp_mul(x, c, p)).collect()
}

pub fn vec_add_scaled(acc: &mut [Fp], a: &[Fp], c: Fp, p: u32) {
    for (x, &y) in acc.iter_mut().zip(a) {
        *x = fp_add(*x, fp_mul(y, c, p), p);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_duplicate_rows_gf2() {
        let m = Matrix::from_rows(vec![vec![1, 1], vec![1, 1]], 2);
        let r = m.rref();
        assert_eq!(r.rank, 1);
        assert_eq!(r.matrix.rows_vec(), vec![vec![1, 1], vec![0, 0]]);
    }

    #[test]
    fn rref_identity_fixed() {
        let m = Matrix::identity(3, 5);
        let r = m.rref();
        assert_eq!(r.rank, 3);
        assert_eq!(r.matrix, Matrix::identity(3, 5));
    }

    #[test]
    fn rref_hand_reduction_gf5() {
        // 2^{-1} = 3 mod 5
        let m = Matrix::from_rows(vec![vec![2, 4], vec![1, 2]], 5);
        let r = m.rref();
        assert_eq!(r.rank, 1);
        assert_eq!(r.matrix.rows_vec(), vec![vec![1, 2], vec![0, 0]]);
    }

    #[test]
    fn rref_idempotent() {
        let m = Matrix::from_rows(vec![vec![1, 2, 3], vec![2, 4, 1], vec![0, 1, 1]], 5);
        let r1 = m.rref().matrix;
        let r2 = r1.rref().matrix;
        assert_eq!(r1, r2);
    }

    #[test]
    fn kernel_forced_equality_gf2() {
        let m = Matrix::from_rows(vec![vec![1, 1]], 2);
        assert_eq!(m.kernel_basis(), vec![vec![1, 1]]);
    }

    #[test]
    fn kernel_of_invertible_empty() {
        let m = Matrix::from_rows(vec![vec![1, 1], vec![0, 1]], 3);
        assert!(m.kernel_basis().is_empty());
    }

    #[test]
    fn kernel_rank_nullity_and_annihilation() {
        let m = Matrix::from_rows(vec![vec![1, 2, 3]], 5);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(m.apply(v).iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn solve_scalar_inverse() {
        let m = Matrix::from_rows(vec![vec![2]], 5);
        let (x, _) = m.solve_affine(&[1]).unwrap().unwrap();
        assert_eq!(x, vec![3]);
    }

    #[test]
    fn solve_inconsistent() {
        let m = Matrix::from_rows(vec![vec![0]], 5);
        assert!(m.solve_affine(&[1]).unwrap().is_none());
    }

    #[test]
    fn solve_random_consistent_system() {
        // b := M x for a fixed x, residual must vanish exactly
        let p = 3;
        let mut data = Vec::new();
        let mut s = 1u64;
        for _ in 0..6 * 9 {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            data.push((s >> 33) as u32 % p);
        }
        let m = Matrix::from_flat(6, 9, data, p);
        let x: Vec<Fp> = (0..9).map(|i| (i as u32 * 2 + 1) % p).collect();
        let b = m.apply(&x);
        let (x0, _) = m.solve_affine(&b).unwrap().unwrap();
        assert_eq!(m.apply(&x0), b);
    }

    #[test]
    fn inverse_roundtrip() {
        let m = Matrix::from_rows(vec![vec![1, 2], vec![3, 4]], 7);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(2, 7));
    }

    #[test]
    fn subspace_intersection() {
        // span{(1,0,0),(0,1,0)} cap span{(0,1,0),(0,0,1)} = span{(0,1,0)}
        let a = Subspace::from_spanning(3, 2, &[vec![1, 0, 0], vec![0, 1, 0]]);
        let b = Subspace::from_spanning(3, 2, &[vec![0, 1, 0], vec![0, 0, 1]]);
        let i = a.intersect(&b);
        assert_eq!(i.basis, vec![vec![0, 1, 0]]);
    }
}
