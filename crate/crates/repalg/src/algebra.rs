//! Finite-dimensional associative unital algebras over GF(p) given by
//! structure-constant tables.
//!
//! The Jacobson radical is computed with the characteristic-p trace-form
//! tower (iterated p-th-power traces of integral lifts) applied to a faithful
//! matrix representation; the naive characteristic-zero trace form is wrong
//! in characteristic p.

use crate::exec;
use crate::linalg::{check_modulus, fp_add, fp_mul, Fp, Matrix, Subspace};
use crate::{Error, Result};

/// Hard cap on algebra dimension. Endomorphism algebras of modules reach a
/// few hundred; plain structure-constant inputs stay far below this.
pub const ALG_DIM_CAP: usize = 512;

/// A unital associative algebra over GF(p): `table[i][j]` holds the
/// coordinates of `b_i * b_j` in the basis `b_0..b_{n-1}`.
#[derive(Clone, PartialEq)]
pub struct Algebra {
    pub p: u32,
    pub dim: usize,
    pub table: Vec<Vec<Fp>>,
    pub unit: Vec<Fp>,
    pub labels: Option<Vec<String>>,
}

impl std::fmt::Debug for Algebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Algebra(dim {}, p {})", self.dim, self.p)
    }
}

/// Outcome of `validate`: either both invariants hold or the first failing
/// identity is named.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ValidationReport {
    Ok,
    AssociativityFails { i: usize, j: usize, k: usize },
    UnitFails { i: usize },
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        matches!(self, ValidationReport::Ok)
    }
}

/// A two-sided ideal, stored as an rref-canonical subspace of the parent's
/// coordinate space so ideal equality is entrywise comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    pub basis: Subspace,
}

impl Ideal {
    pub fn dim(&self) -> usize {
        self.basis.dim()
    }
    pub fn is_zero(&self) -> bool {
        self.basis.dim() == 0
    }
}

/// Radical filtration data: dims of rad^m for m = 0, 1, ... down to 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraProfile {
    pub radical_dims: Vec<usize>,
    pub loewy_length: usize,
    pub semisimple: bool,
}

impl Algebra {
    pub fn new(p: u32, table: Vec<Vec<Fp>>, unit: Vec<Fp>) -> Result<Self> {
        check_modulus(p)?;
        let dim2 = table.len();
        let dim = (dim2 as f64).sqrt().round() as usize;
        if dim * dim != dim2 {
            return Err(Error::Invalid(format!(
                "table length {dim2} is not a perfect square"
            )));
        }
        Self::from_parts(p, dim, table, unit, None)
    }

    pub fn from_parts(
        p: u32,
        dim: usize,
        table: Vec<Vec<Fp>>,
        unit: Vec<Fp>,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        check_modulus(p)?;
        if dim == 0 {
            return Err(Error::Invalid("algebra dimension must be >= 1".into()));
        }
        if dim > ALG_DIM_CAP {
            return Err(Error::CapExceeded(format!(
                "algebra dimension {dim} exceeds cap {ALG_DIM_CAP}"
            )));
        }
        if table.len() != dim * dim {
            return Err(Error::DimensionMismatch(format!(
                "table has {} entries, expected {}",
                table.len(),
                dim * dim
            )));
        }
        if unit.len() != dim || table.iter().any(|v| v.len() != dim) {
            return Err(Error::DimensionMismatch(
                "coordinate vectors must have length dim".into(),
            ));
        }
        if let Some(ref l) = labels {
            if l.len() != dim {
                return Err(Error::DimensionMismatch("labels length".into()));
            }
        }
        let table = table
            .into_iter()
            .map(|v| v.into_iter().map(|x| x % p).collect())
            .collect();
        let unit = unit.into_iter().map(|x| x % p).collect();
        Ok(Algebra { p, dim, table, unit, labels })
    }

    /// The ground field GF(p) as a 1-dimensional algebra.
    pub fn ground_field(p: u32) -> Result<Self> {
        Algebra::new(p, vec![vec![1]], vec![1])
    }

    #[inline]
    pub fn entry(&self, i: usize, j: usize) -> &[Fp] {
        &self.table[i * self.dim + j]
    }

    /// Product of two elements given by coordinate vectors.
    pub fn mul(&self, x: &[Fp], y: &[Fp]) -> Vec<Fp> {
        let p = self.p;
        let mut out = vec![0u32; self.dim];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                if yj == 0 {
                    continue;
                }
                let c = fp_mul(xi, yj, p);
                let t = self.entry(i, j);
                for (o, &tk) in out.iter_mut().zip(t) {
                    *o = fp_add(*o, fp_mul(c, tk, p), p);
                }
            }
        }
        out
    }

    /// Matrix of left multiplication by `x` in the algebra basis.
    pub fn left_mult(&self, x: &[Fp]) -> Matrix {
        let mut m = Matrix::zero(self.dim, self.dim, self.p);
        for j in 0..self.dim {
            let mut ej = vec![0u32; self.dim];
            ej[j] = 1;
            let col = self.mul(x, &ej);
            for i in 0..self.dim {
                m.set(i, j, col[i]);
            }
        }
        m
    }

    /// Matrix of right multiplication by `x`.
    pub fn right_mult(&self, x: &[Fp]) -> Matrix {
        let mut m = Matrix::zero(self.dim, self.dim, self.p);
        for j in 0..self.dim {
            let mut ej = vec![0u32; self.dim];
            ej[j] = 1;
            let col = self.mul(&ej, x);
            for i in 0..self.dim {
                m.set(i, j, col[i]);
            }
        }
        m
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Fp> {
        let mut v = vec![0u32; self.dim];
        v[i] = 1;
        v
    }

    /// Checks associativity on all basis triples and the unit law; reports
    /// the first failing identity instead of erroring.
    pub fn validate(&self) -> ValidationReport {
        for i in 0..self.dim {
            let bi = self.basis_vector(i);
            if self.mul(&self.unit, &bi) != bi || self.mul(&bi, &self.unit) != bi {
                return ValidationReport::UnitFails { i };
            }
        }
        for i in 0..self.dim {
            for j in 0..self.dim {
                let ij = self.entry(i, j).to_vec();
                for k in 0..self.dim {
                    let bk = self.basis_vector(k);
                    let left = self.mul(&ij, &bk);
                    let jk = self.entry(j, k).to_vec();
                    let bi = self.basis_vector(i);
                    let right = self.mul(&bi, &jk);
                    if left != right {
                        return ValidationReport::AssociativityFails { i, j, k };
                    }
                }
            }
        }
        ValidationReport::Ok
    }

    /// Opposite algebra: the table transposed in its two lower indices.
    pub fn opposite(&self) -> Algebra {
        let mut table = Vec::with_capacity(self.dim * self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                table.push(self.entry(j, i).to_vec());
            }
        }
        Algebra {
            p: self.p,
            dim: self.dim,
            table,
            unit: self.unit.clone(),
            labels: self.labels.clone(),
        }
    }

    /// Tensor product over GF(p); basis pairs ordered `(i, j) -> i*dimB + j`.
    pub fn tensor_product(&self, other: &Algebra) -> Result<Algebra> {
        if self.p != other.p {
            return Err(Error::ModulusMismatch(self.p, other.p));
        }
        let p = self.p;
        let (na, nb) = (self.dim, other.dim);
        let dim = na * nb;
        if dim > ALG_DIM_CAP {
            return Err(Error::CapExceeded(format!(
                "tensor product dimension {dim} exceeds cap {ALG_DIM_CAP}"
            )));
        }
        let mut table = vec![vec![0u32; dim]; dim * dim];
        for i in 0..na {
            for j in 0..nb {
                let row = i * nb + j;
                for k in 0..na {
                    for l in 0..nb {
                        let col = k * nb + l;
                        let ta = self.entry(i, k);
                        let tb = other.entry(j, l);
                        let out = &mut table[row * dim + col];
                        for (r, &ar) in ta.iter().enumerate() {
                            if ar == 0 {
                                continue;
                            }
                            for (s, &bs) in tb.iter().enumerate() {
                                if bs == 0 {
                                    continue;
                                }
                                out[r * nb + s] =
                                    fp_add(out[r * nb + s], fp_mul(ar, bs, p), p);
                            }
                        }
                    }
                }
            }
        }
        let mut unit = vec![0u32; dim];
        for (i, &ui) in self.unit.iter().enumerate() {
            if ui == 0 {
                continue;
            }
            for (j, &uj) in other.unit.iter().enumerate() {
                unit[i * nb + j] = fp_mul(ui, uj, p);
            }
        }
        Algebra::from_parts(p, dim, table, unit, None)
    }

    /// The enveloping algebra `A (x) A^op`; bimodules over (A, A) are left
    /// modules over this.
    pub fn enveloping(&self) -> Result<Algebra> {
        self.tensor_product(&self.opposite())
    }

    /// Checks that a subspace is a two-sided ideal.
    pub fn is_ideal(&self, s: &Subspace) -> bool {
        if s.ambient != self.dim {
            return false;
        }
        for v in &s.basis {
            for i in 0..self.dim {
                let bi = self.basis_vector(i);
                if !s.contains(&self.mul(&bi, v)) || !s.contains(&self.mul(v, &bi)) {
                    return false;
                }
            }
        }
        true
    }

    /// Smallest two-sided ideal containing the given elements.
    pub fn ideal_closure(&self, elements: &[Vec<Fp>]) -> Ideal {
        let mut span = Subspace::from_spanning(self.dim, self.p, elements);
        loop {
            let mut new_vecs = Vec::new();
            for v in &span.basis {
                for i in 0..self.dim {
                    let bi = self.basis_vector(i);
                    let lv = self.mul(&bi, v);
                    let rv = self.mul(v, &bi);
                    if !span.contains(&lv) {
                        new_vecs.push(lv);
                    }
                    if !span.contains(&rv) {
                        new_vecs.push(rv);
                    }
                }
            }
            if new_vecs.is_empty() {
                break;
            }
            let mut all = span.basis.clone();
            all.extend(new_vecs);
            span = Subspace::from_spanning(self.dim, self.p, &all);
        }
        Ideal { basis: span }
    }

    /// Jacobson radical via the trace-form tower on the left regular
    /// representation.
    pub fn radical(&self) -> Ideal {
        let mats: Vec<Matrix> = (0..self.dim)
            .map(|i| self.left_mult(&self.basis_vector(i)))
            .collect();
        let sub = radical_from_rep(self.p, self.dim, &mats);
        Ideal { basis: sub }
    }

    /// Radical filtration: dims of rad^m and the Loewy length.
    pub fn profile(&self) -> AlgebraProfile {
        let rad = self.radical();
        let mut dims = vec![self.dim];
        let mut cur = rad.basis.clone();
        while cur.dim() > 0 {
            dims.push(cur.dim());
            // next power: span of products (current) * (rad)
            let mut prods = Vec::new();
            for v in &cur.basis {
                for w in &rad.basis.basis {
                    prods.push(self.mul(v, w));
                }
            }
            cur = Subspace::from_spanning(self.dim, self.p, &prods);
        }
        dims.push(0);
        let loewy_length = dims.len() - 1;
        AlgebraProfile {
            radical_dims: dims,
            loewy_length,
            semisimple: rad.is_zero(),
        }
    }

    pub fn is_semisimple(&self) -> bool {
        self.radical().is_zero()
    }

    /// Quotient algebra A / I and the projection matrix (dim_Q x dim_A).
    /// The section sends quotient basis vector c to the standard vector at
    /// the c-th non-pivot coordinate of I.
    pub fn quotient(&self, ideal: &Ideal) -> Result<(Algebra, Matrix)> {
        if !self.is_ideal(&ideal.basis) {
            return Err(Error::Invalid("subspace is not a two-sided ideal".into()));
        }
        let p = self.p;
        let qdim = self.dim - ideal.dim();
        if qdim == 0 {
            return Err(Error::Invalid(
                "quotient by the whole algebra is zero-dimensional".into(),
            ));
        }
        let mut pivot_cols = vec![false; self.dim];
        for row in &ideal.basis.basis {
            let lead = row.iter().position(|&x| x != 0).expect("rref row");
            pivot_cols[lead] = true;
        }
        let free: Vec<usize> =
            (0..self.dim).filter(|&c| !pivot_cols[c]).collect();
        let mut proj = Matrix::zero(qdim, self.dim, p);
        for c in 0..self.dim {
            let mut e = vec![0u32; self.dim];
            e[c] = 1;
            let red = ideal.basis.reduce(&e);
            for (qi, &fc) in free.iter().enumerate() {
                proj.set(qi, c, red[fc]);
            }
        }
        let project = |v: &[Fp]| -> Vec<Fp> { proj.apply(v) };
        let mut table = Vec::with_capacity(qdim * qdim);
        for &ci in &free {
            for &cj in &free {
                let mut ei = vec![0u32; self.dim];
                ei[ci] = 1;
                let mut ej = vec![0u32; self.dim];
                ej[cj] = 1;
                table.push(project(&self.mul(&ei, &ej)));
            }
        }
        let unit = project(&self.unit);
        let q = Algebra::from_parts(p, qdim, table, unit, None)?;
        Ok((q, proj))
    }

    /// Greedy generating set (indices of basis elements); the unit is always
    /// implicit. Used to shrink intertwiner systems.
    pub fn generating_set(&self) -> Vec<usize> {
        let p = self.p;
        let mut gens: Vec<usize> = Vec::new();
        let mut span = Subspace::from_spanning(self.dim, p, &[self.unit.clone()]);
        for i in 0..self.dim {
            let bi = self.basis_vector(i);
            if span.contains(&bi) {
                continue;
            }
            gens.push(i);
            // close the span under products with everything chosen so far
            loop {
                let mut new_vecs = Vec::new();
                for v in &span.basis {
                    for &g in &gens {
                        let bg = self.basis_vector(g);
                        let l = self.mul(&bg, v);
                        let r = self.mul(v, &bg);
                        if !span.contains(&l) {
                            new_vecs.push(l);
                        }
                        if !span.contains(&r) {
                            new_vecs.push(r);
                        }
                    }
                }
                if new_vecs.is_empty() {
                    break;
                }
                let mut all = span.basis.clone();
                all.extend(new_vecs);
                span = Subspace::from_spanning(self.dim, p, &all);
            }
            if span.dim() == self.dim {
                break;
            }
        }
        gens
    }
}

/// Trace-form tower radical for an algebra given by a faithful matrix
/// representation: `basis_mats[i]` is the image of the i-th basis element,
/// acting on an n-dimensional space. Returns the radical as a subspace of
/// coordinate space GF(p)^dim.
///
/// Stage 0 is the ordinary trace form tr(xy) mod p; stage i >= 1 uses
/// lambda_i(x, y) = tr((xy)^(p^i)) / p^i mod p evaluated on integral lifts,
/// computed mod p^(i+1). The chain stabilizes to the radical once p^l >= n.
pub fn radical_from_rep(p: u32, dim: usize, basis_mats: &[Matrix]) -> Subspace {
    assert_eq!(basis_mats.len(), dim);
    let n = basis_mats.first().map_or(0, |m| m.rows);
    if dim == 0 || n == 0 {
        return Subspace::zero(dim, p);
    }
    // number of stages: largest l with p^l <= n
    let mut l = 0u32;
    let mut pow = p as u64;
    while pow <= n as u64 {
        l += 1;
        pow *= p as u64;
    }

    // current subspace basis, as coordinate vectors
    let mut basis: Vec<Vec<Fp>> = (0..dim)
        .map(|i| {
            let mut v = vec![0u32; dim];
            v[i] = 1;
            v
        })
        .collect();

    let mat_of = |coords: &[Fp]| -> Matrix {
        let mut m = Matrix::zero(n, n, p);
        for (i, &c) in coords.iter().enumerate() {
            if c != 0 {
                m.add_scaled_assign(&basis_mats[i], c);
            }
        }
        m
    };

    for stage in 0..=l {
        if basis.is_empty() {
            break;
        }
        let d = basis.len();
        let mats: Vec<Matrix> = basis.iter().map(|v| mat_of(v)).collect();
        let modulus = (p as u64).pow(stage + 1);
        let pe = (p as u64).pow(stage);

        // Gram matrix of the stage form on the current basis (symmetric).
        let pairs: Vec<(usize, usize)> =
            (0..d).flat_map(|r| (r..d).map(move |s| (r, s))).collect();
        let entries = exec::map_collect(pairs.clone(), |(r, s)| {
            stage_form(&mats[r], &mats[s], p, stage, modulus, pe)
        });
        let mut gram = Matrix::zero(d, d, p);
        for ((r, s), v) in pairs.into_iter().zip(entries) {
            gram.set(r, s, v);
            gram.set(s, r, v);
        }
        let kernel = gram.kernel_basis();
        if kernel.len() == d {
            continue; // form vanishes identically; subspace unchanged
        }
        // new basis: kernel combinations of the current basis
        let mut next = Vec::with_capacity(kernel.len());
        for k in kernel {
            let mut v = vec![0u32; dim];
            for (j, &c) in k.iter().enumerate() {
                if c != 0 {
                    for (vi, &bi) in v.iter_mut().zip(&basis[j]) {
                        // accumulate c * basis[j]
                        *vi = fp_add(*vi, fp_mul(c, bi, p), p);
                    }
                }
            }
            next.push(v);
        }
        basis = Subspace::from_spanning(dim, p, &next).basis;
    }
    Subspace::from_spanning(dim, p, &basis)
}

/// One evaluation of the stage form: tr((xy)^(p^stage)) / p^stage mod p,
/// with x, y lifted to integer matrices with entries in [0, p).
fn stage_form(x: &Matrix, y: &Matrix, p: u32, stage: u32, modulus: u64, pe: u64) -> Fp {
    let n = x.rows;
    if stage == 0 {
        // tr(xy) mod p without forming the product
        let mut acc = 0u64;
        for i in 0..n {
            for j in 0..n {
                acc += x.get(i, j) as u64 * y.get(j, i) as u64;
            }
        }
        return (acc % p as u64) as Fp;
    }
    // z = x*y over Z/p^(stage+1), then z^(p^stage), then trace
    let z = mat_mul_mod(x, y, modulus);
    let w = mat_pow_mod(z, pe, modulus, n);
    let mut tr = 0u64;
    for i in 0..n {
        tr = (tr + w[i * n + i]) % modulus;
    }
    debug_assert_eq!(tr % pe, 0, "trace tower divisibility violated");
    ((tr / pe) % p as u64) as Fp
}

fn mat_mul_mod(x: &Matrix, y: &Matrix, modulus: u64) -> Vec<u64> {
    let n = x.rows;
    let mut out = vec![0u64; n * n];
    for i in 0..n {
        for k in 0..n {
            let a = x.get(i, k) as u64;
            if a == 0 {
                continue;
            }
            for j in 0..n {
                let idx = i * n + j;
                out[idx] = (out[idx] + a * y.get(k, j) as u64) % modulus;
            }
        }
    }
    out
}

fn mat_pow_mod(base: Vec<u64>, mut e: u64, modulus: u64, n: usize) -> Vec<u64> {
    let mul = |a: &[u64], b: &[u64]| -> Vec<u64> {
        let mut out = vec![0u64; n * n];
        for i in 0..n {
            for k in 0..n {
                let v = a[i * n + k];
                if v == 0 {
                    continue;
                }
                for j in 0..n {
                    out[i * n + j] = (out[i * n + j] + v * b[k * n + j]) % modulus;
                }
            }
        }
        out
    };
    let mut acc = vec![0u64; n * n];
    for i in 0..n {
        acc[i * n + i] = 1 % modulus;
    }
    let mut b = base;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(&acc, &b);
        }
        e >>= 1;
        if e > 0 {
            b = mul(&b, &b);
        }
    }
    acc
}

/// Gallery builders for the named algebra families.
pub fn gallery_algebra(name: &str, n: usize, p: u32) -> Result<Algebra> {
    check_modulus(p)?;
    match name {
        "matrix" => matrix_algebra(n, p),
        "centrosymmetric" => centrosymmetric_algebra(n, p),
        other => Err(Error::Invalid(format!("unknown gallery algebra '{other}'"))),
    }
}

/// Full matrix algebra M_n(GF(p)), basis E_{ab} at index a*n + b.
pub fn matrix_algebra(n: usize, p: u32) -> Result<Algebra> {
    if n == 0 {
        return Err(Error::Invalid("matrix algebra needs n >= 1".into()));
    }
    let dim = n * n;
    let mut table = vec![vec![0u32; dim]; dim * dim];
    for a in 0..n {
        for b in 0..n {
            let i = a * n + b;
            for c in 0..n {
                for d in 0..n {
                    let j = c * n + d;
                    if b == c {
                        table[i * dim + j][a * n + d] = 1;
                    }
                }
            }
        }
    }
    let mut unit = vec![0u32; dim];
    for a in 0..n {
        unit[a * n + a] = 1;
    }
    let mut labels = Vec::with_capacity(dim);
    for a in 0..n {
        for b in 0..n {
            labels.push(format!("E{}{}", a + 1, b + 1));
        }
    }
    Algebra::from_parts(p, dim, table, unit, Some(labels))
}

/// Centrosymmetric matrices: fixed by 180-degree rotation,
/// a_{i,j} = a_{n+1-i, n+1-j}. Basis: orbit sums of matrix units.
pub fn centrosymmetric_algebra(n: usize, p: u32) -> Result<Algebra> {
    if n == 0 {
        return Err(Error::Invalid("centrosymmetric algebra needs n >= 1".into()));
    }
    // orbits of positions under (i,j) -> (n-1-i, n-1-j), 0-based
    let mut seen = vec![false; n * n];
    let mut orbits: Vec<Vec<(usize, usize)>> = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if seen[i * n + j] {
                continue;
            }
            let (ri, rj) = (n - 1 - i, n - 1 - j);
            seen[i * n + j] = true;
            let mut orb = vec![(i, j)];
            if (ri, rj) != (i, j) {
                seen[ri * n + rj] = true;
                orb.push((ri, rj));
            }
            orbits.push(orb);
        }
    }
    let dim = orbits.len();
    debug_assert_eq!(dim, n * n / 2 + n * n % 2);
    // dense n x n representative of each basis element
    let to_mat = |orb: &Vec<(usize, usize)>| -> Vec<Fp> {
        let mut m = vec![0u32; n * n];
        for &(i, j) in orb {
            m[i * n + j] = 1;
        }
        m
    };
    let reps: Vec<Vec<Fp>> = orbits.iter().map(to_mat).collect();
    // position -> orbit index, for reading off coordinates
    let mut orbit_of = vec![0usize; n * n];
    for (oi, orb) in orbits.iter().enumerate() {
        for &(i, j) in orb {
            orbit_of[i * n + j] = oi;
        }
    }
    let mut table = vec![vec![0u32; dim]; dim * dim];
    for (bi, x) in reps.iter().enumerate() {
        for (bj, y) in reps.iter().enumerate() {
            // product in M_n
            let mut prod = vec![0u32; n * n];
            for i in 0..n {
                for k in 0..n {
                    if x[i * n + k] == 0 {
                        continue;
                    }
                    for j in 0..n {
                        if y[k * n + j] != 0 {
                            prod[i * n + j] = fp_add(
                                prod[i * n + j],
                                fp_mul(x[i * n + k], y[k * n + j], p),
                                p,
                            );
                        }
                    }
                }
            }
            // coordinates: value at the first position of each orbit
            let out = &mut table[bi * dim + bj];
            for (oi, orb) in orbits.iter().enumerate() {
                let (i, j) = orb[0];
                out[oi] = prod[i * n + j];
            }
        }
    }
    let mut unit = vec![0u32; dim];
    for i in 0..n {
        let oi = orbit_of[i * n + i];
        unit[oi] = 1; // identity is centrosymmetric; orbit sums hit each diagonal orbit once
    }
    Algebra::from_parts(p, dim, table, unit, None)
}

/// Truncated polynomial algebra GF(p)[t]/(t^n); handy in tests and the
/// random-algebra battery.
pub fn truncated_polynomial_algebra(n: usize, p: u32) -> Result<Algebra> {
    if n == 0 {
        return Err(Error::Invalid("need n >= 1".into()));
    }
    let mut table = vec![vec![0u32; n]; n * n];
    for i in 0..n {
        for j in 0..n {
            if i + j < n {
                table[i * n + j][i + j] = 1;
            }
        }
    }
    let mut unit = vec![0u32; n];
    unit[0] = 1;
    Algebra::from_parts(p, n, table, unit, None)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// k[C_n] over GF(p): basis g^0..g^{n-1}.
    pub fn cyclic_group_algebra(n: usize, p: u32) -> Algebra {
        let mut table = vec![vec![0u32; n]; n * n];
        for i in 0..n {
            for j in 0..n {
                table[i * n + j][(i + j) % n] = 1;
            }
        }
        let mut unit = vec![0u32; n];
        unit[0] = 1;
        Algebra::from_parts(p, n, table, unit, None).unwrap()
    }

    /// k[V_4] over GF(p): basis 1, a, b, ab.
    pub fn klein_group_algebra(p: u32) -> Algebra {
        // element indices encode (bit a, bit b)
        let idx = |a: usize, b: usize| a + 2 * b;
        let mut table = vec![vec![0u32; 4]; 16];
        for a1 in 0..2 {
            for b1 in 0..2 {
                for a2 in 0..2 {
                    for b2 in 0..2 {
                        let i = idx(a1, b1);
                        let j = idx(a2, b2);
                        table[i * 4 + j][idx((a1 + a2) % 2, (b1 + b2) % 2)] = 1;
                    }
                }
            }
        }
        Algebra::from_parts(p, 4, table, vec![1, 0, 0, 0], None).unwrap()
    }

    #[test]
    fn validate_c2_ok() {
        let a = cyclic_group_algebra(2, 2);
        assert!(a.validate().is_ok());
    }

    #[test]
    fn validate_one_dim_ok() {
        let a = Algebra::ground_field(7).unwrap();
        assert!(a.validate().is_ok());
    }

    #[test]
    fn validate_perturbed_table_fails() {
        let mut a = cyclic_group_algebra(3, 5);
        // redefine b1*b1 randomly: should break associativity
        a.table[1 * 3 + 1] = vec![1, 1, 0];
        match a.validate() {
            ValidationReport::AssociativityFails { .. } => {}
            other => panic!("expected associativity failure, got {other:?}"),
        }
    }

    #[test]
    fn opposite_involutive_and_valid() {
        let a = matrix_algebra(2, 2).unwrap();
        let op = a.opposite();
        assert!(op.validate().is_ok());
        assert_eq!(op.opposite().table, a.table);
        // commutative algebra: table unchanged
        let c = cyclic_group_algebra(2, 2);
        assert_eq!(c.opposite().table, c.table);
    }

    #[test]
    fn tensor_c2_c2_is_klein() {
        let c2 = cyclic_group_algebra(2, 2);
        let t = c2.tensor_product(&c2).unwrap();
        let v4 = klein_group_algebra(2);
        // pairing (g,1) -> a, (1,g) -> b matches index order (i*2+j)
        assert_eq!(t.table, v4.table);
        assert_eq!(t.unit, v4.unit);
    }

    #[test]
    fn tensor_with_ground_field_is_identity() {
        let a = cyclic_group_algebra(3, 2);
        let k = Algebra::ground_field(2).unwrap();
        let t = a.tensor_product(&k).unwrap();
        assert_eq!(t.dim, a.dim);
        assert_eq!(t.table, a.table);
    }

    #[test]
    fn tensor_dim_and_validity() {
        let c2 = cyclic_group_algebra(2, 2);
        let m2 = matrix_algebra(2, 2).unwrap();
        let t = c2.tensor_product(&m2).unwrap();
        assert_eq!(t.dim, 8);
        assert!(t.validate().is_ok());
    }

    #[test]
    fn radical_c2_gf2() {
        let a = cyclic_group_algebra(2, 2);
        let rad = a.radical();
        assert_eq!(rad.dim(), 1);
        assert!(rad.basis.contains(&[1, 1])); // span{1 + g}
    }

    #[test]
    fn radical_c2_gf5_semisimple() {
        let a = cyclic_group_algebra(2, 5);
        assert!(a.radical().is_zero());
    }

    #[test]
    fn radical_klein_gf2_dim3() {
        let a = klein_group_algebra(2);
        assert_eq!(a.radical().dim(), 3);
    }

    #[test]
    fn radical_matrix_algebra_zero() {
        let a = matrix_algebra(2, 3).unwrap();
        assert!(a.radical().is_zero());
    }

    #[test]
    fn radical_is_largest_nilpotent_ideal_small_brute_force() {
        // exhaustive nilpotent-ideal oracle on a couple of fixed algebras
        for a in [
            cyclic_group_algebra(4, 2),
            klein_group_algebra(2),
            truncated_polynomial_algebra(3, 3).unwrap(),
        ] {
            let rad = a.radical();
            let oracle = crate::module::oracle::brute_force_radical(&a);
            assert_eq!(rad.basis, oracle, "radical mismatch (dim {})", a.dim);
        }
    }

    #[test]
    fn profile_klein_gf2() {
        let a = klein_group_algebra(2);
        let pr = a.profile();
        assert_eq!(pr.radical_dims, vec![4, 3, 1, 0]);
        assert_eq!(pr.loewy_length, 3);
        assert!(!pr.semisimple);
    }

    #[test]
    fn profile_c4_gf2() {
        let a = cyclic_group_algebra(4, 2);
        assert_eq!(a.profile().loewy_length, 4);
    }

    #[test]
    fn profile_semisimple_ll1() {
        let a = matrix_algebra(2, 5).unwrap();
        let pr = a.profile();
        assert_eq!(pr.loewy_length, 1);
        assert!(pr.semisimple);
    }

    #[test]
    fn ideal_closure_trivial_cases() {
        let a = klein_group_algebra(2);
        assert!(a.ideal_closure(&[vec![0, 0, 0, 0]]).is_zero());
        assert_eq!(a.ideal_closure(&[a.unit.clone()]).dim(), 4);
    }

    #[test]
    fn ideal_closure_c4_square() {
        // A = k[C4]/GF(2), S = {(1+g)^2} = {1 + g^2}
        let a = cyclic_group_algebra(4, 2);
        let i = a.ideal_closure(&[vec![1, 0, 1, 0]]);
        // brute-force span iteration gives dim 2: {1+g^2, g+g^3}
        assert_eq!(i.dim(), 2);
        assert!(i.basis.contains(&[1, 0, 1, 0]));
        assert!(i.basis.contains(&[0, 1, 0, 1]));
    }

    #[test]
    fn quotient_by_radical_semisimple() {
        let a = cyclic_group_algebra(4, 2);
        let rad = a.radical();
        let (q, proj) = a.quotient(&rad).unwrap();
        assert_eq!(q.dim, 1);
        assert!(q.is_semisimple());
        // projection is a unital algebra map with kernel exactly rad
        assert_eq!(proj.apply(&a.unit), q.unit);
    }

    #[test]
    fn quotient_by_zero_is_identity() {
        let a = klein_group_algebra(2);
        let z = Ideal { basis: Subspace::zero(4, 2) };
        let (q, _) = a.quotient(&z).unwrap();
        assert_eq!(q.table, a.table);
    }

    #[test]
    fn quotient_c4_by_rad_squared() {
        let a = cyclic_group_algebra(4, 2);
        let rad = a.radical();
        // rad^2 = span of products of rad basis
        let mut prods = Vec::new();
        for v in &rad.basis.basis {
            for w in &rad.basis.basis {
                prods.push(a.mul(v, w));
            }
        }
        let rad2 = Ideal { basis: Subspace::from_spanning(4, 2, &prods) };
        let (q, _) = a.quotient(&rad2).unwrap();
        assert_eq!(q.dim, 2);
        // same table as k[C2]: local with rad dim 1, t^2 = 0 shape
        let c2 = cyclic_group_algebra(2, 2);
        assert_eq!(q.profile().radical_dims, c2.profile().radical_dims);
    }

    #[test]
    fn gallery_matrix2_semisimple() {
        let a = gallery_algebra("matrix", 2, 2).unwrap();
        assert_eq!(a.dim, 4);
        assert!(a.validate().is_ok());
        assert!(a.is_semisimple());
    }

    #[test]
    fn gallery_centrosymmetric2_local() {
        let a = gallery_algebra("centrosymmetric", 2, 2).unwrap();
        assert_eq!(a.dim, 2);
        assert!(a.validate().is_ok());
        let pr = a.profile();
        assert_eq!(pr.radical_dims, vec![2, 1, 0]); // = GF(2)[t]/(t^2)
    }

    #[test]
    fn gallery_centrosymmetric3_dim5() {
        let a = gallery_algebra("centrosymmetric", 3, 2).unwrap();
        assert_eq!(a.dim, 5);
        assert!(a.validate().is_ok());
    }

    #[test]
    fn gallery_unknown_name_rejected() {
        assert!(gallery_algebra("nope", 2, 2).is_err());
    }

    #[test]
    fn opposite_preserves_radical_dim() {
        for a in [klein_group_algebra(2), cyclic_group_algebra(4, 2)] {
            assert_eq!(a.radical().dim(), a.opposite().radical().dim());
        }
    }

    #[test]
    fn generating_set_covers() {
        let a = matrix_algebra(2, 2).unwrap();
        let gens = a.generating_set();
        assert!(!gens.is_empty() && gens.len() < a.dim);
    }
}
