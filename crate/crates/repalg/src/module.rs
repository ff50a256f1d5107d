//! Finite-dimensional modules over structure-constant algebras: Hom spaces,
//! Krull-Schmidt decomposition, bimodules and tensor products, and projective
//! resolution machinery (minimal covers, syzygies, projective and global
//! dimension).
//!
//! Decomposition follows the MeatAxe pattern: split along primary components
//! of minimal polynomials of endomorphisms, found first among the Hom-space
//! basis and then by seeded pseudorandom combinations. Indecomposability is
//! never assumed from failed searches alone; it is certified by showing that
//! the endomorphism algebra modulo its radical is a field (commutative with
//! one-dimensional Frobenius fixed space, which over a finite field is
//! exactly the division-ring condition).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{radical_from_rep, Algebra, Ideal};
use crate::linalg::{fp_mul, fp_neg, Fp, Matrix, Subspace};
use crate::poly::{ext_gcd, factor_poly, Poly};
use crate::{Error, Result};

/// Hard cap on module dimension.
pub const MODULE_DIM_CAP: usize = 512;
/// Random splitting attempts in `decompose` before giving up (the
/// certificate step guarantees a splitting element exists by then).
const SPLIT_TRIES: usize = 2000;
/// Largest module dimension for which syzygy-repetition isomorphism tests
/// are attempted when certifying infinite projective dimension.
const ISO_CHECK_CAP: usize = 64;

/// A left module: one action matrix per algebra basis element.
#[derive(Clone, PartialEq)]
pub struct Module {
    pub p: u32,
    pub dim: usize,
    pub action: Vec<Matrix>,
}

impl std::fmt::Debug for Module {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Module(dim {}, p {})", self.dim, self.p)
    }
}

impl Module {
    /// Builds and validates a module over `alg`.
    pub fn new(alg: &Algebra, action: Vec<Matrix>) -> Result<Self> {
        if action.len() != alg.dim {
            return Err(Error::DimensionMismatch(format!(
                "{} action matrices for algebra of dimension {}",
                action.len(),
                alg.dim
            )));
        }
        let dim = action.first().map_or(0, |m| m.rows);
        if dim > MODULE_DIM_CAP {
            return Err(Error::CapExceeded(format!(
                "module dimension {dim} exceeds cap {MODULE_DIM_CAP}"
            )));
        }
        for m in &action {
            if m.rows != dim || m.cols != dim {
                return Err(Error::DimensionMismatch(
                    "action matrices must be square of equal size".into(),
                ));
            }
            if m.p != alg.p {
                return Err(Error::ModulusMismatch(m.p, alg.p));
            }
        }
        let module = Module { p: alg.p, dim, action };
        if !module.validate(alg) {
            return Err(Error::Invalid(
                "action matrices do not satisfy the structure constants".into(),
            ));
        }
        Ok(module)
    }

    /// Skips validation; used internally where the action is correct by
    /// construction (restrictions, quotients, direct sums).
    pub fn from_action_unchecked(p: u32, dim: usize, action: Vec<Matrix>) -> Self {
        Module { p, dim, action }
    }

    pub fn zero(alg: &Algebra) -> Self {
        let action = (0..alg.dim).map(|_| Matrix::zero(0, 0, alg.p)).collect();
        Module { p: alg.p, dim: 0, action }
    }

    /// Checks the defining relations: unit acts as identity and
    /// act(b_i) act(b_j) = sum_k table[i][j][k] act(b_k).
    pub fn validate(&self, alg: &Algebra) -> bool {
        if alg.dim != self.action.len() || alg.p != self.p {
            return false;
        }
        if self.dim == 0 {
            return true;
        }
        if self.act(&alg.unit) != Matrix::identity(self.dim, self.p) {
            return false;
        }
        for i in 0..alg.dim {
            for j in 0..alg.dim {
                let lhs = self.action[i].mul(&self.action[j]).expect("square");
                if lhs != self.act(alg.entry(i, j)) {
                    return false;
                }
            }
        }
        true
    }

    /// Action matrix of an algebra element given by coordinates.
    pub fn act(&self, x: &[Fp]) -> Matrix {
        let mut m = Matrix::zero(self.dim, self.dim, self.p);
        for (i, &c) in x.iter().enumerate() {
            if c != 0 {
                m.add_scaled_assign(&self.action[i], c);
            }
        }
        m
    }
}

/// Left regular module: `b_i` acts by left multiplication.
pub fn regular_module(alg: &Algebra) -> Module {
    let action = (0..alg.dim)
        .map(|i| alg.left_mult(&alg.basis_vector(i)))
        .collect();
    Module { p: alg.p, dim: alg.dim, action }
}

/// The injective cogenerator D(A): the linear dual of the right regular
/// module, made a left module by (a.f)(x) = f(xa). Action matrices are the
/// transposed right multiplications.
pub fn coregular_module(alg: &Algebra) -> Module {
    let action = (0..alg.dim)
        .map(|i| alg.right_mult(&alg.basis_vector(i)).transpose())
        .collect();
    Module { p: alg.p, dim: alg.dim, action }
}

/// Linear dual of a left A-module, which is a left module over A^op
/// (the action matrices transpose).
pub fn dual_module(m: &Module) -> Module {
    let action = m.action.iter().map(|a| a.transpose()).collect();
    Module { p: m.p, dim: m.dim, action }
}

/// Block-diagonal direct sum with inclusion/projection witnesses per part.
pub fn direct_sum(parts: &[&Module]) -> Result<(Module, Vec<(Matrix, Matrix)>)> {
    let first = parts
        .first()
        .ok_or_else(|| Error::Invalid("direct sum of no modules".into()))?;
    let p = first.p;
    let n_action = first.action.len();
    for m in parts {
        if m.p != p || m.action.len() != n_action {
            return Err(Error::Invalid("direct sum over mismatched algebras".into()));
        }
    }
    let total: usize = parts.iter().map(|m| m.dim).sum();
    if total > MODULE_DIM_CAP {
        return Err(Error::CapExceeded(format!(
            "direct sum dimension {total} exceeds cap {MODULE_DIM_CAP}"
        )));
    }
    let mut action = Vec::with_capacity(n_action);
    for g in 0..n_action {
        let mut big = Matrix::zero(total, total, p);
        let mut off = 0usize;
        for m in parts {
            for r in 0..m.dim {
                for c in 0..m.dim {
                    big.set(off + r, off + c, m.action[g].get(r, c));
                }
            }
            off += m.dim;
        }
        action.push(big);
    }
    let mut witnesses = Vec::with_capacity(parts.len());
    let mut off = 0usize;
    for m in parts {
        let mut incl = Matrix::zero(total, m.dim, p);
        let mut proj = Matrix::zero(m.dim, total, p);
        for k in 0..m.dim {
            incl.set(off + k, k, 1);
            proj.set(k, off + k, 1);
        }
        witnesses.push((incl, proj));
        off += m.dim;
    }
    Ok((Module { p, dim: total, action }, witnesses))
}

/// Basis of the intertwiner space Hom_A(M, N) as matrices (N.dim x M.dim).
///
/// Only conditions for a greedy generating set of the algebra are imposed;
/// intertwining with generators extends to the whole algebra since both
/// modules are genuine representations.
pub fn hom_space(alg: &Algebra, m: &Module, n: &Module) -> Result<Vec<Matrix>> {
    if m.p != n.p || m.p != alg.p {
        return Err(Error::ModulusMismatch(m.p, n.p));
    }
    if m.dim == 0 || n.dim == 0 {
        return Ok(Vec::new());
    }
    let p = alg.p;
    let gens = alg.generating_set();
    let unknowns = n.dim * m.dim; // F[k][c] at index k*m.dim + c
    if gens.is_empty() {
        // algebra is the ground field: every linear map intertwines
        let mut out = Vec::with_capacity(unknowns);
        for k in 0..n.dim {
            for c in 0..m.dim {
                let mut f = Matrix::zero(n.dim, m.dim, p);
                f.set(k, c, 1);
                out.push(f);
            }
        }
        return Ok(out);
    }
    let mut sys = Matrix::zero(gens.len() * unknowns, unknowns, p);
    let mut row = 0usize;
    for &g in &gens {
        let mg = &m.action[g];
        let ng = &n.action[g];
        // (N_g F - F M_g)[r][c] = 0
        for r in 0..n.dim {
            for c in 0..m.dim {
                for k in 0..n.dim {
                    let v = ng.get(r, k);
                    if v != 0 {
                        let idx = k * m.dim + c;
                        let cur = sys.get(row, idx);
                        sys.set(row, idx, (cur + v) % p);
                    }
                }
                for k in 0..m.dim {
                    let v = mg.get(k, c);
                    if v != 0 {
                        let idx = r * m.dim + k;
                        let cur = sys.get(row, idx);
                        sys.set(row, idx, (cur + fp_neg(v, p)) % p);
                    }
                }
                row += 1;
            }
        }
    }
    let kernel = sys.kernel_basis();
    // canonicalize so the basis is deterministic across call paths
    let span = Subspace::from_spanning(unknowns, p, &kernel);
    Ok(span
        .basis
        .iter()
        .map(|v| Matrix::from_flat(n.dim, m.dim, v.clone(), p))
        .collect())
}

/// Endomorphism algebra End_A(M) as a structure-constant algebra, together
/// with its basis of intertwiner matrices.
pub fn end_algebra(alg: &Algebra, m: &Module) -> Result<(Algebra, Vec<Matrix>)> {
    let homs = hom_space(alg, m, m)?;
    let e = end_from_matrices(alg.p, m.dim, &homs)?;
    Ok((e, homs))
}

/// Structure constants of the algebra spanned by closed set of matrices
/// (must contain the identity and be closed under products).
fn end_from_matrices(p: u32, n: usize, basis: &[Matrix]) -> Result<Algebra> {
    let d = basis.len();
    if d == 0 {
        return Err(Error::Invalid("empty endomorphism basis".into()));
    }
    let flat: Vec<Vec<Fp>> = basis
        .iter()
        .map(|m| (0..n).flat_map(|r| m.row(r).to_vec()).collect())
        .collect();
    let span = Subspace::from_spanning(n * n, p, &flat);
    if span.dim() != d {
        return Err(Error::Internal("endomorphism basis is dependent".into()));
    }
    let coords_of = |mat: &Matrix| -> Result<Vec<Fp>> {
        let v: Vec<Fp> = (0..n).flat_map(|r| mat.row(r).to_vec()).collect();
        // solve for coordinates in the (possibly non-rref) given basis
        let mut sys = Matrix::zero(n * n, d, p);
        for (j, f) in flat.iter().enumerate() {
            for (i, &x) in f.iter().enumerate() {
                sys.set(i, j, x);
            }
        }
        match sys.solve_affine(&v)? {
            Some((c, _)) => Ok(c),
            None => Err(Error::Internal("product escapes endomorphism span".into())),
        }
    };
    let mut table = Vec::with_capacity(d * d);
    for bi in basis {
        for bj in basis {
            table.push(coords_of(&bi.mul(bj)?)?);
        }
    }
    let unit = coords_of(&Matrix::identity(n, p))?;
    Algebra::from_parts(p, d, table, unit, None)
}

/// Minimal polynomial of a square matrix: lcm of the local annihilators of
/// the standard basis seeds (Krylov iteration).
pub fn minimal_polynomial(f: &Matrix) -> Poly {
    let p = f.p;
    let n = f.rows;
    if n == 0 {
        return Poly::one(p);
    }
    let mut overall = Poly::one(p);
    let mut span = Subspace::zero(n, p);
    for seed in 0..n {
        let mut v = vec![0u32; n];
        v[seed] = 1;
        if span.contains(&v) {
            continue;
        }
        let mut iterates: Vec<Vec<Fp>> = vec![v];
        let local = loop {
            let next = f.apply(iterates.last().unwrap());
            // columns = iterates; consistent iff next depends on them
            let k = iterates.len();
            let mut cols = Matrix::zero(n, k, p);
            for (j, w) in iterates.iter().enumerate() {
                for i in 0..n {
                    cols.set(i, j, w[i]);
                }
            }
            match cols.solve_affine(&next).expect("dims fixed") {
                Some((c, _)) => {
                    let mut coeffs: Vec<Fp> =
                        c.iter().map(|&x| fp_neg(x, p)).collect();
                    coeffs.push(1);
                    break Poly::new(p, coeffs);
                }
                None => iterates.push(next),
            }
        };
        overall = overall.lcm(&local);
        let mut all = span.basis.clone();
        all.extend(iterates);
        span = Subspace::from_spanning(n, p, &all);
        if overall.deg() == n {
            break;
        }
    }
    overall
}

/// Horner evaluation of a polynomial at a square matrix.
pub fn poly_at_matrix(q: &Poly, f: &Matrix) -> Matrix {
    let n = f.rows;
    let p = f.p;
    let mut acc = Matrix::zero(n, n, p);
    for &c in q.coeffs.iter().rev() {
        acc = acc.mul(f).expect("square");
        if c != 0 {
            let mut id = Matrix::identity(n, p);
            id = id.scale(c);
            acc = acc.add(&id).expect("square");
        }
    }
    acc
}

/// One indecomposable summand with split witnesses back to the decomposed
/// module: projection * inclusion = identity on the summand, and the
/// inclusion * projection compositions over all summands sum to the
/// identity of the ambient module.
#[derive(Clone, Debug)]
pub struct Summand {
    pub module: Module,
    /// ambient_dim x summand_dim
    pub inclusion: Matrix,
    /// summand_dim x ambient_dim
    pub projection: Matrix,
}

#[derive(Clone, Debug, Default)]
pub struct Decomposition {
    pub summands: Vec<Summand>,
}

impl Decomposition {
    /// Re-verifies the split witness identities against the ambient module.
    pub fn verify(&self, ambient: &Module) -> bool {
        if ambient.dim == 0 {
            return self.summands.is_empty();
        }
        let p = ambient.p;
        let mut total = Matrix::zero(ambient.dim, ambient.dim, p);
        for s in &self.summands {
            let pi = s.projection.mul(&s.inclusion).expect("dims");
            if pi != Matrix::identity(s.module.dim, p) {
                return false;
            }
            let ip = s.inclusion.mul(&s.projection).expect("dims");
            total = total.add(&ip).expect("dims");
            // inclusion must intertwine the actions
            for g in 0..ambient.action.len() {
                let lhs = ambient.action[g].mul(&s.inclusion).expect("dims");
                let rhs = s.inclusion.mul(&s.module.action[g]).expect("dims");
                if lhs != rhs {
                    return false;
                }
            }
        }
        total == Matrix::identity(ambient.dim, p)
    }
}

/// Restriction of a module to an invariant subspace given in rref form.
/// Returns the restricted module, the inclusion matrix (columns = basis
/// vectors) and the pivot positions (whose coordinate functionals retract
/// the inclusion).
pub fn submodule_module(m: &Module, space: &Subspace) -> (Module, Matrix, Vec<usize>) {
    let p = m.p;
    let r = space.dim();
    let mut incl = Matrix::zero(m.dim, r, p);
    let mut pivots = Vec::with_capacity(r);
    for (j, v) in space.basis.iter().enumerate() {
        for i in 0..m.dim {
            incl.set(i, j, v[i]);
        }
        pivots.push(v.iter().position(|&x| x != 0).expect("rref row"));
    }
    let action = m
        .action
        .iter()
        .map(|a| {
            let ac = a.mul(&incl).expect("dims");
            let mut small = Matrix::zero(r, r, p);
            for (i, &pr) in pivots.iter().enumerate() {
                for j in 0..r {
                    small.set(i, j, ac.get(pr, j));
                }
            }
            small
        })
        .collect();
    (Module { p, dim: r, action }, incl, pivots)
}

/// Quotient of a module by an invariant subspace. Returns the quotient
/// module, the projection (q x dim) and the coordinate section (dim x q).
pub fn quotient_module(m: &Module, space: &Subspace) -> (Module, Matrix, Matrix) {
    let p = m.p;
    let q = m.dim - space.dim();
    let mut pivot_cols = vec![false; m.dim];
    for row in &space.basis {
        pivot_cols[row.iter().position(|&x| x != 0).expect("rref row")] = true;
    }
    let free: Vec<usize> = (0..m.dim).filter(|&c| !pivot_cols[c]).collect();
    let mut proj = Matrix::zero(q, m.dim, p);
    for c in 0..m.dim {
        let mut e = vec![0u32; m.dim];
        e[c] = 1;
        let red = space.reduce(&e);
        for (qi, &fc) in free.iter().enumerate() {
            proj.set(qi, c, red[fc]);
        }
    }
    let mut section = Matrix::zero(m.dim, q, p);
    for (qi, &fc) in free.iter().enumerate() {
        section.set(fc, qi, 1);
    }
    let action = m
        .action
        .iter()
        .map(|a| proj.mul(a).expect("dims").mul(&section).expect("dims"))
        .collect();
    (Module { p, dim: q, action }, proj, section)
}

/// The kernel of a module map (given by its matrix on the underlying
/// spaces) as a module, with the inclusion into the domain. The kernel of
/// an intertwiner is automatically action-stable.
pub fn kernel_submodule(domain: &Module, map: &Matrix) -> Result<(Module, Matrix)> {
    if map.cols != domain.dim {
        return Err(Error::DimensionMismatch("map domain mismatch".into()));
    }
    let ker = map.kernel_basis();
    let space = Subspace::from_spanning(domain.dim, domain.p, &ker);
    let (m, incl, _) = submodule_module(domain, &space);
    Ok((m, incl))
}

/// Smallest invariant subspace containing the given vectors.
pub fn module_closure(m: &Module, vectors: &[Vec<Fp>]) -> Subspace {
    let mut span = Subspace::from_spanning(m.dim, m.p, vectors);
    loop {
        let mut fresh = Vec::new();
        for v in &span.basis {
            for a in &m.action {
                let w = a.apply(v);
                if !span.contains(&w) {
                    fresh.push(w);
                }
            }
        }
        if fresh.is_empty() {
            return span;
        }
        let mut all = span.basis.clone();
        all.extend(fresh);
        span = Subspace::from_spanning(m.dim, m.p, &all);
    }
}

/// Splits M along an idempotent endomorphism e into (image, kernel), with
/// witnesses relative to M: the returned projections compose with the
/// inclusions to e and 1 - e respectively.
fn split_by_idempotent(m: &Module, e: &Matrix) -> ((Module, Matrix, Matrix), (Module, Matrix, Matrix)) {
    let p = m.p;
    let cols: Vec<Vec<Fp>> = (0..m.dim)
        .map(|c| (0..m.dim).map(|r| e.get(r, c)).collect())
        .collect();
    let im = Subspace::from_spanning(m.dim, p, &cols);
    let ker = Subspace::from_spanning(m.dim, p, &e.kernel_basis());
    let part = |space: &Subspace, idem: &Matrix| {
        let (module, incl, pivots) = submodule_module(m, space);
        let mut sel = Matrix::zero(space.dim(), m.dim, p);
        for (i, &pr) in pivots.iter().enumerate() {
            sel.set(i, pr, 1);
        }
        let proj = sel.mul(idem).expect("dims");
        (module, incl, proj)
    };
    let one_minus_e = {
        let mut id = Matrix::identity(m.dim, p);
        let neg = e.scale(fp_neg(1, p));
        id = id.add(&neg).expect("dims");
        id
    };
    (part(&im, e), part(&ker, &one_minus_e))
}

/// If the minimal polynomial of `f` has at least two distinct irreducible
/// factors, returns the idempotent projecting onto the first primary
/// component (a polynomial in `f`, hence a module endomorphism whenever `f`
/// is one).
fn splitting_idempotent(f: &Matrix) -> Result<Option<Matrix>> {
    let p = f.p;
    let mu = minimal_polynomial(f);
    let (_, factors) = factor_poly(&mu)?;
    if factors.len() < 2 {
        return Ok(None);
    }
    let a1 = factors[0].0.pow(factors[0].1);
    let mut a2 = Poly::one(p);
    for (g, m) in &factors[1..] {
        a2 = a2.mul(&g.pow(*m));
    }
    let (g, _, v) = ext_gcd(&a1, &a2);
    if g != Poly::one(p) {
        return Err(Error::Internal("primary components not coprime".into()));
    }
    let c = v.mul(&a2).rem(&mu);
    let e = poly_at_matrix(&c, f);
    if e.mul(&e)? != e {
        return Err(Error::Internal("CRT element is not idempotent".into()));
    }
    Ok(Some(e))
}

fn element_pow(alg: &Algebra, x: &[Fp], mut e: u64) -> Vec<Fp> {
    let mut acc = alg.unit.clone();
    let mut base = x.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            acc = alg.mul(&acc, &base);
        }
        base = alg.mul(&base, &base);
        e >>= 1;
    }
    acc
}

fn is_commutative(alg: &Algebra) -> bool {
    for i in 0..alg.dim {
        for j in (i + 1)..alg.dim {
            if alg.entry(i, j) != alg.entry(j, i) {
                return false;
            }
        }
    }
    true
}

/// Dimension of the fixed space of the Frobenius x -> x^p, which for a
/// commutative semisimple algebra over GF(p) equals the number of simple
/// (field) factors.
fn frobenius_fixed_dim(alg: &Algebra) -> usize {
    let p = alg.p;
    let mut m = Matrix::zero(alg.dim, alg.dim, p);
    for j in 0..alg.dim {
        let fx = element_pow(alg, &alg.basis_vector(j), p as u64);
        for i in 0..alg.dim {
            let v = if i == j {
                (fx[i] + fp_neg(1, p)) % p
            } else {
                fx[i]
            };
            m.set(i, j, v);
        }
    }
    m.kernel_basis().len()
}

/// True when the endomorphism algebra spanned by `homs` (acting faithfully
/// on an n-dimensional space) is local, i.e. the module is indecomposable.
fn end_is_local(p: u32, homs: &[Matrix]) -> Result<bool> {
    let d = homs.len();
    let rad = radical_from_rep(p, d, homs);
    if rad.dim() + 1 == d {
        return Ok(true); // quotient is 1-dimensional, hence the ground field
    }
    let e_alg = end_from_matrices(p, homs[0].rows, homs)?;
    let (ebar, _) = e_alg.quotient(&Ideal { basis: rad })?;
    Ok(is_commutative(&ebar) && frobenius_fixed_dim(&ebar) == 1)
}

/// Krull-Schmidt decomposition into indecomposable summands with split
/// witnesses. Deterministic for a fixed seed.
pub fn decompose(alg: &Algebra, m: &Module, seed: u64) -> Result<Decomposition> {
    let p = alg.p;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Decomposition::default();
    let mut stack: Vec<(Module, Matrix, Matrix)> = Vec::new();
    if m.dim > 0 {
        stack.push((
            m.clone(),
            Matrix::identity(m.dim, p),
            Matrix::identity(m.dim, p),
        ));
    }
    while let Some((cur, incl, proj)) = stack.pop() {
        if cur.dim == 0 {
            continue;
        }
        let homs = hom_space(alg, &cur, &cur)?;
        let mut split = None;
        if homs.len() > 1 {
            for f in &homs {
                if let Some(e) = splitting_idempotent(f)? {
                    split = Some(e);
                    break;
                }
            }
            if split.is_none() && !end_is_local(p, &homs)? {
                // a splitting endomorphism exists; search seeded combinations
                for _ in 0..SPLIT_TRIES {
                    let mut f = Matrix::zero(cur.dim, cur.dim, p);
                    for h in &homs {
                        let c = rng.gen_range(0..p);
                        if c != 0 {
                            f.add_scaled_assign(h, c);
                        }
                    }
                    if let Some(e) = splitting_idempotent(&f)? {
                        split = Some(e);
                        break;
                    }
                }
                if split.is_none() {
                    return Err(Error::Internal(
                        "failed to split a certified-decomposable module".into(),
                    ));
                }
            }
        }
        match split {
            None => out.summands.push(Summand {
                module: cur,
                inclusion: incl,
                projection: proj,
            }),
            Some(e) => {
                let ((im_mod, im_incl, im_proj), (ker_mod, ker_incl, ker_proj)) =
                    split_by_idempotent(&cur, &e);
                stack.push((
                    ker_mod,
                    incl.mul(&ker_incl)?,
                    ker_proj.mul(&proj)?,
                ));
                stack.push((
                    im_mod,
                    incl.mul(&im_incl)?,
                    im_proj.mul(&proj)?,
                ));
            }
        }
    }
    Ok(out)
}

/// Isomorphism test for indecomposable modules: with local endomorphism
/// rings, M = N iff some composition of Hom-basis elements in the two
/// directions is invertible (non-isomorphisms fill the radical, an ideal).
pub fn is_isomorphic_indec(alg: &Algebra, m: &Module, n: &Module) -> Result<bool> {
    if m.dim != n.dim {
        return Ok(false);
    }
    if m.dim == 0 {
        return Ok(true);
    }
    let fwd = hom_space(alg, m, n)?;
    let bwd = hom_space(alg, n, m)?;
    for f in &fwd {
        for g in &bwd {
            if g.mul(f)?.rank() == m.dim {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// General isomorphism test via Krull-Schmidt multiset matching.
pub fn is_isomorphic(alg: &Algebra, m: &Module, n: &Module) -> Result<bool> {
    if m.dim != n.dim {
        return Ok(false);
    }
    if m.dim == 0 {
        return Ok(true);
    }
    let dm = decompose(alg, m, 0)?;
    let dn = decompose(alg, n, 0)?;
    if dm.summands.len() != dn.summands.len() {
        return Ok(false);
    }
    let mut used = vec![false; dn.summands.len()];
    for s in &dm.summands {
        let mut matched = false;
        for (j, t) in dn.summands.iter().enumerate() {
            if used[j] {
                continue;
            }
            if is_isomorphic_indec(alg, &s.module, &t.module)? {
                used[j] = true;
                matched = true;
                break;
            }
        }
        if !matched {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True when every indecomposable summand of M occurs (up to isomorphism)
/// among the summands of N; multiplicities are irrelevant.
pub fn is_in_add(alg: &Algebra, m: &Module, n: &Module) -> Result<bool> {
    if m.dim == 0 {
        return Ok(true);
    }
    let dm = decompose(alg, m, 0)?;
    let dn = decompose(alg, n, 0)?;
    for s in &dm.summands {
        let mut found = false;
        for t in &dn.summands {
            if is_isomorphic_indec(alg, &s.module, &t.module)? {
                found = true;
                break;
            }
        }
        if !found {
            return Ok(false);
        }
    }
    Ok(true)
}

// ---------------------------------------------------------------------------
// Bimodules and tensor products
// ---------------------------------------------------------------------------

/// An (A, B)-bimodule: `left[i]` is the action of the i-th A-basis element,
/// `right[j]` the action of right multiplication by the j-th B-basis element
/// (so right[i] right[j] = right action of b_j b_i).
#[derive(Clone, Debug, PartialEq)]
pub struct Bimodule {
    pub p: u32,
    pub dim: usize,
    pub left: Vec<Matrix>,
    pub right: Vec<Matrix>,
}

impl Bimodule {
    /// A as an (A, A)-bimodule.
    pub fn regular(alg: &Algebra) -> Bimodule {
        let left = (0..alg.dim)
            .map(|i| alg.left_mult(&alg.basis_vector(i)))
            .collect();
        let right = (0..alg.dim)
            .map(|i| alg.right_mult(&alg.basis_vector(i)))
            .collect();
        Bimodule { p: alg.p, dim: alg.dim, left, right }
    }

    /// Checks the bimodule axioms over the given pair of algebras.
    pub fn validate(&self, a: &Algebra, b: &Algebra) -> bool {
        if self.left.len() != a.dim || self.right.len() != b.dim {
            return false;
        }
        if self.dim == 0 {
            return true;
        }
        let id = Matrix::identity(self.dim, self.p);
        let lact = Module {
            p: self.p,
            dim: self.dim,
            action: self.left.clone(),
        };
        if !lact.validate(a) {
            return false;
        }
        // right action: anti-representation of B
        let ract = |x: &[Fp]| -> Matrix {
            let mut m = Matrix::zero(self.dim, self.dim, self.p);
            for (i, &c) in x.iter().enumerate() {
                if c != 0 {
                    m.add_scaled_assign(&self.right[i], c);
                }
            }
            m
        };
        if ract(&b.unit) != id {
            return false;
        }
        for i in 0..b.dim {
            for j in 0..b.dim {
                let lhs = self.right[i].mul(&self.right[j]).expect("square");
                if lhs != ract(b.entry(j, i)) {
                    return false;
                }
            }
        }
        for l in &self.left {
            for r in &self.right {
                if l.mul(r).expect("square") != r.mul(l).expect("square") {
                    return false;
                }
            }
        }
        true
    }

    /// View as a left module over A (x) B^op; basis pair (i, j) sits at
    /// index i * dim B + j, matching `Algebra::tensor_product`.
    pub fn as_env_module(&self, b_dim: usize) -> Module {
        let mut action = Vec::with_capacity(self.left.len() * b_dim);
        for l in &self.left {
            for r in self.right.iter().take(b_dim) {
                action.push(l.mul(r).expect("square"));
            }
        }
        Module { p: self.p, dim: self.dim, action }
    }

    /// Inverse of `as_env_module`: recover the two one-sided actions from a
    /// module over A (x) B^op using the units.
    pub fn from_env_module(a: &Algebra, b: &Algebra, m: &Module) -> Bimodule {
        let p = m.p;
        let mut left = Vec::with_capacity(a.dim);
        for i in 0..a.dim {
            let mut acc = Matrix::zero(m.dim, m.dim, p);
            for (j, &u) in b.unit.iter().enumerate() {
                if u != 0 {
                    acc.add_scaled_assign(&m.action[i * b.dim + j], u);
                }
            }
            left.push(acc);
        }
        let mut right = Vec::with_capacity(b.dim);
        for j in 0..b.dim {
            let mut acc = Matrix::zero(m.dim, m.dim, p);
            for (i, &u) in a.unit.iter().enumerate() {
                if u != 0 {
                    acc.add_scaled_assign(&m.action[i * b.dim + j], u);
                }
            }
            right.push(acc);
        }
        Bimodule { p, dim: m.dim, left, right }
    }
}

/// Kronecker product with index convention (i1, i2) -> i1 * b.rows + i2.
pub fn kron(a: &Matrix, b: &Matrix) -> Matrix {
    let p = a.p;
    let mut out = Matrix::zero(a.rows * b.rows, a.cols * b.cols, p);
    for i1 in 0..a.rows {
        for j1 in 0..a.cols {
            let v = a.get(i1, j1);
            if v == 0 {
                continue;
            }
            for i2 in 0..b.rows {
                for j2 in 0..b.cols {
                    let w = b.get(i2, j2);
                    if w != 0 {
                        out.set(
                            i1 * b.rows + i2,
                            j1 * b.cols + j2,
                            fp_mul(v, w, p),
                        );
                    }
                }
            }
        }
    }
    out
}

/// Tensor product X (x)_B Y of an (A, B)-bimodule with a (B, C)-bimodule:
/// the quotient of X (x)_k Y by span{ xb (x) y - x (x) by }. Relations are
/// imposed only for a generating set of B (the rest follow by induction on
/// products). Returns the (A, C)-bimodule together with the projection from
/// and coordinate section into the full tensor space, whose basis pair
/// (i, j) sits at index i * Y.dim + j.
pub fn tensor_over(
    b: &Algebra,
    x: &Bimodule,
    y: &Bimodule,
) -> Result<(Bimodule, Matrix, Matrix)> {
    if x.p != b.p || y.p != b.p {
        return Err(Error::ModulusMismatch(x.p, y.p));
    }
    let p = b.p;
    let full = x.dim * y.dim;
    if full > crate::linalg::MAX_MATRIX_SIDE {
        return Err(Error::CapExceeded(format!(
            "tensor space dimension {full} exceeds cap"
        )));
    }
    let mut relations = Vec::new();
    for &g in &b.generating_set() {
        let xr = &x.right[g];
        let yl = &y.left[g];
        for i in 0..x.dim {
            for j in 0..y.dim {
                let mut rel = vec![0u32; full];
                for k in 0..x.dim {
                    let v = xr.get(k, i);
                    if v != 0 {
                        rel[k * y.dim + j] = v;
                    }
                }
                for l in 0..y.dim {
                    let v = yl.get(l, j);
                    if v != 0 {
                        let idx = i * y.dim + l;
                        rel[idx] = (rel[idx] + fp_neg(v, p)) % p;
                    }
                }
                if rel.iter().any(|&v| v != 0) {
                    relations.push(rel);
                }
            }
        }
    }
    let rel = Subspace::from_spanning(full, p, &relations);
    let q = full - rel.dim();
    let mut pivot_cols = vec![false; full];
    for row in &rel.basis {
        pivot_cols[row.iter().position(|&v| v != 0).expect("rref row")] = true;
    }
    let free: Vec<usize> = (0..full).filter(|&c| !pivot_cols[c]).collect();
    let mut proj = Matrix::zero(q, full, p);
    for c in 0..full {
        let mut e = vec![0u32; full];
        e[c] = 1;
        let red = rel.reduce(&e);
        for (qi, &fc) in free.iter().enumerate() {
            proj.set(qi, c, red[fc]);
        }
    }
    let mut section = Matrix::zero(full, q, p);
    for (qi, &fc) in free.iter().enumerate() {
        section.set(fc, qi, 1);
    }
    let idx = Matrix::identity(x.dim, p);
    let idy = Matrix::identity(y.dim, p);
    let left = x
        .left
        .iter()
        .map(|l| proj.mul(&kron(l, &idy)).unwrap().mul(&section).unwrap())
        .collect();
    let right = y
        .right
        .iter()
        .map(|r| proj.mul(&kron(&idx, r)).unwrap().mul(&section).unwrap())
        .collect();
    Ok((Bimodule { p, dim: q, left, right }, proj, section))
}

// ---------------------------------------------------------------------------
// Projective machinery
// ---------------------------------------------------------------------------

/// A projective indecomposable P = Ae as a module, with its basis recorded
/// as elements of A (needed to evaluate maps out of P on a generator).
#[derive(Clone, Debug)]
pub struct PimData {
    pub module: Module,
    pub elems: Vec<Vec<Fp>>,
}

/// Primitive idempotent decomposition of an algebra: the idempotents, their
/// projective indecomposables, an isomorphism-class assignment, and the
/// radical. Everything downstream (covers, syzygies, dimensions) runs off
/// this.
#[derive(Clone, Debug)]
pub struct ProjectiveData {
    pub idempotents: Vec<Vec<Fp>>,
    pub pims: Vec<PimData>,
    /// `class_of[i]` indexes into `class_reps`.
    pub class_of: Vec<usize>,
    /// Representative pim index per isomorphism class.
    pub class_reps: Vec<usize>,
    pub rad: Subspace,
    /// True when the cogenerator D(A) is projective. Over a self-injective
    /// algebra every module has projective dimension 0 or infinity, which
    /// certifies infinite dimensions without waiting for syzygy repetition.
    pub self_injective: bool,
}

impl ProjectiveData {
    /// From known primitive orthogonal idempotents summing to 1, plus the
    /// radical (as a subspace of the algebra).
    pub fn from_idempotents(
        alg: &Algebra,
        idempotents: Vec<Vec<Fp>>,
        rad: Subspace,
    ) -> Result<Self> {
        let pims = Self::build_pims(alg, &idempotents)?;
        let mut class_of = vec![usize::MAX; pims.len()];
        let mut class_reps: Vec<usize> = Vec::new();
        for i in 0..pims.len() {
            let mut assigned = None;
            for (ci, &rep) in class_reps.iter().enumerate() {
                if is_isomorphic_indec(alg, &pims[i].module, &pims[rep].module)? {
                    assigned = Some(ci);
                    break;
                }
            }
            class_of[i] = match assigned {
                Some(ci) => ci,
                None => {
                    class_reps.push(i);
                    class_reps.len() - 1
                }
            };
        }
        Self::finish(alg, idempotents, pims, class_of, class_reps, rad)
    }

    /// Like [`from_idempotents`](Self::from_idempotents), but with the
    /// isomorphism classes of the idempotents supplied externally (labels
    /// are arbitrary and get renumbered by first occurrence). Used by
    /// endomorphism algebras built blockwise, where the classes are known
    /// from the summand decomposition and recomputing them over the big
    /// algebra would be wasteful.
    pub fn from_idempotents_with_classes(
        alg: &Algebra,
        idempotents: Vec<Vec<Fp>>,
        rad: Subspace,
        classes: &[usize],
    ) -> Result<Self> {
        if classes.len() != idempotents.len() {
            return Err(Error::DimensionMismatch("class list length".into()));
        }
        let pims = Self::build_pims(alg, &idempotents)?;
        let mut class_of = vec![usize::MAX; pims.len()];
        let mut class_reps: Vec<usize> = Vec::new();
        let mut seen: Vec<usize> = Vec::new(); // external label per new class
        for (i, &lab) in classes.iter().enumerate() {
            class_of[i] = match seen.iter().position(|&s| s == lab) {
                Some(ci) => ci,
                None => {
                    seen.push(lab);
                    class_reps.push(i);
                    class_reps.len() - 1
                }
            };
        }
        Self::finish(alg, idempotents, pims, class_of, class_reps, rad)
    }

    fn build_pims(alg: &Algebra, idempotents: &[Vec<Fp>]) -> Result<Vec<PimData>> {
        let p = alg.p;
        let reg = regular_module(alg);
        let mut pims = Vec::with_capacity(idempotents.len());
        for e in idempotents {
            if alg.mul(e, e) != *e {
                return Err(Error::Invalid("non-idempotent element".into()));
            }
            let rm = alg.right_mult(e);
            let cols: Vec<Vec<Fp>> = (0..alg.dim)
                .map(|c| (0..alg.dim).map(|r| rm.get(r, c)).collect())
                .collect();
            let space = Subspace::from_spanning(alg.dim, p, &cols);
            let (module, _, _) = submodule_module(&reg, &space);
            pims.push(PimData { module, elems: space.basis.clone() });
        }
        Ok(pims)
    }

    fn finish(
        alg: &Algebra,
        idempotents: Vec<Vec<Fp>>,
        pims: Vec<PimData>,
        class_of: Vec<usize>,
        class_reps: Vec<usize>,
        rad: Subspace,
    ) -> Result<Self> {
        let mut data = ProjectiveData {
            idempotents,
            pims,
            class_of,
            class_reps,
            rad,
            self_injective: false,
        };
        data.self_injective = is_projective(alg, &data, &coregular_module(alg))?;
        Ok(data)
    }

    /// Decomposes the regular module to find the idempotents; suitable for
    /// small algebras (endomorphism algebras built blockwise supply their
    /// idempotents structurally instead).
    pub fn for_algebra(alg: &Algebra, seed: u64) -> Result<Self> {
        let reg = regular_module(alg);
        let dec = decompose(alg, &reg, seed)?;
        let mut idems = Vec::with_capacity(dec.summands.len());
        for s in &dec.summands {
            // incl . proj is an idempotent endomorphism of the left regular
            // module, i.e. right multiplication by its value at 1
            let phi = s.inclusion.mul(&s.projection)?;
            idems.push(phi.apply(&alg.unit));
        }
        let rad = alg.radical().basis;
        Self::from_idempotents(alg, idems, rad)
    }
}

/// The simple modules, one per pim class: tops P / rad P.
pub fn simple_modules(_alg: &Algebra, pdata: &ProjectiveData) -> Result<Vec<Module>> {
    let mut out = Vec::with_capacity(pdata.class_reps.len());
    for &rep in &pdata.class_reps {
        let pm = &pdata.pims[rep].module;
        let radp = radical_subspace(pm, &pdata.rad);
        out.push(quotient_module(pm, &radp).0);
    }
    Ok(out)
}

/// rad(A) . X as a subspace of X.
pub fn radical_subspace(x: &Module, rad: &Subspace) -> Subspace {
    let mut vecs = Vec::new();
    for r in &rad.basis {
        let m = x.act(r);
        for c in 0..x.dim {
            let col: Vec<Fp> = (0..x.dim).map(|row| m.get(row, c)).collect();
            if col.iter().any(|&v| v != 0) {
                vecs.push(col);
            }
        }
    }
    Subspace::from_spanning(x.dim, x.p, &vecs)
}

/// A minimal projective cover: which pim classes occur (with multiplicity,
/// in order) and the covering map from their direct sum.
#[derive(Clone, Debug)]
pub struct CoverInfo {
    pub pim_classes: Vec<usize>,
    /// x.dim x (sum of pim dims)
    pub map: Matrix,
}

/// Minimal projective cover of X and its syzygy (the kernel, as a module).
///
/// Generators are chosen greedily: scanning pim classes in order, a copy of
/// P_c is added whenever e_c applied to a top basis vector falls outside the
/// submodule of the top generated so far. Each selection contributes exactly
/// one copy of the simple top(P_c), so the cover is minimal.
pub fn minimal_cover(
    alg: &Algebra,
    pdata: &ProjectiveData,
    x: &Module,
) -> Result<(CoverInfo, Module)> {
    let p = alg.p;
    if x.dim == 0 {
        return Ok((
            CoverInfo { pim_classes: Vec::new(), map: Matrix::zero(0, 0, p) },
            Module { p, dim: 0, action: x.action.iter().map(|_| Matrix::zero(0, 0, p)).collect() },
        ));
    }
    let radx = radical_subspace(x, &pdata.rad);
    let (top, _q, section) = quotient_module(x, &radx);
    let mut t = Subspace::zero(top.dim, p);
    // (class index, generator vector in X)
    let mut chosen: Vec<(usize, Vec<Fp>)> = Vec::new();
    for (ci, &rep) in pdata.class_reps.iter().enumerate() {
        let e = &pdata.idempotents[rep];
        let e_top = top.act(e);
        for u in 0..top.dim {
            let w: Vec<Fp> = (0..top.dim).map(|r| e_top.get(r, u)).collect();
            if w.iter().all(|&v| v == 0) || t.contains(&w) {
                continue;
            }
            // lift the u-th top basis vector into X through the section
            let mut unit_u = vec![0u32; top.dim];
            unit_u[u] = 1;
            let v = section.apply(&unit_u);
            chosen.push((ci, v));
            let grown = module_closure(&top, &[w]);
            t = t.sum(&grown);
        }
        if t.dim() == top.dim {
            break;
        }
    }
    if t.dim() != top.dim {
        return Err(Error::Internal("projective cover missed the top".into()));
    }
    let parts: Vec<&Module> = chosen
        .iter()
        .map(|(ci, _)| &pdata.pims[pdata.class_reps[*ci]].module)
        .collect();
    let (domain, _) = direct_sum(&parts)?;
    let total = domain.dim;
    let mut phi = Matrix::zero(x.dim, total, p);
    let mut off = 0usize;
    for (ci, v) in &chosen {
        let pim = &pdata.pims[pdata.class_reps[*ci]];
        for (k, elem) in pim.elems.iter().enumerate() {
            let col = x.act(elem).apply(v);
            for r in 0..x.dim {
                phi.set(r, off + k, col[r]);
            }
        }
        off += pim.elems.len();
    }
    let ker = Subspace::from_spanning(total, p, &phi.kernel_basis());
    let (syz, _, _) = submodule_module(&domain, &ker);
    let info = CoverInfo {
        pim_classes: chosen.into_iter().map(|(ci, _)| ci).collect(),
        map: phi,
    };
    Ok((info, syz))
}

/// Projective dimension outcome; `Infinite` is only reported with a
/// certificate (a syzygy isomorphic to an earlier one), never from merely
/// exhausting the cap.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PdResult {
    Finite(usize),
    Infinite,
    Unknown,
}

pub fn is_projective(alg: &Algebra, pdata: &ProjectiveData, x: &Module) -> Result<bool> {
    let (_, syz) = minimal_cover(alg, pdata, x)?;
    Ok(syz.dim == 0)
}

/// Projective dimension by iterated minimal syzygies, up to `cap` steps.
pub fn projective_dimension(
    alg: &Algebra,
    pdata: &ProjectiveData,
    x: &Module,
    cap: usize,
) -> Result<PdResult> {
    if x.dim == 0 {
        return Ok(PdResult::Finite(0));
    }
    let mut history: Vec<Module> = vec![x.clone()];
    let mut cur = x.clone();
    for step in 0..=cap {
        let (_, syz) = minimal_cover(alg, pdata, &cur)?;
        if syz.dim == 0 {
            return Ok(PdResult::Finite(step));
        }
        if pdata.self_injective {
            return Ok(PdResult::Infinite);
        }
        for prev in &history {
            if prev.dim == syz.dim
                && syz.dim <= ISO_CHECK_CAP
                && is_isomorphic(alg, prev, &syz)?
            {
                // minimal resolutions are unique, so a repeated syzygy
                // makes the resolution periodic from here on
                return Ok(PdResult::Infinite);
            }
        }
        history.push(syz.clone());
        cur = syz;
    }
    Ok(PdResult::Unknown)
}

/// Global dimension = max projective dimension over the simple modules.
pub fn global_dimension_with(
    alg: &Algebra,
    pdata: &ProjectiveData,
    cap: usize,
) -> Result<PdResult> {
    let simples = simple_modules(alg, pdata)?;
    let results = crate::exec::map_collect(simples, |s| {
        projective_dimension(alg, pdata, &s, cap)
    });
    let mut max = 0usize;
    let mut unknown = false;
    for r in results {
        match r? {
            PdResult::Finite(d) => max = max.max(d),
            PdResult::Infinite => return Ok(PdResult::Infinite),
            PdResult::Unknown => unknown = true,
        }
    }
    if unknown {
        Ok(PdResult::Unknown)
    } else {
        Ok(PdResult::Finite(max))
    }
}

pub fn global_dimension(alg: &Algebra, cap: usize, seed: u64) -> Result<PdResult> {
    let pdata = ProjectiveData::for_algebra(alg, seed)?;
    global_dimension_with(alg, &pdata, cap)
}

// ---------------------------------------------------------------------------
// Brute-force oracles for cross-checking on small instances
// ---------------------------------------------------------------------------

pub mod oracle {
    use super::*;

    /// The radical as the span of all elements whose two-sided ideal closure
    /// is nilpotent; exhaustive over all p^dim elements, so only for tiny
    /// algebras. Shares only the span/closure primitives with the production
    /// path (which uses trace-form towers).
    pub fn brute_force_radical(alg: &Algebra) -> Subspace {
        let p = alg.p as u64;
        let total = p.checked_pow(alg.dim as u32).expect("overflow");
        assert!(total <= 1 << 20, "algebra too large for brute force");
        let mut members = Vec::new();
        let mut counter = vec![0u32; alg.dim];
        for _ in 0..total {
            if counter.iter().any(|&c| c != 0) {
                let ideal = alg.ideal_closure(&[counter.clone()]);
                if ideal_nilpotent(alg, &ideal) {
                    members.push(counter.clone());
                }
            }
            // odometer increment
            for d in counter.iter_mut() {
                *d += 1;
                if *d < alg.p {
                    break;
                }
                *d = 0;
            }
        }
        Subspace::from_spanning(alg.dim, alg.p, &members)
    }

    fn ideal_nilpotent(alg: &Algebra, ideal: &Ideal) -> bool {
        let mut cur = ideal.basis.clone();
        loop {
            if cur.dim() == 0 {
                return true;
            }
            let mut prods = Vec::new();
            for v in &cur.basis {
                for w in &ideal.basis.basis {
                    prods.push(alg.mul(v, w));
                }
            }
            let next = Subspace::from_spanning(alg.dim, alg.p, &prods);
            if next.dim() >= cur.dim() {
                return false;
            }
            cur = next;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{matrix_algebra, truncated_polynomial_algebra};

    fn cyclic_group_algebra(n: usize, p: u32) -> Algebra {
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

    fn klein_group_algebra(p: u32) -> Algebra {
        let idx = |a: usize, b: usize| a + 2 * b;
        let mut table = vec![vec![0u32; 4]; 16];
        for a1 in 0..2 {
            for b1 in 0..2 {
                for a2 in 0..2 {
                    for b2 in 0..2 {
                        table[idx(a1, b1) * 4 + idx(a2, b2)]
                            [idx((a1 + a2) % 2, (b1 + b2) % 2)] = 1;
                    }
                }
            }
        }
        Algebra::from_parts(p, 4, table, vec![1, 0, 0, 0], None).unwrap()
    }

    /// Upper-triangular 2x2 matrices: hereditary, gldim 1.
    fn upper_triangular_2(p: u32) -> Algebra {
        // basis e11, e12, e22
        let mut table = vec![vec![0u32; 3]; 9];
        let prod = |i: usize, j: usize| -> Option<usize> {
            // (a,b)(c,d) = delta_{bc} (a,d) with pairs e11=(0,0), e12=(0,1), e22=(1,1)
            let pair = [(0, 0), (0, 1), (1, 1)];
            let (a, b) = pair[i];
            let (c, d) = pair[j];
            if b != c {
                return None;
            }
            pair.iter().position(|&q| q == (a, d))
        };
        for i in 0..3 {
            for j in 0..3 {
                if let Some(k) = prod(i, j) {
                    table[i * 3 + j][k] = 1;
                }
            }
        }
        Algebra::from_parts(p, 3, table, vec![1, 0, 1], None).unwrap()
    }

    /// Trivial module of a group algebra: every basis element acts as 1.
    fn trivial_module(alg: &Algebra) -> Module {
        let action = (0..alg.dim).map(|_| Matrix::identity(1, alg.p)).collect();
        Module::new(alg, action).unwrap()
    }

    #[test]
    fn regular_module_valid() {
        for a in [cyclic_group_algebra(2, 2), klein_group_algebra(2), matrix_algebra(2, 3).unwrap()] {
            assert!(regular_module(&a).validate(&a));
            assert!(coregular_module(&a).validate(&a));
        }
    }

    #[test]
    fn end_of_regular_has_algebra_dimension() {
        // End(_A A) = A^op
        for a in [cyclic_group_algebra(2, 2), klein_group_algebra(2), matrix_algebra(2, 2).unwrap()] {
            let reg = regular_module(&a);
            assert_eq!(hom_space(&a, &reg, &reg).unwrap().len(), a.dim);
        }
    }

    #[test]
    fn end_of_regular_plus_trivial_kc2() {
        // dim End(A + k) = 5 for A = k[C2] over GF(2):
        // End(A)=2, Hom(A,k)=1, Hom(k,A)=1, End(k)=1
        let a = cyclic_group_algebra(2, 2);
        let reg = regular_module(&a);
        let triv = trivial_module(&a);
        let (m, _) = direct_sum(&[&reg, &triv]).unwrap();
        let (e, basis) = end_algebra(&a, &m).unwrap();
        assert_eq!(e.dim, 5);
        assert_eq!(basis.len(), 5);
        assert!(e.validate().is_ok());
    }

    #[test]
    fn minimal_polynomial_examples() {
        // Jordan block over GF(2): (x - 1)^2 = x^2 + 1
        let j = Matrix::from_rows(vec![vec![1, 1], vec![0, 1]], 2);
        assert_eq!(minimal_polynomial(&j), Poly::new(2, vec![1, 0, 1]));
        let id = Matrix::identity(3, 5);
        assert_eq!(minimal_polynomial(&id), Poly::new(5, vec![4, 1])); // x - 1
        let z = Matrix::zero(2, 2, 3);
        assert_eq!(minimal_polynomial(&z), Poly::new(3, vec![0, 1])); // x
    }

    #[test]
    fn decompose_local_regular_is_indecomposable() {
        for a in [cyclic_group_algebra(4, 2), klein_group_algebra(2)] {
            let reg = regular_module(&a);
            let dec = decompose(&a, &reg, 0).unwrap();
            assert_eq!(dec.summands.len(), 1);
            assert!(dec.verify(&reg));
        }
    }

    #[test]
    fn decompose_semisimple_regular() {
        // k[C2] over GF(5): two non-isomorphic 1-dimensional summands
        let a = cyclic_group_algebra(2, 5);
        let reg = regular_module(&a);
        let dec = decompose(&a, &reg, 0).unwrap();
        assert_eq!(dec.summands.len(), 2);
        assert!(dec.verify(&reg));
        assert!(!is_isomorphic_indec(&a, &dec.summands[0].module, &dec.summands[1].module).unwrap());
    }

    #[test]
    fn decompose_matrix_algebra_regular() {
        // M_2(GF(2)): two isomorphic 2-dimensional summands
        let a = matrix_algebra(2, 2).unwrap();
        let reg = regular_module(&a);
        let dec = decompose(&a, &reg, 0).unwrap();
        assert_eq!(dec.summands.len(), 2);
        assert!(dec.verify(&reg));
        for s in &dec.summands {
            assert_eq!(s.module.dim, 2);
        }
        assert!(is_isomorphic_indec(&a, &dec.summands[0].module, &dec.summands[1].module).unwrap());
    }

    #[test]
    fn decompose_doubling() {
        let a = klein_group_algebra(2);
        let triv = trivial_module(&a);
        let reg = regular_module(&a);
        let (m, _) = direct_sum(&[&reg, &triv, &triv]).unwrap();
        let dec = decompose(&a, &m, 1).unwrap();
        assert_eq!(dec.summands.len(), 3);
        assert!(dec.verify(&m));
        let dims: Vec<usize> = {
            let mut d: Vec<usize> = dec.summands.iter().map(|s| s.module.dim).collect();
            d.sort();
            d
        };
        assert_eq!(dims, vec![1, 1, 4]);
    }

    #[test]
    fn iso_tests() {
        let a = cyclic_group_algebra(2, 2);
        let reg = regular_module(&a);
        let triv = trivial_module(&a);
        assert!(is_isomorphic(&a, &reg, &reg).unwrap());
        assert!(!is_isomorphic(&a, &reg, &triv).unwrap());
        // A + k vs k + A: same multiset
        let (m1, _) = direct_sum(&[&reg, &triv]).unwrap();
        let (m2, _) = direct_sum(&[&triv, &reg]).unwrap();
        assert!(is_isomorphic(&a, &m1, &m2).unwrap());
    }

    #[test]
    fn in_add_tests() {
        let a = klein_group_algebra(2);
        let reg = regular_module(&a);
        let triv = trivial_module(&a);
        let (m, _) = direct_sum(&[&reg, &triv]).unwrap();
        assert!(is_in_add(&a, &triv, &m).unwrap());
        assert!(is_in_add(&a, &reg, &m).unwrap());
        assert!(!is_in_add(&a, &triv, &reg).unwrap());
        // multiplicities are irrelevant
        let (t2, _) = direct_sum(&[&triv, &triv]).unwrap();
        assert!(is_in_add(&a, &t2, &m).unwrap());
    }

    #[test]
    fn coregular_iso_regular_for_group_algebra() {
        // group algebras are self-injective: D(A) = A
        for a in [cyclic_group_algebra(2, 2), cyclic_group_algebra(4, 2), klein_group_algebra(2)] {
            let reg = regular_module(&a);
            let coreg = coregular_module(&a);
            assert!(is_isomorphic(&a, &reg, &coreg).unwrap());
        }
    }

    #[test]
    fn regular_bimodule_valid() {
        let a = klein_group_algebra(2);
        let bi = Bimodule::regular(&a);
        assert!(bi.validate(&a, &a));
        let env = a.enveloping().unwrap();
        let m = bi.as_env_module(a.dim);
        assert!(m.validate(&env));
        let back = Bimodule::from_env_module(&a, &a, &m);
        assert_eq!(back, bi);
    }

    #[test]
    fn tensor_regular_over_self_is_identity() {
        // A (x)_A A = A, so the quotient has dimension dim A
        for a in [cyclic_group_algebra(2, 2), matrix_algebra(2, 3).unwrap()] {
            let bi = Bimodule::regular(&a);
            let (t, _, _) = tensor_over(&a, &bi, &bi).unwrap();
            assert_eq!(t.dim, a.dim);
            assert!(t.validate(&a, &a));
        }
    }

    #[test]
    fn tensor_over_ground_field_is_full_tensor() {
        // relations over k are trivial: dim = dim X * dim Y
        let a = cyclic_group_algebra(2, 2);
        let k = Algebra::ground_field(2).unwrap();
        let bi = Bimodule::regular(&a);
        // view A as (A, k)- and (k, A)-bimodules
        let x = Bimodule {
            p: 2,
            dim: a.dim,
            left: bi.left.clone(),
            right: vec![Matrix::identity(a.dim, 2)],
        };
        let y = Bimodule {
            p: 2,
            dim: a.dim,
            left: vec![Matrix::identity(a.dim, 2)],
            right: bi.right.clone(),
        };
        let (t, _, _) = tensor_over(&k, &x, &y).unwrap();
        assert_eq!(t.dim, a.dim * a.dim);
    }

    #[test]
    fn projective_data_klein() {
        // local algebra: one pim = the whole regular module
        let a = klein_group_algebra(2);
        let pd = ProjectiveData::for_algebra(&a, 0).unwrap();
        assert_eq!(pd.pims.len(), 1);
        assert_eq!(pd.class_reps.len(), 1);
        let simples = simple_modules(&a, &pd).unwrap();
        assert_eq!(simples.len(), 1);
        assert_eq!(simples[0].dim, 1);
    }

    #[test]
    fn projective_data_matrix_algebra() {
        let a = matrix_algebra(2, 2).unwrap();
        let pd = ProjectiveData::for_algebra(&a, 0).unwrap();
        assert_eq!(pd.pims.len(), 2);
        assert_eq!(pd.class_reps.len(), 1);
        let simples = simple_modules(&a, &pd).unwrap();
        assert_eq!(simples[0].dim, 2);
    }

    #[test]
    fn gldim_semisimple_zero() {
        let a = matrix_algebra(2, 2).unwrap();
        assert_eq!(global_dimension(&a, 12, 0).unwrap(), PdResult::Finite(0));
        let b = cyclic_group_algebra(2, 5);
        assert_eq!(global_dimension(&b, 12, 0).unwrap(), PdResult::Finite(0));
    }

    #[test]
    fn gldim_hereditary_one() {
        let a = upper_triangular_2(3);
        assert!(a.validate().is_ok());
        assert_eq!(global_dimension(&a, 12, 0).unwrap(), PdResult::Finite(1));
    }

    #[test]
    fn gldim_group_algebra_infinite() {
        for a in [cyclic_group_algebra(2, 2), cyclic_group_algebra(4, 2), klein_group_algebra(2)] {
            assert_eq!(global_dimension(&a, 12, 0).unwrap(), PdResult::Infinite);
        }
    }

    #[test]
    fn gldim_end_of_regular_plus_trivial_is_two() {
        // A = k[C2]/GF(2): gldim End(A + k) = 2
        let a = cyclic_group_algebra(2, 2);
        let reg = regular_module(&a);
        let triv = trivial_module(&a);
        let (m, _) = direct_sum(&[&reg, &triv]).unwrap();
        let (e, _) = end_algebra(&a, &m).unwrap();
        assert_eq!(global_dimension(&e, 12, 0).unwrap(), PdResult::Finite(2));
    }

    #[test]
    fn pd_trivial_module_over_truncated_polynomials() {
        // k over k[t]/(t^2): syzygy of k is k again, so pd is infinite
        let a = truncated_polynomial_algebra(2, 3).unwrap();
        let pd = ProjectiveData::for_algebra(&a, 0).unwrap();
        let k = {
            let mut action = vec![Matrix::identity(1, 3), Matrix::zero(1, 1, 3)];
            action[0] = Matrix::identity(1, 3);
            Module::new(&a, action).unwrap()
        };
        assert_eq!(
            projective_dimension(&a, &pd, &k, 12).unwrap(),
            PdResult::Infinite
        );
        // the regular module is projective
        assert!(is_projective(&a, &pd, &regular_module(&a)).unwrap());
    }

    #[test]
    fn minimal_cover_of_pim_is_isomorphism() {
        let a = klein_group_algebra(2);
        let pd = ProjectiveData::for_algebra(&a, 0).unwrap();
        let reg = regular_module(&a);
        let (info, syz) = minimal_cover(&a, &pd, &reg).unwrap();
        assert_eq!(syz.dim, 0);
        assert_eq!(info.pim_classes.len(), 1);
    }

    #[test]
    fn quotient_and_submodule_roundtrip_dims() {
        let a = klein_group_algebra(2);
        let reg = regular_module(&a);
        let rad = radical_subspace(&reg, &a.radical().basis);
        assert_eq!(rad.dim(), 3);
        let (sub, _, _) = submodule_module(&reg, &rad);
        assert!(sub.validate(&a));
        let (quot, _, _) = quotient_module(&reg, &rad);
        assert!(quot.validate(&a));
        assert_eq!(quot.dim, 1);
    }

    #[test]
    fn dual_module_is_opposite_module() {
        let a = matrix_algebra(2, 3).unwrap();
        let reg = regular_module(&a);
        let d = dual_module(&reg);
        assert!(d.validate(&a.opposite()));
    }
}
