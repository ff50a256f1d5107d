//! Representation dimension via Auslander's characterization: for a
//! non-semisimple algebra A, repdim(A) is the infimum of gldim(End_A(M))
//! over generator-cogenerators M = A ⊕ D(A) ⊕ X. The engine searches a
//! finite candidate pool for upper bounds, certifies lower bounds (0, 2,
//! or 3 with a representation-infiniteness certificate), and reports an
//! exact value when the two meet.
//!
//! Endomorphism algebras of the (possibly large) candidates are assembled
//! blockwise from the indecomposable summands, so their primitive
//! idempotents, radical, and projective structure come out structurally —
//! no decomposition of the End algebra's regular module is ever needed.

use crate::algebra::{radical_from_rep, Algebra};
use crate::exec;
use crate::group::{higman_rep_type, FiniteGroup, RepType, Subgroup};
use crate::linalg::{Fp, Matrix, Subspace};
use crate::module::{
    coregular_module, decompose, direct_sum, dual_module, hom_space, is_in_add,
    is_isomorphic, is_isomorphic_indec, kernel_submodule, minimal_cover,
    quotient_module, regular_module, submodule_module, Module, PdResult,
    ProjectiveData, Summand, MODULE_DIM_CAP,
};
use crate::{Error, Result};

/// Largest endomorphism algebra the candidate search will build.
pub const END_DIM_CAP: usize = 512;
/// Largest module admitted into a candidate pool.
pub const POOL_DIM_CAP: usize = 128;

// ---------------------------------------------------------------------------
// Generator-cogenerator and self-injectivity tests
// ---------------------------------------------------------------------------

/// True iff _A A ∈ add(M) and D(A_A) ∈ add(M).
pub fn generator_cogenerator_check(alg: &Algebra, m: &Module) -> Result<bool> {
    Ok(is_in_add(alg, &regular_module(alg), m)?
        && is_in_add(alg, &coregular_module(alg), m)?)
}

/// True iff D(A_A) ∈ add(_A A).
pub fn is_self_injective(alg: &Algebra) -> Result<bool> {
    is_in_add(alg, &coregular_module(alg), &regular_module(alg))
}

// ---------------------------------------------------------------------------
// Blockwise endomorphism algebras
// ---------------------------------------------------------------------------

/// A coordinate solver for the span of a linearly independent list of
/// matrices: `coords` recovers the coefficients of any member of the span.
struct SpanSolver {
    t: Matrix,
    rows: usize,
}

impl SpanSolver {
    fn new(basis: &[Matrix], rows: usize, cols: usize, p: u32) -> Result<Self> {
        let k = basis.len();
        let rc = rows * cols;
        // [S | I] row-reduced: since S has full column rank the first k
        // rows become [I_k | T] with T S = I.
        let mut aug = Matrix::zero(rc, k + rc, p);
        for (j, b) in basis.iter().enumerate() {
            for r in 0..rows {
                for c in 0..cols {
                    aug.set(r * cols + c, j, b.get(r, c));
                }
            }
        }
        for i in 0..rc {
            aug.set(i, k + i, 1);
        }
        let red = aug.rref();
        if red.rank < k || red.pivots.iter().take(k).enumerate().any(|(i, &pc)| pc != i) {
            return Err(Error::Internal("hom block basis is dependent".into()));
        }
        let mut t = Matrix::zero(k, rc, p);
        for i in 0..k {
            for j in 0..rc {
                t.set(i, j, red.matrix.get(i, k + j));
            }
        }
        Ok(SpanSolver { t, rows })
    }

    fn coords(&self, m: &Matrix) -> Vec<Fp> {
        let flat: Vec<Fp> = (0..self.rows).flat_map(|r| m.row(r).to_vec()).collect();
        self.t.apply(&flat)
    }
}

/// The endomorphism algebra of a module, assembled blockwise from its
/// indecomposable decomposition, together with the projective data needed
/// for homological computations over it.
pub struct EndStructure {
    pub algebra: Algebra,
    /// endomorphism matrices of the ambient module, one per basis element
    pub matrices: Vec<Matrix>,
    pub pdata: ProjectiveData,
}

/// Builds End_A(M) with primitive idempotents (the identities of the
/// indecomposable summands), radical (trace-form tower on the intertwiner
/// matrices themselves), and summand isomorphism classes computed over A.
pub fn blockwise_end(alg: &Algebra, m: &Module, seed: u64) -> Result<EndStructure> {
    if m.dim == 0 {
        return Err(Error::Invalid("endomorphisms of the zero module".into()));
    }
    let dec = decompose(alg, m, seed)?;
    blockwise_end_from_summands(alg, &dec.summands)
}

/// As [`blockwise_end`], but with the indecomposable summands (and their
/// split maps into the ambient module) already known — direct sums of
/// pre-decomposed parts never re-decompose the big sum.
pub fn blockwise_end_from_summands(alg: &Algebra, parts: &[Summand]) -> Result<EndStructure> {
    let p = alg.p;
    let t = parts.len();
    // hom blocks and their offsets in the global coordinate order
    let mut blocks: Vec<Vec<Vec<Matrix>>> = Vec::with_capacity(t);
    let mut offsets = vec![vec![0usize; t]; t];
    let mut dim_e = 0usize;
    for i in 0..t {
        let mut row = Vec::with_capacity(t);
        for j in 0..t {
            let h = hom_space(alg, &parts[i].module, &parts[j].module)?;
            offsets[i][j] = dim_e;
            dim_e += h.len();
            row.push(h);
        }
        blocks.push(row);
    }
    if dim_e > END_DIM_CAP {
        return Err(Error::CapExceeded(format!(
            "endomorphism algebra dimension {dim_e} exceeds cap {END_DIM_CAP}"
        )));
    }
    let mut solvers: Vec<Vec<Option<SpanSolver>>> = Vec::with_capacity(t);
    for i in 0..t {
        let mut row = Vec::with_capacity(t);
        for j in 0..t {
            row.push(if blocks[i][j].is_empty() {
                None
            } else {
                Some(SpanSolver::new(
                    &blocks[i][j],
                    parts[j].module.dim,
                    parts[i].module.dim,
                    p,
                )?)
            });
        }
        solvers.push(row);
    }
    // global basis: matrices on M, and (source, target, local index)
    let mut matrices = Vec::with_capacity(dim_e);
    let mut where_of: Vec<(usize, usize, usize)> = Vec::with_capacity(dim_e);
    for i in 0..t {
        for j in 0..t {
            for (k, h) in blocks[i][j].iter().enumerate() {
                matrices.push(parts[j].inclusion.mul(h)?.mul(&parts[i].projection)?);
                where_of.push((i, j, k));
            }
        }
    }
    // multiplication table: basis u (block i -> j) times basis v (block
    // l -> q) composes as u . v, nonzero only when q = i, landing in (l, j)
    let mut table = vec![vec![0u32; dim_e]; dim_e * dim_e];
    for (a, &(i, j, ka)) in where_of.iter().enumerate() {
        for (b, &(l, q, kb)) in where_of.iter().enumerate() {
            if q != i {
                continue;
            }
            let prod = blocks[i][j][ka].mul(&blocks[l][q][kb])?;
            let Some(solver) = solvers[l][j].as_ref() else {
                // Hom(U_l, U_j) = 0 forces the composite to vanish
                if !prod.is_zero() {
                    return Err(Error::Internal("nonzero map in a zero hom block".into()));
                }
                continue;
            };
            let co = solver.coords(&prod);
            let off = offsets[l][j];
            for (r, &v) in co.iter().enumerate() {
                table[a * dim_e + b][off + r] = v;
            }
        }
    }
    // unit and primitive idempotents: identities of the diagonal blocks
    let mut unit = vec![0u32; dim_e];
    let mut idempotents = Vec::with_capacity(t);
    for i in 0..t {
        let idm = Matrix::identity(parts[i].module.dim, p);
        let co = solvers[i][i].as_ref().expect("diagonal").coords(&idm);
        let mut e = vec![0u32; dim_e];
        for (r, &v) in co.iter().enumerate() {
            e[offsets[i][i] + r] = v;
            unit[offsets[i][i] + r] = (unit[offsets[i][i] + r] + v) % p;
        }
        idempotents.push(e);
    }
    let algebra = Algebra::from_parts(p, dim_e, table, unit, None)?;
    // radical from the faithful action on M
    let rad = radical_from_rep(p, dim_e, &matrices);
    // summand isomorphism classes, decided over A on the small modules
    let mut classes = vec![usize::MAX; t];
    let mut reps: Vec<usize> = Vec::new();
    for i in 0..t {
        let mut found = None;
        for (ci, &r) in reps.iter().enumerate() {
            if is_isomorphic_indec(alg, &parts[i].module, &parts[r].module)? {
                found = Some(ci);
                break;
            }
        }
        classes[i] = match found {
            Some(ci) => ci,
            None => {
                reps.push(i);
                reps.len() - 1
            }
        };
    }
    let pdata =
        ProjectiveData::from_idempotents_with_classes(&algebra, idempotents, rad, &classes)?;
    Ok(EndStructure { algebra, matrices, pdata })
}

/// gldim(End_A(M)) through the blockwise construction.
pub fn gldim_of_end(alg: &Algebra, m: &Module, cap: usize, seed: u64) -> Result<PdResult> {
    let es = blockwise_end(alg, m, seed)?;
    crate::module::global_dimension_with(&es.algebra, &es.pdata, cap)
}

// ---------------------------------------------------------------------------
// Candidate pools
// ---------------------------------------------------------------------------

/// Modules to adjoin to A ⊕ D(A), deduplicated up to isomorphism, with
/// provenance labels; `loewy` indexes the pieces A/rad^m of the Loewy
/// generator.
pub struct CandidatePool {
    pub modules: Vec<Module>,
    pub labels: Vec<String>,
    pub loewy: Vec<usize>,
}

impl CandidatePool {
    pub fn len(&self) -> usize {
        self.modules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.modules.is_empty()
    }
}

/// Ascending powers rad^1, rad^2, ... as subspaces of the algebra.
fn radical_powers(alg: &Algebra) -> Vec<Subspace> {
    let rad = alg.radical().basis;
    let mut out = Vec::new();
    let mut cur = rad.clone();
    while cur.dim() > 0 {
        out.push(cur.clone());
        let mut prods = Vec::new();
        for v in &cur.basis {
            for w in &rad.basis {
                prods.push(alg.mul(v, w));
            }
        }
        cur = Subspace::from_spanning(alg.dim, alg.p, &prods);
    }
    out
}

/// One-sided candidate constructions: simples, A/rad^m, rad^m, and the
/// syzygies of the simples up to the Loewy length.
fn pool_half(alg: &Algebra, seed: u64) -> Result<Vec<(String, Module)>> {
    let reg = regular_module(alg);
    let pdata = ProjectiveData::for_algebra(alg, seed)?;
    let mut out: Vec<(String, Module)> = Vec::new();
    let simples = crate::module::simple_modules(alg, &pdata)?;
    for (i, s) in simples.iter().enumerate() {
        out.push((format!("simple{i}"), s.clone()));
    }
    let powers = radical_powers(alg);
    let ll = powers.len() + 1;
    for (m1, sp) in powers.iter().enumerate() {
        out.push((
            format!("A/rad^{}", m1 + 1),
            quotient_module(&reg, sp).0,
        ));
        out.push((format!("rad^{}", m1 + 1), submodule_module(&reg, sp).0));
    }
    if powers.is_empty() {
        // semisimple: A/rad^1 = A
        out.push(("A/rad^1".into(), reg.clone()));
    } else {
        out.push((format!("A/rad^{ll}"), reg.clone()));
    }
    for (i, s) in simples.iter().enumerate() {
        let mut cur = s.clone();
        for step in 1..=ll {
            let (_, syz) = minimal_cover(alg, &pdata, &cur)?;
            if syz.dim == 0 {
                break;
            }
            out.push((format!("syzygy^{step}(simple{i})"), syz.clone()));
            cur = syz;
        }
    }
    Ok(out)
}

/// The default pool: zero, simples, Loewy quotients A/rad^m, radical powers,
/// syzygies of simples, the duals of the mirrored constructions over A^op,
/// and any user extras — deduplicated by isomorphism.
pub fn default_pool(alg: &Algebra, extra: &[Module], seed: u64) -> Result<CandidatePool> {
    let mut raw: Vec<(String, Module)> = vec![("zero".into(), Module::zero(alg))];
    raw.extend(pool_half(alg, seed)?);
    let aop = alg.opposite();
    for (label, m) in pool_half(&aop, seed)? {
        // duals of right-module constructions are left A-modules
        raw.push((format!("D({label})"), dual_module(&m)));
    }
    for (i, m) in extra.iter().enumerate() {
        if !m.validate(alg) {
            return Err(Error::Invalid(format!("extra pool module {i} is invalid")));
        }
        raw.push((format!("extra{i}"), m.clone()));
    }
    let mut modules: Vec<Module> = Vec::new();
    let mut labels: Vec<String> = Vec::new();
    let mut loewy: Vec<usize> = Vec::new();
    for (label, m) in raw {
        if m.dim > POOL_DIM_CAP {
            continue;
        }
        let mut idx = None;
        for (k, existing) in modules.iter().enumerate() {
            if is_isomorphic(alg, existing, &m)? {
                idx = Some(k);
                break;
            }
        }
        let k = match idx {
            Some(k) => k,
            None => {
                modules.push(m);
                labels.push(label.clone());
                modules.len() - 1
            }
        };
        if label.starts_with("A/rad^") && !loewy.contains(&k) {
            loewy.push(k);
        }
    }
    Ok(CandidatePool { modules, labels, loewy })
}

// ---------------------------------------------------------------------------
// Upper bound search
// ---------------------------------------------------------------------------

pub struct UpperOptions {
    pub cap_gldim: usize,
    pub seed: u64,
    /// Stop as soon as a candidate reaches this bound (typically the lower
    /// bound, below which no candidate can go).
    pub stop_at: Option<usize>,
}

impl Default for UpperOptions {
    fn default() -> Self {
        UpperOptions { cap_gldim: 12, seed: 0, stop_at: None }
    }
}

pub struct UpperResult {
    pub bound: usize,
    pub witness: Module,
    pub witness_label: String,
    pub candidates_tried: usize,
}

fn candidate_label(pool: &CandidatePool, subset: &[usize]) -> String {
    if subset.is_empty() {
        "X = 0".to_string()
    } else {
        let names: Vec<&str> = subset.iter().map(|&i| pool.labels[i].as_str()).collect();
        format!("X = {}", names.join(" + "))
    }
}

/// A module bundled with its indecomposable decomposition, so candidate
/// direct sums inherit their summand lists instead of re-decomposing.
struct PreDec {
    module: Module,
    summands: Vec<Summand>,
}

fn predecompose(alg: &Algebra, module: Module, seed: u64) -> Result<PreDec> {
    let summands = if module.dim == 0 {
        Vec::new()
    } else {
        decompose(alg, &module, seed)?.summands
    };
    Ok(PreDec { module, summands })
}

/// Direct sum of pre-decomposed parts with the summand split maps composed
/// through the block inclusions.
fn candidate_summands(parts: &[&PreDec]) -> Result<(Module, Vec<Summand>)> {
    let mods: Vec<&Module> = parts.iter().map(|p| &p.module).collect();
    let (ambient, maps) = direct_sum(&mods)?;
    let mut out = Vec::new();
    for (pd, (incl, proj)) in parts.iter().zip(&maps) {
        for s in &pd.summands {
            out.push(Summand {
                module: s.module.clone(),
                inclusion: incl.mul(&s.inclusion)?,
                projection: s.projection.mul(proj)?,
            });
        }
    }
    Ok((ambient, out))
}

/// Evaluates one candidate subset: M = A ⊕ D(A) ⊕ (pool summands); returns
/// the gldim outcome (None when the candidate is skipped for cap reasons).
fn evaluate_candidate(
    alg: &Algebra,
    base: &[PreDec],
    pool_pre: &[PreDec],
    subset: &[usize],
    cap: usize,
) -> Result<Option<(PdResult, Module)>> {
    let mut parts: Vec<&PreDec> = base.iter().collect();
    for &i in subset {
        if pool_pre[i].module.dim > 0 {
            parts.push(&pool_pre[i]);
        }
    }
    let (m, summands) = candidate_summands(&parts)?;
    if m.dim > MODULE_DIM_CAP {
        return Ok(None);
    }
    let es = match blockwise_end_from_summands(alg, &summands) {
        Ok(es) => es,
        Err(Error::CapExceeded(_)) => return Ok(None),
        Err(e) => return Err(e),
    };
    let g = crate::module::global_dimension_with(&es.algebra, &es.pdata, cap)?;
    Ok(Some((g, m)))
}

/// Searches subsets of the pool (size ≤ 3, plus the full Loewy generator
/// as a distinguished candidate) for the least gldim(End(A ⊕ D(A) ⊕ X)).
/// Unknown and infinite outcomes are skipped, never treated as finite. Ties
/// break toward smaller witness dimension, then earlier candidate order.
pub fn repdim_upper_bound(
    alg: &Algebra,
    pool: &CandidatePool,
    opts: &UpperOptions,
) -> Result<UpperResult> {
    let base = [
        predecompose(alg, regular_module(alg), opts.seed)?,
        predecompose(alg, coregular_module(alg), opts.seed)?,
    ];
    let pool_pre: Vec<PreDec> = pool
        .modules
        .iter()
        .map(|m| predecompose(alg, m.clone(), opts.seed))
        .collect::<Result<_>>()?;
    // candidate groups, evaluated group by group so the search can stop
    // early once the known floor is reached
    let mut groups: Vec<Vec<Vec<usize>>> = Vec::new();
    groups.push(vec![Vec::new()]);
    if pool.loewy.len() > 1 {
        groups.push(vec![pool.loewy.clone()]);
    }
    let n = pool.len();
    let singles: Vec<Vec<usize>> = (0..n).map(|i| vec![i]).collect();
    groups.push(singles);
    let mut pairs = Vec::new();
    let mut triples = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            pairs.push(vec![i, j]);
            for k in j + 1..n {
                triples.push(vec![i, j, k]);
            }
        }
    }
    groups.push(pairs);
    groups.push(triples);

    let mut best: Option<(usize, Module, String, Vec<usize>)> = None;
    let mut tried = 0usize;
    for group in groups {
        if group.is_empty() {
            continue;
        }
        tried += group.len();
        let outcomes = exec::map_collect(group, |subset| {
            let r = evaluate_candidate(alg, &base, &pool_pre, &subset, opts.cap_gldim);
            (subset, r)
        });
        for (subset, outcome) in outcomes {
            let Some((PdResult::Finite(g), m)) = outcome? else {
                continue;
            };
            let better = match &best {
                None => true,
                Some((bg, bm, _, _)) => g < *bg || (g == *bg && m.dim < bm.dim),
            };
            if better {
                let label = candidate_label(pool, &subset);
                best = Some((g, m, label, subset));
            }
        }
        if let (Some((bg, ..)), Some(stop)) = (&best, opts.stop_at) {
            if *bg <= stop {
                break;
            }
        }
    }
    let (bound, witness, witness_label, subset) = best.ok_or_else(|| {
        Error::Verification(
            "no candidate yielded a finite global dimension within the cap".into(),
        )
    })?;
    // re-verify the witness really is a generator-cogenerator: every
    // indecomposable summand of A and of D(A) must recur among the
    // witness summands
    let mut parts: Vec<&PreDec> = base.iter().collect();
    for &i in &subset {
        if pool_pre[i].module.dim > 0 {
            parts.push(&pool_pre[i]);
        }
    }
    let (_, wit_summands) = candidate_summands(&parts)?;
    for s in base[0].summands.iter().chain(&base[1].summands) {
        let mut found = false;
        for t in &wit_summands {
            if is_isomorphic_indec(alg, &s.module, &t.module)? {
                found = true;
                break;
            }
        }
        if !found {
            return Err(Error::Internal(
                "witness failed the generator-cogenerator re-check".into(),
            ));
        }
    }
    Ok(UpperResult { bound, witness, witness_label, candidates_tried: tried })
}

// ---------------------------------------------------------------------------
// Lower bounds and reports
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LowerProvenance {
    Semisimple,
    NoRepdimOne,
    HigmanRepInfinite,
    UserAssertion,
}

/// 0 iff semisimple; otherwise 2 (there are no algebras of repdim 1); 3
/// when a representation-infiniteness certificate is supplied (repdim ≤ 2
/// characterizes representation-finite algebras).
pub fn repdim_lower_bound(
    alg: &Algebra,
    rep_infinite: Option<LowerProvenance>,
) -> (usize, LowerProvenance) {
    if alg.is_semisimple() {
        return (0, LowerProvenance::Semisimple);
    }
    match rep_infinite {
        Some(pr @ (LowerProvenance::HigmanRepInfinite | LowerProvenance::UserAssertion)) => {
            (3, pr)
        }
        _ => (2, LowerProvenance::NoRepdimOne),
    }
}

pub struct RepdimOptions {
    pub cap_gldim: usize,
    pub seed: u64,
    /// User-supplied assertion that A is representation-infinite (raises
    /// the lower bound to 3 with provenance recorded).
    pub assert_rep_infinite: bool,
    pub extra_pool: Vec<Module>,
}

impl Default for RepdimOptions {
    fn default() -> Self {
        RepdimOptions {
            cap_gldim: 12,
            seed: 0,
            assert_rep_infinite: false,
            extra_pool: Vec::new(),
        }
    }
}

pub struct RepdimReport {
    pub algebra_dim: usize,
    pub lower: usize,
    pub lower_provenance: LowerProvenance,
    pub upper: Option<usize>,
    pub witness: Option<Module>,
    pub witness_label: Option<String>,
    pub exact: bool,
    pub self_injective: bool,
    pub loewy_length: usize,
    pub candidates_tried: usize,
}

impl RepdimReport {
    /// The exact representation dimension, when established.
    pub fn value(&self) -> Option<usize> {
        if self.exact {
            self.upper
        } else {
            None
        }
    }
}

fn repdim_report_inner(
    alg: &Algebra,
    rep_infinite: Option<LowerProvenance>,
    options: &RepdimOptions,
) -> Result<RepdimReport> {
    let cert = if options.assert_rep_infinite {
        Some(LowerProvenance::UserAssertion)
    } else {
        rep_infinite
    };
    let (lower, lower_provenance) = repdim_lower_bound(alg, cert);
    let profile = alg.profile();
    let selfinj = is_self_injective(alg)?;
    let pool = default_pool(alg, &options.extra_pool, options.seed)?;
    let upper = repdim_upper_bound(
        alg,
        &pool,
        &UpperOptions {
            cap_gldim: options.cap_gldim,
            seed: options.seed,
            stop_at: Some(lower),
        },
    );
    let (upper, witness, witness_label, tried) = match upper {
        Ok(u) => (
            Some(u.bound),
            Some(u.witness),
            Some(u.witness_label),
            u.candidates_tried,
        ),
        Err(Error::Verification(_)) => (None, None, None, 0),
        Err(e) => return Err(e),
    };
    if let Some(u) = upper {
        if u < lower {
            return Err(Error::Internal(format!(
                "upper bound {u} fell below lower bound {lower}"
            )));
        }
        // self-injective algebras satisfy repdim(A) <= LL(A); the Loewy
        // generator candidate realizes it, so the search must not exceed it
        if selfinj && u > profile.loewy_length {
            return Err(Error::Verification(format!(
                "self-injective algebra produced upper bound {u} > Loewy length {}",
                profile.loewy_length
            )));
        }
    }
    let exact = upper == Some(lower);
    Ok(RepdimReport {
        algebra_dim: alg.dim,
        lower,
        lower_provenance,
        upper,
        witness,
        witness_label,
        exact,
        self_injective: selfinj,
        loewy_length: profile.loewy_length,
        candidates_tried: tried,
    })
}

/// Repdim report for a bare algebra (no representation-type oracle beyond
/// a user assertion).
pub fn repdim_report(alg: &Algebra, options: &RepdimOptions) -> Result<RepdimReport> {
    repdim_report_inner(alg, None, options)
}

/// Repdim report for a group algebra k[G]: Higman's criterion supplies the
/// representation-infiniteness certificate when the Sylow p-subgroup is
/// non-cyclic.
pub fn repdim_report_for_group(
    g: &FiniteGroup,
    p: u32,
    options: &RepdimOptions,
) -> Result<RepdimReport> {
    let alg = crate::group::group_algebra(g, p)?;
    let rt = higman_rep_type(g, p)?;
    let cert = match rt.verdict {
        RepType::Infinite => Some(LowerProvenance::HigmanRepInfinite),
        RepType::Finite => None,
    };
    repdim_report_inner(&alg, cert, options)
}

// ---------------------------------------------------------------------------
// Approximation cross-check (Auslander chains)
// ---------------------------------------------------------------------------

/// Cross-checks the witness: when gldim(End(M)) = m, every module Y admits
/// an exact chain 0 -> M_{m-2} -> ... -> M_0 -> Y -> 0 of right-add(M)-
/// approximations that stays exact under Hom(M, -). The chain is built
/// greedily (cover by M^{dim Hom(M,Y)} via evaluation, iterate on kernels);
/// Hom-exactness is verified by dimension counts at every step. Returns the
/// dimensions of the chain modules; any failure falsifies the computed
/// gldim and surfaces as an error with the counterexample stage.
/// X ∈ add(M) iff id_X lies in the span of the composites f ∘ g with
/// f: M -> X and g: X -> M ranging over Hom bases (trace-ideal criterion).
/// Sound in both directions and never decomposes X, so it stays cheap for
/// the large kernels arising in approximation chains.
fn in_add_by_trace(alg: &Algebra, x: &Module, m: &Module) -> Result<bool> {
    if x.dim == 0 {
        return Ok(true);
    }
    let p = alg.p;
    let fs = hom_space(alg, m, x)?;
    let gs = hom_space(alg, x, m)?;
    if fs.is_empty() || gs.is_empty() {
        return Ok(false);
    }
    let flatten = |f: &Matrix| -> Vec<Fp> {
        (0..x.dim).flat_map(|r| f.row(r).to_vec()).collect()
    };
    let mut vecs = Vec::with_capacity(fs.len() * gs.len());
    for f in &fs {
        for g in &gs {
            vecs.push(flatten(&f.mul(g)?));
        }
    }
    let span = Subspace::from_spanning(x.dim * x.dim, p, &vecs);
    Ok(span.contains(&flatten(&Matrix::identity(x.dim, p))))
}

pub fn approximation_crosscheck(
    alg: &Algebra,
    m: &Module,
    y: &Module,
    bound: usize,
) -> Result<Vec<usize>> {
    if bound < 2 {
        return Err(Error::Invalid("approximation chains need m >= 2".into()));
    }
    let p = alg.p;
    // build covers from indecomposable summands of M rather than whole
    // copies of M: the chain stays within add(M) either way, but summand
    // covers keep the kernels small enough to iterate on
    let parts = decompose(alg, m, 0)?.summands;
    let mut hom_m_u: Vec<Vec<Matrix>> = Vec::with_capacity(parts.len());
    for part in &parts {
        hom_m_u.push(hom_space(alg, m, &part.module)?);
    }
    let mut chain_dims = Vec::new();
    let mut cur = y.clone();
    for step in 0..=bound - 2 {
        if cur.dim == 0 || in_add_by_trace(alg, &cur, m)? {
            return Ok(chain_dims);
        }
        if step == bound - 2 {
            return Err(Error::Verification(format!(
                "approximation chain for Y (dim {}) did not terminate within {} steps: \
                 kernel of dimension {} is not in add(M)",
                y.dim,
                bound - 2,
                cur.dim
            )));
        }
        let homs = hom_space(alg, m, &cur)?;
        let h = homs.len();
        if h == 0 {
            return Err(Error::Verification(format!(
                "no maps M -> Y at stage {step} although Y is nonzero"
            )));
        }
        // pick summand maps g: U_i -> cur until the composites g ∘ Hom(M, U_i)
        // span all of Hom(M, cur); the resulting cover ⊕ U_i -> cur is then a
        // right-add(M)-approximation built from as few small pieces as the
        // greedy scan allows
        let flatten = |f: &Matrix| -> Vec<Fp> {
            (0..cur.dim).flat_map(|r| f.row(r).to_vec()).collect()
        };
        let mut span = Subspace::zero(cur.dim * m.dim, p);
        let mut chosen: Vec<(usize, Matrix)> = Vec::new();
        'scan: for (i, part) in parts.iter().enumerate() {
            for g in hom_space(alg, &part.module, &cur)? {
                let composites: Vec<Vec<Fp>> = hom_m_u[i]
                    .iter()
                    .map(|f| g.mul(f).map(|gf| flatten(&gf)))
                    .collect::<Result<_>>()?;
                if composites.iter().all(|v| span.contains(v)) {
                    continue;
                }
                let mut vecs = span.basis.clone();
                vecs.extend(composites);
                span = Subspace::from_spanning(cur.dim * m.dim, p, &vecs);
                chosen.push((i, g));
                if span.basis.len() == h {
                    break 'scan;
                }
            }
        }
        if span.basis.len() != h {
            return Err(Error::Internal(format!(
                "summand composites span only {} of {} maps M -> stage-{step} module",
                span.basis.len(),
                h
            )));
        }
        // evaluation ⊕ U_i -> cur, horizontally stacked summand maps
        let cover_parts: Vec<&Module> = chosen.iter().map(|(i, _)| &parts[*i].module).collect();
        let (cover, _) = direct_sum(&cover_parts)?;
        let mut ev = Matrix::zero(cur.dim, cover.dim, p);
        let mut off = 0;
        for (i, g) in &chosen {
            let d = parts[*i].module.dim;
            for r in 0..cur.dim {
                for c in 0..d {
                    ev.set(r, off + c, g.get(r, c));
                }
            }
            off += d;
        }
        if ev.rank() != cur.dim {
            return Err(Error::Verification(format!(
                "evaluation cover -> stage-{step} module is not surjective"
            )));
        }
        let (ker, _) = kernel_submodule(&cover, &ev)?;
        // Hom-exactness by dimension count: the approximation property
        // makes Hom(M, cover) -> Hom(M, cur) surjective, so exactness of
        // 0 -> Hom(M,K) -> Hom(M,cover) -> Hom(M,cur) -> 0 is a dim count
        let hom_cover: usize = chosen.iter().map(|(i, _)| hom_m_u[*i].len()).sum();
        let hom_k = hom_space(alg, m, &ker)?.len();
        if hom_cover != hom_k + h {
            return Err(Error::Verification(format!(
                "Hom(M,-) fails exactness at stage {step}: {hom_cover} vs {hom_k} + {h}"
            )));
        }
        chain_dims.push(cover.dim);
        cur = ker;
    }
    unreachable!("loop always returns");
}

// ---------------------------------------------------------------------------
// Group corollary verification
// ---------------------------------------------------------------------------

pub enum CorollaryOutcome {
    /// p divides [G:H]; the corollary's hypothesis fails.
    NotApplicable { index: usize },
    Checked {
        /// Some(equal) when both reports are exact.
        equality: Option<bool>,
        /// repdim(k[G]) ≤ |H| (exact case only).
        within_subgroup_order: Option<bool>,
        /// interval consistency when at least one report is inexact
        consistent: bool,
    },
}

pub struct CorollaryReport {
    pub outcome: CorollaryOutcome,
    pub report_g: Option<RepdimReport>,
    pub report_h: Option<RepdimReport>,
}

/// Verifies repdim(k[G]) = repdim(k[H]) ≤ |H| on an instance, requiring
/// [G:H] invertible mod p. With inexact reports only interval consistency
/// (lower of one ≤ upper of the other) is asserted.
pub fn verify_group_corollary(
    g: &FiniteGroup,
    h: &Subgroup,
    p: u32,
    options: &RepdimOptions,
) -> Result<CorollaryReport> {
    let index = g.order / h.elements.len();
    if index % p as usize == 0 {
        return Ok(CorollaryReport {
            outcome: CorollaryOutcome::NotApplicable { index },
            report_g: None,
            report_h: None,
        });
    }
    let rg = repdim_report_for_group(g, p, options)?;
    // H as a standalone group
    let hm = h.elements.len();
    let pos = |x: usize| h.elements.binary_search(&x).expect("subgroup");
    let mut t = vec![0usize; hm * hm];
    for (i, &x) in h.elements.iter().enumerate() {
        for (j, &y) in h.elements.iter().enumerate() {
            t[i * hm + j] = pos(g.op(x, y));
        }
    }
    let hg = FiniteGroup::from_table(t, None)?;
    let rh = repdim_report_for_group(&hg, p, options)?;
    let outcome = if rg.exact && rh.exact {
        let vg = rg.value().unwrap();
        let vh = rh.value().unwrap();
        CorollaryOutcome::Checked {
            equality: Some(vg == vh),
            within_subgroup_order: Some(vg <= hm),
            consistent: vg == vh && vg <= hm,
        }
    } else {
        let lg_ok = rh.upper.map_or(true, |uh| rg.lower <= uh);
        let lh_ok = rg.upper.map_or(true, |ug| rh.lower <= ug);
        CorollaryOutcome::Checked {
            equality: None,
            within_subgroup_order: None,
            consistent: lg_ok && lh_ok,
        }
    };
    Ok(CorollaryReport { outcome, report_g: Some(rg), report_h: Some(rh) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{alt4, cyclic, group_algebra, klein4, sym};
    use crate::module::end_algebra;

    fn kc2() -> Algebra {
        group_algebra(&cyclic(2).unwrap(), 2).unwrap()
    }

    #[test]
    fn gen_cogen_examples() {
        let a = kc2();
        let reg = regular_module(&a);
        let coreg = coregular_module(&a);
        let (m, _) = direct_sum(&[&reg, &coreg]).unwrap();
        assert!(generator_cogenerator_check(&a, &m).unwrap());
        // trivial module alone is neither
        let k = Module::from_action_unchecked(
            2,
            1,
            vec![Matrix::identity(1, 2); 2],
        );
        assert!(!generator_cogenerator_check(&a, &k).unwrap());
        // regular over semisimple suffices
        let s = group_algebra(&sym(3).unwrap(), 5).unwrap();
        assert!(generator_cogenerator_check(&s, &regular_module(&s)).unwrap());
    }

    #[test]
    fn self_injectivity_examples() {
        assert!(is_self_injective(&kc2()).unwrap());
        let v4 = group_algebra(&klein4().unwrap(), 2).unwrap();
        assert!(is_self_injective(&v4).unwrap());
        let s = group_algebra(&sym(3).unwrap(), 5).unwrap();
        assert!(is_self_injective(&s).unwrap());
        // End(A + k) over k[C2]/GF(2) has gldim 2, hence not self-injective
        let a = kc2();
        let k = Module::from_action_unchecked(2, 1, vec![Matrix::identity(1, 2); 2]);
        let (m, _) = direct_sum(&[&regular_module(&a), &k]).unwrap();
        let (e, _) = end_algebra(&a, &m).unwrap();
        assert!(!is_self_injective(&e).unwrap());
    }

    #[test]
    fn blockwise_end_matches_direct_construction() {
        let a = kc2();
        let k = Module::from_action_unchecked(2, 1, vec![Matrix::identity(1, 2); 2]);
        let (m, _) = direct_sum(&[&regular_module(&a), &k]).unwrap();
        let es = blockwise_end(&a, &m, 0).unwrap();
        let (direct, _) = end_algebra(&a, &m).unwrap();
        assert_eq!(es.algebra.dim, 5);
        assert_eq!(direct.dim, 5);
        // same radical dimension and same gldim
        assert_eq!(es.pdata.rad.dim(), direct.radical().dim());
        assert_eq!(
            gldim_of_end(&a, &m, 12, 0).unwrap(),
            crate::module::global_dimension(&direct, 12, 0).unwrap()
        );
        assert_eq!(gldim_of_end(&a, &m, 12, 0).unwrap(), PdResult::Finite(2));
    }

    #[test]
    fn default_pool_contents() {
        // semisimple: pool reduces to {zero, simples, A} modulo iso
        let s = group_algebra(&sym(3).unwrap(), 5).unwrap();
        let pool = default_pool(&s, &[], 0).unwrap();
        assert!(pool.labels.iter().any(|l| l == "zero"));
        assert!(pool.labels.iter().any(|l| l.starts_with("simple")));
        // k[C2]/GF(2): contains k = A/rad (merged with simple0)
        let pool2 = default_pool(&kc2(), &[], 0).unwrap();
        assert!(pool2.modules.iter().any(|m| m.dim == 1));
        // k[V4]/GF(2): contains A/rad (dim 1) and A/rad^2 (dim 3)
        let v4 = group_algebra(&klein4().unwrap(), 2).unwrap();
        let pool3 = default_pool(&v4, &[], 0).unwrap();
        let dims: Vec<usize> = pool3.loewy.iter().map(|&i| pool3.modules[i].dim).collect();
        assert!(dims.contains(&1));
        assert!(dims.contains(&3));
        assert!(dims.contains(&4));
    }

    #[test]
    fn upper_bound_semisimple_is_zero() {
        let s = group_algebra(&sym(3).unwrap(), 5).unwrap();
        let pool = default_pool(&s, &[], 0).unwrap();
        let u = repdim_upper_bound(
            &s,
            &pool,
            &UpperOptions { stop_at: Some(0), ..Default::default() },
        )
        .unwrap();
        assert_eq!(u.bound, 0);
    }

    #[test]
    fn upper_bound_kc2_is_two() {
        let a = kc2();
        let pool = default_pool(&a, &[], 0).unwrap();
        let u = repdim_upper_bound(
            &a,
            &pool,
            &UpperOptions { stop_at: Some(2), ..Default::default() },
        )
        .unwrap();
        assert_eq!(u.bound, 2);
    }

    #[test]
    fn report_kc4_exact_two() {
        // LL = 4 but the search still finds 2
        let r = repdim_report_for_group(&cyclic(4).unwrap(), 2, &Default::default())
            .unwrap();
        assert_eq!(r.lower, 2);
        assert_eq!(r.upper, Some(2));
        assert!(r.exact);
        assert_eq!(r.loewy_length, 4);
    }

    #[test]
    fn report_klein_exact_three() {
        let r = repdim_report_for_group(&klein4().unwrap(), 2, &Default::default())
            .unwrap();
        assert_eq!(r.lower, 3);
        assert_eq!(r.lower_provenance, LowerProvenance::HigmanRepInfinite);
        assert_eq!(r.upper, Some(3));
        assert!(r.exact);
        assert!(r.self_injective);
    }

    #[test]
    fn report_semisimple_exact_zero() {
        let r = repdim_report_for_group(&sym(3).unwrap(), 5, &Default::default())
            .unwrap();
        assert_eq!(r.value(), Some(0));
        assert_eq!(r.lower_provenance, LowerProvenance::Semisimple);
    }

    #[test]
    fn report_alt4_exact_three() {
        let r = repdim_report_for_group(&alt4().unwrap(), 2, &Default::default())
            .unwrap();
        assert_eq!(r.value(), Some(3));
    }

    #[test]
    fn approximation_chain_kc2() {
        let a = kc2();
        let k = Module::from_action_unchecked(2, 1, vec![Matrix::identity(1, 2); 2]);
        let (m, _) = direct_sum(&[&regular_module(&a), &k]).unwrap();
        // m = 2: every module must lie in add(M) directly
        let (y, _) = direct_sum(&[&regular_module(&a), &k, &k]).unwrap();
        assert_eq!(approximation_crosscheck(&a, &m, &y, 2).unwrap(), Vec::<usize>::new());
    }

    #[test]
    fn approximation_chain_klein() {
        let a = group_algebra(&klein4().unwrap(), 2).unwrap();
        let r = repdim_report_for_group(&klein4().unwrap(), 2, &Default::default())
            .unwrap();
        let m = r.witness.unwrap();
        // Y = a syzygy module not in add(M): chain of length <= 1
        let pool = default_pool(&a, &[], 0).unwrap();
        for y in &pool.modules {
            if y.dim == 0 {
                continue;
            }
            let dims = approximation_crosscheck(&a, &m, y, 3).unwrap();
            assert!(dims.len() <= 1);
        }
    }

    #[test]
    fn corollary_a4_v4() {
        let a4 = alt4().unwrap();
        let v = crate::group::sylow_subgroup(&a4, 2).unwrap();
        let rep = verify_group_corollary(&a4, &v, 2, &Default::default()).unwrap();
        match rep.outcome {
            CorollaryOutcome::Checked { equality, within_subgroup_order, consistent } => {
                assert_eq!(equality, Some(true));
                assert_eq!(within_subgroup_order, Some(true));
                assert!(consistent);
            }
            CorollaryOutcome::NotApplicable { .. } => panic!("index 3 invertible"),
        }
        assert_eq!(rep.report_g.unwrap().value(), Some(3));
    }

    #[test]
    fn corollary_s3_c3() {
        let g = sym(3).unwrap();
        let three = g.find_perm(&[1, 2, 0]).unwrap();
        let c3 = subgroup(&g, three);
        // p = 3: index 2 invertible, both repdims 2
        let rep = verify_group_corollary(&g, &c3, 3, &Default::default()).unwrap();
        match rep.outcome {
            CorollaryOutcome::Checked { equality, .. } => assert_eq!(equality, Some(true)),
            _ => panic!("applicable"),
        }
        assert_eq!(rep.report_g.unwrap().value(), Some(2));
        // p = 2: [S3 : C3] = 2 = 0 mod 2, hypothesis fails
        let rep2 = verify_group_corollary(&g, &c3, 2, &Default::default()).unwrap();
        assert!(matches!(
            rep2.outcome,
            CorollaryOutcome::NotApplicable { index: 2 }
        ));
    }

    fn subgroup(g: &FiniteGroup, gen: usize) -> Subgroup {
        crate::group::subgroup_generated(g, &[gen]).unwrap()
    }

    #[test]
    fn tensor_bound_consistency() {
        // repdim(k[C2] (x) k[C2]) = repdim(k[V4]) = 3 <= 2 + 2
        let a = kc2();
        let t = a.tensor_product(&a).unwrap();
        let opts = RepdimOptions { assert_rep_infinite: true, ..Default::default() };
        let rt = repdim_report(&t, &opts).unwrap();
        assert_eq!(rt.value(), Some(3));
        let ra = repdim_report(&a, &Default::default()).unwrap();
        assert_eq!(ra.value(), Some(2));
        assert!(rt.value().unwrap() <= 2 * ra.value().unwrap());
    }
}
