//! Finite groups as Cayley tables: construction from permutation
//! generators, subgroup machinery (normalizers, Sylow subgroups, cosets,
//! double cosets), group algebras, the canonical Frobenius system of a
//! group extension, and Higman's representation-type criterion.

use std::collections::BTreeSet;

use crate::algebra::Algebra;
use crate::ext::{
    invert_scalar, make_extension, separability_cert_from_pairs, Extension,
    FrobeniusSystem, SeparabilityCert,
};
use crate::linalg::{Fp, Matrix};
use crate::{Error, Result};

/// Largest group order accepted by the closure routine (|S_7|).
pub const GROUP_ORDER_CAP: usize = 5040;

/// A finite group given by its Cayley table; the identity has index 0.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    pub order: usize,
    /// table[i * order + j] = index of the product (element i) * (element j)
    pub table: Vec<usize>,
    pub labels: Vec<String>,
    /// underlying permutations when built from generators (else empty)
    pub perms: Vec<Vec<usize>>,
}

/// A subgroup, stored as a sorted list of element indices of the parent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    pub elements: Vec<usize>,
}

impl FiniteGroup {
    /// Builds a group from an explicit table, verifying the group axioms.
    pub fn from_table(table: Vec<usize>, labels: Option<Vec<String>>) -> Result<Self> {
        let m2 = table.len();
        let m = (m2 as f64).sqrt().round() as usize;
        if m * m != m2 || m == 0 {
            return Err(Error::Invalid("table is not square".into()));
        }
        if table.iter().any(|&x| x >= m) {
            return Err(Error::Invalid("table entry out of range".into()));
        }
        let g = FiniteGroup {
            order: m,
            table,
            labels: labels.unwrap_or_else(|| (0..m).map(|i| format!("g{i}")).collect()),
            perms: Vec::new(),
        };
        if g.labels.len() != m {
            return Err(Error::Invalid("label count mismatch".into()));
        }
        for i in 0..m {
            if g.op(0, i) != i || g.op(i, 0) != i {
                return Err(Error::Invalid("index 0 is not an identity".into()));
            }
            let mut seen_row = vec![false; m];
            let mut seen_col = vec![false; m];
            for j in 0..m {
                seen_row[g.op(i, j)] = true;
                seen_col[g.op(j, i)] = true;
            }
            if seen_row.contains(&false) || seen_col.contains(&false) {
                return Err(Error::Invalid(format!(
                    "row/column {i} is not a permutation"
                )));
            }
        }
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    if g.op(g.op(i, j), k) != g.op(i, g.op(j, k)) {
                        return Err(Error::Invalid(format!(
                            "associativity fails at ({i}, {j}, {k})"
                        )));
                    }
                }
            }
        }
        Ok(g)
    }

    #[inline]
    pub fn op(&self, i: usize, j: usize) -> usize {
        self.table[i * self.order + j]
    }

    pub fn inverse(&self, i: usize) -> usize {
        (0..self.order).find(|&j| self.op(i, j) == 0).expect("group")
    }

    pub fn element_order(&self, i: usize) -> usize {
        let mut x = i;
        let mut o = 1;
        while x != 0 {
            x = self.op(x, i);
            o += 1;
        }
        o
    }

    /// Index of a permutation among the stored element permutations.
    pub fn find_perm(&self, perm: &[usize]) -> Option<usize> {
        self.perms.iter().position(|q| q == perm)
    }

    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.op(self.op(g, x), self.inverse(g))
    }
}

/// Parses permutations in cycle notation, e.g. "(1 2 3)(4 5)", with points
/// numbered from 1 up to `n`.
pub fn parse_cycles(text: &str, n: usize) -> Result<Vec<usize>> {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut rest = text.trim();
    if rest.is_empty() || rest == "()" || rest == "e" {
        return Ok(perm);
    }
    while !rest.is_empty() {
        let Some(open) = rest.find('(') else {
            return Err(Error::Parse(format!("expected '(' in {text:?}")));
        };
        if !rest[..open].trim().is_empty() {
            return Err(Error::Parse(format!("stray text in {text:?}")));
        }
        let Some(close) = rest.find(')') else {
            return Err(Error::Parse(format!("unbalanced '(' in {text:?}")));
        };
        let body = &rest[open + 1..close];
        let pts: Vec<usize> = body
            .split(|c: char| c == ' ' || c == ',')
            .filter(|s| !s.is_empty())
            .map(|s| {
                s.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad point {s:?}")))
            })
            .collect::<Result<_>>()?;
        for &q in &pts {
            if q == 0 || q > n {
                return Err(Error::Parse(format!("point {q} out of range 1..={n}")));
            }
        }
        let mut seen = BTreeSet::new();
        for &q in &pts {
            if !seen.insert(q) {
                return Err(Error::Parse(format!("repeated point {q}")));
            }
        }
        // apply the cycle on top of what we have: new = cycle . old
        let mut cyc: Vec<usize> = (0..n).collect();
        for w in 0..pts.len() {
            cyc[pts[w] - 1] = pts[(w + 1) % pts.len()] - 1;
        }
        perm = perm.iter().map(|&x| cyc[x]).collect();
        rest = rest[close + 1..].trim_start();
    }
    Ok(perm)
}

/// Renders a permutation in cycle notation (identity renders as "()").
pub fn cycle_label(perm: &[usize]) -> String {
    let n = perm.len();
    let mut seen = vec![false; n];
    let mut out = String::new();
    for s in 0..n {
        if seen[s] || perm[s] == s {
            seen[s] = true;
            continue;
        }
        out.push('(');
        let mut x = s;
        loop {
            seen[x] = true;
            out.push_str(&(x + 1).to_string());
            x = perm[x];
            if x == s {
                break;
            }
            out.push(' ');
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    // (a . b)(x) = a(b(x))
    b.iter().map(|&x| a[x]).collect()
}

/// Closes a set of permutations of {1..n} into a group; elements are sorted
/// lexicographically, which puts the identity at index 0.
pub fn group_from_generators(perms: &[Vec<usize>]) -> Result<FiniteGroup> {
    let n = perms
        .first()
        .map(|p| p.len())
        .ok_or_else(|| Error::Invalid("no generators".into()))?;
    for p in perms {
        if p.len() != n {
            return Err(Error::DimensionMismatch("mixed permutation degrees".into()));
        }
        let mut seen = vec![false; n];
        for &x in p {
            if x >= n || seen[x] {
                return Err(Error::Invalid("not a permutation".into()));
            }
            seen[x] = true;
        }
    }
    let identity: Vec<usize> = (0..n).collect();
    let mut elems: BTreeSet<Vec<usize>> = BTreeSet::new();
    elems.insert(identity);
    let mut frontier: Vec<Vec<usize>> = vec![(0..n).collect()];
    while let Some(x) = frontier.pop() {
        for g in perms {
            let y = compose(g, &x);
            if elems.insert(y.clone()) {
                if elems.len() > GROUP_ORDER_CAP {
                    return Err(Error::CapExceeded(format!(
                        "group order exceeds {GROUP_ORDER_CAP}"
                    )));
                }
                frontier.push(y);
            }
        }
    }
    let elems: Vec<Vec<usize>> = elems.into_iter().collect();
    let m = elems.len();
    let index_of = |q: &Vec<usize>| elems.binary_search(q).expect("closed");
    let mut table = vec![0usize; m * m];
    for i in 0..m {
        for j in 0..m {
            table[i * m + j] = index_of(&compose(&elems[i], &elems[j]));
        }
    }
    let labels = elems.iter().map(|p| cycle_label(p)).collect();
    let mut g = FiniteGroup::from_table(table, Some(labels))?;
    g.perms = elems;
    Ok(g)
}

// ---------------------------------------------------------------------------
// Subgroups
// ---------------------------------------------------------------------------

/// Closure of a set of element indices.
pub fn subgroup_generated(g: &FiniteGroup, gens: &[usize]) -> Result<Subgroup> {
    for &x in gens {
        if x >= g.order {
            return Err(Error::Invalid(format!("element {x} out of range")));
        }
    }
    let mut elems: BTreeSet<usize> = BTreeSet::new();
    elems.insert(0);
    let mut frontier = vec![0usize];
    while let Some(x) = frontier.pop() {
        for &s in gens {
            let y = g.op(x, s);
            if elems.insert(y) {
                frontier.push(y);
            }
        }
    }
    Ok(Subgroup { elements: elems.into_iter().collect() })
}

pub fn index(g: &FiniteGroup, h: &Subgroup) -> usize {
    g.order / h.elements.len()
}

pub fn is_normal(g: &FiniteGroup, h: &Subgroup) -> bool {
    let set: BTreeSet<usize> = h.elements.iter().copied().collect();
    (0..g.order).all(|x| h.elements.iter().all(|&y| set.contains(&g.conjugate(x, y))))
}

/// N_G(H) = { g : g H g^{-1} = H }.
pub fn normalizer(g: &FiniteGroup, h: &Subgroup) -> Subgroup {
    let set: BTreeSet<usize> = h.elements.iter().copied().collect();
    let elems = (0..g.order)
        .filter(|&x| h.elements.iter().all(|&y| set.contains(&g.conjugate(x, y))))
        .collect();
    Subgroup { elements: elems }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChainStatus {
    ReachedNormal,
    StabilizedNonNormal,
}

/// The ascending chain H, N_G(H), N_G(N_G(H)), ... with its termination
/// status: either some term is normal in G, or the chain stabilizes at a
/// proper self-normalizing subgroup.
pub fn normalizer_chain(g: &FiniteGroup, h: &Subgroup) -> (Vec<Subgroup>, ChainStatus) {
    let mut chain = vec![h.clone()];
    loop {
        let last = chain.last().unwrap();
        if is_normal(g, last) {
            return (chain, ChainStatus::ReachedNormal);
        }
        let next = normalizer(g, last);
        if next.elements.len() == last.elements.len() {
            return (chain, ChainStatus::StabilizedNonNormal);
        }
        chain.push(next);
    }
}

/// A Sylow p-subgroup, grown by repeatedly adjoining p-elements of the
/// normalizer: while |P| is short of the p-part of |G|, N_G(P)/P has order
/// divisible by p and contributes a p-element outside P.
pub fn sylow_subgroup(g: &FiniteGroup, p: u32) -> Result<Subgroup> {
    let p = p as usize;
    let mut p_part = 1usize;
    let mut m = g.order;
    while m % p == 0 {
        m /= p;
        p_part *= p;
    }
    let mut sub = Subgroup { elements: vec![0] };
    while sub.elements.len() < p_part {
        let norm = normalizer(g, &sub);
        let set: BTreeSet<usize> = sub.elements.iter().copied().collect();
        let mut grown = false;
        for &x in &norm.elements {
            if set.contains(&x) {
                continue;
            }
            // strip the prime-to-p part of x to get a p-element
            let mut o = g.element_order(x);
            while o % p == 0 {
                o /= p;
            }
            let mut y = 0usize;
            for _ in 0..o {
                y = g.op(y, x);
            }
            if y != 0 && !set.contains(&y) {
                let mut gens = sub.elements.clone();
                gens.push(y);
                sub = subgroup_generated(g, &gens)?;
                grown = true;
                break;
            }
        }
        if !grown {
            return Err(Error::Internal("sylow growth stalled".into()));
        }
    }
    Ok(sub)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CosetSide {
    Left,
    Right,
}

/// Coset representatives, one per coset, each the minimal element index of
/// its coset; the identity coset comes first.
pub fn cosets(g: &FiniteGroup, h: &Subgroup, side: CosetSide) -> Vec<usize> {
    let mut assigned = vec![false; g.order];
    let mut reps = Vec::new();
    for x in 0..g.order {
        if assigned[x] {
            continue;
        }
        reps.push(x);
        for &y in &h.elements {
            let z = match side {
                CosetSide::Left => g.op(x, y),
                CosetSide::Right => g.op(y, x),
            };
            assigned[z] = true;
        }
    }
    reps
}

/// Double cosets H x H as sorted element sets, ordered by minimal element.
pub fn double_cosets(g: &FiniteGroup, h: &Subgroup) -> Vec<Vec<usize>> {
    let mut assigned = vec![false; g.order];
    let mut out = Vec::new();
    for x in 0..g.order {
        if assigned[x] {
            continue;
        }
        let mut set = BTreeSet::new();
        for &a in &h.elements {
            let ax = g.op(a, x);
            for &b in &h.elements {
                set.insert(g.op(ax, b));
            }
        }
        for &z in &set {
            assigned[z] = true;
        }
        out.push(set.into_iter().collect());
    }
    out
}

// ---------------------------------------------------------------------------
// Group algebras and group extensions
// ---------------------------------------------------------------------------

/// The group algebra k[G] over GF(p), basis indexed by group elements.
pub fn group_algebra(g: &FiniteGroup, p: u32) -> Result<Algebra> {
    let m = g.order;
    let mut table = vec![vec![0u32; m]; m * m];
    for i in 0..m {
        for j in 0..m {
            table[i * m + j][g.op(i, j)] = 1;
        }
    }
    let mut unit = vec![0u32; m];
    unit[0] = 1;
    Algebra::from_parts(p, m, table, unit, Some(g.labels.clone()))
}

/// A group extension k[H] ⊆ k[G] with its canonical Frobenius system and,
/// when the index is invertible mod p, the canonical Casimir element.
pub struct GroupExtension {
    pub ext: Extension,
    pub system: FrobeniusSystem,
    pub casimir: Option<SeparabilityCert>,
    pub coset_reps: Vec<usize>,
}

/// Builds k[H] ⊆ k[G]: embedding on the element basis, Frobenius
/// homomorphism E = projection onto the H-coordinates, pairs (g_i, g_i^-1)
/// over minimal left-coset representatives. The system is verified before
/// being returned; the Casimir (when [G:H] is invertible) is verified too.
pub fn group_extension(g: &FiniteGroup, h: &Subgroup, p: u32) -> Result<GroupExtension> {
    let a = group_algebra(g, p)?;
    let hg = FiniteGroup::from_table(
        {
            let hm = h.elements.len();
            let pos = |x: usize| h.elements.binary_search(&x).expect("subgroup");
            let mut t = vec![0usize; hm * hm];
            for (i, &x) in h.elements.iter().enumerate() {
                for (j, &y) in h.elements.iter().enumerate() {
                    t[i * hm + j] = pos(g.op(x, y));
                }
            }
            t
        },
        Some(h.elements.iter().map(|&x| g.labels[x].clone()).collect()),
    )?;
    let b = group_algebra(&hg, p)?;
    let mut embed = Matrix::zero(g.order, h.elements.len(), p);
    for (j, &x) in h.elements.iter().enumerate() {
        embed.set(x, j, 1);
    }
    let ext = make_extension(&b, &a, embed)?;
    // E: projection onto the H-coordinates
    let mut e_map = Matrix::zero(h.elements.len(), g.order, p);
    for (j, &x) in h.elements.iter().enumerate() {
        e_map.set(j, x, 1);
    }
    let reps = cosets(g, h, CosetSide::Left);
    let mut xs = Vec::with_capacity(reps.len());
    let mut ys = Vec::with_capacity(reps.len());
    let mut pairs = Vec::with_capacity(reps.len());
    for &r in &reps {
        let mut x = vec![0u32; g.order];
        x[r] = 1;
        let mut y = vec![0u32; g.order];
        y[g.inverse(r)] = 1;
        pairs.push((x.clone(), y.clone()));
        xs.push(x);
        ys.push(y);
    }
    let system = FrobeniusSystem { e_map, xs, ys };
    if let Err(msg) = crate::ext::verify_frobenius_system(&ext, &system) {
        return Err(Error::Internal(format!(
            "canonical group Frobenius system failed: {msg}"
        )));
    }
    let casimir = match invert_scalar((reps.len() % p as usize) as Fp, p) {
        Some(inv) => {
            let cert = separability_cert_from_pairs(&ext, inv, &pairs)?
                .ok_or_else(|| {
                    Error::Internal("canonical Casimir failed verification".into())
                })?;
            Some(cert)
        }
        None => None,
    };
    Ok(GroupExtension { ext, system, casimir, coset_reps: reps })
}

// ---------------------------------------------------------------------------
// Higman's criterion
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RepType {
    Finite,
    Infinite,
}

/// Higman: k[G] in characteristic p is representation-finite iff the Sylow
/// p-subgroups are cyclic. Cyclicity is tested by maximal element order.
pub struct RepTypeReport {
    pub verdict: RepType,
    pub sylow: Subgroup,
    pub sylow_cyclic: bool,
}

pub fn higman_rep_type(g: &FiniteGroup, p: u32) -> Result<RepTypeReport> {
    let sylow = sylow_subgroup(g, p)?;
    let cyclic = sylow
        .elements
        .iter()
        .any(|&x| g.element_order(x) == sylow.elements.len());
    Ok(RepTypeReport {
        verdict: if cyclic { RepType::Finite } else { RepType::Infinite },
        sylow,
        sylow_cyclic: cyclic,
    })
}

// ---------------------------------------------------------------------------
// Gallery
// ---------------------------------------------------------------------------

pub fn cyclic(n: usize) -> Result<FiniteGroup> {
    let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    group_from_generators(&[cycle])
}

pub fn klein4() -> Result<FiniteGroup> {
    group_from_generators(&[
        parse_cycles("(1 2)(3 4)", 4)?,
        parse_cycles("(1 3)(2 4)", 4)?,
    ])
}

pub fn dihedral(n: usize) -> Result<FiniteGroup> {
    let rot: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    let refl: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
    group_from_generators(&[rot, refl])
}

pub fn sym(n: usize) -> Result<FiniteGroup> {
    if n < 2 {
        return group_from_generators(&[vec![0]]);
    }
    let mut swap: Vec<usize> = (0..n).collect();
    swap.swap(0, 1);
    let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    group_from_generators(&[swap, cycle])
}

pub fn alt4() -> Result<FiniteGroup> {
    group_from_generators(&[parse_cycles("(1 2 3)", 4)?, parse_cycles("(2 3 4)", 4)?])
}

/// Direct product on pair indices (i, j) -> i * |G2| + j.
pub fn direct_product(g1: &FiniteGroup, g2: &FiniteGroup) -> Result<FiniteGroup> {
    let (m1, m2) = (g1.order, g2.order);
    if m1 * m2 > GROUP_ORDER_CAP {
        return Err(Error::CapExceeded("product order exceeds cap".into()));
    }
    let m = m1 * m2;
    let mut table = vec![0usize; m * m];
    for i1 in 0..m1 {
        for j1 in 0..m2 {
            for i2 in 0..m1 {
                for j2 in 0..m2 {
                    table[(i1 * m2 + j1) * m + (i2 * m2 + j2)] =
                        g1.op(i1, i2) * m2 + g2.op(j1, j2);
                }
            }
        }
    }
    let labels = (0..m1)
        .flat_map(|i| {
            let g2l = &g2.labels;
            let l1 = g1.labels[i].clone();
            g2l.iter()
                .map(move |l2| format!("({l1},{l2})"))
                .collect::<Vec<_>>()
        })
        .collect();
    FiniteGroup::from_table(table, Some(labels))
}
