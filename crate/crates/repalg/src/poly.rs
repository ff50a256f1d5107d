//! Univariate polynomials over GF(p) with Berlekamp factorization.
//!
//! Factorization is used to split semisimple endomorphism quotients along
//! minimal polynomials of intertwiners, so determinism matters: the Berlekamp
//! splitting always scans subalgebra basis vectors and root candidates in a
//! fixed order.

use crate::linalg::{fp_add, fp_inv, fp_mul, fp_neg, Fp, Matrix};
use crate::{Error, Result};

/// Coefficients low-to-high; the leading coefficient is nonzero unless the
/// polynomial is zero (empty coefficient list).
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    pub p: u32,
    pub coeffs: Vec<Fp>,
}

impl std::fmt::Debug for Poly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| match i {
                0 => format!("{c}"),
                1 if c == 1 => "x".into(),
                1 => format!("{c}x"),
                _ if c == 1 => format!("x^{i}"),
                _ => format!("{c}x^{i}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl Poly {
    pub fn new(p: u32, mut coeffs: Vec<Fp>) -> Self {
        for c in coeffs.iter_mut() {
            *c %= p;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { p, coeffs }
    }

    pub fn zero(p: u32) -> Self {
        Poly { p, coeffs: Vec::new() }
    }

    pub fn one(p: u32) -> Self {
        Poly::new(p, vec![1])
    }

    pub fn x(p: u32) -> Self {
        Poly::new(p, vec![0, 1])
    }

    pub fn constant(p: u32, c: Fp) -> Self {
        Poly::new(p, vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; zero polynomial reports as `None`.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading(&self) -> Fp {
        *self.coeffs.last().unwrap_or(&0)
    }

    pub fn coeff(&self, i: usize) -> Fp {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let p = self.p;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| fp_add(self.coeff(i), other.coeff(i), p))
            .collect();
        Poly::new(p, coeffs)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let p = self.p;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| fp_add(self.coeff(i), fp_neg(other.coeff(i), p), p))
            .collect();
        Poly::new(p, coeffs)
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let p = self.p;
        if self.is_zero() || other.is_zero() {
            return Poly::zero(p);
        }
        let mut coeffs = vec![0u32; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = fp_add(coeffs[i + j], fp_mul(a, b, p), p);
            }
        }
        Poly::new(p, coeffs)
    }

    pub fn scale(&self, c: Fp) -> Poly {
        let p = self.p;
        Poly::new(p, self.coeffs.iter().map(|&a| fp_mul(a, c, p)).collect())
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(fp_inv(self.leading(), self.p))
    }

    /// Euclidean division: returns (quotient, remainder).
    pub fn divmod(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let p = self.p;
        let dd = d.deg();
        if self.is_zero() || self.deg() < dd {
            return (Poly::zero(p), self.clone());
        }
        let lead_inv = fp_inv(d.leading(), p);
        let mut rem = self.coeffs.clone();
        let mut quo = vec![0u32; self.deg() - dd + 1];
        for i in (dd..rem.len()).rev() {
            let c = fp_mul(rem[i], lead_inv, p);
            if c == 0 {
                continue;
            }
            quo[i - dd] = c;
            for (j, &dc) in d.coeffs.iter().enumerate() {
                rem[i - dd + j] = fp_add(rem[i - dd + j], fp_neg(fp_mul(c, dc, p), p), p);
            }
        }
        (Poly::new(p, quo), Poly::new(p, rem))
    }

    pub fn rem(&self, d: &Poly) -> Poly {
        self.divmod(d).1
    }

    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }

    pub fn derivative(&self) -> Poly {
        let p = self.p;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| fp_mul(c, (i as u64 % p as u64) as u32, p))
            .collect();
        Poly::new(p, coeffs)
    }

    /// `x^e mod self` by binary powering.
    pub fn x_pow_mod(&self, e: u64) -> Poly {
        let p = self.p;
        let mut base = Poly::x(p).rem(self);
        let mut acc = Poly::one(p).rem(self);
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(self);
            }
            base = base.mul(&base).rem(self);
            e >>= 1;
        }
        acc
    }

    pub fn eval(&self, x: Fp) -> Fp {
        let p = self.p;
        let mut acc = 0u32;
        for &c in self.coeffs.iter().rev() {
            acc = fp_add(fp_mul(acc, x, p), c, p);
        }
        acc
    }

    /// LCM, used when assembling minimal polynomials from Krylov pieces.
    pub fn lcm(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.p);
        }
        let g = self.gcd(other);
        self.mul(other).divmod(&g).0.monic()
    }

    pub fn pow(&self, e: usize) -> Poly {
        let mut acc = Poly::one(self.p);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

/// Extended Euclid: returns (g, u, v) with u*a + v*b = g, g monic (or zero).
pub fn ext_gcd(a: &Poly, b: &Poly) -> (Poly, Poly, Poly) {
    let p = a.p;
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (Poly::one(p), Poly::zero(p));
    let (mut t0, mut t1) = (Poly::zero(p), Poly::one(p));
    while !r1.is_zero() {
        let (q, r) = r0.divmod(&r1);
        let s = s0.sub(&q.mul(&s1));
        let t = t0.sub(&q.mul(&t1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
        t0 = t1;
        t1 = t;
    }
    if r0.is_zero() {
        (r0, s0, t0)
    } else {
        let c = fp_inv(r0.leading(), p);
        (r0.scale(c), s0.scale(c), t0.scale(c))
    }
}

/// Squarefree decomposition in characteristic p: returns pairs
/// (squarefree polynomial, multiplicity).
fn squarefree_decomposition(f: &Poly) -> Vec<(Poly, usize)> {
    let p = f.p;
    let mut out: Vec<(Poly, usize)> = Vec::new();
    let mut stack = vec![(f.monic(), 1usize)];
    while let Some((g, mult)) = stack.pop() {
        if g.deg() == 0 {
            continue;
        }
        let d = g.derivative();
        if d.is_zero() {
            // g = h(x^p) = (h*(x))^p over the prime field
            let mut h = Vec::new();
            for i in (0..g.coeffs.len()).step_by(p as usize) {
                h.push(g.coeffs[i]);
            }
            stack.push((Poly::new(p, h), mult * p as usize));
            continue;
        }
        let mut c = g.gcd(&d);
        let mut w = g.divmod(&c).0; // product of squarefree parts
        let mut i = 1usize;
        while w.deg() > 0 {
            let y = w.gcd(&c);
            let part = w.divmod(&y).0;
            if part.deg() > 0 {
                out.push((part.monic(), mult * i));
            }
            w = y.clone();
            c = c.divmod(&y).0;
            i += 1;
        }
        if c.deg() > 0 {
            // leftover p-th power content
            stack.push((c, mult));
        }
    }
    out
}

/// Berlekamp factorization of a squarefree monic polynomial.
fn berlekamp_squarefree(f: &Poly) -> Vec<Poly> {
    let p = f.p;
    let n = f.deg();
    if n <= 1 {
        return vec![f.clone()];
    }
    // Q[i] = coefficients of x^{ip} mod f
    let mut q = Matrix::zero(n, n, p);
    let xp = f.x_pow_mod(p as u64);
    let mut cur = Poly::one(p);
    for i in 0..n {
        for j in 0..n {
            q.set(j, i, cur.coeff(j));
        }
        if i + 1 < n {
            cur = cur.mul(&xp).rem(f);
        }
    }
    // kernel of Q - I: the Berlekamp subalgebra
    let mut qm = q.clone();
    for i in 0..n {
        let v = fp_add(qm.get(i, i), fp_neg(1, p), p);
        qm.set(i, i, v);
    }
    let kernel = qm.kernel_basis();
    let r = kernel.len(); // number of irreducible factors
    if r == 1 {
        return vec![f.clone()];
    }
    let mut factors = vec![f.clone()];
    // split with each non-constant subalgebra element until r factors found
    for v in kernel.iter() {
        if factors.len() == r {
            break;
        }
        let g = Poly::new(p, v.clone());
        if g.deg() == 0 {
            continue;
        }
        let mut next = Vec::new();
        for h in factors.into_iter() {
            if h.deg() <= 1 {
                next.push(h);
                continue;
            }
            let mut pieces = Vec::new();
            let mut rest = h.clone();
            for c in 0..p {
                if rest.deg() == 0 {
                    break;
                }
                let shifted = g.sub(&Poly::constant(p, c)).rem(&rest);
                let d = if shifted.is_zero() { rest.clone() } else { rest.gcd(&shifted) };
                if d.deg() > 0 {
                    pieces.push(d.clone());
                    rest = rest.divmod(&d).0;
                }
            }
            if rest.deg() > 0 {
                pieces.push(rest);
            }
            next.extend(pieces);
        }
        factors = next;
    }
    factors.sort_by(|a, b| (a.deg(), &a.coeffs).cmp(&(b.deg(), &b.coeffs)));
    factors
}

/// Full factorization into monic irreducibles with multiplicities, plus the
/// unit (leading coefficient of the input).
pub fn factor_poly(f: &Poly) -> Result<(Fp, Vec<(Poly, usize)>)> {
    if f.is_zero() {
        return Err(Error::Invalid("cannot factor the zero polynomial".into()));
    }
    let unit = f.leading();
    let monic = f.monic();
    if monic.deg() == 0 {
        return Ok((unit, Vec::new()));
    }
    let mut out: Vec<(Poly, usize)> = Vec::new();
    for (sf, mult) in squarefree_decomposition(&monic) {
        for irred in berlekamp_squarefree(&sf) {
            // merge equal factors from different squarefree layers
            if let Some(e) = out.iter_mut().find(|(g, _)| *g == irred) {
                e.1 += mult;
            } else {
                out.push((irred, mult));
            }
        }
    }
    out.sort_by(|a, b| (a.0.deg(), &a.0.coeffs).cmp(&(b.0.deg(), &b.0.coeffs)));
    Ok((unit, out))
}
