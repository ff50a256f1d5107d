//! Acceptance gate: twelve criteria, one test (and one pass/fail line) each.
//!
//! Each test prints `[PASS] ACn ...` on success; a failing criterion fails
//! its test, so the harness output doubles as the acceptance report.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use repalg::algebra::{centrosymmetric_algebra, matrix_algebra, Algebra};
use repalg::ext::{
    check_centrally_projective, check_frobenius, check_h_separable, check_semisimple_on_probes,
    check_separable, check_separable_exhaustive, identity_extension, unit_extension,
    verify_frobenius_system, verify_separable, verify_summand, Extension,
};
use repalg::group::{
    alt4, cyclic, group_algebra, group_extension, klein4, parse_cycles, subgroup_generated, sym,
    FiniteGroup, Subgroup,
};
use repalg::linalg::{Matrix, Subspace};
use repalg::module::{
    coregular_module, decompose, global_dimension, hom_space, projective_dimension,
    regular_module, Bimodule, PdResult, ProjectiveData,
};
use repalg::oracle::{
    brute_force_radical, ext_gldim, ext_pd, indecomposable_brute, random_algebra, random_module,
    simples_from_radical, ExtPd,
};
use repalg::repdim::{
    approximation_crosscheck, repdim_report, repdim_report_for_group, verify_group_corollary,
    CorollaryOutcome, LowerProvenance, RepdimOptions, RepdimReport,
};

fn subgroup(g: &FiniteGroup, gens: &str) -> Subgroup {
    let degree = g.perms[0].len();
    let idx: Vec<usize> = gens
        .split(';')
        .map(|part| {
            g.find_perm(&parse_cycles(part, degree).unwrap())
                .expect("generator in group")
        })
        .collect();
    subgroup_generated(g, &idx).unwrap()
}

fn group_report(g: &FiniteGroup, p: u32) -> RepdimReport {
    repdim_report_for_group(g, p, &RepdimOptions::default()).unwrap()
}

#[test]
fn ac01_cyclic_p_group_repdim() {
    for (p, n) in [(2u32, 1usize), (2, 2), (3, 1)] {
        let g = cyclic(p.pow(n as u32) as usize).unwrap();
        let report = group_report(&g, p);
        assert_eq!(
            report.value(),
            Some(2),
            "repdim k[C_{}] over GF({p})",
            p.pow(n as u32)
        );
    }
    println!("[PASS] AC1 cyclic p-group repdim exact 2 for (2,1), (2,2), (3,1)");
}

#[test]
fn ac02_klein_four_repdim() {
    let report = group_report(&klein4().unwrap(), 2);
    assert_eq!(report.value(), Some(3));
    assert_eq!(report.lower_provenance, LowerProvenance::HigmanRepInfinite);
    assert_eq!(report.loewy_length, 3);
    // the Loewy generator candidate realizes the bound
    assert!(report.witness_label.as_deref().unwrap().contains("A/rad"));
    println!("[PASS] AC2 Klein four repdim exact 3 (Higman lower, Loewy-generator upper)");
}

#[test]
fn ac03_alt4_and_sylow_corollary() {
    let g = alt4().unwrap();
    let report = group_report(&g, 2);
    assert_eq!(report.value(), Some(3));
    let h = subgroup(&g, "(1 2)(3 4); (1 3)(2 4)");
    let cor = verify_group_corollary(&g, &h, 2, &RepdimOptions::default()).unwrap();
    match cor.outcome {
        CorollaryOutcome::Checked {
            equality,
            within_subgroup_order,
            consistent,
        } => {
            assert_eq!(equality, Some(true));
            assert_eq!(within_subgroup_order, Some(true));
            assert!(consistent);
        }
        CorollaryOutcome::NotApplicable { .. } => panic!("index 3 is invertible mod 2"),
    }
    println!("[PASS] AC3 repdim k[A4] = repdim k[V4] = 3 <= 4");
}

#[test]
fn ac04_maschke() {
    let instances: [(FiniteGroup, u32); 3] = [
        (sym(3).unwrap(), 5),
        (cyclic(3).unwrap(), 2),
        (alt4().unwrap(), 7),
    ];
    for (g, p) in instances {
        let alg = group_algebra(&g, p).unwrap();
        assert!(alg.is_semisimple(), "order {} char {p}", g.order);
        assert_eq!(group_report(&g, p).value(), Some(0));
    }
    println!("[PASS] AC4 Maschke: semisimple and repdim exact 0 at coprime characteristic");
}

fn gallery_extension(gname: &str, hgens: &str, p: u32) -> Extension {
    let g = match gname {
        "c4" => cyclic(4).unwrap(),
        "sym3" => sym(3).unwrap(),
        "alt4" => alt4().unwrap(),
        other => panic!("unknown group {other}"),
    };
    let h = subgroup(&g, hgens);
    group_extension(&g, &h, p).unwrap().ext
}

#[test]
fn ac05_frobenius_systems() {
    for (gname, hgens, p) in [
        ("c4", "(1 3)(2 4)", 2u32),
        ("sym3", "(1 2)", 2),
        ("alt4", "(1 2)(3 4); (1 3)(2 4)", 2),
    ] {
        let g = match gname {
            "c4" => cyclic(4).unwrap(),
            "sym3" => sym(3).unwrap(),
            _ => alt4().unwrap(),
        };
        let h = subgroup(&g, hgens);
        let ge = group_extension(&g, &h, p).unwrap();
        verify_frobenius_system(&ge.ext, &ge.system)
            .unwrap_or_else(|msg| panic!("{gname} char {p}: {msg}"));
    }
    println!("[PASS] AC5 canonical Frobenius systems verify on every basis element");
}

#[test]
fn ac06_separability_battery() {
    // certificates found
    for (gname, hgens, p) in [
        ("alt4", "(1 2)(3 4); (1 3)(2 4)", 2u32),
        ("sym3", "(1 2)", 2),
        ("sym3", "(1 2 3)", 3),
    ] {
        let ext = gallery_extension(gname, hgens, p);
        let cert = check_separable(&ext)
            .unwrap()
            .unwrap_or_else(|| panic!("{gname} char {p}: expected a Casimir element"));
        assert!(verify_separable(&ext, &cert).unwrap());
    }
    // certificates absent, cross-confirmed exhaustively
    let kc2 = group_algebra(&cyclic(2).unwrap(), 2).unwrap();
    let absent = [
        unit_extension(&kc2).unwrap(),
        gallery_extension("sym3", "(1 2 3)", 2),
    ];
    for ext in &absent {
        assert!(check_separable(ext).unwrap().is_none());
        assert_eq!(check_separable_exhaustive(ext).unwrap(), Some(false));
    }
    println!("[PASS] AC6 separability battery: 3 found, 2 absent with exhaustive confirmation");
}

#[test]
fn ac07_implication_suite() {
    let mut gallery: Vec<(String, Extension)> = Vec::new();
    for (gname, hgens, p) in [
        ("c4", "(1 3)(2 4)", 2u32),
        ("sym3", "(1 2)", 2),
        ("sym3", "(1 2 3)", 2),
        ("sym3", "(1 2 3)", 3),
        ("alt4", "(1 2)(3 4); (1 3)(2 4)", 2),
    ] {
        gallery.push((
            format!("{gname}@{p}"),
            gallery_extension(gname, hgens, p),
        ));
    }
    let kc2 = group_algebra(&cyclic(2).unwrap(), 2).unwrap();
    gallery.push(("id-kC2".into(), identity_extension(&kc2)));
    gallery.push(("k<=kC2".into(), unit_extension(&kc2).unwrap()));
    gallery.push(("k<=M2".into(), unit_extension(&matrix_algebra(2, 3).unwrap()).unwrap()));
    gallery.push((
        "k<=kC3@2".into(),
        unit_extension(&group_algebra(&cyclic(3).unwrap(), 2).unwrap()).unwrap(),
    ));

    for (label, ext) in &gallery {
        let h_sep = check_h_separable(ext).unwrap().is_some();
        let sep = check_separable(ext).unwrap().is_some();
        let cp = check_centrally_projective(ext).unwrap().is_some();
        let frob = check_frobenius(ext).unwrap().is_some();
        assert!(!h_sep || sep, "{label}: H-separable must imply separable");
        assert!(
            !(sep && cp) || frob,
            "{label}: separable + centrally projective must yield a Frobenius system"
        );
        if sep {
            let probes = [regular_module(&ext.a), coregular_module(&ext.a)];
            let report = check_semisimple_on_probes(ext, &probes).unwrap();
            assert!(
                report.verdicts.iter().all(|&v| v),
                "{label}: separable but a probe fails to split"
            );
            assert!(report.universal);
        }
    }
    println!(
        "[PASS] AC7 implication suite: 0 violations over {} extensions",
        gallery.len()
    );
}

fn oracle_agrees(alg: &Algebra) -> bool {
    let rad = brute_force_radical(alg);
    if alg.radical().basis != rad {
        return false;
    }
    let reg = regular_module(alg);
    let dec = decompose(alg, &reg, 0).unwrap();
    if !dec.verify(&reg) {
        return false;
    }
    for s in &dec.summands {
        if !indecomposable_brute(alg, &s.module).unwrap() {
            return false;
        }
    }
    let cap = 6;
    let simples = simples_from_radical(alg, &rad).unwrap();
    let pdata = ProjectiveData::for_algebra(alg, 0).unwrap();
    for s in &simples {
        let prod = projective_dimension(alg, &pdata, s, cap).unwrap();
        let orac = ext_pd(alg, &rad, &simples, s, cap).unwrap();
        let agree = match (&prod, &orac) {
            (PdResult::Finite(d), ExtPd::Exactly(e)) => d == e,
            (PdResult::Infinite | PdResult::Unknown, ExtPd::AtLeast(_)) => true,
            _ => false,
        };
        if !agree {
            return false;
        }
    }
    let prod = global_dimension(alg, cap, 0).unwrap();
    let orac = ext_gldim(alg, cap).unwrap();
    match (prod, orac) {
        (PdResult::Finite(d), ExtPd::Exactly(e)) => d == e,
        (PdResult::Infinite | PdResult::Unknown, ExtPd::AtLeast(_)) => true,
        _ => false,
    }
}

#[test]
fn ac08_oracle_equivalence() {
    let mut count = 0usize;
    for p in [2u32, 3] {
        let mut rng = ChaCha8Rng::seed_from_u64(0xAC08 ^ u64::from(p));
        for i in 0..50 {
            let alg = random_algebra(&mut rng, p);
            assert!(
                oracle_agrees(&alg),
                "oracle mismatch on draw {i} over GF({p})"
            );
            count += 1;
        }
    }
    assert!(count >= 100);
    println!("[PASS] AC8 oracle equivalence on {count} random algebras: 0 mismatches");
}

#[test]
fn ac09_approximation_crosscheck() {
    let witnesses: Vec<(String, Algebra, RepdimReport)> = [
        ("C2", cyclic(2).unwrap(), 2u32),
        ("C4", cyclic(4).unwrap(), 2),
        ("C3", cyclic(3).unwrap(), 3),
        ("V4", klein4().unwrap(), 2),
        ("A4", alt4().unwrap(), 2),
    ]
    .into_iter()
    .map(|(name, g, p)| {
        let alg = group_algebra(&g, p).unwrap();
        let report = group_report(&g, p);
        (name.to_string(), alg, report)
    })
    .collect();
    for (name, alg, report) in &witnesses {
        let m = report.witness.as_ref().unwrap();
        let bound = report.upper.unwrap().max(2);
        let mut rng = ChaCha8Rng::seed_from_u64(0xAC09);
        for i in 0..20 {
            let y = random_module(alg, &mut rng, 8).unwrap();
            approximation_crosscheck(alg, m, &y, bound)
                .unwrap_or_else(|e| panic!("{name}, module {i} (dim {}): {e}", y.dim));
        }
    }
    println!("[PASS] AC9 approximation chains verified for 5 witnesses x 20 random modules");
}

#[test]
fn ac10_intro_example() {
    let s2 = centrosymmetric_algebra(2, 2).unwrap();
    let r2 = repdim_report(&s2, &RepdimOptions::default()).unwrap();
    assert_eq!(r2.value(), Some(2));
    let m2 = matrix_algebra(2, 2).unwrap();
    let rm = repdim_report(&m2, &RepdimOptions::default()).unwrap();
    assert_eq!(rm.value(), Some(0));
    // 3x3 case is report-only: bounds must exist and be ordered
    let s3 = centrosymmetric_algebra(3, 2).unwrap();
    let r3 = repdim_report(&s3, &RepdimOptions::default()).unwrap();
    if let Some(u) = r3.upper {
        assert!(r3.lower <= u);
    }
    println!("[PASS] AC10 intro example: repdim S_2 = 2 > 0 = repdim M_2 (S_3 report-only)");
}

/// The basis (i, j) -> a^i b^j identifies k[C2] (x) k[C2] with k[V4].
fn tensor_is_klein(t: &Algebra) -> bool {
    let g = klein4().unwrap();
    let v4 = group_algebra(&g, 2).unwrap();
    let a = g.find_perm(&parse_cycles("(1 2)(3 4)", 4).unwrap()).unwrap();
    let b = g.find_perm(&parse_cycles("(1 3)(2 4)", 4).unwrap()).unwrap();
    let map = [0, b, a, g.op(a, b)];
    let mut perm = Matrix::zero(4, 4, 2);
    for (src, &dst) in map.iter().enumerate() {
        perm.set(dst, src, 1);
    }
    for i in 0..4 {
        for j in 0..4 {
            let lhs = perm.apply(&t.table[i * 4 + j]);
            let rhs = v4.mul(&perm.apply(&t.basis_vector(i)), &perm.apply(&t.basis_vector(j)));
            if lhs != rhs {
                return false;
            }
        }
    }
    perm.apply(&t.unit) == v4.unit
}

#[test]
fn ac11_tensor_bound() {
    let kc2 = group_algebra(&cyclic(2).unwrap(), 2).unwrap();
    let t = kc2.tensor_product(&kc2).unwrap();
    // representation-infiniteness is justified by the verified isomorphism
    // with k[V4], where Higman's criterion applies
    assert!(tensor_is_klein(&t));
    let report = repdim_report(
        &t,
        &RepdimOptions {
            assert_rep_infinite: true,
            ..RepdimOptions::default()
        },
    )
    .unwrap();
    assert_eq!(report.value(), Some(3));
    let factor = group_report(&cyclic(2).unwrap(), 2);
    assert_eq!(factor.value(), Some(2));
    assert!(3 <= 2 + 2);
    println!("[PASS] AC11 tensor bound: repdim(k[C2] (x) k[C2]) = 3 <= 2 + 2");
}

/// Central projectivity by the trace-ideal criterion, independent of the
/// summand search: id_A must lie in the span of composites through B.
fn centrally_projective_by_trace(ext: &Extension) -> bool {
    let env = ext.b.enveloping().unwrap();
    let a_env = ext.a_as_bb().as_env_module(ext.b.dim);
    let b_env = Bimodule::regular(&ext.b).as_env_module(ext.b.dim);
    let fs = hom_space(&env, &b_env, &a_env).unwrap();
    let gs = hom_space(&env, &a_env, &b_env).unwrap();
    if fs.is_empty() || gs.is_empty() {
        return false;
    }
    let n = a_env.dim;
    let p = ext.p();
    let flatten = |m: &Matrix| -> Vec<u32> { (0..n).flat_map(|r| m.row(r).to_vec()).collect() };
    let mut vecs = Vec::new();
    for f in &fs {
        for g in &gs {
            vecs.push(flatten(&f.mul(g).unwrap()));
        }
    }
    Subspace::from_spanning(n * n, p, &vecs).contains(&flatten(&Matrix::identity(n, p)))
}

#[test]
fn ac12_paper_audit() {
    let mut warns = Vec::new();
    for (label, ext) in [
        ("V4 normal in A4, char 2", gallery_extension("alt4", "(1 2)(3 4); (1 3)(2 4)", 2)),
        ("C3 normal in S3, char 3", gallery_extension("sym3", "(1 2 3)", 3)),
    ] {
        match check_centrally_projective(&ext).unwrap() {
            Some(cert) => {
                let source = ext.a_as_bb().as_env_module(ext.b.dim);
                let target = Bimodule::regular(&ext.b).as_env_module(ext.b.dim);
                assert!(verify_summand(&source, &target, &cert), "{label}");
            }
            None => {
                // absence must be independently confirmed before it may be
                // reported as a WARN rather than a FAIL
                assert!(!centrally_projective_by_trace(&ext), "{label}");
                warns.push(label);
            }
        }
    }
    for label in &warns {
        println!("[WARN] central projectivity absent for {label} (cross-confirmed)");
    }
    // the CLI suite must surface the same instances as WARN, not FAIL
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_repalg"))
        .args(["verify", "paper", "--filter", "paper-audit"])
        .output()
        .expect("CLI runs");
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(out.status.success(), "paper-audit rows must not fail: {stdout}");
    assert!(stdout.contains("[WARN]") || stdout.contains("certificate verified"));
    assert!(!stdout.contains("[FAIL]"));
    println!("[PASS] AC12 paper audit: verdicts cross-confirmed, WARN (not FAIL) on absence");
}

// ---------------------------------------------------------------------------
// CLI contract (exit codes and determinism) — support checks for the gate
// ---------------------------------------------------------------------------

#[test]
fn cli_exit_codes_and_determinism() {
    let bin = env!("CARGO_BIN_EXE_repalg");
    // usage error -> 2 (clap)
    let usage = std::process::Command::new(bin)
        .args(["algebra", "info", "--no-such-flag"])
        .output()
        .unwrap();
    assert_eq!(usage.status.code(), Some(2));
    // parse error -> 3
    let dir = std::env::temp_dir().join("repalg-acceptance");
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("truncated.json");
    std::fs::write(&bad, "{ \"kind\": \"algebra\", ").unwrap();
    let parse = std::process::Command::new(bin)
        .args(["algebra", "info", "--file", bad.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(parse.status.code(), Some(3));
    // identical inputs + seed -> byte-identical machine reports
    let out1 = dir.join("r1.json");
    let out2 = dir.join("r2.json");
    for out in [&out1, &out2] {
        let st = std::process::Command::new(bin)
            .args([
                "repdim", "report", "--group", "klein4", "--prime", "2", "--seed", "7", "--out",
                out.to_str().unwrap(),
            ])
            .status()
            .unwrap();
        assert!(st.success());
    }
    assert_eq!(
        std::fs::read(&out1).unwrap(),
        std::fs::read(&out2).unwrap()
    );
}
