//! Acceptance criteria, one `[PASS]`/`[FAIL]` line each.
//!
//! Runs without the libtest harness so the summary is always printed.

use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;
use ymalg_core::case_study::{dot, random_scalar, solvable_image_audit, Branch};
use ymalg_core::kac_moody::{
    build_realization, verify_realization, ym_quotient_bound, ym_quotient_bound_for, MatrixData,
};
use ymalg_core::{
    doubling_morphism, free_lie_dim, generated_window, isotropic_orthogonal_witness, lyndon_basis, oracle_equivalence,
    subalgebra_closure, witt_virasoro_morphism, yu_morphism, FreeLieAlgebra, FreeLieElement, GaussianRational,
    WittElement,
};

type Check = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Check);

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn ymalg(args: &[&str]) -> Result<(Vec<u8>, i32), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_ymalg")).args(args).output().map_err(|e| e.to_string())?;
    Ok((out.stdout, out.status.code().unwrap_or(-1)))
}

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name).display().to_string()
}

fn heisenberg_dims() -> Check {
    let (out, code) = ymalg(&["dims", "--n", "2", "--max-degree", "6"])?;
    ensure(code == 0, format!("exit code {code}"))?;
    let v: Value = serde_json::from_slice(&out).map_err(|e| e.to_string())?;
    let dims: Vec<u64> =
        v["payload"]["ym_dims"].as_array().ok_or("no ym_dims")?.iter().filter_map(Value::as_u64).collect();
    ensure(dims == [2, 1, 0, 0, 0, 0], format!("ym dims {dims:?}"))?;
    ensure(v["payload"]["ym_total"] == 3, "total is not 3")?;
    Ok(format!("ym dims {dims:?}, total 3"))
}

fn lyndon_counts() -> Check {
    for n in 1..=4 {
        for d in 1..=8 {
            let (got, want) = (lyndon_basis(n, d).len() as u64, free_lie_dim(n, d));
            ensure(got == want, format!("n={n} d={d}: {got} words, formula {want}"))?;
        }
    }
    Ok("32 (n, d) pairs agree".into())
}

fn random_homogeneous(rng: &mut ChaCha8Rng, n: usize, max_deg: usize) -> FreeLieElement {
    let d = rng.random_range(1..=max_deg);
    let basis = lyndon_basis(n, d);
    let terms: Vec<_> = (0..rng.random_range(1..=2))
        .map(|_| (basis[rng.random_range(0..basis.len())].clone(), random_scalar(rng)))
        .collect();
    FreeLieElement::from_terms(n, terms).expect("valid words")
}

fn bracket_laws() -> Check {
    let f = FreeLieAlgebra::new(3);
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let br = |a: &FreeLieElement, b: &FreeLieElement| f.bracket(a, b).expect("same n");
    let deg = |a: &FreeLieElement| a.degrees().into_iter().next();
    let triples = 500;
    for t in 0..triples {
        let (a, b, c) = (
            random_homogeneous(&mut rng, 3, 5),
            random_homogeneous(&mut rng, 3, 5),
            random_homogeneous(&mut rng, 3, 5),
        );
        let ab = br(&a, &b);
        ensure(ab == br(&b, &a).neg(), format!("antisymmetry fails on triple {t}"))?;
        let jacobi = br(&a, &br(&b, &c)).add(&br(&b, &br(&c, &a))).add(&br(&c, &ab));
        ensure(jacobi.is_zero(), format!("Jacobi fails on triple {t}"))?;
        if !ab.is_zero() {
            ensure(ab.is_homogeneous(), format!("inhomogeneous bracket on triple {t}"))?;
            ensure(deg(&ab) == deg(&a).zip(deg(&b)).map(|(x, y)| x + y), format!("grading fails on triple {t}"))?;
        }
    }
    Ok(format!("{triples} triples"))
}

fn doubling() -> Check {
    for m in 1..=3 {
        let phi = doubling_morphism(m);
        ensure(phi.relation_residuals(false).iter().all(|r| r.is_zero()), format!("nonzero residual for m={m}"))?;
    }
    Ok("m = 1, 2, 3".into())
}

fn yu_example() -> Check {
    let phi = yu_morphism();
    let r = phi.relation_residuals(true);
    ensure(r.len() == 9, format!("{} strong residuals", r.len()))?;
    ensure(r.iter().all(|x| x.is_zero()), "a strong residual is nonzero")?;
    let dim = subalgebra_closure(phi.target(), phi.images()).map_err(|e| e.to_string())?.dim();
    ensure(dim == 8, format!("closure dimension {dim}"))?;
    Ok("9 strong residuals vanish, closure dim 8".into())
}

fn witt_virasoro() -> Check {
    for virasoro in [false, true] {
        let phi = witt_virasoro_morphism(virasoro);
        ensure(phi.residuals_vanish(false), format!("residual nonzero (virasoro={virasoro})"))?;
    }
    let cov = generated_window(&[WittElement::basis(-2), WittElement::basis(3)], 8, 10, false);
    ensure(cov.all_covered(), format!("missing {:?}", cov.missing))?;
    Ok(format!("both flags vanish, covered {} indices", cov.covered.len()))
}

fn case_study_equivalence() -> Check {
    let mut solutions = Vec::new();
    for branch in [Branch::Nilpotent, Branch::Semisimple] {
        let r = oracle_equivalence(branch, 1000, 17);
        ensure(r.mismatches.is_empty(), format!("{} mismatches in {}", r.mismatches.len(), branch.name()))?;
        solutions.push(r.closed_form_zero);
    }
    Ok(format!("0 mismatches over 2 x 1000 samples ({solutions:?} solutions)"))
}

fn solvable_audit() -> Check {
    let rep = solvable_image_audit(200, 23);
    ensure(rep.violations.is_empty(), format!("{} violations", rep.violations.len()))?;
    ensure(rep.remark.residuals_zero && rep.remark.solvable, "(h, e, ih) not solvable")?;
    ensure(!rep.remark.nilpotent, "(h, e, ih) nilpotent")?;
    let audited: usize = rep.families.iter().map(|(_, c)| c.residual_zero).sum();
    Ok(format!("{audited} audited, {} excluded, 0 violations", rep.excluded))
}

fn isotropic_witness() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for k in 0..200 {
        let t = loop {
            let t = random_scalar(&mut rng);
            if !t.is_zero() {
                break t;
            }
        };
        let s = if rng.random_bool(0.5) { GaussianRational::i() } else { -GaussianRational::i() };
        let x = [t.clone(), &t * &s];
        let mu = random_scalar(&mut rng);
        let y = [&mu * &x[0], &mu * &x[1]];
        let l = isotropic_orthogonal_witness(&x, &y).map_err(|e| format!("pair {k}: {e}"))?;
        ensure(&l * &x[0] == y[0] && &l * &x[1] == y[1], format!("pair {k}: y != λx"))?;
        ensure(dot(&y, &y).is_zero(), format!("pair {k}: y·y != 0"))?;
    }
    Ok("200 pairs".into())
}

fn realizations() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for k in 0..100 {
        let m = rng.random_range(1..=5usize);
        let r = rng.random_range(0..=m);
        let p: Vec<Vec<i64>> = (0..m).map(|_| (0..r).map(|_| rng.random_range(-2..=2)).collect()).collect();
        let q: Vec<Vec<i64>> = (0..m).map(|_| (0..r).map(|_| rng.random_range(-2..=2)).collect()).collect();
        let entries = (0..m)
            .map(|i| (0..m).map(|j| GaussianRational::from_int((0..r).map(|s| p[i][s] * q[j][s]).sum())).collect())
            .collect();
        let a = MatrixData::new(entries).map_err(|e| e.to_string())?;
        let real = build_realization(&a);
        ensure(real.h_dim == 2 * m - a.rank(), format!("matrix {k}: h_dim {}", real.h_dim))?;
        ensure(verify_realization(&a, &real), format!("matrix {k}: verification failed"))?;
    }
    let a1 = MatrixData::from_ints(&[&[2, -2], &[-2, 2]]).map_err(|e| e.to_string())?;
    let real = build_realization(&a1);
    ensure(real.h_dim == 3 && ym_quotient_bound_for(&a1) == 4, "affine A1")?;
    ensure(ym_quotient_bound(6, 2) == 8, "m=6 r=2 bound")?;
    Ok("100 random matrices, affine A1 h_dim 3 bound 4, (6, 2) bound 8".into())
}

fn determinism() -> Check {
    let (yu, a1) = (data("yu.json"), data("affine_a1.json"));
    let commands: Vec<Vec<&str>> = vec![
        vec!["dims", "--n", "3", "--max-degree", "5"],
        vec!["verify", &yu],
        vec!["case-study", "--samples", "50", "--seed", "11"],
        vec!["pair", "--target", "witt", "--depth", "6", "--window", "6"],
        vec!["pair", "--target", "sl3", "--a", "E12+E23", "--b", "E31"],
        vec!["realization", &a1],
    ];
    for c in &commands {
        let (first, _) = ymalg(c)?;
        let (second, _) = ymalg(c)?;
        ensure(!first.is_empty() && first == second, format!("output differs for {c:?}"))?;
    }
    Ok(format!("{} commands byte-identical", commands.len()))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("Heisenberg dimensions", Duration::from_secs(1), heisenberg_dims),
        ("Lyndon counts", Duration::from_secs(5), lyndon_counts),
        ("bracket laws", Duration::from_secs(30), bracket_laws),
        ("doubling morphism", Duration::from_secs(5), doubling),
        ("ym(3) to sl(3)", Duration::from_secs(1), yu_example),
        ("Witt/Virasoro", Duration::from_secs(10), witt_virasoro),
        ("sl(2) oracle equivalence", Duration::from_secs(60), case_study_equivalence),
        ("solvable image audit", Duration::from_secs(30), solvable_audit),
        ("isotropic witness", Duration::from_secs(5), isotropic_witness),
        ("realizations", Duration::from_secs(10), realizations),
        ("determinism", Duration::from_secs(60), determinism),
    ];
    let mut failed = 0;
    for (k, (name, limit, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let took = start.elapsed();
        let verdict = match result {
            Ok(detail) if took <= *limit => Ok(detail),
            Ok(detail) => Err(format!("{detail}; took {took:.2?}, limit {limit:?}")),
            Err(e) => Err(e),
        };
        match verdict {
            Ok(detail) => println!("[PASS] AC-{} {name}: {detail} ({took:.2?})", k + 1),
            Err(e) => {
                failed += 1;
                println!("[FAIL] AC-{} {name}: {e} ({took:.2?})", k + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
