use anyhow::{bail, Context, Result};
use serde_json::{json, Value};
use ymalg_core::case_study::{self, AuditReport, Branch, CandidateFamily, EquivalenceReport, ImageCheck};
use ymalg_core::kac_moody::{self, MatrixData};
use ymalg_core::morphism::{analyze, doubling_into, witt_generation_evidence};
use ymalg_core::{
    sl_algebra, ym_relations, GaussianRational, GeneratorMorphism, IdealTower, StructureConstantAlgebra,
    WindowCoverage, WittAlgebra, WittElement,
};

use crate::input::{self, Element, Target};
use crate::{BranchArg, Cli, Command, FamilyArg, Format};

pub enum Body {
    Json(Value),
    Text(String),
}

pub struct Outcome {
    pub body: Body,
    /// Echoed in the report for sampled commands.
    pub seed: Option<u64>,
    /// False when a mathematical check failed.
    pub clean: bool,
    /// Contents of input files, folded into the digest.
    pub files: Vec<Vec<u8>>,
}

impl Outcome {
    fn json(payload: Value, clean: bool) -> Self {
        Outcome { body: Body::Json(payload), seed: None, clean, files: Vec::new() }
    }
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    if cli.format == Format::Csv && !matches!(cli.command, Command::Dims { .. }) {
        bail!("--format csv is only supported by `dims`");
    }
    match &cli.command {
        Command::Dims { n, strong } => dims(*n as usize, cli.max_degree, *strong, cli.format),
        Command::Verify { path, strong } => {
            let bytes = std::fs::read(path).with_context(|| format!("cannot read {}", path.display()))?;
            let text = String::from_utf8(bytes.clone()).context("morphism file is not UTF-8")?;
            let mut out = verify(&text, *strong, cli.depth, cli.window)?;
            out.files.push(bytes);
            Ok(out)
        }
        Command::CaseStudy { branch, samples, family } => case_study(*branch, *samples as usize, cli.seed, *family),
        Command::Pair { target, a, b, virasoro, strong } => {
            pair(target, a.as_deref(), b.as_deref(), *virasoro, *strong, cli.depth, cli.window)
        }
        Command::Realization { path } => {
            let bytes = std::fs::read(path).with_context(|| format!("cannot read {}", path.display()))?;
            let text = String::from_utf8(bytes.clone()).context("matrix file is not UTF-8")?;
            let mut out = realization(&text)?;
            out.files.push(bytes);
            Ok(out)
        }
    }
}

fn dims(n: usize, max_degree: usize, strong: bool, format: Format) -> Result<Outcome> {
    let mut tower = IdealTower::new(ym_relations(n, strong));
    if max_degree > tower.cap() {
        bail!("--max-degree {max_degree} exceeds the degree cap {}", tower.cap());
    }
    let rows = tower.dimension_table(max_degree)?;
    let body = match format {
        Format::Csv => {
            let mut s = String::from("degree,free_dim,ideal_dim,ym_dim\n");
            for r in &rows {
                s.push_str(&format!("{},{},{},{}\n", r.degree, r.free_dim, r.ideal_dim, r.ym_dim));
            }
            Body::Text(s)
        }
        Format::Json => {
            let ym: Vec<u64> = rows.iter().map(|r| r.ym_dim).collect();
            Body::Json(json!({
                "n": n,
                "strong": strong,
                "max_degree": max_degree,
                "rows": rows.iter().map(|r| json!({
                    "degree": r.degree,
                    "free_dim": r.free_dim,
                    "ideal_dim": r.ideal_dim,
                    "ym_dim": r.ym_dim,
                })).collect::<Vec<_>>(),
                "ym_total": ym.iter().sum::<u64>(),
                "ym_dims": ym,
            }))
        }
    };
    Ok(Outcome { body, seed: None, clean: true, files: Vec::new() })
}

fn finite_report(
    g: &StructureConstantAlgebra,
    phi: &GeneratorMorphism<StructureConstantAlgebra>,
    strong: bool,
) -> (Value, bool) {
    let rep = analyze(phi, strong);
    let v = json!({
        "residuals_zero": rep.residuals_zero,
        "residuals": rep.residuals.iter().map(|r| g.format(r)).collect::<Vec<_>>(),
        "image_dim": rep.image_dim,
        "solvable": rep.solvable,
        "nilpotent": rep.nilpotent,
        "surjective": rep.surjective,
    });
    (v, rep.residuals_zero)
}

fn coverage_json(c: &WindowCoverage) -> Value {
    json!({
        "depth": c.depth,
        "window": c.window,
        "all_covered": c.all_covered(),
        "covered": c.covered,
        "missing": c.missing,
        "span_dim": c.span_dim,
        "central_covered": c.central_covered,
    })
}

fn witt_report(phi: &GeneratorMorphism<WittAlgebra>, strong: bool, depth: usize, window: u64) -> (Value, bool) {
    let residuals = phi.relation_residuals(strong);
    let zero = residuals.iter().all(|r| r.is_zero());
    let v = json!({
        "residuals_zero": zero,
        "residuals": residuals.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
        "image_dim": Value::Null,
        "solvable": Value::Null,
        "nilpotent": Value::Null,
        "surjective": Value::Null,
        "generation": coverage_json(&witt_generation_evidence(phi, depth, window)),
    });
    (v, zero)
}

fn with_fields(mut v: Value, fields: Value) -> Value {
    if let (Value::Object(m), Value::Object(extra)) = (&mut v, fields) {
        for (k, x) in extra {
            m.insert(k, x);
        }
    }
    v
}

fn verify(text: &str, strong: bool, depth: usize, window: u64) -> Result<Outcome> {
    let m = input::morphism_file(text)?;
    if m.n == 0 {
        bail!("a morphism needs at least one generator");
    }
    let target_name = m.target.name();
    let (v, clean) = match m.target {
        Target::Finite(g, _) => {
            let images = m.images.into_iter().map(|e| match e {
                Element::Finite(x) => x,
                Element::Witt(_) => unreachable!("finite target"),
            });
            let phi = GeneratorMorphism::new(g.clone(), images.collect())?;
            finite_report(&g, &phi, strong)
        }
        Target::Witt(w) => {
            let images = m.images.into_iter().map(|e| match e {
                Element::Witt(x) => x,
                Element::Finite(_) => unreachable!("Witt target"),
            });
            let phi = GeneratorMorphism::new(w, images.collect())?;
            witt_report(&phi, strong, depth, window)
        }
    };
    let v = with_fields(v, json!({ "n": m.n, "target": target_name, "strong": strong }));
    Ok(Outcome::json(v, clean))
}

fn branch_json(r: &EquivalenceReport) -> Value {
    json!({
        "branch": r.branch.name(),
        "samples": r.samples,
        "closed_form_zero": r.closed_form_zero,
        "residuals_zero": r.residuals_zero,
        "mismatches": r.mismatches.len(),
        "mismatch_samples": r.mismatches,
    })
}

fn check_json(c: &ImageCheck) -> Value {
    json!({
        "residuals_zero": c.residuals_zero,
        "image_dim": c.image_dim,
        "solvable": c.solvable,
        "nilpotent": c.nilpotent,
    })
}

fn audit_json(a: &AuditReport) -> Value {
    let g = sl_algebra(2).expect("sl(2)");
    let audited: usize = a.families.iter().map(|(_, c)| c.residual_zero).sum();
    let solvable: usize = a.families.iter().map(|(_, c)| c.solvable).sum();
    let nilpotent: usize = a.families.iter().map(|(_, c)| c.nilpotent).sum();
    json!({
        "families": a.families.iter().map(|(f, c)| json!({
            "family": f.name(),
            "candidates": c.candidates,
            "residual_zero": c.residual_zero,
            "solvable": c.solvable,
            "nilpotent": c.nilpotent,
        })).collect::<Vec<_>>(),
        "excluded": a.excluded,
        "audited": audited,
        "solvable_violations": a.violations.len(),
        "violations": a.violations.iter().map(|v| json!({
            "family": v.family.name(),
            "sample": v.sample,
            "images": v.images.iter().map(|x| g.format(x)).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
        "solvable": solvable == audited,
        "nilpotent": nilpotent == audited,
        "remark": check_json(&a.remark),
        "zero_morphism": check_json(&a.zero),
    })
}

fn family(f: FamilyArg) -> CandidateFamily {
    match f {
        FamilyArg::Random => CandidateFamily::Random,
        FamilyArg::NilpotentBranch => CandidateFamily::NilpotentBranch,
        FamilyArg::SemisimpleBranch => CandidateFamily::SemisimpleBranch,
        FamilyArg::Proportional => CandidateFamily::Proportional,
        FamilyArg::Remark => CandidateFamily::Remark,
    }
}

fn case_study(branch: BranchArg, samples: usize, seed: u64, forced: Option<FamilyArg>) -> Result<Outcome> {
    let branches: &[Branch] = match branch {
        BranchArg::Nilpotent => &[Branch::Nilpotent],
        BranchArg::Semisimple => &[Branch::Semisimple],
        BranchArg::Both => &[Branch::Nilpotent, Branch::Semisimple],
    };
    let eq: Vec<EquivalenceReport> =
        branches.iter().map(|&b| case_study::oracle_equivalence(b, samples, seed)).collect();
    let audit = match forced {
        Some(f) => case_study::solvable_image_audit_for(&[family(f)], samples, seed),
        None => case_study::solvable_image_audit(samples, seed),
    };
    let mismatches: usize = eq.iter().map(|r| r.mismatches.len()).sum();
    let audit_v = audit_json(&audit);
    let clean = mismatches == 0 && audit.violations.is_empty() && audit.remark.solvable && !audit.remark.nilpotent;
    let v = json!({
        "samples": samples,
        "branches": eq.iter().map(branch_json).collect::<Vec<_>>(),
        "mismatches": mismatches,
        "solvable_violations": audit.violations.len(),
        "solvable": audit_v["solvable"],
        "nilpotent": audit_v["nilpotent"],
        "audit": audit_v,
    });
    Ok(Outcome { body: Body::Json(v), seed: Some(seed), clean, files: Vec::new() })
}

fn element(target: &Target, src: &str) -> Result<Element> {
    let terms = input::parse_combination(src)?;
    input::combine(target, &terms).with_context(|| format!("in element `{src}`"))
}

fn pair(
    target_name: &str,
    a: Option<&str>,
    b: Option<&str>,
    virasoro: bool,
    strong: bool,
    depth: usize,
    window: u64,
) -> Result<Outcome> {
    let mut target = input::named_target(target_name)?;
    if virasoro {
        match &mut target {
            Target::Witt(w) => w.virasoro = true,
            Target::Finite(..) => bail!("--virasoro only applies to Witt targets"),
        }
    }
    let (v, clean) = match &target {
        Target::Finite(g, _) => {
            let (Some(a), Some(b)) = (a, b) else { bail!("--a and --b are required for finite-dimensional targets") };
            let (Element::Finite(x), Element::Finite(y)) = (element(&target, a)?, element(&target, b)?) else {
                unreachable!("finite target")
            };
            let phi = doubling_into(g.clone(), vec![x, y])?;
            finite_report(g, &phi, strong)
        }
        Target::Witt(w) => {
            let parse = |s: Option<&str>, default: i64| -> Result<WittElement> {
                match s {
                    None => Ok(WittElement::basis(default)),
                    Some(s) => match element(&target, s)? {
                        Element::Witt(x) => Ok(x),
                        Element::Finite(_) => unreachable!("Witt target"),
                    },
                }
            };
            let phi = doubling_into(*w, vec![parse(a, -2)?, parse(b, 3)?])?;
            witt_report(&phi, strong, depth, window)
        }
    };
    let v = with_fields(
        v,
        json!({
            "target": target.name(),
            "a": a.unwrap_or("e_-2"),
            "b": b.unwrap_or("e_3"),
            "strong": strong,
        }),
    );
    Ok(Outcome::json(v, clean))
}

fn matrix_json(rows: &[Vec<GaussianRational>]) -> Value {
    rows.iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect()
}

fn realization(text: &str) -> Result<Outcome> {
    let a = MatrixData::new(input::matrix(text)?).context("realization input")?;
    let gcm = kac_moody::is_generalized_cartan(&a);
    let real = kac_moody::build_realization(&a);
    let verified = kac_moody::verify_realization(&a, &real);
    let v = json!({
        "m": a.size(),
        "rank": a.rank(),
        "gcm": gcm.is_ok(),
        "gcm_violation": gcm.err().map(|e| e.to_string()),
        "h_dim": real.h_dim,
        "pi": matrix_json(&real.pi),
        "pi_check": matrix_json(&real.pi_check),
        "pairing": matrix_json(&real.pairing()),
        "verified": verified,
        "bound": kac_moody::ym_quotient_bound_for(&a),
    });
    Ok(Outcome::json(v, verified))
}
