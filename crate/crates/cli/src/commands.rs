use std::fs;
use std::process::ExitCode;

use homalg::actions::{act as plain_act, DeformedAction, Sl2Suite};
use homalg::finalg::{builtin_scenario, LinOp, Scenario};
use homalg::homcore::{yau_twist_algebra, yau_twist_bialgebra, AlgCarrier, BialgCarrier};
use homalg::polyalg::parse_poly;
use homalg::uea_sl2::{parse_uelem, Sl2Bialgebra, UAlgMap, UEndo};
use homalg::{AxiomId, CheckReport, LinComb, PolyEndo, QLaurent, Rational};
use serde_json::{json, Value};

use crate::failure::Failure;
use crate::render::factored;
use crate::{ActArgs, Output, TwistKind, VerifyKind};

fn input<T, E: std::fmt::Display>(what: &str, r: Result<T, E>) -> Result<T, Failure> {
    r.map_err(|e| Failure::Input(format!("{what}: {e}")))
}

fn q_label(q: &Option<Rational>) -> String {
    q.as_ref().map_or_else(|| "formal".to_string(), ToString::to_string)
}

fn deformation(base: DeformedAction, q: &Option<Rational>) -> Result<DeformedAction, Failure> {
    match q {
        None => Ok(base),
        Some(q0) => Ok(base.specialized(q0)?),
    }
}

fn specialize<B: homalg::linear::BasisElem>(v: LinComb<B>, q: &Option<Rational>) -> LinComb<B> {
    match q {
        None => v,
        Some(q0) => v.map_coeffs(|c| QLaurent::from_rational(c.specialize(q0).expect("q is nonzero"))),
    }
}

fn load_scenario(file: &str) -> Result<Scenario, Failure> {
    let text = match builtin_scenario(file) {
        Some(text) => text.to_string(),
        None => input(&format!("cannot read {file}"), fs::read_to_string(file))?,
    };
    Ok(Scenario::parse(&text)?)
}

pub fn verify(kind: VerifyKind) -> Result<ExitCode, Failure> {
    match kind {
        VerifyKind::Sl2Q {
            bounds,
            negative_control,
            q,
            output,
        } => {
            let suite = Sl2Suite {
                bound_h: bounds.bound_h,
                bound_a: bounds.bound_a,
                deformation: deformation(DeformedAction::q_example(), &q.q_value)?,
                negative_control,
            };
            let scenario = json!({
                "kind": "sl2-q",
                "bound_h": bounds.bound_h,
                "bound_a": bounds.bound_a,
                "negative_control": negative_control,
                "q": q_label(&q.q_value),
            });
            let header = format!(
                "sl2-q bound_h={} bound_a={} q={}{}",
                bounds.bound_h,
                bounds.bound_a,
                q_label(&q.q_value),
                if negative_control { " negative-control" } else { "" }
            );
            finish(&header, scenario, suite.run()?, &output)
        }
        VerifyKind::Finalg { file, output } => {
            let s = load_scenario(&file)?;
            let reports = s.build()?.run()?;
            let scenario = json!({
                "kind": "finalg",
                "file": file,
                "dimension": s.algebra.dimension(),
                "group": s.group,
                "alpha": s.alpha.to_string(),
            });
            let header = format!(
                "finalg {file} dim={} |G|={} alpha={}",
                s.algebra.dimension(),
                s.group.len(),
                s.alpha
            );
            finish(&header, scenario, reports, &output)
        }
        VerifyKind::Custom {
            bounds,
            alpha_x,
            alpha_y,
            alpha_lx,
            alpha_ly,
            alpha_lz,
            q,
            output,
        } => {
            let alpha_a = PolyEndo::new(
                input("--alpha-x", parse_poly(&alpha_x))?,
                input("--alpha-y", parse_poly(&alpha_y))?,
            );
            let alpha_l = UEndo::new(
                input("--alpha-lx", parse_uelem(&alpha_lx))?,
                input("--alpha-ly", parse_uelem(&alpha_ly))?,
                input("--alpha-lz", parse_uelem(&alpha_lz))?,
            );
            let suite = Sl2Suite {
                bound_h: bounds.bound_h,
                bound_a: bounds.bound_a,
                deformation: deformation(DeformedAction::new(alpha_a.clone(), alpha_l.clone())?, &q.q_value)?,
                negative_control: false,
            };
            let scenario = json!({
                "kind": "custom",
                "bound_h": bounds.bound_h,
                "bound_a": bounds.bound_a,
                "alpha_a": [alpha_a.image_of_x.to_string(), alpha_a.image_of_y.to_string()],
                "alpha_l": [
                    alpha_l.image_of_x.to_string(),
                    alpha_l.image_of_y.to_string(),
                    alpha_l.image_of_z.to_string(),
                ],
                "q": q_label(&q.q_value),
            });
            let header = format!(
                "custom bound_h={} bound_a={} q={} α_A: x ↦ {}, y ↦ {} ; α_L: X ↦ {}, Y ↦ {}, Z ↦ {}",
                bounds.bound_h,
                bounds.bound_a,
                q_label(&q.q_value),
                alpha_a.image_of_x,
                alpha_a.image_of_y,
                alpha_l.image_of_x,
                alpha_l.image_of_y,
                alpha_l.image_of_z
            );
            finish(&header, scenario, suite.run()?, &output)
        }
    }
}

fn finish(header: &str, scenario: Value, reports: Vec<CheckReport>, output: &Output) -> Result<ExitCode, Failure> {
    let selected: Vec<CheckReport> = if output.axioms.is_empty() {
        reports
    } else {
        reports
            .into_iter()
            .filter(|r| output.axioms.contains(&r.axiom))
            .collect()
    };
    if selected.is_empty() {
        let names: Vec<&str> = output.axioms.iter().map(|a| a.name()).collect();
        return Err(Failure::Input(format!(
            "this suite has no checks for {}",
            names.join(", ")
        )));
    }

    println!("scenario: {header}");
    for r in &selected {
        println!("{r}");
        for c in r.counterexamples.iter().take(output.show) {
            println!("    {c}");
        }
        if r.counterexamples.len() > output.show {
            println!("    … {} more", r.counterexamples.len() - output.show);
        }
    }
    let failed = selected.iter().filter(|r| !r.passed()).count();
    let checked: usize = selected.iter().map(|r| r.checked).sum();
    if failed == 0 {
        println!("all {} checks passed ({checked} cases)", selected.len());
    } else {
        println!("{failed} of {} checks failed ({checked} cases)", selected.len());
    }

    if let Some(path) = &output.report {
        let doc = json!({
            "scenario": scenario,
            "passed": failed == 0,
            "reports": selected,
        });
        let text = serde_json::to_string_pretty(&doc).expect("reports serialize");
        input(
            &format!("cannot write {}", path.display()),
            fs::write(path, text + "\n"),
        )?;
    }
    Ok(if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(crate::failure::AXIOM_FAILURE)
    })
}

pub fn act(args: ActArgs) -> Result<ExitCode, Failure> {
    let z = input("element of U(sl2)", parse_uelem(&args.z))?;
    let p = input("polynomial", parse_poly(&args.p))?;
    let result = if args.deformed {
        DeformedAction::q_example().deformed_act(&z, &p)
    } else {
        plain_act(&z, &p)
    };
    println!("{}", specialize(result, &args.q.q_value));
    Ok(ExitCode::SUCCESS)
}

pub fn twist(kind: TwistKind) -> Result<ExitCode, Failure> {
    match kind {
        TwistKind::Sl2Q { bound, identity, q } => {
            let alpha = if identity {
                UAlgMap::identity()
            } else {
                deformation(DeformedAction::q_example(), &q.q_value)?.alpha_u
            };
            let h = yau_twist_bialgebra(Sl2Bialgebra { bound }, alpha, "α")?;
            let basis = h.test_basis();
            println!("# μ_α on PBW monomials of degree ≤ {bound}");
            for u in &basis {
                for v in &basis {
                    println!("μ_α({u}, {v}) = {}", factored(&h.mul_basis(u, v)));
                }
            }
            println!("# Δ_α on PBW monomials of degree ≤ {bound}");
            for u in &basis {
                println!("Δ_α({u}) = {}", factored(&h.comul_basis(u)));
            }
        }
        TwistKind::Finalg { file, identity } => {
            let s = load_scenario(&file)?;
            let alpha = if identity {
                LinOp::identity(s.algebra.basis().clone())
            } else {
                s.alpha_operator()?
            };
            let group = s.group()?;
            let a = yau_twist_algebra(s.algebra.clone(), alpha, "α")?;
            let basis = a.test_basis();
            println!("# α on {}", s.algebra.name());
            for u in &basis {
                println!("α({u}) = {}", a.alpha_basis(u));
            }
            println!("# μ_α on {}", s.algebra.name());
            for u in &basis {
                for v in &basis {
                    println!("μ_α({u}, {v}) = {}", a.mul_basis(u, v));
                }
            }
            println!("# Δ on k[G]");
            for g in group.test_basis() {
                println!("Δ({g}) = {}", group.comul_basis(&g));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

pub fn axioms() -> Result<ExitCode, Failure> {
    for a in AxiomId::ALL {
        println!("{:<26} {}", a.name(), a.formula());
    }
    Ok(ExitCode::SUCCESS)
}
