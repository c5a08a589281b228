use super::commands::{lattice_of, run_pipeline, Catalog, DeduceArgs, Pins};
use super::report::Report;
use super::CmdOutput;
use crate::algebra::GradedAlgebra;
use crate::catalog::{build_builtin, load_record, parse_record, record_to_toml, ManifoldRecord};
use crate::chern::{chern_numbers, pontrjagin_classes};
use crate::deduce::{
    bb_decompositions, catalog_quantity, cubic_partner_solve, cubic_partner_solve_with,
    cy_hk_distinction, divisor_c3_compare, hk_elimination_system, hk_partner_pipeline, replay,
    DeductionTrace, Family, Outcome,
};
use crate::error::Result;
use crate::exact::{int, rational_roots, Rational};
use crate::genus::{hrr_chi, l_genus_signature};
use crate::hodge::{signature_from_hodge, SignatureEvaluator};
use crate::schubert::SchubertRing;

/// One pinned value: passes when the computed string equals the expected one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub section: String,
    pub name: String,
    pub expected: String,
    pub actual: String,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.expected == self.actual
    }
}

struct Sheet {
    section: String,
    checks: Vec<Check>,
}

impl Sheet {
    fn section(&mut self, s: &str) {
        self.section = s.to_string();
    }

    fn pin(&mut self, name: impl Into<String>, expected: impl ToString, actual: impl ToString) {
        self.checks.push(Check {
            section: self.section.clone(),
            name: name.into(),
            expected: expected.to_string(),
            actual: actual.to_string(),
        });
    }

    fn pin_r<T: ToString>(
        &mut self,
        name: impl Into<String>,
        expected: impl ToString,
        actual: Result<T>,
    ) {
        let actual = actual
            .map(|v| v.to_string())
            .unwrap_or_else(|e| format!("error: {e}"));
        self.pin(name, expected, actual);
    }
}

fn quantity(trace: &DeductionTrace, name: &str) -> Option<Rational> {
    trace
        .steps
        .iter()
        .flat_map(|s| &s.values)
        .find(|q| q.name == name)
        .map(|q| q.value.clone())
}

fn q_or(trace: &Result<DeductionTrace>, name: &str) -> String {
    match trace {
        Ok(t) => quantity(t, name)
            .map(|v| v.to_string())
            .unwrap_or_else(|| format!("missing `{name}`")),
        Err(e) => format!("error: {e}"),
    }
}

fn solutions(t: &Result<DeductionTrace>) -> String {
    match t.as_ref().map(|t| &t.verdict.outcome) {
        Ok(Outcome::PartnerSolutions { solutions }) => {
            let v: Vec<String> = solutions
                .iter()
                .map(|(r, a)| format!("({r},{a})"))
                .collect();
            format!("{{{}}}", v.join(", "))
        }
        Ok(o) => format!("unexpected outcome {o:?}"),
        Err(e) => format!("error: {e}"),
    }
}

fn class(r: &ManifoldRecord, i: usize) -> String {
    r.model.ring.format(&r.model.chern_class(i))
}

fn replay_status(t: &Result<DeductionTrace>, r: Option<&ManifoldRecord>) -> String {
    match t {
        Ok(t) => match replay(t, r) {
            Ok(_) => "ok".into(),
            Err(e) => e.join("; "),
        },
        Err(e) => format!("error: {e}"),
    }
}

/// Every value this crate pins, recomputed.
pub fn pinned_checks(catalog: &Catalog, pins: &Pins) -> Vec<Check> {
    let mut s = Sheet {
        section: String::new(),
        checks: Vec::new(),
    };
    let rec = |name: &str| catalog.resolve(name);

    s.section("cubic fourfold");
    match rec("cubic4") {
        Ok(x) => {
            s.pin("c1", "3h", class(&x, 1));
            s.pin("c2", "6h^2", class(&x, 2));
            s.pin("c3", "2h^3", class(&x, 3));
            s.pin_r("c4", 27, catalog_quantity(&x, "c4"));
            s.pin_r("b4", 23, catalog_quantity(&x, "b4"));
            s.pin_r(
                "p1",
                "3h^2",
                pontrjagin_classes(&x.model).map(|p| x.model.ring.format(&p[0])),
            );
            s.pin_r("p2", 126, catalog_quantity(&x, "p2"));
            s.pin_r("signature (hodge-index)", 19, catalog_quantity(&x, "sigma"));
            s.pin_r("signature (L-genus)", 19, l_genus_signature(&x.model));
            s.pin_r(
                "signature (legacy evaluator)",
                23,
                catalog_quantity(&x, "sigma_legacy"),
            );
            s.pin(
                "quoted signature (documented discrepancy)",
                23,
                x.annotations
                    .quoted_signature
                    .map(|q| q.to_string())
                    .unwrap_or_else(|| "absent".into()),
            );
            let t = cubic_partner_solve(&x);
            s.pin("partner solutions (r,a)", "{(3,0)}", solutions(&t));
            s.pin("5L·c3 at r = 5", -258, q_or(&t, "5L·c3[r=5]"));
            s.pin("a + 1 at r = 3", 1, q_or(&t, "a+1[r=3]"));
            s.pin("partner trace replay", "ok", replay_status(&t, Some(&x)));
            let legacy = cubic_partner_solve_with(&x, SignatureEvaluator::Legacy);
            s.pin(
                "partner solutions, legacy evaluator",
                "{(3,0)}",
                solutions(&legacy),
            );
        }
        Err(e) => s.pin("record", "cubic4", format!("error: {e}")),
    }

    s.section("divisor comparison");
    let mut agree = 0;
    for d in 1..=50i64 {
        let ok = divisor_c3_compare(Family::Cubic, d).is_ok_and(|t| {
            let v = quantity(&t, "c3(V)");
            let w = quantity(&t, "c3(W)");
            v == Some(int(3 * d * (2 - 6 * d + 3 * d * d - d * d * d)))
                && w == Some(int(3 * d * (-2 - 6 * d - 3 * d * d - d * d * d)))
        });
        agree += ok as i64;
    }
    s.pin(
        "cubic c3(V), c3(W) closed forms, d = 1..50",
        "50/50",
        format!("{agree}/50"),
    );
    let dp5 = divisor_c3_compare(Family::Dp5, 2).map(|t| t.verdict.summary);
    s.pin_r(
        "dp5 verdict at d = 2",
        "(d-3)d^2 ≠ (d+3)d^2: L·c2(V) = 24, L·c2(W) = 144; c3(V) = -16, c3(W) = -320",
        dp5,
    );

    s.section("del Pezzo fourfold");
    let sigma6 = SchubertRing::new(2, 5).map(|g| g.pow(&g.sigma(&[1]), 6).integrate());
    s.pin_r("∫σ1^6 on G(2,5)", 5, sigma6);
    match rec("dp5") {
        Ok(x) => {
            s.pin_r("c4", 6, catalog_quantity(&x, "c4"));
            s.pin_r(
                "Betti Euler number",
                6,
                x.model
                    .hodge
                    .as_ref()
                    .map_or(Ok(-1), |d| crate::hodge::betti_euler(d).map(|(_, e)| e)),
            );
            let t = crate::deduce::general_type_index(&x).map(|t| t.verdict.summary);
            s.pin_r(
                "general-type verdict",
                "any general-type partner has K_Y = 3·L_Y",
                t,
            );
        }
        Err(e) => s.pin("record", "dp5", format!("error: {e}")),
    }

    s.section("Hilbert square of a K3 surface");
    match rec("hilb2_k3") {
        Ok(x) => {
            s.pin_r("euler", 324, catalog_quantity(&x, "euler"));
            s.pin_r("b2", 23, catalog_quantity(&x, "b2"));
            s.pin_r("b4", 276, catalog_quantity(&x, "b4"));
            s.pin_r("c2^2", 828, catalog_quantity(&x, "c2^2"));
            s.pin_r("chi(O)", 3, hrr_chi(&x.model, 0));
            s.pin_r(
                "dim Sym^2 H^2",
                276,
                catalog_quantity(&x, "b2").map(|b| b.clone() * (b + int(1)) / int(2)),
            );
            let t = hk_partner_pipeline(&x);
            let roots = t.as_ref().map_err(|e| e.to_string()).and_then(|t| {
                let get = |n: &str| quantity(t, n).ok_or_else(|| format!("missing `{n}`"));
                let sigma = catalog_quantity(&x, "sigma").map_err(|e| e.to_string())?;
                let rs = rational_roots(&[get("s0")? - sigma, get("s1")?, get("s2")?])
                    .map_err(|e| e.to_string())?;
                let v: Vec<String> = rs.iter().map(|r| r.to_string()).collect();
                Ok(format!("{{{}}}", v.join(", ")))
            });
            s.pin(
                "Hodge solver roots",
                "{1, 19/2}",
                roots.unwrap_or_else(|e| format!("error: {e}")),
            );
            s.pin("h^{2,0} of a partner", 1, q_or(&t, "a"));
            let rel = hk_elimination_system(&x).map(|sys| {
                let sol = sys.solve();
                let v: Vec<String> = sol.relations().iter().map(|r| r.to_string()).collect();
                v.join("; ")
            });
            s.pin_r("elimination relation", "c1^4 - 4 c1^2c2 = 0", rel);
            s.pin(
                "Miyaoka defect (3c2 - c1^2)c1^2/c1^4",
                "-1/4",
                q_or(&t, "(3c2 - c1^2)c1^2/c1^4"),
            );
            let nu = match &t {
                Ok(t) => t.verdict.summary.clone(),
                Err(e) => format!("error: {e}"),
            };
            s.pin("ν verdict", "ν ∈ {0,2}", nu);
            s.pin("pipeline replay", "ok", replay_status(&t, Some(&x)));
        }
        Err(e) => s.pin("record", "hilb2_k3", format!("error: {e}")),
    }

    s.section("signature cross-check");
    for (name, want) in [
        ("k3", -16),
        ("hilb2_k3", 156),
        ("dp5", 2),
        ("quadric4", 2),
        ("cubic4", 19),
    ] {
        match rec(name) {
            Ok(x) => {
                let hodge = x
                    .model
                    .hodge
                    .as_ref()
                    .map_or(Ok(i64::MIN), signature_from_hodge);
                s.pin_r(format!("{name}: Hodge index"), want, hodge);
                s.pin_r(
                    format!("{name}: L-genus"),
                    want,
                    l_genus_signature(&x.model),
                );
            }
            Err(e) => s.pin(name, want, format!("error: {e}")),
        }
    }

    s.section("Beauville-Bogomolov shapes");
    let shapes = |dim: u32, chi: i64| {
        let v: Vec<String> = bb_decompositions(dim, chi)
            .iter()
            .map(|d| d.to_string())
            .collect();
        format!("{{{}}}", v.join(", "))
    };
    s.pin("dim 4, χ = 0", "{}", shapes(4, 0));
    s.pin("dim 4, χ = 3", "{HK(4)}", shapes(4, 3));
    s.pin("dim 6, χ = 0", "{CY(3)×CY(3)}", shapes(6, 0));
    for n in [2u32, 3] {
        let has = bb_decompositions(2 * n, 2)
            .iter()
            .any(|d| d.to_string() == format!("CY({})", 2 * n));
        s.pin(
            format!("dim {}, χ = 2 contains CY({})", 2 * n, 2 * n),
            true,
            has,
        );
    }

    s.section("Calabi-Yau versus hyperkähler");
    for n in 2..=6i64 {
        let w = cy_hk_distinction(n).map(|t| match t.verdict.outcome {
            Outcome::ChiWitness { cy, hk } => format!("({cy}, {hk})"),
            o => format!("{o:?}"),
        });
        s.pin_r(
            format!("n = {n}: χ(O) of CY and HK"),
            format!("(2, {})", n + 1),
            w,
        );
    }

    s.section("surface lattices");
    let lat = |n: &str| rec(n).and_then(|r| lattice_of(&r));
    s.pin_r("k3", "(22, -16, even)", lat("k3"));
    s.pin_r(
        "kodaira_w_surface",
        "(22, -16, even)",
        lat("kodaira_w_surface"),
    );
    s.pin_r("pn(2)", "(1, 1, odd)", lat("pn(2)"));
    let eq = |a: &str, b: &str| -> Result<bool> { Ok(lat(a)? == lat(b)?) };
    s.pin_r(
        "k3 ≅ kodaira_w_surface",
        true,
        eq("k3", "kodaira_w_surface"),
    );
    s.pin_r("k3 ≅ pn(2)", false, eq("k3", "pn(2)"));

    s.section("deduction verdicts");
    for (p, key, want) in pins.iter() {
        let args = match p {
            super::Pipeline::Bb => {
                let mut it = key
                    .split(' ')
                    .filter_map(|kv| kv.split_once('='))
                    .map(|(_, v)| v.to_string());
                DeduceArgs {
                    dim: it.next().and_then(|v| v.parse().ok()),
                    chi: it.next().and_then(|v| v.parse().ok()),
                    ..Default::default()
                }
            }
            super::Pipeline::DivisorC3 => {
                let (fam, d) = key.split_once(" d=").unwrap_or((key, "1"));
                DeduceArgs {
                    family: Some(fam.to_string()),
                    d: d.parse().ok(),
                    ..Default::default()
                }
            }
            super::Pipeline::CyHk => DeduceArgs {
                n: key.strip_prefix("n=").and_then(|v| v.parse().ok()),
                ..Default::default()
            },
            _ => DeduceArgs {
                target: Some(key.to_string()),
                ..Default::default()
            },
        };
        let name = format!("{} {key}", p.name());
        match run_pipeline(catalog, p, &args) {
            Ok((t, r, _)) => {
                let replayed = replay(&t, r.as_ref());
                let actual = match replayed {
                    Ok(_) => t.verdict.summary.clone(),
                    Err(e) => format!("replay failed: {}", e.join("; ")),
                };
                s.pin(name, want, actual);
            }
            Err(e) => s.pin(name, want, format!("error: {e}")),
        }
    }

    s.section("catalog");
    for name in [
        "cubic4",
        "quadric4",
        "pn(1)",
        "pn(2)",
        "pn(4)",
        "dp5",
        "k3",
        "hilb2_k3",
        "kodaira_w_surface",
    ] {
        let rt = build_builtin(name).and_then(|r| {
            let back = parse_record(&record_to_toml(&r)?, name)?;
            Ok(if back == r {
                "ok".to_string()
            } else {
                "changed on round trip".to_string()
            })
        });
        s.pin_r(format!("{name}: file round trip"), "ok", rt);
    }
    match catalog.files() {
        Ok(files) => {
            for f in files {
                let res = load_record(&f).map(|r| {
                    let integral = chern_numbers(&r.model)
                        .is_ok_and(|c| c.iter().all(|(_, v)| crate::exact::is_integer(v)));
                    if integral {
                        "ok".to_string()
                    } else {
                        "non-integral Chern numbers".to_string()
                    }
                });
                s.pin_r(format!("catalog file {}", f.display()), "ok", res);
            }
        }
        Err(e) => s.pin("catalog directory", "ok", format!("error: {e}")),
    }
    s.checks
}

/// The regression document: one row per pinned value; exit 1 on any failure.
pub fn cmd_report_all(catalog: &Catalog, pins: &Pins) -> CmdOutput {
    let checks = pinned_checks(catalog, pins);
    let failed = checks.iter().filter(|c| !c.passed()).count();
    let mut rep = Report::new("Reproduction report");
    rep.line(format!(
        "{} checks, {} passed, {} failed",
        checks.len(),
        checks.len() - failed,
        failed
    ));
    let rows = checks
        .iter()
        .map(|c| {
            vec![
                c.section.clone(),
                c.name.clone(),
                c.expected.clone(),
                c.actual.clone(),
                if c.passed() { "pass" } else { "fail" }.to_string(),
            ]
        })
        .collect();
    rep.table(
        "pinned values",
        &["section", "quantity", "expected", "actual", "status"],
        rows,
    );
    rep.verdict = Some(if failed == 0 {
        "all pass".into()
    } else {
        format!("{failed} failing")
    });
    CmdOutput {
        report: rep,
        exit: if failed == 0 { 0 } else { 1 },
    }
}
