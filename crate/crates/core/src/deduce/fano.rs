use super::{bb_decompositions, cubic_partner_solve, require};
use super::{num, var, DeductionTrace, Justification, Outcome, Step};
use crate::catalog::ManifoldRecord;
use crate::chern::{w2_vanishes, Tag};
use crate::error::{Error, Result};
use crate::exact::int;

fn fano_index(x: &ManifoldRecord) -> Result<i64> {
    let m = &x.model;
    match m.index {
        Some(r) if r > 0 && m.has_tag(Tag::Fano) => Ok(r),
        _ => Err(Error::Hypothesis(format!("{} is not Fano", x.name()))),
    }
}

fn betti(x: &ManifoldRecord) -> Result<Vec<u64>> {
    x.betti()
        .ok_or_else(|| Error::MissingData(format!("{} has no Hodge diamond", x.name())))
}

fn chi_key(s: i64) -> String {
    format!("chi({s})")
}

/// Whether a simply connected Fano manifold can be homeomorphic, preserving
/// orientation, to a compact Kähler manifold with `c1 = 0`.
pub fn ricci_flat_exclusion(x: &ManifoldRecord) -> Result<DeductionTrace> {
    let r = fano_index(x)?;
    require(x.annotations.simply_connected == Some(true), || {
        format!("{} is not known to be simply connected", x.name())
    })?;
    let m = &x.model;
    let n = m.dim() as i64;
    let mut t = DeductionTrace::new("Ricci-flat partner exclusion", x.name());
    let index = t.input(x, "index")?;
    let w2_zero = w2_vanishes(m)?;
    t.push(
        Step::new(
            Justification::SwInvariance,
            "a partner Y with c1(Y) = 0 has w2(Y) = 0, and w2 is a homotopy invariant, so w2(X) = c1(X) mod 2 must vanish",
        )
        .derived("c1/2h", index.clone() / int(2), var("index") / num(2))
        .observed("w2(X) vanishes (1 = yes)", if w2_zero { int(1) } else { int(0) }),
    );
    if !w2_zero {
        return Ok(t.finish(
            Outcome::Excluded {
                reason: "w2 obstruction".into(),
            },
            "no K-trivial partner: w₂ obstruction",
        ));
    }
    let key = chi_key(-r / 2);
    let chi = t.input(x, &key)?;
    t.push(
        Step::new(
            Justification::Rr,
            format!(
                "K_X = 2·({}h) and χ(Y, O_Y) = χ(X, K_X/2) by the spin index",
                -r / 2
            ),
        )
        .derived("χ(O_Y)", chi.clone(), var(&key)),
    );
    let chi_i =
        crate::exact::to_i64(&chi).ok_or_else(|| Error::InconsistentModel(format!("χ = {chi}")))?;
    let shapes = bb_decompositions(n as u32, chi_i);
    let mut step =
        Step::new(
            Justification::BbDecomposition,
            format!(
            "products of Calabi-Yau and hyperkähler factors of dimension {n} with χ(O) = {chi}: {}",
            if shapes.is_empty() {
                "none".to_string()
            } else {
                shapes.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(", ")
            }
        ),
        )
        .observed("shapes", int(shapes.len() as i64));
    let b2 = t.input(x, "b2")?;
    let survivors: Vec<_> = shapes
        .iter()
        .filter(|s| s.factors.len() < 2 || b2 >= int(2))
        .cloned()
        .collect();
    step = step.observed("shapes with b2 compatible", int(survivors.len() as i64));
    t.push(step);
    if !shapes.is_empty() {
        t.push(
            Step::new(
                Justification::BbDecomposition,
                "each positive-dimensional factor contributes to b2, so products of two or more factors need b2 ≥ 2",
            )
            .derived("b2 - 2", b2 - int(2), var("b2") - num(2)),
        );
    }
    Ok(if survivors.is_empty() {
        t.finish(
            Outcome::Excluded {
                reason: "no admissible decomposition".into(),
            },
            "excluded",
        )
    } else {
        let shapes: Vec<String> = survivors.iter().map(|s| s.to_string()).collect();
        let summary = format!("surviving shapes: {}", shapes.join(", "));
        t.finish(Outcome::Shapes { shapes }, summary)
    })
}

fn check_picard_rank_one(x: &ManifoldRecord) -> Result<Vec<u64>> {
    let b = betti(x)?;
    require(b.get(2) == Some(&1), || format!("{} has b2 ≠ 1", x.name()))?;
    Ok(b)
}

/// Fano partners of a Fano manifold with `b2 = 1` have the same index.
pub fn fano_index_match(x: &ManifoldRecord) -> Result<DeductionTrace> {
    let r = fano_index(x)?;
    check_picard_rank_one(x)?;
    let m = &x.model;
    let n = m.dim();
    let d = m
        .hodge
        .as_ref()
        .ok_or_else(|| Error::MissingData(format!("{} has no Hodge diamond", x.name())))?;
    require((1..=n).all(|q| d.get(0, q) == 0), || {
        format!("{} has H^q(O) ≠ 0 for some q > 0", x.name())
    })?;
    let mut t = DeductionTrace::new("Fano index matching", x.name());
    t.input(x, "index")?;
    t.input(x, "b2")?;
    t.push(
        Step::new(
            Justification::KodairaVanishing,
            "a Fano partner Y has H^q(O_Y) = 0 for q > 0",
        )
        .observed("χ(O_Y)", int(1)),
    );
    t.push(Step::new(
        Justification::SwInvariance,
        "c1(Y) = c1(X) + 2s·L, so r_Y = r_X + 2s; take s < 0 and r_Y ≥ 1",
    ));
    let mut eliminated = Vec::new();
    for s in -r..=-1 {
        if r + 2 * s < 1 {
            continue;
        }
        let key = chi_key(s);
        let chi = t.input(x, &key)?;
        t.push(
            Step::new(
                Justification::Rr,
                format!("s = {s}: χ(O_Y) = χ(X, {s}L_X) = {chi} ≠ 1, eliminated"),
            )
            .derived(
                format!("r_Y[{s}]"),
                int(r + 2 * s),
                var("index") - num(-2 * s),
            )
            .derived(
                format!("χ(O_Y) - χ({s})"),
                int(1) - chi.clone(),
                num(1) - var(&key),
            ),
        );
        if chi == int(1) {
            return Err(Error::Hypothesis(format!(
                "χ(X, {s}L) = 1; the index argument does not close"
            )));
        }
        eliminated.push(s);
    }
    let label = format!("c1^{n}");
    let top = t.input(x, &label)?;
    t.push(
        Step::new(
            Justification::PontrjaginInvariance,
            format!("r_Y = r_X, and c1(Y)^{n} = r^{n} L^{n} agrees with X"),
        )
        .derived(
            format!("{label}(Y)"),
            top.clone(),
            var("index").pow(n as u32) * var("deg"),
        ),
    );
    t.input(x, "deg")?;
    let summary = format!(
        "any Fano partner has r_Y = {r} and {label} = {top} (eliminated s: {})",
        if eliminated.is_empty() {
            "none".to_string()
        } else {
            eliminated
                .iter()
                .map(|s| s.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        }
    );
    Ok(t.finish(
        Outcome::IndexMatch {
            index: r,
            c1_top: top.to_string(),
        },
        summary,
    ))
}

/// The canonical class of a general-type partner of a Fano manifold with
/// `b2 = 1` is `r_X` times the ample generator.
pub fn general_type_index(x: &ManifoldRecord) -> Result<DeductionTrace> {
    let r = fano_index(x)?;
    let b = check_picard_rank_one(x)?;
    let n = x.model.dim() as i64;
    require(b.iter().skip(1).step_by(2).all(|&v| v == 0), || {
        format!("{} has odd Betti numbers", x.name())
    })?;
    let mut t = DeductionTrace::new("General-type canonical class", x.name());
    t.input(x, "index")?;
    t.input(x, "b2")?;
    let small_betti = (2..n as usize).all(|k| b[2 * k] <= 2);
    if small_betti {
        t.push(
            Step::new(
                Justification::HodgeSymmetry,
                "b_{2k} ≤ 2 for k > 1 and odd Betti numbers vanish, so h^{q,0}(Y) = 0 for q > 0",
            )
            .observed("χ(O_Y)", int(1)),
        );
    } else {
        let partner = cubic_partner_solve(x)?;
        let Outcome::PartnerSolutions { solutions } = &partner.verdict.outcome else {
            return Err(Error::Hypothesis(
                "partner Hodge solve gave no solution set".into(),
            ));
        };
        require(
            !solutions.is_empty() && solutions.iter().all(|&(_, a)| a == 0),
            || {
                format!("{} has large middle Betti numbers and h^{{4,0}} of a partner is not forced to vanish", x.name())
            },
        )?;
        t.push(
            Step::new(
                Justification::HodgeSymmetry,
                format!("middle Betti numbers exceed 2; the partner Hodge solve gives h^{{4,0}}(Y) = 0 ({})", partner.verdict.summary),
            )
            .observed("χ(O_Y)", int(1)),
        );
    }
    t.push(Step::new(
        Justification::SwInvariance,
        "c1(Y) = c1(X) + 2s·L and χ(Y, O_Y) = χ(X, sL_X); general type forces r + 2s < 0, so s < 0",
    ));
    let h1 = t.input(x, &chi_key(1))?;
    require(h1 >= int(2), || format!("h^0(X, L) = {h1} < 2"))?;
    let window = r + n;
    for m in 1..=window - r {
        let v = t.input(x, &chi_key(m))?;
        if v == int(1) {
            return Err(Error::Hypothesis(format!("h^0(X, {m}L) = 1")));
        }
    }
    t.push(
        Step::new(
            Justification::KodairaVanishing,
            format!("h^0(X, mL) = χ(X, mL) for m ≥ 0; h^0(L) ≥ 2 and sections multiply, so h^0(mL) ≠ 1 for all m > 0 (checked to m = {})", window - r),
        )
        .derived("h0(L)", h1.clone(), var("chi(1)")),
    );
    let mut hits = Vec::new();
    for s in -window..=-1 {
        let key = chi_key(s);
        let chi = t.input(x, &key)?;
        let dual = -s - r;
        let mut step = Step::new(
            if s > -r {
                Justification::KodairaVanishing
            } else {
                Justification::SerreDuality
            },
            if s > -r {
                format!("s = {s}: all cohomology of sL vanishes")
            } else {
                format!("s = {s}: χ(X, sL) = (-1)^{n} h^0(X, {dual}L)")
            },
        )
        .derived(
            format!("χ({s}) - 1"),
            chi.clone() - int(1),
            var(&key) - num(1),
        );
        if s <= -r && dual >= 0 {
            let sign = if n % 2 == 0 { 1 } else { -1 };
            let h0 = if dual == 0 {
                int(1)
            } else {
                t.input(x, &chi_key(dual))?
            };
            step = step.derived(
                format!("(-1)^n h0({dual}L)"),
                int(sign) * h0,
                num(sign)
                    * if dual == 0 {
                        num(1)
                    } else {
                        var(&chi_key(dual))
                    },
            );
        }
        t.push(step);
        if chi == int(1) {
            hits.push(s);
        }
    }
    if hits.is_empty() {
        let summary =
            format!("no general-type partner: χ(X, sL) ≠ 1 for all s < 0 (n = {n} is odd)");
        return Ok(t.finish(
            Outcome::Excluded {
                reason: "parity".into(),
            },
            summary,
        ));
    }
    require(hits == [-r], || format!("χ(X, sL) = 1 for s in {hits:?}"))?;
    t.push(
        Step::new(
            Justification::SerreDuality,
            format!("only s = -r survives, h^0(X, 0) = 1 needs (-1)^n = 1, so n = {n} is even and K_Y = -c1(X) - 2sL = rL"),
        )
        .derived("K_Y/L", int(r), -(var("index") - num(2 * r)))
        .derived("(-1)^n", int(1), num(-1).pow(n as u32)),
    );
    Ok(t.finish(
        Outcome::CanonicalMultiple { r },
        format!("any general-type partner has K_Y = {r}·L_Y"),
    ))
}
