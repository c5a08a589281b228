use super::{num, rat, var, DeductionTrace, Justification, Outcome, Step};
use crate::catalog::{KodairaDim, ManifoldRecord};
use crate::error::{Error, Result};
use crate::exact::{frac, int, is_integer, rational_roots, to_i64, LinearSystem, Rational};
use crate::genus::todd_polynomials;
use crate::hodge::{signature_linear, HodgeDiamond};

/// Hodge diamond of a fourfold with `b2`, `h^{2,0} = a` and
/// `Sym^2 H^2 ≅ H^4`.
fn sym2_diamond(b2: u64, a: u64) -> HodgeDiamond {
    let h11 = b2 - 2 * a;
    HodgeDiamond::from_half(
        4,
        &[
            ((0, 0), 1),
            ((2, 0), a),
            ((1, 1), h11),
            ((4, 0), a * (a + 1) / 2),
            ((3, 1), a * h11),
            ((2, 2), h11 * (h11 + 1) / 2 + a * a),
        ],
    )
}

/// The Chern-number system of a fourfold sharing Pontrjagin numbers, Euler
/// number and `χ(O)` with `x`, in unknowns `c1^4, c1^2c2, c2^2, c1c3, c4`
/// with `c1^4, c1^2c2` eliminated last. Rows: Euler number, `p1^2`, `p2`,
/// Riemann-Roch.
pub fn hk_elimination_system(x: &ManifoldRecord) -> Result<LinearSystem> {
    let get = |k: &str| super::catalog_quantity(x, k);
    let vars = ["c1^4", "c1^2c2", "c2^2", "c1c3", "c4"];
    let mut sys = LinearSystem::new(vars).with_targets(["c1^4", "c1^2c2"])?;
    sys.add_equation(&[("c4", int(1))], get("euler")?)?;
    // p1 = -c1^2 + 2c2, so p1^2 = c1^4 - 4c1^2c2 + 4c2^2.
    sys.add_equation(
        &[("c1^4", int(1)), ("c1^2c2", int(-4)), ("c2^2", int(4))],
        get("p1^2")?,
    )?;
    // p2 = c2^2 - 2c1c3 + 2c4.
    sys.add_equation(
        &[("c2^2", int(1)), ("c1c3", int(-2)), ("c4", int(2))],
        get("p2")?,
    )?;
    let td = todd_polynomials(4)?;
    let mut terms: Vec<(String, Rational)> = Vec::new();
    for (mono, c) in td.degree(4).terms() {
        terms.push((super::label_of(mono)?, c.clone()));
    }
    let borrowed: Vec<(&str, Rational)> =
        terms.iter().map(|(l, c)| (l.as_str(), c.clone())).collect();
    sys.add_equation(&borrowed, get("chi(0)")?)?;
    Ok(sys)
}

/// Gate for the nefness argument on a fourfold: `κ ≥ 0`, `K` 2-divisible,
/// `∫E^4 ≥ 0` for all divisors, `b3 = 0`.
pub fn nef_hypotheses_check(x: &ManifoldRecord) -> Result<bool> {
    let a = &x.annotations;
    let missing = |what: &str| Error::MissingData(format!("{}: {what}", x.name()));
    let kappa_ok = match a.kappa {
        Some(KodairaDim::NegInfinity) => false,
        Some(KodairaDim::Value(_)) => true,
        None => {
            let d = x
                .model
                .hodge
                .as_ref()
                .ok_or_else(|| missing("Kodaira dimension"))?;
            d.get(d.n(), 0) >= 1
        }
    };
    let two_div = a
        .k_two_divisible
        .ok_or_else(|| missing("2-divisibility of K"))?;
    let quartic = a
        .quartic_nonnegative
        .ok_or_else(|| missing("sign of quartic form"))?;
    let b3 = x.b3().ok_or_else(|| missing("b3"))?;
    Ok(kappa_ok && two_div && quartic && b3 == 0)
}

/// Abstract record for a projective partner of `x` with the Hodge
/// numbers found by the pipeline: topology and annotations carried over,
/// `κ ≥ 0` read from `h^{4,0}`.
pub fn hk_partner_record(x: &ManifoldRecord) -> Result<ManifoldRecord> {
    let b2 = x
        .betti_number(2)
        .ok_or_else(|| Error::MissingData(format!("{}: b2", x.name())))?;
    let mut model = x.model.clone();
    model.name = format!("{}-partner", x.name());
    model.tags.clear();
    model.hodge = Some(sym2_diamond(b2, 1));
    let mut r = ManifoldRecord::new(model).note(
        "model",
        "topology of the source; Chern classes are not those of the partner",
    );
    r.annotations.simply_connected = x.annotations.simply_connected;
    r.annotations.k_two_divisible = x.annotations.k_two_divisible;
    r.annotations.quartic_nonnegative = x.annotations.quartic_nonnegative;
    r.annotations.sym2_iso = x.annotations.sym2_iso;
    r.annotations.b3 = x.b3();
    Ok(r)
}

/// Hodge numbers, Chern relation, Kodaira dimension and numerical
/// dimension of a projective fourfold homeomorphic to a hyperkähler
/// Hilbert square.
pub fn hk_partner_pipeline(x: &ManifoldRecord) -> Result<DeductionTrace> {
    let m = &x.model;
    let need = |what: &str| Error::MissingData(format!("{}: {what}", x.name()));
    if m.dim() != 4 {
        return Err(Error::Hypothesis(format!("{} is not a fourfold", x.name())));
    }
    if m.fujiki.is_none() {
        return Err(need("Fujiki constant"));
    }
    if x.annotations.sym2_iso != Some(true) {
        return Err(need("Sym^2 H^2 → H^4 isomorphism"));
    }
    let mut t = DeductionTrace::new("Hyperkähler partner pipeline", x.name());
    let b2 = t.input(x, "b2")?;
    let b4 = t.input(x, "b4")?;
    let sigma = t.input(x, "sigma")?;
    let sym2 = b2.clone() * (b2.clone() + int(1)) / int(2);
    t.push(
        Step::new(
            Justification::HodgeSymmetry,
            "cup product Sym^2 H^2 → H^4 is an isomorphism",
        )
        .derived(
            "dim Sym^2 H^2",
            sym2.clone(),
            var("b2") * (var("b2") + num(1)) / num(2),
        )
        .derived(
            "b4 - dim Sym^2 H^2",
            b4 - sym2,
            var("b4") - var("dim Sym^2 H^2"),
        ),
    );

    // (ii) Signature as a quadratic in a = h^{2,0}(Y).
    let b2u = to_i64(&b2).ok_or_else(|| need("integral b2"))? as u64;
    let s: Vec<i64> = (0..3)
        .map(|a| signature_linear(&sym2_diamond(b2u, a)))
        .collect();
    let s2 = frac(s[2] - 2 * s[1] + s[0], 2);
    let s1 = int(s[1] - s[0]) - s2.clone();
    let s0 = int(s[0]);
    let roots = rational_roots(&[s0.clone() - sigma.clone(), s1.clone(), s2.clone()])?;
    let admissible: Vec<Rational> = roots
        .iter()
        .filter(|r| is_integer(r) && **r >= int(0) && int(2) * *r <= b2)
        .cloned()
        .collect();
    let [a] = admissible.as_slice() else {
        return Err(Error::InconsistentModel(format!(
            "h^{{2,0}} candidates {admissible:?}"
        )));
    };
    let fmt_roots = roots
        .iter()
        .map(|r| r.to_string())
        .collect::<Vec<_>>()
        .join(", ");
    let mut step = Step::new(
        Justification::HodgeSymmetry,
        format!(
            "h^{{2,0}} = a, h^{{1,1}} = b2 - 2a, h^{{4,0}} = a(a+1)/2, h^{{3,1}} = a(b2 - 2a), h^{{2,2}} = (b2-2a)(b2-2a+1)/2 + a^2; σ(Y) = {s2}a^2 {} {}a + {s0} = {sigma} has roots {{{fmt_roots}}}, so a = {a}",
            if s1 < int(0) { "-" } else { "+" },
            if s1 < int(0) { -s1.clone() } else { s1.clone() }
        ),
    )
    .observed("s2", s2.clone())
    .observed("s1", s1.clone())
    .observed("s0", s0.clone());
    for (i, r) in roots.iter().enumerate() {
        step = step.derived(
            format!("σ(Y)[root {}] - σ", i + 1),
            int(0),
            var("s2") * rat(r.clone()).pow(2) + var("s1") * rat(r.clone()) + var("s0")
                - var("sigma"),
        );
    }
    step = step.observed("a", a.clone());
    t.push(step);

    // (vi) h^0(K_Y) = h^{4,0}(Y).
    let h40 = a.clone() * (a.clone() + int(1)) / int(2);
    t.push(
        Step::new(
            Justification::SerreDuality,
            "h^0(K_Y) = h^{4,0}(Y), so κ(Y) ≥ 0",
        )
        .derived(
            "h0(K_Y)",
            h40.clone(),
            var("a") * (var("a") + num(1)) / num(2),
        ),
    );

    // (iii) Elimination.
    for k in ["euler", "p1^2", "p2", "chi(0)", "c2^2"] {
        t.input(x, k)?;
    }
    let sys = hk_elimination_system(x)?;
    let rel = sys
        .solve()
        .relations()
        .first()
        .cloned()
        .ok_or_else(|| Error::InconsistentModel("elimination left no relation".into()))?;
    let mut partial = LinearSystem::new(sys.variables().to_vec()).with_targets(sys.targets())?;
    for (row, c) in &sys.rows()[..3] {
        partial.add_row(row.clone(), c.clone())?;
    }
    let psol = partial.solve();
    let (rr_row, rr_rhs) = sys.rows()[3].clone();
    let mut residual = vec![int(0); 2];
    let mut rhs = rr_rhs.clone();
    for (i, v) in sys.variables().iter().enumerate() {
        match psol.pivot(v) {
            Some(p) => {
                rhs -= rr_row[i].clone() * &p.constant;
                for (fv, fc) in &p.terms {
                    let j = if fv == "c1^4" { 0 } else { 1 };
                    residual[j] += rr_row[i].clone() * fc;
                }
            }
            None => residual[if v == "c1^4" { 0 } else { 1 }] += rr_row[i].clone(),
        }
    }
    let lead = residual[0].clone();
    t.push(
        Step::new(
            Justification::PontrjaginInvariance,
            format!(
                "c4, p1^2, p2 agree with X; substituting into Riemann-Roch gives {} = {lead}·({}) + {}, hence {rel}",
                rr_rhs,
                {
                    let k = residual[1].clone() / &lead;
                    match to_i64(&k) {
                        Some(k) => var("c1^4").plus_scaled(k, var("c1^2c2")),
                        None => var("c1^4") + rat(k) * var("c1^2c2"),
                    }
                },
                rr_rhs.clone() - &rhs
            ),
        )
        .derived("residual coefficient", lead, rat(frac(-1, 720)) * rat(frac(15, 8)))
        .derived("residual constant", rr_rhs.clone() - rhs, var("chi(0)"))
        .observed("relation c1^2c2 coefficient", rel.coeff("c1^2c2"))
        .observed("relation constant", rel.constant.clone()),
    );

    // (iv) Miyaoka.
    let partner = hk_partner_record(x)?;
    if !nef_hypotheses_check(&partner)? {
        return Err(Error::Hypothesis(format!(
            "{}: nefness hypotheses fail",
            partner.name()
        )));
    }
    let ratio = -int(1) / rel.coeff("c1^2c2");
    let miyaoka = int(3) * ratio.clone() - int(1);
    t.push(
        Step::new(
            Justification::Miyaoka,
            "κ ≥ 0, K 2-divisible, ∫E^4 ≥ 0 and b3 = 0 make K_Y nef; then (3c2 - c1^2)c1^2 ≥ 0, but the relation gives (3c2 - c1^2)c1^2 = -c1^4/4 < 0 when c1^4 > 0, so Y is not of general type",
        )
        .derived("c1^2c2/c1^4", ratio, -num(1) / var("relation c1^2c2 coefficient"))
        .derived("(3c2 - c1^2)c1^2/c1^4", miyaoka, num(3) * var("c1^2c2/c1^4") - num(1)),
    );

    // (v) Numerical dimension.
    t.input(x, "fujiki")?;
    t.push(
        Step::new(
            Justification::Fujiki,
            "K nef, not big: K^4 = 0 = c·q(K)^2, so q(K) = 0 and K^3 = 0, hence ν ≤ 2; ν ≤ 1 gives K^2 = 0 and K = 0 by injectivity of Sym^2 H^2",
        )
        .derived("q(K)^2", int(0), num(0) / var("fujiki")),
    );
    Ok(t.finish(Outcome::NuSet { values: vec![0, 2] }, "ν ∈ {0,2}"))
}

/// Calabi-Yau and hyperkähler `2n`-folds are never homeomorphic
/// preserving orientation.
pub fn cy_hk_distinction(n: i64) -> Result<DeductionTrace> {
    if n < 2 {
        return Err(Error::NotApplicable(format!(
            "n = {n}: in dimension {} both classes are K3 surfaces",
            2 * n
        )));
    }
    let mut t = DeductionTrace::new(
        "Calabi-Yau versus hyperkähler",
        &format!("dimension {}", 2 * n),
    );
    t.parameter("n", n);
    let cy = 2;
    let hk = n + 1;
    t.push(Step::new(
        Justification::SwInvariance,
        "both have K = 0, so w2 = 0 and χ(O) is an oriented homotopy invariant",
    ));
    t.push(
        Step::new(
            Justification::HodgeSymmetry,
            "χ(O) = Σ (-1)^p h^{p,0}: h^{p,0} = 1 for p ∈ {0, 2n} on a Calabi-Yau, h^{2k,0} = 1 for 0 ≤ k ≤ n on a hyperkähler",
        )
        .derived("χ(O_CY)", int(cy), num(1) + num(-1).pow(2 * n as u32))
        .derived("χ(O_HK)", int(hk), var("n") + num(1)),
    );
    Ok(t.finish(
        Outcome::ChiWitness { cy, hk },
        format!(
            "CY and HK {}-folds are never o-homeomorphic: χ(O) = {cy} vs {hk}",
            2 * n
        ),
    ))
}
