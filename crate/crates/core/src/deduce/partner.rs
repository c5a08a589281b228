use std::collections::BTreeMap;
use std::str::FromStr;

use num_traits::Zero;

use super::{num, rat, var, DeductionTrace, Expr, Justification, Outcome, Step};
use crate::algebra::{invert_unit, GradedAlgebra};
use crate::catalog::{build_builtin, ManifoldRecord};
use crate::chern::{ManifoldModel, Ring, RingClass, Tag};
use crate::error::{Error, Result};
use crate::exact::{
    frac, int, is_integer, rational_roots, to_i64, LinearSystem, Poly, PolyRing, Rational,
};
use crate::genus::{hrr_chi, todd_polynomials};
use crate::hodge::{betti_euler, HodgeDiamond, SignatureEvaluator};

/// Y's Hodge numbers `h^{4,0} = a`, `h^{3,1} = b`, `h^{2,2} = c`, the
/// rest copied from X.
fn template(x: &HodgeDiamond, a: u64, b: u64, c: u64) -> HodgeDiamond {
    let mut d = x.clone();
    for (p, q, v) in [(4, 0, a), (0, 4, a), (3, 1, b), (1, 3, b), (2, 2, c)] {
        d.set(p, q, v);
    }
    d
}

/// `f(a,b,c) = f0 + fa·a + fb·b + fc·c` from values at the unit points.
fn affine(f: impl Fn(u64, u64, u64) -> i64) -> [i64; 4] {
    let f0 = f(0, 0, 0);
    [f0, f(1, 0, 0) - f0, f(0, 1, 0) - f0, f(0, 0, 1) - f0]
}

fn linear_form(f: [i64; 4]) -> String {
    let mut e = num(f[0]);
    for (k, v) in [(f[1], "a"), (f[2], "b"), (f[3], "c")] {
        e = e.plus_scaled(k, var(v));
    }
    e.to_string()
}

fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// The number `(r, a)` search of a fourfold of general type sharing the
/// rational homotopy data of `x`, under the canonical signature formula.
pub fn cubic_partner_solve(x: &ManifoldRecord) -> Result<DeductionTrace> {
    cubic_partner_solve_with(x, SignatureEvaluator::HodgeIndex)
}

pub fn cubic_partner_solve_with(
    x: &ManifoldRecord,
    ev: SignatureEvaluator,
) -> Result<DeductionTrace> {
    let m = &x.model;
    let bad = |why: &str| Error::Hypothesis(format!("{}: {why}", x.name()));
    if m.dim() != 4 || !matches!(m.ring, Ring::Projective { .. }) {
        return Err(bad(
            "needs a fourfold whose cohomology model is generated by one class",
        ));
    }
    let diamond = m.hodge.clone().ok_or_else(|| bad("no Hodge diamond"))?;
    let (betti, _) = betti_euler(&diamond)?;
    if betti[2] != 1 || betti.iter().skip(1).step_by(2).any(|&b| b != 0) {
        return Err(bad("needs b2 = 1 and vanishing odd Betti numbers"));
    }

    let mut t = DeductionTrace::new("General-type partner: (r, a) search", x.name());
    let sigma_key = match ev {
        SignatureEvaluator::HodgeIndex => "sigma",
        SignatureEvaluator::Legacy => "sigma_legacy",
    };
    let b4 = t.input(x, "b4")?;
    let sigma = t.input(x, sigma_key)?;

    // (i) Hodge numbers of Y.
    let bf = affine(|a, b, c| {
        betti_euler(&template(&diamond, a, b, c))
            .map(|(v, _)| v[4] as i64)
            .unwrap_or(0)
    });
    let sf = affine(|a, b, c| ev.eval(&template(&diamond, a, b, c)));
    let mut sys = LinearSystem::new(["b", "c", "a"]);
    sys.add_equation(
        &[("a", int(bf[1])), ("b", int(bf[2])), ("c", int(bf[3]))],
        b4.clone() - int(bf[0]),
    )?;
    sys.add_equation(
        &[("a", int(sf[1])), ("b", int(sf[2])), ("c", int(sf[3]))],
        sigma.clone() - int(sf[0]),
    )?;
    let sol = sys.solve();
    let (b_expr, c_expr) = match (sol.pivot("b"), sol.pivot("c")) {
        (Some(b), Some(c)) if b.terms.is_empty() => (b.clone(), c.clone()),
        _ => return Err(bad("Betti and signature equations do not fix h^{3,1}")),
    };
    let b_val = b_expr.constant.clone();
    let c_slope = c_expr
        .terms
        .iter()
        .find(|(v, _)| v == "a")
        .map(|(_, k)| k.clone())
        .unwrap_or_else(Rational::zero);
    // c = c0 + slope·a ≥ 0 with slope < 0 bounds a.
    if c_slope >= Rational::zero() {
        return Err(bad("h^{2,2} does not bound h^{4,0}"));
    }
    let a_max = (c_expr.constant.clone() / -c_slope.clone()).floor();
    let a_max_i = to_i64(&a_max).unwrap_or(0);
    t.push(
        Step::new(
            Justification::HodgeSymmetry,
            format!(
                "with h^{{4,0}} = a, h^{{3,1}} = b, h^{{2,2}} = c: b4 = {} and σ = {} ({} formula) give b = {}, c = {} {} {}a, so 0 ≤ a ≤ {}",
                linear_form(bf), linear_form(sf), ev.name(),
                b_val, c_expr.constant, if c_slope < Rational::zero() { "-" } else { "+" }, -c_slope.clone(), a_max
            ),
        )
        .observed("b", b_val.clone())
        .observed("c[a=0]", c_expr.constant.clone())
        .derived(
            "b4 residual",
            b4.clone() - int(bf[0]) - int(bf[2]) * &b_val - int(bf[3]) * &c_expr.constant,
            (var("b4") - num(bf[0])).plus_scaled(-bf[2], var("b")).plus_scaled(-bf[3], var("c[a=0]")),
        )
        .derived(
            "σ residual",
            sigma.clone() - int(sf[0]) - int(sf[2]) * &b_val - int(sf[3]) * &c_expr.constant,
            (var(sigma_key) - num(sf[0])).plus_scaled(-sf[2], var("b")).plus_scaled(-sf[3], var("c[a=0]")),
        ),
    );

    // (ii) Chern numbers of Y as polynomials in r.
    let deg = t.input(x, "deg")?;
    let p1h2 = t.input(x, "p1h^2")?;
    let p2 = t.input(x, "p2")?;
    let euler = t.input(x, "euler")?;
    let lambda = p1h2.clone() / &deg;
    let rr = PolyRing::new(vec!["r".into()], vec![1], 4);
    let r = rr.var(0);
    let r2 = rr.mul(&r, &r);
    let q = rr.add(&r2, &rr.constant(lambda.clone())).scale(&frac(1, 2));
    let mut numbers: BTreeMap<String, Poly> = BTreeMap::new();
    numbers.insert("c1^4".into(), rr.mul(&r2, &r2).scale(&deg));
    numbers.insert("c1^2c2".into(), rr.mul(&r2, &q).scale(&deg));
    let c2sq = rr.mul(&q, &q).scale(&deg);
    let c1c3 = c2sq
        .add(&rr.constant(int(2) * &euler - &p2))
        .scale(&frac(1, 2));
    numbers.insert("c2^2".into(), c2sq);
    numbers.insert("c1c3".into(), c1c3.clone());
    numbers.insert("c4".into(), rr.constant(euler.clone()));
    t.push(
        Step::new(
            Justification::PontrjaginInvariance,
            format!(
                "K_Y = rL, L^4 = {deg}, p1(Y) = {lambda}L^2, p2(Y) = {p2}, c4(Y) = {euler}: c2(Y) = ({})L^2 and {}",
                rr.format(&q),
                numbers.iter().map(|(k, v)| format!("{k} = {}", rr.format(v))).collect::<Vec<_>>().join(", ")
            ),
        )
        .derived("λ", lambda.clone(), var("p1h^2") / var("deg")),
    );

    // (iii) Riemann-Roch: a + 1 = χ(O_Y) as a polynomial in r.
    let td = todd_polynomials(4)?;
    let mut chi = Poly::zero();
    for (mono, coeff) in td.degree(4).terms() {
        let label = super::label_of(mono)?;
        let n = numbers
            .get(&label)
            .ok_or_else(|| Error::InconsistentModel(format!("no Chern number {label}")))?;
        chi = chi.add(&n.scale(coeff));
    }
    let closed = |rv: i64| -> Expr {
        // ((15 deg / 8)(r^2 + λ)^2 - deg λ^2 - p2 / 2) / 720
        let lam = var("p1h^2") / var("deg");
        (rat(frac(15, 8)) * var("deg") * (num(rv).pow(2) + lam.clone()).pow(2)
            - var("deg") * lam.pow(2)
            - var("p2") / num(2))
            / num(720)
    };
    t.push(
        Step::new(
            Justification::Rr,
            format!("a + 1 = χ(O_Y) = td4(Y) = {}", rr.format(&chi)),
        )
        .derived("td4 constant term", chi.eval(&[int(0)]), closed(0)),
    );

    // (iv) Search.
    let bound = isqrt(16 * to_i64(&b4).unwrap_or(0).max(0) as u64) as i64;
    let mut survivors = Vec::new();
    let mut rejected: Vec<String> = Vec::new();
    let mut search = Step::new(
        Justification::Integrality,
        format!("r ↦ -r leaves every number unchanged; search 0 ≤ r ≤ {bound} = ⌊4√b4⌋ for integral a + 1, integral L^2·c2 and 0 ≤ a ≤ {a_max}"),
    );
    for rv in 0..=bound {
        let ap1 = chi.eval(&[int(rv)]);
        let l2c2 = deg.clone() * (int(rv * rv) + &lambda) / int(2);
        search = search.derived(format!("a+1[r={rv}]"), ap1.clone(), closed(rv));
        let reason = if !is_integer(&ap1) {
            Some("a + 1 not integral")
        } else if !is_integer(&l2c2) {
            Some("L^2·c2 not integral")
        } else if ap1 < int(1) || ap1 > int(a_max_i + 1) {
            Some("a out of range")
        } else {
            None
        };
        match reason {
            Some(why) => rejected.push(format!("r = {rv}: {why}")),
            None => survivors.push((rv, to_i64(&ap1).unwrap_or(0) - 1)),
        }
    }
    search.claim = format!(
        "{}; survivors {}",
        search.claim,
        survivors
            .iter()
            .map(|(r, a)| format!("(r,a)=({r},{a})"))
            .collect::<Vec<_>>()
            .join(", ")
    );
    t.push(search);

    // (v) Divisibility of L·c3 = -c1c3 / r.
    let mut solutions = Vec::new();
    for &(rv, a) in &survivors {
        let c1c3v = c1c3.eval(&[int(rv)]);
        let name = format!("{rv}L·c3[r={rv}]");
        let expr = -((var("deg") * ((num(rv).pow(2) + var("p1h^2") / var("deg")) / num(2)).pow(2)
            + num(2) * var("euler")
            - var("p2"))
            / num(2));
        let rlc3 = -c1c3v.clone();
        let divisible = rv != 0 && is_integer(&(rlc3.clone() / int(rv)));
        t.push(
            Step::new(
                Justification::Divisibility,
                if divisible {
                    format!("r = {rv}: {rv}L·c3 = {rlc3} is divisible by {rv}, a = {a}")
                } else {
                    format!("r = {rv}: {rv}L·c3 = {rlc3} is not divisible by {rv}, rejected")
                },
            )
            .derived(name, rlc3, expr),
        );
        if divisible {
            solutions.push((rv, a));
        }
    }
    let summary = match solutions.as_slice() {
        [(r, a)] => format!(
            "(r,a)=({r},{a}); h^{{4,0}} = {a}, h^{{3,1}} = {b_val}, h^{{2,2}} = {}",
            c_expr.constant.clone() + c_slope.clone() * int(*a)
        ),
        [] => "no (r,a) survives".to_string(),
        many => format!(
            "(r,a) ∈ {{{}}}",
            many.iter()
                .map(|(r, a)| format!("({r},{a})"))
                .collect::<Vec<_>>()
                .join(", ")
        ),
    };
    Ok(t.finish(Outcome::PartnerSolutions { solutions }, summary))
}

/// Which Fano fourfold the divisor comparison runs on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Cubic,
    Dp5,
}

impl Family {
    pub fn record_name(self) -> &'static str {
        match self {
            Family::Cubic => "cubic4",
            Family::Dp5 => "dp5",
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cubic" | "cubic4" => Ok(Family::Cubic),
            "dp5" => Ok(Family::Dp5),
            _ => Err(Error::UnknownRecord(format!(
                "family {s} (expected cubic or dp5)"
            ))),
        }
    }
}

/// The family's record and a cohomology model of its hypothetical
/// general-type partner: `K_Y = r L`, `L^4` and all Chern numbers equal
/// to those of X, hence `L^2·c2` equal and `L·c3` of opposite sign.
pub fn partner_model(family: Family) -> Result<(ManifoldRecord, ManifoldModel)> {
    let x = build_builtin(family.record_name())?;
    let r = x
        .model
        .index
        .ok_or_else(|| Error::MissingData("index".into()))?;
    let get = |k: &str| super::catalog_quantity(&x, k);
    let numbers = [
        ("L^4", get("h^4")?),
        ("L^2 c2", get("h^2c2")?),
        ("L c3", -get("hc3")?),
        ("c2^2", get("c2^2")?),
        ("c4", get("c4")?),
    ];
    let ring = Ring::numerical(
        &[("L", 1), ("c2", 2), ("c3", 3), ("c4", 4)],
        4,
        &numbers,
        Some("L"),
    )?;
    let vars = PolyRing::new(
        vec!["L".into(), "c2".into(), "c3".into(), "c4".into()],
        vec![1, 2, 3, 4],
        4,
    );
    let tangent = vars
        .one()
        .add(&vars.var(0).scale(&int(r)).neg())
        .add(&vars.var(1))
        .add(&vars.var(2))
        .add(&vars.var(3));
    let mut y = ManifoldModel::new(
        format!("{}-partner", x.name()),
        ring,
        RingClass::Poly(tangent),
    )?
    .with_index(-r);
    y.hodge = x.model.hodge.clone();
    y.tags.remove(&Tag::Fano);
    Ok((x, y))
}

/// `∫_V L^a c_k(V)` for a smooth `V ∈ |dL|`.
fn divisor_number(m: &ManifoldModel, d: i64, a: u32, k: usize) -> Result<Rational> {
    let ring = &m.ring;
    let l = m
        .line_generator()
        .ok_or_else(|| Error::MissingData(format!("{} has no line generator", m.name)))?;
    let dl = ring.scale(&l, &int(d));
    let normal = ring.add(&ring.one(), &dl);
    let cv = ring.mul(&m.tangent_total, &invert_unit(ring, &normal)?);
    let integrand = ring.mul(&ring.mul(&dl, &ring.pow(&l, a)), &ring.part(&cv, k));
    m.integrate(&integrand)
}

/// Compares `c3` of a divisor `V ∈ |dL|` on the family's fourfold with
/// `c3` of `W ∈ |dL|` on the general-type partner.
pub fn divisor_c3_compare(family: Family, d: i64) -> Result<DeductionTrace> {
    if d < 1 {
        return Err(Error::OutOfRange(format!("d = {d} must be positive")));
    }
    let (x, y) = partner_model(family)?;
    let mut t = DeductionTrace::new("Divisor c3 comparison", &format!("{}, d = {d}", x.name()));
    for k in [
        "index", "h^3c1", "h^2c2", "hc3", "c2^2", "c4", "p2", "p1h^2", "chi(0)",
    ] {
        t.input(&x, k)?;
    }
    let l4 = t.input(&x, "h^4")?;
    let yp = crate::chern::pontrjagin_numbers(&y)?;
    let yp1 = {
        let p = crate::chern::pontrjagin_classes(&y)?;
        let l = y
            .line_generator()
            .ok_or_else(|| Error::MissingData("L".into()))?;
        y.integrate(&y.ring.mul(&p[0], &y.ring.pow(&l, 2)))?
    };
    t.push(
        Step::new(
            Justification::PontrjaginInvariance,
            format!("partner model: c(Y) = {} with K_Y = {}L; it has the Pontrjagin numbers, Euler number and χ(O) of X", y.ring.format(&y.tangent_total), x.model.index.unwrap_or(0)),
        )
        .derived("p2(Y)", yp.get(&[2]), var("p2"))
        .derived("L^2·p1(Y)", yp1, var("p1h^2"))
        .derived("c4(Y)", y.euler_number()?, var("c4"))
        .derived("χ(O_Y)", hrr_chi(&y, 0)?, var("chi(0)")),
    );
    let dn = num(d);
    let c3v = divisor_number(&x.model, d, 0, 3)?;
    let c3w = divisor_number(&y, d, 0, 3)?;
    let lc2v = divisor_number(&x.model, d, 1, 2)?;
    let lc2w = divisor_number(&y, d, 1, 2)?;
    t.push(
        Step::new(
            Justification::Rr,
            "0 → T_V → T_X|_V → O_V(dL) → 0, so c(V) = c(X)(1 + dL)^{-1} restricted to V, and the same for W ⊂ Y",
        )
        .derived(
            "c3(V)",
            c3v.clone(),
            dn.clone() * (var("hc3") - dn.clone() * var("h^2c2") + dn.clone().pow(2) * var("h^3c1") - dn.clone().pow(3) * var("h^4")),
        )
        .derived(
            "c3(W)",
            c3w.clone(),
            dn.clone() * (-var("hc3") - dn.clone() * var("h^2c2") - dn.clone().pow(2) * var("h^3c1") - dn.clone().pow(3) * var("h^4")),
        )
        .derived("L·c2(V)", lc2v.clone(), dn.clone() * var("h^2c2") + (dn.clone() - var("index")) * dn.clone().pow(2) * var("h^4"))
        .derived("L·c2(W)", lc2w.clone(), dn.clone() * var("h^2c2") + (dn.clone() + var("index")) * dn.clone().pow(2) * var("h^4")),
    );
    match family {
        Family::Cubic => {
            let v_closed = num(3)
                * dn.clone()
                * (num(2) - num(6) * dn.clone() + num(3) * dn.clone().pow(2) - dn.clone().pow(3));
            let w_closed = num(3)
                * dn.clone()
                * (num(-2) - num(6) * dn.clone() - num(3) * dn.clone().pow(2) - dn.clone().pow(3));
            let diff = c3v.clone() - c3w.clone();
            let roots = rational_roots(&[int(2), int(0), int(3)])?;
            t.push(
                Step::new(
                    Justification::Integrality,
                    format!(
                        "c3(V) - c3(W) = 6d(2 + 3d^2); 2 + 3d^2 = 0 has {} rational roots",
                        roots.len()
                    ),
                )
                .derived("c3(V) - closed form", int(0), var("c3(V)") - v_closed)
                .derived("c3(W) - closed form", int(0), var("c3(W)") - w_closed)
                .derived(
                    "(c3(V) - c3(W))/6d",
                    diff / int(6 * d),
                    num(2) + num(3) * dn.clone().pow(2),
                ),
            );
            let summary = format!("c3(V) = {c3v} ≠ {c3w} = c3(W): equality forces 2 + 3d^2 = 0");
            Ok(t.finish(
                Outcome::Unequal {
                    witness: "2 + 3d^2 = 0".into(),
                },
                summary,
            ))
        }
        Family::Dp5 => {
            t.push(
                Step::new(
                    Justification::Integrality,
                    "with L^2·c2 equal on X and Y, L·c2(V) = L·c2(W) would force (d-3)d^2 = (d+3)d^2",
                )
                .derived("(L·c2(W) - L·c2(V))/L^4", (lc2w.clone() - lc2v.clone()) / l4, (var("L·c2(W)") - var("L·c2(V)")) / var("h^4"))
                .derived("6d^2", int(6 * d * d), (dn.clone() + num(3)) * dn.clone().pow(2) - (dn.clone() - num(3)) * dn.clone().pow(2)),
            );
            let summary = format!(
                "(d-3)d^2 ≠ (d+3)d^2: L·c2(V) = {lc2v}, L·c2(W) = {lc2w}; c3(V) = {c3v}, c3(W) = {c3w}"
            );
            Ok(t.finish(
                Outcome::Unequal {
                    witness: "(d-3)d^2 = (d+3)d^2".into(),
                },
                summary,
            ))
        }
    }
}
