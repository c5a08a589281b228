use crate::algebra::GradedAlgebra;
use crate::chern::{
    complete_intersection, grassmannian_complete_intersection, projective_space, Fujiki,
    ManifoldModel, Ring, RingClass, Tag,
};
use crate::error::{Error, Result};
use crate::exact::{int, to_i64, PolyRing};
use crate::genus::hrr_chi;
use crate::hodge::{betti_euler, HodgeDiamond};

use super::{KodairaDim, ManifoldRecord};

/// Names accepted by [`build_builtin`]; `pn(k)` stands for any `k ≥ 1`.
pub fn builtin_names() -> Vec<&'static str> {
    vec![
        "cubic4",
        "quadric4",
        "pn(k)",
        "dp5",
        "k3",
        "hilb2_k3",
        "kodaira_w_surface",
    ]
}

/// Diamond with `h^{p,p} = 1` off the middle and the given middle row
/// `h^{n,0}, h^{n-1,1}, ..` (the first half).
pub fn lefschetz_diamond(n: usize, middle: &[u64]) -> HodgeDiamond {
    let mut entries: Vec<((usize, usize), u64)> = (0..=n)
        .filter(|p| 2 * p != n)
        .map(|p| ((p, p), 1))
        .collect();
    for (i, &v) in middle.iter().enumerate() {
        entries.push(((n - i, i), v));
    }
    HodgeDiamond::from_half(n, &entries)
}

fn k3_diamond() -> HodgeDiamond {
    HodgeDiamond::from_half(2, &[((0, 0), 1), ((2, 0), 1), ((1, 1), 20)])
}

pub fn build_builtin(name: &str) -> Result<ManifoldRecord> {
    match name {
        "cubic4" => cubic4(),
        "quadric4" => quadric4(),
        "dp5" => dp5(),
        "k3" => k3(),
        "hilb2_k3" => build_hilb2(&k3()?),
        "kodaira_w_surface" => kodaira_w(),
        _ => match parse_pn(name) {
            Some(k) => pn(k),
            None => Err(Error::UnknownRecord(name.to_string())),
        },
    }
}

fn parse_pn(name: &str) -> Option<usize> {
    let k: usize = name.strip_prefix("pn(")?.strip_suffix(')')?.parse().ok()?;
    (k >= 1).then_some(k)
}

fn fano_annotations(mut r: ManifoldRecord) -> ManifoldRecord {
    r.annotations.simply_connected = Some(true);
    r.annotations.kappa = Some(KodairaDim::NegInfinity);
    r
}

fn cubic4() -> Result<ManifoldRecord> {
    let mut m = complete_intersection(5, &[3], 1)?.with_hodge(lefschetz_diamond(4, &[0, 1, 21]));
    m.name = "cubic4".into();
    let mut r = fano_annotations(ManifoldRecord::new(m))
        .note(
            "tangent_total",
            "adjunction for a cubic hypersurface in P^5",
        )
        .note(
            "hodge",
            "Lefschetz hyperplane theorem off the middle; middle row from the Jacobian ring",
        )
        .note(
            "quoted_signature",
            "quoted value 23; Hodge index and L-genus evaluations both give 19",
        );
    r.annotations.quoted_signature = Some(23);
    Ok(r)
}

fn quadric4() -> Result<ManifoldRecord> {
    let mut m = complete_intersection(5, &[2], 1)?.with_hodge(lefschetz_diamond(4, &[0, 0, 2]));
    m.name = "quadric4".into();
    Ok(fano_annotations(ManifoldRecord::new(m))
        .note(
            "tangent_total",
            "adjunction for a quadric hypersurface in P^5",
        )
        .note("hodge", "algebraic cell decomposition, two middle cells"))
}

fn pn(k: usize) -> Result<ManifoldRecord> {
    let entries: Vec<((usize, usize), u64)> = (0..=k).map(|p| ((p, p), 1)).collect();
    let m = projective_space(k)?.with_hodge(HodgeDiamond::from_half(k, &entries));
    Ok(fano_annotations(ManifoldRecord::new(m))
        .note("tangent_total", "Euler sequence")
        .note("hodge", "one cell in each even dimension"))
}

fn dp5() -> Result<ManifoldRecord> {
    let mut m =
        grassmannian_complete_intersection(2, 5, 2)?.with_hodge(lefschetz_diamond(4, &[0, 0, 2]));
    m.name = "dp5".into();
    Ok(fano_annotations(ManifoldRecord::new(m))
        .note(
            "tangent_total",
            "c(S^* ⊗ Q) on G(2,5) restricted to two Plücker hyperplane sections",
        )
        .note("hodge", "Lefschetz hyperplane theorem with b4 = 2"))
}

fn k3() -> Result<ManifoldRecord> {
    let ring = Ring::numerical(&[("c2", 2)], 2, &[("c2", int(24))], None)?;
    let vars = PolyRing::new(vec!["c2".into()], vec![2], 2);
    let tangent = RingClass::Poly(vars.one().add(&vars.var(0)));
    let mut m = ManifoldModel::new("k3", ring, tangent)?
        .with_hodge(k3_diamond())
        .with_tags([Tag::KTrivial, Tag::Hyperkahler, Tag::CalabiYau]);
    m.fujiki = Some(Fujiki {
        constant: int(1),
        form: "intersection form on H^2".into(),
    });
    let mut r = ManifoldRecord::new(m)
        .note("tangent_total", "c1 = 0 and Euler number 24")
        .note("hodge", "h^{2,0} = 1, b2 = 22");
    r.annotations.simply_connected = Some(true);
    r.annotations.kappa = Some(KodairaDim::Value(0));
    r.annotations.nu = Some(0);
    r.annotations.k_two_divisible = Some(true);
    Ok(r)
}

fn kodaira_w() -> Result<ManifoldRecord> {
    // `k` is half the canonical class, so c1 = -2k and w2 = 0.
    let ring = Ring::numerical(
        &[("k", 1), ("c2", 2)],
        2,
        &[("k^2", int(0)), ("c2", int(24))],
        None,
    )?;
    let vars = PolyRing::new(vec!["k".into(), "c2".into()], vec![1, 2], 2);
    let tangent = vars
        .one()
        .add(&vars.var(0).scale(&int(-2)))
        .add(&vars.var(1));
    let m = ManifoldModel::new("kodaira_w_surface", ring, RingClass::Poly(tangent))?
        .with_hodge(k3_diamond());
    let mut r = ManifoldRecord::new(m)
        .note(
            "tangent_total",
            "minimal elliptic surface with c1^2 = 0, c2 = 24 and 2-divisible K",
        )
        .note("hodge", "b1 = 0, p_g = 1, b2 = 22");
    r.annotations.simply_connected = Some(true);
    r.annotations.kappa = Some(KodairaDim::Value(1));
    r.annotations.k_two_divisible = Some(true);
    Ok(r)
}

/// Euler number, `b2` and `b4` of the Hilbert square of a simply
/// connected surface with Euler number `e` and second Betti number `b2`.
pub fn hilb2_topology(e: i64, b2: i64) -> (i64, i64, i64) {
    let euler = (e * e - e) / 2 + 2 * e;
    let b2x = b2 + 1;
    (euler, b2x, euler - 2 * (1 + b2x))
}

/// The Hilbert square of a K-trivial simply connected surface.
pub fn build_hilb2(surface: &ManifoldRecord) -> Result<ManifoldRecord> {
    let s = &surface.model;
    if s.dim() != 2 {
        return Err(Error::NotASurface(format!(
            "{} has dimension {}",
            s.name,
            s.dim()
        )));
    }
    if surface.annotations.simply_connected != Some(true) {
        return Err(Error::NotASurface(format!(
            "{} is not marked simply connected",
            s.name
        )));
    }
    if !s.chern_class(1).is_zero() {
        return Err(Error::NotApplicable(format!(
            "Chern data of the Hilbert square is modeled only for K-trivial surfaces, not {}",
            s.name
        )));
    }
    let d = s
        .hodge
        .as_ref()
        .ok_or_else(|| Error::MissingData(format!("{} has no Hodge diamond", s.name)))?;
    let e = to_i64(&s.euler_number()?)
        .ok_or_else(|| Error::InconsistentModel("Euler number".into()))?;
    let (b, _) = betti_euler(d)?;
    let (euler, _, _) = hilb2_topology(e, b[2] as i64);

    // Sym^2 H^2 = H^4 with H^2 = H^{2,0} + H^{1,1} + H^{0,2}.
    let a = d.get(2, 0);
    let h11 = d.get(1, 1) + 1;
    let diamond = HodgeDiamond::from_half(
        4,
        &[
            ((0, 0), 1),
            ((2, 0), a),
            ((1, 1), h11),
            ((4, 0), a * (a + 1) / 2),
            ((3, 1), a * h11),
            ((2, 2), h11 * (h11 + 1) / 2 + a * a),
        ],
    );

    // χ(O) of the square is C(χ(O_S) + 1, 2); with c1 = c3 = 0 the
    // Todd genus is (3 c2^2 - c4) / 720.
    let chi_s = hrr_chi(s, 0)?;
    let chi = &chi_s * (&chi_s + int(1)) / int(2);
    let c2sq = (int(720) * &chi + int(euler)) / int(3);
    let ring = Ring::numerical(
        &[("c2", 2), ("c4", 4)],
        4,
        &[("c2^2", c2sq), ("c4", int(euler))],
        None,
    )?;
    let vars = PolyRing::new(vec!["c2".into(), "c4".into()], vec![2, 4], 4);
    let tangent = vars.one().add(&vars.var(0)).add(&vars.var(1));
    let name = if s.name == "k3" {
        "hilb2_k3".to_string()
    } else {
        format!("hilb2({})", s.name)
    };
    let mut m = ManifoldModel::new(name, ring, RingClass::Poly(tangent))?
        .with_hodge(diamond)
        .with_tags([Tag::KTrivial, Tag::Hyperkahler]);
    m.fujiki = Some(Fujiki {
        constant: int(3),
        form: "Beauville-Bogomolov form on H^2".into(),
    });
    let mut r = ManifoldRecord::new(m)
        .note(
            "euler",
            "(e^2 - e)/2 + 2e from the symmetric square blown up along the diagonal",
        )
        .note(
            "hodge",
            "Sym^2 H^2 = H^4 applied to the Hodge decomposition of H^2",
        )
        .note(
            "tangent_total",
            "odd Chern classes vanish; c2^2 from χ(O) and c4 by Riemann-Roch",
        )
        .note("fujiki", "∫E^4 = 3 q(E)^2");
    r.annotations = super::Annotations {
        simply_connected: Some(true),
        kappa: Some(KodairaDim::Value(0)),
        nu: Some(0),
        k_two_divisible: Some(true),
        quartic_nonnegative: Some(true),
        sym2_iso: Some(true),
        quoted_signature: None,
        b3: None,
    };
    Ok(r)
}

/// Manifolds known only through a few numbers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnnotationRecord {
    pub name: &'static str,
    pub dim: usize,
    pub b2: u64,
    pub note: &'static str,
}

pub fn annotation_records() -> Vec<AnnotationRecord> {
    vec![
        AnnotationRecord {
            name: "generalized_kummer4",
            dim: 4,
            b2: 7,
            note: "hyperkähler fourfold; b2 differs from the Hilbert square of a K3 (23)",
        },
        AnnotationRecord {
            name: "hilb2_kodaira_w",
            dim: 4,
            b2: 23,
            note: "Hilbert square of the elliptic surface; only its topology is modeled",
        },
    ]
}
