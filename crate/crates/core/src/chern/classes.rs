use std::collections::BTreeMap;

use num_traits::Zero;

use crate::algebra::{substitute, GradedAlgebra};
use crate::error::{Error, Result};
use crate::exact::{is_integer, parity, PolyRing, Rational};
use crate::schubert::Partition;

use super::model::ManifoldModel;
use super::ring::RingClass;

/// Characteristic numbers indexed by partitions of the relevant degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharNumbers {
    prefix: char,
    values: BTreeMap<Partition, Rational>,
}

/// Chern numbers `c_λ[X]` for partitions `λ` of the dimension.
pub type ChernNumbers = CharNumbers;

impl CharNumbers {
    /// Value for the partition with the given parts (any order); zero if absent.
    pub fn get(&self, parts: &[u32]) -> Rational {
        let mut p = parts.to_vec();
        p.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(p)
            .ok()
            .and_then(|p| self.values.get(&p).cloned())
            .unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.values.iter()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `c1^2c2` style label.
    pub fn label(&self, p: &Partition) -> String {
        monomial_label(self.prefix, p)
    }

    /// `(label, value)` rows in partition order.
    pub fn rows(&self) -> Vec<(String, Rational)> {
        self.values
            .iter()
            .map(|(p, v)| (self.label(p), v.clone()))
            .collect()
    }
}

pub fn monomial_label(prefix: char, p: &Partition) -> String {
    let mut parts = p.parts().to_vec();
    parts.sort_unstable();
    let mut s = String::new();
    let mut i = 0;
    while i < parts.len() {
        let j = parts[i..].iter().take_while(|&&x| x == parts[i]).count();
        s.push_str(&format!("{prefix}{}", parts[i]));
        if j > 1 {
            s.push_str(&format!("^{j}"));
        }
        i += j;
    }
    s
}

/// Partitions of `n`, in increasing lexicographic order.
pub fn partitions(n: u32) -> Vec<Partition> {
    let mut out = Partition::in_box(n as usize, n, n);
    out.sort();
    out
}

fn integrate_monomial(m: &ManifoldModel, classes: &[RingClass], p: &Partition) -> Result<Rational> {
    let prod = p.parts().iter().fold(m.ring.one(), |acc, &i| {
        m.ring.mul(&acc, &classes[i as usize])
    });
    m.integrate(&prod)
}

/// All Chern numbers; non-integral values mean the model is inconsistent.
pub fn chern_numbers(m: &ManifoldModel) -> Result<ChernNumbers> {
    let n = m.dim();
    let classes: Vec<RingClass> = (0..=n).map(|i| m.chern_class(i)).collect();
    let mut values = BTreeMap::new();
    for p in partitions(n as u32) {
        let v = integrate_monomial(m, &classes, &p)?;
        if !is_integer(&v) {
            return Err(Error::InconsistentModel(format!(
                "{}[{}] = {v} is not an integer",
                monomial_label('c', &p),
                m.name
            )));
        }
        values.insert(p, v);
    }
    Ok(CharNumbers {
        prefix: 'c',
        values,
    })
}

/// `p_1, p_2, p_3` from the expressions in Chern classes
/// `p1 = -c1^2 + 2c2`, `p2 = c2^2 - 2c1c3 + 2c4`,
/// `p3 = -c3^2 - 2c1c5 + 2c2c4 + 2c6`.
pub fn pontrjagin_classes(m: &ManifoldModel) -> Result<Vec<RingClass>> {
    let n = m.dim();
    if n > 6 {
        return Err(Error::Unsupported(format!(
            "Pontrjagin classes of a {n}-fold (at most 6)"
        )));
    }
    let ring = PolyRing::chern("c", 6, 6);
    let exprs = [
        "-c1^2 + 2 c2",
        "c2^2 - 2 c1 c3 + 2 c4",
        "-c3^2 - 2 c1 c5 + 2 c2 c4 + 2 c6",
    ];
    let values: Vec<RingClass> = (1..=6).map(|i| m.chern_class(i)).collect();
    exprs
        .iter()
        .map(|e| {
            let poly = parse_poly(&ring, e)?;
            Ok(substitute(&ring, &poly, &m.ring, &values))
        })
        .collect()
}

/// Parses a sum like `-c1^2 + 2 c2` over the ring's variables.
pub fn parse_poly(ring: &PolyRing, s: &str) -> Result<crate::exact::Poly> {
    let mut out = crate::exact::Poly::zero();
    let normalized = s.replace(" - ", " + -");
    for term in normalized.split(" + ") {
        let term = term.trim();
        let (coeff, mono) = match term.split_once(' ') {
            Some((c, rest))
                if c.trim_start_matches('-')
                    .chars()
                    .all(|ch| ch.is_ascii_digit() || ch == '/')
                    && !c.trim_start_matches('-').is_empty() =>
            {
                (c.parse::<Rational>().ok(), rest)
            }
            _ => {
                if let Some(rest) = term.strip_prefix('-') {
                    (Some(crate::exact::int(-1)), rest)
                } else {
                    (Some(crate::exact::int(1)), term)
                }
            }
        };
        let coeff = coeff.ok_or_else(|| Error::Parse {
            source_name: "polynomial".into(),
            message: format!("bad coefficient in `{term}`"),
        })?;
        let m = ring.parse_monomial(mono).ok_or_else(|| Error::Parse {
            source_name: "polynomial".into(),
            message: format!("bad monomial `{mono}`"),
        })?;
        out.add_term(m, coeff);
    }
    Ok(out)
}

/// Pontrjagin numbers `p_τ` for partitions `τ` of `dim/2`.
pub fn pontrjagin_numbers(m: &ManifoldModel) -> Result<CharNumbers> {
    let n = m.dim();
    if n % 2 == 1 {
        return Err(Error::InvalidDimension(format!(
            "Pontrjagin numbers are undefined in odd dimension {n}"
        )));
    }
    let p = pontrjagin_classes(m)?;
    let classes: Vec<RingClass> = std::iter::once(m.ring.one()).chain(p).collect();
    let mut values = BTreeMap::new();
    for part in partitions(n as u32 / 2) {
        values.insert(part.clone(), integrate_monomial(m, &classes, &part)?);
    }
    Ok(CharNumbers {
        prefix: 'p',
        values,
    })
}

/// `w_i = c_i mod 2` for `i = 0..=dim`, as classes with 0/1 coefficients.
pub fn stiefel_whitney_classes(m: &ManifoldModel) -> Result<Vec<RingClass>> {
    (0..=m.dim())
        .map(|i| m.chern_class(i).reduce_mod2())
        .collect()
}

/// Whether `w_2` (the reduction of `c_1`) vanishes.
pub fn w2_vanishes(m: &ManifoldModel) -> Result<bool> {
    Ok(m.chern_class(1).reduce_mod2()?.is_zero())
}

/// Stiefel-Whitney numbers `w_λ ∈ {0, 1}`; reduction mod 2 commutes with
/// products and integration, so these are Chern numbers mod 2.
pub fn sw_numbers(m: &ManifoldModel) -> Result<BTreeMap<Partition, u8>> {
    let c = chern_numbers(m)?;
    Ok(c.iter()
        .map(|(p, v)| (p.clone(), parity(v).expect("Chern numbers are integral")))
        .collect())
}
