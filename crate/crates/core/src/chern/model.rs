use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_traits::One;

use crate::algebra::{invert_unit, GradedAlgebra, Univariate};
use crate::error::{Error, Result};
use crate::exact::{int, GradedClass, Rational};
use crate::hodge::HodgeDiamond;
use crate::schubert::{grassmannian_tangent_chern, SchubertClass, SchubertRing};

use super::ring::{Ring, RingClass};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tag {
    Fano,
    CalabiYau,
    Hyperkahler,
    GeneralType,
    KTrivial,
}

impl Tag {
    pub const ALL: [Tag; 5] = [
        Tag::Fano,
        Tag::CalabiYau,
        Tag::Hyperkahler,
        Tag::GeneralType,
        Tag::KTrivial,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Tag::Fano => "fano",
            Tag::CalabiYau => "calabi_yau",
            Tag::Hyperkahler => "hyperkahler",
            Tag::GeneralType => "general_type",
            Tag::KTrivial => "k_trivial",
        }
    }
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Tag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Tag::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| Error::Parse {
                source_name: "tags".into(),
                message: format!("unknown tag `{s}`"),
            })
    }
}

/// `∫x^{2n} = constant · q(x)^n` on a hyperkähler 2n-fold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fujiki {
    pub constant: Rational,
    pub form: String,
}

/// A compact complex manifold described by its cohomology ring and
/// tangent Chern class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ManifoldModel {
    pub name: String,
    pub ring: Ring,
    pub tangent_total: RingClass,
    pub hodge: Option<HodgeDiamond>,
    pub fujiki: Option<Fujiki>,
    /// `K = -index · h`.
    pub index: Option<i64>,
    pub tags: BTreeSet<Tag>,
}

impl ManifoldModel {
    pub fn new(name: impl Into<String>, ring: Ring, tangent_total: RingClass) -> Result<Self> {
        if ring.part(&tangent_total, 0) != ring.one() {
            return Err(Error::NonUnit(format!("{tangent_total}")));
        }
        let tangent_total = ring.truncate_to(&tangent_total, ring.dim());
        Ok(ManifoldModel {
            name: name.into(),
            ring,
            tangent_total,
            hodge: None,
            fujiki: None,
            index: None,
            tags: BTreeSet::new(),
        })
    }

    pub fn dim(&self) -> usize {
        self.ring.dim()
    }

    pub fn line_generator(&self) -> Option<RingClass> {
        self.ring.line_class()
    }

    /// `c_i(T_X)`.
    pub fn chern_class(&self, i: usize) -> RingClass {
        self.ring.part(&self.tangent_total, i)
    }

    pub fn integrate(&self, a: &RingClass) -> Result<Rational> {
        self.ring.integrate(a)
    }

    /// `∫h^dim`, if there is a line generator.
    pub fn degree(&self) -> Option<Rational> {
        let h = self.line_generator()?;
        self.integrate(&self.ring.pow(&h, self.dim() as u32)).ok()
    }

    pub fn euler_number(&self) -> Result<Rational> {
        self.integrate(&self.chern_class(self.dim()))
    }

    pub fn has_tag(&self, t: Tag) -> bool {
        self.tags.contains(&t)
    }

    pub fn with_hodge(mut self, d: HodgeDiamond) -> Self {
        self.hodge = Some(d);
        self
    }

    pub fn with_tags(mut self, tags: impl IntoIterator<Item = Tag>) -> Self {
        self.tags.extend(tags);
        self
    }

    /// Sets `K = -index · h` and tags derived from its sign.
    pub fn with_index(mut self, index: i64) -> Self {
        self.index = Some(index);
        match index.cmp(&0) {
            std::cmp::Ordering::Greater => self.tags.insert(Tag::Fano),
            std::cmp::Ordering::Equal => self.tags.insert(Tag::KTrivial),
            std::cmp::Ordering::Less => self.tags.insert(Tag::GeneralType),
        };
        self
    }

    /// Consistency problems of the model, empty when it is sound.
    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        if let (Some(r), Some(h)) = (self.index, self.line_generator()) {
            let expected = self.ring.scale(&h, &int(r));
            if self.chern_class(1) != expected {
                out.push(format!(
                    "c1 = {} but index {r} requires {}",
                    self.ring.format(&self.chern_class(1)),
                    self.ring.format(&expected)
                ));
            }
        }
        if let Some(d) = &self.hodge {
            if d.n() != self.dim() {
                out.push(format!(
                    "Hodge diamond of dimension {} on a {}-fold",
                    d.n(),
                    self.dim()
                ));
            }
            let problems = crate::hodge::validate_diamond(d);
            out.extend(problems);
            if let (Ok(e), Ok((_, chi))) = (self.euler_number(), crate::hodge::betti_euler(d)) {
                if e != int(chi) {
                    out.push(format!(
                        "Euler number {e} from c_top but {chi} from Betti numbers"
                    ));
                }
            }
        }
        out
    }
}

fn adjunction(ambient_total: &RingClass, ring: &Ring, normal: &[RingClass]) -> Result<RingClass> {
    let mut total = ambient_total.clone();
    for n in normal {
        total = ring.mul(&total, &invert_unit(ring, n)?);
    }
    Ok(total)
}

/// `P^n` with `c(T) = (1+h)^{n+1}`.
pub fn projective_space(n: usize) -> Result<ManifoldModel> {
    if n == 0 {
        return Err(Error::InvalidDimension("P^0 is a point".into()));
    }
    let alg = Univariate { truncation: n };
    let tangent = alg.pow(&GradedClass::from_ints(n, &[1, 1]), n as u32 + 1);
    Ok(ManifoldModel::new(
        format!("pn({n})"),
        Ring::projective(n, Rational::one()),
        RingClass::Graded(tangent),
    )?
    .with_index(n as i64 + 1))
}

/// Smooth complete intersection of the given degrees in `P^n`, where
/// `∫H^n = top_norm_ambient` on the ambient space.
pub fn complete_intersection(
    n: usize,
    degrees: &[u32],
    top_norm_ambient: i64,
) -> Result<ManifoldModel> {
    if degrees.is_empty() {
        return Err(Error::InvalidDimension(
            "complete intersection needs at least one degree".into(),
        ));
    }
    if degrees.len() >= n {
        return Err(Error::InvalidDimension(format!(
            "{} hypersurfaces in P^{n}",
            degrees.len()
        )));
    }
    if degrees.contains(&0) {
        return Err(Error::InvalidDimension("degree 0 hypersurface".into()));
    }
    let dim = n - degrees.len();
    let ring = Ring::projective(
        dim,
        int(top_norm_ambient) * degrees.iter().map(|&d| int(d as i64)).product::<Rational>(),
    );
    let alg = Univariate { truncation: dim };
    let ambient = RingClass::Graded(alg.pow(&GradedClass::from_ints(dim, &[1, 1]), n as u32 + 1));
    let normal: Vec<RingClass> = degrees
        .iter()
        .map(|&d| RingClass::Graded(GradedClass::from_ints(dim, &[1, d as i64])))
        .collect();
    let tangent = adjunction(&ambient, &ring, &normal)?;
    let index = n as i64 + 1 - degrees.iter().map(|&d| d as i64).sum::<i64>();
    let name = format!(
        "ci({n};{})",
        degrees
            .iter()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
            .join(",")
    );
    Ok(ManifoldModel::new(name, ring, tangent)?.with_index(index))
}

/// `G(k, n)` cut by `num_hyperplanes` general Plücker hyperplanes.
pub fn grassmannian_complete_intersection(
    k: usize,
    n: usize,
    num_hyperplanes: usize,
) -> Result<ManifoldModel> {
    let g = SchubertRing::new(k, n)?;
    if num_hyperplanes >= g.dim() {
        return Err(Error::InvalidDimension(format!(
            "{num_hyperplanes} hyperplane sections of the {}-dimensional G({k},{n})",
            g.dim()
        )));
    }
    let ring = Ring::Grassmannian {
        k,
        n,
        hyperplanes: num_hyperplanes,
    };
    let ambient = RingClass::Schubert(grassmannian_tangent_chern(k, n)?.truncate(ring.dim()));
    let hyper =
        RingClass::Schubert(SchubertClass::one(k, n).add(&SchubertClass::special(k, n, 1))?);
    let normal = vec![hyper; num_hyperplanes];
    let tangent = adjunction(&ambient, &ring, &normal)?;
    let name = format!("g({k},{n})∩{num_hyperplanes}h");
    Ok(ManifoldModel::new(name, ring, tangent)?.with_index(n as i64 - num_hyperplanes as i64))
}
