use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::algebra::{GradedAlgebra, Univariate};
use crate::error::{Error, Result};
use crate::exact::{parity, GradedClass, Monomial, Poly, PolyRing, Rational};
use crate::schubert::{Partition, SchubertClass, SchubertRing};

/// The rational cohomology model of a manifold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Ring {
    /// `Q[h]/(h^{dim+1})` with `∫h^dim = degree`.
    Projective { dim: usize, degree: Rational },
    /// Linear section of `G(k, n)` by `hyperplanes` Plücker hyperplanes;
    /// classes live in the Schubert basis of the ambient Grassmannian.
    Grassmannian {
        k: usize,
        n: usize,
        hyperplanes: usize,
    },
    /// Weighted polynomial ring with prescribed top-degree intersection
    /// numbers. Used when only numerical data of the manifold is known.
    Numerical {
        vars: PolyRing,
        numbers: BTreeMap<Monomial, Rational>,
        line: Option<usize>,
    },
}

/// An element of one of the [`Ring`] models.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingClass {
    Graded(GradedClass),
    Schubert(SchubertClass),
    Poly(Poly),
}

impl Ring {
    pub fn projective(dim: usize, degree: Rational) -> Self {
        Ring::Projective { dim, degree }
    }

    /// A numerical ring on the named variables; `numbers` keys are
    /// monomials written like `c2^2` or `L c3`.
    pub fn numerical(
        vars: &[(&str, usize)],
        dim: usize,
        numbers: &[(&str, Rational)],
        line: Option<&str>,
    ) -> Result<Self> {
        let ring = PolyRing::new(
            vars.iter().map(|(n, _)| n.to_string()).collect(),
            vars.iter().map(|(_, w)| *w).collect(),
            dim,
        );
        let mut map = BTreeMap::new();
        for (m, v) in numbers {
            let mono = ring.parse_monomial(m).ok_or_else(|| {
                Error::MissingData(format!("monomial `{m}` uses unknown variables"))
            })?;
            if ring.weight(&mono) != dim {
                return Err(Error::InvalidDimension(format!(
                    "`{m}` is not of top degree {dim}"
                )));
            }
            map.insert(mono, v.clone());
        }
        let line = match line {
            Some(name) => Some(
                vars.iter()
                    .position(|(n, w)| *n == name && *w == 1)
                    .ok_or_else(|| Error::MissingData(format!("no degree-1 variable `{name}`")))?,
            ),
            None => None,
        };
        Ok(Ring::Numerical {
            vars: ring,
            numbers: map,
            line,
        })
    }

    pub fn dim(&self) -> usize {
        match self {
            Ring::Projective { dim, .. } => *dim,
            Ring::Grassmannian { k, n, hyperplanes } => k * (n - k) - hyperplanes,
            Ring::Numerical { vars, .. } => vars.max_weight(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Ring::Projective { .. } => "projective",
            Ring::Grassmannian { .. } => "grassmannian",
            Ring::Numerical { .. } => "numerical",
        }
    }

    /// The ample generator `h`, when the model has one.
    pub fn line_class(&self) -> Option<RingClass> {
        match self {
            Ring::Projective { dim, .. } => Some(RingClass::Graded(GradedClass::monomial(
                *dim,
                1,
                Rational::one(),
            ))),
            Ring::Grassmannian { k, n, .. } => {
                Some(RingClass::Schubert(SchubertClass::special(*k, *n, 1)))
            }
            Ring::Numerical { vars, line, .. } => line.map(|i| RingClass::Poly(vars.var(i))),
        }
    }

    /// Evaluation against the fundamental class.
    pub fn integrate(&self, a: &RingClass) -> Result<Rational> {
        match (self, a) {
            (Ring::Projective { dim, degree }, RingClass::Graded(g)) => {
                if g.truncation() < *dim {
                    return Err(Error::TruncationTooSmall {
                        needed: *dim,
                        have: g.truncation(),
                    });
                }
                Ok(g.coeff(*dim) * degree)
            }
            (Ring::Grassmannian { hyperplanes, .. }, RingClass::Schubert(s)) => {
                let mut top = s.part(self.dim());
                for _ in 0..*hyperplanes {
                    top = top.pieri_multiply(1)?;
                }
                Ok(top.integrate())
            }
            (Ring::Numerical { vars, numbers, .. }, RingClass::Poly(p)) => {
                let mut acc = Rational::zero();
                for (m, c) in p.terms() {
                    if vars.weight(m) != vars.max_weight() || c.is_zero() {
                        continue;
                    }
                    let v = numbers.get(m).ok_or_else(|| {
                        Error::MissingData(format!(
                            "no intersection number for `{}`",
                            vars.format_monomial(m)
                        ))
                    })?;
                    acc += c * v;
                }
                Ok(acc)
            }
            _ => Err(Error::AmbientMismatch(format!(
                "{} ring cannot integrate this class",
                self.kind()
            ))),
        }
    }

    pub fn format(&self, a: &RingClass) -> String {
        match (self, a) {
            (Ring::Numerical { vars, .. }, RingClass::Poly(p)) => vars.format(p),
            _ => a.to_string(),
        }
    }
}

impl GradedAlgebra for Ring {
    type Elem = RingClass;

    fn max_degree(&self) -> usize {
        self.dim()
    }

    fn zero(&self) -> RingClass {
        match self {
            Ring::Projective { dim, .. } => RingClass::Graded(GradedClass::zero(*dim)),
            Ring::Grassmannian { k, n, .. } => RingClass::Schubert(SchubertClass::zero(*k, *n)),
            Ring::Numerical { .. } => RingClass::Poly(Poly::zero()),
        }
    }

    fn one(&self) -> RingClass {
        match self {
            Ring::Projective { dim, .. } => RingClass::Graded(GradedClass::one(*dim)),
            Ring::Grassmannian { k, n, .. } => RingClass::Schubert(SchubertClass::one(*k, *n)),
            Ring::Numerical { vars, .. } => RingClass::Poly(vars.one()),
        }
    }

    fn add(&self, a: &RingClass, b: &RingClass) -> RingClass {
        match (self, a, b) {
            (Ring::Projective { dim, .. }, RingClass::Graded(x), RingClass::Graded(y)) => {
                RingClass::Graded(Univariate { truncation: *dim }.add(x, y))
            }
            (Ring::Grassmannian { .. }, RingClass::Schubert(x), RingClass::Schubert(y)) => {
                RingClass::Schubert(x.add(y).expect("same Grassmannian"))
            }
            (Ring::Numerical { .. }, RingClass::Poly(x), RingClass::Poly(y)) => {
                RingClass::Poly(x.add(y))
            }
            _ => panic!("class does not belong to the {} ring", self.kind()),
        }
    }

    fn scale(&self, a: &RingClass, c: &Rational) -> RingClass {
        match a {
            RingClass::Graded(x) => RingClass::Graded(x.scale(c)),
            RingClass::Schubert(x) => RingClass::Schubert(x.scale(c)),
            RingClass::Poly(x) => RingClass::Poly(x.scale(c)),
        }
    }

    fn mul(&self, a: &RingClass, b: &RingClass) -> RingClass {
        match (self, a, b) {
            (Ring::Projective { dim, .. }, RingClass::Graded(x), RingClass::Graded(y)) => {
                RingClass::Graded(Univariate { truncation: *dim }.mul(x, y))
            }
            (Ring::Grassmannian { k, n, .. }, RingClass::Schubert(x), RingClass::Schubert(y)) => {
                let ring = SchubertRing::new(*k, *n)
                    .expect("validated ambient")
                    .with_truncation(self.dim());
                RingClass::Schubert(ring.mul(x, y))
            }
            (Ring::Numerical { vars, .. }, RingClass::Poly(x), RingClass::Poly(y)) => {
                RingClass::Poly(vars.mul(x, y))
            }
            _ => panic!("class does not belong to the {} ring", self.kind()),
        }
    }

    fn part(&self, a: &RingClass, degree: usize) -> RingClass {
        if degree > self.dim() {
            return self.zero();
        }
        match (self, a) {
            (_, RingClass::Graded(x)) => RingClass::Graded(x.part(degree)),
            (_, RingClass::Schubert(x)) => RingClass::Schubert(x.part(degree)),
            (Ring::Numerical { vars, .. }, RingClass::Poly(x)) => {
                RingClass::Poly(vars.part(x, degree))
            }
            _ => panic!("class does not belong to the {} ring", self.kind()),
        }
    }

    fn is_zero(&self, a: &RingClass) -> bool {
        a.is_zero()
    }
}

impl RingClass {
    pub fn is_zero(&self) -> bool {
        match self {
            RingClass::Graded(x) => x.is_zero(),
            RingClass::Schubert(x) => x.is_zero(),
            RingClass::Poly(x) => x.is_zero(),
        }
    }

    /// Coefficients in the ring's integral basis.
    pub fn coefficients(&self) -> Vec<Rational> {
        match self {
            RingClass::Graded(x) => x.coeffs().to_vec(),
            RingClass::Schubert(x) => x.terms().map(|(_, c)| c.clone()).collect(),
            RingClass::Poly(x) => x.terms().map(|(_, c)| c.clone()).collect(),
        }
    }

    /// Coefficient-wise reduction mod 2 (representatives 0 and 1).
    pub fn reduce_mod2(&self) -> Result<RingClass> {
        let red = |c: &Rational| -> Result<Rational> {
            parity(c)
                .map(|p| Rational::from_integer(p.into()))
                .ok_or_else(|| Error::NonIntegral(c.to_string()))
        };
        Ok(match self {
            RingClass::Graded(x) => RingClass::Graded(GradedClass::from_coeffs(
                x.truncation(),
                x.coeffs().iter().map(red).collect::<Result<Vec<_>>>()?,
            )),
            RingClass::Schubert(x) => {
                let (k, n) = x.ambient();
                let mut out = SchubertClass::zero(k, n);
                for (l, c) in x.terms() {
                    out.add_term(l.clone(), red(c)?);
                }
                RingClass::Schubert(out)
            }
            RingClass::Poly(x) => {
                let mut out = Poly::zero();
                for (m, c) in x.terms() {
                    out.add_term(m.clone(), red(c)?);
                }
                RingClass::Poly(out)
            }
        })
    }

    pub fn as_graded(&self) -> Option<&GradedClass> {
        match self {
            RingClass::Graded(g) => Some(g),
            _ => None,
        }
    }

    pub fn as_schubert(&self) -> Option<&SchubertClass> {
        match self {
            RingClass::Schubert(s) => Some(s),
            _ => None,
        }
    }

    /// Multiple of a single basis element, if the class is one.
    pub fn single_coefficient(&self) -> Option<Rational> {
        let nonzero: Vec<Rational> = self
            .coefficients()
            .into_iter()
            .filter(|c| !c.is_zero())
            .collect();
        match nonzero.len() {
            0 => Some(Rational::zero()),
            1 => nonzero.into_iter().next(),
            _ => None,
        }
    }

    /// Schubert terms, keyed by partition (empty for other variants).
    pub fn schubert_terms(&self) -> Vec<(Partition, Rational)> {
        match self {
            RingClass::Schubert(s) => s.terms().map(|(l, c)| (l.clone(), c.clone())).collect(),
            _ => Vec::new(),
        }
    }
}

impl fmt::Display for RingClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingClass::Graded(x) => write!(f, "{x}"),
            RingClass::Schubert(x) => write!(f, "{x}"),
            RingClass::Poly(x) => {
                // Without the ring we only know exponent vectors.
                let parts: Vec<String> = x.terms().map(|(m, c)| format!("{c}·{m:?}")).collect();
                if parts.is_empty() {
                    write!(f, "0")
                } else {
                    write!(f, "{}", parts.join(" + "))
                }
            }
        }
    }
}
