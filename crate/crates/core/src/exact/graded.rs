use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Zero};

use super::{parity, Rational};
use crate::error::{Error, Result};

/// A class in `Q[h]/(h^{t+1})`, with `h` of degree 1.
///
/// Degrees are complex codimensions. Equality is coefficient-wise and
/// includes the truncation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradedClass {
    coeffs: Vec<Rational>,
}

impl GradedClass {
    pub fn zero(truncation: usize) -> Self {
        GradedClass {
            coeffs: vec![Rational::zero(); truncation + 1],
        }
    }

    pub fn one(truncation: usize) -> Self {
        Self::monomial(truncation, 0, Rational::one())
    }

    /// `c * h^degree`; vanishes if `degree` exceeds the truncation.
    pub fn monomial(truncation: usize, degree: usize, c: Rational) -> Self {
        let mut out = Self::zero(truncation);
        if degree <= truncation {
            out.coeffs[degree] = c;
        }
        out
    }

    /// Coefficients listed from degree 0 upwards; extra terms are dropped.
    pub fn from_coeffs<I>(truncation: usize, coeffs: I) -> Self
    where
        I: IntoIterator<Item = Rational>,
    {
        let mut out = Self::zero(truncation);
        for (k, c) in coeffs.into_iter().enumerate().take(truncation + 1) {
            out.coeffs[k] = c;
        }
        out
    }

    pub fn from_ints(truncation: usize, coeffs: &[i64]) -> Self {
        Self::from_coeffs(truncation, coeffs.iter().map(|&c| super::int(c)))
    }

    pub fn truncation(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, degree: usize) -> Rational {
        self.coeffs
            .get(degree)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Homogeneous part of the given degree.
    pub fn part(&self, degree: usize) -> Self {
        Self::monomial(self.truncation(), degree, self.coeff(degree))
    }

    /// Re-truncates (dropping or zero-padding degrees).
    pub fn truncate(&self, truncation: usize) -> Self {
        Self::from_coeffs(truncation, self.coeffs.iter().cloned())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(GradedClass {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        GradedClass {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Truncated convolution product.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let t = self.truncation();
        let mut out = Self::zero(t);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(t + 1 - i) {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.truncation());
        for _ in 0..e {
            acc = acc.multiply(self).expect("same truncation");
        }
        acc
    }

    /// Inverse of a class with constant term 1, as a truncated geometric series.
    pub fn invert_unit(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::NonUnit(self.coeffs[0].to_string()));
        }
        let t = self.truncation();
        let mut inv = Self::zero(t);
        inv.coeffs[0] = Rational::one();
        for k in 1..=t {
            let mut acc = Rational::zero();
            for j in 1..=k {
                acc -= &self.coeffs[j] * &inv.coeffs[k - j];
            }
            inv.coeffs[k] = acc;
        }
        Ok(inv)
    }

    /// Coefficient-wise reduction mod 2; every coefficient must be integral.
    pub fn reduce_mod2(&self) -> Result<Mod2Class> {
        let mut ones = BTreeSet::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            match parity(c) {
                Some(1) => {
                    ones.insert(k);
                }
                Some(_) => {}
                None => return Err(Error::NonIntegral(format!("{c} in degree {k}"))),
            }
        }
        Ok(Mod2Class {
            truncation: self.truncation(),
            ones,
        })
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.truncation() != other.truncation() {
            return Err(Error::TruncationMismatch {
                left: self.truncation(),
                right: other.truncation(),
            });
        }
        Ok(())
    }
}

fn write_power(f: &mut fmt::Formatter<'_>, var: &str, k: usize) -> fmt::Result {
    match k {
        0 => Ok(()),
        1 => write!(f, "{var}"),
        _ => write!(f, "{var}^{k}"),
    }
}

impl fmt::Display for GradedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = *c < Rational::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
                (true, false) => {}
            }
            first = false;
            if k == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            write_power(f, "h", k)?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// A class with coefficients in Z/2, stored as the set of degrees carrying a 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mod2Class {
    truncation: usize,
    ones: BTreeSet<usize>,
}

impl Mod2Class {
    pub fn new(truncation: usize, ones: impl IntoIterator<Item = usize>) -> Self {
        Mod2Class {
            truncation,
            ones: ones.into_iter().filter(|&k| k <= truncation).collect(),
        }
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn coeff(&self, degree: usize) -> u8 {
        u8::from(self.ones.contains(&degree))
    }

    pub fn is_zero(&self) -> bool {
        self.ones.is_empty()
    }

    pub fn part(&self, degree: usize) -> Self {
        Mod2Class::new(
            self.truncation,
            self.ones.iter().copied().filter(|&k| k == degree),
        )
    }
}

impl fmt::Display for Mod2Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ones.is_empty() {
            return write!(f, "0");
        }
        for (i, &k) in self.ones.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if k == 0 {
                write!(f, "1")?;
            } else {
                write_power(f, "h", k)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn difference_of_squares() {
        let a = GradedClass::from_ints(4, &[1, 1]);
        let b = GradedClass::from_ints(4, &[1, -1]);
        assert_eq!(
            a.multiply(&b).unwrap(),
            GradedClass::from_ints(4, &[1, 0, -1])
        );
    }

    #[test]
    fn cubic_total_chern_class() {
        let ambient = GradedClass::from_ints(4, &[1, 1]).pow(6);
        let normal_inv = GradedClass::from_ints(4, &[1, -3, 9, -27, 81]);
        let c = ambient.multiply(&normal_inv).unwrap();
        assert_eq!(c, GradedClass::from_ints(4, &[1, 3, 6, 2, 9]));
        assert_eq!(c.to_string(), "1 + 3h + 6h^2 + 2h^3 + 9h^4");
    }

    #[test]
    fn zero_absorbs() {
        let a = GradedClass::from_ints(4, &[2, -1, 5]);
        assert!(GradedClass::zero(4).multiply(&a).unwrap().is_zero());
    }

    #[test]
    fn truncation_mismatch_is_an_error() {
        let a = GradedClass::one(3);
        let b = GradedClass::one(4);
        assert!(matches!(
            a.multiply(&b),
            Err(Error::TruncationMismatch { .. })
        ));
    }

    #[test]
    fn invert_geometric_series() {
        let a = GradedClass::from_ints(4, &[1, 3]);
        assert_eq!(
            a.invert_unit().unwrap(),
            GradedClass::from_ints(4, &[1, -3, 9, -27, 81])
        );
        assert_eq!(
            GradedClass::one(4).invert_unit().unwrap(),
            GradedClass::one(4)
        );
        assert!(matches!(
            GradedClass::from_ints(4, &[2, 1]).invert_unit(),
            Err(Error::NonUnit(_))
        ));
    }

    #[test]
    fn mod2_reduction() {
        let r = GradedClass::from_ints(4, &[0, 3]).reduce_mod2().unwrap();
        assert_eq!(r, Mod2Class::new(4, [1]));
        assert!(GradedClass::from_ints(4, &[0, 4, 6])
            .reduce_mod2()
            .unwrap()
            .is_zero());
        let cubic = GradedClass::from_ints(4, &[1, 3, 6, 2, 9])
            .reduce_mod2()
            .unwrap();
        assert_eq!(cubic, Mod2Class::new(4, [0, 1, 4]));
        assert_eq!(cubic.to_string(), "1 + h + h^4");
        let half = GradedClass::monomial(2, 1, crate::exact::frac(1, 2));
        assert!(matches!(half.reduce_mod2(), Err(Error::NonIntegral(_))));
    }
}
