use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// Exponent vector, one entry per ring variable.
pub type Monomial = Vec<u32>;

/// Polynomial with exact rational coefficients; zero terms are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn term(monomial: Monomial, c: Rational) -> Self {
        let mut p = Poly::zero();
        p.add_term(monomial, c);
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of a monomial; trailing zero exponents are ignored.
    pub fn coeff(&self, monomial: &[u32]) -> Rational {
        self.terms
            .iter()
            .find(|(m, _)| same_monomial(m, monomial))
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, monomial: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(monomial).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// Coefficients of a polynomial in variable `var` only (index = power).
    pub fn univariate_coeffs(&self, var: usize) -> Vec<Rational> {
        let deg = self
            .terms
            .keys()
            .map(|m| m.get(var).copied().unwrap_or(0) as usize)
            .max()
            .unwrap_or(0);
        let mut out = vec![Rational::zero(); deg + 1];
        for (m, c) in &self.terms {
            out[m.get(var).copied().unwrap_or(0) as usize] += c;
        }
        out
    }

    /// Evaluates at rational values of all variables.
    pub fn eval(&self, values: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.iter().enumerate() {
                for _ in 0..e {
                    t *= &values[i];
                }
            }
            acc += t;
        }
        acc
    }
}

fn same_monomial(a: &[u32], b: &[u32]) -> bool {
    let n = a.len().max(b.len());
    (0..n).all(|i| a.get(i).copied().unwrap_or(0) == b.get(i).copied().unwrap_or(0))
}

/// Weighted polynomial ring `Q[x_1..x_k]` truncated above a maximal weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyRing {
    names: Vec<String>,
    weights: Vec<usize>,
    max_weight: usize,
}

impl PolyRing {
    pub fn new(names: Vec<String>, weights: Vec<usize>, max_weight: usize) -> Self {
        assert_eq!(names.len(), weights.len());
        PolyRing {
            names,
            weights,
            max_weight,
        }
    }

    /// `Q[prefix1, .., prefix_n]` with `prefix_i` of weight `i`.
    pub fn chern(prefix: &str, n: usize, max_weight: usize) -> Self {
        PolyRing::new(
            (1..=n).map(|i| format!("{prefix}{i}")).collect(),
            (1..=n).collect(),
            max_weight,
        )
    }

    pub fn num_vars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn weights(&self) -> &[usize] {
        &self.weights
    }

    pub fn max_weight(&self) -> usize {
        self.max_weight
    }

    pub fn var(&self, i: usize) -> Poly {
        let mut m = vec![0; self.num_vars()];
        m[i] = 1;
        if self.weights[i] > self.max_weight {
            return Poly::zero();
        }
        Poly::term(m, Rational::one())
    }

    pub fn constant(&self, c: Rational) -> Poly {
        Poly::term(vec![0; self.num_vars()], c)
    }

    pub fn weight(&self, m: &[u32]) -> usize {
        m.iter()
            .zip(&self.weights)
            .map(|(&e, &w)| e as usize * w)
            .sum()
    }

    pub fn part(&self, p: &Poly, weight: usize) -> Poly {
        Poly {
            terms: p
                .terms
                .iter()
                .filter(|(m, _)| self.weight(m) == weight)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (ma, ca) in &a.terms {
            let wa = self.weight(ma);
            if wa > self.max_weight {
                continue;
            }
            for (mb, cb) in &b.terms {
                if wa + self.weight(mb) > self.max_weight {
                    continue;
                }
                let m: Monomial = ma.iter().zip(mb).map(|(x, y)| x + y).collect();
                out.add_term(m, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, a: &Poly, e: u32) -> Poly {
        let mut acc = self.constant(Rational::one());
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// Parses a monomial like `c1^2 c2` (or `1`) into an exponent vector.
    pub fn parse_monomial(&self, s: &str) -> Option<Monomial> {
        let mut m = vec![0u32; self.num_vars()];
        let s = s.trim();
        if s == "1" {
            return Some(m);
        }
        for factor in s.split([' ', '*']).filter(|f| !f.is_empty()) {
            let (name, exp) = match factor.split_once('^') {
                Some((n, e)) => (n, e.parse::<u32>().ok()?),
                None => (factor, 1),
            };
            let idx = self.names.iter().position(|n| n == name)?;
            m[idx] += exp;
        }
        Some(m)
    }

    pub fn format_monomial(&self, m: &[u32]) -> String {
        let mut s = String::new();
        for (i, &e) in m.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !s.is_empty() {
                s.push(' ');
            }
            s.push_str(&self.names[i]);
            if e > 1 {
                let _ = write!(s, "^{e}");
            }
        }
        if s.is_empty() {
            s.push('1');
        }
        s
    }

    pub fn format(&self, p: &Poly) -> String {
        if p.is_zero() {
            return "0".to_string();
        }
        // Highest weight first, reads like the usual textbook order.
        let mut terms: Vec<_> = p.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| self.weight(b).cmp(&self.weight(a)).then(b.cmp(a)));
        let mut s = String::new();
        for (i, (m, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (i, neg) {
                (0, true) => s.push('-'),
                (0, false) => {}
                (_, true) => s.push_str(" - "),
                (_, false) => s.push_str(" + "),
            }
            let mono = self.format_monomial(m);
            if mono == "1" {
                let _ = write!(s, "{mag}");
            } else if mag.is_one() {
                s.push_str(&mono);
            } else {
                let _ = write!(s, "{mag} {mono}");
            }
        }
        s
    }
}

/// All rational roots of `Σ coeffs[k] x^k`, sorted ascending, without multiplicity.
pub fn rational_roots(coeffs: &[Rational]) -> Result<Vec<Rational>> {
    let mut coeffs: Vec<Rational> = coeffs.to_vec();
    while coeffs.last().is_some_and(Zero::is_zero) {
        coeffs.pop();
    }
    if coeffs.is_empty() {
        return Err(Error::OutOfRange("zero polynomial has every root".into()));
    }
    let mut roots = Vec::new();
    let lead = coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0);
    if lead > 0 {
        roots.push(Rational::zero());
        coeffs.drain(..lead);
    }
    // Clear denominators.
    let l = coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = coeffs
        .iter()
        .map(|c| (c * Rational::from_integer(l.clone())).to_integer())
        .collect();
    let a0 = ints[0].abs().to_u64();
    let an = ints[ints.len() - 1].abs().to_u64();
    let (Some(a0), Some(an)) = (a0, an) else {
        return Err(Error::Unsupported(
            "coefficients too large for root search".into(),
        ));
    };
    for p in divisors(a0) {
        for q in divisors(an) {
            for sign in [-1i64, 1] {
                let cand = Rational::new(BigInt::from(sign) * BigInt::from(p), BigInt::from(q));
                if horner(&coeffs, &cand).is_zero() && !roots.contains(&cand) {
                    roots.push(cand);
                }
            }
        }
    }
    roots.sort();
    Ok(roots)
}

fn horner(coeffs: &[Rational], x: &Rational) -> Rational {
    coeffs
        .iter()
        .rev()
        .fold(Rational::zero(), |acc, c| acc * x + c)
}

fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            if d != n / d {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{frac, int};

    #[test]
    fn truncated_weighted_product() {
        let r = PolyRing::chern("c", 2, 2);
        let c1 = r.var(0);
        let c2 = r.var(1);
        let sum = r.constant(int(1)).add(&c1).add(&c2);
        let sq = r.mul(&sum, &sum);
        // (1 + c1 + c2)^2 = 1 + 2c1 + c1^2 + 2c2 up to weight 2
        assert_eq!(r.format(&sq), "c1^2 + 2 c2 + 2 c1 + 1");
        assert_eq!(r.part(&sq, 2).coeff(&[0, 1]), int(2));
    }

    #[test]
    fn monomial_parsing_round_trips() {
        let r = PolyRing::chern("c", 4, 4);
        let m = r.parse_monomial("c1^2 c2").unwrap();
        assert_eq!(m, vec![2, 1, 0, 0]);
        assert_eq!(r.format_monomial(&m), "c1^2 c2");
        assert_eq!(r.parse_monomial("1").unwrap(), vec![0; 4]);
        assert!(r.parse_monomial("c9").is_none());
    }

    #[test]
    fn roots_of_signature_quadratic() {
        // 8a^2 - 84a + 76
        let roots = rational_roots(&[int(76), int(-84), int(8)]).unwrap();
        assert_eq!(roots, vec![int(1), frac(19, 2)]);
        assert_eq!(rational_roots(&[int(0), int(1)]).unwrap(), vec![int(0)]);
        assert!(rational_roots(&[int(1), int(0), int(1)])
            .unwrap()
            .is_empty());
    }
}
