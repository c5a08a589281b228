//! Schubert calculus on the Grassmannian `G(k, n)` of k-planes in C^n.
//!
//! Classes are indexed by partitions in the `k × (n-k)` box; products
//! that leave the box vanish.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::algebra::GradedAlgebra;
use crate::chern::{tensor_product_class, BundleSpec};
use crate::error::{Error, Result};
use crate::exact::Rational;

/// A weakly decreasing sequence of positive parts (trailing zeros dropped).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::OutOfRange(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Part `i` (zero past the end).
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn fits(&self, k: usize, n: usize) -> bool {
        self.len() <= k && self.part(0) as usize <= n - k
    }

    pub fn contains(&self, other: &Partition) -> bool {
        (0..other.len()).all(|i| self.part(i) >= other.part(i))
    }

    /// Complement in the `k × (n-k)` box.
    pub fn complement(&self, k: usize, n: usize) -> Partition {
        let w = (n - k) as u32;
        Partition::new((0..k).rev().map(|i| w - self.part(i)).collect())
            .expect("complement is decreasing")
    }

    /// All partitions in the `k × w` box of the given size.
    pub fn in_box(k: usize, w: u32, size: u32) -> Vec<Partition> {
        fn rec(k: usize, max: u32, remaining: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition::new(cur.clone()).expect("decreasing by construction"));
                return;
            }
            if cur.len() == k {
                return;
            }
            for p in (1..=max.min(remaining)).rev() {
                cur.push(p);
                rec(k, p, remaining - p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(k, w, size, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;

    /// Accepts `(2,1)`, `2,1` and `()`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|p| p.trim().parse::<u32>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::OutOfRange(format!("bad partition {s:?}: {e}")))?;
        Partition::new(parts)
    }
}

/// A rational combination of Schubert classes on `G(k, n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchubertClass {
    k: usize,
    n: usize,
    terms: BTreeMap<Partition, Rational>,
}

impl SchubertClass {
    pub fn zero(k: usize, n: usize) -> Self {
        SchubertClass {
            k,
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(k: usize, n: usize) -> Self {
        Self::sigma(k, n, Partition::empty())
    }

    /// `σ_λ`; zero if `λ` leaves the box.
    pub fn sigma(k: usize, n: usize, lambda: Partition) -> Self {
        let mut c = Self::zero(k, n);
        c.add_term(lambda, Rational::one());
        c
    }

    /// The special class `σ_m`.
    pub fn special(k: usize, n: usize, m: u32) -> Self {
        Self::sigma(k, n, Partition::new(vec![m]).expect("single part"))
    }

    pub fn ambient(&self) -> (usize, usize) {
        (self.k, self.n)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, lambda: &Partition) -> Rational {
        self.terms
            .get(lambda)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, lambda: Partition, c: Rational) {
        if c.is_zero() || !lambda.fits(self.k, self.n) {
            return;
        }
        let e = self
            .terms
            .entry(lambda.clone())
            .or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&lambda);
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (l, c) in &other.terms {
            out.add_term(l.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.k, self.n);
        for (l, v) in &self.terms {
            out.add_term(l.clone(), v * c);
        }
        out
    }

    /// Homogeneous part of codimension `degree`.
    pub fn part(&self, degree: usize) -> Self {
        SchubertClass {
            k: self.k,
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(l, _)| l.size() as usize == degree)
                .map(|(l, c)| (l.clone(), c.clone()))
                .collect(),
        }
    }

    /// Drops components of codimension above `degree`.
    pub fn truncate(&self, degree: usize) -> Self {
        SchubertClass {
            k: self.k,
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(l, _)| l.size() as usize <= degree)
                .map(|(l, c)| (l.clone(), c.clone()))
                .collect(),
        }
    }

    /// Product with `σ_m` by the Pieri rule.
    pub fn pieri_multiply(&self, m: u32) -> Result<Self> {
        if m as usize > self.n - self.k {
            return Err(Error::OutOfRange(format!(
                "σ_{m} on G({},{})",
                self.k, self.n
            )));
        }
        let mut out = Self::zero(self.k, self.n);
        for (lambda, c) in &self.terms {
            for nu in horizontal_strips(lambda, m, self.k, (self.n - self.k) as u32) {
                out.add_term(nu, c.clone());
            }
        }
        Ok(out)
    }

    /// Product via Littlewood-Richardson coefficients.
    pub fn lr_multiply(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(self.k, self.n);
        for (lambda, a) in &self.terms {
            for (mu, b) in &other.terms {
                let prod = a * b;
                for (nu, c) in lr_expand(lambda, mu, self.k, (self.n - self.k) as u32) {
                    out.add_term(nu, &prod * Rational::from_integer(c.into()));
                }
            }
        }
        Ok(out)
    }

    /// Degree: coefficient of the point class.
    pub fn integrate(&self) -> Rational {
        let full = Partition::new(vec![(self.n - self.k) as u32; self.k]).expect("constant parts");
        self.coeff(&full)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if (self.k, self.n) != (other.k, other.n) {
            return Err(Error::AmbientMismatch(format!(
                "G({},{}) vs G({},{})",
                self.k, self.n, other.k, other.n
            )));
        }
        Ok(())
    }
}

impl fmt::Display for SchubertClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (l, c)) in self.terms.iter().enumerate() {
            let mag = if c.is_negative() {
                -c.clone()
            } else {
                c.clone()
            };
            match (i, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if !mag.is_one() {
                write!(f, "{mag} ")?;
            }
            write!(f, "σ{l}")?;
        }
        Ok(())
    }
}

fn horizontal_strips(lambda: &Partition, m: u32, k: usize, w: u32) -> Vec<Partition> {
    // ν_1 ≤ w, λ_i ≤ ν_i ≤ λ_{i-1}; at most one box per column.
    fn rec(
        lambda: &Partition,
        i: usize,
        k: usize,
        w: u32,
        left: u32,
        cur: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if i == k {
            if left == 0 {
                out.push(Partition::new(cur.clone()).expect("decreasing"));
            }
            return;
        }
        let lo = lambda.part(i);
        let hi = if i == 0 { w } else { lambda.part(i - 1) };
        for v in lo..=hi.min(lo + left) {
            cur.push(v);
            rec(lambda, i + 1, k, w, left - (v - lo), cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(lambda, 0, k, w, m, &mut Vec::new(), &mut out);
    out
}

/// `σ_λ σ_μ = Σ c^ν_{λμ} σ_ν` over `ν` in the `k × w` box.
fn lr_expand(lambda: &Partition, mu: &Partition, k: usize, w: u32) -> Vec<(Partition, u64)> {
    let size = lambda.size() + mu.size();
    Partition::in_box(k, w, size)
        .into_iter()
        .filter(|nu| nu.contains(lambda))
        .filter_map(|nu| {
            let c = lr_coefficient(lambda, mu, &nu);
            (c > 0).then_some((nu, c))
        })
        .collect()
}

/// Number of Littlewood-Richardson tableaux of shape `ν/λ` and content `μ`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if !nu.contains(lambda) || nu.size() != lambda.size() + mu.size() {
        return 0;
    }
    // Cells in reading order: rows top to bottom, each row right to left.
    let cells: Vec<(usize, u32)> = (0..nu.len())
        .flat_map(|i| (lambda.part(i)..nu.part(i)).rev().map(move |j| (i, j)))
        .collect();
    let mut filling: BTreeMap<(usize, u32), u32> = BTreeMap::new();
    let mut counts = vec![0u32; mu.len() + 1];
    count_fillings(&cells, 0, lambda, mu, &mut filling, &mut counts)
}

fn count_fillings(
    cells: &[(usize, u32)],
    idx: usize,
    lambda: &Partition,
    mu: &Partition,
    filling: &mut BTreeMap<(usize, u32), u32>,
    counts: &mut [u32],
) -> u64 {
    if idx == cells.len() {
        return 1;
    }
    let (i, j) = cells[idx];
    let mut total = 0;
    for v in 1..=mu.len() as u32 {
        let vi = v as usize;
        if counts[vi] >= mu.part(vi - 1) {
            continue;
        }
        // lattice word condition
        if vi > 1 && counts[vi] + 1 > counts[vi - 1] {
            continue;
        }
        // rows weakly increase left to right; the cell to the right was placed already
        if let Some(&right) = filling.get(&(i, j + 1)) {
            if v > right {
                continue;
            }
        }
        // columns strictly increase downwards
        if i > 0 && j >= lambda.part(i - 1) {
            if let Some(&above) = filling.get(&(i - 1, j)) {
                if v <= above {
                    continue;
                }
            }
        }
        filling.insert((i, j), v);
        counts[vi] += 1;
        total += count_fillings(cells, idx + 1, lambda, mu, filling, counts);
        counts[vi] -= 1;
        filling.remove(&(i, j));
    }
    total
}

/// `H^*(G(k, n), Q)` truncated above codimension `truncation`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SchubertRing {
    pub k: usize,
    pub n: usize,
    pub truncation: usize,
}

impl SchubertRing {
    pub fn new(k: usize, n: usize) -> Result<Self> {
        if k == 0 || k >= n {
            return Err(Error::InvalidDimension(format!(
                "G({k},{n}) needs 1 <= k < n"
            )));
        }
        Ok(SchubertRing {
            k,
            n,
            truncation: k * (n - k),
        })
    }

    pub fn with_truncation(mut self, truncation: usize) -> Self {
        self.truncation = truncation;
        self
    }

    pub fn dim(&self) -> usize {
        self.k * (self.n - self.k)
    }

    pub fn sigma(&self, parts: &[u32]) -> SchubertClass {
        SchubertClass::sigma(
            self.k,
            self.n,
            Partition::new(parts.to_vec()).expect("valid partition"),
        )
        .truncate(self.truncation)
    }
}

impl GradedAlgebra for SchubertRing {
    type Elem = SchubertClass;

    fn max_degree(&self) -> usize {
        self.truncation
    }
    fn zero(&self) -> SchubertClass {
        SchubertClass::zero(self.k, self.n)
    }
    fn one(&self) -> SchubertClass {
        SchubertClass::one(self.k, self.n)
    }
    fn add(&self, a: &SchubertClass, b: &SchubertClass) -> SchubertClass {
        a.add(b).expect("same Grassmannian")
    }
    fn scale(&self, a: &SchubertClass, c: &Rational) -> SchubertClass {
        a.scale(c)
    }
    fn mul(&self, a: &SchubertClass, b: &SchubertClass) -> SchubertClass {
        a.truncate(self.truncation)
            .lr_multiply(&b.truncate(self.truncation))
            .expect("same Grassmannian")
            .truncate(self.truncation)
    }
    fn part(&self, a: &SchubertClass, degree: usize) -> SchubertClass {
        if degree > self.truncation {
            return self.zero();
        }
        a.part(degree)
    }
    fn is_zero(&self, a: &SchubertClass) -> bool {
        a.is_zero()
    }
}

/// Total Chern class of `T G(k, n) = S^∨ ⊗ Q`.
pub fn grassmannian_tangent_chern(k: usize, n: usize) -> Result<SchubertClass> {
    let ring = SchubertRing::new(k, n)?;
    let dual_sub = (0..=k as u32).fold(ring.zero(), |acc, i| {
        ring.add(&acc, &ring.sigma(&vec![1; i as usize]))
    });
    let quotient =
        (0..=(n - k) as u32).fold(ring.zero(), |acc, j| ring.add(&acc, &ring.sigma(&[j])));
    let s = BundleSpec::new(&ring, k, dual_sub)?;
    let q = BundleSpec::new(&ring, n - k, quotient)?;
    Ok(tensor_product_class(&ring, &s, &q, ring.dim())?.total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn g25(parts: &[u32]) -> SchubertClass {
        SchubertClass::sigma(2, 5, p(parts))
    }

    #[test]
    fn pieri_examples() {
        let s1 = g25(&[1]);
        assert_eq!(
            s1.pieri_multiply(1).unwrap(),
            g25(&[2]).add(&g25(&[1, 1])).unwrap()
        );
        assert_eq!(
            g25(&[2, 1]).pieri_multiply(1).unwrap(),
            g25(&[3, 1]).add(&g25(&[2, 2])).unwrap()
        );
        assert!(g25(&[3, 3]).pieri_multiply(1).unwrap().is_zero());
        assert!(s1.pieri_multiply(4).is_err());
    }

    #[test]
    fn lr_examples() {
        assert_eq!(
            g25(&[1, 1]).lr_multiply(&g25(&[1, 1])).unwrap(),
            g25(&[2, 2])
        );
        assert_eq!(
            g25(&[2]).lr_multiply(&g25(&[2])).unwrap(),
            g25(&[3, 1]).add(&g25(&[2, 2])).unwrap()
        );
        let a = g25(&[2, 1]).add(&g25(&[1]).scale(&int(3))).unwrap();
        assert_eq!(a.lr_multiply(&SchubertClass::one(2, 5)).unwrap(), a);
        let other = SchubertClass::one(2, 4);
        assert!(matches!(
            a.lr_multiply(&other),
            Err(Error::AmbientMismatch(_))
        ));
    }

    #[test]
    fn lr_coefficient_with_multiplicity() {
        // s_{21} * s_{21} contains s_{321} with coefficient 2
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1])), 2);
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[2, 1]), &p(&[4, 2])), 1);
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[1]), &p(&[2])), 1);
    }

    #[test]
    fn integrate_examples() {
        assert_eq!(g25(&[3, 3]).integrate(), int(1));
        let mut x = SchubertClass::one(2, 5);
        for _ in 0..6 {
            x = x.pieri_multiply(1).unwrap();
        }
        assert_eq!(x.integrate(), int(5));
        assert_eq!(g25(&[1]).integrate(), int(0));
    }

    #[test]
    fn tangent_class_of_g25() {
        let c = grassmannian_tangent_chern(2, 5).unwrap();
        assert_eq!(c.part(0), SchubertClass::one(2, 5));
        assert_eq!(c.part(1), g25(&[1]).scale(&int(5)));
        assert_eq!(c.part(6).integrate(), int(10));
        assert!(grassmannian_tangent_chern(3, 3).is_err());
    }

    #[test]
    fn partition_parsing_and_complement() {
        assert_eq!("(2,1)".parse::<Partition>().unwrap(), p(&[2, 1]));
        assert_eq!("()".parse::<Partition>().unwrap(), Partition::empty());
        assert!("(1,2)".parse::<Partition>().is_err());
        assert_eq!(p(&[2, 1]).complement(2, 5), p(&[2, 1]));
        assert_eq!(p(&[3]).complement(2, 5), p(&[3]));
        assert_eq!(Partition::empty().complement(2, 5), p(&[3, 3]));
    }
}
