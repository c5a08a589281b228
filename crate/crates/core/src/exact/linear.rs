use std::fmt;

use num_traits::{One, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// Linear equations `Σ coeff_i * var_i = constant` over named unknowns.
///
/// Variables listed in `targets` are eliminated last, so relations among
/// them survive elimination of the others.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSystem {
    variables: Vec<String>,
    targets: Vec<String>,
    rows: Vec<(Vec<Rational>, Rational)>,
}

impl LinearSystem {
    pub fn new<S: Into<String>>(variables: impl IntoIterator<Item = S>) -> Self {
        LinearSystem {
            variables: variables.into_iter().map(Into::into).collect(),
            targets: Vec::new(),
            rows: Vec::new(),
        }
    }

    pub fn with_targets<S: AsRef<str>>(
        mut self,
        targets: impl IntoIterator<Item = S>,
    ) -> Result<Self> {
        for t in targets {
            let t = t.as_ref();
            if !self.variables.iter().any(|v| v == t) {
                return Err(Error::OutOfRange(format!("unknown target variable {t}")));
            }
            self.targets.push(t.to_string());
        }
        Ok(self)
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn targets(&self) -> &[String] {
        &self.targets
    }

    pub fn rows(&self) -> &[(Vec<Rational>, Rational)] {
        &self.rows
    }

    pub fn add_row(&mut self, coeffs: Vec<Rational>, constant: Rational) -> Result<()> {
        if coeffs.len() != self.variables.len() {
            return Err(Error::OutOfRange(format!(
                "row has {} coefficients for {} variables",
                coeffs.len(),
                self.variables.len()
            )));
        }
        self.rows.push((coeffs, constant));
        Ok(())
    }

    /// Adds `Σ c * name = constant`; repeated names accumulate.
    pub fn add_equation(&mut self, terms: &[(&str, Rational)], constant: Rational) -> Result<()> {
        let mut coeffs = vec![Rational::zero(); self.variables.len()];
        for (name, c) in terms {
            let idx = self.index(name)?;
            coeffs[idx] += c;
        }
        self.add_row(coeffs, constant)
    }

    fn index(&self, name: &str) -> Result<usize> {
        self.variables
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::OutOfRange(format!("unknown variable {name}")))
    }

    /// Gauss-Jordan elimination with pivots taken in declaration order,
    /// non-target variables before targets.
    pub fn solve(&self) -> Solution {
        let n = self.variables.len();
        let mut order: Vec<usize> = (0..n)
            .filter(|&i| !self.targets.contains(&self.variables[i]))
            .collect();
        order.extend((0..n).filter(|&i| self.targets.contains(&self.variables[i])));

        let mut rows: Vec<(Vec<Rational>, Rational)> = self.rows.clone();
        let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, column)
        let mut next = 0;
        for &col in &order {
            let Some(p) = (next..rows.len()).find(|&r| !rows[r].0[col].is_zero()) else {
                continue;
            };
            rows.swap(next, p);
            let inv = Rational::one() / &rows[next].0[col];
            let (coeffs, constant) = &mut rows[next];
            coeffs.iter_mut().for_each(|c| *c *= &inv);
            *constant *= &inv;
            let pivot_row = rows[next].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r == next || row.0[col].is_zero() {
                    continue;
                }
                let f = row.0[col].clone();
                for (c, p) in row.0.iter_mut().zip(&pivot_row.0) {
                    *c -= &f * p;
                }
                row.1 -= &f * &pivot_row.1;
            }
            pivots.push((next, col));
            next += 1;
        }

        if rows[next..].iter().any(|(_, c)| !c.is_zero()) {
            return Solution::Inconsistent;
        }

        let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
        let free: Vec<usize> = order
            .iter()
            .copied()
            .filter(|c| !pivot_cols.contains(c))
            .collect();
        if free.is_empty() {
            let mut values = vec![Rational::zero(); n];
            for &(r, c) in &pivots {
                values[c] = rows[r].1.clone();
            }
            return Solution::Unique(self.variables.iter().cloned().zip(values).collect());
        }

        let mut exprs = Vec::new();
        let mut relations = Vec::new();
        for &(r, c) in &pivots {
            let (coeffs, constant) = &rows[r];
            let terms: Vec<(String, Rational)> = free
                .iter()
                .filter(|&&f| !coeffs[f].is_zero())
                .map(|&f| (self.variables[f].clone(), -coeffs[f].clone()))
                .collect();
            let var = self.variables[c].clone();
            if self.targets.contains(&var) {
                let mut rel_terms = vec![(var.clone(), Rational::one())];
                rel_terms.extend(
                    free.iter()
                        .filter(|&&f| !coeffs[f].is_zero())
                        .map(|&f| (self.variables[f].clone(), coeffs[f].clone())),
                );
                relations.push(Relation {
                    terms: rel_terms,
                    constant: constant.clone(),
                });
            }
            exprs.push(PivotExpr {
                variable: var,
                constant: constant.clone(),
                terms,
            });
        }
        Solution::Parametric {
            pivots: exprs,
            free: free.iter().map(|&f| self.variables[f].clone()).collect(),
            relations,
        }
    }
}

/// `variable = constant + Σ coeff * free_var`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PivotExpr {
    pub variable: String,
    pub constant: Rational,
    pub terms: Vec<(String, Rational)>,
}

impl PivotExpr {
    pub fn eval(&self, free_value: impl Fn(&str) -> Rational) -> Rational {
        self.terms
            .iter()
            .fold(self.constant.clone(), |acc, (v, c)| acc + c * free_value(v))
    }
}

/// `Σ coeff * var = constant`, leading coefficient normalized to 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<(String, Rational)>,
    pub constant: Rational,
}

impl Relation {
    pub fn coeff(&self, var: &str) -> Rational {
        self.terms
            .iter()
            .filter(|(v, _)| v == var)
            .map(|(_, c)| c.clone())
            .fold(Rational::zero(), |a, b| a + b)
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (v, c)) in self.terms.iter().enumerate() {
            let neg = *c < Rational::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if mag.is_one() {
                write!(f, "{v}")?;
            } else {
                write!(f, "{mag} {v}")?;
            }
        }
        write!(f, " = {}", self.constant)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    Unique(Vec<(String, Rational)>),
    Parametric {
        pivots: Vec<PivotExpr>,
        free: Vec<String>,
        /// Equations among target variables left after eliminating the rest.
        relations: Vec<Relation>,
    },
    Inconsistent,
}

impl Solution {
    pub fn value(&self, var: &str) -> Option<Rational> {
        match self {
            Solution::Unique(vals) => vals.iter().find(|(v, _)| v == var).map(|(_, c)| c.clone()),
            _ => None,
        }
    }

    pub fn pivot(&self, var: &str) -> Option<&PivotExpr> {
        match self {
            Solution::Parametric { pivots, .. } => pivots.iter().find(|p| p.variable == var),
            _ => None,
        }
    }

    pub fn relations(&self) -> &[Relation] {
        match self {
            Solution::Parametric { relations, .. } => relations,
            _ => &[],
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{frac, int};

    #[test]
    fn symmetric_system() {
        let mut s = LinearSystem::new(["x", "y"]);
        s.add_equation(&[("x", int(1)), ("y", int(1))], int(2))
            .unwrap();
        s.add_equation(&[("x", int(1)), ("y", int(-1))], int(0))
            .unwrap();
        assert_eq!(
            s.solve(),
            Solution::Unique(vec![("x".into(), int(1)), ("y".into(), int(1))])
        );
    }

    #[test]
    fn contradiction() {
        let mut s = LinearSystem::new(["x"]);
        s.add_equation(&[("x", int(1))], int(1)).unwrap();
        s.add_equation(&[("x", int(1))], int(2)).unwrap();
        assert_eq!(s.solve(), Solution::Inconsistent);
    }

    #[test]
    fn width_mismatch_rejected() {
        let mut s = LinearSystem::new(["x", "y"]);
        assert!(s.add_row(vec![int(1)], int(0)).is_err());
        assert!(s.add_equation(&[("z", int(1))], int(0)).is_err());
    }

    #[test]
    fn target_relation_from_chern_number_equations() {
        // Riemann-Roch with chi = 3, c4 = 324, p2 invariance and p1^2 = 4 * 828.
        let vars = ["c1^4", "c1^2c2", "c2^2", "c1c3", "c4"];
        let mut s = LinearSystem::new(vars)
            .with_targets(["c1^4", "c1^2c2"])
            .unwrap();
        s.add_equation(
            &[
                ("c1^4", frac(-1, 720)),
                ("c1^2c2", frac(4, 720)),
                ("c2^2", frac(3, 720)),
                ("c1c3", frac(1, 720)),
                ("c4", frac(-1, 720)),
            ],
            int(3),
        )
        .unwrap();
        s.add_equation(&[("c4", int(1))], int(324)).unwrap();
        s.add_equation(&[("c1c3", int(-2)), ("c2^2", int(1))], int(828))
            .unwrap();
        s.add_equation(
            &[("c1^4", int(1)), ("c1^2c2", int(-4)), ("c2^2", int(4))],
            int(3312),
        )
        .unwrap();
        let sol = s.solve();
        let rel = &sol.relations()[0];
        assert_eq!(rel.coeff("c1^4"), int(1));
        assert_eq!(rel.coeff("c1^2c2"), int(-4));
        assert_eq!(rel.constant, int(0));
        assert_eq!(rel.to_string(), "c1^4 - 4 c1^2c2 = 0");
    }
}
