use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::exact::{int, Rational};

/// Arithmetic over exact rationals and named trace values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Num(Rational),
    Var(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

pub fn num(n: i64) -> Expr {
    Expr::Num(int(n))
}

pub fn rat(q: Rational) -> Expr {
    Expr::Num(q)
}

pub fn var(name: &str) -> Expr {
    Expr::Var(name.to_string())
}

impl Expr {
    pub fn pow(self, e: u32) -> Expr {
        Expr::Pow(Box::new(self), e)
    }

    pub fn eval(&self, env: &dyn Fn(&str) -> Option<Rational>) -> Result<Rational, String> {
        Ok(match self {
            Expr::Num(q) => q.clone(),
            Expr::Var(v) => env(v).ok_or_else(|| format!("unbound name `{v}`"))?,
            Expr::Neg(a) => -a.eval(env)?,
            Expr::Add(a, b) => a.eval(env)? + b.eval(env)?,
            Expr::Sub(a, b) => a.eval(env)? - b.eval(env)?,
            Expr::Mul(a, b) => a.eval(env)? * b.eval(env)?,
            Expr::Div(a, b) => {
                let d = b.eval(env)?;
                if d.is_zero() {
                    return Err(format!("division by zero in {self}"));
                }
                a.eval(env)? / d
            }
            Expr::Pow(a, e) => {
                let base = a.eval(env)?;
                (0..*e).fold(Rational::one(), |acc, _| acc * &base)
            }
        })
    }

    /// `self + k·term`, written with a minus sign when `k < 0`.
    pub fn plus_scaled(self, k: i64, term: Expr) -> Expr {
        let scaled = |m: i64| {
            if m == 1 {
                term.clone()
            } else {
                num(m) * term.clone()
            }
        };
        match k {
            0 => self,
            k if k < 0 => self - scaled(-k),
            k => self + scaled(k),
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) | Expr::Div(..) => 2,
            Expr::Neg(..) => 3,
            Expr::Pow(..) => 4,
            Expr::Num(q) if !q.is_integer() || *q < Rational::zero() => 3,
            Expr::Num(_) | Expr::Var(_) => 5,
        }
    }
}

fn wrap(f: &mut fmt::Formatter<'_>, e: &Expr, min: u8) -> fmt::Result {
    if e.precedence() < min {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Num(q) => write!(f, "{q}"),
            Expr::Var(v) => write!(f, "{v}"),
            Expr::Neg(a) => {
                f.write_str("-")?;
                wrap(f, a, 4)
            }
            Expr::Add(a, b) => {
                wrap(f, a, 1)?;
                f.write_str(" + ")?;
                wrap(f, b, 2)
            }
            Expr::Sub(a, b) => {
                wrap(f, a, 1)?;
                f.write_str(" - ")?;
                wrap(f, b, 2)
            }
            Expr::Mul(a, b) => {
                // A leading fraction or negative literal reads better bracketed.
                wrap(f, a, if matches!(**a, Expr::Num(_)) { 4 } else { 2 })?;
                f.write_str("·")?;
                wrap(f, b, 3)
            }
            Expr::Div(a, b) => {
                wrap(f, a, 2)?;
                f.write_str("/")?;
                wrap(f, b, 4)
            }
            Expr::Pow(a, e) => {
                wrap(f, a, 5)?;
                write!(f, "^{e}")
            }
        }
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $v:ident) => {
        impl $tr for Expr {
            type Output = Expr;
            fn $m(self, rhs: Expr) -> Expr {
                Expr::$v(Box::new(self), Box::new(rhs))
            }
        }
    };
}

binop!(Add, add, Add);
binop!(Sub, sub, Sub);
binop!(Mul, mul, Mul);
binop!(Div, div, Div);

impl Neg for Expr {
    type Output = Expr;
    fn neg(self) -> Expr {
        Expr::Neg(Box::new(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::frac;

    #[test]
    fn evaluates_and_prints() {
        let e = ((var("r").pow(2) + num(3)).pow(2) - num(16)) / num(128);
        assert_eq!(e.to_string(), "((r^2 + 3)^2 - 16)/128");
        let v = e.eval(&|n| (n == "r").then(|| int(3))).unwrap();
        assert_eq!(v, int(1));
        let f = num(2) - (var("a") - var("b"));
        assert_eq!(f.to_string(), "2 - (a - b)");
        let g = rat(frac(-1, 720)) * var("x");
        assert_eq!(g.to_string(), "(-1/720)·x");
    }

    #[test]
    fn unbound_name_is_reported() {
        assert!(var("zz").eval(&|_| None).unwrap_err().contains("zz"));
        assert!((num(1) / num(0)).eval(&|_| None).is_err());
    }
}
