//! Sparse Laurent polynomials in `x_1, ..., x_n`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::weyl::reflect;

/// Integer combination of monomials `x^e`, `e ∈ Z^n`. Zero coefficients are
/// never stored, so structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct LaurentPolynomial {
    n: usize,
    terms: BTreeMap<Vec<i32>, i64>,
}

#[derive(Serialize, Deserialize)]
struct Monomial {
    exp: Vec<i32>,
    coef: i64,
}

#[derive(Serialize, Deserialize)]
struct Wire {
    monomials: Vec<Monomial>,
}

impl LaurentPolynomial {
    pub fn zero(n: usize) -> LaurentPolynomial {
        LaurentPolynomial { n, terms: BTreeMap::new() }
    }

    pub fn monomial(exp: Vec<i32>, coef: i64) -> LaurentPolynomial {
        let mut p = LaurentPolynomial::zero(exp.len());
        p.add_term(exp, coef);
        p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_term(&mut self, exp: Vec<i32>, coef: i64) {
        assert_eq!(exp.len(), self.n, "exponent has the wrong number of variables");
        let c = self.terms.entry(exp.clone()).or_insert(0);
        *c += coef;
        if *c == 0 {
            self.terms.remove(&exp);
        }
    }

    pub fn coefficient(&self, exp: &[i32]) -> i64 {
        self.terms.get(exp).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i32>, i64)> {
        self.terms.iter().map(|(e, &c)| (e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of the coefficients.
    pub fn evaluate_at_one(&self) -> i64 {
        self.terms.values().sum()
    }

    /// `p(x_1^{-1}, ..., x_n^{-1})`.
    pub fn inverted(&self) -> LaurentPolynomial {
        self.map_exponents(|e| e.iter().map(|x| -x).collect())
    }

    /// Action of the simple reflection `s_i` on exponents.
    pub fn reflected(&self, i: usize) -> LaurentPolynomial {
        self.map_exponents(|e| reflect(i, e))
    }

    fn map_exponents<F: Fn(&[i32]) -> Vec<i32>>(&self, f: F) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero(self.n);
        for (e, &c) in &self.terms {
            out.add_term(f(e), c);
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let wire = Wire {
            monomials: self
                .terms
                .iter()
                .map(|(e, &c)| Monomial { exp: e.clone(), coef: c })
                .collect(),
        };
        serde_json::to_value(wire).expect("plain data serialises")
    }

    pub fn from_json(n: usize, value: &serde_json::Value) -> Result<LaurentPolynomial, String> {
        let wire: Wire = serde_json::from_value(value.clone()).map_err(|e| e.to_string())?;
        let mut p = LaurentPolynomial::zero(n);
        for m in wire.monomials {
            if m.exp.len() != n {
                return Err(format!("exponent {:?} does not have {} entries", m.exp, n));
            }
            p.add_term(m.exp, m.coef);
        }
        Ok(p)
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (e, &c) in &rhs.terms {
            out.add_term(e.clone(), c);
        }
        out
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -*c;
        }
        out
    }
}

/// Terms in decreasing exponent order, e.g. `x1^2*x2 + x1*x2^-1`.
impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, &c) in self.terms.iter().rev() {
            let mut vars = Vec::new();
            for (i, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => vars.push(format!("x{}", i + 1)),
                    _ => vars.push(format!("x{}^{}", i + 1, k)),
                }
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", sign)?;
            }
            first = false;
            let a = c.abs();
            match (a, vars.is_empty()) {
                (_, true) => write!(f, "{}", a)?,
                (1, false) => write!(f, "{}", vars.join("*"))?,
                (_, false) => write!(f, "{}*{}", a, vars.join("*"))?,
            }
        }
        Ok(())
    }
}
