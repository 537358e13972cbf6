//! Sparse multivariate Laurent polynomials with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::Rational;

/// The fixed variable list. Exponent vectors are dense over this order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    T,
    W,
    B,
    C,
    V,
    K,
    Lambda,
    Mu,
    R,
    S,
}

impl Var {
    pub const ALL: [Var; 10] = [
        Var::T,
        Var::W,
        Var::B,
        Var::C,
        Var::V,
        Var::K,
        Var::Lambda,
        Var::Mu,
        Var::R,
        Var::S,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::T => "t",
            Var::W => "w",
            Var::B => "b",
            Var::C => "c",
            Var::V => "v",
            Var::K => "k",
            Var::Lambda => "lambda",
            Var::Mu => "mu",
            Var::R => "r",
            Var::S => "s",
        }
    }
}

pub const NVARS: usize = Var::ALL.len();

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

/// A polynomial in which exponents may be negative, so that inverses of
/// monomials such as `1/s` can be carried until they are cleared.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MPoly {
    arity: usize,
    terms: BTreeMap<Vec<i32>, Rational>,
}

impl MPoly {
    pub fn zero_with_arity(arity: usize) -> Self {
        MPoly {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn zero() -> Self {
        Self::zero_with_arity(NVARS)
    }

    pub fn constant(c: impl Into<Rational>) -> Self {
        Self::monomial(c, &[])
    }

    pub fn var(v: Var) -> Self {
        Self::monomial(Rational::one(), &[(v, 1)])
    }

    /// `c * prod(var^exp)`.
    pub fn monomial(c: impl Into<Rational>, powers: &[(Var, i32)]) -> Self {
        let mut e = vec![0; NVARS];
        for &(v, k) in powers {
            e[v.index()] += k;
        }
        let mut p = Self::zero();
        p.add_term(e, c.into());
        p
    }

    /// Builds a polynomial of arbitrary arity from raw terms.
    pub fn from_terms(arity: usize, terms: impl IntoIterator<Item = (Vec<i32>, Rational)>) -> Result<Self> {
        let mut p = Self::zero_with_arity(arity);
        for (e, c) in terms {
            if e.len() != arity {
                return Err(Error::Domain(format!(
                    "exponent vector of length {} in a polynomial of arity {arity}",
                    e.len()
                )));
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, e: Vec<i32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i32>, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest exponent sum over the terms; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<i32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn has_negative_exponents(&self) -> bool {
        self.terms.keys().any(|e| e.iter().any(|&k| k < 0))
    }

    /// True when `v` occurs with a nonzero exponent.
    pub fn mentions(&self, v: Var) -> bool {
        self.terms.keys().any(|e| e[v.index()] != 0)
    }

    /// The single term as `(coefficient, exponents)` when this is a monomial.
    pub fn as_monomial(&self) -> Option<(&Rational, &Vec<i32>)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (c, e))
        } else {
            None
        }
    }

    pub fn scale(&self, c: &Rational) -> MPoly {
        let mut out = Self::zero_with_arity(self.arity);
        for (e, k) in &self.terms {
            out.add_term(e.clone(), k * c);
        }
        out
    }

    /// Inverse of a monomial; other polynomials have no Laurent inverse.
    pub fn recip(&self) -> Result<MPoly> {
        let (c, e) = self
            .as_monomial()
            .ok_or_else(|| Error::Domain(format!("cannot invert non-monomial {self}")))?;
        let mut out = Self::zero_with_arity(self.arity);
        out.add_term(e.iter().map(|k| -k).collect(), c.recip());
        Ok(out)
    }

    /// Integer power; negative exponents require a monomial.
    pub fn pow(&self, n: i32) -> Result<MPoly> {
        let base = if n < 0 { self.recip()? } else { self.clone() };
        let mut acc = MPoly::from_terms(self.arity, [(vec![0; self.arity], Rational::one())])?;
        for _ in 0..n.unsigned_abs() {
            acc = poly_arith(&acc, &base, PolyOp::Mul)?;
        }
        Ok(acc)
    }

    /// Evaluates at a point; fails on a pole.
    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.arity {
            return Err(Error::Domain(format!(
                "point of length {} for a polynomial of arity {}",
                point.len(),
                self.arity
            )));
        }
        let mut sum = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                if k < 0 && x.is_zero() {
                    return Err(Error::Arithmetic("pole at evaluation point".into()));
                }
                t *= num_traits::pow::Pow::pow(x, k);
            }
            sum += t;
        }
        Ok(sum)
    }
}

/// Exact `p op q`.
pub fn poly_arith(p: &MPoly, q: &MPoly, op: PolyOp) -> Result<MPoly> {
    if p.arity != q.arity {
        return Err(Error::Domain(format!(
            "arity mismatch: {} vs {}",
            p.arity, q.arity
        )));
    }
    let mut out = MPoly::zero_with_arity(p.arity);
    match op {
        PolyOp::Add | PolyOp::Sub => {
            out.terms = p.terms.clone();
            for (e, c) in &q.terms {
                let c = if op == PolyOp::Sub { -c } else { c.clone() };
                out.add_term(e.clone(), c);
            }
        }
        PolyOp::Mul => {
            for (e1, c1) in &p.terms {
                for (e2, c2) in &q.terms {
                    let e = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                    out.add_term(e, c1 * c2);
                }
            }
        }
    }
    Ok(out)
}

macro_rules! poly_op {
    ($tr:ident, $m:ident, $op:expr) => {
        impl $tr<&MPoly> for &MPoly {
            type Output = MPoly;
            fn $m(self, rhs: &MPoly) -> MPoly {
                poly_arith(self, rhs, $op).expect("polynomial arity")
            }
        }
        impl $tr<MPoly> for MPoly {
            type Output = MPoly;
            fn $m(self, rhs: MPoly) -> MPoly {
                poly_arith(&self, &rhs, $op).expect("polynomial arity")
            }
        }
        impl $tr<&MPoly> for MPoly {
            type Output = MPoly;
            fn $m(self, rhs: &MPoly) -> MPoly {
                poly_arith(&self, rhs, $op).expect("polynomial arity")
            }
        }
        impl $tr<MPoly> for &MPoly {
            type Output = MPoly;
            fn $m(self, rhs: MPoly) -> MPoly {
                poly_arith(self, &rhs, $op).expect("polynomial arity")
            }
        }
    };
}

poly_op!(Add, add, PolyOp::Add);
poly_op!(Sub, sub, PolyOp::Sub);
poly_op!(Mul, mul, PolyOp::Mul);

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        self.scale(&-Rational::one())
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

impl From<i64> for MPoly {
    fn from(n: i64) -> Self {
        MPoly::constant(Rational::from_integer(n.into()))
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let names: Vec<String> = if self.arity == NVARS {
            Var::ALL.iter().map(|v| v.name().to_string()).collect()
        } else {
            (0..self.arity).map(|i| format!("x{i}")).collect()
        };
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let mono: Vec<String> = e
                .iter()
                .zip(&names)
                .filter(|(k, _)| **k != 0)
                .map(|(k, n)| if *k == 1 { n.clone() } else { format!("{n}^{k}") })
                .collect();
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            match (mono.is_empty(), mag.is_one()) {
                (true, _) => write!(f, "{mag}")?,
                (false, true) => write!(f, "{}", mono.join("*"))?,
                (false, false) => write!(f, "{mag}*{}", mono.join("*"))?,
            }
        }
        Ok(())
    }
}
