//! Exact arithmetic in real quadratic fields `Q(sqrt(d))`.
//!
//! Eigenvalues of strongly regular graphs are either integers or of the
//! form `(±sqrt(v) ∓ 1)/2`, so every quantity the bounds need (floors,
//! fractional parts, strict comparisons) can be decided exactly here
//! without touching floating point.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// Shorthand for the rational `n/d`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Shorthand for the integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Splits `d0` as `f^2 * q` with `q` square-free, returning `(f, q)`.
pub fn square_free_split(d0: u64) -> (u64, u64) {
    if d0 == 0 {
        return (0, 0);
    }
    let mut rest = d0;
    let mut outside = 1u64;
    let mut inside = 1u64;
    let mut p = 2u64;
    while p.saturating_mul(p) <= rest {
        let mut e = 0u32;
        while rest.is_multiple_of(p) {
            rest /= p;
            e += 1;
        }
        outside *= p.pow(e / 2);
        if e % 2 == 1 {
            inside *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    (outside, inside * rest)
}

/// Integer square root of a nonnegative integer, or `None` if it is not a perfect square.
pub fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// Floor of a rational as a `BigInt`.
pub fn rational_floor(x: &Rational) -> BigInt {
    x.floor().to_integer()
}

/// The four field operations of [`QuadExt::checked`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// An exact real number `a + b*sqrt(d)` with rational `a`, `b`.
///
/// Always normalized: `d` is square-free and greater than one, or the
/// value is rational and then `b = 0`, `d = 0`. Because of this the
/// derived equality is equality of real numbers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadExt {
    a: Rational,
    b: Rational,
    d: u64,
}

impl QuadExt {
    /// Builds `a + b*sqrt(d0)` and normalizes it.
    pub fn new(a: Rational, b: Rational, d0: u64) -> Self {
        if d0 == 0 || b.is_zero() {
            return Self::rational(a);
        }
        let (outside, inside) = square_free_split(d0);
        let b = b * Rational::from_integer(BigInt::from(outside));
        if inside == 1 {
            Self::rational(a + b)
        } else {
            QuadExt { a, b, d: inside }
        }
    }

    pub fn rational(a: Rational) -> Self {
        QuadExt {
            a,
            b: Rational::zero(),
            d: 0,
        }
    }

    pub fn integer(n: i64) -> Self {
        Self::rational(int(n))
    }

    pub fn zero() -> Self {
        Self::integer(0)
    }

    /// `sqrt(n)` for a nonnegative integer `n`.
    pub fn sqrt(n: u64) -> Self {
        Self::new(Rational::zero(), Rational::one(), n)
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    /// Square-free radicand, `0` for rational values.
    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn is_rational(&self) -> bool {
        self.d == 0
    }

    pub fn is_zero(&self) -> bool {
        self.is_rational() && self.a.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.is_rational() && self.a.is_integer()
    }

    pub fn to_rational(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.a)
    }

    /// The algebraic conjugate `a - b*sqrt(d)`.
    pub fn conjugate(&self) -> Self {
        QuadExt {
            a: self.a.clone(),
            b: -self.b.clone(),
            d: self.d,
        }
    }

    /// The field norm `a^2 - b^2 d`.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &self.b * &self.b * Rational::from_integer(BigInt::from(self.d))
    }

    fn common_radicand(&self, other: &Self) -> Result<u64> {
        match (self.d, other.d) {
            (0, d) | (d, 0) => Ok(d),
            (d, e) if d == e => Ok(d),
            (d, e) => Err(Error::Domain(format!(
                "incompatible radicands sqrt({d}) and sqrt({e})"
            ))),
        }
    }

    /// Exact field arithmetic; fails on mixed radicands or division by zero.
    pub fn checked(&self, other: &Self, op: ArithOp) -> Result<Self> {
        let d = self.common_radicand(other)?;
        let dr = Rational::from_integer(BigInt::from(d));
        let (a, b) = match op {
            ArithOp::Add => (&self.a + &other.a, &self.b + &other.b),
            ArithOp::Sub => (&self.a - &other.a, &self.b - &other.b),
            ArithOp::Mul => (
                &self.a * &other.a + &self.b * &other.b * &dr,
                &self.a * &other.b + &self.b * &other.a,
            ),
            ArithOp::Div => {
                let inv = other.recip()?;
                return self.checked(&inv, ArithOp::Mul);
            }
        };
        Ok(Self::new(a, b, d))
    }

    /// `1/x` via the conjugate: `(a - b*sqrt(d)) / (a^2 - b^2 d)`.
    pub fn recip(&self) -> Result<Self> {
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::Arithmetic("division by zero".into()));
        }
        Ok(QuadExt::new(&self.a / &n, -(&self.b / &n), self.d))
    }

    /// Sign of the real number, decided without floating point.
    pub fn signum(&self) -> i8 {
        let sa = rational_sign(&self.a);
        let sb = rational_sign(&self.b);
        if sb == 0 {
            return sa;
        }
        if sa == 0 || sa == sb {
            return sb;
        }
        // Opposite signs: the term with larger square wins.
        let a2 = &self.a * &self.a;
        let b2d = &self.b * &self.b * Rational::from_integer(BigInt::from(self.d));
        match a2.cmp(&b2d) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0,
        }
    }

    /// Exact comparison; fails only for mixed radicands.
    pub fn try_cmp(&self, other: &Self) -> Result<Ordering> {
        let diff = self.checked(other, ArithOp::Sub)?;
        Ok(diff.signum().cmp(&0))
    }

    /// The unique integer `n` with `n <= x < n + 1`.
    pub fn floor(&self) -> BigInt {
        if self.is_rational() {
            return rational_floor(&self.a);
        }
        // b*sqrt(d) = sign(bn) * sqrt(bn^2 d) / bd; the integer root is off by < 1/bd.
        let bn = self.b.numer();
        let bd = self.b.denom();
        let root = (bn * bn * BigInt::from(self.d)).sqrt();
        let root = Rational::new(if bn.is_negative() { -root } else { root }, bd.clone());
        let mut n = rational_floor(&(&self.a + root));
        while self.sub_int(&n).signum() < 0 {
            n -= 1;
        }
        while self.sub_int(&(&n + 1)).signum() >= 0 {
            n += 1;
        }
        n
    }

    pub fn ceil(&self) -> BigInt {
        -(-self).floor()
    }

    /// Fractional part `x - floor(x)`, always in `[0, 1)`.
    pub fn frac(&self) -> Self {
        let n = self.floor();
        self.sub_int(&n)
    }

    fn sub_int(&self, n: &BigInt) -> Self {
        QuadExt {
            a: &self.a - Rational::from_integer(n.clone()),
            b: self.b.clone(),
            d: self.d,
        }
    }

    /// Approximate decimal value for display only.
    pub fn to_f64(&self) -> f64 {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        a + b * (self.d as f64).sqrt()
    }
}

fn rational_sign(x: &Rational) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

impl PartialOrd for QuadExt {
    /// `None` when the radicands are incompatible.
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.try_cmp(other).ok()
    }
}

impl From<i64> for QuadExt {
    fn from(n: i64) -> Self {
        QuadExt::integer(n)
    }
}

impl From<Rational> for QuadExt {
    fn from(q: Rational) -> Self {
        QuadExt::rational(q)
    }
}

impl From<BigInt> for QuadExt {
    fn from(n: BigInt) -> Self {
        QuadExt::rational(Rational::from_integer(n))
    }
}

impl Neg for &QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt {
            a: -self.a.clone(),
            b: -self.b.clone(),
            d: self.d,
        }
    }
}

impl Neg for QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        -&self
    }
}

// Operator sugar over `checked`. These panic on incompatible radicands or
// division by zero, like integer division does; use `checked` to recover.
macro_rules! forward_op {
    ($tr:ident, $method:ident, $op:expr) => {
        impl $tr<&QuadExt> for &QuadExt {
            type Output = QuadExt;
            fn $method(self, rhs: &QuadExt) -> QuadExt {
                match self.checked(rhs, $op) {
                    Ok(v) => v,
                    Err(e) => panic!("{e}"),
                }
            }
        }
        impl $tr<QuadExt> for QuadExt {
            type Output = QuadExt;
            fn $method(self, rhs: QuadExt) -> QuadExt {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&QuadExt> for QuadExt {
            type Output = QuadExt;
            fn $method(self, rhs: &QuadExt) -> QuadExt {
                (&self).$method(rhs)
            }
        }
        impl $tr<QuadExt> for &QuadExt {
            type Output = QuadExt;
            fn $method(self, rhs: QuadExt) -> QuadExt {
                self.$method(&rhs)
            }
        }
    };
}

forward_op!(Add, add, ArithOp::Add);
forward_op!(Sub, sub, ArithOp::Sub);
forward_op!(Mul, mul, ArithOp::Mul);
forward_op!(Div, div, ArithOp::Div);

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", self.a);
        }
        let b_abs = self.b.abs();
        let coeff = if b_abs.is_one() {
            String::new()
        } else {
            format!("{b_abs}*")
        };
        if self.a.is_zero() {
            let sign = if self.b.is_negative() { "-" } else { "" };
            write!(f, "{sign}{coeff}sqrt({})", self.d)
        } else {
            let sign = if self.b.is_negative() { '-' } else { '+' };
            write!(f, "{} {sign} {coeff}sqrt({})", self.a, self.d)
        }
    }
}
