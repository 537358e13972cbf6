//! Parameter tuples of strongly regular and edge-regular graphs: spectra,
//! type classification, complementation and feasibility levels.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{exact_sqrt, int, rat, ArithOp, QuadExt};

/// Parameters `(v, k, lambda)` of an edge-regular graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EdgeRegularParams {
    pub v: i64,
    pub k: i64,
    pub lambda: i64,
}

impl EdgeRegularParams {
    pub fn new(v: i64, k: i64, lambda: i64) -> Result<Self> {
        if v < 2 || k <= 0 || k > v - 1 || lambda < 0 || lambda > k - 1 {
            return Err(Error::Domain(format!(
                "({v}, {k}, {lambda}) violates v >= 2, 0 < k <= v-1, 0 <= lambda <= k-1"
            )));
        }
        Ok(EdgeRegularParams { v, k, lambda })
    }
}

impl fmt::Display for EdgeRegularParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.v, self.k, self.lambda)
    }
}

impl FromStr for EdgeRegularParams {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match parse_ints(s)?.as_slice() {
            &[v, k, l] => EdgeRegularParams::new(v, k, l),
            other => Err(Error::Parse(format!("expected 3 integers, got {}", other.len()))),
        }
    }
}

/// Parameters `(v, k, lambda, mu)` of a strongly regular graph.
///
/// The fields are public so that arbitrary tuples can be fed to
/// [`check_feasibility`]; [`SrgParams::new`] validates the counting level.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SrgParams {
    pub v: i64,
    pub k: i64,
    pub lambda: i64,
    pub mu: i64,
}

impl SrgParams {
    pub fn new(v: i64, k: i64, lambda: i64, mu: i64) -> Result<Self> {
        let p = SrgParams { v, k, lambda, mu };
        check_feasibility(&p, FeasibilityLevel::Counting)
            .map_err(|e| Error::Infeasible(format!("{p}: {e}")))?;
        Ok(p)
    }

    pub fn edge_regular(&self) -> EdgeRegularParams {
        EdgeRegularParams {
            v: self.v,
            k: self.k,
            lambda: self.lambda,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.mu > 0
    }

    pub fn is_coconnected(&self) -> bool {
        self.v - 2 * self.k + self.lambda > 0
    }

    /// Connected and co-connected.
    pub fn is_primitive(&self) -> bool {
        self.is_connected() && self.is_coconnected()
    }

    fn discriminant(&self) -> i128 {
        let lm = (self.lambda - self.mu) as i128;
        lm * lm + 4 * (self.k - self.mu) as i128
    }
}

impl fmt::Display for SrgParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.v, self.k, self.lambda, self.mu)
    }
}

impl FromStr for SrgParams {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match parse_ints(s)?.as_slice() {
            &[v, k, l, m] => SrgParams::new(v, k, l, m),
            other => Err(Error::Parse(format!("expected 4 integers, got {}", other.len()))),
        }
    }
}

/// Parses integers separated by commas and/or whitespace; surrounding parentheses are ignored.
pub fn parse_ints(s: &str) -> Result<Vec<i64>> {
    s.trim()
        .trim_start_matches('(')
        .trim_end_matches(')')
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<i64>()
                .map_err(|_| Error::Parse(format!("not an integer: {t:?}")))
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TypeTag {
    /// Conference parameters with irrational eigenvalues.
    #[serde(rename = "I")]
    TypeIOnly,
    /// Integral eigenvalues, not conference.
    #[serde(rename = "II")]
    TypeIIOnly,
    /// Conference parameters with `v` a perfect square.
    #[serde(rename = "I+II")]
    Both,
}

impl TypeTag {
    pub fn is_type_i(self) -> bool {
        matches!(self, TypeTag::TypeIOnly | TypeTag::Both)
    }

    pub fn is_type_ii(self) -> bool {
        matches!(self, TypeTag::TypeIIOnly | TypeTag::Both)
    }

    pub fn label(self) -> &'static str {
        match self {
            TypeTag::TypeIOnly => "I",
            TypeTag::TypeIIOnly => "II",
            TypeTag::Both => "I+II",
        }
    }
}

impl fmt::Display for TypeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Restricted eigenvalues `r >= s` and their multiplicities `f`, `g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spectrum {
    pub r: QuadExt,
    pub s: QuadExt,
    pub f: QuadExt,
    pub g: QuadExt,
    /// `None` when the tuple is neither type I nor type II (no graph can exist).
    pub type_tag: Option<TypeTag>,
}

impl Spectrum {
    /// Multiplicities as integers, when both are nonnegative integers.
    pub fn multiplicities(&self) -> Option<(i64, i64)> {
        let as_count = |x: &QuadExt| -> Option<i64> {
            let q = x.to_rational()?;
            if !q.is_integer() || q.is_negative() {
                return None;
            }
            q.to_integer().to_i64()
        };
        Some((as_count(&self.f)?, as_count(&self.g)?))
    }
}

fn is_conference(p: &SrgParams) -> bool {
    2 * p.k == p.v - 1 && 4 * p.lambda == p.v - 5 && 4 * p.mu == p.v - 1
}

fn tag_for(p: &SrgParams, disc_is_square: bool) -> Option<TypeTag> {
    match (is_conference(p), disc_is_square) {
        (true, true) => Some(TypeTag::Both),
        (true, false) => Some(TypeTag::TypeIOnly),
        (false, true) => Some(TypeTag::TypeIIOnly),
        (false, false) => None,
    }
}

/// Eigenvalues `r, s` are the roots of `x^2 - (lambda - mu) x - (k - mu)`.
///
/// Multiplicities follow from the trace identities
/// `1 + f + g = v` and `k + f r + g s = 0`:
/// `f, g = ((v - 1) -/+ (2k + (v - 1)(lambda - mu)) / (r - s)) / 2`.
pub fn spectrum(p: &SrgParams) -> Result<Spectrum> {
    let disc = p.discriminant();
    if disc < 0 {
        return Err(Error::Infeasible(format!("{p}: negative discriminant {disc}")));
    }
    let disc_u = u64::try_from(disc)
        .map_err(|_| Error::Resource(format!("{p}: discriminant {disc} exceeds u64")))?;
    let lm = p.lambda - p.mu;
    let root = QuadExt::sqrt(disc_u);
    let half_lm = QuadExt::from(rat(lm, 2));
    let half_root = &root * &QuadExt::from(rat(1, 2));
    let r = &half_lm + &half_root;
    let s = &half_lm - &half_root;
    if root.is_zero() {
        return Err(Error::Infeasible(format!("{p}: r = s")));
    }
    let n = QuadExt::from(int(2 * p.k) + int(p.v - 1) * int(lm));
    let ratio = n.checked(&root, ArithOp::Div)?;
    let vm1 = QuadExt::integer(p.v - 1);
    let half = QuadExt::from(rat(1, 2));
    let f = &(&vm1 - &ratio) * &half;
    let g = &(&vm1 + &ratio) * &half;
    Ok(Spectrum {
        type_tag: tag_for(p, root.is_rational()),
        r,
        s,
        f,
        g,
    })
}

/// Type classification by exact integer identities.
pub fn classify(p: &SrgParams) -> Result<TypeTag> {
    let square = exact_sqrt(&BigInt::from(p.discriminant())).is_some();
    tag_for(p, square).ok_or_else(|| {
        Error::Infeasible(format!(
            "{p}: irrational eigenvalues without conference parameters"
        ))
    })
}

/// Complementary parameters `(v, v-k-1, v-2k+mu-2, v-2k+lambda)`.
pub fn complement(p: &SrgParams) -> Result<SrgParams> {
    if !p.is_connected() {
        return Err(Error::Domain(format!(
            "{p} is disconnected (mu = 0); its complement is complete multipartite"
        )));
    }
    if !p.is_coconnected() {
        return Err(Error::Domain(format!(
            "{p} is complete multipartite (v - 2k + lambda = 0); its complement is disconnected"
        )));
    }
    Ok(SrgParams {
        v: p.v,
        k: p.v - p.k - 1,
        lambda: p.v - 2 * p.k + p.mu - 2,
        mu: p.v - 2 * p.k + p.lambda,
    })
}

/// Cumulative feasibility levels; each implies all previous ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FeasibilityLevel {
    Counting,
    Integrality,
    Krein,
    AbsoluteBound,
}

impl FromStr for FeasibilityLevel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace(['-', '_'], "").as_str() {
            "counting" => Ok(FeasibilityLevel::Counting),
            "integrality" => Ok(FeasibilityLevel::Integrality),
            "krein" => Ok(FeasibilityLevel::Krein),
            "absolutebound" | "absolute" | "all" => Ok(FeasibilityLevel::AbsoluteBound),
            _ => Err(Error::Parse(format!("unknown feasibility level {s:?}"))),
        }
    }
}

/// The first constraint a tuple fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Violation {
    pub level: FeasibilityLevel,
    pub constraint: &'static str,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} level: {}", self.level, self.constraint)
    }
}

pub fn is_feasible(p: &SrgParams, level: FeasibilityLevel) -> bool {
    check_feasibility(p, level).is_ok()
}

/// Checks `p` against every constraint up to and including `level`.
///
/// Accepts arbitrary integer tuples. Integral-eigenvalue tuples run on
/// `i128`; irrational ones go through [`QuadExt`]. Krein and absolute-bound
/// conditions are only meaningful for primitive graphs, so disconnected and
/// complete multipartite tuples pass them vacuously.
pub fn check_feasibility(
    p: &SrgParams,
    level: FeasibilityLevel,
) -> std::result::Result<(), Violation> {
    use FeasibilityLevel::*;
    let fail = |level, constraint| Err(Violation { level, constraint });
    let (v, k, l, m) = (p.v as i128, p.k as i128, p.lambda as i128, p.mu as i128);

    if k < 1 {
        return fail(Counting, "k >= 1");
    }
    if k > v - 2 {
        return fail(Counting, "k <= v - 2");
    }
    if m < 0 || m > k {
        return fail(Counting, "0 <= mu <= k");
    }
    if l < 0 || l > k - 1 {
        return fail(Counting, "0 <= lambda <= k - 1");
    }
    if (v - k - 1) * m != k * (k - l - 1) {
        return fail(Counting, "(v - k - 1) mu = k (k - lambda - 1)");
    }
    if v - 2 * k + l < 0 {
        return fail(Counting, "v - 2k + lambda >= 0");
    }
    if level == Counting {
        return Ok(());
    }

    let disc = (l - m) * (l - m) + 4 * (k - m);
    let numer = 2 * k + (v - 1) * (l - m);
    let root = exact_sqrt(&BigInt::from(disc)).and_then(|r| r.to_i128());
    let primitive = p.is_primitive();

    match root {
        Some(root) => {
            if root == 0 || numer % root != 0 {
                return fail(Integrality, "eigenvalue multiplicities are integers");
            }
            let q = numer / root;
            if (v - 1 - q) % 2 != 0 || v - 1 - q < 0 || v - 1 + q < 0 {
                return fail(Integrality, "eigenvalue multiplicities are nonnegative integers");
            }
            if level == Integrality {
                return Ok(());
            }
            let f = (v - 1 - q) / 2;
            let g = (v - 1 + q) / 2;
            let r = (l - m + root) / 2;
            let s = (l - m - root) / 2;
            if primitive {
                if (r + 1) * (k + r + 2 * r * s) > (k + r) * (s + 1) * (s + 1) {
                    return fail(Krein, "(r+1)(k+r+2rs) <= (k+r)(s+1)^2");
                }
                if (s + 1) * (k + s + 2 * r * s) > (k + s) * (r + 1) * (r + 1) {
                    return fail(Krein, "(s+1)(k+s+2rs) <= (k+s)(r+1)^2");
                }
            }
            if level == Krein {
                return Ok(());
            }
            if primitive {
                if 2 * v > f * (f + 3) {
                    return fail(AbsoluteBound, "v <= f(f+3)/2");
                }
                if 2 * v > g * (g + 3) {
                    return fail(AbsoluteBound, "v <= g(g+3)/2");
                }
            }
            Ok(())
        }
        None => {
            // r - s = sqrt(disc) is irrational, so f is rational only if the numerator vanishes.
            if numer != 0 {
                return fail(Integrality, "eigenvalue multiplicities are integers");
            }
            if !is_conference(p) {
                return fail(Integrality, "irrational eigenvalues require conference parameters");
            }
            if !is_sum_of_two_squares(p.v as u64) {
                return fail(Integrality, "conference order v is a sum of two squares");
            }
            if level == Integrality {
                return Ok(());
            }
            let spec = match spectrum(p) {
                Ok(s) => s,
                Err(_) => return fail(Integrality, "spectrum is defined"),
            };
            if primitive {
                let (lhs1, rhs1, lhs2, rhs2) = krein_sides(p, &spec.r, &spec.s);
                if lhs1 > rhs1 {
                    return fail(Krein, "(r+1)(k+r+2rs) <= (k+r)(s+1)^2");
                }
                if lhs2 > rhs2 {
                    return fail(Krein, "(s+1)(k+s+2rs) <= (k+s)(r+1)^2");
                }
            }
            if level == Krein {
                return Ok(());
            }
            let f = (v - 1) / 2;
            if primitive && 2 * v > f * (f + 3) {
                return fail(AbsoluteBound, "v <= f(f+3)/2");
            }
            Ok(())
        }
    }
}

/// Both sides of the two Krein inequalities, evaluated exactly.
pub fn krein_sides(p: &SrgParams, r: &QuadExt, s: &QuadExt) -> (QuadExt, QuadExt, QuadExt, QuadExt) {
    let one = QuadExt::integer(1);
    let two = QuadExt::integer(2);
    let k = QuadExt::integer(p.k);
    let rs2 = &(&two * r) * s;
    let r1 = r + &one;
    let s1 = s + &one;
    let lhs1 = &r1 * &(&(&k + r) + &rs2);
    let rhs1 = &(&k + r) * &(&s1 * &s1);
    let lhs2 = &s1 * &(&(&k + s) + &rs2);
    let rhs2 = &(&k + s) * &(&r1 * &r1);
    (lhs1, rhs1, lhs2, rhs2)
}

pub fn is_sum_of_two_squares(n: u64) -> bool {
    let mut a = 0u64;
    while a * a <= n {
        let rest = BigInt::from(n - a * a);
        if exact_sqrt(&rest).is_some() {
            return true;
        }
        a += 1;
    }
    false
}

/// Slack in the two parameter inequalities `v - 2k + lambda >= 0` and
/// `k - lambda - 1 >= 0`; zero flags a complete multipartite graph or complement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ParamSlack {
    pub v2k_lambda: i64,
    pub k_lambda_1: i64,
}

pub fn params_bounds_check(p: &SrgParams) -> ParamSlack {
    ParamSlack {
        v2k_lambda: p.v - 2 * p.k + p.lambda,
        k_lambda_1: p.k - p.lambda - 1,
    }
}
