//! The clique adjacency polynomial and the clique-number bounds built on it.
//!
//! For an edge-regular graph with parameters `(v, k, lambda)`,
//!
//! ```text
//! C(x, y) = x(x+1)(v-y) - 2xy(k-y+1) + y(y-1)(lambda-y+2)
//! ```
//!
//! is nonnegative at every integer `x` whenever the graph has a clique of
//! size `y >= 2`. The clique adjacency bound is the least `c >= 2` such that
//! `C(b, c+1) < 0` for some integer `b`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{int, rat, ArithOp, QuadExt, Rational};
use crate::srg::{classify, spectrum, EdgeRegularParams, SrgParams, TypeTag};

/// Evaluates the clique adjacency polynomial at integer `(x, y)`.
pub fn cap_eval(p: &EdgeRegularParams, x: impl Into<BigInt>, y: impl Into<BigInt>) -> BigInt {
    let (x, y) = (x.into(), y.into());
    let (v, k, l) = (BigInt::from(p.v), BigInt::from(p.k), BigInt::from(p.lambda));
    &x * (&x + 1) * (&v - &y) - 2 * &x * &y * (&k - &y + 1) + &y * (&y - 1) * (&l - &y + 2)
}

/// Coefficients `(A, B, C0)` of `C(x, y) = A x^2 + B x + C0` for fixed `y`.
fn cap_coefficients(p: &EdgeRegularParams, y: i64) -> (BigInt, BigInt, BigInt) {
    let y = BigInt::from(y);
    let a = BigInt::from(p.v) - &y;
    let b = &a - 2 * &y * (BigInt::from(p.k) - &y + 1);
    let c0 = &y * (&y - 1) * (BigInt::from(p.lambda) - &y + 2);
    (a, b, c0)
}

/// Integer minimizer of `C(., y)` and the minimum value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelMinimum {
    pub b: i64,
    pub value: BigInt,
}

/// Minimizes `C(b, y)` over all integers `b` for `2 <= y < v`.
///
/// The leading coefficient `v - y` is positive, so the minimum sits at one
/// of the two integers flanking the real vertex; ties go to the smaller `b`.
pub fn cap_min_over_b(p: &EdgeRegularParams, y: i64) -> Result<LevelMinimum> {
    if y < 2 || y >= p.v {
        return Err(Error::Domain(format!(
            "cap_min_over_b needs 2 <= y < v, got y = {y} for v = {}",
            p.v
        )));
    }
    let (a, b, _) = cap_coefficients(p, y);
    // Vertex at -B / 2A.
    let lo = (-&b).div_floor(&(2 * &a));
    let lo = lo
        .to_i64()
        .ok_or_else(|| Error::Resource("vertex outside i64".into()))?;
    let v_lo = cap_eval(p, lo, y);
    let v_hi = cap_eval(p, lo + 1, y);
    Ok(if v_hi < v_lo {
        LevelMinimum { b: lo + 1, value: v_hi }
    } else {
        LevelMinimum { b: lo, value: v_lo }
    })
}

/// Like [`cap_min_over_b`] but total in `y >= 2`: when `C(., y)` is unbounded
/// below (only possible for `y >= v`) a point with a negative value is returned.
pub fn cap_level_min(p: &EdgeRegularParams, y: i64) -> LevelMinimum {
    if y < p.v {
        return cap_min_over_b(p, y).expect("2 <= y < v");
    }
    let (a, b, c0) = cap_coefficients(p, y);
    let b_at = if a.is_negative() {
        b.abs() + c0.abs() + 1
    } else if b.is_zero() {
        BigInt::zero()
    } else if b.is_positive() {
        -(c0.abs() / &b + BigInt::from(1))
    } else {
        c0.abs() / (-&b) + BigInt::from(1)
    };
    let b_at = b_at.to_i64().expect("witness fits in i64");
    LevelMinimum {
        b: b_at,
        value: cap_eval(p, b_at, y),
    }
}

/// Certificate that `C(b, c + 1) < 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CabWitness {
    pub b: i64,
    pub c_plus_1: i64,
    pub value: BigInt,
}

/// The clique adjacency bound and its witness.
pub fn cab(p: &EdgeRegularParams) -> (i64, CabWitness) {
    let mut c = 2;
    loop {
        let y = c + 1;
        let m = cap_level_min(p, y);
        if m.value.is_negative() {
            return (
                c,
                CabWitness {
                    b: m.b,
                    c_plus_1: y,
                    value: m.value,
                },
            );
        }
        // C(0, lambda + 3) < 0 guarantees termination.
        debug_assert!(c <= p.lambda + 2);
        c += 1;
    }
}

/// Brute-force clique adjacency bound scanning `b` in `[-2v, 2v]`.
pub fn cab_bruteforce(p: &EdgeRegularParams) -> i64 {
    let mut c = 2;
    loop {
        let y = c + 1;
        if (-2 * p.v..=2 * p.v).any(|b| cap_eval(p, b, y).is_negative()) {
            return c;
        }
        c += 1;
    }
}

/// The trivial bound `lambda + 2`.
pub fn trivial_bound(p: &EdgeRegularParams) -> i64 {
    p.lambda + 2
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DelsarteBound {
    pub bound: i64,
    /// Set for disconnected parameters (`mu = 0`), where the trivial bound is returned.
    pub disconnected: bool,
}

/// The real number `1 - k/s` before flooring.
pub fn delsarte_value(k: i64, s: &QuadExt) -> Result<QuadExt> {
    let ks = QuadExt::integer(k).checked(s, ArithOp::Div)?;
    QuadExt::integer(1).checked(&ks, ArithOp::Sub)
}

/// `floor(1 - k/s)`.
pub fn delsarte_bound(p: &SrgParams) -> Result<DelsarteBound> {
    if !p.is_connected() {
        return Ok(DelsarteBound {
            bound: p.lambda + 2,
            disconnected: true,
        });
    }
    let spec = spectrum(p)?;
    let value = delsarte_value(p.k, &spec.s)?;
    Ok(DelsarteBound {
        bound: to_i64(value.floor())?,
        disconnected: false,
    })
}

/// The real number `v / (1 - k_bar/s_bar)` before flooring.
pub fn hoffman_value(v: i64, k_bar: i64, s_bar: &QuadExt) -> Result<QuadExt> {
    if s_bar.signum() >= 0 {
        return Err(Error::Domain(format!("Hoffman bound needs s_bar < 0, got {s_bar}")));
    }
    let denom = delsarte_value(k_bar, s_bar)?;
    QuadExt::integer(v).checked(&denom, ArithOp::Div)
}

/// Clique bound from the Hoffman ratio bound on the complement:
/// `floor(v / (1 - k_bar/s_bar))` where `k_bar`, `s_bar` are the valency and
/// least eigenvalue of the complement.
pub fn hoffman_clique_bound(v: i64, k_bar: i64, s_bar: &QuadExt) -> Result<i64> {
    to_i64(hoffman_value(v, k_bar, s_bar)?.floor())
}

fn to_i64(n: BigInt) -> Result<i64> {
    n.to_i64()
        .ok_or_else(|| Error::Resource(format!("{n} does not fit in i64")))
}

/// Right-hand side of a theorem hypothesis `0 < frc(.) < threshold`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Threshold {
    /// `1 - (r^2 + r)/(v - 2k + lambda)` for integral eigenvalues.
    Quadratic(QuadExt),
    /// `1/4 + (sqrt(v) - sqrt(v + 5/4))/2`; two unrelated radicals, kept symbolic.
    Conference { v: i64 },
}

impl Threshold {
    /// Decimal approximation, for display only.
    pub fn to_f64(&self) -> f64 {
        match self {
            Threshold::Quadratic(q) => q.to_f64(),
            Threshold::Conference { v } => {
                let v = *v as f64;
                0.25 + (v.sqrt() - (v + 1.25).sqrt()) / 2.0
            }
        }
    }
}

impl fmt::Display for Threshold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Threshold::Quadratic(q) => write!(f, "{q}"),
            Threshold::Conference { v } => {
                write!(f, "1/4 + 1/2*sqrt({v}) - 1/4*sqrt({})", 4 * v + 5)
            }
        }
    }
}

/// Hypothesis `0 < frc(sqrt(v)/2) < 1/4 + (sqrt(v) - sqrt(v + 5/4))/2` for
/// conference parameters on `v` vertices.
///
/// With `n = floor(sqrt(v)/2)` the right inequality reduces to
/// `sqrt(16v + 20) < 8n + 2`, which is decided on integers.
pub fn thm21_applies(v: i64) -> Result<(bool, Threshold)> {
    if v < 5 || v % 4 != 1 {
        return Err(Error::Domain(format!("need v = 1 mod 4 and v >= 5, got {v}")));
    }
    let half_root = &QuadExt::sqrt(v as u64) * &QuadExt::from(rat(1, 2));
    let n = half_root.floor();
    let frac_positive = half_root.frac().signum() > 0;
    let rhs = BigInt::from(8) * &n + 2;
    let below = BigInt::from(16 * v + 20) < &rhs * &rhs;
    Ok((frac_positive && below, Threshold::Conference { v }))
}

/// Hypothesis `0 < frc(-k/s) < 1 - (r^2 + r)/(v - 2k + lambda)` for
/// co-connected type II parameters.
pub fn thm22_applies(p: &SrgParams) -> Result<(bool, Threshold)> {
    let tag = classify(p)?;
    if !tag.is_type_ii() {
        return Err(Error::Domain(format!("{p} is not type II")));
    }
    if !p.is_coconnected() {
        return Err(Error::Domain(format!("{p} is not co-connected")));
    }
    let spec = spectrum(p)?;
    let r = spec.r.to_rational().expect("type II eigenvalues are rational");
    let s = spec.s.to_rational().expect("type II eigenvalues are rational");
    let minus_k_over_s = -int(p.k) / s;
    let frc = &minus_k_over_s - minus_k_over_s.floor();
    let eta = int(1) - (r * r + r) / int(p.v - 2 * p.k + p.lambda);
    let holds = frc.is_positive() && frc < eta;
    Ok((holds, Threshold::Quadratic(QuadExt::rational(eta))))
}

/// `-k/s` as an exact number.
pub fn minus_k_over_s(p: &SrgParams) -> Result<QuadExt> {
    let spec = spectrum(p)?;
    QuadExt::integer(-p.k).checked(&spec.s, ArithOp::Div)
}

/// The improved clique bound from whichever theorem hypothesis holds:
/// `floor(sqrt(v) - 1)` for type I, `floor(-k/s)` for type II. Never
/// exceeds the Delsarte bound.
pub fn improved_bound(p: &SrgParams) -> Result<Option<i64>> {
    let tag = classify(p)?;
    let delsarte = delsarte_bound(p)?.bound;
    let mut best: Option<i64> = None;
    if tag.is_type_i() && thm21_applies(p.v)?.0 {
        let x = &QuadExt::sqrt(p.v as u64) - &QuadExt::integer(1);
        best = Some(to_i64(x.floor())?);
    }
    if tag.is_type_ii() && p.is_coconnected() && thm22_applies(p)?.0 {
        let x = to_i64(minus_k_over_s(p)?.floor())?;
        best = Some(best.map_or(x, |b| b.min(x)));
    }
    Ok(best.map(|b| b.min(delsarte)))
}

/// `lambda + 1 <= -k/s`, under which the clique adjacency bound equals `lambda + 2`.
pub fn thm51_predicate(p: &SrgParams) -> Result<bool> {
    let mks = minus_k_over_s(p)?;
    Ok(QuadExt::integer(p.lambda + 1).try_cmp(&mks)?.is_le())
}

/// How the conjectured implication "cab below -k/s forces lambda + 1 <= -k/s"
/// is read when scanning.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum ConjectureReading {
    /// Premise `cab < -k/s`.
    #[default]
    Literal,
    /// Premise `cab < floor(-k/s)`.
    Floor,
}

/// True when `p` (with clique adjacency bound `cab`) satisfies the premise
/// but not the conclusion.
pub fn conjecture_violated(p: &SrgParams, cab: i64, reading: ConjectureReading) -> Result<bool> {
    let mks = minus_k_over_s(p)?;
    let premise = match reading {
        ConjectureReading::Literal => QuadExt::integer(cab).try_cmp(&mks)?.is_lt(),
        ConjectureReading::Floor => BigInt::from(cab) < mks.floor(),
    };
    let conclusion = QuadExt::integer(p.lambda + 1).try_cmp(&mks)?.is_le();
    Ok(premise && !conclusion)
}

/// Every bound for one parameter tuple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsReport {
    pub params: EdgeRegularParams,
    pub mu: Option<i64>,
    pub type_tag: Option<TypeTag>,
    pub cab: i64,
    pub cab_witness: CabWitness,
    pub delsarte: Option<i64>,
    pub trivial: i64,
    pub hoffman_complement: Option<i64>,
    pub thm21_applies: bool,
    pub thm22_applies: bool,
    pub thm_threshold: Option<Threshold>,
    pub improved_bound: Option<i64>,
    pub thm51: Option<bool>,
}

/// Fixed-name JSON form of a [`BoundsReport`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsJson {
    pub v: i64,
    pub k: i64,
    pub lambda: i64,
    pub mu: Option<i64>,
    pub cab: i64,
    pub cab_witness_b: i64,
    pub cab_witness_y: i64,
    pub delsarte: Option<i64>,
    pub trivial: i64,
    pub thm21: bool,
    pub thm22: bool,
    pub improved: Option<i64>,
}

impl BoundsReport {
    pub fn to_json(&self) -> BoundsJson {
        BoundsJson {
            v: self.params.v,
            k: self.params.k,
            lambda: self.params.lambda,
            mu: self.mu,
            cab: self.cab,
            cab_witness_b: self.cab_witness.b,
            cab_witness_y: self.cab_witness.c_plus_1,
            delsarte: self.delsarte,
            trivial: self.trivial,
            thm21: self.thm21_applies,
            thm22: self.thm22_applies,
            improved: self.improved_bound,
        }
    }
}

/// Report for an edge-regular tuple: only the clique adjacency and trivial bounds apply.
pub fn edge_regular_report(p: &EdgeRegularParams) -> BoundsReport {
    let (cab, cab_witness) = cab(p);
    BoundsReport {
        params: *p,
        mu: None,
        type_tag: None,
        cab,
        cab_witness,
        delsarte: None,
        trivial: trivial_bound(p),
        hoffman_complement: None,
        thm21_applies: false,
        thm22_applies: false,
        thm_threshold: None,
        improved_bound: None,
        thm51: None,
    }
}

/// Full report for a strongly regular parameter tuple, with its internal
/// consistency checked before it is returned.
pub fn full_report(p: &SrgParams) -> Result<BoundsReport> {
    let er = p.edge_regular();
    let (cab, cab_witness) = cab(&er);
    let tag = classify(p)?;
    let spec = spectrum(p)?;
    let delsarte = delsarte_bound(p)?;
    let hoffman_complement = if p.is_connected() {
        let s_bar = &(-&spec.r) - &QuadExt::integer(1);
        Some(hoffman_clique_bound(p.v, p.v - p.k - 1, &s_bar)?)
    } else {
        None
    };

    let mut thm_threshold = None;
    let mut thm21 = false;
    let mut thm22 = false;
    if tag.is_type_i() {
        let (holds, t) = thm21_applies(p.v)?;
        thm21 = holds;
        thm_threshold = Some(t);
    }
    if tag.is_type_ii() && p.is_coconnected() {
        let (holds, t) = thm22_applies(p)?;
        thm22 = holds;
        if holds || thm_threshold.is_none() {
            thm_threshold = Some(t);
        }
    }
    let report = BoundsReport {
        params: er,
        mu: Some(p.mu),
        type_tag: Some(tag),
        cab,
        cab_witness,
        delsarte: Some(delsarte.bound),
        trivial: trivial_bound(&er),
        hoffman_complement,
        thm21_applies: thm21,
        thm22_applies: thm22,
        thm_threshold,
        improved_bound: improved_bound(p)?,
        thm51: Some(thm51_predicate(p)?),
    };

    let fail = |what: &str| Err(Error::Invariant(format!("{p}: {what}")));
    if report.cab > report.trivial {
        return fail("cab exceeds the trivial bound");
    }
    if report.cab > delsarte.bound {
        return fail("cab exceeds the Delsarte bound");
    }
    if (thm21 || thm22) && report.cab >= delsarte.bound {
        return fail("theorem hypothesis holds but cab does not beat Delsarte");
    }
    if p.is_primitive() && hoffman_complement != Some(delsarte.bound) {
        return fail("Hoffman bound on the complement differs from Delsarte");
    }
    Ok(report)
}

/// `(floor(-mu/s), floor(2 - k/s))`, the point at which the clique adjacency
/// polynomial is negative for every strongly regular parameter tuple.
pub fn delsarte_point(p: &SrgParams) -> Result<(i64, i64)> {
    let spec = spectrum(p)?;
    let x = QuadExt::integer(-p.mu).checked(&spec.s, ArithOp::Div)?;
    let y = &QuadExt::integer(2) + &QuadExt::integer(-p.k).checked(&spec.s, ArithOp::Div)?;
    Ok((to_i64(x.floor())?, to_i64(y.floor())?))
}

/// Rational-valued clique adjacency polynomial, for evaluating at non-integer points.
pub fn cap_eval_rational(v: &Rational, k: &Rational, l: &Rational, x: &Rational, y: &Rational) -> Rational {
    let one = int(1);
    let two = int(2);
    x * (x + &one) * (v - y) - &two * x * y * (k - y + &one) + y * (y - &one) * (l - y + &two)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn er(v: i64, k: i64, l: i64) -> EdgeRegularParams {
        EdgeRegularParams::new(v, k, l).unwrap()
    }

    fn srg(v: i64, k: i64, l: i64, m: i64) -> SrgParams {
        SrgParams::new(v, k, l, m).unwrap()
    }

    #[test]
    fn cap_eval_examples() {
        assert_eq!(cap_eval(&er(5, 2, 0), 0, 3), BigInt::from(-6));
        assert_eq!(cap_eval(&er(21, 8, 3), 1, 5), BigInt::from(-8));
        for l in 0..12 {
            let p = er(40, 20, l);
            for y in 0..20i64 {
                let expect = -y * (y - 1) * (y - (l + 2));
                assert_eq!(cap_eval(&p, 0, y), BigInt::from(expect));
            }
        }
    }

    #[test]
    fn cap_min_examples() {
        let m = cap_min_over_b(&er(5, 2, 0), 3).unwrap();
        assert_eq!(m, LevelMinimum { b: -1, value: BigInt::from(-6) });

        let m = cap_min_over_b(&er(21, 8, 3), 5).unwrap();
        let brute = (-50..=50).map(|b| cap_eval(&er(21, 8, 3), b, 5)).min().unwrap();
        assert!(m.value.is_negative());
        assert_eq!(m.value, brute);

        // cab(17,8,3) = 3: level 3 stays nonnegative, level 4 goes negative.
        let p = er(17, 8, 3);
        for (y, negative) in [(3, false), (4, true)] {
            let m = cap_min_over_b(&p, y).unwrap();
            assert_eq!(m.value.is_negative(), negative);
            let brute = (-50..=50).map(|b| cap_eval(&p, b, y)).min().unwrap();
            assert_eq!(m.value, brute);
        }
    }

    #[test]
    fn cap_min_rejects_out_of_range() {
        assert!(matches!(cap_min_over_b(&er(5, 2, 0), 5), Err(Error::Domain(_))));
        assert!(matches!(cap_min_over_b(&er(5, 2, 0), 1), Err(Error::Domain(_))));
    }

    #[test]
    fn cab_examples() {
        assert_eq!(cab(&er(17, 8, 3)).0, 3);
        assert_eq!(cab(&er(21, 8, 3)).0, 4);
        assert_eq!(cab(&er(144, 39, 6)).0, 4);
        let (c, w) = cab(&er(21, 8, 3));
        assert_eq!(w.c_plus_1, c + 1);
        assert_eq!(cap_eval(&er(21, 8, 3), w.b, w.c_plus_1), w.value);
        assert!(w.value.is_negative());
    }

    #[test]
    fn cab_handles_complete_graph() {
        // K_6 as an edge-regular graph: clique number 6.
        let p = er(6, 5, 4);
        assert_eq!(cab(&p).0, 6);
        assert_eq!(cab_bruteforce(&p), 6);
    }

    #[test]
    fn cab_matches_bruteforce_small() {
        for v in 2..30 {
            for k in 1..v {
                for l in 0..k {
                    let p = er(v, k, l);
                    assert_eq!(cab(&p).0, cab_bruteforce(&p), "{p}");
                }
            }
        }
    }

    #[test]
    fn delsarte_examples() {
        assert_eq!(delsarte_bound(&srg(17, 8, 3, 4)).unwrap().bound, 4);
        assert_eq!(delsarte_bound(&srg(378, 52, 1, 8)).unwrap().bound, 5);
        assert_eq!(delsarte_bound(&srg(144, 39, 6, 12)).unwrap().bound, 5);
        let d = delsarte_bound(&srg(9, 2, 1, 0)).unwrap();
        assert_eq!(d, DelsarteBound { bound: 3, disconnected: true });
    }

    #[test]
    fn trivial_examples() {
        assert_eq!(trivial_bound(&er(5, 2, 0)), 2);
        assert_eq!(trivial_bound(&er(21, 8, 3)), 5);
        assert_eq!(trivial_bound(&er(50, 7, 0)), 2);
    }

    #[test]
    fn hoffman_examples() {
        let s_bar = &QuadExt::integer(-1) - &QuadExt::sqrt(8);
        assert_eq!(hoffman_clique_bound(21, 12, &s_bar).unwrap(), 5);
        assert_eq!(hoffman_clique_bound(10, 6, &QuadExt::integer(-2)).unwrap(), 2);
        assert!(matches!(
            hoffman_clique_bound(10, 6, &QuadExt::integer(1)),
            Err(Error::Domain(_))
        ));
        // Delsarte value equals the complement's Hoffman value.
        for p in [srg(17, 8, 3, 4), srg(144, 39, 6, 12), srg(10, 3, 0, 1)] {
            let spec = spectrum(&p).unwrap();
            let s_bar = &(-&spec.r) - &QuadExt::integer(1);
            let h = hoffman_value(p.v, p.v - p.k - 1, &s_bar).unwrap();
            assert_eq!(h, delsarte_value(p.k, &spec.s).unwrap());
        }
    }

    #[test]
    fn thm21_examples() {
        for v in [17, 37, 65] {
            assert!(thm21_applies(v).unwrap().0, "v = {v}");
        }
        assert!(!thm21_applies(13).unwrap().0);
        assert!(!thm21_applies(21).unwrap().0);
        assert!(!thm21_applies(9).unwrap().0);
        assert!(matches!(thm21_applies(19), Err(Error::Domain(_))));
    }

    #[test]
    fn thm21_boundary_cases_are_strict() {
        // 4v + 5 = (4n + 1)^2 puts frc(sqrt(v)/2) exactly on the threshold.
        for v in [5, 41, 109] {
            assert!(!thm21_applies(v).unwrap().0, "v = {v}");
        }
    }

    #[test]
    fn thm21_against_float_where_unambiguous() {
        for v in (5..20_000).step_by(4) {
            let x = (v as f64).sqrt() / 2.0;
            let frc = x - x.floor();
            let eta = 0.25 + ((v as f64).sqrt() - (v as f64 + 1.25).sqrt()) / 2.0;
            if (frc - eta).abs() < 1e-9 {
                continue;
            }
            assert_eq!(thm21_applies(v).unwrap().0, frc > 0.0 && frc < eta, "v = {v}");
        }
    }

    #[test]
    fn thm22_examples() {
        let (holds, t) = thm22_applies(&srg(144, 39, 6, 12)).unwrap();
        assert!(holds);
        assert_eq!(t, Threshold::Quadratic(QuadExt::from(rat(5, 6))));
        assert!(thm22_applies(&srg(88, 27, 6, 9)).unwrap().0);
        let (holds, t) = thm22_applies(&srg(50, 7, 0, 1)).unwrap();
        assert!(holds);
        assert_eq!(t, Threshold::Quadratic(QuadExt::from(rat(5, 6))));
        assert!(matches!(thm22_applies(&srg(17, 8, 3, 4)), Err(Error::Domain(_))));
        assert!(matches!(thm22_applies(&srg(9, 6, 3, 6)), Err(Error::Domain(_))));
    }

    #[test]
    fn improved_examples() {
        assert_eq!(improved_bound(&srg(17, 8, 3, 4)).unwrap(), Some(3));
        assert_eq!(improved_bound(&srg(88, 27, 6, 9)).unwrap(), Some(4));
        assert_eq!(improved_bound(&srg(16, 6, 2, 2)).unwrap(), None);
    }

    #[test]
    fn thm51_examples() {
        assert!(thm51_predicate(&srg(50, 7, 0, 1)).unwrap());
        assert!(thm51_predicate(&srg(5, 2, 0, 1)).unwrap());
        assert!(!thm51_predicate(&srg(144, 39, 6, 12)).unwrap());
    }

    #[test]
    fn full_report_examples() {
        let r = full_report(&srg(378, 52, 1, 8)).unwrap();
        assert_eq!((r.cab, r.delsarte), (3, Some(5)));
        assert_eq!(full_report(&srg(99, 14, 1, 2)).unwrap().cab, 3);
        assert_eq!(full_report(&srg(149, 74, 36, 37)).unwrap().cab, 11);
        let json = serde_json::to_value(full_report(&srg(17, 8, 3, 4)).unwrap().to_json()).unwrap();
        let keys: Vec<&str> = json.as_object().unwrap().keys().map(|s| s.as_str()).collect();
        let mut expect = vec![
            "v", "k", "lambda", "mu", "cab", "cab_witness_b", "cab_witness_y", "delsarte",
            "trivial", "thm21", "thm22", "improved",
        ];
        expect.sort();
        let mut keys = keys;
        keys.sort();
        assert_eq!(keys, expect);
    }

    #[test]
    fn edge_regular_report_has_only_cab_and_trivial() {
        let r = edge_regular_report(&er(21, 8, 3));
        assert_eq!((r.cab, r.trivial, r.delsarte), (4, 5, None));
    }

    #[test]
    fn delsarte_point_is_negative() {
        for p in [srg(144, 39, 6, 12), srg(17, 8, 3, 4), srg(9, 2, 1, 0), srg(9, 6, 3, 6)] {
            let (x, y) = delsarte_point(&p).unwrap();
            assert!(cap_eval(&p.edge_regular(), x, y).is_negative(), "{p}");
        }
    }

    #[test]
    fn rational_cap_agrees_with_integer_cap() {
        let p = er(21, 8, 3);
        for x in -5..5 {
            for y in 0..8 {
                let q = cap_eval_rational(&int(21), &int(8), &int(3), &int(x), &int(y));
                assert_eq!(q, Rational::from_integer(cap_eval(&p, x, y)));
            }
        }
    }
}
