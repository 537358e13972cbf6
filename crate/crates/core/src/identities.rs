//! Polynomial identities behind the clique adjacency bound, checked by
//! substituting a rational parameterization of the parameter relations and
//! expanding.
//!
//! For strongly regular parameters the relations
//! `lambda = mu + r + s`, `k = mu - r s`, `(v - k - 1) mu = k (k - lambda - 1)`
//! are triangular in `(lambda, k, v)`, so `(r, s, mu)` are free and `v` becomes
//! a Laurent polynomial in `mu`. Each identity declares the monomial that
//! clears its remaining denominators.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bounds::cap_eval_rational;
use crate::error::{Error, Result};
use crate::exactnum::{int, rat, Rational};
use crate::poly::{MPoly, Var, NVARS};
use num_traits::Zero;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Parameterization {
    /// Free `(r, s, mu)`; `lambda`, `k`, `v` substituted.
    GeneralSRG,
    /// Conference parameters in `w = sqrt(v)`.
    TypeI,
    /// No substitution.
    Raw,
}

impl Parameterization {
    pub fn name(self) -> &'static str {
        match self {
            Parameterization::GeneralSRG => "GeneralSRG",
            Parameterization::TypeI => "TypeI",
            Parameterization::Raw => "Raw",
        }
    }

    /// Variables left free after substitution.
    pub fn free_vars(self) -> &'static [Var] {
        match self {
            Parameterization::GeneralSRG => &[Var::T, Var::B, Var::C, Var::Mu, Var::R, Var::S],
            Parameterization::TypeI => &[Var::T, Var::B, Var::C, Var::W],
            Parameterization::Raw => &Var::ALL,
        }
    }

    /// Image of one variable, or an error if it is neither substituted nor free.
    pub fn image(self, v: Var) -> Result<MPoly> {
        let x = MPoly::var;
        let c = |n: i64, d: i64| MPoly::constant(rat(n, d));
        let sub = match (self, v) {
            (Parameterization::Raw, _) => None,
            (Parameterization::GeneralSRG, Var::Lambda) => Some(x(Var::Mu) + x(Var::R) + x(Var::S)),
            (Parameterization::GeneralSRG, Var::K) => Some(x(Var::Mu) - x(Var::R) * x(Var::S)),
            (Parameterization::GeneralSRG, Var::V) => {
                // v = k + 1 - k (r+1)(s+1) / mu, since k - lambda - 1 = -(r+1)(s+1).
                let k = x(Var::Mu) - x(Var::R) * x(Var::S);
                let one = MPoly::from(1);
                let tail = &k * (x(Var::R) + &one) * (x(Var::S) + &one) * x(Var::Mu).pow(-1)?;
                Some(&k + &one - tail)
            }
            (Parameterization::TypeI, _) => {
                let w = x(Var::W);
                let w2 = &w * &w;
                match v {
                    Var::V => Some(w2),
                    Var::K => Some((w2 - MPoly::from(1)) * c(1, 2)),
                    Var::Lambda => Some((w2 - MPoly::from(5)) * c(1, 4)),
                    Var::Mu => Some((w2 - MPoly::from(1)) * c(1, 4)),
                    Var::R => Some((w - MPoly::from(1)) * c(1, 2)),
                    Var::S => Some((w + MPoly::from(1)) * c(-1, 2)),
                    _ => None,
                }
            }
            _ => None,
        };
        match sub {
            Some(p) => Ok(p),
            None if self.free_vars().contains(&v) => Ok(x(v)),
            None => Err(Error::Domain(format!(
                "symbol {} is not available under {}",
                v.name(),
                self.name()
            ))),
        }
    }

    /// Rewrites `p` in the free variables of this parameterization.
    pub fn substitute(self, p: &MPoly) -> Result<MPoly> {
        if p.arity() != NVARS {
            return Err(Error::Domain(format!("arity {} is not {NVARS}", p.arity())));
        }
        let mut images: Vec<Option<MPoly>> = vec![None; NVARS];
        for v in Var::ALL {
            if p.mentions(v) {
                images[v.index()] = Some(self.image(v)?);
            }
        }
        let mut out = MPoly::zero();
        for (e, c) in p.terms() {
            let mut term = MPoly::constant(c.clone());
            for v in Var::ALL {
                let k = e[v.index()];
                if k != 0 {
                    let img = images[v.index()].as_ref().expect("image computed");
                    term = term * img.pow(k)?;
                }
            }
            out = out + term;
        }
        Ok(out)
    }
}

/// The clique adjacency polynomial with symbolic arguments.
pub fn cap_poly(v: &MPoly, k: &MPoly, l: &MPoly, x: &MPoly, y: &MPoly) -> MPoly {
    let one = MPoly::from(1);
    let two = MPoly::from(2);
    x * (x + &one) * (v - y) - &two * x * y * (k - y + &one) + y * (y - &one) * (l - y + &two)
}

/// A point assigning every variable; only the free ones are read.
pub type Point = [Rational; NVARS];

#[derive(Debug, Clone)]
pub struct IdentityCase {
    pub id: usize,
    pub name: &'static str,
    pub parameterization: Parameterization,
    pub lhs: MPoly,
    pub rhs: MPoly,
    /// Monomial (in free variables) multiplying `lhs - rhs` before the zero test.
    pub clearing: MPoly,
    /// Direct rational evaluation of `(lhs, rhs)`, sharing no code with the symbolic path.
    pub direct: fn(&Point) -> (Rational, Rational),
}

impl IdentityCase {
    pub fn with_rhs(&self, rhs: MPoly) -> IdentityCase {
        IdentityCase {
            rhs,
            ..self.clone()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verification {
    pub id: usize,
    pub name: &'static str,
    pub parameterization: &'static str,
    /// Total degree of the cleared sides before they cancel.
    pub degree: i32,
    pub passed: bool,
}

/// Substitutes, clears and tests `lhs - rhs` for zero.
pub fn verify_identity(case: &IdentityCase) -> Result<Verification> {
    let param = case.parameterization;
    let lhs = &case.clearing * param.substitute(&case.lhs)?;
    let rhs = &case.clearing * param.substitute(&case.rhs)?;
    let diff = &lhs - &rhs;
    if diff.has_negative_exponents() {
        return Err(Error::Specification(format!(
            "case {} leaves a denominator after clearing by {}",
            case.name, case.clearing
        )));
    }
    let degree = lhs.total_degree().into_iter().chain(rhs.total_degree()).max().unwrap_or(0);
    Ok(Verification {
        id: case.id,
        name: case.name,
        parameterization: param.name(),
        degree,
        passed: diff.is_zero(),
    })
}

fn random_rational(rng: &mut ChaCha8Rng, nonzero: bool) -> Rational {
    loop {
        let n: i64 = rng.gen_range(-60..=60);
        let d: i64 = rng.gen_range(1..=15);
        if !(nonzero && n == 0) {
            return rat(n, d);
        }
    }
}

/// Evaluates both sides directly at `trials` random rational points.
pub fn random_point_crosscheck(case: &IdentityCase, trials: usize, seed: u64) -> Result<bool> {
    if trials == 0 {
        return Err(Error::Domain("need at least one trial".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let mut pt: Point = std::array::from_fn(|_| Rational::zero());
        for &v in case.parameterization.free_vars() {
            let pole = case.parameterization == Parameterization::GeneralSRG && matches!(v, Var::Mu | Var::S);
            pt[v.index()] = random_rational(&mut rng, pole);
        }
        let (l, r) = (case.direct)(&pt);
        if l != r {
            return Ok(false);
        }
    }
    Ok(true)
}

struct Srg {
    v: Rational,
    k: Rational,
    l: Rational,
    mu: Rational,
    r: Rational,
    s: Rational,
    t: Rational,
}

fn general_point(pt: &Point) -> Srg {
    let mu = pt[Var::Mu.index()].clone();
    let r = pt[Var::R.index()].clone();
    let s = pt[Var::S.index()].clone();
    let l = &mu + &r + &s;
    let k = &mu - &r * &s;
    let v = &k + int(1) + &k * (&k - &l - int(1)) / &mu;
    Srg { v, k, l, mu, r, s, t: pt[Var::T.index()].clone() }
}

fn conference_point(pt: &Point) -> Srg {
    let w = pt[Var::W.index()].clone();
    let w2 = &w * &w;
    Srg {
        v: w2.clone(),
        k: (&w2 - int(1)) / int(2),
        l: (&w2 - int(5)) / int(4),
        mu: (&w2 - int(1)) / int(4),
        r: (&w - int(1)) / int(2),
        s: -(&w + int(1)) / int(2),
        t: pt[Var::T.index()].clone(),
    }
}

fn cap(p: &Srg, x: &Rational, y: &Rational) -> Rational {
    cap_eval_rational(&p.v, &p.k, &p.l, x, y)
}

fn direct_delsarte_point(pt: &Point) -> (Rational, Rational) {
    let p = general_point(pt);
    let x = -&p.mu / &p.s;
    let y = int(2) - &p.k / &p.s;
    (cap(&p, &x, &y), (int(2) * &p.s - &p.r) * (&p.r + int(1)))
}

fn direct_conference_odd(pt: &Point) -> (Rational, Rational) {
    let p = conference_point(pt);
    let t = &p.t;
    let lhs = cap(&p, &(&p.r - t), &(int(3) + int(2) * &p.r - int(2) * t));
    let rhs = int(2) * (t - int(1)) * (t + &p.s - int(2)) * (t + int(2) * &p.s);
    (lhs, rhs)
}

fn direct_conference_even(pt: &Point) -> (Rational, Rational) {
    let p = conference_point(pt);
    let (t, s) = (&p.t, &p.s);
    let lhs = cap(&p, &(&p.r - t), &(int(2) + int(2) * &p.r - int(2) * t));
    let rhs = (t + s) * (int(2) * t * t + (int(4) * s - int(1)) * t - int(3) * s - int(1));
    (lhs, rhs)
}

fn direct_shifted_point(pt: &Point) -> (Rational, Rational) {
    let p = general_point(pt);
    let t = &p.t;
    let x = -&p.mu / &p.s - t;
    let y = int(2) - &p.k / &p.s - t;
    let co = &p.v - int(2) * &p.k + &p.l;
    let rhs = (t - int(1)) * (&co * t - (int(2) * &p.s - &p.r) * (&p.r + int(1)));
    (cap(&p, &x, &y), rhs)
}

fn direct_shifted_point_lower(pt: &Point) -> (Rational, Rational) {
    let p = general_point(pt);
    let t = &p.t;
    let x = -&p.mu / &p.s - t;
    let y = int(1) - &p.k / &p.s - t;
    let co = &p.v - int(2) * &p.k + &p.l;
    let rhs = t * (&co * (t - int(1)) + &p.r * (&p.r + int(1)));
    (cap(&p, &x, &y), rhs)
}

fn direct_complement_product(pt: &Point) -> (Rational, Rational) {
    let p = general_point(pt);
    let lhs = &p.mu * (&p.v - int(2) * &p.k + &p.l);
    let rhs = (&p.r * &p.r + &p.r) * (&p.s * &p.s + &p.s);
    (lhs, rhs)
}

fn direct_level_at_one(pt: &Point) -> (Rational, Rational) {
    let p = general_point(pt);
    let l1 = &p.l + int(1);
    let lhs = &p.mu * cap(&p, &int(1), &(&p.l + int(2))) / int(2);
    let rhs = &p.k * (&p.k - (&p.mu + int(1)) * &l1) + &p.mu * &l1 * &l1;
    (lhs, rhs)
}

fn direct_level_difference(pt: &Point) -> (Rational, Rational) {
    let g = |v: Var| pt[v.index()].clone();
    let (v, k, l, b, c) = (g(Var::V), g(Var::K), g(Var::Lambda), g(Var::B), g(Var::C));
    let l2 = &l + int(2);
    let lhs = cap_eval_rational(&v, &k, &l, &b, &c) - cap_eval_rational(&v, &k, &l, &b, &l2);
    let rhs = (&l2 - &c) * (&b - &c) * (&b - &c + int(1)) + int(2) * &b * (&l2 - &c) * (&k - &l - int(1));
    (lhs, rhs)
}

/// The shipped identity cases.
pub fn cases() -> Vec<IdentityCase> {
    let x = MPoly::var;
    let n = MPoly::from;
    let (t, b, c) = (x(Var::T), x(Var::B), x(Var::C));
    let (v, k, l, mu, r, s) = (x(Var::V), x(Var::K), x(Var::Lambda), x(Var::Mu), x(Var::R), x(Var::S));
    let s_inv = s.pow(-1).expect("monomial");
    let s3 = s.pow(3).expect("monomial");
    let one = n(1);
    let co = &v - n(2) * &k + &l;
    let two_s_r = (n(2) * &s - &r) * (&r + &one);

    let case = |id, name, parameterization, lhs, rhs, clearing: &MPoly, direct| IdentityCase {
        id,
        name,
        parameterization,
        lhs,
        rhs,
        clearing: clearing.clone(),
        direct,
    };

    let del_x = -(&mu * &s_inv);
    let del_y = n(2) - &k * &s_inv;
    vec![
        case(
            1,
            "cap-at-delsarte-point",
            Parameterization::GeneralSRG,
            cap_poly(&v, &k, &l, &del_x, &del_y),
            two_s_r.clone(),
            &s3,
            direct_delsarte_point,
        ),
        case(
            2,
            "conference-odd-level",
            Parameterization::TypeI,
            cap_poly(&v, &k, &l, &(&r - &t), &(n(3) + n(2) * &r - n(2) * &t)),
            n(2) * (&t - &one) * (&t + &s - n(2)) * (&t + n(2) * &s),
            &one,
            direct_conference_odd,
        ),
        case(
            3,
            "conference-even-level",
            Parameterization::TypeI,
            cap_poly(&v, &k, &l, &(&r - &t), &(n(2) + n(2) * &r - n(2) * &t)),
            (&t + &s) * (n(2) * &t * &t + (n(4) * &s - &one) * &t - n(3) * &s - &one),
            &one,
            direct_conference_even,
        ),
        case(
            4,
            "cap-at-shifted-delsarte-point",
            Parameterization::GeneralSRG,
            cap_poly(&v, &k, &l, &(&del_x - &t), &(&del_y - &t)),
            (&t - &one) * (&co * &t - &two_s_r),
            &s3,
            direct_shifted_point,
        ),
        case(
            5,
            "cap-at-shifted-point-one-level-down",
            Parameterization::GeneralSRG,
            cap_poly(&v, &k, &l, &(&del_x - &t), &(&del_y - &one - &t)),
            &t * (&co * (&t - &one) + &r * (&r + &one)),
            &s3,
            direct_shifted_point_lower,
        ),
        case(
            6,
            "complement-parameter-product",
            Parameterization::GeneralSRG,
            &mu * &co,
            (&r * &r + &r) * (&s * &s + &s),
            &one,
            direct_complement_product,
        ),
        case(
            7,
            "cap-at-one-top-level",
            Parameterization::GeneralSRG,
            &mu * cap_poly(&v, &k, &l, &one, &(&l + n(2))) * MPoly::constant(rat(1, 2)),
            &k * (&k - (&mu + &one) * (&l + &one)) + &mu * (&l + &one) * (&l + &one),
            &one,
            direct_level_at_one,
        ),
        case(
            8,
            "level-difference",
            Parameterization::Raw,
            cap_poly(&v, &k, &l, &b, &c) - cap_poly(&v, &k, &l, &b, &(&l + n(2))),
            (&l + n(2) - &c) * (&b - &c) * (&b - &c + &one)
                + n(2) * &b * (&l + n(2) - &c) * (&k - &l - &one),
            &one,
            direct_level_difference,
        ),
    ]
}

/// Runs every shipped case.
pub fn verify_all() -> Result<Vec<Verification>> {
    cases().iter().map(verify_identity).collect()
}

/// Every rhs obtained by negating exactly one term.
pub fn single_sign_mutations(case: &IdentityCase) -> Vec<IdentityCase> {
    let terms: Vec<(Vec<i32>, Rational)> = case.rhs.terms().map(|(e, c)| (e.clone(), c.clone())).collect();
    (0..terms.len())
        .map(|i| {
            let flipped = terms.iter().enumerate().map(|(j, (e, c))| {
                let c = if i == j { -c.clone() } else { c.clone() };
                (e.clone(), c)
            });
            case.with_rhs(MPoly::from_terms(NVARS, flipped).expect("same arity"))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn general(r: i64, s: i64, mu: i64, t: i64) -> Point {
        let mut pt: Point = std::array::from_fn(|_| Rational::zero());
        pt[Var::R.index()] = int(r);
        pt[Var::S.index()] = int(s);
        pt[Var::Mu.index()] = int(mu);
        pt[Var::T.index()] = int(t);
        pt
    }

    #[test]
    fn substitution_examples() {
        let x = MPoly::var;
        let p = x(Var::Lambda) - x(Var::Mu) - x(Var::R) - x(Var::S);
        assert!(Parameterization::GeneralSRG.substitute(&p).unwrap().is_zero());
        let p = x(Var::V) - MPoly::from(1) - MPoly::from(4) * x(Var::Mu);
        assert!(Parameterization::TypeI.substitute(&p).unwrap().is_zero());
        let p = x(Var::S) * x(Var::S) + x(Var::S) - x(Var::Mu);
        assert!(Parameterization::TypeI.substitute(&p).unwrap().is_zero());
    }

    #[test]
    fn unknown_symbol_is_domain_error() {
        let p = MPoly::var(Var::W);
        assert!(matches!(
            Parameterization::GeneralSRG.substitute(&p),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn general_substitution_recovers_counting_identity() {
        let x = MPoly::var;
        let one = MPoly::from(1);
        let p = (x(Var::V) - x(Var::K) - &one) * x(Var::Mu)
            - x(Var::K) * (x(Var::K) - x(Var::Lambda) - &one);
        assert!(Parameterization::GeneralSRG.substitute(&p).unwrap().is_zero());
    }

    #[test]
    fn every_case_verifies() {
        for v in verify_all().unwrap() {
            assert!(v.passed, "{} failed", v.name);
            assert!(v.degree > 0);
        }
    }

    #[test]
    fn mutated_complement_product_fails() {
        let x = MPoly::var;
        let (r, s) = (x(Var::R), x(Var::S));
        let case = &cases()[5];
        let bad = case.with_rhs((&r * &r + &r) * (&s * &s - &s));
        assert!(!verify_identity(&bad).unwrap().passed);
    }

    #[test]
    fn uncleared_case_is_specification_error() {
        let mut case = cases()[0].clone();
        case.lhs = MPoly::var(Var::R) * MPoly::var(Var::S).pow(-1).unwrap();
        case.rhs = MPoly::zero();
        case.clearing = MPoly::from(1);
        assert!(matches!(verify_identity(&case), Err(Error::Specification(_))));
    }

    #[test]
    fn direct_evaluation_examples() {
        // (144,39,6,12) has r = 3, s = -9.
        let pt = general(3, -9, 12, 0);
        let p = general_point(&pt);
        assert_eq!((p.v.clone(), p.k.clone(), p.l.clone()), (int(144), int(39), int(6)));
        let (l, r) = direct_delsarte_point(&pt);
        assert_eq!(l, r);

        let mut pt: Point = std::array::from_fn(|_| Rational::zero());
        pt[Var::W.index()] = rat(7, 2);
        pt[Var::T.index()] = int(2);
        let (l, r) = direct_conference_odd(&pt);
        assert_eq!(l, r);

        let mut pt: Point = std::array::from_fn(|_| Rational::zero());
        for (v, x) in [(Var::V, 21), (Var::K, 8), (Var::Lambda, 3), (Var::B, 2), (Var::C, 4)] {
            pt[v.index()] = int(x);
        }
        let (l, r) = direct_level_difference(&pt);
        assert_eq!(l, r);
        assert_eq!(l, int(18));
    }

    #[test]
    fn random_points_agree() {
        for case in cases() {
            assert!(random_point_crosscheck(&case, 100, 7).unwrap(), "{}", case.name);
        }
    }

    #[test]
    fn every_single_sign_flip_is_detected() {
        for case in cases() {
            for m in single_sign_mutations(&case) {
                assert!(!matches!(verify_identity(&m), Ok(Verification { passed: true, .. })));
            }
        }
    }
}
