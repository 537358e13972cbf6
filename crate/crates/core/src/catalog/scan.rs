use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::annotations::{annotation, known_nonexistent, Annotation};
use crate::bounds::{conjecture_violated, full_report, ConjectureReading};
use crate::error::{Error, Result};
use crate::srg::{complement, is_feasible, FeasibilityLevel, SrgParams, TypeTag};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum Filter {
    #[default]
    All,
    /// Clique adjacency bound strictly below Delsarte.
    Gap,
    /// Some improvement theorem applies.
    Thm,
    /// `lambda + 1 <= -k/s`.
    Thm51,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanConfig {
    pub v_max: i64,
    pub level: FeasibilityLevel,
    /// Worker threads; 0 uses the global pool.
    pub threads: usize,
    pub filter: Filter,
    /// Keep only type I (`Some(true)`) or type II (`Some(false)`) tuples.
    pub type_i: Option<bool>,
    /// Keep one member (the one with `2k < v`) of each complementary pair.
    pub pairs: bool,
    /// Keep tuples known to have no graph.
    pub include_nonexistent: bool,
}

impl ScanConfig {
    pub fn new(v_max: i64) -> Self {
        ScanConfig {
            v_max,
            level: FeasibilityLevel::AbsoluteBound,
            threads: 0,
            filter: Filter::All,
            type_i: None,
            pairs: false,
            include_nonexistent: false,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.v_max < 5 {
            return Err(Error::Domain(format!("v_max must be at least 5, got {}", self.v_max)));
        }
        Ok(())
    }
}

/// Every tuple with `5 <= v <= v_max` passing the configured level, in
/// lexicographic `(v, k, lambda, mu)` order.
pub fn enumerate_feasible(cfg: &ScanConfig) -> Result<Vec<SrgParams>> {
    cfg.validate()?;
    let mut out = Vec::new();
    for v in 5..=cfg.v_max {
        for k in 1..=v - 2 {
            // Descending mu gives ascending lambda = k - 1 - (v-k-1) mu / k.
            for mu in (0..=k).rev() {
                let num = (v - k - 1) * mu;
                if num % k != 0 {
                    continue;
                }
                let lambda = k - 1 - num / k;
                if lambda < 0 {
                    continue;
                }
                let p = SrgParams { v, k, lambda, mu };
                if !is_feasible(&p, cfg.level) {
                    continue;
                }
                if !cfg.include_nonexistent && known_nonexistent(&p) {
                    continue;
                }
                out.push(p);
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRecord {
    #[serde(flatten)]
    pub params: SrgParams,
    #[serde(rename = "type")]
    pub type_tag: TypeTag,
    pub cab: i64,
    pub delsarte: i64,
    pub gap: i64,
    pub thm21: bool,
    pub thm22: bool,
    pub thm51: bool,
    pub connected: bool,
    pub coconnected: bool,
    pub annotation: Option<Annotation>,
}

impl ScanRecord {
    pub fn from_params(p: &SrgParams) -> Result<Self> {
        let r = full_report(p)?;
        let delsarte = r.delsarte.expect("strongly regular report");
        let gap = delsarte - r.cab;
        if gap < 0 {
            return Err(Error::Invariant(format!("{p}: negative gap {gap}")));
        }
        if (r.thm21_applies || r.thm22_applies) && gap < 1 {
            return Err(Error::Invariant(format!("{p}: theorem flagged without a gap")));
        }
        Ok(ScanRecord {
            params: *p,
            type_tag: r.type_tag.expect("strongly regular report"),
            cab: r.cab,
            delsarte,
            gap,
            thm21: r.thm21_applies,
            thm22: r.thm22_applies,
            thm51: r.thm51.expect("strongly regular report"),
            connected: p.is_connected(),
            coconnected: p.is_coconnected(),
            annotation: annotation(p),
        })
    }

    fn keep(&self, cfg: &ScanConfig) -> bool {
        let by_filter = match cfg.filter {
            Filter::All => true,
            Filter::Gap => self.gap > 0,
            Filter::Thm => self.thm21 || self.thm22,
            Filter::Thm51 => self.thm51,
        };
        let by_type = match cfg.type_i {
            None => true,
            Some(true) => self.type_tag.is_type_i(),
            Some(false) => self.type_tag.is_type_ii(),
        };
        let by_pair = !cfg.pairs || 2 * self.params.k < self.params.v;
        by_filter && by_type && by_pair
    }
}

/// How often the improvement theorems apply, over connected co-connected tuples.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ScanStats {
    pub tuples: usize,
    pub primitive_type_i: usize,
    pub thm21: usize,
    pub primitive_type_ii: usize,
    pub thm22: usize,
    /// Complementary pairs among primitive tuples (self-complementary tuples count once).
    pub pairs: usize,
    /// Pairs where some member satisfies a theorem hypothesis.
    pub pairs_with_thm: usize,
}

impl ScanStats {
    fn ratio(a: usize, b: usize) -> f64 {
        if b == 0 {
            0.0
        } else {
            a as f64 / b as f64
        }
    }

    pub fn thm21_fraction(&self) -> f64 {
        Self::ratio(self.thm21, self.primitive_type_i)
    }

    pub fn thm22_fraction(&self) -> f64 {
        Self::ratio(self.thm22, self.primitive_type_ii)
    }

    pub fn pair_fraction(&self) -> f64 {
        Self::ratio(self.pairs_with_thm, self.pairs)
    }

    fn collect(records: &[ScanRecord]) -> Self {
        let mut s = ScanStats {
            tuples: records.len(),
            ..Default::default()
        };
        let by_params: HashMap<SrgParams, &ScanRecord> = records.iter().map(|r| (r.params, r)).collect();
        for r in records.iter().filter(|r| r.connected && r.coconnected) {
            if r.type_tag.is_type_i() {
                s.primitive_type_i += 1;
                s.thm21 += r.thm21 as usize;
            }
            if r.type_tag.is_type_ii() {
                s.primitive_type_ii += 1;
                s.thm22 += r.thm22 as usize;
            }
            let p = &r.params;
            let k_bar = p.v - p.k - 1;
            if p.k <= k_bar {
                s.pairs += 1;
                let partner = complement(p).ok().and_then(|q| by_params.get(&q));
                let any = r.thm21 || r.thm22 || partner.is_some_and(|q| q.thm21 || q.thm22);
                s.pairs_with_thm += any as usize;
            }
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScanOutcome {
    pub records: Vec<ScanRecord>,
    /// Measured over every enumerated tuple, before filtering.
    pub stats: ScanStats,
}

fn with_pool<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> Result<T> {
    if threads == 0 {
        return Ok(f());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::Resource(e.to_string()))?;
    Ok(pool.install(f))
}

fn all_records(cfg: &ScanConfig) -> Result<Vec<ScanRecord>> {
    let tuples = enumerate_feasible(cfg)?;
    with_pool(cfg.threads, || {
        tuples.par_iter().map(ScanRecord::from_params).collect::<Result<Vec<_>>>()
    })?
}

/// Bounds for every feasible tuple, filtered per `cfg`, in enumeration order.
pub fn scan_compare(cfg: &ScanConfig) -> Result<ScanOutcome> {
    let all = all_records(cfg)?;
    let stats = ScanStats::collect(&all);
    let records = all.into_iter().filter(|r| r.keep(cfg)).collect();
    Ok(ScanOutcome { records, stats })
}

/// Tuples where the clique adjacency bound is below `-k/s` (per `reading`)
/// yet `lambda + 1 > -k/s`.
pub fn conjecture_scan(cfg: &ScanConfig, reading: ConjectureReading) -> Result<Vec<ScanRecord>> {
    let all = all_records(cfg)?;
    let flags = with_pool(cfg.threads, || {
        all.par_iter()
            .map(|r| conjecture_violated(&r.params, r.cab, reading))
            .collect::<Result<Vec<bool>>>()
    })??;
    Ok(all
        .into_iter()
        .zip(flags)
        .filter(|(r, bad)| *bad && r.keep(cfg))
        .map(|(r, _)| r)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn srg(v: i64, k: i64, l: i64, m: i64) -> SrgParams {
        SrgParams::new(v, k, l, m).unwrap()
    }

    #[test]
    fn small_enumeration() {
        let mut cfg = ScanConfig::new(10);
        cfg.level = FeasibilityLevel::Integrality;
        let got = enumerate_feasible(&cfg).unwrap();
        for p in [srg(5, 2, 0, 1), srg(9, 4, 1, 2), srg(10, 3, 0, 1), srg(10, 6, 3, 4)] {
            assert!(got.contains(&p), "{p}");
        }
        let mut sorted = got.clone();
        sorted.sort_by_key(|p| (p.v, p.k, p.lambda, p.mu));
        assert_eq!(got, sorted);
        for p in &got {
            assert_eq!((p.v - p.k - 1) * p.mu, p.k * (p.k - p.lambda - 1));
        }
    }

    #[test]
    fn v_max_guard() {
        assert!(matches!(enumerate_feasible(&ScanConfig::new(4)), Err(Error::Domain(_))));
    }

    #[test]
    fn nonexistent_tuples_are_dropped_unless_asked() {
        let mut cfg = ScanConfig::new(49);
        let p = srg(49, 16, 3, 6);
        assert!(!enumerate_feasible(&cfg).unwrap().contains(&p));
        cfg.include_nonexistent = true;
        assert!(enumerate_feasible(&cfg).unwrap().contains(&p));
    }

    #[test]
    fn pairs_keep_the_smaller_valency() {
        let mut cfg = ScanConfig::new(30);
        cfg.pairs = true;
        let out = scan_compare(&cfg).unwrap();
        assert!(out.records.iter().all(|r| 2 * r.params.k < r.params.v));
    }

    #[test]
    fn thread_count_does_not_change_output() {
        let mut cfg = ScanConfig::new(60);
        cfg.threads = 1;
        let a = scan_compare(&cfg).unwrap();
        cfg.threads = 3;
        let b = scan_compare(&cfg).unwrap();
        assert_eq!(a, b);
    }
}
