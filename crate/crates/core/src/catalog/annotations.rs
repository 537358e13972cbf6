//! Existence metadata that cannot be computed from the parameters.

use serde::{Deserialize, Serialize};

use crate::srg::SrgParams;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Existence {
    /// Exists and is unique up to isomorphism.
    #[serde(rename = "!")]
    Unique,
    #[serde(rename = "+")]
    Exists,
    #[serde(rename = "?")]
    Unknown,
    #[serde(rename = "-")]
    DoesNotExist,
}

impl Existence {
    pub fn symbol(self) -> &'static str {
        match self {
            Existence::Unique => "!",
            Existence::Exists => "+",
            Existence::Unknown => "?",
            Existence::DoesNotExist => "-",
        }
    }
}

/// Whether some graph with these parameters has clique number equal to the
/// clique adjacency bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Sharpness {
    #[serde(rename = "Y")]
    Yes,
    #[serde(rename = "N")]
    No,
    #[serde(rename = "?")]
    Unknown,
}

impl Sharpness {
    pub fn symbol(self) -> &'static str {
        match self {
            Sharpness::Yes => "Y",
            Sharpness::No => "N",
            Sharpness::Unknown => "?",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Annotation {
    pub exists: Existence,
    pub sharp: Option<Sharpness>,
}

use Existence::{DoesNotExist, Exists, Unique, Unknown};
use Sharpness::{No, Unknown as U, Yes};

/// Tuples with v <= 150 whose clique adjacency bound beats the Delsarte bound.
type GapRow = ((i64, i64, i64, i64), Existence, Sharpness);

const GAP_TUPLES: [GapRow; 20] = [
    ((17, 8, 3, 4), Unique, Yes),
    ((37, 18, 8, 9), Exists, Yes),
    ((50, 7, 0, 1), Unique, Yes),
    ((56, 10, 0, 2), Unique, Yes),
    ((65, 32, 15, 16), Unknown, U),
    ((77, 16, 0, 4), Unique, Yes),
    ((88, 27, 6, 9), Unknown, U),
    ((99, 14, 1, 2), Unknown, Yes),
    ((100, 22, 0, 6), Unique, Yes),
    ((101, 50, 24, 25), Exists, U),
    ((105, 32, 4, 12), Unique, Yes),
    ((111, 30, 5, 9), Unknown, U),
    ((115, 18, 1, 3), Unknown, Yes),
    ((120, 42, 8, 18), Unique, Yes),
    ((121, 36, 7, 12), Unknown, U),
    ((133, 32, 6, 8), Unknown, U),
    ((144, 39, 6, 12), Exists, Yes),
    ((144, 52, 16, 20), Unknown, U),
    ((145, 72, 35, 36), Unknown, U),
    ((149, 74, 36, 37), Exists, U),
];

/// Tuples where every graph has clique number below the clique adjacency bound.
const NEVER_SHARP: [(i64, i64, i64, i64); 2] = [(16, 10, 6, 6), (27, 16, 10, 8)];

/// Feasible tuples (and their complements) for which no graph exists.
const NONEXISTENT: [(i64, i64, i64, i64); 6] = [
    (49, 16, 3, 6),
    (49, 32, 21, 20),
    (57, 14, 1, 4),
    (57, 42, 31, 30),
    (76, 21, 2, 7),
    (76, 54, 39, 36),
];

fn key(p: &SrgParams) -> (i64, i64, i64, i64) {
    (p.v, p.k, p.lambda, p.mu)
}

pub fn annotation(p: &SrgParams) -> Option<Annotation> {
    let t = key(p);
    if let Some(&(_, exists, sharp)) = GAP_TUPLES.iter().find(|(q, _, _)| *q == t) {
        return Some(Annotation {
            exists,
            sharp: Some(sharp),
        });
    }
    if NEVER_SHARP.contains(&t) {
        return Some(Annotation {
            exists: Exists,
            sharp: Some(No),
        });
    }
    if NONEXISTENT.contains(&t) {
        return Some(Annotation {
            exists: DoesNotExist,
            sharp: None,
        });
    }
    None
}

pub fn known_nonexistent(p: &SrgParams) -> bool {
    NONEXISTENT.contains(&key(p))
}

/// The tuples with v <= 150 where the clique adjacency bound is below the Delsarte bound.
pub fn gap_tuples() -> Vec<SrgParams> {
    GAP_TUPLES
        .iter()
        .map(|&((v, k, l, m), _, _)| SrgParams { v, k, lambda: l, mu: m })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::srg::complement;

    #[test]
    fn nonexistent_list_is_closed_under_complement() {
        for &(v, k, l, m) in &NONEXISTENT {
            let p = SrgParams::new(v, k, l, m).unwrap();
            assert!(known_nonexistent(&complement(&p).unwrap()));
        }
    }

    #[test]
    fn lookups() {
        let p = SrgParams::new(17, 8, 3, 4).unwrap();
        assert_eq!(annotation(&p).unwrap().exists, Unique);
        assert_eq!(annotation(&SrgParams::new(16, 10, 6, 6).unwrap()).unwrap().sharp, Some(No));
        assert_eq!(annotation(&SrgParams::new(10, 3, 0, 1).unwrap()), None);
        assert_eq!(gap_tuples().len(), 20);
    }
}
