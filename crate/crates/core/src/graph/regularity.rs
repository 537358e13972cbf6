use super::{max_clique, Graph};
use crate::bounds::cap_level_min;
use crate::error::{Error, Result};
use crate::srg::{EdgeRegularParams, SrgParams};
use num_traits::Signed;

/// `(v, k, lambda)` when `g` is regular of positive valency and adjacent
/// pairs all have `lambda` common neighbours.
pub fn is_edge_regular(g: &Graph) -> Option<EdgeRegularParams> {
    let n = g.n();
    if n == 0 {
        return None;
    }
    let k = g.degree(0);
    if (0..n).any(|u| g.degree(u) != k) {
        return None;
    }
    let mut lambda = None;
    for (u, v) in g.edges() {
        let c = g.common_neighbors(u, v);
        match lambda {
            None => lambda = Some(c),
            Some(l) if l != c => return None,
            _ => {}
        }
    }
    EdgeRegularParams::new(n as i64, k as i64, lambda? as i64).ok()
}

/// Strongly regular parameters when `g` is edge-regular, not complete, and
/// non-adjacent pairs all have `mu` common neighbours.
pub fn is_strongly_regular(g: &Graph) -> Option<SrgParams> {
    let er = is_edge_regular(g)?;
    let mut mu = None;
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if g.has_edge(u, v) {
                continue;
            }
            let c = g.common_neighbors(u, v);
            match mu {
                None => mu = Some(c),
                Some(m) if m != c => return None,
                _ => {}
            }
        }
    }
    SrgParams::new(er.v, er.k, er.lambda, mu? as i64).ok()
}

/// Checks that the clique adjacency polynomial is nonnegative at every level
/// `2..=omega(g)`, as it must be when cliques of those sizes occur.
pub fn check_thm42(g: &Graph, p: &EdgeRegularParams) -> Result<bool> {
    match is_edge_regular(g) {
        Some(q) if q == *p => {}
        other => {
            return Err(Error::Domain(format!(
                "graph parameters {} do not match {p}",
                other.map_or("(not edge-regular)".to_string(), |q| q.to_string())
            )))
        }
    }
    let omega = max_clique(g)?.size as i64;
    Ok((2..=omega).all(|c| !cap_level_min(p, c).value.is_negative()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, heawood_line_distance3, paley, path};

    pub(crate) fn petersen() -> Graph {
        let pairs: Vec<(usize, usize)> = (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
        let mut g = Graph::empty(10);
        for i in 0..10 {
            for j in i + 1..10 {
                let (a, b) = (pairs[i], pairs[j]);
                if a.0 != b.0 && a.0 != b.1 && a.1 != b.0 && a.1 != b.1 {
                    g.add_edge(i, j).unwrap();
                }
            }
        }
        g
    }

    #[test]
    fn edge_regular_examples() {
        let er = |v, k, l| EdgeRegularParams::new(v, k, l).unwrap();
        assert_eq!(is_edge_regular(&petersen()), Some(er(10, 3, 0)));
        assert_eq!(is_edge_regular(&heawood_line_distance3()), Some(er(21, 8, 3)));
        assert_eq!(is_edge_regular(&path(3)), None);
        assert_eq!(is_edge_regular(&Graph::empty(4)), None);
        assert_eq!(is_edge_regular(&Graph::empty(0)), None);
    }

    #[test]
    fn strongly_regular_examples() {
        let srg = |v, k, l, m| SrgParams::new(v, k, l, m).unwrap();
        assert_eq!(is_strongly_regular(&paley(17).unwrap()), Some(srg(17, 8, 3, 4)));
        assert_eq!(is_strongly_regular(&paley(13).unwrap()), Some(srg(13, 6, 2, 3)));
        assert_eq!(is_strongly_regular(&paley(5).unwrap()), Some(srg(5, 2, 0, 1)));
        assert_eq!(is_strongly_regular(&petersen()), Some(srg(10, 3, 0, 1)));
        assert_eq!(is_strongly_regular(&heawood_line_distance3()), None);
        assert_eq!(is_strongly_regular(&complete(5)), None);
        assert_eq!(is_strongly_regular(&cycle(6)), None);
    }

    #[test]
    fn thm42_examples() {
        let p17 = paley(17).unwrap();
        assert!(check_thm42(&p17, &is_edge_regular(&p17).unwrap()).unwrap());
        let d3 = heawood_line_distance3();
        assert!(check_thm42(&d3, &EdgeRegularParams::new(21, 8, 3).unwrap()).unwrap());
        let p5 = paley(5).unwrap();
        assert!(check_thm42(&p5, &EdgeRegularParams::new(5, 2, 0).unwrap()).unwrap());
        assert!(matches!(
            check_thm42(&p5, &EdgeRegularParams::new(5, 2, 1).unwrap()),
            Err(Error::Domain(_))
        ));
    }
}
