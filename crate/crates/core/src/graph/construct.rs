use std::collections::VecDeque;

use super::Graph;
use crate::error::{Error, Result};

/// Largest Paley order built, to keep the dense adjacency small.
pub const MAX_PALEY: u64 = 20_000;

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// Paley graph on the prime field of order `p`: `a ~ b` iff `a - b` is a nonzero square.
pub fn paley(p: u64) -> Result<Graph> {
    if !is_prime(p) {
        return Err(Error::Domain(format!("{p} is not prime (prime powers are not supported)")));
    }
    if p % 4 != 1 {
        return Err(Error::Domain(format!("{p} is not 1 mod 4")));
    }
    if p > MAX_PALEY {
        return Err(Error::Resource(format!("Paley order {p} above {MAX_PALEY}")));
    }
    let n = p as usize;
    let mut square = vec![false; n];
    for x in 1..p {
        square[(x * x % p) as usize] = true;
    }
    let mut g = Graph::empty(n);
    for a in 0..n {
        for b in a + 1..n {
            if square[b - a] {
                g.add_edge(a, b)?;
            }
        }
    }
    Ok(g)
}

pub fn complete(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).expect("in range")
}

pub fn cycle(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).map(|u| (u, (u + 1) % n))).expect("in range")
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|u| (u - 1, u))).expect("in range")
}

/// Lines of the Fano plane on points 1..7.
const FANO_LINES: [[usize; 3]; 7] = [
    [1, 2, 4],
    [2, 3, 5],
    [3, 4, 6],
    [4, 5, 7],
    [5, 6, 1],
    [6, 7, 2],
    [7, 1, 3],
];

/// Point-line incidence graph of the Fano plane: points `0..7`, lines `7..14`.
pub fn fano_incidence() -> Graph {
    let edges = FANO_LINES
        .iter()
        .enumerate()
        .flat_map(|(i, line)| line.iter().map(move |&pt| (pt - 1, 7 + i)));
    Graph::from_edges(14, edges).expect("in range")
}

/// Vertices are the edges of `g` (in [`Graph::edges`] order); adjacent iff they share an endpoint.
pub fn line_graph(g: &Graph) -> Result<Graph> {
    let es = g.edges();
    if es.is_empty() {
        return Err(Error::Domain("line graph of an edgeless graph".into()));
    }
    let mut h = Graph::empty(es.len());
    for i in 0..es.len() {
        for j in i + 1..es.len() {
            let (a, b) = es[i];
            let (c, d) = es[j];
            if a == c || a == d || b == c || b == d {
                h.add_edge(i, j)?;
            }
        }
    }
    Ok(h)
}

fn bfs(g: &Graph, src: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.n()];
    dist[src] = Some(0);
    let mut queue = VecDeque::from([src]);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].expect("queued vertices have a distance");
        for w in g.neighbors(u) {
            if dist[w].is_none() {
                dist[w] = Some(du + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Same vertices; `u ~ v` iff their distance in `g` is exactly `i`.
pub fn distance_graph(g: &Graph, i: usize) -> Result<Graph> {
    if i == 0 {
        return Err(Error::Domain("distance must be at least 1".into()));
    }
    let mut h = Graph::empty(g.n());
    for u in 0..g.n() {
        for (v, d) in bfs(g, u).into_iter().enumerate() {
            if v > u && d == Some(i) {
                h.add_edge(u, v)?;
            }
        }
    }
    Ok(h)
}

/// Distance-3 graph of the line graph of the Fano incidence graph: edge-regular
/// with parameters (21, 8, 3) but not strongly regular.
pub fn heawood_line_distance3() -> Graph {
    let delta = line_graph(&fano_incidence()).expect("incidence graph has edges");
    distance_graph(&delta, 3).expect("positive distance")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn paley_rejects_bad_orders() {
        assert!(matches!(paley(7), Err(Error::Domain(_))));
        assert!(matches!(paley(9), Err(Error::Domain(_))));
        assert!(matches!(paley(21), Err(Error::Domain(_))));
        assert!(paley(13).is_ok());
    }

    #[test]
    fn paley_five_is_pentagon() {
        let g = paley(5).unwrap();
        assert_eq!(g.edge_count(), 5);
        assert!((0..5).all(|u| g.degree(u) == 2));
    }

    #[test]
    fn fano_incidence_is_cubic() {
        let g = fano_incidence();
        assert_eq!(g.edge_count(), 21);
        assert!((0..14).all(|u| g.degree(u) == 3));
    }

    #[test]
    fn line_graph_examples() {
        assert_eq!(line_graph(&complete(3)).unwrap(), complete(3));
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(line_graph(&star).unwrap(), complete(3));
        let l = line_graph(&fano_incidence()).unwrap();
        assert_eq!(l.n(), 21);
        assert!((0..21).all(|u| l.degree(u) == 4));
        assert!(matches!(line_graph(&Graph::empty(3)), Err(Error::Domain(_))));
    }

    #[test]
    fn distance_graph_examples() {
        let c6 = cycle(6);
        assert_eq!(distance_graph(&c6, 1).unwrap(), c6);
        let m = distance_graph(&c6, 3).unwrap();
        assert_eq!(m.edges(), vec![(0, 3), (1, 4), (2, 5)]);
        let d3 = heawood_line_distance3();
        assert_eq!(d3.n(), 21);
        assert!((0..21).all(|u| d3.degree(u) == 8));
    }
}
