//! Concrete graphs on bitset adjacency rows.

mod clique;
mod construct;
mod fixture;
mod io;
mod regularity;

pub use clique::{max_clique, max_clique_exhaustive, CliqueResult, MAX_CLIQUE_VERTICES};
pub use construct::{complete, cycle, distance_graph, fano_incidence, heawood_line_distance3, line_graph, paley, path};
pub use fixture::{delta3_report, Delta3Report};
pub use io::{parse_edge_list, parse_graph, parse_graph6, to_edge_list, to_graph6};
pub use regularity::{check_thm42, is_edge_regular, is_strongly_regular};

use crate::error::{Error, Result};

pub(crate) const WORD: usize = 64;

pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(WORD)
}

/// Simple undirected graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<Vec<u64>>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            rows: vec![vec![0; words_for(n)]; n],
        }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::Domain(format!("edge ({u}, {v}) outside 0..{}", self.n)));
        }
        if u == v {
            return Err(Error::Domain(format!("loop at {u}")));
        }
        self.rows[u][v / WORD] |= 1 << (v % WORD);
        self.rows[v][u / WORD] |= 1 << (u % WORD);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u][v / WORD] >> (v % WORD) & 1 == 1
    }

    pub fn row(&self, u: usize) -> &[u64] {
        &self.rows[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.rows[u].iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&v| self.has_edge(u, v))
    }

    pub fn common_neighbors(&self, u: usize, v: usize) -> usize {
        self.rows[u]
            .iter()
            .zip(&self.rows[v])
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| (u + 1..self.n).filter(move |&v| self.has_edge(u, v)).map(move |v| (u, v)))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).sum::<usize>() / 2
    }

    pub fn is_clique(&self, vs: &[usize]) -> bool {
        vs.iter()
            .enumerate()
            .all(|(i, &a)| vs[i + 1..].iter().all(|&b| self.has_edge(a, b)))
    }
}
