use super::{words_for, Graph, WORD};
use crate::error::{Error, Result};

/// Desk-scale guard for [`max_clique`].
pub const MAX_CLIQUE_VERTICES: usize = 512;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueResult {
    pub size: usize,
    /// Sorted vertex list of one maximum clique.
    pub witness: Vec<usize>,
}

type Bits = Vec<u64>;

fn first_bit(b: &[u64]) -> Option<usize> {
    b.iter()
        .position(|&w| w != 0)
        .map(|i| i * WORD + b[i].trailing_zeros() as usize)
}

fn is_empty(b: &[u64]) -> bool {
    b.iter().all(|&w| w == 0)
}

struct Search {
    adj: Vec<Bits>,
    best: Vec<usize>,
    current: Vec<usize>,
}

impl Search {
    /// Greedy sequential colouring of `p`; vertices come out in colour order.
    fn colour(&self, p: &Bits) -> Vec<(usize, usize)> {
        let mut uncoloured = p.clone();
        let mut out = Vec::new();
        let mut colour = 0;
        while !is_empty(&uncoloured) {
            colour += 1;
            let mut q = uncoloured.clone();
            while let Some(v) = first_bit(&q) {
                uncoloured[v / WORD] &= !(1 << (v % WORD));
                q[v / WORD] &= !(1 << (v % WORD));
                for (qw, aw) in q.iter_mut().zip(&self.adj[v]) {
                    *qw &= !aw;
                }
                out.push((v, colour));
            }
        }
        out
    }

    fn expand(&mut self, mut p: Bits) {
        let order = self.colour(&p);
        for &(v, colour) in order.iter().rev() {
            if self.current.len() + colour <= self.best.len() {
                return;
            }
            self.current.push(v);
            let next: Bits = p.iter().zip(&self.adj[v]).map(|(a, b)| a & b).collect();
            if is_empty(&next) {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next);
            }
            self.current.pop();
            p[v / WORD] &= !(1 << (v % WORD));
        }
    }
}

/// Exact maximum clique by branch and bound with greedy colouring bounds.
///
/// Vertices are processed in degree-descending order with index tie-break,
/// so the result is deterministic.
pub fn max_clique(g: &Graph) -> Result<CliqueResult> {
    let n = g.n();
    if n > MAX_CLIQUE_VERTICES {
        return Err(Error::Resource(format!(
            "max_clique supports at most {MAX_CLIQUE_VERTICES} vertices, got {n}"
        )));
    }
    if n == 0 {
        return Ok(CliqueResult { size: 0, witness: vec![] });
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&u| (std::cmp::Reverse(g.degree(u)), u));
    let words = words_for(n);
    let adj: Vec<Bits> = order
        .iter()
        .map(|&u| {
            let mut row = vec![0; words];
            for (i, &w) in order.iter().enumerate() {
                if g.has_edge(u, w) {
                    row[i / WORD] |= 1 << (i % WORD);
                }
            }
            row
        })
        .collect();
    let mut all = vec![0u64; words];
    for i in 0..n {
        all[i / WORD] |= 1 << (i % WORD);
    }
    let mut search = Search {
        adj,
        best: vec![],
        current: vec![],
    };
    search.expand(all);
    let mut witness: Vec<usize> = search.best.iter().map(|&i| order[i]).collect();
    witness.sort_unstable();
    Ok(CliqueResult {
        size: witness.len(),
        witness,
    })
}

/// Clique number by enumerating every vertex subset; for testing on tiny graphs.
pub fn max_clique_exhaustive(g: &Graph) -> Result<usize> {
    let n = g.n();
    if n > 24 {
        return Err(Error::Resource(format!("exhaustive search on {n} vertices")));
    }
    let mut best = 0;
    for mask in 0u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let vs: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        if g.is_clique(&vs) {
            best = size;
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle};

    #[test]
    fn small_fixtures() {
        assert_eq!(max_clique(&Graph::empty(0)).unwrap().size, 0);
        assert_eq!(max_clique(&Graph::empty(4)).unwrap().size, 1);
        assert_eq!(max_clique(&complete(7)).unwrap().size, 7);
        assert_eq!(max_clique(&cycle(5)).unwrap().size, 2);
        assert_eq!(max_clique(&cycle(3)).unwrap().size, 3);
    }

    #[test]
    fn witness_is_a_clique() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5), (2, 4)]).unwrap();
        let r = max_clique(&g).unwrap();
        assert_eq!(r.size, 3);
        assert!(g.is_clique(&r.witness));
        assert_eq!(max_clique_exhaustive(&g).unwrap(), 3);
    }

    #[test]
    fn size_guard() {
        assert!(matches!(max_clique(&Graph::empty(513)), Err(Error::Resource(_))));
    }

    #[test]
    fn works_across_word_boundaries() {
        let mut g = Graph::empty(130);
        for (i, &a) in [3usize, 64, 70, 127, 129].iter().enumerate() {
            for &b in &[3usize, 64, 70, 127, 129][i + 1..] {
                g.add_edge(a, b).unwrap();
            }
        }
        let r = max_clique(&g).unwrap();
        assert_eq!(r.witness, vec![3, 64, 70, 127, 129]);
    }
}
