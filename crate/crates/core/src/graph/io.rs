use super::Graph;
use crate::error::{Error, Result};

/// Largest order handled by the graph6 reader and writer.
pub const MAX_GRAPH6_ORDER: usize = 62;

/// Parses `n` on the first line followed by one `u v` pair per line (0-indexed).
/// Blank lines and lines starting with `#` are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .enumerate()
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (_, first) = lines
        .next()
        .ok_or_else(|| Error::Parse("empty edge list".into()))?;
    let n: usize = first
        .parse()
        .map_err(|_| Error::Parse(format!("bad vertex count {first:?}")))?;
    let mut g = Graph::empty(n);
    for (i, line) in lines {
        let nums: Vec<usize> = line
            .split_whitespace()
            .map(|t| t.parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::Parse(format!("line {}: bad edge {line:?}", i + 1)))?;
        let [u, v] = nums[..] else {
            return Err(Error::Parse(format!("line {}: expected two vertices", i + 1)));
        };
        g.add_edge(u, v)
            .map_err(|e| Error::Parse(format!("line {}: {e}", i + 1)))?;
    }
    Ok(g)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Decodes a graph6 string (optionally with the `>>graph6<<` header).
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let s = text.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s).as_bytes();
    let (&first, body) = s
        .split_first()
        .ok_or_else(|| Error::Parse("empty graph6 string".into()))?;
    if !(63..=126).contains(&first) {
        return Err(Error::Parse(format!("bad graph6 byte {first}")));
    }
    let n = (first - 63) as usize;
    if n > MAX_GRAPH6_ORDER {
        return Err(Error::Parse("graph6 orders above 62 are not supported".into()));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    if body.len() != nbits.div_ceil(6) {
        return Err(Error::Parse(format!(
            "graph6 body has {} bytes, expected {}",
            body.len(),
            nbits.div_ceil(6)
        )));
    }
    if let Some(b) = body.iter().find(|b| !(63..=126).contains(*b)) {
        return Err(Error::Parse(format!("bad graph6 byte {b}")));
    }
    let bit = |i: usize| (body[i / 6] - 63) >> (5 - i % 6) & 1 == 1;
    let mut g = Graph::empty(n);
    let mut i = 0;
    for v in 1..n {
        for u in 0..v {
            if bit(i) {
                g.add_edge(u, v)?;
            }
            i += 1;
        }
    }
    Ok(g)
}

pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > MAX_GRAPH6_ORDER {
        return Err(Error::Domain("graph6 orders above 62 are not supported".into()));
    }
    let bits: Vec<bool> = (1..n)
        .flat_map(|v| (0..v).map(move |u| (u, v)))
        .map(|(u, v)| g.has_edge(u, v))
        .collect();
    let mut out = vec![n as u8 + 63];
    for chunk in bits.chunks(6) {
        let mut x = 0u8;
        for (j, &b) in chunk.iter().enumerate() {
            if b {
                x |= 1 << (5 - j);
            }
        }
        out.push(x + 63);
    }
    Ok(String::from_utf8(out).expect("printable ASCII"))
}

/// Edge list when the first meaningful line is a bare integer, graph6 otherwise.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .unwrap_or("");
    if first.parse::<usize>().is_ok() {
        parse_edge_list(text)
    } else {
        parse_graph6(first)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, paley};

    #[test]
    fn known_graph6_strings() {
        // Standard encodings: K4 is "C~", the 5-cycle 0-1-2-3-4 is "Dhc".
        assert_eq!(to_graph6(&complete(4)).unwrap(), "C~");
        assert_eq!(to_graph6(&cycle(5)).unwrap(), "Dhc");
        assert_eq!(parse_graph6("C~").unwrap(), complete(4));
        assert_eq!(parse_graph6(">>graph6<<Dhc").unwrap(), cycle(5));
        assert_eq!(to_graph6(&Graph::empty(0)).unwrap(), "?");
    }

    #[test]
    fn graph6_round_trip() {
        for g in [paley(13).unwrap(), paley(29).unwrap(), cycle(62), Graph::empty(1)] {
            let s = to_graph6(&g).unwrap();
            assert_eq!(parse_graph6(&s).unwrap(), g);
        }
    }

    #[test]
    fn graph6_errors() {
        assert!(matches!(parse_graph6(""), Err(Error::Parse(_))));
        assert!(matches!(parse_graph6("C"), Err(Error::Parse(_))));
        assert!(matches!(parse_graph6("~??"), Err(Error::Parse(_))));
        assert!(to_graph6(&Graph::empty(63)).is_err());
    }

    #[test]
    fn edge_list_round_trip() {
        let g = paley(13).unwrap();
        assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g);
        assert_eq!(parse_graph(&to_edge_list(&g)).unwrap(), g);
        assert_eq!(parse_graph("# comment\nC~\n").unwrap(), complete(4));
    }

    #[test]
    fn edge_list_errors() {
        assert!(matches!(parse_edge_list(""), Err(Error::Parse(_))));
        assert!(matches!(parse_edge_list("3\n0 3\n"), Err(Error::Parse(_))));
        assert!(matches!(parse_edge_list("3\n0 1 2\n"), Err(Error::Parse(_))));
        assert!(matches!(parse_edge_list("3\n1 1\n"), Err(Error::Parse(_))));
        assert!(matches!(parse_edge_list("x\n"), Err(Error::Parse(_))));
    }
}
