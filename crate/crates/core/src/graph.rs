//! Undirected simple graphs in compressed sorted-adjacency form.

use std::collections::BTreeSet;
use std::io::BufRead;

use crate::error::{Error, Result};

/// Internal vertex id, dense in `0..n`.
pub type VertexId = usize;

/// An immutable undirected simple graph.
///
/// Vertices carry the non-negative integer label they had in the input;
/// internal ids are assigned in ascending label order, so any output
/// ordered by internal id is also ordered by label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    neighbors: Vec<VertexId>,
    labels: Vec<u64>,
}

impl Graph {
    /// Builds a graph on vertices `0..n` (labelled `0..n`) from an edge list.
    ///
    /// Self-loops are dropped and duplicate edges, in either orientation,
    /// are merged.
    ///
    /// # Panics
    ///
    /// If an endpoint is `>= n`.
    pub fn from_edges<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let labels = (0..n as u64).collect();
        let edges: Vec<_> = edges
            .into_iter()
            .inspect(|&(u, v)| assert!(u < n && v < n, "edge ({u}, {v}) out of range for n = {n}"))
            .collect();
        Self::build(labels, edges)
    }

    /// Builds a graph from labelled edges. Labels are remapped to `0..n` in
    /// ascending order; every label that appears, including on a dropped
    /// self-loop, becomes a vertex.
    pub fn from_labeled_edges<I>(edges: I) -> Self
    where
        I: IntoIterator<Item = (u64, u64)>,
    {
        let edges: Vec<(u64, u64)> = edges.into_iter().collect();
        let labels: Vec<u64> = edges
            .iter()
            .flat_map(|&(u, v)| [u, v])
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let id = |l: u64| labels.binary_search(&l).unwrap();
        let internal = edges.iter().map(|&(u, v)| (id(u), id(v))).collect();
        Self::build(labels, internal)
    }

    fn build(labels: Vec<u64>, edges: Vec<(VertexId, VertexId)>) -> Self {
        let n = labels.len();
        let mut pairs: Vec<(VertexId, VertexId)> = edges
            .into_iter()
            .filter(|&(u, v)| u != v)
            .flat_map(|(u, v)| [(u, v), (v, u)])
            .collect();
        pairs.sort_unstable();
        pairs.dedup();

        let mut offsets = vec![0usize; n + 1];
        for &(u, _) in &pairs {
            offsets[u + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let neighbors = pairs.into_iter().map(|(_, v)| v).collect();
        Graph {
            offsets,
            neighbors,
            labels,
        }
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn m(&self) -> usize {
        self.neighbors.len() / 2
    }

    /// Ascending neighbor list of `v`.
    #[inline]
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.neighbors[self.offsets[v]..self.offsets[v + 1]]
    }

    /// Position of `v`'s first neighbor in the flat adjacency array.
    #[inline]
    pub(crate) fn offset(&self, v: VertexId) -> usize {
        self.offsets[v]
    }

    #[inline]
    pub fn degree(&self, v: VertexId) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn label(&self, v: VertexId) -> u64 {
        self.labels[v]
    }

    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }
}

/// Reads a whitespace-separated edge list.
///
/// Blank lines and lines starting with `#` or `%` are skipped. The first two
/// tokens of every other line must be non-negative integers; any further
/// columns (weights, timestamps) are ignored.
pub fn load_graph<R: BufRead>(reader: R) -> Result<Graph> {
    let mut edges = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = i + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') || trimmed.starts_with('%') {
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        let mut endpoint = || -> Result<u64> {
            let tok = tokens.next().ok_or_else(|| Error::Parse {
                line: lineno,
                message: "expected two vertex labels".into(),
            })?;
            tok.parse::<u64>().map_err(|_| Error::Parse {
                line: lineno,
                message: format!("invalid vertex label {tok:?}"),
            })
        };
        let u = endpoint()?;
        let v = endpoint()?;
        edges.push((u, v));
    }
    Ok(Graph::from_labeled_edges(edges))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn load(s: &str) -> Result<Graph> {
        load_graph(s.as_bytes())
    }

    #[test]
    fn triangle() {
        let g = load("0 1\n1 2\n2 0").unwrap();
        assert_eq!((g.n(), g.m()), (3, 3));
        assert_eq!(g.neighbors(0), &[1, 2]);
    }

    #[test]
    fn self_loop_and_duplicates_dropped() {
        let g = load("5 5\n5 7\n7 5").unwrap();
        assert_eq!((g.n(), g.m()), (2, 1));
        assert_eq!(g.labels(), &[5, 7]);
        assert!(g.has_edge(0, 1));
    }

    #[test]
    fn comments_skipped() {
        let g = load("0 1\n# c\n1 2").unwrap();
        assert_eq!((g.n(), g.m()), (3, 2));
        let g = load("% header\n\n0 1 0.5\n").unwrap();
        assert_eq!((g.n(), g.m()), (2, 1));
    }

    #[test]
    fn labels_remapped_in_ascending_order() {
        let g = load("30 10\n20 10").unwrap();
        assert_eq!(g.labels(), &[10, 20, 30]);
        assert_eq!(g.neighbors(0), &[1, 2]);
    }

    #[test]
    fn empty_graph_keeps_seen_labels() {
        let g = load("").unwrap();
        assert_eq!((g.n(), g.m()), (0, 0));
        let g = load("4 4").unwrap();
        assert_eq!((g.n(), g.m()), (1, 0));
    }

    #[test]
    fn parse_errors_name_the_line() {
        match load("0 1\n1 x\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
        match load("0 1\n\n7\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(load("-1 2"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn adjacency_is_symmetric_and_sorted() {
        let g = Graph::from_edges(5, [(4, 0), (0, 2), (2, 4), (1, 3), (3, 1)]);
        for u in 0..g.n() {
            let nb = g.neighbors(u);
            assert!(nb.windows(2).all(|w| w[0] < w[1]));
            for &v in nb {
                assert!(g.has_edge(v, u));
            }
        }
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 2), (0, 4), (1, 3), (2, 4)]);
    }
}
