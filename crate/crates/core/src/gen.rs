//! Graph fixtures and synthetic generators.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{Graph, VertexId};

fn clique_edges(vs: &[VertexId], out: &mut Vec<(VertexId, VertexId)>) {
    for (i, &u) in vs.iter().enumerate() {
        for &v in &vs[i + 1..] {
            out.push((u, v));
        }
    }
}

pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    clique_edges(&(0..n).collect::<Vec<_>>(), &mut edges);
    Graph::from_edges(n, edges)
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least 3 vertices");
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Center 0 with `leaves` leaves `1..=leaves`.
pub fn star(leaves: usize) -> Graph {
    Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v)))
}

/// Two triangles sharing vertex 2.
pub fn bowtie() -> Graph {
    Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
}

/// K4 on 0..=3 and K4 on 5..=8, joined by the path 3 - 4 - 5.
pub fn two_k4_path() -> Graph {
    let mut edges = vec![(3, 4), (4, 5)];
    clique_edges(&[0, 1, 2, 3], &mut edges);
    clique_edges(&[5, 6, 7, 8], &mut edges);
    Graph::from_edges(9, edges)
}

/// Cliques of the given sizes, each sharing `overlap` vertices with the
/// previous one. With decreasing sizes this gives a chain of nested cores.
pub fn nested_clique_chain(sizes: &[usize], overlap: usize) -> Graph {
    let mut edges = Vec::new();
    let mut prev: Vec<VertexId> = Vec::new();
    let mut next_id = 0;
    for &size in sizes {
        let shared = overlap.min(prev.len()).min(size);
        let mut vs: Vec<VertexId> = prev[prev.len() - shared..].to_vec();
        while vs.len() < size {
            vs.push(next_id);
            next_id += 1;
        }
        clique_edges(&vs, &mut edges);
        prev = vs;
    }
    Graph::from_edges(next_id, edges)
}

/// Same graph with vertex `v` renamed to `perm[v]`.
pub fn relabel(g: &Graph, perm: &[VertexId]) -> Graph {
    assert_eq!(perm.len(), g.n());
    Graph::from_edges(g.n(), g.edges().map(|(u, v)| (perm[u], perm[v])))
}

/// G(n, p).
pub fn erdos_renyi<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges)
}

/// Preferential attachment: every new vertex links to `k` distinct earlier
/// vertices chosen proportionally to degree, starting from a `K_{k+1}`.
pub fn barabasi_albert<R: Rng + ?Sized>(n: usize, k: usize, rng: &mut R) -> Graph {
    let seed = (k + 1).min(n);
    let mut edges = Vec::new();
    clique_edges(&(0..seed).collect::<Vec<_>>(), &mut edges);
    let mut ends: Vec<VertexId> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
    let mut targets = Vec::with_capacity(k);
    for v in seed..n {
        targets.clear();
        while targets.len() < k {
            let t = if ends.is_empty() {
                rng.gen_range(0..v)
            } else {
                *ends.choose(rng).unwrap()
            };
            if !targets.contains(&t) {
                targets.push(t);
            }
        }
        for &t in &targets {
            edges.push((t, v));
            ends.extend([t, v]);
        }
    }
    Graph::from_edges(n, edges)
}

/// Sparse random background with planted chains of nested cliques, about
/// `target_edges` edges in total. Roughly half the edges sit in the plants.
pub fn planted_nested_cliques<R: Rng + ?Sized>(n: usize, target_edges: usize, rng: &mut R) -> Graph {
    assert!(n >= 64, "planted graphs need at least 64 vertices");
    let max_edges = n * (n - 1) / 2;
    let target = target_edges.min(max_edges);
    let mut set: HashSet<(VertexId, VertexId)> = HashSet::with_capacity(target);
    let add = |set: &mut HashSet<_>, u: VertexId, v: VertexId| {
        if u != v {
            set.insert((u.min(v), u.max(v)));
        }
    };

    let mut pool: Vec<VertexId> = (0..n).collect();
    let mut buf = Vec::new();
    while set.len() < target / 2 {
        let top = rng.gen_range(12..=40usize).min(n / 2);
        let sizes = [top, top * 3 / 4, top / 2, top / 4];
        let overlap = (top / 8).max(1);
        pool.shuffle(rng);
        let mut prev: Vec<VertexId> = Vec::new();
        let mut fresh = pool.iter().copied();
        for &size in &sizes {
            let shared = overlap.min(prev.len());
            let mut vs: Vec<VertexId> = prev[prev.len() - shared..].to_vec();
            vs.extend(fresh.by_ref().take(size - shared));
            buf.clear();
            clique_edges(&vs, &mut buf);
            for &(u, v) in &buf {
                add(&mut set, u, v);
            }
            prev = vs;
        }
    }
    while set.len() < target {
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        add(&mut set, u, v);
    }
    let mut edges: Vec<_> = set.into_iter().collect();
    edges.sort_unstable();
    Graph::from_edges(n, edges)
}

/// Every labelled simple graph on `n` vertices, `2^(n(n-1)/2)` of them.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(VertexId, VertexId)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    assert!(pairs.len() < 32, "too many graphs to enumerate");
    (0u32..1 << pairs.len()).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        Graph::from_edges(n, edges)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn fixture_sizes() {
        assert_eq!(complete(5).m(), 10);
        assert_eq!(star(5).n(), 6);
        assert_eq!(bowtie().m(), 6);
        let g = two_k4_path();
        assert_eq!((g.n(), g.m()), (9, 14));
        let g = nested_clique_chain(&[8, 6, 4], 2);
        assert_eq!(g.n(), 8 + 4 + 2);
        // Each shared pair is one edge counted by both cliques.
        assert_eq!(g.m(), 28 + 15 + 6 - 2);
    }

    #[test]
    fn all_graphs_count() {
        assert_eq!(all_graphs(4).count(), 64);
        assert_eq!(all_graphs(0).count(), 1);
    }

    #[test]
    fn planted_hits_target() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let g = planted_nested_cliques(2000, 5000, &mut rng);
        assert_eq!(g.m(), 5000);
    }

    #[test]
    fn barabasi_albert_edge_count() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let g = barabasi_albert(50, 3, &mut rng);
        assert_eq!(g.m(), 6 + 46 * 3);
    }
}
