#![allow(dead_code)]

use std::collections::BTreeSet;

use nucleus::dsf::Forest;
use nucleus::{gen, CliqueIndex, Graph, NucleusTree};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const SEED: u64 = 0x5eed_2024;

/// Hand-made graphs with known hierarchies.
pub fn fixtures() -> Vec<(String, Graph)> {
    vec![
        ("star5".into(), gen::star(5)),
        (
            "star-center-last".into(),
            Graph::from_edges(4, [(3, 0), (3, 1), (3, 2)]),
        ),
        ("bowtie".into(), gen::bowtie()),
        ("two-k4-path".into(), gen::two_k4_path()),
        ("nested-8-6-4".into(), gen::nested_clique_chain(&[8, 6, 4], 2)),
        ("nested-8-6-4-wide".into(), gen::nested_clique_chain(&[8, 6, 4], 3)),
        ("k6".into(), gen::complete(6)),
        ("c5".into(), gen::cycle(5)),
        ("empty".into(), Graph::from_edges(3, [])),
    ]
}

/// `count` G(n, p) graphs with n in 6..=12 and p in {0.1, ..., 0.6}.
pub fn random_graphs(count: usize, seed: u64) -> Vec<(String, Graph)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let n = rng.gen_range(6..=12);
            let p = rng.gen_range(1..=6) as f64 / 10.0;
            (format!("er{i}-n{n}-p{p}"), gen::erdos_renyi(n, p, &mut rng))
        })
        .collect()
}

/// Every graph on at most `max_n` vertices.
pub fn small_graphs(max_n: usize) -> Vec<(String, Graph)> {
    (0..=max_n)
        .flat_map(|n| {
            gen::all_graphs(n)
                .enumerate()
                .map(move |(i, g)| (format!("all{n}-{i}"), g))
        })
        .collect()
}

pub fn corpus() -> Vec<(String, Graph)> {
    let mut c = small_graphs(5);
    c.extend(random_graphs(500, SEED));
    c.extend(fixtures());
    c
}

pub type Shape = BTreeSet<(u32, Vec<Vec<usize>>, Option<(u32, Vec<Vec<usize>>)>)>;

/// The tree as `(k, members, parent)` with members as vertex tuples mapped
/// through `map`, for comparing trees across vertex relabelings.
pub fn shape(tree: &NucleusTree, idx: &CliqueIndex, map: &[usize]) -> Shape {
    let sets: Vec<(u32, Vec<Vec<usize>>)> = (0..tree.len())
        .map(|i| {
            let mut m: Vec<Vec<usize>> = tree
                .members(i)
                .into_iter()
                .map(|u| {
                    let mut t: Vec<usize> = idx.tuple(u).into_iter().map(|v| map[v]).collect();
                    t.sort_unstable();
                    t
                })
                .collect();
            m.sort();
            (tree.node(i).k, m)
        })
        .collect();
    (0..tree.len())
        .map(|i| {
            (
                sets[i].0,
                sets[i].1.clone(),
                tree.node(i).parent.map(|p| sets[p].clone()),
            )
        })
        .collect()
}

/// Union by rank with the same tie rule, no path compression.
pub struct Reference {
    up: Vec<Option<usize>>,
    rank: Vec<u32>,
}

impl Reference {
    pub fn new() -> Self {
        Reference {
            up: Vec::new(),
            rank: Vec::new(),
        }
    }

    pub fn push(&mut self) {
        self.up.push(None);
        self.rank.push(0);
    }

    pub fn find(&self, mut x: usize) -> usize {
        while let Some(y) = self.up[x] {
            x = y;
        }
        x
    }

    pub fn union(&mut self, x: usize, y: usize) {
        let (x, y) = (self.find(x), self.find(y));
        if x == y {
            return;
        }
        if self.rank[x] > self.rank[y] {
            self.up[y] = Some(x);
        } else {
            self.up[x] = Some(y);
            if self.rank[x] == self.rank[y] {
                self.rank[y] += 1;
            }
        }
    }
}

pub fn parents_acyclic(f: &Forest) -> bool {
    let n = f.len();
    (0..n).all(|start| {
        let mut cur = start;
        for _ in 0..=n {
            match f.node(cur).parent {
                Some(p) => cur = p,
                None => return true,
            }
        }
        false
    })
}
