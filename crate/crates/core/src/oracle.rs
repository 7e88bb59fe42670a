//! Brute-force reference results for small graphs.
//!
//! Nothing here shares code with the peeling or hierarchy back-ends: cliques
//! come from exhaustive subset enumeration, degrees are recounted from
//! scratch every round, and nuclei are grown one closure at a time. K_r ids
//! follow the same lexicographic order as [`CliqueIndex`](crate::CliqueIndex),
//! so results can be compared id by id.

use std::collections::{HashMap, VecDeque};

use crate::error::Result;
use crate::graph::{Graph, VertexId};
use crate::hierarchy::{NucleusNode, NucleusTree};
use crate::peeling::LambdaTable;
use crate::Rs;

/// All K_rs and K_ss of a graph, the latter as lists of K_r ids.
#[derive(Debug, Clone)]
pub struct BruteCliques {
    pub tuples: Vec<Vec<VertexId>>,
    pub s_cliques: Vec<Vec<usize>>,
}

fn cliques_of_size(g: &Graph, size: usize, out: &mut Vec<Vec<VertexId>>) {
    fn go(g: &Graph, start: usize, size: usize, cur: &mut Vec<VertexId>, out: &mut Vec<Vec<VertexId>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for v in start..g.n() {
            if cur.iter().all(|&u| g.has_edge(u, v)) {
                cur.push(v);
                go(g, v + 1, size, cur, out);
                cur.pop();
            }
        }
    }
    go(g, 0, size, &mut Vec::new(), out);
}

impl BruteCliques {
    pub fn new(g: &Graph, rs: Rs) -> Self {
        let mut tuples = Vec::new();
        cliques_of_size(g, rs.r(), &mut tuples);
        let id: HashMap<&[VertexId], usize> = tuples.iter().enumerate().map(|(i, t)| (t.as_slice(), i)).collect();
        let mut big = Vec::new();
        cliques_of_size(g, rs.s(), &mut big);
        let s_cliques = big
            .iter()
            .map(|c| {
                (0..c.len())
                    .map(|skip| {
                        let face: Vec<VertexId> = c
                            .iter()
                            .enumerate()
                            .filter(|&(i, _)| i != skip)
                            .map(|(_, &v)| v)
                            .collect();
                        id[face.as_slice()]
                    })
                    .collect()
            })
            .collect();
        BruteCliques { tuples, s_cliques }
    }

    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }

    /// K_s-degree of every K_r counting only K_ss whose K_rs all satisfy
    /// `keep`.
    fn degrees(&self, keep: impl Fn(usize) -> bool) -> Vec<u32> {
        let mut deg = vec![0; self.len()];
        for c in &self.s_cliques {
            if c.iter().all(|&u| keep(u)) {
                for &u in c {
                    deg[u] += 1;
                }
            }
        }
        deg
    }
}

/// λ by recursive deletion: for k = 1, 2, ... remove K_rs with fewer than
/// k surviving K_ss until none is left; those removed in round k get k - 1.
pub fn oracle_lambda(g: &Graph, rs: Rs) -> (BruteCliques, LambdaTable) {
    let bc = BruteCliques::new(g, rs);
    let mut alive = vec![true; bc.len()];
    let mut lambda = vec![0u32; bc.len()];
    let mut left = bc.len();
    let mut k = 1;
    while left > 0 {
        loop {
            let deg = bc.degrees(|u| alive[u]);
            let doomed: Vec<usize> = (0..bc.len()).filter(|&u| alive[u] && deg[u] < k).collect();
            if doomed.is_empty() {
                break;
            }
            for u in doomed {
                alive[u] = false;
                lambda[u] = k - 1;
                left -= 1;
            }
        }
        k += 1;
    }
    (bc, LambdaTable::new(lambda))
}

/// Grows the K_s-closure of `seed` through K_ss whose K_rs all have λ ≥ k.
fn closure(bc: &BruteCliques, incident: &[Vec<usize>], lambda: &LambdaTable, k: u32, seed: usize) -> Vec<usize> {
    let mut seen = vec![false; bc.len()];
    let mut queue = VecDeque::from([seed]);
    seen[seed] = true;
    let mut out = vec![seed];
    while let Some(u) = queue.pop_front() {
        for &c in &incident[u] {
            let members = &bc.s_cliques[c];
            if members.iter().any(|&v| lambda.get(v) < k) {
                continue;
            }
            for &v in members {
                if !seen[v] {
                    seen[v] = true;
                    out.push(v);
                    queue.push_back(v);
                }
            }
        }
    }
    out.sort_unstable();
    out
}

fn incidence(bc: &BruteCliques) -> Vec<Vec<usize>> {
    let mut inc = vec![Vec::new(); bc.len()];
    for (i, c) in bc.s_cliques.iter().enumerate() {
        for &u in c {
            inc[u].push(i);
        }
    }
    inc
}

/// Every nucleus as `(k, sorted member ids)`, including the k = 0 root.
pub fn oracle_nucleus_sets(g: &Graph, rs: Rs) -> (BruteCliques, LambdaTable, Vec<(u32, Vec<usize>)>) {
    let (bc, lambda) = oracle_lambda(g, rs);
    let inc = incidence(&bc);
    let mut sets: Vec<(u32, Vec<usize>)> = vec![(0, (0..bc.len()).collect())];
    for k in 1..=lambda.max_lambda() {
        let mut found: Vec<Vec<usize>> = Vec::new();
        for u in 0..bc.len() {
            if lambda.get(u) < k || found.iter().any(|s| s.binary_search(&u).is_ok()) {
                continue;
            }
            found.push(closure(&bc, &inc, &lambda, k, u));
        }
        // A closure without any K_r of λ = k is the same set one level up.
        for s in found {
            if s.iter().any(|&u| lambda.get(u) == k) {
                sets.push((k, s));
            }
        }
    }
    (bc, lambda, sets)
}

/// The nucleus tree by brute-force containment: a nucleus's parent is the
/// smallest strict superset among nuclei of lower k.
pub fn oracle_nuclei(g: &Graph, rs: Rs) -> Result<NucleusTree> {
    let (bc, lambda, sets) = oracle_nucleus_sets(g, rs);
    let contains = |big: &[usize], small: &[usize]| small.iter().all(|u| big.binary_search(u).is_ok());
    let nodes = sets
        .iter()
        .enumerate()
        .map(|(i, (k, members))| {
            let parent = (0..sets.len())
                .filter(|&j| j != i && sets[j].0 < *k && contains(&sets[j].1, members))
                .max_by_key(|&j| sets[j].0);
            NucleusNode {
                k: *k,
                parent,
                native: members.iter().copied().filter(|&u| lambda.get(u) == *k).collect(),
            }
        })
        .collect();
    NucleusTree::from_nodes(nodes, bc.len())
}

/// Checks a claimed k-nucleus against the definition: every member has
/// K_s-degree at least k inside the member set, the members are
/// K_s-connected, and no single outside K_r can be added while keeping both
/// properties. Returns a description of the first violation.
pub fn check_nucleus(bc: &BruteCliques, k: u32, members: &[usize]) -> std::result::Result<(), String> {
    let mut inside = vec![false; bc.len()];
    for &u in members {
        inside[u] = true;
    }
    if let Some(why) = violation(bc, k, &inside) {
        return Err(why);
    }
    for x in 0..bc.len() {
        if inside[x] {
            continue;
        }
        inside[x] = true;
        let ok = violation(bc, k, &inside).is_none();
        inside[x] = false;
        if ok {
            return Err(format!("not maximal: K_r {x} can be added"));
        }
    }
    Ok(())
}

fn violation(bc: &BruteCliques, k: u32, inside: &[bool]) -> Option<String> {
    let members: Vec<usize> = (0..bc.len()).filter(|&u| inside[u]).collect();
    let Some(&first) = members.first() else {
        return Some("empty member set".into());
    };
    let deg = bc.degrees(|u| inside[u]);
    if let Some(&u) = members.iter().find(|&&u| deg[u] < k) {
        return Some(format!("K_r {u} has K_s-degree {} < {k}", deg[u]));
    }
    let mut seen = vec![false; bc.len()];
    seen[first] = true;
    let mut stack = vec![first];
    let mut reached = 1;
    while let Some(u) = stack.pop() {
        for c in &bc.s_cliques {
            if !c.contains(&u) || !c.iter().all(|&v| inside[v]) {
                continue;
            }
            for &v in c {
                if !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    stack.push(v);
                }
            }
        }
    }
    (reached != members.len()).then(|| format!("members are not K_s-connected ({reached} of {})", members.len()))
}
