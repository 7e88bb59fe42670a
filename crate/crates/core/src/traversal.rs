//! Peel-then-traverse back-ends.
//!
//! [`naive_traversal`] runs one breadth-first search per k value.
//! [`df_traversal`] finds every sub-nucleus in a single pass in decreasing λ
//! order and stitches them together with the disjoint-set forest.

use std::collections::VecDeque;

use crate::clique::{CliqueIndex, KrId};
use crate::dsf::{Forest, NodeId};
use crate::error::Result;
use crate::hierarchy::{HierarchySkeleton, NucleusNode, NucleusTree, UNASSIGNED};
use crate::peeling::LambdaTable;

/// For each k, breadth-first search from every unvisited K_r of λ = k through
/// K_ss with λ_{r,s} ≥ k. The containment tree is assembled afterwards.
pub fn naive_traversal(idx: &CliqueIndex, t: &LambdaTable) -> Result<NucleusTree> {
    let n = idx.len();
    let s = idx.rs().s();
    let levels = t.levels();
    // visited[u] == k marks u as seen during the level-k pass.
    let mut visited = vec![0u32; n];
    let mut queue = VecDeque::new();
    let mut buf = Vec::new();
    let mut nuclei: Vec<(u32, Vec<KrId>)> = Vec::new();

    for k in 1..=t.max_lambda() {
        for &seed in &levels[k as usize] {
            if visited[seed] == k {
                continue;
            }
            visited[seed] = k;
            queue.push_back(seed);
            let mut members = vec![seed];
            while let Some(u) = queue.pop_front() {
                idx.collect_s_cliques(u, &mut buf);
                for clique in buf.chunks_exact(s) {
                    if t.lambda_rs(clique) < k {
                        continue;
                    }
                    for &v in &clique[1..] {
                        if visited[v] != k {
                            visited[v] = k;
                            queue.push_back(v);
                            members.push(v);
                        }
                    }
                }
            }
            nuclei.push((k, members));
        }
    }
    assemble_by_containment(nuclei, t)
}

/// Builds the tree from `(k, member set)` nuclei. Walking levels from the top,
/// the first lower-level nucleus to claim a K_r of an already placed nucleus
/// is that nucleus's parent.
fn assemble_by_containment(mut nuclei: Vec<(u32, Vec<KrId>)>, t: &LambdaTable) -> Result<NucleusTree> {
    nuclei.sort_by_key(|(k, _)| std::cmp::Reverse(*k));
    let mut owner = vec![usize::MAX; t.len()];
    let mut nodes: Vec<NucleusNode> = Vec::with_capacity(nuclei.len() + 1);
    for (i, (k, members)) in nuclei.iter().enumerate() {
        let mut native = Vec::new();
        for &u in members {
            let prev = owner[u];
            if prev != usize::MAX {
                if nodes[prev].parent.is_none() {
                    nodes[prev].parent = Some(i);
                }
            } else {
                debug_assert_eq!(t.get(u), *k);
            }
            if t.get(u) == *k {
                native.push(u);
            }
            owner[u] = i;
        }
        nodes.push(NucleusNode {
            k: *k,
            parent: None,
            native,
        });
    }
    let root = nodes.len();
    for node in &mut nodes {
        node.parent.get_or_insert(root);
    }
    nodes.push(NucleusNode {
        k: 0,
        parent: None,
        native: (0..t.len()).filter(|&u| t.get(u) == 0).collect(),
    });
    NucleusTree::from_nodes(nodes, t.len())
}

/// Builds the hierarchy-skeleton by discovering sub-nuclei in decreasing λ
/// order.
pub fn df_traversal(idx: &CliqueIndex, t: &LambdaTable) -> HierarchySkeleton {
    let mut scan = Scanner::new(idx, t);
    let levels = t.levels();
    for k in (1..=t.max_lambda()).rev() {
        for &u in &levels[k as usize] {
            if !scan.visited[u] {
                scan.subnucleus(u);
            }
        }
    }
    HierarchySkeleton::finalize(scan.forest, scan.comp, t)
}

struct Scanner<'a, 'g> {
    idx: &'a CliqueIndex<'g>,
    t: &'a LambdaTable,
    forest: Forest,
    comp: Vec<NodeId>,
    visited: Vec<bool>,
    /// marked[x] == epoch means node x was seen during the current scan.
    marked: Vec<u32>,
    epoch: u32,
    queue: VecDeque<KrId>,
    buf: Vec<KrId>,
    found: Vec<KrId>,
    merge: Vec<NodeId>,
}

impl<'a, 'g> Scanner<'a, 'g> {
    fn new(idx: &'a CliqueIndex<'g>, t: &'a LambdaTable) -> Self {
        Scanner {
            idx,
            t,
            forest: Forest::new(),
            comp: vec![UNASSIGNED; idx.len()],
            visited: vec![false; idx.len()],
            marked: Vec::new(),
            epoch: 0,
            queue: VecDeque::new(),
            buf: Vec::new(),
            found: Vec::new(),
            merge: Vec::new(),
        }
    }

    fn mark(&mut self, x: NodeId) -> bool {
        if self.marked[x] == self.epoch {
            false
        } else {
            self.marked[x] = self.epoch;
            true
        }
    }

    /// Breadth-first search over strongly K_s-connected K_rs of the seed's λ,
    /// hooking every adjacent higher sub-nucleus into the skeleton.
    fn subnucleus(&mut self, seed: KrId) {
        let k = self.t.get(seed);
        // Nodes are created in non-increasing λ order, so checking the newest
        // one covers the whole skeleton.
        debug_assert!(self.forest.nodes().last().is_none_or(|n| n.lambda >= k));
        let sn = self.forest.push(k);
        self.marked.push(0);
        self.epoch += 1;
        self.marked[sn] = self.epoch;
        self.comp[seed] = sn;
        self.visited[seed] = true;
        self.merge.clear();
        self.merge.push(sn);
        self.queue.push_back(seed);
        let s = self.idx.rs().s();

        while let Some(u) = self.queue.pop_front() {
            self.comp[u] = sn;
            let mut buf = std::mem::take(&mut self.buf);
            self.idx.collect_s_cliques(u, &mut buf);
            self.found.clear();
            for clique in buf.chunks_exact(s) {
                if self.t.lambda_rs(clique) != k {
                    continue;
                }
                for &v in &clique[1..] {
                    if self.t.get(v) == k {
                        if !self.visited[v] {
                            self.visited[v] = true;
                            self.comp[v] = sn;
                            self.found.push(v);
                        }
                    } else {
                        let raw = self.comp[v];
                        if self.mark(raw) {
                            let rep = self.forest.find_r(raw);
                            if rep == raw || self.mark(rep) {
                                if self.forest.lambda(rep) > k {
                                    self.forest.attach(rep, sn);
                                } else {
                                    self.merge.push(rep);
                                }
                            }
                        }
                    }
                }
            }
            self.buf = buf;
            self.found.sort_unstable();
            self.queue.extend(self.found.iter().copied());
        }
        for i in 1..self.merge.len() {
            self.forest.union_r(self.merge[0], self.merge[i]);
        }
    }
}

/// Peeling-free lower bound for traversal-based methods: one plain
/// breadth-first search over all K_rs connected through K_ss, with no λ
/// conditions and no hierarchy bookkeeping. Returns the component count.
pub fn plain_traversal(idx: &CliqueIndex) -> usize {
    let s = idx.rs().s();
    let mut visited = vec![false; idx.len()];
    let mut queue = VecDeque::new();
    let mut buf = Vec::new();
    let mut components = 0;
    for seed in 0..idx.len() {
        if visited[seed] {
            continue;
        }
        components += 1;
        visited[seed] = true;
        queue.push_back(seed);
        while let Some(u) = queue.pop_front() {
            idx.collect_s_cliques(u, &mut buf);
            for clique in buf.chunks_exact(s) {
                for &v in &clique[1..] {
                    if !visited[v] {
                        visited[v] = true;
                        queue.push_back(v);
                    }
                }
            }
        }
    }
    components
}
