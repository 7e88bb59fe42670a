//! k-core hierarchy by level component priority search.
//!
//! A priority-first search over vertices: a vertex reached from an extracted
//! neighbor `u` gets key `min(λ(u), λ(v))`, the deepest core level at which
//! the two are connected, and the vertex with the largest key is extracted
//! next. Walking down from the root, the search keeps one open tree node per
//! level. Extracting `v` with key `κ` climbs back to level `κ` and then opens
//! a chain of new nodes down to level `λ(v)`.
//!
//! Keying on `λ(v)` alone is not enough: two cores of equal λ that hang off
//! the same low-λ vertex would come out back to back and be merged.

use crate::bucket::BucketQueue;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hierarchy::{NucleusNode, NucleusTree};
use crate::peeling::LambdaTable;
use crate::Rs;

#[derive(Debug, Clone)]
pub struct LcpsOutput {
    pub tree: NucleusTree,
    /// Bucket insertions performed by the search.
    pub queue_pushes: u64,
    /// Tree nodes before empty chain levels were pruned (root included).
    pub raw_nodes: usize,
}

/// Computes the k-core tree from the (1,2) λ values.
pub fn lcps_core(g: &Graph, t: &LambdaTable, rs: Rs) -> Result<LcpsOutput> {
    if rs != Rs::OneTwo {
        return Err(Error::Config(format!(
            "priority search builds k-core hierarchies only, got (r,s) = ({},{})",
            rs.r(),
            rs.s()
        )));
    }
    if t.len() != g.n() {
        return Err(Error::Config("λ table does not match the graph's vertex count".into()));
    }

    let n = g.n();
    let mut nodes = vec![NucleusNode {
        k: 0,
        parent: None,
        native: Vec::new(),
    }];
    let mut path: Vec<usize> = vec![0];
    let mut best: Vec<Option<u32>> = vec![None; n];
    let mut done = vec![false; n];
    let mut queue = BucketQueue::new(n);

    for start in 0..n {
        if done[start] {
            continue;
        }
        if g.degree(start) == 0 {
            done[start] = true;
            nodes[0].native.push(start);
            continue;
        }
        let mut next = Some((start, 0u32));
        while let Some((v, key)) = next {
            done[v] = true;
            let lv = t.get(v);
            path.truncate(key as usize + 1);
            for level in key + 1..=lv {
                let parent = *path.last().unwrap();
                nodes.push(NucleusNode {
                    k: level,
                    parent: Some(parent),
                    native: Vec::new(),
                });
                path.push(nodes.len() - 1);
            }
            nodes[path[lv as usize]].native.push(v);

            for &w in g.neighbors(v) {
                if done[w] {
                    continue;
                }
                let kw = lv.min(t.get(w));
                if best[w].is_none_or(|b| kw > b) {
                    best[w] = Some(kw);
                    queue.set_key(w, kw);
                }
            }
            next = queue.pop_max();
        }
    }

    let raw_nodes = nodes.len();
    Ok(LcpsOutput {
        tree: NucleusTree::from_nodes(prune_empty_levels(nodes), n)?,
        queue_pushes: queue.pushes(),
        raw_nodes,
    })
}

/// Splices out non-root nodes that own no vertex. Such a chain level has a
/// single child with the same member set.
fn prune_empty_levels(nodes: Vec<NucleusNode>) -> Vec<NucleusNode> {
    let keep: Vec<bool> = nodes
        .iter()
        .enumerate()
        .map(|(i, n)| i == 0 || !n.native.is_empty())
        .collect();
    // Parents precede children, so kept ancestors are resolved in one pass.
    let mut target = vec![usize::MAX; nodes.len()];
    let mut new_id = vec![usize::MAX; nodes.len()];
    let mut count = 0;
    for (i, node) in nodes.iter().enumerate() {
        target[i] = match (keep[i], node.parent) {
            (true, _) | (false, None) => i,
            (false, Some(p)) => target[p],
        };
        if keep[i] {
            new_id[i] = count;
            count += 1;
        }
    }
    nodes
        .into_iter()
        .enumerate()
        .filter(|&(i, _)| keep[i])
        .map(|(_, mut node)| {
            node.parent = node.parent.map(|p| new_id[target[p]]);
            node
        })
        .collect()
}
