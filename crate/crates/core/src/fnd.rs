//! Traversal-free nucleus decomposition.
//!
//! While peeling, every K_s of the extracted K_r `u` that already contains a
//! processed K_r tells us something: the processed member `w` of smallest λ
//! is either in the same sub-nucleus as `u` (equal λ) or in a lower one. The
//! first kind is merged immediately in the disjoint-set forest; the second is
//! recorded as an adjacency pair and resolved bottom-up after peeling.
//!
//! The fragments created this way are not necessarily maximal (a star's
//! leaves each start their own before the center is reached), which is why
//! they are merged by union-find rather than trusted as sub-nuclei.

use crate::bucket::BucketQueue;
use crate::clique::CliqueIndex;
use crate::dsf::{Forest, NodeId};
use crate::error::{Error, Result};
use crate::hierarchy::{HierarchySkeleton, UNASSIGNED};
use crate::peeling::LambdaTable;

/// Adjacency from a higher-λ fragment (first) to a lower-λ one (second).
pub type AdjPair = (NodeId, NodeId);

/// State after the peeling phase, before the hierarchy is built.
#[derive(Debug, Clone)]
pub struct FndPeeling {
    pub lambda: LambdaTable,
    pub forest: Forest,
    pub comp: Vec<NodeId>,
    pub adj: Vec<AdjPair>,
}

#[derive(Debug, Clone)]
pub struct FndResult {
    pub lambda: LambdaTable,
    pub skeleton: HierarchySkeleton,
    /// Number of recorded higher-to-lower fragment adjacencies.
    pub adj_pairs: usize,
}

impl FndResult {
    /// Number of (possibly non-maximal) fragments created during peeling.
    pub fn fragment_count(&self) -> usize {
        self.skeleton.subnucleus_count()
    }
}

pub fn fast_nucleus_decomposition(idx: &CliqueIndex) -> Result<FndResult> {
    peel(idx).finish()
}

/// Peeling with fragment detection. Ties in the minimum K_s-degree and in
/// the choice of the smallest-λ processed member both go to the lowest id.
pub fn peel(idx: &CliqueIndex) -> FndPeeling {
    let n = idx.len();
    let s = idx.rs().s();
    let mut queue = BucketQueue::with_keys(&idx.s_degrees());
    let mut lambda = vec![0u32; n];
    let mut processed = vec![false; n];
    let mut comp = vec![UNASSIGNED; n];
    let mut forest = Forest::new();
    let mut adj: Vec<AdjPair> = Vec::new();
    let mut pending: Vec<usize> = Vec::new();
    let mut buf = Vec::new();

    while let Some((u, lu)) = queue.pop_min() {
        lambda[u] = lu;
        pending.clear();
        idx.collect_s_cliques(u, &mut buf);
        for clique in buf.chunks_exact(s) {
            let others = &clique[1..];
            let witness = others
                .iter()
                .copied()
                .filter(|&v| processed[v])
                .min_by_key(|&v| (lambda[v], v));
            match witness {
                None => {
                    for &v in others {
                        if queue.key(v) > lu {
                            queue.decrement(v);
                        }
                    }
                }
                Some(w) if lambda[w] == lu => {
                    if comp[u] == UNASSIGNED {
                        comp[u] = comp[w];
                    } else {
                        forest.union_r(comp[u], comp[w]);
                    }
                }
                Some(w) => {
                    if comp[u] == UNASSIGNED {
                        pending.push(adj.len());
                    }
                    adj.push((comp[u], comp[w]));
                }
            }
        }
        if comp[u] == UNASSIGNED {
            comp[u] = forest.push(lu);
        }
        for &i in &pending {
            adj[i].0 = comp[u];
        }
        processed[u] = true;
    }

    FndPeeling {
        lambda: LambdaTable::new(lambda),
        forest,
        comp,
        adj,
    }
}

impl FndPeeling {
    /// Resolves the adjacency pairs into skeleton links and hangs everything
    /// under the λ = 0 root.
    pub fn finish(mut self) -> Result<FndResult> {
        build_hierarchy(&self.adj, &mut self.forest, self.lambda.max_lambda())?;
        let adj_pairs = self.adj.len();
        Ok(FndResult {
            skeleton: HierarchySkeleton::finalize(self.forest, self.comp, &self.lambda),
            lambda: self.lambda,
            adj_pairs,
        })
    }
}

/// Processes adjacency pairs binned by the λ of their lower side, from the
/// highest bin down. Within a bin, a higher-λ representative becomes a child
/// of the lower one; equal-λ representatives are unioned once the bin is done.
pub fn build_hierarchy(adj: &[AdjPair], forest: &mut Forest, max_lambda: u32) -> Result<()> {
    let mut bins: Vec<Vec<AdjPair>> = vec![Vec::new(); max_lambda as usize + 1];
    for &(hi, lo) in adj {
        if hi >= forest.len() || lo >= forest.len() {
            return Err(Error::Internal(format!(
                "adjacency pair ({hi}, {lo}) refers to a missing fragment"
            )));
        }
        let (lh, ll) = (forest.lambda(hi), forest.lambda(lo));
        if lh <= ll {
            return Err(Error::Internal(format!(
                "adjacency pair ({hi}, {lo}) does not go from higher to lower λ ({lh} vs {ll})"
            )));
        }
        bins[ll as usize].push((hi, lo));
    }
    let mut merge = Vec::new();
    for bin in bins.iter().rev() {
        merge.clear();
        for &(hi, lo) in bin {
            let (a, b) = (forest.find_r(hi), forest.find_r(lo));
            if a == b {
                continue;
            }
            if forest.lambda(a) > forest.lambda(b) {
                forest.attach(a, b);
            } else {
                merge.push((a, b));
            }
        }
        for &(a, b) in &merge {
            forest.union_r(a, b);
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hierarchy::condense;
    use crate::peeling::set_lambda;
    use crate::traversal::df_traversal;
    use crate::{gen, Graph, Rs};

    fn fnd(g: &Graph, rs: Rs) -> FndResult {
        fast_nucleus_decomposition(&CliqueIndex::build(g, rs)).unwrap()
    }

    #[test]
    fn star_fragments_merge_into_one_nucleus() {
        // Center labelled last: leaves x, y, z are peeled first.
        let g = Graph::from_edges(4, [(3, 0), (3, 1), (3, 2)]);
        let res = fnd(&g, Rs::OneTwo);
        assert_eq!(res.fragment_count(), 3);
        let tree = condense(&res.skeleton).unwrap();
        assert_eq!(tree.len(), 2);
        assert_eq!(tree.node(1).k, 1);
        assert_eq!(tree.members(1), vec![0, 1, 2, 3]);
        let idx = CliqueIndex::build(&g, Rs::OneTwo);
        assert_eq!(df_traversal(&idx, &set_lambda(&idx)).subnucleus_count(), 1);
    }

    #[test]
    fn star_with_center_first() {
        let res = fnd(&gen::star(5), Rs::OneTwo);
        assert_eq!(res.fragment_count(), 4);
    }

    #[test]
    fn two_k4_matches_dft() {
        let g = gen::two_k4_path();
        let idx = CliqueIndex::build(&g, Rs::OneTwo);
        let res = fast_nucleus_decomposition(&idx).unwrap();
        let dft = condense(&df_traversal(&idx, &set_lambda(&idx))).unwrap();
        assert_eq!(condense(&res.skeleton).unwrap(), dft);
        assert_eq!(res.adj_pairs, 2);
    }

    #[test]
    fn k4_truss_has_no_pairs() {
        let res = fnd(&gen::complete(4), Rs::TwoThree);
        assert_eq!(res.adj_pairs, 0);
        assert_eq!(condense(&res.skeleton).unwrap().len(), 2);
    }

    #[test]
    fn pairs_into_one_lower_node() {
        let mut f = Forest::new();
        let (a, b, m) = (f.push(3), f.push(3), f.push(2));
        build_hierarchy(&[(a, m), (b, m)], &mut f, 3).unwrap();
        assert_eq!(f.node(a).parent, Some(m));
        assert_eq!(f.node(b).parent, Some(m));
        assert_eq!(f.node(m).parent, None);
    }

    #[test]
    fn merged_upper_side_links_lower_sides() {
        // A and B are one λ = 3 structure; both touch λ = 2 fragments M and N,
        // which therefore belong to the same 2-nucleus.
        let mut f = Forest::new();
        let (a, b, m, n) = (f.push(3), f.push(3), f.push(2), f.push(2));
        f.union_r(a, b);
        build_hierarchy(&[(a, m), (b, n)], &mut f, 3).unwrap();
        assert_eq!(f.find_r(m), f.find_r(n));
        let rep = f.find_r(a);
        assert_eq!(f.lambda(rep), 2);
    }

    #[test]
    fn empty_pairs_leave_forest_alone() {
        let mut f = Forest::new();
        f.push(1);
        let before = f.clone();
        build_hierarchy(&[], &mut f, 1).unwrap();
        assert_eq!(f, before);
    }

    #[test]
    fn equal_lambda_pair_is_an_error() {
        let mut f = Forest::new();
        let (a, b) = (f.push(2), f.push(2));
        assert!(matches!(build_hierarchy(&[(a, b)], &mut f, 2), Err(Error::Internal(_))));
    }

    #[test]
    fn peeling_unperturbed() {
        for rs in [Rs::OneTwo, Rs::TwoThree, Rs::ThreeFour] {
            let g = gen::nested_clique_chain(&[8, 6, 4], 2);
            let idx = CliqueIndex::build(&g, rs);
            assert_eq!(peel(&idx).lambda, set_lambda(&idx));
        }
    }
}
