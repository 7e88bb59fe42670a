//! Hierarchy-skeleton and nucleus tree.
//!
//! A [`HierarchySkeleton`] is what the traversal-based and traversal-free
//! algorithms build: a forest of sub-nuclei where equal-λ links are
//! union-find merges and unequal-λ links are containment. [`condense`]
//! contracts the equal-λ links, turning every merged group into one nucleus.

use serde::Serialize;

use crate::clique::{CliqueIndex, KrId};
use crate::dsf::{Forest, NodeId};
use crate::error::{Error, Result};
use crate::peeling::LambdaTable;

/// `comp` value of a K_r not yet assigned to any sub-nucleus.
pub const UNASSIGNED: NodeId = usize::MAX;

#[derive(Debug, Clone)]
pub struct HierarchySkeleton {
    forest: Forest,
    comp: Vec<NodeId>,
    max_lambda: u32,
    root: NodeId,
}

impl HierarchySkeleton {
    /// Adds the λ = 0 root, hangs every parentless node under it and assigns
    /// still-unassigned K_rs of λ = 0 to it.
    pub fn finalize(mut forest: Forest, mut comp: Vec<NodeId>, lambda: &LambdaTable) -> Self {
        let root = forest.push(0);
        for x in 0..root {
            if forest.node(x).parent.is_none() {
                forest.set_parent(x, root);
            }
        }
        for (u, c) in comp.iter_mut().enumerate() {
            if *c == UNASSIGNED && lambda.get(u) == 0 {
                *c = root;
            }
        }
        HierarchySkeleton {
            forest,
            comp,
            max_lambda: lambda.max_lambda(),
            root,
        }
    }

    /// Skeleton whose nodes are the nodes of `tree` (all parent links join
    /// distinct λ values).
    pub fn from_tree(tree: &NucleusTree) -> Self {
        let mut forest = Forest::new();
        for node in tree.nodes() {
            forest.push(node.k);
        }
        for (i, node) in tree.nodes().iter().enumerate() {
            if let Some(p) = node.parent {
                forest.set_parent(i, p);
            }
        }
        let mut comp = vec![UNASSIGNED; tree.kr_count()];
        for (i, node) in tree.nodes().iter().enumerate() {
            for &u in &node.native {
                comp[u] = i;
            }
        }
        let max_lambda = tree.nodes().iter().map(|n| n.k).max().unwrap_or(0);
        HierarchySkeleton {
            forest,
            comp,
            max_lambda,
            root: tree.root(),
        }
    }

    pub fn forest(&self) -> &Forest {
        &self.forest
    }

    pub fn root(&self) -> NodeId {
        self.root
    }

    pub fn max_lambda(&self) -> u32 {
        self.max_lambda
    }

    /// Sub-nucleus holding K_r `u`.
    pub fn comp(&self, u: KrId) -> Option<NodeId> {
        match self.comp[u] {
            UNASSIGNED => None,
            c => Some(c),
        }
    }

    /// Number of sub-nuclei, not counting the root.
    pub fn subnucleus_count(&self) -> usize {
        self.forest.len() - 1
    }
}

/// One k-(r,s) nucleus. `native` holds the K_rs first claimed at this node,
/// i.e. those whose λ equals `k`; the full member set also includes every
/// descendant's K_rs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NucleusNode {
    pub k: u32,
    pub parent: Option<usize>,
    pub native: Vec<KrId>,
}

/// Containment tree of all nuclei, rooted at the whole graph (k = 0).
///
/// Trees are kept in canonical form: nodes ordered by `(k, smallest member)`
/// with the root first and native lists sorted, so two trees describing the
/// same nuclei compare equal with `==`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NucleusTree {
    nodes: Vec<NucleusNode>,
    kr_count: usize,
}

impl NucleusTree {
    /// Validates and canonicalizes a tree. `kr_count` is the number of K_rs
    /// of the underlying index.
    pub fn from_nodes(mut nodes: Vec<NucleusNode>, kr_count: usize) -> Result<Self> {
        let n = nodes.len();
        let roots: Vec<usize> = (0..n).filter(|&i| nodes[i].parent.is_none()).collect();
        if roots.len() != 1 {
            return Err(Error::Internal(format!("nucleus tree has {} roots", roots.len())));
        }
        let root = roots[0];
        if nodes[root].k != 0 {
            return Err(Error::Internal("root nucleus must have k = 0".into()));
        }
        let mut children = vec![Vec::new(); n];
        for (i, node) in nodes.iter().enumerate() {
            if let Some(p) = node.parent {
                if p >= n {
                    return Err(Error::Internal(format!("node {i} has dangling parent {p}")));
                }
                if nodes[p].k >= node.k {
                    return Err(Error::Internal(format!(
                        "node {i} (k = {}) not above its parent (k = {})",
                        node.k, nodes[p].k
                    )));
                }
                children[p].push(i);
            }
        }
        let mut seen = vec![false; kr_count];
        for (i, node) in nodes.iter_mut().enumerate() {
            if node.native.is_empty() && i != root {
                return Err(Error::Internal(format!("nucleus {i} has no K_r of its own")));
            }
            node.native.sort_unstable();
            for &u in &node.native {
                if u >= kr_count || std::mem::replace(&mut seen[u], true) {
                    return Err(Error::Internal(format!("K_r {u} claimed twice or out of range")));
                }
            }
        }

        // Top-down order; anything unreachable from the root sits on a cycle.
        let mut order = vec![root];
        let mut head = 0;
        while head < order.len() {
            order.extend_from_slice(&children[order[head]]);
            head += 1;
        }
        if order.len() != n {
            return Err(Error::Internal("nucleus tree parent links contain a cycle".into()));
        }
        let mut smallest: Vec<Option<KrId>> = nodes.iter().map(|n| n.native.first().copied()).collect();
        for &i in order.iter().rev() {
            if let Some(p) = nodes[i].parent {
                smallest[p] = match (smallest[p], smallest[i]) {
                    (Some(a), Some(b)) => Some(a.min(b)),
                    (a, b) => a.or(b),
                };
            }
        }

        let mut perm: Vec<usize> = (0..n).collect();
        perm.sort_by_key(|&i| (nodes[i].k, smallest[i]));
        let mut new_id = vec![0; n];
        for (new, &old) in perm.iter().enumerate() {
            new_id[old] = new;
        }
        let mut out: Vec<NucleusNode> = perm
            .iter()
            .map(|&old| {
                std::mem::replace(
                    &mut nodes[old],
                    NucleusNode {
                        k: 0,
                        parent: None,
                        native: Vec::new(),
                    },
                )
            })
            .collect();
        for node in &mut out {
            node.parent = node.parent.map(|p| new_id[p]);
        }
        Ok(NucleusTree { nodes: out, kr_count })
    }

    pub fn root(&self) -> usize {
        0
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn kr_count(&self) -> usize {
        self.kr_count
    }

    pub fn nodes(&self) -> &[NucleusNode] {
        &self.nodes
    }

    pub fn node(&self, i: usize) -> &NucleusNode {
        &self.nodes[i]
    }

    pub fn children(&self) -> Vec<Vec<usize>> {
        let mut children = vec![Vec::new(); self.nodes.len()];
        for (i, node) in self.nodes.iter().enumerate() {
            if let Some(p) = node.parent {
                children[p].push(i);
            }
        }
        children
    }

    /// Every K_r of nucleus `i`, including those of its descendants, sorted.
    pub fn members(&self, i: usize) -> Vec<KrId> {
        let children = self.children();
        let mut out = Vec::new();
        let mut stack = vec![i];
        while let Some(x) = stack.pop() {
            out.extend_from_slice(&self.nodes[x].native);
            stack.extend_from_slice(&children[x]);
        }
        out.sort_unstable();
        out
    }

    /// Member count of every nucleus.
    pub fn sizes(&self) -> Vec<usize> {
        let mut sizes: Vec<usize> = self.nodes.iter().map(|n| n.native.len()).collect();
        // Canonical order puts parents (smaller k) before children.
        for i in (0..self.nodes.len()).rev() {
            if let Some(p) = self.nodes[i].parent {
                sizes[p] += sizes[i];
            }
        }
        sizes
    }

    /// Nucleus ids at level `k`.
    pub fn at_level(&self, k: u32) -> impl Iterator<Item = usize> + '_ {
        (0..self.nodes.len()).filter(move |&i| self.nodes[i].k == k)
    }
}

/// Contracts every equal-λ skeleton edge and reports one nucleus per group.
pub fn condense(skel: &HierarchySkeleton) -> Result<NucleusTree> {
    let forest = skel.forest();
    let n = forest.len();
    if skel.root >= n || forest.node(skel.root).parent.is_some() {
        return Err(Error::Internal("skeleton root missing".into()));
    }

    let mut top = vec![UNASSIGNED; n];
    let mut path = Vec::new();
    for x in 0..n {
        path.clear();
        let mut cur = x;
        let t = loop {
            if top[cur] != UNASSIGNED {
                break top[cur];
            }
            if path.len() > n {
                return Err(Error::Internal("skeleton parent links contain a cycle".into()));
            }
            match forest.node(cur).parent {
                Some(p) if forest.lambda(p) == forest.lambda(cur) => {
                    path.push(cur);
                    cur = p;
                }
                Some(p) if forest.lambda(p) > forest.lambda(cur) => {
                    return Err(Error::Internal(format!("skeleton node {cur} has a parent of larger λ")));
                }
                None if cur != skel.root => {
                    return Err(Error::Internal(format!(
                        "skeleton node {cur} is not attached to the root"
                    )));
                }
                _ => {
                    top[cur] = cur;
                    break cur;
                }
            }
        };
        for &p in &path {
            top[p] = t;
        }
    }

    let mut group = vec![UNASSIGNED; n];
    let mut nodes = Vec::new();
    for x in 0..n {
        if top[x] == x {
            group[x] = nodes.len();
            nodes.push(NucleusNode {
                k: forest.lambda(x),
                parent: None,
                native: Vec::new(),
            });
        }
    }
    for x in 0..n {
        if top[x] == x {
            if let Some(p) = forest.node(x).parent {
                nodes[group[x]].parent = Some(group[top[p]]);
            }
        }
    }
    for (u, &c) in skel.comp.iter().enumerate() {
        if c >= n {
            return Err(Error::Internal(format!("K_r {u} is not assigned to any sub-nucleus")));
        }
        nodes[group[top[c]]].native.push(u);
    }
    NucleusTree::from_nodes(nodes, skel.comp.len())
}

#[derive(Serialize)]
struct TreeDoc {
    header: Header,
    nuclei: Vec<NucleusOut>,
}

#[derive(Serialize)]
struct Header {
    r: usize,
    s: usize,
    vertices: usize,
    edges: usize,
    cliques: usize,
    nuclei: usize,
}

#[derive(Serialize)]
struct NucleusOut {
    id: usize,
    k: u32,
    size: usize,
    parent: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    members: Option<Vec<Vec<u64>>>,
}

/// Serializes `tree` as pretty-printed JSON. Members, when requested, are
/// ascending K_r tuples in original vertex labels.
pub fn to_json(tree: &NucleusTree, idx: &CliqueIndex, with_members: bool) -> String {
    let sizes = tree.sizes();
    let nuclei = (0..tree.len())
        .map(|i| NucleusOut {
            id: i,
            k: tree.node(i).k,
            size: sizes[i],
            parent: tree.node(i).parent,
            members: with_members.then(|| tree.members(i).into_iter().map(|u| idx.label_tuple(u)).collect()),
        })
        .collect();
    let g = idx.graph();
    let doc = TreeDoc {
        header: Header {
            r: idx.rs().r(),
            s: idx.rs().s(),
            vertices: g.n(),
            edges: g.m(),
            cliques: idx.len(),
            nuclei: tree.len(),
        },
        nuclei,
    };
    serde_json::to_string_pretty(&doc).expect("tree documents always serialize")
}
