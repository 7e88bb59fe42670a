//! Disjoint-set forest over hierarchy-skeleton nodes.
//!
//! Every node carries two links. `parent` is a permanent skeleton edge and is
//! written at most once. `root` is the union-find shortcut towards the
//! current representative (the greatest ancestor) and is rewritten by path
//! compression. A representative has no `root`.

/// Index of a node in a [`Forest`].
pub type NodeId = usize;

/// One sub-nucleus: a maximal (or, during fast decomposition, partial) set of
/// strongly K_s-connected K_rs sharing one λ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubnucleusNode {
    pub lambda: u32,
    pub rank: u32,
    pub parent: Option<NodeId>,
    pub root: Option<NodeId>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Forest {
    nodes: Vec<SubnucleusNode>,
}

impl Forest {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, lambda: u32) -> NodeId {
        self.nodes.push(SubnucleusNode {
            lambda,
            rank: 0,
            parent: None,
            root: None,
        });
        self.nodes.len() - 1
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[SubnucleusNode] {
        &self.nodes
    }

    #[inline]
    pub fn node(&self, x: NodeId) -> &SubnucleusNode {
        &self.nodes[x]
    }

    #[inline]
    pub fn lambda(&self, x: NodeId) -> u32 {
        self.nodes[x].lambda
    }

    /// Representative of `x`, compressing the `root` chain on the way.
    /// `parent` links are not touched.
    pub fn find_r(&mut self, x: NodeId) -> NodeId {
        let mut rep = x;
        while let Some(next) = self.nodes[rep].root {
            rep = next;
        }
        let mut cur = x;
        while let Some(next) = self.nodes[cur].root {
            if next != rep {
                self.nodes[cur].root = Some(rep);
            }
            cur = next;
        }
        rep
    }

    /// Links two representatives by rank. The lower-ranked one becomes a child
    /// (both `parent` and `root`); on equal rank `y` becomes the parent.
    pub fn link_r(&mut self, x: NodeId, y: NodeId) {
        debug_assert!(self.nodes[x].root.is_none() && self.nodes[y].root.is_none());
        if self.nodes[x].rank > self.nodes[y].rank {
            self.attach(y, x);
        } else {
            self.attach(x, y);
            if self.nodes[x].rank == self.nodes[y].rank {
                self.nodes[y].rank += 1;
            }
        }
    }

    pub fn union_r(&mut self, x: NodeId, y: NodeId) {
        let (rx, ry) = (self.find_r(x), self.find_r(y));
        if rx != ry {
            self.link_r(rx, ry);
        }
    }

    /// Makes `child` a skeleton child of `parent`, setting both links.
    pub fn attach(&mut self, child: NodeId, parent: NodeId) {
        debug_assert_ne!(child, parent);
        debug_assert!(self.nodes[child].parent.is_none(), "skeleton parent set twice");
        let node = &mut self.nodes[child];
        node.parent = Some(parent);
        node.root = Some(parent);
    }

    /// Sets only the skeleton `parent` of a parentless node. Used when hanging
    /// the finished forest under the global root.
    pub fn set_parent(&mut self, child: NodeId, parent: NodeId) {
        debug_assert!(self.nodes[child].parent.is_none(), "skeleton parent set twice");
        self.nodes[child].parent = Some(parent);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn singleton_finds_itself() {
        let mut f = Forest::new();
        let a = f.push(1);
        assert_eq!(f.find_r(a), a);
    }

    #[test]
    fn find_compresses_root_chain_only() {
        let mut f = Forest::new();
        let (a, b, c) = (f.push(3), f.push(2), f.push(1));
        f.attach(a, b);
        f.attach(b, c);
        assert_eq!(f.find_r(a), c);
        assert_eq!(f.node(a).root, Some(c));
        assert_eq!(f.node(a).parent, Some(b));
        assert_eq!(f.node(c).root, None);
    }

    #[test]
    fn union_is_transitive() {
        let mut f = Forest::new();
        let (a, b, c) = (f.push(1), f.push(1), f.push(1));
        f.union_r(a, b);
        f.union_r(b, c);
        assert_eq!(f.find_r(a), f.find_r(c));
    }

    #[test]
    fn equal_rank_second_argument_wins() {
        let mut f = Forest::new();
        let (x, y) = (f.push(1), f.push(1));
        f.union_r(x, y);
        assert_eq!(f.node(x).parent, Some(y));
        assert_eq!(f.node(x).root, Some(y));
        assert_eq!(f.node(y).rank, 1);
    }

    #[test]
    fn higher_rank_wins() {
        let mut f = Forest::new();
        let (x, z, y) = (f.push(1), f.push(1), f.push(1));
        f.union_r(z, x);
        assert_eq!(f.node(x).rank, 1);
        f.union_r(x, y);
        assert_eq!(f.node(y).parent, Some(x));
        assert_eq!(f.node(y).root, Some(x));
        assert_eq!(f.node(x).rank, 1);
    }

    #[test]
    fn self_union_is_noop() {
        let mut f = Forest::new();
        let x = f.push(1);
        let before = f.clone();
        f.union_r(x, x);
        assert_eq!(f, before);
    }
}
