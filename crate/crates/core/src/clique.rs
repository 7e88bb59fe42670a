//! K_r inventories and "which K_s contain this K_r" queries.
//!
//! Vertices, edges and triangles are materialized; four-cliques are only
//! ever generated on demand from the per-edge triangle incidence.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::Rs;

/// Dense id of a K_r inside a [`CliqueIndex`].
pub type KrId = usize;

/// Materialized K_r inventory of a graph for one clique order `r`.
///
/// Ids follow lexicographic order of the ascending vertex tuples: vertex ids
/// for `r = 1`, `(u, v)` pairs for `r = 2`, `(a, b, c)` triples for `r = 3`.
#[derive(Debug, Clone)]
pub struct CliqueIndex<'g> {
    graph: &'g Graph,
    rs: Rs,
    /// Edge id for every slot of the flat adjacency array (r >= 2).
    slot_edge: Vec<KrId>,
    edges: Vec<[VertexId; 2]>,
    triangles: Vec<[VertexId; 3]>,
    /// Edge ids (ab, ac, bc) of each triangle (a < b < c).
    triangle_edges: Vec<[KrId; 3]>,
    /// Per-edge triangle incidence as (third vertex, triangle id), sorted by
    /// third vertex.
    edge_tri_offsets: Vec<usize>,
    edge_tri: Vec<(VertexId, KrId)>,
}

/// The K_s cliques containing one K_r, each given by the ids of its `s`
/// constituent K_rs. The queried K_r is always listed first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KsNeighborhood {
    s: usize,
    flat: Vec<KrId>,
}

impl KsNeighborhood {
    pub fn len(&self) -> usize {
        self.flat.len() / self.s
    }

    pub fn is_empty(&self) -> bool {
        self.flat.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &[KrId]> {
        self.flat.chunks_exact(self.s)
    }
}

impl<'g> CliqueIndex<'g> {
    /// Enumerates the K_rs needed to decompose `graph` under `rs`.
    pub fn build(graph: &'g Graph, rs: Rs) -> Self {
        let mut idx = CliqueIndex {
            graph,
            rs,
            slot_edge: Vec::new(),
            edges: Vec::new(),
            triangles: Vec::new(),
            triangle_edges: Vec::new(),
            edge_tri_offsets: Vec::new(),
            edge_tri: Vec::new(),
        };
        if rs.r() >= 2 {
            idx.build_edges();
        }
        if rs.r() >= 3 {
            idx.build_triangles();
        }
        idx
    }

    /// Builds the index for clique order `r` (1, 2 or 3) with `s = r + 1`.
    pub fn for_order(graph: &'g Graph, r: usize) -> Result<Self> {
        Ok(Self::build(graph, Rs::from_r(r)?))
    }

    fn build_edges(&mut self) {
        let g = self.graph;
        self.slot_edge = vec![usize::MAX; 2 * g.m()];
        for u in 0..g.n() {
            for (i, &v) in g.neighbors(u).iter().enumerate() {
                if v > u {
                    let e = self.edges.len();
                    self.edges.push([u, v]);
                    self.slot_edge[g.offset(u) + i] = e;
                    let j = g.neighbors(v).binary_search(&u).unwrap();
                    self.slot_edge[g.offset(v) + j] = e;
                }
            }
        }
    }

    fn build_triangles(&mut self) {
        let g = self.graph;
        let rank = |v: VertexId| (g.degree(v), v);
        // Orient each edge towards the endpoint of higher (degree, id).
        let out: Vec<Vec<VertexId>> = (0..g.n())
            .map(|u| g.neighbors(u).iter().copied().filter(|&v| rank(v) > rank(u)).collect())
            .collect();
        let mut tris = Vec::new();
        for u in 0..g.n() {
            for &v in &out[u] {
                intersect_sorted(&out[u], &out[v], |w| {
                    let mut t = [u, v, w];
                    t.sort_unstable();
                    tris.push(t);
                });
            }
        }
        tris.sort_unstable();

        let mut counts = vec![0usize; self.edges.len() + 1];
        let mut tri_edges = Vec::with_capacity(tris.len());
        for &[a, b, c] in &tris {
            let es = [
                self.edge_id(a, b).unwrap(),
                self.edge_id(a, c).unwrap(),
                self.edge_id(b, c).unwrap(),
            ];
            for e in es {
                counts[e + 1] += 1;
            }
            tri_edges.push(es);
        }
        for i in 0..self.edges.len() {
            counts[i + 1] += counts[i];
        }
        let mut fill = counts.clone();
        let mut edge_tri = vec![(0, 0); counts[self.edges.len()]];
        for (t, (&[a, b, c], es)) in tris.iter().zip(&tri_edges).enumerate() {
            for (e, third) in es.iter().zip([c, b, a]) {
                edge_tri[fill[*e]] = (third, t);
                fill[*e] += 1;
            }
        }
        for e in 0..self.edges.len() {
            edge_tri[counts[e]..counts[e + 1]].sort_unstable();
        }
        self.triangles = tris;
        self.triangle_edges = tri_edges;
        self.edge_tri_offsets = counts;
        self.edge_tri = edge_tri;
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn rs(&self) -> Rs {
        self.rs
    }

    pub fn r(&self) -> usize {
        self.rs.r()
    }

    /// Number of K_rs.
    pub fn len(&self) -> usize {
        match self.rs.r() {
            1 => self.graph.n(),
            2 => self.edges.len(),
            _ => self.triangles.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Ascending vertex tuple of K_r `id`.
    pub fn tuple(&self, id: KrId) -> Vec<VertexId> {
        match self.rs.r() {
            1 => vec![id],
            2 => self.edges[id].to_vec(),
            _ => self.triangles[id].to_vec(),
        }
    }

    /// Same as [`tuple`](Self::tuple) but in original input labels.
    pub fn label_tuple(&self, id: KrId) -> Vec<u64> {
        self.tuple(id).into_iter().map(|v| self.graph.label(v)).collect()
    }

    /// Edge id of `{u, v}`, if it is an edge. Requires `r >= 2`.
    pub fn edge_id(&self, u: VertexId, v: VertexId) -> Option<KrId> {
        let (u, v) = if u < v { (u, v) } else { (v, u) };
        let pos = self.graph.neighbors(u).binary_search(&v).ok()?;
        Some(self.slot_edge[self.graph.offset(u) + pos])
    }

    /// Edge ids incident to `v`, aligned with `graph.neighbors(v)`. Requires `r >= 2`.
    pub fn incident_edges(&self, v: VertexId) -> &[KrId] {
        let start = self.graph.offset(v);
        &self.slot_edge[start..start + self.graph.degree(v)]
    }

    /// Triangle ids containing edge `e`, ordered by their third vertex. Requires `r = 3`.
    pub fn edge_triangles(&self, e: KrId) -> impl Iterator<Item = KrId> + '_ {
        self.edge_tri_slice(e).iter().map(|&(_, t)| t)
    }

    fn edge_tri_slice(&self, e: KrId) -> &[(VertexId, KrId)] {
        &self.edge_tri[self.edge_tri_offsets[e]..self.edge_tri_offsets[e + 1]]
    }

    /// Triangle id of `{a, b, c}`, if it is a triangle. Requires `r = 3`.
    pub fn triangle_id(&self, a: VertexId, b: VertexId, c: VertexId) -> Option<KrId> {
        let mut t = [a, b, c];
        t.sort_unstable();
        let e = self.edge_id(t[0], t[1])?;
        let list = self.edge_tri_slice(e);
        list.binary_search_by_key(&t[2], |&(third, _)| third)
            .ok()
            .map(|i| list[i].1)
    }

    /// Calls `f` once per K_s containing K_r `u`, passing the ids of the K_s's
    /// constituent K_rs with `u` first.
    pub fn for_each_s_clique<F: FnMut(&[KrId])>(&self, u: KrId, mut f: F) {
        let g = self.graph;
        match self.rs.r() {
            1 => {
                for &v in g.neighbors(u) {
                    f(&[u, v]);
                }
            }
            2 => {
                let [a, b] = self.edges[u];
                let (na, nb) = (g.neighbors(a), g.neighbors(b));
                let (ea, eb) = (self.incident_edges(a), self.incident_edges(b));
                let (mut i, mut j) = (0, 0);
                while i < na.len() && j < nb.len() {
                    match na[i].cmp(&nb[j]) {
                        Ordering::Less => i += 1,
                        Ordering::Greater => j += 1,
                        Ordering::Equal => {
                            f(&[u, ea[i], eb[j]]);
                            i += 1;
                            j += 1;
                        }
                    }
                }
            }
            _ => {
                // Common neighbors d of a, b, c are exactly the third vertices
                // shared by the triangle lists of ab, ac and bc.
                let [ab, ac, bc] = self.triangle_edges[u];
                let (x, y, z) = (
                    self.edge_tri_slice(ab),
                    self.edge_tri_slice(ac),
                    self.edge_tri_slice(bc),
                );
                let (mut i, mut j, mut k) = (0, 0, 0);
                while i < x.len() && j < y.len() && k < z.len() {
                    let (dx, dy, dz) = (x[i].0, y[j].0, z[k].0);
                    let hi = dx.max(dy).max(dz);
                    if dx == hi && dy == hi && dz == hi {
                        f(&[u, x[i].1, y[j].1, z[k].1]);
                        i += 1;
                        j += 1;
                        k += 1;
                    } else {
                        if dx < hi {
                            i += 1;
                        }
                        if dy < hi {
                            j += 1;
                        }
                        if dz < hi {
                            k += 1;
                        }
                    }
                }
            }
        }
    }

    /// Appends the flattened K_s neighborhood of `u` to `out` (cleared first),
    /// `s` ids per K_s.
    pub fn collect_s_cliques(&self, u: KrId, out: &mut Vec<KrId>) {
        out.clear();
        self.for_each_s_clique(u, |c| out.extend_from_slice(c));
    }

    /// The K_ss containing K_r `u`. `s` must equal `r + 1`.
    pub fn s_cliques_of(&self, u: KrId, s: usize) -> Result<KsNeighborhood> {
        if s != self.rs.s() {
            return Err(Error::Config(format!(
                "unsupported (r,s) = ({},{s}); this index serves ({},{})",
                self.r(),
                self.r(),
                self.rs.s()
            )));
        }
        let mut flat = Vec::new();
        self.collect_s_cliques(u, &mut flat);
        Ok(KsNeighborhood { s, flat })
    }

    /// K_s-degree of every K_r.
    pub fn s_degrees(&self) -> Vec<u32> {
        match self.rs.r() {
            1 => (0..self.graph.n()).map(|v| self.graph.degree(v) as u32).collect(),
            2 => (0..self.edges.len())
                .map(|e| {
                    let [a, b] = self.edges[e];
                    let mut c = 0u32;
                    intersect_sorted(self.graph.neighbors(a), self.graph.neighbors(b), |_| c += 1);
                    c
                })
                .collect(),
            _ => (0..self.triangles.len())
                .map(|t| {
                    let mut c = 0u32;
                    self.for_each_s_clique(t, |_| c += 1);
                    c
                })
                .collect(),
        }
    }
}

fn intersect_sorted<F: FnMut(VertexId)>(a: &[VertexId], b: &[VertexId], mut f: F) {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            Ordering::Less => i += 1,
            Ordering::Greater => j += 1,
            Ordering::Equal => {
                f(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;

    #[test]
    fn triangle_counts() {
        let k4 = gen::complete(4);
        assert_eq!(CliqueIndex::build(&k4, Rs::ThreeFour).len(), 4);
        let c4 = gen::cycle(4);
        assert_eq!(CliqueIndex::build(&c4, Rs::ThreeFour).len(), 0);
        let k5 = gen::complete(5);
        assert_eq!(CliqueIndex::build(&k5, Rs::ThreeFour).len(), 10);
    }

    #[test]
    fn edges_are_lexicographic() {
        let g = gen::complete(4);
        let idx = CliqueIndex::build(&g, Rs::TwoThree);
        let tuples: Vec<_> = (0..idx.len()).map(|e| idx.tuple(e)).collect();
        let mut sorted = tuples.clone();
        sorted.sort();
        assert_eq!(tuples, sorted);
        assert_eq!(idx.edge_id(3, 1), idx.edge_id(1, 3));
        assert_eq!(idx.edge_id(1, 3), Some(4));
    }

    #[test]
    fn k4_edge_in_two_triangles() {
        let g = gen::complete(4);
        let idx = CliqueIndex::build(&g, Rs::TwoThree);
        let e01 = idx.edge_id(0, 1).unwrap();
        let nb = idx.s_cliques_of(e01, 3).unwrap();
        let thirds: Vec<Vec<VertexId>> = nb
            .iter()
            .map(|c| {
                let mut vs: Vec<_> = c.iter().flat_map(|&e| idx.tuple(e)).collect();
                vs.sort();
                vs.dedup();
                vs
            })
            .collect();
        assert_eq!(thirds, vec![vec![0, 1, 2], vec![0, 1, 3]]);
    }

    #[test]
    fn star_edge_has_no_triangles() {
        let g = gen::star(3);
        let idx = CliqueIndex::build(&g, Rs::TwoThree);
        for e in 0..idx.len() {
            assert!(idx.s_cliques_of(e, 3).unwrap().is_empty());
        }
    }

    #[test]
    fn k5_triangle_in_two_four_cliques() {
        let g = gen::complete(5);
        let idx = CliqueIndex::build(&g, Rs::ThreeFour);
        let t = idx.triangle_id(0, 1, 2).unwrap();
        let nb = idx.s_cliques_of(t, 4).unwrap();
        assert_eq!(nb.len(), 2);
        let expect = [
            [
                t,
                idx.triangle_id(0, 1, 3).unwrap(),
                idx.triangle_id(0, 2, 3).unwrap(),
                idx.triangle_id(1, 2, 3).unwrap(),
            ],
            [
                t,
                idx.triangle_id(0, 1, 4).unwrap(),
                idx.triangle_id(0, 2, 4).unwrap(),
                idx.triangle_id(1, 2, 4).unwrap(),
            ],
        ];
        for (got, want) in nb.iter().zip(expect) {
            assert_eq!(got, want);
        }
    }

    #[test]
    fn wrong_s_is_a_config_error() {
        let g = gen::complete(4);
        let idx = CliqueIndex::build(&g, Rs::TwoThree);
        assert!(matches!(idx.s_cliques_of(0, 4), Err(Error::Config(_))));
        assert!(matches!(CliqueIndex::for_order(&g, 4), Err(Error::Config(_))));
    }

    #[test]
    fn degree_tables() {
        let k4 = gen::complete(4);
        assert_eq!(CliqueIndex::build(&k4, Rs::TwoThree).s_degrees(), vec![2; 6]);
        let p = gen::path(3);
        assert_eq!(CliqueIndex::build(&p, Rs::OneTwo).s_degrees(), vec![1, 2, 1]);
        let k5 = gen::complete(5);
        assert_eq!(CliqueIndex::build(&k5, Rs::ThreeFour).s_degrees(), vec![2; 10]);
    }

    #[test]
    fn isolated_vertex_has_zero_degree() {
        let g = Graph::from_edges(3, [(0, 1)]);
        assert_eq!(CliqueIndex::build(&g, Rs::OneTwo).s_degrees(), vec![1, 1, 0]);
    }
}
