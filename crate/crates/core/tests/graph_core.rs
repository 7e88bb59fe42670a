mod common;

use std::io::Cursor;

use nucleus::{gen, load_graph, CliqueIndex, Error, Graph, Rs};

fn brute_count(g: &Graph, size: usize) -> usize {
    fn go(g: &Graph, start: usize, cur: &mut Vec<usize>, size: usize) -> usize {
        if cur.len() == size {
            return 1;
        }
        let mut total = 0;
        for v in start..g.n() {
            if cur.iter().all(|&u| g.has_edge(u, v)) {
                cur.push(v);
                total += go(g, v + 1, cur, size);
                cur.pop();
            }
        }
        total
    }
    go(g, 0, &mut Vec::new(), size)
}

#[test]
fn loader_examples() {
    let g = load_graph(Cursor::new("0 1\n1 2\n2 0")).unwrap();
    assert_eq!((g.n(), g.m()), (3, 3));
    let g = load_graph(Cursor::new("5 5\n5 7\n7 5")).unwrap();
    assert_eq!((g.n(), g.m()), (2, 1));
    assert_eq!(g.labels(), &[5, 7]);
    let g = load_graph(Cursor::new("0 1\n# c\n1 2")).unwrap();
    assert_eq!((g.n(), g.m()), (3, 2));
    match load_graph(Cursor::new("0 1\n1 x\n")) {
        Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
        other => panic!("expected a parse error, got {other:?}"),
    }
}

#[test]
fn clique_counts() {
    assert_eq!(CliqueIndex::build(&gen::complete(4), Rs::ThreeFour).len(), 4);
    assert_eq!(CliqueIndex::build(&gen::cycle(4), Rs::ThreeFour).len(), 0);
    assert_eq!(CliqueIndex::build(&gen::complete(5), Rs::ThreeFour).len(), 10);
}

#[test]
fn s_clique_examples() {
    let k4 = gen::complete(4);
    let idx = CliqueIndex::build(&k4, Rs::TwoThree);
    let e = idx.edge_id(0, 1).unwrap();
    let tris: Vec<Vec<usize>> = idx
        .s_cliques_of(e, 3)
        .unwrap()
        .iter()
        .map(|c| {
            let mut vs: Vec<usize> = c.iter().flat_map(|&x| idx.tuple(x)).collect();
            vs.sort_unstable();
            vs.dedup();
            vs
        })
        .collect();
    assert_eq!(tris, vec![vec![0, 1, 2], vec![0, 1, 3]]);
    assert!(matches!(idx.s_cliques_of(e, 4), Err(Error::Config(_))));

    let star = gen::star(3);
    let idx = CliqueIndex::build(&star, Rs::TwoThree);
    assert!(idx.s_cliques_of(idx.edge_id(0, 1).unwrap(), 3).unwrap().is_empty());

    let k5 = gen::complete(5);
    let idx = CliqueIndex::build(&k5, Rs::ThreeFour);
    let t = idx.triangle_id(0, 1, 2).unwrap();
    assert_eq!(idx.s_cliques_of(t, 4).unwrap().len(), 2);
}

#[test]
fn degree_examples() {
    let degrees = |g: Graph, rs| CliqueIndex::build(&g, rs).s_degrees();
    assert_eq!(degrees(gen::complete(4), Rs::TwoThree), vec![2; 6]);
    assert_eq!(degrees(gen::path(3), Rs::OneTwo), vec![1, 2, 1]);
    assert_eq!(degrees(gen::complete(5), Rs::ThreeFour), vec![2; 10]);
}

#[test]
fn degree_sums_and_brute_counts() {
    for (name, g) in common::random_graphs(150, 11) {
        let d12: u32 = CliqueIndex::build(&g, Rs::OneTwo).s_degrees().iter().sum();
        assert_eq!(d12 as usize, 2 * g.m(), "{name}");

        let tri = CliqueIndex::build(&g, Rs::TwoThree);
        let d23: u32 = tri.s_degrees().iter().sum();
        let triangles = brute_count(&g, 3);
        assert_eq!(d23 as usize, 3 * triangles, "{name}");

        let idx3 = CliqueIndex::build(&g, Rs::ThreeFour);
        assert_eq!(idx3.len(), triangles, "{name}");
        let d34: u32 = idx3.s_degrees().iter().sum();
        assert_eq!(d34 as usize, 4 * brute_count(&g, 4), "{name}");
    }
}

#[test]
fn triangle_list_matches_brute_force() {
    for (name, g) in common::random_graphs(100, 12) {
        let idx = CliqueIndex::build(&g, Rs::ThreeFour);
        let listed: Vec<Vec<usize>> = (0..idx.len()).map(|t| idx.tuple(t)).collect();
        let mut brute = Vec::new();
        for a in 0..g.n() {
            for b in a + 1..g.n() {
                for c in b + 1..g.n() {
                    if g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c) {
                        brute.push(vec![a, b, c]);
                    }
                }
            }
        }
        assert_eq!(listed, brute, "{name}");
    }
}

#[test]
fn graph_invariants() {
    for (name, g) in common::random_graphs(50, 13) {
        for v in 0..g.n() {
            let nb = g.neighbors(v);
            assert!(nb.windows(2).all(|w| w[0] < w[1]), "{name}");
            assert!(!nb.contains(&v), "{name}");
            for &u in nb {
                assert!(g.has_edge(u, v), "{name}");
            }
        }
    }
}

#[test]
fn fifteen_vertex_k4_count() {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
    let g = gen::erdos_renyi(15, 0.6, &mut rng);
    let idx = CliqueIndex::build(&g, Rs::ThreeFour);
    let d: u32 = idx.s_degrees().iter().sum();
    assert_eq!(d as usize, 4 * brute_count(&g, 4));
}
