use super::*;
use crate::ideal::IdealKind;
use crate::Budget;

fn triangle() -> Graph {
    Graph::cycle(3)
}

/// The 7-vertex odd antihole: complement of the 7-cycle.
fn antihole7() -> Graph {
    Graph::cycle(7).complement()
}

fn kaiser_h4() -> Graph {
    let edges = [
        (1, 2),
        (2, 3),
        (3, 4),
        (4, 5),
        (5, 6),
        (6, 7),
        (7, 8),
        (8, 9),
        (9, 10),
        (1, 10),
        (2, 11),
        (8, 11),
        (3, 12),
        (7, 12),
        (1, 9),
        (2, 8),
        (3, 7),
        (4, 6),
        (1, 6),
        (4, 9),
        (5, 10),
        (10, 11),
        (11, 12),
        (5, 12),
    ];
    Graph::new(12, edges.iter().map(|&(a, b)| (a - 1, b - 1))).unwrap()
}

fn two_triangles() -> Graph {
    Graph::new(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap()
}

#[test]
fn edge_ideal_examples() {
    let tri = triangle().edge_ideal();
    assert_eq!(tri.gens().len(), 3);
    assert!(tri.is_squarefree());

    let anti = antihole7().edge_ideal();
    assert_eq!(anti.num_gens(), 14);

    assert_eq!(Graph::discrete(3).edge_ideal().kind(), IdealKind::Zero);
}

#[test]
fn blocker_examples() {
    // Star with edges {1,2},{1,3}: covers are {1} and {2,3}.
    let star = Graph::new(3, [(0, 1), (0, 2)]).unwrap();
    let b = star.blocker();
    assert_eq!(b.edges(), vec![vec![0], vec![1, 2]]);

    // Complete graph: all (s-1)-subsets.
    let k4 = Graph::complete(4);
    let b = k4.blocker();
    assert_eq!(b.num_edges(), 4);
    assert!(b.edges().iter().all(|e| e.len() == 3));

    // Cone over the 5-cycle: the base vertex set plus apex-completed covers.
    let cone_c5 = Graph::cycle(5).cone_over();
    let covers = cone_c5.blocker();
    assert_eq!(covers.num_edges(), 6);
    let ic = cone_c5.cover_ideal();
    let expected = MonomialIdeal::new(
        6,
        vec![
            vec![1, 1, 1, 1, 1, 0],
            vec![0, 1, 0, 1, 1, 1],
            vec![1, 1, 0, 1, 0, 1],
            vec![1, 0, 1, 1, 0, 1],
            vec![1, 0, 1, 0, 1, 1],
            vec![0, 1, 1, 0, 1, 1],
        ],
    )
    .unwrap();
    assert_eq!(ic, expected);
}

#[test]
fn blocker_involution_small_random() {
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};
    let mut rng = StdRng::seed_from_u64(0x5eed8);
    for _ in 0..300 {
        let n = rng.random_range(1..=5);
        let e = rng.random_range(0..=6);
        let raw: Vec<Vec<usize>> = (0..e)
            .map(|_| {
                let size = rng.random_range(1..=n);
                let mut edge: Vec<usize> = (0..size).map(|_| rng.random_range(0..n)).collect();
                edge.sort_unstable();
                edge.dedup();
                edge
            })
            .collect();
        // Keep only a maximal antichain subset.
        let mut kept: Vec<Vec<usize>> = Vec::new();
        'outer: for e in raw {
            for k in &kept {
                let km: u64 = k.iter().fold(0, |m, &v| m | 1 << v);
                let em: u64 = e.iter().fold(0, |m, &v| m | 1 << v);
                if km & em == km || km & em == em {
                    continue 'outer;
                }
            }
            kept.push(e);
        }
        let c = Clutter::new(n, kept).unwrap();
        assert_eq!(c.blocker().blocker(), c, "involution failed for {c:?}");
    }
}

#[test]
fn blocker_edges_are_transversals() {
    let g = kaiser_h4();
    let b = g.blocker();
    for cover in b.edges() {
        assert!(g.as_clutter().is_cover(&cover));
        assert!(g.as_clutter().is_minimal_cover(&cover));
    }

    // And conversely: every transversal contains a blocker edge.
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};
    let mut rng = StdRng::seed_from_u64(0x5eedd);
    let blocker_masks: Vec<u64> = b
        .edges()
        .iter()
        .map(|e| e.iter().fold(0u64, |m, &v| m | 1 << v))
        .collect();
    for _ in 0..200 {
        let set: Vec<usize> = (0..12).filter(|_| rng.random_range(0..2) == 1).collect();
        let clutter = g.as_clutter();
        if clutter.is_cover(&set) {
            let sm: u64 = set.iter().fold(0, |m, &v| m | 1 << v);
            assert!(
                blocker_masks.iter().any(|&bm| bm & !sm == 0),
                "transversal {set:?} contains no minimal cover"
            );
        }
    }
}

#[test]
fn deletion_contraction_examples() {
    let tri = triangle().as_clutter();
    let contracted = tri.contraction(0).unwrap();
    assert_eq!(contracted.edges(), vec![vec![0], vec![1]]);
    let deleted = tri.deletion(0).unwrap();
    assert_eq!(deleted.edges(), vec![vec![0, 1]]);
}

#[test]
fn minors_commute_on_distinct_vertices() {
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};
    let mut rng = StdRng::seed_from_u64(0x5eed9);
    for _ in 0..60 {
        let n = rng.random_range(3..=5);
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if rng.random_range(0..2) == 1 {
                    edges.push((a, b));
                }
            }
        }
        let c = Graph::new(n, edges).unwrap().as_clutter();
        // Delete/contract two distinct vertices in both orders; labels shift,
        // so compare via the order that removes the larger vertex first.
        let hi = rng.random_range(1..n);
        let lo = rng.random_range(0..hi);
        let a = c.deletion(hi).unwrap().contraction(lo).unwrap();
        let b = c.contraction(lo).unwrap().deletion(hi - 1).unwrap();
        assert_eq!(a, b);
    }
}

#[test]
fn minor_scan_on_normal_cover_ideals() {
    let budget = Budget::default();
    // 14 single-vertex minors, of which 12 are distinct as labeled clutters.
    let rep = minor_normality_scan(&antihole7().as_clutter(), 1, &budget).unwrap();
    assert!(rep.base_normal);
    assert!(rep.violations.is_empty());
    assert_eq!(rep.minors_checked, 12);

    let rep = minor_normality_scan(&triangle().as_clutter(), 2, &budget).unwrap();
    assert!(rep.base_normal);
    assert!(rep.violations.is_empty());

    let rep = minor_normality_scan(&Clutter::discrete(3), 1, &budget).unwrap();
    assert!(rep.base_normal);
    assert!(rep.violations.is_empty());
}

#[test]
fn complement_examples() {
    assert_eq!(antihole7().complement(), Graph::cycle(7));
    assert_eq!(Graph::complete(5).complement(), Graph::discrete(5));
    let g = kaiser_h4();
    assert_eq!(g.complement().complement(), g);
}

#[test]
fn clique_clutter_examples() {
    let tri = triangle().clique_clutter();
    assert_eq!(tri.edges(), vec![vec![0, 1, 2]]);

    // Triangle-free with no isolated vertices: maximal cliques are the edges.
    let c5 = Graph::cycle(5);
    assert_eq!(c5.clique_clutter(), c5.as_clutter());

    let d2 = Graph::discrete(2).clique_clutter();
    assert_eq!(d2.edges(), vec![vec![0], vec![1]]);
}

#[test]
fn cover_ideal_via_cliques_matches_blocker_route() {
    // Complement is a 5-cycle plus one isolated vertex.
    let c5_plus_isolated = Graph::new(6, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
        .unwrap()
        .complement();
    for g in [
        triangle(),
        Graph::cycle(5),
        antihole7(),
        Graph::complete(4),
        Graph::cycle(5).cone_over(),
        Graph::new(3, [(0, 1), (0, 2)]).unwrap(),
        Graph::discrete(2),
        two_triangles(),
        c5_plus_isolated,
    ] {
        assert_eq!(
            g.cover_ideal_via_cliques().unwrap(),
            g.cover_ideal(),
            "graph {g:?}"
        );
    }
}

#[test]
fn cover_ideal_splits_over_triangle_free_complement() {
    // When the complement has no triangles, the cover ideal is generated by
    // the near-full monomials at the complement's isolated vertices together
    // with the dual of the complement's edge ideal.
    let complement = Graph::new(6, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
    let g = complement.complement();
    let mut expected: Vec<Vec<u64>> = vec![vec![1, 1, 1, 1, 1, 0]];
    expected.extend(
        complement
            .edge_ideal()
            .dual_star()
            .unwrap()
            .gens()
            .iter()
            .cloned(),
    );
    let expected = MonomialIdeal::new(6, expected).unwrap();
    assert_eq!(g.cover_ideal(), expected);

    // With no isolated vertices and no triangles the dual alone suffices.
    let two_c5 = Graph::new(
        10,
        [
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (0, 4),
            (5, 6),
            (6, 7),
            (7, 8),
            (8, 9),
            (5, 9),
        ],
    )
    .unwrap();
    let g = two_c5.complement();
    assert_eq!(g.cover_ideal(), two_c5.edge_ideal().dual_star().unwrap());
}

#[test]
fn independence_number_examples() {
    assert_eq!(antihole7().independence_number(), 2);
    assert_eq!(kaiser_h4().independence_number(), 4);
    assert_eq!(Graph::complete(6).independence_number(), 1);
    assert_eq!(Graph::discrete(4).independence_number(), 4);
}

#[test]
fn components_examples() {
    let g = two_triangles();
    let comps = g.connected_components();
    assert_eq!(comps, vec![vec![0, 1, 2], vec![3, 4, 5]]);
    assert_eq!(Graph::cycle(7).connected_components().len(), 1);
    assert_eq!(Graph::discrete(4).connected_components().len(), 4);

    // Cover ideal of a disjoint union is the product over components.
    let product = g
        .component_graphs()
        .iter()
        .map(|c| c.cover_ideal())
        .try_fold(MonomialIdeal::unit(6), |acc, i| acc.product(&i))
        .unwrap();
    assert_eq!(product, g.cover_ideal());
}

#[test]
fn cone_over_examples() {
    let cone = Graph::cycle(5).cone_over();
    assert_eq!(cone.num_vertices(), 6);
    assert_eq!(cone.num_edges(), 10);
    // The base vertex set is a minimal cover of the cone.
    assert!(cone.as_clutter().is_minimal_cover(&[0, 1, 2, 3, 4]));

    let single = Graph::discrete(1).cone_over();
    assert_eq!(single.edges(), vec![(0, 1)]);
}

#[test]
fn induced_odd_cycles_examples() {
    let c7 = Graph::cycle(7);
    let cycles = c7.induced_odd_cycles(7);
    assert_eq!(cycles.len(), 1);
    assert_eq!(cycles[0].len(), 7);

    assert_eq!(triangle().induced_odd_cycles(3).len(), 1);

    // Kaiser's graph contains induced 5-cycles.
    let cycles = kaiser_h4().induced_odd_cycles(12);
    assert!(cycles.iter().any(|c| c.len() == 5));

    // Even cycles have no odd induced cycle.
    assert!(Graph::cycle(6).induced_odd_cycles(6).is_empty());
}

#[test]
fn induced_cycles_are_chordless_and_unique() {
    let g = kaiser_h4();
    let cycles = g.induced_odd_cycles(12);
    let mut seen = std::collections::HashSet::new();
    for c in &cycles {
        let mut sorted = c.clone();
        sorted.sort_unstable();
        // In a chordless cycle every vertex has exactly two neighbors inside.
        for &v in c {
            let inside = c.iter().filter(|&&u| u != v && g.adjacent(u, v)).count();
            assert_eq!(inside, 2, "chord in cycle {c:?}");
        }
        assert!(seen.insert(c.clone()), "duplicate cycle {c:?}");
        // Canonical form: smallest vertex first, reflection fixed.
        assert!(c[0] == *sorted.first().unwrap());
        assert!(c[1] < *c.last().unwrap());
    }
}

#[test]
fn hochster_configuration_examples() {
    let configs = hochster_configurations(&two_triangles());
    assert_eq!(configs.len(), 1);
    assert_eq!(configs[0].cycle1, vec![0, 1, 2]);
    assert_eq!(configs[0].cycle2, vec![3, 4, 5]);

    assert!(hochster_configurations(&Graph::cycle(9)).is_empty());

    // Two disjoint 5-cycles form exactly one configuration.
    let two_c5 = Graph::new(
        10,
        [
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (0, 4),
            (5, 6),
            (6, 7),
            (7, 8),
            (8, 9),
            (5, 9),
        ],
    )
    .unwrap();
    assert_eq!(hochster_configurations(&two_c5).len(), 1);

    // Joining the triangles by an edge kills the configuration.
    let mut edges = two_triangles().edges();
    edges.push((2, 3));
    let joined = Graph::new(6, edges).unwrap();
    assert!(hochster_configurations(&joined).is_empty());
}

#[test]
fn edge_normality_combinatorial_examples() {
    assert!(edge_ideal_normality_combinatorial(&antihole7()).normal);
    let rep = edge_ideal_normality_combinatorial(&kaiser_h4());
    assert!(!rep.normal);
    assert!(matches!(
        rep.witness,
        Some(NormalityWitness::HochsterPair { .. })
    ));
    assert!(edge_ideal_normality_combinatorial(&Graph::discrete(5)).normal);
}

#[test]
fn m_monomial_examples() {
    let g = two_triangles();
    let (exp, level) = m_monomial(&g, &[0, 1, 2], &[3, 4, 5]).unwrap();
    assert_eq!(exp, vec![1; 6]);
    assert_eq!(level, 3);
    // Disjoint with no connecting edge: not in the cube of the edge ideal.
    assert!(crate::ideal::power_membership(&g.edge_ideal(), &exp, level).is_none());

    // Two triangles sharing a vertex: the monomial does land in the power.
    let shared = Graph::new(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
    let (exp, level) = m_monomial(&shared, &[0, 1, 2], &[2, 3, 4]).unwrap();
    assert_eq!(level, 3);
    assert!(crate::ideal::power_membership(&shared.edge_ideal(), &exp, level).is_some());

    // Disjoint triangles joined by an edge likewise.
    let mut edges = two_triangles().edges();
    edges.push((2, 3));
    let joined = Graph::new(6, edges).unwrap();
    let (exp, level) = m_monomial(&joined, &[0, 1, 2], &[3, 4, 5]).unwrap();
    assert!(crate::ideal::power_membership(&joined.edge_ideal(), &exp, level).is_some());

    assert!(m_monomial(&g, &[0, 1, 2, 3], &[4, 5]).is_err());
}

#[test]
fn reduction_examples() {
    let budget = Budget::default();
    // Cone over C5: the apex qualifies, the residual C5 is decided directly.
    let cone = Graph::cycle(5).cone_over();
    let rep = neighbor_mvc_reduction(&cone, &budget).unwrap();
    assert_eq!(rep.chain.len(), 1);
    assert_eq!(rep.chain[0].vertex, 5);
    assert!(rep.conclusion.unwrap().normal);

    // Complete graphs peel down to nothing.
    let rep = neighbor_mvc_reduction(&Graph::complete(4), &budget).unwrap();
    assert!(rep.chain.len() >= 3);
    assert!(rep.conclusion.unwrap().normal);

    // C5 itself has no qualifying vertex: empty chain, no conclusion.
    let rep = neighbor_mvc_reduction(&Graph::cycle(5), &budget).unwrap();
    assert!(rep.chain.is_empty());
    assert!(rep.conclusion.is_none());
}

#[test]
fn cover_classification_when_neighborhood_is_mvc() {
    // For any v whose neighborhood is a minimal vertex cover, the minimal
    // covers of G are exactly N(v) and {v} plus covers of G - v not
    // containing N(v). Checked on all graphs with 5 vertices.
    for bits in 0u32..1 << 10 {
        let mut edges = Vec::new();
        let mut k = 0;
        for a in 0..5 {
            for b in a + 1..5 {
                if bits >> k & 1 == 1 {
                    edges.push((a, b));
                }
                k += 1;
            }
        }
        let g = Graph::new(5, edges).unwrap();
        let clutter = g.as_clutter();
        for v in 0..5 {
            let nbrs = g.neighbors(v);
            if nbrs.is_empty() || !clutter.is_minimal_cover(&nbrs) {
                continue;
            }
            let mut expected: Vec<Vec<usize>> = vec![nbrs.clone()];
            let nv_mask: u64 = nbrs.iter().fold(0, |m, &u| m | 1 << u);
            let deleted = g.delete_vertex(v).unwrap();
            for d in deleted.blocker().edges() {
                // Map labels back (vertices >= v shift up).
                let mapped: Vec<usize> =
                    d.iter().map(|&u| if u >= v { u + 1 } else { u }).collect();
                let dm: u64 = mapped.iter().fold(0, |m, &u| m | 1 << u);
                if nv_mask & dm != nv_mask {
                    let mut cover = vec![v];
                    cover.extend(mapped);
                    cover.sort_unstable();
                    expected.push(cover);
                }
            }
            expected.sort();
            let mut actual = g.blocker().edges();
            actual.sort();
            assert_eq!(actual, expected, "graph {g:?} vertex {v}");
        }
    }
}

#[test]
fn complement_commutes_with_deletion() {
    // Deleting a vertex set commutes with taking complements; exhaustive on
    // 4 vertices, sampled on 5.
    for bits in 0u32..1 << 6 {
        let mut edges = Vec::new();
        let mut k = 0;
        for a in 0..4 {
            for b in a + 1..4 {
                if bits >> k & 1 == 1 {
                    edges.push((a, b));
                }
                k += 1;
            }
        }
        let g = Graph::new(4, edges).unwrap();
        for v in 0..4 {
            assert_eq!(
                g.complement().delete_vertex(v).unwrap(),
                g.delete_vertex(v).unwrap().complement()
            );
        }
    }
}

#[test]
fn duality_criterion_examples() {
    // Odd antihole: complement is one 7-cycle, no configurations.
    let rep = duality_criterion(&antihole7()).unwrap();
    assert_eq!(rep.independence_number, 2);
    assert!(rep.cover_ideal_normal);

    // Complement two disjoint 5-cycles: exactly the obstruction.
    let g = Graph::new(
        10,
        [
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (0, 4),
            (5, 6),
            (6, 7),
            (7, 8),
            (8, 9),
            (5, 9),
        ],
    )
    .unwrap()
    .complement();
    let rep = duality_criterion(&g).unwrap();
    assert!(!rep.cover_ideal_normal);

    // Complete graph: independence number one.
    let rep = duality_criterion(&Graph::complete(5)).unwrap();
    assert_eq!(rep.independence_number, 1);
    assert!(rep.cover_ideal_normal);

    // Outside the validity range the operation refuses.
    assert!(duality_criterion(&kaiser_h4()).is_err());
}

#[test]
fn necessary_condition_examples() {
    let g = Graph::new(
        10,
        [
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (0, 4),
            (5, 6),
            (6, 7),
            (7, 8),
            (8, 9),
            (5, 9),
        ],
    )
    .unwrap()
    .complement();
    let rep = necessary_condition_check(&g);
    assert_eq!(rep.verdict, Some(false));
    assert!(rep.obstruction.is_some());

    assert!(necessary_condition_check(&triangle()).verdict.is_none());
}

#[test]
fn integral_vertices_are_the_blocker() {
    use crate::closure::covering_vertices;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};
    let mut rng = StdRng::seed_from_u64(0x5eedb);
    let mut graphs: Vec<Graph> = vec![triangle(), Graph::cycle(5), two_triangles()];
    for _ in 0..8 {
        let n = rng.random_range(2..=5);
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if rng.random_range(0..2) == 1 {
                    edges.push((a, b));
                }
            }
        }
        graphs.push(Graph::new(n, edges).unwrap());
    }
    for g in graphs {
        if g.num_edges() == 0 {
            continue;
        }
        let poly = covering_vertices(&g.edge_ideal()).unwrap();
        let mut integral = poly.integral_vertices();
        integral.sort();
        let mut covers: Vec<Vec<u64>> = g
            .blocker()
            .edges()
            .iter()
            .map(|c| {
                (0..g.num_vertices())
                    .map(|v| u64::from(c.contains(&v)))
                    .collect()
            })
            .collect();
        covers.sort();
        assert_eq!(integral, covers, "graph {g:?}");
    }
}

#[test]
fn reduction_conclusion_matches_rees_route() {
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};
    let budget = Budget::default();
    let mut rng = StdRng::seed_from_u64(0x5eedc);
    let mut concluded = 0;
    for _ in 0..40 {
        let n = rng.random_range(3..=6);
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if rng.random_range(0..10) < 5 {
                    edges.push((a, b));
                }
            }
        }
        let g = Graph::new(n, edges).unwrap();
        let rep = neighbor_mvc_reduction(&g, &budget).unwrap();
        let Some(conclusion) = rep.conclusion else {
            continue;
        };
        let ideal = g.cover_ideal();
        let direct = match ideal.kind() {
            IdealKind::Proper => normality_via_rees(&ideal, &budget).unwrap().normal,
            _ => true,
        };
        assert_eq!(conclusion.normal, direct, "graph {g:?}");
        concluded += 1;
    }
    assert!(concluded > 5, "too few chains concluded to be meaningful");
}

#[test]
fn hochster_agrees_with_rees_on_small_graphs() {
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};
    let budget = Budget::default();
    let mut rng = StdRng::seed_from_u64(0x5eeda);
    for _ in 0..15 {
        let n = rng.random_range(3..=6);
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if rng.random_range(0..10) < 4 {
                    edges.push((a, b));
                }
            }
        }
        let g = Graph::new(n, edges).unwrap();
        let ideal = g.edge_ideal();
        if ideal.kind() != IdealKind::Proper {
            continue;
        }
        assert_eq!(
            edge_ideal_normality_combinatorial(&g).normal,
            normality_via_rees(&ideal, &budget).unwrap().normal,
            "graph {g:?}"
        );
    }
}
