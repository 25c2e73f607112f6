//! Shared fixtures for the benchmark targets.

use nmi_core::{Graph, MonomialIdeal};

/// The 7-vertex odd antihole: complement of the 7-cycle.
pub fn antihole7() -> Graph {
    Graph::cycle(7).complement()
}

/// A 12-vertex, 24-edge graph whose edge and cover ideals are hard cases for
/// the cone engine.
pub fn dense_12_vertex() -> Graph {
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

/// Ten degree-7 generators in ten variables; the hardest Rees cone in the
/// regression corpus.
pub fn degree7_ideal() -> MonomialIdeal {
    let gens: Vec<Vec<u64>> = vec![
        vec![1, 1, 1, 1, 1, 1, 1, 0, 0, 0],
        vec![1, 1, 1, 1, 1, 0, 1, 1, 0, 0],
        vec![1, 1, 1, 1, 1, 0, 0, 1, 1, 0],
        vec![1, 1, 1, 1, 1, 0, 0, 1, 0, 1],
        vec![1, 1, 1, 1, 0, 0, 1, 1, 0, 1],
        vec![0, 1, 1, 0, 1, 0, 1, 1, 1, 1],
        vec![1, 1, 0, 0, 0, 1, 1, 1, 1, 1],
        vec![0, 1, 1, 0, 0, 1, 1, 1, 1, 1],
        vec![0, 0, 1, 1, 0, 1, 1, 1, 1, 1],
        vec![0, 0, 1, 0, 1, 1, 1, 1, 1, 1],
    ];
    MonomialIdeal::new(10, gens).unwrap()
}
