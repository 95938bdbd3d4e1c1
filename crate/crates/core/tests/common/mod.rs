use lexnet::BipartiteGraph;
use proptest::prelude::*;

/// Strict-mode graphs: every word picks a nonempty meaning subset.
#[allow(dead_code)]
pub fn strict_graph(max_n: usize, max_m: usize) -> impl Strategy<Value = BipartiteGraph> {
    assert!(max_m <= 16);
    (1..=max_n, 1..=max_m).prop_flat_map(|(n, m)| {
        proptest::collection::vec(1u32..(1u32 << m), n).prop_map(move |masks| {
            let mut edges = Vec::new();
            for (i, mask) in masks.iter().enumerate() {
                for j in 0..m {
                    if mask & (1 << j) != 0 {
                        edges.push((i, j));
                    }
                }
            }
            BipartiteGraph::new(n, m, edges).expect("masks are nonzero")
        })
    })
}

/// Deterministic random strict graph: first seed at or after `seed` whose
/// draw succeeds.
#[allow(dead_code)]
pub fn seeded_strict(n: usize, m: usize, p: f64, seed: u64) -> BipartiteGraph {
    (seed..)
        .find_map(|s| BipartiteGraph::random(n, m, p, s).ok())
        .expect("some seed yields a strict graph")
}

/// Deterministic random connected strict graph.
#[allow(dead_code)]
pub fn seeded_connected(n: usize, m: usize, p: f64, seed: u64) -> BipartiteGraph {
    (seed..)
        .find_map(|s| {
            BipartiteGraph::random(n, m, p, s)
                .ok()
                .filter(BipartiteGraph::is_connected)
        })
        .expect("some seed yields a connected graph")
}

#[allow(dead_code)]
pub fn assert_close(actual: f64, expected: f64, tol: f64) {
    assert!(
        (actual - expected).abs() <= tol,
        "expected {expected}, got {actual} (tol {tol})"
    );
}

#[allow(dead_code)]
pub fn g1() -> BipartiteGraph {
    BipartiteGraph::new(2, 3, vec![(0, 0), (0, 1), (1, 1), (1, 2)]).unwrap()
}
