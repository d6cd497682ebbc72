//! Hypergraphs, graphs and the witness verifier.
//!
//! Vertices are dense 0-based ids. Labelled examples with other vertex names
//! are relabelled onto `0..m`: vertex `i` of `{1..8}` becomes `i - 1`, and in
//! the `Z_2k ∪ {3/2}` construction the extra point `3/2` becomes `2k`.

mod document;
mod graph;
mod hypergraph;

pub use document::{DocumentError, WitnessDocument};
pub use graph::Graph;
pub use hypergraph::{
    canonical_edge_order, random_linear, verify_witness, Hypergraph, HypergraphError,
    LinearityViolation, ParityReport, SizeProfile, WitnessFailure, WitnessReport,
};

/// `C(m, 2)`.
pub const fn pairs(m: usize) -> usize {
    m * m.saturating_sub(1) / 2
}

/// The linear {2,3,4}-space on 8 vertices with 1 quad, 6 triples and 4
/// pairs, relabelled from `{1..8}` to `{0..7}`.
pub fn example_2_1() -> Hypergraph {
    Hypergraph::from_edges(
        8,
        [
            &[0, 1, 2, 3][..],
            &[1, 4, 5],
            &[1, 6, 7],
            &[2, 4, 6],
            &[2, 5, 7],
            &[3, 4, 7],
            &[3, 5, 6],
            &[0, 4],
            &[0, 5],
            &[0, 6],
            &[0, 7],
        ],
    )
    .expect("example hypergraph is well formed")
}
