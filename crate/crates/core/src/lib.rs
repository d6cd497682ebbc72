//! Exact values of the Zarankiewicz function `Z(m, n)` for `K_{2,2}`-free
//! bipartite graphs with parts of sizes `m` and `n`, together with witness
//! hypergraphs that certify them.
//!
//! A `K_{2,2}`-free bipartite graph with parts `[m]` and `[n]` is the same as
//! a linear hypergraph on `m` vertices with `n` edges, and the number of
//! graph edges is the hypergraph's total degree. Everything here works on the
//! hypergraph side.

pub mod bounds;
pub mod cli;
pub mod gdd;
pub mod hypercore;
pub mod oracle;
pub mod triangles;
pub mod witness;
