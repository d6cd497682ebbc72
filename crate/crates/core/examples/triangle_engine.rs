//! Triangle decompositions: Steiner triple systems, complete multipartite
//! graphs, and a certified infeasible case.

use zforge::hypercore::Graph;
use zforge::triangles::{triangle_decompose, triangle_decompose_with, EngineConfig, DEFAULT_BUDGET};

fn main() {
    let sts = triangle_decompose(&Graph::complete(15), 0, DEFAULT_BUDGET).unwrap();
    println!("K_15: {} triangles, first {:?}", sts.len(), &sts.triangles[..3]);

    // the same graph by local search alone
    let cfg = EngineConfig { use_recipes: false, ..EngineConfig::default() };
    let g = Graph::complete(31);
    let t = triangle_decompose_with(&g, 7, &cfg).unwrap();
    println!("K_31 by search: {} triangles, decomposes {}", t.len(), t.decomposes(&g));

    let g = Graph::complete_multipartite(&[4, 4, 4, 4]);
    let t = triangle_decompose(&g, 0, DEFAULT_BUDGET).unwrap();
    println!("K_(4x4): {} triangles", t.len());

    // even, edge count divisible by 3, still no decomposition
    let g = Graph::complete_multipartite(&[2, 2, 2, 2, 2, 2, 2, 2, 2, 2]).complement();
    println!("perfect matching on 20 vertices: {:?}", triangle_decompose(&g, 0, DEFAULT_BUDGET).err());
    // every edge lies in a triangle, but only exhaustive search can tell
    let g = Graph::from_edges(
        7,
        [(0, 1), (0, 2), (0, 3), (0, 6), (1, 4), (1, 5), (1, 6), (2, 4), (2, 5), (2, 6), (3, 4), (3, 5), (3, 6), (4, 6), (5, 6)],
    );
    println!("15-edge graph on 7 vertices: {:?}", triangle_decompose(&g, 0, DEFAULT_BUDGET).err());
}
