//! The parity facts and counting identities that hold for every linear
//! hypergraph, checked on a random one.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use zforge::bounds::{self, format_rational};
use zforge::hypercore::random_linear;

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let h = random_linear(20, 60, 5, &mut rng);
    let m = h.m() as u64;
    println!("m = {m}, n = {}, z = {}", h.edge_count(), h.total_degree());
    println!("profile {:?}", h.size_profile().iter().collect::<Vec<_>>());

    let triples = h.restrict_to_size(3);
    println!("triples only: {:?}", triples.parity_report().unwrap());

    let d = h.defect_graph().unwrap().edge_count() as i64;
    let id = bounds::profile_identities(&h.size_profile(), m, h.edge_count() as u64, d).unwrap();
    println!(
        "defect {d}; residuals {} {} {}; z recovered as {} and {}",
        id.residual_eq1,
        id.residual_eq2,
        id.residual_eq4,
        format_rational(&id.z_from_eq3),
        format_rational(&id.z_from_plus)
    );
}
