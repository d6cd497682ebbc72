//! Exhaustive search for small m, compared with the formulas.

use zforge::bounds;
use zforge::gdd::GddType;
use zforge::oracle::{exact_z, gdd_exists_bruteforce, max_triples, GddVerdict};

fn main() {
    for m in 4..=8usize {
        let c = m * (m - 1) / 2;
        let row: Vec<String> = (1..=c)
            .map(|n| {
                let exact = exact_z(m, n, 100_000_000).unwrap().optimum;
                match bounds::z_value(m as u64, n as u64, false).z {
                    Some(z) if z == exact => format!("{exact}"),
                    Some(z) => format!("{exact}!={z}"),
                    None => format!("({exact})"),
                }
            })
            .collect();
        println!("m = {m}: {}", row.join(" "));
    }
    println!("values in parentheses have no closed formula");

    let s = exact_z(5, 3, 1_000_000).unwrap();
    println!("\nZ(5,3) = {} by {:?} ({} nodes)", s.optimum, s.optimal_witness.edges(), s.nodes_expanded);
    println!("maximum packings, m = 3..9: {:?}", (3..=9).map(max_triples).collect::<Vec<_>>());

    for spec in ["4^3", "2^4", "4^1 2^3", "2^5", "4^2 2^3"] {
        let ty: GddType = spec.parse().unwrap();
        let exists = matches!(gdd_exists_bruteforce(&ty, 10_000_000), Ok(GddVerdict::Exists(_)));
        println!("3-GDD of type {spec}: {}", if exists { "exists" } else { "does not exist" });
    }
}
