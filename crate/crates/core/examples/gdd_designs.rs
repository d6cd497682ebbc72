//! 3-GDDs: the 4^u 2^v family, uniform and one-irregular types, and
//! filling a group with a smaller design.

use zforge::gdd::{self, admissible_4u2v, fill_group, verify_gdd, GddType};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (u, v) in [(3, 6), (2, 2), (6, 4), (9, 0)] {
        match admissible_4u2v(u, v) {
            Ok(()) => {
                let d = gdd::construct_4u2v(u, v, 0)?;
                println!("4^{u} 2^{v}: {} triples on {} points", d.triples.len(), d.m);
            }
            Err(why) => println!("4^{u} 2^{v}: inadmissible, {why}"),
        }
    }

    for spec in ["3^5", "6^4", "5^1 1^6", "8^1 4^3"] {
        let ty: GddType = spec.parse()?;
        let d = gdd::construct(&ty, 0)?;
        println!("{ty}: {} triples, verified {}", d.triples.len(), verify_gdd(&d, &ty).passed());
    }

    // 6^3 with one group split as 2^3
    let host = gdd::construct_uniform(6, 3, 0)?;
    let filler = gdd::construct_uniform(2, 3, 0)?;
    let filled = fill_group(&host, 0, &filler)?;
    println!("filled: type {}, {} triples", filled.gdd_type(), filled.triples.len());
    Ok(())
}
