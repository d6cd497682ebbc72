//! The 8-point linear space with one quad, eight triples and three pairs,
//! which attains Z(8, 11) = 30.

use zforge::bounds;
use zforge::hypercore::{example_2_1, verify_witness};

fn main() {
    let h = example_2_1();
    for e in h.edges() {
        println!("{e:?}");
    }
    let report = verify_witness(&h, 8, 11, 30);
    println!("verifies as (8, 11, 30): {}", report.passed());
    println!("z_value(8, 11) = {:?}", bounds::z_value(8, 11, false).z);
    println!("parity: {:?}", h.parity_report().unwrap());
}
