//! Witnesses for n just below C(m,2)/3, where quads and a few larger edges
//! replace pairs. One cell per builder.

use zforge::bounds;
use zforge::witness;

fn main() {
    let third = |m: u64| bounds::c2(m) / 3;
    let cells = [
        (97, third(97) - 5),
        (99, third(99) - 2),
        (101, third(101)),
        (101, third(101) - 2),
        (101, third(101) - 40),
        (98, bounds::third_minus_quarter_floor(98) as u64),
        (102, bounds::third_minus_quarter_ceil(102) as u64),
        (104, third(104) - 5),
    ];
    for (m, n) in cells {
        let r = bounds::z_below(m, n, true).unwrap();
        match witness::construct(m as usize, n as usize, 0) {
            Ok(w) => println!(
                "({m}, {n}) {:<12} z = {}  {}  {:?}",
                r.regime.as_str(),
                w.z,
                w.construction,
                w.hypergraph.size_profile().iter().collect::<Vec<_>>()
            ),
            Err(e) => println!("({m}, {n}) failed: {e}"),
        }
    }
}
