//! Exact values and the regime each comes from.
//!
//! ```text
//! cargo run --example exact_values
//! ```

use zforge::bounds::{self, format_rational};

fn main() {
    for (m, n) in [(8, 11), (11, 19), (9, 36), (12, 24), (97, 1547), (101, 1683), (8, 3)] {
        let r = bounds::z_value(m, n, true);
        let z = r.z.map_or_else(|| "-".to_string(), |z| z.to_string());
        println!(
            "Z({m},{n}) = {z:>5}  {:<12} U+ = {:<8} U0 = {:<10} U- = {}",
            r.regime.as_str(),
            format_rational(&r.u_plus),
            format_rational(&r.u_zero),
            format_rational(&r.u_minus),
        );
    }

    let m = 120;
    let (lo, hi) = bounds::below_range(m).unwrap();
    println!("\nm = {m}: below-threshold formula for {lo} <= n <= {hi}, above from n = {}", bounds::above_lo(m));
}
