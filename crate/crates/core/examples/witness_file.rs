//! Build a witness, write it in the on-disk format, read it back and verify.
//!
//! ```text
//! cargo run --example witness_file -- 30 200
//! ```

use zforge::hypercore::{verify_witness, WitnessDocument};
use zforge::witness;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<usize>());
    let m = args.next().transpose()?.unwrap_or(30);
    let n = args.next().transpose()?.unwrap_or(200);

    let w = witness::construct(m, n, 0)?;
    println!("({m}, {n}): z = {}, built by {} with seed {:?}", w.z, w.construction, w.seed);
    println!("profile: {:?}", w.hypergraph.size_profile().iter().collect::<Vec<_>>());

    let path = std::env::temp_dir().join(format!("witness_{m}_{n}.json"));
    std::fs::write(&path, w.document().to_json())?;

    let doc = WitnessDocument::from_json(&std::fs::read_to_string(&path)?)?;
    let h = doc.hypergraph()?;
    let report = verify_witness(&h, doc.m, doc.n, doc.z);
    println!("{} re-read and verified: {}", path.display(), report.passed());
    Ok(())
}
