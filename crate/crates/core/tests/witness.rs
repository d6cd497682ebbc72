use zforge::bounds::{self, c2};
use zforge::hypercore::WitnessDocument;
use zforge::oracle::exact_z;
use zforge::witness::{self, construct, Witness};

fn built(m: usize, n: usize) -> Witness {
    let w = construct(m, n, 0).unwrap_or_else(|e| panic!("({m}, {n}): {e}"));
    assert!(w.verify().passed(), "({m}, {n})");
    assert_eq!((w.m, w.n), (m, n));
    assert_eq!(Some(w.z as u64), bounds::z_value(m as u64, n as u64, true).z, "({m}, {n})");
    w
}

fn profile(w: &Witness) -> Vec<(usize, usize)> {
    w.hypergraph.size_profile().iter().collect()
}

#[test]
fn above_examples() {
    assert_eq!(built(8, 11).z, 30);
    assert_eq!(profile(&built(8, 11)), [(2, 3), (3, 8)]);
    assert_eq!(built(11, 19).z, 55);
    let w = built(9, 36);
    assert_eq!((w.z, profile(&w)), (72, vec![(2, 36)]));
    let w = built(7, 7);
    assert_eq!((w.z, profile(&w)), (21, vec![(3, 7)]));
    let w = built(9, 14);
    assert_eq!((w.z, profile(&w)), (39, vec![(2, 3), (3, 11)]));
    assert_eq!(built(8, 12).z, 32);
    built(10, 17);
}

#[test]
fn twelve_twenty_four_uses_quads() {
    // n = 24 is in the even window, so the value is ⌊U⁰⌋ = 68, not ⌊U⁺⌋ = 69
    let r = bounds::upper_bounds(12, 24);
    assert_eq!((r.floor_plus, r.floor_zero), (69, 68));
    let w = built(12, 24);
    assert_eq!((w.z, w.construction), (68, "L3.6"));
}

#[test]
fn five_four_is_optimal() {
    let w = built(5, 4);
    assert_eq!((w.z, profile(&w)), (10, vec![(2, 2), (3, 2)]));
    assert_eq!(exact_z(5, 4, 1_000_000).unwrap().optimum, 10);
}

#[test]
fn small_witnesses_match_the_oracle() {
    for m in 4..=7usize {
        for n in bounds::above_lo(m as u64) as usize..=m * (m - 1) / 2 {
            let w = built(m, n);
            assert_eq!(w.z as u64, exact_z(m, n, 10_000_000).unwrap().optimum, "({m}, {n})");
        }
    }
}

#[test]
fn boundary_gadget_examples() {
    // m = 18 and 20 are too small for the below-threshold range, so the
    // builder is called directly and checked against ⌊U⁰⌋
    for (m, n, quads) in [(18usize, 47usize, 4usize), (20, 59, 5)] {
        let w = witness::u0_boundary(m, 0).unwrap();
        assert!(w.verify().passed());
        assert_eq!(w.n, n);
        assert_eq!(w.z as u64, bounds::upper_bounds(m as u64, n as u64).floor_zero);
        assert_eq!(w.hypergraph.size_profile().count(4), quads);
        assert_eq!(w.hypergraph.size_profile().count(2), 1);
    }
    assert!(witness::u0_boundary(12, 0).is_err());
    let w = built(102, bounds::third_minus_quarter_ceil(102) as usize);
    assert_eq!(w.construction, "L4.2");
}

#[test]
fn below_examples() {
    let w = built(97, 1547);
    assert_eq!((w.z, w.construction), (4646, "L4.4"));
    let w = built(99, c2(99) as usize / 3 - 2);
    assert_eq!((w.z, w.construction), (4846, "L4.5"));
    let w = built(101, 1678);
    assert_eq!((w.z, w.construction), (5039, "L4.8"));
    let w = built(98, 1559);
    assert_eq!((w.z, w.construction), (4702, "L4.9"));
}

#[test]
fn below_profiles() {
    let third = |m: usize| m * (m - 1) / 6;
    for m in [97usize, 99, 103] {
        let w = built(m, third(m) - 1);
        assert_eq!(profile(&w), [(3, third(m) - 1)], "m = {m}");
        let w = built(m, third(m) - 4);
        assert_eq!(profile(&w), [(3, third(m) - 7), (4, 3)], "m = {m}");
    }
    for m in [101usize, 107] {
        let c = m * (m - 1) / 2;
        // C ≡ 1 (mod 3) here, so C/3 − 4/3 and C/3 − 10/3 are integers
        let w = built(m, c / 3);
        assert_eq!(profile(&w), [(2, 1), (3, (c - 4) / 3)]);
        assert_eq!(w.z as u64, bounds::upper_bounds(m as u64, (c / 3) as u64).floor_minus - 1);
        let w = built(m, c / 3 - 2);
        assert_eq!(profile(&w), [(3, (c - 10) / 3), (5, 1)]);
    }
    for r in 0..4usize {
        let m = 98usize;
        let top = bounds::third_minus_quarter_floor(m as u64) as usize;
        let w = built(m, top - r);
        let c = m * (m - 1) / 2;
        // {2: 1, 3: C/3 − m/2 − 10/3 − 2r, 4: m/4 + 3/2 + r}
        let triples = (c - 3 * (m / 2) - 10) / 3 - 2 * r;
        assert_eq!(profile(&w), [(2, 1), (3, triples), (4, (m + 6) / 4 + r)], "r = {r}");
    }
}

#[test]
fn documents_round_trip() {
    for (m, n) in [(8, 11), (14, 40), (97, 1547)] {
        let w = built(m, n);
        let doc = w.document();
        let text = doc.to_json();
        let back = WitnessDocument::from_json(&text).unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.hypergraph().unwrap(), w.hypergraph);
        assert_eq!((back.construction.as_str(), back.seed), (w.construction, Some(0)));
    }
}

#[test]
fn seeds_are_reproducible() {
    for (m, n) in [(20, 70), (98, 1500), (101, 1600)] {
        assert_eq!(construct(m, n, 3).unwrap(), construct(m, n, 3).unwrap());
    }
}
