use crate::bounds::{self, c2};
use crate::gdd::{self, to_linear_space};
use crate::hypercore::{example_2_1, Hypergraph};

use super::{complete, keep_pairs, pair_count, precondition, Memo, Witness, WitnessError};

/// The prescribed leave of a maximum packing of order `m`: empty, a
/// 4-cycle, a perfect matching, or a claw plus a matching.
fn packing_leave(m: usize) -> Vec<Vec<usize>> {
    match m % 6 {
        1 | 3 => Vec::new(),
        5 => vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]],
        0 | 2 => (0..m / 2).map(|i| vec![2 * i, 2 * i + 1]).collect(),
        _ => {
            let mut l = vec![vec![0, 1], vec![0, 2], vec![0, 3]];
            l.extend((2..m / 2).map(|i| vec![2 * i, 2 * i + 1]));
            l
        }
    }
}

static PACKINGS: Memo<(usize, u64), Hypergraph> = Memo::new();

/// A linear {2,3}-space on `m` vertices with the maximum number of triples;
/// its pairs are the leave.
pub fn max_packing(m: usize, seed: u64) -> Result<Hypergraph, WitnessError> {
    PACKINGS.get_or_try((m, seed), || {
        let leave = Hypergraph::from_edges(m, packing_leave(m)).expect("leave is a valid graph");
        let h = complete(&leave, seed)?;
        debug_assert_eq!(
            h.size_profile().count(3) as u64,
            bounds::max_packing_triples(m as u64)
        );
        Ok(h.canonical())
    })
}

/// Whether `(m, n)` lies where pairs and triples alone reach `⌊U⁺⌋`.
pub fn pack_23_applies(m: usize, n: usize) -> bool {
    let c = c2(m as u64) as usize;
    if m == 0 || n == 0 || n > c {
        return false;
    }
    match m % 6 {
        1 | 3 => 3 * n >= c,
        5 => 3 * n >= c + 2 + 3,
        _ => 3 * n >= c + m,
    }
}

/// Pairs and triples with `⌊(C(m,2) − n)/2⌋` triples: the first triples of a
/// maximum packing, then the lexicographically first pairs they leave free.
pub fn pack_23(m: usize, n: usize, seed: u64) -> Result<Witness, WitnessError> {
    if !pack_23_applies(m, n) {
        return Err(precondition("pack_23", format!("n = {n} too small or too large for m = {m}")));
    }
    let c = c2(m as u64) as usize;
    let n3 = (c - n) / 2;
    let n2 = n - n3;
    let packing = max_packing(m, seed)?;
    let triples: Vec<Vec<usize>> = packing.edges().iter().filter(|e| e.len() == 3).take(n3).cloned().collect();
    assert_eq!(triples.len(), n3, "maximum packing too small");
    let mut used = vec![false; m * m];
    for t in &triples {
        for (a, b) in [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])] {
            used[a * m + b] = true;
        }
    }
    let pairs = (0..m)
        .flat_map(|a| (a + 1..m).map(move |b| (a, b)))
        .filter(|&(a, b)| !used[a * m + b])
        .take(n2)
        .map(|(a, b)| vec![a, b]);
    let mut edges = triples;
    edges.extend(pairs);
    assert_eq!(edges.len(), n);
    let h = Hypergraph::from_edges(m, edges).expect("valid edges");
    Ok(Witness::new(h, "L3.3", Some(seed)))
}

/// `m ≡ 5 (mod 6)`, `n = ⌈C(m,2)/3⌉`: a maximum packing keeping two of its
/// four leave pairs, total degree `C(m,2)`.
pub fn exception_above_5mod6(m: usize, seed: u64) -> Result<Witness, WitnessError> {
    if m % 6 != 5 {
        return Err(precondition("exception_above_5mod6", format!("m = {m} is not 5 mod 6")));
    }
    let h = keep_pairs(max_packing(m, seed)?, 2);
    Ok(Witness::new(h, "L3.4", Some(seed)))
}

static SPACES_234: Memo<(usize, usize, u64), Hypergraph> = Memo::new();

/// A linear {2,3,4}-space on even `m` with `n4` quads and
/// `⌊m(m−2)/6 − 4n4/3⌋` triples.
pub fn space_234_even(m: usize, n4: usize, seed: u64) -> Result<Hypergraph, WitnessError> {
    let name = "space_234_even";
    if m < 2 || m % 2 != 0 {
        return Err(precondition(name, format!("m = {m} must be even and at least 2")));
    }
    if n4 > m / 4 || (n4 == m / 4 && matches!(m % 12, 6 | 8 | 10)) {
        return Err(precondition(name, format!("n4 = {n4} not allowed for m = {m}")));
    }
    SPACES_234.get_or_try((m, n4, seed), || {
        let h = if m % 12 == 8 && n4 == m / 4 - 1 {
            // 8^1 4^(m/4-2), with the 8-group replaced by the 8-point space
            // with one quad and four pairs
            let w = m / 4 - 2;
            let host = if w == 0 {
                gdd::construct_uniform(8, 1, seed)?
            } else {
                gdd::construct_one_irregular(8, 4, w, seed)?
            };
            let slots = host.groups[0].clone();
            let mut edges: Vec<Vec<usize>> = host.triples.iter().map(|t| t.to_vec()).collect();
            edges.extend(host.groups[1..].iter().cloned());
            edges.extend(example_2_1().edges().iter().map(|e| e.iter().map(|&v| slots[v]).collect()));
            Hypergraph::from_edges(m, edges).expect("valid edges")
        } else {
            let want = if m % 6 == 4 { 1 } else { 0 };
            let a = (n4..).find(|a| a % 3 == want).expect("some residue class member");
            debug_assert!(a <= m / 4);
            let design = gdd::construct_4u2v(a, m / 2 - 2 * a, seed)?;
            let mut h = to_linear_space(&design, false);
            // split the last a - n4 quads into a triple plus three pairs
            for _ in 0..a - n4 {
                let idx = h.edges().iter().rposition(|e| e.len() == 4).expect("enough quads");
                let q = h.remove_edge(idx);
                for e in [vec![q[0], q[1], q[2]], vec![q[0], q[3]], vec![q[1], q[3]], vec![q[2], q[3]]] {
                    h.push_edge(e).expect("split quad stays linear");
                }
            }
            h
        };
        let h = h.canonical();
        let profile = h.size_profile();
        debug_assert_eq!(profile.count(4), n4);
        debug_assert_eq!(profile.count(3) as i64, (m as i64 * (m as i64 - 2) - 8 * n4 as i64).div_euclid(6));
        Ok(h)
    })
}

/// Whether `(m, n)` is in the window where [`even_u0`] reaches `⌊U⁰⌋`.
pub fn even_u0_applies(m: usize, n: usize) -> bool {
    if m < 2 || m % 2 != 0 || n == 0 {
        return false;
    }
    let lo = bounds::third_minus_quarter_floor(m as u64) + 1;
    let hi = bounds::above_u0_hi(m as u64) as i64;
    let n = n as i64;
    let boundary = bounds::third_minus_quarter_ceil(m as u64);
    lo <= n && n <= hi && !(matches!(m % 12, 6 | 8 | 10) && n == boundary)
}

/// Pairs, triples and quads reaching `⌊U⁰⌋` for even `m`.
pub fn even_u0(m: usize, n: usize, seed: u64) -> Result<Witness, WitnessError> {
    if !even_u0_applies(m, n) {
        return Err(precondition("even_u0", format!("(m, n) = ({m}, {n}) outside the window")));
    }
    let (mi, ni) = (m as i64, n as i64);
    let star = (mi * (mi + 1) - 6 * ni).div_euclid(14);
    let special = (mi * (mi - 2) / 2 - 4 * star).rem_euclid(3) == 2
        && matches!((mi * (mi + 1) / 2 - 3 * ni).rem_euclid(7), 4..=6);
    let n4 = star + i64::from(special);
    let n3 = (mi * (mi - 2) - 8 * n4).div_euclid(6);
    let n2 = ni - n3 - n4;
    let space = space_234_even(m, n4 as usize, seed)?;
    assert!(n2 >= 0 && n2 as usize <= pair_count(&space), "pair budget off for ({m}, {n})");
    let h = keep_pairs(space, n2 as usize);
    Ok(Witness::new(h, "L3.6", Some(seed)))
}
