use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bounds::{self, c2};
use crate::gdd::{self, to_linear_space};
use crate::hypercore::Hypergraph;

use super::above::max_packing;
use super::layout::{add_odd_cover, Layout};
use super::{complete, keep_pairs, precondition, Witness, WitnessError};

fn layout_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ 0x5eed_1a70)
}

/// The pair/quad hypergraph completed for `n = ⌈C(m,2)/3 − m/4⌉`,
/// `m ≡ 6, 8, 10 (mod 12)`.
///
/// With `v0 = 0, v1 = 1, w1..w4 = 2..5, y1..y8 = 6..13` for `m ≡ 6, 10`:
/// pairs `v0w1, v1w2, w3w4`, quads `v0v1y1y2, v0y3y4y5, v1y6y7y8`. For
/// `m ≡ 8`, with `v0 = 0, w1 = 1, y1..y6 = 2..7`: pair `v0w1`, quads
/// `v0y1y2y3, v0y4y5y6`. All other vertices are covered by disjoint quads.
pub fn u0_boundary_gadget(m: usize) -> Result<Hypergraph, WitnessError> {
    let name = "u0_boundary";
    let (mut edges, start): (Vec<Vec<usize>>, usize) = match m % 12 {
        6 | 10 if m >= 18 => (
            vec![
                vec![0, 2],
                vec![1, 3],
                vec![4, 5],
                vec![0, 1, 6, 7],
                vec![0, 8, 9, 10],
                vec![1, 11, 12, 13],
            ],
            14,
        ),
        8 if m >= 8 => (vec![vec![0, 1], vec![0, 2, 3, 4], vec![0, 5, 6, 7]], 8),
        _ => return Err(precondition(name, format!("m = {m} is not 6, 8 or 10 mod 12 (and at least 8)"))),
    };
    edges.extend((start..m).step_by(4).map(|v| (v..v + 4).collect()));
    Ok(Hypergraph::from_edges(m, edges).expect("gadget is linear"))
}

/// `n = ⌈C(m,2)/3 − m/4⌉` for `m ≡ 6, 8, 10 (mod 12)`, reaching `⌊U⁰⌋`.
pub fn u0_boundary(m: usize, seed: u64) -> Result<Witness, WitnessError> {
    let h = complete(&u0_boundary_gadget(m)?, seed)?;
    Ok(Witness::new(keep_pairs(h, 1), "L4.2", Some(seed)))
}

/// A linear {3,4}-space with `n4` quads, as the witness for
/// `n = C(m,2)/3 − n4` with `z = 3n + n4`.
///
/// For odd `m` every vertex must lie in an even number of quads, so the
/// quads come as quad cycles. For even `m` every vertex needs an odd number:
/// a cover by disjoint quads and spiders, plus cycles for anything beyond
/// four extra quads.
pub fn space_34(m: usize, n4: usize, seed: u64) -> Result<Witness, WitnessError> {
    let name = "space_34";
    let c = c2(m as u64) as usize;
    if m % 3 == 2 {
        return Err(precondition(name, format!("m = {m} is 2 mod 3")));
    }
    if 6 * n4 > c.saturating_sub(m) {
        return Err(precondition(name, format!("n4 = {n4} exceeds (C(m,2) - m)/6")));
    }
    let min = if m % 2 == 1 { 5 } else { m.div_ceil(4) };
    if n4 < min {
        return Err(precondition(name, format!("n4 = {n4} below {min}")));
    }
    let mut rng = layout_rng(seed);
    let mut layout = Layout::new(m);
    let extra = if m % 2 == 1 {
        n4
    } else {
        let s_min = (m / 2) % 2;
        let e = n4 - min;
        let (spiders, cycles) = if e <= 4 { (s_min + 2 * e, 0) } else { (s_min, e) };
        if 10 * spiders > m {
            return Err(precondition(name, format!("m = {m} too small for {spiders} spiders")));
        }
        add_odd_cover(&mut layout, 0, spiders);
        cycles
    };
    if !layout.add_cycles(extra, &mut rng) {
        return Err(WitnessError::Layout { builder: name });
    }
    let h = complete(&layout.into_hypergraph(), seed)?;
    Ok(Witness::new(h, "L4.4", Some(seed)))
}

/// The pair/quad gadget for `n = C(m,2)/3 − r`, `r ∈ {2, 3, 4}`, on
/// vertices `a..i = 0..8`: quads `abcd, aefg` with pairs `be, cf, dg`, or for
/// `r = 4` quads `abcd, aefg, behi` with pairs `cf, dh, gi`.
pub fn odd_near_gadget(m: usize, r: usize) -> Result<Hypergraph, WitnessError> {
    let name = "odd_near_r";
    if !matches!(m % 6, 1 | 3) {
        return Err(precondition(name, format!("m = {m} is not 1 or 3 mod 6")));
    }
    let edges: Vec<Vec<usize>> = match r {
        2 | 3 if m >= 7 => vec![
            vec![0, 1, 2, 3],
            vec![0, 4, 5, 6],
            vec![1, 4],
            vec![2, 5],
            vec![3, 6],
        ],
        4 if m >= 9 => vec![
            vec![0, 1, 2, 3],
            vec![0, 4, 5, 6],
            vec![1, 4, 7, 8],
            vec![2, 5],
            vec![3, 7],
            vec![6, 8],
        ],
        _ => return Err(precondition(name, format!("no gadget for r = {r} at m = {m}"))),
    };
    Ok(Hypergraph::from_edges(m, edges).expect("gadget is linear"))
}

/// `m ≡ 1, 3 (mod 6)`, `n = C(m,2)/3 − r` for `r ∈ {1, 2, 3, 4}`, with
/// `z = C(m,2) − 2r − 1`.
pub fn odd_near_r(m: usize, r: usize, seed: u64) -> Result<Witness, WitnessError> {
    let name = "odd_near_r";
    if !matches!(m % 6, 1 | 3) || !(1..=4).contains(&r) {
        return Err(precondition(name, format!("(m, r) = ({m}, {r}) unsupported")));
    }
    if r == 1 {
        let mut h = max_packing(m, seed)?;
        let last = h.edge_count() - 1;
        h.remove_edge(last);
        return Ok(Witness::new(h, "L4.5", Some(seed)));
    }
    let h = complete(&odd_near_gadget(m, r)?, seed)?;
    let keep = if r == 2 { 1 } else { 0 };
    Ok(Witness::new(keep_pairs(h, keep), "L4.5", Some(seed)))
}

/// `k` quads and one pair on `2k + 1` vertices (vertex `2k` is the extra
/// point), every vertex in exactly two edges; padded with isolated vertices
/// up to `m`.
pub fn make4(k: usize, m: usize) -> Result<Hypergraph, WitnessError> {
    if k < 5 || m < 2 * k + 1 {
        return Err(precondition("make4", format!("need k >= 5 and m >= 2k + 1, got k = {k}, m = {m}")));
    }
    Ok(Hypergraph::from_edges(m, make4_edges(k)).expect("make4 is linear"))
}

fn make4_edges(k: usize) -> Vec<Vec<usize>> {
    let p = 2 * k;
    let s = p;
    let mut edges: Vec<Vec<usize>> = (0..k - 1)
        .map(|i| vec![2 * i, 2 * i + 1, 2 * i + 3, (2 * i + 4) % p])
        .collect();
    edges.push(vec![p - 2, p - 1, 1, s]);
    edges.push(vec![2, s]);
    edges
}

/// One pair and `q` quads on odd `m`, with the pair's ends in an odd number
/// of quads and every other vertex in an even number: [`make4`] on as many
/// quads as fit, then quad cycles.
fn pair_layout_odd(m: usize, q: usize, seed: u64, name: &'static str) -> Result<Hypergraph, WitnessError> {
    let kmax = (m - 1) / 2;
    let mut k = q.min(kmax);
    if (1..5).contains(&(q - k)) {
        k = q.saturating_sub(5);
    }
    if k < 5 {
        return Err(precondition(name, format!("cannot lay out {q} quads on {m} vertices")));
    }
    let mut layout = Layout::new(m);
    for e in make4_edges(k) {
        layout.add(&e);
    }
    if !layout.add_cycles(q - k, &mut layout_rng(seed)) {
        return Err(WitnessError::Layout { builder: name });
    }
    Ok(layout.into_hypergraph())
}

/// One pair `{0, 1}` and `q` quads on even `m`, with the pair's ends in an
/// even number of quads and every other vertex in an odd number: spiders
/// and disjoint quads on `2..m`, then quad cycles if the spiders do not fit.
fn pair_layout_even(m: usize, q: usize, seed: u64, name: &'static str) -> Result<Hypergraph, WitnessError> {
    // q = (m - 2 + 2b)/4 + extra
    let b_target = (4 * q + 2).checked_sub(m).filter(|t| t % 2 == 0).map(|t| t / 2);
    let Some(b_target) = b_target else {
        return Err(precondition(name, format!("{q} quads cannot cover {m} vertices with the right parity")));
    };
    let cap = (m - 2) / 10;
    let bmax = if cap % 2 == b_target % 2 { cap } else { cap.saturating_sub(1) };
    let (mut b, mut extra) = if b_target <= bmax { (b_target, 0) } else { (bmax, (b_target - bmax) / 2) };
    if (1..5).contains(&extra) {
        let shift = 5 - extra;
        if b < 2 * shift {
            return Err(precondition(name, format!("m = {m} too small for {q} quads")));
        }
        b -= 2 * shift;
        extra = 5;
    }
    let mut layout = Layout::new(m);
    layout.add(&[0, 1]);
    add_odd_cover(&mut layout, 2, b);
    if !layout.add_cycles(extra, &mut layout_rng(seed)) {
        return Err(WitnessError::Layout { builder: name });
    }
    debug_assert_eq!(layout.quad_count(), q);
    Ok(layout.into_hypergraph())
}

/// `m ≡ 5 (mod 6)`, `n = ⌊C(m,2)/3⌋ − r` for `r ∈ 0..=27`.
pub fn five_mod6_near(m: usize, r: usize, seed: u64) -> Result<Witness, WitnessError> {
    let name = "five_mod6_near";
    if m % 6 != 5 || r > 27 {
        return Err(precondition(name, format!("(m, r) = ({m}, {r}) unsupported")));
    }
    let h = match r {
        0 | 1 => keep_pairs(max_packing(m, seed)?, 1 - r),
        2 => {
            if m < 11 {
                return Err(precondition(name, format!("m = {m} too small for a 5-point hole")));
            }
            to_linear_space(&gdd::construct_one_irregular(5, 1, m - 5, seed)?, true)
        }
        3 => {
            let h = five_mod6_near(m, 4, seed)?.hypergraph;
            let idx = h.edges().iter().position(|e| e.len() == 3).expect("has triples");
            let mut h = h;
            let t = h.remove_edge(idx);
            h.push_edge(vec![t[0], t[1]]).expect("inside a removed triple");
            h.push_edge(vec![t[0], t[2]]).expect("inside a removed triple");
            h
        }
        _ => complete(&pair_layout_odd(m, r + 1, seed, name)?, seed)?,
    };
    Ok(Witness::new(h, "L4.8", Some(seed)))
}

/// The pair/spider/quad hypergraph for `m ≡ 2 (mod 6)` and offset `r`:
/// one pair, `b` spiders and disjoint quads, where `b = 2r + 4` for
/// `m ≡ 2 (mod 12)` and `b = 2r + 3` for `m ≡ 8 (mod 12)`. When `10b + 2`
/// exceeds `m`, pairs of spiders are traded for quads in quad cycles.
pub fn two_mod6_gadget(m: usize, r: usize, seed: u64) -> Result<Hypergraph, WitnessError> {
    let name = "two_mod6_near";
    if m % 6 != 2 || m < 8 || r > 27 {
        return Err(precondition(name, format!("(m, r) = ({m}, {r}) unsupported")));
    }
    let b = if m % 12 == 2 { 2 * r + 4 } else { 2 * r + 3 };
    pair_layout_even(m, (2 * b + m - 2) / 4, seed, name)
}

/// `m ≡ 2 (mod 6)`, `n = ⌊C(m,2)/3 − m/4⌋ − r` for `r ∈ 0..=27`.
pub fn two_mod6_near(m: usize, r: usize, seed: u64) -> Result<Witness, WitnessError> {
    let h = complete(&two_mod6_gadget(m, r, seed)?, seed)?;
    Ok(Witness::new(h, "L4.9", Some(seed)))
}

/// `m ≡ 2 (mod 3)`: one pair, `q = (C(m,2) + 2)/3 − n` quads and triples,
/// reaching `⌊U⁻⌋ = (C(m,2) − 1)/3 + 2n`.
pub fn pair_quad_space(m: usize, n: usize, seed: u64) -> Result<Witness, WitnessError> {
    let name = "pair_quad_space";
    let c = c2(m as u64) as usize;
    if m % 3 != 2 || 3 * n > c + 2 || n == 0 {
        return Err(precondition(name, format!("(m, n) = ({m}, {n}) unsupported")));
    }
    let q = (c + 2) / 3 - n;
    let layout = if m % 2 == 1 {
        pair_layout_odd(m, q, seed, name)?
    } else {
        pair_layout_even(m, q, seed, name)?
    };
    let h = complete(&layout, seed)?;
    debug_assert_eq!(h.total_degree() as u64, bounds::upper_bounds(m as u64, n as u64).floor_minus);
    Ok(Witness::new(h, "L4.6", Some(seed)))
}
