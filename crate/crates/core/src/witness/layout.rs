//! Partial linear hypergraphs of pairs and quads, built up before the
//! remaining pairs are filled with triangles.
//!
//! The defect of such a hypergraph is triangle-decomposable only if every
//! vertex ends up with even defect degree, so layouts are assembled from
//! pieces whose effect on each vertex's parity is known:
//!
//! * a *quad cycle* of length `k ≥ 5`: quads `{2i, 2i+1, 2i+3, 2i+4}`
//!   (mod `2k`) on `2k` vertices, putting every vertex in exactly two quads;
//! * a *spider*: a centre in three quads that are otherwise disjoint, so all
//!   ten vertices are in an odd number of quads;
//! * plain disjoint quads.

use rand::seq::SliceRandom;
use rand_chacha::ChaCha8Rng;

use crate::hypercore::{Graph, Hypergraph};

const CYCLE_ATTEMPTS: usize = 400;

pub(crate) struct Layout {
    m: usize,
    covered: Graph,
    load: Vec<usize>,
    edges: Vec<Vec<usize>>,
}

/// The `k` quads of a cycle over positions `0..2k`.
pub(crate) fn quad_cycle(k: usize) -> Vec<[usize; 4]> {
    let p = 2 * k;
    (0..k)
        .map(|i| [2 * i % p, (2 * i + 1) % p, (2 * i + 3) % p, (2 * i + 4) % p])
        .collect()
}

/// Splits `total ≥ 5` into cycle lengths, each at least 5 and at most about 10.
pub(crate) fn cycle_lengths(mut total: usize) -> Vec<usize> {
    debug_assert!(total >= 5);
    let mut out = Vec::new();
    while total >= 20 {
        out.push(10);
        total -= 10;
    }
    if total > 10 {
        out.push(total / 2);
        out.push(total - total / 2);
    } else {
        out.push(total);
    }
    out
}

impl Layout {
    pub(crate) fn new(m: usize) -> Self {
        Layout { m, covered: Graph::new(m), load: vec![0; m], edges: Vec::new() }
    }

    pub(crate) fn m(&self) -> usize {
        self.m
    }

    pub(crate) fn fits(&self, edge: &[usize]) -> bool {
        edge.iter().enumerate().all(|(i, &a)| edge[i + 1..].iter().all(|&b| a != b && !self.covered.has_edge(a, b)))
    }

    /// Adds an edge; panics if it would break linearity.
    pub(crate) fn add(&mut self, edge: &[usize]) {
        assert!(self.fits(edge), "edge {edge:?} overlaps the layout");
        for (i, &a) in edge.iter().enumerate() {
            for &b in &edge[i + 1..] {
                self.covered.add_edge(a, b);
            }
            if edge.len() == 4 {
                self.load[a] += 1;
            }
        }
        self.edges.push(edge.to_vec());
    }

    pub(crate) fn quad_count(&self) -> usize {
        self.edges.iter().filter(|e| e.len() == 4).count()
    }

    /// A spider with centre `c` and legs `legs[0..9]`.
    pub(crate) fn add_spider(&mut self, c: usize, legs: &[usize]) {
        for leg in legs.chunks(3) {
            self.add(&[c, leg[0], leg[1], leg[2]]);
        }
    }

    /// Embeds one quad cycle of length `k` anywhere it fits, preferring
    /// vertices that are in few quads so far.
    fn embed_cycle(&mut self, k: usize, rng: &mut ChaCha8Rng) -> bool {
        let quads = quad_cycle(k);
        let p = 2 * k;
        let mut member: Vec<Vec<usize>> = vec![Vec::new(); p];
        for (qi, q) in quads.iter().enumerate() {
            for &x in q {
                member[x].push(qi);
            }
        }
        let mut order: Vec<usize> = (0..self.m).collect();
        'attempt: for _ in 0..CYCLE_ATTEMPTS {
            let mut img = vec![usize::MAX; p];
            let mut used = vec![false; self.m];
            for pos in 0..p {
                order.shuffle(rng);
                let mut best: Option<usize> = None;
                let mut seen = 0;
                for &v in &order {
                    if used[v] {
                        continue;
                    }
                    let ok = member[pos].iter().all(|&qi| {
                        quads[qi].iter().all(|&x| img[x] == usize::MAX || !self.covered.has_edge(v, img[x]))
                    });
                    if !ok {
                        continue;
                    }
                    if best.map_or(true, |b| self.load[v] < self.load[b]) {
                        best = Some(v);
                    }
                    seen += 1;
                    if seen >= 6 {
                        break;
                    }
                }
                match best {
                    Some(v) => {
                        img[pos] = v;
                        used[v] = true;
                    }
                    None => continue 'attempt,
                }
            }
            for q in &quads {
                self.add(&q.map(|x| img[x]));
            }
            return true;
        }
        false
    }

    /// Adds `total` quads as quad cycles (`total` must be 0 or at least 5).
    pub(crate) fn add_cycles(&mut self, total: usize, rng: &mut ChaCha8Rng) -> bool {
        if total == 0 {
            return true;
        }
        if total < 5 {
            return false;
        }
        cycle_lengths(total).into_iter().all(|k| 2 * k <= self.m && self.embed_cycle(k, rng))
    }

    pub(crate) fn into_hypergraph(self) -> Hypergraph {
        Hypergraph::from_edges(self.m, self.edges).expect("layout edges are valid")
    }
}

/// Spiders first, then disjoint quads, on the vertices `start..`, covering
/// exactly `count` vertices; `count = 10·spiders + 4·quads`.
pub(crate) fn add_odd_cover(layout: &mut Layout, start: usize, spiders: usize) {
    let end = layout.m();
    let mut v = start;
    for _ in 0..spiders {
        let legs: Vec<usize> = (v + 1..v + 10).collect();
        layout.add_spider(v, &legs);
        v += 10;
    }
    assert_eq!((end - v) % 4, 0, "odd cover does not tile the vertex set");
    while v < end {
        layout.add(&[v, v + 1, v + 2, v + 3]);
        v += 4;
    }
}
