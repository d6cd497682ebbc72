//! Exhaustive search on small instances, independent of the formulas in
//! [`crate::bounds`] and of the constructions.
//!
//! [`exact_z`] enumerates linear hypergraphs edge by edge in non-increasing
//! size, lexicographically increasing within a size. Vertices not yet
//! touched are interchangeable, so a new edge may only use the lowest
//! untouched ones. Once the remaining edges have size at most 2 the best
//! completion is immediate: free pairs first, then singletons, which may
//! repeat. Branches are cut with a knapsack bound on what the remaining
//! edges can add given the number of uncovered pairs.

use std::collections::HashSet;

use thiserror::Error;

use crate::bounds::{c2, upper_bounds};
use crate::gdd::{Gdd, GddType};
use crate::hypercore::Hypergraph;

/// Largest `m` accepted by [`exact_z`].
pub const DEFAULT_MAX_M: usize = 8;

/// Largest vertex count accepted by [`gdd_exists_bruteforce`].
pub const MAX_GDD_VERTICES: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("m = {m} exceeds the oracle ceiling {ceiling}")]
    TooLarge { m: usize, ceiling: usize },
    #[error("n = {n} outside 1..={max}")]
    OutOfRange { n: usize, max: usize },
    #[error("search budget of {budget} nodes exhausted; best found {}", .best.as_ref().map_or("none".to_string(), |b| b.optimum.to_string()))]
    BudgetExhausted { budget: u64, best: Option<Box<SearchStats>> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes_expanded: u64,
    pub prunes_by_bound: u64,
    /// Candidate edges examined.
    pub elapsed_steps: u64,
    pub optimum: u64,
    pub optimal_witness: Hypergraph,
}

/// The exact maximum total degree of a linear hypergraph with `m ≤ 8`
/// vertices and exactly `n` edges, `1 ≤ n ≤ C(m,2) + m` (size-1 edges make
/// the upper part of that range reachable).
pub fn exact_z(m: usize, n: usize, budget: u64) -> Result<SearchStats, OracleError> {
    exact_z_with_ceiling(m, n, budget, DEFAULT_MAX_M)
}

/// [`exact_z`] with a different ceiling on `m` (at most 11).
pub fn exact_z_with_ceiling(m: usize, n: usize, budget: u64, ceiling: usize) -> Result<SearchStats, OracleError> {
    if m > ceiling.min(11) || m == 0 {
        return Err(OracleError::TooLarge { m, ceiling });
    }
    let c = c2(m as u64) as usize;
    if n == 0 || n > c + m {
        return Err(OracleError::OutOfRange { n, max: c + m });
    }
    let mut s = ZSearch::new(m, n, budget);
    let finished = s.dfs(m, None);
    let stats = s.best.as_ref().map(|(z, edges)| SearchStats {
        nodes_expanded: s.nodes,
        prunes_by_bound: s.prunes,
        elapsed_steps: s.steps,
        optimum: *z as u64,
        optimal_witness: Hypergraph::from_edges(m, edges.clone()).expect("search keeps edges linear"),
    });
    if !finished {
        return Err(OracleError::BudgetExhausted { budget, best: stats.map(Box::new) });
    }
    let stats = stats.expect("n <= C(m,2) + m is always realizable");
    debug_assert!(stats.optimum <= upper_bounds(m as u64, n as u64).roman_min);
    Ok(stats)
}

struct ZSearch {
    m: usize,
    n: usize,
    budget: u64,
    /// `cover[v]`: vertices sharing an edge with `v`.
    cover: Vec<u16>,
    free_pairs: usize,
    touched: usize,
    degree: usize,
    edges: Vec<Vec<usize>>,
    /// `rest[s][k][p]`: most degree `k` edges of size at most `s` can add
    /// using at most `p` pairs.
    rest: Vec<Vec<Vec<usize>>>,
    best: Option<(usize, Vec<Vec<usize>>)>,
    nodes: u64,
    prunes: u64,
    steps: u64,
}

impl ZSearch {
    fn new(m: usize, n: usize, budget: u64) -> Self {
        let c = m * (m - 1) / 2;
        let mut rest = vec![vec![vec![0usize; c + 1]; n + 1]; m + 1];
        for s in 1..=m {
            for k in 1..=n {
                for p in 0..=c {
                    let mut b = 0;
                    for t in 1..=s {
                        let cost = t * (t - 1) / 2;
                        if cost > p {
                            break;
                        }
                        b = b.max(t + rest[s][k - 1][p - cost]);
                    }
                    rest[s][k][p] = b;
                }
            }
        }
        ZSearch {
            m,
            n,
            budget,
            cover: vec![0; m],
            free_pairs: c,
            touched: 0,
            degree: 0,
            edges: Vec::new(),
            rest,
            best: None,
            nodes: 0,
            prunes: 0,
            steps: 0,
        }
    }

    fn best_value(&self) -> Option<usize> {
        self.best.as_ref().map(|b| b.0)
    }

    /// Records the completion by free pairs and then singletons, if it is
    /// feasible and improves on the best.
    fn close(&mut self) {
        let k = self.n - self.edges.len();
        let pairs = k.min(self.free_pairs);
        let singles = k - pairs;
        let value = self.degree + 2 * pairs + singles;
        if self.best_value().is_some_and(|b| b >= value) {
            return;
        }
        let mut edges = self.edges.clone();
        let mut added = 0;
        'outer: for a in 0..self.m {
            for b in a + 1..self.m {
                if added == pairs {
                    break 'outer;
                }
                if self.cover[a] >> b & 1 == 0 {
                    edges.push(vec![a, b]);
                    added += 1;
                }
            }
        }
        edges.extend((0..singles).map(|v| vec![v % self.m]));
        self.best = Some((value, edges));
    }

    /// Returns false if the budget ran out.
    fn dfs(&mut self, max_size: usize, last: Option<&[usize]>) -> bool {
        self.nodes += 1;
        if self.nodes > self.budget {
            return false;
        }
        let k = self.n - self.edges.len();
        if k == 0 {
            if self.best_value().map_or(true, |b| self.degree > b) {
                self.best = Some((self.degree, self.edges.clone()));
            }
            return true;
        }
        let bound = self.degree + self.rest[max_size][k][self.free_pairs];
        if self.best_value().is_some_and(|b| bound <= b) {
            self.prunes += 1;
            return true;
        }
        self.close();
        for s in (3..=max_size).rev() {
            let last_same = last.filter(|l| l.len() == s);
            for e in self.candidates(s) {
                self.steps += 1;
                if last_same.is_some_and(|l| e.as_slice() <= l) {
                    continue;
                }
                let saved = (self.touched, self.free_pairs);
                self.place(&e);
                let ok = self.dfs(s, Some(&e));
                self.unplace(&e, saved);
                if !ok {
                    return false;
                }
            }
        }
        true
    }

    /// Edges of size `s` made of pairwise uncovered touched vertices plus
    /// the lowest untouched ones, in lexicographic order.
    fn candidates(&self, s: usize) -> Vec<Vec<usize>> {
        let t = self.touched;
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(s);
        for fresh in 0..=s.min(self.m - t) {
            let old = s - fresh;
            self.subsets(0, old, &mut cur, &mut |sub| {
                let mut e = sub.to_vec();
                e.extend(t..t + fresh);
                out.push(e);
            });
        }
        out.sort();
        out
    }

    fn subsets(&self, from: usize, need: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if need == 0 {
            f(cur);
            return;
        }
        for v in from..self.touched {
            if self.touched - v < need {
                break;
            }
            if cur.iter().any(|&u| self.cover[u] >> v & 1 == 1) {
                continue;
            }
            cur.push(v);
            self.subsets(v + 1, need - 1, cur, f);
            cur.pop();
        }
    }

    fn place(&mut self, e: &[usize]) {
        for (i, &a) in e.iter().enumerate() {
            for &b in &e[i + 1..] {
                self.cover[a] |= 1 << b;
                self.cover[b] |= 1 << a;
            }
        }
        self.free_pairs -= e.len() * (e.len() - 1) / 2;
        self.touched = self.touched.max(e.iter().max().unwrap() + 1);
        self.degree += e.len();
        self.edges.push(e.to_vec());
    }

    fn unplace(&mut self, e: &[usize], saved: (usize, usize)) {
        for (i, &a) in e.iter().enumerate() {
            for &b in &e[i + 1..] {
                self.cover[a] &= !(1 << b);
                self.cover[b] &= !(1 << a);
            }
        }
        (self.touched, self.free_pairs) = saved;
        self.degree -= e.len();
        self.edges.pop();
    }
}

/// The largest number of pairwise edge-disjoint triples on `m ≤ 9` vertices.
pub fn max_triples(m: usize) -> usize {
    assert!(m <= 9, "max_triples is exhaustive only up to m = 9");
    if m < 3 {
        return 0;
    }
    let mut s = TripleSearch { m, cover: vec![0; m], touched: 0, count: 0, best: 0 };
    s.dfs(None);
    s.best
}

struct TripleSearch {
    m: usize,
    cover: Vec<u16>,
    touched: usize,
    count: usize,
    best: usize,
}

impl TripleSearch {
    fn bound(&self) -> usize {
        let full = (1u16 << self.m) - 1;
        let free: Vec<usize> = (0..self.m)
            .map(|v| (full & !self.cover[v] & !(1 << v)).count_ones() as usize)
            .collect();
        let pairs = free.iter().sum::<usize>() / 2;
        let by_vertex = free.iter().map(|f| f / 2).sum::<usize>() / 3;
        self.count + (pairs / 3).min(by_vertex)
    }

    fn dfs(&mut self, last: Option<[usize; 3]>) {
        self.best = self.best.max(self.count);
        if self.bound() <= self.best {
            return;
        }
        let t = self.touched;
        for a in 0..self.m.min(t + 1) {
            for b in a + 1..self.m.min(t + 2) {
                for c in b + 1..self.m.min(t + 3) {
                    let tri = [a, b, c];
                    // untouched vertices must be the lowest ones, in order
                    let fresh: Vec<usize> = tri.iter().copied().filter(|&v| v >= t).collect();
                    if fresh.iter().enumerate().any(|(i, &v)| v != t + i) {
                        continue;
                    }
                    if last.is_some_and(|l| tri <= l) {
                        continue;
                    }
                    if self.cover[a] >> b & 1 == 1 || self.cover[a] >> c & 1 == 1 || self.cover[b] >> c & 1 == 1 {
                        continue;
                    }
                    self.toggle(tri);
                    let saved = self.touched;
                    self.touched = self.touched.max(c + 1);
                    self.count += 1;
                    self.dfs(Some(tri));
                    self.count -= 1;
                    self.touched = saved;
                    self.toggle(tri);
                }
            }
        }
    }

    fn toggle(&mut self, [a, b, c]: [usize; 3]) {
        for (x, y) in [(a, b), (a, c), (b, c)] {
            self.cover[x] ^= 1 << y;
            self.cover[y] ^= 1 << x;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GddVerdict {
    Exists(Gdd),
    NotExists,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GddSearchError {
    #[error("type {ty} has {vertices} vertices, more than {MAX_GDD_VERTICES}")]
    TooLarge { ty: GddType, vertices: usize },
    #[error("search budget of {budget} nodes exhausted")]
    BudgetExhausted { budget: u64 },
}

/// Decides by exhaustive search whether a 3-GDD of type `ty` exists.
pub fn gdd_exists_bruteforce(ty: &GddType, budget: u64) -> Result<GddVerdict, GddSearchError> {
    let v = ty.vertex_count();
    if v > MAX_GDD_VERTICES {
        return Err(GddSearchError::TooLarge { ty: ty.clone(), vertices: v });
    }
    let mut groups = Vec::new();
    let mut group_of = vec![0; v];
    let mut next = 0;
    for size in ty.sizes() {
        for x in next..next + size {
            group_of[x] = groups.len();
        }
        groups.push((next..next + size).collect::<Vec<_>>());
        next += size;
    }
    let mut rem = vec![0u16; v];
    for a in 0..v {
        for b in 0..v {
            if group_of[a] != group_of[b] {
                rem[a] |= 1 << b;
            }
        }
    }
    // removing a triangle takes two pairs from each of its vertices and
    // three pairs overall, so these parities hold at every node or at none
    let total: u32 = rem.iter().map(|r| r.count_ones()).sum::<u32>() / 2;
    if total % 3 != 0 || rem.iter().any(|r| r.count_ones() % 2 != 0) {
        return Ok(GddVerdict::NotExists);
    }
    let mut s = CoverSearch { rem, failed: HashSet::new(), nodes: 0, budget, stack: Vec::new() };
    match s.run() {
        Some(true) => Ok(GddVerdict::Exists(Gdd { m: v, groups, triples: s.stack })),
        Some(false) => Ok(GddVerdict::NotExists),
        None => Err(GddSearchError::BudgetExhausted { budget }),
    }
}

struct CoverSearch {
    rem: Vec<u16>,
    failed: HashSet<Vec<u16>>,
    nodes: u64,
    budget: u64,
    stack: Vec<[usize; 3]>,
}

impl CoverSearch {
    fn run(&mut self) -> Option<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return None;
        }
        let Some(u) = self.rem.iter().position(|&r| r != 0) else {
            return Some(true);
        };
        if self.failed.contains(&self.rem) {
            return Some(false);
        }
        let v = self.rem[u].trailing_zeros() as usize;
        let mut cand = self.rem[u] & self.rem[v];
        while cand != 0 {
            let w = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            self.toggle(u, v, w);
            self.stack.push([u, v, w]);
            match self.run() {
                Some(true) => return Some(true),
                None => return None,
                Some(false) => {}
            }
            self.stack.pop();
            self.toggle(u, v, w);
        }
        self.failed.insert(self.rem.clone());
        Some(false)
    }

    fn toggle(&mut self, a: usize, b: usize, c: usize) {
        for (x, y) in [(a, b), (a, c), (b, c)] {
            self.rem[x] ^= 1 << y;
            self.rem[y] ^= 1 << x;
        }
    }
}
