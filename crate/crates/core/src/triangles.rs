//! Triangle decompositions of even graphs.
//!
//! Three strategies, tried in order:
//!
//! 1. direct Bose / Skolem triple systems when the graph is a complete graph
//!    of order 3 or 1 mod 6 on its non-isolated vertices;
//! 2. exhaustive depth-first search when at most
//!    [`EngineConfig::exhaustive_threshold`] vertices are non-isolated, which
//!    is the only path that can certify infeasibility beyond the cheap
//!    necessary conditions;
//! 3. randomized hill-climbing with switch moves otherwise.
//!
//! Every returned decomposition is re-checked against the input graph.

use std::cell::Cell;
use std::collections::HashSet;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::hypercore::{Graph, Hypergraph, HypergraphError};

pub const DEFAULT_BUDGET: u64 = 10_000_000;

thread_local! {
    static AMBIENT_BUDGET: Cell<u64> = const { Cell::new(DEFAULT_BUDGET) };
}

/// Move budget used by constructions that call the engine internally
/// (GDD and witness builders) on this thread.
pub fn ambient_budget() -> u64 {
    AMBIENT_BUDGET.with(Cell::get)
}

/// Runs `f` with [`ambient_budget`] set to `budget`, restoring the previous
/// value afterwards.
pub fn with_ambient_budget<T>(budget: u64, f: impl FnOnce() -> T) -> T {
    struct Restore(u64);
    impl Drop for Restore {
        fn drop(&mut self) {
            AMBIENT_BUDGET.with(|b| b.set(self.0));
        }
    }
    let _restore = Restore(AMBIENT_BUDGET.with(|b| b.replace(budget)));
    f()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Obstruction {
    OddVertex(usize),
    /// `|E| mod 3`, nonzero.
    EdgeCount(usize),
}

impl fmt::Display for Obstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Obstruction::OddVertex(v) => write!(f, "vertex {v} has odd degree"),
            Obstruction::EdgeCount(r) => write!(f, "edge count is {r} mod 3"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Infeasibility {
    Obstruction(Obstruction),
    /// The edge lies in no triangle of the graph.
    IsolatedEdge(usize, usize),
    /// Exhaustive search found no decomposition.
    Exhaustive,
}

impl fmt::Display for Infeasibility {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Infeasibility::Obstruction(o) => o.fmt(f),
            Infeasibility::IsolatedEdge(u, v) => write!(f, "edge ({u},{v}) lies in no triangle"),
            Infeasibility::Exhaustive => f.write_str("exhaustive search found no decomposition"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("no triangle decomposition: {0}")]
    Infeasible(Infeasibility),
    #[error("budget of {budget} moves exhausted with {placed}/{needed} triangles placed")]
    BudgetExhausted { budget: u64, placed: usize, needed: usize },
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
}

impl EngineError {
    pub fn is_retryable(&self) -> bool {
        matches!(self, EngineError::BudgetExhausted { .. })
    }
}

#[derive(Debug, Clone)]
pub struct EngineConfig {
    pub budget: u64,
    pub use_recipes: bool,
    pub exhaustive_threshold: usize,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            budget: DEFAULT_BUDGET,
            use_recipes: true,
            exhaustive_threshold: 12,
        }
    }
}

impl EngineConfig {
    pub fn with_budget(budget: u64) -> Self {
        EngineConfig { budget, ..Self::default() }
    }
}

/// Edge-disjoint triangles, each an ascending vertex triple.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TriangleSet {
    pub triangles: Vec<[usize; 3]>,
}

impl TriangleSet {
    pub fn len(&self) -> usize {
        self.triangles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triangles.is_empty()
    }

    /// True iff the triangles are edge-disjoint and their edges are exactly
    /// the edges of `g`.
    pub fn decomposes(&self, g: &Graph) -> bool {
        let mut seen = Graph::new(g.m());
        for t in &self.triangles {
            if t.iter().any(|&v| v >= g.m()) || t[0] == t[1] || t[1] == t[2] || t[0] == t[2] {
                return false;
            }
            for (a, b) in [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])] {
                if !g.has_edge(a, b) || !seen.add_edge(a, b) {
                    return false;
                }
            }
        }
        seen.edge_count() == g.edge_count()
    }

    fn sorted(mut self) -> Self {
        for t in &mut self.triangles {
            t.sort_unstable();
        }
        self.triangles.sort_unstable();
        self
    }
}

pub fn necessary_conditions(g: &Graph) -> Result<(), Obstruction> {
    if let Some(v) = (0..g.m()).find(|&v| g.degree(v) % 2 == 1) {
        return Err(Obstruction::OddVertex(v));
    }
    match g.edge_count() % 3 {
        0 => Ok(()),
        r => Err(Obstruction::EdgeCount(r)),
    }
}

pub fn triangle_decompose(g: &Graph, seed: u64, budget: u64) -> Result<TriangleSet, EngineError> {
    triangle_decompose_with(g, seed, &EngineConfig::with_budget(budget))
}

pub fn triangle_decompose_with(
    g: &Graph,
    seed: u64,
    config: &EngineConfig,
) -> Result<TriangleSet, EngineError> {
    necessary_conditions(g).map_err(|o| EngineError::Infeasible(Infeasibility::Obstruction(o)))?;
    if g.edge_count() == 0 {
        return Ok(TriangleSet::default());
    }
    for (u, v) in g.edges() {
        if !(0..g.m()).any(|w| g.has_edge(u, w) && g.has_edge(v, w)) {
            return Err(EngineError::Infeasible(Infeasibility::IsolatedEdge(u, v)));
        }
    }
    let active: Vec<usize> = (0..g.m()).filter(|&v| g.degree(v) > 0).collect();
    let k = active.len();

    let result = if config.use_recipes && g.edge_count() == k * (k - 1) / 2 {
        let sts = steiner_triple_system(k).expect("complete even graph with |E| = 0 mod 3 has an STS order");
        TriangleSet {
            triangles: sts
                .into_iter()
                .map(|t| [active[t[0]], active[t[1]], active[t[2]]])
                .collect(),
        }
    } else if k <= config.exhaustive_threshold && k <= 16 {
        exhaustive(g, &active, config.budget)?
    } else {
        hill_climb(g, seed, config.budget)?
    };
    let result = result.sorted();
    assert!(result.decomposes(g), "engine produced an invalid decomposition");
    Ok(result)
}

/// Adds triples decomposing the defect graph of `h`, turning it into a
/// linear space.
pub fn complete_defect(h: &Hypergraph, seed: u64, budget: u64) -> Result<Hypergraph, EngineError> {
    complete_defect_with(h, seed, &EngineConfig::with_budget(budget))
}

pub fn complete_defect_with(
    h: &Hypergraph,
    seed: u64,
    config: &EngineConfig,
) -> Result<Hypergraph, EngineError> {
    let defect = h.defect_graph()?;
    let tris = triangle_decompose_with(&defect, seed, config)?;
    let mut out = h.clone();
    for t in tris.triangles {
        out.push_edge(t.to_vec())?;
    }
    Ok(out)
}

/// A Steiner triple system on `0..m` by the Bose (`m ≡ 3 mod 6`) or Skolem
/// (`m ≡ 1 mod 6`) construction.
pub fn steiner_triple_system(m: usize) -> Option<Vec<[usize; 3]>> {
    match m % 6 {
        3 => Some(bose(m)),
        1 => Some(skolem(m)),
        _ => None,
    }
}

fn bose(m: usize) -> Vec<[usize; 3]> {
    let q = m / 3;
    let half = (q + 1) / 2;
    let op = |x: usize, y: usize| (x + y) * half % q;
    let pt = |x: usize, i: usize| x + (i % 3) * q;
    let mut out = Vec::with_capacity(m * (m - 1) / 6);
    for x in 0..q {
        out.push([pt(x, 0), pt(x, 1), pt(x, 2)]);
    }
    for i in 0..3 {
        for x in 0..q {
            for y in x + 1..q {
                out.push([pt(x, i), pt(y, i), pt(op(x, y), i + 1)]);
            }
        }
    }
    out
}

fn skolem(m: usize) -> Vec<[usize; 3]> {
    if m == 1 {
        return Vec::new();
    }
    let n = (m - 1) / 6;
    let q = 2 * n;
    let op = |x: usize, y: usize| {
        let s = (x + y) % q;
        if s % 2 == 0 {
            s / 2
        } else {
            (s - 1) / 2 + n
        }
    };
    let pt = |x: usize, i: usize| x + (i % 3) * q;
    let inf = m - 1;
    let mut out = Vec::with_capacity(m * (m - 1) / 6);
    for x in 0..n {
        out.push([pt(x, 0), pt(x, 1), pt(x, 2)]);
    }
    for x in 0..n {
        for i in 0..3 {
            out.push([inf, pt(x + n, i), pt(x, i + 1)]);
        }
    }
    for i in 0..3 {
        for x in 0..q {
            for y in x + 1..q {
                out.push([pt(x, i), pt(y, i), pt(op(x, y), i + 1)]);
            }
        }
    }
    out
}

fn exhaustive(g: &Graph, active: &[usize], budget: u64) -> Result<TriangleSet, EngineError> {
    let k = active.len();
    let mut rem = vec![0u32; k];
    for (i, &a) in active.iter().enumerate() {
        for (j, &b) in active.iter().enumerate() {
            if g.has_edge(a, b) {
                rem[i] |= 1 << j;
            }
        }
    }
    let needed = g.edge_count() / 3;
    let mut search = Exhaustive {
        rem,
        failed: HashSet::new(),
        nodes: 0,
        budget,
        stack: Vec::with_capacity(needed),
    };
    match search.run() {
        Some(true) => Ok(TriangleSet {
            triangles: search
                .stack
                .iter()
                .map(|t| [active[t[0]], active[t[1]], active[t[2]]])
                .collect(),
        }),
        Some(false) => Err(EngineError::Infeasible(Infeasibility::Exhaustive)),
        None => Err(EngineError::BudgetExhausted { budget, placed: 0, needed }),
    }
}

struct Exhaustive {
    rem: Vec<u32>,
    failed: HashSet<Vec<u32>>,
    nodes: u64,
    budget: u64,
    stack: Vec<[usize; 3]>,
}

impl Exhaustive {
    /// `Some(found)`, or `None` when the budget ran out.
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

const KICK_AFTER: u32 = 16;
const ABSENT: u32 = u32::MAX;
const FREE: u32 = u32::MAX - 1;

/// Hill-climbing state: which triangle owns each edge, the free neighbours
/// of each vertex, and the vertices that still have free edges.
struct Climber {
    n: usize,
    owner: Vec<u32>,
    tris: Vec<[u32; 3]>,
    free: Vec<Vec<u32>>,
    fpos: Vec<u32>,
    live: Vec<u32>,
    lpos: Vec<u32>,
}

impl Climber {
    fn new(g: &Graph) -> Self {
        let n = g.m();
        let mut c = Climber {
            n,
            owner: vec![ABSENT; n * n],
            tris: Vec::new(),
            free: vec![Vec::new(); n],
            fpos: vec![0; n * n],
            live: Vec::new(),
            lpos: vec![u32::MAX; n],
        };
        for (u, v) in g.edges() {
            c.owner[u * n + v] = FREE;
            c.owner[v * n + u] = FREE;
            c.release(u, v);
        }
        c
    }

    #[inline]
    fn owner(&self, u: usize, v: usize) -> u32 {
        self.owner[u * self.n + v]
    }

    /// A random free neighbour `z` of `x` adjacent to `y`.
    fn free_partner(&self, x: usize, y: usize, rng: &mut ChaCha8Rng) -> Option<usize> {
        let mut pick = None;
        let mut seen = 0u32;
        for &w in &self.free[x] {
            let w = w as usize;
            if w != y && self.owner(y, w) != ABSENT {
                seen += 1;
                if rng.gen_range(0..seen) == 0 {
                    pick = Some(w);
                }
            }
        }
        pick
    }

    fn set_owner(&mut self, u: usize, v: usize, t: u32) {
        self.owner[u * self.n + v] = t;
        self.owner[v * self.n + u] = t;
    }

    fn release(&mut self, u: usize, v: usize) {
        for (a, b) in [(u, v), (v, u)] {
            if self.free[a].is_empty() {
                self.lpos[a] = self.live.len() as u32;
                self.live.push(a as u32);
            }
            self.fpos[a * self.n + b] = self.free[a].len() as u32;
            self.free[a].push(b as u32);
        }
    }

    fn occupy(&mut self, u: usize, v: usize) {
        for (a, b) in [(u, v), (v, u)] {
            let i = self.fpos[a * self.n + b] as usize;
            let list = &mut self.free[a];
            list.swap_remove(i);
            if i < list.len() {
                let moved = list[i] as usize;
                self.fpos[a * self.n + moved] = i as u32;
            }
            if list.is_empty() {
                let li = self.lpos[a] as usize;
                self.live.swap_remove(li);
                if li < self.live.len() {
                    let moved = self.live[li] as usize;
                    self.lpos[moved] = li as u32;
                }
            }
        }
    }

    fn add(&mut self, a: usize, b: usize, c: usize) {
        let t = self.tris.len() as u32;
        self.tris.push([a as u32, b as u32, c as u32]);
        for (x, y) in [(a, b), (a, c), (b, c)] {
            self.occupy(x, y);
            self.set_owner(x, y, t);
        }
    }

    fn remove(&mut self, t: usize) {
        let [a, b, c] = self.tris[t].map(|x| x as usize);
        for (x, y) in [(a, b), (a, c), (b, c)] {
            self.set_owner(x, y, FREE);
            self.release(x, y);
        }
        self.tris.swap_remove(t);
        if t < self.tris.len() {
            let [a, b, c] = self.tris[t].map(|x| x as usize);
            for (x, y) in [(a, b), (a, c), (b, c)] {
                self.set_owner(x, y, t as u32);
            }
        }
    }
}

fn hill_climb(g: &Graph, seed: u64, budget: u64) -> Result<TriangleSet, EngineError> {
    let needed = g.edge_count() / 3;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut st = Climber::new(g);
    let mut moves = 0u64;
    let mut stall = 0u32;
    while !st.live.is_empty() {
        if moves >= budget {
            return Err(EngineError::BudgetExhausted { budget, placed: st.tris.len(), needed });
        }
        moves += 1;
        let x = st.live[rng.gen_range(0..st.live.len())] as usize;
        let fx = &st.free[x];
        let i = rng.gen_range(0..fx.len());
        let mut j = rng.gen_range(0..fx.len() - 1);
        if j >= i {
            j += 1;
        }
        let (y, mut z) = (fx[i] as usize, fx[j] as usize);
        if st.owner(y, z) == ABSENT {
            match st.free_partner(x, y, &mut rng) {
                Some(w) => z = w,
                None => {
                    stall += 1;
                    if stall > KICK_AFTER && !st.tris.is_empty() {
                        stall = 0;
                        let t = rng.gen_range(0..st.tris.len());
                        st.remove(t);
                    }
                    continue;
                }
            }
        }
        stall = 0;
        let t = st.owner(y, z);
        if t != FREE {
            st.remove(t as usize);
        }
        st.add(x, y, z);
    }
    Ok(TriangleSet {
        triangles: st.tris.iter().map(|t| t.map(|x| x as usize)).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn no_recipes() -> EngineConfig {
        EngineConfig { use_recipes: false, ..EngineConfig::default() }
    }

    #[test]
    fn conditions() {
        assert_eq!(necessary_conditions(&Graph::complete(7)), Ok(()));
        assert_eq!(necessary_conditions(&Graph::complete(4)), Err(Obstruction::OddVertex(0)));
        let k6m = Graph::complete_multipartite(&[2, 2, 2]);
        assert_eq!(necessary_conditions(&k6m), Ok(()));
        assert_eq!(necessary_conditions(&Graph::complete(5)), Err(Obstruction::EdgeCount(1)));
    }

    #[test]
    fn steiner_systems_from_recipes() {
        for m in [1, 3, 7, 9, 13, 15, 19, 21, 25, 27, 31, 33, 37, 39, 43, 45] {
            let sts = steiner_triple_system(m).unwrap();
            let ts = TriangleSet { triangles: sts };
            assert!(ts.decomposes(&Graph::complete(m)), "m = {m}");
        }
        assert!(steiner_triple_system(5).is_none());
    }

    #[test]
    fn octahedron_has_four_triangles() {
        let g = Graph::complete_multipartite(&[2, 2, 2]);
        let ts = triangle_decompose(&g, 0, DEFAULT_BUDGET).unwrap();
        assert_eq!(ts.len(), 4);
        assert!(ts.decomposes(&g));
    }

    #[test]
    fn k7_with_and_without_recipes() {
        let g = Graph::complete(7);
        assert_eq!(triangle_decompose(&g, 0, DEFAULT_BUDGET).unwrap().len(), 7);
        let ts = triangle_decompose_with(&g, 3, &no_recipes()).unwrap();
        assert_eq!(ts.len(), 7);
    }

    #[test]
    fn k5_infeasible() {
        assert_eq!(
            triangle_decompose(&Graph::complete(5), 0, DEFAULT_BUDGET),
            Err(EngineError::Infeasible(Infeasibility::Obstruction(Obstruction::EdgeCount(1))))
        );
    }

    #[test]
    fn exhaustive_certifies_infeasible() {
        let c6 = Graph::from_edges(6, (0..6).map(|i| (i, (i + 1) % 6)));
        assert!(matches!(
            triangle_decompose(&c6, 0, DEFAULT_BUDGET),
            Err(EngineError::Infeasible(Infeasibility::IsolatedEdge(0, 1)))
        ));
        let g = Graph::from_edges(
            7,
            [
                (0, 1), (0, 4), (0, 5), (0, 6), (1, 2), (1, 3), (1, 6), (2, 4),
                (2, 5), (2, 6), (3, 4), (3, 5), (3, 6), (4, 6), (5, 6),
            ],
        );
        assert_eq!(
            triangle_decompose(&g, 0, DEFAULT_BUDGET),
            Err(EngineError::Infeasible(Infeasibility::Exhaustive))
        );
    }

    #[test]
    fn hill_climb_on_larger_graphs() {
        for m in [19usize, 31, 45] {
            let g = Graph::complete(m);
            let ts = triangle_decompose_with(&g, 7, &no_recipes()).unwrap();
            assert_eq!(ts.len(), m * (m - 1) / 6);
        }
        let g = Graph::complete_multipartite(&[4, 4, 4, 4, 4, 4, 4]);
        let ts = triangle_decompose(&g, 1, DEFAULT_BUDGET).unwrap();
        assert!(ts.decomposes(&g));
        let g = Graph::complete_multipartite(&[2; 12]);
        assert!(triangle_decompose(&g, 1, DEFAULT_BUDGET).unwrap().decomposes(&g));
    }

    #[test]
    fn deterministic_per_seed() {
        let g = Graph::complete_multipartite(&[2; 10]);
        let a = triangle_decompose(&g, 11, DEFAULT_BUDGET).unwrap();
        let b = triangle_decompose(&g, 11, DEFAULT_BUDGET).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn budget_exhaustion_is_retryable() {
        let g = Graph::complete_multipartite(&[2; 15]);
        let err = triangle_decompose(&g, 0, 5).unwrap_err();
        assert!(err.is_retryable());
    }

    #[test]
    fn complete_defect_cases() {
        let h = Hypergraph::from_edges(5, [vec![0, 1]]).unwrap();
        assert!(matches!(
            complete_defect(&h, 0, DEFAULT_BUDGET),
            Err(EngineError::Infeasible(_))
        ));
        let full = Hypergraph::from_edges(3, [vec![0, 1, 2]]).unwrap();
        assert_eq!(complete_defect(&full, 0, DEFAULT_BUDGET).unwrap(), full);
        let h = Hypergraph::from_edges(9, [vec![0, 1, 2]]).unwrap();
        let done = complete_defect(&h, 0, DEFAULT_BUDGET).unwrap();
        assert_eq!(done.defect_graph().unwrap().edge_count(), 0);
        assert_eq!(done.edge_count(), 12);
    }
}
