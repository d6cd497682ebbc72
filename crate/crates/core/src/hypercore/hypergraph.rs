use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};

use rand::Rng;
use thiserror::Error;

use super::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HypergraphError {
    #[error("edge {index} is empty")]
    EmptyEdge { index: usize },
    #[error("edge {index} contains vertex {vertex} but m = {m}")]
    VertexOutOfRange { index: usize, vertex: usize, m: usize },
    #[error("edge {index} is not strictly ascending")]
    NotAscending { index: usize },
    #[error("hypergraph is not linear: {0}")]
    NotLinear(LinearityViolation),
}

/// First pair (in lexicographic order) lying in two edges, with the indices
/// of the first two edges that contain it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LinearityViolation {
    pub pair: (usize, usize),
    pub first: usize,
    pub second: usize,
}

impl std::fmt::Display for LinearityViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "pair ({}, {}) lies in edges {} and {}",
            self.pair.0, self.pair.1, self.first, self.second
        )
    }
}

/// Hypergraph on vertices `0..m` with a multiset of nonempty edges.
///
/// Each edge is kept as a strictly ascending vertex list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    m: usize,
    edges: Vec<Vec<usize>>,
}

/// Canonical edge order: larger edges first, then lexicographic.
pub fn canonical_edge_order(a: &[usize], b: &[usize]) -> Ordering {
    b.len().cmp(&a.len()).then_with(|| a.cmp(b))
}

impl Hypergraph {
    pub fn empty(m: usize) -> Self {
        Hypergraph { m, edges: Vec::new() }
    }

    /// Validates edges as given (ids in range, nonempty, strictly ascending).
    pub fn new(m: usize, edges: Vec<Vec<usize>>) -> Result<Self, HypergraphError> {
        for (index, e) in edges.iter().enumerate() {
            if e.is_empty() {
                return Err(HypergraphError::EmptyEdge { index });
            }
            if let Some(&vertex) = e.iter().find(|&&v| v >= m) {
                return Err(HypergraphError::VertexOutOfRange { index, vertex, m });
            }
            if e.windows(2).any(|w| w[0] >= w[1]) {
                return Err(HypergraphError::NotAscending { index });
            }
        }
        Ok(Hypergraph { m, edges })
    }

    /// Sorts each edge before validating; duplicate vertices inside an edge
    /// are still rejected.
    pub fn from_edges<I, E>(m: usize, edges: I) -> Result<Self, HypergraphError>
    where
        I: IntoIterator<Item = E>,
        E: AsRef<[usize]>,
    {
        let edges = edges
            .into_iter()
            .map(|e| {
                let mut e = e.as_ref().to_vec();
                e.sort_unstable();
                e
            })
            .collect();
        Hypergraph::new(m, edges)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn into_edges(self) -> Vec<Vec<usize>> {
        self.edges
    }

    /// Appends an edge after validating it against `m`.
    pub fn push_edge(&mut self, mut edge: Vec<usize>) -> Result<(), HypergraphError> {
        edge.sort_unstable();
        let index = self.edges.len();
        if edge.is_empty() {
            return Err(HypergraphError::EmptyEdge { index });
        }
        if let Some(&vertex) = edge.iter().find(|&&v| v >= self.m) {
            return Err(HypergraphError::VertexOutOfRange { index, vertex, m: self.m });
        }
        if edge.windows(2).any(|w| w[0] >= w[1]) {
            return Err(HypergraphError::NotAscending { index });
        }
        self.edges.push(edge);
        Ok(())
    }

    pub fn remove_edge(&mut self, index: usize) -> Vec<usize> {
        self.edges.remove(index)
    }

    /// Removes the first occurrence of `edge`; returns whether it was found.
    pub fn remove_edge_value(&mut self, edge: &[usize]) -> bool {
        match self.edges.iter().position(|e| e == edge) {
            Some(i) => {
                self.edges.remove(i);
                true
            }
            None => false,
        }
    }

    /// Sorts the edge list into canonical order (size descending, then
    /// lexicographic).
    pub fn canonicalize(&mut self) {
        self.edges.sort_by(|a, b| canonical_edge_order(a, b));
    }

    pub fn canonical(mut self) -> Self {
        self.canonicalize();
        self
    }

    pub fn is_canonical(&self) -> bool {
        self.edges
            .windows(2)
            .all(|w| canonical_edge_order(&w[0], &w[1]) != Ordering::Greater)
    }

    /// Renames vertex `v` to `map[v]` in a hypergraph on `new_m` vertices.
    pub fn relabel(&self, map: &[usize], new_m: usize) -> Result<Self, HypergraphError> {
        Hypergraph::from_edges(
            new_m,
            self.edges
                .iter()
                .map(|e| e.iter().map(|&v| map[v]).collect::<Vec<_>>()),
        )
    }

    /// Sum of edge sizes.
    pub fn total_degree(&self) -> usize {
        self.edges.iter().map(Vec::len).sum()
    }

    pub fn is_linear(&self) -> Result<(), LinearityViolation> {
        let mut owners = PairOwners::new(self.m);
        let mut worst: Option<LinearityViolation> = None;
        for (i, e) in self.edges.iter().enumerate() {
            for (a, &u) in e.iter().enumerate() {
                for &v in &e[a + 1..] {
                    if let Some(first) = owners.claim(u, v, i) {
                        let cand = LinearityViolation { pair: (u, v), first, second: i };
                        worst = Some(match worst {
                            Some(w) if w.pair < cand.pair => w,
                            // an earlier second edge for the same pair is found first
                            Some(w) if w.pair == cand.pair => w,
                            _ => cand,
                        });
                    }
                }
            }
        }
        worst.map_or(Ok(()), Err)
    }

    fn linear_or_err(&self) -> Result<(), HypergraphError> {
        self.is_linear().map_err(HypergraphError::NotLinear)
    }

    /// Pairs co-occurring in some edge.
    pub fn underlying_graph(&self) -> Result<Graph, HypergraphError> {
        self.linear_or_err()?;
        let mut g = Graph::new(self.m);
        for e in &self.edges {
            for (a, &u) in e.iter().enumerate() {
                for &v in &e[a + 1..] {
                    g.add_edge(u, v);
                }
            }
        }
        Ok(g)
    }

    /// Pairs co-occurring in no edge.
    pub fn defect_graph(&self) -> Result<Graph, HypergraphError> {
        Ok(self.underlying_graph()?.complement())
    }

    pub fn size_profile(&self) -> SizeProfile {
        let mut counts = BTreeMap::new();
        for e in &self.edges {
            *counts.entry(e.len()).or_insert(0) += 1;
        }
        SizeProfile { counts }
    }

    /// The `k`-uniform part: same vertex set, only the size-`k` edges.
    pub fn restrict_to_size(&self, k: usize) -> Hypergraph {
        Hypergraph {
            m: self.m,
            edges: self.edges.iter().filter(|e| e.len() == k).cloned().collect(),
        }
    }

    /// Parity data of the underlying graph and defect. Callers apply it to
    /// `restrict_to_size(3)` to check the triple-system parity conditions.
    pub fn parity_report(&self) -> Result<ParityReport, HypergraphError> {
        let g = self.underlying_graph()?;
        let d = g.complement();
        Ok(ParityReport {
            underlying_even: g.is_even(),
            underlying_edges_mod3: (g.edge_count() % 3) as u8,
            defect_even: d.is_even(),
            defect_odd: d.is_odd(),
            defect_edges_mod3: (d.edge_count() % 3) as u8,
        })
    }
}

/// Maps each unordered pair to the first edge index containing it.
struct PairOwners {
    m: usize,
    dense: Option<Vec<u32>>,
    sparse: HashMap<(usize, usize), usize>,
}

const DENSE_LIMIT: usize = 2048;

impl PairOwners {
    fn new(m: usize) -> Self {
        PairOwners {
            m,
            dense: (m <= DENSE_LIMIT).then(|| vec![u32::MAX; m * m]),
            sparse: HashMap::new(),
        }
    }

    /// Records `edge` as owner of `(u, v)`; returns the previous owner if any.
    fn claim(&mut self, u: usize, v: usize, edge: usize) -> Option<usize> {
        match &mut self.dense {
            Some(d) => {
                let slot = &mut d[u * self.m + v];
                if *slot == u32::MAX {
                    *slot = edge as u32;
                    None
                } else {
                    Some(*slot as usize)
                }
            }
            None => match self.sparse.get(&(u, v)) {
                Some(&prev) => Some(prev),
                None => {
                    self.sparse.insert((u, v), edge);
                    None
                }
            },
        }
    }
}

/// Number of edges of each size.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SizeProfile {
    counts: BTreeMap<usize, usize>,
}

impl SizeProfile {
    pub fn from_counts<I: IntoIterator<Item = (usize, usize)>>(counts: I) -> Self {
        SizeProfile {
            counts: counts.into_iter().filter(|&(_, c)| c > 0).collect(),
        }
    }

    pub fn count(&self, size: usize) -> usize {
        self.counts.get(&size).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn total_degree(&self) -> usize {
        self.counts.iter().map(|(s, c)| s * c).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.counts.iter().map(|(&s, &c)| (s, c))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParityReport {
    pub underlying_even: bool,
    pub underlying_edges_mod3: u8,
    pub defect_even: bool,
    pub defect_odd: bool,
    pub defect_edges_mod3: u8,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WitnessFailure {
    VertexCount { expected: usize, actual: usize },
    EdgeCount { expected: usize, actual: usize },
    NotLinear(LinearityViolation),
    DegreeMismatch { expected: usize, actual: usize },
}

impl std::fmt::Display for WitnessFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            WitnessFailure::VertexCount { expected, actual } => {
                write!(f, "vertex count {actual}, expected {expected}")
            }
            WitnessFailure::EdgeCount { expected, actual } => {
                write!(f, "edge count {actual}, expected {expected}")
            }
            WitnessFailure::NotLinear(v) => write!(f, "not linear: {v}"),
            WitnessFailure::DegreeMismatch { expected, actual } => {
                write!(f, "total degree {actual}, expected {expected}")
            }
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct WitnessReport {
    pub failures: Vec<WitnessFailure>,
}

impl WitnessReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks that `h` has `m` vertices, `n` edges, is linear and has total
/// degree `z`. Every failing check is reported.
pub fn verify_witness(h: &Hypergraph, m: usize, n: usize, z: usize) -> WitnessReport {
    let mut failures = Vec::new();
    if h.m() != m {
        failures.push(WitnessFailure::VertexCount { expected: m, actual: h.m() });
    }
    if h.edge_count() != n {
        failures.push(WitnessFailure::EdgeCount { expected: n, actual: h.edge_count() });
    }
    if let Err(v) = h.is_linear() {
        failures.push(WitnessFailure::NotLinear(v));
    }
    if h.total_degree() != z {
        failures.push(WitnessFailure::DegreeMismatch { expected: z, actual: h.total_degree() });
    }
    WitnessReport { failures }
}

/// Random linear hypergraph on `m` vertices: `attempts` candidate edges with
/// sizes drawn from `1..=max_size`, each kept only if it preserves linearity.
pub fn random_linear<R: Rng>(m: usize, attempts: usize, max_size: usize, rng: &mut R) -> Hypergraph {
    let mut covered = vec![false; m * m];
    let mut edges = Vec::new();
    if m == 0 {
        return Hypergraph::empty(0);
    }
    let max_size = max_size.clamp(1, m);
    for _ in 0..attempts {
        let k = rng.gen_range(1..=max_size);
        let mut e = rand::seq::index::sample(rng, m, k).into_vec();
        e.sort_unstable();
        let fits = e
            .iter()
            .enumerate()
            .all(|(a, &u)| e[a + 1..].iter().all(|&v| !covered[u * m + v]));
        if fits {
            for (a, &u) in e.iter().enumerate() {
                for &v in &e[a + 1..] {
                    covered[u * m + v] = true;
                }
            }
            edges.push(e);
        }
    }
    Hypergraph { m, edges }
}
