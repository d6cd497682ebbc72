use std::fmt;

/// A simple graph on vertices `0..m`, stored as a dense symmetric bit matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    m: usize,
    adj: Vec<bool>,
    edges: usize,
}

impl Graph {
    /// The empty graph on `m` vertices.
    pub fn new(m: usize) -> Self {
        Graph {
            m,
            adj: vec![false; m * m],
            edges: 0,
        }
    }

    pub fn complete(m: usize) -> Self {
        let mut g = Graph::new(m);
        for u in 0..m {
            for v in u + 1..m {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Complete multipartite graph whose parts are consecutive runs of the
    /// given sizes.
    pub fn complete_multipartite(part_sizes: &[usize]) -> Self {
        let m: usize = part_sizes.iter().sum();
        let mut part = Vec::with_capacity(m);
        for (i, &s) in part_sizes.iter().enumerate() {
            part.extend(std::iter::repeat(i).take(s));
        }
        let mut g = Graph::new(m);
        for u in 0..m {
            for v in u + 1..m {
                if part[u] != part[v] {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Build from an edge list. Panics on loops or out-of-range vertices.
    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(m: usize, edges: I) -> Self {
        let mut g = Graph::new(m);
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.m && v < self.m && self.adj[u * self.m + v]
    }

    /// Adds `uv`; returns `false` if it was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        assert!(u != v, "loop at vertex {u}");
        assert!(u < self.m && v < self.m, "edge ({u},{v}) out of range for m={}", self.m);
        if self.adj[u * self.m + v] {
            return false;
        }
        self.adj[u * self.m + v] = true;
        self.adj[v * self.m + u] = true;
        self.edges += 1;
        true
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        if !self.has_edge(u, v) {
            return false;
        }
        self.adj[u * self.m + v] = false;
        self.adj[v * self.m + u] = false;
        self.edges -= 1;
        true
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v * self.m..(v + 1) * self.m]
            .iter()
            .filter(|&&b| b)
            .count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.m).map(|v| self.degree(v)).collect()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v * self.m..(v + 1) * self.m]
            .iter()
            .enumerate()
            .filter_map(|(u, &b)| b.then_some(u))
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.m).flat_map(move |u| {
            (u + 1..self.m).filter_map(move |v| self.adj[u * self.m + v].then_some((u, v)))
        })
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::new(self.m);
        for u in 0..self.m {
            for v in u + 1..self.m {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Every vertex has even degree.
    pub fn is_even(&self) -> bool {
        (0..self.m).all(|v| self.degree(v) % 2 == 0)
    }

    /// Every vertex has odd degree. Vacuously true for `m = 0`.
    pub fn is_odd(&self) -> bool {
        (0..self.m).all(|v| self.degree(v) % 2 == 1)
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.m).map(|v| self.degree(v)).min()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("m", &self.m)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}
