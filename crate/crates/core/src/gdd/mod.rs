//! 3-GDDs: a partition of the vertices into groups plus a set of triples such
//! that every pair of vertices from different groups lies in exactly one
//! triple and no pair inside a group lies in any.
//!
//! Vertices of a constructed design are laid out group by group, in the
//! order the constructor names them.

mod base_designs;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use thiserror::Error;

use crate::hypercore::{Graph, Hypergraph};
use crate::triangles::{ambient_budget, steiner_triple_system, triangle_decompose, EngineError};

/// How many consecutive seeds a single engine-backed construction tries
/// before reporting exhaustion.
const SEED_ATTEMPTS: u64 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Condition {
    /// `u ≡ 2 (mod 3)`.
    UResidue,
    /// `v ≡ 2 (mod 3)`.
    VResidue,
    /// Neither `u` nor `v` is `0 (mod 3)`.
    NeitherZero,
    /// Uniform types need `w = 1` or `w ≥ 3`; one-irregular types `w ≥ 3`.
    GroupCount,
    /// Some vertex would have odd degree in the cross-group graph.
    Parity,
    /// The number of cross-group pairs is not divisible by 3.
    Divisibility,
    /// The irregular group is larger than all other groups together.
    LargeGroup,
    /// `g = h` in a one-irregular type.
    NotIrregular,
    /// Zero group size or count.
    Empty,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Condition::UResidue => "u ≡ 2 (mod 3)",
            Condition::VResidue => "v ≡ 2 (mod 3)",
            Condition::NeitherZero => "neither u nor v is 0 (mod 3)",
            Condition::GroupCount => "unsupported number of groups",
            Condition::Parity => "odd cross-group degree",
            Condition::Divisibility => "cross-group pair count not divisible by 3",
            Condition::LargeGroup => "irregular group larger than the rest together",
            Condition::NotIrregular => "irregular group has the common size",
            Condition::Empty => "empty group size or count",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GddError {
    #[error("inadmissible type {ty}: {condition}")]
    Inadmissible { ty: String, condition: Condition },
    #[error("filler has {filler} vertices but group {index} has {group}")]
    SizeMismatch { index: usize, group: usize, filler: usize },
    #[error("bad GDD type {0:?}")]
    Parse(String),
    #[error(transparent)]
    Engine(#[from] EngineError),
}

impl GddError {
    pub fn is_retryable(&self) -> bool {
        matches!(self, GddError::Engine(e) if e.is_retryable())
    }
}

/// A type `g_1^{a_1} ... g_s^{a_s}`, stored as `(size, count)` with sizes
/// descending and distinct.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GddType {
    parts: Vec<(usize, usize)>,
}

impl GddType {
    pub fn new<I: IntoIterator<Item = (usize, usize)>>(parts: I) -> Self {
        let mut map = BTreeMap::new();
        for (s, c) in parts {
            if c > 0 {
                *map.entry(s).or_insert(0) += c;
            }
        }
        GddType { parts: map.into_iter().rev().collect() }
    }

    pub fn from_sizes(sizes: &[usize]) -> Self {
        GddType::new(sizes.iter().map(|&s| (s, 1)))
    }

    pub fn parts(&self) -> &[(usize, usize)] {
        &self.parts
    }

    pub fn vertex_count(&self) -> usize {
        self.parts.iter().map(|&(s, c)| s * c).sum()
    }

    pub fn group_count(&self) -> usize {
        self.parts.iter().map(|&(_, c)| c).sum()
    }

    /// Group sizes, largest first.
    pub fn sizes(&self) -> Vec<usize> {
        self.parts
            .iter()
            .flat_map(|&(s, c)| std::iter::repeat(s).take(c))
            .collect()
    }

    /// `(C(m,2) − Σ C(|g|,2)) / 3`, or `None` if not integral.
    pub fn triple_count(&self) -> Option<usize> {
        let m = self.vertex_count();
        let inside: usize = self.parts.iter().map(|&(s, c)| c * s * s.saturating_sub(1) / 2).sum();
        let cross = m * m.saturating_sub(1) / 2 - inside;
        (cross % 3 == 0).then_some(cross / 3)
    }
}

impl fmt::Display for GddType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (s, c)) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{s}^{c}")?;
        }
        Ok(())
    }
}

impl FromStr for GddType {
    type Err = GddError;

    /// Space-separated `size^count` tokens; a bare `size` means count 1.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || GddError::Parse(s.to_string());
        let mut parts = Vec::new();
        let mut seen = Vec::new();
        for tok in s.split_whitespace() {
            let (size, count) = match tok.split_once('^') {
                Some((a, b)) => (a.parse::<usize>().map_err(|_| bad())?, b.parse::<usize>().map_err(|_| bad())?),
                None => (tok.parse::<usize>().map_err(|_| bad())?, 1),
            };
            if size == 0 || count == 0 || seen.contains(&size) {
                return Err(bad());
            }
            seen.push(size);
            parts.push((size, count));
        }
        if parts.is_empty() {
            return Err(bad());
        }
        Ok(GddType::new(parts))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gdd {
    pub m: usize,
    pub groups: Vec<Vec<usize>>,
    pub triples: Vec<[usize; 3]>,
}

impl Gdd {
    pub fn gdd_type(&self) -> GddType {
        GddType::new(self.groups.iter().map(|g| (g.len(), 1)))
    }

    /// Groups as consecutive vertex runs of the given sizes, no triples.
    fn with_layout(sizes: &[usize]) -> Gdd {
        let mut groups = Vec::with_capacity(sizes.len());
        let mut next = 0;
        for &s in sizes {
            groups.push((next..next + s).collect());
            next += s;
        }
        Gdd { m: next, groups, triples: Vec::new() }
    }

    fn normalized(mut self) -> Self {
        for t in &mut self.triples {
            t.sort_unstable();
        }
        self.triples.sort_unstable();
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GddFailure {
    NotPartition,
    BadTriple([usize; 3]),
    TripleInGroup([usize; 3]),
    PairRepeated(usize, usize),
    PairUncovered(usize, usize),
    TypeMismatch { claimed: String, actual: String },
}

impl fmt::Display for GddFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GddFailure::NotPartition => f.write_str("groups do not partition the vertex set"),
            GddFailure::BadTriple(t) => write!(f, "malformed triple {t:?}"),
            GddFailure::TripleInGroup(t) => write!(f, "triple {t:?} meets a group twice"),
            GddFailure::PairRepeated(u, v) => write!(f, "pair ({u},{v}) lies in two triples"),
            GddFailure::PairUncovered(u, v) => write!(f, "cross pair ({u},{v}) lies in no triple"),
            GddFailure::TypeMismatch { claimed, actual } => {
                write!(f, "type is {actual}, claimed {claimed}")
            }
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GddReport {
    pub failures: Vec<GddFailure>,
}

impl GddReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn verify_gdd(design: &Gdd, claimed: &GddType) -> GddReport {
    let mut failures = Vec::new();
    let m = design.m;
    let mut group_of = vec![usize::MAX; m];
    let mut partition = true;
    for (gi, g) in design.groups.iter().enumerate() {
        for &v in g {
            if v >= m || group_of[v] != usize::MAX {
                partition = false;
            } else {
                group_of[v] = gi;
            }
        }
    }
    if !partition || group_of.iter().any(|&g| g == usize::MAX) {
        failures.push(GddFailure::NotPartition);
        return GddReport { failures };
    }
    let mut covered = Graph::new(m);
    for t in &design.triples {
        if t.iter().any(|&v| v >= m) || t[0] == t[1] || t[0] == t[2] || t[1] == t[2] {
            failures.push(GddFailure::BadTriple(*t));
            continue;
        }
        if group_of[t[0]] == group_of[t[1]] || group_of[t[0]] == group_of[t[2]] || group_of[t[1]] == group_of[t[2]] {
            failures.push(GddFailure::TripleInGroup(*t));
            continue;
        }
        for (a, b) in [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])] {
            if !covered.add_edge(a, b) {
                failures.push(GddFailure::PairRepeated(a.min(b), a.max(b)));
            }
        }
    }
    if failures.is_empty() {
        'outer: for u in 0..m {
            for v in u + 1..m {
                if group_of[u] != group_of[v] && !covered.has_edge(u, v) {
                    failures.push(GddFailure::PairUncovered(u, v));
                    break 'outer;
                }
            }
        }
    }
    let actual = design.gdd_type();
    if actual != *claimed {
        failures.push(GddFailure::TypeMismatch {
            claimed: claimed.to_string(),
            actual: actual.to_string(),
        });
    }
    GddReport { failures }
}

/// Triples plus groups as one hypergraph, optionally leaving out groups of
/// size 1.
pub fn to_linear_space(design: &Gdd, drop_singletons: bool) -> Hypergraph {
    let mut edges: Vec<Vec<usize>> = design.triples.iter().map(|t| t.to_vec()).collect();
    edges.extend(
        design
            .groups
            .iter()
            .filter(|g| !(drop_singletons && g.len() == 1))
            .cloned(),
    );
    Hypergraph::from_edges(design.m, edges).expect("GDD groups and triples are valid edges")
}

/// Replaces group `index` of `host` by the groups and triples of `filler`,
/// mapping filler vertex `i` to the `i`-th smallest vertex of that group.
pub fn fill_group(host: &Gdd, index: usize, filler: &Gdd) -> Result<Gdd, GddError> {
    let group = &host.groups[index];
    if group.len() != filler.m {
        return Err(GddError::SizeMismatch { index, group: group.len(), filler: filler.m });
    }
    let mut slots = group.clone();
    slots.sort_unstable();
    let mut groups = Vec::with_capacity(host.groups.len() + filler.groups.len() - 1);
    groups.extend(host.groups[..index].iter().cloned());
    groups.extend(filler.groups.iter().map(|g| g.iter().map(|&v| slots[v]).collect::<Vec<_>>()));
    groups.extend(host.groups[index + 1..].iter().cloned());
    let mut triples = host.triples.clone();
    triples.extend(filler.triples.iter().map(|t| t.map(|v| slots[v])));
    let out = Gdd { m: host.m, groups, triples }.normalized();
    debug_assert!(verify_gdd(&out, &out.gdd_type()).passed());
    Ok(out)
}

fn inadmissible(ty: String, condition: Condition) -> GddError {
    GddError::Inadmissible { ty, condition }
}

pub fn admissible_4u2v(u: usize, v: usize) -> Result<(), Condition> {
    if u % 3 == 2 {
        Err(Condition::UResidue)
    } else if v % 3 == 2 {
        Err(Condition::VResidue)
    } else if u % 3 != 0 && v % 3 != 0 {
        Err(Condition::NeitherZero)
    } else {
        Ok(())
    }
}

pub fn check_uniform(h: usize, w: usize) -> Result<(), Condition> {
    if h == 0 || w == 0 {
        Err(Condition::Empty)
    } else if w == 1 {
        Ok(())
    } else if w == 2 {
        Err(Condition::GroupCount)
    } else if (w - 1) * h % 2 != 0 {
        Err(Condition::Parity)
    } else if w * (w - 1) * h * h % 6 != 0 {
        Err(Condition::Divisibility)
    } else {
        Ok(())
    }
}

pub fn check_one_irregular(g: usize, h: usize, w: usize) -> Result<(), Condition> {
    if g == 0 || h == 0 || w == 0 {
        Err(Condition::Empty)
    } else if g == h {
        Err(Condition::NotIrregular)
    } else if w < 3 {
        Err(Condition::GroupCount)
    } else if g > h * (w - 1) {
        Err(Condition::LargeGroup)
    } else if (h * (w - 1) + g) % 2 != 0 || h * w % 2 != 0 {
        Err(Condition::Parity)
    } else if (h * h * w * (w - 1) / 2 + g * h * w) % 3 != 0 {
        Err(Condition::Divisibility)
    } else {
        Ok(())
    }
}

type CacheKey = (Vec<usize>, u64);

fn cache() -> &'static Mutex<HashMap<CacheKey, Gdd>> {
    static CACHE: OnceLock<Mutex<HashMap<CacheKey, Gdd>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Decomposes the complete multipartite graph on the given group sizes,
/// trying seeds `seed, seed+1, ...` on budget exhaustion.
fn engine_design(sizes: &[usize], seed: u64) -> Result<Gdd, GddError> {
    let key = (sizes.to_vec(), seed);
    if let Some(d) = cache().lock().unwrap().get(&key) {
        return Ok(d.clone());
    }
    let g = Graph::complete_multipartite(sizes);
    let mut last = None;
    for k in 0..SEED_ATTEMPTS {
        match triangle_decompose(&g, seed.wrapping_add(k), ambient_budget()) {
            Ok(ts) => {
                let d = Gdd { triples: ts.triangles, ..Gdd::with_layout(sizes) };
                cache().lock().unwrap().insert(key, d.clone());
                return Ok(d);
            }
            Err(e) if e.is_retryable() => last = Some(e),
            Err(e) => return Err(e.into()),
        }
    }
    Err(last.expect("at least one attempt").into())
}

/// A 3-GDD of type `h^w`.
pub fn construct_uniform(h: usize, w: usize, seed: u64) -> Result<Gdd, GddError> {
    check_uniform(h, w).map_err(|c| inadmissible(format!("{h}^{w}"), c))?;
    let layout = Gdd::with_layout(&vec![h; w]);
    if w == 1 {
        return Ok(layout);
    }
    if let Some(sts) = steiner_triple_system(w) {
        // each block {a,b,c} becomes the h² transversals (a,i),(b,j),(c,i+j)
        let mut triples = Vec::with_capacity(sts.len() * h * h);
        for [a, b, c] in sts {
            for i in 0..h {
                for j in 0..h {
                    triples.push([a * h + i, b * h + j, c * h + (i + j) % h]);
                }
            }
        }
        return Ok(Gdd { triples, ..layout }.normalized());
    }
    engine_design(&vec![h; w], seed)
}

/// A 3-GDD of type `g^1 h^w`, with the `g`-group first.
pub fn construct_one_irregular(g: usize, h: usize, w: usize, seed: u64) -> Result<Gdd, GddError> {
    check_one_irregular(g, h, w).map_err(|c| inadmissible(format!("{g}^1 {h}^{w}"), c))?;
    let mut sizes = vec![g];
    sizes.extend(std::iter::repeat(h).take(w));
    if g == h * (w - 1) {
        return Ok(extremal_one_irregular(g, h, w));
    }
    engine_design(&sizes, seed)
}

/// `g = h(w−1)`: every vertex of the big group is matched with a perfect
/// matching of the complete multipartite graph `K_{h×w}`, so a
/// 1-factorization of that graph gives the design directly.
fn extremal_one_irregular(g: usize, h: usize, w: usize) -> Gdd {
    let factors = multipartite_one_factorization(h, w);
    debug_assert_eq!(factors.len(), g);
    let mut sizes = vec![g];
    sizes.extend(std::iter::repeat(h).take(w));
    let layout = Gdd::with_layout(&sizes);
    let mut triples = Vec::with_capacity(g * h * w / 2);
    for (k, factor) in factors.iter().enumerate() {
        for &(a, b) in factor {
            triples.push([k, g + a, g + b]);
        }
    }
    Gdd { triples, ..layout }.normalized()
}

/// Round-robin 1-factorization of `K_n`, `n` even: `n − 1` perfect
/// matchings. Vertex `n − 1` plays the fixed point.
fn round_robin(n: usize) -> Vec<Vec<(usize, usize)>> {
    let q = n - 1;
    (0..q)
        .map(|r| {
            let mut f = vec![(r, q)];
            for i in 1..n / 2 {
                f.push(((r + i) % q, (r + q - i) % q));
            }
            f
        })
        .collect()
}

/// 1-factorization of `K_{h×w}` on vertices `x·h + i` (group `x`, slot `i`),
/// needing `hw` even.
fn multipartite_one_factorization(h: usize, w: usize) -> Vec<Vec<(usize, usize)>> {
    let mut out = Vec::with_capacity(h * (w - 1));
    if w % 2 == 0 {
        // factor of K_w times a cyclic shift between slots
        for f in round_robin(w) {
            for c in 0..h {
                out.push(f.iter().flat_map(|&(x, y)| (0..h).map(move |i| (x * h + i, y * h + (i + c) % h))).collect());
            }
        }
    } else {
        // K_{2w} minus one factor is the cocktail party graph K_{2×w}; its
        // 2w − 2 factors blown up by h/2 each split into h/2 shifted copies
        let k = h / 2;
        let rr = round_robin(2 * w);
        let mut place = vec![(0, 0); 2 * w];
        for (x, &(a, b)) in rr[0].iter().enumerate() {
            place[a] = (x, 0);
            place[b] = (x, 1);
        }
        let vid = |p: usize, t: usize| {
            let (x, s) = place[p];
            x * h + s * k + t
        };
        for f in &rr[1..] {
            for c in 0..k {
                out.push(f.iter().flat_map(|&(a, b)| (0..k).map(move |t| (vid(a, t), vid(b, (t + c) % k)))).collect());
            }
        }
    }
    out
}

/// A 3-GDD of type `4^u 2^v`, with the `4`-groups and `2`-groups laid out
/// as the recursion produces them.
pub fn construct_4u2v(u: usize, v: usize, seed: u64) -> Result<Gdd, GddError> {
    let ty = format!("4^{u} 2^{v}");
    admissible_4u2v(u, v).map_err(|c| inadmissible(ty.clone(), c))?;
    let out = match (u, v) {
        (0, 0) => Gdd::with_layout(&[]),
        (0, _) => construct_uniform(2, v, seed)?,
        (_, 0) => construct_uniform(4, u, seed)?,
        (1, _) => construct_one_irregular(4, 2, v, seed)?,
        (_, 1) => construct_one_irregular(2, 4, u, seed)?,
        _ if u % 3 == 0 => {
            if v <= 2 * u - 2 {
                let host = construct_one_irregular(2 * v, 4, u, seed)?;
                fill_group(&host, 0, &construct_uniform(2, v, seed)?)?
            } else if v == 2 * u {
                if u == 3 {
                    base_designs::base_design(3, 6).expect("stored base design")
                } else {
                    let k = u / 3;
                    let mut d = construct_uniform(12, 2 * k, seed)?;
                    let f4 = construct_uniform(4, 3, seed)?;
                    let f2 = construct_uniform(2, 6, seed)?;
                    // filling group i shifts later groups right; fill from the back
                    for i in (0..2 * k).rev() {
                        d = fill_group(&d, i, if i < k { &f4 } else { &f2 })?;
                    }
                    d
                }
            } else {
                assert!(v > 2 * u, "v = 2u - 1 cannot satisfy the residue conditions");
                let host = construct_one_irregular(4 * u, 2, v, seed)?;
                fill_group(&host, 0, &construct_uniform(4, u, seed)?)?
            }
        }
        _ => {
            if let Some(d) = base_designs::base_design(u, v) {
                d
            } else {
                let l = if v % 2 == 0 { 4 } else { 10 };
                let w = (4 * u + 2 * v - l) / 12;
                let mut d = construct_one_irregular(l, 12, w, seed)?;
                let f4 = construct_uniform(4, 3, seed)?;
                let f2 = construct_uniform(2, 6, seed)?;
                let n4 = (u - 1) / 3;
                for i in (1..=w).rev() {
                    d = fill_group(&d, i, if i <= n4 { &f4 } else { &f2 })?;
                }
                if l == 10 {
                    d = fill_group(&d, 0, &construct_one_irregular(4, 2, 3, seed)?)?;
                }
                d
            }
        }
    };
    let claimed = GddType::new([(4, u), (2, v)]);
    let report = verify_gdd(&out, &claimed);
    assert!(report.passed(), "4^{u} 2^{v}: {:?}", report.failures);
    Ok(out)
}

/// Any supported type: `4^u 2^v`, uniform, one-irregular, or else the
/// engine directly on the complete multipartite graph.
pub fn construct(ty: &GddType, seed: u64) -> Result<Gdd, GddError> {
    let parts = ty.parts();
    let sizes_4_2 = parts.iter().all(|&(s, _)| s == 4 || s == 2);
    let design = if sizes_4_2 {
        let count = |s| parts.iter().find(|p| p.0 == s).map_or(0, |p| p.1);
        construct_4u2v(count(4), count(2), seed)?
    } else if let [(h, w)] = parts {
        construct_uniform(*h, *w, seed)?
    } else if let [(a, ca), (b, cb)] = parts {
        if *ca == 1 {
            construct_one_irregular(*a, *b, *cb, seed)?
        } else if *cb == 1 {
            construct_one_irregular(*b, *a, *ca, seed)?
        } else {
            engine_design(&ty.sizes(), seed)?
        }
    } else {
        if ty.triple_count().is_none() {
            return Err(inadmissible(ty.to_string(), Condition::Divisibility));
        }
        engine_design(&ty.sizes(), seed)?
    };
    Ok(design)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(d: &Gdd, ty: &str) {
        let ty: GddType = ty.parse().unwrap();
        let r = verify_gdd(d, &ty);
        assert!(r.passed(), "{ty}: {:?}", r.failures);
        assert_eq!(d.triples.len(), ty.triple_count().unwrap());
    }

    #[test]
    fn admissibility_examples() {
        assert_eq!(admissible_4u2v(3, 6), Ok(()));
        assert_eq!(admissible_4u2v(2, 2), Err(Condition::UResidue));
        assert_eq!(admissible_4u2v(1, 1), Err(Condition::NeitherZero));
    }

    #[test]
    fn type_parsing() {
        let t: GddType = "4^3 2^6".parse().unwrap();
        assert_eq!(t.vertex_count(), 24);
        assert_eq!(t.triple_count(), Some(84));
        assert_eq!(t.to_string(), "4^3 2^6");
        let t: GddType = "2^3 4".parse().unwrap();
        assert_eq!(t.to_string(), "4^1 2^3");
        assert!("4^x".parse::<GddType>().is_err());
        assert!("4^1 4^2".parse::<GddType>().is_err());
        assert!("".parse::<GddType>().is_err());
    }

    #[test]
    fn uniform_examples() {
        let d = construct_uniform(1, 7, 0).unwrap();
        check(&d, "1^7");
        assert_eq!(d.triples.len(), 7);
        let d = construct_uniform(2, 3, 0).unwrap();
        check(&d, "2^3");
        assert_eq!(d.triples.len(), 4);
        let d = construct_uniform(4, 1, 0).unwrap();
        check(&d, "4^1");
        assert!(d.triples.is_empty());
        check(&construct_uniform(5, 3, 0).unwrap(), "5^3");
        check(&construct_uniform(2, 6, 0).unwrap(), "2^6");
        check(&construct_uniform(4, 4, 0).unwrap(), "4^4");
        check(&construct_uniform(12, 4, 0).unwrap(), "12^4");
        assert!(construct_uniform(3, 2, 0).is_err());
        assert!(construct_uniform(1, 5, 0).is_err());
    }

    #[test]
    fn one_irregular_examples() {
        let d = construct_one_irregular(4, 2, 3, 0).unwrap();
        check(&d, "4^1 2^3");
        assert_eq!(d.triples.len(), 12);
        check(&construct_one_irregular(5, 1, 6, 0).unwrap(), "5^1 1^6");
        assert_eq!(
            construct_one_irregular(3, 2, 3, 0),
            Err(GddError::Inadmissible { ty: "3^1 2^3".into(), condition: Condition::Parity })
        );
    }

    #[test]
    fn extremal_factorizations() {
        for (h, w) in [(2, 3), (2, 5), (4, 3), (2, 4), (3, 4), (4, 6), (1, 8), (6, 5)] {
            let g = h * (w - 1);
            if check_one_irregular(g, h, w).is_err() {
                continue;
            }
            let d = extremal_one_irregular(g, h, w);
            check(&d, &format!("{g}^1 {h}^{w}"));
        }
    }

    #[test]
    fn recursion_examples() {
        let d = construct_4u2v(1, 0, 0).unwrap();
        assert_eq!((d.m, d.triples.len()), (4, 0));
        let d = construct_4u2v(3, 6, 0).unwrap();
        assert_eq!((d.m, d.triples.len()), (24, 84));
        check(&construct_4u2v(4, 3, 0).unwrap(), "4^4 2^3");
        check(&construct_4u2v(6, 12, 0).unwrap(), "4^6 2^12");
        check(&construct_4u2v(7, 6, 0).unwrap(), "4^7 2^6");
        check(&construct_4u2v(4, 15, 0).unwrap(), "4^4 2^15");
        check(&construct_4u2v(3, 7, 0).unwrap(), "4^3 2^7");
        check(&construct_4u2v(3, 3, 0).unwrap(), "4^3 2^3");
    }

    #[test]
    fn fill_group_examples() {
        let host = Gdd::with_layout(&[12]);
        let filler = construct_uniform(4, 3, 0).unwrap();
        let d = fill_group(&host, 0, &filler).unwrap();
        check(&d, "4^3");
        assert!(matches!(
            fill_group(&host, 0, &construct_uniform(2, 3, 0).unwrap()),
            Err(GddError::SizeMismatch { index: 0, group: 12, filler: 6 })
        ));
    }

    #[test]
    fn verifier_catches_defects() {
        let mut d = construct_uniform(2, 3, 0).unwrap();
        assert!(!verify_gdd(&d, &"2^2".parse().unwrap()).passed());
        d.triples[0] = [0, 1, 2];
        let r = verify_gdd(&d, &d.gdd_type());
        assert!(r.failures.iter().any(|f| matches!(f, GddFailure::TripleInGroup(_))));
    }

    #[test]
    fn linear_space_views() {
        let d = construct_one_irregular(4, 2, 3, 0).unwrap();
        let h = to_linear_space(&d, false);
        assert!(h.is_linear().is_ok());
        assert_eq!(h.defect_graph().unwrap().edge_count(), 0);
        let d = construct_one_irregular(5, 1, 6, 0).unwrap();
        let h = to_linear_space(&d, true);
        assert_eq!(h.size_profile().count(5), 1);
        assert_eq!(h.size_profile().count(1), 0);
        let h = to_linear_space(&Gdd::with_layout(&[4]), false);
        assert_eq!(h.edges(), &[vec![0, 1, 2, 3]]);
    }
}
