//! Generators for the graph families: hypercubes, permutation graphs, unit
//! interval graphs, line graphs, the shattering graphs `D_n`, the
//! large-`sd` permutations, distance-hereditary builds, and seeded random
//! instances for the harness.

use std::collections::HashSet;
use std::fmt;

use num_rational::Ratio;
use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rng;

pub type Rational = Ratio<i64>;

/// One-line permutation of `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Permutation {
    values: Vec<usize>,
}

impl Permutation {
    pub fn new(values: Vec<usize>) -> Result<Permutation> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v == 0 || v > n {
                return Err(Error::NotPermutation {
                    n,
                    reason: format!("value {v} outside 1..={n}"),
                });
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::NotPermutation {
                    n,
                    reason: format!("value {v} repeated"),
                });
            }
        }
        Ok(Permutation { values })
    }

    pub fn identity(n: usize) -> Permutation {
        Permutation {
            values: (1..=n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `π(1), ..., π(n)`.
    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// 0-based position of each value: `positions()[v - 1]`.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.len()];
        for (i, &v) in self.values.iter().enumerate() {
            pos[v - 1] = i;
        }
        pos
    }

    /// `π` read right to left.
    pub fn reversed(&self) -> Permutation {
        let mut values = self.values.clone();
        values.reverse();
        Permutation { values }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Unit intervals `[l, l+1]`, kept sorted by left endpoint. All `2n`
/// endpoints are pairwise distinct.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalSet {
    lefts: Vec<Rational>,
}

impl IntervalSet {
    pub fn new(mut lefts: Vec<Rational>) -> Result<IntervalSet> {
        if lefts.is_empty() {
            return Err(Error::TooFewVertices { min: 1, found: 0 });
        }
        lefts.sort();
        let one = Rational::from_integer(1);
        let mut endpoints: Vec<Rational> = lefts.iter().flat_map(|&l| [l, l + one]).collect();
        endpoints.sort();
        if let Some(w) = endpoints.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEndpoint(w[0].to_string()));
        }
        Ok(IntervalSet { lefts })
    }

    pub fn len(&self) -> usize {
        self.lefts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lefts.is_empty()
    }

    pub fn lefts(&self) -> &[Rational] {
        &self.lefts
    }
}

impl Serialize for IntervalSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.lefts.iter().map(|l| l.to_string()))
    }
}

/// 3-uniform hypergraph on `0..n`. Hyperedges are stored as sorted triples
/// in input order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Hypergraph3 {
    n: usize,
    edges: Vec<[usize; 3]>,
}

impl Hypergraph3 {
    pub fn new(n: usize, edges: Vec<[usize; 3]>) -> Result<Hypergraph3> {
        let mut seen = HashSet::with_capacity(edges.len());
        let mut sorted = Vec::with_capacity(edges.len());
        for mut e in edges {
            e.sort_unstable();
            if e[2] >= n {
                return Err(Error::VertexOutOfRange { vertex: e[2], n });
            }
            if e[0] == e[1] || e[1] == e[2] {
                return Err(Error::InvalidHyperedge(format!(
                    "{{{}, {}, {}}} repeats a vertex",
                    e[0], e[1], e[2]
                )));
            }
            if !seen.insert(e) {
                return Err(Error::InvalidHyperedge(format!(
                    "{{{}, {}, {}}} listed twice",
                    e[0], e[1], e[2]
                )));
            }
            sorted.push(e);
        }
        Ok(Hypergraph3 { n, edges: sorted })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[[usize; 3]] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }
}

/// `Q_n`: vertices are `0..2^n`, adjacent at Hamming distance one.
pub fn hypercube(n: usize) -> Result<Graph> {
    // Q_14 already needs a 16384 x 16384 bit matrix (32 MiB)
    if !(1..=14).contains(&n) {
        return Err(Error::OutOfRange {
            what: "hypercube dimension",
            value: n as i64,
            range: "1..=14",
        });
    }
    let mut edges = Vec::with_capacity(n << (n - 1));
    for u in 0..1usize << n {
        for b in 0..n {
            let v = u ^ (1 << b);
            if u < v {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(1 << n, &edges)
}

/// Vertex `v` is the value `v + 1`; edges are the inversions of `p`.
pub fn permutation_graph(p: &Permutation) -> Graph {
    let pos = p.positions();
    Graph::from_fn(p.len(), |a, b| pos[a] > pos[b])
}

/// Vertices in left-endpoint order; adjacent iff the lefts differ by less
/// than one.
pub fn unit_interval_graph(iv: &IntervalSet) -> Graph {
    let one = Rational::from_integer(1);
    let l = iv.lefts();
    Graph::from_fn(l.len(), |a, b| l[b] - l[a] < one)
}

/// Line graph with its vertices named by the (lexicographically ordered)
/// edges of `g`.
pub fn line_graph(g: &Graph) -> Result<(Graph, Vec<(usize, usize)>)> {
    let edges = g.edges();
    if edges.is_empty() {
        return Err(Error::NoEdges);
    }
    let shares = |e: (usize, usize), f: (usize, usize)| e.0 == f.0 || e.0 == f.1 || e.1 == f.0 || e.1 == f.1;
    let lg = Graph::from_fn(edges.len(), |i, j| shares(edges[i], edges[j]));
    Ok((lg, edges))
}

/// Bipartite `D_n`: `A = 0..n`, and vertex `n + c` for each `c < 2^n` is
/// joined to the members of `A` whose bit is set in `c`.
pub fn shattering_graph(n: usize) -> Result<Graph> {
    if !(1..=12).contains(&n) {
        return Err(Error::OutOfRange {
            what: "shattering graph size",
            value: n as i64,
            range: "1..=12",
        });
    }
    let mut edges = Vec::new();
    for c in 0..1usize << n {
        for a in 0..n {
            if c >> a & 1 == 1 {
                edges.push((a, n + c));
            }
        }
    }
    Graph::from_edge_list(n + (1 << n), &edges)
}

/// The `(t+1)^2`-point permutation whose graph has `sd >= t`.
///
/// The grid `0..=t` squared is sheared to `X = i(t+1) - j`, `Y = i + j(t+1)`
/// (integer coordinates, all `X` and all `Y` distinct); the permutation lists
/// the `Y`-ranks in increasing `X` order.
pub fn sd_construction(t: usize) -> Result<Permutation> {
    if !(1..=1000).contains(&t) {
        return Err(Error::OutOfRange {
            what: "t",
            value: t as i64,
            range: "1..=1000",
        });
    }
    let s = t as i64 + 1;
    let mut points: Vec<(i64, i64)> = Vec::with_capacity((s * s) as usize);
    for i in 0..s {
        for j in 0..s {
            points.push((i * s - j, i + j * s));
        }
    }
    let mut ys: Vec<i64> = points.iter().map(|p| p.1).collect();
    ys.sort_unstable();
    points.sort_unstable();
    let values = points
        .iter()
        .map(|&(_, y)| ys.binary_search(&y).expect("y present") + 1)
        .collect();
    Permutation::new(values)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "step", content = "vertex", rename_all = "snake_case")]
pub enum DhStep {
    Pendant(usize),
    TrueTwin(usize),
    FalseTwin(usize),
}

/// Builds a distance-hereditary graph from `K_1` by adding pendant vertices
/// and twins. Step `k` creates vertex `k + 1`.
pub fn distance_hereditary(script: &[DhStep]) -> Result<Graph> {
    let n = script.len() + 1;
    let mut adj: Vec<HashSet<usize>> = vec![HashSet::new(); n];
    for (k, step) in script.iter().enumerate() {
        let new = k + 1;
        let (DhStep::Pendant(u) | DhStep::TrueTwin(u) | DhStep::FalseTwin(u)) = *step;
        if u >= new {
            return Err(Error::VertexOutOfRange { vertex: u, n: new });
        }
        let joined: Vec<usize> = match step {
            DhStep::Pendant(_) => vec![u],
            DhStep::FalseTwin(_) => adj[u].iter().copied().collect(),
            DhStep::TrueTwin(_) => adj[u].iter().copied().chain([u]).collect(),
        };
        for w in joined {
            adj[w].insert(new);
            adj[new].insert(w);
        }
    }
    Ok(Graph::from_fn(n, |a, b| adj[a].contains(&b)))
}

pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Precondition(format!("edge probability {p} outside [0, 1]")));
    }
    let mut rng = rng::seeded(seed);
    Ok(Graph::from_fn(n, |_, _| rng.gen::<f64>() < p))
}

pub fn random_permutation(n: usize, seed: u64) -> Permutation {
    let mut values: Vec<usize> = (1..=n).collect();
    values.shuffle(&mut rng::seeded(seed));
    Permutation { values }
}

/// Common denominator of generated interval endpoints (prime, so that every
/// residue gives a distinct fractional part).
pub const INTERVAL_DENOMINATOR: i64 = 1_000_003;

/// Lefts `k + r/Q` with integer parts `k < max(1, n/4)` and pairwise distinct
/// residues `r`: no two lefts differ by an integer, so all endpoints are
/// distinct by construction.
pub fn random_unit_intervals(n: usize, seed: u64) -> Result<IntervalSet> {
    if !(1..=100_000).contains(&n) {
        return Err(Error::OutOfRange {
            what: "interval count",
            value: n as i64,
            range: "1..=100000",
        });
    }
    let mut rng = rng::seeded(seed);
    let spread = (n / 4).max(1) as i64;
    let mut residues = HashSet::with_capacity(n);
    let mut lefts = Vec::with_capacity(n);
    while lefts.len() < n {
        let r = rng.gen_range(0..INTERVAL_DENOMINATOR);
        if residues.insert(r) {
            let k = rng.gen_range(0..spread);
            lefts.push(Rational::new(k * INTERVAL_DENOMINATOR + r, INTERVAL_DENOMINATOR));
        }
    }
    IntervalSet::new(lefts)
}

/// `m` distinct uniformly random triples on `0..n`.
pub fn random_3_hypergraph(n: usize, m: usize, seed: u64) -> Result<Hypergraph3> {
    let total = n * n.saturating_sub(1) * n.saturating_sub(2) / 6;
    if n < 3 || m > total {
        return Err(Error::Precondition(format!(
            "cannot draw {m} distinct triples from {n} vertices"
        )));
    }
    let mut rng = rng::seeded(seed);
    let mut edges = Vec::with_capacity(m);
    if 2 * m > total {
        let mut all = Vec::with_capacity(total);
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    all.push([a, b, c]);
                }
            }
        }
        all.shuffle(&mut rng);
        all.truncate(m);
        edges = all;
    } else {
        let mut seen = HashSet::with_capacity(m);
        while edges.len() < m {
            let mut e = [rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n)];
            e.sort_unstable();
            if e[0] != e[1] && e[1] != e[2] && seen.insert(e) {
                edges.push(e);
            }
        }
    }
    Hypergraph3::new(n, edges)
}

/// Random script of `steps` operations, each on a uniformly chosen
/// existing vertex.
pub fn random_dh_script(steps: usize, seed: u64) -> Vec<DhStep> {
    let mut rng = rng::seeded(seed);
    (0..steps)
        .map(|k| {
            let u = rng.gen_range(0..=k);
            match rng.gen_range(0..3) {
                0 => DhStep::Pendant(u),
                1 => DhStep::TrueTwin(u),
                _ => DhStep::FalseTwin(u),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params;

    fn perm(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    fn r(a: i64, b: i64) -> Rational {
        Rational::new(a, b)
    }

    #[test]
    fn permutation_validation() {
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::new(vec![3, 1]).is_err());
        assert_eq!(perm(&[2, 1]).positions(), vec![1, 0]);
    }

    #[test]
    fn hypercube_examples() {
        assert_eq!(hypercube(1).unwrap(), Graph::complete(2));
        let q3 = hypercube(3).unwrap();
        assert_eq!((q3.n(), q3.edge_count()), (8, 12));
        assert!((0..8).all(|v| q3.degree(v) == 3));
        assert_eq!(params::degeneracy(&hypercube(4).unwrap()).unwrap().value, 4);
        assert!(hypercube(0).is_err());
        assert!(hypercube(15).is_err());
    }

    #[test]
    fn permutation_graph_examples() {
        assert_eq!(permutation_graph(&Permutation::identity(5)).edge_count(), 0);
        assert_eq!(permutation_graph(&perm(&[5, 4, 3, 2, 1])), Graph::complete(5));
        let g = permutation_graph(&perm(&[6, 1, 4, 2, 5, 3]));
        let mut edges: Vec<(usize, usize)> = g.edges().into_iter().map(|(a, b)| (a + 1, b + 1)).collect();
        edges.sort();
        let mut expected = vec![(1, 6), (2, 6), (3, 6), (4, 6), (5, 6), (2, 4), (3, 4), (3, 5)];
        expected.sort();
        assert_eq!(edges, expected);
        let n4: Vec<usize> = g.neighbors(3).iter().map(|v| v + 1).collect();
        assert_eq!(n4, vec![2, 3, 6]);
    }

    #[test]
    fn reversal_complements() {
        for seed in 0..10 {
            let p = random_permutation(8, seed);
            assert_eq!(permutation_graph(&p.reversed()), permutation_graph(&p).complement());
        }
    }

    #[test]
    fn unit_interval_examples() {
        let g = unit_interval_graph(&IntervalSet::new(vec![r(0, 1), r(1, 2), r(2, 1)]).unwrap());
        assert_eq!(g.edges(), vec![(0, 1)]);
        let k3 = unit_interval_graph(&IntervalSet::new(vec![r(0, 1), r(2, 5), r(4, 5)]).unwrap());
        assert_eq!(k3, Graph::complete(3));
        assert_eq!(
            IntervalSet::new(vec![r(0, 1), r(1, 1)]),
            Err(Error::DuplicateEndpoint("1".into()))
        );
        // lefts are sorted on construction
        let iv = IntervalSet::new(vec![r(3, 1), r(1, 3)]).unwrap();
        assert_eq!(iv.lefts(), &[r(1, 3), r(3, 1)]);
    }

    #[test]
    fn line_graph_examples() {
        let (l, names) = line_graph(&Graph::star(3)).unwrap();
        assert_eq!(l, Graph::complete(3));
        assert_eq!(names, vec![(0, 1), (0, 2), (0, 3)]);
        assert_eq!(line_graph(&Graph::path(4)).unwrap().0, Graph::path(3));
        let (c, _) = line_graph(&Graph::cycle(5)).unwrap();
        assert!((0..5).all(|v| c.degree(v) == 2));
        assert_eq!(c.edge_count(), 5);
        assert!(line_graph(&Graph::empty(3)).is_err());
    }

    #[test]
    fn shattering_examples() {
        let d1 = shattering_graph(1).unwrap();
        assert_eq!((d1.n(), d1.edge_count()), (3, 1));
        assert_eq!(shattering_graph(2).unwrap().n(), 6);
        for n in 1..=4 {
            assert_eq!(params::vc_dimension(&shattering_graph(n).unwrap()).unwrap().value, n);
        }
        assert!(shattering_graph(13).is_err());
    }

    #[test]
    fn sd_construction_examples() {
        assert_eq!(sd_construction(1).unwrap().values(), &[3, 1, 4, 2]);
        assert_eq!(sd_construction(2).unwrap().values(), &[7, 4, 1, 8, 5, 2, 9, 6, 3]);
        assert_eq!(sd_construction(6).unwrap().len(), 49);
        assert!(sd_construction(0).is_err());
    }

    #[test]
    fn distance_hereditary_examples() {
        assert_eq!(distance_hereditary(&[]).unwrap(), Graph::empty(1));
        assert_eq!(
            distance_hereditary(&[DhStep::Pendant(0), DhStep::Pendant(0)]).unwrap(),
            Graph::star(2)
        );
        let g = distance_hereditary(&[DhStep::Pendant(0), DhStep::TrueTwin(1), DhStep::FalseTwin(0)]).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]);
        assert!(distance_hereditary(&[DhStep::Pendant(1)]).is_err());
    }

    #[test]
    fn random_generators() {
        assert_eq!(random_graph(5, 0.0, 3).unwrap().edge_count(), 0);
        assert_eq!(random_graph(5, 1.0, 3).unwrap(), Graph::complete(5));
        assert!(random_graph(5, 1.5, 3).is_err());
        assert_eq!(random_permutation(9, 1), random_permutation(9, 1));
        let iv = random_unit_intervals(100, 4).unwrap();
        assert_eq!(iv.len(), 100);
        let h = random_3_hypergraph(10, 100, 2).unwrap();
        assert_eq!(h.edge_count(), 100);
        assert_eq!(
            random_3_hypergraph(60, 80, 9).unwrap(),
            random_3_hypergraph(60, 80, 9).unwrap()
        );
        assert!(random_3_hypergraph(4, 5, 0).is_err());
    }

    #[test]
    fn hypergraph_validation() {
        assert!(Hypergraph3::new(4, vec![[0, 1, 1]]).is_err());
        assert!(Hypergraph3::new(4, vec![[0, 1, 4]]).is_err());
        assert!(Hypergraph3::new(4, vec![[0, 1, 2], [2, 1, 0]]).is_err());
        assert_eq!(Hypergraph3::new(4, vec![[2, 0, 1]]).unwrap().edges(), &[[0, 1, 2]]);
    }
}
