//! Naive reference computations over a plain adjacency matrix, written
//! straight from the definitions. Nothing here calls into the library beyond
//! reading the edge list.

#![allow(dead_code)]

use funcgraph::Graph;

pub struct Adj {
    pub n: usize,
    m: Vec<Vec<bool>>,
}

impl Adj {
    pub fn of(g: &Graph) -> Adj {
        let n = g.n();
        let mut m = vec![vec![false; n]; n];
        for (u, v) in g.edges() {
            m[u][v] = true;
            m[v][u] = true;
        }
        Adj { n, m }
    }

    pub fn adj(&self, u: usize, v: usize) -> bool {
        self.m[u][v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.m[v].iter().filter(|&&b| b).count()
    }
}

fn members(mask: u32) -> Vec<usize> {
    (0..32).filter(|i| mask >> i & 1 == 1).collect()
}

/// Masks over `n` bits ordered by popcount, then numerically.
fn masks_by_size(n: usize) -> Vec<u32> {
    let mut all: Vec<u32> = (0..1u32 << n).collect();
    all.sort_by_key(|m| (m.count_ones(), *m));
    all
}

/// `y` is determined by `s` inside `within` (a vertex mask).
pub fn determines(a: &Adj, within: u32, y: usize, s: u32) -> bool {
    let rest: Vec<usize> = members(within & !s & !(1 << y));
    for (i, &z) in rest.iter().enumerate() {
        for &w in &rest[i + 1..] {
            let same = members(s).iter().all(|&x| a.adj(x, z) == a.adj(x, w));
            if same && a.adj(y, z) != a.adj(y, w) {
                return false;
            }
        }
    }
    true
}

pub fn fun_vertex_in(a: &Adj, within: u32, y: usize) -> usize {
    masks_by_size(a.n)
        .into_iter()
        .filter(|&s| s & !within == 0 && s >> y & 1 == 0)
        .find(|&s| determines(a, within, y, s))
        .map(|s| s.count_ones() as usize)
        .expect("the full complement always works")
}

pub fn fun_vertex(a: &Adj, y: usize) -> usize {
    fun_vertex_in(a, full(a.n), y)
}

pub fn min_fun_in(a: &Adj, within: u32) -> usize {
    members(within)
        .into_iter()
        .map(|y| fun_vertex_in(a, within, y))
        .min()
        .unwrap()
}

pub fn fun_graph(a: &Adj) -> usize {
    (1..1u32 << a.n).map(|s| min_fun_in(a, s)).max().unwrap_or(0)
}

pub fn full(n: usize) -> u32 {
    if n == 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

pub fn sd_in(a: &Adj, within: u32, x: usize, y: usize) -> usize {
    members(within)
        .into_iter()
        .filter(|&z| z != x && z != y && a.adj(x, z) != a.adj(y, z))
        .count()
}

pub fn min_sd_in(a: &Adj, within: u32) -> usize {
    let vs = members(within);
    let mut best = usize::MAX;
    for (i, &x) in vs.iter().enumerate() {
        for &y in &vs[i + 1..] {
            best = best.min(sd_in(a, within, x, y));
        }
    }
    best
}

pub fn sd_graph(a: &Adj) -> usize {
    (1..1u32 << a.n)
        .filter(|s| s.count_ones() >= 2)
        .map(|s| min_sd_in(a, s))
        .max()
        .unwrap_or(0)
}

/// Smallest `k` such that repeatedly deleting a vertex of degree <= k
/// empties the graph.
pub fn degeneracy(a: &Adj) -> usize {
    (0..a.n.max(1))
        .find(|&k| {
            let mut alive = full(a.n);
            loop {
                let low = members(alive)
                    .into_iter()
                    .find(|&v| members(alive).iter().filter(|&&w| a.adj(v, w)).count() <= k);
                match low {
                    Some(v) => alive &= !(1 << v),
                    None => return alive == 0,
                }
            }
        })
        .unwrap_or(0)
}

pub fn shattered(a: &Adj, set: &[usize]) -> bool {
    let mut seen = std::collections::BTreeSet::new();
    for v in 0..a.n {
        let trace: Vec<bool> = set.iter().map(|&x| x == v || a.adj(v, x)).collect();
        seen.insert(trace);
    }
    seen.len() == 1 << set.len()
}

pub fn vc_dimension(a: &Adj) -> usize {
    assert!(a.n <= 20);
    masks_by_size(a.n)
        .into_iter()
        .filter(|&s| shattered(a, &members(s)))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Small seeded graphs covering the densities used throughout the tests.
pub fn small_graphs(count: usize, max_n: usize, seed: u64) -> Vec<Graph> {
    (0..count)
        .map(|i| {
            let n = 2 + i % (max_n - 1);
            let p = [0.2, 0.5, 0.8][i % 3];
            funcgraph::families::random_graph(n, p, seed.wrapping_add(i as u64)).unwrap()
        })
        .collect()
}

/// Minimum pairwise symmetric difference over the whole vertex set, for
/// graphs too large for the mask-based helpers.
pub fn min_sd_all_pairs(a: &Adj) -> usize {
    let mut best = usize::MAX;
    for x in 0..a.n {
        for y in x + 1..a.n {
            let d = (0..a.n)
                .filter(|&z| z != x && z != y && a.adj(x, z) != a.adj(y, z))
                .count();
            best = best.min(d);
        }
    }
    best
}
