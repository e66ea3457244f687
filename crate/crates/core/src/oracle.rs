//! Brute-force reference implementations.
//!
//! Everything here reads the graph only through [`Graph::has_edge`] and
//! enumerates subsets directly from the definitions, sharing no code with the
//! search routines. Exponential; intended for `n <= 12` or so.

use crate::graph::Graph;
use crate::witnesses::DnfWitness;

/// Every `k`-subset of `items`, in lexicographic order.
pub fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    fn rec(items: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i]);
            rec(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(items, k, 0, &mut Vec::new(), &mut out);
    out
}

/// Whether `y` is a function of `s` within the vertex set `within`: no two
/// outside vertices share a profile over `s` yet differ on `y`.
pub fn is_function_of_within(g: &Graph, within: &[usize], y: usize, s: &[usize]) -> bool {
    let outside: Vec<usize> = within.iter().copied().filter(|&z| z != y && !s.contains(&z)).collect();
    for (i, &z) in outside.iter().enumerate() {
        for &w in &outside[i + 1..] {
            let same = s.iter().all(|&x| g.has_edge(x, z) == g.has_edge(x, w));
            if same && g.has_edge(y, z) != g.has_edge(y, w) {
                return false;
            }
        }
    }
    true
}

pub fn is_function_of(g: &Graph, y: usize, s: &[usize]) -> bool {
    let all: Vec<usize> = (0..g.n()).collect();
    is_function_of_within(g, &all, y, s)
}

/// `fun(y)` in the subgraph induced by `within`, by increasing-size search.
pub fn fun_vertex_within(g: &Graph, within: &[usize], y: usize) -> usize {
    let others: Vec<usize> = within.iter().copied().filter(|&v| v != y).collect();
    for k in 0..=others.len() {
        if combinations(&others, k)
            .iter()
            .any(|s| is_function_of_within(g, within, y, s))
        {
            return k;
        }
    }
    unreachable!("the full complement is always a support")
}

pub fn fun_vertex(g: &Graph, y: usize) -> usize {
    let all: Vec<usize> = (0..g.n()).collect();
    fun_vertex_within(g, &all, y)
}

pub fn min_fun_within(g: &Graph, within: &[usize]) -> usize {
    within
        .iter()
        .map(|&y| fun_vertex_within(g, within, y))
        .min()
        .expect("nonempty")
}

pub fn min_fun(g: &Graph) -> usize {
    let all: Vec<usize> = (0..g.n()).collect();
    min_fun_within(g, &all)
}

fn nonempty_subsets(n: usize, min_size: usize) -> impl Iterator<Item = Vec<usize>> {
    assert!(n < 25, "oracle subset sweep over {n} vertices");
    (1u32..1 << n)
        .map(move |mask| (0..n).filter(|&i| mask >> i & 1 == 1).collect::<Vec<_>>())
        .filter(move |s| s.len() >= min_size)
}

/// `fun(G)`: maximum of `min_fun` over all nonempty vertex subsets.
pub fn fun_graph(g: &Graph) -> usize {
    nonempty_subsets(g.n(), 1)
        .map(|s| min_fun_within(g, &s))
        .max()
        .unwrap_or(0)
}

/// `|N(x) xor N(y)|` without `x`, `y`, restricted to `within`.
pub fn sd_pair_within(g: &Graph, within: &[usize], x: usize, y: usize) -> usize {
    within
        .iter()
        .filter(|&&z| z != x && z != y && g.has_edge(x, z) != g.has_edge(y, z))
        .count()
}

pub fn sd_pair(g: &Graph, x: usize, y: usize) -> usize {
    let all: Vec<usize> = (0..g.n()).collect();
    sd_pair_within(g, &all, x, y)
}

pub fn min_sd_within(g: &Graph, within: &[usize]) -> usize {
    let mut best = usize::MAX;
    for (i, &x) in within.iter().enumerate() {
        for &y in &within[i + 1..] {
            best = best.min(sd_pair_within(g, within, x, y));
        }
    }
    best
}

pub fn min_sd(g: &Graph) -> usize {
    let all: Vec<usize> = (0..g.n()).collect();
    min_sd_within(g, &all)
}

/// `sd(G)` over subsets with at least two vertices.
pub fn sd_graph(g: &Graph) -> usize {
    nonempty_subsets(g.n(), 2)
        .map(|s| min_sd_within(g, &s))
        .max()
        .unwrap_or(0)
}

/// Degeneracy as the largest minimum degree of an induced subgraph.
pub fn degeneracy(g: &Graph) -> usize {
    nonempty_subsets(g.n(), 1)
        .map(|s| {
            s.iter()
                .map(|&v| s.iter().filter(|&&w| g.has_edge(v, w)).count())
                .min()
                .expect("nonempty")
        })
        .max()
        .unwrap_or(0)
}

pub fn is_shattered(g: &Graph, a: &[usize]) -> bool {
    let mut traces = std::collections::HashSet::new();
    for v in 0..g.n() {
        let t: Vec<bool> = a.iter().map(|&x| x == v || g.has_edge(v, x)).collect();
        traces.insert(t);
    }
    traces.len() == 1 << a.len()
}

/// Largest `d` such that some `d`-set is shattered by closed neighbourhoods.
pub fn vc_dimension(g: &Graph) -> usize {
    let all: Vec<usize> = (0..g.n()).collect();
    let mut best = 0;
    for d in 1..=g.n() {
        if 1usize << d > g.n() {
            break;
        }
        if combinations(&all, d).iter().any(|a| is_shattered(g, a)) {
            best = d;
        } else {
            // shattering is hereditary: no d-set means no larger one
            break;
        }
    }
    best
}

/// Replays a DNF witness directly from its definition.
pub fn dnf_holds(g: &Graph, w: &DnfWitness) -> bool {
    (0..g.n())
        .filter(|&z| z != w.target && !w.support.contains(&z))
        .all(|z| {
            let value = w
                .terms
                .iter()
                .any(|term| term.iter().all(|&i| g.has_edge(w.support[i], z)));
            value == g.has_edge(w.target, z)
        })
}
