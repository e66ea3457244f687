//! Degeneracy by minimum-degree peeling and VC-dimension of the closed
//! neighbourhood set system.

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegeneracyResult {
    pub value: usize,
    /// Removal order; each vertex has at most `value` neighbours later in it.
    pub order: Vec<usize>,
}

impl DegeneracyResult {
    /// Re-checks the elimination order against `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        if self.order.len() != g.n() {
            return false;
        }
        let mut alive = VertexSet::full(g.n());
        for &v in &self.order {
            if !alive.contains(v) {
                return false;
            }
            alive.remove(v);
            if g.neighbors(v).intersection_len(&alive) > self.value {
                return false;
            }
        }
        true
    }
}

/// Exact degeneracy. A bucket queue keyed by current degree yields the
/// minimum-degree vertex in O(1) amortised; each bucket is a sorted set so
/// ties go to the lowest index.
pub fn degeneracy(g: &Graph) -> Result<DegeneracyResult> {
    let n = g.n();
    if n == 0 {
        return Err(Error::TooFewVertices { min: 1, found: 0 });
    }
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let max_deg = deg.iter().copied().max().unwrap_or(0);
    let mut buckets: Vec<std::collections::BTreeSet<usize>> = vec![Default::default(); max_deg + 1];
    for v in 0..n {
        buckets[deg[v]].insert(v);
    }
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut value = 0;
    let mut cursor: usize = 0;
    for _ in 0..n {
        // a removal lowers neighbour degrees by one, so the minimum can drop
        // by at most one per step
        cursor = cursor.saturating_sub(1);
        while buckets[cursor].is_empty() {
            cursor += 1;
        }
        let v = buckets[cursor].pop_first().expect("nonempty bucket");
        value = value.max(cursor);
        removed[v] = true;
        order.push(v);
        for w in g.neighbors(v).iter() {
            if !removed[w] {
                buckets[deg[w]].remove(&w);
                deg[w] -= 1;
                buckets[deg[w]].insert(w);
            }
        }
    }
    Ok(DegeneracyResult { value, order })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VcResult {
    pub value: usize,
    pub shattered: Vec<usize>,
}

fn floor_log2(n: usize) -> usize {
    if n == 0 {
        0
    } else {
        (usize::BITS - 1 - n.leading_zeros()) as usize
    }
}

/// Whether the closed neighbourhoods of `g` realise all `2^|a|` traces on `a`.
pub fn is_shattered(g: &Graph, a: &[usize]) -> bool {
    let d = a.len();
    if d >= 24 || (d > 0 && (1usize << d) > g.n()) {
        return false;
    }
    let mut seen = vec![false; 1 << d];
    let mut distinct = 0;
    for v in 0..g.n() {
        let trace = trace_of(g, v, a);
        if !seen[trace] {
            seen[trace] = true;
            distinct += 1;
        }
    }
    distinct == 1 << d
}

fn trace_of(g: &Graph, v: usize, a: &[usize]) -> usize {
    a.iter()
        .enumerate()
        .filter(|&(_, &x)| x == v || g.has_edge(v, x))
        .fold(0, |acc, (i, _)| acc | 1 << i)
}

struct VcSearch<'a> {
    g: &'a Graph,
    cap: usize,
    best: Vec<usize>,
}

impl VcSearch<'_> {
    // Shattered sets are closed under subsets, so extending only shattered
    // prefixes in increasing vertex order visits every shattered set once, in
    // lexicographic order.
    fn extend(&mut self, current: &mut Vec<usize>) {
        if current.len() > self.best.len() {
            self.best = current.clone();
        }
        if current.len() == self.cap {
            return;
        }
        let start = current.last().map_or(0, |&l| l + 1);
        for v in start..self.g.n() {
            // not enough vertices left to beat the incumbent
            if current.len() + (self.g.n() - v) <= self.best.len() {
                break;
            }
            current.push(v);
            if self.shattered_with_pruning(current) {
                self.extend(current);
            }
            current.pop();
            if self.best.len() == self.cap {
                return;
            }
        }
    }

    fn shattered_with_pruning(&self, a: &[usize]) -> bool {
        let need = 1usize << a.len();
        let mut seen = vec![false; need];
        let mut distinct = 0;
        let n = self.g.n();
        for v in 0..n {
            if distinct + (n - v) < need {
                return false;
            }
            let t = trace_of(self.g, v, a);
            if !seen[t] {
                seen[t] = true;
                distinct += 1;
                if distinct == need {
                    return true;
                }
            }
        }
        distinct == need
    }
}

/// Exact VC-dimension of `{N[v]}`, with the lexicographically smallest
/// maximum shattered set. Bounded by `floor(log2 n)`.
pub fn vc_dimension(g: &Graph) -> Result<VcResult> {
    if g.n() == 0 {
        return Err(Error::TooFewVertices { min: 1, found: 0 });
    }
    let mut search = VcSearch {
        g,
        cap: floor_log2(g.n()),
        best: Vec::new(),
    };
    search.extend(&mut Vec::new());
    Ok(VcResult {
        value: search.best.len(),
        shattered: search.best,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degeneracy_examples() {
        assert_eq!(degeneracy(&Graph::complete(5)).unwrap().value, 4);
        assert_eq!(degeneracy(&Graph::path(7)).unwrap().value, 1);
        assert_eq!(degeneracy(&Graph::star(6)).unwrap().value, 1);
        for n in 1..8 {
            let r = degeneracy(&Graph::complete(n)).unwrap();
            assert_eq!(r.value, n - 1);
            assert!(r.verify(&Graph::complete(n)));
        }
        for n in 3..10 {
            assert_eq!(degeneracy(&Graph::cycle(n)).unwrap().value, 2);
        }
        assert!(degeneracy(&Graph::empty(0)).is_err());
    }

    #[test]
    fn degeneracy_order_ties_lowest_index() {
        let r = degeneracy(&Graph::empty(4)).unwrap();
        assert_eq!(r.order, vec![0, 1, 2, 3]);
        assert_eq!(r.value, 0);
    }

    #[test]
    fn vc_examples() {
        let c5 = vc_dimension(&Graph::cycle(5)).unwrap();
        assert_eq!(c5.value, 2);
        assert_eq!(c5.shattered, vec![0, 1]);
        assert!(is_shattered(&Graph::cycle(5), &[0, 1]));
        assert_eq!(vc_dimension(&Graph::empty(1)).unwrap().value, 0);
        assert!(!is_shattered(&Graph::empty(1), &[0]));
        // K_n: every N[v] is everything, only the full trace
        assert_eq!(vc_dimension(&Graph::complete(8)).unwrap().value, 0);
    }
}
