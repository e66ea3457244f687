//! Shared max-min sweep over induced subgraphs, used by both `fun(G)` and
//! `sd(G)`.

use rayon::prelude::*;

use crate::bitset::VertexSet;
use crate::graph::Graph;

/// Hard cap for exhaustive sweeps; subsets are enumerated as `u32` masks.
pub const MAX_EXACT: usize = 30;

pub(crate) struct SubsetBest<T> {
    pub value: usize,
    pub members: Vec<usize>,
    pub payload: T,
}

/// Next mask with the same popcount (Gosper's hack).
fn next_same_popcount(x: u32) -> u32 {
    let c = x & x.wrapping_neg();
    let r = x + c;
    (((r ^ x) >> 2) / c) | r
}

fn masks_of_size(n: usize, size: usize) -> Vec<u32> {
    if size == 0 || size > n {
        return Vec::new();
    }
    // n <= MAX_EXACT keeps every intermediate below 2^31
    let limit = 1u32 << n;
    let mut m = (1u32 << size) - 1;
    let mut out = Vec::new();
    while m < limit {
        out.push(m);
        m = next_same_popcount(m);
    }
    out
}

fn members(mask: u32) -> Vec<usize> {
    (0..32).filter(|i| mask >> i & 1 == 1).collect()
}

/// Maximises a hereditary-style parameter over induced subgraphs with at
/// least `min_size` vertices.
///
/// Sizes are swept from `n` downwards. `size_bound(s)` must bound the
/// parameter of every `s`-vertex subgraph; once the best value reaches it the
/// remaining (smaller) sizes are skipped. `eval(h, above)` returns the value
/// of `h` when it strictly exceeds `above` (any value when `above` is `None`).
///
/// Within a size level, subsets are evaluated in parallel and reduced
/// deterministically: larger value wins, then the lexicographically smallest
/// member list. A smaller subset only replaces the incumbent when it is
/// strictly better, so the report is the largest subgraph attaining the max.
pub(crate) fn max_min_over_subsets<T, B, E>(g: &Graph, min_size: usize, size_bound: B, eval: E) -> Option<SubsetBest<T>>
where
    T: Send,
    B: Fn(usize) -> usize,
    E: Fn(&Graph, Option<usize>) -> Option<(usize, T)> + Sync,
{
    let n = g.n();
    assert!(n <= MAX_EXACT, "exhaustive sweep over {n} vertices");
    let mut best: Option<SubsetBest<T>> = None;
    for size in (min_size.max(1)..=n).rev() {
        let above = best.as_ref().map(|b| b.value);
        if let Some(a) = above {
            if a >= size_bound(size) {
                break;
            }
        }
        let level: Vec<(Vec<usize>, usize, T)> = masks_of_size(n, size)
            .into_par_iter()
            .filter_map(|mask| {
                let mem = members(mask);
                let set = VertexSet::from_iter(n, mem.iter().copied());
                let (h, _) = g.induced_subgraph(&set).expect("nonempty subset");
                eval(&h, above).map(|(v, t)| (mem, v, t))
            })
            .collect();
        let winner = level
            .into_iter()
            .reduce(|a, b| if b.1 > a.1 || (b.1 == a.1 && b.0 < a.0) { b } else { a });
        if let Some((mem, value, payload)) = winner {
            if above.is_none_or(|a| value > a) {
                best = Some(SubsetBest {
                    value,
                    members: mem,
                    payload,
                });
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mask_enumeration_counts() {
        assert_eq!(masks_of_size(5, 2).len(), 10);
        assert_eq!(masks_of_size(5, 5), vec![0b11111]);
        assert_eq!(masks_of_size(14, 7).len(), 3432);
        assert!(masks_of_size(3, 4).is_empty());
    }

    #[test]
    fn sweep_finds_largest_clique() {
        // parameter: clique size; every subset evaluated
        let g = Graph::from_edge_list(5, &[(0, 1), (1, 2), (0, 2), (3, 4)]).unwrap();
        let best = max_min_over_subsets(
            &g,
            1,
            |s| s,
            |h, above| {
                let k = h.n();
                let clique = h.edge_count() == k * (k - 1) / 2;
                (clique && above.is_none_or(|a| k > a)).then_some((k, ()))
            },
        )
        .unwrap();
        assert_eq!(best.value, 3);
        assert_eq!(best.members, vec![0, 1, 2]);
    }
}
