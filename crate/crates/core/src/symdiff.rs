//! Pairwise symmetric difference `sd(x,y) = |N(x) xor N(y)|` (excluding
//! `x` and `y`) and its max-min graph parameter.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::subsets;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SdResult {
    pub value: usize,
    pub pair: (usize, usize),
    /// Vertices of the subgraph the pair lives in (original indices).
    pub subgraph: Vec<usize>,
}

pub fn sd_pair(g: &Graph, x: usize, y: usize) -> Result<usize> {
    Ok(g.sym_diff_neighborhoods(x, y)?.len())
}

/// Minimum `sd` over unordered pairs; lowest pair on ties.
pub fn min_sd(g: &Graph) -> Result<SdResult> {
    let n = g.n();
    if n < 2 {
        return Err(Error::TooFewVertices { min: 2, found: n });
    }
    let mut best: Option<(usize, (usize, usize))> = None;
    'outer: for x in 0..n {
        for y in (x + 1)..n {
            let v = sd_pair(g, x, y)?;
            if best.is_none_or(|(b, _)| v < b) {
                best = Some((v, (x, y)));
                if v == 0 {
                    break 'outer;
                }
            }
        }
    }
    let (value, pair) = best.expect("n >= 2");
    Ok(SdResult {
        value,
        pair,
        subgraph: (0..n).collect(),
    })
}

/// Exact `sd(G)` over induced subgraphs with at least two vertices.
pub fn sd_graph(g: &Graph, exact_limit: usize) -> Result<SdResult> {
    let n = g.n();
    if n < 2 {
        return Err(Error::TooFewVertices { min: 2, found: n });
    }
    if n > exact_limit || n > subsets::MAX_EXACT {
        return Err(Error::ExactLimitExceeded {
            n,
            limit: exact_limit.min(subsets::MAX_EXACT),
        });
    }
    let best = subsets::max_min_over_subsets(
        g,
        2,
        |size| size - 2,
        |h, above| {
            let r = min_sd(h).expect("subgraph has two vertices");
            above.is_none_or(|a| r.value > a).then_some((r.value, r))
        },
    )
    .expect("the full graph is always evaluated");
    let members = best.members;
    let (a, b) = best.payload.pair;
    Ok(SdResult {
        value: best.value,
        pair: (members[a], members[b]),
        subgraph: members,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_examples() {
        let c5 = Graph::cycle(5);
        assert_eq!(sd_pair(&c5, 0, 1).unwrap(), 2);
        assert_eq!(sd_pair(&Graph::star(3), 1, 2).unwrap(), 0);
        assert_eq!(sd_pair(&Graph::complete(2), 0, 1).unwrap(), 0);
        assert_eq!(sd_pair(&c5, 2, 2), Err(Error::SameVertex(2)));
    }

    #[test]
    fn min_sd_examples() {
        assert_eq!(min_sd(&Graph::star(4)).unwrap().value, 0);
        let c5 = min_sd(&Graph::cycle(5)).unwrap();
        assert_eq!(c5.value, 2);
        assert_eq!(c5.pair, (0, 1));
        assert_eq!(
            min_sd(&Graph::empty(1)),
            Err(Error::TooFewVertices { min: 2, found: 1 })
        );
    }

    #[test]
    fn sd_graph_examples() {
        assert_eq!(sd_graph(&Graph::complete(6), 14).unwrap().value, 0);
        assert_eq!(sd_graph(&Graph::cycle(5), 14).unwrap().value, 2);
        assert_eq!(sd_graph(&Graph::path(4), 14).unwrap().value, 1);
        assert!(sd_graph(&Graph::empty(20), 14).is_err());
    }
}
