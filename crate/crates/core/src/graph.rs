//! Simple undirected graphs on dense vertex indices `0..n`.
//!
//! A [`Graph`] stores one neighbourhood bit row per vertex. Rows are symmetric
//! and loop-free by construction, and the value is never mutated afterwards:
//! every derived graph (induced subgraph, line graph, ...) is a new value.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    rows: Vec<VertexSet>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

impl Graph {
    /// Builds a graph from an explicit edge list, rejecting loops,
    /// out-of-range endpoints and repeated (unordered) pairs.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut rows = vec![VertexSet::new(n); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            if rows[u].contains(v) {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            rows[u].insert(v);
            rows[v].insert(u);
        }
        Ok(Graph { n, rows })
    }

    /// Builds a graph whose edges are the pairs `u < v` with `adjacent(u, v)`.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Graph {
        let mut rows = vec![VertexSet::new(n); n];
        for u in 0..n {
            for v in (u + 1)..n {
                if adjacent(u, v) {
                    rows[u].insert(v);
                    rows[v].insert(u);
                }
            }
        }
        Graph { n, rows }
    }

    pub fn empty(n: usize) -> Graph {
        Graph::from_fn(n, |_, _| false)
    }

    pub fn complete(n: usize) -> Graph {
        Graph::from_fn(n, |_, _| true)
    }

    pub fn path(n: usize) -> Graph {
        Graph::from_fn(n, |u, v| v == u + 1)
    }

    /// Cycle `0-1-...-(n-1)-0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        Graph::from_fn(n, |u, v| v == u + 1 || (u == 0 && v == n - 1))
    }

    /// Star with centre 0 and `leaves` leaves.
    pub fn star(leaves: usize) -> Graph {
        Graph::from_fn(leaves + 1, |u, _| u == 0)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    /// Open neighbourhood `N(v)`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.rows[v]
    }

    /// Closed neighbourhood `N[v]`.
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        let mut s = self.rows[v].clone();
        s.insert(v);
        s
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].len()
    }

    /// Number of vertices other than `v` that are not adjacent to `v`.
    pub fn co_degree(&self, v: usize) -> usize {
        self.n - 1 - self.degree(v)
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            out.extend(self.rows[u].iter().filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    fn check_set(&self, s: &VertexSet) -> Result<()> {
        if s.universe() != self.n {
            return Err(Error::Precondition(format!(
                "vertex set over universe {} used with a graph on {} vertices",
                s.universe(),
                self.n
            )));
        }
        Ok(())
    }

    /// Subgraph induced by `s`, with vertices renumbered `0..|s|` in ascending
    /// original order. The second component maps new indices to original ones.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<(Graph, Vec<usize>)> {
        self.check_set(s)?;
        if s.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        let map = s.to_vec();
        let sub = Graph::from_fn(map.len(), |a, b| self.has_edge(map[a], map[b]));
        Ok((sub, map))
    }

    /// `(N(u) xor N(v)) \ {u, v}`.
    pub fn sym_diff_neighborhoods(&self, u: usize, v: usize) -> Result<VertexSet> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SameVertex(u));
        }
        let mut s = self.rows[u].symmetric_difference(&self.rows[v]);
        s.remove(u);
        s.remove(v);
        Ok(s)
    }

    /// Whether `u` and `v` have the same neighbours outside `{u, v}`.
    pub fn is_twin_pair(&self, u: usize, v: usize) -> Result<bool> {
        Ok(self.sym_diff_neighborhoods(u, v)?.is_empty())
    }

    /// Complement graph on the same vertex set.
    pub fn complement(&self) -> Graph {
        Graph::from_fn(self.n, |u, v| !self.has_edge(u, v))
    }

    /// True if some vertex has no neighbours.
    pub fn has_isolated_vertex(&self) -> bool {
        (0..self.n).any(|v| self.rows[v].is_empty())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // a-b-c-d-e-a as 0..5
    fn c5() -> Graph {
        Graph::cycle(5)
    }

    #[test]
    fn edge_list_construction() {
        let g = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(g, Graph::path(3));
        let single = Graph::from_edge_list(1, &[]).unwrap();
        assert_eq!(single.n(), 1);
        assert_eq!(single.edge_count(), 0);
    }

    #[test]
    fn edge_list_errors() {
        assert_eq!(Graph::from_edge_list(2, &[(0, 0)]), Err(Error::Loop(0)));
        assert_eq!(
            Graph::from_edge_list(2, &[(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        );
        assert_eq!(
            Graph::from_edge_list(3, &[(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        );
    }

    #[test]
    fn induced_subgraphs_of_c5() {
        let g = c5();
        let (p3, map) = g.induced_subgraph(&VertexSet::from_iter(5, [1, 2, 3])).unwrap();
        assert_eq!(p3, Graph::path(3));
        assert_eq!(map, vec![1, 2, 3]);

        let (same, _) = g.induced_subgraph(&g.vertices()).unwrap();
        assert_eq!(same, g);

        let (two, map) = g.induced_subgraph(&VertexSet::from_iter(5, [0, 2])).unwrap();
        assert_eq!(two, Graph::empty(2));
        assert_eq!(map, vec![0, 2]);

        assert_eq!(g.induced_subgraph(&VertexSet::new(5)), Err(Error::EmptyVertexSet));
    }

    #[test]
    fn sym_diff_examples() {
        let g = c5();
        // (a, b) -> {c, e}
        assert_eq!(g.sym_diff_neighborhoods(0, 1).unwrap().to_vec(), vec![2, 4]);
        assert!(!g.is_twin_pair(0, 1).unwrap());

        let k2 = Graph::complete(2);
        assert!(k2.sym_diff_neighborhoods(0, 1).unwrap().is_empty());
        assert!(k2.is_twin_pair(0, 1).unwrap());

        let star = Graph::star(3);
        assert!(star.is_twin_pair(1, 2).unwrap());

        assert_eq!(g.sym_diff_neighborhoods(3, 3), Err(Error::SameVertex(3)));
        assert_eq!(g.is_twin_pair(1, 1), Err(Error::SameVertex(1)));
    }

    #[test]
    fn degree_plus_codegree() {
        let g = Graph::from_edge_list(5, &[(0, 1), (0, 2), (3, 4)]).unwrap();
        for v in 0..5 {
            assert_eq!(g.degree(v) + g.co_degree(v), 4);
        }
    }
}
