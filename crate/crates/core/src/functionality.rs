//! Vertex and graph functionality.
//!
//! A vertex `y` is a function of a set `S` (with `y` not in `S`) when any two
//! vertices outside `S + y` that see `S` identically also agree on their
//! adjacency to `y`. The smallest such `S` is found by reducing the question
//! to a hitting-set problem over *conflict pairs*: pairs `(z, z')` with
//! `A(y,z) != A(y,z')`. A set resolves the pair when it contains `z` or `z'`
//! or some vertex adjacent to exactly one of them, and `S` works iff it
//! resolves every conflict pair.

use std::collections::BTreeMap;

use rand::Rng;
use serde::{Serialize, Serializer};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rng;
use crate::subsets::{self, SubsetBest};

/// Default vertex limit for the exhaustive induced-subgraph sweeps.
pub const DEFAULT_EXACT_LIMIT: usize = 14;

/// Adjacency of one vertex to each support vertex, in support order.
pub type Profile = Vec<bool>;

pub fn profile_string(p: &[bool]) -> String {
    p.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

/// Partial Boolean function certifying that `target` is a function of
/// `support`. Profiles absent from `table` are don't-cares.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessFunction {
    pub target: usize,
    pub support: Vec<usize>,
    #[serde(serialize_with = "serialize_table")]
    pub table: BTreeMap<Profile, bool>,
}

fn serialize_table<S: Serializer>(
    table: &BTreeMap<Profile, bool>,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    serializer.collect_map(table.iter().map(|(k, v)| (profile_string(k), u8::from(*v))))
}

impl WitnessFunction {
    pub fn arity(&self) -> usize {
        self.support.len()
    }

    pub fn profile_of(&self, g: &Graph, z: usize) -> Profile {
        self.support.iter().map(|&x| g.has_edge(x, z)).collect()
    }

    /// Value on an observed profile; `None` for a don't-care.
    pub fn eval(&self, profile: &[bool]) -> Option<bool> {
        self.table.get(profile).copied()
    }

    /// Total reading of the partial function: don't-cares evaluate to 0.
    pub fn eval_total(&self, profile: &[bool]) -> bool {
        self.eval(profile).unwrap_or(false)
    }

    pub fn is_dontcare(&self, profile: &[bool]) -> bool {
        !self.table.contains_key(profile)
    }

    /// Number of unobserved profiles, when it fits in a `u128`.
    pub fn dontcare_count(&self) -> Option<u128> {
        let k = u32::try_from(self.arity()).ok()?;
        1u128.checked_shl(k).map(|all| all - self.table.len() as u128)
    }

    /// Replays the table against `g`: every vertex outside the support and the
    /// target must have an observed profile whose value is its adjacency to
    /// the target.
    pub fn verify(&self, g: &Graph) -> bool {
        if self.target >= g.n() || self.support.iter().any(|&x| x >= g.n() || x == self.target) {
            return false;
        }
        let outside = outside_vertices(g.n(), self.target, &self.support);
        outside
            .into_iter()
            .all(|z| self.eval(&self.profile_of(g, z)) == Some(g.has_edge(self.target, z)))
    }
}

fn outside_vertices(n: usize, target: usize, support: &[usize]) -> Vec<usize> {
    let mut excluded = VertexSet::new(n);
    excluded.insert(target);
    for &x in support {
        excluded.insert(x);
    }
    excluded.complement().to_vec()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FunResult {
    pub value: usize,
    pub witness_vertex: usize,
    pub witness_set: VertexSet,
    pub witness_fn: WitnessFunction,
}

/// Builds the witness function of `y` over `s`, or `None` when two outside
/// vertices share a profile but disagree on `y`.
pub fn is_function_of(g: &Graph, y: usize, s: &VertexSet) -> Result<Option<WitnessFunction>> {
    if y >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: y, n: g.n() });
    }
    if s.universe() != g.n() {
        return Err(Error::Precondition(format!(
            "support set over universe {} used with a graph on {} vertices",
            s.universe(),
            g.n()
        )));
    }
    if s.contains(y) {
        return Err(Error::TargetInSupport(y));
    }
    Ok(build_witness(g, y, &s.to_vec()))
}

/// Same as [`is_function_of`] with an explicit support order.
pub fn is_function_of_ordered(g: &Graph, y: usize, support: &[usize]) -> Result<Option<WitnessFunction>> {
    if let Some(&bad) = [y].iter().chain(support).find(|&&v| v >= g.n()) {
        return Err(Error::VertexOutOfRange { vertex: bad, n: g.n() });
    }
    if support.contains(&y) {
        return Err(Error::TargetInSupport(y));
    }
    Ok(build_witness(g, y, support))
}

fn build_witness(g: &Graph, y: usize, support: &[usize]) -> Option<WitnessFunction> {
    let mut wf = WitnessFunction {
        target: y,
        support: support.to_vec(),
        table: BTreeMap::new(),
    };
    for z in outside_vertices(g.n(), y, support) {
        let value = g.has_edge(y, z);
        match wf.table.entry(wf.profile_of(g, z)) {
            std::collections::btree_map::Entry::Occupied(e) => {
                if *e.get() != value {
                    return None;
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(value);
            }
        }
    }
    Some(wf)
}

/// Resolver sets of all conflict pairs of `y`: for `(z, z')`, the vertices
/// other than `y` that are `z`, `z'`, or adjacent to exactly one of them.
pub(crate) fn conflict_resolvers(g: &Graph, y: usize) -> Vec<VertexSet> {
    let nbrs = g.neighbors(y);
    let mut non = nbrs.complement();
    non.remove(y);
    let mut out = Vec::with_capacity(nbrs.len() * non.len());
    for z in nbrs.iter() {
        for w in non.iter() {
            let mut r = g.neighbors(z).symmetric_difference(g.neighbors(w));
            r.insert(z);
            r.insert(w);
            r.remove(y);
            out.push(r);
        }
    }
    out
}

/// Drops resolver sets that contain another one; hitting the smaller set
/// already hits the larger.
fn minimal_sets(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort_by_key(|s| (s.len(), s.to_vec()));
    let mut kept: Vec<VertexSet> = Vec::new();
    for s in sets {
        if !kept.iter().any(|k| k.is_subset(&s)) {
            kept.push(s);
        }
    }
    kept
}

struct HittingSearch<'a> {
    sets: &'a [VertexSet],
    best_len: usize,
    best: Option<VertexSet>,
}

impl HittingSearch<'_> {
    fn run(&mut self, chosen: &mut VertexSet, chosen_len: usize, forbidden: &mut VertexSet) {
        let unresolved: Vec<VertexSet> = self
            .sets
            .iter()
            .filter(|s| !s.intersects(chosen))
            .map(|s| s.difference(forbidden))
            .collect();
        if unresolved.is_empty() {
            if chosen_len < self.best_len {
                self.best_len = chosen_len;
                self.best = Some(chosen.clone());
            }
            return;
        }
        if unresolved.iter().any(|s| s.is_empty()) {
            return;
        }
        if chosen_len + packing_bound(&unresolved) >= self.best_len {
            return;
        }
        // fail-first: the pair with the fewest remaining resolvers
        let pick = unresolved.iter().min_by_key(|s| s.len()).expect("nonempty").clone();
        let mut newly_forbidden = Vec::new();
        for x in pick.iter() {
            if chosen_len + 1 >= self.best_len {
                break;
            }
            chosen.insert(x);
            self.run(chosen, chosen_len + 1, forbidden);
            chosen.remove(x);
            forbidden.insert(x);
            newly_forbidden.push(x);
        }
        for x in newly_forbidden {
            forbidden.remove(x);
        }
    }
}

/// Greedy packing of pairwise-disjoint sets: each needs its own element.
fn packing_bound(sets: &[VertexSet]) -> usize {
    let mut order: Vec<&VertexSet> = sets.iter().collect();
    order.sort_by_key(|s| s.len());
    let mut used = VertexSet::new(sets[0].universe());
    let mut count = 0;
    for s in order {
        if !s.intersects(&used) {
            used.union_with(s);
            count += 1;
        }
    }
    count
}

/// Smallest set hitting all `sets` with fewer than `bound` elements, if any.
fn min_hitting_set_below(universe: usize, sets: Vec<VertexSet>, bound: usize) -> Option<VertexSet> {
    if sets.is_empty() {
        return (bound > 0).then(|| VertexSet::new(universe));
    }
    let sets = minimal_sets(sets);
    let mut search = HittingSearch {
        sets: &sets,
        best_len: bound,
        best: None,
    };
    let mut chosen = VertexSet::new(universe);
    let mut forbidden = VertexSet::new(universe);
    search.run(&mut chosen, 0, &mut forbidden);
    search.best
}

fn result_for(g: &Graph, y: usize, set: VertexSet) -> FunResult {
    let witness_fn =
        build_witness(g, y, &set.to_vec()).expect("support found by the conflict-pair search must be a witness");
    FunResult {
        value: set.len(),
        witness_vertex: y,
        witness_set: set,
        witness_fn,
    }
}

fn trivial_support(g: &Graph, y: usize) -> VertexSet {
    let nbrs = g.neighbors(y).clone();
    if nbrs.len() <= g.co_degree(y) {
        nbrs
    } else {
        let mut non = nbrs.complement();
        non.remove(y);
        non
    }
}

fn check_vertex(g: &Graph, y: usize) -> Result<()> {
    if y < g.n() {
        Ok(())
    } else {
        Err(Error::VertexOutOfRange { vertex: y, n: g.n() })
    }
}

/// Exact `fun(y)` by branch-and-bound over conflict pairs.
pub fn fun_vertex(g: &Graph, y: usize) -> Result<FunResult> {
    check_vertex(g, y)?;
    let upper = trivial_support(g, y);
    let bound = upper.len();
    let set = min_hitting_set_below(g.n(), conflict_resolvers(g, y), bound).unwrap_or(upper);
    Ok(result_for(g, y, set))
}

/// A witness for `y` of size at most `k`, if one exists.
pub fn fun_vertex_at_most(g: &Graph, y: usize, k: usize) -> Result<Option<FunResult>> {
    check_vertex(g, y)?;
    let upper = trivial_support(g, y);
    if upper.len() <= k {
        // still look for something smaller so callers get the true minimum
        let set = min_hitting_set_below(g.n(), conflict_resolvers(g, y), upper.len()).unwrap_or(upper);
        return Ok(Some(result_for(g, y, set)));
    }
    Ok(min_hitting_set_below(g.n(), conflict_resolvers(g, y), k + 1).map(|s| result_for(g, y, s)))
}

/// Greedy upper bound on `fun(y)`: repeatedly add the vertex resolving the
/// most unresolved conflict pairs, lowest index on ties.
pub fn fun_vertex_upper(g: &Graph, y: usize) -> Result<FunResult> {
    check_vertex(g, y)?;
    let mut pending = conflict_resolvers(g, y);
    let mut chosen = VertexSet::new(g.n());
    while !pending.is_empty() {
        let mut counts = vec![0usize; g.n()];
        for s in &pending {
            for x in s.iter() {
                counts[x] += 1;
            }
        }
        let best = (0..g.n())
            .max_by_key(|&x| (counts[x], std::cmp::Reverse(x)))
            .expect("pending pairs imply vertices");
        chosen.insert(best);
        pending.retain(|s| !s.contains(best));
    }
    Ok(result_for(g, y, chosen))
}

/// Minimum vertex functionality of `g`, lowest arg-min vertex on ties.
pub fn min_fun(g: &Graph) -> Result<FunResult> {
    min_fun_below(g, usize::MAX)?.ok_or(Error::TooFewVertices { min: 1, found: 0 })
}

/// `min_fun(g)` if it is strictly below `bound`, otherwise `None`.
pub(crate) fn min_fun_below(g: &Graph, bound: usize) -> Result<Option<FunResult>> {
    if g.n() == 0 {
        return Err(Error::TooFewVertices { min: 1, found: 0 });
    }
    // vertices with a cheap trivial witness first: they tighten the bound early
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&y| (g.degree(y).min(g.co_degree(y)), y));
    let mut best: Option<FunResult> = None;
    let mut limit = bound;
    for y in order {
        if limit == 0 {
            break;
        }
        let upper = trivial_support(g, y);
        let found = if upper.len() < limit {
            Some(min_hitting_set_below(g.n(), conflict_resolvers(g, y), upper.len()).unwrap_or(upper))
        } else {
            min_hitting_set_below(g.n(), conflict_resolvers(g, y), limit)
        };
        if let Some(set) = found {
            let better = match &best {
                None => true,
                Some(b) => set.len() < b.value || (set.len() == b.value && y < b.witness_vertex),
            };
            if better {
                // tie with a lower index can still arrive later; keep limit inclusive of ties
                limit = set.len() + 1;
                best = Some(result_for(g, y, set));
            }
        }
    }
    Ok(best.filter(|b| b.value < bound))
}

/// Graph-level functionality: the arg-max induced subgraph (original vertex
/// indices) and its arg-min vertex result in the subgraph's own numbering.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphFunResult {
    pub value: usize,
    pub subgraph: Vec<usize>,
    /// Arg-min vertex of the arg-max subgraph, as an original index.
    pub vertex: usize,
    /// Witness set in original indices.
    pub witness_set: Vec<usize>,
    /// Result relative to the induced subgraph on `subgraph`.
    pub local: FunResult,
}

/// Exact `fun(G)` = max over nonempty induced subgraphs of `min_fun`.
pub fn fun_graph(g: &Graph, exact_limit: usize) -> Result<GraphFunResult> {
    if g.n() == 0 {
        return Err(Error::TooFewVertices { min: 1, found: 0 });
    }
    if g.n() > exact_limit || g.n() > subsets::MAX_EXACT {
        return Err(Error::ExactLimitExceeded {
            n: g.n(),
            limit: exact_limit.min(subsets::MAX_EXACT),
        });
    }
    let best: SubsetBest<FunResult> = subsets::max_min_over_subsets(
        g,
        1,
        |size| (size - 1) / 2,
        |h, above| {
            if let Some(a) = above {
                // cheap rejection: some vertex already has a witness of size <= a
                if min_fun_below(h, a + 1).expect("nonempty subgraph").is_some() {
                    return None;
                }
            }
            let r = min_fun(h).expect("nonempty subgraph");
            Some((r.value, r))
        },
    )
    .expect("the full graph is always evaluated");
    let members = best.members;
    let local = best.payload;
    Ok(GraphFunResult {
        value: best.value,
        vertex: members[local.witness_vertex],
        witness_set: local.witness_set.iter().map(|v| members[v]).collect(),
        subgraph: members,
        local,
    })
}

/// Certified lower bound on `fun(G)`: the maximum of `min_fun` over `G` itself
/// and `trials` seeded random induced subgraphs.
pub fn fun_graph_lower(g: &Graph, trials: usize, seed: u64) -> Result<usize> {
    let mut best = min_fun(g)?.value;
    let mut rng = rng::seeded(seed);
    for _ in 0..trials {
        let mut s = VertexSet::new(g.n());
        for v in 0..g.n() {
            if rng.gen_bool(0.5) {
                s.insert(v);
            }
        }
        if s.is_empty() {
            s.insert(rng.gen_range(0..g.n()));
        }
        let (h, _) = g.induced_subgraph(&s)?;
        best = best.max(min_fun(&h)?.value);
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, xs: &[usize]) -> VertexSet {
        VertexSet::from_iter(n, xs.iter().copied())
    }

    #[test]
    fn star_center_is_constant() {
        let g = Graph::star(3);
        let wf = is_function_of(&g, 0, &VertexSet::new(4)).unwrap().unwrap();
        assert_eq!(wf.table.len(), 1);
        assert_eq!(wf.table.get(&vec![]), Some(&true));
        assert_eq!(wf.dontcare_count(), Some(0));
    }

    #[test]
    fn c5_support_examples() {
        let g = Graph::cycle(5);
        let wf = is_function_of(&g, 0, &set(5, &[1, 2])).unwrap().unwrap();
        assert!(wf.verify(&g));
        // profiles of d=3 and e=4 over (b, c)
        assert_eq!(wf.eval(&[false, true]), Some(false));
        assert_eq!(wf.eval(&[false, false]), Some(true));
        assert_eq!(wf.dontcare_count(), Some(2));
        assert!(is_function_of(&g, 0, &set(5, &[1])).unwrap().is_none());
        assert_eq!(is_function_of(&g, 0, &set(5, &[0])), Err(Error::TargetInSupport(0)));
    }

    #[test]
    fn fun_vertex_examples() {
        let iso = Graph::from_edge_list(3, &[(1, 2)]).unwrap();
        assert_eq!(fun_vertex(&iso, 0).unwrap().value, 0);

        // u=0, v=1, w=2, x=3 : edges u-w, v-w, w-x
        let g = Graph::from_edge_list(4, &[(0, 2), (1, 2), (2, 3)]).unwrap();
        let r = fun_vertex(&g, 0).unwrap();
        assert_eq!(r.value, 1);
        assert!(r.witness_fn.verify(&g));
        assert!(is_function_of(&g, 0, &set(4, &[1])).unwrap().is_some());

        let c5 = Graph::cycle(5);
        for y in 0..5 {
            assert_eq!(fun_vertex(&c5, y).unwrap().value, 2);
        }
    }

    #[test]
    fn upper_bound_trivial_cases() {
        let iso = Graph::empty(4);
        assert_eq!(fun_vertex_upper(&iso, 2).unwrap().value, 0);
        let star = Graph::star(4);
        assert_eq!(fun_vertex_upper(&star, 0).unwrap().value, 0);
    }

    #[test]
    fn min_fun_examples() {
        assert_eq!(min_fun(&Graph::complete(6)).unwrap().value, 0);
        assert_eq!(min_fun(&Graph::path(4)).unwrap().value, 1);
        assert_eq!(min_fun(&Graph::cycle(5)).unwrap().value, 2);
        assert_eq!(
            min_fun(&Graph::empty(0)),
            Err(Error::TooFewVertices { min: 1, found: 0 })
        );
        assert_eq!(min_fun(&Graph::empty(1)).unwrap().value, 0);
    }

    #[test]
    fn fun_graph_examples() {
        for n in 1..=7 {
            assert_eq!(fun_graph(&Graph::complete(n), 14).unwrap().value, 0);
        }
        let c5 = fun_graph(&Graph::cycle(5), 14).unwrap();
        assert_eq!(c5.value, 2);
        assert_eq!(c5.subgraph, vec![0, 1, 2, 3, 4]);
        assert_eq!(fun_graph(&Graph::path(4), 14).unwrap().value, 1);
        assert!(matches!(
            fun_graph(&Graph::empty(15), 14),
            Err(Error::ExactLimitExceeded { n: 15, limit: 14 })
        ));
    }

    #[test]
    fn fun_graph_lower_examples() {
        assert_eq!(fun_graph_lower(&Graph::complete(100), 3, 1).unwrap(), 0);
        assert_eq!(fun_graph_lower(&Graph::cycle(5), 50, 9).unwrap(), 2);
    }
}
