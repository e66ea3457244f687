//! Intersection graphs of 3-uniform hypergraphs.
//!
//! Without thick pairs every hyperedge `s` has a determining set of at most
//! [`NO_THICK_BOUND`] hyperedges; with a thick pair some hyperedge lies in a
//! fly, windmill or broken windmill and has one of at most [`THICK_BOUND`].
//! Every set produced here is checked with
//! [`is_function_of`](crate::functionality::is_function_of) on the
//! intersection graph before it is returned.

use std::collections::{BTreeSet, HashMap, HashSet};

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::families::Hypergraph3;
use crate::functionality;
use crate::graph::Graph;

/// A pair is thick when at least this many hyperedges contain it.
pub const THICK_THRESHOLD: usize = 32;
/// Hyperedges meeting `s` in exactly two vertices, without thick pairs.
pub const F1_BOUND: usize = 90;
/// Hyperedges through a vertex covered by four non-thick pairs.
pub const COVER_BOUND: usize = 124;
pub const NO_THICK_BOUND: usize = 462;
pub const THICK_BOUND: usize = 128;

/// One vertex per hyperedge, adjacent when the hyperedges meet.
pub fn intersection_graph(h: &Hypergraph3) -> Result<(Graph, Vec<[usize; 3]>)> {
    if h.edge_count() == 0 {
        return Err(Error::NoHyperedges);
    }
    let e = h.edges();
    let g = Graph::from_fn(e.len(), |i, j| meet(&e[i], &e[j]) > 0);
    Ok((g, e.to_vec()))
}

fn meet(a: &[usize; 3], b: &[usize; 3]) -> usize {
    a.iter().filter(|v| b.contains(v)).count()
}

fn common(a: &[usize; 3], b: &[usize; 3]) -> Vec<usize> {
    a.iter().copied().filter(|v| b.contains(v)).collect()
}

fn pairs_of(e: &[usize; 3]) -> [((usize, usize), usize); 3] {
    [((e[0], e[1]), e[2]), ((e[0], e[2]), e[1]), ((e[1], e[2]), e[0])]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ThickPair {
    pub u: usize,
    pub v: usize,
    pub count: usize,
}

fn pair_counts(h: &Hypergraph3) -> HashMap<(usize, usize), usize> {
    let mut counts = HashMap::new();
    for e in h.edges() {
        for (p, _) in pairs_of(e) {
            *counts.entry(p).or_insert(0) += 1;
        }
    }
    counts
}

/// Pairs in at least `threshold` hyperedges, sorted.
pub fn thick_pairs(h: &Hypergraph3, threshold: usize) -> Vec<ThickPair> {
    let mut out: Vec<ThickPair> = pair_counts(h)
        .into_iter()
        .filter(|&(_, c)| c >= threshold)
        .map(|((u, v), count)| ThickPair { u, v, count })
        .collect();
    out.sort_by_key(|p| (p.u, p.v));
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MatchingOrCover {
    /// Three hyperedge indices pairwise meeting exactly in `v`.
    Matching([usize; 3]),
    /// At most four vertices meeting every hyperedge through `v` (padded to
    /// four when the ground set allows).
    Cover(Vec<usize>),
}

/// Greedy maximal matching in the link of `v`, over all hyperedges.
pub fn matching_or_cover(h: &Hypergraph3, v: usize) -> MatchingOrCover {
    matching_or_cover_among(h, 0..h.edge_count(), v)
}

/// Same, restricted to the given hyperedge indices (taken in order).
fn matching_or_cover_among(h: &Hypergraph3, candidates: impl IntoIterator<Item = usize>, v: usize) -> MatchingOrCover {
    let edges = h.edges();
    let mut used: Vec<usize> = Vec::new();
    let mut matching: Vec<usize> = Vec::new();
    for i in candidates {
        let e = &edges[i];
        if !e.contains(&v) {
            continue;
        }
        let link: Vec<usize> = e.iter().copied().filter(|&x| x != v).collect();
        if link.iter().all(|x| !used.contains(x)) {
            used.extend(link);
            matching.push(i);
            if matching.len() == 3 {
                return MatchingOrCover::Matching([matching[0], matching[1], matching[2]]);
            }
        }
    }
    let pad: Vec<usize> = (0..h.n())
        .filter(|&x| x != v && !used.contains(&x))
        .take(4usize.saturating_sub(used.len()))
        .collect();
    used.extend(pad);
    used.sort_unstable();
    MatchingOrCover::Cover(used)
}

/// Incidence lists and an edge lookup table.
struct Index<'a> {
    h: &'a Hypergraph3,
    at: Vec<Vec<usize>>,
    lookup: HashMap<[usize; 3], usize>,
}

impl<'a> Index<'a> {
    fn new(h: &'a Hypergraph3) -> Self {
        let mut at = vec![Vec::new(); h.n()];
        let mut lookup = HashMap::with_capacity(h.edge_count());
        for (i, e) in h.edges().iter().enumerate() {
            for &v in e {
                at[v].push(i);
            }
            lookup.insert(*e, i);
        }
        Index { h, at, lookup }
    }

    fn edge(&self, i: usize) -> &[usize; 3] {
        &self.h.edges()[i]
    }

    fn find(&self, mut t: [usize; 3]) -> Option<usize> {
        t.sort_unstable();
        self.lookup.get(&t).copied()
    }

    /// Hyperedges with one vertex in each of the three wings (the eight
    /// transversals of a 3-matching).
    fn transversals(&self, wings: [[usize; 2]; 3]) -> Vec<usize> {
        let mut out = Vec::new();
        for &a in &wings[0] {
            for &b in &wings[1] {
                for &c in &wings[2] {
                    out.extend(self.find([a, b, c]));
                }
            }
        }
        out
    }

    /// Hyperedges other than `s` containing both vertices of `pair`.
    fn through_pair(&self, pair: (usize, usize), s: usize) -> Vec<usize> {
        self.at[pair.0]
            .iter()
            .copied()
            .filter(|&i| i != s && self.edge(i).contains(&pair.1))
            .collect()
    }
}

fn wing(e: &[usize; 3], centre: usize) -> [usize; 2] {
    let w: Vec<usize> = e.iter().copied().filter(|&x| x != centre).collect();
    [w[0], w[1]]
}

fn set_minus(parts: &[usize], drop: &[usize], edges: &[[usize; 3]]) -> Vec<usize> {
    let mut out: BTreeSet<usize> = BTreeSet::new();
    for &p in parts {
        out.extend(edges[p].iter().copied().filter(|v| !drop.contains(v)));
    }
    out.into_iter().collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HyperWitness {
    /// Index of the hyperedge whose intersection-graph vertex is certified.
    pub s: usize,
    /// Determining hyperedges, sorted.
    pub f: Vec<usize>,
    /// Size of the two-vertex-overlap part (no-thick case only).
    pub f1: Option<usize>,
    /// `f1` exceeded [`F1_BOUND`]. Cannot happen without thick pairs (each
    /// pair of `s` lies in at most 30 other hyperedges); flagged, not fatal.
    pub f1_over_bound: bool,
}

fn verify_determining(g: &Graph, s: usize, f: &[usize]) -> Result<()> {
    let set = VertexSet::from_iter(g.n(), f.iter().copied());
    match functionality::is_function_of(g, s, &set)? {
        Some(_) => Ok(()),
        None => Err(Error::Verification(format!(
            "hyperedge set of size {} does not determine hyperedge {s}",
            f.len()
        ))),
    }
}

fn require_no_thick(h: &Hypergraph3) -> Result<()> {
    match thick_pairs(h, THICK_THRESHOLD).first() {
        None => Ok(()),
        Some(p) => Err(Error::Precondition(format!(
            "pair {{{}, {}}} is thick ({} hyperedges)",
            p.u, p.v, p.count
        ))),
    }
}

fn build_no_thick(ix: &Index<'_>, s: usize) -> HyperWitness {
    let edges = ix.h.edges();
    let se = edges[s];
    let f1: Vec<usize> = (0..edges.len())
        .filter(|&i| i != s && meet(&edges[i], &se) == 2)
        .collect();
    let f1_set: HashSet<usize> = f1.iter().copied().collect();
    let mut f: BTreeSet<usize> = f1.iter().copied().collect();
    for &v in &se {
        let rest = ix.at[v].iter().copied().filter(|i| *i != s && !f1_set.contains(i));
        match matching_or_cover_among(ix.h, rest, v) {
            MatchingOrCover::Matching(m) => {
                f.extend(m);
                f.extend(ix.transversals(m.map(|i| wing(&edges[i], v))));
            }
            MatchingOrCover::Cover(cover) => {
                f.extend(
                    ix.at[v]
                        .iter()
                        .copied()
                        .filter(|&i| i != s && cover.iter().any(|c| edges[i].contains(c))),
                );
            }
        }
    }
    HyperWitness {
        s,
        f: f.into_iter().collect(),
        f1: Some(f1.len()),
        f1_over_bound: f1.len() > F1_BOUND,
    }
}

/// Determining set for hyperedge `s` in a hypergraph without thick pairs.
pub fn witness_no_thick(h: &Hypergraph3, s: usize) -> Result<HyperWitness> {
    if s >= h.edge_count() {
        return Err(Error::VertexOutOfRange {
            vertex: s,
            n: h.edge_count(),
        });
    }
    require_no_thick(h)?;
    let (g, _) = intersection_graph(h)?;
    let w = build_no_thick(&Index::new(h), s);
    verify_determining(&g, s, &w.f)?;
    Ok(w)
}

/// [`witness_no_thick`] for every hyperedge, sharing one intersection graph.
pub fn witness_no_thick_all(h: &Hypergraph3) -> Result<Vec<HyperWitness>> {
    require_no_thick(h)?;
    let (g, _) = intersection_graph(h)?;
    let ix = Index::new(h);
    (0..h.edge_count())
        .map(|s| {
            let w = build_no_thick(&ix, s);
            verify_determining(&g, s, &w.f)?;
            Ok(w)
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StructureKind {
    Fly,
    Windmill,
    BrokenWindmill,
}

/// A fly, windmill or broken windmill around hyperedge `s = {v1, v2, v3}`.
///
/// * Fly: `parts[0..3]` meet `s` in `{v1, v2}`, `parts[3..6]` in `{v1, v3}`.
/// * Windmill: `parts[0..3]` meet `s` in `{v2, v3}`; `parts[3..6]` contain
///   `v1` and pairwise meet exactly in `{v1}`. `strict` is set when they also
///   meet `s` only in `v1`.
/// * Broken windmill: `parts[0..3]` meet `s` in `{v2, v3}` and `v1` lies in
///   `v1_degree` hyperedges other than `s`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThickStructure {
    pub kind: StructureKind,
    pub s: usize,
    pub v1: usize,
    pub v2: usize,
    pub v3: usize,
    pub parts: Vec<usize>,
    pub strict: bool,
    pub v1_degree: Option<usize>,
}

impl ThickStructure {
    /// Re-checks the intersection pattern; `threshold` fixes the broken
    /// windmill's degree cap `4 (threshold - 1)`.
    pub fn verify(&self, h: &Hypergraph3, threshold: usize) -> bool {
        let e = h.edges();
        let m = e.len();
        let distinct: HashSet<usize> = self.parts.iter().copied().collect();
        if self.s >= m || self.parts.iter().any(|&p| p >= m || p == self.s) || distinct.len() != self.parts.len() {
            return false;
        }
        let mut sv = [self.v1, self.v2, self.v3];
        sv.sort_unstable();
        if e[self.s] != sv {
            return false;
        }
        let meets = |p: usize, want: &[usize]| {
            let mut c = common(&e[p], &e[self.s]);
            let mut w = want.to_vec();
            c.sort_unstable();
            w.sort_unstable();
            c == w
        };
        let pair23 = [self.v2, self.v3];
        match self.kind {
            StructureKind::Fly => {
                self.parts.len() == 6
                    && self.parts[..3].iter().all(|&p| meets(p, &[self.v1, self.v2]))
                    && self.parts[3..].iter().all(|&p| meets(p, &[self.v1, self.v3]))
            }
            StructureKind::Windmill => {
                let blades = &self.parts[3..];
                self.parts.len() == 6
                    && self.parts[..3].iter().all(|&p| meets(p, &pair23))
                    && blades.iter().all(|&p| e[p].contains(&self.v1))
                    && (0..3).all(|a| (a + 1..3).all(|b| common(&e[blades[a]], &e[blades[b]]) == vec![self.v1]))
                    && (!self.strict || blades.iter().all(|&p| meets(p, &[self.v1])))
            }
            StructureKind::BrokenWindmill => {
                let degree = e
                    .iter()
                    .enumerate()
                    .filter(|&(i, x)| i != self.s && x.contains(&self.v1))
                    .count();
                self.parts.len() == 3
                    && self.parts.iter().all(|&p| meets(p, &pair23))
                    && self.v1_degree == Some(degree)
                    && degree <= 4 * (threshold - 1)
            }
        }
    }
}

/// Searches for a fly, windmill or broken windmill with the default threshold.
pub fn find_thick_structure(h: &Hypergraph3) -> Result<ThickStructure> {
    find_thick_structure_with(h, THICK_THRESHOLD)
}

/// The search, in order:
///
/// 1. a vertex `v` forming hyperedges with four thick pairs through a common
///    vertex `w` gives a fly;
/// 2. a vertex forming hyperedges with four disjoint thick pairs gives a
///    windmill;
/// 3. a vertex `v` outside every thick pair, in a hyperedge `s` with a thick
///    pair, gives a windmill (three hyperedges through `v` pairwise meeting
///    only in `v`) or, failing that, a broken windmill when `v` has few
///    hyperedges.
///
/// Whatever is found is re-verified against its definition.
pub fn find_thick_structure_with(h: &Hypergraph3, threshold: usize) -> Result<ThickStructure> {
    if threshold < 4 {
        return Err(Error::OutOfRange {
            what: "thick threshold",
            value: threshold as i64,
            range: ">= 4",
        });
    }
    let thick: HashSet<(usize, usize)> = thick_pairs(h, threshold).into_iter().map(|p| (p.u, p.v)).collect();
    if thick.is_empty() {
        return Err(Error::Precondition("the hypergraph has no thick pair".into()));
    }
    let ix = Index::new(h);
    let edges = h.edges();

    // (v, thick pair, hyperedge) with hyperedge = {v} ∪ pair
    let mut incident: Vec<(usize, (usize, usize), usize)> = Vec::new();
    for (i, e) in edges.iter().enumerate() {
        for (p, v) in pairs_of(e) {
            if thick.contains(&p) {
                incident.push((v, p, i));
            }
        }
    }
    incident.sort_unstable();

    let found = search_fly_or_matching(&ix, &incident)
        .or_else(|| search_outside_thick(&ix, &incident, &thick, threshold))
        .ok_or_else(|| Error::Precondition(format!("no fly, windmill or broken windmill at threshold {threshold}")))?;
    if !found.verify(h, threshold) {
        return Err(Error::Verification(format!(
            "{:?} structure failed its own check",
            found.kind
        )));
    }
    debug_assert!(found.parts.iter().all(|&p| p < edges.len()));
    Ok(found)
}

fn search_fly_or_matching(ix: &Index<'_>, incident: &[(usize, (usize, usize), usize)]) -> Option<ThickStructure> {
    let mut start = 0;
    while start < incident.len() {
        let v = incident[start].0;
        let end = start + incident[start..].iter().take_while(|t| t.0 == v).count();
        let here = &incident[start..end];
        start = end;

        // fly: four thick pairs at v sharing a vertex w
        let mut by_w: HashMap<usize, Vec<(usize, usize)>> = HashMap::new();
        for &(_, (a, b), i) in here {
            by_w.entry(a).or_default().push((b, i));
            by_w.entry(b).or_default().push((a, i));
        }
        let mut ws: Vec<usize> = by_w.keys().copied().collect();
        ws.sort_unstable();
        for w in ws {
            let group = &by_w[&w];
            if group.len() < 4 {
                continue;
            }
            let (z, s) = group[0];
            let pair = (w.min(z), w.max(z));
            let wings = ix.through_pair(pair, s);
            if wings.len() < 3 {
                continue;
            }
            let mut parts: Vec<usize> = group[1..4].iter().map(|&(_, i)| i).collect();
            parts.extend(&wings[..3]);
            return Some(ThickStructure {
                kind: StructureKind::Fly,
                s,
                v1: w,
                v2: v,
                v3: z,
                parts,
                strict: true,
                v1_degree: None,
            });
        }

        // windmill: four pairwise disjoint thick pairs at v
        let mut used: Vec<usize> = Vec::new();
        let mut chosen: Vec<((usize, usize), usize)> = Vec::new();
        for &(_, (a, b), i) in here {
            if !used.contains(&a) && !used.contains(&b) {
                used.extend([a, b]);
                chosen.push(((a, b), i));
            }
        }
        if chosen.len() >= 4 {
            let ((a, b), s) = chosen[0];
            let sails = ix.through_pair((a, b), s);
            if sails.len() >= 3 {
                let mut parts = sails[..3].to_vec();
                parts.extend(chosen[1..4].iter().map(|&(_, i)| i));
                return Some(ThickStructure {
                    kind: StructureKind::Windmill,
                    s,
                    v1: v,
                    v2: a,
                    v3: b,
                    parts,
                    strict: true,
                    v1_degree: None,
                });
            }
        }
    }
    None
}

fn search_outside_thick(
    ix: &Index<'_>,
    incident: &[(usize, (usize, usize), usize)],
    thick: &HashSet<(usize, usize)>,
    threshold: usize,
) -> Option<ThickStructure> {
    let in_thick: HashSet<usize> = thick.iter().flat_map(|&(a, b)| [a, b]).collect();
    let edges = ix.h.edges();
    for &(v, (a, b), s) in incident {
        if in_thick.contains(&v) {
            continue;
        }
        let sails = ix.through_pair((a, b), s);
        if sails.len() < 3 {
            continue;
        }
        let others: Vec<usize> = ix.at[v].iter().copied().filter(|&i| i != s).collect();
        let avoiding = others
            .iter()
            .copied()
            .filter(|&i| !edges[i].contains(&a) && !edges[i].contains(&b));
        let mut structure = ThickStructure {
            kind: StructureKind::Windmill,
            s,
            v1: v,
            v2: a,
            v3: b,
            parts: sails[..3].to_vec(),
            strict: true,
            v1_degree: None,
        };
        if let MatchingOrCover::Matching(m) = matching_or_cover_among(ix.h, avoiding, v) {
            structure.parts.extend(m);
            return Some(structure);
        }
        if others.len() <= 4 * (threshold - 1) {
            structure.kind = StructureKind::BrokenWindmill;
            structure.v1_degree = Some(others.len());
            return Some(structure);
        }
        if let MatchingOrCover::Matching(m) = matching_or_cover_among(ix.h, others.iter().copied(), v) {
            structure.parts.extend(m);
            structure.strict = false;
            return Some(structure);
        }
    }
    None
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThickWitness {
    pub structure: ThickStructure,
    pub witness: HyperWitness,
}

/// Determining set of at most [`THICK_BOUND`] hyperedges for the hyperedge
/// of a fly, windmill or broken windmill.
pub fn witness_thick(h: &Hypergraph3) -> Result<ThickWitness> {
    let structure = find_thick_structure(h)?;
    let (g, _) = intersection_graph(h)?;
    let ix = Index::new(h);
    let edges = h.edges();
    let st = &structure;
    let mut f: BTreeSet<usize> = BTreeSet::new();
    let wing_edge = |parts: &[usize], drop: &[usize]| -> Option<usize> {
        let rest = set_minus(parts, drop, edges);
        (rest.len() == 3)
            .then(|| ix.find([rest[0], rest[1], rest[2]]))
            .flatten()
    };
    match st.kind {
        StructureKind::Fly => {
            f.extend(&st.parts);
            f.extend(wing_edge(&st.parts[..3], &[st.v1, st.v2]));
            f.extend(wing_edge(&st.parts[3..], &[st.v1, st.v3]));
        }
        StructureKind::Windmill => {
            f.extend(&st.parts);
            f.extend(wing_edge(&st.parts[..3], &[st.v2, st.v3]));
            let blades = [st.parts[3], st.parts[4], st.parts[5]];
            f.extend(ix.transversals(blades.map(|i| wing(&edges[i], st.v1))));
        }
        StructureKind::BrokenWindmill => {
            f.extend(ix.at[st.v1].iter().copied().filter(|&i| i != st.s));
            f.extend(&st.parts);
            f.extend(wing_edge(&st.parts, &[st.v2, st.v3]));
        }
    }
    f.remove(&st.s);
    let f: Vec<usize> = f.into_iter().collect();
    verify_determining(&g, st.s, &f)?;
    Ok(ThickWitness {
        witness: HyperWitness {
            s: st.s,
            f,
            f1: None,
            f1_over_bound: false,
        },
        structure,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Hyper3Report {
    pub thick_pairs: usize,
    pub kind: Option<StructureKind>,
    /// Certified upper bound on `fun(s)` in the intersection graph: `|F|`.
    pub bound: usize,
    pub limit: usize,
    pub pass: bool,
    pub witness: HyperWitness,
}

/// Certifies one vertex of the intersection graph: hyperedge 0 when there is
/// no thick pair, the structure's hyperedge otherwise.
pub fn hyper3_fun_bound(h: &Hypergraph3) -> Result<Hyper3Report> {
    if h.edge_count() == 0 {
        return Err(Error::NoHyperedges);
    }
    let thick = thick_pairs(h, THICK_THRESHOLD).len();
    let (kind, witness, limit) = if thick == 0 {
        (None, witness_no_thick(h, 0)?, NO_THICK_BOUND)
    } else {
        let t = witness_thick(h)?;
        (Some(t.structure.kind), t.witness, THICK_BOUND)
    };
    let bound = witness.f.len();
    Ok(Hyper3Report {
        thick_pairs: thick,
        kind,
        bound,
        limit,
        pass: bound <= limit,
        witness,
    })
}

/// Hand-built hypergraphs containing each thick structure.
pub mod fixtures {
    use super::*;

    /// Vertex 0 forms thick pairs with 1, 3, 4 and 5, and `{0, p, 2}` is a
    /// hyperedge for each of them: a fly around `{0, 1, 2}`.
    pub fn fly() -> Hypergraph3 {
        let mut edges = Vec::new();
        let mut fresh = 6;
        for p in [1, 3, 4, 5] {
            edges.push([0, p, 2]);
            for _ in 0..THICK_THRESHOLD - 1 {
                edges.push([0, p, fresh]);
                fresh += 1;
            }
        }
        Hypergraph3::new(fresh, edges).expect("valid fixture")
    }

    /// Thick pair `{1, 2}` in hyperedge `{0, 1, 2}`; vertex 0 also has three
    /// hyperedges pairwise meeting only in 0.
    pub fn windmill() -> Hypergraph3 {
        let mut edges = vec![[0, 1, 2], [0, 3, 4], [0, 5, 6], [0, 7, 8]];
        edges.extend((9..9 + THICK_THRESHOLD - 1).map(|k| [1, 2, k]));
        Hypergraph3::new(9 + THICK_THRESHOLD - 1, edges).expect("valid fixture")
    }

    /// Thick pair `{1, 2}` in hyperedge `{0, 1, 2}`; vertex 0 has two more
    /// hyperedges sharing vertex 3, so no 3-matching at 0.
    pub fn broken_windmill() -> Hypergraph3 {
        let mut edges = vec![[0, 1, 2], [0, 3, 4], [0, 3, 5]];
        edges.extend((6..6 + THICK_THRESHOLD - 1).map(|k| [1, 2, k]));
        Hypergraph3::new(6 + THICK_THRESHOLD - 1, edges).expect("valid fixture")
    }
}
