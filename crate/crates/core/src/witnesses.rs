//! Explicit witnesses for the bounded classes: consecutive unit intervals,
//! middle points of permutation diagrams, and edge stars in line graphs.
//!
//! Every witness is replayed against the graph before it is returned.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::{self, IntervalSet, Permutation};
use crate::graph::Graph;
use crate::symdiff;

/// `A(target, z) = OR_terms AND_{i in term} A(support[i], z)` for every `z`
/// outside `{target} ∪ support`. No terms means constant 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DnfWitness {
    pub target: usize,
    pub support: Vec<usize>,
    pub terms: Vec<Vec<usize>>,
}

impl DnfWitness {
    pub fn eval(&self, profile: &[bool]) -> bool {
        self.terms.iter().any(|t| t.iter().all(|&i| profile[i]))
    }

    /// Replays the formula on every vertex outside `{target} ∪ support`;
    /// returns the first mismatching vertex.
    pub fn first_violation(&self, g: &Graph) -> Option<usize> {
        (0..g.n())
            .filter(|&z| z != self.target && !self.support.contains(&z))
            .find(|&z| {
                let profile: Vec<bool> = self.support.iter().map(|&x| g.has_edge(x, z)).collect();
                self.eval(&profile) != g.has_edge(self.target, z)
            })
    }

    pub fn verify(&self, g: &Graph) -> bool {
        self.first_violation(g).is_none()
    }

    fn checked(self, g: &Graph, what: &str) -> Result<DnfWitness> {
        match self.first_violation(g) {
            None => Ok(self),
            Some(z) => Err(Error::Verification(format!(
                "{what} witness for vertex {} fails at vertex {z}",
                self.target
            ))),
        }
    }

    /// Support from the listed vertices (duplicates dropped) and terms given
    /// as vertex lists.
    fn from_vertices(target: usize, vertices: &[usize], terms: &[&[usize]]) -> DnfWitness {
        let mut support: Vec<usize> = Vec::new();
        for &v in vertices {
            if !support.contains(&v) {
                support.push(v);
            }
        }
        let index = |v: usize| support.iter().position(|&s| s == v).expect("term vertex in support");
        let terms = terms
            .iter()
            .map(|t| {
                let mut idx: Vec<usize> = t.iter().map(|&v| index(v)).collect();
                idx.sort_unstable();
                idx.dedup();
                idx
            })
            .collect();
        DnfWitness { target, support, terms }
    }
}

impl std::fmt::Display for DnfWitness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .terms
            .iter()
            .map(|t| {
                if t.is_empty() {
                    "1".to_string()
                } else {
                    t.iter()
                        .map(|&i| format!("x{}", self.support[i]))
                        .collect::<Vec<_>>()
                        .join("&")
                }
            })
            .collect();
        f.write_str(&terms.join(" | "))
    }
}

// ---------------------------------------------------------------------------
// Unit intervals
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct IntervalPair {
    /// 0-based; the pair is `(t, t + 1)` in left-endpoint order.
    pub t: usize,
    pub sd: usize,
}

fn consecutive_sds(iv: &IntervalSet) -> Result<Vec<usize>> {
    if iv.len() < 2 {
        return Err(Error::TooFewVertices {
            min: 2,
            found: iv.len(),
        });
    }
    let g = families::unit_interval_graph(iv);
    (0..g.n() - 1).map(|t| symdiff::sd_pair(&g, t, t + 1)).collect()
}

/// The consecutive pair with the smallest symmetric difference (lowest `t`
/// on ties). At most 1 whenever no interval is isolated.
pub fn unit_interval_pair(iv: &IntervalSet) -> Result<IntervalPair> {
    let sds = consecutive_sds(iv)?;
    let (t, &sd) = sds.iter().enumerate().min_by_key(|&(t, &sd)| (sd, t)).expect("n >= 2");
    Ok(IntervalPair { t, sd })
}

/// Sum of symmetric differences over consecutive pairs; at most `2n - 3`
/// without isolated intervals.
pub fn sum_sd_consecutive(iv: &IntervalSet) -> Result<usize> {
    Ok(consecutive_sds(iv)?.into_iter().sum())
}

// ---------------------------------------------------------------------------
// Permutation diagrams
// ---------------------------------------------------------------------------

/// Values that are middle points of a 3-window, 1-based and ascending.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Middles {
    /// Middle by value of some window of three position-consecutive points.
    pub vertical: Vec<usize>,
    /// Middle by position of some window of three value-consecutive points.
    pub horizontal: Vec<usize>,
}

/// A point of the diagram: `(position, value)`, both 0-based.
type Point = (usize, usize);

/// Index of the middle element of `w` by key.
fn middle_by<F: Fn(&Point) -> usize>(w: &[Point], key: F) -> Point {
    let mut s = w.to_vec();
    s.sort_by_key(|p| key(p));
    s[s.len() / 2]
}

pub fn classify_middles(p: &Permutation) -> Result<Middles> {
    let n = p.len();
    if n < 3 {
        return Err(Error::TooFewVertices { min: 3, found: n });
    }
    let by_pos = points_by_position(p);
    let by_val = by_value(&by_pos);
    let mut vertical: Vec<usize> = by_pos.windows(3).map(|w| middle_by(w, |q| q.1).1 + 1).collect();
    let mut horizontal: Vec<usize> = by_val.windows(3).map(|w| middle_by(w, |q| q.0).1 + 1).collect();
    for v in [&mut vertical, &mut horizontal] {
        v.sort_unstable();
        v.dedup();
    }
    Ok(Middles { vertical, horizontal })
}

fn points_by_position(p: &Permutation) -> Vec<Point> {
    p.values().iter().enumerate().map(|(i, &v)| (i, v - 1)).collect()
}

fn by_value(points: &[Point]) -> Vec<Point> {
    let mut s = points.to_vec();
    s.sort_by_key(|q| q.1);
    s
}

/// Left, right, top and bottom neighbours of `x` read off 3-windows around it
/// (as vertices = value − 1) within `points`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Cross {
    l: usize,
    r: usize,
    t: usize,
    b: usize,
}

impl Cross {
    fn vertices(&self) -> [usize; 4] {
        [self.r, self.b, self.l, self.t]
    }

    fn distinct(&self) -> usize {
        let mut v = self.vertices().to_vec();
        v.sort_unstable();
        v.dedup();
        v.len()
    }
}

/// All 3-windows containing `x` in which `x` is the middle, for both
/// directions, combined into the smallest cross.
///
/// `points` must be sorted by position. A window need not be centred on `x`:
/// any three consecutive points whose middle (in the other coordinate) is `x`
/// give a valid `t`/`b` (resp. `l`/`r`) pair, because every vertex outside the
/// window lies entirely to one side of it.
fn best_cross(points: &[Point], x: usize) -> Option<Cross> {
    let by_val = by_value(points);
    let ix = points.iter().position(|q| q.1 == x)?;
    let jx = by_val.iter().position(|q| q.1 == x)?;
    let windows = |len: usize, at: usize| (at.saturating_sub(2)..=at).filter(move |&s| s + 3 <= len);

    let mut tb = Vec::new();
    for s in windows(points.len(), ix) {
        let w = &points[s..s + 3];
        if middle_by(w, |q| q.1).1 == x {
            let others: Vec<Point> = w.iter().copied().filter(|q| q.1 != x).collect();
            let (lo, hi) = if others[0].1 < others[1].1 {
                (others[0], others[1])
            } else {
                (others[1], others[0])
            };
            tb.push((hi.1, lo.1));
        }
    }
    let mut lr = Vec::new();
    for s in windows(by_val.len(), jx) {
        let w = &by_val[s..s + 3];
        if middle_by(w, |q| q.0).1 == x {
            let others: Vec<Point> = w.iter().copied().filter(|q| q.1 != x).collect();
            let (left, right) = if others[0].0 < others[1].0 {
                (others[0], others[1])
            } else {
                (others[1], others[0])
            };
            lr.push((left.1, right.1));
        }
    }
    let mut best: Option<Cross> = None;
    for &(t, b) in &tb {
        for &(l, r) in &lr {
            let c = Cross { l, r, t, b };
            if best.is_none_or(|o| c.distinct() < o.distinct()) {
                best = Some(c);
            }
        }
    }
    best
}

fn cross_witness(x: usize, c: Cross, extra: &[usize]) -> DnfWitness {
    let mut vertices = c.vertices().to_vec();
    vertices.extend_from_slice(extra);
    DnfWitness::from_vertices(x, &vertices, &[&[c.r, c.b], &[c.l, c.t]])
}

/// Four-point witness `x_r x_b ∨ x_l x_t` for a value `x` (1-based) that is
/// both a vertical and a horizontal middle of 3-windows containing it.
///
/// The returned witness lives in `permutation_graph(p)`, i.e. vertices are
/// values − 1.
pub fn strict_middle_witness(p: &Permutation, x: usize) -> Result<DnfWitness> {
    let n = p.len();
    if x == 0 || x > n {
        return Err(Error::VertexOutOfRange { vertex: x, n });
    }
    let cross = best_cross(&points_by_position(p), x - 1)
        .ok_or_else(|| Error::Precondition(format!("{x} is not both a vertical and a horizontal middle")))?;
    cross_witness(x - 1, cross, &[]).checked(&families::permutation_graph(p), "middle-point")
}

/// For each 5-window containing `x` (in `sorted`, ordered by one coordinate)
/// in which `x` is among the middle three by the other coordinate, the two
/// other middle points.
fn weak_windows(sorted: &[Point], x: usize, other: impl Fn(&Point) -> usize) -> Vec<[usize; 2]> {
    let Some(ix) = sorted.iter().position(|q| q.1 == x) else {
        return Vec::new();
    };
    let mut out = Vec::new();
    for s in ix.saturating_sub(4)..=ix {
        if s + 5 > sorted.len() {
            break;
        }
        let mut w = sorted[s..s + 5].to_vec();
        w.sort_by_key(|q| other(q));
        let mid: Vec<usize> = w[1..4].iter().map(|q| q.1).collect();
        if mid.contains(&x) {
            let rest: Vec<usize> = mid.into_iter().filter(|&v| v != x).collect();
            out.push([rest[0], rest[1]]);
        }
    }
    out
}

/// At most eight vertices determining `x`'s adjacency in a permutation graph
/// with at least 13 points.
///
/// Searches every `x` that is a weak middle (among the middle three of some
/// 5-window) in both directions, deletes the other two middles of each
/// window, and looks for a 3-window cross around `x` in what remains. The
/// support is the cross plus the deleted points; the formula is the same as
/// for strict middles. Smallest support wins, then smallest `x`.
pub fn permutation_witness(p: &Permutation) -> Result<DnfWitness> {
    let n = p.len();
    if n <= 12 {
        return Err(Error::Precondition(format!(
            "n = {n} <= 12: every graph on at most 12 vertices already has functionality at most 6"
        )));
    }
    let by_pos = points_by_position(p);
    let by_val = by_value(&by_pos);

    let mut best: Option<(usize, usize, Cross, Vec<usize>)> = None;
    for x in 0..n {
        let vert = weak_windows(&by_pos, x, |q| q.1);
        if vert.is_empty() {
            continue;
        }
        let horiz = weak_windows(&by_val, x, |q| q.0);
        for v in &vert {
            for h in &horiz {
                let mut removed: Vec<usize> = v.iter().chain(h).copied().collect();
                removed.sort_unstable();
                removed.dedup();
                let reduced: Vec<Point> = by_pos.iter().copied().filter(|q| !removed.contains(&q.1)).collect();
                let Some(cross) = best_cross(&reduced, x) else {
                    continue;
                };
                let mut all: Vec<usize> = cross.vertices().iter().chain(&removed).copied().collect();
                all.sort_unstable();
                all.dedup();
                let size = all.len();
                if best.as_ref().is_none_or(|b| (size, x) < (b.0, b.1)) {
                    best = Some((size, x, cross, removed));
                }
            }
        }
    }
    let (_, x, cross, removed) =
        best.ok_or_else(|| Error::Precondition("no point is a weak middle in both directions".into()))?;
    cross_witness(x, cross, &removed).checked(&families::permutation_graph(p), "weak-middle")
}

// ---------------------------------------------------------------------------
// Line graphs
// ---------------------------------------------------------------------------

/// Witness for the vertex of `L(G)` corresponding to edge `x = (a, b)`.
///
/// At each endpoint: three other edges there if the endpoint has degree at
/// least 4 (an edge not through the endpoint meets at most two of them), or
/// all other edges there otherwise. The formula is the conjunction over each
/// triple, OR-ed.
pub fn line_graph_witness(g: &Graph, x: (usize, usize)) -> Result<DnfWitness> {
    let (lg, names) = families::line_graph(g)?;
    line_graph_witness_in(&lg, &names, x)
}

/// As [`line_graph_witness`], on a prebuilt line graph and its edge names.
pub fn line_graph_witness_in(lg: &Graph, names: &[(usize, usize)], x: (usize, usize)) -> Result<DnfWitness> {
    let key = (x.0.min(x.1), x.0.max(x.1));
    let target = names
        .binary_search(&key)
        .map_err(|_| Error::NotAnEdge(format!("({}, {})", x.0, x.1)))?;
    let at = |end: usize| -> Vec<usize> {
        (0..names.len())
            .filter(|&i| i != target && (names[i].0 == end || names[i].1 == end))
            .collect()
    };
    let mut vertices = Vec::new();
    let mut terms: Vec<Vec<usize>> = Vec::new();
    for end in [key.0, key.1] {
        let mut star = at(end);
        if star.len() >= 3 {
            star.truncate(3);
            terms.push(star.clone());
        }
        vertices.extend(star);
    }
    let term_refs: Vec<&[usize]> = terms.iter().map(|t| t.as_slice()).collect();
    DnfWitness::from_vertices(target, &vertices, &term_refs).checked(lg, "line-graph")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::Rational;

    fn perm(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    fn intervals(l: &[(i64, i64)]) -> IntervalSet {
        IntervalSet::new(l.iter().map(|&(a, b)| Rational::new(a, b)).collect()).unwrap()
    }

    #[test]
    fn dnf_display_and_eval() {
        let w = DnfWitness::from_vertices(0, &[3, 4, 5], &[&[3, 4], &[5]]);
        assert_eq!(w.terms, vec![vec![0, 1], vec![2]]);
        assert_eq!(w.to_string(), "x3&x4 | x5");
        assert!(w.eval(&[true, true, false]));
        assert!(!w.eval(&[true, false, false]));
        let zero = DnfWitness::from_vertices(0, &[], &[]);
        assert_eq!(zero.to_string(), "0");
    }

    #[test]
    fn unit_interval_examples() {
        let k3 = intervals(&[(0, 1), (2, 5), (4, 5)]);
        assert_eq!(unit_interval_pair(&k3).unwrap().sd, 0);
        assert_eq!(sum_sd_consecutive(&k3).unwrap(), 0);
        let two = intervals(&[(0, 1), (1, 2)]);
        assert_eq!(unit_interval_pair(&two).unwrap(), IntervalPair { t: 0, sd: 0 });
        assert_eq!(sum_sd_consecutive(&two).unwrap(), 0);
        assert!(unit_interval_pair(&intervals(&[(0, 1)])).is_err());
    }

    #[test]
    fn middles_examples() {
        let m = classify_middles(&perm(&[6, 1, 4, 2, 5, 3])).unwrap();
        assert_eq!(m.vertical, vec![2, 3, 4]);
        assert_eq!(m.horizontal, vec![2, 4, 5]);
        let id3 = classify_middles(&Permutation::identity(3)).unwrap();
        assert_eq!((id3.vertical, id3.horizontal), (vec![2], vec![2]));
        let id7 = classify_middles(&Permutation::identity(7)).unwrap();
        assert_eq!(id7.vertical, (2..=6).collect::<Vec<_>>());
        assert_eq!(id7.horizontal, (2..=6).collect::<Vec<_>>());
        assert!(classify_middles(&perm(&[2, 1])).is_err());
    }

    #[test]
    fn strict_middle_examples() {
        let id5 = Permutation::identity(5);
        let w = strict_middle_witness(&id5, 3).unwrap();
        let mut s = w.support.clone();
        s.sort_unstable();
        assert_eq!(s, vec![1, 3]);
        assert!(w.verify(&families::permutation_graph(&id5)));

        let err = strict_middle_witness(&perm(&[6, 1, 4, 2, 5, 3]), 1).unwrap_err();
        assert!(matches!(err, Error::Precondition(_)));

        // 2413: vertical middles {2,3}, horizontal middles {1,4}, so no x
        // qualifies
        let p = perm(&[2, 4, 1, 3]);
        assert!((1..=4).all(|x| strict_middle_witness(&p, x).is_err()));
    }

    fn all_permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for rest in all_permutations(n - 1) {
            for i in 0..=rest.len() {
                let mut p = rest.clone();
                p.insert(i, n);
                out.push(p);
            }
        }
        out
    }

    #[test]
    fn strict_middles_verify_on_all_small_permutations() {
        let mut qualifying = 0;
        for n in 3..=6 {
            for v in all_permutations(n) {
                let p = perm(&v);
                let m = classify_middles(&p).unwrap();
                for x in 1..=n {
                    match strict_middle_witness(&p, x) {
                        Ok(w) => {
                            qualifying += 1;
                            assert!(w.support.len() <= 4);
                            assert!(m.vertical.contains(&x) && m.horizontal.contains(&x));
                        }
                        Err(e) => assert!(matches!(e, Error::Precondition(_)), "{v:?} {x}: {e}"),
                    }
                }
            }
        }
        assert!(qualifying > 0);
    }

    #[test]
    fn permutation_witness_examples() {
        let id = Permutation::identity(13);
        let w = permutation_witness(&id).unwrap();
        assert!(w.support.len() <= 8);
        assert!(w.verify(&families::permutation_graph(&id)));
        let err = permutation_witness(&Permutation::identity(12)).unwrap_err();
        assert!(err.to_string().contains("<= 12"), "{err}");
        for seed in 0..20 {
            let p = families::random_permutation(13 + seed as usize * 7, seed);
            let w = permutation_witness(&p).unwrap();
            assert!(w.support.len() <= 8);
        }
    }

    #[test]
    fn line_graph_examples() {
        let k5 = Graph::complete(5);
        let w = line_graph_witness(&k5, (0, 1)).unwrap();
        assert_eq!((w.support.len(), w.terms.len()), (6, 2));

        let star = Graph::star(5);
        let w = line_graph_witness(&star, (0, 2)).unwrap();
        assert_eq!((w.support.len(), w.terms.len()), (3, 1));

        let w = line_graph_witness(&Graph::complete(2), (1, 0)).unwrap();
        assert!(w.support.is_empty() && w.terms.is_empty());

        assert!(matches!(
            line_graph_witness(&k5.complement(), (0, 1)),
            Err(Error::NoEdges)
        ));
        assert!(matches!(
            line_graph_witness(&Graph::path(4), (0, 2)),
            Err(Error::NotAnEdge(_))
        ));
    }
}
