//! Text formats for graphs, permutations, unit intervals and 3-uniform
//! hypergraphs. Lines starting with `#` are comments everywhere; parse errors
//! carry 1-based line and column numbers.

use crate::error::{Error, Result};
use crate::families::{Hypergraph3, IntervalSet, Permutation, Rational};
use crate::graph::Graph;

/// Non-comment, non-blank lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().map(|(i, l)| (i + 1, l)).filter(|(_, l)| {
        let t = l.trim_start();
        !t.is_empty() && !t.starts_with('#')
    })
}

/// Whitespace-separated tokens with their 1-based columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((s, &line[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s, &line[s..]));
    }
    out.into_iter()
        .map(|(byte, tok)| (line[..byte].chars().count() + 1, tok))
        .collect()
}

fn int_fields<const K: usize>(line_no: usize, line: &str) -> Result<[usize; K]> {
    let toks = tokens(line);
    if toks.len() != K {
        let col = toks.get(K).map_or(line.len() + 1, |t| t.0);
        return Err(Error::parse(
            line_no,
            col,
            format!("expected {K} integers, found {}", toks.len()),
        ));
    }
    let mut out = [0; K];
    for (slot, (col, tok)) in out.iter_mut().zip(toks) {
        *slot = tok
            .parse()
            .map_err(|_| Error::parse(line_no, col, format!("'{tok}' is not a non-negative integer")))?;
    }
    Ok(out)
}

/// `n m`, then exactly `m` lines `u v` with `0 <= u < v < n`.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (no, header) = lines.next().ok_or_else(|| Error::parse(1, 1, "missing header `n m`"))?;
    let [n, m] = int_fields::<2>(no, header)?;
    let mut edges = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::with_capacity(m);
    let mut last = no;
    for k in 0..m {
        let (no, line) = lines
            .next()
            .ok_or_else(|| Error::parse(last + 1, 1, format!("expected {m} edge lines, found {k}")))?;
        last = no;
        let [u, v] = int_fields::<2>(no, line)?;
        if u >= v {
            return Err(Error::parse(no, 1, format!("edge {u} {v}: expected u < v")));
        }
        if v >= n {
            return Err(Error::parse(no, 1, format!("vertex {v} out of range for n = {n}")));
        }
        if !seen.insert((u, v)) {
            return Err(Error::parse(no, 1, format!("duplicate edge {u} {v}")));
        }
        edges.push((u, v));
    }
    if let Some((no, _)) = lines.next() {
        return Err(Error::parse(no, 1, "unexpected line after the last edge"));
    }
    Graph::from_edge_list(n, &edges)
}

pub fn write_graph(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// One line of space-separated values `π(1) .. π(n)`.
pub fn parse_permutation(text: &str) -> Result<Permutation> {
    let mut lines = content_lines(text);
    let (no, line) = lines
        .next()
        .ok_or_else(|| Error::parse(1, 1, "empty permutation file"))?;
    let mut values = Vec::new();
    for (col, tok) in tokens(line) {
        values.push(
            tok.parse()
                .map_err(|_| Error::parse(no, col, format!("'{tok}' is not a positive integer")))?,
        );
    }
    if let Some((no, _)) = lines.next() {
        return Err(Error::parse(no, 1, "a permutation file holds a single line"));
    }
    Permutation::new(values).map_err(|e| Error::parse(no, 1, e.to_string()))
}

pub fn write_permutation(p: &Permutation) -> String {
    format!("{p}\n")
}

fn parse_rational(no: usize, col: usize, tok: &str) -> Result<Rational> {
    let bad = || Error::parse(no, col, format!("'{tok}' is not a rational `p/q` or integer"));
    match tok.split_once('/') {
        None => tok.parse::<i64>().map(Rational::from_integer).map_err(|_| bad()),
        Some((p, q)) => {
            let p: i64 = p.parse().map_err(|_| bad())?;
            let q: i64 = q.parse().map_err(|_| bad())?;
            if q == 0 {
                return Err(Error::parse(no, col, "zero denominator"));
            }
            Ok(Rational::new(p, q))
        }
    }
}

/// One left endpoint per line, as `p/q` or an integer.
pub fn parse_intervals(text: &str) -> Result<IntervalSet> {
    let mut lefts = Vec::new();
    let mut last = 1;
    for (no, line) in content_lines(text) {
        let toks = tokens(line);
        if toks.len() != 1 {
            return Err(Error::parse(no, 1, "expected one rational per line"));
        }
        lefts.push(parse_rational(no, toks[0].0, toks[0].1)?);
        last = no;
    }
    IntervalSet::new(lefts).map_err(|e| Error::parse(last, 1, e.to_string()))
}

pub fn write_intervals(iv: &IntervalSet) -> String {
    iv.lefts().iter().map(|l| format!("{l}\n")).collect()
}

/// `n m`, then exactly `m` lines `a b c`.
pub fn parse_hypergraph(text: &str) -> Result<Hypergraph3> {
    let mut lines = content_lines(text);
    let (no, header) = lines.next().ok_or_else(|| Error::parse(1, 1, "missing header `n m`"))?;
    let [n, m] = int_fields::<2>(no, header)?;
    let mut edges = Vec::with_capacity(m);
    let mut last = no;
    for k in 0..m {
        let (no, line) = lines
            .next()
            .ok_or_else(|| Error::parse(last + 1, 1, format!("expected {m} hyperedge lines, found {k}")))?;
        edges.push(int_fields::<3>(no, line)?);
        last = no;
    }
    if let Some((no, _)) = lines.next() {
        return Err(Error::parse(no, 1, "unexpected line after the last hyperedge"));
    }
    Hypergraph3::new(n, edges).map_err(|e| Error::parse(last, 1, e.to_string()))
}

pub fn write_hypergraph(h: &Hypergraph3) -> String {
    let mut out = format!("{} {}\n", h.n(), h.edge_count());
    for e in h.edges() {
        out.push_str(&format!("{} {} {}\n", e[0], e[1], e[2]));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_round_trip() {
        let g = Graph::cycle(5);
        let text = write_graph(&g);
        assert_eq!(text, "5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n");
        assert_eq!(parse_graph(&text).unwrap(), g);
        let commented = "# a triangle\n3 3\n0 1\n# middle\n0 2\n1 2\n";
        assert_eq!(parse_graph(commented).unwrap(), Graph::complete(3));
    }

    #[test]
    fn graph_errors() {
        let at = |text: &str| match parse_graph(text) {
            Err(Error::Parse { line, column, .. }) => (line, column),
            other => panic!("{other:?}"),
        };
        assert_eq!(at(""), (1, 1));
        assert_eq!(at("3 x\n"), (1, 3));
        assert_eq!(at("3 1\n1 0\n"), (2, 1));
        assert_eq!(at("3 1\n0 3\n"), (2, 1));
        assert_eq!(at("3 2\n0 1\n0 1\n"), (3, 1));
        assert_eq!(at("3 1\n0 1\n1 2\n"), (3, 1));
        assert_eq!(at("3 2\n0 1\n"), (3, 1));
        assert_eq!(at("3 1\n0 1 2\n"), (2, 5));
    }

    #[test]
    fn permutation_round_trip() {
        let p = parse_permutation("6 1 4 2 5 3\n").unwrap();
        assert_eq!(p.values(), &[6, 1, 4, 2, 5, 3]);
        assert_eq!(write_permutation(&p), "6 1 4 2 5 3\n");
        assert!(parse_permutation("1 1\n").unwrap_err().is_parse());
        assert!(parse_permutation("1 x\n").unwrap_err().is_parse());
    }

    #[test]
    fn interval_round_trip() {
        let iv = parse_intervals("0\n1/2\n# gap\n2\n").unwrap();
        assert_eq!(
            iv.lefts(),
            &[
                Rational::from_integer(0),
                Rational::new(1, 2),
                Rational::from_integer(2)
            ]
        );
        assert_eq!(parse_intervals(&write_intervals(&iv)).unwrap(), iv);
        assert!(parse_intervals("0\n1\n").unwrap_err().is_parse());
        assert!(parse_intervals("1/0\n").unwrap_err().is_parse());
        assert!(parse_intervals("0.5\n").unwrap_err().is_parse());
    }

    #[test]
    fn hypergraph_round_trip() {
        let text = "7 3\n0 1 2\n2 3 4\n4 5 6\n";
        let h = parse_hypergraph(text).unwrap();
        assert_eq!(write_hypergraph(&h), text);
        assert!(parse_hypergraph("4 1\n0 1 1\n").unwrap_err().is_parse());
        assert!(parse_hypergraph("4 1\n0 1\n").unwrap_err().is_parse());
    }
}
