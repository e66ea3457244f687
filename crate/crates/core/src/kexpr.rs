//! Clique-width k-expressions: parsing, evaluation and the functionality
//! bound check.
//!
//! Concrete syntax:
//!
//! ```text
//! expr := 'node' '(' INT ',' NAME ')'
//!       | 'u'    '(' expr ',' expr ')'
//!       | 'eta'  '(' INT ',' INT ',' expr ')'
//!       | 'rho'  '(' INT ',' INT ',' expr ')'
//! ```
//!
//! `u` is disjoint union, `eta(i,j,e)` joins every `i`-labelled vertex to
//! every `j`-labelled one, and `rho(i,j,e)` relabels `i` to `j`.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::functionality::{self, FunResult};
use crate::graph::Graph;
use crate::rng;

pub type Label = u32;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KExpr {
    Create { label: Label, name: String },
    Union(Box<KExpr>, Box<KExpr>),
    Eta { i: Label, j: Label, sub: Box<KExpr> },
    Rho { i: Label, j: Label, sub: Box<KExpr> },
}

impl KExpr {
    pub fn create(label: Label, name: impl Into<String>) -> KExpr {
        KExpr::Create {
            label,
            name: name.into(),
        }
    }

    pub fn union(left: KExpr, right: KExpr) -> KExpr {
        KExpr::Union(Box::new(left), Box::new(right))
    }

    pub fn eta(i: Label, j: Label, sub: KExpr) -> KExpr {
        KExpr::Eta {
            i,
            j,
            sub: Box::new(sub),
        }
    }

    pub fn rho(i: Label, j: Label, sub: KExpr) -> KExpr {
        KExpr::Rho {
            i,
            j,
            sub: Box::new(sub),
        }
    }

    /// Number of Create leaves, i.e. vertices of the evaluated graph.
    pub fn vertex_count(&self) -> usize {
        match self {
            KExpr::Create { .. } => 1,
            KExpr::Union(l, r) => l.vertex_count() + r.vertex_count(),
            KExpr::Eta { sub, .. } | KExpr::Rho { sub, .. } => sub.vertex_count(),
        }
    }

    /// Total number of operations (AST nodes).
    pub fn op_count(&self) -> usize {
        match self {
            KExpr::Create { .. } => 1,
            KExpr::Union(l, r) => 1 + l.op_count() + r.op_count(),
            KExpr::Eta { sub, .. } | KExpr::Rho { sub, .. } => 1 + sub.op_count(),
        }
    }

    fn collect_labels(&self, out: &mut BTreeSet<Label>) {
        match self {
            KExpr::Create { label, .. } => {
                out.insert(*label);
            }
            KExpr::Union(l, r) => {
                l.collect_labels(out);
                r.collect_labels(out);
            }
            KExpr::Eta { i, j, sub } | KExpr::Rho { i, j, sub } => {
                out.insert(*i);
                out.insert(*j);
                sub.collect_labels(out);
            }
        }
    }

    /// Checks the invariants the parser enforces: distinct names, `eta`
    /// labels distinct, labels positive.
    pub fn validate(&self) -> Result<()> {
        fn walk<'a>(e: &'a KExpr, names: &mut HashSet<&'a str>) -> Result<()> {
            match e {
                KExpr::Create { label, name } => {
                    if *label == 0 {
                        return Err(Error::Precondition("label 0 is not a positive label".into()));
                    }
                    if !names.insert(name) {
                        return Err(Error::Precondition(format!("duplicate vertex name {name}")));
                    }
                    Ok(())
                }
                KExpr::Union(l, r) => {
                    walk(l, names)?;
                    walk(r, names)
                }
                KExpr::Eta { i, j, sub } | KExpr::Rho { i, j, sub } => {
                    if *i == 0 || *j == 0 {
                        return Err(Error::Precondition("label 0 is not a positive label".into()));
                    }
                    if matches!(e, KExpr::Eta { .. }) && i == j {
                        return Err(Error::Precondition(format!("eta labels equal ({i})")));
                    }
                    walk(sub, names)
                }
            }
        }
        walk(self, &mut HashSet::new())
    }
}

/// Canonical printer; `parse(&e.to_string())` gives back `e`.
impl fmt::Display for KExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KExpr::Create { label, name } => write!(f, "node({label},{name})"),
            KExpr::Union(l, r) => write!(f, "u({l},{r})"),
            KExpr::Eta { i, j, sub } => write!(f, "eta({i},{j},{sub})"),
            KExpr::Rho { i, j, sub } => write!(f, "rho({i},{j},{sub})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LabeledGraph {
    #[serde(skip)]
    pub graph: Graph,
    pub labels: Vec<Label>,
    pub names: Vec<String>,
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Word(String),
    Int(u64),
    LParen,
    RParen,
    Comma,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Word(w) => write!(f, "'{w}'"),
            Tok::Int(i) => write!(f, "'{i}'"),
            Tok::LParen => f.write_str("'('"),
            Tok::RParen => f.write_str("')'"),
            Tok::Comma => f.write_str("','"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    column: usize,
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str) -> Self {
        Lexer {
            chars: text.chars().peekable(),
            line: 1,
            column: 1,
        }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn tokens(mut self) -> Result<Vec<(Tok, usize, usize)>> {
        let mut out = Vec::new();
        loop {
            while self.chars.peek().is_some_and(|c| c.is_whitespace()) {
                self.bump();
            }
            let (line, column) = (self.line, self.column);
            let Some(&c) = self.chars.peek() else {
                out.push((Tok::Eof, line, column));
                return Ok(out);
            };
            let tok = match c {
                '(' => {
                    self.bump();
                    Tok::LParen
                }
                ')' => {
                    self.bump();
                    Tok::RParen
                }
                ',' => {
                    self.bump();
                    Tok::Comma
                }
                c if c.is_ascii_alphanumeric() || c == '_' => {
                    let mut word = String::new();
                    while let Some(&c) = self.chars.peek() {
                        if c.is_ascii_alphanumeric() || c == '_' {
                            word.push(c);
                            self.bump();
                        } else {
                            break;
                        }
                    }
                    if word.bytes().all(|b| b.is_ascii_digit()) {
                        let value = word
                            .parse()
                            .map_err(|_| Error::parse(line, column, format!("integer {word} too large")))?;
                        Tok::Int(value)
                    } else {
                        Tok::Word(word)
                    }
                }
                other => return Err(Error::parse(line, column, format!("unexpected character {other:?}"))),
            };
            out.push((tok, line, column));
        }
    }
}

struct Parser {
    toks: Vec<(Tok, usize, usize)>,
    pos: usize,
    names: HashSet<String>,
}

impl Parser {
    fn peek(&self) -> &(Tok, usize, usize) {
        &self.toks[self.pos]
    }

    fn next(&mut self) -> (Tok, usize, usize) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok) -> Result<()> {
        let (tok, line, column) = self.next();
        if tok == want {
            Ok(())
        } else {
            Err(Error::parse(line, column, format!("expected {want}, found {tok}")))
        }
    }

    fn label(&mut self) -> Result<Label> {
        match self.next() {
            (Tok::Int(0), line, column) => Err(Error::parse(line, column, "labels must be positive")),
            (Tok::Int(v), line, column) => {
                Label::try_from(v).map_err(|_| Error::parse(line, column, format!("label {v} too large")))
            }
            (tok, line, column) => Err(Error::parse(line, column, format!("expected a label, found {tok}"))),
        }
    }

    fn expr(&mut self) -> Result<KExpr> {
        let (tok, line, column) = self.next();
        let Tok::Word(op) = tok else {
            return Err(Error::parse(
                line,
                column,
                format!("expected an operation, found {tok}"),
            ));
        };
        self.expect(Tok::LParen)?;
        let e = match op.as_str() {
            "node" => {
                let label = self.label()?;
                self.expect(Tok::Comma)?;
                let (tok, nl, nc) = self.next();
                let name = match tok {
                    Tok::Word(w) => w,
                    Tok::Int(i) => i.to_string(),
                    other => return Err(Error::parse(nl, nc, format!("expected a vertex name, found {other}"))),
                };
                if !self.names.insert(name.clone()) {
                    return Err(Error::parse(nl, nc, format!("duplicate vertex name {name}")));
                }
                KExpr::Create { label, name }
            }
            "u" => {
                let l = self.expr()?;
                self.expect(Tok::Comma)?;
                let r = self.expr()?;
                KExpr::union(l, r)
            }
            "eta" | "rho" => {
                let i = self.label()?;
                self.expect(Tok::Comma)?;
                let j = self.label()?;
                self.expect(Tok::Comma)?;
                if op == "eta" && i == j {
                    return Err(Error::parse(line, column, format!("eta labels equal ({i})")));
                }
                let sub = self.expr()?;
                if op == "eta" {
                    KExpr::eta(i, j, sub)
                } else {
                    KExpr::rho(i, j, sub)
                }
            }
            other => {
                return Err(Error::parse(
                    line,
                    column,
                    format!("unknown operation '{other}' (expected node, u, eta or rho)"),
                ))
            }
        };
        self.expect(Tok::RParen)?;
        Ok(e)
    }
}

pub fn parse(text: &str) -> Result<KExpr> {
    let toks = Lexer::new(text).tokens()?;
    let mut p = Parser {
        toks,
        pos: 0,
        names: HashSet::new(),
    };
    let e = p.expr()?;
    let (tok, line, column) = p.peek().clone();
    if tok != Tok::Eof {
        return Err(Error::parse(line, column, format!("trailing input starting at {tok}")));
    }
    Ok(e)
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

struct Partial {
    labels: Vec<Label>,
    names: Vec<String>,
    edges: HashSet<(usize, usize)>,
}

fn eval_into(e: &KExpr) -> Partial {
    match e {
        KExpr::Create { label, name } => Partial {
            labels: vec![*label],
            names: vec![name.clone()],
            edges: HashSet::new(),
        },
        KExpr::Union(l, r) => {
            let mut left = eval_into(l);
            let right = eval_into(r);
            let offset = left.labels.len();
            left.labels.extend(right.labels);
            left.names.extend(right.names);
            left.edges
                .extend(right.edges.into_iter().map(|(a, b)| (a + offset, b + offset)));
            left
        }
        KExpr::Eta { i, j, sub } => {
            let mut p = eval_into(sub);
            let is: Vec<usize> = (0..p.labels.len()).filter(|&v| p.labels[v] == *i).collect();
            let js: Vec<usize> = (0..p.labels.len()).filter(|&v| p.labels[v] == *j).collect();
            for &a in &is {
                for &b in &js {
                    p.edges.insert((a.min(b), a.max(b)));
                }
            }
            p
        }
        KExpr::Rho { i, j, sub } => {
            let mut p = eval_into(sub);
            for l in p.labels.iter_mut() {
                if *l == *i {
                    *l = *j;
                }
            }
            p
        }
    }
}

/// Evaluates `e`; vertices are numbered in left-to-right Create order.
pub fn eval(e: &KExpr) -> LabeledGraph {
    let p = eval_into(e);
    let graph = Graph::from_fn(p.labels.len(), |a, b| p.edges.contains(&(a, b)));
    LabeledGraph {
        graph,
        labels: p.labels,
        names: p.names,
    }
}

/// Distinct labels appearing anywhere in `e`; an upper bound on the
/// clique-width of `eval(e)`.
pub fn label_count(e: &KExpr) -> usize {
    let mut labels = BTreeSet::new();
    e.collect_labels(&mut labels);
    labels.len()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CwdBoundReport {
    pub vertices: usize,
    pub labels: usize,
    /// `2 * labels - 1`.
    pub bound: usize,
    pub min_fun: usize,
    pub pass: bool,
    pub witness: FunResult,
}

/// Checks `min_fun(eval(e)) <= 2 * label_count(e) - 1`.
///
/// A failure would mean the evaluator or the functionality search is wrong:
/// the inequality follows from `fun(G) <= 2 cwd(G) - 1`.
pub fn check_fun_cwd_bound(e: &KExpr) -> Result<CwdBoundReport> {
    let lg = eval(e);
    let labels = label_count(e);
    let bound = 2 * labels - 1;
    let witness = functionality::min_fun(&lg.graph)?;
    Ok(CwdBoundReport {
        vertices: lg.graph.n(),
        labels,
        bound,
        min_fun: witness.value,
        pass: witness.value <= bound,
        witness,
    })
}

/// Seeded random expression with exactly `ops` operations over labels
/// `1..=k`. Vertex names are `v0, v1, ...` in creation order.
pub fn random_kexpression(k: Label, ops: usize, seed: u64) -> Result<KExpr> {
    if k == 0 {
        return Err(Error::OutOfRange {
            what: "labels",
            value: 0,
            range: ">= 1",
        });
    }
    if ops == 0 {
        return Err(Error::OutOfRange {
            what: "ops",
            value: 0,
            range: ">= 1",
        });
    }
    let mut rng = rng::seeded(seed);
    let mut next_name = 0usize;
    Ok(random_node(&mut rng, k, ops, &mut next_name))
}

fn random_node(rng: &mut rng::SeededRng, k: Label, ops: usize, next_name: &mut usize) -> KExpr {
    if ops == 1 {
        let name = format!("v{next_name}");
        *next_name += 1;
        return KExpr::create(rng.gen_range(1..=k), name);
    }
    // unary nodes need one op below them, union needs two
    let choice = if ops == 2 {
        rng.gen_range(1..3)
    } else {
        rng.gen_range(0..3)
    };
    match choice {
        0 => {
            let left_ops = rng.gen_range(1..ops - 1);
            let left = random_node(rng, k, left_ops, next_name);
            let right = random_node(rng, k, ops - 1 - left_ops, next_name);
            KExpr::union(left, right)
        }
        1 if k >= 2 => {
            let i = rng.gen_range(1..=k);
            let mut j = rng.gen_range(1..k);
            if j >= i {
                j += 1;
            }
            KExpr::eta(i, j, random_node(rng, k, ops - 1, next_name))
        }
        _ => {
            let i = rng.gen_range(1..=k);
            let j = rng.gen_range(1..=k);
            KExpr::rho(i, j, random_node(rng, k, ops - 1, next_name))
        }
    }
}

/// The 4-expression of the 5-cycle a-b-c-d-e-a.
pub const C5_EXPRESSION: &str = "eta(4,1,eta(4,3,u(node(4,e),rho(4,3,rho(3,2,eta(4,3,u(node(4,d),eta(3,2,u(node(3,c),eta(2,1,u(node(2,b),node(1,a))))))))))))";

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_examples() {
        assert_eq!(parse("node(1,a)").unwrap(), KExpr::create(1, "a"));
        assert_eq!(
            parse("eta(1,2,u(node(1,a),node(2,b)))").unwrap(),
            KExpr::eta(1, 2, KExpr::union(KExpr::create(1, "a"), KExpr::create(2, "b")))
        );
        let err = parse("eta(1,1,node(1,a))").unwrap_err();
        assert!(err.to_string().contains("eta labels equal"), "{err}");
    }

    #[test]
    fn parse_errors_carry_positions() {
        match parse("u(node(1,a),\n  node(2,a))") {
            Err(Error::Parse { line, column, message }) => {
                assert_eq!((line, column), (2, 10));
                assert!(message.contains("duplicate"));
            }
            other => panic!("{other:?}"),
        }
        match parse("node(1 a)") {
            Err(Error::Parse { line: 1, column: 8, .. }) => {}
            other => panic!("{other:?}"),
        }
        assert!(parse("node(0,a)").is_err());
        assert!(parse("node(1,a) extra").is_err());
        assert!(parse("mul(1,2)").is_err());
        assert!(parse("").is_err());
    }

    #[test]
    fn whitespace_is_ignored() {
        let e = parse("  eta ( 1 , 2 ,\n\tu( node(1, a) , node(2,b) ) )").unwrap();
        assert_eq!(e.to_string(), "eta(1,2,u(node(1,a),node(2,b)))");
    }

    #[test]
    fn eval_examples() {
        let single = eval(&parse("node(1,a)").unwrap());
        assert_eq!(single.graph.n(), 1);
        assert_eq!(single.graph.edge_count(), 0);

        let edge = eval(&parse("eta(1,2,u(node(1,a),node(2,b)))").unwrap());
        assert_eq!(edge.graph.edges(), vec![(0, 1)]);
        assert_eq!(edge.names, vec!["a", "b"]);
    }

    #[test]
    fn c5_expression() {
        let e = parse(C5_EXPRESSION).unwrap();
        assert_eq!(label_count(&e), 4);
        let lg = eval(&e);
        // vertex order: e, d, c, b, a
        let name = |v: usize| lg.names[v].clone();
        let mut edges: Vec<String> = lg
            .graph
            .edges()
            .into_iter()
            .map(|(a, b)| {
                let mut p = [name(a), name(b)];
                p.sort();
                p.concat()
            })
            .collect();
        edges.sort();
        assert_eq!(edges, vec!["ab", "ae", "bc", "cd", "de"]);
        let report = check_fun_cwd_bound(&e).unwrap();
        assert_eq!(report.min_fun, 2);
        assert_eq!(report.bound, 7);
        assert!(report.pass);
    }

    #[test]
    fn label_count_examples() {
        assert_eq!(label_count(&parse("node(1,a)").unwrap()), 1);
        assert_eq!(
            label_count(&parse("rho(2,1,eta(1,2,u(node(1,a),node(2,b))))").unwrap()),
            2
        );
        let r = check_fun_cwd_bound(&parse("node(1,a)").unwrap()).unwrap();
        assert_eq!((r.min_fun, r.bound, r.pass), (0, 1, true));
    }

    #[test]
    fn random_expressions() {
        assert!(matches!(
            random_kexpression(1, 1, 5).unwrap(),
            KExpr::Create { label: 1, .. }
        ));
        assert_eq!(
            random_kexpression(3, 40, 7).unwrap(),
            random_kexpression(3, 40, 7).unwrap()
        );
        let e = random_kexpression(2, 10, 0).unwrap();
        assert_eq!(e.op_count(), 10);
        assert!(label_count(&e) <= 2);
        e.validate().unwrap();
        assert_eq!(eval(&e).graph.n(), e.vertex_count());
        for seed in 0..50 {
            let e = random_kexpression(3, 25, seed).unwrap();
            assert_eq!(parse(&e.to_string()).unwrap(), e);
        }
        assert!(random_kexpression(0, 3, 0).is_err());
    }

    #[test]
    fn eta_and_rho_are_total() {
        // no 3-labelled vertices: no-op
        let e = parse("eta(3,1,node(1,a))").unwrap();
        assert_eq!(eval(&e).graph.edge_count(), 0);
        let e = parse("rho(5,1,node(1,a))").unwrap();
        assert_eq!(eval(&e).labels, vec![1]);
    }
}
