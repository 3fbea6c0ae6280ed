//! Labeled simple graphs and the two extremal constructions.
//!
//! The quasi-complete graph on `m = r(r-1)/2 + q` edges is a clique on
//! vertices `0..r`, vertex `r` joined to vertices `0..q`, and everything
//! else isolated. The quasi-star graph is the complement of the
//! quasi-complete graph with `binom(n,2) - m` edges.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::exact::{self, max_edges, triangular_decompose, ClosedForms};

/// Vertex degrees in label order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeSequence(pub Vec<u64>);

impl DegreeSequence {
    pub fn sum(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn sum_of_squares(&self) -> BigInt {
        self.0.iter().map(|&d| BigInt::from(d) * d).sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: BTreeSet::new(),
        }
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Graph { n, edges }
    }

    /// Rejects loops, out-of-range endpoints and repeated edges. Pairs may
    /// be given in either orientation.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            let reason = if u == v {
                Some(format!("loop at vertex {u}"))
            } else if u >= n || v >= n {
                Some(format!("endpoint out of range in ({u}, {v})"))
            } else if !g.edges.insert((u.min(v), u.max(v))) {
                Some(format!("duplicate edge ({u}, {v})"))
            } else {
                None
            };
            if let Some(reason) = reason {
                return Err(Error::EdgeList { line: 0, reason });
            }
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn degrees(&self) -> DegreeSequence {
        let mut d = vec![0u64; self.n];
        for &(u, v) in &self.edges {
            d[u] += 1;
            d[v] += 1;
        }
        DegreeSequence(d)
    }

    /// First Zagreb index: the sum of squared degrees.
    pub fn sum_sq_degrees(&self) -> BigInt {
        self.degrees().sum_of_squares()
    }

    pub fn complement(&self) -> Graph {
        let edges = (0..self.n)
            .flat_map(|u| (u + 1..self.n).map(move |v| (u, v)))
            .filter(|e| !self.edges.contains(e))
            .collect();
        Graph { n: self.n, edges }
    }

    /// Canonical text form: `"n m"`, then one `"u v"` line per edge with
    /// `u < v`, sorted. Every line ends with `\n`.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::with_capacity(8 * (self.edges.len() + 1));
        writeln!(out, "{} {}", self.n, self.edges.len()).unwrap();
        for (u, v) in &self.edges {
            writeln!(out, "{u} {v}").unwrap();
        }
        out
    }

    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let err = |line: usize, reason: &str| Error::EdgeList {
            line,
            reason: reason.to_string(),
        };
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (_, header) = lines.next().ok_or_else(|| err(1, "missing header"))?;
        let (n, m) = parse_pair(header).ok_or_else(|| err(1, "expected \"n m\""))?;
        let mut g = Graph::empty(n);
        for (i, line) in lines {
            let (u, v) = parse_pair(line).ok_or_else(|| err(i + 1, "expected \"u v\""))?;
            if u >= v {
                return Err(err(i + 1, "edge must satisfy u < v"));
            }
            if v >= n {
                return Err(err(i + 1, "endpoint out of range"));
            }
            if !g.edges.insert((u, v)) {
                return Err(err(i + 1, "duplicate edge"));
            }
        }
        if g.edges.len() != m {
            return Err(err(1, &format!("header declares {m} edges, found {}", g.edges.len())));
        }
        Ok(g)
    }
}

fn parse_pair(line: &str) -> Option<(usize, usize)> {
    let mut it = line.split_whitespace();
    let a = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    it.next().is_none().then_some((a, b))
}

fn to_usize(x: &BigInt) -> usize {
    x.to_usize().expect("vertex label fits in usize")
}

pub fn quasi_complete(n: u64, m: u64) -> Result<Graph> {
    exact::check_params(n, m)?;
    let tri = triangular_decompose(&BigInt::from(m))?;
    let (r, q) = (to_usize(&tri.r), to_usize(&tri.q));
    let required = if q > 0 { r + 1 } else { r };
    if (n as usize) < required {
        return Err(Error::VertexCountTooSmall {
            n,
            required: required as u64,
        });
    }
    let mut g = Graph::complete(r);
    g.n = n as usize;
    g.edges.extend((0..q).map(|u| (u, r)));
    Ok(g)
}

pub fn quasi_star(n: u64, m: u64) -> Result<Graph> {
    exact::check_params(n, m)?;
    let co_m = (max_edges(n) - m as u128) as u64;
    Ok(quasi_complete(n, co_m)?.complement())
}

/// Quasi-complete when `C >= S`, otherwise quasi-star.
pub fn extremal_graph(n: u64, m: u64) -> Result<Graph> {
    let forms = ClosedForms::new(n, m)?;
    if forms.c >= forms.s {
        quasi_complete(n, m)
    } else {
        quasi_star(n, m)
    }
}
