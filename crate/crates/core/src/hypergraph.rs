//! Hypergraph carrier type and structural operations.
//!
//! Vertices are the integers `0..n`. Edges are stored strictly increasing and
//! the edge list is kept in lexicographic order without duplicates, so edge
//! indices are stable and two hypergraphs with the same edge set compare
//! equal.

use std::collections::HashSet;
use std::ops::Deref;

use serde::{Deserialize, Serialize};

use crate::arith::Rational;
use crate::error::{Error, Result};

pub type Vertex = usize;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Vec<Vertex>>,
}

impl Hypergraph {
    /// Builds a hypergraph, sorting each edge and dropping duplicate edges.
    pub fn new<I, E>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: AsRef<[Vertex]>,
    {
        let mut out = Vec::new();
        for edge in edges {
            let mut e = edge.as_ref().to_vec();
            if let Some(&v) = e.iter().find(|&&v| v >= n) {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            e.sort_unstable();
            if e.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::RepeatedVertex { edge: edge.as_ref().to_vec() });
            }
            if e.len() < 2 {
                return Err(Error::EdgeTooSmall { edge: e });
            }
            out.push(e);
        }
        Ok(Self::from_sorted_edges(n, out))
    }

    pub fn empty(n: usize) -> Self {
        Hypergraph { n, edges: Vec::new() }
    }

    /// Edges must already be valid strictly increasing vertex lists.
    pub(crate) fn from_sorted_edges(n: usize, mut edges: Vec<Vec<Vertex>>) -> Self {
        debug_assert!(edges
            .iter()
            .all(|e| e.len() >= 2 && e.windows(2).all(|w| w[0] < w[1]) && e[e.len() - 1] < n));
        edges.sort_unstable();
        edges.dedup();
        Hypergraph { n, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<Vertex>] {
        &self.edges
    }

    pub fn edge(&self, idx: usize) -> &[Vertex] {
        &self.edges[idx]
    }

    /// Index of `edge` (which must be sorted) in the canonical edge order.
    pub fn edge_index(&self, edge: &[Vertex]) -> Option<usize> {
        self.edges.binary_search_by(|e| e.as_slice().cmp(edge)).ok()
    }

    pub fn contains_edge(&self, edge: &[Vertex]) -> bool {
        self.edge_index(edge).is_some()
    }

    fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        Ok(())
    }

    pub fn degree(&self, v: Vertex) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.edges.iter().filter(|e| e.binary_search(&v).is_ok()).count())
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for e in &self.edges {
            for &v in e {
                deg[v] += 1;
            }
        }
        deg
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// `Σ|e| / n` as an exact rational; zero for the vertexless hypergraph.
    pub fn average_degree(&self) -> Rational {
        if self.n == 0 {
            return Rational::from_integer(0);
        }
        let total: usize = self.edges.iter().map(Vec::len).sum();
        Rational::new(total as i128, self.n as i128)
    }

    /// Edge indices incident to each vertex, in increasing order.
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.n];
        for (i, e) in self.edges.iter().enumerate() {
            for &v in e {
                inc[v].push(i);
            }
        }
        inc
    }

    pub fn is_uniform(&self, r: usize) -> bool {
        self.edges.iter().all(|e| e.len() == r)
    }

    /// The common edge size, if there is at least one edge and all agree.
    pub fn uniformity(&self) -> Option<usize> {
        let r = self.edges.first()?.len();
        self.is_uniform(r).then_some(r)
    }

    pub fn is_linear(&self) -> bool {
        // Every vertex pair may be covered by at most one edge.
        let mut seen = HashSet::new();
        for e in &self.edges {
            for (a, &u) in e.iter().enumerate() {
                for &v in &e[a + 1..] {
                    if !seen.insert((u, v)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn is_regular(&self, d: usize) -> bool {
        self.degrees().into_iter().all(|x| x == d)
    }

    /// Vertex-disjoint union; `other`'s vertices are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Hypergraph) -> Hypergraph {
        let shift = self.n;
        let mut edges = self.edges.clone();
        edges.extend(
            other
                .edges
                .iter()
                .map(|e| e.iter().map(|&v| v + shift).collect()),
        );
        Hypergraph::from_sorted_edges(self.n + other.n, edges)
    }

    /// Cartesian product on `V(self) × V(other)`, the pair `(u, v)` encoded
    /// as `u * other.n() + v`. Edges are `{u} × e` for `e ∈ E(other)` and
    /// `f × {v}` for `f ∈ E(self)`.
    pub fn cartesian_product(&self, other: &Hypergraph) -> Hypergraph {
        let m = other.n;
        let mut edges = Vec::with_capacity(self.n * other.num_edges() + m * self.num_edges());
        for u in 0..self.n {
            for e in &other.edges {
                edges.push(e.iter().map(|&v| u * m + v).collect());
            }
        }
        for v in 0..m {
            for f in &self.edges {
                edges.push(f.iter().map(|&u| u * m + v).collect());
            }
        }
        Hypergraph::from_sorted_edges(self.n * m, edges)
    }

    /// All `r`-subsets of `0..n`; edgeless when `r > n` or `r < 2`.
    pub fn complete_uniform(n: usize, r: usize) -> Hypergraph {
        if r < 2 || r > n {
            return Hypergraph::empty(n);
        }
        Hypergraph::from_sorted_edges(n, k_subsets(n, r))
    }

    /// The lattice `[r]^d` with its canonical colouring. The tuple
    /// `(x_0, …, x_{d-1})` is vertex `Σ x_j r^j`; an edge collects the `r`
    /// tuples that agree outside coordinate `j`, and gets colour `j`.
    pub fn lattice(r: usize, d: usize) -> Result<(Hypergraph, EdgeColoring)> {
        if r < 2 {
            return Err(Error::InvalidParameter(format!("lattice side {r} < 2")));
        }
        if d < 1 {
            return Err(Error::InvalidParameter("lattice dimension must be ≥ 1".into()));
        }
        let n = checked_pow(r, d).ok_or(Error::Overflow("lattice vertex count"))?;
        let mut colored = Vec::with_capacity(d * n / r);
        for j in 0..d {
            let stride = r.pow(j as u32);
            for base in 0..n {
                if !(base / stride).is_multiple_of(r) {
                    continue;
                }
                let edge: Vec<Vertex> = (0..r).map(|x| base + x * stride).collect();
                colored.push((edge, j));
            }
        }
        colored.sort_unstable();
        let (edges, colors): (Vec<_>, Vec<_>) = colored.into_iter().unzip();
        Ok((Hypergraph { n, edges }, EdgeColoring { colors, num_colors: d }))
    }

    /// `r`-uniform hypergraph whose edges are the vertex sets of the
    /// `r`-cliques of `g`.
    pub fn clique_hypergraph(g: &Graph, r: usize) -> Result<Hypergraph> {
        if r < 2 {
            return Err(Error::InvalidParameter(format!("clique size {r} < 2")));
        }
        let n = g.n();
        let mut adj = vec![vec![false; n]; n];
        for e in g.edges() {
            adj[e[0]][e[1]] = true;
            adj[e[1]][e[0]] = true;
        }
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(r);
        extend_cliques(&adj, r, 0, &mut cur, &mut out);
        Ok(Hypergraph::from_sorted_edges(n, out))
    }

    /// The hypergraph on the same vertices keeping only edges for which
    /// `keep` returns true.
    pub fn filter_edges(&self, mut keep: impl FnMut(usize, &[Vertex]) -> bool) -> Hypergraph {
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|(i, e)| keep(*i, e))
            .map(|(_, e)| e.clone())
            .collect();
        Hypergraph { n: self.n, edges }
    }
}

fn extend_cliques(
    adj: &[Vec<bool>],
    r: usize,
    start: usize,
    cur: &mut Vec<Vertex>,
    out: &mut Vec<Vec<Vertex>>,
) {
    if cur.len() == r {
        out.push(cur.clone());
        return;
    }
    for v in start..adj.len() {
        if cur.iter().all(|&u| adj[u][v]) {
            cur.push(v);
            extend_cliques(adj, r, v + 1, cur, out);
            cur.pop();
        }
    }
}

fn checked_pow(base: usize, exp: usize) -> Option<usize> {
    let mut acc: usize = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base)?;
    }
    Some(acc)
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<Vec<Vertex>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<Vertex> = (0..k).collect();
    loop {
        out.push(cur.clone());
        // Advance to the next combination.
        let mut i = k;
        while i > 0 && cur[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        cur[i - 1] += 1;
        for j in i..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// A hypergraph all of whose edges have two vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Graph(Hypergraph);

impl Graph {
    pub fn new(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        Ok(Graph(Hypergraph::new(n, edges.iter().map(|&(u, v)| [u, v]))?))
    }

    pub fn from_hypergraph(h: Hypergraph) -> Result<Self> {
        if !h.is_uniform(2) {
            return Err(Error::NotUniform { expected: 2 });
        }
        Ok(Graph(h))
    }

    pub fn empty(n: usize) -> Self {
        Graph(Hypergraph::empty(n))
    }

    pub fn as_hypergraph(&self) -> &Hypergraph {
        &self.0
    }

    pub fn into_hypergraph(self) -> Hypergraph {
        self.0
    }

    /// Edges as ordered pairs `(u, v)` with `u < v`.
    pub fn edge_pairs(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.0.edges().iter().map(|e| (e[0], e[1]))
    }

    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        Graph(self.0.disjoint_union(&other.0))
    }
}

impl Deref for Graph {
    type Target = Hypergraph;

    fn deref(&self) -> &Hypergraph {
        &self.0
    }
}

/// Colour per edge index of the hypergraph it was built with.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeColoring {
    colors: Vec<usize>,
    num_colors: usize,
}

impl EdgeColoring {
    pub fn new(colors: Vec<usize>, num_colors: usize) -> Self {
        EdgeColoring { colors, num_colors }
    }

    pub fn color(&self, edge_idx: usize) -> usize {
        self.colors[edge_idx]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn num_colors(&self) -> usize {
        self.num_colors
    }

    /// Edge indices grouped by colour.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.num_colors];
        for (i, &c) in self.colors.iter().enumerate() {
            classes[c].push(i);
        }
        classes
    }

    /// Every edge coloured, and no two edges sharing a vertex share a colour.
    pub fn is_proper(&self, h: &Hypergraph) -> bool {
        if self.colors.len() != h.num_edges() || self.colors.iter().any(|&c| c >= self.num_colors) {
            return false;
        }
        let mut seen = HashSet::new();
        for (e, &c) in h.edges().iter().zip(&self.colors) {
            for &v in e {
                if !seen.insert((v, c)) {
                    return false;
                }
            }
        }
        true
    }

    /// Proper, and each colour class covers every vertex.
    pub fn classes_are_perfect_matchings(&self, h: &Hypergraph) -> bool {
        self.is_proper(h)
            && self.classes().iter().all(|class| {
                class.iter().map(|&i| h.edge(i).len()).sum::<usize>() == h.n()
            })
    }
}
