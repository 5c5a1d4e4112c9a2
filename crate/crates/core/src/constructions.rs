//! Extremal constructions: hypergraphs avoiding a star forest in one of the
//! three senses, each with an edge count given in closed form.
//!
//! Every construction reserves a small set `A` of `i − 1` (or `s`) vertices
//! `0..|A|` and fills the rest `B` so that every vertex of `B` is too weak to
//! centre any of the first `i` stars on its own. The stars then need `i`
//! distinct vertices of `A`, which do not exist.

use serde::{Serialize, Serializer};

use crate::arith::{binom, fraction_string, int, Rational};
use crate::error::{Error, Result};
use crate::formulas::{self, StarTuranOracle};
use crate::hypergraph::{k_subsets, Hypergraph, Vertex};
use crate::patterns::StarForestSpec;
use crate::search::{self, ForbiddenFamily, Mode};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConstructionKind {
    Expansion,
    Linear,
    BergeRegular,
    BergeBlock,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConstructionReport {
    pub kind: ConstructionKind,
    pub n: usize,
    pub r: usize,
    pub spec: StarForestSpec,
    /// The index `i` (or `s` for the regular Berge witness).
    pub index: usize,
    #[serde(skip)]
    pub hypergraph: Hypergraph,
    pub edges: usize,
    /// Edge count predicted from the parameters alone.
    pub claimed_count: i128,
    /// Corresponding term of the matching upper-bound formula.
    #[serde(serialize_with = "ser_fraction")]
    pub formula_term: Rational,
    pub count_equals_formula: bool,
    /// Edges packed inside `A` by the linear witness.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub packed_in_a: Option<usize>,
    pub verified_free: Option<bool>,
}

fn ser_fraction<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&fraction_string(r))
}

impl ConstructionReport {
    fn new(
        kind: ConstructionKind,
        (n, r, spec, index): (usize, usize, &StarForestSpec, usize),
        hypergraph: Hypergraph,
        claimed_count: i128,
        formula_term: Rational,
    ) -> Self {
        ConstructionReport {
            kind,
            n,
            r,
            spec: spec.clone(),
            index,
            edges: hypergraph.num_edges(),
            hypergraph,
            claimed_count,
            formula_term,
            count_equals_formula: int(claimed_count) == formula_term,
            packed_in_a: None,
            verified_free: None,
        }
    }

    pub fn count_matches(&self) -> bool {
        self.claimed_count == self.edges as i128
    }

    /// The family this construction is meant to avoid.
    pub fn target_family(&self) -> Result<ForbiddenFamily> {
        let mode = match self.kind {
            ConstructionKind::Expansion | ConstructionKind::Linear => Mode::Expansion,
            ConstructionKind::BergeRegular | ConstructionKind::BergeBlock => Mode::Berge,
        };
        ForbiddenFamily::star_forest(&self.spec, mode, self.r)
    }

    /// Runs the exact deciders and records the outcome. The linear witness
    /// must also be linear.
    pub fn verify(&mut self) -> Result<bool> {
        let family = self.target_family()?;
        let mut free = search::verify_free(&self.hypergraph, &family)?.is_free();
        if self.kind == ConstructionKind::Linear {
            free &= self.hypergraph.is_linear();
        }
        self.verified_free = Some(free);
        Ok(free)
    }
}

/// Among successful reports, the one with most edges, smallest index first.
pub fn best_of(reports: impl IntoIterator<Item = Result<ConstructionReport>>) -> Option<ConstructionReport> {
    reports
        .into_iter()
        .filter_map(Result::ok)
        .fold(None, |best: Option<ConstructionReport>, rep| match best {
            Some(b) if b.edges >= rep.edges => Some(b),
            _ => Some(rep),
        })
}

fn check_index(spec: &StarForestSpec, i: usize, what: &str) -> Result<()> {
    if i == 0 || i > spec.k() {
        return Err(Error::InvalidParameter(format!("{what} = {i} outside 1..={}", spec.k())));
    }
    Ok(())
}

fn u(x: usize) -> u64 {
    x as u64
}

/// All `r`-sets meeting `A = 0..i−1`, plus an `S⁺_{d_i}`-free part inside
/// `B`: every `r`-set through the pair `{i−1, i}` for `r ≥ 3`, or a graph of
/// maximum degree `d_i − 1` for `r = 2`.
pub fn expansion_witness(n: usize, r: usize, spec: &StarForestSpec, i: usize) -> Result<ConstructionReport> {
    check_index(spec, i, "i")?;
    if r < 2 {
        return Err(Error::InvalidParameter(format!("uniformity {r} < 2")));
    }
    if n + 1 < i + r {
        return Err(Error::Infeasible(format!("B has {} < r = {r} vertices", (n + 1).saturating_sub(i))));
    }
    let a = i - 1;
    let m = n - a;
    let d = spec.d(i);
    let mut edges: Vec<Vec<Vertex>> = k_subsets(n, r).into_iter().filter(|e| e[0] < a).collect();
    let b_count: i128 = if d < 2 {
        0
    } else if r == 2 {
        let g = max_degree_graph(m, d - 1);
        let count = g.len();
        edges.extend(g.into_iter().map(|e| e.iter().map(|&x| x + a).collect()));
        count as i128
    } else {
        let pair = [a, a + 1];
        edges.extend(
            k_subsets(m - 2, r - 2)
                .into_iter()
                .map(|rest| pair.iter().copied().chain(rest.iter().map(|&x| x + a + 2)).collect()),
        );
        binom(u(m - 2), u(r - 2))?
    };
    let claimed = binom(u(n), u(r))? - binom(u(m), u(r))? + b_count;
    let oracle = if r == 2 { StarTuranOracle::GraphExact } else { StarTuranOracle::FixedPair };
    let single = StarForestSpec::new(spec.degrees()[..i].to_vec())?;
    let term = formulas::ex_expansion_rhs(n, r, &single, &oracle)?.terms.last().expect("index i is present").value;
    let h = Hypergraph::from_sorted_edges(n, edges);
    Ok(ConstructionReport::new(ConstructionKind::Expansion, (n, r, spec, i), h, claimed, term))
}

/// `⌊deg·m/2⌋` edges on `m` vertices with maximum degree `deg`, or the
/// complete graph when `deg ≥ m − 1`: a circulant with jumps
/// `1..=⌊deg/2⌋`, plus a matching for odd `deg`.
fn max_degree_graph(m: usize, deg: usize) -> Vec<Vec<Vertex>> {
    if deg + 1 >= m {
        return k_subsets(m, 2);
    }
    let mut edges = Vec::new();
    let pair = |x: usize, y: usize| if x < y { vec![x, y] } else { vec![y, x] };
    for j in 1..=deg / 2 {
        edges.extend((0..m).map(|v| pair(v, (v + j) % m)));
    }
    if deg % 2 == 1 {
        let half = m / 2;
        if m.is_multiple_of(2) {
            edges.extend((0..half).map(|v| pair(v, v + half)));
        } else {
            let h = (m - 1) / 2;
            edges.extend((0..h).map(|v| pair(v, v + h)));
        }
    }
    edges.sort_unstable();
    edges.dedup();
    edges
}

/// Linear witness. `B` is split into blocks `[r−1]^{i−1} × [r]^{d_i−1}`:
/// the `r`-lines of the `[r]` factor stay inside `B`, and each `(r−1)`-line
/// of the `[r−1]` factor in coordinate direction `j` is completed by `a_j`.
/// A greedy linear packing of `r`-sets inside `A` is added on top.
pub fn linear_witness(n: usize, r: usize, spec: &StarForestSpec, i: usize) -> Result<ConstructionReport> {
    check_index(spec, i, "i")?;
    if r < 2 {
        return Err(Error::InvalidParameter(format!("uniformity {r} < 2")));
    }
    if n < i {
        return Err(Error::Infeasible(format!("n = {n} < i = {i} leaves no vertices outside A")));
    }
    let a = i - 1;
    let m = n - a;
    let d = spec.d(i);
    let overflow = || Error::Overflow("lattice block size");
    let x_size = (r - 1).checked_pow(a as u32).ok_or_else(overflow)?;
    let y_size = r.checked_pow(d as u32 - 1).ok_or_else(overflow)?;
    let block = x_size.checked_mul(y_size).ok_or_else(overflow)?;
    if !m.is_multiple_of(block) {
        return Err(Error::Infeasible(format!(
            "{block} = ({})^{a}·{r}^{} does not divide n − i + 1 = {m}",
            r - 1,
            d - 1
        )));
    }
    let mut edges = Vec::new();
    for b in 0..m / block {
        let base = a + b * block;
        let at = |x: usize, y: usize| base + x * y_size + y;
        for x in 0..x_size {
            for c in 0..d - 1 {
                let stride = r.pow(c as u32);
                for y in (0..y_size).filter(|&y| (y / stride).is_multiple_of(r)) {
                    edges.push((0..r).map(|t| at(x, y + t * stride)).collect::<Vec<_>>());
                }
            }
        }
        for y in 0..y_size {
            for j in 0..a {
                let stride = (r - 1).pow(j as u32);
                for x in (0..x_size).filter(|&x| (x / stride).is_multiple_of(r - 1)) {
                    let mut e: Vec<Vertex> = vec![j];
                    e.extend((0..r - 1).map(|t| at(x + t * stride, y)));
                    edges.push(e);
                }
            }
        }
    }
    let packed = linear_packing(a, r);
    let packed_len = packed.len();
    edges.extend(packed);
    let r_ = r as i128;
    let m_ = m as i128;
    let claimed = (d as i128 - 1) * m_ / r_ + a as i128 * m_ / (r_ - 1) + packed_len as i128;
    let spec_i = StarForestSpec::new(spec.degrees()[..i].to_vec())?;
    let term = formulas::ex_linear_rhs(n, r, &spec_i)?.terms.last().expect("index i is present").value;
    let h = Hypergraph::from_sorted_edges(n, edges);
    let mut rep = ConstructionReport::new(ConstructionKind::Linear, (n, r, spec, i), h, claimed, term);
    rep.packed_in_a = Some(packed_len);
    Ok(rep)
}

/// Greedy pairwise-linear `r`-sets inside `0..a`, in lexicographic order.
fn linear_packing(a: usize, r: usize) -> Vec<Vec<Vertex>> {
    let mut covered = vec![vec![false; a]; a];
    let mut out = Vec::new();
    for e in k_subsets(a, r) {
        let pairs = || e.iter().enumerate().flat_map(|(p, &x)| e[p + 1..].iter().map(move |&y| (x, y)));
        if pairs().any(|(x, y)| covered[x][y]) {
            continue;
        }
        for (x, y) in pairs() {
            covered[x][y] = true;
        }
        out.push(e);
    }
    out
}

/// `A = 0..s` added to every edge of a `(d_{s+1}−1)`-regular
/// `(r−s)`-uniform hypergraph on the remaining `n − s` vertices.
pub fn berge_regular_witness(n: usize, r: usize, spec: &StarForestSpec, s: usize) -> Result<ConstructionReport> {
    if s == 0 || s >= spec.k() {
        return Err(Error::InvalidParameter(format!("s = {s} outside 1..{}", spec.k())));
    }
    if r <= s || n <= s {
        return Err(Error::Infeasible(format!("need r > s and n > s, got r = {r}, n = {n}, s = {s}")));
    }
    let (m, width, deg) = (n - s, r - s, spec.d(s + 1) - 1);
    if width < deg + 1 {
        return Err(Error::Infeasible(format!("r − s = {width} < d_(s+1) = {}", deg + 1)));
    }
    let blocks = cyclic_blocks(m, width, deg)?;
    let edges: Vec<Vec<Vertex>> = blocks
        .into_iter()
        .map(|b| (0..s).chain(b.into_iter().map(|x| x + s)).collect())
        .collect();
    let claimed = deg as i128 * m as i128 / width as i128;
    let term = Rational::new(deg as i128, width as i128) * int(m as i128);
    let h = Hypergraph::from_sorted_edges(n, edges.into_iter().map(sorted).collect());
    Ok(ConstructionReport::new(ConstructionKind::BergeRegular, (n, r, spec, s), h, claimed, term))
}

fn sorted(mut e: Vec<Vertex>) -> Vec<Vertex> {
    e.sort_unstable();
    e
}

/// Classes of size `d_i` (and a remainder class) in `B`; every `r`-subset of
/// `A ∪ S` for each class `S`.
pub fn berge_block_witness(n: usize, r: usize, spec: &StarForestSpec, i: usize) -> Result<ConstructionReport> {
    check_index(spec, i, "i")?;
    if r < 2 {
        return Err(Error::InvalidParameter(format!("uniformity {r} < 2")));
    }
    if n + 1 < i {
        return Err(Error::Infeasible(format!("n = {n} < i − 1 = {}", i - 1)));
    }
    let a = i - 1;
    let m = n - a;
    let d = spec.d(i);
    let (q, t) = (m / d, m % d);
    let mut edges = Vec::new();
    if m == 0 {
        edges.extend(k_subsets(a, r));
    }
    let mut start = a;
    while start < n {
        let size = d.min(n - start);
        let class: Vec<Vertex> = (0..a).chain(start..start + size).collect();
        edges.extend(k_subsets(class.len(), r).into_iter().map(|e| e.iter().map(|&p| class[p]).collect()));
        start += size;
    }
    let inside = binom(u(a), u(r))?;
    let claimed = (binom(u(d + a), u(r))? - inside) * q as i128
        + if t > 0 { binom(u(t + a), u(r))? - inside } else { 0 }
        + inside;
    let term = int(formulas::block_term(n, r, d, i)?);
    let h = Hypergraph::from_sorted_edges(n, edges);
    Ok(ConstructionReport::new(ConstructionKind::BergeBlock, (n, r, spec, i), h, claimed, term))
}

/// `d`-regular `u`-uniform hypergraph on `m` vertices made of `d` cyclically
/// shifted perfect matchings.
pub fn regular_uniform(m: usize, u: usize, d: usize) -> Result<Hypergraph> {
    if u < 2 {
        return Err(Error::InvalidParameter(format!("edge size {u} < 2")));
    }
    Ok(Hypergraph::from_sorted_edges(m, cyclic_blocks(m, u, d)?.into_iter().map(sorted).collect()))
}

fn cyclic_blocks(m: usize, u: usize, d: usize) -> Result<Vec<Vec<Vertex>>> {
    if d == 0 {
        return Ok(Vec::new());
    }
    if u == 0 || !m.is_multiple_of(u) {
        return Err(Error::Infeasible(format!("edge size {u} does not divide {m}")));
    }
    if d > u {
        return Err(Error::Infeasible(format!("degree {d} exceeds edge size {u}")));
    }
    if d >= 2 && m == u {
        return Err(Error::Infeasible("shifted matchings coincide when m = u".into()));
    }
    let mut out = Vec::with_capacity(d * m / u);
    for shift in 0..d {
        for j in 0..m / u {
            out.push((0..u).map(|c| (shift + j * u + c) % m).collect());
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(d: &[usize]) -> StarForestSpec {
        StarForestSpec::new(d.to_vec()).unwrap()
    }

    #[test]
    fn expansion_counts() {
        let rep = expansion_witness(6, 3, &spec(&[2, 2]), 2).unwrap();
        assert_eq!((rep.edges, rep.claimed_count), (13, 13));
        assert!(rep.count_equals_formula);
        assert_eq!(expansion_witness(6, 3, &spec(&[1]), 1).unwrap().edges, 0);
        let rep = expansion_witness(7, 2, &spec(&[3]), 1).unwrap();
        assert_eq!(rep.edges, 7);
        assert!(rep.hypergraph.is_regular(2));
        assert!(expansion_witness(3, 3, &spec(&[2, 2]), 2).is_err());
    }

    #[test]
    fn max_degree_graphs() {
        for m in 1..12 {
            for deg in 0..m {
                let g = max_degree_graph(m, deg);
                let h = Hypergraph::new(m, &g).unwrap();
                assert_eq!(g.len(), deg * m / 2, "m = {m}, deg = {deg}");
                assert!(h.max_degree() <= deg);
            }
        }
    }

    #[test]
    fn linear_counts() {
        let rep = linear_witness(9, 3, &spec(&[2]), 1).unwrap();
        assert_eq!(rep.edges, 3);
        assert!(rep.hypergraph.is_linear());
        let rep = linear_witness(5, 3, &spec(&[2, 1]), 2).unwrap();
        assert_eq!(rep.edges, 2);
        assert!(rep.hypergraph.edges().iter().all(|e| e[0] == 0));
        assert!(linear_witness(10, 3, &spec(&[2]), 1).is_err());
        let rep = linear_witness(10, 2, &spec(&[3, 3, 3]), 3).unwrap();
        assert_eq!(rep.edges as i128, rep.claimed_count);
        assert!(rep.count_equals_formula);
    }

    #[test]
    fn packing_in_a() {
        assert!(linear_packing(2, 3).is_empty());
        assert_eq!(linear_packing(7, 3).len(), 7);
        assert_eq!(linear_packing(4, 2).len(), 6);
    }

    #[test]
    fn regular_berge_counts() {
        let rep = berge_regular_witness(13, 4, &spec(&[3, 2]), 1).unwrap();
        assert_eq!((rep.edges, rep.claimed_count), (4, 4));
        assert_eq!(rep.formula_term, int(4));
        assert_eq!(berge_regular_witness(13, 4, &spec(&[3, 1]), 1).unwrap().edges, 0);
        let rep = berge_regular_witness(10, 4, &spec(&[2, 2]), 1).unwrap();
        assert_eq!(rep.edges, 3);
        assert!(berge_regular_witness(12, 4, &spec(&[3, 2]), 1).is_err());
    }

    #[test]
    fn block_counts() {
        let rep = berge_block_witness(7, 2, &spec(&[2, 2]), 2).unwrap();
        assert_eq!((rep.edges, rep.claimed_count), (9, 9));
        assert!(rep.count_equals_formula);
        let rep = berge_block_witness(7, 3, &spec(&[3]), 1).unwrap();
        assert_eq!(rep.edges, 2);
        let rep = berge_block_witness(8, 2, &spec(&[2, 2]), 2).unwrap();
        assert_eq!(rep.edges, 10);
        assert!(!rep.count_equals_formula);
    }

    #[test]
    fn regular_uniform_shapes() {
        let h = regular_uniform(12, 3, 2).unwrap();
        assert_eq!(h.num_edges(), 8);
        assert!(h.is_regular(2));
        assert_eq!(regular_uniform(7, 3, 0).unwrap().num_edges(), 0);
        assert_eq!(regular_uniform(6, 3, 1).unwrap().num_edges(), 2);
        assert!(regular_uniform(3, 3, 2).is_err());
        assert!(regular_uniform(7, 3, 1).is_err());
    }

    #[test]
    fn best_prefers_smallest_index() {
        let s = spec(&[2, 2]);
        let best = best_of((1..=2).map(|i| berge_block_witness(7, 2, &s, i))).unwrap();
        assert_eq!(best.index, 2);
        let tie = best_of((1..=2).map(|i| berge_block_witness(4, 3, &spec(&[1, 1]), i)));
        assert_eq!(tie.unwrap().index, 1);
    }
}
