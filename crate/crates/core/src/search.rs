//! Exact Turán numbers for small instances and a randomized lower bound.
//!
//! The exact search is an include/exclude branch and bound over the
//! candidate `r`-sets in colex order. It keeps a pool of candidates that can
//! still be added without creating a forbidden copy; after every inclusion
//! each pooled candidate is rechecked, but only for copies that use the
//! candidate itself, since the current edge set is already free. A branch is
//! cut when the chosen edges plus the pool cannot beat the best value.
//!
//! Symmetry: when a candidate `c` is excluded, every candidate in its orbit
//! under the twin symmetries of (chosen, pool) is excluded with it. Any
//! solution using such an image maps to one using `c`, which the include
//! branch already covered.

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::arith::binom;
use crate::error::{Error, Result};
use crate::hypergraph::{k_subsets, Graph, Hypergraph, Vertex};
use crate::io::write_hypergraph;
use crate::patterns::symmetry::TwinClasses;
use crate::patterns::{
    expand, find_berge, find_expansion, find_sub, star_forest, StarForestSpec, WitnessReport,
};

pub const DEFAULT_BUDGET: u128 = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Sub,
    Berge,
    Expansion,
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sub" => Ok(Mode::Sub),
            "berge" => Ok(Mode::Berge),
            "expansion" => Ok(Mode::Expansion),
            other => Err(Error::InvalidFamily(format!("unknown mode {other:?}"))),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Sub => "sub",
            Mode::Berge => "berge",
            Mode::Expansion => "expansion",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Pattern {
    Graph(Graph),
    Hyper(Hypergraph),
}

impl Pattern {
    pub fn as_hypergraph(&self) -> &Hypergraph {
        match self {
            Pattern::Graph(g) => g.as_hypergraph(),
            Pattern::Hyper(h) => h,
        }
    }
}

#[derive(Clone, Debug)]
pub struct ForbiddenFamily {
    entries: Vec<(Pattern, Mode)>,
    r: usize,
    linear_only: bool,
}

impl ForbiddenFamily {
    pub fn new(entries: Vec<(Pattern, Mode)>, r: usize, linear_only: bool) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidFamily("no patterns given".into()));
        }
        if r < 2 {
            return Err(Error::InvalidFamily(format!("uniformity {r} < 2")));
        }
        for (p, mode) in &entries {
            if *mode != Mode::Sub && matches!(p, Pattern::Hyper(_)) {
                return Err(Error::InvalidFamily(format!("{mode} mode needs a graph pattern")));
            }
        }
        Ok(ForbiddenFamily { entries, r, linear_only })
    }

    /// The star forest of `spec` in the given sense. In subhypergraph mode the
    /// pattern is its `r`-uniform expansion.
    pub fn star_forest(spec: &StarForestSpec, mode: Mode, r: usize) -> Result<Self> {
        let f = star_forest(spec);
        let pattern = match mode {
            Mode::Sub => Pattern::Hyper(expand(&f, r)?),
            Mode::Berge | Mode::Expansion => Pattern::Graph(f),
        };
        Self::new(vec![(pattern, mode)], r, false)
    }

    pub fn single(pattern: Pattern, mode: Mode, r: usize) -> Result<Self> {
        Self::new(vec![(pattern, mode)], r, false)
    }

    pub fn with_linear(mut self, linear_only: bool) -> Self {
        self.linear_only = linear_only;
        self
    }

    pub fn push(&mut self, pattern: Pattern, mode: Mode) -> Result<()> {
        let mut entries = std::mem::take(&mut self.entries);
        entries.push((pattern, mode));
        *self = Self::new(entries, self.r, self.linear_only)?;
        Ok(())
    }

    pub fn entries(&self) -> &[(Pattern, Mode)] {
        &self.entries
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn linear_only(&self) -> bool {
        self.linear_only
    }

    /// Some entry has a copy in `h`; with `anchor`, only copies through that
    /// edge count.
    fn hit(&self, h: &Hypergraph, anchor: Option<usize>) -> bool {
        self.entries.iter().any(|(p, mode)| match (mode, p) {
            (Mode::Sub, p) => find_sub(h, p.as_hypergraph(), anchor).is_some(),
            (Mode::Berge, Pattern::Graph(g)) => find_berge(h, g, anchor).is_some(),
            (Mode::Expansion, Pattern::Graph(g)) => find_expansion(h, g, self.r, anchor).is_some(),
            _ => unreachable!("validated on construction"),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    /// Position of the violated entry in the family.
    pub entry: usize,
    pub mode: Mode,
    pub witness: WitnessReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FreenessReport {
    pub violations: Vec<Violation>,
}

impl FreenessReport {
    pub fn is_free(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Runs the decider of every entry and records the first copy of each
/// violated pattern.
pub fn verify_free(h: &Hypergraph, family: &ForbiddenFamily) -> Result<FreenessReport> {
    let mut violations = Vec::new();
    for (entry, (p, mode)) in family.entries.iter().enumerate() {
        let witness = match (mode, p) {
            (Mode::Sub, p) => crate::patterns::contains_sub(h, p.as_hypergraph()).map(|w| w.report(p.as_hypergraph())),
            (Mode::Berge, Pattern::Graph(g)) => crate::patterns::contains_berge(h, g).map(|w| w.report(g)),
            (Mode::Expansion, Pattern::Graph(g)) => {
                crate::patterns::contains_expansion(h, g, family.r)?.map(|w| w.report(g))
            }
            _ => return Err(Error::InvalidFamily(format!("{mode} mode needs a graph pattern"))),
        };
        if let Some(witness) = witness {
            violations.push(Violation { entry, mode: *mode, witness });
        }
    }
    Ok(FreenessReport { violations })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Largest admissible number of candidate edges `C(n, r)`.
    pub budget: u128,
    pub iso_pruning: bool,
    pub threads: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { budget: DEFAULT_BUDGET, iso_pruning: true, threads: 1 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    pub value: usize,
    pub witness: Hypergraph,
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

impl Serialize for SearchResult {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("SearchResult", 4)?;
        st.serialize_field("value", &self.value)?;
        st.serialize_field("witness", &write_hypergraph(&self.witness))?;
        st.serialize_field("nodes_explored", &self.nodes_explored)?;
        st.serialize_field("elapsed_ms", &(self.elapsed.as_secs_f64() * 1000.0))?;
        st.end()
    }
}

/// Colex order: by largest vertex, then next largest, and so on.
fn colex_candidates(n: usize, r: usize) -> Vec<Vec<Vertex>> {
    let mut c = k_subsets(n, r);
    c.sort_by(|a, b| a.iter().rev().cmp(b.iter().rev()));
    c
}

fn meet(a: &[Vertex], b: &[Vertex]) -> usize {
    a.iter().filter(|x| b.binary_search(x).is_ok()).count()
}

struct Shared<'a> {
    n: usize,
    family: &'a ForbiddenFamily,
    cands: Vec<Vec<Vertex>>,
    iso: bool,
    parallel_depth: usize,
    best: AtomicUsize,
    witness: Mutex<Vec<usize>>,
    nodes: AtomicU64,
}

impl Shared<'_> {
    fn hypergraph(&self, chosen: &[usize]) -> Hypergraph {
        Hypergraph::from_sorted_edges(self.n, chosen.iter().map(|&i| self.cands[i].clone()).collect())
    }

    /// `chosen + x` is still free (and linear when required).
    fn addable(&self, chosen: &[usize], x: usize) -> bool {
        let e = &self.cands[x];
        if self.family.linear_only && chosen.iter().any(|&c| meet(&self.cands[c], e) > 1) {
            return false;
        }
        let mut with: Vec<usize> = chosen.to_vec();
        with.push(x);
        let h = self.hypergraph(&with);
        let anchor = h.edge_index(e).expect("candidate was just added");
        !self.family.hit(&h, Some(anchor))
    }

    fn record(&self, chosen: &[usize]) {
        let mut w = self.witness.lock().expect("witness lock");
        if chosen.len() > self.best.load(Ordering::SeqCst) {
            self.best.store(chosen.len(), Ordering::SeqCst);
            *w = chosen.to_vec();
        }
    }

    /// Orbit of `c` under the twin symmetries of (chosen, pool): the pooled
    /// candidates with the same number of vertices in every twin class.
    fn orbit(&self, chosen: &[usize], pool: &[usize], c: usize) -> Vec<usize> {
        let mut fam_s: Vec<Vec<Vertex>> = chosen.iter().map(|&i| self.cands[i].clone()).collect();
        let mut fam_p: Vec<Vec<Vertex>> = pool.iter().map(|&i| self.cands[i].clone()).collect();
        fam_s.sort_unstable();
        fam_p.sort_unstable();
        let twins = TwinClasses::compute(self.n, &[&fam_s, &fam_p], &[]);
        let profile = |e: &[Vertex]| {
            let mut p: Vec<usize> = e.iter().map(|&v| twins.class_of(v)).collect();
            p.sort_unstable();
            p
        };
        let target = profile(&self.cands[c]);
        pool.iter().copied().filter(|&x| profile(&self.cands[x]) == target).collect()
    }

    fn dfs(&self, chosen: &mut Vec<usize>, pool: &[usize], depth: usize) {
        self.nodes.fetch_add(1, Ordering::Relaxed);
        if chosen.len() + pool.len() <= self.best.load(Ordering::SeqCst) {
            return;
        }
        let Some((&c, rest)) = pool.split_first() else {
            self.record(chosen);
            return;
        };
        let mut with = chosen.clone();
        with.push(c);
        let include: Vec<usize> = rest.iter().copied().filter(|&x| self.addable(&with, x)).collect();
        let exclude: Vec<usize> = if self.iso {
            let orbit = self.orbit(chosen, pool, c);
            rest.iter().copied().filter(|x| !orbit.contains(x)).collect()
        } else {
            rest.to_vec()
        };
        if depth < self.parallel_depth {
            let mut without = chosen.clone();
            rayon::join(
                || self.dfs(&mut with, &include, depth + 1),
                || self.dfs(&mut without, &exclude, depth + 1),
            );
        } else {
            self.dfs(&mut with, &include, depth + 1);
            self.dfs(chosen, &exclude, depth + 1);
        }
    }
}

fn check_budget(n: usize, r: usize, budget: u128) -> Result<()> {
    let candidates = binom(n as u64, r as u64)? as u128;
    if candidates > budget {
        return Err(Error::BudgetExceeded { candidates, budget });
    }
    Ok(())
}

/// The largest number of edges of an `r`-uniform hypergraph on `n` vertices
/// avoiding every entry of `family`, with one extremal witness.
pub fn ex_exact(n: usize, family: &ForbiddenFamily, opts: &SearchOptions) -> Result<SearchResult> {
    let r = family.r;
    check_budget(n, r, opts.budget)?;
    let start = Instant::now();
    let shared = Shared {
        n,
        family,
        cands: colex_candidates(n, r),
        iso: opts.iso_pruning,
        parallel_depth: if opts.threads > 1 { 8 } else { 0 },
        best: AtomicUsize::new(0),
        witness: Mutex::new(Vec::new()),
        nodes: AtomicU64::new(0),
    };
    let pool: Vec<usize> = (0..shared.cands.len()).filter(|&x| shared.addable(&[], x)).collect();
    if opts.threads > 1 {
        let tp = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.threads)
            .build()
            .map_err(|e| Error::InvalidParameter(e.to_string()))?;
        tp.install(|| shared.dfs(&mut Vec::new(), &pool, 0));
    } else {
        shared.dfs(&mut Vec::new(), &pool, 0);
    }
    let chosen = shared.witness.into_inner().expect("witness lock");
    let witness = Hypergraph::from_sorted_edges(n, chosen.iter().map(|&i| shared.cands[i].clone()).collect());
    Ok(SearchResult {
        value: witness.num_edges(),
        witness,
        nodes_explored: shared.nodes.into_inner(),
        elapsed: start.elapsed(),
    })
}

/// As [`ex_exact`] over linear hypergraphs only.
pub fn ex_exact_linear(n: usize, family: &ForbiddenFamily, opts: &SearchOptions) -> Result<SearchResult> {
    ex_exact(n, &family.clone().with_linear(true), opts)
}

/// Seeded hill climbing: repeatedly try to add a random candidate, and when
/// that fails, swap it in for a random current edge if the result stays
/// free. Returns the largest free hypergraph seen.
pub fn ex_lower_local_search(
    n: usize,
    family: &ForbiddenFamily,
    iterations: u64,
    seed: u64,
) -> Result<Hypergraph> {
    let r = family.r;
    let cands = if n >= r { k_subsets(n, r) } else { Vec::new() };
    let shared = Shared {
        n,
        family,
        cands,
        iso: false,
        parallel_depth: 0,
        best: AtomicUsize::new(0),
        witness: Mutex::new(Vec::new()),
        nodes: AtomicU64::new(0),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut current: Vec<usize> = Vec::new();
    let mut best: Vec<usize> = Vec::new();
    let total = shared.cands.len();
    if total == 0 {
        return Ok(Hypergraph::empty(n));
    }
    for _ in 0..iterations {
        let x = rng.gen_range(0..total);
        if current.contains(&x) {
            continue;
        }
        if shared.addable(&current, x) {
            current.push(x);
        } else if let Some(&out) = current.choose(&mut rng) {
            let kept: Vec<usize> = current.iter().copied().filter(|&e| e != out).collect();
            if shared.addable(&kept, x) {
                current = kept;
                current.push(x);
            }
        }
        if current.len() > best.len() {
            best = current.clone();
        }
    }
    Ok(shared.hypergraph(&best))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::star;

    fn family(d: &[usize], mode: Mode, r: usize) -> ForbiddenFamily {
        ForbiddenFamily::star_forest(&StarForestSpec::new(d.to_vec()).unwrap(), mode, r).unwrap()
    }

    #[test]
    fn small_graph_values() {
        let opts = SearchOptions::default();
        assert_eq!(ex_exact(4, &family(&[1, 1], Mode::Sub, 2), &opts).unwrap().value, 3);
        assert_eq!(ex_exact(5, &family(&[3], Mode::Sub, 2), &opts).unwrap().value, 5);
        let res = ex_exact(6, &family(&[2], Mode::Berge, 3), &opts).unwrap();
        assert_eq!(res.value, 2);
        assert!(verify_free(&res.witness, &family(&[2], Mode::Berge, 3)).unwrap().is_free());
    }

    #[test]
    fn linear_values() {
        let opts = SearchOptions::default();
        let f = family(&[2], Mode::Expansion, 3);
        assert_eq!(ex_exact_linear(7, &f, &opts).unwrap().value, 2);
        assert_eq!(ex_exact_linear(2, &f, &opts).unwrap().value, 0);
    }

    #[test]
    fn budget_is_enforced() {
        let f = family(&[2], Mode::Berge, 3);
        assert!(matches!(
            ex_exact(30, &f, &SearchOptions::default()),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn edgeless_when_single_edge_forbidden() {
        let f = family(&[1], Mode::Berge, 3);
        let res = ex_exact(6, &f, &SearchOptions::default()).unwrap();
        assert_eq!((res.value, res.witness.num_edges()), (0, 0));
    }

    #[test]
    fn family_validation() {
        let hyper = Pattern::Hyper(Hypergraph::new(3, [[0, 1, 2]]).unwrap());
        assert!(ForbiddenFamily::single(hyper.clone(), Mode::Berge, 3).is_err());
        assert!(ForbiddenFamily::single(hyper, Mode::Sub, 3).is_ok());
        assert!(ForbiddenFamily::new(Vec::new(), 3, false).is_err());
        assert!("berge".parse::<Mode>().is_ok() && "x".parse::<Mode>().is_err());
        let mut f = ForbiddenFamily::single(Pattern::Graph(star(2)), Mode::Berge, 3).unwrap();
        f.push(Pattern::Graph(star(1)), Mode::Expansion).unwrap();
        assert_eq!(f.entries().len(), 2);
    }

    #[test]
    fn local_search_is_seeded() {
        let f = family(&[2, 2], Mode::Sub, 2);
        assert_eq!(ex_lower_local_search(7, &f, 0, 1).unwrap().num_edges(), 0);
        let a = ex_lower_local_search(7, &f, 400, 9).unwrap();
        let b = ex_lower_local_search(7, &f, 400, 9).unwrap();
        assert_eq!(a, b);
        assert!(verify_free(&a, &f).unwrap().is_free());
    }
}
