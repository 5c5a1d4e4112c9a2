//! Forbidden patterns (stars, star forests, expansions) and the containment
//! deciders for the three freeness notions.

mod berge;
mod embedding;
mod expansion;
pub mod matching;
mod shape;
mod sub;
pub mod symmetry;
mod witness;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::{Graph, Hypergraph, Vertex};

pub use berge::contains_berge;
pub(crate) use berge::find_berge;
pub use expansion::contains_expansion;
pub(crate) use expansion::find_expansion;
pub use embedding::{
    adl_bound, berge_star_at, greedy_embed_star_forest, placements_to_berge,
    placements_to_expansion, skeleton_of, verify_adl, AdlCheck, EmbedMode, StarPlacement,
};
pub use sub::contains_sub;
pub(crate) use sub::find_sub;
pub use witness::{BergeWitness, ExpansionWitness, SubEmbedding, WitnessReport};

/// Degree sequence `d_1 ≥ d_2 ≥ … ≥ d_k ≥ 1` of a star forest.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct StarForestSpec {
    degrees: Vec<usize>,
}

impl StarForestSpec {
    pub fn new(degrees: Vec<usize>) -> Result<Self> {
        if degrees.is_empty() {
            return Err(Error::InvalidSpec("at least one star is required".into()));
        }
        if degrees.contains(&0) {
            return Err(Error::InvalidSpec("star degrees must be positive".into()));
        }
        if degrees.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidSpec(format!("{degrees:?} is not non-increasing")));
        }
        Ok(StarForestSpec { degrees })
    }

    /// `k` copies of a single edge.
    pub fn matching(k: usize) -> Result<Self> {
        Self::new(vec![1; k])
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn k(&self) -> usize {
        self.degrees.len()
    }

    /// `d_i` with 1-based `i`.
    pub fn d(&self, i: usize) -> usize {
        self.degrees[i - 1]
    }

    pub fn num_edges(&self) -> usize {
        self.degrees.iter().sum()
    }

    pub fn num_vertices(&self) -> usize {
        self.degrees.iter().map(|d| d + 1).sum()
    }
}

impl TryFrom<Vec<usize>> for StarForestSpec {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<StarForestSpec> for Vec<usize> {
    fn from(s: StarForestSpec) -> Vec<usize> {
        s.degrees
    }
}

impl FromStr for StarForestSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let degrees = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidSpec(format!("bad degree {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(degrees)
    }
}

impl fmt::Display for StarForestSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.degrees.iter().map(|d| d.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// `K_{1,ℓ}` with centre 0 and leaves `1..=ℓ`.
pub fn star(leaves: usize) -> Graph {
    let edges: Vec<(Vertex, Vertex)> = (1..=leaves).map(|v| (0, v)).collect();
    Graph::new(leaves + 1, &edges).expect("star edges are valid")
}

/// Disjoint union of `star(d_i)` in order; star `i` has its centre at the
/// sum of the sizes of the earlier stars.
pub fn star_forest(spec: &StarForestSpec) -> Graph {
    spec.degrees
        .iter()
        .fold(Graph::empty(0), |acc, &d| acc.disjoint_union(&star(d)))
}

/// The `r`-uniform expansion: each edge of `f` is padded with `r − 2` fresh
/// vertices. The pad of edge `j` is `n_F + (r−2)j .. n_F + (r−2)(j+1)`.
pub fn expand(f: &Graph, r: usize) -> Result<Hypergraph> {
    if r < 2 {
        return Err(Error::InvalidParameter(format!("expansion uniformity {r} < 2")));
    }
    let base = f.n();
    let pad = r - 2;
    let edges: Vec<Vec<Vertex>> = f
        .edges()
        .iter()
        .enumerate()
        .map(|(j, e)| {
            let mut edge = e.clone();
            edge.extend(base + pad * j..base + pad * (j + 1));
            edge
        })
        .collect();
    Hypergraph::new(base + pad * f.num_edges(), &edges)
}
