//! Containment certificates and their independent validation.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::{Graph, Hypergraph, Vertex};

/// Berge copy of a graph `F`: `vertex_map[u]` is the image of `u`, and
/// `edge_map[j]` the index of the hyperedge hosting the `j`-th edge of `F`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BergeWitness {
    pub vertex_map: Vec<Vertex>,
    pub edge_map: Vec<usize>,
}

/// Expansion copy: a Berge copy whose hyperedges meet only in the images of
/// shared pattern vertices. `fill[j]` is hyperedge `edge_map[j]` minus the
/// images of the endpoints of edge `j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpansionWitness {
    pub vertex_map: Vec<Vertex>,
    pub edge_map: Vec<usize>,
    pub fill: Vec<Vec<Vertex>>,
}

/// Edge-exact embedding of a pattern hypergraph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubEmbedding {
    pub vertex_map: Vec<Vertex>,
    pub edge_map: Vec<usize>,
}

/// Serialisable view of any witness with deterministic ordering.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessReport {
    pub vertex_map: Vec<(Vertex, Vertex)>,
    pub edge_map: Vec<(Vec<Vertex>, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fill: Option<Vec<Vec<Vertex>>>,
}

fn check_injective(map: &[Vertex], n: usize, what: &str) -> Result<()> {
    let mut seen = HashSet::new();
    for &v in map {
        if v >= n {
            return Err(Error::InvalidWitness(format!("{what} image {v} out of range")));
        }
        if !seen.insert(v) {
            return Err(Error::InvalidWitness(format!("{what} is not injective at {v}")));
        }
    }
    Ok(())
}

fn edge_reports(edges: &[Vec<Vertex>], edge_map: &[usize]) -> Vec<(Vec<Vertex>, usize)> {
    edges.iter().cloned().zip(edge_map.iter().copied()).collect()
}

impl BergeWitness {
    pub fn validate(&self, h: &Hypergraph, f: &Graph) -> Result<()> {
        if self.vertex_map.len() != f.n() || self.edge_map.len() != f.num_edges() {
            return Err(Error::InvalidWitness("map sizes do not match the pattern".into()));
        }
        check_injective(&self.vertex_map, h.n(), "vertex map")?;
        let mut used = HashSet::new();
        for (j, (u, v)) in f.edge_pairs().enumerate() {
            let idx = self.edge_map[j];
            if idx >= h.num_edges() || !used.insert(idx) {
                return Err(Error::InvalidWitness(format!("edge map is not injective at {idx}")));
            }
            let host = h.edge(idx);
            for x in [self.vertex_map[u], self.vertex_map[v]] {
                if host.binary_search(&x).is_err() {
                    return Err(Error::InvalidWitness(format!(
                        "hyperedge {host:?} misses vertex {x} of pattern edge ({u}, {v})"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn report(&self, f: &Graph) -> WitnessReport {
        WitnessReport {
            vertex_map: self.vertex_map.iter().copied().enumerate().collect(),
            edge_map: edge_reports(f.edges(), &self.edge_map),
            fill: None,
        }
    }
}

impl ExpansionWitness {
    pub fn validate(&self, h: &Hypergraph, f: &Graph, r: usize) -> Result<()> {
        if !h.is_uniform(r) {
            return Err(Error::NotUniform { expected: r });
        }
        self.as_berge().validate(h, f)?;
        if self.fill.len() != f.num_edges() {
            return Err(Error::InvalidWitness("one fill set per pattern edge required".into()));
        }
        let core: HashSet<Vertex> = self.vertex_map.iter().copied().collect();
        let mut fills = HashSet::new();
        for (j, (u, v)) in f.edge_pairs().enumerate() {
            let mut expect: Vec<Vertex> = h
                .edge(self.edge_map[j])
                .iter()
                .copied()
                .filter(|&x| x != self.vertex_map[u] && x != self.vertex_map[v])
                .collect();
            expect.sort_unstable();
            let mut got = self.fill[j].clone();
            got.sort_unstable();
            if got != expect || got.len() != r - 2 {
                return Err(Error::InvalidWitness(format!("fill of edge {j} does not match its hyperedge")));
            }
            for &x in &got {
                if core.contains(&x) || !fills.insert(x) {
                    return Err(Error::InvalidWitness(format!("fill vertex {x} is not fresh")));
                }
            }
        }
        Ok(())
    }

    pub fn as_berge(&self) -> BergeWitness {
        BergeWitness { vertex_map: self.vertex_map.clone(), edge_map: self.edge_map.clone() }
    }

    pub fn report(&self, f: &Graph) -> WitnessReport {
        WitnessReport {
            vertex_map: self.vertex_map.iter().copied().enumerate().collect(),
            edge_map: edge_reports(f.edges(), &self.edge_map),
            fill: Some(self.fill.clone()),
        }
    }
}

impl SubEmbedding {
    pub fn validate(&self, h: &Hypergraph, p: &Hypergraph) -> Result<()> {
        if self.vertex_map.len() != p.n() || self.edge_map.len() != p.num_edges() {
            return Err(Error::InvalidWitness("map sizes do not match the pattern".into()));
        }
        check_injective(&self.vertex_map, h.n(), "vertex map")?;
        for (j, e) in p.edges().iter().enumerate() {
            let mut img: Vec<Vertex> = e.iter().map(|&v| self.vertex_map[v]).collect();
            img.sort_unstable();
            if h.edge_index(&img) != Some(self.edge_map[j]) {
                return Err(Error::InvalidWitness(format!("image {img:?} of edge {j} is not edge {}", self.edge_map[j])));
            }
        }
        Ok(())
    }

    pub fn report(&self, p: &Hypergraph) -> WitnessReport {
        WitnessReport {
            vertex_map: self.vertex_map.iter().copied().enumerate().collect(),
            edge_map: edge_reports(p.edges(), &self.edge_map),
            fill: None,
        }
    }
}
