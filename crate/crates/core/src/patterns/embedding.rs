//! Helpers mirroring the counting arguments: skeletons, stars at a fixed
//! centre, the average degree bound and greedy star packing.

use serde::{Deserialize, Serialize};

use crate::arith::{int, Rational};
use crate::error::{Error, Result};
use crate::hypergraph::{Graph, Hypergraph, Vertex};
use crate::patterns::matching::BipartiteMatcher;
use crate::patterns::{star_forest, BergeWitness, ExpansionWitness, StarForestSpec};

/// The embedded copy of `f` inside `h`, as a graph on the vertices of `h`.
pub fn skeleton_of(w: &BergeWitness, f: &Graph, h: &Hypergraph) -> Result<Graph> {
    w.validate(h, f)?;
    let pairs: Vec<(Vertex, Vertex)> =
        f.edge_pairs().map(|(u, v)| (w.vertex_map[u], w.vertex_map[v])).collect();
    Graph::new(h.n(), &pairs)
}

/// A Berge copy of `S_ℓ` centred at `v`, found as a matching between the
/// hyperedges through `v` and the other vertices they contain.
pub fn berge_star_at(h: &Hypergraph, v: Vertex, leaves: usize) -> Result<Option<BergeWitness>> {
    h.degree(v)?;
    let incident: Vec<usize> = h.incidence().swap_remove(v);
    if incident.len() < leaves {
        return Ok(None);
    }
    let adj: Vec<Vec<usize>> =
        incident.iter().map(|&i| h.edge(i).iter().copied().filter(|&x| x != v).collect()).collect();
    let matched = BipartiteMatcher::new(&adj, h.n()).solve();
    let pairs: Vec<(usize, Vertex)> = matched
        .iter()
        .enumerate()
        .filter_map(|(l, m)| m.map(|x| (incident[l], x)))
        .take(leaves)
        .collect();
    if pairs.len() < leaves {
        return Ok(None);
    }
    let mut vertex_map = vec![v];
    vertex_map.extend(pairs.iter().map(|&(_, x)| x));
    Ok(Some(BergeWitness { vertex_map, edge_map: pairs.iter().map(|&(i, _)| i).collect() }))
}

/// `((Δ − d + ε) / (Δ − d + 1)) · n`: at most this many vertices have degree
/// below `d` when the average degree is at least `d − ε` and the maximum
/// degree is at most `Δ`.
pub fn adl_bound(max_degree: usize, d: usize, eps: Rational, n: usize) -> Result<Rational> {
    if max_degree < d {
        return Err(Error::InvalidParameter(format!("maximum degree {max_degree} below d = {d}")));
    }
    if eps < int(0) || eps >= int(1) {
        return Err(Error::InvalidParameter(format!("epsilon {eps} outside [0, 1)")));
    }
    let gap = int((max_degree - d) as i128);
    Ok((gap + eps) / (gap + int(1)) * int(n as i128))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdlCheck {
    pub hypotheses_hold: bool,
    pub low_degree_vertices: usize,
    pub bound: Rational,
    /// True when the hypotheses fail or the count respects the bound.
    pub holds: bool,
}

pub fn verify_adl(h: &Hypergraph, d: usize, eps: Rational, max_degree: usize) -> Result<AdlCheck> {
    let bound = adl_bound(max_degree, d, eps, h.n())?;
    let hypotheses_hold = h.average_degree() >= int(d as i128) - eps && h.max_degree() <= max_degree;
    let low = h.degrees().iter().filter(|&&x| x < d).count();
    Ok(AdlCheck {
        hypotheses_hold,
        low_degree_vertices: low,
        bound,
        holds: !hypotheses_hold || int(low as i128) <= bound,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum EmbedMode {
    Berge,
    Expansion,
}

/// One star of a greedy packing. `fills` is empty in Berge mode.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StarPlacement {
    pub center: Vertex,
    pub leaves: Vec<Vertex>,
    pub edges: Vec<usize>,
    pub fills: Vec<Vec<Vertex>>,
}

/// Packs the stars of `spec` one at a time, largest first, each at the
/// highest-degree centre that still admits it. A heuristic: `None` does not
/// prove absence.
pub fn greedy_embed_star_forest(
    h: &Hypergraph,
    spec: &StarForestSpec,
    mode: EmbedMode,
) -> Option<Vec<StarPlacement>> {
    let inc = h.incidence();
    let hdeg = h.degrees();
    let mut centres: Vec<Vertex> = (0..h.n()).collect();
    centres.sort_by_key(|&v| (std::cmp::Reverse(hdeg[v]), v));
    let mut used_v = vec![false; h.n()];
    let mut used_e = vec![false; h.num_edges()];
    let mut out = Vec::with_capacity(spec.k());
    for &d in spec.degrees() {
        let placed = centres.iter().filter(|&&c| !used_v[c] && hdeg[c] >= d).find_map(|&c| {
            let mut blocked = used_v.clone();
            blocked[c] = true;
            match mode {
                EmbedMode::Berge => berge_star_avoiding(h, &inc[c], c, d, &blocked, &used_e),
                EmbedMode::Expansion => expansion_star_avoiding(h, &inc[c], c, d, &blocked, &used_e),
            }
        });
        let p = placed?;
        used_v[p.center] = true;
        for &x in p.leaves.iter().chain(p.fills.iter().flatten()) {
            used_v[x] = true;
        }
        for &e in &p.edges {
            used_e[e] = true;
        }
        out.push(p);
    }
    Some(out)
}

fn berge_star_avoiding(
    h: &Hypergraph,
    incident: &[usize],
    c: Vertex,
    d: usize,
    blocked: &[bool],
    used_e: &[bool],
) -> Option<StarPlacement> {
    let avail: Vec<usize> = incident.iter().copied().filter(|&i| !used_e[i]).collect();
    let adj: Vec<Vec<Vertex>> =
        avail.iter().map(|&i| h.edge(i).iter().copied().filter(|&x| !blocked[x]).collect()).collect();
    let matched = BipartiteMatcher::new(&adj, h.n()).solve();
    let pairs: Vec<(usize, Vertex)> =
        matched.iter().enumerate().filter_map(|(l, m)| m.map(|x| (avail[l], x))).take(d).collect();
    (pairs.len() == d).then(|| StarPlacement {
        center: c,
        leaves: pairs.iter().map(|p| p.1).collect(),
        edges: pairs.iter().map(|p| p.0).collect(),
        fills: Vec::new(),
    })
}

fn expansion_star_avoiding(
    h: &Hypergraph,
    incident: &[usize],
    c: Vertex,
    d: usize,
    blocked: &[bool],
    used_e: &[bool],
) -> Option<StarPlacement> {
    let mut taken = blocked.to_vec();
    let mut p = StarPlacement { center: c, leaves: Vec::new(), edges: Vec::new(), fills: Vec::new() };
    for &i in incident {
        if p.edges.len() == d {
            break;
        }
        let rest: Vec<Vertex> = h.edge(i).iter().copied().filter(|&x| x != c).collect();
        if used_e[i] || rest.iter().any(|&x| taken[x]) {
            continue;
        }
        for &x in &rest {
            taken[x] = true;
        }
        p.edges.push(i);
        p.leaves.push(rest[0]);
        p.fills.push(rest[1..].to_vec());
    }
    (p.edges.len() == d).then_some(p)
}

/// Assembles per-star placements into a witness for `star_forest(spec)`.
pub fn placements_to_berge(spec: &StarForestSpec, placements: &[StarPlacement]) -> BergeWitness {
    let mut vertex_map = Vec::with_capacity(spec.num_vertices());
    let mut edge_map = Vec::with_capacity(spec.num_edges());
    for p in placements {
        vertex_map.push(p.center);
        vertex_map.extend(&p.leaves);
    }
    // Pattern edges are listed lexicographically, which is star by star.
    for p in placements {
        edge_map.extend(&p.edges);
    }
    debug_assert_eq!(star_forest(spec).num_edges(), edge_map.len());
    BergeWitness { vertex_map, edge_map }
}

pub fn placements_to_expansion(spec: &StarForestSpec, placements: &[StarPlacement]) -> ExpansionWitness {
    let b = placements_to_berge(spec, placements);
    ExpansionWitness {
        vertex_map: b.vertex_map,
        edge_map: b.edge_map,
        fill: placements.iter().flat_map(|p| p.fills.iter().cloned()).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::frac;
    use crate::patterns::{contains_berge, star};

    #[test]
    fn skeleton_of_single_edge() {
        let h = Hypergraph::new(3, [[0, 1, 2]]).unwrap();
        let w = BergeWitness { vertex_map: vec![0, 1], edge_map: vec![0] };
        let g = skeleton_of(&w, &star(1), &h).unwrap();
        assert_eq!(g.edges(), &[vec![0, 1]]);
        let bad = BergeWitness { vertex_map: vec![0, 0], edge_map: vec![0] };
        assert!(skeleton_of(&bad, &star(1), &h).is_err());
    }

    #[test]
    fn skeleton_of_cherry() {
        let h = Hypergraph::complete_uniform(4, 3);
        let w = contains_berge(&h, &star(2)).unwrap();
        let g = skeleton_of(&w, &star(2), &h).unwrap();
        assert_eq!(g.num_edges(), 2);
        assert_eq!(g.degree(w.vertex_map[0]).unwrap(), 2);
    }

    #[test]
    fn star_at_centre() {
        let h = Hypergraph::new(5, [[0, 1, 2], [0, 3, 4]]).unwrap();
        let w = berge_star_at(&h, 0, 2).unwrap().unwrap();
        w.validate(&h, &star(2)).unwrap();
        assert!(berge_star_at(&h, 1, 2).unwrap().is_none());
        assert!(berge_star_at(&h, 9, 1).is_err());
        let k13 = Hypergraph::new(4, [[0, 1], [0, 2], [0, 3]]).unwrap();
        let w = berge_star_at(&k13, 0, 3).unwrap().unwrap();
        assert_eq!(w.vertex_map, vec![0, 1, 2, 3]);
    }

    #[test]
    fn adl_values() {
        assert_eq!(adl_bound(5, 3, int(0), 12).unwrap(), int(8));
        assert_eq!(adl_bound(3, 3, int(0), 12).unwrap(), int(0));
        assert_eq!(adl_bound(4, 3, frac(1, 2), 10).unwrap(), frac(15, 2));
        assert!(adl_bound(2, 3, int(0), 5).is_err());
        assert!(adl_bound(3, 3, int(1), 5).is_err());
    }

    #[test]
    fn adl_on_regular() {
        let (lat, _) = Hypergraph::lattice(3, 2).unwrap();
        let check = verify_adl(&lat, 2, int(0), 2).unwrap();
        assert!(check.hypotheses_hold && check.holds);
        assert_eq!(check.low_degree_vertices, 0);
    }

    #[test]
    fn greedy_packing() {
        let one = StarForestSpec::new(vec![1]).unwrap();
        let edge = Hypergraph::new(3, [[0, 1, 2]]).unwrap();
        for mode in [EmbedMode::Berge, EmbedMode::Expansion] {
            assert!(greedy_embed_star_forest(&edge, &one, mode).is_some());
        }
        let two = StarForestSpec::new(vec![2, 2]).unwrap();
        let k = Hypergraph::complete_uniform(4, 3);
        let h = k.disjoint_union(&k);
        let p = greedy_embed_star_forest(&h, &two, EmbedMode::Berge).unwrap();
        placements_to_berge(&two, &p).validate(&h, &star_forest(&two)).unwrap();
        let m = Hypergraph::new(6, [[0, 1, 2], [3, 4, 5]]).unwrap();
        let cherry = StarForestSpec::new(vec![2]).unwrap();
        for mode in [EmbedMode::Berge, EmbedMode::Expansion] {
            assert!(greedy_embed_star_forest(&m, &cherry, mode).is_none());
        }
    }

    #[test]
    fn greedy_expansion_witness_validates() {
        let spec = StarForestSpec::new(vec![2, 1]).unwrap();
        let h = Hypergraph::new(9, [[0, 1, 2], [0, 3, 4], [5, 6, 7]]).unwrap();
        let p = greedy_embed_star_forest(&h, &spec, EmbedMode::Expansion).unwrap();
        placements_to_expansion(&spec, &p).validate(&h, &star_forest(&spec), 3).unwrap();
    }
}
