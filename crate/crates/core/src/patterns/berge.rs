use crate::hypergraph::{Graph, Hypergraph, Vertex};
use crate::patterns::matching::FlowNetwork;
use crate::patterns::shape::{place_isolated, CoreSearch, Shape};
use crate::patterns::BergeWitness;

/// Decides whether `h` contains a Berge copy of `f` and returns one.
///
/// Core vertices of `f` (see the shape split) are mapped injectively, in
/// descending pattern degree against hosts in descending degree, skipping
/// hosts below the needed degree and all but one member of each twin class.
/// Edges between core vertices are assigned distinct hyperedges by
/// backtracking; the remaining pendant edges are routed as a unit flow
///
/// `core → hyperedge ∋ core image → leaf vertex ∈ hyperedge`
///
/// with unit capacities on hyperedges and on leaf vertices, which is exactly
/// a system of distinct representatives for hyperedges and leaf images
/// together. The search is complete.
pub fn contains_berge(h: &Hypergraph, f: &Graph) -> Option<BergeWitness> {
    find_berge(h, f, None)
}

pub(crate) fn find_berge(h: &Hypergraph, f: &Graph, anchor: Option<usize>) -> Option<BergeWitness> {
    if f.n() > h.n() || f.num_edges() > h.num_edges() {
        return None;
    }
    let shape = Shape::new(f);
    let search = CoreSearch::new(h, &shape, anchor);
    search.run(|images, used| {
        let mut edge_map = vec![usize::MAX; shape.edges.len()];
        let mut used_e = vec![false; h.num_edges()];
        assign_core_edges(&search, 0, images, used, &mut used_e, &mut edge_map)
    })
}

fn assign_core_edges(
    s: &CoreSearch<'_>,
    idx: usize,
    images: &[Vertex],
    used: &mut [bool],
    used_e: &mut [bool],
    edge_map: &mut [usize],
) -> Option<BergeWitness> {
    let shape = s.shape;
    if idx == shape.core_edges.len() {
        return route_leaves(s, images, used, used_e, edge_map);
    }
    let j = shape.core_edges[idx];
    let (a, b) = shape.edges[j];
    let (va, vb) = (images[a], images[b]);
    for &hi in &s.inc[va] {
        if used_e[hi] || s.h.edge(hi).binary_search(&vb).is_err() {
            continue;
        }
        used_e[hi] = true;
        edge_map[j] = hi;
        let found = assign_core_edges(s, idx + 1, images, used, used_e, edge_map);
        used_e[hi] = false;
        if found.is_some() {
            return found;
        }
    }
    None
}

fn route_leaves(
    s: &CoreSearch<'_>,
    images: &[Vertex],
    used: &[bool],
    used_e: &[bool],
    edge_map: &mut [usize],
) -> Option<BergeWitness> {
    let shape = s.shape;
    let h = s.h;
    let mut images = images.to_vec();
    let mut taken = used.to_vec();
    if !shape.leaf_edges.is_empty() {
        // Groups of pendant edges sharing a core vertex.
        let mut groups: Vec<(Vertex, Vec<usize>)> = Vec::new();
        for (pos, le) in shape.leaf_edges.iter().enumerate() {
            match groups.last_mut() {
                Some((c, members)) if *c == le.core => members.push(pos),
                _ => groups.push((le.core, vec![pos])),
            }
        }
        let total = shape.leaf_edges.len();
        for (c, members) in &groups {
            let v = images[*c];
            if s.inc[v].iter().filter(|&&hi| !used_e[hi]).count() < members.len() {
                return None;
            }
        }

        // Node layout: source, groups, hyperedge in/out pairs, vertices, sink.
        let m = h.num_edges();
        let n = h.n();
        let source = 0;
        let group_base = 1;
        let edge_base = group_base + groups.len();
        let vertex_base = edge_base + 2 * m;
        let sink = vertex_base + n;
        let mut net = FlowNetwork::new(sink + 1);
        let mut group_arcs: Vec<Vec<(usize, usize)>> = vec![Vec::new(); groups.len()];
        let mut edge_active = vec![false; m];
        for (g, (c, members)) in groups.iter().enumerate() {
            net.add_arc(source, group_base + g, members.len() as i32);
            for &hi in &s.inc[images[*c]] {
                if !used_e[hi] {
                    let arc = net.add_arc(group_base + g, edge_base + 2 * hi, 1);
                    group_arcs[g].push((hi, arc));
                    edge_active[hi] = true;
                }
            }
        }
        let mut leaf_arcs: Vec<Vec<(Vertex, usize)>> = vec![Vec::new(); m];
        for hi in (0..m).filter(|&hi| edge_active[hi]) {
            net.add_arc(edge_base + 2 * hi, edge_base + 2 * hi + 1, 1);
            for &x in h.edge(hi) {
                if !used[x] {
                    let arc = net.add_arc(edge_base + 2 * hi + 1, vertex_base + x, 1);
                    leaf_arcs[hi].push((x, arc));
                }
            }
        }
        for x in (0..n).filter(|&x| !used[x]) {
            net.add_arc(vertex_base + x, sink, 1);
        }
        if net.max_flow(source, sink, total as i32) < total as i32 {
            return None;
        }
        for (g, (_, members)) in groups.iter().enumerate() {
            let mut slots = members.iter();
            for &(hi, arc) in &group_arcs[g] {
                if net.flow(arc) == 0 {
                    continue;
                }
                let x = leaf_arcs[hi]
                    .iter()
                    .find(|&&(_, a)| net.flow(a) > 0)
                    .map(|&(x, _)| x)
                    .expect("flow through a hyperedge continues to a leaf");
                let le = shape.leaf_edges[*slots.next().expect("group capacity bounds its flow")];
                edge_map[le.edge] = hi;
                images[le.leaf] = x;
                taken[x] = true;
            }
        }
    }
    if !place_isolated(shape, &mut images, &taken) {
        return None;
    }
    Some(BergeWitness { vertex_map: images, edge_map: edge_map.to_vec() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::{star, star_forest, StarForestSpec};

    fn triples(n: usize, edges: &[[usize; 3]]) -> Hypergraph {
        Hypergraph::new(n, edges).unwrap()
    }

    #[test]
    fn single_edge_pattern() {
        let h = triples(3, &[[0, 1, 2]]);
        let w = contains_berge(&h, &star(1)).unwrap();
        w.validate(&h, &star(1)).unwrap();
        assert!(contains_berge(&Hypergraph::empty(5), &star(1)).is_none());
    }

    #[test]
    fn matching_has_no_cherry() {
        let h = triples(6, &[[0, 1, 2], [3, 4, 5]]);
        assert!(contains_berge(&h, &star(2)).is_none());
    }

    #[test]
    fn cherry_in_k43() {
        let h = Hypergraph::complete_uniform(4, 3);
        let w = contains_berge(&h, &star(2)).unwrap();
        w.validate(&h, &star(2)).unwrap();
        assert_eq!(w.vertex_map[0], 0);
    }

    #[test]
    fn leaf_must_differ_from_other_cores() {
        // Two cherries need six distinct skeleton vertices.
        let f = star_forest(&StarForestSpec::new(vec![2, 2]).unwrap());
        assert!(contains_berge(&Hypergraph::complete_uniform(5, 3), &f).is_none());
        let h = Hypergraph::complete_uniform(6, 3);
        contains_berge(&h, &f).unwrap().validate(&h, &f).unwrap();
    }

    #[test]
    fn triangle_pattern_uses_core_edges() {
        let tri = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let h = triples(4, &[[0, 1, 2], [0, 1, 3], [1, 2, 3]]);
        let w = contains_berge(&h, &tri).unwrap();
        w.validate(&h, &tri).unwrap();
        let h = triples(4, &[[0, 1, 2], [0, 1, 3]]);
        assert!(contains_berge(&h, &tri).is_none());
    }

    #[test]
    fn isolated_pattern_vertices() {
        let f = Graph::new(4, &[(0, 1)]).unwrap();
        let h = triples(5, &[[0, 1, 2]]);
        contains_berge(&h, &f).unwrap().validate(&h, &f).unwrap();
        let h = triples(3, &[[0, 1, 2]]);
        assert!(contains_berge(&h, &f).is_none());
    }
}
