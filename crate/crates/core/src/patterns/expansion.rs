use crate::error::{Error, Result};
use crate::hypergraph::{Graph, Hypergraph, Vertex};
use crate::patterns::shape::{place_isolated, CoreSearch, Shape, UNASSIGNED};
use crate::patterns::ExpansionWitness;

/// Decides whether the `r`-uniform `h` contains the expansion `F⁺` without
/// materialising its padding vertices.
///
/// Core images are enumerated as for Berge containment. Each pattern edge
/// then picks an unused hyperedge through the images of its core endpoints
/// whose remaining vertices are all fresh; those fresh vertices become the
/// leaf image and the fill. Choices are restricted to the smallest fresh
/// twins, which keeps the search complete.
pub fn contains_expansion(h: &Hypergraph, f: &Graph, r: usize) -> Result<Option<ExpansionWitness>> {
    if h.num_edges() > 0 && !h.is_uniform(r) {
        return Err(Error::NotUniform { expected: r });
    }
    Ok(find_expansion(h, f, r, None))
}

pub(crate) fn find_expansion(
    h: &Hypergraph,
    f: &Graph,
    r: usize,
    anchor: Option<usize>,
) -> Option<ExpansionWitness> {
    let needed = f.n() + f.num_edges() * (r.saturating_sub(2));
    if needed > h.n() || f.num_edges() > h.num_edges() {
        return None;
    }
    let shape = Shape::new(f);
    let search = CoreSearch::new(h, &shape, anchor);
    // Core-to-core edges first, then pendant edges grouped by core vertex.
    let order: Vec<usize> = shape
        .core_edges
        .iter()
        .copied()
        .chain(shape.leaf_edges.iter().map(|le| le.edge))
        .collect();
    let leaf_of: Vec<Option<Vertex>> = {
        let mut v = vec![None; shape.edges.len()];
        for le in &shape.leaf_edges {
            v[le.edge] = Some(le.leaf);
        }
        v
    };
    let mut packer = Packer {
        s: &search,
        order: &order,
        leaf_of: &leaf_of,
        used_e: vec![false; h.num_edges()],
        edge_map: vec![usize::MAX; shape.edges.len()],
        fill: vec![Vec::new(); shape.edges.len()],
    };
    search.run(|images, used| {
        let mut images = images.to_vec();
        if !packer.pack(0, &mut images, used) {
            return None;
        }
        if !place_isolated(&shape, &mut images, used) {
            return None;
        }
        Some(ExpansionWitness {
            vertex_map: images,
            edge_map: packer.edge_map.clone(),
            fill: packer.fill.clone(),
        })
    })
}

struct Packer<'a, 'b> {
    s: &'a CoreSearch<'b>,
    order: &'a [usize],
    leaf_of: &'a [Option<Vertex>],
    used_e: Vec<bool>,
    edge_map: Vec<usize>,
    fill: Vec<Vec<Vertex>>,
}

impl Packer<'_, '_> {
    /// Cheap necessary conditions for the edges from `idx` on.
    fn feasible(&self, idx: usize, images: &[Vertex], used: &[bool]) -> bool {
        let h = self.s.h;
        let rest = &self.order[idx..];
        let fresh_needed: usize = rest
            .iter()
            .map(|&j| h.edge(0).len() - if self.leaf_of[j].is_some() { 1 } else { 2 })
            .sum();
        if used.iter().filter(|&&u| !u).count() < fresh_needed {
            return false;
        }
        // Each pending core vertex needs enough clean hyperedges.
        let mut i = 0;
        while i < rest.len() {
            let j = rest[i];
            let Some(_) = self.leaf_of[j] else {
                i += 1;
                continue;
            };
            let core = self.core_of(j);
            let mut count = 0;
            while i < rest.len() && self.leaf_of[rest[i]].is_some() && self.core_of(rest[i]) == core {
                count += 1;
                i += 1;
            }
            let v = images[core];
            let avail = self.s.inc[v]
                .iter()
                .filter(|&&hi| !self.used_e[hi] && h.edge(hi).iter().all(|&x| x == v || !used[x]))
                .take(count)
                .count();
            if avail < count {
                return false;
            }
        }
        true
    }

    fn core_of(&self, j: usize) -> Vertex {
        let (a, b) = self.s.shape.edges[j];
        if self.leaf_of[j] == Some(a) {
            b
        } else {
            a
        }
    }

    fn pack(&mut self, idx: usize, images: &mut [Vertex], used: &mut [bool]) -> bool {
        if idx == self.order.len() {
            return true;
        }
        if !self.feasible(idx, images, used) {
            return false;
        }
        let h = self.s.h;
        let j = self.order[idx];
        let (a, b) = self.s.shape.edges[j];
        let leaf = self.leaf_of[j];
        let required: Vec<Vertex> = [a, b]
            .into_iter()
            .filter(|&u| Some(u) != leaf)
            .map(|u| images[u])
            .collect();
        let inc = &self.s.inc[required[0]];
        for &hi in inc {
            if self.used_e[hi] {
                continue;
            }
            let e = h.edge(hi);
            if !required.iter().all(|x| e.binary_search(x).is_ok()) {
                continue;
            }
            let fresh: Vec<Vertex> = e.iter().copied().filter(|x| !required.contains(x)).collect();
            if fresh.iter().any(|&x| used[x]) || !self.s.twins.is_canonical_set(&fresh, used) {
                continue;
            }
            for &x in &fresh {
                used[x] = true;
            }
            self.used_e[hi] = true;
            self.edge_map[j] = hi;
            let fill = match leaf {
                Some(l) => {
                    images[l] = fresh[0];
                    fresh[1..].to_vec()
                }
                None => fresh.clone(),
            };
            self.fill[j] = fill;
            if self.pack(idx + 1, images, used) {
                return true;
            }
            if let Some(l) = leaf {
                images[l] = UNASSIGNED;
            }
            self.used_e[hi] = false;
            for &x in &fresh {
                used[x] = false;
            }
        }
        false
    }
}
