//! Splits a pattern graph into core vertices, whose images are enumerated
//! explicitly, and pendant leaves, whose images are chosen while routing
//! edges. Every edge has at least one core endpoint.

use crate::hypergraph::{Graph, Hypergraph, Vertex};
use crate::patterns::symmetry::TwinClasses;

pub(crate) const UNASSIGNED: Vertex = usize::MAX;

#[derive(Clone, Copy, Debug)]
pub(crate) struct LeafEdge {
    pub edge: usize,
    pub core: Vertex,
    pub leaf: Vertex,
}

#[derive(Clone, Debug)]
pub(crate) struct Shape {
    pub n_f: usize,
    pub fdeg: Vec<usize>,
    pub edges: Vec<(Vertex, Vertex)>,
    /// Enumeration order: descending pattern degree, then index.
    pub core: Vec<Vertex>,
    pub core_edges: Vec<usize>,
    /// Grouped by core vertex, groups in `core` order.
    pub leaf_edges: Vec<LeafEdge>,
    pub isolated: Vec<Vertex>,
}

impl Shape {
    pub fn new(f: &Graph) -> Shape {
        let n_f = f.n();
        let fdeg = f.degrees();
        let edges: Vec<(Vertex, Vertex)> = f.edge_pairs().collect();
        let mut is_core = vec![false; n_f];
        for (u, &d) in fdeg.iter().enumerate() {
            if d >= 2 {
                is_core[u] = true;
            }
        }
        for &(u, v) in &edges {
            // isolated edge: keep the lower endpoint
            if fdeg[u] == 1 && fdeg[v] == 1 {
                is_core[u] = true;
            }
        }
        let mut core: Vec<Vertex> = (0..n_f).filter(|&u| is_core[u]).collect();
        core.sort_by_key(|&u| (std::cmp::Reverse(fdeg[u]), u));
        let position: Vec<usize> = {
            let mut pos = vec![usize::MAX; n_f];
            for (i, &u) in core.iter().enumerate() {
                pos[u] = i;
            }
            pos
        };
        let mut core_edges = Vec::new();
        let mut leaf_edges = Vec::new();
        for (j, &(u, v)) in edges.iter().enumerate() {
            match (is_core[u], is_core[v]) {
                (true, true) => core_edges.push(j),
                (true, false) => leaf_edges.push(LeafEdge { edge: j, core: u, leaf: v }),
                (false, true) => leaf_edges.push(LeafEdge { edge: j, core: v, leaf: u }),
                (false, false) => unreachable!("every edge has a core endpoint"),
            }
        }
        leaf_edges.sort_by_key(|le| (position[le.core], le.edge));
        let isolated = (0..n_f).filter(|&u| fdeg[u] == 0).collect();
        Shape { n_f, fdeg, edges, core, core_edges, leaf_edges, isolated }
    }

    /// Core neighbours of `u` that come earlier in the enumeration order.
    fn earlier_core_neighbours(&self, pos: usize) -> Vec<Vertex> {
        let u = self.core[pos];
        let earlier = &self.core[..pos];
        self.core_edges
            .iter()
            .filter_map(|&j| {
                let (a, b) = self.edges[j];
                if a == u && earlier.contains(&b) {
                    Some(b)
                } else if b == u && earlier.contains(&a) {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }
}

/// Shared state for enumerating injective images of the core vertices.
pub(crate) struct CoreSearch<'a> {
    pub h: &'a Hypergraph,
    pub shape: &'a Shape,
    pub inc: Vec<Vec<usize>>,
    pub twins: TwinClasses,
    /// Host vertices by descending degree.
    order: Vec<Vertex>,
    hdeg: Vec<usize>,
    anchor: Option<Vec<Vertex>>,
    earlier: Vec<Vec<Vertex>>,
}

impl<'a> CoreSearch<'a> {
    /// With `anchor`, only embeddings whose core meets that hyperedge are
    /// explored; callers use it when every copy must use the anchor edge.
    pub fn new(h: &'a Hypergraph, shape: &'a Shape, anchor: Option<usize>) -> Self {
        let hdeg = h.degrees();
        let mut order: Vec<Vertex> = (0..h.n()).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(hdeg[v]), v));
        let anchor: Option<Vec<Vertex>> = anchor.map(|i| h.edge(i).to_vec());
        let fixed = anchor.clone().unwrap_or_default();
        let twins = TwinClasses::compute(h.n(), &[h.edges()], &fixed);
        let earlier = (0..shape.core.len()).map(|p| shape.earlier_core_neighbours(p)).collect();
        CoreSearch { h, shape, inc: h.incidence(), twins, order, hdeg, anchor, earlier }
    }

    pub fn covers_pair(&self, a: Vertex, b: Vertex) -> bool {
        self.inc[a].iter().any(|&i| self.h.edge(i).binary_search(&b).is_ok())
    }

    /// Calls `complete(images, used)` for each canonical core injection until
    /// it returns `Some`. `images[u]` is `UNASSIGNED` for non-core `u`.
    pub fn run<W>(&self, mut complete: impl FnMut(&[Vertex], &mut [bool]) -> Option<W>) -> Option<W> {
        let mut images = vec![UNASSIGNED; self.shape.n_f];
        let mut used = vec![false; self.h.n()];
        self.extend(0, false, &mut images, &mut used, &mut complete)
    }

    fn extend<W>(
        &self,
        pos: usize,
        hit_anchor: bool,
        images: &mut [Vertex],
        used: &mut [bool],
        complete: &mut impl FnMut(&[Vertex], &mut [bool]) -> Option<W>,
    ) -> Option<W> {
        let core = &self.shape.core;
        if pos == core.len() {
            if self.anchor.is_some() && !hit_anchor {
                return None;
            }
            return complete(images, used);
        }
        let u = core[pos];
        let need = self.shape.fdeg[u];
        let last = pos + 1 == core.len();
        for &v in &self.order {
            if self.hdeg[v] < need {
                break;
            }
            if used[v] || !self.twins.is_smallest_free(v, used) {
                continue;
            }
            let in_anchor = self.anchor.as_ref().is_some_and(|a| a.binary_search(&v).is_ok());
            if last && self.anchor.is_some() && !hit_anchor && !in_anchor {
                continue;
            }
            if !self.earlier[pos].iter().all(|&w| self.covers_pair(v, images[w])) {
                continue;
            }
            images[u] = v;
            used[v] = true;
            let found = self.extend(pos + 1, hit_anchor || in_anchor, images, used, complete);
            used[v] = false;
            images[u] = UNASSIGNED;
            if found.is_some() {
                return found;
            }
        }
        None
    }
}

/// Fills the images of isolated pattern vertices with the smallest unused
/// host vertices.
pub(crate) fn place_isolated(shape: &Shape, images: &mut [Vertex], used: &[bool]) -> bool {
    let mut free = (0..used.len()).filter(|&v| !used[v]);
    for &u in &shape.isolated {
        match free.next() {
            Some(v) => images[u] = v,
            None => return false,
        }
    }
    true
}
