use crate::hypergraph::{Hypergraph, Vertex};
use crate::patterns::shape::UNASSIGNED;
use crate::patterns::symmetry::TwinClasses;
use crate::patterns::SubEmbedding;

/// Edge-exact embedding of `p` into `h`: an injective vertex map sending
/// every edge of `p` onto an edge of `h`.
pub fn contains_sub(h: &Hypergraph, p: &Hypergraph) -> Option<SubEmbedding> {
    find_sub(h, p, None)
}

/// With `anchor`, only embeddings that use that edge of `h` are reported.
pub(crate) fn find_sub(h: &Hypergraph, p: &Hypergraph, anchor: Option<usize>) -> Option<SubEmbedding> {
    if p.n() > h.n() || p.num_edges() > h.num_edges() {
        return None;
    }
    let search = SubSearch::new(h, p, anchor);
    match anchor {
        None => search.solve(&mut vec![UNASSIGNED; p.n()], &mut vec![false; h.n()]),
        Some(a) => {
            // Pin some pattern edge onto the anchor in every possible way.
            let target = h.edge(a);
            for e in p.edges().iter().filter(|e| e.len() == target.len()) {
                let mut perm = target.to_vec();
                loop {
                    let mut images = vec![UNASSIGNED; p.n()];
                    let mut used = vec![false; h.n()];
                    for (&u, &v) in e.iter().zip(&perm) {
                        images[u] = v;
                        used[v] = true;
                    }
                    if let Some(w) = search.solve(&mut images, &mut used) {
                        return Some(w);
                    }
                    if !next_permutation(&mut perm) {
                        break;
                    }
                }
            }
            None
        }
    }
}

struct SubSearch<'a> {
    h: &'a Hypergraph,
    p: &'a Hypergraph,
    inc: Vec<Vec<usize>>,
    p_inc: Vec<Vec<usize>>,
    hdeg: Vec<usize>,
    twins: TwinClasses,
    /// Host vertices by descending degree.
    hosts: Vec<Vertex>,
}

impl<'a> SubSearch<'a> {
    fn new(h: &'a Hypergraph, p: &'a Hypergraph, anchor: Option<usize>) -> Self {
        let hdeg = h.degrees();
        let mut hosts: Vec<Vertex> = (0..h.n()).collect();
        hosts.sort_by_key(|&v| (std::cmp::Reverse(hdeg[v]), v));
        let fixed = anchor.map(|a| h.edge(a).to_vec()).unwrap_or_default();
        SubSearch {
            h,
            p,
            inc: h.incidence(),
            p_inc: p.incidence(),
            hdeg,
            twins: TwinClasses::compute(h.n(), &[h.edges()], &fixed),
            hosts,
        }
    }

    /// Next pattern vertex: most edges into the assigned part, then degree.
    fn pick(&self, images: &[Vertex]) -> Option<Vertex> {
        (0..self.p.n())
            .filter(|&u| images[u] == UNASSIGNED)
            .max_by_key(|&u| {
                let touching = self.p_inc[u]
                    .iter()
                    .filter(|&&j| self.p.edge(j).iter().any(|&x| images[x] != UNASSIGNED))
                    .count();
                (touching, self.p_inc[u].len(), std::cmp::Reverse(u))
            })
    }

    /// Every pattern edge through `u` is still realisable.
    fn consistent(&self, u: Vertex, images: &[Vertex]) -> bool {
        self.p_inc[u].iter().all(|&j| {
            let e = self.p.edge(j);
            let assigned: Vec<Vertex> =
                e.iter().filter(|&&x| images[x] != UNASSIGNED).map(|&x| images[x]).collect();
            if assigned.len() == e.len() {
                let mut img = assigned;
                img.sort_unstable();
                return self.h.contains_edge(&img);
            }
            self.inc[images[u]].iter().any(|&i| {
                let he = self.h.edge(i);
                he.len() == e.len() && assigned.iter().all(|x| he.binary_search(x).is_ok())
            })
        })
    }

    fn solve(&self, images: &mut [Vertex], used: &mut [bool]) -> Option<SubEmbedding> {
        let Some(u) = self.pick(images) else {
            return Some(self.finish(images));
        };
        let need = self.p_inc[u].len();
        for &v in &self.hosts {
            if self.hdeg[v] < need {
                break;
            }
            if used[v] || !self.twins.is_smallest_free(v, used) {
                continue;
            }
            images[u] = v;
            used[v] = true;
            if self.consistent(u, images) {
                if let Some(w) = self.solve(images, used) {
                    return Some(w);
                }
            }
            used[v] = false;
            images[u] = UNASSIGNED;
        }
        None
    }

    fn finish(&self, images: &[Vertex]) -> SubEmbedding {
        let edge_map = self
            .p
            .edges()
            .iter()
            .map(|e| {
                let mut img: Vec<Vertex> = e.iter().map(|&x| images[x]).collect();
                img.sort_unstable();
                self.h.edge_index(&img).expect("consistency checked every edge")
            })
            .collect();
        SubEmbedding { vertex_map: images.to_vec(), edge_map }
    }
}

fn next_permutation(v: &mut [Vertex]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("a larger element exists");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::{expand, star};

    #[test]
    fn single_triple_in_k43() {
        let h = Hypergraph::complete_uniform(4, 3);
        let p = Hypergraph::new(3, [[0, 1, 2]]).unwrap();
        contains_sub(&h, &p).unwrap().validate(&h, &p).unwrap();
    }

    #[test]
    fn cherry_expansion() {
        let p = expand(&star(2), 3).unwrap();
        assert!(contains_sub(&Hypergraph::complete_uniform(4, 3), &p).is_none());
        let h = Hypergraph::new(5, [[0, 1, 2], [0, 3, 4]]).unwrap();
        let w = contains_sub(&h, &p).unwrap();
        w.validate(&h, &p).unwrap();
        assert_eq!(w.vertex_map[0], 0);
    }

    #[test]
    fn anchored_search_uses_anchor() {
        let h = Hypergraph::new(6, [[0, 1], [2, 3], [3, 4]]).unwrap();
        let p = Hypergraph::new(3, [[0, 1], [1, 2]]).unwrap();
        let a = h.edge_index(&[0, 1]).unwrap();
        assert!(find_sub(&h, &p, Some(a)).is_none());
        let b = h.edge_index(&[2, 3]).unwrap();
        let w = find_sub(&h, &p, Some(b)).unwrap();
        w.validate(&h, &p).unwrap();
        assert!(w.edge_map.contains(&b));
    }

    #[test]
    fn permutations() {
        let mut v = vec![1, 2, 3];
        let mut count = 1;
        while next_permutation(&mut v) {
            count += 1;
        }
        assert_eq!(count, 6);
    }
}
