//! Twin classes: vertices `x`, `y` are twins when the transposition `(x y)`
//! is an automorphism of every edge family under consideration. Twin
//! relation is an equivalence, and permuting unused twins maps any partial
//! embedding onto another one, which lets the searches consider only the
//! smallest unused member of each class.

use crate::hypergraph::Vertex;

#[derive(Clone, Debug)]
pub struct TwinClasses {
    class_of: Vec<usize>,
    members: Vec<Vec<Vertex>>,
}

impl TwinClasses {
    /// Every vertex in its own class; disables symmetry pruning.
    pub fn trivial(n: usize) -> Self {
        TwinClasses { class_of: (0..n).collect(), members: (0..n).map(|v| vec![v]).collect() }
    }

    /// `families` are lexicographically sorted lists of sorted edges. Vertices
    /// in `fixed` are kept in singleton classes.
    pub fn compute(n: usize, families: &[&[Vec<Vertex>]], fixed: &[Vertex]) -> Self {
        let incidence: Vec<Vec<Vec<usize>>> = families
            .iter()
            .map(|fam| {
                let mut inc = vec![Vec::new(); n];
                for (i, e) in fam.iter().enumerate() {
                    for &v in e {
                        inc[v].push(i);
                    }
                }
                inc
            })
            .collect();
        let mut is_fixed = vec![false; n];
        for &v in fixed {
            is_fixed[v] = true;
        }
        let mut class_of = vec![usize::MAX; n];
        let mut members: Vec<Vec<Vertex>> = Vec::new();
        let mut swappable_reps: Vec<usize> = Vec::new();
        for v in 0..n {
            if !is_fixed[v] {
                let found = swappable_reps.iter().copied().find(|&c| {
                    let rep = members[c][0];
                    families
                        .iter()
                        .zip(&incidence)
                        .all(|(fam, inc)| swap_preserves(fam, inc, rep, v))
                });
                if let Some(c) = found {
                    class_of[v] = c;
                    members[c].push(v);
                    continue;
                }
                swappable_reps.push(members.len());
            }
            class_of[v] = members.len();
            members.push(vec![v]);
        }
        TwinClasses { class_of, members }
    }

    pub fn class_of(&self, v: Vertex) -> usize {
        self.class_of[v]
    }

    pub fn members(&self, class: usize) -> &[Vertex] {
        &self.members[class]
    }

    pub fn num_classes(&self) -> usize {
        self.members.len()
    }

    /// `v` is the smallest vertex of its class not marked `used`.
    pub fn is_smallest_free(&self, v: Vertex, used: &[bool]) -> bool {
        self.members[self.class_of[v]].iter().take_while(|&&y| y < v).all(|&y| used[y])
    }

    /// Within each class, the unused vertices of `fresh` are the smallest
    /// unused members of that class.
    pub fn is_canonical_set(&self, fresh: &[Vertex], used: &[bool]) -> bool {
        fresh.iter().all(|&x| {
            self.members[self.class_of[x]]
                .iter()
                .take_while(|&&y| y < x)
                .all(|&y| used[y] || fresh.contains(&y))
        })
    }
}

fn swap_preserves(family: &[Vec<Vertex>], inc: &[Vec<usize>], x: Vertex, y: Vertex) -> bool {
    let swap = |v: Vertex| {
        if v == x {
            y
        } else if v == y {
            x
        } else {
            v
        }
    };
    if inc[x].len() != inc[y].len() {
        return false;
    }
    inc[x].iter().chain(&inc[y]).all(|&i| {
        let e = &family[i];
        let has_x = e.binary_search(&x).is_ok();
        let has_y = e.binary_search(&y).is_ok();
        if has_x == has_y {
            return true;
        }
        let mut img: Vec<Vertex> = e.iter().map(|&v| swap(v)).collect();
        img.sort_unstable();
        family.binary_search(&img).is_ok()
    })
}
