//! Brute-force reference implementations. Deliberately naive: they share no
//! code with the library beyond the carrier types.

#![allow(dead_code)]

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use turan_core::{Graph, Hypergraph};

/// Calls `visit` with every injective sequence of `k` values from `0..n`
/// until it returns true.
pub fn any_injection(n: usize, k: usize, visit: &mut impl FnMut(&[usize]) -> bool) -> bool {
    fn go(n: usize, k: usize, cur: &mut Vec<usize>, used: &mut [bool], visit: &mut impl FnMut(&[usize]) -> bool) -> bool {
        if cur.len() == k {
            return visit(cur);
        }
        for v in 0..n {
            if used[v] {
                continue;
            }
            used[v] = true;
            cur.push(v);
            let hit = go(n, k, cur, used, visit);
            cur.pop();
            used[v] = false;
            if hit {
                return true;
            }
        }
        false
    }
    if k > n {
        return false;
    }
    go(n, k, &mut Vec::new(), &mut vec![false; n], visit)
}

fn contains(e: &[usize], x: usize) -> bool {
    e.contains(&x)
}

/// Every vertex injection times every injective edge assignment.
pub fn naive_berge(h: &Hypergraph, f: &Graph) -> bool {
    let pairs: Vec<(usize, usize)> = f.edges().iter().map(|e| (e[0], e[1])).collect();
    any_injection(h.n(), f.n(), &mut |phi| {
        any_injection(h.num_edges(), pairs.len(), &mut |psi| {
            pairs.iter().zip(psi).all(|(&(a, b), &j)| {
                let e = &h.edges()[j];
                contains(e, phi[a]) && contains(e, phi[b])
            })
        })
    })
}

/// Edge-exact embedding by trying every vertex injection.
pub fn naive_sub(h: &Hypergraph, p: &Hypergraph) -> bool {
    any_injection(h.n(), p.n(), &mut |phi| {
        p.edges().iter().all(|e| {
            let mut img: Vec<usize> = e.iter().map(|&x| phi[x]).collect();
            img.sort_unstable();
            h.edges().contains(&img)
        })
    })
}

/// Berge copy whose hyperedges, minus the skeleton endpoints, are pairwise
/// disjoint and avoid the skeleton.
pub fn naive_expansion(h: &Hypergraph, f: &Graph) -> bool {
    let pairs: Vec<(usize, usize)> = f.edges().iter().map(|e| (e[0], e[1])).collect();
    any_injection(h.n(), f.n(), &mut |phi| {
        any_injection(h.num_edges(), pairs.len(), &mut |psi| {
            let mut seen = vec![false; h.n()];
            for &v in phi {
                seen[v] = true;
            }
            for (&(a, b), &j) in pairs.iter().zip(psi) {
                let e = &h.edges()[j];
                if !contains(e, phi[a]) || !contains(e, phi[b]) {
                    return false;
                }
                for &x in e {
                    if x == phi[a] || x == phi[b] {
                        continue;
                    }
                    if seen[x] {
                        return false;
                    }
                    seen[x] = true;
                }
            }
            true
        })
    })
}

/// All `r`-subsets of `0..n`, built by filtering bitmasks.
pub fn r_sets(n: usize, r: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == r)
        .map(|m| (0..n).filter(|&v| m >> v & 1 == 1).collect())
        .collect()
}

/// Largest edge count over every subfamily of `r`-sets accepted by `free`.
pub fn naive_ex(n: usize, r: usize, free: impl Fn(&Hypergraph) -> bool) -> usize {
    let sets = r_sets(n, r);
    assert!(sets.len() <= 20, "naive enumeration too large");
    let mut best = 0;
    for mask in 0u64..1 << sets.len() {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let edges: Vec<&Vec<usize>> = (0..sets.len()).filter(|&i| mask >> i & 1 == 1).map(|i| &sets[i]).collect();
        let h = Hypergraph::new(n, edges).unwrap();
        if free(&h) {
            best = size;
        }
    }
    best
}

pub fn pairwise_linear(edges: &[Vec<usize>]) -> bool {
    edges.iter().enumerate().all(|(i, a)| {
        edges[i + 1..].iter().all(|b| a.iter().filter(|x| b.contains(x)).count() <= 1)
    })
}

/// Random linear hypergraph: random sets of size 2..=max_size, each kept
/// when it meets every kept set in at most one vertex.
pub fn random_linear(rng: &mut ChaCha8Rng, n: usize, tries: usize, max_size: usize) -> Hypergraph {
    let mut edges: Vec<Vec<usize>> = Vec::new();
    for _ in 0..tries {
        let size = rng.gen_range(2..=max_size.min(n));
        let mut e: Vec<usize> = Vec::new();
        while e.len() < size {
            let v = rng.gen_range(0..n);
            if !e.contains(&v) {
                e.push(v);
            }
        }
        e.sort_unstable();
        if edges.iter().all(|f| f.iter().filter(|x| e.contains(x)).count() <= 1) {
            edges.push(e);
        }
    }
    Hypergraph::new(n, &edges).unwrap()
}

/// Degree of every vertex, counted directly from the edge list.
pub fn degrees(h: &Hypergraph) -> Vec<usize> {
    let mut d = vec![0; h.n()];
    for e in h.edges() {
        for &v in e {
            d[v] += 1;
        }
    }
    d
}

pub fn binom(n: i128, k: i128) -> i128 {
    if k < 0 || n < k {
        return 0;
    }
    (0..k).fold(1, |acc, j| acc * (n - j) / (j + 1))
}

/// Non-increasing degree sequences with `k ≤ max_k` stars of degree at most
/// `max_d`.
pub fn specs(max_k: usize, max_d: usize) -> Vec<Vec<usize>> {
    fn go(max_k: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        if cur.len() == max_k {
            return;
        }
        for d in (1..=cap).rev() {
            cur.push(d);
            go(max_k, d, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(max_k, max_d, &mut Vec::new(), &mut out);
    out
}
