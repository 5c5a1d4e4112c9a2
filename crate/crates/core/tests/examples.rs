//! Worked instances with hand-checked or brute-forced values.

mod common;

use common::{naive_berge, naive_ex, naive_sub};
use turan_core::arith::{frac, int};
use turan_core::constructions::{
    berge_block_witness, berge_regular_witness, expansion_witness, linear_witness, regular_uniform,
};
use turan_core::formulas::{
    block_term, ex_berge_large_r_rhs, ex_berge_small_r_rhs, ex_berge_star, ex_erdos_matching, ex_expansion_rhs,
    ex_linear_rhs, ex_llp, Branch, StarTuranOracle,
};
use turan_core::patterns::{
    adl_bound, berge_star_at, contains_berge, contains_expansion, contains_sub, expand, greedy_embed_star_forest,
    placements_to_berge, skeleton_of, star, star_forest, verify_adl, EmbedMode,
};
use turan_core::search::{ex_exact, ex_exact_linear, ex_lower_local_search, verify_free};
use turan_core::{ForbiddenFamily, Graph, Hypergraph, Mode, Pattern, SearchOptions, StarForestSpec};

fn spec(s: &str) -> StarForestSpec {
    s.parse().unwrap()
}

fn h(n: usize, edges: &[&[usize]]) -> Hypergraph {
    Hypergraph::new(n, edges).unwrap()
}

fn exact(n: usize, fam: &ForbiddenFamily) -> usize {
    ex_exact(n, fam, &SearchOptions::default()).unwrap().value
}

#[test]
fn product_of_two_lines_is_the_grid() {
    let line = Hypergraph::lattice(3, 1).unwrap().0;
    let p = line.cartesian_product(&line);
    let (grid, _) = Hypergraph::lattice(3, 2).unwrap();
    assert_eq!((p.n(), p.num_edges()), (9, 6));
    // both are the rows and columns of a 3×3 array
    let mut a: Vec<Vec<usize>> = p.edges().to_vec();
    let mut b: Vec<Vec<usize>> = (0..3).map(|x| (0..3).map(|y| 3 * x + y).collect()).collect();
    b.extend((0..3).map(|y| (0..3).map(|x| 3 * x + y).collect()));
    a.sort();
    b.sort();
    assert_eq!(a, b);
    assert_eq!(grid.degrees(), p.degrees());
}

#[test]
fn binary_cube() {
    let (q, col) = Hypergraph::lattice(2, 3).unwrap();
    assert_eq!((q.n(), q.num_edges()), (8, 12));
    assert!(q.is_uniform(2) && q.is_regular(3));
    // adjacent cube vertices differ in exactly one bit
    assert!(q.edges().iter().all(|e| (e[0] ^ e[1]).count_ones() == 1));
    assert_eq!(col.num_colors(), 3);
}

#[test]
fn triangles_sharing_a_vertex() {
    let g = Graph::new(5, &[(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)]).unwrap();
    let t = Hypergraph::clique_hypergraph(&g, 3).unwrap();
    let brute: Vec<Vec<usize>> = common::r_sets(5, 3)
        .into_iter()
        .filter(|s| (0..3).all(|a| (a + 1..3).all(|b| g.as_hypergraph().contains_edge(&[s[a], s[b]]))))
        .collect();
    assert_eq!(t.edges(), &brute[..]);
    assert_eq!(t.num_edges(), 2);
}

#[test]
fn padded_cherry_embeds_at_its_centre() {
    let host = h(5, &[&[0, 1, 2], &[0, 3, 4]]);
    let plus = expand(&star(2), 3).unwrap();
    let emb = contains_sub(&host, &plus).unwrap();
    assert!(naive_sub(&host, &plus));
    assert_eq!(emb.vertex_map[0], 0);
    let w = contains_expansion(&host, &star(2), 3).unwrap().unwrap();
    assert_eq!(w.vertex_map, vec![0, 1, 3]);
    assert_eq!(w.fill, vec![vec![2], vec![4]]);
    assert!(contains_expansion(&Hypergraph::complete_uniform(4, 3), &star(2), 3).unwrap().is_none());
}

#[test]
fn cherry_in_complete_triple_system() {
    let k4 = Hypergraph::complete_uniform(4, 3);
    let f = star(2);
    let w = contains_berge(&k4, &f).unwrap();
    assert!(naive_berge(&k4, &f));
    w.validate(&k4, &f).unwrap();
    let sk = skeleton_of(&w, &f, &k4).unwrap();
    let c = w.vertex_map[0];
    assert_eq!(sk.num_edges(), 2);
    assert!(sk.edges().iter().all(|e| e.contains(&c)));
    let matching = h(6, &[&[0, 1, 2], &[3, 4, 5]]);
    assert!(contains_berge(&matching, &f).is_none());
}

#[test]
fn stars_at_a_vertex() {
    let k4 = Hypergraph::complete_uniform(4, 3);
    assert!(berge_star_at(&k4, 0, 3).unwrap().is_some());
    let single = h(3, &[&[0, 1, 2]]);
    assert!(berge_star_at(&single, 0, 2).unwrap().is_none());
    let claw = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
    let w = berge_star_at(claw.as_hypergraph(), 0, 3).unwrap().unwrap();
    let mut leaves = w.vertex_map[1..].to_vec();
    leaves.sort();
    assert_eq!(leaves, vec![1, 2, 3]);
}

#[test]
fn average_degree_bounds() {
    assert_eq!(adl_bound(5, 3, int(0), 12).unwrap(), frac(2, 3) * int(12));
    assert_eq!(adl_bound(3, 3, int(0), 9).unwrap(), int(0));
    let (grid, _) = Hypergraph::lattice(3, 2).unwrap();
    let c = verify_adl(&grid, 2, int(0), 2).unwrap();
    assert!(c.hypotheses_hold && c.holds);
    assert_eq!(c.low_degree_vertices, 0);
}

#[test]
fn greedy_packs_cherries_into_two_tetrahedra() {
    let k4 = Hypergraph::complete_uniform(4, 3);
    let host = k4.disjoint_union(&k4);
    let sp = spec("2,2");
    let placed = greedy_embed_star_forest(&host, &sp, EmbedMode::Berge).unwrap();
    placements_to_berge(&sp, &placed).validate(&host, &star_forest(&sp)).unwrap();
    assert!(contains_berge(&host, &star_forest(&sp)).is_some());
    let matching = h(6, &[&[0, 1, 2], &[3, 4, 5]]);
    assert!(greedy_embed_star_forest(&matching, &spec("2"), EmbedMode::Berge).is_none());
    assert!(greedy_embed_star_forest(&matching, &spec("2"), EmbedMode::Expansion).is_none());
}

#[test]
fn expansion_witness_values() {
    let mut rep = expansion_witness(6, 3, &spec("2,2"), 2).unwrap();
    assert_eq!(rep.edges, 10 + 3);
    assert!(rep.verify().unwrap());
    let rep = expansion_witness(7, 2, &spec("3"), 1).unwrap();
    assert_eq!(rep.edges, 7);
    assert_eq!(expansion_witness(6, 3, &spec("1"), 1).unwrap().edges, 0);
}

#[test]
fn linear_witness_values() {
    let mut rep = linear_witness(9, 3, &spec("2"), 1).unwrap();
    assert_eq!(rep.edges, 3);
    assert!(rep.hypergraph.is_regular(1));
    assert!(rep.verify().unwrap());
    let mut rep = linear_witness(5, 3, &spec("2,1"), 2).unwrap();
    assert_eq!(rep.edges, 2);
    assert_eq!(rep.formula_term, int(2));
    assert!(rep.verify().unwrap());
    assert_eq!(rep.packed_in_a, Some(0));
}

#[test]
fn regular_witness_values() {
    let rep = berge_regular_witness(13, 4, &spec("3,2"), 1).unwrap();
    assert_eq!((rep.edges, rep.claimed_count), (4, 4));
    assert_eq!(berge_regular_witness(13, 4, &spec("3,1"), 1).unwrap().edges, 0);
    let rep = berge_regular_witness(10, 4, &spec("2,2"), 1).unwrap();
    assert_eq!(rep.edges, 3);
    assert!(contains_berge(&rep.hypergraph, &star_forest(&spec("2,2"))).is_none());
}

#[test]
fn block_witness_values() {
    let mut rep = berge_block_witness(7, 2, &spec("2,2"), 2).unwrap();
    assert_eq!(rep.edges, 9);
    assert!(rep.verify().unwrap());
    // i = 1: disjoint blocks of size d_1 plus a remainder
    let rep = berge_block_witness(11, 3, &spec("4,2"), 1).unwrap();
    assert_eq!(rep.edges, 4 * 2 + 1);
    let rep = berge_block_witness(10, 2, &spec("3,3"), 2).unwrap();
    assert_eq!(int(rep.edges as i128), rep.formula_term);
    // a short last class falls below the rounded-up block count
    let rep = berge_block_witness(9, 2, &spec("3,3"), 2).unwrap();
    assert_eq!((rep.edges, rep.formula_term), (15, int(18)));
}

#[test]
fn regular_uniform_values() {
    let h = regular_uniform(12, 3, 2).unwrap();
    assert_eq!(h.num_edges(), 8);
    assert!(h.is_regular(2));
    assert_eq!(regular_uniform(9, 3, 0).unwrap().num_edges(), 0);
    assert!(regular_uniform(6, 3, 1).unwrap().is_regular(1));
}

#[test]
fn graph_formula_values() {
    assert_eq!(ex_llp(10, &spec("3")).unwrap().value, int(10));
    let b = ex_llp(7, &spec("2,2")).unwrap();
    assert_eq!((b.value, b.argmax), (int(9), 2));
    assert_eq!(b.term(Branch::Main, 1), Some(int(3)));
    assert_eq!(ex_llp(12, &spec("1")).unwrap().value, int(0));
    assert_eq!(ex_erdos_matching(6, 3, 2).unwrap(), 10);
    assert_eq!(ex_erdos_matching(9, 3, 1).unwrap(), 0);
    assert_eq!(ex_erdos_matching(5, 2, 2).unwrap(), 4);
    let m2 = ForbiddenFamily::star_forest(&StarForestSpec::matching(2).unwrap(), Mode::Sub, 2).unwrap();
    assert_eq!(exact(5, &m2), 4);
}

#[test]
fn hypergraph_formula_values() {
    let pair = StarTuranOracle::FixedPair;
    let b = ex_expansion_rhs(6, 3, &spec("2,2"), &pair).unwrap();
    assert_eq!(b.term(Branch::Main, 1), Some(int(4)));
    assert_eq!(b.value, int(13));
    assert_eq!(ex_linear_rhs(9, 3, &spec("2")).unwrap().value, int(3));
    let b = ex_linear_rhs(5, 3, &spec("2,1")).unwrap();
    assert_eq!(b.term(Branch::Main, 1), Some(frac(5, 3)));
    assert_eq!(b.value, int(2));
    assert_eq!(ex_berge_large_r_rhs(13, 4, &spec("3,2")).unwrap().value, int(4));
    assert_eq!(ex_berge_large_r_rhs(13, 4, &spec("3,1,1")).unwrap().term(Branch::Main, 1), Some(int(0)));
    // equal degrees: the last index gives (ℓ−1)(n−k+1)/(r−k+1)
    let b = ex_berge_large_r_rhs(20, 6, &spec("3,3,3")).unwrap();
    assert_eq!((b.value, b.argmax), (frac(2 * 18, 4), 2));
    let b = ex_berge_small_r_rhs(7, 2, &spec("2,2")).unwrap();
    assert_eq!(b.value, int(9));
    assert_eq!(b.term(Branch::Block, 2), Some(int(9)));
    assert!(b.terms.iter().all(|t| t.branch != Branch::Clique));
    assert_eq!(block_term(7, 2, 2, 2).unwrap(), 9);
    assert_eq!(ex_berge_star(6, 3, 2).unwrap(), int(2));
    assert_eq!(ex_berge_star(8, 3, 4).unwrap(), int(8));
    assert_eq!(ex_berge_star(8, 3, 1).unwrap(), int(0));
}

#[test]
fn exact_small_values() {
    let sub = |d: &str| ForbiddenFamily::star_forest(&spec(d), Mode::Sub, 2).unwrap();
    assert_eq!(exact(4, &sub("1,1")), 3);
    assert_eq!(naive_ex(4, 2, |h| !naive_sub(h, star_forest(&spec("1,1")).as_hypergraph())), 3);
    assert_eq!(exact(5, &sub("3")), 5);
    let berge = ForbiddenFamily::star_forest(&spec("2"), Mode::Berge, 3).unwrap();
    let res = ex_exact(6, &berge, &SearchOptions::default()).unwrap();
    assert_eq!(res.value, 2);
    assert!(res.witness.is_regular(1));
    let exp = ForbiddenFamily::star_forest(&spec("2"), Mode::Expansion, 3).unwrap();
    assert_eq!(ex_exact_linear(7, &exp, &SearchOptions::default()).unwrap().value, 2);
    let wide = SearchOptions { budget: 84, ..SearchOptions::default() };
    assert_eq!(ex_exact_linear(9, &exp, &wide).unwrap().value, 3);
    assert_eq!(exact(2, &berge), 0);
}

#[test]
fn freeness_checks() {
    let berge = ForbiddenFamily::star_forest(&spec("2,2"), Mode::Berge, 2).unwrap();
    let rep = berge_block_witness(7, 2, &spec("2,2"), 2).unwrap();
    assert!(verify_free(&rep.hypergraph, &berge).unwrap().is_free());
    let s2 = ForbiddenFamily::single(Pattern::Graph(star(2)), Mode::Berge, 3).unwrap();
    let report = verify_free(&Hypergraph::complete_uniform(6, 3), &s2).unwrap();
    assert!(!report.is_free());
    assert!(verify_free(&Hypergraph::empty(5), &s2).unwrap().is_free());
}

#[test]
fn local_search_values() {
    let fam = ForbiddenFamily::star_forest(&spec("2,2"), Mode::Berge, 2).unwrap();
    assert_eq!(ex_lower_local_search(7, &fam, 0, 1).unwrap().num_edges(), 0);
    let a = ex_lower_local_search(7, &fam, 4000, 7).unwrap();
    let b = ex_lower_local_search(7, &fam, 4000, 7).unwrap();
    assert_eq!(a, b);
    assert!(a.num_edges() >= 9);
    assert!(a.num_edges() <= exact(7, &fam));
}
