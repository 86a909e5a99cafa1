use std::collections::{BTreeMap, BTreeSet};

use num_bigint::{BigInt, BigUint};
use proptest::prelude::*;

use arbogray::arborescence::{apply_flip, complete_subtree, is_arborescence, legal_flips, Arborescence};
use arbogray::digraph::{is_built_on, ArcId, DiGraph, VertexId};
use arbogray::graycode::{gray_code_clique_support, lift_duplication_path};
use arbogray::instances::{random_clique_support, random_tournament, reroot};
use arbogray::oracle::{
    build_flip_graph, count_arborescences_matrix_tree, determinant_bareiss, enumerate_arborescences,
    verify_gray_code,
};
use arbogray::parity::{assign_arc_weights, determinant_by_expansion, signed_laplacian, tree_weight};

fn digraph(max_n: usize, max_arcs: usize) -> impl Strategy<Value = DiGraph> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec((0..n, 0..n), 0..=max_arcs).prop_map(move |pairs| {
            let arcs = pairs.into_iter().filter(|(a, b)| a != b);
            DiGraph::new(n, 0, arcs).unwrap()
        })
    })
}

/// At most two arcs into every vertex.
fn low_indegree(max_n: usize) -> impl Strategy<Value = DiGraph> {
    (2..=max_n).prop_flat_map(|n| {
        prop::collection::vec((0..n, 0..n, any::<bool>()), n - 1).prop_map(move |choice| {
            let mut arcs = Vec::new();
            for (v, (a, b, two)) in (1..n).zip(choice) {
                let a = if a == v { 0 } else { a };
                arcs.push((a, v));
                if two && b != v && b != a {
                    arcs.push((b, v));
                }
            }
            DiGraph::new(n, 0, arcs).unwrap()
        })
    })
}

fn lists(arbs: &[Arborescence]) -> BTreeSet<Vec<ArcId>> {
    arbs.iter().map(|a| a.arc_list()).collect()
}

/// Flip graph edges as pairs of arc lists.
fn edge_set(g: &DiGraph) -> BTreeSet<(Vec<ArcId>, Vec<ArcId>)> {
    let fg = build_flip_graph(g).unwrap();
    fg.edges()
        .map(|(i, j, _)| {
            let (a, b) = (fg.nodes[i].arc_list(), fg.nodes[j].arc_list());
            if a < b {
                (a, b)
            } else {
                (b, a)
            }
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn deleting_arcs_into_the_root_changes_nothing(g in digraph(5, 10)) {
        let h = g.strip_root_in_arcs();
        prop_assert_eq!(lists(&enumerate_arborescences(&g).unwrap()), lists(&enumerate_arborescences(&h).unwrap()));
        prop_assert_eq!(edge_set(&g), edge_set(&h));
    }

    #[test]
    fn built_on_keeps_the_arborescences(g in digraph(5, 8), extra in prop::collection::vec((0usize..5, 0usize..5), 1..4)) {
        let mut h = g.clone();
        for (t, s) in extra {
            if t < g.n() && s < g.n() && t != s {
                h = h.add_arc(VertexId(t), VertexId(s)).unwrap().0;
            }
        }
        if is_built_on(&h, &g).unwrap() {
            prop_assert_eq!(lists(&enumerate_arborescences(&g).unwrap()), lists(&enumerate_arborescences(&h).unwrap()));
        }
    }

    #[test]
    fn arborescence_is_built_on_itself_only_when_alone(g in digraph(5, 9)) {
        for a in enumerate_arborescences(&g).unwrap() {
            let tree = g.restrict_to(a.arcs());
            if is_built_on(&g, &tree).unwrap() {
                prop_assert_eq!(enumerate_arborescences(&g).unwrap().len(), 1);
            }
        }
    }

    #[test]
    fn subdivision_preserves_the_flip_graph(g in digraph(5, 9), pick in any::<prop::sample::Index>()) {
        prop_assume!(g.arc_count() > 0);
        let a = g.arcs()[pick.index(g.arc_count())];
        let (h, mid) = g.subdivide_arc(a.id).unwrap();
        let second = h.in_arcs(a.head).map(|x| x.id).find(|id| h.arc(*id).unwrap().tail == mid).unwrap();
        // forget the new vertex, reading its outgoing half as the old arc
        let back = |t: &Arborescence| -> Vec<ArcId> {
            let mut ids: Vec<ArcId> = t
                .arcs()
                .filter(|&id| id != a.id)
                .map(|id| if id == second { a.id } else { id })
                .collect();
            ids.sort();
            ids
        };
        let fg = build_flip_graph(&h).unwrap();
        let image: BTreeSet<Vec<ArcId>> = fg.nodes.iter().map(back).collect();
        prop_assert_eq!(image.len(), fg.len());
        prop_assert_eq!(image, lists(&enumerate_arborescences(&g).unwrap()));
        let edges: BTreeSet<(Vec<ArcId>, Vec<ArcId>)> = fg
            .edges()
            .map(|(i, j, _)| {
                let (x, y) = (back(&fg.nodes[i]), back(&fg.nodes[j]));
                if x < y { (x, y) } else { (y, x) }
            })
            .collect();
        prop_assert_eq!(edges.len(), fg.edge_count());
        prop_assert_eq!(edges, edge_set(&g));
    }

    #[test]
    fn contraction_images(g in digraph(5, 10), pick in any::<prop::sample::Index>()) {
        let out: Vec<ArcId> = g.out_arcs(g.root()).map(|a| a.id).collect();
        prop_assume!(!out.is_empty());
        let a = out[pick.index(out.len())];
        let con = g.contract_root_arc(a).unwrap();
        let images: BTreeSet<Vec<ArcId>> = enumerate_arborescences(&g)
            .unwrap()
            .iter()
            .filter(|t| t.contains(a))
            .map(|t| t.arcs().filter(|&id| id != a).collect::<BTreeSet<_>>().into_iter().collect())
            .collect();
        prop_assert_eq!(images, lists(&enumerate_arborescences(&con.graph).unwrap()));
    }

    #[test]
    fn legal_flips_are_the_flip_graph_neighbours(g in digraph(5, 10)) {
        let fg = build_flip_graph(&g).unwrap();
        for (i, a) in fg.nodes.iter().enumerate() {
            prop_assert!(is_arborescence(&g, a.parent_map()));
            let flips = legal_flips(&g, a);
            prop_assert_eq!(flips.len(), fg.degree(i));
            let mut via_flips = BTreeSet::new();
            for f in &flips {
                let b = apply_flip(&g, a, *f).unwrap();
                prop_assert!(is_arborescence(&g, b.parent_map()));
                prop_assert!(legal_flips(&g, &b).iter().any(|&back| apply_flip(&g, &b, back).unwrap() == *a));
                via_flips.insert(fg.index_of(&b).unwrap());
            }
            prop_assert_eq!(via_flips, fg.neighbours(i).collect::<BTreeSet<_>>());
        }
        for (i, j, _) in fg.edges() {
            let (x, y) = (fg.nodes[i].parent_map(), fg.nodes[j].parent_map());
            prop_assert_eq!((0..g.n()).filter(|&v| x[v] != y[v]).count(), 1);
        }
    }

    #[test]
    fn completion_keeps_the_partial_tree(g in digraph(5, 10), mask in prop::collection::vec(any::<bool>(), 5), pick in any::<prop::sample::Index>()) {
        let all = enumerate_arborescences(&g).unwrap();
        prop_assume!(!all.is_empty());
        let a = &all[pick.index(all.len())];
        let partial: Vec<Option<ArcId>> = a.parent_map().iter().zip(mask).map(|(p, keep)| if keep { *p } else { None }).collect();
        let done = complete_subtree(&g, &partial).unwrap();
        prop_assert!(is_arborescence(&g, done.parent_map()));
        for id in partial.iter().flatten() {
            prop_assert!(done.contains(*id));
        }
    }

    #[test]
    fn matrix_tree_counts_match(g in digraph(6, 14)) {
        let count = enumerate_arborescences(&g).unwrap().len();
        prop_assert_eq!(count_arborescences_matrix_tree(&g), BigUint::from(count));
    }

    #[test]
    fn signs_colour_the_flip_graph(g in low_indegree(6)) {
        let w = assign_arc_weights(&g).unwrap();
        let fg = build_flip_graph(&g).unwrap();
        let sign: Vec<i8> = fg.nodes.iter().map(|a| tree_weight(a, &w).unwrap()).collect();
        for (i, j, _) in fg.edges() {
            prop_assert_ne!(sign[i], sign[j]);
        }
        let sum: i64 = sign.iter().map(|&s| i64::from(s)).sum();
        prop_assert!(sum.abs() <= 1);
        let det = determinant_by_expansion(&signed_laplacian(&g, &w).unwrap().matrix).unwrap();
        prop_assert_eq!(det, sum);
    }

    #[test]
    fn expansion_matches_elimination(k in 1usize..7, cols in prop::collection::vec((0u8..3, 0usize..7, 0usize..7, any::<bool>()), 7)) {
        // each column is zero, a single +-1, or a +1/-1 pair
        let mut m = vec![vec![0i64; k]; k];
        for (j, &(kind, a, b, neg)) in cols.iter().take(k).enumerate() {
            let s = if neg { -1 } else { 1 };
            let (a, b) = (a % k, b % k);
            match kind {
                0 => {}
                1 => m[a][j] = s,
                _ if a != b => {
                    m[a][j] = s;
                    m[b][j] = -s;
                }
                _ => m[a][j] = s,
            }
        }
        prop_assert_eq!(BigInt::from(determinant_by_expansion(&m).unwrap()), determinant_bareiss(&m));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn tournament_codes_verify(n in 1usize..=7, seed in any::<u64>(), root in any::<prop::sample::Index>()) {
        let t = random_tournament(n, seed).unwrap();
        let g = reroot(&t, root.index(n)).unwrap();
        let p = gray_code_clique_support(&g).unwrap();
        let report = verify_gray_code(&g, &p.steps);
        prop_assert!(report.passed(), "{}", report);
        prop_assert_eq!(BigUint::from(p.len()), count_arborescences_matrix_tree(&g));
    }

    #[test]
    fn multigraph_codes_verify(n in 1usize..=6, seed in any::<u64>(), bigons in 0.0f64..0.6) {
        let g = random_clique_support(n, seed, bigons).unwrap();
        let p = gray_code_clique_support(&g).unwrap();
        prop_assert!(verify_gray_code(&g, &p.steps).passed());
        prop_assert_eq!(BigUint::from(p.len()), count_arborescences_matrix_tree(&g));
    }

    #[test]
    fn duplication_adds_one_step_per_use(n in 2usize..=5, seed in any::<u64>(), pick in any::<prop::sample::Index>()) {
        let g = random_clique_support(n, seed, 0.3).unwrap().simplify().0;
        let base = gray_code_clique_support(&g).unwrap().steps;
        let a = g.arcs()[pick.index(g.arc_count())].id;
        let (dup, copy) = g.duplicate_arc(a).unwrap();
        let out = lift_duplication_path(&dup, a, copy, &base).unwrap();
        prop_assert_eq!(out.len(), base.len() + base.iter().filter(|t| t.contains(a)).count());
        prop_assert!(verify_gray_code(&dup, &out).passed());
        let counts: BTreeMap<bool, usize> = out.iter().fold(BTreeMap::new(), |mut m, t| {
            *m.entry(t.contains(copy)).or_default() += 1;
            m
        });
        prop_assert_eq!(counts.get(&true).copied().unwrap_or(0), base.iter().filter(|t| t.contains(a)).count());
    }
}
