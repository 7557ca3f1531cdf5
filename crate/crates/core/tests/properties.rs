use num_bigint::{BigInt, BigUint};
use num_rational::Ratio;
use proptest::prelude::*;

use nzagreb::alkane::{octane_isomers_all, parse_alkane, parse_alkane_name, AlkaneError};
use nzagreb::closed_forms::{
    m1_cartesian_nary, m2_cartesian_nary, mn_hamming, mn_hamming_compact, size_cartesian_nary,
    GraphStats,
};
use nzagreb::families::{complete, cycle, hypercube};
use nzagreb::indices::{
    compute, first_zagreb, forgotten, harary, hosoya, merrifield_simmons, neighbourhood_zagreb,
    second_zagreb,
};
use nzagreb::products::{cartesian_n, delta_law_check, product};
use nzagreb::qspr::{degeneracy_of_values, linear_fit, pearson, residual_sum_of_squares};
use nzagreb::{Graph, IndexId, IndexValue, ProductKind};

fn graph(max_order: usize) -> impl Strategy<Value = Graph> {
    (1..=max_order, 0.0..=1.0f64, any::<u64>())
        .prop_map(|(n, p, seed)| Graph::random(n, p, seed).unwrap())
}

fn floyd_warshall(g: &Graph) -> Vec<Vec<Option<u32>>> {
    let n = g.order();
    let mut d = vec![vec![None; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = Some(0);
    }
    for &(u, v) in g.edges() {
        d[u][v] = Some(1);
        d[v][u] = Some(1);
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                    if d[i][j].is_none_or(|c| a + b < c) {
                        d[i][j] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

fn count_matchings(g: &Graph) -> BigUint {
    let edges = g.edges();
    let mut count = 0u64;
    'subsets: for mask in 0u32..(1 << edges.len()) {
        let mut used = vec![false; g.order()];
        for (i, &(u, v)) in edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                if used[u] || used[v] {
                    continue 'subsets;
                }
                used[u] = true;
                used[v] = true;
            }
        }
        count += 1;
    }
    count.into()
}

fn count_independent_sets(g: &Graph) -> BigUint {
    let n = g.order();
    let count = (0u32..(1 << n))
        .filter(|mask| {
            g.edges()
                .iter()
                .all(|&(u, v)| mask >> u & mask >> v & 1 == 0)
        })
        .count();
    BigUint::from(count)
}

/// Plain backtracking isomorphism test.
fn isomorphic(a: &Graph, b: &Graph) -> bool {
    fn extend(
        a: &Graph,
        b: &Graph,
        map: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
        v: usize,
    ) -> bool {
        if v == a.order() {
            return true;
        }
        for w in 0..b.order() {
            if used[w] || a.degree(v) != b.degree(w) {
                continue;
            }
            let fits = (0..v).all(|u| a.has_edge(u, v) == b.has_edge(map[u].unwrap(), w));
            if fits {
                map[v] = Some(w);
                used[w] = true;
                if extend(a, b, map, used, v + 1) {
                    return true;
                }
                used[w] = false;
            }
        }
        map[v] = None;
        false
    }
    if a.order() != b.order() || a.size() != b.size() {
        return false;
    }
    let mut da = a.degrees();
    let mut db = b.degrees();
    da.sort_unstable();
    db.sort_unstable();
    da == db
        && extend(
            a,
            b,
            &mut vec![None; a.order()],
            &mut vec![false; b.order()],
            0,
        )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn handshake_and_degree_sums(g in graph(12)) {
        let degrees = g.degrees();
        let deltas = g.neighbor_degree_sums();
        prop_assert_eq!(degrees.iter().sum::<u64>(), 2 * g.size() as u64);
        prop_assert_eq!(BigInt::from(deltas.iter().sum::<u64>()), first_zagreb(&g));
        let weighted: u64 = degrees.iter().zip(&deltas).map(|(d, s)| d * s).sum();
        prop_assert_eq!(BigInt::from(weighted), 2 * second_zagreb(&g));
    }

    #[test]
    fn edge_list_round_trip(g in graph(12)) {
        let text = g.to_edge_list();
        prop_assert_eq!(Graph::parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn distances_match_floyd_warshall(g in graph(8)) {
        prop_assert_eq!(g.distance_matrix(), floyd_warshall(&g));
    }

    #[test]
    fn mn_zero_iff_edgeless(g in graph(10)) {
        prop_assert_eq!(neighbourhood_zagreb(&g) == BigInt::from(0), g.size() == 0);
    }

    #[test]
    fn mn_grows_when_an_edge_is_added(g in graph(10), pick in any::<prop::sample::Index>()) {
        let n = g.order();
        let missing: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| !g.has_edge(u, v))
            .collect();
        prop_assume!(!missing.is_empty());
        let mut edges = g.edges().to_vec();
        edges.push(missing[pick.index(missing.len())]);
        let bigger = Graph::new(n, &edges).unwrap();
        prop_assert!(neighbourhood_zagreb(&bigger) > neighbourhood_zagreb(&g));
    }

    #[test]
    fn counting_indices_match_enumeration(g in graph(6)) {
        prop_assert_eq!(hosoya(&g).unwrap(), count_matchings(&g));
        prop_assert_eq!(merrifield_simmons(&g).unwrap(), count_independent_sets(&g));
    }

    #[test]
    fn product_edge_counts(a in graph(6), b in graph(6)) {
        let (v1, e1, v2, e2) = (a.order(), a.size(), b.order(), b.size());
        let cart = product(&a, &b, ProductKind::Cartesian).unwrap();
        prop_assert_eq!(cart.size(), v1 * e2 + v2 * e1);
        let tensor = product(&a, &b, ProductKind::Tensor).unwrap();
        prop_assert_eq!(tensor.size(), 2 * e1 * e2);
        let wreath = product(&a, &b, ProductKind::Wreath).unwrap();
        prop_assert_eq!(wreath.size(), v2 * v2 * e1 + v1 * e2);
        for kind in ProductKind::ALL {
            prop_assert!(delta_law_check(&a, &b, kind));
        }
    }

    #[test]
    fn cartesian_and_tensor_indices_commute(a in graph(5), b in graph(5)) {
        for kind in [ProductKind::Cartesian, ProductKind::Tensor] {
            let ab = product(&a, &b, kind).unwrap();
            let ba = product(&b, &a, kind).unwrap();
            for id in [IndexId::M1, IndexId::M2, IndexId::MN, IndexId::F, IndexId::Harary] {
                prop_assert_eq!(compute(&ab, id).unwrap(), compute(&ba, id).unwrap());
            }
            let (x, y) = (compute(&ab, IndexId::Chi).unwrap().to_f64(), compute(&ba, IndexId::Chi).unwrap().to_f64());
            prop_assert!((x - y).abs() <= 1e-9 * x.abs().max(1.0));
        }
    }

    #[test]
    fn nary_cartesian_counts(factors in prop::collection::vec(graph(5), 2..=4)) {
        let stats: Vec<GraphStats> = factors.iter().map(GraphStats::of).collect();
        let g = cartesian_n(&factors).unwrap();
        prop_assert_eq!(size_cartesian_nary(&stats), BigInt::from(g.size()));
        prop_assert_eq!(m1_cartesian_nary(&stats), first_zagreb(&g));
        prop_assert_eq!(m2_cartesian_nary(&stats), second_zagreb(&g));
    }

    #[test]
    fn hamming_expansion_is_compact(sizes in prop::collection::vec(2usize..=40, 1..=6)) {
        prop_assert_eq!(mn_hamming(&sizes), mn_hamming_compact(&sizes));
    }

    #[test]
    fn pearson_affine_invariance(
        xs in prop::collection::vec(-100.0..100.0f64, 3..20),
        noise in prop::collection::vec(-10.0..10.0f64, 20),
        a in 0.1..10.0f64,
        b in -50.0..50.0f64,
    ) {
        let ys: Vec<f64> = xs.iter().zip(&noise).map(|(x, e)| 0.5 * x + e).collect();
        let Ok(r) = pearson(&xs, &ys) else { return Ok(()) };
        let moved: Vec<f64> = xs.iter().map(|x| a * x + b).collect();
        let flipped: Vec<f64> = ys.iter().map(|y| -a * y + b).collect();
        prop_assert!((pearson(&moved, &ys).unwrap() - r).abs() < 1e-9);
        prop_assert!((pearson(&xs, &flipped).unwrap() + r).abs() < 1e-9);
        let fit = linear_fit(&xs, &ys).unwrap();
        prop_assert!((fit.r_squared - r * r).abs() < 1e-12);
        let best = residual_sum_of_squares(&xs, &ys, fit.slope, fit.intercept);
        for (ds, di) in [(1e-6, 0.0), (-1e-6, 0.0), (0.0, 1e-6), (0.0, -1e-6)] {
            let other = residual_sum_of_squares(&xs, &ys, fit.slope + ds, fit.intercept + di);
            prop_assert!(other >= best * (1.0 - 1e-12));
        }
    }

    #[test]
    fn one_duplicate_gives_n_over_n_minus_one(n in 2usize..40, dup in any::<prop::sample::Index>()) {
        let mut values: Vec<IndexValue> = (0..n).map(|i| IndexValue::Integer(BigInt::from(i))).collect();
        prop_assert_eq!(degeneracy_of_values(IndexId::M1, &values).d, Ratio::from_integer(1));
        let j = dup.index(n - 1) + 1;
        values[j] = values[0].clone();
        prop_assert_eq!(degeneracy_of_values(IndexId::M1, &values).d, Ratio::new(n, n - 1));
    }

    #[test]
    fn generated_names_build_trees(
        parent in 4usize..=8,
        groups in prop::collection::vec((prop::collection::vec(1usize..=8, 1..=3), any::<bool>()), 0..=2),
    ) {
        let parents = ["butane", "pentane", "hexane", "heptane", "octane"];
        let multipliers = ["", "di", "tri"];
        let mut name = String::new();
        let mut carbons = parent;
        let mut valid_locants = true;
        for (i, (locants, ethyl)) in groups.iter().enumerate() {
            if i > 0 {
                name.push('-');
            }
            let list: Vec<String> = locants.iter().map(usize::to_string).collect();
            name.push_str(&list.join(","));
            name.push('-');
            name.push_str(multipliers[locants.len() - 1]);
            name.push_str(if *ethyl { "ethyl" } else { "methyl" });
            carbons += locants.len() * if *ethyl { 2 } else { 1 };
            valid_locants &= locants.iter().all(|&l| l <= parent);
        }
        name.push(' ');
        name.push_str(parents[parent - 4]);
        let name = name.trim_start().to_string();
        match parse_alkane(&name) {
            Ok(g) => {
                prop_assert_eq!(g.order(), carbons);
                prop_assert_eq!(g.size(), carbons - 1);
                prop_assert!(g.is_connected());
                prop_assert!(g.degrees().iter().all(|&d| d <= 4));
            }
            Err(AlkaneError::LocantOutOfRange { .. }) => prop_assert!(!valid_locants),
            Err(AlkaneError::ValenceExceeded { .. }) => prop_assert!(valid_locants),
            Err(e) => prop_assert!(false, "{name:?}: {e}"),
        }
    }

    #[test]
    fn arbitrary_text_never_panics(text in "[0-9a-z ,\\-]{0,30}") {
        if let Err(AlkaneError::Syntax { position, .. }) = parse_alkane_name(&text) {
            prop_assert!(position <= text.len());
        }
    }
}

#[test]
fn regular_graph_identities() {
    let mut graphs: Vec<(Graph, u64)> = Vec::new();
    for n in 3..12 {
        graphs.push((cycle(n), 2));
        graphs.push((complete(n), n as u64 - 1));
    }
    for d in 1..7 {
        graphs.push((hypercube(d).unwrap(), d as u64));
    }
    for (g, r) in graphs {
        let n = BigInt::from(g.order());
        let r = BigInt::from(r);
        assert_eq!(first_zagreb(&g), &n * r.pow(2));
        assert_eq!(forgotten(&g), &n * r.pow(3));
        assert_eq!(2 * second_zagreb(&g), &n * r.pow(3));
        assert_eq!(neighbourhood_zagreb(&g), &n * r.pow(4));
    }
}

#[test]
fn harary_of_complete_graph_is_pair_count() {
    for n in 1..10usize {
        assert_eq!(
            harary(&complete(n)),
            Ratio::from_integer(BigInt::from(n * (n - 1) / 2))
        );
    }
}

#[test]
fn octane_isomers_are_pairwise_distinct() {
    let isomers = octane_isomers_all();
    assert_eq!(isomers.len(), 18);
    for (i, a) in isomers.iter().enumerate() {
        assert_eq!(a.structure.order(), 8, "{}", a.name);
        assert!(isomorphic(&a.structure, &a.structure));
        for b in &isomers[i + 1..] {
            assert!(
                !isomorphic(&a.structure, &b.structure),
                "{} ~ {}",
                a.name,
                b.name
            );
        }
    }
}

#[test]
fn isomorphism_oracle_sees_relabelling() {
    let a = parse_alkane("2-methyl heptane").unwrap();
    let b = parse_alkane("6-methyl heptane").unwrap();
    assert_ne!(a, b);
    assert!(isomorphic(&a, &b));
}
