mod support;

use rainbow_ears::ear::{even_color_sequence, Orientation};
use rainbow_ears::generators::standard_corpus;
use rainbow_ears::*;

fn cycle(n: usize) -> Graph {
    generate(&FamilySpec::Cycle { n }).unwrap()
}

fn complete(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)))).unwrap()
}

#[test]
fn even_sequences_match_positional_formula() {
    for k in 1..=12 {
        for p in 1..=2 * k + 1 {
            let asc = even_color_sequence(p, k, Orientation::Ascending).unwrap();
            assert_eq!(asc, support::even_by_position(p, k, true), "p={p} k={k}");
            let desc = even_color_sequence(p, k, Orientation::Descending).unwrap();
            assert_eq!(desc, support::even_by_position(p, k, false), "p={p} k={k}");
            let mut distinct = asc.clone();
            distinct.sort_unstable();
            distinct.dedup();
            assert_eq!(distinct.len(), p);
            let low = p.div_ceil(2);
            assert!(asc[..low].iter().all(|&c| c as usize <= k + 1));
            assert!(asc[low..].iter().all(|&c| c as usize >= k + 2));
        }
    }
}

#[test]
fn triangle_with_pendant_bridge() {
    let g = parse_edge_list("0 1\n1 2\n2 0\n0 3\n").unwrap();
    assert_eq!(find_bridges(&g), vec![Edge::new(0, 3)]);
    assert_eq!(support::bridges_by_removal(&g), vec![Edge::new(0, 3)]);
}

#[test]
fn corpus_bridges_match_removal() {
    for (label, spec) in standard_corpus() {
        let g = generate(&spec).unwrap();
        if g.m() <= 200 {
            assert_eq!(find_bridges(&g), support::bridges_by_removal(&g), "{label}");
        }
    }
}

#[test]
fn exact_values_cross_checked_by_enumeration() {
    let path4 = generate(&FamilySpec::Path { n: 4 }).unwrap();
    let cases = [("C4", cycle(4), 2), ("C5", cycle(5), 3), ("C6", cycle(6), 3), ("K4", complete(4), 1), ("P4", path4, 3)];
    for (name, g, expected) in cases {
        let t = exact_rc(&g, OracleLimits::default()).unwrap();
        assert_eq!(t, expected, "{name}");
        assert!(support::some_t_coloring_by_enumeration(&g, t), "{name}: no {t}-coloring");
        assert!(!support::some_t_coloring_by_enumeration(&g, t - 1), "{name}: {} colors suffice", t - 1);
    }
}

#[test]
fn complete_graphs_need_one_color() {
    for n in 3..=5 {
        assert_eq!(exact_rc(&complete(n), OracleLimits { max_edges: 10, ..Default::default() }).unwrap(), 1);
    }
}

#[test]
fn cycles_need_half_their_length() {
    for n in 4..=6 {
        assert_eq!(exact_rc(&cycle(n), OracleLimits::default()).unwrap(), n.div_ceil(2));
    }
}

#[test]
fn trees_need_one_color_per_edge() {
    for n in 2..=10 {
        for seed in 0..4 {
            let g = generate(&FamilySpec::RandomTree { n, seed }).unwrap();
            assert_eq!(exact_rc(&g, OracleLimits::default()).unwrap(), g.m());
        }
    }
}

#[test]
fn theta_graph_ear() {
    use rainbow_ears::ear::{bridge_frontier, find_eager_ear, EarBook};
    use rainbow_ears::layers::decompose;
    // Arms of length 2 (0-2-1) and 3 (0-3-4-1).
    let g = generate(&FamilySpec::Theta { arms: vec![2, 3] }).unwrap();
    let layers = decompose(&g, &[0]).unwrap();
    let book = EarBook::new(g.n(), &bridge_frontier(&g, &[0]).unwrap());
    let ear = find_eager_ear(&g, &layers, (0, 2), &book).unwrap();
    // The only cycle through 0-2 is the whole theta cycle of length 5.
    assert_eq!(ear.len(), 5);
    assert!(ear.is_closed());
    assert_eq!(ear.vertices[..3], [0, 2, 1]);
}
