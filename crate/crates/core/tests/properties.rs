use num_rational::Ratio;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use rainbow_core::classes::{
    brute_force_min_cover, chordal_radius_colouring, circular_arc_dominating_cycle, colouring_from_dominating_structure,
    interval_dominating_path, is_chordal, min_circle_cover, unit_interval_colouring,
};
use rainbow_core::domination::verify_domination;
use rainbow_core::gen::{random_min_degree, unit_interval_random};
use rainbow_core::graph::{bridges, metrics, Graph};
use rainbow_core::oracle::{exact_rc, rainbow_connected, ExactLimits};
use rainbow_core::rainbow::{pipeline_cds, pipeline_mindeg};
use rainbow_core::{io, ArcRep, IntervalRep, Rational};

fn connected_graph() -> impl Strategy<Value = Graph> {
    (4usize..24, 1usize..5, any::<u64>())
        .prop_filter("δ < n", |(n, d, _)| d < n)
        .prop_map(|(n, d, seed)| random_min_degree(n, d, seed).unwrap())
}

/// A 2-tree: every new vertex joins both ends of an existing edge.
fn two_tree(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = vec![(0, 1), (0, 2), (1, 2)];
    for v in 3..n {
        let (a, b) = edges[rng.gen_range(0..edges.len())];
        edges.push((a, v));
        edges.push((b, v));
    }
    Graph::from_edges(n, &edges).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn cds_pipeline_is_rainbow(g in connected_graph()) {
        let out = pipeline_cds(&g).unwrap();
        prop_assert!(out.colouring.count() as usize <= out.bound);
        prop_assert!(out.verify(&g, 30).unwrap().rainbow_connected);
    }

    #[test]
    fn mindeg_pipeline_meets_bound(g in connected_graph()) {
        let out = pipeline_mindeg(&g).unwrap();
        if !out.fallback {
            let bound = 3 * g.n() / (g.min_degree() + 1) + 3;
            prop_assert!(out.colouring.count() as usize <= bound);
        }
        prop_assert!(out.verify(&g, 30).unwrap().rainbow_connected);
    }

    #[test]
    fn exact_rc_between_lower_bounds_and_pipeline(n in 4usize..8, d in 1usize..3, seed in any::<u64>()) {
        prop_assume!(d < n);
        let g = random_min_degree(n, d, seed).unwrap();
        prop_assume!(g.m() <= 12);
        let rc = exact_rc(&g, ExactLimits::default()).unwrap();
        prop_assert!(rc >= metrics(&g).unwrap().diameter);
        prop_assert!(rc >= bridges(&g).len());
        prop_assert!(rc <= pipeline_cds(&g).unwrap().colouring.count() as usize);
    }

    #[test]
    fn text_formats_round_trip(g in connected_graph()) {
        let text = io::write_graph(&g);
        let back = io::parse_graph(&text).unwrap();
        prop_assert_eq!(&back, &g);
        let col = pipeline_cds(&g).unwrap().colouring;
        let written = io::write_colouring(&g, &col);
        prop_assert_eq!(io::write_colouring(&g, &io::parse_colouring(&g, &written).unwrap()), written);
    }

    #[test]
    fn interval_path_is_short_and_dominating(n in 3usize..30, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        // Each left end stays within the reach so far, which keeps the graph connected.
        let (mut left, mut reach) = (Ratio::from_integer(0), Ratio::from_integer(0));
        let mut ivs: Vec<(Rational, Rational)> = Vec::with_capacity(n);
        for _ in 0..n {
            left = (left + Ratio::new(rng.gen_range(0..4), 4)).min(reach);
            let right = left + Ratio::new(rng.gen_range(0..12), 4);
            reach = reach.max(right);
            ivs.push((left, right));
        }
        let (g, rep): (Graph, IntervalRep) = rainbow_core::IntervalRepresentation::with_graph(ivs).unwrap();
        prop_assert!(g.is_connected());
        let s = interval_dominating_path(&g, &rep).unwrap();
        let diam = metrics(&g).unwrap().diameter;
        if diam >= 2 {
            prop_assert!(s.length + 2 <= diam);
        }
        prop_assert!(verify_domination(&g, &s.vertices, 1).unwrap().k_step_dominating);
        // Complete graphs get a single vertex, so the diam + 1 count needs diam >= 2.
        if g.min_degree() >= 2 && diam >= 2 {
            let col = colouring_from_dominating_structure(&g, &s).unwrap();
            prop_assert!(col.colouring.count() as usize <= diam + 1);
            prop_assert!(rainbow_connected(&g, &col.colouring).unwrap().rainbow_connected);
        }
    }

    #[test]
    fn unit_interval_uses_diameter_colours(n in 3usize..30, seed in any::<u64>()) {
        let (g, rep) = unit_interval_random(n, seed).unwrap();
        let col = unit_interval_colouring(&g, &rep).unwrap();
        prop_assert_eq!(col.colouring.count() as usize, metrics(&g).unwrap().diameter);
        prop_assert!(rainbow_connected(&g, &col.colouring).unwrap().rainbow_connected);
    }

    #[test]
    fn circle_cover_is_minimum(n in 4usize..=25, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let arcs: Vec<(Rational, Rational)> = (0..n)
            .map(|_| {
                let s = rng.gen_range(0..100);
                let e = (s + rng.gen_range(5..45)) % 100;
                (Ratio::new(s, 100), Ratio::new(e, 100))
            })
            .collect();
        let (g, rep): (Graph, ArcRep) = rainbow_core::ArcRepresentation::with_graph(arcs).unwrap();
        prop_assume!(rep.covers_circle() && g.is_connected());
        let greedy = min_circle_cover(&rep).unwrap();
        prop_assert_eq!(Some(greedy.len()), brute_force_min_cover(&rep).unwrap());
        let s = circular_arc_dominating_cycle(&g, &rep).unwrap();
        prop_assert!(s.length <= metrics(&g).unwrap().diameter);
        if g.min_degree() >= 2 {
            let col = colouring_from_dominating_structure(&g, &s).unwrap();
            prop_assert!(col.colouring.count() as usize <= metrics(&g).unwrap().diameter + 4);
            prop_assert!(rainbow_connected(&g, &col.colouring).unwrap().rainbow_connected);
        }
    }

    #[test]
    fn two_trees_peel_within_three_radius(n in 3usize..40, seed in any::<u64>()) {
        let g = two_tree(n, seed);
        prop_assert!(is_chordal(&g).chordal);
        let out = chordal_radius_colouring(&g).unwrap();
        prop_assert!(out.rainbow.colouring.count() as usize <= 3 * out.radius);
        prop_assert!(rainbow_connected(&g, &out.rainbow.colouring).unwrap().rainbow_connected);
    }
}

#[test]
fn long_cycles_are_not_chordal() {
    for n in 4..12 {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        let g = Graph::from_edges(n, &edges).unwrap();
        assert!(!is_chordal(&g).chordal, "C{n}");
    }
}
