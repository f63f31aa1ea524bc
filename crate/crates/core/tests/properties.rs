use std::sync::OnceLock;

use proptest::prelude::*;
use quadlabel::book::{book_embed, check_book};
use quadlabel::build::{
    generalized_label, replay, split_to_quadrangulation, strong_label, violated_condition, GeneralizedOutcome,
};
use quadlabel::flip::{find_cycles, flip, flip_graph, flip_labeling};
use quadlabel::format::*;
use quadlabel::laman::is_laman_edges;
use quadlabel::oracle::{
    bipartite_plane_up_to, is_laman_brute, quadrangulations_up_to, sample_quadrangulations, with_all_specials,
};
use quadlabel::orient::{
    check_acyclic_mixed, sepdec_from_strong, strong_from_2orientation, strong_from_sepdec, Orientation,
};
use quadlabel::rules::{induce, is_valid, validate, AngleLabeling, Flavor};
use quadlabel::{Color, PlaneGraph};

fn quads() -> &'static [PlaneGraph] {
    static Q: OnceLock<Vec<PlaneGraph>> = OnceLock::new();
    Q.get_or_init(|| {
        let mut v: Vec<PlaneGraph> = quadrangulations_up_to(8).unwrap().into_iter().flatten().collect();
        for n in 10..=12 {
            v.extend(sample_quadrangulations(n, 20, n as u64).unwrap());
        }
        v
    })
}

fn bipartite() -> &'static [PlaneGraph] {
    static B: OnceLock<Vec<PlaneGraph>> = OnceLock::new();
    B.get_or_init(|| {
        let graphs: Vec<PlaneGraph> = bipartite_plane_up_to(7).unwrap().into_iter().flatten().collect();
        with_all_specials(&graphs)
    })
}

/// Quadrangulations with more than one 2-orientation, with all of them.
fn flippable() -> &'static [(PlaneGraph, Vec<Orientation>)] {
    static F: OnceLock<Vec<(PlaneGraph, Vec<Orientation>)>> = OnceLock::new();
    F.get_or_init(|| {
        quads()
            .iter()
            .filter(|g| g.m() <= 14)
            .map(|g| (g.clone(), flip_graph(g).unwrap().nodes))
            .filter(|(_, nodes)| nodes.len() > 1)
            .collect()
    })
}

fn pick<T>(items: &[T], i: prop::sample::Index) -> &T {
    &items[i.index(items.len())]
}

fn random_labeling(g: &PlaneGraph, bits: &[bool]) -> AngleLabeling {
    AngleLabeling::new((0..g.num_darts()).map(|h| u8::from(bits[h % bits.len()] ^ (h % 3 == 0))).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn graph_and_labeling_files_round_trip(i: prop::sample::Index, bits in prop::collection::vec(any::<bool>(), 1..64)) {
        let g = pick(quads(), i);
        let back = parse_planegraph(&write_planegraph(g)).unwrap();
        prop_assert!(back.same_embedding(g));
        let l = random_labeling(g, &bits);
        prop_assert_eq!(parse_labeling(g, &write_labeling(g, &l)).unwrap(), l);
    }

    #[test]
    fn parsers_reject_garbage_without_panicking(text in "\\PC{0,200}") {
        let _ = parse_planegraph(&text);
        let _ = parse_henneberg(&text);
        let g = &quads()[0];
        let _ = parse_labeling(g, &text);
        let _ = parse_orientation(g, &text);
        let _ = parse_book(g, &text);
        let _ = parse_trace(g, &text);
    }

    #[test]
    fn validate_agrees_with_is_valid(i: prop::sample::Index, bits in prop::collection::vec(any::<bool>(), 1..64)) {
        let g = pick(quads(), i);
        let l = random_labeling(g, &bits);
        for flavor in [Flavor::Weak, Flavor::Strong, Flavor::Generalized] {
            let report = validate(g, &l, flavor).unwrap();
            prop_assert_eq!(report.is_valid(), is_valid(g, &l, flavor));
            if report.is_valid() {
                prop_assert!(induce(g, &l, flavor).is_ok());
            }
        }
    }

    #[test]
    fn strong_labelings_convert_and_embed(i: prop::sample::Index) {
        let g = pick(quads(), i);
        let l = strong_label(g).unwrap();
        prop_assert!(is_valid(g, &l, Flavor::Strong));
        let x = Orientation::from_structure(&induce(g, &l, Flavor::Strong).unwrap());
        let two_out = x.out_degrees(g).iter().enumerate().all(|(v, &d)| d == if g.is_special(v) { 0 } else { 2 });
        prop_assert!(two_out);
        prop_assert_eq!(&strong_from_2orientation(g, &x).unwrap(), &l);
        let sd = sepdec_from_strong(g, &l).unwrap();
        prop_assert_eq!(&strong_from_sepdec(g, &sd).unwrap(), &l);
        let b = book_embed(g, &l).unwrap();
        prop_assert!(check_book(g, &b).is_valid());
        prop_assert_eq!(parse_book(g, &write_book(g, &b)).unwrap(), b);
    }

    #[test]
    fn flipping_a_cycle_twice_is_the_identity(i: prop::sample::Index, k: prop::sample::Index, j: prop::sample::Index) {
        let (g, nodes) = pick(flippable(), i);
        let x = pick(nodes, k).clone();
        let l = strong_from_2orientation(g, &x).unwrap();
        let cycles = find_cycles(g, &x).unwrap();
        prop_assume!(!cycles.is_empty());
        let c = pick(&cycles, j);
        let y = flip(&x, c).unwrap();
        prop_assert_ne!(&y, &x);
        prop_assert_eq!(&flip(&y, &c.reversed()).unwrap(), &x);
        let ly = flip_labeling(g, &l, c);
        prop_assert!(is_valid(g, &ly, Flavor::Strong));
        prop_assert_eq!(ly, strong_from_2orientation(g, &y).unwrap());
    }

    #[test]
    fn generalized_outcome_matches_the_conditions(i: prop::sample::Index) {
        let g = pick(bipartite(), i);
        let outcome = generalized_label(g).unwrap();
        match (&outcome, violated_condition(g).unwrap()) {
            (GeneralizedOutcome::Labeling(l), None) => {
                prop_assert!(is_valid(g, l, Flavor::Generalized));
                prop_assert!(check_acyclic_mixed(g, &induce(g, l, Flavor::Generalized).unwrap()));
            }
            (GeneralizedOutcome::NoLabeling(c), Some(d)) => prop_assert_eq!(*c, d),
            (o, c) => prop_assert!(false, "outcome {:?} with condition {:?}", o, c),
        }
    }

    #[test]
    fn split_runs_replay_from_their_trace(i: prop::sample::Index) {
        let g = pick(bipartite(), i);
        let (s0, s1) = g.specials().unwrap();
        prop_assume!(g.color(s0) == Some(Color::Black) && g.color(s1) == Some(Color::Black));
        let GeneralizedOutcome::Labeling(l) = generalized_label(g).unwrap() else { return Ok(()) };
        let run = split_to_quadrangulation(g, &l).unwrap();
        prop_assert!(is_valid(&run.quadrangulation, &run.labeling, Flavor::Strong));
        let (q, lq) = replay(g, &l, &run.trace).unwrap();
        prop_assert!(q.same_embedding(&run.quadrangulation));
        prop_assert_eq!(&lq, &run.labeling);
        let text = write_trace(g, &run.trace);
        prop_assert_eq!(parse_trace(g, &text).unwrap(), run.trace);
    }

    #[test]
    fn pebble_game_matches_brute_force(n in 2usize..7, mask in any::<u32>()) {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        let edges: Vec<(usize, usize)> = pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &p)| p).collect();
        prop_assert_eq!(is_laman_edges(n, &edges), is_laman_brute(n, &edges));
    }
}
