use shifted_crystal::axioms::check_all;
use shifted_crystal::expansion::expand;
use shifted_crystal::graph::{
    build_graph, component_isomorphic, from_json, highest_weight, to_dot, to_json, StatsTable, StringKind,
};
use shifted_crystal::{SkewShape, StrictPartition};

fn straight(parts: &[u32]) -> SkewShape {
    SkewShape::from_parts(parts, &[]).unwrap()
}

#[test]
fn json_round_trip_preserves_graph_and_report() {
    for (outer, inner, n) in [(&[4, 2, 1][..], &[][..], 3), (&[3, 1], &[1], 3), (&[2], &[], 2)] {
        let g = build_graph(&SkewShape::from_parts(outer, inner).unwrap(), n).unwrap();
        let back = from_json(&to_json(&g)).unwrap();
        assert_eq!(back, g);
        let (a, b) = (check_all(&g), check_all(&back));
        assert_eq!(serde_json::to_string(&a.tallies).unwrap(), serde_json::to_string(&b.tallies).unwrap());
        assert_eq!(a.delta_histogram, b.delta_histogram);
        assert!(a.is_certified() && b.is_certified());
    }
}

#[test]
fn json_rejects_malformed_input() {
    assert!(from_json("{").is_err());
    let bad_ids = r#"{"vertices":[{"id":1,"word":null,"weight":[1,0]}],"edges":[]}"#;
    assert!(from_json(bad_ids).is_err());
    let dangling = r#"{"vertices":[{"id":0,"word":null,"weight":[1,0]}],"edges":[{"src":0,"dst":3,"index":1,"primed":false}]}"#;
    assert!(from_json(dangling).is_err());
}

#[test]
fn dot_export() {
    let g = build_graph(&straight(&[1]), 2).unwrap();
    let dot = to_dot(&g);
    assert!(dot.starts_with("digraph crystal {"));
    assert!(dot.contains("v0 -> v1 [label=\"1\", style=solid];"));
    assert!(dot.contains("v0 -> v1 [label=\"1'\", style=dashed];"));
    assert!(dot.trim_end().ends_with('}'));
}

#[test]
fn string_statistics_are_consistent() {
    for sigma in StrictPartition::up_to(6) {
        for n in 2..=3 {
            let g = build_graph(&SkewShape::straight(sigma.clone()), n).unwrap();
            let st = StatsTable::compute(&g);
            assert!(st.broken().is_empty());
            for v in 0..g.len() {
                for i in g.indices() {
                    let s = st.get(v, i).unwrap();
                    assert_eq!(s.phi as i64 - s.eps as i64, g.weight(v).pairing(i as usize));
                    match st.kind(v, i).unwrap() {
                        StringKind::Separated => {
                            assert_eq!(s.eps, s.eps_prime + s.eps_hat);
                            assert_eq!(s.phi, s.phi_prime + s.phi_hat);
                            assert!(s.eps_prime + s.phi_prime == 1);
                        }
                        StringKind::Collapsed => {
                            assert!(s.eps == s.eps_prime && s.eps == s.eps_hat);
                            assert!(s.phi == s.phi_prime && s.phi == s.phi_hat);
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn straight_shapes_are_connected_with_top_sigma() {
    for sigma in StrictPartition::up_to(6) {
        for n in sigma.len() as u8..=3 {
            if n == 0 {
                continue;
            }
            let g = build_graph(&SkewShape::straight(sigma.clone()), n).unwrap();
            let comps = g.components();
            assert_eq!(comps.len(), 1, "{sigma} n={n}");
            let top = highest_weight(&g, &comps[0]).unwrap();
            assert_eq!(StrictPartition::from_weight(&g.weight(top).0).unwrap(), sigma);
            assert!(component_isomorphic(&g, &g).is_some());
        }
    }
}

#[test]
fn multiplicity_counts_highest_weight_vertices() {
    for shape in SkewShape::all_up_to(6) {
        for n in 1..=3 {
            let g = build_graph(&shape, n).unwrap();
            let e = expand(&shape, n).unwrap();
            let sources: Vec<usize> = (0..g.len()).filter(|&v| g.is_source(v)).collect();
            assert_eq!(e.total(), sources.len(), "{shape} n={n}");
            for (sigma, &m) in &e.terms {
                let with_weight = sources
                    .iter()
                    .filter(|&&v| StrictPartition::from_weight(&g.weight(v).0).as_ref() == Ok(sigma))
                    .count();
                assert_eq!(with_weight, m);
            }
        }
    }
}

#[test]
fn non_isomorphic_components_are_told_apart() {
    let a = build_graph(&straight(&[2, 1]), 3).unwrap();
    let b = build_graph(&straight(&[3]), 3).unwrap();
    assert!(component_isomorphic(&a, &b).is_none());
    let c = build_graph(&straight(&[3]), 2).unwrap();
    assert!(component_isomorphic(&b, &c).is_none());
}
