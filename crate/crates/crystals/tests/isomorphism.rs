//! `Psi` and `Xi` are mutually inverse crystal isomorphisms, and `Phi`
//! identifies `RC(lambda)` with `T(lambda)`.

mod common;

use common::*;

#[test]
fn psi_and_xi_on_balls_of_radius_five() {
    let mut all = Vec::new();
    for name in [
        "A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4",
    ] {
        all.extend(isomorphism_problems(name, 5).into_iter().take(3));
    }
    assert!(all.is_empty(), "{}", all.join("\n"));
}

#[test]
fn cardinalities_match_the_weyl_dimension() {
    for (t, lambda) in cardinality_pairs() {
        let (tab, rc, dim) = cardinalities(t, &lambda);
        assert_eq!((tab as u128, rc as u128), (dim, dim), "{t} {lambda:?}");
    }
}

#[test]
fn relabelled_rc_graph_is_the_tableau_graph() {
    for (t, lambda) in cardinality_pairs() {
        if t.starts_with('G') {
            continue;
        }
        assert_eq!(graph_mismatch(t, &lambda), None);
    }
}
