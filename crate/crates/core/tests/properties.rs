mod common;

use common::{checks, random_graph};
use proptest::prelude::*;
use raag_core::{catalog, SimplicialGraph};

fn graphs(max_n: usize) -> impl Strategy<Value = SimplicialGraph> {
    (any::<u64>(), 1..=max_n, 0.15f64..0.85).prop_map(|(s, n, p)| random_graph(s, n, p))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn domination_laws(g in graphs(10)) {
        checks::domination(&g);
    }

    #[test]
    fn complex_identities(g in graphs(10)) {
        checks::complex(&g);
    }

    #[test]
    fn snf_rank_is_rational_rank(seed in any::<u64>(), r in 1usize..7, c in 1usize..7) {
        checks::snf_rank(seed, r, c);
    }

    #[test]
    fn joins_multiply_l2_betti(a in graphs(5), b in graphs(5)) {
        checks::join_kunneth(&a, &b);
    }

    #[test]
    fn sigma1_symmetric(g in graphs(7), seed in any::<u64>(), pso in any::<bool>()) {
        checks::sigma1_symmetry(&g, seed, pso);
    }

    #[test]
    fn fibring_witnesses_validate(g in graphs(7)) {
        checks::fibring_witnesses(&g);
    }

    #[test]
    fn theta_choice_invariance(g in graphs(7)) {
        checks::choice_invariance(&g);
    }

    #[test]
    fn psa_theta_is_gamma_without_centre(g in graphs(8)) {
        checks::psa_theta_core(&g);
    }
}

#[test]
fn catalog_properties() {
    let mut yes = 0;
    for g in catalog::entries().into_iter().map(|e| e.graph) {
        checks::domination(&g);
        checks::complex(&g);
        yes += checks::fibring_witnesses(&g);
        checks::choice_invariance(&g);
        checks::psa_theta_core(&g);
    }
    assert!(yes > 0);
}
