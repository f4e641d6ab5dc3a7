//! Property checks shared by the proptest suites and the acceptance runner.
//! Each one panics on a violated invariant.

use num_rational::BigRational;
use num_traits::Zero;
use raag_core::conjugations::{partial_conjugations, support_graphs};
use raag_core::fibring::{
    classify_set, fibration_witness, psa_fibres, pso_fibres, sigma1_contains, support_extends,
    validate_character, SetKind, Witness,
};
use raag_core::homology::{kunneth, l2_betti_raag, FlagComplex};
use raag_core::linalg::{rank, smith_normal_form, SparseMatrix};
use raag_core::theta::{distinguished_choice_counts, psa_theta, pso_theta};
use raag_core::words::{normal_form, words_equal, Letter};
use raag_core::{
    find_isomorphism, Character, CombineMode, DominationStructure, Error, FibreAnswer, GroupTarget,
    HomologyMode, Limits, RaagWord, SimplicialGraph,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;

pub fn domination(g: &SimplicialGraph) {
    let ds = DominationStructure::new(g);
    let n = g.vertex_count();
    for u in 0..n {
        assert!(ds.leq(u, u));
        for v in 0..n {
            for w in 0..n {
                if ds.leq(u, v) && ds.leq(v, w) {
                    assert!(ds.leq(u, w), "transitivity fails at {u} {v} {w}");
                }
            }
            if ds.leq(u, v) {
                assert!(ds.class_of(u) <= ds.class_of(v));
            }
        }
    }
    let loops = ds.lambda_loops();
    for (i, c) in ds.classes().iter().enumerate() {
        assert_eq!(loops.contains(&i), c.len() >= 2, "loop law at class {i}");
    }
    let p = ds.properties();
    assert_eq!(
        p.property_a,
        p.p1_classes.is_empty() && p.p2_witnesses.is_empty()
    );
}

pub fn complex(g: &SimplicialGraph) {
    let fc = FlagComplex::new(g, &Limits::default()).unwrap();
    let b = fc.reduced_homology(HomologyMode::Integral);
    let alt: i64 = b
        .ranks
        .iter()
        .enumerate()
        .map(|(d, &r)| if d % 2 == 0 { r as i64 } else { -(r as i64) })
        .sum();
    // The reduced Euler characteristic is χ − 1.
    if !g.is_empty() {
        assert_eq!(alt, fc.euler_characteristic() - 1);
    }
    for d in 0..fc.counts().len() {
        let m = fc.boundary(d);
        assert_eq!(rank(&m), smith_normal_form(&m).rank, "rank in degree {d}");
        if d >= 1 {
            assert!(
                fc.boundary(d).mul(&fc.boundary(d - 1)).is_zero(),
                "∂∂ in degree {d}"
            );
        }
    }
}

pub fn snf_rank(seed: u64, r: usize, c: usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let dense: Vec<Vec<i64>> = (0..r)
        .map(|_| {
            (0..c)
                .map(|_| {
                    if rng.gen_bool(0.4) {
                        rng.gen_range(-9..=9)
                    } else {
                        0
                    }
                })
                .collect()
        })
        .collect();
    let m = SparseMatrix::from_dense(&dense);
    let snf = smith_normal_form(&m);
    assert_eq!(rank(&m), snf.rank);
    for w in snf.factors.windows(2) {
        assert!((&w[1] % &w[0]).is_zero(), "divisibility chain");
    }
}

fn trim(mut v: Vec<BigRational>) -> Vec<BigRational> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

pub fn join_kunneth(a: &SimplicialGraph, b: &SimplicialGraph) {
    let l = Limits::default();
    let j = a.combine(b, CombineMode::Join);
    let direct = trim(l2_betti_raag(&j, &l).unwrap());
    let product = trim(kunneth(
        &l2_betti_raag(a, &l).unwrap(),
        &l2_betti_raag(b, &l).unwrap(),
    ));
    assert_eq!(direct, product);
}

/// Rewrites `w` by a few relator moves, staying within `max_len` letters.
fn perturb(g: &SimplicialGraph, w: &RaagWord, rng: &mut ChaCha8Rng, max_len: usize) -> RaagWord {
    let mut v = w.0.clone();
    for _ in 0..4 {
        match rng.gen_range(0..3) {
            0 if v.len() + 2 <= max_len => {
                let x = Letter::new(rng.gen_range(0..g.vertex_count()), 1);
                let i = rng.gen_range(0..=v.len());
                v.splice(i..i, [x, x.inverse()]);
            }
            1 if v.len() >= 2 => {
                let i = rng.gen_range(0..v.len() - 1);
                if v[i].vertex == v[i + 1].vertex || g.adjacent(v[i].vertex, v[i + 1].vertex) {
                    v.swap(i, i + 1);
                }
            }
            _ => {}
        }
    }
    RaagWord(v)
}

/// Normal forms against the relator-closure oracle, on one related and one
/// fresh pair of words.
pub fn words(g: &SimplicialGraph, seed: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = g.vertex_count();
    let len = rng.gen_range(0..=6);
    let w1 = random_word(&mut rng, n, len);
    let related = perturb(g, &w1, &mut rng, 8);
    let len = rng.gen_range(0..=6);
    let fresh = random_word(&mut rng, n, len);
    assert!(word_equality_oracle(g, &w1, &related).unwrap().value);
    for w2 in [related, fresh] {
        let o = word_equality_oracle(g, &w1, &w2).unwrap();
        assert_eq!(words_equal(g, &w1, &w2), o.value, "{w1:?} vs {w2:?}");
        let nf = normal_form(g, &w2);
        assert!(word_equality_oracle(g, &nf, &w2).unwrap().value);
        assert!(nf.len() <= w2.len());
    }
}

/// p-set and δ-p-set classification against the bipartition oracle.
/// Returns false when the graph is outside the oracle's range.
pub fn sets(g: &SimplicialGraph, seed: u64) -> bool {
    let m = partial_conjugations(g).len();
    if m == 0 || m > 12 {
        return false;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = rng.gen_range(1..=3);
    let mut s: Vec<usize> = (0..k).map(|_| rng.gen_range(0..m)).collect();
    s.sort();
    s.dedup();
    let l = Limits::default();
    for (kind, ok) in [
        (SetKind::PSet, OracleKind::PSet),
        (SetKind::DeltaPSet, OracleKind::DeltaPSet),
    ] {
        assert_eq!(
            classify_set(g, &s, kind),
            set_oracle(g, &s, ok),
            "{s:?} {kind:?}"
        );
        assert_eq!(
            support_extends(g, &s, kind, &l).unwrap(),
            pset_oracle(g, &s, ok).unwrap().value,
            "{s:?} {kind:?}"
        );
    }
    true
}

/// Σ¹ membership of a random character agrees with that of its negative.
/// Returns false when no character could be tested.
pub fn sigma1_symmetry(g: &SimplicialGraph, seed: u64, pso: bool) -> bool {
    let l = Limits::default();
    let pcs = partial_conjugations(g);
    if pcs.is_empty() || pcs.len() > l.conjugations {
        return false;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut values: Vec<i64> = (0..pcs.len()).map(|_| rng.gen_range(-2..=2)).collect();
    let target = if pso {
        // Shift each vertex's last value so the vertex sums vanish.
        for v in 0..g.vertex_count() {
            let idx: Vec<usize> = (0..pcs.len()).filter(|&i| pcs[i].actor == v).collect();
            if let Some((&last, rest)) = idx.split_last() {
                values[last] = -rest.iter().map(|&i| values[i]).sum::<i64>();
            }
        }
        GroupTarget::Pso
    } else {
        GroupTarget::Psa
    };
    let chi = Character { target, values };
    match sigma1_contains(g, &chi, &l) {
        Ok(inside) => {
            assert_eq!(inside, sigma1_contains(g, &chi.negated(), &l).unwrap());
            true
        }
        Err(e) => {
            assert!(matches!(e, Error::InvalidCharacter(_)));
            false
        }
    }
}

pub fn witness(g: &SimplicialGraph, w: &Witness) {
    let l = Limits::default();
    match w {
        Witness::Character(chi) => {
            assert!(validate_character(g, chi).unwrap());
            assert!(sigma1_contains(g, chi, &l).unwrap());
            assert!(sigma1_contains(g, &chi.negated(), &l).unwrap());
        }
        Witness::ThetaAllOnes => {
            let t = pso_theta(g, None);
            assert!(t.applicable && !t.theta.is_empty() && t.theta.is_connected());
        }
        Witness::AllOnes => assert!(g.is_connected()),
        Witness::QElementary { u, v } => {
            let p = DominationStructure::new(g).properties();
            assert!(p.p2_witnesses.contains(&(*u, *v)));
        }
    }
}

/// Every Yes answer for PSA and PSO carries a witness that validates.
/// Returns the number of Yes answers checked.
pub fn fibring_witnesses(g: &SimplicialGraph) -> usize {
    let l = Limits::default();
    if partial_conjugations(g).len() > l.conjugations {
        return 0;
    }
    let mut checked = 0;
    for (target, v) in [
        (GroupTarget::Psa, psa_fibres(g, &l).unwrap()),
        (GroupTarget::Pso, pso_fibres(g, &l).unwrap()),
    ] {
        if v.answer == FibreAnswer::Yes {
            witness(g, v.witness.as_ref().expect("Yes carries a witness"));
            witness(g, &fibration_witness(g, target, &l).unwrap());
            checked += 1;
        }
    }
    checked
}

/// Every combination of distinguished components, up to `cap` of them.
fn choices(counts: &[usize], cap: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for &c in counts {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..c).map(move |k| {
                    let mut q = p.clone();
                    q.push(k);
                    q
                })
            })
            .take(cap)
            .collect();
    }
    out
}

/// Θ does not depend on the distinguished components, up to isomorphism.
/// Returns false when the support graphs are not all forests.
pub fn choice_invariance(g: &SimplicialGraph) -> bool {
    if !support_graphs(g).1.all_forests {
        return false;
    }
    let base = pso_theta(g, None).theta;
    let l = Limits {
        automorphism_vertices: 40,
        ..Limits::default()
    };
    for c in choices(&distinguished_choice_counts(g), 64) {
        let t = pso_theta(g, Some(&c)).theta;
        assert!(
            find_isomorphism(&base, &t, &l).unwrap().is_some(),
            "choice {c:?}"
        );
    }
    true
}

pub fn psa_theta_core(g: &SimplicialGraph) {
    let t = psa_theta(g);
    let connected = (0..g.vertex_count()).all(|v| g.star_complement_components(v).len() <= 1);
    if t.applicable && connected {
        let core = g.induced(&g.vertices().difference(&g.centre_vertices()));
        let l = Limits {
            automorphism_vertices: 40,
            ..Limits::default()
        };
        assert!(find_isomorphism(&t.theta, &core, &l).unwrap().is_some());
    }
}
