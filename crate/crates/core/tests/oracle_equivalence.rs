//! Fast algorithms against brute force on small trees, and the fringe-sum
//! identities on larger ones.

use fringestat::fringe::{fringe_sum, toll_locality_check, Toll};
use fringestat::gen::generate;
use fringestat::oracle::{
    brute_clique_cover, brute_max_independent, brute_min_dominating, verification_corpus, verify,
    Algorithms, VerifyConfig,
};
use fringestat::params::{domination, full_report, independence, k_domination, layered_stripping};
use fringestat::rng::Seed;
use fringestat::tree::{shapes, Model};

#[test]
fn verify_default_corpus_passes() {
    let report = verify(&VerifyConfig::default(), Algorithms::default()).unwrap();
    assert!(report.passed(), "\n{}", report.table());
    // 500 random trees per model plus the fixed shapes
    let first = &report.rows[0];
    assert!(first.trees > 1000, "{}", first.trees);
}

#[test]
fn corpus_contains_both_models_and_shapes() {
    let corpus = verification_corpus(&VerifyConfig::default()).unwrap();
    assert_eq!(
        corpus.iter().filter(|t| t.model() == Model::Bst).count(),
        500
    );
    assert_eq!(
        corpus.iter().filter(|t| t.model() == Model::Rrt).count(),
        500
    );
    assert!(corpus.iter().all(|t| t.n() <= 14));
}

#[test]
fn clique_cover_equals_independence_number() {
    for r in 0..200u64 {
        let model = if r % 2 == 0 { Model::Bst } else { Model::Rrt };
        let n = 1 + (r as usize % 10);
        let t = generate(model, n, Seed::new(123, r)).unwrap().tree;
        let cc = brute_clique_cover(&t).unwrap();
        assert_eq!(cc, brute_max_independent(&t).unwrap());
        assert_eq!(cc, full_report(&t, &[]).unwrap().clique_cover);
    }
}

#[test]
fn k_domination_on_rrt_beyond_three() {
    // recursive trees allow any k
    for r in 0..100u64 {
        let t = generate(Model::Rrt, 12, Seed::new(5, r)).unwrap().tree;
        for k in [4, 5] {
            assert_eq!(
                k_domination(&t, k).unwrap(),
                brute_min_dominating(&t, k).unwrap()
            );
        }
    }
}

#[test]
fn layered_stripping_matches_flag_rule() {
    for r in 0..300u64 {
        let model = if r % 2 == 0 { Model::Bst } else { Model::Rrt };
        let n = 1 + (r as usize * 7) % 200;
        let t = generate(model, n, Seed::new(17, r)).unwrap().tree;
        assert_eq!(layered_stripping(&t).in_set, independence(&t).in_set);
    }
    for t in shapes::adversarial(50) {
        assert_eq!(layered_stripping(&t).in_set, independence(&t).in_set);
    }
}

#[test]
fn fringe_sums_on_large_trees() {
    for r in 0..100u64 {
        let model = if r % 2 == 0 { Model::Bst } else { Model::Rrt };
        let t = generate(model, 10_000, Seed::new(2718, r)).unwrap().tree;
        assert_eq!(
            fringe_sum(&t, Toll::Independence).value,
            independence(&t).value
        );
        assert_eq!(fringe_sum(&t, Toll::Domination).value, domination(&t).value);
    }
}

#[test]
fn toll_locality_on_random_trees() {
    for r in 0..100u64 {
        let rrt = generate(Model::Rrt, 64, Seed::new(31, r)).unwrap().tree;
        assert!(toll_locality_check(&rrt, Toll::Independence));
        let bst = generate(Model::Bst, 64, Seed::new(32, r)).unwrap().tree;
        assert!(toll_locality_check(&bst, Toll::Domination));
    }
}
