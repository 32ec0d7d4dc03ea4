mod common;

use common::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tverberg_lab::solver::find_tverberg_with;
use tverberg_lab::theorems::{random_config, random_constraint_rows};
use tverberg_lab::{
    find_tverberg, hull_intersection_witness, lift_configuration, project_family, replicate_for_jwise,
    solve_equal_barycentric, solve_jwise, verify_witness, Configuration, ConstraintSet, DimBound, Disjointness, Face,
    Rational, SearchOptions, SearchStatus, Subcomplex,
};

fn line(xs: &[i64]) -> Configuration {
    Configuration::from_integers(1, &xs.iter().map(|&x| vec![x]).collect::<Vec<_>>()).unwrap()
}

fn rand_config(n: usize, d: usize, range: i64, seed: u64) -> Configuration {
    random_config(n, d, [-range, range], seed).unwrap().0
}

#[test]
fn radon_on_a_line() {
    let out = find_tverberg(&line(&[0, 1, 2, 3]), &ConstraintSet::new(2)).unwrap();
    assert_eq!(out.status, SearchStatus::WitnessFound);
    let w = out.witness.unwrap();
    assert!(w.point[0] >= Rational::one() && w.point[0] <= Rational::from_integer(2));
    assert!(combines_exactly(&line(&[0, 1, 2, 3]), &w));
}

#[test]
fn radon_in_the_plane_matches_brute_force() {
    let config = Configuration::from_integers(2, &[vec![0, 0], vec![2, 0], vec![0, 2], vec![2, 2], vec![1, 1]]).unwrap();
    let out = find_tverberg(&config, &ConstraintSet::new(2)).unwrap();
    assert_eq!(out.status, SearchStatus::WitnessFound);
    assert!(direct_partition_exists(&config, 2, &[]));
    let w = out.witness.unwrap();
    assert!(verify_witness(&config, &w, &ConstraintSet::new(2)).passed());
    assert!(hulls_meet(&config, &faces_of(&w), &[]));
}

/// Status of `find_tverberg` agrees with an independent direct search over
/// unconstrained partitions, and over dimension-bounded and subcomplex
/// families.
#[test]
fn statuses_agree_with_direct_search() {
    for seed in 0..40u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = rng.gen_range(1..=2);
        let r = rng.gen_range(2..=3);
        let n = rng.gen_range(r..=(r - 1) * (d + 1) + 1).min(7);
        let config = rand_config(n, d, 6, seed);

        let got = find_tverberg(&config, &ConstraintSet::new(r)).unwrap();
        assert_ne!(got.status, SearchStatus::AbortedCap);
        assert_eq!(got.status == SearchStatus::WitnessFound, direct_partition_exists(&config, r, &[]), "seed {seed}");

        let k = rng.gen_range(0..d);
        let bounded = ConstraintSet::new(r).with_max_dims(DimBound::Uniform(k));
        let want = disjoint_families(n, r).iter().filter(|f| f.iter().all(|x| x.len() <= k + 1)).any(|f| hulls_meet(&config, f, &[]));
        let got = find_tverberg(&config, &bounded).unwrap();
        assert_eq!(got.status == SearchStatus::WitnessFound, want, "seed {seed} k {k}");

        let sub = Subcomplex::at_most(1, 0..3);
        let restricted = ConstraintSet::new(r).with_subcomplex(sub.clone());
        let want = disjoint_families(n, r)
            .iter()
            .filter(|f| f.iter().all(|x| sub.contains_face(&Face::new(x.iter().copied()).unwrap(), n).unwrap()))
            .any(|f| hulls_meet(&config, f, &[]));
        let got = find_tverberg(&config, &restricted).unwrap();
        assert_eq!(got.status == SearchStatus::WitnessFound, want, "seed {seed} subcomplex");
        if let Some(w) = got.witness {
            assert!(verify_witness(&config, &w, &restricted).passed());
        }
    }
}

#[test]
fn rainbow_search_agrees_with_direct_search() {
    for seed in 0..20u64 {
        let config = rand_config(6, 2, 8, 100 + seed).with_color_classes(vec![vec![0, 1], vec![2, 3], vec![4, 5]]).unwrap();
        let cs = ConstraintSet::new(2).with_rainbow();
        let coloring = config.coloring().unwrap().clone();
        let want = disjoint_families(6, 2)
            .iter()
            .filter(|f| f.iter().all(|x| coloring.is_rainbow(&Face::new(x.iter().copied()).unwrap())))
            .any(|f| hulls_meet(&config, f, &[]));
        let out = find_tverberg(&config, &cs).unwrap();
        assert_eq!(out.status == SearchStatus::WitnessFound, want);
        if let Some(w) = out.witness {
            assert!(verify_witness(&config, &w, &cs).passed());
        }
    }
}

#[test]
fn lifting_examples() {
    let config = line(&[0, 1, 2, 3]);
    assert_eq!(lift_configuration(&config, &[]).unwrap(), config);
    let ind: Vec<Rational> = [1, 1, 0, 0].into_iter().map(Rational::from_integer).collect();
    let lifted = lift_configuration(&config, &[ind]).unwrap();
    let expected = Configuration::from_integers(2, &[vec![0, 1], vec![1, 1], vec![2, 0], vec![3, 0]]).unwrap();
    assert_eq!(lifted, expected);
    assert!(lift_configuration(&config, &[vec![Rational::one()]]).is_err());

    // A constant row adds no constraint.
    let config = rand_config(7, 2, 50, 9);
    let constant = vec![Rational::from_integer(5); 7];
    let plain = find_tverberg(&config, &ConstraintSet::new(3)).unwrap();
    let lifted = lift_configuration(&config, &[constant.clone()]).unwrap();
    let w = plain.witness.unwrap();
    let lifted_faces = w.faces.clone();
    assert!(hull_intersection_witness(&lifted, &lifted_faces).unwrap().is_some());
    let with_row = find_tverberg(&config, &ConstraintSet::new(3).with_affine_constraints(vec![constant])).unwrap();
    assert_eq!(with_row.status, SearchStatus::WitnessFound);
}

#[test]
fn lift_and_solve_agrees_with_direct_constrained_search() {
    let mut seen = [0usize; 2];
    for seed in 0..50u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = rng.gen_range(1..=2);
        let n = rng.gen_range(3..=d + 4);
        let config = rand_config(n, d, 10, seed);
        let rows = random_constraint_rows(1, n, [-3, 3], seed);
        let out = find_tverberg(&config, &ConstraintSet::new(2).with_affine_constraints(rows.clone())).unwrap();
        let found = out.status == SearchStatus::WitnessFound;
        assert_eq!(found, direct_partition_exists(&config, 2, &rows), "seed {seed}");
        seen[usize::from(found)] += 1;
        if let Some(w) = out.witness {
            let vals: Vec<Rational> = (0..2).map(|i| w.evaluate_affine(i, &rows[0])).collect();
            assert_eq!(vals[0], vals[1]);
        }
    }
    assert!(seen[0] > 0 && seen[1] > 0, "both outcomes should occur: {seen:?}");
}

#[test]
fn equal_barycentric_examples() {
    let config = line(&[0, 1, 2, 3]).with_color_classes(vec![vec![0, 1], vec![2, 3]]).unwrap();
    let out = solve_equal_barycentric(&config).unwrap();
    let w = out.witness.unwrap();
    assert_eq!(w.faces, vec![Face::new([0, 3]).unwrap(), Face::new([1, 2]).unwrap()]);
    assert_eq!(w.point, vec![Rational::new(3, 2)]);

    let same = Configuration::from_integers(2, &vec![vec![4, 4]; 6])
        .unwrap()
        .with_color_classes(vec![vec![0, 1], vec![2, 3], vec![4, 5]])
        .unwrap();
    let out = solve_equal_barycentric(&same).unwrap();
    assert!(verify_witness(&same, out.witness.as_ref().unwrap(), &ConstraintSet::new(2).with_equal_barycentric()).passed());

    let wrong_shape = line(&[0, 1, 2]).with_color_classes(vec![vec![0, 1], vec![2]]).unwrap();
    assert!(solve_equal_barycentric(&wrong_shape).is_err());
}

#[test]
fn replication_and_projection() {
    let config = line(&[0, 1, 2]);
    let (same, map) = replicate_for_jwise(&config, 2).unwrap();
    assert_eq!(same, config);
    assert_eq!(map, vec![0, 1, 2]);
    let (rep, map) = replicate_for_jwise(&config, 3).unwrap();
    assert_eq!(rep.len(), 6);
    assert_eq!(map, vec![0, 1, 2, 0, 1, 2]);
    let fam = vec![Face::new([0]).unwrap(), Face::new([3]).unwrap()];
    assert_eq!(project_family(&fam, &map), vec![Face::new([0]).unwrap(), Face::new([0]).unwrap()]);
    assert_eq!(project_family(&fam, &[0, 1, 2, 3]), fam);

    // Replicated faces have the same hulls as their projections.
    let config = rand_config(5, 2, 20, 3);
    let (rep, map) = replicate_for_jwise(&config, 3).unwrap();
    let f = vec![Face::new([0, 6, 2]).unwrap(), Face::new([1, 8]).unwrap()];
    assert_eq!(
        hull_intersection_witness(&rep, &f).unwrap().is_some(),
        hull_intersection_witness(&config, &project_family(&f, &map)).unwrap().is_some()
    );
}

#[test]
fn jwise_pairwise_case_matches_direct_search() {
    let config = rand_config(9, 2, 1000, 17);
    let out = solve_jwise(&config, 3, 2, None).unwrap();
    assert!(direct_partition_exists(&config, 3, &[]));
    let w = out.witness.unwrap();
    assert!(max_multiplicity(&faces_of(&w), 9) <= 1);
    assert!(verify_witness(&config, &w, &ConstraintSet::new(3)).passed());
}

#[test]
fn jwise_with_j_equal_r_agrees_on_status() {
    for seed in 0..20u64 {
        // r = j = 2 is plain pairwise search.
        let config = rand_config(4, 2, 10, seed);
        let a = solve_jwise(&config, 2, 2, None).unwrap().status;
        let b = find_tverberg(&config, &ConstraintSet::new(2)).unwrap().status;
        assert_eq!(a, b, "seed {seed}");

        // r = j = 3: every vertex in at most two faces, against a direct
        // enumeration of such families.
        let config = rand_config(4, 2, 10, 1000 + seed);
        let got = solve_jwise(&config, 3, 3, None).unwrap();
        let want = multiplicity_families(4, 3, 2, 4).iter().any(|f| hulls_meet(&config, f, &[]));
        assert_eq!(got.status == SearchStatus::WitnessFound, want, "seed {seed}");
        if let Some(w) = got.witness {
            let cs = ConstraintSet::new(3).with_disjointness(Disjointness::JWise(3));
            assert!(verify_witness(&config, &w, &cs).passed());
        }
    }
}

#[test]
fn jwise_integrality_example() {
    for seed in 0..5u64 {
        let config = rand_config(6, 3, 1000, seed);
        let out = solve_jwise(&config, 3, 3, Some(2)).unwrap();
        let w = out.witness.expect("three 3-wise disjoint faces of dimension at most 2");
        assert!(w.face_dims().iter().all(|&k| k <= 2));
        assert!(max_multiplicity(&faces_of(&w), 6) <= 2);
        let cs = ConstraintSet::new(3).with_disjointness(Disjointness::JWise(3)).with_max_dims(DimBound::Uniform(2));
        assert!(verify_witness(&config, &w, &cs).passed());
        assert!(combines_exactly(&config, &w));
    }
}

#[test]
fn outcomes_do_not_depend_on_worker_count() {
    for seed in 0..5u64 {
        let config = rand_config(10, 2, 1000, seed);
        let cs = ConstraintSet::new(4);
        let one = find_tverberg_with(&config, &cs, &SearchOptions { jobs: Some(1), ..Default::default() }).unwrap();
        let four = find_tverberg_with(&config, &cs, &SearchOptions { jobs: Some(4), ..Default::default() }).unwrap();
        assert_eq!(one.to_json(), four.to_json());
        assert_eq!(one.to_json(), find_tverberg(&config, &cs).unwrap().to_json());
    }
}

#[test]
fn enlarged_witness_faces_stay_feasible() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut checked = 0;
    for seed in 0..200u64 {
        if checked == 100 {
            break;
        }
        let config = rand_config(8, 2, 30, seed);
        let Some(w) = find_tverberg(&config, &ConstraintSet::new(2).with_max_dims(DimBound::Uniform(1))).unwrap().witness
        else {
            continue;
        };
        let used: Vec<usize> = w.faces.iter().flat_map(|f| f.vertices().to_vec()).collect();
        let free: Vec<usize> = (0..8).filter(|v| !used.contains(v)).collect();
        if free.is_empty() {
            continue;
        }
        let mut faces = w.faces.clone();
        let i = rng.gen_range(0..faces.len());
        let v = free[rng.gen_range(0..free.len())];
        faces[i] = Face::new(faces[i].vertices().iter().copied().chain([v])).unwrap();
        assert!(hull_intersection_witness(&config, &faces).unwrap().is_some());
        checked += 1;
    }
    assert_eq!(checked, 100);
}

#[test]
fn cap_reports_abort() {
    let config = rand_config(9, 2, 1000, 1);
    let out = find_tverberg_with(&config, &ConstraintSet::new(4), &SearchOptions { cap: 3, jobs: None }).unwrap();
    assert_eq!(out.status, SearchStatus::AbortedCap);
    assert!(out.witness.is_none());
}

#[test]
fn inconsistent_constraints_are_input_errors() {
    let config = line(&[0, 1, 2]);
    assert!(find_tverberg(&config, &ConstraintSet::new(2).with_rainbow()).is_err());
    assert!(find_tverberg(&config, &ConstraintSet::new(2).with_disjointness(Disjointness::JWise(3))).is_err());
    assert!(find_tverberg(&config, &ConstraintSet::new(1)).is_err());
}
