mod common;

use tverberg_lab::enumerate::count_bounded_families;
use tverberg_lab::theorems::*;
use tverberg_lab::{verify_witness, ConstraintSet, DimBound};

fn params(r: usize, d: usize) -> BoundSet {
    BoundSet { r: Some(r), d: Some(d), ..Default::default() }
}

#[test]
fn original_condition_implies_sharpened() {
    let mut hits = 0;
    for r in 2..=5 {
        for j in 2..=r {
            for d in 1..=6 {
                for k in 0..d {
                    for n in 0..=40 {
                        if gvkf_condition_original(r, j, d, k, n).unwrap().is_some() {
                            hits += 1;
                            assert!(gvkf_condition_sharpened(r, j, d, k, n), "r={r} j={j} d={d} k={k} N={n}");
                        }
                    }
                }
            }
        }
    }
    assert!(hits > 100);
}

#[test]
fn integrality_example() {
    assert!((0..=40).all(|n| gvkf_condition_original(3, 3, 3, 2, n).unwrap().is_none()));
    assert!(gvkf_condition_sharpened(3, 3, 3, 2, 5));
}

#[test]
fn every_catalog_entry_runs() {
    let cases = [
        TheoremInstance::new(TheoremId::TopologicalTverbergAffine, params(3, 2)),
        TheoremInstance::new(TheoremId::KeyLemma1Affine, BoundSet { c: Some(1), ..params(2, 2) }),
        TheoremInstance::new(TheoremId::WeakColored, params(2, 2)).with_classes(vec![3, 2, 2]),
        TheoremInstance::new(TheoremId::TypeBColored, params(2, 2)),
        TheoremInstance::new(TheoremId::DimBounded, params(2, 3)),
        TheoremInstance::new(TheoremId::GvkfSharpened, BoundSet { j: Some(3), k: Some(2), n: Some(5), ..params(3, 3) }),
        TheoremInstance::new(TheoremId::NonUniformDims, BoundSet { k: Some(2), s: Some(1), ..params(2, 3) }),
        TheoremInstance::new(TheoremId::VkfSharpened, BoundSet { d: Some(3), ..Default::default() }),
        TheoremInstance::new(TheoremId::Jwise, BoundSet { j: Some(2), ..params(3, 2) }),
        TheoremInstance::new(TheoremId::JwiseAffine, BoundSet { j: Some(3), ..params(3, 2) }),
        TheoremInstance::new(TheoremId::EqualBarycentric, params(2, 2)),
        TheoremInstance::new(TheoremId::OptimalColored, params(3, 2)),
        TheoremInstance::new(TheoremId::OptimalColoredSplit, params(3, 2)),
        TheoremInstance::new(TheoremId::ColoredRadon, BoundSet { d: Some(2), ..Default::default() }),
    ];
    for inst in cases {
        let rep = run_instance(&inst.clone().with_trials(8).with_seed(11)).unwrap();
        assert_eq!(rep.verdict, Verdict::Confirmed, "{}", rep.summary());
        assert_eq!(rep.aggregate.witnesses, 8);
        for t in &rep.trials {
            let w = t.witness.as_ref().unwrap();
            assert_eq!(t.face_dims.as_ref().unwrap(), &w.face_dims());
        }
    }
}

#[test]
fn non_uniform_reports_realized_top_faces() {
    let inst = TheoremInstance::new(TheoremId::NonUniformDims, BoundSet { k: Some(2), s: Some(1), ..params(2, 3) }).with_trials(10);
    let rep = run_instance(&inst).unwrap();
    for t in &rep.trials {
        let l = t.top_dimensional_faces.unwrap();
        assert!(l * 3 <= 5 - 1 + 1);
    }
}

#[test]
fn prescribed_dimension_probe() {
    for d in 1..=4 {
        let inst = TheoremInstance::new(TheoremId::VkfSharpened, BoundSet { d: Some(d), ..Default::default() }).with_trials(30);
        let rep = run_instance(&inst).unwrap();
        assert_eq!(rep.verdict, Verdict::Confirmed);
        let mut want = vec![d.div_ceil(2), d / 2];
        want.sort_unstable();
        for t in &rep.trials {
            let mut got = t.face_dims.clone().unwrap();
            got.sort_unstable();
            assert_eq!(got, want, "d = {d}");
        }
    }
    let probe = TheoremInstance::new(TheoremId::VkfSharpened, BoundSet { d: Some(2), ..Default::default() })
        .with_dims(vec![2, 1, 1])
        .with_trials(3);
    assert_eq!(run_instance(&probe).unwrap().backing, Backing::ExperimentalEvidence);
}

#[test]
fn sarkaria_construction_refutes_ten_points() {
    let inst = TheoremInstance::new(TheoremId::GvkfSharpened, BoundSet { j: Some(2), k: Some(2), ..params(3, 3) }).necessity();
    let rep = run_instance(&inst).unwrap();
    assert_eq!(rep.verdict, Verdict::Confirmed);
    let cert = rep.refutation.unwrap();
    assert!(cert.counts_match);
    assert_eq!(cert.expected_families, count_bounded_families(10, 3, 3));
    assert_eq!(cert.configuration.unwrap().len(), 10);
}

#[test]
fn moment_curve_ten_points_admit_three_triangles() {
    // The moment-curve configuration is not extremal here: it has a witness.
    let inst =
        TheoremInstance::new(TheoremId::DimBounded, BoundSet { k: Some(2), n: Some(9), ..params(3, 3) }).necessity();
    let rep = run_instance(&inst).unwrap();
    assert_eq!(rep.backing, Backing::ExperimentalEvidence);
    assert_eq!(rep.verdict, Verdict::Violated);
    let config = moment_curve_config(10, 3).unwrap();
    let w = rep.trials[0].witness.as_ref().unwrap();
    let cs = ConstraintSet::new(3).with_max_dims(DimBound::Uniform(2));
    assert!(verify_witness(&config, w, &cs).passed());
    assert!(common::combines_exactly(&config, w));
}

#[test]
fn generic_lower_bound_counts_partitions() {
    let inst = TheoremInstance::new(TheoremId::TopologicalTverbergAffine, params(3, 1)).necessity().with_trials(20);
    let rep = run_instance(&inst).unwrap();
    assert_eq!(rep.verdict, Verdict::Confirmed);
    assert!(rep.trials.iter().all(|t| t.general_position.is_some()));
    let cert = rep.refutation.unwrap();
    assert_eq!(cert.expected_families, tverberg_lab::enumerate::stirling2(4, 3));
    assert!(cert.counts_match);
}

#[test]
fn reports_are_reproducible() {
    let inst = TheoremInstance::new(TheoremId::EqualBarycentric, params(2, 2)).with_trials(10).with_seed(5);
    let a = run_instance_with(&inst, Some(1)).unwrap().to_json();
    let b = run_instance_with(&inst, Some(4)).unwrap().to_json();
    assert_eq!(a, b);
    let back = Report::from_json(&a).unwrap();
    assert_eq!(back.to_json(), a);
}

#[test]
fn generator_examples() {
    let s = sarkaria_config(3, 2, 1).unwrap();
    assert_eq!(s.len(), 6);
    assert_eq!(s.dim(), 1);
    let (a, prov) = random_config(11, 3, [-10, 10], 42).unwrap();
    assert_eq!(random_config(11, 3, [-10, 10], 42).unwrap().0, a);
    assert_eq!((prov.generator.as_str(), prov.seed), (GENERATOR, 42));
}
