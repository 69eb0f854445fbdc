mod common;

use common::c;
use rand::Rng;
use tangle_core::catalog::{self, build_dicke, g_ab00, x_family, Params};
use tangle_core::classifier::{
    classify, classify_symmetric, discriminate, orbit_sample, orbit_samples, Family, Outcome,
    SymmetricLevel,
};
use tangle_core::ket::parse_ket;
use tangle_core::{Error, InvariantSet, Permutation, PureState4};

const TOL: f64 = 1e-9;
const TRIALS: u64 = 120;

fn pool() -> Vec<(String, PureState4)> {
    let mut states: Vec<(String, PureState4)> = catalog::entries()
        .iter()
        .map(|e| (e.name.to_string(), e.build(&Params::new()).unwrap()))
        .collect();
    let mut rng = common::rng(99);
    for k in 0..4 {
        states.push((format!("random-{k}"), common::random_state(&mut rng)));
    }
    states
}

#[test]
fn anchors() {
    let cases = [
        ("|0001> + |0010> + |0100> + |1000>", Family::W),
        ("|0000> + |1111>", Family::Ghz),
        ("|0000> + |1100> + |0011> - |1111>", Family::Cluster),
        (
            "|0001> + |0010> + |0100> + |1000> + sqrt(2)|1111>",
            Family::X,
        ),
    ];
    for (text, family) in cases {
        assert_eq!(
            classify(&parse_ket(text).unwrap(), TOL).unwrap().general,
            family,
            "{text}"
        );
    }
}

#[test]
fn family_is_stable_along_orbits() {
    let pool = pool();
    let mut rng = common::rng(1);
    for t in 0..TRIALS {
        let (name, psi) = &pool[rng.random_range(0..pool.len())];
        let base = classify(psi, TOL).unwrap();
        let moved = orbit_sample(psi, 500 + t, t).unwrap();
        assert_eq!(
            classify(&moved, TOL).unwrap().general,
            base.general,
            "{name} trial {t}"
        );
    }
}

#[test]
fn label_is_stable_under_permutations_and_scalars() {
    let pool = pool();
    let perms: Vec<Permutation> = Permutation::all().collect();
    let mut rng = common::rng(2);
    for _ in 0..TRIALS {
        let (name, psi) = &pool[rng.random_range(0..pool.len())];
        let base = classify(psi, TOL).unwrap();
        let perm = &perms[rng.random_range(0..perms.len())];
        assert_eq!(
            classify(&psi.permute(perm), TOL).unwrap(),
            base,
            "{name} {perm:?}"
        );
        let k = common::random_scalar(&mut rng);
        assert_eq!(classify(&psi.scaled(k), TOL).unwrap(), base, "{name} x{k}");
    }
}

#[test]
fn discrimination_is_sound_on_catalog_orbits() {
    for (name, psi) in pool() {
        for sample in orbit_samples(&psi, 8, 77).unwrap() {
            let verdict = discriminate(&psi, &sample, 1e-8).unwrap();
            assert_eq!(
                verdict.outcome,
                Outcome::Inconclusive,
                "{name}: {:?}",
                verdict.witnesses
            );
        }
    }
}

#[test]
fn ghz_and_w_are_told_apart() {
    let ghz = parse_ket("|0000> + |1111>").unwrap();
    let w = parse_ket("|0001> + |0010> + |0100> + |1000>").unwrap();
    let verdict = discriminate(&ghz, &w, TOL).unwrap();
    assert_eq!(verdict.outcome, Outcome::DistinctClasses);
    let a = verdict.witnesses.iter().find(|w| w.pair == "A").unwrap();
    assert_eq!((a.lhs, a.rhs), (c(2.0, 0.0), c(0.0, 0.0)));
}

#[test]
fn g_slice_separates_subfamily_members() {
    let g1 = g_ab00(c(1.0, 0.0), c(1.0, 0.0));
    let g2 = g_ab00(c(1.0, 0.0), c(2f64.sqrt(), 0.0));
    let verdict = discriminate(&g1, &g2, TOL).unwrap();
    assert_eq!(verdict.outcome, Outcome::DistinctClasses);
    assert!(verdict.witnesses.iter().any(|w| w.pair.starts_with("A,B")));
    // (A², B) ratio: 2²·B(g2) against 3²·B(g1) for one of the B placements
    let (s1, s2) = (InvariantSet::of(&g1), InvariantSet::of(&g2));
    assert!((s1.a - 2.0).norm() < 1e-12 && (s2.a - 3.0).norm() < 1e-12);
    assert!((s1.c + 8.0).norm() < 1e-12 && (s2.c + 24.0).norm() < 1e-12);
}

#[test]
fn symmetric_levels() {
    let zero = PureState4::basis(0);
    assert_eq!(
        classify_symmetric(&zero, TOL).unwrap().symmetric_level,
        Some(SymmetricLevel::AllZero)
    );
    let d2 = build_dicke(2).unwrap();
    assert_eq!(
        classify_symmetric(&d2, TOL).unwrap().symmetric_level,
        Some(SymmetricLevel::AnonzeroDzero)
    );
    let x1 = x_family(c(1.0, 0.0));
    assert_eq!(
        classify_symmetric(&x1, TOL).unwrap().symmetric_level,
        Some(SymmetricLevel::Dnonzero)
    );
    let boundary = x_family(c((2.0f64 / 3.0).sqrt(), 0.0));
    assert_eq!(
        classify_symmetric(&boundary, TOL).unwrap().symmetric_level,
        Some(SymmetricLevel::AnonzeroDzero)
    );
}

#[test]
fn symmetric_level_only_for_symmetric_input() {
    let x4 = catalog::build_representative("X4", &Params::new()).unwrap();
    let label = classify(&x4, TOL).unwrap();
    assert_eq!(label.general, Family::X);
    assert_eq!(label.symmetric_level, Some(SymmetricLevel::Dnonzero));
    let cluster = catalog::build_representative("cluster", &Params::new()).unwrap();
    assert_eq!(classify(&cluster, TOL).unwrap().symmetric_level, None);
    assert_eq!(classify_symmetric(&cluster, TOL), Err(Error::NotSymmetric));
}

#[test]
fn degenerate_inputs_are_rejected() {
    let zero = PureState4::zero();
    assert_eq!(classify(&zero, TOL), Err(Error::ZeroState));
    assert_eq!(classify_symmetric(&zero, TOL), Err(Error::ZeroState));
    let ghz = parse_ket("|0000> + |1111>").unwrap();
    assert_eq!(
        discriminate(&ghz, &zero, TOL).unwrap_err(),
        Error::ZeroState
    );
    assert!(matches!(
        classify(&ghz, 0.0),
        Err(Error::InvalidTolerance(_))
    ));
    assert!(matches!(
        classify(&ghz, f64::NAN),
        Err(Error::InvalidTolerance(_))
    ));
    assert_eq!(orbit_samples(&ghz, 0, 1), Err(Error::EmptySampleCount));
    assert_eq!(orbit_samples(&zero, 3, 1), Err(Error::ZeroState));
}

#[test]
fn ghz_orbit_keeps_a() {
    let ghz = parse_ket("|0000> + |1111>").unwrap();
    for sample in orbit_samples(&ghz, 100, 5).unwrap() {
        let a = InvariantSet::of(&sample).a;
        assert!((a - 2.0).norm() <= 2e-8, "{a}");
    }
}
