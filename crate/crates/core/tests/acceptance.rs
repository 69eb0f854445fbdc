//! Acceptance gate: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails.

mod common;

use std::process::ExitCode;

use common::c;
use tangle_core::catalog::{
    self, build_dicke, g_ab00, g_ab00_closed_forms, x_family, x_family_closed_forms, Params,
};
use tangle_core::classifier::{
    classify, classify_symmetric, discriminate, orbit_operators, Family, Outcome, SymmetricLevel,
};
use tangle_core::invariants::{inv_b3_direct, Invariant, InvariantSet};
use tangle_core::ket::parse_ket;
use tangle_core::{Complex64, Permutation, PureState4};

const DRAWS: usize = 20;
const TRIALS: usize = 100;

struct Report {
    failed: usize,
}

impl Report {
    fn record(&mut self, id: &str, title: &str, result: Result<String, String>) {
        match result {
            Ok(detail) => println!("PASS  [{id}] {title} ({detail})"),
            Err(detail) => {
                self.failed += 1;
                println!("FAIL  [{id}] {title} ({detail})");
            }
        }
    }
}

fn ket(text: &str) -> PureState4 {
    parse_ket(text).expect("valid ket")
}

fn generators(set: &InvariantSet) -> [Complex64; 5] {
    [set.a, set.b1, set.b2, set.b3, set.c]
}

/// Largest `|x − y| / max(|x|, |y|, floor)` over the given pairs.
fn worst(pairs: impl IntoIterator<Item = (Complex64, Complex64, f64)>) -> f64 {
    pairs
        .into_iter()
        .map(|(x, y, floor)| (x - y).norm() / x.norm().max(y.norm()).max(floor))
        .fold(0.0, f64::max)
}

fn within(dev: f64, tol: f64) -> Result<String, String> {
    let msg = format!("max deviation {dev:.2e}, tolerance {tol:.0e}");
    if dev <= tol {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn entry(name: &str) -> &'static catalog::RepresentativeSpec {
    catalog::lookup(name).expect("catalog entry")
}

fn ghz_generators() -> Result<String, String> {
    let got = generators(&InvariantSet::of(&ket("|0000> + |1111>")));
    let want = [2.0, 4.0, 4.0, 4.0, -8.0].map(|x| c(x, 0.0));
    let dev = got
        .iter()
        .zip(&want)
        .map(|(g, w)| (g - w).norm())
        .fold(0.0, f64::max);
    within(dev, 1e-12)
}

fn w_generators() -> Result<String, String> {
    let got = generators(&InvariantSet::of(&ket("|0001> + |0010> + |0100> + |1000>")));
    within(got.iter().map(|z| z.norm()).fold(0.0, f64::max), 1e-12)
}

fn symmetric_table() -> Result<String, String> {
    let d2 = InvariantSet::of(&build_dicke(2).unwrap());
    let dicke_dev = [
        (d2.a, c(1.0, 0.0)),
        (d2.c, c(-5.0 / 9.0, 0.0)),
        (d2.d, c(0.0, 0.0)),
    ]
    .iter()
    .map(|(g, w)| (g - w).norm())
    .fold(0.0, f64::max);

    let mut rng = common::rng(3);
    let mut family = Vec::new();
    let mut symmetric_states: Vec<PureState4> = catalog::entries()
        .iter()
        .filter(|e| e.name.starts_with("sym-"))
        .map(|e| e.build(&Params::new()).unwrap())
        .chain((0..=4).map(|k| build_dicke(k).unwrap()))
        .collect();
    for _ in 0..DRAWS {
        let mu = common::random_scalar(&mut rng);
        let psi = x_family(mu);
        let set = InvariantSet::of(&psi);
        let (a, cc, d) = x_family_closed_forms(mu);
        let n = psi.norm();
        family.extend([
            (set.a, a, n.powi(2)),
            (set.c, cc, n.powi(6)),
            (set.d, d, n.powi(6)),
        ]);
        symmetric_states.push(psi);
    }
    let family_dev = worst(family);
    let collapse_dev = worst(symmetric_states.iter().flat_map(|psi| {
        let set = InvariantSet::of(psi);
        let floor = psi.norm_sqr().powi(2);
        [set.b1, set.b2, set.b3].map(|b| (b, set.a * set.a, floor))
    }));
    let msg = format!(
        "Dicke abs {dicke_dev:.2e} (1e-10), X family rel {family_dev:.2e} (1e-9), B = A^2 rel {collapse_dev:.2e} (1e-9)"
    );
    if dicke_dev <= 1e-10 && family_dev <= 1e-9 && collapse_dev <= 1e-9 {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn g_slice() -> Result<String, String> {
    let mut rng = common::rng(4);
    let mut dev: f64 = 0.0;
    for _ in 0..DRAWS {
        let (a, d) = (
            common::random_scalar(&mut rng),
            common::random_scalar(&mut rng),
        );
        let psi = g_ab00(a, d);
        let n = psi.norm();
        let set = InvariantSet::of(&psi);
        let (alpha, beta1, beta2, gamma) = g_ab00_closed_forms(a, d);
        let third = 3.0 * alpha * alpha - beta1 - beta2;
        let bs = [set.b1, set.b2, set.b3];
        // best assignment of (β1, β2, third) onto (B1, B2, B3)
        let best = Permutation::all()
            .filter(|p| p.image(3) == 3)
            .map(|p| {
                let targets = [beta1, beta2, third];
                worst((0..3).map(|k| (bs[p.image(k)], targets[k], n.powi(4))))
            })
            .fold(f64::INFINITY, f64::min);
        dev = dev.max(best).max(worst([
            (set.a, alpha, n.powi(2)),
            (set.c, gamma, n.powi(6)),
        ]));
    }
    within(dev, 1e-9)
}

fn subfamily_counterexample() -> Result<String, String> {
    let g1 = g_ab00(c(1.0, 0.0), c(1.0, 0.0));
    let g2 = g_ab00(c(1.0, 0.0), c(2f64.sqrt(), 0.0));
    let verdict = discriminate(&g1, &g2, 1e-9).unwrap();
    let pairs: Vec<&str> = verdict.witnesses.iter().map(|w| w.pair.as_str()).collect();
    let msg = format!("{} via {}", verdict.outcome, pairs.join(" "));
    if verdict.outcome == Outcome::DistinctClasses {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn anchors() -> Result<String, String> {
    let cases = [
        ("|0001> + |0010> + |0100> + |1000>", Family::W),
        ("|0000> + |1111>", Family::Ghz),
        ("|0000> + |1100> + |0011> - |1111>", Family::Cluster),
        (
            "|0001> + |0010> + |0100> + |1000> + sqrt(2)|1111>",
            Family::X,
        ),
    ];
    let mut got = Vec::new();
    let mut ok = true;
    for (text, want) in cases {
        let family = classify(&ket(text), 1e-9).unwrap().general;
        ok &= family == want;
        got.push(family.to_string());
    }
    let msg = got.join(", ");
    if ok {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn sl_invariance() -> Result<String, String> {
    let mut rng = common::rng(7);
    let mut dev: f64 = 0.0;
    let mut distinct = 0;
    for t in 0..TRIALS {
        let psi = common::random_state(&mut rng);
        let moved = psi.apply_local(&orbit_operators(1_000 + t as u64, 0).unwrap());
        let (before, after) = (InvariantSet::of(&psi), InvariantSet::of(&moved));
        dev = dev.max(worst(Invariant::ALL.map(|i| {
            (
                before.get(i),
                after.get(i),
                psi.norm().powi(i.degree() as i32),
            )
        })));
        if discriminate(&psi, &moved, 1e-8).unwrap().outcome != Outcome::Inconclusive {
            distinct += 1;
        }
    }
    let msg =
        format!("max deviation {dev:.2e} (1e-8), {distinct}/{TRIALS} orbit pairs not Inconclusive");
    if dev <= 1e-8 && distinct == 0 {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn homogeneity() -> Result<String, String> {
    let mut rng = common::rng(8);
    let mut dev: f64 = 0.0;
    for _ in 0..TRIALS {
        let psi = common::random_state(&mut rng);
        let k = common::random_scalar(&mut rng);
        let (base, scaled) = (InvariantSet::of(&psi), InvariantSet::of(&psi.scaled(k)));
        dev = dev.max(worst(Invariant::ALL.map(|i| {
            let d = i.degree();
            (
                scaled.get(i),
                base.get(i) * k.powu(d),
                (k.norm() * psi.norm()).powi(d as i32),
            )
        })));
    }
    within(dev, 1e-10)
}

fn sum_rule_and_swaps() -> Result<String, String> {
    let mut rng = common::rng(9);
    let (mut sum_dev, mut swap_dev): (f64, f64) = (0.0, 0.0);
    for _ in 0..TRIALS {
        let psi = common::random_state(&mut rng);
        let set = InvariantSet::of(&psi);
        let floor = psi.norm_sqr().powi(2);
        let direct = inv_b3_direct(&psi);
        sum_dev = sum_dev.max(worst([(
            set.b1 + set.b2 + direct,
            3.0 * set.a * set.a,
            floor,
        )]));
        let b1_23 = InvariantSet::of(&psi.permute(&Permutation::swap(1, 2))).b1;
        let b1_24 = InvariantSet::of(&psi.permute(&Permutation::swap(1, 3))).b1;
        swap_dev = swap_dev.max(worst([(b1_23, set.b2, floor), (b1_24, direct, floor)]));
    }
    let msg = format!("sum rule {sum_dev:.2e}, swaps {swap_dev:.2e}, tolerance 1e-10");
    if sum_dev <= 1e-10 && swap_dev <= 1e-10 {
        Ok(msg)
    } else {
        Err(msg)
    }
}

/// Evaluates `f` on `DRAWS` random admissible parameter draws of each entry.
fn over_draws<F>(names: &[&str], seed: u64, mut f: F) -> f64
where
    F: FnMut(&InvariantSet, f64) -> f64,
{
    let mut rng = common::rng(seed);
    let mut dev: f64 = 0.0;
    for name in names {
        let e = entry(name);
        for _ in 0..DRAWS {
            let params = common::random_params(e, &mut rng);
            let psi = e.build(&params).unwrap();
            dev = dev.max(f(&InvariantSet::of(&psi), psi.norm()));
        }
    }
    dev
}

const GHZ_LIKE_ROWS: [&str; 5] = [
    "GHZ",
    "W000_0kPsi_a",
    "W000_GHZ",
    "W0kPsi_0jPsi_a",
    "W0kPsi_0jPsi_b",
];
const SPLIT_B_ROWS: [&str; 2] = ["W0kPsi_0kPsi_a", "W0kPsi_GHZ"];

fn ghz_like_dependences() -> Result<String, String> {
    let dev = over_draws(&GHZ_LIKE_ROWS, 10, |s, n| {
        let a2 = s.a * s.a;
        worst([
            (s.b1, a2, n.powi(4)),
            (s.b2, a2, n.powi(4)),
            (s.b3, a2, n.powi(4)),
            (s.c, -a2 * s.a, n.powi(6)),
        ])
    });
    within(dev, 1e-9)
}

fn row9_dependences() -> Result<String, String> {
    let dev = over_draws(&["W0kPsi_0kPsi_b"], 11, |s, n| {
        worst([
            (s.b1, 3.0 * s.a * s.a, n.powi(4)),
            (s.b2, c(0.0, 0.0), n.powi(4)),
            (s.b3, c(0.0, 0.0), n.powi(4)),
            (s.c, c(0.0, 0.0), n.powi(6)),
        ])
    });
    within(dev, 1e-9)
}

fn split_b_rows_distinct() -> Result<String, String> {
    // smallest separation |B1 − B2| relative to scale, and B3 = B2
    let mut closest = f64::INFINITY;
    let b3_dev = over_draws(&SPLIT_B_ROWS, 12, |s, n| {
        let scale = s.b1.norm().max(s.b2.norm()).max(n.powi(4));
        closest = closest.min((s.b1 - s.b2).norm() / scale);
        worst([(s.b3, s.b2, n.powi(4))])
    });
    let msg = format!("min |B1 - B2| rel {closest:.2e} (> 1e-9), B3 = B2 rel {b3_dev:.2e} (1e-9)");
    if closest > 1e-9 && b3_dev <= 1e-9 {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn split_b_rows_c_relation() -> Result<String, String> {
    let literal = over_draws(&SPLIT_B_ROWS, 13, |s, n| {
        worst([(s.c, -s.a * s.a * s.b2, n.powi(6))])
    });
    let degree_consistent = over_draws(&SPLIT_B_ROWS, 13, |s, n| {
        worst([(s.c, -s.a * s.b2, n.powi(6))])
    });
    let msg = format!(
        "C = -A^2 B2 max deviation {literal:.2e}, tolerance 1e-9; C = -A B2 holds to {degree_consistent:.2e}"
    );
    if literal <= 1e-9 {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn boundary() -> Result<String, String> {
    let psi = x_family(c((2.0f64 / 3.0).sqrt(), 0.0));
    let label = classify_symmetric(&psi, 1e-9).unwrap();
    let d = InvariantSet::of(&psi).d;
    let msg = format!("{:?}, |D| = {:.2e}", label.symmetric_level, d.norm());
    if label.symmetric_level == Some(SymmetricLevel::AnonzeroDzero) {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn main() -> ExitCode {
    let mut report = Report { failed: 0 };
    report.record(
        "1",
        "GHZ generators equal (2, 4, 4, 4, -8)",
        ghz_generators(),
    );
    report.record("2", "W4 generators vanish", w_generators());
    report.record(
        "3",
        "symmetric classification values and B = A^2 collapse",
        symmetric_table(),
    );
    report.record(
        "4",
        "G_ab00 closed forms for alpha, beta pair and gamma",
        g_slice(),
    );
    report.record(
        "5",
        "G(1,1) and G(1,sqrt 2) are distinct classes",
        subfamily_counterexample(),
    );
    report.record("6", "family anchors W, GHZ, cluster, X", anchors());
    report.record(
        "7",
        "SL(2,C) invariance and orbit soundness",
        sl_invariance(),
    );
    report.record("8", "homogeneity of all ten invariants", homogeneity());
    report.record(
        "9",
        "sum rule against direct B3 and swap equivariance",
        sum_rule_and_swaps(),
    );
    report.record(
        "10a",
        "LLSS representatives 3-7: B = A^2, C = -A^3",
        ghz_like_dependences(),
    );
    report.record(
        "10b",
        "LLSS representative 9: (3A^2, 0, 0, 0)",
        row9_dependences(),
    );
    report.record(
        "10c",
        "LLSS representatives 8, 10: B1 != B2, B3 = B2",
        split_b_rows_distinct(),
    );
    report.record(
        "10d",
        "LLSS representatives 8, 10: C = -A^2 B2",
        split_b_rows_c_relation(),
    );
    report.record("11", "X family at mu^2 = 2/3 is AnonzeroDzero", boundary());
    println!("{} criteria failed", report.failed);
    if report.failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
