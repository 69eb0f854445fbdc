//! Dense-matrix reference implementation shared by the integration tests.
//!
//! Everything here works on plain `Vec<Complex64>` with explicit Kronecker
//! products and never calls into the library's invariant code.

#![allow(dead_code)]

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use tangle_core::{LocalOperator, PureState4};

pub type Matrix = Vec<Vec<Complex64>>;

const METRIC: [f64; 4] = [-1.0, 1.0, 0.0, 1.0];
const CONTRACTED: [usize; 3] = [0, 1, 3];

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn sigma(k: usize) -> Matrix {
    let (o, l, i) = (c(0.0, 0.0), c(1.0, 0.0), c(0.0, 1.0));
    match k {
        0 => vec![vec![l, o], vec![o, l]],
        1 => vec![vec![o, l], vec![l, o]],
        2 => vec![vec![o, -i], vec![i, o]],
        3 => vec![vec![l, o], vec![o, -l]],
        _ => unreachable!(),
    }
}

pub fn kron(a: &Matrix, b: &Matrix) -> Matrix {
    let (ra, ca, rb, cb) = (a.len(), a[0].len(), b.len(), b[0].len());
    let mut out = vec![vec![c(0.0, 0.0); ca * cb]; ra * rb];
    for i in 0..ra {
        for j in 0..ca {
            for k in 0..rb {
                for l in 0..cb {
                    out[i * rb + k][j * cb + l] = a[i][j] * b[k][l];
                }
            }
        }
    }
    out
}

pub fn kron4(ms: [&Matrix; 4]) -> Matrix {
    kron(&kron(&kron(ms[0], ms[1]), ms[2]), ms[3])
}

pub fn mat_vec(m: &Matrix, v: &[Complex64]) -> Vec<Complex64> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

/// `ψᵀ (σ_a ⊗ σ_b ⊗ σ_c ⊗ σ_d) ψ`, no conjugation.
pub fn form(psi: &[Complex64], idx: [usize; 4]) -> Complex64 {
    let s = idx.map(sigma);
    let m = kron4([&s[0], &s[1], &s[2], &s[3]]);
    psi.iter().zip(mat_vec(&m, psi)).map(|(a, b)| a * b).sum()
}

pub fn pair(psi: &[Complex64], q1: usize, q2: usize) -> Complex64 {
    let mut total = c(0.0, 0.0);
    for mu in CONTRACTED {
        for nu in CONTRACTED {
            let mut idx = [2; 4];
            idx[q1] = mu;
            idx[q2] = nu;
            total += METRIC[mu] * METRIC[nu] * form(psi, idx).powu(2);
        }
    }
    total
}

/// Reference values `[A, B1, B2, B3, C, D, L, M, N, X]` with `B3` evaluated
/// directly on the qubit-1/qubit-4 pairing.
pub fn reference(psi: &[Complex64]) -> [Complex64; 10] {
    let a = form(psi, [2, 2, 2, 2]);
    let (b1, b2, b3) = (pair(psi, 0, 1), pair(psi, 0, 2), pair(psi, 0, 3));
    let mut cc = c(0.0, 0.0);
    for mu in CONTRACTED {
        for nu in CONTRACTED {
            for la in CONTRACTED {
                cc += METRIC[mu]
                    * METRIC[nu]
                    * METRIC[la]
                    * form(psi, [mu, nu, 2, 2])
                    * form(psi, [mu, 2, la, 2])
                    * form(psi, [2, nu, la, 2]);
            }
        }
    }
    let (l, m, n) = ((b2 - b3) / 48.0, (b3 - b1) / 48.0, (b1 - b2) / 48.0);
    let x = (cc + a.powu(3)).powu(2) - 128.0 * a * a * (l * l + m * m + n * n);
    [a, b1, b2, b3, cc, cc + 5.0 / 9.0 * a.powu(3), l, m, n, x]
}

/// Applies `J1 ⊗ J2 ⊗ J3 ⊗ J4` as one dense 16×16 matrix.
pub fn apply_dense(psi: &[Complex64], ops: &[LocalOperator; 4]) -> Vec<Complex64> {
    let ms: Vec<Matrix> = ops
        .iter()
        .map(|op| op.entries.iter().map(|r| r.to_vec()).collect())
        .collect();
    mat_vec(&kron4([&ms[0], &ms[1], &ms[2], &ms[3]]), psi)
}

pub fn rel_close(a: Complex64, b: Complex64, floor: f64, rtol: f64) -> bool {
    (a - b).norm() <= rtol * a.norm().max(b.norm()).max(floor)
}

pub fn complex_normal(rng: &mut ChaCha8Rng) -> Complex64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    c(re, im) / std::f64::consts::SQRT_2
}

pub fn random_state(rng: &mut ChaCha8Rng) -> PureState4 {
    PureState4::new(std::array::from_fn(|_| complex_normal(rng)))
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random complex scalar with modulus in `[0.5, 2]`.
pub fn random_scalar(rng: &mut ChaCha8Rng) -> Complex64 {
    let r = rng.random_range(0.5..2.0);
    let t = rng.random_range(0.0..std::f64::consts::TAU);
    Complex64::from_polar(r, t)
}

pub fn random_real(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> f64 {
    rng.random_range(lo..hi)
}

/// Random admissible parameters for a catalog entry.
pub fn random_params(
    entry: &tangle_core::catalog::RepresentativeSpec,
    rng: &mut ChaCha8Rng,
) -> tangle_core::catalog::Params {
    use tangle_core::catalog::{ParamKind, ParamValue, ParamVector};
    entry
        .params
        .iter()
        .map(|spec| {
            let value = match (spec.kind, spec.name) {
                (ParamKind::Scalar, "k") => {
                    ParamValue::Scalar(c(rng.random_range(0..=4) as f64, 0.0))
                }
                (ParamKind::Scalar, _) => ParamValue::Scalar(random_scalar(rng)),
                (ParamKind::Vector, _) => {
                    ParamValue::Vector(ParamVector::new(complex_normal(rng), complex_normal(rng)))
                }
            };
            (spec.name.to_string(), value)
        })
        .collect()
}
