//! SLOCC discrimination and tangle-pattern classification.
//!
//! Invariant values depend on which representative of an SLOCC orbit is
//! handed in: an SL(2,C) transformation that inflates the norm shrinks every
//! degree-normalized invariant by a power of the inflation factor. Zero
//! tests and tolerance scales therefore run on a balanced representative,
//! obtained by local filtering: each qubit is repeatedly transformed by
//! `det(ρ_q)^{1/4} ρ_q^{-1/2}` (an SL(2,C) map) until every one-qubit
//! reduced density matrix is proportional to the identity. This minimizes
//! the norm along the orbit, so normalized invariants of the balanced state
//! are as large as the orbit allows and identical for all orbit members.

use std::fmt;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::invariants::{Invariant, InvariantSet};
use crate::state::{check_tolerance, LocalOperator, PureState4, NUM_QUBITS};

pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Maximum number of redraws in [`random_sl2`] before giving up.
pub const MAX_REDRAWS: usize = 1000;

const MIN_ABS_DET: f64 = 1e-6;
const BALANCE_MAX_SWEEPS: usize = 400;
const BALANCE_GAP: f64 = 1e-13;
const SINGULAR_REDUCED_DET: f64 = 1e-28;
const BALANCE_NOISE_BUDGET: f64 = 1e-10;

// ---------------------------------------------------------------------------
// Random SL(2,C) operators and orbit samples

/// Draws a random SL(2,C) matrix from `rng`.
///
/// Entries are standard complex normal; draws with `|det| < 1e-6` are
/// rejected and the accepted matrix is divided by the principal square root
/// of its determinant.
pub fn random_sl2_from<R: Rng + ?Sized>(rng: &mut R) -> Result<LocalOperator> {
    let scale = std::f64::consts::FRAC_1_SQRT_2;
    let mut normal = || {
        let re: f64 = rng.sample(StandardNormal);
        let im: f64 = rng.sample(StandardNormal);
        Complex64::new(re * scale, im * scale)
    };
    for _ in 0..MAX_REDRAWS {
        let m = LocalOperator::new([[normal(), normal()], [normal(), normal()]]);
        let det = m.det();
        if det.norm() < MIN_ABS_DET {
            continue;
        }
        let op = m.scaled(det.sqrt().inv());
        if op.is_special_linear() {
            return Ok(op);
        }
    }
    Err(Error::SamplingFailed(MAX_REDRAWS))
}

/// Deterministic random SL(2,C) matrix for `seed`.
pub fn random_sl2(seed: u64) -> Result<LocalOperator> {
    random_sl2_from(&mut ChaCha8Rng::seed_from_u64(seed))
}

/// Four independent random SL(2,C) operators for orbit sample `index`.
///
/// Each index draws from its own ChaCha stream, so samples can be generated
/// independently and in any order.
pub fn orbit_operators(seed: u64, index: u64) -> Result<[LocalOperator; NUM_QUBITS]> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    Ok([
        random_sl2_from(&mut rng)?,
        random_sl2_from(&mut rng)?,
        random_sl2_from(&mut rng)?,
        random_sl2_from(&mut rng)?,
    ])
}

pub fn orbit_sample(state: &PureState4, seed: u64, index: u64) -> Result<PureState4> {
    if state.is_zero() {
        return Err(Error::ZeroState);
    }
    Ok(state.apply_local(&orbit_operators(seed, index)?))
}

pub fn orbit_samples(state: &PureState4, count: usize, seed: u64) -> Result<Vec<PureState4>> {
    if count == 0 {
        return Err(Error::EmptySampleCount);
    }
    (0..count as u64)
        .map(|i| orbit_sample(state, seed, i))
        .collect()
}

// ---------------------------------------------------------------------------
// Balanced representative

/// Unit-norm representative of the SLOCC orbit of `state` whose one-qubit
/// reduced density matrices are (as close as the iteration gets to)
/// multiples of the identity.
///
/// Invariants of the result equal those of `state` up to the positive scale
/// introduced by normalization. Each filter step can amplify the relative
/// rounding error of the amplitudes by its condition number; the iteration
/// stops before the accumulated estimate exceeds `1e-10`. States in the null
/// cone never balance, so for them the iteration always ends at that
/// budget, with every invariant still at rounding level.
pub fn balanced_representative(state: &PureState4) -> Result<PureState4> {
    let mut psi = state.normalized()?;
    let mut noise = f64::EPSILON;
    'sweeps: for _ in 0..BALANCE_MAX_SWEEPS {
        let mut settled = true;
        for q in 0..NUM_QUBITS {
            let rho = psi.reduced_density(q);
            let (p, r, z) = (rho[0][0].re, rho[1][1].re, rho[0][1]);
            let trace = p + r;
            let gap = ((p - r).powi(2) + 4.0 * z.norm_sqr()).sqrt();
            if gap <= BALANCE_GAP * trace {
                continue;
            }
            settled = false;
            let det = p * r - z.norm_sqr();
            if det <= SINGULAR_REDUCED_DET * trace * trace {
                continue;
            }
            // det(ρ)^{1/4} ρ^{-1/2} via sqrt(ρ) = (ρ + sI)/t, s = sqrt(det), t = sqrt(tr + 2s)
            let lambda_max = (trace + gap) / 2.0;
            let cond = (lambda_max * lambda_max / det).sqrt();
            if noise * cond > BALANCE_NOISE_BUDGET {
                break 'sweeps;
            }
            noise = noise * cond + 4.0 * f64::EPSILON;
            let s = det.sqrt();
            let k = 1.0 / (s.sqrt() * (trace + 2.0 * s).sqrt());
            let filter = LocalOperator::new([
                [Complex64::new((r + s) * k, 0.0), -z * k],
                [-z.conj() * k, Complex64::new((p + s) * k, 0.0)],
            ]);
            psi = psi.apply_on(q, &filter).normalized()?;
        }
        if settled {
            break;
        }
    }
    Ok(psi)
}

// ---------------------------------------------------------------------------
// Pairwise discrimination

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Ratio `P^m / Q^n` of two invariants of degrees `i`, `j` with `i·m = j·n`,
/// kept as numerator and denominator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EtaValue {
    pub numerator: Complex64,
    pub denominator: Complex64,
    pub degrees: (u32, u32),
    pub powers: (u32, u32),
}

impl EtaValue {
    pub fn new(p: Complex64, p_degree: u32, q: Complex64, q_degree: u32) -> Self {
        let lcm = p_degree / gcd(p_degree, q_degree) * q_degree;
        let (m, n) = (lcm / p_degree, lcm / q_degree);
        Self {
            numerator: p.powu(m),
            denominator: q.powu(n),
            degrees: (p_degree, q_degree),
            powers: (m, n),
        }
    }

    pub fn of(set: &InvariantSet, p: Invariant, q: Invariant) -> Self {
        Self::new(set.get(p), p.degree(), set.get(q), q.degree())
    }

    /// `(P(self)^m Q(other)^n, P(other)^m Q(self)^n)`; the two ratios agree
    /// exactly when the components are equal.
    pub fn cross(&self, other: &EtaValue) -> (Complex64, Complex64) {
        (
            self.numerator * other.denominator,
            other.numerator * self.denominator,
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Outcome {
    /// Some invariant ratio differs: the states are not SLOCC-equivalent.
    DistinctClasses,
    /// Every ratio agrees. The states may or may not be equivalent.
    Inconclusive,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::DistinctClasses => "DistinctClasses",
            Self::Inconclusive => "Inconclusive",
        })
    }
}

/// A violated equality, reported on the input states as given.
///
/// For a ratio pair `P,Q` the sides are `P(ψ)^m Q(φ)^n` and
/// `P(φ)^m Q(ψ)^n`; for a single invariant they are `P(ψ)` and `P(φ)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub pair: String,
    #[serde(with = "crate::serde_complex")]
    pub lhs: Complex64,
    #[serde(with = "crate::serde_complex")]
    pub rhs: Complex64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub outcome: Outcome,
    pub witnesses: Vec<Witness>,
}

impl Verdict {
    fn from_witnesses(witnesses: Vec<Witness>) -> Self {
        let outcome = if witnesses.is_empty() {
            Outcome::Inconclusive
        } else {
            Outcome::DistinctClasses
        };
        Self { outcome, witnesses }
    }
}

/// Tests every invariant ratio over the generators `A, B1, B2, B3, C`.
///
/// Both states are reduced to unit-norm balanced representatives. An
/// invariant with modulus `≤ tol` there counts as zero; a zero/non-zero
/// mismatch is a witness. Ratios whose four entries are all non-zero are
/// compared cross-multiplied, `|lhs − rhs| ≤ tol·max(|lhs|, |rhs|, 1)`.
pub fn discriminate(psi: &PureState4, phi: &PureState4, tol: f64) -> Result<Verdict> {
    check_tolerance(tol)?;
    let raw_psi = InvariantSet::of(psi);
    let raw_phi = InvariantSet::of(phi);
    let bal_psi = InvariantSet::of(&balanced_representative(psi)?);
    let bal_phi = InvariantSet::of(&balanced_representative(phi)?);
    let is_zero = |set: &InvariantSet, p: Invariant| set.get(p).norm() <= tol;

    let mut witnesses = Vec::new();
    for p in Invariant::GENERATORS {
        if is_zero(&bal_psi, p) != is_zero(&bal_phi, p) {
            witnesses.push(Witness {
                pair: p.name().to_string(),
                lhs: raw_psi.get(p),
                rhs: raw_phi.get(p),
            });
        }
    }

    for (k, &p) in Invariant::GENERATORS.iter().enumerate() {
        for &q in &Invariant::GENERATORS[k + 1..] {
            let any_zero = [p, q]
                .iter()
                .any(|&x| is_zero(&bal_psi, x) || is_zero(&bal_phi, x));
            if any_zero {
                continue;
            }
            let (lhs, rhs) = EtaValue::of(&bal_psi, p, q).cross(&EtaValue::of(&bal_phi, p, q));
            let scale = lhs.norm().max(rhs.norm()).max(1.0);
            if (lhs - rhs).norm() > tol * scale {
                let (lhs, rhs) = EtaValue::of(&raw_psi, p, q).cross(&EtaValue::of(&raw_phi, p, q));
                witnesses.push(Witness {
                    pair: format!("{p},{q}"),
                    lhs,
                    rhs,
                });
            }
        }
    }
    Ok(Verdict::from_witnesses(witnesses))
}

// ---------------------------------------------------------------------------
// Tangle-pattern families

/// Family named by the highest-degree non-vanishing invariant among
/// `(A, L/M/N, X)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    W,
    #[serde(rename = "GHZ")]
    Ghz,
    #[serde(rename = "cluster")]
    Cluster,
    X,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::W => "W",
            Self::Ghz => "GHZ",
            Self::Cluster => "cluster",
            Self::X => "X",
        })
    }
}

/// Level of a symmetric state in the `(A, D)` hierarchy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SymmetricLevel {
    AllZero,
    AnonzeroDzero,
    Dnonzero,
}

impl fmt::Display for SymmetricLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::AllZero => "AllZero",
            Self::AnonzeroDzero => "AnonzeroDzero",
            Self::Dnonzero => "Dnonzero",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyLabel {
    #[serde(rename = "family")]
    pub general: Family,
    #[serde(
        rename = "symmetricLevel",
        default,
        skip_serializing_if = "Option::is_none"
    )]
    pub symmetric_level: Option<SymmetricLevel>,
}

fn general_family(set: &InvariantSet, tol: f64) -> Family {
    let nonzero = |v: Complex64| v.norm() > tol;
    if nonzero(set.x) {
        Family::X
    } else if nonzero(set.l) || nonzero(set.m) || nonzero(set.n) {
        Family::Cluster
    } else if nonzero(set.a) {
        Family::Ghz
    } else {
        Family::W
    }
}

fn symmetric_level(set: &InvariantSet, tol: f64) -> SymmetricLevel {
    match (set.a.norm() > tol, set.d.norm() > tol) {
        (_, true) => SymmetricLevel::Dnonzero,
        (true, false) => SymmetricLevel::AnonzeroDzero,
        (false, false) => SymmetricLevel::AllZero,
    }
}

/// Tangle-pattern family of `state`, plus its `(A, D)` level when the state
/// is permutation-symmetric at tolerance `tol`.
pub fn classify(state: &PureState4, tol: f64) -> Result<FamilyLabel> {
    check_tolerance(tol)?;
    let set = InvariantSet::of(&balanced_representative(state)?);
    let symmetric = state.is_symmetric(tol)?;
    Ok(FamilyLabel {
        general: general_family(&set, tol),
        symmetric_level: symmetric.then(|| symmetric_level(&set, tol)),
    })
}

/// `(A, D)` classification of a permutation-symmetric state.
pub fn classify_symmetric(state: &PureState4, tol: f64) -> Result<FamilyLabel> {
    check_tolerance(tol)?;
    if state.is_zero() {
        return Err(Error::ZeroState);
    }
    if !state.is_symmetric(tol)? {
        return Err(Error::NotSymmetric);
    }
    let set = InvariantSet::of(&balanced_representative(state)?);
    Ok(FamilyLabel {
        general: general_family(&set, tol),
        symmetric_level: Some(symmetric_level(&set, tol)),
    })
}
