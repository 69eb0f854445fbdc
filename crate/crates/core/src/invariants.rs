//! Polynomial SL(2,C)^⊗4 invariants built from Pauli bilinear forms.
//!
//! The single-copy factor of every invariant is the bilinear form
//!
//! ```text
//! f(μ1 μ2 μ3 μ4) = Σ_{x,y} ψ_x (σ_μ1 ⊗ σ_μ2 ⊗ σ_μ3 ⊗ σ_μ4)_{xy} ψ_y
//! ```
//!
//! (no complex conjugation). Repeated upper/lower indices are contracted
//! with the metric `g = (−1, 1, 0, 1)`; because `g_2 = 0` the contracted
//! sums run over `{0, 1, 3}` only.
//!
//! Generators: `A = f(2222)`, `B1 = Σ g_μ g_ν f(μν22)²`,
//! `B2 = Σ g_μ g_ν f(μ2ν2)²`, `C = Σ g_μ g_ν g_λ f(μν22) f(μ2λ2) f(2νλ2)`.
//! `B3` is fixed by `B1 + B2 + B3 = 3A²`; the derived invariants are
//! `D = C + 5A³/9`, `L = (B2 − B3)/48`, `M = (B3 − B1)/48`,
//! `N = (B1 − B2)/48` and `X = (C + A³)² − 128A²(L² + M² + N²)`.

use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::state::{qubit_mask, PureState4, DIM, NUM_QUBITS};

/// Metric weights `g_μ` for `μ = 0..=3`.
pub const METRIC: [f64; 4] = [-1.0, 1.0, 0.0, 1.0];

/// Pauli labels with non-zero metric weight.
const CONTRACTED: [usize; 3] = [0, 1, 3];

const Y: usize = 2;

/// Index of a Pauli matrix `σ_μ`, `μ ∈ {0,1,2,3}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PauliIndex(u8);

impl PauliIndex {
    pub const I: Self = Self(0);
    pub const X: Self = Self(1);
    pub const Y: Self = Self(2);
    pub const Z: Self = Self(3);

    pub fn new(value: usize) -> Option<Self> {
        (value < 4).then_some(Self(value as u8))
    }

    pub fn value(self) -> usize {
        self.0 as usize
    }

    pub fn metric(self) -> f64 {
        METRIC[self.value()]
    }
}

/// `(σ_μ)_{x,y}` for single-qubit bits `x`, `y`.
fn pauli_entry(mu: usize, x: usize, y: usize) -> Complex64 {
    let (re, im) = match (mu, x, y) {
        (0, a, b) if a == b => (1.0, 0.0),
        (1, a, b) if a != b => (1.0, 0.0),
        (2, 0, 1) => (0.0, -1.0),
        (2, 1, 0) => (0.0, 1.0),
        (3, 0, 0) => (1.0, 0.0),
        (3, 1, 1) => (-1.0, 0.0),
        _ => (0.0, 0.0),
    };
    Complex64::new(re, im)
}

fn form(state: &PureState4, mu: [usize; NUM_QUBITS]) -> Complex64 {
    let amps = state.amplitudes();
    let flip = (0..NUM_QUBITS)
        .filter(|&q| mu[q] == 1 || mu[q] == 2)
        .fold(0, |acc, q| acc | qubit_mask(q));
    (0..DIM)
        .map(|y| {
            let x = y ^ flip;
            let phase: Complex64 = (0..NUM_QUBITS)
                .map(|q| {
                    let m = qubit_mask(q);
                    pauli_entry(mu[q], usize::from(x & m != 0), usize::from(y & m != 0))
                })
                .product();
            amps[x] * phase * amps[y]
        })
        .sum()
}

/// `Σ_{x,y} ψ_x (σ_μ1 ⊗ … ⊗ σ_μ4)_{xy} ψ_y`.
pub fn bilinear_form(state: &PureState4, mu: [PauliIndex; NUM_QUBITS]) -> Complex64 {
    form(state, mu.map(PauliIndex::value))
}

/// All 256 bilinear forms of one state.
#[derive(Clone)]
pub struct FormTable {
    values: [Complex64; 256],
}

impl FormTable {
    pub fn new(state: &PureState4) -> Self {
        let mut values = [Complex64::new(0.0, 0.0); 256];
        for (k, v) in values.iter_mut().enumerate() {
            *v = form(state, [k >> 6, (k >> 4) & 3, (k >> 2) & 3, k & 3]);
        }
        Self { values }
    }

    pub fn get(&self, mu: [usize; NUM_QUBITS]) -> Complex64 {
        self.values[(mu[0] << 6) | (mu[1] << 4) | (mu[2] << 2) | mu[3]]
    }

    /// `A = f(2222)`.
    pub fn a(&self) -> Complex64 {
        self.get([Y; 4])
    }

    /// `Σ g_μ g_ν f(…)²` with `μ` on qubit `q1`, `ν` on qubit `q2` and `σ_2`
    /// elsewhere.
    pub fn pair_contraction(&self, q1: usize, q2: usize) -> Complex64 {
        let mut total = Complex64::new(0.0, 0.0);
        for mu in CONTRACTED {
            for nu in CONTRACTED {
                let mut idx = [Y; 4];
                idx[q1] = mu;
                idx[q2] = nu;
                let f = self.get(idx);
                total += METRIC[mu] * METRIC[nu] * f * f;
            }
        }
        total
    }

    pub fn b1(&self) -> Complex64 {
        self.pair_contraction(0, 1)
    }

    pub fn b2(&self) -> Complex64 {
        self.pair_contraction(0, 2)
    }

    pub fn c(&self) -> Complex64 {
        let mut total = Complex64::new(0.0, 0.0);
        for mu in CONTRACTED {
            for nu in CONTRACTED {
                let f1 = self.get([mu, nu, Y, Y]);
                for la in CONTRACTED {
                    let f2 = self.get([mu, Y, la, Y]);
                    let f3 = self.get([Y, nu, la, Y]);
                    total += METRIC[mu] * METRIC[nu] * METRIC[la] * f1 * f2 * f3;
                }
            }
        }
        total
    }
}

pub fn inv_a(state: &PureState4) -> Complex64 {
    form(state, [Y; 4])
}

fn pair_contraction(state: &PureState4, q1: usize, q2: usize) -> Complex64 {
    let mut total = Complex64::new(0.0, 0.0);
    for mu in CONTRACTED {
        for nu in CONTRACTED {
            let mut idx = [Y; 4];
            idx[q1] = mu;
            idx[q2] = nu;
            let f = form(state, idx);
            total += METRIC[mu] * METRIC[nu] * f * f;
        }
    }
    total
}

pub fn inv_b1(state: &PureState4) -> Complex64 {
    pair_contraction(state, 0, 1)
}

pub fn inv_b2(state: &PureState4) -> Complex64 {
    pair_contraction(state, 0, 2)
}

/// `B3 = 3A² − B1 − B2`.
pub fn inv_b3(state: &PureState4) -> Complex64 {
    let a = inv_a(state);
    3.0 * a * a - inv_b1(state) - inv_b2(state)
}

/// The pair contraction with indices on qubits 1 and 4; agrees with
/// [`inv_b3`].
pub fn inv_b3_direct(state: &PureState4) -> Complex64 {
    pair_contraction(state, 0, 3)
}

pub fn inv_c(state: &PureState4) -> Complex64 {
    FormTable::new(state).c()
}

/// `D = C + 5A³/9`, vanishing on the symmetric `D_{2,2}` and `D_{2,1,1}`
/// families.
pub fn inv_d(state: &PureState4) -> Complex64 {
    let a = inv_a(state);
    inv_c(state) + (5.0 / 9.0) * a * a * a
}

/// `(L, M, N, X)`.
pub fn inv_lmnx(state: &PureState4) -> (Complex64, Complex64, Complex64, Complex64) {
    let s = InvariantSet::of(state);
    (s.l, s.m, s.n, s.x)
}

/// Names of the ten invariants reported for a state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Invariant {
    A,
    B1,
    B2,
    B3,
    C,
    D,
    L,
    M,
    N,
    X,
}

impl Invariant {
    pub const ALL: [Invariant; 10] = [
        Self::A,
        Self::B1,
        Self::B2,
        Self::B3,
        Self::C,
        Self::D,
        Self::L,
        Self::M,
        Self::N,
        Self::X,
    ];

    /// The generating set used for discrimination.
    pub const GENERATORS: [Invariant; 5] = [Self::A, Self::B1, Self::B2, Self::B3, Self::C];

    /// Homogeneous degree in the amplitudes.
    pub fn degree(self) -> u32 {
        match self {
            Self::A => 2,
            Self::B1 | Self::B2 | Self::B3 | Self::L | Self::M | Self::N => 4,
            Self::C | Self::D => 6,
            Self::X => 12,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::A => "A",
            Self::B1 => "B1",
            Self::B2 => "B2",
            Self::B3 => "B3",
            Self::C => "C",
            Self::D => "D",
            Self::L => "L",
            Self::M => "M",
            Self::N => "N",
            Self::X => "X",
        }
    }
}

impl fmt::Display for Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Generator and derived invariant values of one state.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct InvariantSet {
    #[serde(rename = "A", with = "crate::serde_complex")]
    pub a: Complex64,
    #[serde(rename = "B1", with = "crate::serde_complex")]
    pub b1: Complex64,
    #[serde(rename = "B2", with = "crate::serde_complex")]
    pub b2: Complex64,
    #[serde(rename = "B3", with = "crate::serde_complex")]
    pub b3: Complex64,
    #[serde(rename = "C", with = "crate::serde_complex")]
    pub c: Complex64,
    #[serde(rename = "D", with = "crate::serde_complex")]
    pub d: Complex64,
    #[serde(rename = "L", with = "crate::serde_complex")]
    pub l: Complex64,
    #[serde(rename = "M", with = "crate::serde_complex")]
    pub m: Complex64,
    #[serde(rename = "N", with = "crate::serde_complex")]
    pub n: Complex64,
    #[serde(rename = "X", with = "crate::serde_complex")]
    pub x: Complex64,
}

impl InvariantSet {
    pub fn of(state: &PureState4) -> Self {
        let table = FormTable::new(state);
        Self::from_generators(table.a(), table.b1(), table.b2(), table.c())
    }

    pub fn from_generators(a: Complex64, b1: Complex64, b2: Complex64, c: Complex64) -> Self {
        let a2 = a * a;
        let a3 = a2 * a;
        let b3 = 3.0 * a2 - b1 - b2;
        let l = (b2 - b3) / 48.0;
        let m = (b3 - b1) / 48.0;
        let n = (b1 - b2) / 48.0;
        let e = c + a3;
        let x = e * e - 128.0 * a2 * (l * l + m * m + n * n);
        Self {
            a,
            b1,
            b2,
            b3,
            c,
            d: c + (5.0 / 9.0) * a3,
            l,
            m,
            n,
            x,
        }
    }

    pub fn get(&self, which: Invariant) -> Complex64 {
        match which {
            Invariant::A => self.a,
            Invariant::B1 => self.b1,
            Invariant::B2 => self.b2,
            Invariant::B3 => self.b3,
            Invariant::C => self.c,
            Invariant::D => self.d,
            Invariant::L => self.l,
            Invariant::M => self.m,
            Invariant::N => self.n,
            Invariant::X => self.x,
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (Invariant, Complex64)> + '_ {
        Invariant::ALL.into_iter().map(|i| (i, self.get(i)))
    }
}

/// Moduli of the invariants of the normalized state, each raised to the
/// power that makes it degree-2 homogeneous.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TangleMagnitudes {
    #[serde(rename = "A")]
    pub a: f64,
    #[serde(rename = "B1")]
    pub b1: f64,
    #[serde(rename = "B2")]
    pub b2: f64,
    #[serde(rename = "B3")]
    pub b3: f64,
    #[serde(rename = "C")]
    pub c: f64,
    #[serde(rename = "D")]
    pub d: f64,
    #[serde(rename = "L")]
    pub l: f64,
    #[serde(rename = "M")]
    pub m: f64,
    #[serde(rename = "N")]
    pub n: f64,
    #[serde(rename = "X")]
    pub x: f64,
}

impl TangleMagnitudes {
    pub fn get(&self, which: Invariant) -> f64 {
        match which {
            Invariant::A => self.a,
            Invariant::B1 => self.b1,
            Invariant::B2 => self.b2,
            Invariant::B3 => self.b3,
            Invariant::C => self.c,
            Invariant::D => self.d,
            Invariant::L => self.l,
            Invariant::M => self.m,
            Invariant::N => self.n,
            Invariant::X => self.x,
        }
    }
}

pub fn tangle_magnitudes(state: &PureState4) -> Result<TangleMagnitudes> {
    let inv = InvariantSet::of(&state.normalized()?);
    let mag = |which: Invariant| {
        let root = 2.0 / f64::from(which.degree());
        inv.get(which).norm().powf(root)
    };
    Ok(TangleMagnitudes {
        a: mag(Invariant::A),
        b1: mag(Invariant::B1),
        b2: mag(Invariant::B2),
        b3: mag(Invariant::B3),
        c: mag(Invariant::C),
        d: mag(Invariant::D),
        l: mag(Invariant::L),
        m: mag(Invariant::M),
        n: mag(Invariant::N),
        x: mag(Invariant::X),
    })
}
