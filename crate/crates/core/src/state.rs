//! Four-qubit state vectors, local operators and qubit relabelling.
//!
//! Amplitudes are indexed by the basis string `b1 b2 b3 b4` with qubit 1 as
//! the most significant bit, so `|b1 b2 b3 b4>` lives at index
//! `8*b1 + 4*b2 + 2*b3 + b4`. Qubits are addressed 0-based in the API
//! (qubit 1 of the basis string is `0`).

use std::fmt;
use std::ops::{Add, Index, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const NUM_QUBITS: usize = 4;
pub const DIM: usize = 16;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Bit mask of `qubit` (0-based, qubit 0 is the most significant bit).
#[inline]
pub(crate) fn qubit_mask(qubit: usize) -> usize {
    1 << (NUM_QUBITS - 1 - qubit)
}

/// Unnormalized pure state of four qubits.
#[derive(Clone, Copy, PartialEq)]
pub struct PureState4 {
    amps: [Complex64; DIM],
}

impl PureState4 {
    pub fn new(amps: [Complex64; DIM]) -> Self {
        Self { amps }
    }

    pub fn zero() -> Self {
        Self { amps: [ZERO; DIM] }
    }

    /// Computational basis state `|index>`.
    ///
    /// Panics if `index >= 16`.
    pub fn basis(index: usize) -> Self {
        let mut amps = [ZERO; DIM];
        amps[index] = ONE;
        Self { amps }
    }

    /// Basis state from a label such as `"0110"`.
    pub fn from_label(label: &str) -> Result<Self> {
        label_index(label)
            .map(Self::basis)
            .ok_or_else(|| Error::BasisLabel {
                label: label.to_string(),
                position: 0,
            })
    }

    /// Builds `sum_k c_k |label_k>`, accumulating repeated labels.
    pub fn from_terms<'a, I>(terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Complex64, &'a str)>,
    {
        let mut amps = [ZERO; DIM];
        for (c, label) in terms {
            let idx = label_index(label).ok_or_else(|| Error::BasisLabel {
                label: label.to_string(),
                position: 0,
            })?;
            amps[idx] += c;
        }
        Ok(Self { amps })
    }

    /// Tensor product `|a> ⊗ |b> ⊗ |c> ⊗ |d>` of single-qubit vectors.
    pub fn product(factors: [[Complex64; 2]; NUM_QUBITS]) -> Self {
        let mut amps = [ZERO; DIM];
        for (idx, amp) in amps.iter_mut().enumerate() {
            *amp = (0..NUM_QUBITS)
                .map(|q| factors[q][usize::from(idx & qubit_mask(q) != 0)])
                .product();
        }
        Self { amps }
    }

    pub fn amplitudes(&self) -> &[Complex64; DIM] {
        &self.amps
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// True when every amplitude is exactly zero.
    pub fn is_zero(&self) -> bool {
        self.amps.iter().all(|a| a.re == 0.0 && a.im == 0.0)
    }

    pub fn scaled(&self, c: Complex64) -> Self {
        let mut out = *self;
        out.amps.iter_mut().for_each(|a| *a *= c);
        out
    }

    pub fn normalized(&self) -> Result<Self> {
        let n = self.norm();
        if n == 0.0 || !n.is_finite() {
            return Err(Error::ZeroState);
        }
        Ok(self.scaled(Complex64::new(1.0 / n, 0.0)))
    }

    /// `(J1 ⊗ J2 ⊗ J3 ⊗ J4) |ψ>`, applied one qubit at a time.
    pub fn apply_local(&self, ops: &[LocalOperator; NUM_QUBITS]) -> Self {
        ops.iter()
            .enumerate()
            .fold(*self, |psi, (q, op)| psi.apply_on(q, op))
    }

    /// Applies `op` to a single qubit, identity elsewhere.
    pub fn apply_on(&self, qubit: usize, op: &LocalOperator) -> Self {
        let mask = qubit_mask(qubit);
        let m = &op.entries;
        let mut out = *self;
        for i0 in (0..DIM).filter(|i| i & mask == 0) {
            let i1 = i0 | mask;
            let (a0, a1) = (self.amps[i0], self.amps[i1]);
            out.amps[i0] = m[0][0] * a0 + m[0][1] * a1;
            out.amps[i1] = m[1][0] * a0 + m[1][1] * a1;
        }
        out
    }

    /// Relabels qubits: qubit `q` of `self` becomes qubit `perm.image(q)`.
    pub fn permute(&self, perm: &Permutation) -> Self {
        let mut out = [ZERO; DIM];
        for (idx, &amp) in self.amps.iter().enumerate() {
            let target = (0..NUM_QUBITS)
                .filter(|&q| idx & qubit_mask(q) != 0)
                .fold(0, |acc, q| acc | qubit_mask(perm.image(q)));
            out[target] = amp;
        }
        Self { amps: out }
    }

    /// Whether `ψ` is invariant under every qubit permutation, i.e.
    /// `max_π ‖π(ψ) − ψ‖ ≤ tol·‖ψ‖`.
    pub fn is_symmetric(&self, tol: f64) -> Result<bool> {
        check_tolerance(tol)?;
        let norm = self.norm();
        if norm == 0.0 {
            return Err(Error::ZeroState);
        }
        let worst = Permutation::all()
            .map(|p| (self.permute(&p) - *self).norm())
            .fold(0.0, f64::max);
        Ok(worst <= tol * norm)
    }

    /// Reduced density matrix `Tr_{others} |ψ><ψ|` of one qubit.
    pub fn reduced_density(&self, qubit: usize) -> [[Complex64; 2]; 2] {
        let mask = qubit_mask(qubit);
        let mut rho = [[ZERO; 2]; 2];
        for i0 in (0..DIM).filter(|i| i & mask == 0) {
            let (a0, a1) = (self.amps[i0], self.amps[i0 | mask]);
            rho[0][0] += a0 * a0.conj();
            rho[0][1] += a0 * a1.conj();
            rho[1][0] += a1 * a0.conj();
            rho[1][1] += a1 * a1.conj();
        }
        rho
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&StateFile::from(self)).expect("finite amplitudes serialize")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(&StateFile::from(self)).expect("finite amplitudes serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: StateFile =
            serde_json::from_str(text).map_err(|e| Error::StateFile(e.to_string()))?;
        file.try_into()
    }
}

impl Index<usize> for PureState4 {
    type Output = Complex64;

    fn index(&self, index: usize) -> &Complex64 {
        &self.amps[index]
    }
}

impl Add for PureState4 {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        self.amps
            .iter_mut()
            .zip(rhs.amps)
            .for_each(|(a, b)| *a += b);
        self
    }
}

impl Sub for PureState4 {
    type Output = Self;

    fn sub(mut self, rhs: Self) -> Self {
        self.amps
            .iter_mut()
            .zip(rhs.amps)
            .for_each(|(a, b)| *a -= b);
        self
    }
}

impl Neg for PureState4 {
    type Output = Self;

    fn neg(self) -> Self {
        self.scaled(-ONE)
    }
}

impl Mul<PureState4> for Complex64 {
    type Output = PureState4;

    fn mul(self, rhs: PureState4) -> PureState4 {
        rhs.scaled(self)
    }
}

impl Mul<PureState4> for f64 {
    type Output = PureState4;

    fn mul(self, rhs: PureState4) -> PureState4 {
        rhs.scaled(Complex64::new(self, 0.0))
    }
}

impl fmt::Debug for PureState4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PureState4({})", crate::ket::format_ket(self))
    }
}

/// Index of a 4-character basis label over `{0,1}`.
pub fn label_index(label: &str) -> Option<usize> {
    if label.len() != NUM_QUBITS {
        return None;
    }
    label.bytes().try_fold(0usize, |acc, b| match b {
        b'0' => Some(acc << 1),
        b'1' => Some((acc << 1) | 1),
        _ => None,
    })
}

pub fn index_label(index: usize) -> String {
    format!("{:04b}", index)
}

pub(crate) fn check_tolerance(tol: f64) -> Result<()> {
    if tol.is_finite() && tol > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidTolerance(tol))
    }
}

/// JSON state file layout: `{"amplitudes": [[re, im], ...]}` with 16 entries.
#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct StateFile {
    amplitudes: Vec<[f64; 2]>,
}

impl From<&PureState4> for StateFile {
    fn from(psi: &PureState4) -> Self {
        Self {
            amplitudes: psi.amps.iter().map(|a| [a.re, a.im]).collect(),
        }
    }
}

impl TryFrom<StateFile> for PureState4 {
    type Error = Error;

    fn try_from(file: StateFile) -> Result<Self> {
        if file.amplitudes.len() != DIM {
            return Err(Error::StateFile(format!(
                "expected {DIM} amplitudes, found {}",
                file.amplitudes.len()
            )));
        }
        let mut amps = [ZERO; DIM];
        for (slot, [re, im]) in amps.iter_mut().zip(file.amplitudes) {
            *slot = Complex64::new(re, im);
        }
        Ok(Self { amps })
    }
}

/// 2×2 complex matrix acting on one qubit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LocalOperator {
    pub entries: [[Complex64; 2]; 2],
}

impl LocalOperator {
    pub const SPECIAL_LINEAR_TOL: f64 = 1e-12;

    pub fn new(entries: [[Complex64; 2]; 2]) -> Self {
        Self { entries }
    }

    pub fn identity() -> Self {
        Self::diag(ONE, ONE)
    }

    pub fn diag(d0: Complex64, d1: Complex64) -> Self {
        Self::new([[d0, ZERO], [ZERO, d1]])
    }

    /// Pauli matrix `σ_k` with `(σ0, σ1, σ2, σ3) = (1, σx, σy, σz)`.
    ///
    /// Panics if `k > 3`.
    pub fn pauli(k: usize) -> Self {
        let i = Complex64::i();
        match k {
            0 => Self::identity(),
            1 => Self::new([[ZERO, ONE], [ONE, ZERO]]),
            2 => Self::new([[ZERO, -i], [i, ZERO]]),
            3 => Self::diag(ONE, -ONE),
            _ => panic!("Pauli index {k} out of range"),
        }
    }

    pub fn det(&self) -> Complex64 {
        let m = &self.entries;
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
    }

    pub fn is_special_linear(&self) -> bool {
        (self.det() - ONE).norm() <= Self::SPECIAL_LINEAR_TOL
    }

    pub fn is_invertible(&self) -> bool {
        self.det().norm() > 0.0
    }

    pub fn scaled(&self, c: Complex64) -> Self {
        let mut out = *self;
        out.entries.iter_mut().flatten().for_each(|e| *e *= c);
        out
    }
}

impl Mul for LocalOperator {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        let (a, b) = (&self.entries, &rhs.entries);
        let mut out = [[ZERO; 2]; 2];
        for (r, row) in out.iter_mut().enumerate() {
            for (c, e) in row.iter_mut().enumerate() {
                *e = a[r][0] * b[0][c] + a[r][1] * b[1][c];
            }
        }
        Self::new(out)
    }
}

/// Bijection on the four qubit positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Permutation([usize; NUM_QUBITS]);

impl Permutation {
    /// `images[q]` is the new position of qubit `q`.
    pub fn new(images: [usize; NUM_QUBITS]) -> Result<Self> {
        let mut seen = [false; NUM_QUBITS];
        for &i in &images {
            if i >= NUM_QUBITS || seen[i] {
                return Err(Error::InvalidPermutation(images.to_vec()));
            }
            seen[i] = true;
        }
        Ok(Self(images))
    }

    pub fn from_slice(images: &[usize]) -> Result<Self> {
        let arr: [usize; NUM_QUBITS] = images
            .try_into()
            .map_err(|_| Error::InvalidPermutation(images.to_vec()))?;
        Self::new(arr)
    }

    pub fn identity() -> Self {
        Self([0, 1, 2, 3])
    }

    /// Exchange of qubits `a` and `b` (0-based).
    ///
    /// Panics if either index is out of range.
    pub fn swap(a: usize, b: usize) -> Self {
        assert!(a < NUM_QUBITS && b < NUM_QUBITS, "qubit index out of range");
        let mut images = [0, 1, 2, 3];
        images.swap(a, b);
        Self(images)
    }

    pub fn image(&self, qubit: usize) -> usize {
        self.0[qubit]
    }

    pub fn images(&self) -> [usize; NUM_QUBITS] {
        self.0
    }

    pub fn inverse(&self) -> Self {
        let mut inv = [0; NUM_QUBITS];
        for (q, &i) in self.0.iter().enumerate() {
            inv[i] = q;
        }
        Self(inv)
    }

    /// `self ∘ first`: apply `first`, then `self`.
    pub fn after(&self, first: &Permutation) -> Self {
        Self(first.0.map(|i| self.0[i]))
    }

    /// All 24 permutations in lexicographic order.
    pub fn all() -> impl Iterator<Item = Permutation> {
        (0..NUM_QUBITS).flat_map(|a| {
            (0..NUM_QUBITS).flat_map(move |b| {
                (0..NUM_QUBITS).flat_map(move |c| {
                    (0..NUM_QUBITS).filter_map(move |d| Permutation::new([a, b, c, d]).ok())
                })
            })
        })
    }
}
