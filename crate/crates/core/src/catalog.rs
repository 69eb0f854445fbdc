//! Named representative states and the invariant patterns they satisfy.
//!
//! The catalog covers the five symmetric degeneracy-configuration families
//! (Dicke-basis representatives), the eleven LLSS representatives, the X
//! state, the cluster state, the `G_abcd` slice with `b = c = 0` and the
//! Dicke states themselves. Ket sums are built exactly as written, without
//! normalization; Dicke states are normalized.
//!
//! Vector parameters (`varphi`, `phi`, `psi`, and their barred partners) are
//! single-qubit vectors `(v0, v1)`; on the command line they are written
//! `v0,v1` with complex literals for each component.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::invariants::{Invariant, InvariantSet};
use crate::ket::parse_complex;
use crate::state::{PureState4, DIM};

const LINEAR_INDEPENDENCE_TOL: f64 = 1e-9;
const X_FAMILY_EXCLUDED_TOL: f64 = 1e-12;

fn cx(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

// ---------------------------------------------------------------------------
// Parameters

/// Single-qubit vector `v0|0> + v1|1>`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParamVector {
    pub v0: Complex64,
    pub v1: Complex64,
}

impl ParamVector {
    pub fn new(v0: Complex64, v1: Complex64) -> Self {
        Self { v0, v1 }
    }

    pub fn components(&self) -> [Complex64; 2] {
        [self.v0, self.v1]
    }

    /// `v0·w1 − v1·w0`; zero iff the vectors are parallel.
    pub fn wedge(&self, other: &ParamVector) -> Complex64 {
        self.v0 * other.v1 - self.v1 * other.v0
    }

    pub fn parse(text: &str) -> Result<Self> {
        let (a, b) = text.split_once(',').ok_or_else(|| Error::Syntax {
            position: 0,
            message: format!("expected `v0,v1`, got `{text}`"),
        })?;
        Ok(Self::new(parse_complex(a)?, parse_complex(b)?))
    }
}

impl fmt::Display for ParamVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", fmt_complex(self.v0), fmt_complex(self.v1))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ParamValue {
    Scalar(Complex64),
    Vector(ParamVector),
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Scalar(z) => f.write_str(&fmt_complex(*z)),
            Self::Vector(v) => v.fmt(f),
        }
    }
}

pub type Params = BTreeMap<String, ParamValue>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamKind {
    Scalar,
    Vector,
}

#[derive(Debug, Clone, Copy)]
pub struct ParamSpec {
    pub name: &'static str,
    pub kind: ParamKind,
    pub default: &'static str,
}

impl ParamSpec {
    pub fn parse(&self, text: &str) -> Result<ParamValue> {
        Ok(match self.kind {
            ParamKind::Scalar => ParamValue::Scalar(parse_complex(text)?),
            ParamKind::Vector => ParamValue::Vector(ParamVector::parse(text)?),
        })
    }
}

const fn scalar(name: &'static str, default: &'static str) -> ParamSpec {
    ParamSpec {
        name,
        kind: ParamKind::Scalar,
        default,
    }
}

const fn vector(name: &'static str, default: &'static str) -> ParamSpec {
    ParamSpec {
        name,
        kind: ParamKind::Vector,
        default,
    }
}

/// Parameters of one entry with defaults filled in.
#[derive(Debug, Clone)]
pub struct Args<'a> {
    entry: &'a RepresentativeSpec,
    values: Params,
}

impl Args<'_> {
    pub fn scalar(&self, name: &str) -> Complex64 {
        match self.values.get(name) {
            Some(ParamValue::Scalar(z)) => *z,
            _ => panic!("`{}` has no scalar parameter `{name}`", self.entry.name),
        }
    }

    pub fn vector(&self, name: &str) -> ParamVector {
        match self.values.get(name) {
            Some(ParamValue::Vector(v)) => *v,
            _ => panic!("`{}` has no vector parameter `{name}`", self.entry.name),
        }
    }

    pub fn values(&self) -> &Params {
        &self.values
    }

    fn invalid(&self, reason: impl Into<String>) -> Error {
        Error::InvalidParameter {
            entry: self.entry.name.to_string(),
            reason: reason.into(),
        }
    }

    fn independent(&self, a: &str, b: &str) -> Result<()> {
        if self.vector(a).wedge(&self.vector(b)).norm() > LINEAR_INDEPENDENCE_TOL {
            Ok(())
        } else {
            Err(self.invalid(format!("`{a}` and `{b}` must be linearly independent")))
        }
    }

    fn nonzero(&self, name: &str) -> Result<()> {
        if self.scalar(name).norm() > 0.0 {
            Ok(())
        } else {
            Err(self.invalid(format!("`{name}` must be non-zero")))
        }
    }
}

// ---------------------------------------------------------------------------
// Expected patterns

/// One relation the invariants of a representative must satisfy.
#[derive(Debug, Clone, PartialEq)]
pub enum Check {
    /// `invariant = expected`.
    Value {
        invariant: Invariant,
        expected: Complex64,
    },
    /// `invariant = coeff · Π factor^power`.
    Monomial {
        invariant: Invariant,
        coeff: Complex64,
        factors: Vec<(Invariant, u32)>,
    },
    /// The two invariants differ.
    Distinct(Invariant, Invariant),
    /// The values occur among the candidates, each matched to a different one.
    Among {
        candidates: Vec<Invariant>,
        values: Vec<Complex64>,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckOutcome {
    pub description: String,
    pub passed: bool,
    pub detail: String,
}

fn agree(a: Complex64, b: Complex64, floor: f64, rtol: f64) -> bool {
    (a - b).norm() <= rtol * a.norm().max(b.norm()).max(floor)
}

impl Check {
    fn value(invariant: Invariant, expected: Complex64) -> Self {
        Self::Value {
            invariant,
            expected,
        }
    }

    fn monomial(invariant: Invariant, coeff: f64, factors: &[(Invariant, u32)]) -> Self {
        Self::Monomial {
            invariant,
            coeff: cx(coeff),
            factors: factors.to_vec(),
        }
    }

    /// Evaluates the relation with relative tolerance `rtol`; the scale
    /// never drops below `norm^degree` of the invariant involved.
    pub fn evaluate(&self, set: &InvariantSet, norm: f64, rtol: f64) -> CheckOutcome {
        let floor = |inv: Invariant| norm.powi(inv.degree() as i32);
        let (passed, detail) = match self {
            Self::Value {
                invariant,
                expected,
            } => {
                let got = set.get(*invariant);
                (
                    agree(got, *expected, floor(*invariant), rtol),
                    format!("{invariant} = {}", fmt_complex(got)),
                )
            }
            Self::Monomial {
                invariant,
                coeff,
                factors,
            } => {
                let got = set.get(*invariant);
                let rhs = factors
                    .iter()
                    .fold(*coeff, |acc, &(f, p)| acc * set.get(f).powu(p));
                (
                    agree(got, rhs, floor(*invariant), rtol),
                    format!("lhs {} vs rhs {}", fmt_complex(got), fmt_complex(rhs)),
                )
            }
            Self::Distinct(a, b) => {
                let (x, y) = (set.get(*a), set.get(*b));
                let floor = floor(*a).max(floor(*b));
                (
                    !agree(x, y, floor, rtol),
                    format!("{a} = {}, {b} = {}", fmt_complex(x), fmt_complex(y)),
                )
            }
            Self::Among { candidates, values } => {
                let got: Vec<Complex64> = candidates.iter().map(|&c| set.get(c)).collect();
                let floor = candidates.iter().map(|&c| floor(c)).fold(0.0, f64::max);
                (
                    injective_match(values, &got, &mut vec![false; got.len()], floor, rtol),
                    format!(
                        "candidates [{}]",
                        got.iter()
                            .map(|z| fmt_complex(*z))
                            .collect::<Vec<_>>()
                            .join(", ")
                    ),
                )
            }
        };
        CheckOutcome {
            description: self.to_string(),
            passed,
            detail,
        }
    }
}

fn injective_match(
    values: &[Complex64],
    got: &[Complex64],
    used: &mut Vec<bool>,
    floor: f64,
    rtol: f64,
) -> bool {
    let Some((first, rest)) = values.split_first() else {
        return true;
    };
    for k in 0..got.len() {
        if !used[k] && agree(got[k], *first, floor, rtol) {
            used[k] = true;
            if injective_match(rest, got, used, floor, rtol) {
                used[k] = false;
                return true;
            }
            used[k] = false;
        }
    }
    false
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Value {
                invariant,
                expected,
            } => write!(f, "{invariant} = {}", fmt_complex(*expected)),
            Self::Monomial {
                invariant,
                coeff,
                factors,
            } => {
                write!(f, "{invariant} = ")?;
                let terms: Vec<String> = factors
                    .iter()
                    .map(|&(inv, p)| {
                        if p == 1 {
                            inv.to_string()
                        } else {
                            format!("{inv}^{p}")
                        }
                    })
                    .collect();
                let body = terms.join("·");
                if *coeff == cx(1.0) {
                    f.write_str(&body)
                } else if *coeff == cx(-1.0) {
                    write!(f, "-{body}")
                } else {
                    write!(f, "{}·{body}", fmt_complex(*coeff))
                }
            }
            Self::Distinct(a, b) => write!(f, "{a} != {b}"),
            Self::Among { candidates, values } => {
                let c: Vec<String> = candidates.iter().map(|c| c.to_string()).collect();
                let v: Vec<String> = values.iter().map(|v| fmt_complex(*v)).collect();
                write!(f, "{{{}}} contains {{{}}}", c.join(", "), v.join(", "))
            }
        }
    }
}

/// Relations expected for one parameterized representative.
#[derive(Debug, Clone, PartialEq)]
pub struct ExpectedPattern {
    pub checks: Vec<Check>,
}

impl ExpectedPattern {
    pub fn evaluate(&self, state: &PureState4, rtol: f64) -> Vec<CheckOutcome> {
        let set = InvariantSet::of(state);
        let norm = state.norm();
        self.checks
            .iter()
            .map(|c| c.evaluate(&set, norm, rtol))
            .collect()
    }

    pub fn failures(&self, state: &PureState4, rtol: f64) -> Vec<CheckOutcome> {
        self.evaluate(state, rtol)
            .into_iter()
            .filter(|o| !o.passed)
            .collect()
    }
}

// ---------------------------------------------------------------------------
// Catalog entries

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Origin {
    /// Expected values follow from published closed forms.
    ClosedForm,
    /// Expected values were computed once and are pinned for regression.
    Snapshot,
}

pub struct RepresentativeSpec {
    pub name: &'static str,
    /// Family label of the classification the representative comes from.
    pub family: &'static str,
    pub source: &'static str,
    pub params: &'static [ParamSpec],
    pub origin: Origin,
    build: fn(&Args) -> Result<PureState4>,
    pattern: fn(&Args) -> Vec<Check>,
}

impl fmt::Debug for RepresentativeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RepresentativeSpec")
            .field("name", &self.name)
            .field("family", &self.family)
            .finish_non_exhaustive()
    }
}

impl RepresentativeSpec {
    /// Fills defaults and rejects unknown parameter names.
    pub fn args(&self, params: &Params) -> Result<Args<'_>> {
        for key in params.keys() {
            if !self.params.iter().any(|p| p.name == key) {
                return Err(Error::InvalidParameter {
                    entry: self.name.to_string(),
                    reason: format!("unknown parameter `{key}`"),
                });
            }
        }
        let mut values = Params::new();
        for spec in self.params {
            let value = match params.get(spec.name) {
                Some(v) => {
                    let kind_ok = matches!(
                        (spec.kind, v),
                        (ParamKind::Scalar, ParamValue::Scalar(_))
                            | (ParamKind::Vector, ParamValue::Vector(_))
                    );
                    if !kind_ok {
                        return Err(Error::InvalidParameter {
                            entry: self.name.to_string(),
                            reason: format!("parameter `{}` has the wrong kind", spec.name),
                        });
                    }
                    *v
                }
                None => spec.parse(spec.default).expect("catalog defaults parse"),
            };
            values.insert(spec.name.to_string(), value);
        }
        Ok(Args {
            entry: self,
            values,
        })
    }

    /// Parses `name=value` strings against this entry's parameter list.
    pub fn parse_params<'s, I>(&self, assignments: I) -> Result<Params>
    where
        I: IntoIterator<Item = &'s str>,
    {
        let mut out = Params::new();
        for a in assignments {
            let (name, value) = a.split_once('=').ok_or_else(|| Error::InvalidParameter {
                entry: self.name.to_string(),
                reason: format!("expected name=value, got `{a}`"),
            })?;
            let (name, value) = self.parse_param(name, value)?;
            out.insert(name, value);
        }
        Ok(out)
    }

    fn parse_param(&self, name: &str, value: &str) -> Result<(String, ParamValue)> {
        let name = name.trim();
        let spec =
            self.params
                .iter()
                .find(|p| p.name == name)
                .ok_or_else(|| Error::InvalidParameter {
                    entry: self.name.to_string(),
                    reason: format!("unknown parameter `{name}`"),
                })?;
        Ok((name.to_string(), spec.parse(value.trim())?))
    }

    pub fn build(&self, params: &Params) -> Result<PureState4> {
        (self.build)(&self.args(params)?)
    }

    pub fn expected_pattern(&self, params: &Params) -> Result<ExpectedPattern> {
        let args = self.args(params)?;
        Ok(ExpectedPattern {
            checks: (self.pattern)(&args),
        })
    }
}

pub fn entries() -> &'static [RepresentativeSpec] {
    ENTRIES
}

pub fn lookup(name: &str) -> Result<&'static RepresentativeSpec> {
    ENTRIES
        .iter()
        .find(|e| e.name.eq_ignore_ascii_case(name))
        .ok_or_else(|| Error::UnknownEntry(name.to_string()))
}

pub fn build_representative(name: &str, params: &Params) -> Result<PureState4> {
    lookup(name)?.build(params)
}

pub fn expected_pattern(name: &str, params: &Params) -> Result<ExpectedPattern> {
    lookup(name)?.expected_pattern(params)
}

// ---------------------------------------------------------------------------
// Constructors

fn ket(terms: &[(f64, &str)]) -> PureState4 {
    PureState4::from_terms(terms.iter().map(|&(c, l)| (cx(c), l))).expect("static labels")
}

/// Normalized Dicke state with `k` excitations.
pub fn build_dicke(k: i64) -> Result<PureState4> {
    if !(0..=4).contains(&k) {
        return Err(Error::DickeOutOfRange(k));
    }
    let members: Vec<usize> = (0..DIM).filter(|i| i.count_ones() as i64 == k).collect();
    let amp = cx((members.len() as f64).sqrt().recip());
    let mut amps = [cx(0.0); DIM];
    for i in members {
        amps[i] = amp;
    }
    Ok(PureState4::new(amps))
}

/// `|0000> + |1111> + μ D4^(2)`, without the `μ² ≠ 2/3` restriction.
pub fn x_family(mu: Complex64) -> PureState4 {
    ket(&[(1.0, "0000"), (1.0, "1111")]) + build_dicke(2).expect("k = 2").scaled(mu)
}

/// `G_abcd` with `b = c = 0`:
/// `(a+d)/2 (|0000> + |1111>) + (a−d)/2 (|0011> + |1100>)`.
pub fn g_ab00(a: Complex64, d: Complex64) -> PureState4 {
    let (p, m) = ((a + d) / 2.0, (a - d) / 2.0);
    PureState4::from_terms([(p, "0000"), (p, "1111"), (m, "0011"), (m, "1100")])
        .expect("static labels")
}

fn product(vs: [[Complex64; 2]; 4]) -> PureState4 {
    PureState4::product(vs)
}

const ZERO_V: [Complex64; 2] = [Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)];
const ONE_V: [Complex64; 2] = [Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)];

// ---------------------------------------------------------------------------
// Patterns

fn all_zero() -> Vec<Check> {
    Invariant::GENERATORS
        .iter()
        .map(|&i| Check::value(i, cx(0.0)))
        .chain([Check::value(Invariant::D, cx(0.0))])
        .collect()
}

fn ghz_like(a: Complex64) -> Vec<Check> {
    vec![
        Check::value(Invariant::A, a),
        Check::monomial(Invariant::B1, 1.0, &[(Invariant::A, 2)]),
        Check::monomial(Invariant::B2, 1.0, &[(Invariant::A, 2)]),
        Check::monomial(Invariant::B3, 1.0, &[(Invariant::A, 2)]),
        Check::monomial(Invariant::C, -1.0, &[(Invariant::A, 3)]),
    ]
}

fn symmetric_b() -> Vec<Check> {
    [Invariant::B1, Invariant::B2, Invariant::B3]
        .iter()
        .map(|&b| Check::monomial(b, 1.0, &[(Invariant::A, 2)]))
        .collect()
}

fn symmetric_values(a: Complex64, c: Complex64, d: Complex64) -> Vec<Check> {
    let mut checks = vec![
        Check::value(Invariant::A, a),
        Check::value(Invariant::C, c),
        Check::value(Invariant::D, d),
    ];
    checks.extend(symmetric_b());
    checks
}

/// `B1 ≠ B2`, `B3 = B2` and `C = −A·B2`.
fn split_b_pattern() -> Vec<Check> {
    vec![
        Check::Distinct(Invariant::B1, Invariant::B2),
        Check::monomial(Invariant::B3, 1.0, &[(Invariant::B2, 1)]),
        Check::monomial(Invariant::C, -1.0, &[(Invariant::A, 1), (Invariant::B2, 1)]),
    ]
}

/// Closed forms along the symmetric X family.
pub fn x_family_closed_forms(mu: Complex64) -> (Complex64, Complex64, Complex64) {
    let mu2 = mu * mu;
    let mu4 = mu2 * mu2;
    let mu6 = mu4 * mu2;
    let a = 2.0 + mu2;
    let c = -8.0 + 4.0 * mu2 - (102.0 * mu4 + 5.0 * mu6) / 9.0;
    let t = 2.0 - 3.0 * mu2;
    let d = -8.0 / 9.0 * t * t;
    (a, c, d)
}

/// `(α, β1, β2, γ)` for `G_ab00(a, d)`.
pub fn g_ab00_closed_forms(
    a: Complex64,
    d: Complex64,
) -> (Complex64, Complex64, Complex64, Complex64) {
    let (a2, d2) = (a * a, d * d);
    (
        a2 + d2,
        3.0 * a2 * a2 - 2.0 * a2 * d2 + 3.0 * d2 * d2,
        4.0 * a2 * d2,
        -4.0 * a2 * d2 * (a2 + d2),
    )
}

// ---------------------------------------------------------------------------
// Table

static ENTRIES: &[RepresentativeSpec] = &[
    RepresentativeSpec {
        name: "sym-D4",
        family: "D_{4}",
        source: "symmetric degeneracy configuration D_{4}: D4^(0) (separable)",
        params: &[],
        origin: Origin::ClosedForm,
        build: |_| build_dicke(0),
        pattern: |_| {
            let mut c = all_zero();
            c.extend(symmetric_b());
            c
        },
    },
    RepresentativeSpec {
        name: "sym-D31",
        family: "D_{3,1}",
        source: "symmetric degeneracy configuration D_{3,1}: D4^(1) (W type)",
        params: &[],
        origin: Origin::ClosedForm,
        build: |_| build_dicke(1),
        pattern: |_| {
            let mut c = all_zero();
            c.extend(symmetric_b());
            c
        },
    },
    RepresentativeSpec {
        name: "sym-D22",
        family: "D_{2,2}",
        source: "symmetric degeneracy configuration D_{2,2}: D4^(2)",
        params: &[],
        origin: Origin::ClosedForm,
        build: |_| build_dicke(2),
        pattern: |_| symmetric_values(cx(1.0), cx(-5.0 / 9.0), cx(0.0)),
    },
    RepresentativeSpec {
        name: "sym-D211",
        family: "D_{2,1,1}",
        source: "symmetric degeneracy configuration D_{2,1,1}: D4^(0) + D4^(2)",
        params: &[],
        origin: Origin::ClosedForm,
        build: |_| Ok(build_dicke(0)? + build_dicke(2)?),
        pattern: |_| symmetric_values(cx(1.0), cx(-5.0 / 9.0), cx(0.0)),
    },
    RepresentativeSpec {
        name: "sym-D1111",
        family: "D_{1,1,1,1}",
        source: "symmetric degeneracy configuration D_{1,1,1,1}: |0000> + |1111> + mu D4^(2), mu^2 != 2/3 (X type)",
        params: &[scalar("mu", "0.5")],
        origin: Origin::ClosedForm,
        build: |args| {
            let mu = args.scalar("mu");
            if (mu * mu - 2.0 / 3.0).norm() <= X_FAMILY_EXCLUDED_TOL {
                return Err(args.invalid("mu^2 = 2/3 is excluded from this family"));
            }
            Ok(x_family(mu))
        },
        pattern: |args| {
            let (a, c, d) = x_family_closed_forms(args.scalar("mu"));
            symmetric_values(a, c, d)
        },
    },
    RepresentativeSpec {
        name: "W000_0kPsi_b",
        family: "W_{000,0_kPsi} b)",
        source: "LLSS representative 1: |0000> + |1101> + |1110>",
        params: &[],
        origin: Origin::ClosedForm,
        build: |_| Ok(ket(&[(1.0, "0000"), (1.0, "1101"), (1.0, "1110")])),
        pattern: |_| all_zero(),
    },
    RepresentativeSpec {
        name: "W4",
        family: "W_{000,W}",
        source: "LLSS representative 2: |0001> + |0010> + |0100> + |1000>",
        params: &[],
        origin: Origin::ClosedForm,
        build: |_| Ok(ket(&[(1.0, "0001"), (1.0, "0010"), (1.0, "0100"), (1.0, "1000")])),
        pattern: |_| all_zero(),
    },
    RepresentativeSpec {
        name: "GHZ",
        family: "W_{000,000}",
        source: "LLSS representative 3: |0000> + |1111>",
        params: &[],
        origin: Origin::ClosedForm,
        build: |_| Ok(ket(&[(1.0, "0000"), (1.0, "1111")])),
        pattern: |_| ghz_like(cx(2.0)),
    },
    RepresentativeSpec {
        name: "W000_0kPsi_a",
        family: "W_{000,0_kPsi} a)",
        source: "LLSS representative 4: |0000> + |1100> + |1111>",
        params: &[],
        origin: Origin::ClosedForm,
        build: |_| Ok(ket(&[(1.0, "0000"), (1.0, "1100"), (1.0, "1111")])),
        pattern: |_| ghz_like(cx(2.0)),
    },
    RepresentativeSpec {
        name: "W000_GHZ",
        family: "W_{000,GHZ}",
        source: "LLSS representative 5: |0 varphi phi psi> + |1000> + |1111>",
        params: &[vector("varphi", "1,1"), vector("phi", "2,1"), vector("psi", "1,-1")],
        origin: Origin::ClosedForm,
        build: |args| {
            let [vp, ph, ps] = ["varphi", "phi", "psi"].map(|n| args.vector(n).components());
            Ok(product([ZERO_V, vp, ph, ps]) + ket(&[(1.0, "1000"), (1.0, "1111")]))
        },
        pattern: |args| {
            let [vp, ph, ps] = ["varphi", "phi", "psi"].map(|n| args.vector(n));
            ghz_like(2.0 * (vp.v0 * ph.v0 * ps.v0 - vp.v1 * ph.v1 * ps.v1))
        },
    },
    RepresentativeSpec {
        name: "W0kPsi_0jPsi_a",
        family: "W_{0_kPsi,0_jPsi} a)",
        source: "LLSS representative 6: |0 phi 00> + |0 phi 1 psi> + |1000> + |1101>",
        params: &[vector("phi", "1,2"), vector("psi", "1,1")],
        origin: Origin::ClosedForm,
        build: |args| {
            let [ph, ps] = ["phi", "psi"].map(|n| args.vector(n).components());
            Ok(product([ZERO_V, ph, ZERO_V, ZERO_V])
                + product([ZERO_V, ph, ONE_V, ps])
                + ket(&[(1.0, "1000"), (1.0, "1101")]))
        },
        pattern: |args| {
            let [ph, ps] = ["phi", "psi"].map(|n| args.vector(n));
            ghz_like(-2.0 * (ph.v0 * ps.v0 + ph.v1 * ps.v1))
        },
    },
    RepresentativeSpec {
        name: "W0kPsi_0jPsi_b",
        family: "W_{0_kPsi,0_jPsi} b)",
        source: "LLSS representative 7: |0 phi 0 psi> + |0 phi 10> + |1000> + |1101>",
        params: &[vector("phi", "1,2"), vector("psi", "1,1")],
        origin: Origin::ClosedForm,
        build: |args| {
            let [ph, ps] = ["phi", "psi"].map(|n| args.vector(n).components());
            Ok(product([ZERO_V, ph, ZERO_V, ps])
                + product([ZERO_V, ph, ONE_V, ZERO_V])
                + ket(&[(1.0, "1000"), (1.0, "1101")]))
        },
        pattern: |args| ghz_like(-2.0 * args.vector("phi").v0),
    },
    RepresentativeSpec {
        name: "W0kPsi_0kPsi_a",
        family: "W_{0_kPsi,0_kPsi} a)",
        source: "LLSS representative 8: |0000> + |1100> + lambda1 |0011> + lambda2 |1111> (cluster state at lambda1 = 1, lambda2 = -1)",
        params: &[scalar("lambda1", "1"), scalar("lambda2", "2")],
        origin: Origin::Snapshot,
        build: |args| {
            args.nonzero("lambda1")?;
            args.nonzero("lambda2")?;
            let (l1, l2) = (args.scalar("lambda1"), args.scalar("lambda2"));
            Ok(ket(&[(1.0, "0000"), (1.0, "1100")])
                + PureState4::from_terms([(l1, "0011"), (l2, "1111")])?)
        },
        pattern: |args| {
            let mut c = vec![Check::value(
                Invariant::A,
                2.0 * (args.scalar("lambda1") + args.scalar("lambda2")),
            )];
            c.extend(split_b_pattern());
            c
        },
    },
    RepresentativeSpec {
        name: "W0kPsi_0kPsi_b",
        family: "W_{0_kPsi,0_kPsi} b)",
        source: "LLSS representative 9: |0000> + |1100> + lambda1 (|0001> + |0010>) + lambda2 (|1101> + |1110>)",
        params: &[scalar("lambda1", "1"), scalar("lambda2", "2")],
        origin: Origin::ClosedForm,
        build: |args| {
            args.nonzero("lambda1")?;
            args.nonzero("lambda2")?;
            let (l1, l2) = (args.scalar("lambda1"), args.scalar("lambda2"));
            Ok(ket(&[(1.0, "0000"), (1.0, "1100")])
                + PureState4::from_terms([(l1, "0001"), (l1, "0010"), (l2, "1101"), (l2, "1110")])?)
        },
        pattern: |args| {
            let a5 = -4.0 * args.scalar("lambda1") * args.scalar("lambda2");
            vec![
                Check::value(Invariant::A, a5),
                Check::monomial(Invariant::B1, 3.0, &[(Invariant::A, 2)]),
                Check::value(Invariant::B2, cx(0.0)),
                Check::value(Invariant::B3, cx(0.0)),
                Check::value(Invariant::C, cx(0.0)),
            ]
        },
    },
    RepresentativeSpec {
        name: "W0kPsi_GHZ",
        family: "W_{0_kPsi,GHZ}",
        source: "LLSS representative 10: |0 varphi> (x) (|phi psi> + |phibar psibar>) + |1000> + |1111>",
        params: &[
            vector("varphi", "1,1"),
            vector("phi", "1,0"),
            vector("psi", "1,2"),
            vector("phibar", "0,1"),
            vector("psibar", "1,-1"),
        ],
        origin: Origin::Snapshot,
        build: |args| {
            args.independent("phi", "phibar")?;
            args.independent("psi", "psibar")?;
            let [vp, ph, ps, phb, psb] =
                ["varphi", "phi", "psi", "phibar", "psibar"].map(|n| args.vector(n).components());
            Ok(product([ZERO_V, vp, ph, ps])
                + product([ZERO_V, vp, phb, psb])
                + ket(&[(1.0, "1000"), (1.0, "1111")]))
        },
        pattern: |_| split_b_pattern(),
    },
    RepresentativeSpec {
        name: "WGHZ_W",
        family: "W_{GHZ,W}",
        source: "LLSS representative 11: |0001> + |0010> + |0100> + |1 varphi phi psi> + |1 varphibar phibar psibar> (contains the X state)",
        params: &[
            vector("varphi", "1,0"),
            vector("phi", "1,1"),
            vector("psi", "0,1"),
            vector("varphibar", "1,2"),
            vector("phibar", "1,-1"),
            vector("psibar", "2,1"),
        ],
        origin: Origin::Snapshot,
        build: |args| {
            args.independent("varphi", "varphibar")?;
            args.independent("phi", "phibar")?;
            args.independent("psi", "psibar")?;
            let [vp, ph, ps, vpb, phb, psb] = ["varphi", "phi", "psi", "varphibar", "phibar", "psibar"]
                .map(|n| args.vector(n).components());
            Ok(ket(&[(1.0, "0001"), (1.0, "0010"), (1.0, "0100")])
                + product([ONE_V, vp, ph, ps])
                + product([ONE_V, vpb, phb, psb]))
        },
        pattern: |_| Vec::new(),
    },
    RepresentativeSpec {
        name: "X4",
        family: "X",
        source: "X state: |0001> + |0010> + |0100> + |1000> + sqrt(2) |1111>",
        params: &[],
        origin: Origin::Snapshot,
        build: |_| {
            Ok(ket(&[
                (1.0, "0001"),
                (1.0, "0010"),
                (1.0, "0100"),
                (1.0, "1000"),
                (2f64.sqrt(), "1111"),
            ]))
        },
        pattern: |_| {
            vec![
                Check::value(Invariant::A, cx(0.0)),
                Check::value(Invariant::B1, cx(0.0)),
                Check::value(Invariant::B2, cx(0.0)),
                Check::value(Invariant::B3, cx(0.0)),
                Check::value(Invariant::C, cx(192.0)),
                Check::value(Invariant::X, cx(36864.0)),
            ]
        },
    },
    RepresentativeSpec {
        name: "cluster",
        family: "cluster",
        source: "cluster state |0000> + |1100> + |0011> - |1111> (LLSS representative 8 at lambda1 = 1, lambda2 = -1)",
        params: &[],
        origin: Origin::Snapshot,
        build: |_| Ok(ket(&[(1.0, "0000"), (1.0, "1100"), (1.0, "0011"), (-1.0, "1111")])),
        pattern: |_| {
            vec![
                Check::value(Invariant::A, cx(0.0)),
                Check::value(Invariant::B1, cx(-32.0)),
                Check::value(Invariant::B2, cx(16.0)),
                Check::value(Invariant::B3, cx(16.0)),
                Check::value(Invariant::C, cx(0.0)),
                Check::value(Invariant::L, cx(0.0)),
                Check::value(Invariant::M, cx(1.0)),
                Check::value(Invariant::N, cx(-1.0)),
                Check::value(Invariant::X, cx(0.0)),
            ]
        },
    },
    RepresentativeSpec {
        name: "G_ab00",
        family: "G_abcd (b = c = 0)",
        source: "G_abcd slice b = c = 0: (a+d)/2 (|0000> + |1111>) + (a-d)/2 (|0011> + |1100>)",
        params: &[scalar("a", "1"), scalar("d", "2")],
        origin: Origin::ClosedForm,
        build: |args| Ok(g_ab00(args.scalar("a"), args.scalar("d"))),
        pattern: |args| {
            let (alpha, beta1, beta2, gamma) = g_ab00_closed_forms(args.scalar("a"), args.scalar("d"));
            vec![
                Check::value(Invariant::A, alpha),
                Check::Among {
                    candidates: vec![Invariant::B1, Invariant::B2, Invariant::B3],
                    values: vec![beta1, beta2],
                },
                Check::value(Invariant::C, gamma),
            ]
        },
    },
    RepresentativeSpec {
        name: "D4",
        family: "Dicke",
        source: "normalized Dicke state D4^(k) with k excitations",
        params: &[scalar("k", "2")],
        origin: Origin::ClosedForm,
        build: |args| build_dicke(dicke_k(args)?),
        pattern: |args| match dicke_k(args) {
            Ok(2) => symmetric_values(cx(1.0), cx(-5.0 / 9.0), cx(0.0)),
            _ => {
                let mut c = all_zero();
                c.extend(symmetric_b());
                c
            }
        },
    },
];

fn dicke_k(args: &Args) -> Result<i64> {
    let k = args.scalar("k");
    if k.im != 0.0 || k.re.fract() != 0.0 {
        return Err(args.invalid("k must be an integer"));
    }
    let k = k.re as i64;
    if !(0..=4).contains(&k) {
        return Err(Error::DickeOutOfRange(k));
    }
    Ok(k)
}

// ---------------------------------------------------------------------------
// Fixture file

/// One record of the catalog fixture file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Fixture {
    pub name: String,
    pub family: String,
    pub origin: Origin,
    /// Parameter values as `name=value` strings.
    pub params: BTreeMap<String, String>,
    pub expected: InvariantSet,
}

impl Fixture {
    pub fn state(&self) -> Result<PureState4> {
        let entry = lookup(&self.name)?;
        let params = self
            .params
            .iter()
            .map(|(k, v)| entry.parse_param(k, v))
            .collect::<Result<Params>>()?;
        entry.build(&params)
    }
}

const FIXTURE_JSON: &str = include_str!("../fixtures/catalog.json");

/// Pinned invariant values for every catalog entry at its default
/// parameters.
pub fn fixtures() -> &'static [Fixture] {
    static CELL: OnceLock<Vec<Fixture>> = OnceLock::new();
    CELL.get_or_init(|| serde_json::from_str(FIXTURE_JSON).expect("bundled fixture file parses"))
}

/// Compact complex formatting: `2`, `-0.5i`, `1+2i`.
pub fn fmt_complex(z: Complex64) -> String {
    match (z.re == 0.0, z.im == 0.0) {
        (_, true) => format!("{}", z.re + 0.0),
        (true, false) => format!("{}i", z.im),
        (false, false) => {
            let sign = if z.im < 0.0 { '-' } else { '+' };
            format!("{}{sign}{}i", z.re, z.im.abs())
        }
    }
}
