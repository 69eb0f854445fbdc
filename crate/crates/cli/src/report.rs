//! Output structures and table rendering.

use num_complex::Complex64;
use serde::Serialize;
use tangle_core::classifier::{FamilyLabel, Verdict};
use tangle_core::invariants::{Invariant, InvariantSet, TangleMagnitudes};

/// Rounds to 12 significant digits and prints the shortest form.
pub fn sig12(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    let rounded: f64 = format!("{x:.11e}").parse().expect("formatted float parses");
    let rounded = rounded + 0.0;
    if rounded != 0.0 && !(1e-4..1e15).contains(&rounded.abs()) {
        format!("{rounded:e}")
    } else {
        format!("{rounded}")
    }
}

pub fn complex12(z: Complex64) -> String {
    let (re, im) = (sig12(z.re), sig12(z.im.abs()));
    let sign = if z.im.is_sign_negative() && z.im != 0.0 {
        '-'
    } else {
        '+'
    };
    format!("{re} {sign} {im}i")
}

#[derive(Debug, Serialize)]
pub struct InvariantsReport {
    pub invariants: InvariantSet,
    pub magnitudes: TangleMagnitudes,
}

impl InvariantsReport {
    pub fn table(&self) -> String {
        let mut out = format!("{:<4} {:<44} {}\n", "inv", "value", "magnitude");
        for inv in Invariant::ALL {
            out.push_str(&format!(
                "{:<4} {:<44} {}\n",
                inv.name(),
                complex12(self.invariants.get(inv)),
                sig12(self.magnitudes.get(inv))
            ));
        }
        out
    }
}

pub fn label_table(label: &FamilyLabel) -> String {
    let mut out = format!("family          {}\n", label.general);
    if let Some(level) = label.symmetric_level {
        out.push_str(&format!("symmetricLevel  {level}\n"));
    }
    out
}

pub fn verdict_table(verdict: &Verdict) -> String {
    let mut out = format!("outcome  {}\n", verdict.outcome);
    for w in &verdict.witnesses {
        out.push_str(&format!(
            "witness  {:<6} lhs {:<44} rhs {}\n",
            w.pair,
            complex12(w.lhs),
            complex12(w.rhs)
        ));
    }
    out
}

#[derive(Debug, Serialize)]
pub struct ParamInfo {
    pub name: &'static str,
    pub kind: &'static str,
    pub default: &'static str,
}

#[derive(Debug, Serialize)]
pub struct EntryInfo {
    pub name: &'static str,
    pub family: &'static str,
    pub source: &'static str,
    pub origin: tangle_core::catalog::Origin,
    pub params: Vec<ParamInfo>,
}

#[derive(Debug, Serialize)]
pub struct CheckInfo {
    pub check: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Serialize)]
pub struct EntryDetail {
    #[serde(flatten)]
    pub info: EntryInfo,
    pub values: std::collections::BTreeMap<String, String>,
    pub ket: String,
    pub invariants: InvariantSet,
    pub checks: Vec<CheckInfo>,
    /// Pinned fixture values, present when the parameters are the defaults.
    pub pinned: Option<InvariantSet>,
}

impl EntryDetail {
    pub fn table(&self) -> String {
        let mut out = format!(
            "name    {}\nfamily  {}\nsource  {}\norigin  {}\nstate   {}\n",
            self.info.name,
            self.info.family,
            self.info.source,
            serde_json::to_value(self.info.origin)
                .expect("origin serializes")
                .as_str()
                .unwrap_or(""),
            self.ket
        );
        for (k, v) in &self.values {
            out.push_str(&format!("param   {k} = {v}\n"));
        }
        for inv in Invariant::ALL {
            out.push_str(&format!(
                "{:<7} {}\n",
                inv.name(),
                complex12(self.invariants.get(inv))
            ));
        }
        for c in &self.checks {
            let mark = if c.passed { "ok  " } else { "FAIL" };
            out.push_str(&format!("check   {mark} {}  [{}]\n", c.check, c.detail));
        }
        out
    }
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct OrbitReport {
    pub samples: usize,
    pub seed: u64,
    pub agreement: f64,
    pub family: String,
    pub max_deviation: f64,
    pub worst_invariant: Option<String>,
    pub worst_sample: Option<u64>,
    pub deviation_failures: Vec<u64>,
    pub family_mismatches: Vec<u64>,
    pub pass: bool,
}

impl OrbitReport {
    pub fn table(&self) -> String {
        let mut out = format!(
            "samples        {}\nseed           {}\nfamily         {}\nmax deviation  {}",
            self.samples,
            self.seed,
            self.family,
            sig12(self.max_deviation)
        );
        if let (Some(inv), Some(i)) = (&self.worst_invariant, self.worst_sample) {
            out.push_str(&format!(" ({inv}, sample {i})"));
        }
        out.push('\n');
        if !self.deviation_failures.is_empty() {
            out.push_str(&format!(
                "deviation > {}: samples {:?}\n",
                sig12(self.agreement),
                self.deviation_failures
            ));
        }
        if !self.family_mismatches.is_empty() {
            out.push_str(&format!(
                "family changed: samples {:?}\n",
                self.family_mismatches
            ));
        }
        out.push_str(if self.pass {
            "result         pass\n"
        } else {
            "result         FAIL\n"
        });
        out
    }
}
