//! Resolving `--ket`, `--file` and `--catalog` arguments into states.

use std::fs;
use std::io::Read;

use clap::ValueEnum;
use tangle_core::catalog::{self, Params};
use tangle_core::ket::parse_ket;
use tangle_core::{Error, PureState4};

use crate::Failure;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    /// `{"amplitudes": [[re, im], ...]}` with 16 entries
    Json,
    /// Ket-sum text such as `|0000> + |1111>`
    Ket,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Source {
    Ket(String),
    File(String),
    Catalog(String),
}

impl Source {
    pub fn load(&self, format: InputFormat) -> Result<PureState4, Failure> {
        match self {
            Source::Ket(text) => Ok(parse_ket(text)?),
            Source::File(path) => {
                let text = read_file(path)?;
                Ok(match format {
                    InputFormat::Json => PureState4::from_json(&text)?,
                    InputFormat::Ket => parse_ket(text.trim())?,
                })
            }
            Source::Catalog(reference) => {
                let (name, params) = parse_catalog_ref(reference)?;
                Ok(catalog::build_representative(&name, &params)?)
            }
        }
    }
}

fn read_file(path: &str) -> Result<String, Failure> {
    let result = if path == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf).map(|_| buf)
    } else {
        fs::read_to_string(path)
    };
    result.map_err(|e| Failure::Usage(format!("cannot read `{path}`: {e}")))
}

/// `NAME` or `NAME:k=v;k=v`. Vector values keep their comma, e.g.
/// `W000_GHZ:phi=1,2i;psi=1,-1`.
pub fn parse_catalog_ref(reference: &str) -> Result<(String, Params), Error> {
    let (name, rest) = match reference.split_once(':') {
        Some((name, rest)) => (name.trim(), rest),
        None => (reference.trim(), ""),
    };
    let entry = catalog::lookup(name)?;
    let assignments = rest.split(';').map(str::trim).filter(|s| !s.is_empty());
    Ok((entry.name.to_string(), entry.parse_params(assignments)?))
}
