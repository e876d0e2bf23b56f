//! Problem files: a TOML document with a signature and two string arrays.
//!
//! ```toml
//! points = ["0", "1 + i", "i", "j", "k"]
//! values = ["1", "-1", "1", "k", "-j"]
//!
//! [signature]
//! p = 0
//! q = 2
//! ```

use std::path::Path;

use clifflag::lagrange::InterpolationProblem;
use serde::Deserialize;

use crate::failure::{Failure, GENERAL};
use crate::signature::signature;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub signature: SignatureSpec,
    pub points: Vec<String>,
    pub values: Vec<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SignatureSpec {
    pub p: u8,
    pub q: u8,
}

impl ProblemFile {
    pub fn read(path: &Path) -> Result<Self, Failure> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::new(GENERAL, format!("cannot read {}: {e}", path.display())))?;
        toml::from_str(&text)
            .map_err(|e| Failure::parse(format!("{}: {}", path.display(), e.message())))
    }

    pub fn to_problem(&self, cap: u8) -> Result<InterpolationProblem, Failure> {
        if self.points.is_empty() {
            return Err(Failure::parse("problem file lists no points"));
        }
        let sig = signature(self.signature.p, self.signature.q, cap)?;
        let labelled = |kind: &str, i: usize, e: clifflag::Error| {
            let mut f = Failure::from(e);
            f.message = format!("{kind} {}: {}", i + 1, f.message);
            f
        };
        if self.points.len() != self.values.len() {
            return Err(clifflag::Error::LengthMismatch {
                points: self.points.len(),
                values: self.values.len(),
            }
            .into());
        }
        let mut pairs = Vec::with_capacity(self.points.len());
        for (i, (x, w)) in self.points.iter().zip(&self.values).enumerate() {
            let x = clifflag::Multivector::parse(sig, x).map_err(|e| labelled("point", i, e))?;
            let w = clifflag::Multivector::parse(sig, w).map_err(|e| labelled("value", i, e))?;
            pairs.push((x, w));
        }
        Ok(InterpolationProblem::new(sig, pairs)?)
    }
}
