use clifflag::clifford::MAX_DIM;
use clifflag::Signature;

use crate::failure::Failure;

pub const CAP_VAR: &str = "CLIFFLAG_MAX_DIM";

/// The `p + q` cap: `CLIFFLAG_MAX_DIM` if set, otherwise the hard limit.
pub fn dimension_cap() -> Result<u8, Failure> {
    match std::env::var(CAP_VAR) {
        Err(_) => Ok(MAX_DIM),
        Ok(raw) => match raw.trim().parse::<u8>() {
            Ok(cap) if cap <= MAX_DIM => Ok(cap),
            _ => Err(Failure::parse(format!(
                "{CAP_VAR} must be an integer between 0 and {MAX_DIM}, got {raw:?}"
            ))),
        },
    }
}

pub fn signature(p: u8, q: u8, cap: u8) -> Result<Signature, Failure> {
    Ok(Signature::with_cap(p, q, cap)?)
}

/// Parse `p,q`.
pub fn parse_pair(s: &str) -> Result<(u8, u8), String> {
    let (p, q) = s
        .split_once(',')
        .ok_or_else(|| format!("expected p,q but got {s:?}"))?;
    let num = |t: &str| {
        t.trim()
            .parse::<u8>()
            .map_err(|_| format!("{t:?} is not a small non-negative integer"))
    };
    Ok((num(p)?, num(q)?))
}
