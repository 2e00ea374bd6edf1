use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Division of `s - p + 1` by `p - 1` used by the even-path constructions:
/// `s - p + 1 = a(p - 1) + b` with `0 <= b <= p - 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvenPathParams {
    pub p: usize,
    pub s: usize,
    pub a: usize,
    pub b: usize,
}

/// Parameters of the odd-path constructions:
/// `q = ⌊(s-p+1)/(p-1)⌋`, `t = s - (q+1)(p-1)`, `c = ⌊(s-p+1)/p⌋`,
/// `d = s - p + 1 - cp`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OddPathParams {
    pub p: usize,
    pub s: usize,
    pub q: usize,
    pub t: usize,
    pub c: usize,
    pub d: usize,
}

fn check(p: usize, s: usize) -> Result<()> {
    if p < 2 {
        return Err(Error::InvalidParams(format!("p must be at least 2, got {p}")));
    }
    if s < p {
        return Err(Error::InvalidParams(format!("s must be at least p = {p}, got {s}")));
    }
    Ok(())
}

pub fn derive_even_params(p: usize, s: usize) -> Result<EvenPathParams> {
    check(p, s)?;
    let excess = s - p + 1;
    let a = excess / (p - 1);
    let b = s - (a + 1) * (p - 1);
    Ok(EvenPathParams { p, s, a, b })
}

pub fn derive_odd_params(p: usize, s: usize) -> Result<OddPathParams> {
    check(p, s)?;
    let excess = s - p + 1;
    let q = excess / (p - 1);
    let t = s - (q + 1) * (p - 1);
    let c = excess / p;
    let d = excess - c * p;
    Ok(OddPathParams { p, s, q, t, c, d })
}
