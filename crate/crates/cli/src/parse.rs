//! Text forms accepted on the command line.

use anyhow::{anyhow, bail, Context, Result};
use dissect_core::exactnum::{AngleMode, QuadraticNumber};
use dissect_core::tiling::Region;

/// `pi/3`, `π/4` or `1/6` (a multiple of π).
pub fn angle(s: &str) -> Result<AngleMode> {
    let body = s.trim().trim_start_matches("pi").trim_start_matches('π');
    let (p, q) = match body.split_once('/') {
        Some((p, q)) => (if p.is_empty() { "1" } else { p }, q),
        None => bail!("angle {s:?} is not of the form pi/q"),
    };
    let p: i64 = p.parse().with_context(|| format!("bad angle numerator in {s:?}"))?;
    let q: i64 = q.parse().with_context(|| format!("bad angle denominator in {s:?}"))?;
    AngleMode::bound(p, q).map_err(|e| anyhow!("{e}"))
}

/// Radicand of the field holding the trapezoid with acute angle `mode`.
pub fn field_of(mode: AngleMode) -> u32 {
    match mode {
        AngleMode::BoundAlpha { p: 1, q: 4 } => 2,
        _ => 3,
    }
}

pub fn number(s: &str, d: u32) -> Result<QuadraticNumber> {
    QuadraticNumber::parse(s, d).map_err(|e| anyhow!("{e}"))
}

/// `WxH`, e.g. `√3x√3` or `2×1`.
pub fn region(s: &str, d: u32) -> Result<Region> {
    let (w, h) = s
        .split_once('x')
        .or_else(|| s.split_once('×'))
        .ok_or_else(|| anyhow!("region {s:?} is not of the form WxH"))?;
    let (w, h) = (number(w, d)?, number(h, d)?);
    let lift = |q: QuadraticNumber| {
        if q.radicand() == d || !q.is_rational() {
            q
        } else {
            QuadraticNumber::from_rational(q.rat().clone(), d)
        }
    };
    Region::new(lift(w), lift(h)).map_err(|e| anyhow!("{e}"))
}

/// `1..3`, `2..=4` or `1,2,5`.
pub fn counts(s: &str) -> Result<Vec<usize>> {
    let bad = || anyhow!("tile counts {s:?} are not a range or list");
    if let Some((a, b)) = s.split_once("..") {
        let a: usize = a.parse().map_err(|_| bad())?;
        let b: usize = b.trim_start_matches('=').parse().map_err(|_| bad())?;
        return Ok((a..=b).collect());
    }
    s.split(',').map(|p| p.trim().parse().map_err(|_| bad())).collect()
}
