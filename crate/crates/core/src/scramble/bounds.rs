use crate::error::{Error, Result};

/// `3·sn − n`, the carton lower bound valid when every degree is below `sn`.
pub fn carton_lower_bound(sn: u64, n: u64, max_degree: u64) -> Result<i64> {
    if max_degree >= sn {
        return Err(Error::PreconditionViolated(format!(
            "maximum degree {max_degree} is not below scramble number {sn}"
        )));
    }
    Ok(3 * sn as i64 - n as i64)
}

fn check(n: u64, c: f64, eps: Option<f64>) -> Result<()> {
    if n == 0 || c <= 1.0 || !c.is_finite() || eps.is_some_and(|e| e <= 0.0 || !e.is_finite()) {
        return Err(Error::BadParams(format!("need n >= 1, c > 1, eps > 0 (n = {n}, c = {c}, eps = {eps:?})")));
    }
    Ok(())
}

/// `⌈c·n^(1/2+ε)⌉`, the order at which the size bound applies.
pub fn required_order(n: u64, c: f64, eps: f64) -> Result<u64> {
    check(n, c, Some(eps))?;
    Ok((c * (n as f64).powf(0.5 + eps)).ceil() as u64)
}

/// `exp(c·n^ε/(d+1))`: fewest eggs in a scramble of order at least
/// [`required_order`] on an `n`-vertex graph of maximum degree `d`.
pub fn scramble_size_lower_bound(n: u64, d: u64, c: f64, eps: f64) -> Result<f64> {
    check(n, c, Some(eps))?;
    Ok((c * (n as f64).powf(eps) / (d as f64 + 1.0)).exp())
}

/// `c·√n/(d+1)`: fewest vertices in any egg of such a scramble.
pub fn min_egg_size(n: u64, d: u64, c: f64) -> Result<f64> {
    check(n, c, None)?;
    Ok(c * (n as f64).sqrt() / (d as f64 + 1.0))
}
