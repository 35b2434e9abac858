//! Exact rational handling for the Riesz parameter `s`.
//!
//! Parity statements like `s·j ∈ 2ℤ` are meaningless in floating point, so
//! `s` is carried as an exact rational whenever the input admits one (integer,
//! fraction string, or a short decimal). Scans and reports all work on these
//! exact values; only the analytic evaluations convert to `f64`.

use num_rational::Ratio;
use num_traits::{Signed, Zero};

use crate::error::{JtError, Result};

/// Exact rational scalar.
pub type Rat = Ratio<i64>;

/// Build a rational from an integer.
pub fn rat(n: i64) -> Rat {
    Ratio::from_integer(n)
}

/// Build a rational from numerator and denominator.
pub fn ratio(num: i64, den: i64) -> Rat {
    Ratio::new(num, den)
}

/// Parse `s` given as `"2"`, `"2/3"`, `"0.5"`, or `"1.25"`.
///
/// Decimal inputs with at most 12 fractional digits are converted exactly.
pub fn parse_rat(text: &str) -> Result<Rat> {
    let t = text.trim();
    let bad = |m: &str| JtError::InvalidParameter(format!("cannot parse rational '{t}': {m}"));
    if let Some((num, den)) = t.split_once('/') {
        let n: i64 = num.trim().parse().map_err(|_| bad("bad numerator"))?;
        let d: i64 = den.trim().parse().map_err(|_| bad("bad denominator"))?;
        if d == 0 {
            return Err(bad("zero denominator"));
        }
        return Ok(Ratio::new(n, d));
    }
    if let Some((int, frac)) = t.split_once('.') {
        if frac.len() > 12 {
            return Err(bad("too many fractional digits"));
        }
        let sign = if int.trim_start().starts_with('-') { -1 } else { 1 };
        let i: i64 = if int.is_empty() || int == "-" {
            0
        } else {
            int.parse().map_err(|_| bad("bad integer part"))?
        };
        let f: i64 = if frac.is_empty() {
            0
        } else {
            frac.parse().map_err(|_| bad("bad fractional part"))?
        };
        let scale = 10_i64.pow(frac.len() as u32);
        return Ok(Ratio::new(i * scale + sign * f, scale));
    }
    let n: i64 = t.parse().map_err(|_| bad("not an integer"))?;
    Ok(Ratio::from_integer(n))
}

/// `q ∈ 2ℤ`, exactly.
pub fn in_two_z(q: Rat) -> bool {
    q.is_integer() && q.numer() % 2 == 0
}

/// `q ∈ ℤ`, exactly.
pub fn is_integer(q: Rat) -> bool {
    q.is_integer()
}

/// `q ∈ ℕ = {1, 2, …}`, exactly.
pub fn is_positive_integer(q: Rat) -> bool {
    q.is_integer() && q.is_positive() && !q.is_zero()
}

/// Convert to `f64` for analytic evaluation.
pub fn to_f64(q: Rat) -> f64 {
    *q.numer() as f64 / *q.denom() as f64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_decimals() {
        assert_eq!(parse_rat("2/3").unwrap(), ratio(2, 3));
        assert_eq!(parse_rat("0.5").unwrap(), ratio(1, 2));
        assert_eq!(parse_rat("1.25").unwrap(), ratio(5, 4));
        assert_eq!(parse_rat("-0.5").unwrap(), ratio(-1, 2));
        assert_eq!(parse_rat("17").unwrap(), rat(17));
        assert!(parse_rat("x").is_err());
        assert!(parse_rat("1/0").is_err());
    }

    #[test]
    fn two_z_membership_is_exact() {
        assert!(in_two_z(rat(6)));
        assert!(in_two_z(rat(0)));
        assert!(in_two_z(rat(-4)));
        assert!(!in_two_z(rat(3)));
        assert!(!in_two_z(ratio(2, 3)));
        // 2/3 · 3 = 2 ∈ 2ℤ
        assert!(in_two_z(ratio(2, 3) * rat(3)));
    }
}
