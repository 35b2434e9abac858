//! Parsing of algebra specs, elements, and scan ranges.

use jt_core::jalg::{Algebra, Element, Family};
use jt_core::rational::{parse_rat, to_f64, Rat};
use jt_core::riesz::ParityAlgebra;
use jt_core::JtError;

/// A parsed algebra: either a concrete one or the formula-only octonion
/// descriptor.
pub enum AlgebraSpec {
    Concrete(Algebra),
    FormulaOnly(ParityAlgebra),
}

impl AlgebraSpec {
    pub fn parity(&self) -> ParityAlgebra {
        match self {
            AlgebraSpec::Concrete(a) => ParityAlgebra::from(a),
            AlgebraSpec::FormulaOnly(p) => p.clone(),
        }
    }
}

/// Parse `family:size` — `sym:3`, `herm:2`, `quat:3`, `mink:4` (ambient
/// dimension), or `octonion:3` (formula-only).
pub fn parse_algebra(text: &str) -> Result<AlgebraSpec, JtError> {
    let (fam, size) = text.split_once(':').ok_or_else(|| {
        JtError::InvalidParameter(format!(
            "algebra spec '{text}' must look like family:size, e.g. sym:3 or mink:4"
        ))
    })?;
    let size: usize = size
        .parse()
        .map_err(|_| JtError::InvalidParameter(format!("bad size in algebra spec '{text}'")))?;
    let family = match fam {
        "sym" => Family::SymReal,
        "herm" => Family::HermComplex,
        "quat" => Family::HermQuaternion,
        "mink" => Family::Minkowski,
        "octonion" => {
            if size != 3 {
                return Err(JtError::InvalidParameter(
                    "the exceptional algebra exists only at rank 3".into(),
                ));
            }
            return Ok(AlgebraSpec::FormulaOnly(ParityAlgebra::octonion()));
        }
        other => {
            return Err(JtError::InvalidParameter(format!(
                "unknown family '{other}'; use sym, herm, quat, mink, or octonion"
            )))
        }
    };
    Ok(AlgebraSpec::Concrete(Algebra::new(family, size)?))
}

/// Parse an element: a flat comma list of coordinates, or `diag:a,b,…` for
/// `Σ d_j c_j` over the canonical frame.
pub fn parse_element(a: &Algebra, text: &str) -> Result<Element, JtError> {
    let parse_list = |list: &str| -> Result<Vec<f64>, JtError> {
        list.split(',')
            .map(|t| {
                t.trim()
                    .parse::<f64>()
                    .map_err(|_| JtError::InvalidParameter(format!("bad coordinate '{t}'")))
            })
            .collect()
    };
    if let Some(diag) = text.strip_prefix("diag:") {
        let d = parse_list(diag)?;
        if d.len() != a.rank() {
            return Err(JtError::InvalidParameter(format!(
                "diag element needs {} entries for {}, got {}",
                a.rank(),
                a.label(),
                d.len()
            )));
        }
        let frame = a.canonical_frame();
        let mut x = Element::zeros(a.dim());
        for (v, c) in d.iter().zip(&frame) {
            x = x.add(&c.scaled(*v));
        }
        return Ok(x);
    }
    let coords = parse_list(text)?;
    if coords.len() != a.dim() {
        return Err(JtError::DimensionMismatch {
            expected: a.dim(),
            got: coords.len(),
        });
    }
    Ok(Element::from_slice(&coords))
}

/// Parse a scan spec `start..end:step` with rational entries.
pub fn parse_scan(text: &str) -> Result<Vec<Rat>, JtError> {
    let bad = || JtError::InvalidParameter(format!("scan spec '{text}' must be start..end:step"));
    let (range, step) = text.rsplit_once(':').ok_or_else(bad)?;
    let (start, end) = range.split_once("..").ok_or_else(bad)?;
    let start = parse_rat(start)?;
    let end = parse_rat(end)?;
    let step = parse_rat(step)?;
    if step <= Rat::from_integer(0) || end < start {
        return Err(bad());
    }
    let mut out = Vec::new();
    let mut s = start;
    while s <= end {
        out.push(s);
        s += step;
        if out.len() > 10_000 {
            return Err(JtError::InvalidParameter("scan produces too many points".into()));
        }
    }
    Ok(out)
}

/// Parse `s=VALUE` (used by `modular-verify --rep1d s=1`).
pub fn parse_keyed_s(text: &str) -> Result<f64, JtError> {
    let v = text.strip_prefix("s=").unwrap_or(text);
    Ok(to_f64(parse_rat(v)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use jt_core::rational::ratio;

    #[test]
    fn algebra_specs() {
        assert!(matches!(parse_algebra("sym:3"), Ok(AlgebraSpec::Concrete(_))));
        assert!(matches!(
            parse_algebra("octonion:3"),
            Ok(AlgebraSpec::FormulaOnly(_))
        ));
        assert!(parse_algebra("sym3").is_err());
        assert!(parse_algebra("oct:3").is_err());
        assert!(parse_algebra("mink:2").is_err());
    }

    #[test]
    fn elements() {
        let a = match parse_algebra("sym:3").unwrap() {
            AlgebraSpec::Concrete(a) => a,
            _ => unreachable!(),
        };
        let x = parse_element(&a, "diag:2,-1,0").unwrap();
        assert_eq!(x.0[0], 2.0);
        assert_eq!(x.0[1], -1.0);
        assert!(parse_element(&a, "1,2").is_err());
        assert!(parse_element(&a, "diag:1,2").is_err());
        assert!(parse_element(&a, "1,2,x,0,0,0").is_err());
    }

    #[test]
    fn scans() {
        let v = parse_scan("1/2..2:1/2").unwrap();
        assert_eq!(v, vec![ratio(1, 2), ratio(1, 1), ratio(3, 2), ratio(2, 1)]);
        assert!(parse_scan("2..1:1").is_err());
        assert!(parse_scan("1..2").is_err());
    }
}
