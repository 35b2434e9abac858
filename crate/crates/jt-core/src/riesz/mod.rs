//! Riesz distributions `μ̃_s` on the tube and their boundary values, with the
//! support analysis of `Im μ̃_s` over the invertible components `E^×_j`.
//!
//! The parity statements (`Im μ̃_s` vanishes on `E^×_j` iff `s·j ∈ 2ℤ`, wedge
//! duality iff `ν_k = s(k−r/2) ∈ ℤ`) depend only on `(r, d, s, j, k)` and are
//! evaluated in exact rational arithmetic. They are therefore also available
//! for the exceptional algebra through [`ParityAlgebra::octonion`], which
//! carries `(r, d) = (3, 8)` without element arithmetic.

mod onedim;
mod tube;

pub use onedim::{delta_part_1d, riesz_pair_1d, DeltaPart, DistPart};
pub use tube::{
    boundary_from_tube_limit, mult_identity_residual, tilde_mu_boundary, tilde_mu_tube,
};

use serde::Serialize;

use crate::error::{JtError, Result};
use crate::jalg::Algebra;
use crate::rational::{self, Rat};

/// The `(r, d)` data that the parity and support formulas depend on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParityAlgebra {
    pub name: String,
    pub rank: usize,
    pub pierce_dim: usize,
    /// False for the formula-only octonion descriptor.
    pub has_elements: bool,
}

impl ParityAlgebra {
    pub fn octonion() -> ParityAlgebra {
        ParityAlgebra {
            name: "octonion:3".into(),
            rank: 3,
            pierce_dim: 8,
            has_elements: false,
        }
    }

    /// The possible indices `j ∈ {r, r−2, …, −r}` of invertible elements.
    pub fn component_indices(&self) -> Vec<i64> {
        let r = self.rank as i64;
        (0..=r).map(|t| r - 2 * t).collect()
    }
}

impl From<&Algebra> for ParityAlgebra {
    fn from(a: &Algebra) -> Self {
        ParityAlgebra {
            name: a.label(),
            rank: a.rank(),
            pierce_dim: a.pierce_dim(),
            has_elements: true,
        }
    }
}

/// Wallach-set membership:
/// `s ∈ {0, d/2, …, (r−1)d/2} ∪ ((r−1)d/2, ∞)`, decided exactly.
pub fn riesz_admissible(pa: &ParityAlgebra, s: Rat) -> bool {
    if s < Rat::from_integer(0) {
        return false;
    }
    let half_d = rational::ratio(self_i64(pa.pierce_dim), 2);
    let edge = half_d * Rat::from_integer(self_i64(pa.rank) - 1);
    if s > edge {
        return true;
    }
    // discrete part: s = i·d/2 for some 0 ≤ i ≤ r−1
    if half_d == Rat::from_integer(0) {
        return s == Rat::from_integer(0);
    }
    let q = s / half_d;
    q.is_integer()
}

fn self_i64(u: usize) -> i64 {
    u as i64
}

/// `Im μ̃_s` vanishes on the component `E^×_j` iff `s·j ∈ 2ℤ` (exact test).
pub fn im_vanishes_on_component(pa: &ParityAlgebra, s: Rat, j: i64) -> Result<bool> {
    let r = pa.rank as i64;
    if j.abs() > r || (r - j).rem_euclid(2) != 0 {
        return Err(JtError::InvalidParameter(format!(
            "j = {j} is not an index value for rank {r}; need j ∈ {{r, r−2, …, −r}}"
        )));
    }
    Ok(rational::in_two_z(s * Rat::from_integer(j)))
}

/// One row of the per-component support table.
#[derive(Debug, Clone, Serialize)]
pub struct ComponentRow {
    pub index: i64,
    /// The parity criterion value `s·j`, as an exact rational string.
    pub s_times_j: String,
    pub vanishes: bool,
}

/// One row of the wedge-duality table.
#[derive(Debug, Clone, Serialize)]
pub struct WedgeDualityRow {
    pub k: usize,
    pub nu: String,
    pub nu_value: f64,
    /// ν_k ∈ ℤ.
    pub nu_integral: bool,
    /// `supp(Im μ̃_s) ∩ E^×_{2k−r} = ∅`.
    pub component_vanishes: bool,
    /// `supp(Im μ̃_s) ⊆ W(h_k)^c`, derived from the component statement and
    /// the inclusion `W(h_k) ⊆ E^×_{2k−r}`.
    pub wedge_disjoint: bool,
    pub consistent: bool,
}

/// The full support report for `(algebra, s)`.
#[derive(Debug, Clone, Serialize)]
pub struct SupportReport {
    pub algebra: String,
    pub rank: usize,
    pub pierce_dim: usize,
    pub s: String,
    pub s_value: f64,
    pub wallach_admissible: bool,
    pub formula_only: bool,
    pub components: Vec<ComponentRow>,
    pub verdict: String,
    pub detail: String,
    /// True iff `vanishes(j)` for all `j ≠ ±r`, i.e. the locality condition
    /// `supp(Im μ̃_s) ⊆ C ∪ −C` holds.
    pub double_cone_locality: bool,
    pub wedge_duality: Vec<WedgeDualityRow>,
}

/// Evaluate the three wedge-duality predicates for one `k`.
pub fn wedge_duality_check(pa: &ParityAlgebra, s: Rat, k: usize) -> Result<WedgeDualityRow> {
    let r = pa.rank;
    if k > r {
        return Err(JtError::InvalidParameter(format!(
            "k = {k} out of range 0..={r}"
        )));
    }
    let j = 2 * k as i64 - r as i64;
    let nu = s * rational::ratio(j, 2);
    let nu_integral = rational::is_integer(nu);
    let component_vanishes = im_vanishes_on_component(pa, s, j)?;
    let wedge_disjoint = component_vanishes;
    let consistent = nu_integral == component_vanishes && component_vanishes == wedge_disjoint;
    Ok(WedgeDualityRow {
        k,
        nu: nu.to_string(),
        nu_value: rational::to_f64(nu),
        nu_integral,
        component_vanishes,
        wedge_disjoint,
        consistent,
    })
}

/// Full support analysis of `Im μ̃_s`.
pub fn support_report(pa: &ParityAlgebra, s: Rat) -> Result<SupportReport> {
    if s < Rat::from_integer(0) {
        return Err(JtError::InvalidParameter("s must be nonnegative".into()));
    }
    let r = pa.rank;
    let mut components = Vec::new();
    let mut all_vanish = true;
    let mut none_vanish = true;
    let mut locality = true;
    for j in pa.component_indices() {
        let vanishes = im_vanishes_on_component(pa, s, j)?;
        all_vanish &= vanishes;
        none_vanish &= !vanishes;
        if j.unsigned_abs() as usize != r {
            locality &= vanishes;
        }
        components.push(ComponentRow {
            index: j,
            s_times_j: (s * Rat::from_integer(j)).to_string(),
            vanishes,
        });
    }

    let s_positive_integer = rational::is_positive_integer(s);
    let (verdict, detail) = if all_vanish {
        if s_positive_integer {
            (
                "supp(Im) = E \\ E^x".to_string(),
                format!(
                    "Im vanishes on every invertible component; for integer s the \
                     support is exactly the non-invertible set (rank {r} here)"
                ),
            )
        } else {
            // only s = 0 reaches this branch
            (
                "supp(Im) disjoint from E^x".to_string(),
                "Im vanishes on every invertible component".to_string(),
            )
        }
    } else if none_vanish {
        (
            "full on E^x".to_string(),
            "Im vanishes on no invertible component".to_string(),
        )
    } else {
        let only_extremes = components
            .iter()
            .all(|c| c.vanishes == (c.index.unsigned_abs() as usize == r));
        if only_extremes {
            (
                "partial".to_string(),
                "vanishes exactly on j = +/-r, so supp(Im) = E \\ (C0 u -C0)".to_string(),
            )
        } else {
            ("partial".to_string(), String::new())
        }
    };

    let mut detail = detail;
    if r == 2 {
        // Minkowski-type double-cone narrative: j = 0 always vanishes
        detail = if all_vanish {
            "supp(Im) within the boundary of the closed double cone C u -C (s integral)"
                .to_string()
        } else {
            "supp(Im) within the closed double cone C u -C".to_string()
        };
    }

    let mut wedge_duality = Vec::new();
    for k in 0..=r {
        wedge_duality.push(wedge_duality_check(pa, s, k)?);
    }

    Ok(SupportReport {
        algebra: pa.name.clone(),
        rank: r,
        pierce_dim: pa.pierce_dim,
        s: s.to_string(),
        s_value: rational::to_f64(s),
        wallach_admissible: riesz_admissible(pa, s),
        formula_only: !pa.has_elements,
        components,
        verdict,
        detail,
        double_cone_locality: locality,
        wedge_duality,
    })
}

/// CSV rendering of a support report: one row per component, then one row
/// per wedge-duality entry.
pub fn support_report_csv(rep: &SupportReport) -> String {
    let mut out = String::new();
    out.push_str("kind,algebra,s,index_or_k,value,flag\n");
    for c in &rep.components {
        out.push_str(&format!(
            "component,{},{},{},{},{}\n",
            rep.algebra, rep.s, c.index, c.s_times_j, c.vanishes
        ));
    }
    for w in &rep.wedge_duality {
        out.push_str(&format!(
            "wedge_duality,{},{},{},{},{}\n",
            rep.algebra, rep.s, w.k, w.nu, w.nu_integral
        ));
    }
    out
}
