//! Exact sparse polynomial arithmetic.

mod laurent;
mod multi;

pub use laurent::LaurentVZ;
pub use multi::MultiPoly;

use serde::Serialize;

use crate::bennequin::NormBracket;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct McMullenReport {
    pub alexander_norm: i64,
    pub upper: i64,
    /// `upper`, plus one for knots.
    pub bound: i64,
    pub holds: bool,
    /// `upper − alexander_norm` when the bracket pins the Thurston norm.
    pub gap: Option<i64>,
}

/// Checks `‖C‖_A ≤ ‖C‖_T` (`≤ ‖C‖_T + 1` for knots) against the upper end of a bracket.
pub fn mcmullen_check(
    poly: &MultiPoly,
    bracket: &NormBracket,
    class: &[i64],
    r: usize,
) -> Result<McMullenReport> {
    if r == 0 || poly.nvars() != r || class.len() != r {
        return Err(Error::Dimension(format!(
            "polynomial in {} variables, class of length {}, {r} components",
            poly.nvars(),
            class.len()
        )));
    }
    let alexander_norm = poly.alexander_norm(class)?;
    let bound = bracket.upper + i64::from(r == 1);
    Ok(McMullenReport {
        alexander_norm,
        upper: bracket.upper,
        bound,
        holds: alexander_norm <= bound,
        gap: bracket.determined.then(|| bracket.upper - alexander_norm),
    })
}
