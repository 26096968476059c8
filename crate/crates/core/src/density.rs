//! Exact density of the code.
//!
//! The direct count over one fundamental domain is the ground truth. The
//! closed forms for the two parts and the published headline expressions are
//! evaluated alongside so they can be compared against it.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::code::CodeParams;
use crate::error::{Error, Result};
use crate::window::Window;

/// Exact reduced fraction with arbitrary-precision parts.
pub type Rational = BigRational;

pub fn ratio(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Rational {
    Rational::new(num.into(), den.into())
}

/// Codewords in the fundamental domain divided by its area.
pub fn density_exact(p: &CodeParams) -> Rational {
    let domain = p.fundamental_domain();
    let count = p.codewords_in_window(&domain).expect("fundamental domain is well formed").len();
    ratio(count as i64, p.period_x * p.period_y)
}

/// Closed-form densities of the line part and the separator part.
pub fn density_components(p: &CodeParams) -> (Rational, Rational) {
    let r = p.r as i64;
    if p.is_even() {
        (ratio(5, 6 * (r + 1)), ratio(1, 2 * r * (r + 1)))
    } else {
        (ratio(5 * r - 1, (6 * r - 2) * (r + 1)), ratio(1, 2 * (r + 1) * (r + 1)))
    }
}

/// The published headline density: `(5r+3)/(6r(r+1))` for even `r`,
/// `(5r²+10r-3)/((6r-2)(r+1)²)` for odd `r`.
pub fn density_theorem(r: u64) -> Result<Rational> {
    if r == 0 {
        return Err(Error::InvalidRadius(0));
    }
    let r = BigInt::from(r);
    let one = BigInt::from(1);
    Ok(if r.is_even() {
        Rational::new(5 * &r + 3, 6 * &r * (&r + &one))
    } else {
        Rational::new(5 * &r * &r + 10 * &r - 3, (6 * &r - 2) * (&r + &one) * (&r + &one))
    })
}

/// The odd-radius expression `(5r²+7r-3)/((6r-2)(r+1)²)` quoted in the summary
/// of results; kept only for the audit notes.
pub fn density_summary_odd(r: u64) -> Rational {
    let r = BigInt::from(r);
    let one = BigInt::from(1);
    Rational::new(5 * &r * &r + 7 * &r - 3, (6 * &r - 2) * (&r + &one) * (&r + &one))
}

/// Published table entries for odd radii, as `(r, numerator, denominator)`.
pub const ODD_TABLE_ENTRIES: [(u64, i64, i64); 2] = [(15, 1227, 22528), (19, 387, 8960)];

/// `|C ∩ Q_m| / (2m+1)²` with `Q_m = [-m..m]²`.
pub fn density_empirical(p: &CodeParams, m: u64) -> Rational {
    let w = Window::centered_square(m);
    let count = p.codewords_in_window(&w).expect("square window is well formed").len();
    let side = 2 * m as i64 + 1;
    ratio(count as i64, side * side)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DensityAudit {
    pub r: u64,
    pub exact: Rational,
    pub component_sum: Rational,
    pub theorem_value: Rational,
    pub agrees_theorem: bool,
    pub notes: String,
}

/// Direct count, component sum and headline value side by side.
pub fn audit(r: u64) -> Result<DensityAudit> {
    if r < 2 {
        return Err(Error::InvalidRadius(r as i64));
    }
    audit_any(r)
}

/// [`audit`] without the lower bound on `r`; `r = 1` is constructible even
/// though the construction is only meant for larger radii.
pub(crate) fn audit_any(r: u64) -> Result<DensityAudit> {
    let p = CodeParams::new(r as i64)?;
    let exact = density_exact(&p);
    let (line, sep) = density_components(&p);
    let component_sum = line + sep;
    let theorem_value = density_theorem(r)?;
    let agrees_theorem = exact == theorem_value;

    let mut notes = Vec::new();
    if p.is_even() {
        if !agrees_theorem {
            notes.push(format!("count {exact} differs from headline {theorem_value}"));
        }
    } else {
        let den = BigInt::from(6 * r - 2) * BigInt::from(r + 1) * BigInt::from(r + 1);
        let mut parts = vec![
            format!("count {}", over(&exact, &den)),
            format!("components {}", over(&component_sum, &den)),
            format!("headline {}", over(&theorem_value, &den)),
            format!("summary {}", over(&density_summary_odd(r), &den)),
        ];
        if let Some(&(_, n, d)) = ODD_TABLE_ENTRIES.iter().find(|e| e.0 == r) {
            parts.push(format!("table {}", over(&ratio(n, d), &den)));
        }
        notes.push(format!("odd r, numerators over {den}: {}", parts.join(", ")));
    }
    Ok(DensityAudit { r, exact, component_sum, theorem_value, agrees_theorem, notes: notes.join("; ") })
}

/// Numerator of `x` over `den` when that is an integer, else the reduced fraction.
fn over(x: &Rational, den: &BigInt) -> String {
    let scaled = x * Rational::from_integer(den.clone());
    if scaled.is_integer() {
        scaled.to_integer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Round `x` to `places` decimals, ties to even. Display only.
pub fn to_decimal(x: &Rational, places: u32) -> String {
    let scale = BigInt::from(10).pow(places);
    let scaled = x * Rational::from_integer(scale.clone());
    let floor = scaled.floor().to_integer();
    let frac = &scaled - Rational::from_integer(floor.clone());
    let half = ratio(1, 2);
    let rounded = if frac > half || (frac == half && floor.is_odd()) { floor + 1 } else { floor };

    let negative = rounded.is_negative();
    let digits = rounded.abs().to_string();
    let width = places as usize + 1;
    let digits = if digits.len() < width { format!("{digits:0>width$}") } else { digits };
    let (int_part, frac_part) = digits.split_at(digits.len() - places as usize);
    let sign = if negative && !rounded.is_zero() { "-" } else { "" };
    if places == 0 {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{frac_part}")
    }
}
