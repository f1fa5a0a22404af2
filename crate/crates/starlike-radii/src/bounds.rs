//! Sharp radial bounds for the factors and members of `T1` and `T2`.
//!
//! For `|z| <= r < 1`:
//!
//! * a factor subordinate to `sqrt(1+z)` satisfies
//!   `sqrt(1-r) <= |p(z)| <= sqrt(1+r)` and `|z p'/p| <= r/(2(1-r))`;
//! * a factor subordinate to `e^z` satisfies `e^{-r} <= |p(z)| <= e^{r}` and
//!   `|z p'/p| <= r` for `r <= sqrt(2)-1`, and
//!   `|z p'/p| <= (1+r^2)^2/(4(1-r^2))` beyond that knee;
//! * a member `f = z p p1 p2` satisfies `|z f'/f - 1| <=` three times the
//!   factor bound, and `r(1-r)^{3/2} <= |f| <= r(1+r)^{3/2}` respectively
//!   `r e^{-3r} <= |f| <= r e^{3r}`.
//!
//! [`invert_member_bound`] solves `member_bound(r) = delta`, which turns
//! every radius question "how far out does `|z f'/f - 1| <= delta` hold"
//! into a one-liner.

use crate::analytic::{FactorKind, Family};
use crate::solve::bisect_root;
use crate::{Error, Result};

/// Knee of the exponential-factor bound, `sqrt(2) - 1`.
pub const EXP_BOUND_KNEE: f64 = std::f64::consts::SQRT_2 - 1.0;

/// Bisection bracket tolerance used when inverting the `T2` bound on its
/// quartic branch.
pub const INVERSION_BISECTION_TOL: f64 = 1e-14;

// Default sampling protocol for the randomized verification suites. The
// harness owns the loops; the numbers live here so the library, the CLI and
// the tests agree on one source of truth.

/// Random factors/members drawn per family.
pub const DEFAULT_SAMPLES_PER_FAMILY: usize = 1000;
/// Points sampled on each circle `|z| = r`.
pub const DEFAULT_BOUNDARY_SAMPLES: usize = 64;
/// Radii at which the dominance inequalities are checked.
pub const DEFAULT_RADII_GRID: [f64; 9] = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9];
/// Largest Blaschke parameter modulus drawn when sampling Schwarz maps.
pub const MAX_SAMPLED_PARAM_MODULUS: f64 = 0.95;
/// Largest number of Blaschke factors per sampled map.
pub const MAX_SAMPLED_BLASCHKE_FACTORS: usize = 3;
/// Additive slack absorbing floating-point rounding in dominance checks.
pub const DEFAULT_DOMINANCE_SLACK: f64 = 1e-10;
/// Slack for the Schwarz-Pick inequality, which involves no bound algebra.
pub const SCHWARZ_PICK_SLACK: f64 = 1e-12;
/// Round-trip tolerance for `invert_member_bound(member_bound(r)) = r`.
pub const DEFAULT_ROUND_TRIP_TOL: f64 = 1e-12;
/// Slack for equality attainment by the extremal configurations.
pub const EQUALITY_SLACK: f64 = 1e-12;

/// A two-sided modulus estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModulusRange {
    pub lo: f64,
    pub hi: f64,
}

impl ModulusRange {
    /// Whether `value` lies in the range, up to `slack` on both sides.
    pub fn contains(&self, value: f64, slack: f64) -> bool {
        self.lo - slack <= value && value <= self.hi + slack
    }
}

fn check_radius(r: f64) -> Result<()> {
    if (0.0..1.0).contains(&r) {
        Ok(())
    } else {
        Err(Error::RadiusOutOfRange(r))
    }
}

/// Sharp bound `r/(2(1-r))` on `|z p'/p|` for square-root factors.
pub fn sqrt_factor_bound(r: f64) -> Result<f64> {
    check_radius(r)?;
    Ok(r / (2.0 * (1.0 - r)))
}

/// Sharp bound on `|z p'/p|` for exponential factors: `r` up to the knee
/// `sqrt(2)-1`, then `(1+r^2)^2/(4(1-r^2))`. Both branches agree at the knee.
pub fn exp_factor_bound(r: f64) -> Result<f64> {
    check_radius(r)?;
    if r <= EXP_BOUND_KNEE {
        Ok(r)
    } else {
        Ok(exp_bound_upper_branch(r))
    }
}

fn exp_bound_upper_branch(r: f64) -> f64 {
    let r2 = r * r;
    (1.0 + r2) * (1.0 + r2) / (4.0 * (1.0 - r2))
}

/// The factor bound for the given kind.
pub fn factor_bound(kind: FactorKind, r: f64) -> Result<f64> {
    match kind {
        FactorKind::SqrtOnePlus => sqrt_factor_bound(r),
        FactorKind::Exp => exp_factor_bound(r),
    }
}

/// Two-sided modulus estimate for a factor on `|z| <= r`.
pub fn factor_modulus_range(kind: FactorKind, r: f64) -> Result<ModulusRange> {
    check_radius(r)?;
    Ok(match kind {
        FactorKind::SqrtOnePlus => ModulusRange {
            lo: (1.0 - r).sqrt(),
            hi: (1.0 + r).sqrt(),
        },
        FactorKind::Exp => ModulusRange {
            lo: (-r).exp(),
            hi: r.exp(),
        },
    })
}

/// Aggregate bound on `|z f'/f - 1|` for members: three times the factor
/// bound of the family's kind.
pub fn member_bound(family: Family, r: f64) -> Result<f64> {
    Ok(3.0 * factor_bound(family.factor_kind(), r)?)
}

/// Two-sided growth estimate for `|f(z)|` on `|z| = r`.
pub fn member_growth_range(family: Family, r: f64) -> Result<ModulusRange> {
    check_radius(r)?;
    Ok(match family {
        Family::T1 => ModulusRange {
            lo: r * (1.0 - r).powf(1.5),
            hi: r * (1.0 + r).powf(1.5),
        },
        Family::T2 => ModulusRange {
            lo: r * (-3.0 * r).exp(),
            hi: r * (3.0 * r).exp(),
        },
    })
}

/// Solves `member_bound(family, r) = delta` for the unique `r` in `(0, 1)`.
///
/// The bound is strictly increasing and unbounded as `r -> 1`, so a root
/// always exists. `T1` inverts in closed form, `r = 2 delta/(3 + 2 delta)`.
/// `T2` is linear below the knee; beyond it the quartic branch is solved by
/// bisection to [`INVERSION_BISECTION_TOL`].
pub fn invert_member_bound(family: Family, delta: f64) -> Result<f64> {
    if delta.is_nan() || delta <= 0.0 {
        return Err(Error::NonPositiveDelta(delta));
    }
    Ok(match family {
        Family::T1 => 2.0 * delta / (3.0 + 2.0 * delta),
        Family::T2 => {
            if delta <= 3.0 * EXP_BOUND_KNEE {
                delta / 3.0
            } else {
                bisect_root(
                    |r| 3.0 * exp_bound_upper_branch(r) - delta,
                    EXP_BOUND_KNEE,
                    1.0 - f64::EPSILON,
                    INVERSION_BISECTION_TOL,
                )
            }
        }
    })
}
