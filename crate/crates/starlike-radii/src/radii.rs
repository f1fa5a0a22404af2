//! Closed-form radii for every catalog query, an independent numeric radius
//! solver, and sharpness witnesses.
//!
//! A query pairs a family with a target region. The largest `R` such that
//! every class member maps `|z| < r` into the region for all `r <= R` is
//! determined by the aggregate bound: the disc `|w - 1| <= member_bound(r)`
//! must fit inside the region. The closed forms evaluate the known answers;
//! the numeric solver re-derives them from the region geometry alone, either
//! by inverting the bound at the numerically computed inradius about 1, or
//! (for Janowski discs) by bisecting on the Silverman disc-in-disc
//! criterion.

use num_complex::Complex64;
use std::f64::consts::{E, SQRT_2};

use crate::analytic::{ClassMember, Family};
use crate::bounds::{invert_member_bound, member_bound};
use crate::regions::{disc_in_disc, Region};
use crate::solve::{bisect_root, bisect_sup};
use crate::{Error, Result};

const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// One radius question: which region, for which family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadiusQuery {
    pub family: Family,
    pub region: Region,
}

impl RadiusQuery {
    pub fn new(family: Family, region: Region) -> Self {
        RadiusQuery { family, region }
    }
}

/// Whether a reported radius is known to be the exact class radius or only
/// a certified lower bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exactness {
    Exact,
    LowerBoundOnly,
}

impl Exactness {
    pub fn token(self) -> &'static str {
        match self {
            Exactness::Exact => "exact",
            Exactness::LowerBoundOnly => "lower_bound_only",
        }
    }
}

/// A sharpness witness: the extremal member's `z f'/f` lands on the region
/// boundary at the witness point when the radius is exact.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WitnessPoint {
    pub z: Complex64,
    pub value: Complex64,
    pub boundary_residual: f64,
}

/// Everything known about one query.
#[derive(Debug, Clone, PartialEq)]
pub struct RadiusReport {
    pub family: Family,
    pub region: Region,
    pub closed_form: Option<f64>,
    pub closed_form_expr: Option<&'static str>,
    pub numeric: f64,
    pub witness_z: Complex64,
    pub witness_value: Complex64,
    pub boundary_residual: f64,
    pub exactness: Exactness,
}

fn order_alpha_radius(family: Family, alpha: f64) -> f64 {
    match family {
        Family::T1 => 2.0 * (1.0 - alpha) / (5.0 - 2.0 * alpha),
        Family::T2 => (1.0 - alpha) / 3.0,
    }
}

/// The closed-form radius of the query, when the parameters lie in the
/// catalog. All constructible regions are catalog regions, so this is total
/// in practice.
pub fn closed_form_radius(query: &RadiusQuery) -> Option<f64> {
    let family = query.family;
    let sin1 = 1f64.sin();
    Some(match query.region {
        Region::HalfPlane { alpha } | Region::CenteredDisc { alpha } => {
            order_alpha_radius(family, alpha)
        }
        Region::JanowskiDisc { a, b } => janowski_radius(family, a, b).ok()?.0,
        Region::Parabola => match family {
            Family::T1 => 0.25,
            Family::T2 => 1.0 / 6.0,
        },
        Region::ExpRegion => match family {
            Family::T1 => (2.0 * E - 2.0) / (5.0 * E - 2.0),
            Family::T2 => (E - 1.0) / (3.0 * E),
        },
        Region::Cardioid | Region::Nephroid => match family {
            Family::T1 => 4.0 / 13.0,
            Family::T2 => 2.0 / 9.0,
        },
        Region::Sine => match family {
            Family::T1 => 2.0 * sin1 / (3.0 + 2.0 * sin1),
            Family::T2 => sin1 / 3.0,
        },
        Region::Lune => match family {
            Family::T1 => (4.0 - 2.0 * SQRT_2) / (7.0 - 2.0 * SQRT_2),
            Family::T2 => (2.0 - SQRT_2) / 3.0,
        },
        Region::Rational => match family {
            Family::T1 => (6.0 - 4.0 * SQRT_2) / (9.0 - 4.0 * SQRT_2),
            Family::T2 => (3.0 - 2.0 * SQRT_2) / 3.0,
        },
        Region::Sigmoid => match family {
            Family::T1 => (2.0 * E - 2.0) / (5.0 * E + 1.0),
            Family::T2 => (E - 1.0) / (3.0 * (1.0 + E)),
        },
    })
}

/// The closed form as a display string, for tables.
pub fn closed_form_expr(query: &RadiusQuery) -> Option<&'static str> {
    let t1 = query.family == Family::T1;
    Some(match query.region {
        Region::HalfPlane { .. } | Region::CenteredDisc { .. } => {
            if t1 {
                "2(1-alpha)/(5-2alpha)"
            } else {
                "(1-alpha)/3"
            }
        }
        Region::JanowskiDisc { .. } => {
            if t1 {
                "2(A-B)/(3(1+|B|)+2(A-B))"
            } else {
                "(A-B)/(3(1+|B|))"
            }
        }
        Region::Parabola => {
            if t1 {
                "1/4"
            } else {
                "1/6"
            }
        }
        Region::ExpRegion => {
            if t1 {
                "(2e-2)/(5e-2)"
            } else {
                "(e-1)/(3e)"
            }
        }
        Region::Cardioid | Region::Nephroid => {
            if t1 {
                "4/13"
            } else {
                "2/9"
            }
        }
        Region::Sine => {
            if t1 {
                "2sin(1)/(3+2sin(1))"
            } else {
                "sin(1)/3"
            }
        }
        Region::Lune => {
            if t1 {
                "(4-2sqrt(2))/(7-2sqrt(2))"
            } else {
                "(2-sqrt(2))/3"
            }
        }
        Region::Rational => {
            if t1 {
                "(6-4sqrt(2))/(9-4sqrt(2))"
            } else {
                "(3-2sqrt(2))/3"
            }
        }
        Region::Sigmoid => {
            if t1 {
                "(2e-2)/(5e+1)"
            } else {
                "(e-1)/(3(1+e))"
            }
        }
    })
}

/// Sufficient Janowski radius `2(A-B)/(3(1+|B|)+2(A-B))` for `T1` and
/// `(A-B)/(3(1+|B|))` for `T2`, exact when `B < 0` (where the formulas
/// simplify to `2(A-B)/(3+2A-5B)` and `(A-B)/(3(1-B))`), a certified lower
/// bound otherwise. `B = -1` coincides with the half-plane of order
/// `(1-A)/2`.
pub fn janowski_radius(family: Family, a: f64, b: f64) -> Result<(f64, Exactness)> {
    Region::janowski(a, b)?;
    // Inradius of the Janowski image disc about 1; at most 1, so the T2
    // bound inversion stays on its linear branch.
    let delta = (a - b) / (1.0 + b.abs());
    let radius = match family {
        Family::T1 => 2.0 * delta / (3.0 + 2.0 * delta),
        Family::T2 => delta / 3.0,
    };
    let exactness = if b < 0.0 {
        Exactness::Exact
    } else {
        Exactness::LowerBoundOnly
    };
    Ok((radius, exactness))
}

/// Exactness of a catalog query: everything is exact except Janowski
/// queries with `B >= 0`.
pub fn exactness(query: &RadiusQuery) -> Exactness {
    match query.region {
        Region::JanowskiDisc { b, .. } if b >= 0.0 => Exactness::LowerBoundOnly,
        _ => Exactness::Exact,
    }
}

/// Numeric radius, independent of the closed forms: solves
/// `member_bound(r) = inradius_about_one(region)` (with the inradius taken
/// from the refined boundary-curve minimum for the curve regions), or
/// bisects on the Silverman disc-in-disc criterion for Janowski discs.
///
/// `tol` caps the solver-induced error where a bisection runs; the
/// inradius route is already refined well below 1e-10.
pub fn numeric_radius(query: &RadiusQuery, tol: f64) -> Result<f64> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::NonPositiveDelta(tol));
    }
    let family = query.family;
    match query.region {
        Region::HalfPlane { alpha } | Region::CenteredDisc { alpha } => {
            invert_member_bound(family, 1.0 - alpha)
        }
        Region::JanowskiDisc { a, b } => {
            if b == -1.0 {
                invert_member_bound(family, (1.0 + a) / 2.0)
            } else {
                let (center, radius) = janowski_image_disc(a, b);
                Ok(bisect_sup(
                    |r| {
                        let d = member_bound(family, r).expect("r in [0,1)");
                        disc_in_disc(ONE, d, center, radius)
                    },
                    0.0,
                    1.0 - 1e-12,
                    tol,
                ))
            }
        }
        _ => invert_member_bound(family, query.region.inradius_about_one()),
    }
}

fn janowski_image_disc(a: f64, b: f64) -> (Complex64, f64) {
    let denom = 1.0 - b * b;
    (Complex64::new((1.0 - a * b) / denom, 0.0), (a - b) / denom)
}

/// Second, slower oracle: bisection for the largest `r` whose image disc
/// `|w - 1| <= member_bound(r)` still fits in the region, driven entirely
/// by the region's disc-inclusion predicate.
pub fn numeric_radius_by_disc_bisection(query: &RadiusQuery, tol: f64) -> Result<f64> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::NonPositiveDelta(tol));
    }
    let family = query.family;
    let region = query.region;
    Ok(bisect_sup(
        |r| {
            let d = member_bound(family, r).expect("r in [0,1)");
            region.disc_in_region(ONE, d).expect("1 is interior")
        },
        0.0,
        1.0 - 1e-12,
        tol,
    ))
}

/// Sharpness witnesses for an exact catalog query: `z = -R`, plus `z = +R`
/// for the sine region in `T2`, where the bound is symmetric and the
/// extremal value `1 + 3R` meets the boundary on the far side as well.
pub fn sharpness_witnesses(query: &RadiusQuery) -> Result<Vec<WitnessPoint>> {
    if exactness(query) != Exactness::Exact {
        return Err(Error::WitnessUnsupported);
    }
    let radius = closed_form_radius(query).expect("exact catalog queries have closed forms");
    let member = ClassMember::extremal(query.family);
    let mut xs = vec![-radius];
    if query.family == Family::T2 && matches!(query.region, Region::Sine) {
        xs.push(radius);
    }
    let mut points = Vec::with_capacity(xs.len());
    for x in xs {
        let z = Complex64::new(x, 0.0);
        let value = member.log_derivative(z)?;
        let boundary_residual = query.region.boundary_distance(value);
        points.push(WitnessPoint {
            z,
            value,
            boundary_residual,
        });
    }
    Ok(points)
}

/// Locates the zero of the extremal member's derivative on `(-1, 0)` by
/// bisection on `z f'/f` along the real axis. The modulus of the returned
/// point is the radius of univalence of the family, and coincides with the
/// order-0 starlikeness radius.
pub fn univalence_witness(family: Family) -> f64 {
    let member = ClassMember::extremal(family);
    bisect_root(
        |x| {
            member
                .log_derivative(Complex64::new(x, 0.0))
                .expect("inside disc")
                .re
        },
        -0.99,
        -0.01,
        1e-15,
    )
}

/// Full report for one query at solver tolerance `tol`.
pub fn radius_report(query: &RadiusQuery, tol: f64) -> Result<RadiusReport> {
    let closed_form = closed_form_radius(query);
    let numeric = numeric_radius(query, tol)?;
    let exact = exactness(query);
    let (witness_z, witness_value, boundary_residual) = match exact {
        Exactness::Exact => {
            let points = sharpness_witnesses(query)?;
            let worst = points
                .iter()
                .map(|p| p.boundary_residual)
                .fold(0.0, f64::max);
            (points[0].z, points[0].value, worst)
        }
        Exactness::LowerBoundOnly => {
            // Report the -R evaluation anyway; the residual is informative
            // but not required to vanish.
            let z = Complex64::new(-numeric, 0.0);
            let value = ClassMember::extremal(query.family).log_derivative(z)?;
            (z, value, query.region.boundary_distance(value))
        }
    };
    Ok(RadiusReport {
        family: query.family,
        region: query.region,
        closed_form,
        closed_form_expr: closed_form_expr(query),
        numeric,
        witness_z,
        witness_value,
        boundary_residual,
        exactness: exact,
    })
}
