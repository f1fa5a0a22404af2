//! Catalog of the target regions: membership predicates, boundary
//! parametrizations, and the inradius about the point 1.
//!
//! Every catalog region is an open set containing 1. Regions cut out by an
//! explicit inequality (half-planes, discs, parabola, exp, cardioid, lune,
//! nephroid, sigmoid) test it directly; the sine and rational regions are
//! Jordan domains without a usable inequality, so membership is decided by
//! the winding number of the parametrized boundary about the query point.
//!
//! All numeric predicates exclude a thin band of width [`EXCLUSION_BAND`]
//! around the boundary, matching the open-region semantics: a point computed
//! to sit exactly on the boundary is never a member.

use num_complex::Complex64;
use std::f64::consts::{PI, TAU};

use crate::solve::golden_min;
use crate::{Error, Result};

/// Uniform samples of the boundary curve used for winding numbers and for
/// distance minimization (before local refinement).
pub const BOUNDARY_GRID_SAMPLES: usize = 4096;

/// Width of the band around a boundary inside which numeric predicates
/// report "not a member" / "does not fit".
pub const EXCLUSION_BAND: f64 = 1e-10;

/// Bracket width to which boundary-distance minima are refined.
const REFINEMENT_BRACKET: f64 = 1e-12;

const MAX_WINDING_DEPTH: u32 = 48;

const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// A target region for `z f'(z)/f(z)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Region {
    /// `Re w > alpha`, `0 <= alpha < 1`.
    HalfPlane { alpha: f64 },
    /// `|w - 1| < 1 - alpha`, `0 <= alpha < 1`.
    CenteredDisc { alpha: f64 },
    /// Image of the disc under `(1 + Az)/(1 + Bz)`, `-1 <= B < A <= 1`:
    /// a disc for `B != -1`, the half-plane `Re w > (1-A)/2` for `B = -1`.
    JanowskiDisc { a: f64, b: f64 },
    /// `Re w > |w - 1|`, bounded by the parabola `v^2 = 2u - 1`.
    Parabola,
    /// `|log w| < 1`, the image of the disc under `e^z`.
    ExpRegion,
    /// Interior of the cardioid `(9u^2+9v^2-18u+5)^2 - 16(9u^2+9v^2-6u+1) = 0`,
    /// the image of the disc under `1 + 4z/3 + 2z^2/3`.
    Cardioid,
    /// Image of the disc under `1 + sin z`.
    Sine,
    /// `|w^2 - 1| < 2|w|`, the lune swept by `z + sqrt(1 + z^2)`.
    Lune,
    /// Image of the disc under `1 + (kz + z^2)/(k^2 - kz)` with `k = sqrt(2)+1`.
    Rational,
    /// Interior of the nephroid `((u-1)^2 + v^2 - 4/9)^3 - 4v^2/3 = 0`,
    /// the image of the disc under `1 + z - z^3/3`.
    Nephroid,
    /// `|log(w/(2-w))| < 1`, the image of the disc under `2/(1 + e^{-z})`.
    Sigmoid,
}

/// Result of a winding-number membership test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Membership {
    Inside,
    Outside,
    /// Within [`EXCLUSION_BAND`] of the boundary curve.
    Boundary,
}

fn check_alpha(alpha: f64) -> Result<()> {
    if (0.0..1.0).contains(&alpha) {
        Ok(())
    } else {
        Err(Error::AlphaOutOfRange(alpha))
    }
}

/// Center and radius of the Janowski image disc for `B != -1`.
fn janowski_disc(a: f64, b: f64) -> (Complex64, f64) {
    let denom = 1.0 - b * b;
    (Complex64::new((1.0 - a * b) / denom, 0.0), (a - b) / denom)
}

fn off_negative_axis(w: Complex64) -> bool {
    !(w.im == 0.0 && w.re <= 0.0)
}

fn cardioid_polynomial(w: Complex64) -> f64 {
    let (u, v) = (w.re, w.im);
    let s = 9.0 * (u * u + v * v);
    let lhs = s - 18.0 * u + 5.0;
    lhs * lhs - 16.0 * (s - 6.0 * u + 1.0)
}

fn nephroid_polynomial(w: Complex64) -> f64 {
    let (u, v) = (w.re, w.im);
    let q = (u - 1.0) * (u - 1.0) + v * v - 4.0 / 9.0;
    q * q * q - 4.0 * v * v / 3.0
}

/// Boundary of the parabolic region: the superordinate map evaluated at
/// `e^{i theta}`. Defined for `theta` not a multiple of `2 pi` (the curve is
/// unbounded; the parametrization escapes to infinity there).
fn parabola_map(theta: f64) -> Complex64 {
    let t = theta.rem_euclid(TAU);
    if t == 0.0 {
        return Complex64::new(f64::INFINITY, f64::INFINITY);
    }
    // sqrt(e^{it}) = e^{it/2} with t/2 in [0, pi), so Im sqrt(z) >= 0.
    let s = Complex64::from_polar(1.0, 0.5 * t);
    let log_ratio = ((ONE + s) / (ONE - s)).ln();
    ONE + 2.0 / (PI * PI) * log_ratio * log_ratio
}

fn rational_map(z: Complex64) -> Complex64 {
    let k = std::f64::consts::SQRT_2 + 1.0;
    ONE + (k * z + z * z) / (k * k - k * z)
}

impl Region {
    /// The eight parameter-free catalog regions.
    pub const NAMED: [Region; 8] = [
        Region::Parabola,
        Region::ExpRegion,
        Region::Cardioid,
        Region::Sine,
        Region::Lune,
        Region::Rational,
        Region::Nephroid,
        Region::Sigmoid,
    ];

    pub fn half_plane(alpha: f64) -> Result<Region> {
        check_alpha(alpha)?;
        Ok(Region::HalfPlane { alpha })
    }

    pub fn centered_disc(alpha: f64) -> Result<Region> {
        check_alpha(alpha)?;
        Ok(Region::CenteredDisc { alpha })
    }

    pub fn janowski(a: f64, b: f64) -> Result<Region> {
        if b >= -1.0 && b < a && a <= 1.0 {
            Ok(Region::JanowskiDisc { a, b })
        } else {
            Err(Error::JanowskiOutOfRange { a, b })
        }
    }

    /// The ten catalog region kinds at their default parameters.
    pub fn catalog_defaults() -> Vec<Region> {
        let mut regions = vec![
            Region::HalfPlane { alpha: 0.0 },
            Region::CenteredDisc { alpha: 0.0 },
        ];
        regions.extend(Region::NAMED);
        regions
    }

    /// Lowercase token used by the CLI and in reports.
    pub fn token(&self) -> &'static str {
        match self {
            Region::HalfPlane { .. } => "halfplane",
            Region::CenteredDisc { .. } => "disc",
            Region::JanowskiDisc { .. } => "janowski",
            Region::Parabola => "parabola",
            Region::ExpRegion => "exp",
            Region::Cardioid => "cardioid",
            Region::Sine => "sine",
            Region::Lune => "lune",
            Region::Rational => "rational",
            Region::Nephroid => "nephroid",
            Region::Sigmoid => "sigmoid",
        }
    }

    /// Human-readable parameter list, empty for the parameter-free regions.
    pub fn params_label(&self) -> String {
        match self {
            Region::HalfPlane { alpha } | Region::CenteredDisc { alpha } => {
                format!("alpha={alpha}")
            }
            Region::JanowskiDisc { a, b } => format!("A={a};B={b}"),
            _ => String::new(),
        }
    }

    /// Builds a region from a CLI token plus parameters.
    pub fn from_token(token: &str, alpha: f64, a: f64, b: f64) -> Result<Region> {
        match token.to_ascii_lowercase().as_str() {
            "halfplane" => Region::half_plane(alpha),
            "disc" => Region::centered_disc(alpha),
            "janowski" => Region::janowski(a, b),
            "parabola" => Ok(Region::Parabola),
            "exp" => Ok(Region::ExpRegion),
            "cardioid" => Ok(Region::Cardioid),
            "sine" => Ok(Region::Sine),
            "lune" => Ok(Region::Lune),
            "rational" => Ok(Region::Rational),
            "nephroid" => Ok(Region::Nephroid),
            "sigmoid" => Ok(Region::Sigmoid),
            _ => Err(Error::UnknownRegion(token.to_string())),
        }
    }

    /// Whether `w` is interior to the region.
    ///
    /// Total on finite inputs; non-finite points are never members. Points
    /// within [`EXCLUSION_BAND`] of the boundary (measured on the defining
    /// inequality) are excluded.
    pub fn contains(&self, w: Complex64) -> bool {
        if !w.re.is_finite() || !w.im.is_finite() {
            return false;
        }
        match self {
            Region::HalfPlane { alpha } => w.re - alpha > EXCLUSION_BAND,
            Region::CenteredDisc { alpha } => (1.0 - alpha) - (w - ONE).norm() > EXCLUSION_BAND,
            Region::JanowskiDisc { a, b } => {
                if *b == -1.0 {
                    w.re - (1.0 - a) / 2.0 > EXCLUSION_BAND
                } else {
                    let (center, radius) = janowski_disc(*a, *b);
                    radius - (w - center).norm() > EXCLUSION_BAND
                }
            }
            Region::Parabola => w.re - (w - ONE).norm() > EXCLUSION_BAND,
            Region::ExpRegion => off_negative_axis(w) && 1.0 - w.ln().norm() > EXCLUSION_BAND,
            Region::Cardioid => -cardioid_polynomial(w) > EXCLUSION_BAND,
            Region::Lune => 2.0 * w.norm() - (w * w - ONE).norm() > EXCLUSION_BAND,
            Region::Nephroid => -nephroid_polynomial(w) > EXCLUSION_BAND,
            Region::Sigmoid => {
                let denom = Complex64::new(2.0, 0.0) - w;
                if denom.norm() == 0.0 {
                    return false;
                }
                let q = w / denom;
                off_negative_axis(q) && 1.0 - q.ln().norm() > EXCLUSION_BAND
            }
            Region::Sine | Region::Rational => {
                matches!(self.winding_membership(w), Ok(Membership::Inside))
            }
        }
    }

    /// The boundary parametrization `phi(e^{i theta})` of the superordinate
    /// map, or the circle parametrization for the disc variants.
    ///
    /// Errors for the half-plane (and the Janowski case `B = -1`), whose
    /// boundary is a line.
    pub fn boundary_point(&self, theta: f64) -> Result<Complex64> {
        let z = Complex64::from_polar(1.0, theta);
        Ok(match self {
            Region::HalfPlane { .. } => return Err(Error::UnboundedBoundary),
            Region::CenteredDisc { alpha } => ONE + (1.0 - alpha) * z,
            Region::JanowskiDisc { a, b } => {
                if *b == -1.0 {
                    return Err(Error::UnboundedBoundary);
                }
                let (center, radius) = janowski_disc(*a, *b);
                center + radius * z
            }
            Region::Parabola => parabola_map(theta),
            Region::ExpRegion => z.exp(),
            Region::Cardioid => ONE + 4.0 / 3.0 * z + 2.0 / 3.0 * z * z,
            Region::Sine => ONE + z.sin(),
            Region::Lune => z + (ONE + z * z).sqrt(),
            Region::Rational => rational_map(z),
            Region::Nephroid => ONE + z - z * z * z / 3.0,
            Region::Sigmoid => Complex64::new(2.0, 0.0) / (ONE + (-z).exp()),
        })
    }

    /// Uniform closed polyline `[phi(2 pi k/n)]` for winding-number tests.
    ///
    /// Errors for regions without a closed bounded boundary (half-plane,
    /// Janowski with `B = -1`, parabola).
    pub fn boundary_polyline(&self, samples: usize) -> Result<Vec<Complex64>> {
        if matches!(self, Region::Parabola) {
            return Err(Error::UnboundedBoundary);
        }
        let step = TAU / samples as f64;
        (0..samples)
            .map(|k| self.boundary_point(step * k as f64))
            .collect()
    }

    /// Winding-number membership against the parametrized boundary, with
    /// adaptive refinement near the query point.
    ///
    /// Usable for every region with a closed bounded boundary, including the
    /// ones whose `contains` uses an explicit inequality; the two routes are
    /// cross-validated in the verification suites.
    pub fn winding_membership(&self, w: Complex64) -> Result<Membership> {
        let polyline = self.boundary_polyline(BOUNDARY_GRID_SAMPLES)?;
        Ok(winding_membership(
            &|t| self.boundary_point(t).expect("bounded boundary"),
            &polyline,
            w,
        ))
    }

    /// Minimum distance from `w` to the boundary curve: a dense grid scan
    /// followed by golden-section refinement of the three smallest local
    /// minima. Returns `(distance, theta, boundary point)`.
    fn min_curve_distance(&self, w: Complex64) -> (f64, f64, Complex64) {
        let n = BOUNDARY_GRID_SAMPLES;
        let step = TAU / n as f64;
        // Midpoint grid: keeps the parabola parametrization away from its
        // escape point at theta = 0.
        let grid_theta = |k: usize| (k as f64 + 0.5) * step;
        let dist = |t: f64| {
            (self
                .boundary_point(t.rem_euclid(TAU))
                .expect("bounded boundary")
                - w)
                .norm()
        };
        let values: Vec<f64> = (0..n).map(|k| dist(grid_theta(k))).collect();

        let mut minima: Vec<(f64, usize)> = (0..n)
            .filter(|&k| {
                let prev = values[(k + n - 1) % n];
                let next = values[(k + 1) % n];
                values[k] <= prev && values[k] <= next
            })
            .map(|k| (values[k], k))
            .collect();
        minima.sort_by(|x, y| x.0.total_cmp(&y.0));

        let mut best = (f64::INFINITY, 0.0);
        for &(_, k) in minima.iter().take(3) {
            let (arg, val) = golden_min(
                dist,
                grid_theta(k) - step,
                grid_theta(k) + step,
                REFINEMENT_BRACKET,
            );
            if val < best.0 {
                best = (val, arg.rem_euclid(TAU));
            }
        }
        if let Some(&(val, k)) = minima.first() {
            if val < best.0 {
                best = (val, grid_theta(k));
            }
        }
        let point = self.boundary_point(best.1).expect("bounded boundary");
        (best.0, best.1, point)
    }

    /// The inradius about 1: the largest `rho` such that the disc
    /// `|w - 1| < rho` is contained in the region.
    ///
    /// Analytic for the half-plane and disc variants, a refined boundary
    /// minimum for the curve-bounded regions. For the catalog the minimum is
    /// attained on the real axis; if a numeric minimum were ever found off
    /// the axis, the numeric value governs and a diagnostic goes to stderr.
    pub fn inradius_about_one(&self) -> f64 {
        match self {
            Region::HalfPlane { alpha } | Region::CenteredDisc { alpha } => 1.0 - alpha,
            Region::JanowskiDisc { a, b } => {
                if *b == -1.0 {
                    (1.0 + a) / 2.0
                } else {
                    let (center, radius) = janowski_disc(*a, *b);
                    radius - (ONE - center).norm()
                }
            }
            _ => {
                let (distance, _, point) = self.min_curve_distance(ONE);
                if point.im.abs() > 1e-6 {
                    eprintln!(
                        "inradius_about_one({}): nearest boundary point {point} lies off the \
                         real axis; the numeric minimum {distance} governs",
                        self.token()
                    );
                }
                distance
            }
        }
    }

    /// Distance from `w` to the region boundary (analytic where possible,
    /// otherwise the refined boundary-curve minimum).
    pub fn boundary_distance(&self, w: Complex64) -> f64 {
        match self {
            Region::HalfPlane { alpha } => (w.re - alpha).abs(),
            Region::CenteredDisc { alpha } => ((w - ONE).norm() - (1.0 - alpha)).abs(),
            Region::JanowskiDisc { a, b } => {
                if *b == -1.0 {
                    (w.re - (1.0 - a) / 2.0).abs()
                } else {
                    let (center, radius) = janowski_disc(*a, *b);
                    ((w - center).norm() - radius).abs()
                }
            }
            _ => self.min_curve_distance(w).0,
        }
    }

    /// Whether the closed disc `|w - center| <= rho` fits strictly inside
    /// the region. Boundary touching counts as not fitting.
    ///
    /// Decided analytically for the half-plane and disc variants (Silverman
    /// for disc-in-disc), by the refined boundary minimum otherwise.
    pub fn disc_in_region(&self, center: Complex64, rho: f64) -> Result<bool> {
        if rho.is_nan() || rho < 0.0 {
            return Err(Error::NegativeDiscRadius(rho));
        }
        if !self.contains(center) {
            return Err(Error::CenterOutsideRegion);
        }
        Ok(match self {
            Region::HalfPlane { alpha } => center.re - rho - alpha > EXCLUSION_BAND,
            Region::CenteredDisc { alpha } => {
                (1.0 - alpha) - rho - (center - ONE).norm() > EXCLUSION_BAND
            }
            Region::JanowskiDisc { a, b } => {
                if *b == -1.0 {
                    center.re - rho - (1.0 - a) / 2.0 > EXCLUSION_BAND
                } else {
                    let (jcenter, jradius) = janowski_disc(*a, *b);
                    (jradius - rho) - (center - jcenter).norm() > EXCLUSION_BAND
                }
            }
            _ => rho < self.min_curve_distance(center).0 - EXCLUSION_BAND,
        })
    }
}

/// Silverman's criterion: `{|w - c| < d}` is contained in `{|w - a| < b}`
/// if and only if `|a - c| <= b - d`. Decided exactly, no exclusion band.
pub fn disc_in_disc(c: Complex64, d: f64, a: Complex64, b: f64) -> bool {
    (a - c).norm() <= b - d
}

/// Winding number of the sampled boundary about `w`, refined adaptively by
/// evaluating `curve` wherever the polyline is too coarse relative to the
/// distance from `w`. `polyline[k]` must equal `curve(2 pi k / n)`.
pub fn winding_membership(
    curve: &dyn Fn(f64) -> Complex64,
    polyline: &[Complex64],
    w: Complex64,
) -> Membership {
    let n = polyline.len();
    let step = TAU / n as f64;
    let mut total = 0.0;
    for k in 0..n {
        let p0 = polyline[k];
        let p1 = polyline[(k + 1) % n];
        match segment_angle(curve, w, k as f64 * step, (k + 1) as f64 * step, p0, p1, 0) {
            Some(angle) => total += angle,
            None => return Membership::Boundary,
        }
    }
    if (total / TAU).round() as i64 >= 1 {
        Membership::Inside
    } else {
        Membership::Outside
    }
}

/// Signed angle swept by the curve arc `[t0, t1]` as seen from `w`, or
/// `None` when the arc passes within [`EXCLUSION_BAND`] of `w`.
fn segment_angle(
    curve: &dyn Fn(f64) -> Complex64,
    w: Complex64,
    t0: f64,
    t1: f64,
    p0: Complex64,
    p1: Complex64,
    depth: u32,
) -> Option<f64> {
    let d0 = p0 - w;
    let d1 = p1 - w;
    let n0 = d0.norm();
    let n1 = d1.norm();
    if n0 < EXCLUSION_BAND || n1 < EXCLUSION_BAND {
        return None;
    }
    // A short chord seen from far away subtends an unambiguous angle.
    if (p1 - p0).norm() <= 0.5 * n0.min(n1) {
        return Some((d1 * d0.conj()).arg());
    }
    if depth >= MAX_WINDING_DEPTH {
        return None;
    }
    let tm = 0.5 * (t0 + t1);
    let pm = curve(tm.rem_euclid(TAU));
    let left = segment_angle(curve, w, t0, tm, p0, pm, depth + 1)?;
    let right = segment_angle(curve, w, tm, t1, pm, p1, depth + 1)?;
    Some(left + right)
}
