//! Members of the classes `T1` and `T2` assembled from explicit Schwarz
//! functions.
//!
//! A Schwarz function here is a finite Blaschke product with a rotation,
//! `w(z) = e^{i phase} z prod_j (a_j - z)/(1 - conj(a_j) z)` with `|a_j| < 1`.
//! Every such map fixes the origin and satisfies `|w(z)| <= |z|`, and its
//! derivative has a closed form, so subordinate factors `sqrt(1 + w(z))` and
//! `e^{w(z)}` and their logarithmic derivatives can be evaluated without any
//! numerical differentiation.

use num_complex::Complex64;

use crate::{Error, Result};

/// The two function classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// Factors subordinate to `sqrt(1+z)`; extremal member `z (1+z)^{3/2}`.
    T1,
    /// Factors subordinate to `e^z`; extremal member `z e^{3z}`.
    T2,
}

impl Family {
    pub const ALL: [Family; 2] = [Family::T1, Family::T2];

    /// The subordinate-factor kind the family is built from.
    pub fn factor_kind(self) -> FactorKind {
        match self {
            Family::T1 => FactorKind::SqrtOnePlus,
            Family::T2 => FactorKind::Exp,
        }
    }

    /// Lowercase token used by the CLI and in reports.
    pub fn token(self) -> &'static str {
        match self {
            Family::T1 => "t1",
            Family::T2 => "t2",
        }
    }

    pub fn parse(s: &str) -> Result<Family> {
        match s.to_ascii_lowercase().as_str() {
            "t1" => Ok(Family::T1),
            "t2" => Ok(Family::T2),
            _ => Err(Error::UnknownFamily(s.to_string())),
        }
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.token())
    }
}

/// The superordinate function a factor is subordinate to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FactorKind {
    /// `h(z) = sqrt(1+z)`, principal branch, `h(0) = 1`.
    SqrtOnePlus,
    /// `h(z) = e^z`.
    Exp,
}

fn check_in_disc(z: Complex64) -> Result<()> {
    // NaN norms fail the comparison and are rejected as well.
    if z.norm() < 1.0 {
        Ok(())
    } else {
        Err(Error::PointOutsideDisc(z.norm()))
    }
}

/// An analytic self-map of the unit disc fixing the origin:
/// a rotation times `z` times a finite Blaschke product.
#[derive(Debug, Clone, PartialEq)]
pub struct SchwarzMap {
    phase: f64,
    blaschke_params: Vec<Complex64>,
}

impl SchwarzMap {
    /// Builds `w(z) = e^{i phase} z prod_j (a_j - z)/(1 - conj(a_j) z)`.
    ///
    /// Each parameter must have modulus strictly below 1. The phase is
    /// reduced into `[0, 2pi)`.
    pub fn new(phase: f64, blaschke_params: Vec<Complex64>) -> Result<Self> {
        for a in &blaschke_params {
            let norm = a.norm();
            if norm.is_nan() || norm >= 1.0 {
                return Err(Error::BlaschkeParamOutsideDisc(norm));
            }
        }
        Ok(SchwarzMap {
            phase: phase.rem_euclid(std::f64::consts::TAU),
            blaschke_params,
        })
    }

    /// The identity map `w(z) = z`.
    pub fn identity() -> Self {
        SchwarzMap {
            phase: 0.0,
            blaschke_params: Vec::new(),
        }
    }

    pub fn phase(&self) -> f64 {
        self.phase
    }

    pub fn blaschke_params(&self) -> &[Complex64] {
        &self.blaschke_params
    }

    /// Evaluates `w(z)` for `|z| < 1`. The result satisfies `|w(z)| <= |z|`.
    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        check_in_disc(z)?;
        let rotation = Complex64::from_polar(1.0, self.phase);
        let mut w = rotation * z;
        for a in &self.blaschke_params {
            w *= (a - z) / (1.0 - a.conj() * z);
        }
        Ok(w)
    }

    /// Evaluates `w'(z)` by the product rule over the Blaschke factors.
    pub fn eval_deriv(&self, z: Complex64) -> Result<Complex64> {
        check_in_disc(z)?;
        let factors: Vec<Complex64> = self
            .blaschke_params
            .iter()
            .map(|a| (a - z) / (1.0 - a.conj() * z))
            .collect();
        let product: Complex64 = factors.iter().product();
        // d/dz [(a - z)/(1 - conj(a) z)] = (|a|^2 - 1)/(1 - conj(a) z)^2
        let mut product_deriv = Complex64::new(0.0, 0.0);
        for (j, a) in self.blaschke_params.iter().enumerate() {
            let denom = 1.0 - a.conj() * z;
            let dj = (a.norm_sqr() - 1.0) / (denom * denom);
            let rest: Complex64 = factors
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != j)
                .map(|(_, b)| b)
                .product();
            product_deriv += dj * rest;
        }
        let rotation = Complex64::from_polar(1.0, self.phase);
        Ok(rotation * (product + z * product_deriv))
    }
}

/// A factor `p = h o w` subordinate to `h`, with `p(0) = 1` and `p`
/// non-vanishing on the disc.
#[derive(Debug, Clone, PartialEq)]
pub struct SubordinateFactor {
    kind: FactorKind,
    map: SchwarzMap,
}

impl SubordinateFactor {
    pub fn new(kind: FactorKind, map: SchwarzMap) -> Self {
        SubordinateFactor { kind, map }
    }

    /// The factor with the identity Schwarz map, i.e. `h` itself.
    pub fn extremal(kind: FactorKind) -> Self {
        SubordinateFactor::new(kind, SchwarzMap::identity())
    }

    pub fn kind(&self) -> FactorKind {
        self.kind
    }

    pub fn map(&self) -> &SchwarzMap {
        &self.map
    }

    /// Evaluates `p(z)`.
    ///
    /// For the square-root kind this is `sqrt(1 + w(z))` with the principal
    /// branch; `1 + w(z)` has positive real part for `|w| < 1`, so the branch
    /// cut is never crossed.
    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        let w = self.map.eval(z)?;
        Ok(match self.kind {
            FactorKind::SqrtOnePlus => (1.0 + w).sqrt(),
            FactorKind::Exp => w.exp(),
        })
    }

    /// Evaluates `z p'(z)/p(z)` from the identities
    /// `2 z p'/p = z w'/(1 + w)` (square-root kind) and `z p'/p = z w'`
    /// (exponential kind).
    pub fn log_derivative(&self, z: Complex64) -> Result<Complex64> {
        let w = self.map.eval(z)?;
        let dw = self.map.eval_deriv(z)?;
        Ok(match self.kind {
            FactorKind::SqrtOnePlus => z * dw / (2.0 * (1.0 + w)),
            FactorKind::Exp => z * dw,
        })
    }
}

/// A class member `f(z) = z p(z) p1(z) p2(z)` with all three factors of the
/// family's kind. Normalized: `f(0) = 0`, `f'(0) = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassMember {
    family: Family,
    factors: [SubordinateFactor; 3],
}

impl ClassMember {
    /// Builds a member from the three Schwarz maps behind `p`, `p1`, `p2`.
    pub fn new(family: Family, p: SchwarzMap, p1: SchwarzMap, p2: SchwarzMap) -> Self {
        let kind = family.factor_kind();
        ClassMember {
            family,
            factors: [
                SubordinateFactor::new(kind, p),
                SubordinateFactor::new(kind, p1),
                SubordinateFactor::new(kind, p2),
            ],
        }
    }

    /// The extremal member: all factors use the identity Schwarz map, giving
    /// `z (1+z)^{3/2}` for `T1` and `z e^{3z}` for `T2`.
    pub fn extremal(family: Family) -> Self {
        ClassMember::new(
            family,
            SchwarzMap::identity(),
            SchwarzMap::identity(),
            SchwarzMap::identity(),
        )
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn factors(&self) -> &[SubordinateFactor; 3] {
        &self.factors
    }

    /// Evaluates `f(z) = z p(z) p1(z) p2(z)`.
    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        let mut f = z;
        for factor in &self.factors {
            f *= factor.eval(z)?;
        }
        Ok(f)
    }

    /// Evaluates `z f'(z)/f(z) = 1 + sum_i z p_i'(z)/p_i(z)`.
    ///
    /// Each summand carries an explicit factor `z`, so the expression is
    /// finite at the origin and returns exactly 1 there.
    pub fn log_derivative(&self, z: Complex64) -> Result<Complex64> {
        let mut ld = Complex64::new(1.0, 0.0);
        for factor in &self.factors {
            ld += factor.log_derivative(z)?;
        }
        Ok(ld)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TOL: f64 = 1e-14;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn identity_map_fixes_points() {
        let id = SchwarzMap::identity();
        assert_eq!(id.eval(c(0.3, 0.0)).unwrap(), c(0.3, 0.0));
        assert_eq!(id.eval(c(0.0, 0.0)).unwrap(), c(0.0, 0.0));
        assert_eq!(id.eval_deriv(c(0.7, -0.1)).unwrap(), c(1.0, 0.0));
    }

    #[test]
    fn any_map_fixes_origin() {
        let map = SchwarzMap::new(1.3, vec![c(0.5, 0.2), c(-0.1, 0.6)]).unwrap();
        assert_eq!(map.eval(c(0.0, 0.0)).unwrap(), c(0.0, 0.0));
    }

    #[test]
    fn blaschke_hand_value() {
        // w(z) = z (0.5 - z)/(1 - 0.5 z) at z = 0.2: 0.2 * 0.3/0.9 = 1/15.
        let map = SchwarzMap::new(0.0, vec![c(0.5, 0.0)]).unwrap();
        let w = map.eval(c(0.2, 0.0)).unwrap();
        assert!((w.re - 1.0 / 15.0).abs() < TOL);
        assert!(w.im.abs() < TOL);
    }

    #[test]
    fn blaschke_derivative_at_origin() {
        // d/dz [z (0.5 - z)/(1 - 0.5 z)] at 0 is 0.5.
        let map = SchwarzMap::new(0.0, vec![c(0.5, 0.0)]).unwrap();
        let d = map.eval_deriv(c(0.0, 0.0)).unwrap();
        assert!((d - c(0.5, 0.0)).norm() < TOL);
    }

    #[test]
    fn schwarz_pick_equality_for_identity() {
        let id = SchwarzMap::identity();
        let z = c(0.9, 0.0);
        let w = id.eval(z).unwrap();
        let dw = id.eval_deriv(z).unwrap();
        let rhs = (1.0 - w.norm_sqr()) / (1.0 - z.norm_sqr());
        assert!((dw.norm() - 1.0).abs() < TOL);
        assert!((rhs - 1.0).abs() < TOL);
    }

    #[test]
    fn map_rejects_bad_inputs() {
        assert!(matches!(
            SchwarzMap::new(0.0, vec![c(1.0, 0.0)]),
            Err(Error::BlaschkeParamOutsideDisc(_))
        ));
        let id = SchwarzMap::identity();
        assert!(matches!(
            id.eval(c(1.0, 0.0)),
            Err(Error::PointOutsideDisc(_))
        ));
        assert!(matches!(
            id.eval_deriv(c(0.8, 0.8)),
            Err(Error::PointOutsideDisc(_))
        ));
        assert!(id.eval(c(f64::NAN, 0.0)).is_err());
    }

    #[test]
    fn factor_values() {
        let sqrt = SubordinateFactor::extremal(FactorKind::SqrtOnePlus);
        assert_eq!(sqrt.eval(c(0.0, 0.0)).unwrap(), c(1.0, 0.0));
        // sqrt(1 - 0.75) = 0.5
        assert!((sqrt.eval(c(-0.75, 0.0)).unwrap() - c(0.5, 0.0)).norm() < TOL);

        let exp = SubordinateFactor::extremal(FactorKind::Exp);
        let v = exp.eval(c(0.5, 0.0)).unwrap();
        assert!((v.re - 0.5f64.exp()).abs() < TOL);
        assert!((v.re - 1.648_721_270_700_128_2).abs() < 1e-12);
    }

    #[test]
    fn factor_log_derivatives() {
        let sqrt = SubordinateFactor::extremal(FactorKind::SqrtOnePlus);
        let exp = SubordinateFactor::extremal(FactorKind::Exp);
        assert_eq!(sqrt.log_derivative(c(0.0, 0.0)).unwrap(), c(0.0, 0.0));
        assert!((exp.log_derivative(c(0.2, 0.0)).unwrap() - c(0.2, 0.0)).norm() < TOL);
        // z/(2(1+z)) at z = -0.4: -0.4/1.2 = -1/3.
        let v = sqrt.log_derivative(c(-0.4, 0.0)).unwrap();
        assert!((v - c(-1.0 / 3.0, 0.0)).norm() < TOL);
    }

    #[test]
    fn log_derivative_matches_central_difference() {
        // Cross-validates the analytic identities against numerical
        // differentiation of the factor itself.
        let h = 1e-5;
        let maps = [
            SchwarzMap::identity(),
            SchwarzMap::new(0.4, vec![c(0.3, -0.2)]).unwrap(),
            SchwarzMap::new(5.1, vec![c(-0.5, 0.1), c(0.2, 0.6), c(0.0, -0.7)]).unwrap(),
        ];
        for kind in [FactorKind::SqrtOnePlus, FactorKind::Exp] {
            for map in &maps {
                let factor = SubordinateFactor::new(kind, map.clone());
                for z in [c(0.3, 0.1), c(-0.2, -0.5), c(0.6, 0.0)] {
                    let dp = (factor.eval(z + c(h, 0.0)).unwrap()
                        - factor.eval(z - c(h, 0.0)).unwrap())
                        / (2.0 * h);
                    let expected = z * dp / factor.eval(z).unwrap();
                    let got = factor.log_derivative(z).unwrap();
                    assert!(
                        (got - expected).norm() <= 1e-6 * expected.norm().max(1.0),
                        "kind {kind:?} map {map:?} z {z}: {got} vs {expected}"
                    );
                }
            }
        }
    }

    #[test]
    fn member_normalization() {
        let member = ClassMember::new(
            Family::T1,
            SchwarzMap::new(2.0, vec![c(0.4, 0.1)]).unwrap(),
            SchwarzMap::identity(),
            SchwarzMap::new(0.0, vec![c(-0.2, -0.3), c(0.1, 0.0)]).unwrap(),
        );
        assert_eq!(member.eval(c(0.0, 0.0)).unwrap(), c(0.0, 0.0));
        assert_eq!(member.log_derivative(c(0.0, 0.0)).unwrap(), c(1.0, 0.0));
        // f'(0) = 1 via a central difference.
        let h = 1e-6;
        let d = (member.eval(c(h, 0.0)).unwrap() - member.eval(c(-h, 0.0)).unwrap()) / (2.0 * h);
        assert!((d - c(1.0, 0.0)).norm() < 1e-9);
    }

    #[test]
    fn extremal_members_match_closed_forms() {
        let f1 = ClassMember::extremal(Family::T1);
        let f2 = ClassMember::extremal(Family::T2);

        let v1 = f1.eval(c(-0.4, 0.0)).unwrap();
        assert!((v1.re - (-0.4) * 0.6f64.powf(1.5)).abs() < 1e-15);
        assert!((v1.re + 0.185_903_2).abs() < 1e-7);

        let v2 = f2.eval(c(0.1, 0.0)).unwrap();
        assert!((v2.re - 0.1 * 0.3f64.exp()).abs() < 1e-15);
        assert!((v2.re - 0.134_985_9).abs() < 1e-7);

        // Pointwise agreement on a grid of |z| = 0.5.
        for k in 0..64 {
            let theta = std::f64::consts::TAU * k as f64 / 64.0;
            let z = Complex64::from_polar(0.5, theta);
            let want1 = z * (1.0 + z).powf(1.5);
            let want2 = z * (3.0 * z).exp();
            assert!((f1.eval(z).unwrap() - want1).norm() < 1e-12);
            assert!((f2.eval(z).unwrap() - want2).norm() < 1e-12);
        }
    }

    #[test]
    fn extremal_log_derivatives_vanish_at_known_points() {
        // z f1'/f1 = (2+5z)/(2+2z) vanishes at z = -2/5; 1+3z at z = -1/3.
        let f1 = ClassMember::extremal(Family::T1);
        let f2 = ClassMember::extremal(Family::T2);
        assert!(f1.log_derivative(c(-0.4, 0.0)).unwrap().norm() < TOL);
        assert!(f2.log_derivative(c(-1.0 / 3.0, 0.0)).unwrap().norm() < TOL);

        // And match the rational closed forms elsewhere.
        for x in [-0.7, -0.2, 0.0, 0.35, 0.8] {
            let z = c(x, 0.0);
            let got1 = f1.log_derivative(z).unwrap();
            let want1 = (2.0 + 5.0 * z) / (2.0 + 2.0 * z);
            assert!((got1 - want1).norm() < 1e-13);
            let got2 = f2.log_derivative(z).unwrap();
            assert!((got2 - (1.0 + 3.0 * z)).norm() < 1e-13);
        }
    }

    #[test]
    fn t2_second_taylor_coefficient_is_three() {
        // Cauchy integral over 16 roots of unity at radius 0.5 extracts the
        // z^2 coefficient of z e^{3z}.
        let f2 = ClassMember::extremal(Family::T2);
        let n = 16;
        let rho = 0.5;
        let mut sum = Complex64::new(0.0, 0.0);
        for k in 0..n {
            let theta = std::f64::consts::TAU * k as f64 / n as f64;
            let z = Complex64::from_polar(rho, theta);
            sum += f2.eval(z).unwrap() / z.powi(2);
        }
        let a2 = sum / n as f64;
        assert!((a2 - c(3.0, 0.0)).norm() < 1e-9, "a2 = {a2}");
    }

    #[test]
    fn contraction_for_random_maps() {
        use rand::Rng;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let n = rng.random_range(0..=3);
            let params: Vec<Complex64> = (0..n)
                .map(|_| {
                    Complex64::from_polar(
                        rng.random_range(0.0..=0.95),
                        rng.random_range(0.0..std::f64::consts::TAU),
                    )
                })
                .collect();
            let map = SchwarzMap::new(rng.random_range(0.0..std::f64::consts::TAU), params).unwrap();
            let z = Complex64::from_polar(
                rng.random_range(0.0..0.999),
                rng.random_range(0.0..std::f64::consts::TAU),
            );
            let w = map.eval(z).unwrap();
            assert!(w.norm() <= z.norm() + 1e-12, "map {map:?} z {z}");
            let dw = map.eval_deriv(z).unwrap();
            let pick = (1.0 - w.norm_sqr()) / (1.0 - z.norm_sqr());
            assert!(dw.norm() <= pick + 1e-12, "Schwarz-Pick violated: {map:?} {z}");
        }
    }
}
