//! Circle rotations `x -> x + alpha (mod 1)`.
//!
//! Rational angles stay exact; irrational angles carry a 128-bit dyadic
//! approximation with a tracked error bound. Iterates are computed in one
//! step as `x + k alpha` so the error grows linearly in `k`, never worse.

use std::fmt;

use crate::dyadic::{circle_tent, Bounds, Dyadic};
use crate::rational::Rational;
use crate::space::Point;

#[derive(Clone, Debug, PartialEq)]
pub enum Angle {
    Rational(Rational),
    /// Known-irrational angle: enclosure plus a human-readable description.
    Irrational { value: Dyadic, label: String },
}

impl Angle {
    pub fn bounds(&self) -> Bounds {
        match self {
            Angle::Rational(r) => Bounds::exact(r.fract()),
            Angle::Irrational { value, .. } => value.bounds(),
        }
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, Angle::Rational(_))
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Angle::Rational(r) => write!(f, "{r}"),
            Angle::Irrational { label, .. } => write!(f, "{label}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RotationMap {
    pub angle: Angle,
}

impl RotationMap {
    pub fn rational(alpha: Rational) -> Self {
        RotationMap {
            angle: Angle::Rational(alpha.fract()),
        }
    }

    pub fn irrational(value: Dyadic, label: impl Into<String>) -> Self {
        RotationMap {
            angle: Angle::Irrational {
                value: value.mod_one(),
                label: label.into(),
            },
        }
    }

    pub fn eval_point(&self, x: &Point) -> Point {
        match (&self.angle, x) {
            (Angle::Rational(a), Point::Exact(r)) => Point::Exact((r + a).fract()),
            (Angle::Rational(a), Point::Approx(d)) => Point::Approx(d.add_rational(a).mod_one()),
            (Angle::Irrational { value, .. }, Point::Exact(r)) => {
                Point::Approx(value.add_rational(r).mod_one())
            }
            (Angle::Irrational { value, .. }, Point::Approx(d)) => {
                Point::Approx(value.add(d).mod_one())
            }
        }
    }

    /// `x + k alpha` in one step; error `<= k * 2^-128` for irrational angles.
    pub fn iterate_point(&self, x: &Point, k: i64) -> Point {
        let kr = Rational::from_int(k);
        match (&self.angle, x) {
            (Angle::Rational(a), Point::Exact(r)) => Point::Exact((r + a * &kr).fract()),
            (Angle::Rational(a), Point::Approx(d)) => {
                Point::Approx(d.add_rational(&(a * &kr)).mod_one())
            }
            (Angle::Irrational { value, .. }, Point::Exact(r)) => {
                Point::Approx(value.scale(&kr).add_rational(r).mod_one())
            }
            (Angle::Irrational { value, .. }, Point::Approx(d)) => {
                Point::Approx(value.scale(&kr).add(d).mod_one())
            }
        }
    }

    /// Enclosure of the wrap distance between `x + k alpha` and `x`, which is
    /// independent of `x`: the rotation displacement after k steps.
    pub fn displacement_distance(&self, k: i64) -> Bounds {
        let kr = Rational::from_int(k);
        let raw = match &self.angle {
            Angle::Rational(a) => Bounds::exact(a * &kr),
            Angle::Irrational { value, .. } => value.scale(&kr).bounds(),
        };
        circle_tent(&raw)
    }

    pub fn inverse(&self) -> RotationMap {
        match &self.angle {
            Angle::Rational(a) => RotationMap::rational((-a).fract()),
            Angle::Irrational { value, label } => RotationMap {
                angle: Angle::Irrational {
                    value: value.neg().mod_one(),
                    label: format!("-({label})"),
                },
            },
        }
    }

    /// Period of a rational rotation (denominator of alpha), `None` if
    /// irrational.
    pub fn rational_period(&self) -> Option<num_bigint::BigInt> {
        match &self.angle {
            Angle::Rational(a) => Some(a.denom().clone()),
            Angle::Irrational { .. } => None,
        }
    }
}

/// `1/sqrt(2)` at full precision, the paper's favorite irrational angle.
pub fn inv_sqrt2() -> Dyadic {
    Dyadic::sqrt(&Rational::new(1, 2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn rational_rotation_orbit() {
        let rot = RotationMap::rational(rat(1, 3));
        let x = Point::exact(rat(0, 1));
        let p1 = rot.eval_point(&x);
        assert_eq!(p1.as_exact(), Some(&rat(1, 3)));
        let p3 = rot.iterate_point(&x, 3);
        assert_eq!(p3.as_exact(), Some(&rat(0, 1)));
        let back = rot.inverse().eval_point(&p1);
        assert_eq!(back.as_exact(), Some(&rat(0, 1)));
    }

    #[test]
    fn irrational_rotation_error_stays_small() {
        let rot = RotationMap::irrational(inv_sqrt2(), "1/sqrt(2)");
        let d = rot.displacement_distance(10_000);
        assert!((&d.hi - &d.lo) < rat(1, 1 << 30));
    }

    #[test]
    fn displacement_is_wrap_distance() {
        let rot = RotationMap::rational(rat(9, 10));
        let d = rot.displacement_distance(1);
        assert_eq!(d.as_exact(), Some(&rat(1, 10)));
    }
}
