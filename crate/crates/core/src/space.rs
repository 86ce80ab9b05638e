//! The three concrete spaces and their metrics.
//!
//! Interval and line carry the Euclidean metric; the circle is [0, 1) with
//! the arc-length wrap metric. Property checks use the bounded metric
//! `min(d, 1)`; raw distance stays available for diagnostics.

use std::fmt;
use std::str::FromStr;

use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::dyadic::{circle_tent, Bounds, Dyadic};
use crate::errors::{DynError, DynResult};
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Space {
    #[serde(rename = "interval")]
    Interval01,
    Circle,
    #[serde(rename = "line")]
    RealLine,
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Space::Interval01 => "interval",
            Space::Circle => "circle",
            Space::RealLine => "line",
        };
        write!(f, "{s}")
    }
}

/// A coordinate: exact rational, or an error-bounded high-precision real
/// (irrational circle data only).
#[derive(Clone, Debug, PartialEq)]
pub enum Point {
    Exact(Rational),
    Approx(Dyadic),
}

impl Point {
    pub fn exact(r: Rational) -> Self {
        Point::Exact(r)
    }

    pub fn bounds(&self) -> Bounds {
        match self {
            Point::Exact(r) => Bounds::exact(r.clone()),
            Point::Approx(d) => d.bounds(),
        }
    }

    pub fn as_exact(&self) -> Option<&Rational> {
        match self {
            Point::Exact(r) => Some(r),
            Point::Approx(_) => None,
        }
    }

    pub fn expect_exact(&self, what: &str) -> DynResult<&Rational> {
        self.as_exact()
            .ok_or_else(|| DynError::Capability(format!("{what} requires exact rational input")))
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Exact(r) => write!(f, "{r}"),
            Point::Approx(d) => write!(f, "{d}"),
        }
    }
}

impl FromStr for Point {
    type Err = DynError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        // Hex significand form is emit-only; inputs are rational.
        s.parse::<Rational>()
            .map(Point::Exact)
            .map_err(|e| DynError::Parse(e.to_string()))
    }
}

impl Serialize for Point {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Point {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(de::Error::custom)
    }
}

impl Space {
    /// Check the domain constraint for an exact coordinate.
    pub fn validate_rational(&self, x: &Rational) -> DynResult<()> {
        match self {
            Space::Interval01 => {
                if x < &Rational::zero() || x > &Rational::one() {
                    Err(DynError::Domain(format!("{x} outside [0, 1]")))
                } else {
                    Ok(())
                }
            }
            Space::Circle => {
                if x < &Rational::zero() || x >= &Rational::one() {
                    Err(DynError::Domain(format!("{x} outside [0, 1)")))
                } else {
                    Ok(())
                }
            }
            Space::RealLine => Ok(()),
        }
    }

    pub fn validate(&self, p: &Point) -> DynResult<()> {
        match p {
            Point::Exact(r) => self.validate_rational(r),
            Point::Approx(_) => match self {
                Space::Circle => Ok(()),
                _ => Err(DynError::Domain(
                    "high-precision points only live on the circle".into(),
                )),
            },
        }
    }
}

/// Metric of the space, as a rational enclosure (exact for rational inputs).
pub fn distance(space: Space, x: &Point, y: &Point) -> DynResult<Bounds> {
    space.validate(x)?;
    space.validate(y)?;
    let diff = x.bounds().sub(&y.bounds());
    Ok(match space {
        Space::Interval01 | Space::RealLine => diff.abs(),
        Space::Circle => circle_tent(&diff),
    })
}

/// Bounded metric `min(d, 1)` used by the property checkers.
pub fn bounded_distance(space: Space, x: &Point, y: &Point) -> DynResult<Bounds> {
    Ok(distance(space, x, y)?.cap(&Rational::one()))
}

/// Exact distance between two rationals in the given space.
pub fn distance_exact(space: Space, x: &Rational, y: &Rational) -> Rational {
    match space {
        Space::Interval01 | Space::RealLine => (x - y).abs(),
        Space::Circle => {
            let d = (x - y).fract();
            d.clone().min(Rational::one() - d)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn p(n: i64, d: i64) -> Point {
        Point::exact(rat(n, d))
    }

    #[test]
    fn interval_distance_is_subtraction() {
        let d = distance(Space::Interval01, &p(3, 10), &p(9, 10)).unwrap();
        assert_eq!(d.as_exact(), Some(&rat(3, 5)));
    }

    #[test]
    fn circle_distance_wraps() {
        let d = distance(Space::Circle, &p(9, 10), &p(1, 10)).unwrap();
        assert_eq!(d.as_exact(), Some(&rat(1, 5)));
    }

    #[test]
    fn line_distance_and_cap() {
        let d = distance(Space::RealLine, &p(5, 1), &p(10, 1)).unwrap();
        assert_eq!(d.as_exact(), Some(&rat(5, 1)));
        let b = bounded_distance(Space::RealLine, &p(5, 1), &p(10, 1)).unwrap();
        assert_eq!(b.as_exact(), Some(&rat(1, 1)));
        let b = bounded_distance(Space::RealLine, &p(3, 10), &p(9, 10)).unwrap();
        assert_eq!(b.as_exact(), Some(&rat(3, 5)));
    }

    #[test]
    fn identity_of_indiscernibles() {
        let d = bounded_distance(Space::Interval01, &p(1, 3), &p(1, 3)).unwrap();
        assert_eq!(d.as_exact(), Some(&Rational::zero()));
    }

    #[test]
    fn domain_violations_are_input_errors() {
        assert!(distance(Space::Interval01, &p(3, 2), &p(0, 1)).is_err());
        assert!(distance(Space::Circle, &p(1, 1), &p(0, 1)).is_err());
    }
}
