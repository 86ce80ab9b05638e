//! Map classes and the tagged union the checkers consume.

pub mod affine;
pub mod ladder;
pub mod pl;
pub mod power;
pub mod rotation;

use serde::{Deserialize, Serialize};

use crate::dyadic::Dyadic;
use crate::errors::{DynError, DynResult};
use crate::interval::{Interval, IntervalSet};
use crate::rational::Rational;
use crate::space::{Point, Space};

pub use affine::AffineMap;
pub use ladder::{LadderKind, LadderMap};
pub use pl::{PLMap, Piece};
pub use power::{PowVal, PowerMap};
pub use rotation::{Angle, RotationMap};

/// Default cap on iterate breakpoint growth.
pub const ITERATE_BREAKPOINT_CAP: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    Forward,
    TwoSided,
}

#[derive(Clone, Debug, PartialEq)]
pub enum DynMap {
    Pl(PLMap),
    Ladder(LadderMap),
    Rotation(RotationMap),
    Affine(AffineMap),
    Power(PowerMap),
}

impl DynMap {
    pub fn identity(space: Space) -> DynMap {
        match space {
            Space::Circle => DynMap::Rotation(RotationMap::rational(Rational::zero())),
            Space::RealLine => DynMap::Affine(AffineMap::identity()),
            Space::Interval01 => DynMap::Pl(PLMap::identity(space)),
        }
    }

    pub fn space(&self) -> Space {
        match self {
            DynMap::Pl(m) => m.space(),
            DynMap::Ladder(_) => Space::Interval01,
            DynMap::Rotation(_) => Space::Circle,
            DynMap::Affine(_) => Space::RealLine,
            DynMap::Power(_) => Space::Interval01,
        }
    }

    pub fn is_invertible(&self) -> bool {
        match self {
            DynMap::Pl(m) => m.is_invertible(),
            DynMap::Ladder(_) => true,
            DynMap::Rotation(_) => true,
            DynMap::Affine(m) => m.is_invertible(),
            // x^e is a homeomorphism of [0, 1] but its inverse is not
            // rational-exact, so two-sided operations are not offered.
            DynMap::Power(_) => false,
        }
    }

    pub fn inverse(&self) -> DynResult<DynMap> {
        match self {
            DynMap::Pl(m) => Ok(DynMap::Pl(m.invert()?)),
            DynMap::Ladder(m) => Ok(DynMap::Ladder(m.inverse())),
            DynMap::Rotation(m) => Ok(DynMap::Rotation(m.inverse())),
            DynMap::Affine(m) => Ok(DynMap::Affine(m.invert()?)),
            DynMap::Power(_) => Err(DynError::Capability(
                "power map inverse is not rational-exact".into(),
            )),
        }
    }

    pub fn eval_exact(&self, x: &Rational) -> DynResult<Rational> {
        self.space().validate_rational(x)?;
        Ok(match self {
            DynMap::Pl(m) => m.eval(x)?,
            DynMap::Ladder(m) => m.eval(x),
            DynMap::Rotation(m) => match m.eval_point(&Point::Exact(x.clone())) {
                Point::Exact(r) => r,
                Point::Approx(_) => {
                    return Err(DynError::Capability(
                        "irrational rotation has no exact rational evaluation".into(),
                    ))
                }
            },
            DynMap::Affine(m) => m.eval(x),
            DynMap::Power(m) => m.eval(x),
        })
    }

    pub fn eval_point(&self, x: &Point) -> DynResult<Point> {
        match self {
            DynMap::Rotation(m) => Ok(m.eval_point(x)),
            DynMap::Power(m) => match x {
                Point::Exact(r) => Ok(Point::Exact(m.eval(r))),
                Point::Approx(d) => {
                    let b = d.bounds();
                    let v = m.step(&PowVal::Bounded(crate::dyadic::Bounds::new(
                        b.lo.max(Rational::zero()),
                        b.hi.min(Rational::one()),
                    )));
                    Ok(bounds_to_point(v.bounds()))
                }
            },
            _ => {
                let r = x.expect_exact("piecewise-linear evaluation")?;
                Ok(Point::Exact(self.eval_exact(r)?))
            }
        }
    }

    /// Orbit segment with exact points (error-bounded for rotations/powers).
    pub fn orbit(&self, x: &Point, horizon: u32, direction: Direction) -> DynResult<OrbitSegment> {
        self.space().validate(x)?;
        if direction == Direction::TwoSided && !self.is_invertible() {
            return Err(DynError::Capability(
                "two-sided orbit of a non-invertible map".into(),
            ));
        }
        let forward = self.forward_orbit(x, horizon)?;
        let backward = if direction == Direction::TwoSided {
            let inv = self.inverse()?;
            let mut pts = inv.forward_orbit(x, horizon)?;
            pts.remove(0);
            pts
        } else {
            Vec::new()
        };
        Ok(OrbitSegment {
            base: x.clone(),
            forward,
            backward,
        })
    }

    fn forward_orbit(&self, x: &Point, horizon: u32) -> DynResult<Vec<Point>> {
        match self {
            DynMap::Rotation(m) => Ok((0..=horizon as i64)
                .map(|k| m.iterate_point(x, k))
                .collect()),
            DynMap::Power(m) => {
                let r = x.expect_exact("power-map orbit")?;
                Ok(m.orbit_values(r, horizon)
                    .into_iter()
                    .map(|v| match v {
                        PowVal::Exact(e) => Point::Exact(e),
                        PowVal::Bounded(b) => bounds_to_point(b),
                    })
                    .collect())
            }
            DynMap::Affine(m) => {
                let r = x.expect_exact("affine orbit")?;
                let mut out = Vec::with_capacity(horizon as usize + 1);
                let mut cur = r.clone();
                out.push(Point::Exact(cur.clone()));
                for _ in 0..horizon {
                    cur = m.eval(&cur);
                    out.push(Point::Exact(cur.clone()));
                }
                Ok(out)
            }
            _ => {
                let r = x.expect_exact("orbit")?;
                let mut out = Vec::with_capacity(horizon as usize + 1);
                let mut cur = r.clone();
                out.push(Point::Exact(cur.clone()));
                for _ in 0..horizon {
                    cur = self.eval_exact(&cur)?;
                    out.push(Point::Exact(cur.clone()));
                }
                Ok(out)
            }
        }
    }

    /// Exact one-step set image of a bounded interval (interval/line maps).
    pub fn image(&self, iv: &Interval) -> DynResult<IntervalSet> {
        Ok(match self {
            DynMap::Pl(m) => m.image(iv),
            DynMap::Ladder(m) => m.image(iv),
            DynMap::Affine(m) => m.image(iv),
            DynMap::Power(m) => m.image(iv),
            DynMap::Rotation(_) => {
                return Err(DynError::Capability(
                    "interval images on the circle use arc arithmetic".into(),
                ))
            }
        })
    }

    /// Exact one-step preimage.
    pub fn preimage(&self, iv: &Interval) -> DynResult<IntervalSet> {
        Ok(match self {
            DynMap::Pl(m) => m.preimage(iv),
            DynMap::Ladder(m) => m.preimage(iv),
            DynMap::Affine(m) => m.preimage(iv),
            DynMap::Power(_) => {
                return Err(DynError::Capability(
                    "power-map preimages are not rational-exact".into(),
                ))
            }
            DynMap::Rotation(_) => {
                return Err(DynError::Capability(
                    "interval preimages on the circle use arc arithmetic".into(),
                ))
            }
        })
    }

    /// Exact periodic points of period <= k_max intersected with `region`.
    /// `cap` bounds both iterate growth and enumeration length.
    pub fn periodic_points_in(
        &self,
        k_max: u32,
        region: &Interval,
        cap: usize,
    ) -> DynResult<IntervalSet> {
        match self {
            DynMap::Pl(m) => {
                let mut acc = IntervalSet::empty();
                for k in 1..=k_max {
                    let it = m.iterate(k, cap)?;
                    acc = acc.union(&it.fixed_points().intersect_interval(region));
                }
                Ok(acc)
            }
            DynMap::Ladder(m) => {
                let pts = m.fixed_points_in(region, cap);
                Ok(IntervalSet::from_parts(
                    pts.into_iter().map(Interval::point).collect(),
                ))
            }
            DynMap::Power(m) => Ok(m.fixed_points().intersect_interval(region)),
            DynMap::Affine(a) => {
                let mut acc = IntervalSet::empty();
                for k in 1..=k_max {
                    let it = a.iterate(k as i64)?;
                    acc = acc.union(&it.fixed_points().intersect_interval(region));
                }
                Ok(acc)
            }
            DynMap::Rotation(r) => match r.rational_period() {
                Some(q) => {
                    // Rotation by p/q: every point has exact period q.
                    if q <= num_bigint::BigInt::from(k_max) {
                        Ok(IntervalSet::single(region.clone()))
                    } else {
                        Ok(IntervalSet::empty())
                    }
                }
                None => Ok(IntervalSet::empty()),
            },
        }
    }

    /// Candidate breakpoints near a window (used to seed grids and
    /// certificate searches).
    pub fn breakpoints_in(&self, lo: &Rational, hi: &Rational, cap: usize) -> Vec<Rational> {
        match self {
            DynMap::Pl(m) => m
                .breakpoints()
                .iter()
                .map(|(x, _)| x.clone())
                .filter(|x| x >= lo && x <= hi)
                .take(cap)
                .collect(),
            DynMap::Ladder(m) => m.breakpoints_in(lo, hi, cap),
            _ => Vec::new(),
        }
    }

    /// The linear piece containing `x`, when the map has one.
    pub fn piece_at(&self, x: &Rational) -> Option<Piece> {
        match self {
            DynMap::Pl(m) => Some(m.piece_at(x)),
            DynMap::Ladder(m) => m.piece_at(x),
            DynMap::Affine(m) => Some(Piece {
                span: Interval::whole_line(),
                slope: m.a.clone(),
                anchor_x: Rational::zero(),
                anchor_y: m.b.clone(),
            }),
            _ => None,
        }
    }

    /// Sign of f(x) - x strictly inside `iv` if constant; 0 otherwise.
    pub fn displacement_sign_on(&self, iv: &Interval) -> i8 {
        match self {
            DynMap::Pl(m) => m.displacement_sign_on(iv),
            DynMap::Ladder(m) => m.displacement_sign_on(iv),
            DynMap::Affine(m) => m.as_pl().displacement_sign_on(iv),
            DynMap::Power(_) => {
                // x^e - x < 0 strictly on (0, 1).
                match (&iv.lo, &iv.hi) {
                    (Some(a), Some(b))
                        if *a >= Rational::zero() && *b <= Rational::one() && a < b =>
                    {
                        -1
                    }
                    _ => 0,
                }
            }
            DynMap::Rotation(_) => 0,
        }
    }

    /// Short human-readable tag for reports.
    pub fn describe(&self) -> String {
        match self {
            DynMap::Pl(m) => format!("pl({} breakpoints)", m.breakpoint_count()),
            DynMap::Ladder(m) => match (m.kind, m.inverted) {
                (LadderKind::AllDip, false) => "ladder(all-dip)".into(),
                (LadderKind::AllDip, true) => "ladder(all-dip)^-1".into(),
                (LadderKind::AlternatingByParity, false) => "ladder(alternating)".into(),
                (LadderKind::AlternatingByParity, true) => "ladder(alternating)^-1".into(),
            },
            DynMap::Rotation(m) => format!("rotation({})", m.angle),
            DynMap::Affine(m) => format!("affine({}x+{})", m.a, m.b),
            DynMap::Power(m) => format!("power(x^{})", m.exponent),
        }
    }
}

fn bounds_to_point(b: crate::dyadic::Bounds) -> Point {
    if let Some(r) = b.as_exact() {
        return Point::Exact(r.clone());
    }
    let mid = Rational::midpoint(&b.lo, &b.hi);
    let err = (&b.hi - &b.lo) / Rational::from_int(2);
    Point::Approx(Dyadic::with_error(mid, err))
}

#[derive(Clone, Debug, PartialEq)]
pub struct OrbitSegment {
    pub base: Point,
    /// `forward[n]` is f^n(base), n = 0..=horizon.
    pub forward: Vec<Point>,
    /// `backward[n]` is f^-(n+1)(base); empty for forward orbits.
    pub backward: Vec<Point>,
}

impl OrbitSegment {
    pub fn at(&self, n: i64) -> Option<&Point> {
        if n >= 0 {
            self.forward.get(n as usize)
        } else {
            self.backward.get((-n - 1) as usize)
        }
    }
}

/// Textual map file: the canonical external representation.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MapFile {
    pub space: Space,
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub breakpoints: Option<Vec<(Rational, Rational)>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub left_slope: Option<Rational>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub right_slope: Option<Rational>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub alpha: Option<Rational>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub a: Option<Rational>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub b: Option<Rational>,
}

impl MapFile {
    pub fn to_map(&self) -> DynResult<DynMap> {
        match (self.kind.as_str(), self.space) {
            ("pl", Space::Interval01) => {
                let bps = self
                    .breakpoints
                    .clone()
                    .ok_or_else(|| DynError::Parse("pl map needs breakpoints".into()))?;
                Ok(DynMap::Pl(PLMap::interval(bps)?))
            }
            ("pl", Space::RealLine) => {
                let bps = self
                    .breakpoints
                    .clone()
                    .ok_or_else(|| DynError::Parse("pl map needs breakpoints".into()))?;
                let l = self
                    .left_slope
                    .clone()
                    .ok_or_else(|| DynError::Parse("line pl map needs left_slope".into()))?;
                let r = self
                    .right_slope
                    .clone()
                    .ok_or_else(|| DynError::Parse("line pl map needs right_slope".into()))?;
                Ok(DynMap::Pl(PLMap::line(bps, l, r)?))
            }
            ("rotation", Space::Circle) => {
                let alpha = self
                    .alpha
                    .clone()
                    .ok_or_else(|| DynError::Parse("rotation needs alpha".into()))?;
                Ok(DynMap::Rotation(RotationMap::rational(alpha)))
            }
            ("affine", Space::RealLine) => {
                let a = self
                    .a
                    .clone()
                    .ok_or_else(|| DynError::Parse("affine needs a".into()))?;
                let b = self
                    .b
                    .clone()
                    .ok_or_else(|| DynError::Parse("affine needs b".into()))?;
                Ok(DynMap::Affine(AffineMap::new(a, b)))
            }
            (k, s) => Err(DynError::Parse(format!(
                "unsupported map kind {k:?} on space {s}"
            ))),
        }
    }

    pub fn from_map(map: &DynMap) -> Option<MapFile> {
        match map {
            DynMap::Pl(m) => Some(MapFile {
                space: m.space(),
                kind: "pl".into(),
                breakpoints: Some(m.breakpoints().to_vec()),
                left_slope: None,
                right_slope: None,
                alpha: None,
                a: None,
                b: None,
            }),
            DynMap::Rotation(r) => match &r.angle {
                Angle::Rational(al) => Some(MapFile {
                    space: Space::Circle,
                    kind: "rotation".into(),
                    breakpoints: None,
                    left_slope: None,
                    right_slope: None,
                    alpha: Some(al.clone()),
                    a: None,
                    b: None,
                }),
                Angle::Irrational { .. } => None,
            },
            DynMap::Affine(m) => Some(MapFile {
                space: Space::RealLine,
                kind: "affine".into(),
                breakpoints: None,
                left_slope: None,
                right_slope: None,
                alpha: None,
                a: Some(m.a.clone()),
                b: Some(m.b.clone()),
            }),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn fixed_ends() -> DynMap {
        DynMap::Pl(
            PLMap::interval(vec![
                (rat(0, 1), rat(0, 1)),
                (rat(3, 4), rat(7, 8)),
                (rat(1, 1), rat(1, 1)),
            ])
            .unwrap(),
        )
    }

    #[test]
    fn orbit_segment_invariant() {
        let f = fixed_ends();
        let seg = f
            .orbit(&Point::exact(rat(1, 2)), 5, Direction::Forward)
            .unwrap();
        assert_eq!(seg.forward.len(), 6);
        assert_eq!(seg.forward[5].as_exact(), Some(&rat(1639, 1728)));
        for n in 0..5 {
            let stepped = f.eval_point(&seg.forward[n]).unwrap();
            assert_eq!(stepped, seg.forward[n + 1]);
        }
    }

    #[test]
    fn two_sided_orbit_needs_inverse() {
        let flat = DynMap::Pl(
            PLMap::interval(vec![
                (rat(0, 1), rat(0, 1)),
                (rat(2, 3), rat(1, 1)),
                (rat(1, 1), rat(1, 1)),
            ])
            .unwrap(),
        );
        let err = flat.orbit(&Point::exact(rat(1, 2)), 3, Direction::TwoSided);
        assert!(matches!(err, Err(DynError::Capability(_))));
        let f = fixed_ends();
        let seg = f
            .orbit(&Point::exact(rat(7, 12)), 3, Direction::TwoSided)
            .unwrap();
        assert_eq!(seg.backward[0].as_exact(), Some(&rat(1, 2)));
    }

    #[test]
    fn rotation_orbit_closed_form() {
        let rot = DynMap::Rotation(RotationMap::rational(rat(1, 3)));
        let seg = rot
            .orbit(&Point::exact(rat(0, 1)), 3, Direction::Forward)
            .unwrap();
        let xs: Vec<_> = seg
            .forward
            .iter()
            .map(|p| p.as_exact().unwrap().clone())
            .collect();
        assert_eq!(xs, vec![rat(0, 1), rat(1, 3), rat(2, 3), rat(0, 1)]);
    }

    #[test]
    fn map_file_round_trip() {
        let f = fixed_ends();
        let file = MapFile::from_map(&f).unwrap();
        let json = serde_json::to_string(&file).unwrap();
        let parsed: MapFile = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed.to_map().unwrap(), f);
        assert!(json.contains("\"3/4\""));
    }

    #[test]
    fn periodic_points_of_rotation() {
        let r3 = DynMap::Rotation(RotationMap::rational(rat(1, 3)));
        let region = Interval::new(rat(0, 1), rat(1, 2));
        assert!(!r3.periodic_points_in(3, &region, 100).unwrap().is_empty());
        assert!(r3.periodic_points_in(2, &region, 100).unwrap().is_empty());
    }
}
