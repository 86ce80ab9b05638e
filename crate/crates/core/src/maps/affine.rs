//! Affine self-maps of the real line, `x -> a x + b`.
//!
//! Kept separate from PL maps: the line has no finite breakpoint cover, and
//! every one of the paper's line examples is affine. Iterates have closed
//! forms, so orbits over large windows stay cheap and exact.

use serde::{Deserialize, Serialize};

use crate::errors::{DynError, DynResult};
use crate::interval::{Interval, IntervalSet};
use crate::maps::pl::PLMap;
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineMap {
    pub a: Rational,
    pub b: Rational,
}

impl AffineMap {
    pub fn new(a: Rational, b: Rational) -> Self {
        AffineMap { a, b }
    }

    pub fn identity() -> Self {
        AffineMap::new(Rational::one(), Rational::zero())
    }

    pub fn constant(c: Rational) -> Self {
        AffineMap::new(Rational::zero(), c)
    }

    pub fn scaling(a: Rational) -> Self {
        AffineMap::new(a, Rational::zero())
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        &self.a * x + &self.b
    }

    pub fn is_invertible(&self) -> bool {
        !self.a.is_zero()
    }

    pub fn invert(&self) -> DynResult<AffineMap> {
        if !self.is_invertible() {
            return Err(DynError::Capability("affine map with a = 0".into()));
        }
        // y = ax + b  =>  x = y/a - b/a
        Ok(AffineMap::new(self.a.recip(), -(&self.b / &self.a)))
    }

    /// Closed form for the k-th iterate (k may be negative if invertible).
    pub fn iterate(&self, k: i64) -> DynResult<AffineMap> {
        if k < 0 {
            return self.invert()?.iterate(-k);
        }
        if k == 0 {
            return Ok(AffineMap::identity());
        }
        let ak = self.a.pow(k);
        let b_total = if self.a == Rational::one() {
            &self.b * &Rational::from_int(k)
        } else {
            &self.b * (&ak - Rational::one()) / (&self.a - Rational::one())
        };
        Ok(AffineMap::new(ak, b_total))
    }

    pub fn image(&self, iv: &Interval) -> IntervalSet {
        let map_end = |x: &Option<Rational>| x.as_ref().map(|v| self.eval(v));
        if self.a.is_zero() {
            return IntervalSet::single(Interval::point(self.b.clone()));
        }
        let (lo, hi) = if self.a.is_positive() {
            (map_end(&iv.lo), map_end(&iv.hi))
        } else {
            (map_end(&iv.hi), map_end(&iv.lo))
        };
        IntervalSet::single(Interval { lo, hi })
    }

    pub fn preimage(&self, iv: &Interval) -> IntervalSet {
        if self.a.is_zero() {
            return if iv.contains(&self.b) {
                IntervalSet::single(Interval::whole_line())
            } else {
                IntervalSet::empty()
            };
        }
        let solve = |y: &Option<Rational>| y.as_ref().map(|v| (v - &self.b) / &self.a);
        let (lo, hi) = if self.a.is_positive() {
            (solve(&iv.lo), solve(&iv.hi))
        } else {
            (solve(&iv.hi), solve(&iv.lo))
        };
        IntervalSet::single(Interval { lo, hi })
    }

    pub fn fixed_points(&self) -> IntervalSet {
        if self.a == Rational::one() {
            return if self.b.is_zero() {
                IntervalSet::single(Interval::whole_line())
            } else {
                IntervalSet::empty()
            };
        }
        let x = &self.b / &(Rational::one() - &self.a);
        IntervalSet::single(Interval::point(x))
    }

    pub fn as_pl(&self) -> PLMap {
        PLMap::line(
            vec![(Rational::zero(), self.b.clone())],
            self.a.clone(),
            self.a.clone(),
        )
        .unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn iterate_closed_form_matches_stepping() {
        let f = AffineMap::new(rat(3, 2), rat(1, 5));
        let mut x = rat(1, 1);
        for k in 0..8 {
            assert_eq!(f.iterate(k).unwrap().eval(&rat(1, 1)), x);
            x = f.eval(&x);
        }
    }

    #[test]
    fn inverse_round_trip() {
        let f = AffineMap::new(rat(2, 1), rat(-1, 3));
        let inv = f.invert().unwrap();
        let x = rat(7, 11);
        assert_eq!(inv.eval(&f.eval(&x)), x);
        assert_eq!(f.iterate(-2).unwrap(), inv.iterate(2).unwrap());
    }

    #[test]
    fn contraction_fixed_point() {
        let f = AffineMap::new(rat(1, 2), rat(1, 2));
        assert_eq!(
            f.fixed_points().parts(),
            &[Interval::point(rat(1, 1))]
        );
    }
}
