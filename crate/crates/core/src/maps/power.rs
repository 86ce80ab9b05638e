//! The exact power map `x -> x^e` on [0, 1] (the paper's square map is
//! e = 2).
//!
//! Orbits are `x^(e^k)`: exact rational powers until the representation
//! grows past a cap, then directed-rounded dyadic bounds at 256 bits. The
//! doubly-exponential decay means the bounds stay far sharper than any
//! tolerance the checkers use.

use num_bigint::BigInt;

use crate::dyadic::Bounds;
use crate::interval::{Interval, IntervalSet};
use crate::rational::Rational;

const EXACT_BIT_CAP: u64 = 8192;
const ROUND_BITS: usize = 256;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerMap {
    pub exponent: u32,
}

impl PowerMap {
    pub fn new(exponent: u32) -> Self {
        assert!(exponent >= 2, "power map exponent must be at least 2");
        PowerMap { exponent }
    }

    pub fn square() -> Self {
        PowerMap::new(2)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        x.pow(self.exponent as i64)
    }

    /// One orbit step on an exact-or-bounded value.
    pub fn step(&self, v: &PowVal) -> PowVal {
        match v {
            PowVal::Exact(x) => {
                let y = self.eval(x);
                if y.bit_size() <= EXACT_BIT_CAP {
                    PowVal::Exact(y)
                } else {
                    PowVal::Bounded(Bounds::new(
                        round_down(&y, ROUND_BITS),
                        round_up(&y, ROUND_BITS),
                    ))
                }
            }
            PowVal::Bounded(b) => {
                // x in [lo, hi] subset [0, 1] and x^e monotone there.
                let lo = round_down(&b.lo.pow(self.exponent as i64), ROUND_BITS);
                let hi = round_up(&b.hi.pow(self.exponent as i64), ROUND_BITS);
                PowVal::Bounded(Bounds::new(lo, hi.min(Rational::one())))
            }
        }
    }

    /// Orbit values `x, x^e, x^(e^2), ...` up to `horizon` steps inclusive.
    pub fn orbit_values(&self, x: &Rational, horizon: u32) -> Vec<PowVal> {
        let mut out = Vec::with_capacity(horizon as usize + 1);
        let mut v = PowVal::Exact(x.clone());
        out.push(v.clone());
        for _ in 0..horizon {
            v = self.step(&v);
            out.push(v.clone());
        }
        out
    }

    /// Image of `[a, b] subset [0, 1]` after one application (monotone).
    pub fn image(&self, iv: &Interval) -> IntervalSet {
        let lo = iv.lo.as_ref().expect("bounded interval");
        let hi = iv.hi.as_ref().expect("bounded interval");
        IntervalSet::single(Interval::new(self.eval(lo), self.eval(hi)))
    }

    /// k-step image of an interval, as bounds on its endpoints.
    pub fn iterated_image_bounds(&self, iv: &Interval, k: u32) -> (Bounds, Bounds) {
        let lo = iv.lo.as_ref().expect("bounded interval");
        let hi = iv.hi.as_ref().expect("bounded interval");
        let mut vl = PowVal::Exact(lo.clone());
        let mut vh = PowVal::Exact(hi.clone());
        for _ in 0..k {
            vl = self.step(&vl);
            vh = self.step(&vh);
        }
        (vl.bounds(), vh.bounds())
    }

    /// Periodic points of every period: x^(e^k) = x on [0, 1] has exactly
    /// the solutions 0 and 1 (strictly monotone with x^(e^k) < x inside).
    pub fn fixed_points(&self) -> IntervalSet {
        IntervalSet::from_parts(vec![
            Interval::point(Rational::zero()),
            Interval::point(Rational::one()),
        ])
    }
}

/// Exact-or-bounded orbit value of a power map.
#[derive(Clone, Debug, PartialEq)]
pub enum PowVal {
    Exact(Rational),
    Bounded(Bounds),
}

impl PowVal {
    pub fn bounds(&self) -> Bounds {
        match self {
            PowVal::Exact(x) => Bounds::exact(x.clone()),
            PowVal::Bounded(b) => b.clone(),
        }
    }
}

fn round_down(r: &Rational, bits: usize) -> Rational {
    use num_integer::Integer;
    let scaled = (r.numer() * (BigInt::from(1) << bits)).div_floor(r.denom());
    Rational::from_parts(scaled, BigInt::from(1) << bits)
}

fn round_up(r: &Rational, bits: usize) -> Rational {
    use num_integer::Integer;
    let num = r.numer() * (BigInt::from(1) << bits);
    let scaled = -(-num).div_floor(r.denom());
    Rational::from_parts(scaled, BigInt::from(1) << bits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn square_orbit_exact_prefix() {
        let h = PowerMap::square();
        let vals = h.orbit_values(&rat(9, 10), 5);
        match &vals[5] {
            PowVal::Exact(v) => assert_eq!(*v, rat(9, 10).pow(32)),
            PowVal::Bounded(_) => panic!("prefix should stay exact"),
        }
        // 0.9^32 < 0.1: the hitting-time example's inequality.
        assert!(vals[5].bounds().certainly_lt(&rat(1, 10)));
    }

    #[test]
    fn deep_orbit_switches_to_bounds_and_stays_sound() {
        let h = PowerMap::square();
        let vals = h.orbit_values(&rat(4095, 4096), 20);
        let last = vals.last().unwrap().bounds();
        // 0.99976^(2^20) ~ e^-256: certainly below 2^-300 is false, but below
        // 2^-80 is certain; check a safe threshold.
        assert!(last.certainly_lt(&Rational::pow2(-80)));
        assert!(last.lo >= Rational::zero());
    }

    #[test]
    fn rounding_brackets() {
        let r = rat(1, 3);
        assert!(round_down(&r, 16) <= r);
        assert!(round_up(&r, 16) >= r);
        assert!(round_up(&r, 16) - round_down(&r, 16) <= Rational::pow2(-15));
    }

    #[test]
    fn only_trivial_periodic_points() {
        let h = PowerMap::square();
        assert_eq!(h.fixed_points().part_count(), 2);
    }
}
