//! Interval maps with one linear kink per rung [1/(k+1), 1/k], k = 1, 2, ...
//!
//! These have infinitely many breakpoints accumulating at 0, so they cannot
//! be finite PL maps; instead a piece oracle locates the rung of a rational
//! exactly. Every rung boundary 1/k (and 0) is fixed; within a rung the
//! interior breakpoint P_k (midpoint) maps to the quarter point Q_k
//! ("dip", orbits drift to the left end) or the three-quarter point R_k
//! ("bump", orbits drift to the right end).

use num_bigint::BigInt;
use num_integer::Integer;

use crate::interval::{Interval, IntervalSet};
use crate::maps::pl::Piece;
use crate::rational::Rational;

/// Which of the paper's two ladder maps: `AllDip` has every rung dip
/// (E3.1's f, E(f) = {1/n}); `AlternatingByParity` dips odd rungs and bumps
/// even rungs (E3.1's g, E+(g) = {1/(2n-1)}).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LadderKind {
    AllDip,
    AlternatingByParity,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LadderMap {
    pub kind: LadderKind,
    pub inverted: bool,
}

#[derive(Clone, Debug)]
struct Rung {
    lo: Rational,
    hi: Rational,
    /// Interior breakpoint (x, y).
    kink_x: Rational,
    kink_y: Rational,
}

impl LadderMap {
    pub fn new(kind: LadderKind) -> Self {
        LadderMap {
            kind,
            inverted: false,
        }
    }

    pub fn inverse(&self) -> LadderMap {
        LadderMap {
            kind: self.kind,
            inverted: !self.inverted,
        }
    }

    fn rung_dips(&self, k: &BigInt) -> bool {
        match self.kind {
            LadderKind::AllDip => true,
            LadderKind::AlternatingByParity => k.is_odd(),
        }
    }

    fn rung(&self, k: &BigInt) -> Rung {
        let lo = Rational::from_parts(BigInt::from(1), k + 1);
        let hi = Rational::from_parts(BigInt::from(1), k.clone());
        let p = Rational::midpoint(&lo, &hi);
        let image = if self.rung_dips(k) {
            Rational::midpoint(&lo, &p)
        } else {
            Rational::midpoint(&p, &hi)
        };
        if self.inverted {
            Rung {
                lo,
                hi,
                kink_x: image,
                kink_y: p,
            }
        } else {
            Rung {
                lo,
                hi,
                kink_x: p,
                kink_y: image,
            }
        }
    }

    /// Rung index k with 1/(k+1) < x < 1/k, for x strictly inside (0, 1)
    /// and not a rung boundary.
    fn rung_index(x: &Rational) -> Option<BigInt> {
        if x.is_zero() || *x == Rational::one() {
            return None;
        }
        let inv = x.recip();
        if inv.is_integer() {
            return None; // boundary 1/k, a fixed point
        }
        Some(inv.floor_int())
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        match Self::rung_index(x) {
            None => x.clone(), // 0, 1 and every 1/k are fixed
            Some(k) => {
                let r = self.rung(&k);
                self.eval_in_rung(&r, x)
            }
        }
    }

    fn eval_in_rung(&self, r: &Rung, x: &Rational) -> Rational {
        if *x <= r.kink_x {
            let slope = (&r.kink_y - &r.lo) / (&r.kink_x - &r.lo);
            &r.lo + slope * (x - &r.lo)
        } else {
            let slope = (&r.hi - &r.kink_y) / (&r.hi - &r.kink_x);
            &r.hi + slope * (x - &r.hi)
        }
    }

    /// The linear piece containing x (x in (0, 1); rung boundaries return
    /// the piece to their right within the adjacent rung below 1/k).
    pub fn piece_at(&self, x: &Rational) -> Option<Piece> {
        if x.is_zero() {
            return None; // breakpoints accumulate at 0: no piece contains it
        }
        let k = match Self::rung_index(x) {
            Some(k) => k,
            None => {
                // x = 1/k (or 1): take the rung having x as its upper end.
                let k = x.recip().floor_int();
                let r = self.rung(&k);
                return Some(self.upper_piece(&r));
            }
        };
        let r = self.rung(&k);
        Some(if *x <= r.kink_x {
            self.lower_piece(&r)
        } else {
            self.upper_piece(&r)
        })
    }

    fn lower_piece(&self, r: &Rung) -> Piece {
        Piece {
            span: Interval::new(r.lo.clone(), r.kink_x.clone()),
            slope: (&r.kink_y - &r.lo) / (&r.kink_x - &r.lo),
            anchor_x: r.lo.clone(),
            anchor_y: r.lo.clone(),
        }
    }

    fn upper_piece(&self, r: &Rung) -> Piece {
        Piece {
            span: Interval::new(r.kink_x.clone(), r.hi.clone()),
            slope: (&r.hi - &r.kink_y) / (&r.hi - &r.kink_x),
            anchor_x: r.kink_x.clone(),
            anchor_y: r.kink_y.clone(),
        }
    }

    /// Monotone homeomorphism of [0, 1]: set image of a bounded interval.
    pub fn image(&self, iv: &Interval) -> IntervalSet {
        let lo = iv.lo.as_ref().expect("bounded interval");
        let hi = iv.hi.as_ref().expect("bounded interval");
        IntervalSet::single(Interval::new(self.eval(lo), self.eval(hi)))
    }

    pub fn preimage(&self, iv: &Interval) -> IntervalSet {
        let inv = self.inverse();
        let lo = iv.lo.as_ref().expect("bounded interval");
        let hi = iv.hi.as_ref().expect("bounded interval");
        let a = inv.eval(&lo.clone().max(Rational::zero()).min(Rational::one()));
        let b = inv.eval(&hi.clone().max(Rational::zero()).min(Rational::one()));
        if iv.hi.as_ref().unwrap() < &Rational::zero() || iv.lo.as_ref().unwrap() > &Rational::one()
        {
            return IntervalSet::empty();
        }
        IntervalSet::single(Interval::new(a, b))
    }

    /// Fixed points of every iterate: {0} and the rung boundaries 1/k
    /// (interior rung points drift strictly, so they are never periodic).
    /// Enumerates the ones inside `iv`, largest first, up to `cap`.
    pub fn fixed_points_in(&self, iv: &Interval, cap: usize) -> Vec<Rational> {
        let mut out = Vec::new();
        if iv.contains(&Rational::zero()) {
            out.push(Rational::zero());
        }
        let hi = iv
            .hi
            .clone()
            .unwrap_or_else(Rational::one)
            .min(Rational::one());
        let lo = iv
            .lo
            .clone()
            .unwrap_or_else(Rational::zero)
            .max(Rational::zero());
        if hi <= Rational::zero() {
            return out;
        }
        // 1/k <= hi  =>  k >= 1/hi.
        let mut k = {
            let inv = hi.recip();
            let mut k0 = inv.floor_int();
            if &Rational::from_parts(BigInt::from(1), k0.clone()) > &hi {
                k0 += 1;
            }
            if k0 < BigInt::from(1) {
                BigInt::from(1)
            } else {
                k0
            }
        };
        while out.len() < cap {
            let v = Rational::from_parts(BigInt::from(1), k.clone());
            if v < lo {
                break;
            }
            if iv.contains(&v) {
                out.push(v);
            }
            k += 1;
        }
        out
    }

    /// Breakpoint x-coordinates within `[lo, hi]`, nearest rung first from
    /// the top, capped.
    pub fn breakpoints_in(&self, lo: &Rational, hi: &Rational, cap: usize) -> Vec<Rational> {
        let mut out = Vec::new();
        let hi = hi.clone().min(Rational::one());
        let lo = lo.clone().max(Rational::zero());
        if hi <= Rational::zero() || lo >= Rational::one() {
            return out;
        }
        let hi_pos = if hi.is_zero() { return out } else { hi };
        let mut k = {
            let inv = hi_pos.recip();
            let k0 = inv.floor_int();
            if k0 < BigInt::from(1) {
                BigInt::from(1)
            } else {
                k0
            }
        };
        while out.len() < cap {
            let r = self.rung(&k);
            if r.hi < lo {
                break;
            }
            for v in [&r.hi, &r.kink_x, &r.lo] {
                if *v >= lo && *v <= hi_pos {
                    out.push(v.clone());
                }
            }
            k += 1;
        }
        out.sort();
        out.dedup();
        out
    }

    /// Sign of f(x) - x strictly inside `iv` when constant (as in
    /// `PLMap::displacement_sign_on`); 0 when mixed or when `iv` contains a
    /// rung boundary in its interior (a fixed point).
    pub fn displacement_sign_on(&self, iv: &Interval) -> i8 {
        let (lo, hi) = match (&iv.lo, &iv.hi) {
            (Some(a), Some(b)) => (a.clone(), b.clone()),
            _ => return 0,
        };
        if lo.is_negative() || hi > Rational::one() || lo >= hi {
            return 0;
        }
        // Any interior fixed point kills the certificate.
        let interior = Interval::new(lo.clone(), hi.clone());
        for fp in self.fixed_points_in(&interior, 3) {
            if fp > lo && fp < hi {
                return 0;
            }
        }
        if lo.is_zero() {
            // Intervals reaching the accumulation point contain fixed points.
            return 0;
        }
        // Now [lo, hi] sits inside one closed rung; sample its kink.
        let k = match Self::rung_index(&Rational::midpoint(&lo, &hi)) {
            Some(k) => k,
            None => return 0,
        };
        let r = self.rung(&k);
        let mut xs = vec![lo.clone(), hi.clone()];
        if r.kink_x > lo && r.kink_x < hi {
            xs.push(r.kink_x.clone());
        }
        xs.sort();
        let mut sign = 0i8;
        for (i, x) in xs.iter().enumerate() {
            let d = self.eval(x) - x;
            let s = if d.is_positive() {
                1
            } else if d.is_negative() {
                -1
            } else {
                0
            };
            let is_end = i == 0 || i == xs.len() - 1;
            if s == 0 {
                if !is_end {
                    return 0;
                }
                continue;
            }
            if sign == 0 {
                sign = s;
            } else if sign != s {
                return 0;
            }
        }
        sign
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn all_dip_matches_paper_values() {
        // f(P_1) = Q_1 with P_1 = 3/4, Q_1 = 5/8; f(7/8) = 13/16.
        let f = LadderMap::new(LadderKind::AllDip);
        assert_eq!(f.eval(&rat(3, 4)), rat(5, 8));
        assert_eq!(f.eval(&rat(7, 8)), rat(13, 16));
        // Fixed boundaries.
        for k in 1..6 {
            assert_eq!(f.eval(&rat(1, k)), rat(1, k));
        }
        assert_eq!(f.eval(&rat(0, 1)), rat(0, 1));
    }

    #[test]
    fn alternating_bumps_even_rungs() {
        let g = LadderMap::new(LadderKind::AlternatingByParity);
        // Rung 1 = [1/2, 1] is odd: dip, P_1 = 3/4 -> Q_1 = 5/8.
        assert_eq!(g.eval(&rat(3, 4)), rat(5, 8));
        // Rung 2 = [1/3, 1/2] is even: bump, P_2 = 5/12 -> R_2 = 11/24.
        assert_eq!(g.eval(&rat(5, 12)), rat(11, 24));
    }

    #[test]
    fn inverse_round_trip() {
        let f = LadderMap::new(LadderKind::AllDip);
        let inv = f.inverse();
        for x in [rat(3, 4), rat(7, 8), rat(2, 5), rat(13, 100)] {
            assert_eq!(inv.eval(&f.eval(&x)), x);
        }
    }

    #[test]
    fn rung_invariance() {
        let f = LadderMap::new(LadderKind::AllDip);
        let img = f.image(&Interval::new(rat(1, 3), rat(1, 2)));
        assert_eq!(img.parts(), &[Interval::new(rat(1, 3), rat(1, 2))]);
    }

    #[test]
    fn fixed_points_accumulate_at_zero() {
        let f = LadderMap::new(LadderKind::AllDip);
        let fps = f.fixed_points_in(&Interval::new(rat(0, 1), rat(1, 100)), 5);
        assert!(fps.contains(&rat(0, 1)));
        assert!(fps.contains(&rat(1, 100)));
        assert!(fps.contains(&rat(1, 101)));
    }

    #[test]
    fn displacement_sign_inside_rung() {
        let f = LadderMap::new(LadderKind::AllDip);
        // Inside rung 1 the map dips: f(x) < x strictly on (1/2, 1).
        assert_eq!(
            f.displacement_sign_on(&Interval::new(rat(1, 2), rat(1, 1))),
            -1
        );
        // Crossing a fixed point mixes the sign.
        assert_eq!(
            f.displacement_sign_on(&Interval::new(rat(2, 5), rat(3, 5))),
            0
        );
    }

    #[test]
    fn orbit_drifts_to_lower_end() {
        let f = LadderMap::new(LadderKind::AllDip);
        let mut x = rat(49, 100);
        for _ in 0..60 {
            x = f.eval(&x);
        }
        // Rung 2 = [1/3, 1/2], dip: orbit of 0.49 should approach 1/3.
        assert!((&x - rat(1, 3)).abs() < rat(1, 1000));
    }
}
