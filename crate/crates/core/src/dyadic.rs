//! High-precision reals with tracked absolute error bounds, and rational
//! interval enclosures.
//!
//! Irrational rotation angles are the only inexact quantities in the crate.
//! They are stored as a rational approximation plus an explicit error bound
//! (at most 2^-100 by construction), and every comparison against a
//! tolerance goes through the [`Bounds`] enclosure so uncertainty is never
//! silently dropped.

use std::fmt;

use num_bigint::{BigInt, Sign};
use serde::{Deserialize, Serialize};

use crate::rational::Rational;

/// Precision used for irrational constants (error bound 2^-PRECISION_BITS,
/// well below the 2^-100 budget).
pub const PRECISION_BITS: i32 = 128;

/// A real number known as `approx` with `|true - approx| <= err`.
#[derive(Clone, Debug, PartialEq)]
pub struct Dyadic {
    approx: Rational,
    err: Rational,
}

impl Dyadic {
    pub fn exact(r: Rational) -> Self {
        Dyadic {
            approx: r,
            err: Rational::zero(),
        }
    }

    pub fn with_error(approx: Rational, err: Rational) -> Self {
        assert!(!err.is_negative(), "negative error bound");
        Dyadic { approx, err }
    }

    /// sqrt(r) for r >= 0, with error below 2^-PRECISION_BITS.
    pub fn sqrt(r: &Rational) -> Self {
        assert!(!r.is_negative(), "sqrt of negative rational");
        // floor(sqrt(r * 4^bits)) / 2^bits underestimates sqrt(r) by < 2^-bits.
        let shift = 2 * PRECISION_BITS as usize;
        let scaled = r.numer() * (BigInt::from(1) << shift) / r.denom();
        let root = scaled.sqrt();
        let denom = BigInt::from(1) << PRECISION_BITS as usize;
        Dyadic {
            approx: Rational::from_parts(root, denom),
            err: Rational::pow2(-PRECISION_BITS),
        }
    }

    pub fn approx(&self) -> &Rational {
        &self.approx
    }

    pub fn err(&self) -> &Rational {
        &self.err
    }

    pub fn bounds(&self) -> Bounds {
        Bounds::new(&self.approx - &self.err, &self.approx + &self.err)
    }

    pub fn add_rational(&self, r: &Rational) -> Dyadic {
        Dyadic {
            approx: &self.approx + r,
            err: self.err.clone(),
        }
    }

    pub fn add(&self, other: &Dyadic) -> Dyadic {
        Dyadic {
            approx: &self.approx + &other.approx,
            err: &self.err + &other.err,
        }
    }

    pub fn neg(&self) -> Dyadic {
        Dyadic {
            approx: -&self.approx,
            err: self.err.clone(),
        }
    }

    /// Scale by an exact rational; the error scales by |r|.
    pub fn scale(&self, r: &Rational) -> Dyadic {
        Dyadic {
            approx: &self.approx * r,
            err: &self.err * &r.abs(),
        }
    }

    /// Reduce mod 1 into `[0, 1)` (shift of the approximation; exact).
    pub fn mod_one(&self) -> Dyadic {
        Dyadic {
            approx: self.approx.fract(),
            err: self.err.clone(),
        }
    }

    /// Hex significand/exponent form, significand rounded to 2^-PRECISION_BITS.
    /// The rounding slack stays within the 2^-100 invariant.
    pub fn to_hex(&self) -> String {
        let denom = BigInt::from(1) << PRECISION_BITS as usize;
        let scaled = (self.approx.numer() * &denom) / self.approx.denom();
        let (sign, mag) = (scaled.sign(), scaled.magnitude());
        let sign_str = if sign == Sign::Minus { "-" } else { "" };
        format!("{}0x{}p-{}", sign_str, mag.to_str_radix(16), PRECISION_BITS)
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_hex())
    }
}

/// Closed rational interval `[lo, hi]` enclosing a real value.
///
/// `lo == hi` means the value is known exactly.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Bounds {
    pub lo: Rational,
    pub hi: Rational,
}

impl Bounds {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        assert!(lo <= hi, "inverted bounds");
        Bounds { lo, hi }
    }

    pub fn exact(r: Rational) -> Self {
        Bounds {
            lo: r.clone(),
            hi: r,
        }
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    /// The exact value when known, else `None`.
    pub fn as_exact(&self) -> Option<&Rational> {
        if self.is_exact() {
            Some(&self.lo)
        } else {
            None
        }
    }

    pub fn add(&self, other: &Bounds) -> Bounds {
        Bounds::new(&self.lo + &other.lo, &self.hi + &other.hi)
    }

    pub fn sub(&self, other: &Bounds) -> Bounds {
        Bounds::new(&self.lo - &other.hi, &self.hi - &other.lo)
    }

    pub fn abs(&self) -> Bounds {
        if !self.lo.is_negative() {
            self.clone()
        } else if !self.hi.is_positive() {
            Bounds::new(-&self.hi, -&self.lo)
        } else {
            Bounds::new(Rational::zero(), (-&self.lo).max(self.hi.clone()))
        }
    }

    /// Enclosure of `min(value, cap)`.
    pub fn cap(&self, cap: &Rational) -> Bounds {
        Bounds::new(
            self.lo.clone().min(cap.clone()),
            self.hi.clone().min(cap.clone()),
        )
    }

    pub fn scale(&self, r: &Rational) -> Bounds {
        let a = &self.lo * r;
        let b = &self.hi * r;
        if a <= b {
            Bounds::new(a, b)
        } else {
            Bounds::new(b, a)
        }
    }

    /// True when the value is certainly strictly greater than `t`.
    pub fn certainly_gt(&self, t: &Rational) -> bool {
        self.lo > *t
    }

    pub fn certainly_ge(&self, t: &Rational) -> bool {
        self.lo >= *t
    }

    pub fn certainly_lt(&self, t: &Rational) -> bool {
        self.hi < *t
    }

    pub fn certainly_le(&self, t: &Rational) -> bool {
        self.hi <= *t
    }

    /// Neither certainly above nor certainly below `t`.
    pub fn straddles(&self, t: &Rational) -> bool {
        !self.certainly_gt(t) && !self.certainly_lt(t) && !self.is_exact()
    }
}

/// Enclosure of the circle metric `min({d}, 1-{d})` for a displacement `d`
/// given by bounds (any real value; reduction mod 1 handled here).
pub fn circle_tent(delta: &Bounds) -> Bounds {
    let width = &delta.hi - &delta.lo;
    if width >= Rational::one() {
        return Bounds::new(Rational::zero(), Rational::new(1, 2));
    }
    // Shift so the lower endpoint lands in [0, 1).
    let shift = Rational::from_bigint(delta.lo.floor_int());
    let a = &delta.lo - &shift;
    let b = &delta.hi - &shift;
    if b <= Rational::one() {
        tent_on_unit(&a, &b)
    } else {
        // Wraps past 1: split into [a, 1] and [0, b-1].
        let left = tent_on_unit(&a, &Rational::one());
        let right = tent_on_unit(&Rational::zero(), &(b - Rational::one()));
        Bounds::new(
            left.lo.min(right.lo),
            left.hi.max(right.hi),
        )
    }
}

fn tent(t: &Rational) -> Rational {
    t.clone().min(Rational::one() - t)
}

fn tent_on_unit(a: &Rational, b: &Rational) -> Bounds {
    debug_assert!(*a >= Rational::zero() && *b <= Rational::one() && a <= b);
    let half = Rational::new(1, 2);
    let ta = tent(a);
    let tb = tent(b);
    let lo = ta.clone().min(tb.clone());
    let hi = if *a <= half && half <= *b {
        half
    } else {
        ta.max(tb)
    };
    Bounds::new(lo, hi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn sqrt_two_over_two_brackets_truth() {
        // 1/sqrt(2) = sqrt(1/2); check the enclosure contains it:
        // (approx)^2 <= 1/2 <= (approx + err)^2.
        let d = Dyadic::sqrt(&rat(1, 2));
        let b = d.bounds();
        assert!(&b.lo * &b.lo <= rat(1, 2));
        assert!(&b.hi * &b.hi >= rat(1, 2));
        assert!(d.err() <= &Rational::pow2(-100));
    }

    #[test]
    fn circle_tent_basic() {
        // Exact displacement 9/10 - 1/10 = 4/5 -> wrap distance 1/5.
        let d = Bounds::exact(rat(4, 5));
        let t = circle_tent(&d);
        assert_eq!(t.as_exact(), Some(&rat(1, 5)));
        // Negative displacement reduces mod 1.
        let d = Bounds::exact(rat(-4, 5));
        assert_eq!(circle_tent(&d).as_exact(), Some(&rat(1, 5)));
    }

    #[test]
    fn circle_tent_straddling_half() {
        let d = Bounds::new(rat(2, 5), rat(3, 5));
        let t = circle_tent(&d);
        assert_eq!(t.lo, rat(2, 5));
        assert_eq!(t.hi, rat(1, 2));
    }

    #[test]
    fn certainty_comparisons() {
        let b = Bounds::new(rat(1, 4), rat(1, 3));
        assert!(b.certainly_gt(&rat(1, 5)));
        assert!(b.certainly_lt(&rat(1, 2)));
        assert!(!b.certainly_gt(&rat(3, 10)));
        assert!(b.straddles(&rat(3, 10)));
    }

    #[test]
    fn hex_form_is_stable() {
        let d = Dyadic::sqrt(&rat(1, 2));
        let h = d.to_hex();
        assert!(h.starts_with("0x") && h.ends_with("p-128"));
    }
}
