//! Closed rational intervals and finite unions of them.
//!
//! This is the workhorse behind exact image/preimage computation, trace-set
//! intersection and Lebesgue measure reporting. Line intervals may be
//! unbounded on either side; measure is only defined for bounded sets.

use serde::{Deserialize, Serialize};

use crate::rational::Rational;

/// Closed interval with optionally infinite endpoints
/// (`lo = None` means -inf, `hi = None` means +inf).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Interval {
    pub lo: Option<Rational>,
    pub hi: Option<Rational>,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        assert!(lo <= hi, "inverted interval");
        Interval {
            lo: Some(lo),
            hi: Some(hi),
        }
    }

    pub fn point(x: Rational) -> Self {
        Interval {
            lo: Some(x.clone()),
            hi: Some(x),
        }
    }

    pub fn whole_line() -> Self {
        Interval { lo: None, hi: None }
    }

    pub fn is_point(&self) -> bool {
        match (&self.lo, &self.hi) {
            (Some(a), Some(b)) => a == b,
            _ => false,
        }
    }

    pub fn is_bounded(&self) -> bool {
        self.lo.is_some() && self.hi.is_some()
    }

    pub fn contains(&self, x: &Rational) -> bool {
        let above = match &self.lo {
            Some(lo) => x >= lo,
            None => true,
        };
        let below = match &self.hi {
            Some(hi) => x <= hi,
            None => true,
        };
        above && below
    }

    pub fn length(&self) -> Option<Rational> {
        match (&self.lo, &self.hi) {
            (Some(a), Some(b)) => Some(b - a),
            _ => None,
        }
    }

    pub fn intersect(&self, other: &Interval) -> Option<Interval> {
        let lo = match (&self.lo, &other.lo) {
            (Some(a), Some(b)) => Some(a.clone().max(b.clone())),
            (Some(a), None) => Some(a.clone()),
            (None, b) => b.clone(),
        };
        let hi = match (&self.hi, &other.hi) {
            (Some(a), Some(b)) => Some(a.clone().min(b.clone())),
            (Some(a), None) => Some(a.clone()),
            (None, b) => b.clone(),
        };
        match (&lo, &hi) {
            (Some(a), Some(b)) if a > b => None,
            _ => Some(Interval { lo, hi }),
        }
    }

    pub fn is_subset_of(&self, other: &Interval) -> bool {
        let lo_ok = match (&other.lo, &self.lo) {
            (None, _) => true,
            (Some(_), None) => false,
            (Some(o), Some(s)) => s >= o,
        };
        let hi_ok = match (&other.hi, &self.hi) {
            (None, _) => true,
            (Some(_), None) => false,
            (Some(o), Some(s)) => s <= o,
        };
        lo_ok && hi_ok
    }

    pub fn midpoint(&self) -> Option<Rational> {
        match (&self.lo, &self.hi) {
            (Some(a), Some(b)) => Some(Rational::midpoint(a, b)),
            _ => None,
        }
    }

    /// Closed ball `[x-r, x+r]`.
    pub fn ball(x: &Rational, r: &Rational) -> Self {
        Interval::new(x - r, x + r)
    }
}

/// Finite union of closed intervals, kept sorted, disjoint and non-touching.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct IntervalSet {
    parts: Vec<Interval>,
}

impl IntervalSet {
    pub fn empty() -> Self {
        IntervalSet { parts: Vec::new() }
    }

    pub fn single(iv: Interval) -> Self {
        IntervalSet { parts: vec![iv] }
    }

    /// Normalize an arbitrary list: sort by lower endpoint and merge
    /// overlapping or touching parts (closed-set union).
    pub fn from_parts(mut parts: Vec<Interval>) -> Self {
        parts.sort_by(|a, b| match (&a.lo, &b.lo) {
            (None, None) => std::cmp::Ordering::Equal,
            (None, Some(_)) => std::cmp::Ordering::Less,
            (Some(_), None) => std::cmp::Ordering::Greater,
            (Some(x), Some(y)) => x.cmp(y),
        });
        let mut merged: Vec<Interval> = Vec::new();
        for iv in parts {
            match merged.last_mut() {
                Some(last) if touches(last, &iv) => {
                    last.hi = match (&last.hi, &iv.hi) {
                        (Some(a), Some(b)) => Some(a.clone().max(b.clone())),
                        _ => None,
                    };
                }
                _ => merged.push(iv),
            }
        }
        IntervalSet { parts: merged }
    }

    pub fn parts(&self) -> &[Interval] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn contains(&self, x: &Rational) -> bool {
        self.parts.iter().any(|iv| iv.contains(x))
    }

    pub fn intersect_interval(&self, iv: &Interval) -> IntervalSet {
        let parts = self
            .parts
            .iter()
            .filter_map(|p| p.intersect(iv))
            .collect();
        IntervalSet { parts }
    }

    pub fn intersect(&self, other: &IntervalSet) -> IntervalSet {
        let mut out = Vec::new();
        for a in &self.parts {
            for b in &other.parts {
                if let Some(c) = a.intersect(b) {
                    out.push(c);
                }
            }
        }
        IntervalSet::from_parts(out)
    }

    pub fn union(&self, other: &IntervalSet) -> IntervalSet {
        let mut parts = self.parts.clone();
        parts.extend(other.parts.iter().cloned());
        IntervalSet::from_parts(parts)
    }

    /// Total length; `None` if any part is unbounded.
    pub fn measure(&self) -> Option<Rational> {
        let mut total = Rational::zero();
        for p in &self.parts {
            total = total + p.length()?;
        }
        Some(total)
    }

    pub fn part_count(&self) -> usize {
        self.parts.len()
    }

    /// Sup over the set of distance to `x`; `None` for unbounded sets.
    pub fn sup_distance_to(&self, x: &Rational) -> Option<Rational> {
        let mut best: Option<Rational> = None;
        for p in &self.parts {
            let (lo, hi) = (p.lo.as_ref()?, p.hi.as_ref()?);
            let d = (x - lo).abs().max((x - hi).abs());
            best = Some(match best {
                Some(b) => b.max(d),
                None => d,
            });
        }
        best
    }

    /// A representative point from the widest part (midpoint), if nonempty.
    pub fn representative(&self) -> Option<Rational> {
        let widest = self.parts.iter().max_by(|a, b| {
            let la = a.length();
            let lb = b.length();
            match (la, lb) {
                (Some(x), Some(y)) => x.cmp(&y),
                (None, None) => std::cmp::Ordering::Equal,
                (None, _) => std::cmp::Ordering::Greater,
                (_, None) => std::cmp::Ordering::Less,
            }
        })?;
        match (&widest.lo, &widest.hi) {
            (Some(a), Some(b)) => Some(Rational::midpoint(a, b)),
            (Some(a), None) => Some(a + Rational::one()),
            (None, Some(b)) => Some(b - Rational::one()),
            (None, None) => Some(Rational::zero()),
        }
    }
}

fn touches(a: &Interval, b: &Interval) -> bool {
    // Precondition: a.lo <= b.lo in the sort order used by from_parts.
    match (&a.hi, &b.lo) {
        (None, _) => true,
        (Some(ah), Some(bl)) => bl <= ah,
        (Some(_), None) => true,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn merge_touching_parts() {
        let s = IntervalSet::from_parts(vec![
            Interval::new(rat(1, 2), rat(3, 4)),
            Interval::new(rat(1, 4), rat(1, 2)),
        ]);
        assert_eq!(s.parts().len(), 1);
        assert_eq!(s.measure(), Some(rat(1, 2)));
    }

    #[test]
    fn intersection_and_measure() {
        let a = IntervalSet::from_parts(vec![
            Interval::new(rat(0, 1), rat(1, 4)),
            Interval::new(rat(1, 2), rat(1, 1)),
        ]);
        let b = IntervalSet::single(Interval::new(rat(1, 8), rat(5, 8)));
        let c = a.intersect(&b);
        assert_eq!(c.parts().len(), 2);
        assert_eq!(c.measure(), Some(rat(1, 8) + rat(1, 8)));
    }

    #[test]
    fn unbounded_pieces() {
        let line = Interval::whole_line();
        assert!(line.contains(&rat(-100, 1)));
        let clipped = line.intersect(&Interval::new(rat(0, 1), rat(1, 1)));
        assert_eq!(clipped, Some(Interval::new(rat(0, 1), rat(1, 1))));
        let s = IntervalSet::single(Interval {
            lo: Some(rat(0, 1)),
            hi: None,
        });
        assert_eq!(s.measure(), None);
    }

    #[test]
    fn representative_lies_inside() {
        let s = IntervalSet::from_parts(vec![
            Interval::new(rat(0, 1), rat(1, 100)),
            Interval::new(rat(1, 2), rat(3, 4)),
        ]);
        let r = s.representative().unwrap();
        assert!(s.contains(&r));
        assert_eq!(r, rat(5, 8));
    }
}
