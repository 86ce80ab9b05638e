//! Exact piecewise-linear self-maps given by breakpoints.
//!
//! Interval maps carry their endpoints at 0 and 1; line maps extend the
//! outermost breakpoints by explicit ray slopes. All operations (evaluation,
//! composition, iteration, inversion, set images and preimages, fixed-point
//! solving) are exact on rationals. Canonicalization removes collinear
//! interior breakpoints so map equality is breakpoint-list equality.

use serde::{Deserialize, Serialize};

use crate::errors::{DynError, DynResult};
use crate::interval::{Interval, IntervalSet};
use crate::rational::Rational;
use crate::space::Space;

/// One linear piece: `value(x) = anchor_y + slope * (x - anchor_x)` on `span`.
#[derive(Clone, Debug, PartialEq)]
pub struct Piece {
    pub span: Interval,
    pub slope: Rational,
    pub anchor_x: Rational,
    pub anchor_y: Rational,
}

impl Piece {
    pub fn eval(&self, x: &Rational) -> Rational {
        &self.anchor_y + &self.slope * (x - &self.anchor_x)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PLMap {
    space: Space,
    breakpoints: Vec<(Rational, Rational)>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    left_slope: Option<Rational>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    right_slope: Option<Rational>,
}

impl PLMap {
    /// Interval map from breakpoints; endpoints 0 and 1 must be present.
    pub fn interval(breakpoints: Vec<(Rational, Rational)>) -> DynResult<Self> {
        if breakpoints.len() < 2 {
            return Err(DynError::Domain("need at least two breakpoints".into()));
        }
        let first = &breakpoints[0].0;
        let last = &breakpoints[breakpoints.len() - 1].0;
        if *first != Rational::zero() || *last != Rational::one() {
            return Err(DynError::Domain(
                "interval map must have breakpoints at 0 and 1".into(),
            ));
        }
        for w in breakpoints.windows(2) {
            if w[0].0 >= w[1].0 {
                return Err(DynError::Domain("breakpoint xs must strictly increase".into()));
            }
        }
        for (_, y) in &breakpoints {
            if y < &Rational::zero() || y > &Rational::one() {
                return Err(DynError::Domain(format!("breakpoint value {y} outside [0, 1]")));
            }
        }
        let mut m = PLMap {
            space: Space::Interval01,
            breakpoints,
            left_slope: None,
            right_slope: None,
        };
        m.canonicalize();
        Ok(m)
    }

    /// Line map: breakpoints plus ray slopes beyond the outermost ones.
    pub fn line(
        breakpoints: Vec<(Rational, Rational)>,
        left_slope: Rational,
        right_slope: Rational,
    ) -> DynResult<Self> {
        if breakpoints.is_empty() {
            return Err(DynError::Domain("need at least one breakpoint".into()));
        }
        for w in breakpoints.windows(2) {
            if w[0].0 >= w[1].0 {
                return Err(DynError::Domain("breakpoint xs must strictly increase".into()));
            }
        }
        let mut m = PLMap {
            space: Space::RealLine,
            breakpoints,
            left_slope: Some(left_slope),
            right_slope: Some(right_slope),
        };
        m.canonicalize();
        Ok(m)
    }

    pub fn identity(space: Space) -> Self {
        match space {
            Space::Interval01 => PLMap::interval(vec![
                (Rational::zero(), Rational::zero()),
                (Rational::one(), Rational::one()),
            ])
            .unwrap(),
            Space::RealLine => PLMap::line(
                vec![(Rational::zero(), Rational::zero())],
                Rational::one(),
                Rational::one(),
            )
            .unwrap(),
            Space::Circle => panic!("PL maps do not live on the circle"),
        }
    }

    pub fn constant(space: Space, c: Rational) -> Self {
        match space {
            Space::Interval01 => PLMap::interval(vec![
                (Rational::zero(), c.clone()),
                (Rational::one(), c),
            ])
            .unwrap(),
            Space::RealLine => {
                PLMap::line(vec![(Rational::zero(), c)], Rational::zero(), Rational::zero())
                    .unwrap()
            }
            Space::Circle => panic!("PL maps do not live on the circle"),
        }
    }

    pub fn space(&self) -> Space {
        self.space
    }

    pub fn breakpoints(&self) -> &[(Rational, Rational)] {
        &self.breakpoints
    }

    pub fn breakpoint_count(&self) -> usize {
        self.breakpoints.len()
    }

    fn canonicalize(&mut self) {
        // Drop interior collinear breakpoints.
        let mut kept: Vec<(Rational, Rational)> = Vec::with_capacity(self.breakpoints.len());
        let n = self.breakpoints.len();
        for (i, bp) in self.breakpoints.iter().enumerate() {
            if i == 0 || i == n - 1 {
                kept.push(bp.clone());
                continue;
            }
            let prev = kept.last().unwrap();
            let next = &self.breakpoints[i + 1];
            let s1 = slope_between(prev, bp);
            let s2 = slope_between(bp, next);
            if s1 != s2 {
                kept.push(bp.clone());
            }
        }
        // Line maps: breakpoints collinear with a ray slope are redundant.
        if self.space == Space::RealLine {
            let left = self.left_slope.clone().unwrap();
            let right = self.right_slope.clone().unwrap();
            while kept.len() > 1 {
                let s = slope_between(&kept[0], &kept[1]);
                if s == left {
                    kept.remove(0);
                } else {
                    break;
                }
            }
            while kept.len() > 1 {
                let s = slope_between(&kept[kept.len() - 2], &kept[kept.len() - 1]);
                if s == right {
                    kept.pop();
                } else {
                    break;
                }
            }
        }
        self.breakpoints = kept;
    }

    pub fn eval(&self, x: &Rational) -> DynResult<Rational> {
        match self.space {
            Space::Interval01 => {
                self.space.validate_rational(x)?;
            }
            Space::RealLine => {}
            Space::Circle => unreachable!(),
        }
        Ok(self.eval_unchecked(x))
    }

    pub(crate) fn eval_unchecked(&self, x: &Rational) -> Rational {
        let bps = &self.breakpoints;
        if *x <= bps[0].0 {
            return match &self.left_slope {
                Some(s) => &bps[0].1 + s * (x - &bps[0].0),
                None => bps[0].1.clone(),
            };
        }
        let last = &bps[bps.len() - 1];
        if *x >= last.0 {
            return match &self.right_slope {
                Some(s) => &last.1 + s * (x - &last.0),
                None => last.1.clone(),
            };
        }
        // Binary search for the piece that contains x.
        let mut lo = 0usize;
        let mut hi = bps.len() - 1;
        while hi - lo > 1 {
            let mid = (lo + hi) / 2;
            if bps[mid].0 <= *x {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let s = slope_between(&bps[lo], &bps[hi]);
        &bps[lo].1 + &s * (x - &bps[lo].0)
    }

    /// The linear piece containing `x` (rays included for line maps).
    pub fn piece_at(&self, x: &Rational) -> Piece {
        let bps = &self.breakpoints;
        if self.space == Space::RealLine && *x < bps[0].0 {
            return Piece {
                span: Interval {
                    lo: None,
                    hi: Some(bps[0].0.clone()),
                },
                slope: self.left_slope.clone().unwrap(),
                anchor_x: bps[0].0.clone(),
                anchor_y: bps[0].1.clone(),
            };
        }
        let last = bps.len() - 1;
        if self.space == Space::RealLine && *x > bps[last].0 {
            return Piece {
                span: Interval {
                    lo: Some(bps[last].0.clone()),
                    hi: None,
                },
                slope: self.right_slope.clone().unwrap(),
                anchor_x: bps[last].0.clone(),
                anchor_y: bps[last].1.clone(),
            };
        }
        let mut idx = 0;
        for i in 0..last {
            if bps[i].0 <= *x && (*x < bps[i + 1].0 || i + 1 == last) {
                idx = i;
            }
        }
        let s = slope_between(&bps[idx], &bps[idx + 1]);
        Piece {
            span: Interval::new(bps[idx].0.clone(), bps[idx + 1].0.clone()),
            slope: s,
            anchor_x: bps[idx].0.clone(),
            anchor_y: bps[idx].1.clone(),
        }
    }

    /// All bounded pieces, in order.
    pub fn pieces(&self) -> Vec<Piece> {
        let bps = &self.breakpoints;
        let mut out = Vec::new();
        for w in bps.windows(2) {
            out.push(Piece {
                span: Interval::new(w[0].0.clone(), w[1].0.clone()),
                slope: slope_between(&w[0], &w[1]),
                anchor_x: w[0].0.clone(),
                anchor_y: w[0].1.clone(),
            });
        }
        if out.is_empty() {
            // Single-breakpoint line map: represent as a zero-length span.
            out.push(Piece {
                span: Interval::point(bps[0].0.clone()),
                slope: self
                    .right_slope
                    .clone()
                    .unwrap_or_else(Rational::zero),
                anchor_x: bps[0].0.clone(),
                anchor_y: bps[0].1.clone(),
            });
        }
        out
    }

    fn ray_pieces(&self) -> Vec<Piece> {
        if self.space != Space::RealLine {
            return Vec::new();
        }
        let bps = &self.breakpoints;
        let last = bps.len() - 1;
        vec![
            Piece {
                span: Interval {
                    lo: None,
                    hi: Some(bps[0].0.clone()),
                },
                slope: self.left_slope.clone().unwrap(),
                anchor_x: bps[0].0.clone(),
                anchor_y: bps[0].1.clone(),
            },
            Piece {
                span: Interval {
                    lo: Some(bps[last].0.clone()),
                    hi: None,
                },
                slope: self.right_slope.clone().unwrap(),
                anchor_x: bps[last].0.clone(),
                anchor_y: bps[last].1.clone(),
            },
        ]
    }

    /// Strictly monotone breakpoint values (and consistent ray slopes) make
    /// the map invertible.
    pub fn is_invertible(&self) -> bool {
        let ys: Vec<&Rational> = self.breakpoints.iter().map(|(_, y)| y).collect();
        let increasing = ys.windows(2).all(|w| w[0] < w[1]);
        let decreasing = ys.windows(2).all(|w| w[0] > w[1]);
        match self.space {
            Space::Interval01 => {
                // A homeomorphism of [0, 1] must also be onto.
                let first = &self.breakpoints[0].1;
                let last = &self.breakpoints[self.breakpoints.len() - 1].1;
                let onto_inc = *first == Rational::zero() && *last == Rational::one();
                let onto_dec = *first == Rational::one() && *last == Rational::zero();
                (increasing && onto_inc) || (decreasing && onto_dec)
            }
            Space::RealLine => {
                let l = self.left_slope.as_ref().unwrap();
                let r = self.right_slope.as_ref().unwrap();
                if self.breakpoints.len() == 1 {
                    (l.is_positive() && r.is_positive()) || (l.is_negative() && r.is_negative())
                } else if increasing {
                    l.is_positive() && r.is_positive()
                } else if decreasing {
                    l.is_negative() && r.is_negative()
                } else {
                    false
                }
            }
            Space::Circle => false,
        }
    }

    pub fn invert(&self) -> DynResult<PLMap> {
        if !self.is_invertible() {
            return Err(DynError::Capability(
                "map is not strictly monotone, no inverse".into(),
            ));
        }
        let mut swapped: Vec<(Rational, Rational)> = self
            .breakpoints
            .iter()
            .map(|(x, y)| (y.clone(), x.clone()))
            .collect();
        swapped.sort_by(|a, b| a.0.cmp(&b.0));
        match self.space {
            Space::Interval01 => PLMap::interval(swapped),
            Space::RealLine => {
                let l = self.left_slope.clone().unwrap();
                let r = self.right_slope.clone().unwrap();
                if l.is_positive() {
                    PLMap::line(swapped, l.recip(), r.recip())
                } else {
                    // Decreasing map: rays swap sides.
                    PLMap::line(swapped, r.recip(), l.recip())
                }
            }
            Space::Circle => unreachable!(),
        }
    }

    /// Exact composition `self(g(x))`.
    pub fn compose(&self, g: &PLMap) -> DynResult<PLMap> {
        if self.space != g.space {
            return Err(DynError::Domain("composition across spaces".into()));
        }
        let mut xs: Vec<Rational> = g.breakpoints.iter().map(|(x, _)| x.clone()).collect();
        // Candidates where g crosses a breakpoint of self.
        for (bx, _) in &self.breakpoints {
            for pre in g.preimage_points(bx) {
                xs.push(pre);
            }
        }
        if self.space == Space::Interval01 {
            xs.push(Rational::zero());
            xs.push(Rational::one());
        }
        xs.sort();
        xs.dedup();
        let bps: Vec<(Rational, Rational)> = xs
            .into_iter()
            .map(|x| {
                let y = self.eval_unchecked(&g.eval_unchecked(&x));
                (x, y)
            })
            .collect();
        match self.space {
            Space::Interval01 => PLMap::interval(bps),
            Space::RealLine => {
                let gl = g.left_slope.clone().unwrap();
                let gr = g.right_slope.clone().unwrap();
                let left = &self.slope_at_infinity(gl.is_positive(), gl.is_zero(), {
                    // Where does g send x -> -inf?
                    g.eval_unchecked(&(&bps[0].0 - &Rational::one()))
                }) * &gl;
                let right = &self.slope_at_infinity(!gr.is_positive(), gr.is_zero(), {
                    g.eval_unchecked(&(&bps[bps.len() - 1].0 + &Rational::one()))
                }) * &gr;
                PLMap::line(bps, left, right)
            }
            Space::Circle => unreachable!(),
        }
    }

    /// Slope of `self` on the far tail that `g` maps a ray into.
    fn slope_at_infinity(&self, g_to_neg: bool, g_flat: bool, sample: Rational) -> Rational {
        if self.space == Space::Interval01 {
            return Rational::one();
        }
        if g_flat {
            return self.piece_at(&sample).slope;
        }
        if g_to_neg {
            self.left_slope.clone().unwrap()
        } else {
            self.right_slope.clone().unwrap()
        }
    }

    /// Exact x with `self(x) = c` (isolated solutions only; flat pieces at
    /// level c contribute their endpoints).
    fn preimage_points(&self, c: &Rational) -> Vec<Rational> {
        let mut out = Vec::new();
        for p in self.pieces() {
            let (lo, hi) = (p.span.lo.clone().unwrap(), p.span.hi.clone().unwrap());
            let ylo = p.eval(&lo);
            let yhi = p.eval(&hi);
            if p.slope.is_zero() {
                if &ylo == c {
                    out.push(lo);
                    out.push(hi);
                }
            } else {
                let (ymin, ymax) = if ylo <= yhi {
                    (ylo, yhi)
                } else {
                    (yhi, ylo)
                };
                if *c >= ymin && *c <= ymax {
                    out.push(&p.anchor_x + (c - &p.anchor_y) / &p.slope);
                }
            }
        }
        for p in self.ray_pieces() {
            if p.slope.is_zero() {
                continue;
            }
            let x = &p.anchor_x + (c - &p.anchor_y) / &p.slope;
            if p.span.contains(&x) {
                out.push(x);
            }
        }
        out
    }

    /// Exact k-th iterate. Fails with a scale error if the breakpoint count
    /// exceeds `cap`.
    pub fn iterate(&self, k: u32, cap: usize) -> DynResult<PLMap> {
        if k == 0 {
            return Ok(PLMap::identity(self.space));
        }
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.compose(self)?;
            if acc.breakpoint_count() > cap {
                return Err(DynError::Scale(format!(
                    "iterate breakpoint count {} exceeds cap {cap}",
                    acc.breakpoint_count()
                )));
            }
        }
        Ok(acc)
    }

    /// Exact set-image of a bounded interval.
    pub fn image(&self, iv: &Interval) -> IntervalSet {
        assert!(iv.is_bounded(), "image of unbounded interval");
        let mut out = Vec::new();
        let mut all = self.pieces();
        all.extend(self.ray_pieces());
        for p in all {
            if let Some(seg) = p.span.intersect(iv) {
                if let (Some(a), Some(b)) = (&seg.lo, &seg.hi) {
                    let ya = p.eval(a);
                    let yb = p.eval(b);
                    let (lo, hi) = if ya <= yb { (ya, yb) } else { (yb, ya) };
                    out.push(Interval::new(lo, hi));
                }
            }
        }
        IntervalSet::from_parts(out)
    }

    /// Exact preimage: `x` is in the result iff `self(x)` is in `iv`.
    pub fn preimage(&self, iv: &Interval) -> IntervalSet {
        let mut out = Vec::new();
        let mut all = self.pieces();
        all.extend(self.ray_pieces());
        for p in all {
            if p.slope.is_zero() {
                if iv.contains(&p.anchor_y) {
                    out.push(p.span.clone());
                }
                continue;
            }
            // Solve anchor_y + slope (x - anchor_x) in [iv.lo, iv.hi].
            let bound = |y: &Rational| -> Rational { &p.anchor_x + (y - &p.anchor_y) / &p.slope };
            let a = iv.lo.as_ref().map(&bound);
            let b = iv.hi.as_ref().map(&bound);
            let (lo, hi) = if p.slope.is_positive() { (a, b) } else { (b, a) };
            let candidate = Interval { lo, hi };
            if let Some(seg) = candidate.intersect(&p.span) {
                out.push(seg);
            }
        }
        IntervalSet::from_parts(out)
    }

    /// Exact solution set of `self(x) = x`: isolated points and diagonal
    /// segments (slope-1 pieces on the diagonal).
    pub fn fixed_points(&self) -> IntervalSet {
        let mut out = Vec::new();
        let mut all = self.pieces();
        all.extend(self.ray_pieces());
        for p in all {
            let offset = &p.anchor_y - &p.anchor_x;
            if p.slope == Rational::one() {
                if offset.is_zero() {
                    out.push(p.span.clone());
                }
            } else {
                // anchor_y + s(x - anchor_x) = x  =>  x = (anchor_y - s anchor_x)/(1 - s)
                let x = (&p.anchor_y - &p.slope * &p.anchor_x)
                    / (Rational::one() - &p.slope);
                if p.span.contains(&x) {
                    out.push(Interval::point(x));
                }
            }
        }
        IntervalSet::from_parts(out)
    }

    /// Exact sup of |self - g| over the common domain. `None` means the
    /// difference is unbounded (line maps with differing ray slopes).
    pub fn sup_abs_diff(&self, g: &PLMap) -> Option<Rational> {
        assert_eq!(self.space, g.space, "sup over mismatched spaces");
        if self.space == Space::RealLine
            && (self.left_slope != g.left_slope || self.right_slope != g.right_slope)
        {
            return None;
        }
        let mut xs: Vec<Rational> = self
            .breakpoints
            .iter()
            .chain(g.breakpoints.iter())
            .map(|(x, _)| x.clone())
            .collect();
        xs.sort();
        xs.dedup();
        let mut best = Rational::zero();
        for x in &xs {
            let d = (self.eval_unchecked(x) - g.eval_unchecked(x)).abs();
            best = best.max(d);
        }
        Some(best)
    }

    /// Where `self(x) - x` is strictly positive/negative/zero over `iv`
    /// (bounded): returns +1, -1 if the sign is constant strictly inside
    /// `iv` (endpoints may touch zero), 0 otherwise.
    pub fn displacement_sign_on(&self, iv: &Interval) -> i8 {
        let (lo, hi) = match (&iv.lo, &iv.hi) {
            (Some(a), Some(b)) => (a.clone(), b.clone()),
            _ => return 0,
        };
        let mut xs = vec![lo.clone(), hi.clone()];
        for (bx, _) in &self.breakpoints {
            if *bx > lo && *bx < hi {
                xs.push(bx.clone());
            }
        }
        xs.sort();
        xs.dedup();
        let mut sign = 0i8;
        for (i, x) in xs.iter().enumerate() {
            let d = self.eval_unchecked(x) - x;
            let s = if d.is_positive() {
                1
            } else if d.is_negative() {
                -1
            } else {
                0
            };
            let interior = i > 0 && i + 1 < xs.len();
            if s == 0 {
                if interior {
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

pub(crate) fn slope_between(a: &(Rational, Rational), b: &(Rational, Rational)) -> Rational {
    (&b.1 - &a.1) / (&b.0 - &a.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    /// The fixed-ends expanding/contracting map f(0)=0, f(3/4)=7/8, f(1)=1.
    pub(crate) fn fixed_ends_map() -> PLMap {
        PLMap::interval(vec![
            (rat(0, 1), rat(0, 1)),
            (rat(3, 4), rat(7, 8)),
            (rat(1, 1), rat(1, 1)),
        ])
        .unwrap()
    }

    #[test]
    fn eval_matches_frozen_orbit() {
        // Orbit of 1/2 under the fixed-ends map, first five steps.
        let f = fixed_ends_map();
        let expected = [
            rat(1, 2),
            rat(7, 12),
            rat(49, 72),
            rat(343, 432),
            rat(775, 864),
            rat(1639, 1728),
        ];
        let mut x = rat(1, 2);
        for e in &expected {
            assert_eq!(&x, e);
            x = f.eval(&x).unwrap();
        }
    }

    #[test]
    fn identity_composition_is_identity() {
        let f = fixed_ends_map();
        let id = PLMap::identity(Space::Interval01);
        assert_eq!(f.compose(&id).unwrap(), f);
        assert_eq!(id.compose(&f).unwrap(), f);
    }

    #[test]
    fn compose_matches_two_step_orbit() {
        let f = fixed_ends_map();
        let f2 = f.compose(&f).unwrap();
        assert_eq!(f2.eval(&rat(1, 2)).unwrap(), rat(49, 72));
    }

    #[test]
    fn iterate_matches_orbit() {
        let f = fixed_ends_map();
        let f5 = f.iterate(5, 1_000_000).unwrap();
        assert_eq!(f5.eval(&rat(1, 2)).unwrap(), rat(1639, 1728));
        assert_eq!(f.iterate(1, 10).unwrap(), f);
        let id = PLMap::identity(Space::Interval01);
        assert_eq!(id.iterate(7, 10).unwrap(), id);
    }

    #[test]
    fn invert_round_trip() {
        let f = fixed_ends_map();
        let inv = f.invert().unwrap();
        assert_eq!(inv.eval(&rat(7, 8)).unwrap(), rat(3, 4));
        let composed = f.compose(&inv).unwrap();
        assert_eq!(composed, PLMap::identity(Space::Interval01));
    }

    #[test]
    fn image_and_preimage_examples() {
        let f = fixed_ends_map();
        let img = f.image(&Interval::new(rat(0, 1), rat(3, 4)));
        assert_eq!(img.parts(), &[Interval::new(rat(0, 1), rat(7, 8))]);
        let pre = f.preimage(&Interval::new(rat(7, 8), rat(1, 1)));
        assert_eq!(pre.parts(), &[Interval::new(rat(3, 4), rat(1, 1))]);
        let id = PLMap::identity(Space::Interval01);
        let img = id.image(&Interval::new(rat(1, 4), rat(1, 2)));
        assert_eq!(img.parts(), &[Interval::new(rat(1, 4), rat(1, 2))]);
    }

    #[test]
    fn fixed_points_exact() {
        let f = fixed_ends_map();
        let fp = f.fixed_points();
        assert_eq!(
            fp.parts(),
            &[
                Interval::point(rat(0, 1)),
                Interval::point(rat(1, 1)),
            ]
        );
        let id = PLMap::identity(Space::Interval01);
        assert_eq!(
            id.fixed_points().parts(),
            &[Interval::new(rat(0, 1), rat(1, 1))]
        );
    }

    #[test]
    fn line_map_with_rays() {
        // x -> 2x as a line map.
        let f = PLMap::line(
            vec![(rat(0, 1), rat(0, 1))],
            rat(2, 1),
            rat(2, 1),
        )
        .unwrap();
        assert_eq!(f.eval(&rat(-3, 1)).unwrap(), rat(-6, 1));
        assert_eq!(f.eval(&rat(5, 2)).unwrap(), rat(5, 1));
        let pre = f.preimage(&Interval::new(rat(-1, 1), rat(1, 1)));
        assert_eq!(pre.parts(), &[Interval::new(rat(-1, 2), rat(1, 2))]);
        let inv = f.invert().unwrap();
        assert_eq!(inv.eval(&rat(5, 1)).unwrap(), rat(5, 2));
        let comp = f.compose(&inv).unwrap();
        assert_eq!(comp, PLMap::identity(Space::RealLine));
    }

    #[test]
    fn flat_piece_preimage_is_interval() {
        // Map with a flat top: 0 -> 0, 2/3 -> 1, 1 -> 1.
        let f = PLMap::interval(vec![
            (rat(0, 1), rat(0, 1)),
            (rat(2, 3), rat(1, 1)),
            (rat(1, 1), rat(1, 1)),
        ])
        .unwrap();
        assert!(!f.is_invertible());
        let pre = f.preimage(&Interval::point(rat(1, 1)));
        assert_eq!(pre.parts(), &[Interval::new(rat(2, 3), rat(1, 1))]);
    }

    #[test]
    fn displacement_sign() {
        let f = fixed_ends_map();
        assert_eq!(
            f.displacement_sign_on(&Interval::new(rat(0, 1), rat(1, 1))),
            1
        );
        let id = PLMap::identity(Space::Interval01);
        assert_eq!(
            id.displacement_sign_on(&Interval::new(rat(0, 1), rat(1, 1))),
            0
        );
    }

    #[test]
    fn canonicalization_removes_collinear() {
        let f = PLMap::interval(vec![
            (rat(0, 1), rat(0, 1)),
            (rat(1, 2), rat(1, 2)),
            (rat(1, 1), rat(1, 1)),
        ])
        .unwrap();
        assert_eq!(f, PLMap::identity(Space::Interval01));
    }

    #[test]
    fn sup_abs_diff_exact() {
        let f = fixed_ends_map();
        let id = PLMap::identity(Space::Interval01);
        // |f - id| peaks at the breakpoint 3/4: 7/8 - 3/4 = 1/8.
        assert_eq!(f.sup_abs_diff(&id), Some(rat(1, 8)));
        let a = PLMap::line(vec![(rat(0, 1), rat(0, 1))], rat(3, 2), rat(3, 2)).unwrap();
        let id_line = PLMap::identity(Space::RealLine);
        assert_eq!(a.sup_abs_diff(&id_line), None);
    }
}
