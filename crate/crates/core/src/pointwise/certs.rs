//! Search and verification of refutation certificates.
//!
//! A refutation is never "not found at scale": it must exhibit a finite,
//! exactly checkable fact that controls the orbit beyond the horizon.
//! Searches are heuristic; verification is exact and is what the test
//! suite re-runs independently.

use crate::interval::{Interval, IntervalSet};
use crate::maps::DynMap;
use crate::rational::Rational;
use crate::space::Space;
use crate::verdict::Certificate;

/// True when `image(iv)` stays inside `iv`. Unbounded spans are invariant
/// for self-maps of the line by definition.
fn is_invariant(map: &DynMap, iv: &Interval) -> bool {
    if !iv.is_bounded() {
        return iv == &Interval::whole_line();
    }
    match map.image(iv) {
        Ok(img) => img.parts().iter().all(|p| p.is_subset_of(iv)),
        Err(_) => false,
    }
}

fn clip_to_domain(map: &DynMap, lo: Rational, hi: Rational) -> Option<Interval> {
    let (lo, hi) = match map.space() {
        Space::Interval01 => (
            lo.max(Rational::zero()).min(Rational::one()),
            hi.max(Rational::zero()).min(Rational::one()),
        ),
        _ => (lo, hi),
    };
    if lo <= hi {
        Some(Interval::new(lo, hi))
    } else {
        None
    }
}

/// Nearby special values: fixed points and breakpoints inside a window.
fn boundary_pool(map: &DynMap, center: &Rational, radius: &Rational) -> Vec<Rational> {
    let lo = center - radius;
    let hi = center + radius;
    let mut pool = map.breakpoints_in(&lo, &hi, 64);
    if let Ok(fps) = map.periodic_points_in(1, &Interval::new(lo.clone(), hi.clone()), 32) {
        for part in fps.parts() {
            if let Some(a) = &part.lo {
                pool.push(a.clone());
            }
            if let Some(b) = &part.hi {
                pool.push(b.clone());
            }
        }
    }
    pool.sort();
    pool.dedup();
    pool
}

/// An invariant interval containing `p`, as small as the search finds.
pub fn find_point_trap(map: &DynMap, p: &Rational) -> Option<Interval> {
    // Fixed points trap themselves.
    if map.eval_exact(p).ok()? == *p {
        return Some(Interval::point(p.clone()));
    }
    let mut candidates: Vec<Interval> = Vec::new();
    if let Some(piece) = map.piece_at(p) {
        candidates.push(piece.span.clone());
    }
    // Brackets made from nearby special values.
    for radius in [Rational::pow2(-4), Rational::pow2(-2), Rational::one()] {
        let pool = boundary_pool(map, p, &radius);
        let below: Vec<&Rational> = pool.iter().filter(|v| *v <= p).collect();
        let above: Vec<&Rational> = pool.iter().filter(|v| *v >= p).collect();
        for a in below.iter().rev().take(4) {
            for b in above.iter().take(4) {
                candidates.push(Interval::new((*a).clone(), (*b).clone()));
            }
        }
    }
    candidates.sort_by(|x, y| {
        let lx = x.length().unwrap_or_else(Rational::zero);
        let ly = y.length().unwrap_or_else(Rational::zero);
        lx.cmp(&ly)
    });
    candidates.into_iter().find(|c| is_invariant(map, c))
}

/// Certificate that the pair (x_end, y_end) never separates beyond `delta`
/// under forward iteration of `map` (pass the inverse map with
/// `backward = true` for backward tails).
pub fn find_pair_cert(
    map: &DynMap,
    x_end: &Rational,
    y_end: &Rational,
    delta: &Rational,
    backward: bool,
) -> Option<Certificate> {
    if let DynMap::Rotation(_) = map {
        let d = crate::space::distance_exact(Space::Circle, x_end, y_end);
        if &d <= delta {
            return Some(Certificate::IsometryConstantDistance { distance: d });
        }
        return None;
    }
    // Common piece with |slope| <= 1 whose span is invariant.
    if let Some(piece) = map.piece_at(x_end) {
        if piece.span.contains(y_end)
            && piece.slope.abs() <= Rational::one()
            && is_invariant(map, &piece.span)
        {
            let fixed_point = map
                .periodic_points_in(1, &piece.span, 4)
                .ok()
                .and_then(|s| s.parts().first().and_then(|p| p.lo.clone()));
            return Some(Certificate::CommonContractingPiece {
                span: piece.span.clone(),
                slope: piece.slope.clone(),
                fixed_point,
                backward,
            });
        }
    }
    // Separate invariant traps within delta of each other.
    let tx = find_point_trap(map, x_end)?;
    let ty = find_point_trap(map, y_end)?;
    let sup = trap_sup_distance(&tx, &ty)?;
    if &sup <= delta {
        return Some(Certificate::InvariantTraps {
            trap_x: tx,
            trap_y: ty,
            sup_distance: sup,
            backward,
        });
    }
    None
}

fn trap_sup_distance(a: &Interval, b: &Interval) -> Option<Rational> {
    let (alo, ahi) = (a.lo.as_ref()?, a.hi.as_ref()?);
    let (blo, bhi) = (b.lo.as_ref()?, b.hi.as_ref()?);
    Some((ahi - blo).abs().max((bhi - alo).abs()))
}

/// An invariant interval of diameter <= delta containing a positive-radius
/// relative ball around x: certifies uniform non-separation of the whole
/// ball. Returns the trap and the certified ball radius.
pub fn find_ball_trap(
    map: &DynMap,
    x: &Rational,
    delta: &Rational,
    grid: &Rational,
) -> Option<(Interval, Rational)> {
    let space = map.space();
    let mut candidates: Vec<Interval> = Vec::new();
    let half = delta / Rational::from_int(2);
    for r in [
        half.clone(),
        delta / Rational::from_int(4),
        delta / Rational::from_int(8),
        grid.clone(),
    ] {
        if let Some(iv) = clip_to_domain(map, x - &r, x + &r) {
            candidates.push(iv);
        }
    }
    let pool = boundary_pool(map, x, delta);
    let below: Vec<&Rational> = pool.iter().filter(|v| *v <= x).collect();
    let above: Vec<&Rational> = pool.iter().filter(|v| *v >= x).collect();
    for a in below.iter().rev().take(6) {
        for b in above.iter().take(6) {
            if *a < b {
                candidates.push(Interval::new((*a).clone(), (*b).clone()));
            }
        }
    }
    candidates.retain(|c| {
        c.length().map(|l| &l <= delta).unwrap_or(false) && c.contains(x) && !c.is_point()
    });
    candidates.sort_by(|p, q| {
        // Prefer deeper balls: larger minimum side depth.
        ball_depth(q, x, space)
            .cmp(&ball_depth(p, x, space))
            .then_with(|| p.length().unwrap().cmp(&q.length().unwrap()))
    });
    for c in candidates {
        if is_invariant(map, &c) {
            let depth = ball_depth(&c, x, space);
            if depth.is_positive() {
                return Some((c, depth));
            }
        }
    }
    None
}

/// Radius of the largest relative ball around x inside `iv`. Sides clipped
/// by the interval domain boundary do not constrain the ball.
fn ball_depth(iv: &Interval, x: &Rational, space: Space) -> Rational {
    let lo = iv.lo.as_ref().unwrap();
    let hi = iv.hi.as_ref().unwrap();
    let left = x - lo;
    let right = hi - x;
    match space {
        Space::Interval01 => {
            let mut depth = Rational::one();
            if *lo != Rational::zero() {
                depth = depth.min(left);
            }
            if *hi != Rational::one() {
                depth = depth.min(right);
            }
            depth
        }
        _ => left.min(right),
    }
}

/// Certificate that an open region contains no periodic point of any
/// period: constant displacement sign strictly inside an invariant region.
pub fn find_no_periodic_cert(map: &DynMap, side: &Interval) -> Option<Certificate> {
    let (slo, shi) = (side.lo.as_ref()?, side.hi.as_ref()?);
    if slo >= shi {
        return None;
    }
    let mut candidates = vec![side.clone()];
    let mid = Rational::midpoint(slo, shi);
    let radius = Rational::one();
    let pool = boundary_pool(map, &mid, &radius);
    let below: Vec<&Rational> = pool.iter().filter(|v| *v <= slo).collect();
    let above: Vec<&Rational> = pool.iter().filter(|v| *v >= shi).collect();
    for a in below.iter().rev().take(4) {
        for b in above.iter().take(4) {
            candidates.push(Interval::new((*a).clone(), (*b).clone()));
        }
    }
    for region in candidates {
        let sign = map.displacement_sign_on(&region);
        if sign != 0 && is_invariant(map, &region) && side.is_subset_of(&region) {
            return Some(Certificate::MonotoneSignRegion { region, sign });
        }
    }
    None
}

/// Search an invariant region absorbing the hull `start` and certainly
/// disjoint from the open target `(v_lo, v_hi)`.
pub fn find_absorbing_trap(
    map: &DynMap,
    start: &Interval,
    v_lo: &Rational,
    v_hi: &Rational,
) -> Option<Interval> {
    let mut t = start.clone();
    for _ in 0..48 {
        if is_invariant(map, &t) {
            break;
        }
        let img = map.image(&t).ok()?;
        let mut parts = img.parts().to_vec();
        parts.push(t.clone());
        let hull = IntervalSet::from_parts(parts);
        let lo = hull.parts().first()?.lo.clone()?;
        let hi = hull.parts().last()?.hi.clone()?;
        let grown = Interval::new(lo, hi);
        if grown == t {
            break;
        }
        t = grown;
    }
    if !is_invariant(map, &t) {
        return None;
    }
    let tl = t.lo.as_ref()?;
    let th = t.hi.as_ref()?;
    // Closed trap vs open target: disjoint iff the trap stays at or outside
    // the open endpoints.
    if th <= v_lo || tl >= v_hi {
        Some(t)
    } else {
        None
    }
}

/// Exact re-verification of certificates (the independent re-check the
/// test suite runs on every stored witness).
pub fn verify_pair_cert(
    map_for_direction: &DynMap,
    cert: &Certificate,
    x_end: &Rational,
    y_end: &Rational,
    delta: &Rational,
) -> bool {
    match cert {
        Certificate::CommonContractingPiece { span, slope, .. } => {
            let piece = match map_for_direction.piece_at(x_end) {
                Some(p) => p,
                None => return false,
            };
            piece.span == *span
                && piece.slope == *slope
                && span.contains(x_end)
                && span.contains(y_end)
                && slope.abs() <= Rational::one()
                && is_invariant(map_for_direction, span)
                && crate::space::distance_exact(map_for_direction.space(), x_end, y_end) <= *delta
        }
        Certificate::InvariantTraps {
            trap_x,
            trap_y,
            sup_distance,
            ..
        } => {
            trap_x.contains(x_end)
                && trap_y.contains(y_end)
                && is_invariant(map_for_direction, trap_x)
                && is_invariant(map_for_direction, trap_y)
                && trap_sup_distance(trap_x, trap_y).as_ref() == Some(sup_distance)
                && sup_distance <= delta
        }
        Certificate::IsometryConstantDistance { distance } => {
            matches!(map_for_direction, DynMap::Rotation(_))
                && distance <= delta
                && crate::space::distance_exact(Space::Circle, x_end, y_end) == *distance
        }
        _ => false,
    }
}

pub fn verify_ball_trap(
    map: &DynMap,
    trap: &Interval,
    x: &Rational,
    ball_radius: &Rational,
    delta: &Rational,
) -> bool {
    let len = match trap.length() {
        Some(l) => l,
        None => return false,
    };
    trap.contains(x)
        && &len <= delta
        && ball_radius.is_positive()
        && &ball_depth(trap, x, map.space()) >= ball_radius
        && is_invariant(map, trap)
}

pub fn verify_no_periodic_cert(map: &DynMap, cert: &Certificate, side: &Interval) -> bool {
    match cert {
        Certificate::MonotoneSignRegion { region, sign } => {
            *sign != 0
                && map.displacement_sign_on(region) == *sign
                && is_invariant(map, region)
                && side.is_subset_of(region)
        }
        Certificate::IrrationalRotationFreePeriodic => {
            matches!(
                map,
                DynMap::Rotation(r) if r.rational_period().is_none()
            )
        }
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::maps::{LadderKind, LadderMap, PLMap};
    use crate::rational::rat;

    fn ladder_f() -> DynMap {
        DynMap::Ladder(LadderMap::new(LadderKind::AllDip))
    }

    #[test]
    fn point_trap_for_fixed_point_is_degenerate() {
        let f = ladder_f();
        let trap = find_point_trap(&f, &rat(1, 3)).unwrap();
        assert_eq!(trap, Interval::point(rat(1, 3)));
    }

    #[test]
    fn point_trap_inside_rung() {
        let f = ladder_f();
        let trap = find_point_trap(&f, &rat(2, 5)).unwrap();
        // 2/5 lies in rung 2 = [1/3, 1/2]; its lower piece is invariant.
        assert!(trap.contains(&rat(2, 5)));
        assert!(trap.is_subset_of(&Interval::new(rat(1, 3), rat(1, 2))));
    }

    #[test]
    fn ball_trap_at_zero_uses_rung_boundary() {
        let f = ladder_f();
        let (trap, radius) = find_ball_trap(&f, &rat(0, 1), &rat(1, 4), &Rational::pow2(-12))
            .expect("trap at the accumulation point");
        assert!(verify_ball_trap(&f, &trap, &rat(0, 1), &radius, &rat(1, 4)));
        assert!(trap.length().unwrap() <= rat(1, 4));
    }

    #[test]
    fn ball_trap_for_identity() {
        let id = DynMap::Pl(PLMap::identity(crate::space::Space::Interval01));
        let (trap, radius) = find_ball_trap(&id, &rat(1, 2), &Rational::pow2(-10), &Rational::pow2(-12))
            .expect("identity traps everywhere");
        assert!(verify_ball_trap(
            &id,
            &trap,
            &rat(1, 2),
            &radius,
            &Rational::pow2(-10)
        ));
    }

    #[test]
    fn pair_cert_in_contracting_piece() {
        // Fixed-ends map: both endpoints deep in the contracting top piece.
        let f = DynMap::Pl(
            PLMap::interval(vec![
                (rat(0, 1), rat(0, 1)),
                (rat(3, 4), rat(7, 8)),
                (rat(1, 1), rat(1, 1)),
            ])
            .unwrap(),
        );
        let cert = find_pair_cert(&f, &rat(9, 10), &rat(91, 100), &Rational::pow2(-6), false)
            .expect("common contracting piece");
        assert!(verify_pair_cert(
            &f,
            &cert,
            &rat(9, 10),
            &rat(91, 100),
            &Rational::pow2(-6)
        ));
        match cert {
            Certificate::CommonContractingPiece { slope, .. } => {
                assert_eq!(slope, rat(1, 2));
            }
            other => panic!("unexpected cert {other:?}"),
        }
    }

    #[test]
    fn no_periodic_cert_inside_rung() {
        let f = ladder_f();
        let side = Interval::new(rat(2, 5), rat(12, 25));
        let cert = find_no_periodic_cert(&f, &side).expect("dip rung has no periodic points");
        assert!(verify_no_periodic_cert(&f, &cert, &side));
    }

    #[test]
    fn absorbing_trap_for_square_map() {
        let h = DynMap::Power(crate::maps::PowerMap::square());
        let start = Interval::new(rat(0, 1), rat(26, 100));
        let trap = find_absorbing_trap(&h, &start, &rat(9, 10), &rat(19, 20))
            .expect("squares of [0, 0.26] stay below 0.9");
        assert!(is_invariant(&h, &trap));
    }
}
