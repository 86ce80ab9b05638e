//! Finite-scale checkers for the pointwise properties: expansivity,
//! sensitivity, dense periodicity, transitivity/mixing, Devaney chaos and
//! non-separating sets.
//!
//! Confirmations are existential facts verified exactly at the stated
//! scale. Refutations additionally carry certificates (see [`certs`]) that
//! control the dynamics beyond the horizon, so they are sound statements
//! about the map, not just about the truncation.

pub mod certs;

use serde_json::json;

use crate::dyadic::Bounds;
use crate::errors::{DynError, DynResult};
use crate::interval::{Interval, IntervalSet};
use crate::maps::{Direction, DynMap};
use crate::rational::Rational;
use crate::scale::ScaleConfig;
use crate::space::{distance, distance_exact, Point, Space};
use crate::verdict::{
    Certificate, CompanionWitness, DeltaTrap, HitWitness, IndexSetWitness, NonSeparatingSet,
    PeriodicWitness, SensitivePair, SeparatedCandidate, Status, Verdict, Witness,
};

/// A relatively open interval region (open endpoints except where clipped by
/// the domain boundary).
#[derive(Clone, Debug, PartialEq, serde::Serialize)]
pub struct Region {
    pub lo: Rational,
    pub hi: Rational,
    pub lo_closed: bool,
    pub hi_closed: bool,
}

impl Region {
    /// Relative ball around a point, clipped to the space's domain.
    pub fn ball(space: Space, center: &Rational, radius: &Rational) -> Region {
        let mut lo = center - radius;
        let mut hi = center + radius;
        let mut lo_closed = false;
        let mut hi_closed = false;
        if space == Space::Interval01 {
            if lo <= Rational::zero() {
                lo = Rational::zero();
                lo_closed = true;
            }
            if hi >= Rational::one() {
                hi = Rational::one();
                hi_closed = true;
            }
        }
        Region {
            lo,
            hi,
            lo_closed,
            hi_closed,
        }
    }

    pub fn hull(&self) -> Interval {
        Interval::new(self.lo.clone(), self.hi.clone())
    }

    pub fn length(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, v: &Rational) -> bool {
        let above = *v > self.lo || (self.lo_closed && *v == self.lo);
        let below = *v < self.hi || (self.hi_closed && *v == self.hi);
        above && below
    }

    /// Certainly hit by an image with closed hull [m, M] (the open interior
    /// (m, M) is always contained in the image of a connected open set).
    fn certainly_hit(&self, m: &Rational, mm: &Rational) -> bool {
        if m == mm {
            return self.contains(m);
        }
        let lo = if &self.lo > m { &self.lo } else { m };
        let hi = if &self.hi < mm { &self.hi } else { mm };
        lo < hi
    }

    /// Certainly missed by an image with closed hull [m, M].
    fn certainly_miss(&self, m: &Rational, mm: &Rational) -> bool {
        if mm < &self.lo || m > &self.hi {
            return true;
        }
        (mm == &self.lo && !self.lo_closed) || (m == &self.hi && !self.hi_closed)
    }
}

/// The exact truncated separation index set
/// {n : d(f^n(x), f^n(y)) > delta}, over [0, horizon] or [-horizon, horizon].
pub fn separation_index_set(
    f: &DynMap,
    x: &Point,
    y: &Point,
    delta: &Rational,
    horizon: u32,
    direction: Direction,
) -> DynResult<IndexSetWitness> {
    if x == y {
        return Err(DynError::Domain("separation needs y distinct from x".into()));
    }
    let ox = f.orbit(x, horizon, direction)?;
    let oy = f.orbit(y, horizon, direction)?;
    let space = f.space();
    let mut indices = Vec::new();
    let mut unresolved = Vec::new();
    let lo = if direction == Direction::TwoSided {
        -(horizon as i64)
    } else {
        0
    };
    for n in lo..=(horizon as i64) {
        let d = distance(space, ox.at(n).unwrap(), oy.at(n).unwrap())?;
        if d.certainly_gt(delta) {
            indices.push(n);
        } else if !d.certainly_le(delta) {
            unresolved.push(n);
        }
    }
    Ok(IndexSetWitness {
        property: "separation".into(),
        params: json!({
            "x": x.to_string(),
            "y": y.to_string(),
            "delta": delta.to_string(),
            "direction": direction,
        }),
        lo,
        hi: horizon as i64,
        indices,
        unresolved,
    })
}

/// Incremental separation scanner: candidate orbits advance only as far as
/// the verdict logic needs, and the progress is shared across thresholds.
struct SepScanner<'a> {
    f: &'a DynMap,
    inv: Option<DynMap>,
    space: Space,
    deltas: Vec<Rational>,
    horizon: i64,
    x_fwd: Vec<Point>,
    x_bwd: Vec<Point>,
    states: Vec<CandState>,
}

struct CandState {
    y: Rational,
    dist0: Rational,
    fwd_pt: Point,
    fwd_n: i64,
    bwd_pt: Point,
    bwd_n: i64,
    /// Per delta: first n in [0, fwd_n] with separation (forward).
    first_any: Vec<Option<i64>>,
    /// Per delta: first n in [1, fwd_n] with separation (forward).
    first_ge1: Vec<Option<i64>>,
    /// Per delta: first n in [1, bwd_n] with separation (backward).
    first_back: Vec<Option<i64>>,
    /// Per delta: some comparison so far was not certain.
    uncertain: Vec<bool>,
    seen0: bool,
}

impl<'a> SepScanner<'a> {
    fn new(
        f: &'a DynMap,
        x: &Rational,
        pool: &[Rational],
        cfg: &ScaleConfig,
        direction: Direction,
    ) -> DynResult<Self> {
        let xo = f.orbit(&Point::exact(x.clone()), cfg.horizon, direction)?;
        let inv = if direction == Direction::TwoSided {
            Some(f.inverse()?)
        } else {
            None
        };
        let space = f.space();
        let nd = cfg.delta_sweep.len();
        let states = pool
            .iter()
            .map(|y| CandState {
                y: y.clone(),
                dist0: distance_exact(space, x, y),
                fwd_pt: Point::exact(y.clone()),
                fwd_n: 0,
                bwd_pt: Point::exact(y.clone()),
                bwd_n: 0,
                first_any: vec![None; nd],
                first_ge1: vec![None; nd],
                first_back: vec![None; nd],
                uncertain: vec![false; nd],
                seen0: false,
            })
            .collect();
        Ok(SepScanner {
            f,
            inv,
            space,
            deltas: cfg.delta_sweep.clone(),
            horizon: cfg.horizon as i64,
            x_fwd: xo.forward,
            x_bwd: xo.backward,
            states,
        })
    }

    fn len(&self) -> usize {
        self.states.len()
    }

    fn record(&mut self, i: usize, n: i64, d: &Bounds, backward: bool) {
        let st = &mut self.states[i];
        for (di, delta) in self.deltas.iter().enumerate() {
            if d.certainly_gt(delta) {
                if backward {
                    if st.first_back[di].is_none() {
                        st.first_back[di] = Some(n);
                    }
                } else {
                    if st.first_any[di].is_none() {
                        st.first_any[di] = Some(n);
                    }
                    if n >= 1 && st.first_ge1[di].is_none() {
                        st.first_ge1[di] = Some(n);
                    }
                }
            } else if !d.certainly_le(delta) {
                st.uncertain[di] = true;
            }
        }
    }

    fn dist_at(&self, i: usize, n: i64, backward: bool) -> DynResult<Bounds> {
        let st = &self.states[i];
        let (xp, yp) = if backward {
            (&self.x_bwd[(n - 1) as usize], &st.bwd_pt)
        } else {
            (&self.x_fwd[n as usize], &st.fwd_pt)
        };
        // Fast exact path.
        if let (Some(a), Some(b)) = (xp.as_exact(), yp.as_exact()) {
            return Ok(Bounds::exact(distance_exact(self.space, a, b)));
        }
        distance(self.space, xp, yp)
    }

    fn step_fwd(&mut self, i: usize) -> DynResult<bool> {
        if self.states[i].fwd_n >= self.horizon {
            return Ok(false);
        }
        let next = self.f.eval_point(&self.states[i].fwd_pt)?;
        self.states[i].fwd_pt = next;
        self.states[i].fwd_n += 1;
        let n = self.states[i].fwd_n;
        let d = self.dist_at(i, n, false)?;
        self.record(i, n, &d, false);
        Ok(true)
    }

    fn step_bwd(&mut self, i: usize) -> DynResult<bool> {
        if self.states[i].bwd_n >= self.horizon {
            return Ok(false);
        }
        let inv = self.inv.as_ref().expect("backward scan needs the inverse");
        let next = inv.eval_point(&self.states[i].bwd_pt)?;
        self.states[i].bwd_pt = next;
        self.states[i].bwd_n += 1;
        let n = self.states[i].bwd_n;
        let d = self.dist_at(i, n, true)?;
        self.record(i, n, &d, true);
        Ok(true)
    }

    /// First forward index in [0, horizon] separating at delta di, advancing
    /// the orbit as needed.
    fn sep_fwd(&mut self, i: usize, di: usize) -> DynResult<Option<i64>> {
        if !self.states[i].seen0 {
            let d = self.dist_at(i, 0, false)?;
            self.record(i, 0, &d, false);
            self.states[i].seen0 = true;
        }
        while self.states[i].first_any[di].is_none() && self.states[i].fwd_n < self.horizon {
            self.step_fwd(i)?;
        }
        Ok(self.states[i].first_any[di])
    }

    /// First forward index n >= 1 separating at delta di.
    fn sep_ge1(&mut self, i: usize, di: usize) -> DynResult<Option<i64>> {
        self.sep_fwd(i, di)?;
        while self.states[i].first_ge1[di].is_none() && self.states[i].fwd_n < self.horizon {
            self.step_fwd(i)?;
        }
        Ok(self.states[i].first_ge1[di])
    }

    /// First backward index n >= 1 separating at delta di.
    fn sep_bwd(&mut self, i: usize, di: usize) -> DynResult<Option<i64>> {
        while self.states[i].first_back[di].is_none() && self.states[i].bwd_n < self.horizon {
            self.step_bwd(i)?;
        }
        Ok(self.states[i].first_back[di])
    }

    /// Certified non-separation over the full window at delta di.
    fn nonsep_certain(&mut self, i: usize, di: usize, two_sided: bool) -> DynResult<bool> {
        if self.sep_fwd(i, di)?.is_some() {
            return Ok(false);
        }
        while self.states[i].fwd_n < self.horizon {
            self.step_fwd(i)?;
        }
        if self.states[i].first_any[di].is_some() {
            return Ok(false);
        }
        if two_sided {
            if self.sep_bwd(i, di)?.is_some() {
                return Ok(false);
            }
            while self.states[i].bwd_n < self.horizon {
                self.step_bwd(i)?;
            }
            if self.states[i].first_back[di].is_some() {
                return Ok(false);
            }
        }
        Ok(!self.states[i].uncertain[di])
    }

    fn end_fwd(&mut self, i: usize) -> DynResult<Option<Rational>> {
        while self.states[i].fwd_n < self.horizon {
            self.step_fwd(i)?;
        }
        Ok(self.states[i].fwd_pt.as_exact().cloned())
    }

    fn end_bwd(&mut self, i: usize) -> DynResult<Option<Rational>> {
        while self.states[i].bwd_n < self.horizon {
            self.step_bwd(i)?;
        }
        Ok(self.states[i].bwd_pt.as_exact().cloned())
    }

    fn x_end_fwd(&self) -> Option<Rational> {
        self.x_fwd.last().and_then(|p| p.as_exact().cloned())
    }

    fn x_end_bwd(&self) -> Option<Rational> {
        self.x_bwd.last().and_then(|p| p.as_exact().cloned())
    }
}

/// Candidate companion points: dyadic grid points and midpoints, map
/// breakpoints, nearby fixed points, and shallow breakpoint preimages.
fn candidate_pool(f: &DynMap, x: &Rational, window: &Rational, cfg: &ScaleConfig) -> Vec<Rational> {
    let space = f.space();
    let lo = x - window;
    let hi = x + window;
    let clip = |v: Rational| -> Option<Rational> {
        match space {
            Space::Interval01 => {
                if v < Rational::zero() || v > Rational::one() {
                    None
                } else {
                    Some(v)
                }
            }
            _ => Some(v),
        }
    };
    let mut pool: Vec<Rational> = Vec::new();
    // Grid multiples and midpoints.
    let g = &cfg.grid;
    let mut j = (&lo / g).floor_int();
    let half = g / Rational::from_int(2);
    loop {
        let base = Rational::from_bigint(j.clone()) * g;
        if base > hi {
            break;
        }
        if let Some(v) = clip(base.clone()) {
            pool.push(v);
        }
        if let Some(v) = clip(&base + &half) {
            pool.push(v);
        }
        j += 1;
    }
    // Breakpoints of the map near x, plus per-delta fixed points and
    // breakpoints (accumulating structures need them at every scale).
    pool.extend(f.breakpoints_in(&lo, &hi, 256));
    let mut windows: Vec<Rational> = vec![window.clone()];
    windows.extend(cfg.delta_sweep.iter().cloned());
    for w in &windows {
        let (wlo, whi) = (x - w, x + w);
        pool.extend(f.breakpoints_in(&wlo, &whi, 16));
        if let Ok(fps) = f.periodic_points_in(1, &Interval::new(wlo, whi), 8) {
            for part in fps.parts() {
                if let (Some(a), Some(b)) = (&part.lo, &part.hi) {
                    pool.push(a.clone());
                    pool.push(b.clone());
                }
            }
        }
    }
    // Shallow preimages of breakpoints (where later iterates kink).
    let bps = f.breakpoints_in(&lo, &hi, 32);
    for bp in &bps {
        if let Ok(pre) = f.preimage(&Interval::point(bp.clone())) {
            for part in pre.parts() {
                for v in [&part.lo, &part.hi] {
                    if let Some(v) = v {
                        if *v >= lo && *v <= hi {
                            pool.push(v.clone());
                        }
                    }
                }
            }
        }
    }
    pool.retain(|v| v != x && *v >= lo && *v <= hi);
    pool.sort();
    pool.dedup();
    pool
}

fn expansive_impl(
    f: &DynMap,
    x: &Point,
    cfg: &ScaleConfig,
    direction: Direction,
    property: &str,
) -> DynResult<Verdict> {
    cfg.validate()?;
    f.space().validate(x)?;
    if direction == Direction::TwoSided && !f.is_invertible() {
        return Err(DynError::Capability(
            "expansivity (two-sided) needs an invertible map".into(),
        ));
    }
    // Rotations are isometries: no point is expansive; companions keep
    // their distance forever.
    if let DynMap::Rotation(_) = f {
        return rotation_expansive_refuted(f, x, cfg, property);
    }
    let xr = x.expect_exact("expansivity checker")?;
    let window = cfg.max_delta() + &cfg.grid;
    let pool = candidate_pool(f, xr, &window, cfg);
    let two_sided = direction == Direction::TwoSided;
    let mut sc = SepScanner::new(f, xr, &pool, cfg, direction)?;

    // Confirmation: some delta separates every candidate (candidates
    // outside the pool window separate at index 0 since d(x, y) > delta).
    'sweep: for (di, delta) in cfg.delta_sweep.iter().enumerate() {
        let mut tube = Vec::new();
        for i in 0..sc.len() {
            let fwd = sc.sep_fwd(i, di)?;
            let index = match fwd {
                Some(n) => Some(n),
                None if two_sided => sc.sep_bwd(i, di)?.map(|n| -n),
                None => None,
            };
            match index {
                Some(idx) => {
                    if sc.states[i].dist0 <= *delta {
                        tube.push(SeparatedCandidate {
                            y: sc.states[i].y.clone(),
                            index: idx,
                        });
                    }
                }
                None => continue 'sweep,
            }
        }
        return Ok(Verdict::new(
            property,
            x.clone(),
            Status::ConfirmedAtScale,
            Witness::SeparationSweep {
                delta: delta.clone(),
                tube_candidates: tube,
                pool_size: sc.len(),
            },
            cfg,
        ));
    }

    // Refutation: for every delta, a companion that certifiably never
    // separates.
    let inv = if two_sided { Some(f.inverse()?) } else { None };
    let mut companions = Vec::new();
    for (di, delta) in cfg.delta_sweep.iter().enumerate() {
        let mut found = None;
        // Fixed points and near candidates make the best companions.
        let mut order: Vec<usize> = (0..sc.len()).collect();
        order.sort_by(|&a, &b| sc.states[a].dist0.cmp(&sc.states[b].dist0));
        for i in order {
            if sc.states[i].dist0 > *delta {
                continue;
            }
            if !sc.nonsep_certain(i, di, two_sided)? {
                continue;
            }
            let (x_end, y_end) = match (sc.x_end_fwd(), sc.end_fwd(i)?) {
                (Some(a), Some(b)) => (a, b),
                _ => continue,
            };
            let fwd_cert = match certs::find_pair_cert(f, &x_end, &y_end, delta, false) {
                Some(c) => c,
                None => continue,
            };
            let bwd_cert = if let Some(inv) = &inv {
                let (xb, yb) = match (sc.x_end_bwd(), sc.end_bwd(i)?) {
                    (Some(a), Some(b)) => (a, b),
                    _ => continue,
                };
                match certs::find_pair_cert(inv, &xb, &yb, delta, true) {
                    Some(c) => Some(c),
                    None => continue,
                }
            } else {
                None
            };
            found = Some(CompanionWitness {
                delta: delta.clone(),
                y: sc.states[i].y.clone(),
                forward_cert: fwd_cert,
                backward_cert: bwd_cert,
            });
            break;
        }
        match found {
            Some(c) => companions.push(c),
            None => {
                return Ok(Verdict::new(
                    property,
                    x.clone(),
                    Status::Inconclusive,
                    Witness::Note {
                        note: format!(
                            "no separating delta found, and no certified companion at delta {delta}"
                        ),
                    },
                    cfg,
                ))
            }
        }
    }
    Ok(Verdict::new(
        property,
        x.clone(),
        Status::RefutedAtScale,
        Witness::NonSeparatingCompanions { companions },
        cfg,
    ))
}

fn rotation_expansive_refuted(
    f: &DynMap,
    x: &Point,
    cfg: &ScaleConfig,
    property: &str,
) -> DynResult<Verdict> {
    let xr = match x.as_exact() {
        Some(r) => r.clone(),
        None => {
            return Ok(Verdict::new(
                property,
                x.clone(),
                Status::Inconclusive,
                Witness::Note {
                    note: "rotation with inexact base point".into(),
                },
                cfg,
            ))
        }
    };
    let mut companions = Vec::new();
    for delta in &cfg.delta_sweep {
        let step = delta.clone().min(Rational::new(1, 4)) / Rational::from_int(2);
        let y = (&xr + &step).fract();
        let d = distance_exact(Space::Circle, &xr, &y);
        companions.push(CompanionWitness {
            delta: delta.clone(),
            y,
            forward_cert: Certificate::IsometryConstantDistance { distance: d },
            backward_cert: Some(Certificate::IsometryConstantDistance {
                distance: distance_exact(Space::Circle, &xr, &(&xr + &step).fract()),
            }),
        });
    }
    let _ = f;
    Ok(Verdict::new(
        property,
        x.clone(),
        Status::RefutedAtScale,
        Witness::NonSeparatingCompanions { companions },
        cfg,
    ))
}

/// Two-sided expansivity at x.
pub fn check_expansive_point(f: &DynMap, x: &Point, cfg: &ScaleConfig) -> DynResult<Verdict> {
    expansive_impl(f, x, cfg, Direction::TwoSided, "expansive")
}

/// Forward (positive) expansivity at x.
pub fn check_positively_expansive_point(
    f: &DynMap,
    x: &Point,
    cfg: &ScaleConfig,
) -> DynResult<Verdict> {
    expansive_impl(f, x, cfg, Direction::Forward, "pos-expansive")
}

/// Sensitivity at x (forward index sets Se_x, n >= 1).
pub fn check_sensitive_point(f: &DynMap, x: &Point, cfg: &ScaleConfig) -> DynResult<Verdict> {
    cfg.validate()?;
    f.space().validate(x)?;
    if let DynMap::Rotation(_) = f {
        return rotation_sensitive_refuted(x, cfg);
    }
    let xr = x.expect_exact("sensitivity checker")?;
    let window = cfg.max_delta().clone().max(cfg.max_epsilon().clone()) + &cfg.grid;
    let pool = candidate_pool(f, xr, &window, cfg);
    let mut sc = SepScanner::new(f, xr, &pool, cfg, Direction::Forward)?;

    // Scan candidates from the edge of each ball inward: dynamical
    // separation shows up soonest far from x, and the order is canonical.
    let mut by_dist: Vec<usize> = (0..sc.len()).collect();
    by_dist.sort_by(|&a, &b| {
        sc.states[b]
            .dist0
            .cmp(&sc.states[a].dist0)
            .then_with(|| sc.states[a].y.cmp(&sc.states[b].y))
    });

    'sweep: for (di, delta) in cfg.delta_sweep.iter().enumerate() {
        // A separation threshold below the smallest probed neighborhood
        // radius confirms nothing: any pair of points at constant distance
        // between delta and epsilon would pass. Require delta >= min epsilon.
        if delta < cfg.min_epsilon() {
            continue;
        }
        let mut pairs = Vec::new();
        for eps in &cfg.epsilon_list {
            let mut found: Option<(i64, Rational)> = None;
            for &i in &by_dist {
                if sc.states[i].dist0 >= *eps || sc.states[i].dist0.is_zero() {
                    continue;
                }
                if let Some(n) = sc.sep_ge1(i, di)? {
                    found = Some((n, sc.states[i].y.clone()));
                    break;
                }
            }
            match found {
                Some((n, y)) => pairs.push(SensitivePair {
                    epsilon: eps.clone(),
                    y,
                    index: n,
                }),
                None => continue 'sweep,
            }
        }
        return Ok(Verdict::new(
            "sensitive",
            x.clone(),
            Status::ConfirmedAtScale,
            Witness::SensitivePairs {
                delta: delta.clone(),
                pairs,
            },
            cfg,
        ));
    }

    let mut traps = Vec::new();
    for delta in &cfg.delta_sweep {
        match certs::find_ball_trap(f, xr, delta, &cfg.grid) {
            Some((trap, radius)) => traps.push(DeltaTrap {
                delta: delta.clone(),
                ball_radius: radius,
                cert: Certificate::BallTrap {
                    diameter: trap.length().unwrap(),
                    trap,
                    ball_radius: Rational::zero(),
                },
            }),
            None => {
                return Ok(Verdict::new(
                    "sensitive",
                    x.clone(),
                    Status::Inconclusive,
                    Witness::Note {
                        note: format!("no sensitive pair found and no ball trap at delta {delta}"),
                    },
                    cfg,
                ))
            }
        }
    }
    Ok(Verdict::new(
        "sensitive",
        x.clone(),
        Status::RefutedAtScale,
        Witness::UniformNonSeparation { traps },
        cfg,
    ))
}

fn rotation_sensitive_refuted(x: &Point, cfg: &ScaleConfig) -> DynResult<Verdict> {
    let mut traps = Vec::new();
    for delta in &cfg.delta_sweep {
        let radius = delta.clone().min(Rational::new(1, 4)) / Rational::from_int(2);
        traps.push(DeltaTrap {
            delta: delta.clone(),
            ball_radius: radius.clone(),
            cert: Certificate::IsometryConstantDistance { distance: radius },
        });
    }
    Ok(Verdict::new(
        "sensitive",
        x.clone(),
        Status::RefutedAtScale,
        Witness::UniformNonSeparation { traps },
        cfg,
    ))
}

/// Dense periodicity at x: every deleted neighborhood contains a periodic
/// point.
pub fn check_periodic_density_point(
    f: &DynMap,
    x: &Point,
    cfg: &ScaleConfig,
    max_period: u32,
) -> DynResult<Verdict> {
    cfg.validate()?;
    f.space().validate(x)?;
    let xr = x.expect_exact("periodic-density checker")?;
    let space = f.space();

    // Confirmation: for every epsilon a periodic point in the deleted ball.
    let mut points = Vec::new();
    let mut all_found = true;
    for eps in &cfg.epsilon_list {
        let ball = Region::ball(space, xr, eps);
        let mut witness: Option<(Rational, u32)> = None;
        'periods: for k in 1..=max_period {
            let set = f.periodic_points_in(k, &ball.hull(), 64)?;
            for part in set.parts() {
                if let Some(z) = pick_point_excluding(part, xr, &ball) {
                    witness = Some((z, k));
                    break 'periods;
                }
            }
        }
        match witness {
            Some((z, k)) => points.push(PeriodicWitness {
                epsilon: eps.clone(),
                point: z,
                period: k,
            }),
            None => {
                all_found = false;
                break;
            }
        }
    }
    if all_found {
        return Ok(Verdict::new(
            "periodic-density",
            x.clone(),
            Status::ConfirmedAtScale,
            Witness::PeriodicPoints { points },
            cfg,
        ));
    }

    // Refutation: a deleted ball certified free of periodic points.
    let mut eps = cfg.min_epsilon().clone();
    for _ in 0..4 {
        if let Some(certs_found) = periodic_free_certs(f, xr, &eps)? {
            return Ok(Verdict::new(
                "periodic-density",
                x.clone(),
                Status::RefutedAtScale,
                Witness::PeriodicFreeBall {
                    epsilon: eps,
                    side_certs: certs_found,
                    checked_periods: max_period,
                },
                cfg,
            ));
        }
        eps = eps / Rational::from_int(2);
    }
    Ok(Verdict::new(
        "periodic-density",
        x.clone(),
        Status::Inconclusive,
        Witness::Note {
            note: "periodic points not found at scale, and no periodic-free certificate".into(),
        },
        cfg,
    ))
}

fn pick_point_excluding(part: &Interval, x: &Rational, ball: &Region) -> Option<Rational> {
    let candidates = match (&part.lo, &part.hi) {
        (Some(a), Some(b)) if a == b => vec![a.clone()],
        (Some(a), Some(b)) => vec![
            Rational::midpoint(a, b),
            a.clone(),
            b.clone(),
            Rational::midpoint(a, &Rational::midpoint(a, b)),
        ],
        _ => Vec::new(),
    };
    candidates
        .into_iter()
        .find(|z| z != x && ball.contains(z) && part.contains(z))
}

fn periodic_free_certs(
    f: &DynMap,
    x: &Rational,
    eps: &Rational,
) -> DynResult<Option<Vec<Certificate>>> {
    if let DynMap::Rotation(r) = f {
        return Ok(match r.rational_period() {
            Some(_) => None,
            None => Some(vec![Certificate::IrrationalRotationFreePeriodic]),
        });
    }
    let space = f.space();
    let ball = Region::ball(space, x, eps);
    let mut certs_found = Vec::new();
    // Left and right deleted sides.
    for (a, b) in [(ball.lo.clone(), x.clone()), (x.clone(), ball.hi.clone())] {
        if a >= b {
            continue;
        }
        let side = Interval::new(a, b);
        match certs::find_no_periodic_cert(f, &side) {
            Some(c) => certs_found.push(c),
            None => return Ok(None),
        }
    }
    if certs_found.is_empty() {
        return Ok(None);
    }
    Ok(Some(certs_found))
}

/// Exact truncated hitting times N(f, x, U, V) over [1, horizon].
pub fn hitting_times(
    f: &DynMap,
    x: &Point,
    u: &Region,
    v: &Region,
    horizon: u32,
) -> DynResult<IndexSetWitness> {
    let xr = x.expect_exact("hitting times")?;
    if !u.contains(xr) {
        return Err(DynError::Domain("x must lie in U".into()));
    }
    let (hits, unresolved) = hitting_flags(f, u, v, horizon)?;
    Ok(IndexSetWitness {
        property: "hitting-times".into(),
        params: json!({
            "x": x.to_string(),
            "u": [u.lo.to_string(), u.hi.to_string()],
            "v": [v.lo.to_string(), v.hi.to_string()],
        }),
        lo: 1,
        hi: horizon as i64,
        indices: hits,
        unresolved,
    })
}

/// Per-index certain-hit / unresolved flags for f^n(U) vs V.
fn hitting_flags(
    f: &DynMap,
    u: &Region,
    v: &Region,
    horizon: u32,
) -> DynResult<(Vec<i64>, Vec<i64>)> {
    let mut hits = Vec::new();
    let mut unresolved = Vec::new();
    match f {
        DynMap::Rotation(r) => {
            let cu = Rational::midpoint(&u.lo, &u.hi);
            let cv = Rational::midpoint(&v.lo, &v.hi);
            let reach = (u.length() + v.length()) / Rational::from_int(2);
            for n in 1..=horizon as i64 {
                // distance(c_u + n alpha, c_v) vs r_u + r_v.
                let disp = r.iterate_point(&Point::exact(cu.clone()), n);
                let d = distance(Space::Circle, &disp, &Point::exact(cv.clone()))?;
                if d.certainly_lt(&reach) {
                    hits.push(n);
                } else if !d.certainly_ge(&reach) {
                    unresolved.push(n);
                }
            }
        }
        DynMap::Power(p) => {
            for n in 1..=horizon as i64 {
                let (lo_b, hi_b) = p.iterated_image_bounds(&u.hull(), n as u32);
                // Inner hull certainly inside the image; outer hull certainly
                // contains it.
                if v.certainly_hit(&lo_b.hi, &hi_b.lo) {
                    hits.push(n);
                } else if !v.certainly_miss(&lo_b.lo, &hi_b.hi) {
                    unresolved.push(n);
                }
            }
        }
        _ => {
            let mut j = IntervalSet::single(u.hull());
            for n in 1..=horizon as i64 {
                j = image_set(f, &j)?;
                let mut hit = false;
                let mut miss = true;
                for part in j.parts() {
                    let (m, mm) = (part.lo.as_ref().unwrap(), part.hi.as_ref().unwrap());
                    if v.certainly_hit(m, mm) {
                        hit = true;
                    }
                    if !v.certainly_miss(m, mm) {
                        miss = false;
                    }
                }
                if hit {
                    hits.push(n);
                } else if !miss {
                    unresolved.push(n);
                }
            }
        }
    }
    Ok((hits, unresolved))
}

fn image_set(f: &DynMap, s: &IntervalSet) -> DynResult<IntervalSet> {
    let mut parts = Vec::new();
    for p in s.parts() {
        parts.extend(f.image(p)?.parts().to_vec());
    }
    Ok(IntervalSet::from_parts(parts))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TransitivityMode {
    Transitive,
    Mixing,
}

/// Transitivity / mixing at x: every basis target V is hit from the
/// smallest listed neighborhood of x (mixing: on a full tail).
pub fn check_transitive_point(
    f: &DynMap,
    x: &Point,
    cfg: &ScaleConfig,
    mode: TransitivityMode,
) -> DynResult<Verdict> {
    cfg.validate()?;
    f.space().validate(x)?;
    let property = match mode {
        TransitivityMode::Transitive => "transitive",
        TransitivityMode::Mixing => "mixing",
    };
    let xr = match x.as_exact() {
        Some(r) => r.clone(),
        None => {
            return Ok(Verdict::new(
                property,
                x.clone(),
                Status::Inconclusive,
                Witness::Note {
                    note: "inexact base point".into(),
                },
                cfg,
            ))
        }
    };
    let space = f.space();
    let u = Region::ball(space, &xr, cfg.min_epsilon());
    let basis = target_basis(f, &xr, cfg);
    let horizon = cfg.horizon;

    // Rational rotations are periodic: certified refutation for both modes.
    if let DynMap::Rotation(r) = f {
        if let Some(q) = r.rational_period() {
            let qr = Rational::from_bigint(q);
            let radius = (qr.recip()) / Rational::from_int(4);
            let v_center = (&xr + (qr.recip()) / Rational::from_int(2)).fract();
            let v = Region::ball(Space::Circle, &v_center, &radius);
            let u_small = Region::ball(Space::Circle, &xr, &radius);
            return Ok(Verdict::new(
                property,
                x.clone(),
                Status::RefutedAtScale,
                Witness::HittingEmpty {
                    u: u_small.hull(),
                    v: v.hull(),
                    cert: Certificate::RationalRotationPeriodic {
                        period: qr,
                        u_center: xr.clone(),
                        v_center,
                        radius,
                    },
                },
                cfg,
            ));
        }
    }

    let mut hit_witnesses = Vec::new();
    let mut failing: Option<(Region, Vec<i64>)> = None;
    for v in &basis {
        let (hits, _unresolved) = hitting_flags(f, &u, v, horizon)?;
        match mode {
            TransitivityMode::Transitive => match hits.first() {
                Some(first) => hit_witnesses.push(HitWitness {
                    v: v.hull(),
                    first_hit: *first,
                    tail_start: None,
                }),
                None => {
                    failing = Some((v.clone(), hits));
                    break;
                }
            },
            TransitivityMode::Mixing => {
                match full_tail_start(&hits, horizon) {
                    Some(k) => hit_witnesses.push(HitWitness {
                        v: v.hull(),
                        first_hit: *hits.first().unwrap(),
                        tail_start: Some(k),
                    }),
                    None => {
                        failing = Some((v.clone(), hits));
                        break;
                    }
                }
            }
        }
    }
    if failing.is_none() {
        return Ok(Verdict::new(
            property,
            x.clone(),
            Status::ConfirmedAtScale,
            Witness::HittingFamily {
                u: u.hull(),
                hits: hit_witnesses,
            },
            cfg,
        ));
    }

    // Refutation: find some V with an empty certified hitting set.
    for v in &basis {
        let (hits, unresolved) = hitting_flags(f, &u, v, horizon)?;
        if !hits.is_empty() || !unresolved.is_empty() {
            continue;
        }
        if let Some(cert) = transitive_refutation_cert(f, &u, v, horizon)? {
            return Ok(Verdict::new(
                property,
                x.clone(),
                Status::RefutedAtScale,
                Witness::HittingEmpty {
                    u: u.hull(),
                    v: v.hull(),
                    cert,
                },
                cfg,
            ));
        }
    }
    // Mixing only: an irrational rotation is transitive but never mixing.
    if mode == TransitivityMode::Mixing {
        if let DynMap::Rotation(r) = f {
            if r.rational_period().is_none() {
                let u_len = u.length();
                let v_len = &cfg.basis_radius * &Rational::from_int(2);
                if &u_len + &v_len < Rational::one() {
                    let v_center = (&xr + Rational::new(1, 2)).fract();
                    let v = Region::ball(Space::Circle, &v_center, &cfg.basis_radius);
                    return Ok(Verdict::new(
                        property,
                        x.clone(),
                        Status::RefutedAtScale,
                        Witness::HittingEmpty {
                            u: u.hull(),
                            v: v.hull(),
                            cert: Certificate::IsometryGap {
                                u_length: u_len,
                                v_length: v_len,
                            },
                        },
                        cfg,
                    ));
                }
            }
        }
    }
    let (v, _) = failing.unwrap();
    Ok(Verdict::new(
        property,
        x.clone(),
        Status::Inconclusive,
        Witness::Note {
            note: format!(
                "target ({}, {}) not hit at scale and no absorption certificate",
                v.lo, v.hi
            ),
        },
        cfg,
    ))
}

fn full_tail_start(hits: &[i64], horizon: u32) -> Option<i64> {
    // Largest k such that [k, horizon] is fully contained in hits, provided
    // k <= horizon / 2 (the recorded half-window surrogate for cofinite).
    if hits.is_empty() {
        return None;
    }
    let mut tail_start = None;
    let mut expect = horizon as i64;
    for n in hits.iter().rev() {
        if *n == expect {
            tail_start = Some(*n);
            expect -= 1;
        } else {
            break;
        }
    }
    match tail_start {
        Some(k) if k <= (horizon as i64) / 2 => Some(k),
        _ => None,
    }
}

fn target_basis(f: &DynMap, x: &Rational, cfg: &ScaleConfig) -> Vec<Region> {
    let space = f.space();
    let r = &cfg.basis_radius;
    let mut centers = Vec::new();
    match space {
        Space::Interval01 | Space::Circle => {
            let mut c = Rational::zero();
            let end = if space == Space::Circle {
                Rational::one() - r
            } else {
                Rational::one()
            };
            while c <= end {
                centers.push(c.clone());
                c = c + r;
            }
        }
        Space::RealLine => {
            // Window around x and around the map's breakpoints.
            let lo = x - Rational::from_int(2);
            let hi = x + Rational::from_int(2);
            let mut c = lo;
            while c <= hi {
                centers.push(c.clone());
                c = c + r;
            }
        }
    }
    centers
        .into_iter()
        .map(|c| Region::ball(space, &c, r))
        .collect()
}

fn transitive_refutation_cert(
    f: &DynMap,
    u: &Region,
    v: &Region,
    horizon: u32,
) -> DynResult<Option<Certificate>> {
    // Follow the image hull a few steps, then search an absorbing trap.
    let start_hull = match f {
        DynMap::Power(p) => {
            let (lo_b, hi_b) = p.iterated_image_bounds(&u.hull(), horizon.min(24));
            Interval::new(lo_b.lo.max(Rational::zero()), hi_b.hi.min(Rational::one()))
        }
        _ => {
            let mut j = IntervalSet::single(u.hull());
            let steps = horizon.min(24);
            for _ in 0..steps {
                j = image_set(f, &j)?;
            }
            let lo = j.parts().first().and_then(|p| p.lo.clone());
            let hi = j.parts().last().and_then(|p| p.hi.clone());
            match (lo, hi) {
                (Some(a), Some(b)) => Interval::new(a, b),
                _ => return Ok(None),
            }
        }
    };
    let steps = horizon.min(24);
    let mut starts = vec![start_hull.clone()];
    if f.space() == Space::Interval01 {
        if let (Some(_), Some(b)) = (&start_hull.lo, &start_hull.hi) {
            starts.push(Interval::new(Rational::zero(), b.clone()));
        }
        if let (Some(a), Some(_)) = (&start_hull.lo, &start_hull.hi) {
            starts.push(Interval::new(a.clone(), Rational::one()));
        }
    }
    for start in starts {
        if let Some(trap) = certs::find_absorbing_trap(f, &start, &v.lo, &v.hi) {
            return Ok(Some(Certificate::AbsorbedAwayFromTarget {
                steps,
                trap,
                misses_before: horizon,
            }));
        }
    }
    Ok(None)
}

/// Devaney chaos at x: conjunction of transitivity, dense periodicity and
/// sensitivity, with the consistency flag for the classical implication
/// (transitive + dense periodic points => sensitive on infinite spaces).
pub fn check_devaney_point(f: &DynMap, x: &Point, cfg: &ScaleConfig) -> DynResult<Verdict> {
    let t = check_transitive_point(f, x, cfg, TransitivityMode::Transitive)?;
    let p = check_periodic_density_point(f, x, cfg, cfg.max_period)?;
    let s = check_sensitive_point(f, x, cfg)?;
    let statuses = [t.status, p.status, s.status];
    let status = if statuses.iter().all(Status::is_confirmed) {
        Status::ConfirmedAtScale
    } else if statuses.iter().any(Status::is_refuted) {
        Status::RefutedAtScale
    } else {
        Status::Inconclusive
    };
    let t21_consistent =
        !(t.status.is_confirmed() && p.status.is_confirmed() && s.status.is_refuted());
    Ok(Verdict::new(
        "devaney",
        x.clone(),
        status,
        Witness::Devaney {
            transitive: t.status,
            periodic_density: p.status,
            sensitive: s.status,
            t21_consistent,
        },
        cfg,
    ))
}

/// Exact truncated non-separating set (Phi forward, Gamma two-sided) by
/// iterated preimage intersection.
pub fn nonseparating_set(
    f: &DynMap,
    x: &Point,
    delta: &Rational,
    horizon: u32,
    direction: Direction,
) -> DynResult<NonSeparatingSet> {
    let space = f.space();
    space.validate(x)?;
    if direction == Direction::TwoSided && !f.is_invertible() {
        return Err(DynError::Capability(
            "two-sided non-separating set needs an invertible map".into(),
        ));
    }
    if let DynMap::Rotation(r) = f {
        // Isometry: the set is exactly the closed delta-ball around x.
        let _ = r;
        let measure = (delta * &Rational::from_int(2)).min(Rational::one());
        let xr = x.expect_exact("rotation non-separating set")?;
        return Ok(NonSeparatingSet {
            center: x.clone(),
            delta: delta.clone(),
            horizon,
            direction,
            parts: IntervalSet::single(Interval::new(
                (xr - delta).fract(),
                (xr - delta).fract() + measure.clone(),
            )),
            measure,
            truncated: false,
        });
    }
    let xr = x.expect_exact("non-separating set")?;
    let orbit = f.orbit(&Point::exact(xr.clone()), horizon, direction)?;
    let domain = match space {
        Space::Interval01 => Interval::new(Rational::zero(), Rational::one()),
        _ => Interval::whole_line(),
    };
    let ball_at = |n: i64| -> DynResult<Interval> {
        let o = orbit
            .at(n)
            .and_then(|p| p.as_exact())
            .ok_or_else(|| DynError::Capability("inexact orbit point".into()))?;
        Ok(Interval::ball(o, delta)
            .intersect(&domain)
            .unwrap_or_else(|| Interval::point(o.clone())))
    };
    // Forward constraints, propagated backward by exact preimages.
    let mut s = IntervalSet::single(ball_at(horizon as i64)?);
    for n in (0..horizon as i64).rev() {
        let mut pre = IntervalSet::empty();
        for part in s.parts() {
            pre = pre.union(&f.preimage(part)?);
        }
        s = pre.intersect_interval(&ball_at(n)?);
    }
    // Backward constraints, propagated forward by exact images.
    if direction == Direction::TwoSided {
        let mut a = IntervalSet::single(ball_at(-(horizon as i64))?);
        for n in (-(horizon as i64) + 1)..=0 {
            a = image_set(f, &a)?.intersect_interval(&ball_at(n)?);
        }
        s = s.intersect(&a);
    }
    let measure = s.measure().ok_or_else(|| {
        DynError::Scale("non-separating set unbounded; measure undefined".into())
    })?;
    Ok(NonSeparatingSet {
        center: x.clone(),
        delta: delta.clone(),
        horizon,
        direction,
        parts: s,
        measure,
        truncated: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::maps::{LadderKind, LadderMap, PLMap, PowerMap, RotationMap};
    use crate::rational::rat;

    fn ladder_f() -> DynMap {
        DynMap::Ladder(LadderMap::new(LadderKind::AllDip))
    }

    fn ladder_g() -> DynMap {
        DynMap::Ladder(LadderMap::new(LadderKind::AlternatingByParity))
    }

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

    fn identity() -> DynMap {
        DynMap::Pl(PLMap::identity(Space::Interval01))
    }

    fn cfg() -> ScaleConfig {
        ScaleConfig::default()
    }

    #[test]
    fn separation_index_set_frozen_example() {
        let f = fixed_ends();
        let w = separation_index_set(
            &f,
            &Point::exact(rat(0, 1)),
            &Point::exact(rat(1, 2)),
            &rat(9, 10),
            10,
            Direction::Forward,
        )
        .unwrap();
        assert_eq!(w.indices, vec![5, 6, 7, 8, 9, 10]);
        assert_eq!(w.min_index(), Some(5));
        assert!(w.unresolved.is_empty());
    }

    #[test]
    fn separation_empty_for_identity() {
        let id = identity();
        let w = separation_index_set(
            &id,
            &Point::exact(rat(1, 2)),
            &Point::exact(rat(51, 100)),
            &rat(1, 10),
            20,
            Direction::TwoSided,
        )
        .unwrap();
        assert!(w.indices.is_empty());
    }

    #[test]
    fn expansive_ladder_confirmed_at_half() {
        let f = ladder_f();
        let v = check_expansive_point(&f, &Point::exact(rat(1, 2)), &cfg()).unwrap();
        assert_eq!(v.status, Status::ConfirmedAtScale);
    }

    #[test]
    fn expansive_ladder_refuted_at_zero() {
        let f = ladder_f();
        let v = check_expansive_point(&f, &Point::exact(rat(0, 1)), &cfg()).unwrap();
        assert_eq!(v.status, Status::RefutedAtScale);
        if let Witness::NonSeparatingCompanions { companions } = &v.witness {
            assert_eq!(companions.len(), cfg().delta_sweep.len());
            for c in companions {
                assert!(distance_exact(Space::Interval01, &rat(0, 1), &c.y) <= c.delta);
            }
        } else {
            panic!("wrong witness kind");
        }
    }

    #[test]
    fn expansive_identity_refuted() {
        let v = check_expansive_point(&identity(), &Point::exact(rat(1, 3)), &cfg()).unwrap();
        assert_eq!(v.status, Status::RefutedAtScale);
    }

    #[test]
    fn pos_expansive_alternating_ladder() {
        let g = ladder_g();
        // Odd-index reciprocals are positively expansive, even are not.
        let confirmed =
            check_positively_expansive_point(&g, &Point::exact(rat(1, 3)), &cfg()).unwrap();
        assert_eq!(confirmed.status, Status::ConfirmedAtScale);
        let refuted =
            check_positively_expansive_point(&g, &Point::exact(rat(1, 2)), &cfg()).unwrap();
        assert_eq!(refuted.status, Status::RefutedAtScale);
    }

    #[test]
    fn pos_expansive_fixed_ends_map() {
        let f = fixed_ends();
        let at0 = check_positively_expansive_point(&f, &Point::exact(rat(0, 1)), &cfg()).unwrap();
        assert_eq!(at0.status, Status::ConfirmedAtScale);
        let at_half =
            check_positively_expansive_point(&f, &Point::exact(rat(1, 2)), &cfg()).unwrap();
        assert_eq!(at_half.status, Status::RefutedAtScale);
    }

    #[test]
    fn sensitive_matches_expansive_on_ladder() {
        let f = ladder_f();
        let confirmed = check_sensitive_point(&f, &Point::exact(rat(1, 2)), &cfg()).unwrap();
        assert_eq!(confirmed.status, Status::ConfirmedAtScale);
        if let Witness::SensitivePairs { pairs, .. } = &confirmed.witness {
            for p in pairs {
                assert!(p.index >= 1);
            }
        }
        let refuted = check_sensitive_point(&f, &Point::exact(rat(0, 1)), &cfg()).unwrap();
        assert_eq!(refuted.status, Status::RefutedAtScale);
    }

    #[test]
    fn sensitive_identity_refuted() {
        let v = check_sensitive_point(&identity(), &Point::exact(rat(2, 5)), &cfg()).unwrap();
        assert_eq!(v.status, Status::RefutedAtScale);
    }

    #[test]
    fn periodic_density_ladder() {
        let f = ladder_f();
        let at0 = check_periodic_density_point(&f, &Point::exact(rat(0, 1)), &cfg(), 4).unwrap();
        assert_eq!(at0.status, Status::ConfirmedAtScale);
        let at_half =
            check_periodic_density_point(&f, &Point::exact(rat(1, 2)), &cfg(), 4).unwrap();
        assert_eq!(at_half.status, Status::RefutedAtScale);
        let at_p1 = check_periodic_density_point(&f, &Point::exact(rat(3, 4)), &cfg(), 4).unwrap();
        assert_eq!(at_p1.status, Status::RefutedAtScale);
    }

    #[test]
    fn periodic_density_fixed_ends_refuted_at_zero() {
        let f = fixed_ends();
        let v = check_periodic_density_point(&f, &Point::exact(rat(0, 1)), &cfg(), 4).unwrap();
        assert_eq!(v.status, Status::RefutedAtScale);
    }

    #[test]
    fn hitting_times_identity() {
        let id = identity();
        let u = Region::ball(Space::Interval01, &rat(1, 2), &rat(1, 10));
        let v_disjoint = Region::ball(Space::Interval01, &rat(9, 10), &rat(1, 20));
        let w = hitting_times(&id, &Point::exact(rat(1, 2)), &u, &v_disjoint, 10).unwrap();
        assert!(w.indices.is_empty());
        let v_overlap = Region::ball(Space::Interval01, &rat(1, 2), &rat(1, 20));
        let w = hitting_times(&id, &Point::exact(rat(1, 2)), &u, &v_overlap, 10).unwrap();
        assert_eq!(w.indices, (1..=10).collect::<Vec<_>>());
    }

    #[test]
    fn hitting_times_square_map_example() {
        let h = DynMap::Power(PowerMap::square());
        let u = Region {
            lo: rat(9, 10),
            hi: rat(1, 1),
            lo_closed: false,
            hi_closed: true,
        };
        let v = Region {
            lo: rat(1, 10),
            hi: rat(1, 5),
            lo_closed: false,
            hi_closed: false,
        };
        let w = hitting_times(&h, &Point::exact(rat(19, 20)), &u, &v, 8).unwrap();
        assert!(w.indices.contains(&5));
    }

    #[test]
    fn transitive_square_map() {
        let h = DynMap::Power(PowerMap::square());
        let at1 =
            check_transitive_point(&h, &Point::exact(rat(1, 1)), &cfg(), TransitivityMode::Transitive)
                .unwrap();
        assert_eq!(at1.status, Status::ConfirmedAtScale);
        let at1m =
            check_transitive_point(&h, &Point::exact(rat(1, 1)), &cfg(), TransitivityMode::Mixing)
                .unwrap();
        assert_eq!(at1m.status, Status::ConfirmedAtScale);
        let at_half = check_transitive_point(
            &h,
            &Point::exact(rat(1, 2)),
            &cfg(),
            TransitivityMode::Transitive,
        )
        .unwrap();
        assert_eq!(at_half.status, Status::RefutedAtScale);
    }

    #[test]
    fn transitive_rotations() {
        let irr = DynMap::Rotation(RotationMap::irrational(
            crate::maps::rotation::inv_sqrt2(),
            "1/sqrt(2)",
        ));
        let mut c = cfg();
        c.horizon = 2000;
        let v = check_transitive_point(
            &irr,
            &Point::exact(rat(0, 1)),
            &c,
            TransitivityMode::Transitive,
        )
        .unwrap();
        assert_eq!(v.status, Status::ConfirmedAtScale);
        let vm =
            check_transitive_point(&irr, &Point::exact(rat(0, 1)), &c, TransitivityMode::Mixing)
                .unwrap();
        assert_eq!(vm.status, Status::RefutedAtScale);
        let rat_rot = DynMap::Rotation(RotationMap::rational(rat(2, 3)));
        let vr = check_transitive_point(
            &rat_rot,
            &Point::exact(rat(1, 5)),
            &cfg(),
            TransitivityMode::Transitive,
        )
        .unwrap();
        assert_eq!(vr.status, Status::RefutedAtScale);
    }

    #[test]
    fn devaney_square_map_refuted_at_one() {
        let h = DynMap::Power(PowerMap::square());
        let v = check_devaney_point(&h, &Point::exact(rat(1, 1)), &cfg()).unwrap();
        assert_eq!(v.status, Status::RefutedAtScale);
        if let Witness::Devaney {
            transitive,
            periodic_density,
            t21_consistent,
            ..
        } = &v.witness
        {
            assert!(transitive.is_confirmed());
            assert!(periodic_density.is_refuted());
            assert!(t21_consistent);
        } else {
            panic!("wrong witness");
        }
    }

    #[test]
    fn nonseparating_identity_measure() {
        let id = identity();
        let s = nonseparating_set(
            &id,
            &Point::exact(rat(1, 2)),
            &rat(1, 10),
            50,
            Direction::Forward,
        )
        .unwrap();
        assert_eq!(s.measure, rat(1, 5));
        assert_eq!(s.parts.parts(), &[Interval::new(rat(2, 5), rat(3, 5))]);
    }

    #[test]
    fn nonseparating_fixed_ends_shrinks() {
        let f = fixed_ends();
        let s = nonseparating_set(
            &f,
            &Point::exact(rat(0, 1)),
            &rat(1, 10),
            50,
            Direction::Forward,
        )
        .unwrap();
        assert!(s.measure < rat(1, 1000));
    }

    #[test]
    fn nonseparating_ladder_trapped_interval() {
        let f = ladder_f();
        let s = nonseparating_set(
            &f,
            &Point::exact(rat(0, 1)),
            &rat(1, 10),
            50,
            Direction::Forward,
        )
        .unwrap();
        assert_eq!(s.measure, rat(1, 10));
    }

    #[test]
    fn nonseparating_monotone_in_horizon() {
        let f = fixed_ends();
        let m10 = nonseparating_set(
            &f,
            &Point::exact(rat(0, 1)),
            &rat(1, 10),
            10,
            Direction::Forward,
        )
        .unwrap()
        .measure;
        let m30 = nonseparating_set(
            &f,
            &Point::exact(rat(0, 1)),
            &rat(1, 10),
            30,
            Direction::Forward,
        )
        .unwrap()
        .measure;
        assert!(m30 <= m10);
    }
}
