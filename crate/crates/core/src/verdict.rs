//! Three-valued verdicts, index-set witnesses and refutation certificates.
//!
//! A confirmed or refuted verdict always carries a witness that an
//! independent recomputation can re-check; refutations additionally carry
//! certificates that extend the finite computation beyond the horizon
//! (invariant traps, contracting pieces, sign-constant regions).

use serde::{Deserialize, Serialize};

use crate::interval::{Interval, IntervalSet};
use crate::maps::Direction;
use crate::rational::Rational;
use crate::scale::ScaleConfig;
use crate::space::Point;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    ConfirmedAtScale,
    RefutedAtScale,
    Inconclusive,
}

impl Status {
    pub fn is_confirmed(&self) -> bool {
        matches!(self, Status::ConfirmedAtScale)
    }

    pub fn is_refuted(&self) -> bool {
        matches!(self, Status::RefutedAtScale)
    }

    pub fn is_decisive(&self) -> bool {
        !matches!(self, Status::Inconclusive)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Verdict {
    pub property: String,
    pub point: Point,
    pub status: Status,
    pub witness: Witness,
    pub scale: ScaleConfig,
}

impl Verdict {
    pub fn new(
        property: impl Into<String>,
        point: Point,
        status: Status,
        witness: Witness,
        scale: &ScaleConfig,
    ) -> Self {
        Verdict {
            property: property.into(),
            point,
            status,
            witness,
            scale: scale.clone(),
        }
    }
}

/// Truncated index set with every listed index verified by direct orbit
/// computation. `unresolved` lists indices whose membership could not be
/// decided exactly (enclosure straddles the threshold; rotations only).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct IndexSetWitness {
    pub property: String,
    pub params: serde_json::Value,
    pub lo: i64,
    pub hi: i64,
    pub indices: Vec<i64>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub unresolved: Vec<i64>,
}

impl IndexSetWitness {
    pub fn min_index(&self) -> Option<i64> {
        self.indices.iter().copied().min()
    }
}

/// Exact-or-grid non-separating set (Gamma for two-sided, Phi for forward)
/// truncated at a horizon; the truncated set over-approximates the
/// infinite-horizon set, so its measure is an upper bound.
#[derive(Clone, Debug, Serialize)]
pub struct NonSeparatingSet {
    pub center: Point,
    pub delta: Rational,
    pub horizon: u32,
    pub direction: Direction,
    pub parts: IntervalSet,
    pub measure: Rational,
    pub truncated: bool,
}

/// A soundness certificate: a finite fact, checkable exactly, that implies
/// the claimed behavior continues beyond the computed horizon.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    /// Both orbit endpoints lie in one linear piece with |slope| <= 1 whose
    /// span maps into itself: the gap between the orbits never grows again.
    CommonContractingPiece {
        span: Interval,
        slope: Rational,
        fixed_point: Option<Rational>,
        /// Certified against the inverse map (backward tails).
        backward: bool,
    },
    /// Each orbit endpoint sits in its own invariant interval and the two
    /// intervals stay within delta of each other.
    InvariantTraps {
        trap_x: Interval,
        trap_y: Interval,
        sup_distance: Rational,
        backward: bool,
    },
    /// A whole ball around x sits inside an invariant interval of diameter
    /// at most delta: no point of the ball ever separates from x.
    BallTrap {
        trap: Interval,
        ball_radius: Rational,
        diameter: Rational,
    },
    /// f(z) - z has constant nonzero sign strictly inside an invariant
    /// region: the region contains no periodic point of any period.
    MonotoneSignRegion { region: Interval, sign: i8 },
    /// After `steps` iterations the images of U are inside an invariant
    /// region disjoint from V: the hitting set is empty forever.
    AbsorbedAwayFromTarget {
        steps: u32,
        trap: Interval,
        misses_before: u32,
    },
    /// Rational rotation: the finitely many translates of U' all miss V'.
    RationalRotationPeriodic {
        period: Rational,
        u_center: Rational,
        v_center: Rational,
        radius: Rational,
    },
    /// Isometry with |U| + |V| < 1: translates of U miss V on a positive
    /// measure of displacements; an irrational rotation visits that set
    /// infinitely often.
    IsometryGap { u_length: Rational, v_length: Rational },
    /// Rotations preserve distances: a pair (or ball) at distance d never
    /// separates beyond d.
    IsometryConstantDistance { distance: Rational },
    /// An irrational rotation has no periodic points at all.
    IrrationalRotationFreePeriodic,
    /// Family tail bound: for all members n >= from_index the displacement
    /// from the limit is below `bound` (closed form).
    FamilyTailBound { from_index: u32, bound: Rational },
}

/// Property-specific witness payloads.
#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// Confirmed (positive) expansivity: the delta that separates every
    /// candidate, with per-candidate separating indices inside the tube
    /// (candidates outside the tube separate at index 0 by definition).
    SeparationSweep {
        delta: Rational,
        tube_candidates: Vec<SeparatedCandidate>,
        pool_size: usize,
    },
    /// Refuted expansivity: one non-separating companion per swept delta.
    NonSeparatingCompanions { companions: Vec<CompanionWitness> },
    /// Confirmed sensitivity: per epsilon, a pair (y, n) separating by more
    /// than delta with y inside the epsilon-ball.
    SensitivePairs {
        delta: Rational,
        pairs: Vec<SensitivePair>,
    },
    /// Refuted sensitivity: per delta, a ball trap.
    UniformNonSeparation { traps: Vec<DeltaTrap> },
    /// Confirmed periodic density: per epsilon, a periodic point in the
    /// deleted ball.
    PeriodicPoints { points: Vec<PeriodicWitness> },
    /// Refuted periodic density: a deleted ball certified free of periodic
    /// points (both sides).
    PeriodicFreeBall {
        epsilon: Rational,
        side_certs: Vec<Certificate>,
        checked_periods: u32,
    },
    /// Confirmed transitivity/mixing: per basis target, the hitting index
    /// (first hit, or the start of the certified tail for mixing).
    HittingFamily {
        u: Interval,
        hits: Vec<HitWitness>,
    },
    /// Refuted transitivity/mixing: an offending pair with a certificate.
    HittingEmpty {
        u: Interval,
        v: Interval,
        cert: Certificate,
    },
    /// Devaney conjunction record.
    Devaney {
        transitive: Status,
        periodic_density: Status,
        sensitive: Status,
        t21_consistent: bool,
    },
    /// Confirmed shadowing: per epsilon, the delta whose sampled pseudo-orbit
    /// families were all traced, with the tracers.
    TraceableFamilies { entries: Vec<ShadowConfirmEntry> },
    /// Refuted shadowing: for one epsilon, an exactly-untraceable pseudo-orbit
    /// per swept delta.
    UntraceableOrbits {
        epsilon: Rational,
        witnesses: Vec<UntraceableWitness>,
    },
    /// Confirmed specification: per epsilon, the gap bound M that satisfied
    /// all sampled demands.
    SpecificationBound { entries: Vec<(Rational, u32)> },
    /// Refuted specification: per M, a demand with exactly-empty feasible set.
    SpecificationFailures {
        epsilon: Rational,
        failures: Vec<SpecFailure>,
    },
    /// Confirmed persistence/weak stability: per epsilon, the delta and the
    /// tracers found for every sampled perturbation.
    PersistenceTraced { entries: Vec<PersistenceConfirmEntry> },
    /// Refuted persistence/weak stability: per delta, a perturbation whose
    /// orbit admits no tracer (exactly-empty feasible set).
    PersistenceEscape {
        epsilon: Rational,
        witnesses: Vec<PersistenceEscapeWitness>,
    },
    /// Inconclusive: why the scale did not decide.
    Note { note: String },
}

#[derive(Clone, Debug, Serialize)]
pub struct SeparatedCandidate {
    pub y: Rational,
    /// Signed index with |n| minimal achieving separation (negative means
    /// backward orbit).
    pub index: i64,
}

#[derive(Clone, Debug, Serialize)]
pub struct CompanionWitness {
    pub delta: Rational,
    pub y: Rational,
    pub forward_cert: Certificate,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub backward_cert: Option<Certificate>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SensitivePair {
    pub epsilon: Rational,
    pub y: Rational,
    pub index: i64,
}

#[derive(Clone, Debug, Serialize)]
pub struct DeltaTrap {
    pub delta: Rational,
    pub ball_radius: Rational,
    pub cert: Certificate,
}

#[derive(Clone, Debug, Serialize)]
pub struct PeriodicWitness {
    pub epsilon: Rational,
    pub point: Rational,
    pub period: u32,
}

#[derive(Clone, Debug, Serialize)]
pub struct HitWitness {
    pub v: Interval,
    pub first_hit: i64,
    /// For mixing: every index from tail_start to the horizon hits.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub tail_start: Option<i64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ShadowConfirmEntry {
    pub epsilon: Rational,
    pub delta: Rational,
    pub traced: Vec<TracerRecord>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TracerRecord {
    pub strategy: String,
    pub tracer: Rational,
    pub max_deviation: Rational,
}

#[derive(Clone, Debug, Serialize)]
pub struct UntraceableWitness {
    pub delta: Rational,
    pub strategy: String,
    pub pseudo_orbit: Vec<Rational>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SpecFailure {
    pub gap_bound: u32,
    pub blocks: Vec<(i64, i64)>,
    pub targets: Vec<Rational>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PersistenceConfirmEntry {
    pub epsilon: Rational,
    pub delta: Rational,
    pub perturbations_traced: u32,
    pub sample_tracer: Rational,
}

#[derive(Clone, Debug, Serialize)]
pub struct PersistenceEscapeWitness {
    pub delta: Rational,
    pub perturbation: String,
    pub escape_span: Rational,
}
