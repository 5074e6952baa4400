//! Harmonic and alternating harmonic partial sums, the dyadic-block
//! divergence certificate, and the greedy rearrangement of the alternating
//! harmonic series onto a prescribed target sum.

use std::fmt::Write as _;

use thiserror::Error;

use crate::numerics::CompensatedSum;

/// Largest number of terms any routine here will sum.
pub const DEFAULT_SUMMATION_CAP: u64 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SeriesError {
    #[error("term count must be at least 1")]
    EmptySum,
    #[error("{requested} terms exceeds the summation cap of {cap}")]
    Overflow { requested: u64, cap: u64 },
    #[error("target sum must be finite, got {0}")]
    NonFiniteTarget(f64),
    #[error("invalid stop rule: {0}")]
    InvalidStop(String),
    #[error("term budget exhausted before the first crossing of the target")]
    StopBeforeFirstSwitch(Box<RearrangementTrace>),
}

/// One term `(−1)^(n−1)/n` of the alternating harmonic series.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Term {
    n: u64,
}

impl Term {
    pub fn new(n: u64) -> Option<Self> {
        (n >= 1).then_some(Term { n })
    }

    pub fn index(self) -> u64 {
        self.n
    }

    pub fn magnitude(self) -> f64 {
        1.0 / self.n as f64
    }

    pub fn is_positive(self) -> bool {
        self.n % 2 == 1
    }

    pub fn signed_value(self) -> f64 {
        if self.is_positive() {
            self.magnitude()
        } else {
            -self.magnitude()
        }
    }
}

fn check_count(n: u64) -> Result<(), SeriesError> {
    if n == 0 {
        return Err(SeriesError::EmptySum);
    }
    if n > DEFAULT_SUMMATION_CAP {
        return Err(SeriesError::Overflow {
            requested: n,
            cap: DEFAULT_SUMMATION_CAP,
        });
    }
    Ok(())
}

/// `1 + 1/2 + … + 1/N`.
pub fn harmonic_partial(n: u64) -> Result<f64, SeriesError> {
    check_count(n)?;
    // smallest terms first
    Ok((1..=n)
        .rev()
        .map(|k| 1.0 / k as f64)
        .collect::<CompensatedSum>()
        .value())
}

/// `1 − 1/2 + 1/3 − … ± 1/N`.
pub fn alternating_partial(n: u64) -> Result<f64, SeriesError> {
    check_count(n)?;
    Ok((1..=n)
        .rev()
        .map(|k| Term { n: k }.signed_value())
        .collect::<CompensatedSum>()
        .value())
}

/// Grouping of `S_{2^m}` into the leading 1 and `m` dyadic blocks
/// `1/(2^j+1) + … + 1/2^(j+1)`, each of which is at least 1/2.
#[derive(Debug, Clone, PartialEq)]
pub struct DivergenceCertificate {
    pub blocks: u32,
    pub block_sums: Vec<f64>,
    /// Lower bound `1 + m/2` on `S_{2^m}`.
    pub bound: f64,
    /// `S_{2^m}` assembled from the blocks.
    pub partial_sum: f64,
}

impl DivergenceCertificate {
    pub fn terms(&self) -> u64 {
        1u64 << self.blocks
    }

    pub fn is_valid(&self) -> bool {
        self.block_sums.iter().all(|&s| s >= 0.5) && self.partial_sum >= self.bound
    }
}

pub fn divergence_certificate(m: u32) -> Result<DivergenceCertificate, SeriesError> {
    if m >= 63 || (1u64 << m) > DEFAULT_SUMMATION_CAP {
        return Err(SeriesError::Overflow {
            requested: 1u64.checked_shl(m).unwrap_or(u64::MAX),
            cap: DEFAULT_SUMMATION_CAP,
        });
    }
    let block_sums: Vec<f64> = (0..m)
        .map(|j| {
            let lo = 1u64 << j;
            ((lo + 1)..=(2 * lo))
                .rev()
                .map(|k| 1.0 / k as f64)
                .collect::<CompensatedSum>()
                .value()
        })
        .collect();
    let mut total = CompensatedSum::new();
    for &s in block_sums.iter().rev() {
        total.add(s);
    }
    total.add(1.0);
    Ok(DivergenceCertificate {
        blocks: m,
        block_sums,
        bound: 1.0 + m as f64 / 2.0,
        partial_sum: total.value(),
    })
}

/// When the greedy rearrangement stops.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum StopRule {
    /// Stop after this many terms.
    MaxTerms(u64),
    /// Stop at the first crossing whose bound (magnitude of the crossing
    /// term) is at most this value. Bounded by the summation cap.
    Tolerance(f64),
}

/// One appended term of a rearrangement.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TraceStep {
    pub denominator: u64,
    pub term: f64,
    pub partial_sum: f64,
    /// This term carried the partial sum across the target.
    pub is_switch: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RearrangementTrace {
    pub target: f64,
    pub steps: Vec<TraceStep>,
    /// Indices into `steps` of the crossing terms.
    pub switches: Vec<usize>,
    /// False when the stop rule fired before the first crossing, or before the
    /// tolerance was met.
    pub complete: bool,
}

impl RearrangementTrace {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn denominators(&self) -> impl Iterator<Item = u64> + '_ {
        self.steps.iter().map(|s| s.denominator)
    }

    pub fn last_partial_sum(&self) -> f64 {
        self.steps.last().map_or(0.0, |s| s.partial_sum)
    }

    /// Magnitude of the most recent crossing term, which bounds
    /// `|partial − target|` at that crossing.
    pub fn crossing_bound(&self) -> Option<f64> {
        self.switches.last().map(|&i| self.steps[i].term.abs())
    }

    /// Odd and even denominators each ascend and never repeat.
    pub fn is_permutation_prefix(&self) -> bool {
        let mut last_odd = 0u64;
        let mut last_even = 0u64;
        self.steps.iter().all(|s| {
            let d = s.denominator;
            let last = if d % 2 == 1 {
                &mut last_odd
            } else {
                &mut last_even
            };
            let ok = d > *last;
            *last = d;
            ok
        })
    }

    /// CSV with columns `step,denominator,term,partial_sum,is_switch`.
    pub fn to_csv(&self, fmt_num: impl Fn(f64) -> String) -> String {
        let mut out = String::from("step,denominator,term,partial_sum,is_switch\n");
        for (i, s) in self.steps.iter().enumerate() {
            let _ = writeln!(
                out,
                "{},{},{},{},{}",
                i + 1,
                s.denominator,
                fmt_num(s.term),
                fmt_num(s.partial_sum),
                s.is_switch
            );
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Direction {
    Up,
    Down,
}

/// Greedy rearrangement: take unused positive terms (odd denominators,
/// ascending) until the partial sum strictly exceeds `target`, then unused
/// negative terms (even denominators, ascending) until it is strictly below,
/// and repeat.
///
/// For a negative target the initial positive run is empty and no crossing is
/// recorded for it.
pub fn rearrange(target: f64, stop: StopRule) -> Result<RearrangementTrace, SeriesError> {
    if !target.is_finite() {
        return Err(SeriesError::NonFiniteTarget(target));
    }
    let (max_terms, tolerance) = match stop {
        StopRule::MaxTerms(0) => {
            return Err(SeriesError::InvalidStop(
                "max_terms must be positive".into(),
            ))
        }
        StopRule::MaxTerms(n) if n > DEFAULT_SUMMATION_CAP => {
            return Err(SeriesError::Overflow {
                requested: n,
                cap: DEFAULT_SUMMATION_CAP,
            })
        }
        StopRule::MaxTerms(n) => (n, None),
        StopRule::Tolerance(t) if !(t > 0.0 && t.is_finite()) => {
            return Err(SeriesError::InvalidStop(format!(
                "tolerance must be positive, got {t}"
            )))
        }
        StopRule::Tolerance(t) => (DEFAULT_SUMMATION_CAP, Some(t)),
    };

    let mut next_odd = 1u64;
    let mut next_even = 2u64;
    let mut sum = CompensatedSum::new();
    let mut steps = Vec::new();
    let mut switches = Vec::new();
    let mut direction = if 0.0 > target {
        Direction::Down
    } else {
        Direction::Up
    };
    let mut done = false;

    while (steps.len() as u64) < max_terms {
        let denominator = match direction {
            Direction::Up => {
                let d = next_odd;
                next_odd += 2;
                d
            }
            Direction::Down => {
                let d = next_even;
                next_even += 2;
                d
            }
        };
        let term = Term { n: denominator }.signed_value();
        sum.add(term);
        let partial = sum.value();
        let crossed = match direction {
            Direction::Up => partial > target,
            Direction::Down => partial < target,
        };
        steps.push(TraceStep {
            denominator,
            term,
            partial_sum: partial,
            is_switch: crossed,
        });
        if crossed {
            switches.push(steps.len() - 1);
            direction = match direction {
                Direction::Up => Direction::Down,
                Direction::Down => Direction::Up,
            };
            if tolerance.is_some_and(|t| term.abs() <= t) {
                done = true;
                break;
            }
        }
    }

    let complete = match tolerance {
        Some(_) => done,
        None => !switches.is_empty(),
    };
    let trace = RearrangementTrace {
        target,
        steps,
        switches,
        complete,
    };
    if trace.switches.is_empty() {
        return Err(SeriesError::StopBeforeFirstSwitch(Box::new(trace)));
    }
    if tolerance.is_some() && !complete {
        return Err(SeriesError::Overflow {
            requested: DEFAULT_SUMMATION_CAP + 1,
            cap: DEFAULT_SUMMATION_CAP,
        });
    }
    Ok(trace)
}
