//! Ordered real zero sets and the interlacing comparator.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ZeroSequenceError {
    #[error("zero sequence contains a non-finite value at index {0}")]
    NonFinite(usize),
    #[error("zero sequence is not strictly increasing at index {index} ({prev} >= {next})")]
    NotIncreasing { index: usize, prev: f64, next: f64 },
}

/// Whether the stored values are the complete zero set or a finite window
/// of an infinite one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum Extent {
    Finite,
    #[default]
    Truncated,
}

/// Strictly increasing real zeros (all of multiplicity one).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawZeroSequence", into = "RawZeroSequence")]
pub struct ZeroSequence {
    values: Vec<f64>,
    extent: Extent,
}

#[derive(Serialize, Deserialize)]
struct RawZeroSequence {
    x: Vec<f64>,
    #[serde(default)]
    extent: Extent,
}

impl TryFrom<RawZeroSequence> for ZeroSequence {
    type Error = ZeroSequenceError;
    fn try_from(raw: RawZeroSequence) -> Result<Self, Self::Error> {
        ZeroSequence::new(raw.x, raw.extent)
    }
}

impl From<ZeroSequence> for RawZeroSequence {
    fn from(z: ZeroSequence) -> Self {
        RawZeroSequence {
            x: z.values,
            extent: z.extent,
        }
    }
}

impl ZeroSequence {
    pub fn new(values: Vec<f64>, extent: Extent) -> Result<Self, ZeroSequenceError> {
        for (i, v) in values.iter().enumerate() {
            if !v.is_finite() {
                return Err(ZeroSequenceError::NonFinite(i));
            }
        }
        for (i, w) in values.windows(2).enumerate() {
            if w[0] >= w[1] {
                return Err(ZeroSequenceError::NotIncreasing {
                    index: i + 1,
                    prev: w[0],
                    next: w[1],
                });
            }
        }
        Ok(ZeroSequence { values, extent })
    }

    /// Sorts the input first; duplicates are still rejected.
    pub fn from_unsorted(mut values: Vec<f64>, extent: Extent) -> Result<Self, ZeroSequenceError> {
        if let Some(i) = values.iter().position(|v| !v.is_finite()) {
            return Err(ZeroSequenceError::NonFinite(i));
        }
        values.sort_by(|a, b| a.partial_cmp(b).unwrap());
        Self::new(values, extent)
    }

    pub fn finite(values: Vec<f64>) -> Result<Self, ZeroSequenceError> {
        Self::from_unsorted(values, Extent::Finite)
    }

    pub fn truncated(values: Vec<f64>) -> Result<Self, ZeroSequenceError> {
        Self::from_unsorted(values, Extent::Truncated)
    }

    pub fn empty() -> Self {
        ZeroSequence {
            values: Vec::new(),
            extent: Extent::Finite,
        }
    }

    /// Symmetric lattice, marked truncated. With `offset == 0` the values are
    /// `k * step` for `|k| <= per_side`; otherwise they are
    /// `+-(k * step + offset)` for `0 <= k < per_side`.
    pub fn lattice(step: f64, offset: f64, per_side: usize) -> Self {
        let mut v = Vec::with_capacity(2 * per_side + 1);
        if offset == 0.0 {
            for k in (1..=per_side).rev() {
                v.push(-(k as f64) * step);
            }
            v.push(0.0);
            for k in 1..=per_side {
                v.push(k as f64 * step);
            }
        } else {
            for k in (0..per_side).rev() {
                v.push(-(k as f64 * step + offset));
            }
            for k in 0..per_side {
                v.push(k as f64 * step + offset);
            }
        }
        ZeroSequence::from_unsorted(v, Extent::Truncated).expect("lattice is strictly increasing")
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn extent(&self) -> Extent {
        self.extent
    }

    pub fn with_extent(mut self, extent: Extent) -> Self {
        self.extent = extent;
        self
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn is_finite_set(&self) -> bool {
        self.extent == Extent::Finite
    }

    pub fn has_origin(&self) -> bool {
        self.values.binary_search_by(|v| v.partial_cmp(&0.0).unwrap()).is_ok()
    }

    /// Positive zeros ordered by increasing modulus.
    pub fn positive(&self) -> impl Iterator<Item = f64> + '_ {
        self.values.iter().copied().filter(|v| *v > 0.0)
    }

    /// Negative zeros ordered by increasing modulus.
    pub fn negative(&self) -> impl Iterator<Item = f64> + '_ {
        self.values.iter().rev().copied().filter(|v| *v < 0.0)
    }

    /// All zeros ordered by modulus; ties put the negative one first.
    pub fn by_modulus(&self) -> Vec<f64> {
        let mut v = self.values.clone();
        v.sort_by(|a, b| {
            a.abs()
                .partial_cmp(&b.abs())
                .unwrap()
                .then(a.partial_cmp(b).unwrap())
        });
        v
    }

    /// Largest radius `r` such that every zero with `|x| <= r` of the
    /// underlying (possibly infinite) set is known to be stored.
    pub fn coverage_radius(&self) -> f64 {
        if self.extent == Extent::Finite {
            return f64::INFINITY;
        }
        let max_pos = self.values.last().copied().filter(|v| *v > 0.0);
        let max_neg = self.values.first().copied().filter(|v| *v < 0.0).map(f64::abs);
        match (max_pos, max_neg) {
            (Some(p), Some(n)) => p.min(n),
            (Some(p), None) => p,
            (None, Some(n)) => n,
            (None, None) => 0.0,
        }
    }

    pub fn scaled(&self, lambda: f64) -> Self {
        let mut v: Vec<f64> = self.values.iter().map(|x| x * lambda).collect();
        if lambda < 0.0 {
            v.reverse();
        }
        ZeroSequence {
            values: v,
            extent: self.extent,
        }
    }

    /// Keeps only the zeros with `|x| <= radius`.
    pub fn window(&self, radius: f64) -> Self {
        ZeroSequence {
            values: self
                .values
                .iter()
                .copied()
                .filter(|x| x.abs() <= radius)
                .collect(),
            extent: self.extent,
        }
    }
}

/// Outcome of [`interlace_check`].
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Interlacing {
    pub interlaced: bool,
    /// Consecutive pair (of either sequence) around which the alternation breaks.
    pub violation: Option<(f64, f64)>,
    pub pairs_checked: usize,
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum InterlaceError {
    #[error("the two sequences share no overlapping window; interlacing is inconclusive")]
    EmptyWindow,
}

/// Checks that strictly between consecutive elements of each sequence lies
/// exactly one element of the other.
///
/// Only gaps that meet the hull of the other sequence are examined, so a
/// truncated window of an infinite spectrum is not penalised at its ends.
/// Disjoint hulls are a violation as soon as one side has a gap.
pub fn interlace_check(a: &ZeroSequence, b: &ZeroSequence) -> Result<Interlacing, InterlaceError> {
    let (av, bv) = (a.values(), b.values());
    if av.is_empty() || bv.is_empty() {
        return Err(InterlaceError::EmptyWindow);
    }
    let (a_lo, a_hi) = (av[0], av[av.len() - 1]);
    let (b_lo, b_hi) = (bv[0], bv[bv.len() - 1]);

    if a_hi < b_lo || b_hi < a_lo {
        let gap = if av.len() >= 2 {
            Some((av[0], av[1]))
        } else if bv.len() >= 2 {
            Some((bv[0], bv[1]))
        } else {
            None
        };
        return match gap {
            Some(g) => Ok(Interlacing {
                interlaced: false,
                violation: Some(g),
                pairs_checked: 1,
            }),
            None => Err(InterlaceError::EmptyWindow),
        };
    }

    // shared points are never interlaced
    let mut j = 0;
    for &x in av {
        while j < bv.len() && bv[j] < x {
            j += 1;
        }
        if j < bv.len() && bv[j] == x {
            return Ok(Interlacing {
                interlaced: false,
                violation: Some((x, x)),
                pairs_checked: 0,
            });
        }
    }

    let mut checked = 0;
    for (first, other) in [(av, bv), (bv, av)] {
        let (lo, hi) = (other[0], other[other.len() - 1]);
        for w in first.windows(2) {
            if w[1] < lo || w[0] > hi {
                continue;
            }
            checked += 1;
            let start = other.partition_point(|v| *v <= w[0]);
            let end = other.partition_point(|v| *v < w[1]);
            if end.saturating_sub(start) != 1 {
                return Ok(Interlacing {
                    interlaced: false,
                    violation: Some((w[0], w[1])),
                    pairs_checked: checked,
                });
            }
        }
    }
    if checked == 0 {
        return Err(InterlaceError::EmptyWindow);
    }
    Ok(Interlacing {
        interlaced: true,
        violation: None,
        pairs_checked: checked,
    })
}
