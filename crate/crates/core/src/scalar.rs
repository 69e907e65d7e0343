//! Scalar types used to report conductance values.
//!
//! Cuts and volumes are exact integers everywhere in the crate. They are only
//! turned into a number at evaluation time, through [`Scalar::from_ratio`], so
//! callers can pick `f64`, `f32`, or an exact rational.

use std::cmp::Ordering;
use std::fmt;

use num_rational::Ratio;
use num_traits::{Num, ToPrimitive};

use crate::graph::Weight;

/// A numeric type a cut/volume ratio can be expressed in.
pub trait Scalar: Num + Clone + PartialOrd + fmt::Debug {
    /// `num / den`; `den` must be nonzero.
    fn from_ratio(num: i64, den: i64) -> Self;

    fn to_f64_lossy(&self) -> f64;
}

impl Scalar for f64 {
    fn from_ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }

    fn to_f64_lossy(&self) -> f64 {
        *self
    }
}

impl Scalar for f32 {
    fn from_ratio(num: i64, den: i64) -> Self {
        (num as f64 / den as f64) as f32
    }

    fn to_f64_lossy(&self) -> f64 {
        f64::from(*self)
    }
}

impl Scalar for Ratio<i64> {
    fn from_ratio(num: i64, den: i64) -> Self {
        Ratio::new(num, den)
    }

    fn to_f64_lossy(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

/// Motif conductance kept as an exact `cut / volume` pair.
///
/// A zero volume means the cluster touches no motif; such a value is
/// degenerate and compares equal to `1`, the worst possible score.
#[derive(Clone, Copy, Debug)]
pub struct MotifConductance {
    pub cut: Weight,
    pub volume: Weight,
}

impl MotifConductance {
    /// The worst possible score, used when no valid cluster exists.
    pub const SENTINEL: MotifConductance = MotifConductance { cut: 1, volume: 0 };

    pub const ZERO: MotifConductance = MotifConductance { cut: 0, volume: 1 };

    pub fn new(cut: Weight, volume: Weight) -> Self {
        debug_assert!(cut >= 0 && volume >= 0);
        MotifConductance { cut, volume }
    }

    pub fn is_degenerate(&self) -> bool {
        self.volume == 0
    }

    pub fn value<T: Scalar>(&self) -> T {
        if self.is_degenerate() {
            T::one()
        } else {
            T::from_ratio(self.cut, self.volume)
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.value::<f64>()
    }

    fn normalized(&self) -> (i128, i128) {
        if self.is_degenerate() {
            (1, 1)
        } else {
            (i128::from(self.cut), i128::from(self.volume))
        }
    }
}

impl PartialEq for MotifConductance {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for MotifConductance {}

impl PartialOrd for MotifConductance {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for MotifConductance {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b) = self.normalized();
        let (c, d) = other.normalized();
        (a * d).cmp(&(c * b))
    }
}

impl fmt::Display for MotifConductance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.cut, self.volume)
    }
}
