//! Rational-endpoint interval enclosures for irrational quantities.

use crate::exact::{to_decimal, ExactRational};
use num_traits::Zero;

/// Closed interval [lo, hi] guaranteed to contain the value it encloses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealInterval {
    lo: ExactRational,
    hi: ExactRational,
}

impl RealInterval {
    pub fn new(lo: ExactRational, hi: ExactRational) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        RealInterval { lo, hi }
    }

    pub fn point(v: ExactRational) -> Self {
        RealInterval { lo: v.clone(), hi: v }
    }

    pub fn lo(&self) -> &ExactRational {
        &self.lo
    }

    pub fn hi(&self) -> &ExactRational {
        &self.hi
    }

    pub fn width(&self) -> ExactRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> ExactRational {
        (&self.lo + &self.hi) / ExactRational::from_integer(2.into())
    }

    pub fn contains(&self, v: &ExactRational) -> bool {
        self.lo <= *v && *v <= self.hi
    }

    pub fn contains_interval(&self, other: &RealInterval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    /// True when the whole interval lies strictly below `other`.
    pub fn strictly_below(&self, other: &RealInterval) -> bool {
        self.hi < other.lo
    }

    pub fn shift(&self, c: &ExactRational) -> RealInterval {
        RealInterval::new(&self.lo + c, &self.hi + c)
    }

    /// Multiplication by a nonnegative constant.
    pub fn scale(&self, c: &ExactRational) -> RealInterval {
        assert!(*c >= ExactRational::zero(), "scale expects a nonnegative factor");
        RealInterval::new(&self.lo * c, &self.hi * c)
    }

    /// Product of two nonnegative intervals (monotone case).
    pub fn mul(&self, other: &RealInterval) -> RealInterval {
        assert!(
            self.lo >= ExactRational::zero() && other.lo >= ExactRational::zero(),
            "mul needs nonnegative intervals"
        );
        RealInterval::new(&self.lo * &other.lo, &self.hi * &other.hi)
    }

    /// Reciprocal; requires the interval to be strictly positive.
    pub fn recip(&self) -> RealInterval {
        assert!(self.lo > ExactRational::zero(), "recip needs a positive interval");
        RealInterval::new(self.hi.recip(), self.lo.recip())
    }

    /// Integer power; requires a nonnegative interval (monotone case).
    pub fn powi(&self, e: u64) -> RealInterval {
        assert!(self.lo >= ExactRational::zero(), "powi needs a nonnegative interval");
        RealInterval::new(rat_pow(&self.lo, e), rat_pow(&self.hi, e))
    }

    pub fn to_decimal(&self, places: usize) -> String {
        to_decimal(&self.midpoint(), places)
    }
}

fn rat_pow(base: &ExactRational, mut e: u64) -> ExactRational {
    let mut acc = ExactRational::from_integer(1.into());
    let mut sq = base.clone();
    while e > 0 {
        if e & 1 == 1 {
            acc *= &sq;
        }
        e >>= 1;
        if e > 0 {
            sq = &sq * &sq;
        }
    }
    acc
}
