use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::arith::{reduce_radical_ratio, to_bigint};
use crate::error::{Error, Result};
use crate::surd::Surd;

/// A Markov-spectrum value `√N / d`.
///
/// Construction pulls common square factors out of `N` and `d`; comparison
/// always cross-multiplies, so it never depends on how far that reduction got.
#[derive(Clone, Debug)]
pub struct RadicalRatio {
    n: BigUint,
    d: BigUint,
}

impl RadicalRatio {
    pub fn new(n: BigUint, d: BigUint) -> Result<Self> {
        if n.is_zero() || d.is_zero() {
            return Err(Error::Precondition(format!(
                "radical ratio needs positive N and d, got sqrt({n})/{d}"
            )));
        }
        let (n, d) = reduce_radical_ratio(&n, &d);
        Ok(RadicalRatio { n, d })
    }

    pub fn radicand(&self) -> &BigUint {
        &self.n
    }

    pub fn denominator(&self) -> &BigUint {
        &self.d
    }

    pub fn to_surd(&self) -> Surd {
        Surd::new(BigInt::zero(), BigInt::from(1), self.n.clone(), to_bigint(&self.d))
            .expect("positive denominator")
    }

    pub fn to_decimal(&self, digits: usize) -> String {
        self.to_surd().to_decimal(digits)
    }
}

impl Ord for RadicalRatio {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.n * &other.d * &other.d).cmp(&(&other.n * &self.d * &self.d))
    }
}

impl PartialOrd for RadicalRatio {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl PartialEq for RadicalRatio {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for RadicalRatio {}

impl fmt::Display for RadicalRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.d == BigUint::from(1u32) {
            write!(f, "sqrt({})", self.n)
        } else {
            write!(f, "sqrt({})/{}", self.n, self.d)
        }
    }
}
