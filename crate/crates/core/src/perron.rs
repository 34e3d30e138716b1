//! Exact evaluation of the Perron identity on periodic LLS sequences.
//!
//! For a marked periodic sequence `⟨a_1, ..., a_n⟩` the quantity
//! `E_i = a_i + [0; a_{i+1}, a_{i+2}, ...] + [0; a_{i-1}, a_{i-2}, ...]`
//! depends only on `i mod n`. The Markov minimum of the associated form is
//! `√Δ / max_i E_i`, so the spectrum value of the arrangement is `max_i E_i`.
//! (Printed statements of the identity sometimes take an infimum over the
//! same expression; only the supremum agrees with Map W.)

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::matform::map_w;
use crate::sail::is_extremal;
use crate::seq::Seq;
use crate::surd::{periodic_cf_value, Surd};

/// A periodic LLS sequence with a marked position in its period.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkedPeriodicLls {
    period: Seq,
    mark: usize,
}

impl MarkedPeriodicLls {
    pub fn new(period: Seq, mark: usize) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::EmptySequence);
        }
        if mark >= period.len() {
            return Err(Error::Precondition(format!(
                "mark {mark} outside period of length {}",
                period.len()
            )));
        }
        Ok(MarkedPeriodicLls { period, mark })
    }

    pub fn period(&self) -> &Seq {
        &self.period
    }

    pub fn mark(&self) -> usize {
        self.mark
    }
}

/// `E_i` for every position of the period, read from the mark.
pub fn perron_terms(m: &MarkedPeriodicLls, exec: Exec) -> Result<Vec<Surd>> {
    let s = m.period.rotate(m.mark);
    let n = s.len();
    let rev = s.reverse();
    let idx: Vec<usize> = (0..n).collect();
    exec.map(&idx, |&i| {
        let forward = periodic_cf_value(&s.rotate(i + 1))?.recip()?;
        // a_{i-1}, a_{i-2}, ... starts at rev[n - i] (cyclically)
        let backward = periodic_cf_value(&rev.rotate(n - i))?.recip()?;
        let a = Surd::from_integer(BigInt::from(s.elements()[i].clone()));
        a.checked_add(&forward)?.checked_add(&backward)
    })
    .into_iter()
    .collect()
}

/// The largest `E_i` and the first position (relative to the mark) attaining it.
pub fn perron_extremum(m: &MarkedPeriodicLls) -> Result<(Surd, usize)> {
    perron_extremum_with(m, Exec::default())
}

pub fn perron_extremum_with(m: &MarkedPeriodicLls, exec: Exec) -> Result<(Surd, usize)> {
    let terms = perron_terms(m, exec)?;
    let mut best = 0;
    for (i, t) in terms.iter().enumerate() {
        if *t > terms[best] {
            best = i;
        }
    }
    Ok((terms[best].clone(), best))
}

/// Whether the Perron extremum of `⟨s⟩` equals `map_W(s)` exactly.
///
/// Fails with a precondition error when `s` is not extremal.
pub fn perron_matches_spectrum(s: &Seq) -> Result<bool> {
    let report = is_extremal(s)?;
    if !report.extremal {
        return Err(Error::Precondition(format!(
            "sequence {s} is not extremal (minimum {} < {})",
            report.minimum, report.value_at_origin
        )));
    }
    let (e, _) = perron_extremum(&MarkedPeriodicLls::new(s.clone(), 0)?)?;
    Ok(e == map_w(s)?.to_surd())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    fn marked(xs: &[u64]) -> MarkedPeriodicLls {
        MarkedPeriodicLls::new(Seq::from_u64s(xs), 0).unwrap()
    }

    #[test]
    fn golden_and_silver() {
        let (e, _) = perron_extremum(&marked(&[1])).unwrap();
        assert_eq!(e, Surd::sqrt(&BigUint::from(5u32)));
        let (e, _) = perron_extremum(&marked(&[2])).unwrap();
        assert_eq!(e, Surd::sqrt(&BigUint::from(8u32)));
    }

    #[test]
    fn table_row() {
        let (e, i) = perron_extremum(&marked(&[2, 2, 3, 3])).unwrap();
        let w = map_w(&Seq::from_u64s(&[2, 2, 3, 3])).unwrap();
        assert_eq!(e, w.to_surd());
        assert_eq!(Seq::from_u64s(&[2, 2, 3, 3]).elements()[i], BigUint::from(3u32));
        assert!(e.to_decimal(4).starts_with("3.704"));
    }

    #[test]
    fn mark_invariance() {
        let base = perron_extremum(&marked(&[2, 2, 3, 3, 3, 3])).unwrap().0;
        for k in 1..6 {
            let m = MarkedPeriodicLls::new(Seq::from_u64s(&[2, 2, 3, 3, 3, 3]), k).unwrap();
            assert_eq!(perron_extremum(&m).unwrap().0, base);
        }
    }

    #[test]
    fn spectrum_match() {
        assert!(perron_matches_spectrum(&Seq::from_u64s(&[1, 1])).unwrap());
        assert!(perron_matches_spectrum(&Seq::from_u64s(&[2, 2, 3, 3])).unwrap());
        assert!(perron_matches_spectrum(&Seq::from_u64s(&[2, 2, 2, 2, 3, 3])).unwrap());
        assert!(matches!(
            perron_matches_spectrum(&Seq::from_u64s(&[1, 1, 2, 2, 2, 2, 1, 1, 2, 2])),
            Err(Error::Precondition(_))
        ));
        assert!(MarkedPeriodicLls::new(Seq::empty(), 0).is_err());
    }
}
