//! Finite integer sequences, continuants, and rational continued fractions.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::to_bigint;
use crate::error::{Error, Result};

/// Continuant `K(x_1, ..., x_n)` via `K_n = x_n K_{n-1} + K_{n-2}`.
pub fn continuant(elems: &[BigUint]) -> BigUint {
    let mut prev = BigUint::zero();
    let mut cur = BigUint::one();
    for x in elems {
        let next = x * &cur + &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// A finite sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Seq(Vec<BigUint>);

impl Seq {
    /// Builds a sequence, rejecting zero elements.
    pub fn new(elems: Vec<BigUint>) -> Result<Self> {
        if elems.iter().any(Zero::is_zero) {
            return Err(Error::Precondition(
                "sequence elements must be positive".into(),
            ));
        }
        Ok(Seq(elems))
    }

    pub fn empty() -> Self {
        Seq(Vec::new())
    }

    /// Convenience constructor for small literals; panics on a zero element.
    pub fn from_u64s(xs: &[u64]) -> Self {
        Seq::new(xs.iter().map(|&x| BigUint::from(x)).collect()).expect("positive elements")
    }

    pub fn elements(&self) -> &[BigUint] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_even(&self) -> bool {
        self.0.len().is_multiple_of(2)
    }

    pub(crate) fn require_even_nonempty(&self) -> Result<()> {
        if self.is_empty() {
            Err(Error::EmptySequence)
        } else if !self.is_even() {
            Err(Error::OddLength(self.len()))
        } else {
            Ok(())
        }
    }

    /// `K(s) = K_1^n(s)`.
    pub fn continuant(&self) -> BigUint {
        continuant(&self.0)
    }

    /// Partial continuant `K_i^j = K(a_i, ..., a_j)` with 1-based indices.
    ///
    /// Accepts `1 <= i <= j + 1 <= n + 1`; `j = i - 1` gives 1 and `j = i - 2`
    /// gives 0 so the two-term recurrence stays closed at the boundary.
    pub fn partial_continuant(&self, i: usize, j: usize) -> Result<BigUint> {
        let n = self.len();
        if i >= 1 && j + 2 == i && i <= n + 2 {
            return Ok(BigUint::zero());
        }
        if i < 1 || i > j + 1 || j > n {
            return Err(Error::IndexRange { i, j, n });
        }
        Ok(continuant(&self.0[i - 1..j]))
    }

    /// `K̆(s)`: the continuant with the last element dropped.
    pub fn breve(&self) -> Result<BigUint> {
        match self.0.split_last() {
            Some((_, init)) => Ok(continuant(init)),
            None => Err(Error::EmptySequence),
        }
    }

    /// `t(s) = K_1^n(s) + K_2^{n-1}(s)`, which equals `K̆(s⊕s) / K̆(s)`.
    pub fn trace_coefficient(&self) -> Result<BigUint> {
        let n = self.len();
        if n == 0 {
            return Err(Error::EmptySequence);
        }
        let inner = if n >= 2 {
            continuant(&self.0[1..n - 1])
        } else {
            // K_2^0 = 0 for a single element
            BigUint::zero()
        };
        Ok(self.continuant() + inner)
    }

    pub fn concat(&self, other: &Seq) -> Seq {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Seq(v)
    }

    pub fn reverse(&self) -> Seq {
        Seq(self.0.iter().rev().cloned().collect())
    }

    /// `s^k`, the k-fold concatenation.
    pub fn repeat(&self, k: usize) -> Seq {
        Seq(self.0.iter().cycle().take(self.0.len() * k).cloned().collect())
    }

    /// Cyclic left rotation by `k` positions.
    pub fn rotate(&self, k: usize) -> Seq {
        if self.is_empty() {
            return self.clone();
        }
        let mut v = self.0.clone();
        v.rotate_left(k % self.len());
        Seq(v)
    }

    /// Whether the sequence equals its reversal.
    pub fn is_palindrome(&self) -> bool {
        self.0.iter().eq(self.0.iter().rev())
    }

    /// True iff `s` is not a k-fold repetition (k >= 2) of an even block.
    pub fn is_evenly_prime(&self) -> Result<bool> {
        self.require_even_nonempty()?;
        let n = self.len();
        let composite = (2..n)
            .step_by(2)
            .filter(|d| n.is_multiple_of(*d))
            .any(|d| self.0.chunks(d).all(|c| c == &self.0[..d]));
        Ok(!composite)
    }

    /// True iff some `k` satisfies `a_{k+m mod 2n} = a_{k-m-1 mod 2n}` for all `m`.
    pub fn is_evenly_palindromic(&self) -> Result<bool> {
        self.require_even_nonempty()?;
        let n = self.len();
        let a = &self.0;
        Ok((0..n).any(|k| {
            (0..n).all(|m| a[(k + m) % n] == a[(k + n * 2 - m - 1) % n])
        }))
    }

    /// True iff `other` is a cyclic rotation of `self`.
    pub fn is_cyclically_equivalent(&self, other: &Seq) -> bool {
        if self.len() != other.len() {
            return false;
        }
        if self.is_empty() {
            return true;
        }
        let n = self.len();
        (0..n).any(|k| (0..n).all(|i| self.0[(i + k) % n] == other.0[i]))
    }

    /// The periodisation `⟨s⟩`.
    pub fn periodic(&self) -> Result<EventuallyPeriodicSeq> {
        EventuallyPeriodicSeq::new(Seq::empty(), self.clone())
    }

    /// Compact literal in the CLI grammar; runs of three or more equal
    /// elements are written as `(x)^k`.
    pub fn to_literal(&self) -> String {
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.0.len() {
            let mut j = i;
            while j < self.0.len() && self.0[j] == self.0[i] {
                j += 1;
            }
            let run = j - i;
            if run >= 3 {
                parts.push(format!("({})^{}", self.0[i], run));
            } else {
                for _ in 0..run {
                    parts.push(self.0[i].to_string());
                }
            }
            i = j;
        }
        parts.join(",")
    }
}

impl fmt::Display for Seq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for Seq {
    type Err = Error;

    /// Parses `seq := term (',' term)*`, `term := INT | '(' INT (',' INT)* ')' '^' INT`.
    fn from_str(s: &str) -> Result<Self> {
        let mut p = LiteralParser { src: s.as_bytes(), pos: 0 };
        let seq = p.sequence()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.error("trailing input"));
        }
        Ok(seq)
    }
}

struct LiteralParser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl LiteralParser<'_> {
    fn error(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at byte {} of sequence literal", self.pos))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.src.get(self.pos) == Some(&c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn int(&mut self) -> Result<BigUint> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a positive integer"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        let v: BigUint = text.parse().map_err(|_| self.error("bad integer"))?;
        if v.is_zero() {
            return Err(self.error("elements must be >= 1"));
        }
        Ok(v)
    }

    fn sequence(&mut self) -> Result<Seq> {
        let mut out = Vec::new();
        loop {
            if self.eat(b'(') {
                let mut block = vec![self.int()?];
                while self.eat(b',') {
                    block.push(self.int()?);
                }
                if !self.eat(b')') {
                    return Err(self.error("expected ')'"));
                }
                if !self.eat(b'^') {
                    return Err(self.error("expected '^' after block"));
                }
                let k = self
                    .int()?
                    .to_usize()
                    .ok_or_else(|| self.error("exponent too large"))?;
                for _ in 0..k {
                    out.extend(block.iter().cloned());
                }
            } else {
                out.push(self.int()?);
            }
            if !self.eat(b',') {
                break;
            }
        }
        Ok(Seq(out))
    }
}

/// A one-sided infinite sequence `(preperiod, ⟨period⟩)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EventuallyPeriodicSeq {
    preperiod: Seq,
    period: Seq,
}

impl EventuallyPeriodicSeq {
    pub fn new(preperiod: Seq, period: Seq) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::EmptySequence);
        }
        Ok(Self { preperiod, period })
    }

    pub fn preperiod(&self) -> &Seq {
        &self.preperiod
    }

    pub fn period(&self) -> &Seq {
        &self.period
    }

    /// Element at 0-based position `i`.
    pub fn at(&self, i: usize) -> &BigUint {
        let pre = self.preperiod.len();
        if i < pre {
            &self.preperiod.0[i]
        } else {
            &self.period.0[(i - pre) % self.period.len()]
        }
    }
}

/// Skew-lexicographic comparison of two infinite streams.
///
/// At the first differing 1-based position `k`, `a ≻ b` iff `a_k > b_k` for odd
/// `k` and `a_k < b_k` for even `k`. This order agrees with comparing the
/// continued-fraction values `[a]` and `[b]`.
pub fn skew_lex_compare(a: &EventuallyPeriodicSeq, b: &EventuallyPeriodicSeq) -> Ordering {
    // Two purely periodic words agreeing on |p_a| + |p_b| positions coincide.
    let bound = a.preperiod.len().max(b.preperiod.len()) + a.period.len() + b.period.len();
    for i in 0..bound {
        let (x, y) = (a.at(i), b.at(i));
        if x != y {
            let odd = i % 2 == 0; // 1-based position i + 1
            let ord = x.cmp(y);
            return if odd { ord } else { ord.reverse() };
        }
    }
    Ordering::Equal
}

/// Requested element-count parity for [`rational_to_cf`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CfParity {
    Odd,
    Even,
    Canonical,
}

/// A regular continued fraction `[head; tail...]`; only `head` may be
/// zero or negative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularCf {
    pub head: BigInt,
    pub tail: Vec<BigUint>,
}

impl RegularCf {
    pub fn len(&self) -> usize {
        self.tail.len() + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn value(&self) -> BigRational {
        // [head; t] = head + K(t_2..)/K(t_1..)
        let num = continuant(self.tail.get(1..).unwrap_or(&[]));
        let den = continuant(&self.tail);
        BigRational::from_integer(self.head.clone())
            + BigRational::new(to_bigint(&num), to_bigint(&den))
    }

    /// All elements as a [`Seq`]; fails if the head is not positive.
    pub fn into_seq(self) -> Result<Seq> {
        if !self.head.is_positive() {
            return Err(Error::Precondition(format!(
                "continued fraction head {} is not positive",
                self.head
            )));
        }
        let mut v = Vec::with_capacity(self.tail.len() + 1);
        v.push(self.head.magnitude().clone());
        v.extend(self.tail);
        Ok(Seq(v))
    }
}

/// Regular continued fraction of `p / q` with the requested parity.
///
/// Parity is toggled by `[.., a_n] = [.., a_n - 1, 1]` when `a_n >= 2`, or
/// `[.., a_{n-1}, 1] = [.., a_{n-1} + 1]` otherwise.
pub fn rational_to_cf(p: &BigInt, q: &BigInt, parity: CfParity) -> Result<RegularCf> {
    if !q.is_positive() {
        return Err(Error::Precondition("denominator must be positive".into()));
    }
    if parity != CfParity::Canonical && !p.is_positive() {
        return Err(Error::Precondition(
            "odd/even expansions require p/q > 0".into(),
        ));
    }
    let (head, mut r) = p.div_mod_floor(q);
    let mut den = q.clone();
    let mut tail: Vec<BigUint> = Vec::new();
    while !r.is_zero() {
        let (a, r2) = den.div_mod_floor(&r);
        tail.push(a.magnitude().clone());
        den = std::mem::replace(&mut r, r2);
    }
    let mut cf = RegularCf { head, tail };
    let want_odd = match parity {
        CfParity::Canonical => return Ok(cf),
        CfParity::Odd => true,
        CfParity::Even => false,
    };
    if (cf.len() % 2 == 1) != want_odd {
        let one = BigUint::one();
        match cf.tail.last_mut() {
            Some(last) if *last > one => {
                *last -= 1u32;
                cf.tail.push(one);
            }
            Some(_) => {
                cf.tail.pop();
                match cf.tail.last_mut() {
                    Some(prev) => *prev += 1u32,
                    None => cf.head += 1,
                }
            }
            None if cf.head > BigInt::one() => {
                cf.head -= 1;
                cf.tail.push(one);
            }
            None => {
                return Err(Error::ParityImpossible(format!("{p}/{q}")));
            }
        }
    }
    if !cf.head.is_positive() {
        return Err(Error::ParityImpossible(format!("{p}/{q}")));
    }
    Ok(cf)
}

/// Exact value of `[a_1; a_2, ..., a_n] = K(a_1..a_n) / K(a_2..a_n)`.
pub fn cf_to_rational(s: &Seq) -> Result<BigRational> {
    if s.is_empty() {
        return Err(Error::EmptySequence);
    }
    let num = s.continuant();
    let den = continuant(&s.0[1..]);
    Ok(BigRational::new(to_bigint(&num), to_bigint(&den)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(xs: &[u64]) -> Seq {
        Seq::from_u64s(xs)
    }

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn continuant_examples() {
        assert_eq!(Seq::empty().continuant(), big(1));
        assert_eq!(s(&[2, 2, 3, 3]).continuant(), big(56));
        assert_eq!(s(&[4, 4, 11]).continuant(), big(191));
    }

    #[test]
    fn partial_continuants() {
        let a = s(&[2, 2, 3, 3]);
        assert_eq!(a.partial_continuant(2, 3).unwrap(), big(7));
        assert_eq!(a.partial_continuant(3, 2).unwrap(), big(1));
        assert_eq!(a.partial_continuant(2, 4).unwrap(), big(23));
        assert_eq!(a.partial_continuant(3, 1).unwrap(), big(0));
        assert_eq!(a.partial_continuant(1, 0).unwrap(), big(1));
        assert!(matches!(
            a.partial_continuant(2, 5),
            Err(Error::IndexRange { .. })
        ));
        assert!(a.partial_continuant(0, 2).is_err());
        assert_eq!(a.partial_continuant(4, 2).unwrap(), big(0));
        assert!(a.partial_continuant(5, 2).is_err());
    }

    #[test]
    fn breve_examples() {
        assert_eq!(s(&[1, 1, 2, 2]).breve().unwrap(), big(5));
        assert_eq!(s(&[7]).breve().unwrap(), big(1));
        let a: Seq = "4,4,(11)^8".parse().unwrap();
        assert_eq!(a.breve().unwrap(), big(355_318_099));
        assert_eq!(Seq::empty().breve(), Err(Error::EmptySequence));
    }

    #[test]
    fn trace_examples() {
        assert_eq!(s(&[1, 1]).trace_coefficient().unwrap(), big(3));
        assert_eq!(s(&[2, 2]).trace_coefficient().unwrap(), big(6));
        assert_eq!(s(&[4, 4]).trace_coefficient().unwrap(), big(18));
        assert_eq!(s(&[3]).trace_coefficient().unwrap(), big(3));
        assert!(Seq::empty().trace_coefficient().is_err());
    }

    #[test]
    fn concat_and_reverse() {
        assert_eq!(s(&[1, 1]).concat(&s(&[2, 2])), s(&[1, 1, 2, 2]));
        assert_eq!(Seq::empty().concat(&s(&[3])), s(&[3]));
        assert_eq!(s(&[4, 4]).concat(&s(&[11, 11])), s(&[4, 4, 11, 11]));
        assert_eq!(s(&[1, 2, 3]).reverse(), s(&[3, 2, 1]));
        assert_eq!(s(&[2, 2, 3, 3]).reverse(), s(&[3, 3, 2, 2]));
        assert_eq!(s(&[1, 2, 1]).reverse(), s(&[1, 2, 1]));
    }

    #[test]
    fn skew_lex_examples() {
        let p = |xs: &[u64]| s(xs).periodic().unwrap();
        assert_eq!(skew_lex_compare(&p(&[1, 1]), &p(&[2, 2])), Ordering::Less);
        assert_eq!(skew_lex_compare(&p(&[1, 1]), &p(&[1, 2])), Ordering::Greater);
        assert_eq!(skew_lex_compare(&p(&[1, 2]), &p(&[1, 2])), Ordering::Equal);
        // different periods of the same stream
        assert_eq!(skew_lex_compare(&p(&[1, 2]), &p(&[1, 2, 1, 2])), Ordering::Equal);
        // the (1,1,2,2,1,1) vs (1,1,2,2) pair: value comparison says ≺
        assert_eq!(
            skew_lex_compare(&p(&[1, 1, 2, 2, 1, 1]), &p(&[1, 1, 2, 2])),
            Ordering::Less
        );
    }

    #[test]
    fn evenly_prime() {
        assert!(s(&[1, 1, 2, 2]).is_evenly_prime().unwrap());
        assert!(!s(&[2, 2, 2, 2]).is_evenly_prime().unwrap());
        assert!(s(&[4, 4]).is_evenly_prime().unwrap());
        assert!(!s(&[1, 2, 1, 2, 1, 2]).is_evenly_prime().unwrap());
        // (1,2,1)^2 repeats an odd block only
        assert!(s(&[1, 2, 1, 1, 2, 1]).is_evenly_prime().unwrap());
        assert_eq!(s(&[1, 2, 3]).is_evenly_prime(), Err(Error::OddLength(3)));
    }

    #[test]
    fn evenly_palindromic() {
        assert!(s(&[1, 1, 2, 2]).is_evenly_palindromic().unwrap());
        assert!(s(&[7, 7]).is_evenly_palindromic().unwrap());
        assert!(!s(&[1, 2, 1, 3]).is_evenly_palindromic().unwrap());
        assert!(s(&[1, 2]).is_evenly_palindromic().is_ok());
        assert!(s(&[1, 2, 3]).is_evenly_palindromic().is_err());
    }

    #[test]
    fn cyclic_equivalence() {
        assert!(s(&[1, 1, 2, 3]).is_cyclically_equivalent(&s(&[2, 3, 1, 1])));
        assert!(!s(&[1, 1, 2, 3]).is_cyclically_equivalent(&s(&[3, 2, 1, 1])));
        assert!(Seq::empty().is_cyclically_equivalent(&Seq::empty()));
        assert!(!s(&[1]).is_cyclically_equivalent(&s(&[1, 1])));
    }

    #[test]
    fn rational_cf_examples() {
        let cf = |p: i64, q: i64, par| {
            rational_to_cf(&BigInt::from(p), &BigInt::from(q), par)
        };
        assert_eq!(cf(17, 7, CfParity::Odd).unwrap().into_seq().unwrap(), s(&[2, 2, 3]));
        assert_eq!(cf(5, 2, CfParity::Odd).unwrap().into_seq().unwrap(), s(&[2, 1, 1]));
        assert_eq!(cf(5, 2, CfParity::Even).unwrap().into_seq().unwrap(), s(&[2, 2]));
        assert_eq!(cf(3, 1, CfParity::Canonical).unwrap().into_seq().unwrap(), s(&[3]));
        assert_eq!(cf(3, 1, CfParity::Even).unwrap().into_seq().unwrap(), s(&[2, 1]));
        assert_eq!(cf(1, 1, CfParity::Odd).unwrap().into_seq().unwrap(), s(&[1]));
        assert!(matches!(cf(1, 1, CfParity::Even), Err(Error::ParityImpossible(_))));
        assert!(matches!(cf(2, 5, CfParity::Odd), Err(Error::ParityImpossible(_))));
        let neg = cf(-7, 3, CfParity::Canonical).unwrap();
        assert_eq!(neg.head, BigInt::from(-3));
        assert_eq!(neg.tail, vec![big(1), big(2)]);
        assert_eq!(neg.value(), BigRational::new((-7).into(), 3.into()));
    }

    #[test]
    fn cf_to_rational_examples() {
        let r = |p: i64, q: i64| BigRational::new(p.into(), q.into());
        assert_eq!(cf_to_rational(&s(&[2, 2, 3])).unwrap(), r(17, 7));
        assert_eq!(cf_to_rational(&s(&[9])).unwrap(), r(9, 1));
        assert_eq!(cf_to_rational(&s(&[1, 1, 2, 2])).unwrap(), r(12, 7));
    }

    #[test]
    fn literal_grammar() {
        let a: Seq = "4,4,(11)^8".parse().unwrap();
        assert_eq!(a.len(), 10);
        assert_eq!(a.to_literal(), "4,4,(11)^8");
        let b: Seq = " (1, 2)^2 , 3".parse().unwrap();
        assert_eq!(b, s(&[1, 2, 1, 2, 3]));
        assert!(matches!("1,0".parse::<Seq>(), Err(Error::Parse(_))));
        assert!("(1,2)".parse::<Seq>().is_err());
        assert!("1,,2".parse::<Seq>().is_err());
        assert!("".parse::<Seq>().is_err());
        assert!("1 2".parse::<Seq>().is_err());
    }
}
