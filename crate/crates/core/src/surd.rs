//! Exact real quadratic irrationals `(p + q√D) / r`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::{exact_sqrt, floor_div, floor_q_sqrt, split_square, to_bigint};
use crate::error::{Error, Result};
use crate::seq::Seq;

/// `(p + q√D) / r` with `r >= 1`.
///
/// Rational values are stored with `q = 0, D = 0`. Square factors found by
/// trial division are pulled out of `D`, but equality and ordering are
/// decided on values, so two representations of one number compare equal.
#[derive(Clone, Debug)]
pub struct Surd {
    p: BigInt,
    q: BigInt,
    d: BigUint,
    r: BigInt,
}

impl Surd {
    /// Builds and normalizes `(p + q√D) / r`; `r` must be nonzero.
    pub fn new(p: BigInt, q: BigInt, d: BigUint, r: BigInt) -> Result<Self> {
        if r.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(p, q, d, r))
    }

    fn normalized(mut p: BigInt, mut q: BigInt, mut d: BigUint, mut r: BigInt) -> Self {
        if r.is_negative() {
            p = -p;
            q = -q;
            r = -r;
        }
        if q.is_zero() || d.is_zero() {
            q = BigInt::zero();
            d = BigUint::zero();
        } else {
            let (k, m) = split_square(&d);
            q *= to_bigint(&k);
            d = m;
            if d.is_one() {
                p += &q;
                q = BigInt::zero();
                d = BigUint::zero();
            }
        }
        let g = p.gcd(&q).gcd(&r);
        if !g.is_zero() && !g.is_one() {
            p /= &g;
            q /= &g;
            r /= &g;
        }
        Surd { p, q, d, r }
    }

    pub fn from_integer(n: BigInt) -> Self {
        Surd { p: n, q: BigInt::zero(), d: BigUint::zero(), r: BigInt::one() }
    }

    pub fn from_rational(x: &BigRational) -> Self {
        Self::normalized(x.numer().clone(), BigInt::zero(), BigUint::zero(), x.denom().clone())
    }

    /// `√n`.
    pub fn sqrt(n: &BigUint) -> Self {
        Self::normalized(BigInt::zero(), BigInt::one(), n.clone(), BigInt::one())
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    pub fn radicand(&self) -> &BigUint {
        &self.d
    }

    pub fn r(&self) -> &BigInt {
        &self.r
    }

    pub fn is_rational(&self) -> bool {
        self.q.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    /// `(p - q√D) / r`.
    pub fn conjugate(&self) -> Self {
        Surd { p: self.p.clone(), q: -&self.q, d: self.d.clone(), r: self.r.clone() }
    }

    /// Rescales `other` so that it uses this radicand, if the two radicands
    /// differ by a rational square factor.
    fn aligned(&self, other: &Surd) -> Result<(BigUint, Surd)> {
        if other.is_rational() || self.d == other.d {
            return Ok((self.d.clone(), other.clone()));
        }
        if self.is_rational() {
            return Ok((other.d.clone(), other.clone()));
        }
        // q√D2 = q·k/D1 · √D1 with k = √(D1·D2)
        let k = exact_sqrt(&(&self.d * &other.d)).ok_or_else(|| {
            Error::IncompatibleRadicands(self.d.to_string(), other.d.to_string())
        })?;
        let d1 = to_bigint(&self.d);
        let moved = Surd {
            p: &other.p * &d1,
            q: &other.q * to_bigint(&k),
            d: self.d.clone(),
            r: &other.r * &d1,
        };
        Ok((self.d.clone(), moved))
    }

    pub fn checked_add(&self, other: &Surd) -> Result<Surd> {
        let (d, o) = self.aligned(other)?;
        Ok(Self::normalized(
            &self.p * &o.r + &o.p * &self.r,
            &self.q * &o.r + &o.q * &self.r,
            d,
            &self.r * &o.r,
        ))
    }

    pub fn checked_sub(&self, other: &Surd) -> Result<Surd> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Surd) -> Result<Surd> {
        let (d, o) = self.aligned(other)?;
        let dd = to_bigint(&d);
        Ok(Self::normalized(
            &self.p * &o.p + &self.q * &o.q * &dd,
            &self.p * &o.q + &self.q * &o.p,
            d,
            &self.r * &o.r,
        ))
    }

    /// `1 / self`.
    pub fn recip(&self) -> Result<Surd> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let norm = &self.p * &self.p - &self.q * &self.q * to_bigint(&self.d);
        Ok(Self::normalized(
            &self.r * &self.p,
            -(&self.r * &self.q),
            self.d.clone(),
            norm,
        ))
    }

    pub fn checked_div(&self, other: &Surd) -> Result<Surd> {
        self.checked_mul(&other.recip()?)
    }

    pub fn signum(&self) -> Ordering {
        sign_lin(&self.p, &self.q, &self.d)
    }

    /// Greatest integer not above the value.
    pub fn floor(&self) -> BigInt {
        floor_div(&(&self.p + floor_q_sqrt(&self.q, &self.d)), &self.r)
    }

    /// Least integer not below the value.
    pub fn ceil(&self) -> BigInt {
        -(-self).floor()
    }

    /// Whether the value is an integer.
    pub fn is_integer(&self) -> bool {
        self.is_rational() && self.r.is_one()
    }

    /// The first `count` partial quotients of the regular continued fraction.
    pub fn cf_terms(&self, count: usize) -> Vec<BigInt> {
        let mut out = Vec::with_capacity(count);
        let mut x = self.clone();
        for _ in 0..count {
            let a = x.floor();
            let frac = &x - &Surd::from_integer(a.clone());
            out.push(a);
            match frac.recip() {
                Ok(next) => x = next,
                Err(_) => break,
            }
        }
        out
    }

    /// Decimal rendering rounded to nearest with `digits` fractional digits.
    pub fn to_decimal(&self, digits: usize) -> String {
        let scale = to_bigint(&num_traits::pow(BigUint::from(10u32), digits));
        // floor(x·10^k + 1/2) as the floor of a surd with denominator 2r
        let two = BigInt::from(2);
        let scaled = Surd {
            p: &self.p * &scale * &two + &self.r,
            q: &self.q * &scale * &two,
            d: self.d.clone(),
            r: &self.r * &two,
        };
        format_scaled(&scaled.floor(), digits)
    }

    /// Lossy conversion for plotting only.
    pub fn to_f64(&self) -> f64 {
        self.to_decimal(17).parse().unwrap_or(f64::NAN)
    }
}

pub(crate) fn format_scaled(n: &BigInt, digits: usize) -> String {
    let neg = n.is_negative();
    let mut body = n.magnitude().to_string();
    if body.len() <= digits {
        body = "0".repeat(digits + 1 - body.len()) + &body;
    }
    let (int, frac) = body.split_at(body.len() - digits);
    let sign = if neg { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{frac}")
    }
}

/// Sign of `x + y√d`.
fn sign_lin(x: &BigInt, y: &BigInt, d: &BigUint) -> Ordering {
    let sx = x.sign();
    let sy = if d.is_zero() { Sign::NoSign } else { y.sign() };
    match (sx, sy) {
        (Sign::NoSign, s) | (s, Sign::NoSign) => sign_to_ord(s),
        (a, b) if a == b => sign_to_ord(a),
        _ => {
            let lhs = x.magnitude() * x.magnitude();
            let rhs = y.magnitude() * y.magnitude() * d;
            match lhs.cmp(&rhs) {
                Ordering::Equal => Ordering::Equal,
                Ordering::Greater => sign_to_ord(sx),
                Ordering::Less => sign_to_ord(sy),
            }
        }
    }
}

/// Sign of `x + y√a + z√b`.
fn sign_lin2(x: &BigInt, y: &BigInt, a: &BigUint, z: &BigInt, b: &BigUint) -> Ordering {
    let s = sign_two_radicals(y, a, z, b);
    let sx = x.sign();
    if sx == Sign::NoSign {
        return s;
    }
    if s == Ordering::Equal || s == sign_to_ord(sx) {
        return sign_to_ord(sx);
    }
    // Opposite signs: compare x^2 with (y√a + z√b)^2 = y²a + z²b + 2yz√(ab).
    let w = x * x - y * y * to_bigint(a) - z * z * to_bigint(b);
    let v = -(BigInt::from(2) * y * z);
    match sign_lin(&w, &v, &(a * b)) {
        Ordering::Greater => sign_to_ord(sx),
        Ordering::Less => s,
        Ordering::Equal => Ordering::Equal,
    }
}

/// Sign of `y√a + z√b`.
fn sign_two_radicals(y: &BigInt, a: &BigUint, z: &BigInt, b: &BigUint) -> Ordering {
    let sy = if a.is_zero() { Sign::NoSign } else { y.sign() };
    let sz = if b.is_zero() { Sign::NoSign } else { z.sign() };
    match (sy, sz) {
        (Sign::NoSign, s) | (s, Sign::NoSign) => sign_to_ord(s),
        (u, v) if u == v => sign_to_ord(u),
        _ => {
            let lhs = y.magnitude() * y.magnitude() * a;
            let rhs = z.magnitude() * z.magnitude() * b;
            match lhs.cmp(&rhs) {
                Ordering::Equal => Ordering::Equal,
                Ordering::Greater => sign_to_ord(sy),
                Ordering::Less => sign_to_ord(sz),
            }
        }
    }
}

fn sign_to_ord(s: Sign) -> Ordering {
    match s {
        Sign::Minus => Ordering::Less,
        Sign::NoSign => Ordering::Equal,
        Sign::Plus => Ordering::Greater,
    }
}

impl Ord for Surd {
    fn cmp(&self, other: &Self) -> Ordering {
        // sign of (p1 r2 - p2 r1) + q1 r2 √D1 - q2 r1 √D2
        let x = &self.p * &other.r - &other.p * &self.r;
        let y = &self.q * &other.r;
        let z = -(&other.q * &self.r);
        sign_lin2(&x, &y, &self.d, &z, &other.d)
    }
}

impl PartialOrd for Surd {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl PartialEq for Surd {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Surd {}

impl Neg for &Surd {
    type Output = Surd;
    fn neg(self) -> Surd {
        Surd { p: -&self.p, q: -&self.q, d: self.d.clone(), r: self.r.clone() }
    }
}

impl Neg for Surd {
    type Output = Surd;
    fn neg(self) -> Surd {
        -&self
    }
}

/// Panics on incompatible radicands; use [`Surd::checked_add`] otherwise.
impl Add for &Surd {
    type Output = Surd;
    fn add(self, rhs: &Surd) -> Surd {
        self.checked_add(rhs).expect("compatible radicands")
    }
}

impl Sub for &Surd {
    type Output = Surd;
    fn sub(self, rhs: &Surd) -> Surd {
        self.checked_sub(rhs).expect("compatible radicands")
    }
}

impl Mul for &Surd {
    type Output = Surd;
    fn mul(self, rhs: &Surd) -> Surd {
        self.checked_mul(rhs).expect("compatible radicands")
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return if self.r.is_one() {
                write!(f, "{}", self.p)
            } else {
                write!(f, "{}/{}", self.p, self.r)
            };
        }
        let op = if self.q.is_negative() { '-' } else { '+' };
        write!(f, "({} {} {}*sqrt({}))/{}", self.p, op, self.q.magnitude(), self.d, self.r)
    }
}

/// The root `> 1` of `K_2^n x² + (K_2^{n-1} - K_1^n) x - K_1^{n-1} = 0`,
/// i.e. the value of the purely periodic continued fraction `[⟨s⟩]`.
pub fn periodic_cf_value(s: &Seq) -> Result<Surd> {
    let n = s.len();
    if n == 0 {
        return Err(Error::EmptySequence);
    }
    let a = to_bigint(&s.partial_continuant(2, n)?);
    let b = to_bigint(&s.partial_continuant(2, n - 1)?) - to_bigint(&s.continuant());
    let c = -to_bigint(&s.partial_continuant(1, n - 1)?);
    let disc = &b * &b - BigInt::from(4) * &a * &c;
    let disc = disc.to_biguint().expect("positive discriminant");
    Surd::new(-b, BigInt::one(), disc, BigInt::from(2) * a)
}

/// `-1 / [⟨reverse s⟩]`, the second eigenline slope, in `(-1, 0)`.
pub fn neg_periodic_tail(s: &Seq) -> Result<Surd> {
    Ok(-periodic_cf_value(&s.reverse())?.recip()?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sd(p: i64, q: i64, d: u64, r: i64) -> Surd {
        Surd::new(p.into(), q.into(), d.into(), r.into()).unwrap()
    }

    fn int(n: i64) -> Surd {
        Surd::from_integer(n.into())
    }

    #[test]
    fn periodic_values() {
        assert_eq!(periodic_cf_value(&Seq::from_u64s(&[1])).unwrap(), sd(1, 1, 5, 2));
        assert_eq!(periodic_cf_value(&Seq::from_u64s(&[2])).unwrap(), sd(1, 1, 2, 1));
        assert_eq!(
            periodic_cf_value(&Seq::from_u64s(&[1, 1, 2, 2])).unwrap(),
            sd(9, 1, 221, 14)
        );
    }

    #[test]
    fn negative_tails() {
        assert_eq!(neg_periodic_tail(&Seq::from_u64s(&[1])).unwrap(), sd(1, -1, 5, 2));
        assert_eq!(neg_periodic_tail(&Seq::from_u64s(&[2])).unwrap(), sd(1, -1, 2, 1));
        let s = Seq::from_u64s(&[1, 1, 2, 2]);
        let expect = -periodic_cf_value(&Seq::from_u64s(&[2, 2, 1, 1])).unwrap().recip().unwrap();
        assert_eq!(neg_periodic_tail(&s).unwrap(), expect);
    }

    #[test]
    fn comparisons() {
        assert!(sd(1, 1, 5, 2) < sd(1, 1, 2, 1));
        assert_eq!(sd(9, 1, 221, 14).cmp(&sd(9, 1, 221, 14)), Ordering::Equal);
        assert!(sd(9, 1, 221, 14) > sd(19, 1, 1517, 34));
        // different representations of one value
        assert_eq!(sd(0, 1, 8, 1), sd(0, 2, 2, 1));
        assert_eq!(sd(0, 1, 9, 1), int(3));
        assert!(sd(0, 1, 2, 1) < sd(0, 1, 3, 1));
        assert!(sd(1, 1, 2, 1) > sd(0, 1, 5, 1)); // 2.414 > 2.236
    }

    #[test]
    fn floors() {
        assert_eq!(sd(1, 1, 5, 2).floor(), BigInt::from(1));
        assert_eq!(sd(1, 1, 2, 1).floor(), BigInt::from(2));
        assert_eq!(sd(1, -1, 5, 2).floor(), BigInt::from(-1));
        assert_eq!(int(-4).floor(), BigInt::from(-4));
        assert_eq!(sd(1, -1, 5, 2).ceil(), BigInt::from(0));
    }

    #[test]
    fn arithmetic() {
        let phi = sd(1, 1, 5, 2);
        let psi = sd(1, -1, 5, 2);
        assert_eq!(&phi + &psi, int(1));
        assert_eq!(phi.recip().unwrap(), sd(-1, 1, 5, 2));
        assert_eq!(&phi * &psi, int(-1));
        assert_eq!(&phi - &phi, int(0));
        assert!(int(0).recip().is_err());
        assert!(matches!(
            sd(0, 1, 2, 1).checked_add(&sd(0, 1, 3, 1)),
            Err(Error::IncompatibleRadicands(..))
        ));
        // √2 · √8 aligns through a square ratio
        assert_eq!(sd(0, 1, 2, 1).checked_mul(&sd(0, 1, 6, 1).checked_mul(&sd(0, 1, 6, 1)).unwrap()).unwrap(), sd(0, 6, 2, 1));
        assert_eq!(phi.checked_div(&phi).unwrap(), int(1));
    }

    #[test]
    fn decimals() {
        assert_eq!(sd(1, 1, 5, 2).to_decimal(5), "1.61803");
        assert_eq!(sd(0, 1, 221, 5).to_decimal(6), "2.973214");
        assert_eq!(sd(0, 1, 221, 5).to_decimal(7), "2.9732137");
        assert_eq!(int(3).to_decimal(2), "3.00");
        assert_eq!(sd(1, -1, 5, 2).to_decimal(4), "-0.6180");
        assert_eq!(int(7).to_decimal(0), "7");
    }

    #[test]
    fn cf_expansion_recovers_period() {
        let terms = sd(9, 1, 221, 14).cf_terms(8);
        let want: Vec<BigInt> = [1, 1, 2, 2, 1, 1, 2, 2].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(terms, want);
    }

    #[test]
    fn display() {
        assert_eq!(sd(1, 1, 5, 2).to_string(), "(1 + 1*sqrt(5))/2");
        assert_eq!(sd(1, -1, 5, 2).to_string(), "(1 - 1*sqrt(5))/2");
        assert_eq!(int(3).to_string(), "3");
    }
}
