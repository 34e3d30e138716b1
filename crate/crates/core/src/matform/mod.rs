//! Reduced matrices `M_s`, associated forms, and the maps between sequences,
//! matrices, forms and spectrum values.
//!
//! Matrices are laid out as `((a, c), (b, d))`: upper row `a c`, lower row
//! `b d`. For a sequence `s` of length `n`, `M_s` has `a = K_2^{n-1}`,
//! `c = K_2^n`, `b = K_1^{n-1}`, `d = K_1^n`.

mod radical;

pub use radical::RadicalRatio;

use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::to_bigint;
use crate::error::{Error, Result};
use crate::seq::{rational_to_cf, CfParity, Seq};

/// Integer 2x2 matrix `((a, c), (b, d))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat2 {
    pub a: BigInt,
    pub c: BigInt,
    pub b: BigInt,
    pub d: BigInt,
}

impl Mat2 {
    /// Matrix with upper row `(a, c)` and lower row `(b, d)`.
    pub fn new(a: BigInt, c: BigInt, b: BigInt, d: BigInt) -> Self {
        Mat2 { a, c, b, d }
    }

    pub fn from_i64(a: i64, c: i64, b: i64, d: i64) -> Self {
        Mat2::new(a.into(), c.into(), b.into(), d.into())
    }

    pub fn identity() -> Self {
        Mat2::from_i64(1, 0, 0, 1)
    }

    /// `(0, 1; 1, x)`.
    pub fn elementary(x: &BigUint) -> Self {
        Mat2::new(BigInt::zero(), BigInt::one(), BigInt::one(), to_bigint(x))
    }

    pub fn det(&self) -> BigInt {
        &self.a * &self.d - &self.c * &self.b
    }

    pub fn trace(&self) -> BigInt {
        &self.a + &self.d
    }

    pub fn mul(&self, o: &Mat2) -> Mat2 {
        Mat2 {
            a: &self.a * &o.a + &self.c * &o.b,
            c: &self.a * &o.c + &self.c * &o.d,
            b: &self.b * &o.a + &self.d * &o.b,
            d: &self.b * &o.c + &self.d * &o.d,
        }
    }

    /// `M v` for a column vector `v = (x, y)`.
    pub fn apply(&self, x: &BigInt, y: &BigInt) -> (BigInt, BigInt) {
        (&self.a * x + &self.c * y, &self.b * x + &self.d * y)
    }

    /// Rows `[[a, c], [b, d]]`.
    pub fn rows(&self) -> [[&BigInt; 2]; 2] {
        [[&self.a, &self.c], [&self.b, &self.d]]
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}; {}, {})", self.a, self.c, self.b, self.d)
    }
}

/// Binary quadratic form `A x² + B xy + C y²`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadForm {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
}

impl QuadForm {
    pub fn new(a: BigInt, b: BigInt, c: BigInt) -> Self {
        QuadForm { a, b, c }
    }

    pub fn from_i64(a: i64, b: i64, c: i64) -> Self {
        QuadForm::new(a.into(), b.into(), c.into())
    }

    pub fn eval(&self, x: &BigInt, y: &BigInt) -> BigInt {
        &self.a * x * x + &self.b * x * y + &self.c * y * y
    }

    /// `B² - 4AC`.
    pub fn discriminant(&self) -> BigInt {
        &self.b * &self.b - BigInt::from(4) * &self.a * &self.c
    }

    /// The form `f(αx + βy, γx + δy)`.
    pub fn substitute(&self, alpha: i64, beta: i64, gamma: i64, delta: i64) -> QuadForm {
        let (al, be, ga, de) = (
            BigInt::from(alpha),
            BigInt::from(beta),
            BigInt::from(gamma),
            BigInt::from(delta),
        );
        let (a, b, c) = (&self.a, &self.b, &self.c);
        QuadForm {
            a: a * &al * &al + b * &al * &ga + c * &ga * &ga,
            b: a * BigInt::from(2) * &al * &be
                + b * (&al * &de + &be * &ga)
                + c * BigInt::from(2) * &ga * &de,
            c: a * &be * &be + b * &be * &de + c * &de * &de,
        }
    }
}

impl fmt::Display for QuadForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let term = |coef: &BigInt, mono: &str, first: bool| -> String {
            let sign = if coef.is_negative() {
                if first { "-" } else { " - " }
            } else if first {
                ""
            } else {
                " + "
            };
            format!("{sign}{}{mono}", coef.magnitude())
        };
        write!(
            f,
            "{}{}{}",
            term(&self.a, "x^2", true),
            term(&self.b, "xy", false),
            term(&self.c, "y^2", false)
        )
    }
}

/// `M_s` for any nonempty `s`; `det = (-1)^n`.
pub fn reduced_matrix(s: &Seq) -> Result<Mat2> {
    let n = s.len();
    if n == 0 {
        return Err(Error::EmptySequence);
    }
    Ok(Mat2 {
        a: to_bigint(&s.partial_continuant(2, n - 1)?),
        c: to_bigint(&s.partial_continuant(2, n)?),
        b: to_bigint(&s.partial_continuant(1, n - 1)?),
        d: to_bigint(&s.continuant()),
    })
}

/// Map A: an even sequence to its reduced matrix (`det = +1`).
pub fn map_a(s: &Seq) -> Result<Mat2> {
    s.require_even_nonempty()?;
    reduced_matrix(s)
}

/// Map B: a reduced matrix back to its sequence, the odd expansion of `b/a`
/// followed by `⌊(d-1)/b⌋`.
pub fn map_b(m: &Mat2) -> Result<Seq> {
    if !m.det().is_one() {
        return Err(Error::Determinant(m.det().to_string()));
    }
    if m.a < BigInt::one() {
        return Err(Error::Precondition(format!("map B needs a >= 1, got {m}")));
    }
    if !(m.d > m.b && m.b >= m.a) {
        return Err(Error::Precondition(format!(
            "map B needs d > b >= a, got {m}"
        )));
    }
    let head = rational_to_cf(&m.b, &m.a, CfParity::Odd)?.into_seq()?;
    let last = (&m.d - 1u32) / &m.b;
    let last = last.to_biguint().expect("d > b > 0");
    let mut elems = head.elements().to_vec();
    elems.push(last);
    let s = Seq::new(elems)?;
    if reduced_matrix(&s)? != *m {
        return Err(Error::Precondition(format!("{m} is not a reduced matrix")));
    }
    Ok(s)
}

/// Map C: the form associated to an even sequence,
/// `K_1^{n-1} x² + (K_1^n - K_2^{n-1}) xy - K_2^n y²`.
pub fn map_c(s: &Seq) -> Result<QuadForm> {
    Ok(map_e(&map_a(s)?))
}

/// Map E: `b x² + (d - a) xy - c y²`.
pub fn map_e(m: &Mat2) -> QuadForm {
    QuadForm { a: m.b.clone(), b: &m.d - &m.a, c: -&m.c }
}

/// Map F: the matrix `(a, -C; A, a + B)` with `a = (-B + √(B² - 4AC + 4)) / 2`.
pub fn map_f(f: &QuadForm) -> Result<Mat2> {
    let shifted = f.discriminant() + BigInt::from(4);
    if shifted.is_negative() {
        return Err(Error::NotAssociated(f.to_string()));
    }
    let mag = shifted.magnitude();
    let root = mag.sqrt();
    if &root * &root != *mag {
        return Err(Error::NotAssociated(format!("{f}: B^2 - 4AC + 4 is not a square")));
    }
    let num = -&f.b + BigInt::from_biguint(Sign::Plus, root);
    if num.is_odd() {
        return Err(Error::NotAssociated(format!("{f}: parity failure")));
    }
    let a = num / 2;
    let d = &a + &f.b;
    Ok(Mat2 { a, c: -&f.c, b: f.a.clone(), d })
}

/// Map D: `B ∘ F`.
pub fn form_to_seq(f: &QuadForm) -> Result<Seq> {
    map_b(&map_f(f)?)
}

pub fn discriminant(f: &QuadForm) -> BigInt {
    f.discriminant()
}

/// Map W: `√(t(s)² - 4) / K̆(s)`.
pub fn map_w(s: &Seq) -> Result<RadicalRatio> {
    s.require_even_nonempty()?;
    let t = s.trace_coefficient()?;
    let n = &t * &t - 4u32;
    RadicalRatio::new(n, s.breve()?)
}

/// Map X: `√Δ(f) / f(1, 0)`.
pub fn map_x(f: &QuadForm) -> Result<RadicalRatio> {
    let a = f.a.to_biguint().filter(|a| !a.is_zero()).ok_or_else(|| {
        Error::Precondition(format!("map X needs f(1,0) > 0, got {}", f.a))
    })?;
    let disc = f
        .discriminant()
        .to_biguint()
        .filter(|d| !d.is_zero())
        .ok_or_else(|| Error::Precondition(format!("map X needs a positive discriminant: {f}")))?;
    RadicalRatio::new(disc, a)
}

/// Map Z: `√((a + d)² - 4) / b`.
pub fn map_z(m: &Mat2) -> Result<RadicalRatio> {
    let b = m.b.to_biguint().filter(|b| !b.is_zero()).ok_or_else(|| {
        Error::Precondition(format!("map Z needs b > 0, got {m}"))
    })?;
    let t = m.trace();
    let n = (&t * &t - BigInt::from(4))
        .to_biguint()
        .filter(|n| !n.is_zero())
        .ok_or_else(|| Error::Precondition(format!("map Z needs |trace| > 2, got {m}")))?;
    RadicalRatio::new(n, b)
}
