//! Classical Markov triples and the maps P, Q, R, S, T, Y between triples,
//! LLS periods, forms, matrices and spectrum values.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::to_bigint;
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::matform::{Mat2, QuadForm, RadicalRatio};
use crate::seq::{rational_to_cf, CfParity, Seq};
use crate::triple::{classical_root, enumerate, ClassicalOp, TripleNode};

/// Whether `a² + b² + c² = 3abc`.
pub fn markov_equation_check(a: &BigUint, b: &BigUint, c: &BigUint) -> bool {
    a * a + b * b + c * c == BigUint::from(3u32) * a * b * c
}

/// A solution of the Markov equation stored as `a <= b <= M`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MarkovTriple {
    a: BigUint,
    m: BigUint,
    b: BigUint,
}

impl MarkovTriple {
    /// Accepts the entries in any order.
    pub fn new(x: BigUint, y: BigUint, z: BigUint) -> Result<Self> {
        if x.is_zero() || y.is_zero() || z.is_zero() || !markov_equation_check(&x, &y, &z) {
            return Err(Error::NotMarkov(x.to_string(), y.to_string(), z.to_string()));
        }
        let mut v = [x, y, z];
        v.sort();
        let [a, b, m] = v;
        Ok(MarkovTriple { a, m, b })
    }

    pub fn from_u64(x: u64, y: u64, z: u64) -> Result<Self> {
        Self::new(x.into(), y.into(), z.into())
    }

    pub fn a(&self) -> &BigUint {
        &self.a
    }

    /// The largest entry.
    pub fn m(&self) -> &BigUint {
        &self.m
    }

    pub fn b(&self) -> &BigUint {
        &self.b
    }
}

/// `(a, M, b)` with the auxiliary numbers `u` and `v = (u² + 1) / M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkovFormData {
    pub triple: MarkovTriple,
    pub u: BigUint,
    pub v: BigUint,
}

/// Least positive `u` with `a·u ≡ ±b (mod m)`.
fn least_u(m: &BigUint, a: &BigUint, b: &BigUint) -> Result<BigUint> {
    if *m <= BigUint::one() {
        return Err(Error::Precondition("u is undefined for M = 1".into()));
    }
    let (mi, ai) = (to_bigint(m), to_bigint(a));
    let g = ai.extended_gcd(&mi);
    if !g.gcd.is_one() {
        return Err(Error::Precondition(format!("{a} is not invertible modulo {m}")));
    }
    let inv = g.x.mod_floor(&mi);
    let plus = (to_bigint(b) * &inv).mod_floor(&mi);
    let minus = (-&plus).mod_floor(&mi);
    let mut u = plus.min(minus);
    if u.is_zero() {
        u = mi;
    }
    Ok(u.to_biguint().expect("nonnegative"))
}

fn v_of(u: &BigUint, m: &BigUint, t: &MarkovTriple) -> Result<BigUint> {
    let (v, rem) = (u * u + 1u32).div_rem(m);
    if !rem.is_zero() {
        return Err(Error::NotMarkov(t.a.to_string(), t.m.to_string(), t.b.to_string()));
    }
    Ok(v)
}

pub fn compute_uv(t: &MarkovTriple) -> Result<MarkovFormData> {
    let u = least_u(&t.m, &t.a, &t.b)?;
    let v = v_of(&u, &t.m, t)?;
    Ok(MarkovFormData { triple: t.clone(), u, v })
}

/// Map P: `K̆` of each sequence of a triple.
pub fn map_p(t: &TripleNode<Seq>) -> Result<[BigUint; 3]> {
    Ok([t.left.breve()?, t.middle.breve()?, t.right.breve()?])
}

/// Map Q: the odd expansion `M/u = [a_1; ..., a_{2n-1}]`, reversed, with 2
/// appended.
pub fn map_q(t: &MarkovTriple) -> Result<Seq> {
    let d = compute_uv(t)?;
    let cf = rational_to_cf(&to_bigint(&t.m), &to_bigint(&d.u), CfParity::Odd)?.into_seq()?;
    let mut e: Vec<BigUint> = cf.reverse().elements().to_vec();
    e.push(BigUint::from(2u32));
    Seq::new(e)
}

/// Map S: `M x² + (M + 2u) xy + (u + v - 2M) y²`.
pub fn map_s(t: &MarkovTriple) -> Result<QuadForm> {
    let d = compute_uv(t)?;
    let (m, u, v) = (to_bigint(&t.m), to_bigint(&d.u), to_bigint(&d.v));
    Ok(QuadForm::new(
        m.clone(),
        &m + BigInt::from(2) * &u,
        &u + &v - BigInt::from(2) * &m,
    ))
}

/// Markov's form `m x² + (3m - 2u) xy + (v - 3u) y²` where `m2·u ≡ ±m1 (mod m)`.
pub fn markov_theorem_form(m: &BigUint, m1: &BigUint, m2: &BigUint) -> Result<QuadForm> {
    if !(m >= m1 && m1 >= m2) {
        return Err(Error::Precondition(format!("need m >= m1 >= m2, got ({m}, {m1}, {m2})")));
    }
    let t = MarkovTriple::new(m2.clone(), m.clone(), m1.clone())?;
    let u = least_u(m, m2, m1)?;
    let v = v_of(&u, m, &t)?;
    let (mi, u, v) = (to_bigint(m), to_bigint(&u), to_bigint(&v));
    Ok(QuadForm::new(
        mi.clone(),
        BigInt::from(3) * &mi - BigInt::from(2) * &u,
        v - BigInt::from(3) * &u,
    ))
}

/// Map Y: `√(9M² - 4) / M`.
pub fn map_y(t: &MarkovTriple) -> RadicalRatio {
    let n = BigUint::from(9u32) * &t.m * &t.m - 4u32;
    RadicalRatio::new(n, t.m.clone()).expect("M >= 1")
}

/// Map R: values at `(1, 0)`.
pub fn map_r(forms: &[QuadForm; 3]) -> [BigInt; 3] {
    [forms[0].a.clone(), forms[1].a.clone(), forms[2].a.clone()]
}

/// Map T: lower-left entries.
pub fn map_t(mats: &[Mat2; 3]) -> [BigInt; 3] {
    [mats[0].b.clone(), mats[1].b.clone(), mats[2].b.clone()]
}

/// `(1,1,1)`, `(1,2,1)` and every node of the classical tree to `depth`.
pub fn markov_triples(depth: usize, exec: Exec) -> Result<Vec<MarkovTriple>> {
    let mut out = vec![MarkovTriple::from_u64(1, 1, 1)?, MarkovTriple::from_u64(1, 2, 1)?];
    for n in enumerate(classical_root(), &ClassicalOp, depth, exec)? {
        let e = |x: &BigInt| x.to_biguint().expect("positive");
        out.push(MarkovTriple::new(e(&n.left), e(&n.middle), e(&n.right))?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matform::{map_a, map_c};

    fn u(x: u64) -> BigUint {
        BigUint::from(x)
    }

    fn mt(a: u64, m: u64, b: u64) -> MarkovTriple {
        MarkovTriple::from_u64(a, m, b).unwrap()
    }

    fn rr(n: u64, d: u64) -> RadicalRatio {
        RadicalRatio::new(n.into(), d.into()).unwrap()
    }

    #[test]
    fn equation() {
        assert!(markov_equation_check(&u(1), &u(1), &u(1)));
        assert!(markov_equation_check(&u(1), &u(5), &u(2)));
        assert!(!markov_equation_check(&u(2), &u(3), &u(4)));
        assert!(matches!(MarkovTriple::from_u64(2, 3, 4), Err(Error::NotMarkov(..))));
    }

    #[test]
    fn uv() {
        let d = compute_uv(&mt(1, 5, 2)).unwrap();
        assert_eq!((d.u, d.v), (u(2), u(1)));
        let d = compute_uv(&mt(1, 2, 1)).unwrap();
        assert_eq!((d.u, d.v), (u(1), u(1)));
        let d = compute_uv(&mt(1, 13, 5)).unwrap();
        assert_eq!((d.u, d.v), (u(5), u(2)));
        let d = compute_uv(&mt(2, 29, 5)).unwrap();
        assert_eq!((d.u, d.v), (u(12), u(5)));
        assert!(matches!(compute_uv(&mt(1, 1, 1)), Err(Error::Precondition(_))));
    }

    #[test]
    fn map_p_examples() {
        let t = |a: &[u64], b: &[u64], c: &[u64]| {
            TripleNode::root(Seq::from_u64s(a), Seq::from_u64s(b), Seq::from_u64s(c))
        };
        assert_eq!(map_p(&t(&[1, 1], &[1, 1, 2, 2], &[2, 2])).unwrap(), [u(1), u(5), u(2)]);
        assert_eq!(
            map_p(&t(&[1, 1], &[1, 1, 1, 1, 2, 2], &[1, 1, 2, 2])).unwrap(),
            [u(1), u(13), u(5)]
        );
        assert_eq!(
            map_p(&t(&[4, 4], &[4, 4, 11, 11], &[11, 11])).unwrap(),
            [u(4), u(191), u(11)]
        );
    }

    #[test]
    fn map_q_examples() {
        assert_eq!(map_q(&mt(1, 5, 2)).unwrap(), Seq::from_u64s(&[1, 1, 2, 2]));
        assert_eq!(map_q(&mt(1, 2, 1)).unwrap(), Seq::from_u64s(&[2, 2]));
        assert_eq!(map_q(&mt(1, 13, 5)).unwrap(), Seq::from_u64s(&[1, 1, 1, 1, 2, 2]));
    }

    #[test]
    fn forms() {
        assert_eq!(map_s(&mt(1, 5, 2)).unwrap(), QuadForm::from_i64(5, 9, -7));
        assert_eq!(map_s(&mt(1, 2, 1)).unwrap(), QuadForm::from_i64(2, 4, -2));
        let f = map_s(&mt(1, 13, 5)).unwrap();
        assert_eq!(f, QuadForm::from_i64(13, 23, -19));
        assert_eq!(f.discriminant(), BigInt::from(9 * 169 - 4));
        assert_eq!(markov_theorem_form(&u(5), &u(2), &u(1)).unwrap(), QuadForm::from_i64(5, 11, -5));
        assert_eq!(markov_theorem_form(&u(2), &u(1), &u(1)).unwrap(), QuadForm::from_i64(2, 4, -2));
        assert_eq!(
            markov_theorem_form(&u(13), &u(5), &u(1)).unwrap(),
            QuadForm::from_i64(13, 29, -13)
        );
        assert!(markov_theorem_form(&u(13), &u(4), &u(1)).is_err());
    }

    #[test]
    fn spectrum_values() {
        assert_eq!(map_y(&mt(1, 1, 1)), rr(5, 1));
        assert_eq!(map_y(&mt(1, 5, 2)), rr(221, 5));
        assert_eq!(map_y(&mt(2, 29, 5)), rr(7565, 29));
    }

    #[test]
    fn leading_and_lower_left() {
        let seqs = [
            Seq::from_u64s(&[1, 1]),
            Seq::from_u64s(&[1, 1, 2, 2]),
            Seq::from_u64s(&[2, 2]),
        ];
        let forms = [map_c(&seqs[0]).unwrap(), map_c(&seqs[1]).unwrap(), map_c(&seqs[2]).unwrap()];
        assert_eq!(map_r(&forms), [1.into(), 5.into(), 2.into()]);
        let mats = [map_a(&seqs[0]).unwrap(), map_a(&seqs[1]).unwrap(), map_a(&seqs[2]).unwrap()];
        assert_eq!(map_t(&mats), [1.into(), 5.into(), 2.into()]);
        assert_eq!(map_a(&Seq::from_u64s(&[2, 2, 3, 3])).unwrap().b, BigInt::from(17));
        assert_eq!(map_a(&Seq::from_u64s(&[4, 4])).unwrap().b, BigInt::from(4));
    }

    #[test]
    fn triples_listing() {
        let t = markov_triples(2, Exec::Sequential).unwrap();
        assert_eq!(t.len(), 9);
        assert!(t.contains(&mt(5, 433, 29)));
    }
}
