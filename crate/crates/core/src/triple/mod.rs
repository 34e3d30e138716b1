//! Triple-graphs: binary trees of triples grown by a ternary operation.
//!
//! A node `(a, b, c)` has children `L(a, b, c) = (a, σ(a, b, c), b)` and
//! `R(a, b, c) = (b, σ(b, c, a), c)`. Nodes carry their Farey code instead of
//! parent links, so every node is reconstructible from the root.

mod genmarkov;
mod search;

pub use genmarkov::{
    enumerate_gen_markov, farey_middle_identity_check, freely_generated, gen_markov_child, gen_markov_root,
    monotonicity_check, reconstruct_from_middle, sequence_node_at, verify_markov_llsgraph,
    GenMarkovNode, GraphReport,
};
pub use search::{
    collision_search, CollisionConfig, CollisionGroup, CollisionKey, CollisionReport, SearchMode,
};

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::matform::Mat2;
use crate::seq::{continuant, Seq};

/// Enumeration depth beyond which [`enumerate`] refuses to run.
pub const MAX_ENUMERATION_DEPTH: usize = 22;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Dir {
    L,
    R,
}

/// Run-length code `(a_1, ..., a_{2n})` of the word
/// `L^{a_1} R^{a_2} ... L^{a_{2n-1}} R^{a_{2n}}` read from the root.
///
/// Stored canonically: even length, interior entries positive. The root is
/// `(0, 0)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FareyCode(Vec<u64>);

impl Default for FareyCode {
    fn default() -> Self {
        FareyCode::root()
    }
}

impl FareyCode {
    pub fn root() -> Self {
        FareyCode(vec![0, 0])
    }

    pub fn from_exponents(e: Vec<u64>) -> Result<Self> {
        let n = e.len();
        if n < 2 || n % 2 == 1 || e[1..n - 1].contains(&0) {
            return Err(Error::Parse(format!("invalid Farey code {e:?}")));
        }
        Ok(FareyCode(e))
    }

    pub fn exponents(&self) -> &[u64] {
        &self.0
    }

    pub fn depth(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn push(&self, dir: Dir) -> Self {
        let mut e = self.0.clone();
        let n = e.len();
        match dir {
            Dir::R => e[n - 1] += 1,
            Dir::L if e[n - 1] == 0 => e[n - 2] += 1,
            Dir::L => e.extend([1, 0]),
        }
        FareyCode(e)
    }

    /// The L/R word from the root.
    pub fn word(&self) -> Vec<Dir> {
        let mut w = Vec::new();
        for (i, &k) in self.0.iter().enumerate() {
            let d = if i % 2 == 0 { Dir::L } else { Dir::R };
            w.extend(std::iter::repeat_n(d, k as usize));
        }
        w
    }

    pub fn from_word(word: &[Dir]) -> Self {
        word.iter().fold(FareyCode::root(), |c, &d| c.push(d))
    }

    /// `[0; a_1 + 1, a_2, ..., a_{2n-1}, a_{2n} + 1]`.
    pub fn coordinate(&self) -> BigRational {
        let n = self.0.len();
        let tail: Vec<BigUint> = self
            .0
            .iter()
            .enumerate()
            .map(|(i, &a)| BigUint::from(a + u64::from(i == 0) + u64::from(i == n - 1)))
            .collect();
        let num = continuant(&tail[1..]);
        let den = continuant(&tail);
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }
}

impl fmt::Display for FareyCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A vertex of a triple-graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TripleNode<T> {
    pub left: T,
    pub middle: T,
    pub right: T,
    pub code: FareyCode,
}

impl<T> TripleNode<T> {
    pub fn root(left: T, middle: T, right: T) -> Self {
        TripleNode { left, middle, right, code: FareyCode::root() }
    }

    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> TripleNode<U> {
        TripleNode {
            left: f(&self.left),
            middle: f(&self.middle),
            right: f(&self.right),
            code: self.code.clone(),
        }
    }
}

/// The operation of a triple-graph.
pub trait TripleOp<T>: Sync {
    /// `σ(a, b, c)`, the middle of `L(a, b, c)`.
    fn left_middle(&self, a: &T, b: &T, c: &T) -> Result<T>;
    /// `σ(b, c, a)`, the middle of `R(a, b, c)`.
    fn right_middle(&self, a: &T, b: &T, c: &T) -> Result<T>;
}

/// Lifts a ternary function `σ` to a [`TripleOp`].
pub struct Sigma<F>(pub F);

impl<T, F> TripleOp<T> for Sigma<F>
where
    F: Fn(&T, &T, &T) -> T + Sync,
{
    fn left_middle(&self, a: &T, b: &T, c: &T) -> Result<T> {
        Ok((self.0)(a, b, c))
    }

    fn right_middle(&self, a: &T, b: &T, c: &T) -> Result<T> {
        Ok((self.0)(b, c, a))
    }
}

pub fn step<T: Clone>(node: &TripleNode<T>, dir: Dir, op: &impl TripleOp<T>) -> Result<TripleNode<T>> {
    let (a, b, c) = (&node.left, &node.middle, &node.right);
    Ok(match dir {
        Dir::L => TripleNode {
            middle: op.left_middle(a, b, c)?,
            left: a.clone(),
            right: b.clone(),
            code: node.code.push(Dir::L),
        },
        Dir::R => TripleNode {
            middle: op.right_middle(a, b, c)?,
            left: b.clone(),
            right: c.clone(),
            code: node.code.push(Dir::R),
        },
    })
}

/// Follows `code` from `root`.
pub fn node_at<T: Clone>(root: &TripleNode<T>, code: &FareyCode, op: &impl TripleOp<T>) -> Result<TripleNode<T>> {
    code.word().into_iter().try_fold(root.clone(), |n, d| step(&n, d, op))
}

/// All nodes to `depth`, breadth first and left before right
/// (`2^{depth+1} - 1` nodes).
pub fn enumerate<T>(root: TripleNode<T>, op: &impl TripleOp<T>, depth: usize, exec: Exec) -> Result<Vec<TripleNode<T>>>
where
    T: Clone + Send + Sync,
{
    let mut out = Vec::new();
    enumerate_levels(root, op, depth, exec, |level| {
        out.extend_from_slice(level);
        Ok(())
    })?;
    Ok(out)
}

/// Like [`enumerate`] but hands each level to `sink` instead of collecting.
pub fn enumerate_levels<T, S>(root: TripleNode<T>, op: &impl TripleOp<T>, depth: usize, exec: Exec, mut sink: S) -> Result<()>
where
    T: Clone + Send + Sync,
    S: FnMut(&[TripleNode<T>]) -> Result<()>,
{
    if depth > MAX_ENUMERATION_DEPTH {
        return Err(Error::ResourceLimit(format!(
            "enumeration depth {depth} exceeds {MAX_ENUMERATION_DEPTH}"
        )));
    }
    let mut level = vec![root];
    for d in 0..=depth {
        sink(&level)?;
        if d == depth {
            break;
        }
        let next: Vec<Result<TripleNode<T>>> = exec.flat_map(&level, |n| {
            vec![step(n, Dir::L, op), step(n, Dir::R, op)]
        });
        level = next.into_iter().collect::<Result<_>>()?;
    }
    Ok(())
}

/// Farey graph: `σ(x, y, z)` is the mediant of `x` and `y`.
pub struct FareyOp;

impl TripleOp<BigRational> for FareyOp {
    fn left_middle(&self, a: &BigRational, b: &BigRational, _: &BigRational) -> Result<BigRational> {
        Ok(mediant(a, b))
    }

    fn right_middle(&self, _: &BigRational, b: &BigRational, c: &BigRational) -> Result<BigRational> {
        Ok(mediant(b, c))
    }
}

fn mediant(x: &BigRational, y: &BigRational) -> BigRational {
    BigRational::new(x.numer() + y.numer(), x.denom() + y.denom())
}

pub fn farey_root() -> TripleNode<BigRational> {
    let r = |p: i64, q: i64| BigRational::new(p.into(), q.into());
    TripleNode::root(r(0, 1), r(1, 2), r(1, 1))
}

/// Classical Markov numbers: `σ(x, y, z) = 3xy - z`.
pub struct ClassicalOp;

impl TripleOp<BigInt> for ClassicalOp {
    fn left_middle(&self, a: &BigInt, b: &BigInt, c: &BigInt) -> Result<BigInt> {
        Ok(BigInt::from(3) * a * b - c)
    }

    fn right_middle(&self, a: &BigInt, b: &BigInt, c: &BigInt) -> Result<BigInt> {
        Ok(BigInt::from(3) * b * c - a)
    }
}

pub fn classical_root() -> TripleNode<BigInt> {
    TripleNode::root(BigInt::from(1), BigInt::from(5), BigInt::from(2))
}

/// Sequences under concatenation: `σ(x, y, z) = x ⊕ y`.
pub struct ConcatOp;

impl TripleOp<Seq> for ConcatOp {
    fn left_middle(&self, a: &Seq, b: &Seq, _: &Seq) -> Result<Seq> {
        Ok(a.concat(b))
    }

    fn right_middle(&self, _: &Seq, b: &Seq, c: &Seq) -> Result<Seq> {
        Ok(b.concat(c))
    }
}

/// `(μ, μ⊕ν, ν)`.
pub fn sequence_root(mu: &Seq, nu: &Seq) -> TripleNode<Seq> {
    TripleNode::root(mu.clone(), mu.concat(nu), nu.clone())
}

/// Matrices under multiplication: `σ(x, y, z) = x·y`.
pub struct MatrixOp;

impl TripleOp<Mat2> for MatrixOp {
    fn left_middle(&self, a: &Mat2, b: &Mat2, _: &Mat2) -> Result<Mat2> {
        Ok(a.mul(b))
    }

    fn right_middle(&self, _: &Mat2, b: &Mat2, c: &Mat2) -> Result<Mat2> {
        Ok(b.mul(c))
    }
}

pub fn matrix_root(m: &Mat2, n: &Mat2) -> TripleNode<Mat2> {
    TripleNode::root(m.clone(), m.mul(n), n.clone())
}
