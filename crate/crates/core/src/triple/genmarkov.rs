//! Generalised Markov trees `T_{μ,ν}` and structural checks on `G_⊕(μ, ν)`.

use std::cmp::Ordering;
use std::collections::HashSet;

use num_bigint::{BigInt, BigUint};

use super::{
    enumerate, farey_root, node_at, sequence_root, ConcatOp, Dir, FareyCode, FareyOp, TripleNode,
    MAX_ENUMERATION_DEPTH,
};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::sail::is_extremal;
use crate::seq::{skew_lex_compare, Seq};

/// A node of `G_⊕(μ, ν)` together with the `K̆` value of each entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenMarkovNode {
    pub seqs: TripleNode<Seq>,
    pub nums: [BigUint; 3],
}

impl GenMarkovNode {
    pub fn code(&self) -> &FareyCode {
        &self.seqs.code
    }

    pub fn middle_number(&self) -> &BigUint {
        &self.nums[1]
    }
}

pub fn gen_markov_root(mu: &Seq, nu: &Seq) -> Result<GenMarkovNode> {
    let seqs = sequence_root(mu, nu);
    let nums = [seqs.left.breve()?, seqs.middle.breve()?, seqs.right.breve()?];
    Ok(GenMarkovNode { seqs, nums })
}

/// One step down `T_{μ,ν}`.
///
/// The new middle number comes from the recursion
/// `K̆(α α ρ) = t(α)·K̆(α ρ) - K̆(ρ)`: `t(left)·b - c` for `L` and
/// `t(right)·b - a` for `R`. It is checked against `K̆` of the concatenated
/// middle sequence; a mismatch is an [`Error::Inconsistency`].
pub fn gen_markov_child(node: &GenMarkovNode, dir: Dir) -> Result<GenMarkovNode> {
    let [a, b, c] = &node.nums;
    let s = &node.seqs;
    let (middle_seq, left, right, outer_t, sub) = match dir {
        Dir::L => (s.left.concat(&s.middle), (&s.left, a), (&s.middle, b), s.left.trace_coefficient()?, c),
        Dir::R => (s.middle.concat(&s.right), (&s.middle, b), (&s.right, c), s.right.trace_coefficient()?, a),
    };
    let prod = BigInt::from(outer_t * b) - BigInt::from(sub.clone());
    let direct = middle_seq.breve()?;
    if prod != BigInt::from(direct.clone()) {
        return Err(Error::Inconsistency(format!(
            "recursion gives {prod} but K̆({}) = {direct}",
            middle_seq.to_literal()
        )));
    }
    Ok(GenMarkovNode {
        seqs: TripleNode {
            left: left.0.clone(),
            middle: middle_seq,
            right: right.0.clone(),
            code: s.code.push(dir),
        },
        nums: [left.1.clone(), direct, right.1.clone()],
    })
}

/// All nodes of `T_{μ,ν}` to `depth`, breadth first, each checked by
/// [`gen_markov_child`].
pub fn enumerate_gen_markov(mu: &Seq, nu: &Seq, depth: usize, exec: Exec) -> Result<Vec<GenMarkovNode>> {
    if depth > MAX_ENUMERATION_DEPTH {
        return Err(Error::ResourceLimit(format!(
            "enumeration depth {depth} exceeds {MAX_ENUMERATION_DEPTH}"
        )));
    }
    let mut out = Vec::new();
    let mut level = vec![gen_markov_root(mu, nu)?];
    for d in 0..=depth {
        if d < depth {
            let next: Vec<Result<GenMarkovNode>> = exec.flat_map(&level, |n| {
                vec![gen_markov_child(n, Dir::L), gen_markov_child(n, Dir::R)]
            });
            let next = next.into_iter().collect::<Result<Vec<_>>>()?;
            out.append(&mut level);
            level = next;
        } else {
            out.append(&mut level);
        }
    }
    Ok(out)
}

/// The node of `G_⊕(μ, ν)` at `code`.
pub fn sequence_node_at(mu: &Seq, nu: &Seq, code: &FareyCode) -> Result<TripleNode<Seq>> {
    node_at(&sequence_root(mu, nu), code, &ConcatOp)
}

/// Whether every Farey-graph middle to `depth` equals its Farey coordinate.
pub fn farey_middle_identity_check(depth: usize) -> Result<bool> {
    let nodes = enumerate(farey_root(), &FareyOp, depth, Exec::default())?;
    Ok(nodes.iter().all(|n| n.middle == n.code.coordinate()))
}

/// Which of the Markov LLS triple-graph conditions hold for `(μ, ν)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphReport {
    pub evenly_prime: bool,
    /// `⟨μ⟩ ≺ ⟨ν⟩`.
    pub order: bool,
    /// `⟨reverse μ⟩ ≺ ⟨reverse ν⟩`.
    pub order_reversed: bool,
    pub extremal_mu: bool,
    pub extremal_nu: bool,
    /// Every sequence in every triple to `depth` is evenly palindromic.
    pub palindromic: bool,
    pub depth: usize,
}

impl GraphReport {
    pub fn almost_markov(&self) -> bool {
        self.evenly_prime && self.order && self.order_reversed && self.extremal_mu && self.extremal_nu
    }

    pub fn markov(&self) -> bool {
        self.almost_markov() && self.palindromic
    }
}

fn precedes(a: &Seq, b: &Seq) -> Result<bool> {
    Ok(skew_lex_compare(&a.periodic()?, &b.periodic()?) == Ordering::Less)
}

pub fn verify_markov_llsgraph(mu: &Seq, nu: &Seq, depth: usize) -> Result<GraphReport> {
    mu.require_even_nonempty()?;
    nu.require_even_nonempty()?;
    let evenly_prime = mu.is_evenly_prime()? && nu.is_evenly_prime()?;
    let order = precedes(mu, nu)?;
    let order_reversed = precedes(&mu.reverse(), &nu.reverse())?;
    let extremal_mu = is_extremal(mu)?.extremal;
    let extremal_nu = is_extremal(nu)?.extremal;
    let nodes = enumerate(sequence_root(mu, nu), &ConcatOp, depth, Exec::default())?;
    let mut palindromic = mu.is_evenly_palindromic()? && nu.is_evenly_palindromic()?;
    for n in &nodes {
        if !palindromic {
            break;
        }
        palindromic = n.middle.is_evenly_palindromic()?;
    }
    Ok(GraphReport { evenly_prime, order, order_reversed, extremal_mu, extremal_nu, palindromic, depth })
}

fn require_ordered_prime(mu: &Seq, nu: &Seq) -> Result<()> {
    mu.require_even_nonempty()?;
    nu.require_even_nonempty()?;
    if !(mu.is_evenly_prime()? && nu.is_evenly_prime()?) {
        return Err(Error::Precondition("seeds must be evenly prime".into()));
    }
    if !precedes(mu, nu)? {
        return Err(Error::Precondition(format!(
            "seeds must satisfy <{}> < <{}> skew-lexicographically",
            mu.to_literal(),
            nu.to_literal()
        )));
    }
    Ok(())
}

/// Whether the middles of `G_⊕(μ, ν)` to `depth` increase skew-lexicographically
/// (as periodisations) with the Farey coordinate.
pub fn monotonicity_check(mu: &Seq, nu: &Seq, depth: usize) -> Result<bool> {
    require_ordered_prime(mu, nu)?;
    let mut nodes = enumerate(sequence_root(mu, nu), &ConcatOp, depth, Exec::default())?;
    nodes.sort_by_key(|n| n.code.coordinate());
    for w in nodes.windows(2) {
        if !precedes(&w[0].middle, &w[1].middle)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The node of `G_⊕(μ, ν)` whose middle is `target`, found by descending
/// with skew-lexicographic comparisons; `None` if it is not within `max_depth`.
pub fn reconstruct_from_middle(target: &Seq, mu: &Seq, nu: &Seq, max_depth: usize) -> Result<Option<TripleNode<Seq>>> {
    require_ordered_prime(mu, nu)?;
    if target.is_empty() {
        return Ok(None);
    }
    let t = target.periodic()?;
    let mut node = sequence_root(mu, nu);
    for _ in 0..=max_depth {
        if node.middle == *target {
            return Ok(Some(node));
        }
        if node.middle.len() >= target.len() {
            return Ok(None);
        }
        let dir = match skew_lex_compare(&t, &node.middle.periodic()?) {
            Ordering::Less => Dir::L,
            Ordering::Greater => Dir::R,
            Ordering::Equal => return Ok(None),
        };
        node = super::step(&node, dir, &ConcatOp)?;
    }
    Ok(None)
}

/// Whether all triples to `depth` are pairwise distinct.
pub fn freely_generated(mu: &Seq, nu: &Seq, depth: usize) -> Result<bool> {
    let nodes = enumerate(sequence_root(mu, nu), &ConcatOp, depth, Exec::default())?;
    let mut seen = HashSet::with_capacity(nodes.len());
    Ok(nodes.iter().all(|n| seen.insert((&n.left, &n.middle, &n.right))))
}
