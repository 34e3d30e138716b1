//! Search for repeated values in generalised Markov trees.
//!
//! Nodes are carried as matrix triples `(M_α, M_β, M_γ)`: `K̆` of a sequence
//! is the lower-left entry of its matrix, `t` is the trace, and concatenation
//! is multiplication. Sequences are rebuilt only for the reported members.
//!
//! Middle sequences grow like Fibonacci numbers along zig-zag paths, so all
//! `2^{depth+1} - 1` nodes cannot be visited at depth 24. The default
//! [`SearchMode::ValueCapped`] visits every node of depth at most `depth` whose
//! middle number is at most the smaller of the middles at `L^depth` and
//! `R^depth`. Middles strictly increase down the tree, so pruning at the cap
//! loses nothing below it.

use std::collections::BTreeMap;

use num_bigint::BigUint;
#[cfg(test)]
use num_bigint::BigInt;

use super::{Dir, FareyCode, MAX_ENUMERATION_DEPTH};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::matform::{map_a, Mat2};
use crate::seq::Seq;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CollisionKey {
    /// Group nodes by their middle number.
    Middle,
    /// Group nodes by the unordered number triple.
    Triple,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMode {
    /// Every node to `depth` with middle not above the cap described in the
    /// module docs.
    ValueCapped,
    /// Every node to `depth`, failing if that exceeds `node_budget`.
    FullDepth { node_budget: u64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CollisionConfig {
    pub depth: usize,
    pub key: CollisionKey,
    pub mode: SearchMode,
    pub exec: Exec,
}

impl CollisionConfig {
    pub fn new(depth: usize) -> Self {
        CollisionConfig {
            depth,
            key: CollisionKey::Middle,
            mode: SearchMode::ValueCapped,
            exec: Exec::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CollisionGroup {
    /// The shared value (one entry for [`CollisionKey::Middle`], three sorted
    /// entries for [`CollisionKey::Triple`]).
    pub key: Vec<BigUint>,
    /// Codes of the colliding nodes, ordered by Farey coordinate.
    pub members: Vec<FareyCode>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CollisionReport {
    /// Groups ordered by key.
    pub groups: Vec<CollisionGroup>,
    pub nodes_examined: u64,
    /// The middle-number cap in value-capped mode.
    pub cap: Option<BigUint>,
}

#[derive(Clone)]
struct MNode {
    m: [Mat2; 3],
    code: FareyCode,
}

fn breve_of(m: &Mat2) -> BigUint {
    m.b.to_biguint().expect("reduced matrices have positive entries")
}

fn child(n: &MNode, dir: Dir) -> Result<MNode> {
    let [l, mid, r] = &n.m;
    let (m, expected) = match dir {
        Dir::L => ([l.clone(), l.mul(mid), mid.clone()], l.trace() * &mid.b - &r.b),
        Dir::R => ([mid.clone(), mid.mul(r), r.clone()], r.trace() * &mid.b - &l.b),
    };
    if m[1].b != expected {
        return Err(Error::Inconsistency(format!(
            "recursion gives {expected} but the product matrix gives {}",
            m[1].b
        )));
    }
    Ok(MNode { m, code: n.code.push(dir) })
}

fn chain_middle(root: &MNode, dir: Dir, depth: usize) -> Result<BigUint> {
    let mut n = root.clone();
    for _ in 0..depth {
        n = child(&n, dir)?;
    }
    Ok(breve_of(&n.m[1]))
}

pub fn collision_search(mu: &Seq, nu: &Seq, cfg: &CollisionConfig) -> Result<CollisionReport> {
    let (ma, mb) = (map_a(mu)?, map_a(nu)?);
    let root = MNode { m: [ma.clone(), ma.mul(&mb), mb], code: FareyCode::root() };
    let cap = match cfg.mode {
        SearchMode::ValueCapped => {
            let l = chain_middle(&root, Dir::L, cfg.depth)?;
            let r = chain_middle(&root, Dir::R, cfg.depth)?;
            Some(l.min(r))
        }
        SearchMode::FullDepth { node_budget } => {
            if cfg.depth > MAX_ENUMERATION_DEPTH
                || (1u64 << (cfg.depth + 1)) - 1 > node_budget
            {
                return Err(Error::ResourceLimit(format!(
                    "full enumeration to depth {} exceeds the node budget {node_budget}",
                    cfg.depth
                )));
            }
            None
        }
    };
    let keep = |n: &MNode| cap.as_ref().is_none_or(|c| breve_of(&n.m[1]) <= *c);

    let mut found: Vec<(Vec<BigUint>, FareyCode)> = Vec::new();
    let mut examined = 0u64;
    let mut level = if keep(&root) { vec![root] } else { Vec::new() };
    for d in 0..=cfg.depth {
        if level.is_empty() {
            break;
        }
        examined += level.len() as u64;
        for n in &level {
            let key = match cfg.key {
                CollisionKey::Middle => vec![breve_of(&n.m[1])],
                CollisionKey::Triple => {
                    let mut k: Vec<BigUint> = n.m.iter().map(breve_of).collect();
                    k.sort();
                    k
                }
            };
            found.push((key, n.code.clone()));
        }
        if d == cfg.depth {
            break;
        }
        let next: Vec<Result<MNode>> = cfg.exec.flat_map(&level, |n| {
            [Dir::L, Dir::R]
                .into_iter()
                .map(|dir| child(n, dir))
                .filter(|c| c.as_ref().map_or(true, keep))
                .collect()
        });
        level = next.into_iter().collect::<Result<_>>()?;
    }

    let mut groups: BTreeMap<Vec<BigUint>, Vec<FareyCode>> = BTreeMap::new();
    for (k, code) in found {
        groups.entry(k).or_default().push(code);
    }
    let groups = groups
        .into_iter()
        .filter(|(_, v)| v.len() > 1)
        .map(|(key, mut members)| {
            members.sort_by_key(|c| c.coordinate());
            CollisionGroup { key, members }
        })
        .collect();
    Ok(CollisionReport { groups, nodes_examined: examined, cap })
}

/// `K̆` of the middle at `code`, computed through matrices.
#[cfg(test)]
pub(crate) fn middle_number_at(mu: &Seq, nu: &Seq, code: &FareyCode) -> Result<BigInt> {
    let (ma, mb) = (map_a(mu)?, map_a(nu)?);
    let mut n = MNode { m: [ma.clone(), ma.mul(&mb), mb], code: FareyCode::root() };
    for d in code.word() {
        n = child(&n, d)?;
    }
    Ok(n.m[1].b.clone())
}
