//! Total dimensions of BPS cohomology: score sequences of one-vertex loop
//! quivers, symmetric powers, assembly over `S^d_δ` and the resulting
//! topological K-theory dimensions.
//!
//! Symmetric powers follow the even rule on total dimensions,
//! `dim Sym^m(V) = C(n + m − 1, m)` for `dim V = n`.

use std::collections::BTreeMap;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::par::Exec;
use crate::partitions::s_set;
use crate::quiver::{DimVector, Quiver};
use crate::weights::CentralWeight;
use crate::{Error, Result};

/// Coordinate range `[⌈v/d⌉ − 2g(d−1), ⌊v/d⌋ + 2g(d−1)]` of score sequences.
pub fn score_bounds(g: u32, d: u32, v: i64) -> (i64, i64) {
    let d = d.max(1) as i64;
    let spread = 2 * g as i64 * (d - 1);
    (Integer::div_ceil(&v, &d) - spread, Integer::div_floor(&v, &d) + spread)
}

/// Visits every `(c̃_1, …, c̃_d)` with `c̃_i − c̃_{i−1} + 2g ≥ 0`,
/// `Σ_{i>d−k} c̃_i ≤ vk/d` for `1 ≤ k ≤ d`, and `Σ c̃_i = v`.
pub fn for_each_score_sequence<F: FnMut(&[i64])>(g: u32, d: u32, v: i64, mut visit: F) -> Result<()> {
    if d == 0 {
        return Err(Error::ZeroDimension);
    }
    let (lo, hi) = score_bounds(g, d, v);
    let n = d as usize;
    // Filled from the last coordinate backwards, so every prefix of the
    // walk is a suffix of the sequence.
    let mut rev: Vec<i64> = Vec::with_capacity(n);
    walk(g as i64, n, v, lo, hi, &mut rev, 0, &mut visit);
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn walk<F: FnMut(&[i64])>(
    g: i64,
    n: usize,
    v: i64,
    lo: i64,
    hi: i64,
    rev: &mut Vec<i64>,
    sum: i64,
    visit: &mut F,
) {
    let k = rev.len();
    if k == n {
        if sum == v {
            let seq: Vec<i64> = rev.iter().rev().copied().collect();
            visit(&seq);
        }
        return;
    }
    let top = match rev.last() {
        Some(&next) => hi.min(next + 2 * g),
        None => hi,
    };
    let left = (n - k - 1) as i64;
    for c in lo..=top {
        let s = sum + c;
        // d·(suffix sum) ≤ v·(suffix length)
        if (n as i64) * s > v * (k as i64 + 1) {
            break;
        }
        if s + left * hi < v {
            continue;
        }
        if s + left * lo > v {
            break;
        }
        rev.push(c);
        walk(g, n, v, lo, hi, rev, s, visit);
        rev.pop();
    }
}

/// `|𝓗^{2g+1}_{d,v}|`.
pub fn score_sequence_count(g: u32, d: u32, v: i64) -> Result<u64> {
    let mut count = 0u64;
    for_each_score_sequence(g, d, v, |_| count += 1)?;
    Ok(count)
}

/// Number of integer partitions of `n`.
pub fn partition_count_p2(n: usize) -> u128 {
    let mut table = vec![0u128; n + 1];
    table[0] = 1;
    for part in 1..=n {
        for total in part..=n {
            table[total] += table[total - part];
        }
    }
    table[n]
}

/// `C(n + m − 1, m)`.
pub fn sym_power_dim(n: u128, m: u64) -> Result<u128> {
    let mut out: u128 = 1;
    for i in 1..=m as u128 {
        // out = C(n + i − 2, i − 1) here, so the division is exact.
        let factor = (n + i).checked_sub(1).ok_or(Error::Overflow("sym_power_dim"))?;
        if factor == 0 {
            return Ok(0);
        }
        out = out
            .checked_mul(factor)
            .ok_or(Error::Overflow("sym_power_dim"))?
            / i;
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MonodromyKind {
    #[default]
    Trivial,
    Nontrivial,
}

/// Monodromy data needed to pass from cohomology to K-theory.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Monodromy {
    Trivial,
    /// Nontrivial monodromy with the invariant dimension, if supplied.
    Nontrivial { invariant: Option<u128> },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Flavor {
    MatrixFactorization,
    Preprojective,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BlockEntry {
    pub e: Vec<u32>,
    pub dim: u128,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTable {
    blocks: Vec<BlockEntry>,
    #[serde(default)]
    monodromy: MonodromyKind,
    /// Used for parts without an entry.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    default_dim: Option<u128>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    invariant_dim: Option<u128>,
}

/// Total dimensions of `H*(X(e), 𝓑𝓟𝓢_e)` per dimension vector `e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDimTable {
    entries: BTreeMap<DimVector, u128>,
    default_dim: Option<u128>,
    monodromy: MonodromyKind,
    invariant_dim: Option<u128>,
}

impl BlockDimTable {
    pub fn new(entries: BTreeMap<DimVector, u128>, default_dim: Option<u128>) -> Self {
        BlockDimTable {
            entries,
            default_dim,
            monodromy: MonodromyKind::Trivial,
            invariant_dim: None,
        }
    }

    pub fn with_monodromy(mut self, kind: MonodromyKind, invariant_dim: Option<u128>) -> Self {
        self.monodromy = kind;
        self.invariant_dim = invariant_dim;
        self
    }

    /// `{"blocks":[{"e":[..],"dim":n}],"monodromy":"trivial"}`, optionally with
    /// `default_dim` and `invariant_dim`.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawTable =
            serde_json::from_str(text).map_err(|e| Error::InvalidBlockTable(e.to_string()))?;
        let mut entries = BTreeMap::new();
        for (k, b) in raw.blocks.into_iter().enumerate() {
            let e = DimVector::new(b.e);
            if e.is_zero() {
                return Err(Error::InvalidBlockTable(format!("blocks[{k}].e is zero")));
            }
            if let Some(width) = entries.keys().next().map(|x: &DimVector| x.len()) {
                if width != e.len() {
                    return Err(Error::InvalidBlockTable(format!(
                        "blocks[{k}].e has {} entries, expected {width}",
                        e.len()
                    )));
                }
            }
            if entries.insert(e.clone(), b.dim).is_some() {
                return Err(Error::InvalidBlockTable(format!("blocks[{k}]: duplicate e = {e}")));
            }
        }
        Ok(BlockDimTable {
            entries,
            default_dim: raw.default_dim,
            monodromy: raw.monodromy,
            invariant_dim: raw.invariant_dim,
        })
    }

    pub fn to_json(&self) -> String {
        let raw = RawTable {
            blocks: self
                .entries
                .iter()
                .map(|(e, &dim)| BlockEntry {
                    e: e.entries().to_vec(),
                    dim,
                })
                .collect(),
            monodromy: self.monodromy,
            default_dim: self.default_dim,
            invariant_dim: self.invariant_dim,
        };
        serde_json::to_string(&raw).expect("block table serializes")
    }

    /// Tripled one-loop quiver: every block is one-dimensional.
    pub fn tripled_one_loop() -> Self {
        BlockDimTable::new(BTreeMap::new(), Some(1))
    }

    /// One-loop quiver without potential: only `e = 1` contributes.
    pub fn one_loop() -> Self {
        BlockDimTable::new(BTreeMap::from([(DimVector::new(vec![1]), 1)]), Some(0))
    }

    /// Toric two-vertex quiver with its potential: the block at `(1,1)`
    /// vanishes, the simple blocks are one-dimensional.
    pub fn toric_with_potential() -> Self {
        BlockDimTable::new(
            BTreeMap::from([
                (DimVector::new(vec![1, 0]), 1),
                (DimVector::new(vec![0, 1]), 1),
                (DimVector::new(vec![1, 1]), 0),
            ]),
            None,
        )
    }

    pub const BUILTIN: [&'static str; 3] = ["tripled-one-loop", "one-loop", "toric"];

    pub fn builtin(name: &str) -> Option<Self> {
        match name {
            "tripled-one-loop" => Some(Self::tripled_one_loop()),
            "one-loop" => Some(Self::one_loop()),
            "toric" => Some(Self::toric_with_potential()),
            _ => None,
        }
    }

    pub fn dim(&self, e: &DimVector) -> Result<u128> {
        self.entries
            .get(e)
            .copied()
            .or(self.default_dim)
            .ok_or_else(|| Error::MissingBlock(e.clone()))
    }

    pub fn monodromy(&self) -> Monodromy {
        match self.monodromy {
            MonodromyKind::Trivial => Monodromy::Trivial,
            MonodromyKind::Nontrivial => Monodromy::Nontrivial {
                invariant: self.invariant_dim,
            },
        }
    }
}

/// `Σ_{A∈S^d_δ} Π_e sym_power_dim(blocks[e], m_e(A))`.
pub fn bps_assembly_dim(
    q: &Quiver,
    d: &DimVector,
    delta: &CentralWeight,
    blocks: &BlockDimTable,
    cutoff: usize,
    exec: Exec,
) -> Result<u128> {
    let mut total: u128 = 0;
    for a in s_set(q, d, delta, cutoff, exec)? {
        let mut term: u128 = 1;
        for (e, m) in a.profile() {
            term = term
                .checked_mul(sym_power_dim(blocks.dim(&e)?, m as u64)?)
                .ok_or(Error::Overflow("bps_assembly_dim"))?;
        }
        total = total
            .checked_add(term)
            .ok_or(Error::Overflow("bps_assembly_dim"))?;
    }
    Ok(total)
}

/// `(dim K₀, dim K₁)` from the assembled BPS dimension.
pub fn ktheory_dim_from_bps(assembly: u128, monodromy: Monodromy, flavor: Flavor) -> Result<(u128, u128)> {
    let inv = match monodromy {
        Monodromy::Trivial => assembly,
        Monodromy::Nontrivial { invariant: Some(k) } => k,
        Monodromy::Nontrivial { invariant: None } => return Err(Error::MissingInvariants),
    };
    Ok(match flavor {
        Flavor::MatrixFactorization => (inv, inv),
        Flavor::Preprojective => (inv, 0),
    })
}
