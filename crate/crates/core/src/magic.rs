//! Counting dominant weights `χ` with `χ + ρ − δ ∈ W(d)`.
//!
//! The sum-zero hyperplane containing `W(d)` forces `⟨1_d, χ⟩ = ⟨1_d, δ⟩`, so
//! the count vanishes unless `⟨1_d, δ⟩` is an integer `v`. Candidates are
//! generated vertex-major with nondecreasing coefficients inside each block,
//! so dominance never has to be filtered, and partial sums are pruned
//! against the per-slot bounds of the bounding box.

use crate::par::{self, Exec};
use crate::quiver::{DimVector, Quiver};
use crate::weights::{ceil_i64, floor_i64, rat, rho, CentralWeight, RationalVector, Weight};
use crate::zonotope::{Membership, MembershipMode, Zonotope};
use crate::{Error, Result, COUNT_CUTOFF};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CountOptions {
    pub mode: MembershipMode,
    pub exec: Exec,
    /// Largest admissible `d̄`.
    pub cutoff: usize,
}

impl Default for CountOptions {
    fn default() -> Self {
        CountOptions {
            mode: MembershipMode::Checked,
            exec: Exec::Parallel,
            cutoff: COUNT_CUTOFF,
        }
    }
}

impl CountOptions {
    pub fn sequential() -> Self {
        CountOptions {
            exec: Exec::Sequential,
            ..Default::default()
        }
    }

    pub fn with_mode(mut self, mode: MembershipMode) -> Self {
        self.mode = mode;
        self
    }
}

/// The search space of one count: slot bounds, block layout and the shift
/// `ρ − δ` taking `χ` to the zonotope point.
struct Search {
    lo: Vec<i64>,
    hi: Vec<i64>,
    block_start: Vec<bool>,
    block_end: Vec<usize>,
    target: i64,
    offset: RationalVector,
}

fn prepare(
    q: &Quiver,
    d: &DimVector,
    delta: &CentralWeight,
    cutoff: usize,
) -> Result<Option<(Search, Zonotope)>> {
    q.require_symmetric()?;
    q.check_dim(d)?;
    if d.is_zero() {
        return Err(Error::ZeroDimension);
    }
    if d.total() > cutoff {
        return Err(Error::CutoffExceeded {
            what: "d̄ for counting",
            value: d.total(),
            limit: cutoff,
        });
    }
    let total = delta.total(d);
    if !total.is_integer() {
        return Ok(None);
    }
    let target = floor_i64(&total)?;
    let z = Zonotope::for_quiver(q, d)?;
    let delta_full = delta.expand(d)?;
    let offset = rho(d).sub(&delta_full);
    let mut lo = Vec::with_capacity(d.total());
    let mut hi = Vec::with_capacity(d.total());
    for (p, (l, h)) in z.bounding_box().iter().enumerate() {
        // x_p = c_p + offset_p ∈ [l, h]
        lo.push(ceil_i64(&(l - &offset.0[p]))?);
        hi.push(floor_i64(&(h - &offset.0[p]))?);
    }
    let mut block_start = vec![false; d.total()];
    let mut block_end = vec![0; d.total()];
    for b in d.blocks() {
        if let Some(first) = block_start.get_mut(b.start) {
            if !b.is_empty() {
                *first = true;
            }
        }
        for p in b.clone() {
            block_end[p] = b.end;
        }
    }
    Ok(Some((
        Search {
            lo,
            hi,
            block_start,
            block_end,
            target,
            offset,
        },
        z,
    )))
}

impl Search {
    fn len(&self) -> usize {
        self.lo.len()
    }

    /// Smallest total of the slots after `p` when slot `p` holds `c`.
    fn rest_min(&self, p: usize, c: i64) -> i64 {
        let end = self.block_end[p];
        let same: i64 = (p + 1..end).map(|r| self.lo[r].max(c)).sum();
        let other: i64 = (end..self.len()).map(|r| self.lo[r]).sum();
        same + other
    }

    fn rest_max(&self, p: usize) -> i64 {
        (p + 1..self.len()).map(|r| self.hi[r]).sum()
    }

    /// Admissible values for slot `p` after the prefix `chosen[..p]`.
    fn range(&self, p: usize, chosen: &[i64], partial: i64) -> Vec<i64> {
        let mut low = self.lo[p];
        if !self.block_start[p] && p > 0 {
            low = low.max(chosen[p - 1]);
        }
        let rest_max = self.rest_max(p);
        let mut out = Vec::new();
        for c in low..=self.hi[p] {
            if partial + c + self.rest_min(p, c) > self.target {
                break;
            }
            if partial + c + rest_max < self.target {
                continue;
            }
            out.push(c);
        }
        out
    }

    fn walk<F>(&self, p: usize, chosen: &mut Vec<i64>, partial: i64, visit: &mut F) -> Result<()>
    where
        F: FnMut(&[i64]) -> Result<()>,
    {
        if p == self.len() {
            if partial == self.target {
                visit(chosen)?;
            }
            return Ok(());
        }
        for c in self.range(p, chosen, partial) {
            chosen.push(c);
            self.walk(p + 1, chosen, partial + c, visit)?;
            chosen.pop();
        }
        Ok(())
    }

    fn point(&self, chi: &[i64]) -> RationalVector {
        RationalVector(
            chi.iter()
                .zip(&self.offset.0)
                .map(|(&c, o)| rat(c) + o)
                .collect(),
        )
    }
}

/// All dominant integral weights with the right total whose zonotope point
/// lies in the bounding box. Membership is not tested.
pub fn candidates(
    q: &Quiver,
    d: &DimVector,
    delta: &CentralWeight,
    cutoff: usize,
) -> Result<Vec<Weight>> {
    let Some((search, _)) = prepare(q, d, delta, cutoff)? else {
        return Ok(Vec::new());
    };
    let mut out = Vec::new();
    search.walk(0, &mut Vec::new(), 0, &mut |chi| {
        out.push(Weight(chi.to_vec()));
        Ok(())
    })?;
    Ok(out)
}

/// `#{χ ∈ M(d)^+ : χ + ρ − δ ∈ W(d)}`.
pub fn magic_dimension(
    q: &Quiver,
    d: &DimVector,
    delta: &CentralWeight,
    opts: &CountOptions,
) -> Result<u64> {
    let Some((search, z)) = prepare(q, d, delta, opts.cutoff)? else {
        return Ok(0);
    };
    let membership = Membership::new(z, opts.mode)?;
    // Split on the leading coefficient of the first block.
    let heads = search.range(0, &[], 0);
    par::try_sum(opts.exec, &heads, |&head| {
        let mut count = 0u64;
        let mut chosen = vec![head];
        search.walk(1, &mut chosen, head, &mut |chi| {
            if membership.contains(&search.point(chi))? {
                count += 1;
            }
            Ok(())
        })?;
        Ok(count)
    })
}

/// [`magic_dimension`] at `δ = v·τ_d`.
pub fn magic_dimension_v(q: &Quiver, d: &DimVector, v: i64, opts: &CountOptions) -> Result<u64> {
    magic_dimension(q, d, &CentralWeight::from_v(v, d)?, opts)
}

/// The zonotope point `χ + ρ − δ`.
pub fn shifted_point(chi: &Weight, d: &DimVector, delta: &CentralWeight) -> Result<RationalVector> {
    let chi_r: RationalVector = chi.into();
    Ok(chi_r.add(&rho(d)).sub(&delta.expand(d)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::is_dominant;

    fn one(n: u32) -> DimVector {
        DimVector::new(vec![n])
    }

    fn count_v(q: &Quiver, d: &DimVector, v: i64) -> u64 {
        magic_dimension_v(q, d, v, &CountOptions::default()).unwrap()
    }

    #[test]
    fn toric_counts_follow_the_polytope() {
        // W(d) is the segment [-(2g+1)/2, (2g+1)/2]·(β1 − β2) and ρ = 0, so the
        // count is the number of integers c with |c − v/2| ≤ g + 1/2.
        let d = DimVector::new(vec![1, 1]);
        for g in 0..4u32 {
            for v in -3..=3i64 {
                let expect = if v % 2 == 0 { 2 * g + 1 } else { 2 * g + 2 };
                assert_eq!(count_v(&Quiver::toric(g), &d, v), expect as u64, "g={g} v={v}");
            }
        }
    }

    #[test]
    fn odd_loops_dimension_two() {
        for e in 1..=4u32 {
            assert_eq!(count_v(&Quiver::loops(2 * e + 1), &one(2), 1), e as u64);
        }
    }

    #[test]
    fn one_loop() {
        assert_eq!(count_v(&Quiver::loops(1), &one(3), 1), 0);
        assert_eq!(count_v(&Quiver::loops(1), &one(3), 3), 1);
    }

    #[test]
    fn rank_one_block() {
        for v in -4..5 {
            assert_eq!(count_v(&Quiver::loops(3), &one(1), v), 1);
        }
    }

    #[test]
    fn off_hyperplane_delta() {
        let delta = CentralWeight::parse("1/2").unwrap();
        let q = Quiver::loops(3);
        assert_eq!(magic_dimension(&q, &one(1), &delta, &CountOptions::default()).unwrap(), 0);
        let delta = CentralWeight::parse("1/4").unwrap();
        assert_eq!(magic_dimension(&q, &one(2), &delta, &CountOptions::default()).unwrap(), 0);
    }

    #[test]
    fn errors() {
        let skew = Quiver::from_matrix(vec![vec![0, 1], vec![0, 0]]).unwrap();
        assert!(matches!(
            magic_dimension_v(&skew, &DimVector::new(vec![1, 1]), 0, &CountOptions::default()),
            Err(Error::Asymmetric { .. })
        ));
        assert_eq!(
            magic_dimension_v(&Quiver::loops(1), &one(0), 0, &CountOptions::default()),
            Err(Error::ZeroDimension)
        );
        assert!(matches!(
            magic_dimension_v(&Quiver::loops(1), &one(13), 0, &CountOptions::default()),
            Err(Error::CutoffExceeded { .. })
        ));
    }

    #[test]
    fn candidates_are_dominant_with_total() {
        let q = Quiver::from_matrix(vec![vec![3, 2], vec![2, 1]]).unwrap();
        let d = DimVector::new(vec![2, 2]);
        let delta = CentralWeight::from_v(1, &d).unwrap();
        let cands = candidates(&q, &d, &delta, COUNT_CUTOFF).unwrap();
        assert!(!cands.is_empty());
        for c in &cands {
            assert!(is_dominant(c, &d));
            assert_eq!(c.0.iter().sum::<i64>(), 1);
        }
    }

    #[test]
    fn modes_and_execution_agree() {
        let q = Quiver::from_matrix(vec![vec![3, 2], vec![2, 1]]).unwrap();
        let d = DimVector::new(vec![2, 1]);
        for v in -2..=3 {
            let base = magic_dimension_v(&q, &d, v, &CountOptions::sequential().with_mode(MembershipMode::Lp)).unwrap();
            for mode in [MembershipMode::Indicator, MembershipMode::Checked] {
                for exec in [Exec::Sequential, Exec::Parallel] {
                    let opts = CountOptions { mode, exec, cutoff: COUNT_CUTOFF };
                    assert_eq!(magic_dimension_v(&q, &d, v, &opts).unwrap(), base);
                }
            }
        }
    }

    #[test]
    fn shift_and_duality() {
        for (q, d) in [
            (Quiver::loops(3), one(3)),
            (Quiver::loops(2), one(3)),
            (Quiver::from_matrix(vec![vec![1, 2], vec![2, 3]]).unwrap(), DimVector::new(vec![1, 2])),
        ] {
            let n = d.total() as i64;
            for v in -3..=3 {
                let c = count_v(&q, &d, v);
                assert_eq!(c, count_v(&q, &d, v + n));
                assert_eq!(c, count_v(&q, &d, v - 2 * n));
                assert_eq!(c, count_v(&q, &d, -v));
            }
        }
    }
}
