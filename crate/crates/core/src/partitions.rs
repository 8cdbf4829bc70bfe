//! Vector partitions of `d`, the integrality invariant `ε_{𝐝,δ}` and the
//! partition sets `S^d_δ`.
//!
//! For an ordering `(d_1, …, d_k)` of the parts, `f(λ) = n_λ/2 + ⟨λ, δ⟩` is
//! linear in the block values `m_1 > ⋯ > m_k` on the cone of cocharacters
//! with that associated partition. `ε = 1` exactly when every coefficient of
//! `f` is an integer, for every ordering. Coefficients are read off by
//! evaluating `f` at block values `(3k, 3(k−1), …, 3)` and at the unit
//! perturbations of each block, which stay inside the cone.

use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::par::{self, Exec};
use crate::quiver::{DimVector, Quiver};
use crate::weights::{n_lambda, pairing, rat, ratio, CentralWeight, Cocharacter};
use crate::{Error, Result, PARTITION_CUTOFF};

/// Multiset of nonzero dimension vectors summing to `d`, parts in descending
/// lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VectorPartition {
    parts: Vec<DimVector>,
}

impl VectorPartition {
    pub fn new(mut parts: Vec<DimVector>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        VectorPartition { parts }
    }

    pub fn trivial(d: &DimVector) -> Self {
        VectorPartition {
            parts: vec![d.clone()],
        }
    }

    pub fn parts(&self) -> &[DimVector] {
        &self.parts
    }

    /// `ℓ(A)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn total(&self) -> Option<DimVector> {
        let mut it = self.parts.iter();
        let first = it.next()?.clone();
        Some(it.fold(first, |acc, p| acc.add(p)))
    }

    /// Distinct parts with multiplicities `(e_i, m_i)`.
    pub fn profile(&self) -> Vec<(DimVector, usize)> {
        let mut out: Vec<(DimVector, usize)> = Vec::new();
        for p in &self.parts {
            match out.last_mut() {
                Some((e, m)) if e == p => *m += 1,
                _ => out.push((p.clone(), 1)),
            }
        }
        out
    }

    /// All distinct orderings of the parts.
    pub fn orderings(&self) -> Vec<Vec<DimVector>> {
        let mut current: Vec<DimVector> = self.parts.clone();
        current.sort_unstable();
        let mut out = vec![current.clone()];
        while next_permutation(&mut current) {
            out.push(current.clone());
        }
        out
    }
}

impl fmt::Display for VectorPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// All multiset partitions of `d` into nonzero dimension vectors, in
/// canonical (descending) order.
pub fn enumerate_vector_partitions(d: &DimVector, cutoff: usize) -> Result<Vec<VectorPartition>> {
    if d.is_zero() {
        return Err(Error::ZeroDimension);
    }
    if d.total() > cutoff {
        return Err(Error::CutoffExceeded {
            what: "d̄ for partition enumeration",
            value: d.total(),
            limit: cutoff,
        });
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    extend_partitions(d, d, &mut current, &mut out);
    out.sort_unstable_by(|a, b| b.cmp(a));
    Ok(out)
}

fn extend_partitions(
    rem: &DimVector,
    max_part: &DimVector,
    current: &mut Vec<DimVector>,
    out: &mut Vec<VectorPartition>,
) {
    if rem.is_zero() {
        out.push(VectorPartition {
            parts: current.clone(),
        });
        return;
    }
    for part in sub_vectors(rem) {
        if part > *max_part {
            continue;
        }
        let next = rem.checked_sub(&part).expect("part fits");
        current.push(part.clone());
        extend_partitions(&next, &part, current, out);
        current.pop();
    }
}

/// Nonzero vectors `0 ≤ p ≤ rem`, descending lexicographic order.
fn sub_vectors(rem: &DimVector) -> Vec<DimVector> {
    let bounds = rem.entries();
    let mut out = Vec::new();
    let mut cur = bounds.to_vec();
    loop {
        if cur.iter().any(|&x| x > 0) {
            out.push(DimVector::new(cur.clone()));
        }
        // Decrement as a mixed-radix counter, last coordinate fastest.
        let mut k = cur.len();
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            if cur[k] > 0 {
                cur[k] -= 1;
                for (c, &b) in cur[k + 1..].iter_mut().zip(&bounds[k + 1..]) {
                    *c = b;
                }
                break;
            }
        }
    }
}

/// Block values `3k, 3(k−1), …, 3`.
fn base_values(k: usize) -> Vec<i64> {
    (0..k).map(|j| 3 * (k - j) as i64).collect()
}

fn linear_form(
    q: &Quiver,
    d: &DimVector,
    order: &[&DimVector],
    values: &[i64],
    delta: &crate::weights::RationalVector,
) -> Result<BigRational> {
    let lam = Cocharacter::from_parts(d, order, values);
    Ok(ratio(n_lambda(q, d, &lam)?, 2) + pairing(&lam, delta)?)
}

/// Coefficients of `λ ↦ n_λ/2 + ⟨λ,δ⟩` in the block values, for one
/// ordering of the parts.
pub fn ordering_coefficients(
    q: &Quiver,
    d: &DimVector,
    order: &[DimVector],
    delta: &CentralWeight,
) -> Result<Vec<BigRational>> {
    q.require_symmetric()?;
    let refs: Vec<&DimVector> = order.iter().collect();
    let full = delta.expand(d)?;
    let base = base_values(order.len());
    let f0 = linear_form(q, d, &refs, &base, &full)?;
    (0..order.len())
        .map(|j| {
            let mut up = base.clone();
            up[j] += 1;
            let c = linear_form(q, d, &refs, &up, &full)? - &f0;
            let mut down = base.clone();
            down[j] -= 1;
            debug_assert_eq!(&f0 - linear_form(q, d, &refs, &down, &full)?, c);
            Ok(c)
        })
        .collect()
}

/// Verdict of every ordering of a partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EpsilonDetail {
    pub orderings: Vec<(Vec<DimVector>, bool)>,
}

impl EpsilonDetail {
    pub fn epsilon(&self) -> bool {
        self.orderings.iter().all(|(_, ok)| *ok)
    }

    /// Orderings disagree with each other.
    pub fn is_anomalous(&self) -> bool {
        let first = self.orderings.first().map(|(_, ok)| *ok);
        self.orderings.iter().any(|(_, ok)| Some(*ok) != first)
    }
}

fn check_partition(d: &DimVector, a: &VectorPartition) -> Result<()> {
    if a.parts().iter().any(|p| p.len() != d.len() || p.is_zero()) || a.total().as_ref() != Some(d)
    {
        return Err(Error::InvalidQuiver(format!("{a} is not a partition of {d}")));
    }
    Ok(())
}

pub fn epsilon_partition_detail(
    q: &Quiver,
    d: &DimVector,
    a: &VectorPartition,
    delta: &CentralWeight,
) -> Result<EpsilonDetail> {
    q.require_symmetric()?;
    q.check_dim(d)?;
    check_partition(d, a)?;
    let orderings = a
        .orderings()
        .into_iter()
        .map(|order| {
            let ok = ordering_coefficients(q, d, &order, delta)?
                .iter()
                .all(|c| c.is_integer());
            Ok((order, ok))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(EpsilonDetail { orderings })
}

/// `ε_{𝐝,δ}`.
pub fn epsilon_partition(
    q: &Quiver,
    d: &DimVector,
    a: &VectorPartition,
    delta: &CentralWeight,
) -> Result<bool> {
    Ok(epsilon_partition_detail(q, d, a, delta)?.epsilon())
}

/// `ε_{𝐝,δ}` through the block weights `θ_i`: with
/// `Σ θ_i = −½ R(d)^{λ>0} + ½ 𝔤(d)^{λ>0}`, require
/// `⟨1_{d_i}, θ_i + δ_i⟩ ∈ ℤ` for every part and every ordering.
pub fn epsilon_partition_theta(
    q: &Quiver,
    d: &DimVector,
    a: &VectorPartition,
    delta: &CentralWeight,
) -> Result<bool> {
    q.require_symmetric()?;
    q.check_dim(d)?;
    check_partition(d, a)?;
    let (rep, roots) = q.weight_multisets(d)?;
    let full = delta.expand(d)?;
    for order in a.orderings() {
        let refs: Vec<&DimVector> = order.iter().collect();
        let values = base_values(order.len());
        let lam = Cocharacter::from_parts(d, &refs, &values);
        // 2θ, integral.
        let mut twice_theta = vec![0i64; d.total()];
        for &((p, qq), m) in &rep.entries {
            if lam.0[p] > lam.0[qq] {
                twice_theta[p] -= m as i64;
                twice_theta[qq] += m as i64;
            }
        }
        for &((p, qq), m) in &roots.entries {
            if lam.0[p] > lam.0[qq] {
                twice_theta[p] += m as i64;
                twice_theta[qq] -= m as i64;
            }
        }
        for &val in &values {
            let mut sum = BigRational::zero();
            for (p, &x) in lam.0.iter().enumerate() {
                if x == val {
                    sum += ratio(twice_theta[p], 2) + &full.0[p];
                }
            }
            if !sum.is_integer() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `S^d_δ = { A : ε_{A,δ} = 1 }` in canonical order.
pub fn s_set(
    q: &Quiver,
    d: &DimVector,
    delta: &CentralWeight,
    cutoff: usize,
    exec: Exec,
) -> Result<Vec<VectorPartition>> {
    q.require_symmetric()?;
    q.check_dim(d)?;
    let all = enumerate_vector_partitions(d, cutoff)?;
    let keep = par::try_map(exec, &all, |a| epsilon_partition(q, d, a, delta))?;
    Ok(all
        .into_iter()
        .zip(keep)
        .filter_map(|(a, k)| k.then_some(a))
        .collect())
}

/// Partitions whose orderings disagree about `ε`.
pub fn ordering_anomalies(
    q: &Quiver,
    d: &DimVector,
    delta: &CentralWeight,
    cutoff: usize,
) -> Result<Vec<VectorPartition>> {
    let mut out = Vec::new();
    for a in enumerate_vector_partitions(d, cutoff)? {
        if epsilon_partition_detail(q, d, &a, delta)?.is_anomalous() {
            out.push(a);
        }
    }
    Ok(out)
}

/// Quivers whose partition sets have a closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosedFormFamily {
    /// Odd number of loops at every vertex, even number of arrows between
    /// distinct vertices.
    OddLoopsEvenCross,
    /// One vertex with an even, positive number of loops.
    EvenLoopsOneVertex,
}

pub fn closed_form_family(q: &Quiver) -> Option<ClosedFormFamily> {
    if !q.is_symmetric() {
        return None;
    }
    let n = q.num_vertices();
    let odd_loops = (0..n).all(|i| q.arrow_count(i, i) % 2 == 1);
    let even_cross = (0..n).all(|i| (0..n).all(|j| i == j || q.arrow_count(i, j).is_multiple_of(2)));
    if odd_loops && even_cross {
        return Some(ClosedFormFamily::OddLoopsEvenCross);
    }
    if n == 1 && q.arrow_count(0, 0) >= 2 && q.arrow_count(0, 0).is_multiple_of(2) {
        return Some(ClosedFormFamily::EvenLoopsOneVertex);
    }
    None
}

/// `S^d_v` from the closed forms: parts with `v·d̄_i/d̄ ∈ ℤ` for odd loops and
/// even cross arrows; parts with `½ d_i(Σ_{j<i} d_j − Σ_{j>i} d_j) + v d_i/d ∈ ℤ`
/// for one vertex with `2e` loops (the latter read in the stored order).
pub fn s_set_closed_form(
    q: &Quiver,
    d: &DimVector,
    v: i64,
    cutoff: usize,
) -> Result<Vec<VectorPartition>> {
    let family = closed_form_family(q).ok_or(Error::NoClosedForm)?;
    q.check_dim(d)?;
    let total = d.total() as i64;
    let all = enumerate_vector_partitions(d, cutoff)?;
    Ok(all
        .into_iter()
        .filter(|a| match family {
            ClosedFormFamily::OddLoopsEvenCross => a
                .parts()
                .iter()
                .all(|p| (v * p.total() as i64) % total == 0),
            ClosedFormFamily::EvenLoopsOneVertex => {
                let sizes: Vec<i64> = a.parts().iter().map(|p| p.total() as i64).collect();
                (0..sizes.len()).all(|i| {
                    let before: i64 = sizes[..i].iter().sum();
                    let after: i64 = sizes[i + 1..].iter().sum();
                    let x = ratio(sizes[i] * (before - after), 2) + ratio(v * sizes[i], total);
                    x.is_integer()
                })
            }
        })
        .collect())
}

/// Search box for [`find_delta`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBounds {
    /// `v` ranges over `0..=max_v`.
    pub max_v: i64,
    /// Denominators of the sum-zero correction `δ'`.
    pub max_den: i64,
    /// Absolute numerators of `δ'`.
    pub max_num: i64,
}

impl SearchBounds {
    pub fn for_dim(d: &DimVector) -> Self {
        let n = d.total().max(1) as i64;
        SearchBounds {
            max_v: n,
            max_den: n + 1,
            max_num: 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoundDelta {
    pub v: i64,
    pub delta: CentralWeight,
}

/// Precomputed `n_λ/2` coefficients of every ordering of every nontrivial
/// partition, so that `ε` for a new `δ` costs one pass over the parts.
struct EpsilonTable {
    rows: Vec<Vec<(DimVector, BigRational)>>,
}

impl EpsilonTable {
    fn new(q: &Quiver, d: &DimVector, parts: &[VectorPartition]) -> Result<Self> {
        let zero = CentralWeight::zero(d.len());
        let mut rows = Vec::new();
        for a in parts {
            for order in a.orderings() {
                let coeffs = ordering_coefficients(q, d, &order, &zero)?;
                rows.push(order.into_iter().zip(coeffs).collect());
            }
        }
        Ok(EpsilonTable { rows })
    }

    /// True when some ordering has all coefficients integral.
    fn any_integral(&self, delta: &CentralWeight) -> bool {
        self.rows.iter().any(|row| {
            row.iter().all(|(part, half_n)| {
                let shift = part
                    .entries()
                    .iter()
                    .zip(&delta.0)
                    .fold(BigRational::zero(), |acc, (&k, x)| acc + x * rat(k as i64));
                (half_n + shift).is_integer()
            })
        })
    }
}

/// Finds `δ` with `⟨1_d, δ⟩ ∈ ℤ` and `S^d_δ = {{d}}`: first `δ = v·τ_d` for
/// `v ∈ {0, 1}`, then `v = 2..=max_v`, each combined with Weyl-invariant
/// sum-zero corrections `δ'` of bounded height, simplest first.
pub fn find_delta(q: &Quiver, d: &DimVector, bounds: SearchBounds) -> Result<Option<FoundDelta>> {
    q.require_symmetric()?;
    q.check_dim(d)?;
    let nontrivial: Vec<VectorPartition> = enumerate_vector_partitions(d, PARTITION_CUTOFF)?
        .into_iter()
        .filter(|a| a.len() > 1)
        .collect();
    // Partitions fail ε as soon as one ordering fails, so S ∌ A iff some
    // ordering is non-integral; the table answers "all orderings integral".
    let per_partition: Vec<EpsilonTable> = nontrivial
        .iter()
        .map(|a| EpsilonTable::new(q, d, std::slice::from_ref(a)))
        .collect::<Result<_>>()?;
    let in_s = |delta: &CentralWeight| {
        per_partition.iter().any(|t| {
            t.rows.iter().all(|row| {
                EpsilonTable {
                    rows: vec![row.clone()],
                }
                .any_integral(delta)
            })
        })
    };

    let corrections = sum_zero_corrections(d, bounds);
    let mut vs: Vec<i64> = vec![0, 1];
    vs.extend(2..=bounds.max_v);
    // Plain v·τ_d for v ∈ {0,1} first.
    for &v in &vs[..2] {
        let delta = CentralWeight::from_v(v, d)?;
        if !in_s(&delta) {
            return Ok(Some(FoundDelta { v, delta }));
        }
    }
    for &v in &vs {
        let base = CentralWeight::from_v(v, d)?;
        for corr in &corrections {
            let delta = base.add(corr);
            if !in_s(&delta) {
                return Ok(Some(FoundDelta { v, delta }));
            }
        }
    }
    Ok(None)
}

/// Weyl-invariant `δ'` with `⟨1_d, δ'⟩ = 0`, ordered by height. The zero
/// correction comes first.
fn sum_zero_corrections(d: &DimVector, bounds: SearchBounds) -> Vec<CentralWeight> {
    let live: Vec<usize> = (0..d.len()).filter(|&i| d.entries()[i] > 0).collect();
    let zero = CentralWeight::zero(d.len());
    if live.len() < 2 {
        return vec![zero];
    }
    // Simplest values first: small denominator, then small numerator.
    let mut values: Vec<BigRational> = (1..=bounds.max_den.max(1))
        .flat_map(|den| (-bounds.max_num..=bounds.max_num).map(move |num| ratio(num, den)))
        .collect();
    values.sort_by_key(|r| (r.denom().clone(), r.numer().magnitude().clone(), r.clone()));
    values.dedup();
    let free = &live[..live.len() - 1];
    let last = *live.last().expect("two live vertices");
    let mut out = vec![zero];
    let mut idx = vec![0usize; free.len()];
    loop {
        let mut delta = CentralWeight::zero(d.len());
        let mut partial = BigRational::zero();
        for (slot, &i) in idx.iter().zip(free) {
            delta.0[i] = values[*slot].clone();
            partial += &values[*slot] * rat(d.entries()[i] as i64);
        }
        delta.0[last] = -partial / rat(d.entries()[last] as i64);
        if delta.0.iter().any(|x| !x.is_zero()) {
            out.push(delta);
        }
        let mut k = 0;
        loop {
            if k == idx.len() {
                return order_by_height(out);
            }
            idx[k] += 1;
            if idx[k] < values.len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

fn order_by_height(mut v: Vec<CentralWeight>) -> Vec<CentralWeight> {
    let height = |c: &CentralWeight| {
        c.0.iter()
            .map(|x| {
                let den = x.denom().clone();
                let num = x.numer().clone();
                (den, num.magnitude().clone())
            })
            .max()
    };
    v.sort_by_key(height);
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn dv(v: &[u32]) -> DimVector {
        DimVector::new(v.to_vec())
    }

    fn part(ps: &[&[u32]]) -> VectorPartition {
        VectorPartition::new(ps.iter().map(|p| dv(p)).collect())
    }

    fn v_delta(v: i64, d: &DimVector) -> CentralWeight {
        CentralWeight::from_v(v, d).unwrap()
    }

    #[test]
    fn enumeration_examples() {
        let p2 = enumerate_vector_partitions(&dv(&[2]), PARTITION_CUTOFF).unwrap();
        assert_eq!(p2, vec![part(&[&[2]]), part(&[&[1], &[1]])]);
        let p11 = enumerate_vector_partitions(&dv(&[1, 1]), PARTITION_CUTOFF).unwrap();
        assert_eq!(p11, vec![part(&[&[1, 1]]), part(&[&[1, 0], &[0, 1]])]);
        assert_eq!(enumerate_vector_partitions(&dv(&[3]), PARTITION_CUTOFF).unwrap().len(), 3);
        // Vector partitions of (2,1): 4 with a part containing the 1, times splits.
        assert_eq!(enumerate_vector_partitions(&dv(&[2, 1]), PARTITION_CUTOFF).unwrap().len(), 4);
        assert!(matches!(
            enumerate_vector_partitions(&dv(&[21]), PARTITION_CUTOFF),
            Err(Error::CutoffExceeded { .. })
        ));
        assert_eq!(enumerate_vector_partitions(&dv(&[0, 0]), 5), Err(Error::ZeroDimension));
    }

    #[test]
    fn enumeration_has_no_duplicates_and_sums_to_d() {
        for d in [dv(&[2, 2]), dv(&[3, 1, 1]), dv(&[0, 4])] {
            let all = enumerate_vector_partitions(&d, PARTITION_CUTOFF).unwrap();
            let set: BTreeSet<_> = all.iter().cloned().collect();
            assert_eq!(set.len(), all.len());
            for a in &all {
                assert_eq!(a.total().unwrap(), d);
                assert!(a.parts().iter().all(|p| !p.is_zero()));
            }
            assert_eq!(all[0], VectorPartition::trivial(&d));
        }
    }

    #[test]
    fn orderings_are_distinct_permutations() {
        let a = part(&[&[2], &[1], &[1]]);
        assert_eq!(a.orderings().len(), 3);
        assert_eq!(a.profile(), vec![(dv(&[2]), 1), (dv(&[1]), 2)]);
        assert_eq!(part(&[&[1], &[1], &[1]]).orderings().len(), 1);
    }

    #[test]
    fn epsilon_examples() {
        let d = dv(&[2]);
        let split = part(&[&[1], &[1]]);
        let three = Quiver::loops(3);
        assert!(!epsilon_partition(&three, &d, &split, &v_delta(1, &d)).unwrap());
        assert!(epsilon_partition(&three, &d, &split, &v_delta(0, &d)).unwrap());
        let two = Quiver::loops(2);
        assert!(epsilon_partition(&two, &d, &split, &v_delta(1, &d)).unwrap());
        assert!(epsilon_partition_theta(&two, &d, &split, &v_delta(1, &d)).unwrap());
        for v in -3..4 {
            for q in [Quiver::loops(3), Quiver::loops(2), Quiver::toric(1)] {
                let d = dv(&vec![2; q.num_vertices()]);
                let trivial = VectorPartition::trivial(&d);
                assert!(epsilon_partition(&q, &d, &trivial, &v_delta(v, &d)).unwrap());
                assert!(epsilon_partition_theta(&q, &d, &trivial, &v_delta(v, &d)).unwrap());
            }
        }
    }

    #[test]
    fn toric_split_parity() {
        // n_λ/2 + ⟨λ,vτ⟩ has coefficients ±(2g+1)/2 + v/2: integral iff v odd.
        let d = dv(&[1, 1]);
        let split = part(&[&[1, 0], &[0, 1]]);
        for g in 0..3 {
            for v in -3..=3i64 {
                let eps = epsilon_partition(&Quiver::toric(g), &d, &split, &v_delta(v, &d)).unwrap();
                assert_eq!(eps, v % 2 != 0);
            }
        }
    }

    #[test]
    fn s_set_examples() {
        let seq = Exec::Sequential;
        for d in 1..=6u32 {
            for v in -3..=6i64 {
                let dd = dv(&[d]);
                let s = s_set(&Quiver::loops(3), &dd, &v_delta(v, &dd), PARTITION_CUTOFF, seq).unwrap();
                if num_integer::gcd(d as i64, v) == 1 {
                    assert_eq!(s, vec![VectorPartition::trivial(&dd)]);
                }
            }
        }
        let d4 = dv(&[4]);
        assert_eq!(s_set(&Quiver::loops(3), &d4, &v_delta(0, &d4), PARTITION_CUTOFF, seq).unwrap().len(), 5);
        let d2 = dv(&[2]);
        assert_eq!(
            s_set(&Quiver::loops(2), &d2, &v_delta(1, &d2), PARTITION_CUTOFF, seq).unwrap(),
            vec![part(&[&[2]]), part(&[&[1], &[1]])]
        );
        assert!(matches!(
            s_set(&Quiver::from_matrix(vec![vec![0, 1], vec![0, 0]]).unwrap(), &dv(&[1, 1]), &CentralWeight::zero(2), 20, seq),
            Err(Error::Asymmetric { .. })
        ));
    }

    #[test]
    fn closed_forms() {
        let d = dv(&[2]);
        assert_eq!(
            s_set_closed_form(&Quiver::loops(2), &d, 1, PARTITION_CUTOFF).unwrap(),
            vec![part(&[&[2]]), part(&[&[1], &[1]])]
        );
        // 2-loop quiver, d=2, v=2: for (1)+(1), ½·1·(0−1) + 1 = 1/2, so only {2}.
        assert_eq!(
            s_set_closed_form(&Quiver::loops(2), &d, 2, PARTITION_CUTOFF).unwrap(),
            vec![part(&[&[2]])]
        );
        // Scaled partitions: d = n, v = n·w.
        for n in 1..=6u32 {
            for w in [-1i64, 1, 2] {
                let s = s_set_closed_form(&Quiver::loops(3), &dv(&[n]), n as i64 * w, PARTITION_CUTOFF).unwrap();
                assert_eq!(s.len(), enumerate_vector_partitions(&dv(&[n]), 20).unwrap().len());
            }
        }
        assert_eq!(
            s_set_closed_form(&Quiver::toric(1), &dv(&[1, 1]), 1, 20),
            Err(Error::NoClosedForm)
        );
        assert_eq!(closed_form_family(&Quiver::loops(0)), None);
    }

    #[test]
    fn find_delta_examples() {
        let d3 = dv(&[3]);
        let found = find_delta(&Quiver::loops(3), &d3, SearchBounds::for_dim(&d3)).unwrap().unwrap();
        assert_eq!(found.v, 1);
        // The two-loop quiver at d=2 follows the parity rule with v=0.
        let d2 = dv(&[2]);
        let found = find_delta(&Quiver::loops(2), &d2, SearchBounds::for_dim(&d2)).unwrap().unwrap();
        assert_eq!(found.v, 0);
        // Neither 0 nor 1 works for the two-loop quiver at d=6; gcd(6,v)=2 does.
        let d6 = dv(&[6]);
        let found = find_delta(&Quiver::loops(2), &d6, SearchBounds::for_dim(&d6)).unwrap().unwrap();
        assert_eq!(found.v, 2);
        let s = s_set(&Quiver::loops(2), &d6, &found.delta, 20, Exec::Sequential).unwrap();
        assert_eq!(s, vec![VectorPartition::trivial(&d6)]);
    }

    #[test]
    fn find_delta_two_vertices() {
        // Toric quiver, d=(1,1): v·τ works for even v; with a sum-zero shift,
        // any integral total can be made generic.
        let q = Quiver::toric(1);
        let d = dv(&[1, 1]);
        let found = find_delta(&q, &d, SearchBounds::for_dim(&d)).unwrap().unwrap();
        assert_eq!(found.v, 0);
        let q = Quiver::from_matrix(vec![vec![0, 2], vec![2, 0]]).unwrap();
        let d = dv(&[2, 2]);
        let found = find_delta(&q, &d, SearchBounds::for_dim(&d)).unwrap().unwrap();
        assert!(found.delta.total(&d).is_integer());
        let s = s_set(&q, &d, &found.delta, 20, Exec::Sequential).unwrap();
        assert_eq!(s, vec![VectorPartition::trivial(&d)]);
    }
}
