//! Brute-force reference implementations. Nothing here reuses the primary
//! algorithms: weights are expanded one arrow copy at a time, cocharacters
//! are sampled instead of reduced to coefficients, and lattice points are
//! found by scanning a box.

use num_rational::BigRational;
use num_traits::Zero;

use crate::partitions::VectorPartition;
use crate::quiver::{DimVector, Quiver};
use crate::weights::{ratio, CentralWeight, Cocharacter, RationalVector};
use crate::zonotope::{Generator, Zonotope};
use crate::{Error, Result};

/// Slot ranges of each vertex, recomputed locally.
fn slots(d: &DimVector) -> Vec<Vec<usize>> {
    let mut next = 0;
    d.entries()
        .iter()
        .map(|&n| {
            let r: Vec<usize> = (next..next + n as usize).collect();
            next += n as usize;
            r
        })
        .collect()
}

/// Every weight of `R(d)` as a pair `(p, q)` standing for `e_p − e_q`, one
/// entry per arrow copy and matrix coefficient.
fn expanded_rep(q: &Quiver, d: &DimVector) -> Vec<(usize, usize)> {
    let s = slots(d);
    let mut out = Vec::new();
    for (i, si) in s.iter().enumerate() {
        for (j, sj) in s.iter().enumerate() {
            for _copy in 0..q.arrows()[i][j] {
                for &a in si {
                    for &b in sj {
                        out.push((a, b));
                    }
                }
            }
        }
    }
    out
}

fn expanded_roots(d: &DimVector) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for s in slots(d) {
        for &a in &s {
            for &b in &s {
                if a != b {
                    out.push((a, b));
                }
            }
        }
    }
    out
}

pub fn n_lambda_bruteforce(q: &Quiver, d: &DimVector, lambda: &Cocharacter) -> i64 {
    let lam = &lambda.0;
    let mut n = 0i64;
    for (a, b) in expanded_rep(q, d) {
        let x = lam[a] - lam[b];
        if x > 0 {
            n += x;
        }
    }
    for (a, b) in expanded_roots(d) {
        let x = lam[a] - lam[b];
        if x > 0 {
            n -= x;
        }
    }
    n
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sampled {
    Zero,
    One,
    /// No cocharacter with the required shape fits in the value range.
    Unknown,
}

/// Strictly decreasing `k`-tuples in `[−m, m]`.
fn decreasing_tuples(k: usize, m: i64) -> Vec<Vec<i64>> {
    fn rec(k: usize, below: i64, m: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in (-m..below).rev() {
            cur.push(x);
            rec(k, x, m, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(k, m + 1, m, &mut Vec::new(), &mut out);
    out
}

/// Tests `n_λ/2 + ⟨λ, δ⟩ ∈ ℤ` on every antidominant cocharacter with
/// associated partition `a` and values in `[−m, m]`.
pub fn epsilon_sampling(
    q: &Quiver,
    d: &DimVector,
    a: &VectorPartition,
    delta: &CentralWeight,
    m: i64,
) -> Sampled {
    let s = slots(d);
    let parts = a.parts();
    let tuples = decreasing_tuples(parts.len(), m);
    if tuples.is_empty() {
        return Sampled::Unknown;
    }
    // Every assignment of parts to the sorted values; repeated parts give
    // repeated cocharacters, which is harmless.
    let mut perm: Vec<usize> = (0..parts.len()).collect();
    let mut seen = false;
    loop {
        for values in &tuples {
            let mut lam = vec![0i64; d.total()];
            for (vertex, si) in s.iter().enumerate() {
                let mut next = si.iter();
                for (&part, &val) in perm.iter().zip(values) {
                    for _ in 0..parts[part].entries()[vertex] {
                        lam[*next.next().expect("parts sum to d")] = val;
                    }
                }
            }
            let n = n_lambda_bruteforce(q, d, &Cocharacter(lam.clone()));
            let mut pair = BigRational::zero();
            for (vertex, si) in s.iter().enumerate() {
                for &p in si {
                    pair += &delta.0[vertex] * ratio(lam[p], 1);
                }
            }
            if !(ratio(n, 2) + pair).is_integer() {
                return Sampled::Zero;
            }
            seen = true;
        }
        if !next_perm(&mut perm) {
            break;
        }
    }
    if seen {
        Sampled::One
    } else {
        Sampled::Unknown
    }
}

fn next_perm(v: &mut [usize]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Counts dominant `χ` with `χ + ρ − δ ∈ W(d)` by scanning the box
/// `|x_p| ≤ ½ #{β : β_p ≠ 0}`. Fails when the box has more than `max_box`
/// points.
pub fn lattice_count_naive(
    q: &Quiver,
    d: &DimVector,
    delta: &CentralWeight,
    max_box: u64,
) -> Result<u64> {
    let n = d.total();
    let s = slots(d);
    let mut total = BigRational::zero();
    for (vertex, si) in s.iter().enumerate() {
        total += &delta.0[vertex] * ratio(si.len() as i64, 1);
    }
    if !total.is_integer() {
        return Ok(0);
    }
    let rep = expanded_rep(q, d);
    let mut touches = vec![0i64; n];
    let mut generators = Vec::new();
    for &(a, b) in &rep {
        if a != b {
            touches[a] += 1;
            touches[b] += 1;
            generators.push(Generator {
                plus: a,
                minus: b,
                mult: 1,
            });
        }
    }
    let z = Zonotope::new(n, generators);

    // ρ_p = ½ (#{earlier slots in the block} − #{later slots in the block}).
    let mut offset = vec![BigRational::zero(); n];
    for (vertex, si) in s.iter().enumerate() {
        for (k, &p) in si.iter().enumerate() {
            let rho = ratio(k as i64 - (si.len() - 1 - k) as i64, 2);
            offset[p] = rho - &delta.0[vertex];
        }
    }
    let mut lo = vec![0i64; n];
    let mut hi = vec![0i64; n];
    let mut size: u64 = 1;
    for p in 0..n {
        let w = ratio(touches[p], 2);
        lo[p] = (-&w - &offset[p]).ceil().to_integer().try_into().map_err(|_| Error::Overflow("box"))?;
        hi[p] = (&w - &offset[p]).floor().to_integer().try_into().map_err(|_| Error::Overflow("box"))?;
        if hi[p] < lo[p] {
            return Ok(0);
        }
        size = size.saturating_mul((hi[p] - lo[p] + 1) as u64);
    }
    if size > max_box {
        return Err(Error::CutoffExceeded {
            what: "lattice box size",
            value: usize::try_from(size).unwrap_or(usize::MAX),
            limit: usize::try_from(max_box).unwrap_or(usize::MAX),
        });
    }

    let mut chi = lo.clone();
    let mut count = 0u64;
    loop {
        let dominant = s.iter().all(|si| si.windows(2).all(|w| chi[w[0]] <= chi[w[1]]));
        if dominant {
            let x = RationalVector(
                chi.iter()
                    .zip(&offset)
                    .map(|(&c, o)| ratio(c, 1) + o)
                    .collect(),
            );
            if z.contains(&x)? {
                count += 1;
            }
        }
        // Odometer.
        let mut p = 0;
        loop {
            if p == n {
                return Ok(count);
            }
            if chi[p] < hi[p] {
                chi[p] += 1;
                break;
            }
            chi[p] = lo[p];
            p += 1;
        }
    }
}
