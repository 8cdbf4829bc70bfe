//! Exact feasibility of `A t = b, 0 ≤ t ≤ u` by a bounded-variable primal
//! simplex (phase 1 only) over arbitrary-precision rationals.
//!
//! Pivoting follows Bland's rule: the entering variable is the eligible one
//! with the smallest index, and ties in the ratio test go to the basic
//! variable with the smallest index. A bound flip is taken only when it is
//! strictly shorter than every basis change. With exact arithmetic this
//! terminates.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Feasibility {
    /// A witness `t`.
    Feasible(Vec<BigRational>),
    Infeasible,
}

impl Feasibility {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Feasibility::Feasible(_))
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Status {
    Basic,
    Lower,
    Upper,
}

/// Decides whether `rows · t = rhs` has a solution with `0 ≤ t_j ≤ upper[j]`
/// (`None` means no upper bound).
pub fn feasible(
    rows: &[Vec<BigRational>],
    rhs: &[BigRational],
    upper: &[Option<BigRational>],
) -> Feasibility {
    let n = rows.len();
    let m = upper.len();
    assert_eq!(rhs.len(), n, "one right-hand side per row");
    assert!(rows.iter().all(|r| r.len() == m), "ragged constraint matrix");

    if upper.iter().flatten().any(|u| u.is_negative()) {
        return Feasibility::Infeasible;
    }

    // Columns 0..m are structural, m..m+n artificial.
    let cols = m + n;
    let mut tab: Vec<Vec<BigRational>> = Vec::with_capacity(n);
    let mut values: Vec<BigRational> = Vec::with_capacity(n);
    for (r, row) in rows.iter().enumerate() {
        let flip = rhs[r].is_negative();
        let mut t: Vec<BigRational> = row
            .iter()
            .map(|x| if flip { -x } else { x.clone() })
            .collect();
        t.extend((0..n).map(|k| {
            if k == r {
                BigRational::one()
            } else {
                BigRational::zero()
            }
        }));
        tab.push(t);
        values.push(rhs[r].abs());
    }
    let mut upper: Vec<Option<BigRational>> = upper.to_vec();
    upper.extend(std::iter::repeat_n(None, n));
    let cost = |j: usize| j >= m;

    let mut basis: Vec<usize> = (m..m + n).collect();
    let mut status = vec![Status::Lower; cols];
    for &b in &basis {
        status[b] = Status::Basic;
    }

    loop {
        // Reduced costs d_j = c_j − Σ_r c_{B_r} T[r][j]; pick the first eligible j.
        let entering = (0..cols).find(|&j| {
            if status[j] == Status::Basic {
                return false;
            }
            if let Some(u) = &upper[j] {
                if u.is_zero() {
                    return false;
                }
            }
            let mut d = if cost(j) {
                BigRational::one()
            } else {
                BigRational::zero()
            };
            for (r, &b) in basis.iter().enumerate() {
                if cost(b) && !tab[r][j].is_zero() {
                    d -= &tab[r][j];
                }
            }
            match status[j] {
                Status::Lower => d.is_negative(),
                Status::Upper => d.is_positive(),
                Status::Basic => false,
            }
        });
        let Some(j) = entering else { break };
        let increasing = status[j] == Status::Lower;

        // Ratio test.
        let mut best: Option<(BigRational, usize)> = None;
        for r in 0..n {
            let a = if increasing {
                tab[r][j].clone()
            } else {
                -tab[r][j].clone()
            };
            let limit = if a.is_positive() {
                Some(&values[r] / &a)
            } else if a.is_negative() {
                upper[basis[r]].as_ref().map(|u| (u - &values[r]) / (-a))
            } else {
                None
            };
            if let Some(limit) = limit {
                let better = match &best {
                    None => true,
                    Some((t, rb)) => limit < *t || (limit == *t && basis[r] < basis[*rb]),
                };
                if better {
                    best = Some((limit, r));
                }
            }
        }
        let flip = upper[j].clone();
        let take_flip = match (&flip, &best) {
            (Some(u), Some((t, _))) => u < t,
            (Some(_), None) => true,
            (None, _) => false,
        };
        if take_flip {
            let theta = flip.expect("flip bound");
            for r in 0..n {
                let delta = &theta * &tab[r][j];
                if increasing {
                    values[r] -= delta;
                } else {
                    values[r] += delta;
                }
            }
            status[j] = if increasing {
                Status::Upper
            } else {
                Status::Lower
            };
            continue;
        }
        let Some((theta, r)) = best else {
            // Unbounded descent cannot happen for a phase-1 objective.
            unreachable!("phase-1 objective is bounded below");
        };

        let leaving = basis[r];
        let leaving_goes_up = {
            let a = &tab[r][j];
            if increasing {
                a.is_negative()
            } else {
                a.is_positive()
            }
        };
        let entering_value = match (increasing, &upper[j]) {
            (true, _) => theta.clone(),
            (false, Some(u)) => u - &theta,
            (false, None) => unreachable!("nonbasic at upper without a bound"),
        };
        for i in 0..n {
            if i != r {
                let delta = &theta * &tab[i][j];
                if increasing {
                    values[i] -= delta;
                } else {
                    values[i] += delta;
                }
            }
        }
        values[r] = entering_value;

        let pivot = tab[r][j].clone();
        for x in tab[r].iter_mut() {
            *x /= &pivot;
        }
        let pivot_row = tab[r].clone();
        for (i, row) in tab.iter_mut().enumerate() {
            if i == r || row[j].is_zero() {
                continue;
            }
            let factor = row[j].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &factor * p;
                }
            }
        }
        basis[r] = j;
        status[j] = Status::Basic;
        status[leaving] = if leaving_goes_up {
            Status::Upper
        } else {
            Status::Lower
        };
    }

    let infeasibility = basis
        .iter()
        .zip(&values)
        .filter(|(&b, _)| cost(b))
        .fold(BigRational::zero(), |acc, (_, v)| acc + v);
    if !infeasibility.is_zero() {
        return Feasibility::Infeasible;
    }
    let mut t = vec![BigRational::zero(); m];
    for j in 0..m {
        if status[j] == Status::Upper {
            t[j] = upper[j].clone().expect("upper status has a bound");
        }
    }
    for (r, &b) in basis.iter().enumerate() {
        if b < m {
            t[b] = values[r].clone();
        }
    }
    Feasibility::Feasible(t)
}
