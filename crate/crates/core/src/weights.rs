//! Weights, cocharacters and the distinguished vectors `ρ`, `τ_d`, `σ_d`, `1_d`.
//!
//! Orientation: dominant weights have nondecreasing coefficients inside each
//! vertex block, antidominant cocharacters have nonincreasing values. Lattice
//! counts are invariant under flipping both conventions at once.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::quiver::{DimVector, Quiver};
use crate::{Error, Result};

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p/q"` or an integer literal.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let t = text.trim();
    let bad = || Error::ParseRational(text.to_string());
    match t.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => BigInt::from_str(t)
            .map(BigRational::from_integer)
            .map_err(|_| bad()),
    }
}

pub fn format_rational(x: &BigRational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Anything with coordinates that can be paired exactly.
pub trait Coordinates {
    fn len(&self) -> usize;
    fn coord(&self, i: usize) -> BigRational;
    fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// `⟨λ, x⟩ = Σ λ_p x_p`.
pub fn pairing<A: Coordinates + ?Sized, B: Coordinates + ?Sized>(
    lambda: &A,
    x: &B,
) -> Result<BigRational> {
    if lambda.len() != x.len() {
        return Err(Error::LengthMismatch {
            expected: lambda.len(),
            got: x.len(),
        });
    }
    Ok((0..lambda.len()).fold(BigRational::zero(), |acc, i| {
        acc + lambda.coord(i) * x.coord(i)
    }))
}

/// Integral weight in the flat slot coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Weight(pub Vec<i64>);

/// Exact rational vector in the flat slot coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalVector(pub Vec<BigRational>);

/// Integral cocharacter in the flat slot coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Cocharacter(pub Vec<i64>);

impl Coordinates for Weight {
    fn len(&self) -> usize {
        self.0.len()
    }
    fn coord(&self, i: usize) -> BigRational {
        rat(self.0[i])
    }
}

impl Coordinates for Cocharacter {
    fn len(&self) -> usize {
        self.0.len()
    }
    fn coord(&self, i: usize) -> BigRational {
        rat(self.0[i])
    }
}

impl Coordinates for RationalVector {
    fn len(&self) -> usize {
        self.0.len()
    }
    fn coord(&self, i: usize) -> BigRational {
        self.0[i].clone()
    }
}

impl Coordinates for [i64] {
    fn len(&self) -> usize {
        <[i64]>::len(self)
    }
    fn coord(&self, i: usize) -> BigRational {
        rat(self[i])
    }
}

impl RationalVector {
    pub fn zeros(n: usize) -> Self {
        RationalVector(vec![BigRational::zero(); n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add(&self, other: &RationalVector) -> RationalVector {
        RationalVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &RationalVector) -> RationalVector {
        RationalVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, s: &BigRational) -> RationalVector {
        RationalVector(self.0.iter().map(|a| a * s).collect())
    }

    pub fn neg(&self) -> RationalVector {
        RationalVector(self.0.iter().map(|a| -a).collect())
    }

    pub fn sum(&self) -> BigRational {
        self.0.iter().fold(BigRational::zero(), |acc, x| acc + x)
    }
}

impl From<&Weight> for RationalVector {
    fn from(w: &Weight) -> Self {
        RationalVector(w.0.iter().map(|&c| rat(c)).collect())
    }
}

impl fmt::Display for RationalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(format_rational).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Weyl-invariant weight `δ`: one rational value per vertex, repeated across
/// the slots of that vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CentralWeight(pub Vec<BigRational>);

impl CentralWeight {
    pub fn zero(vertices: usize) -> Self {
        CentralWeight(vec![BigRational::zero(); vertices])
    }

    /// `v·τ_d`.
    pub fn from_v(v: i64, d: &DimVector) -> Result<Self> {
        let total = d.total();
        if total == 0 {
            return Err(Error::ZeroDimension);
        }
        Ok(CentralWeight(vec![ratio(v, total as i64); d.len()]))
    }

    /// Parses comma-separated per-vertex rationals.
    pub fn parse(text: &str) -> Result<Self> {
        text.split(',')
            .map(parse_rational)
            .collect::<Result<Vec<_>>>()
            .map(CentralWeight)
    }

    pub fn expand(&self, d: &DimVector) -> Result<RationalVector> {
        if self.0.len() != d.len() {
            return Err(Error::DimensionMismatch {
                expected: d.len(),
                got: self.0.len(),
            });
        }
        Ok(RationalVector(
            d.slot_vertices()
                .into_iter()
                .map(|i| self.0[i].clone())
                .collect(),
        ))
    }

    /// `⟨1_d, δ⟩ = Σ_i d^i δ^i`.
    pub fn total(&self, d: &DimVector) -> BigRational {
        self.0
            .iter()
            .zip(d.entries())
            .fold(BigRational::zero(), |acc, (x, &n)| acc + x * rat(n as i64))
    }

    pub fn add(&self, other: &CentralWeight) -> CentralWeight {
        CentralWeight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Display for CentralWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(format_rational).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// `ρ`: coefficient `a − (d^i+1)/2` on slot `(i, a)`.
pub fn rho(d: &DimVector) -> RationalVector {
    let mut out = Vec::with_capacity(d.total());
    for &n in d.entries() {
        for a in 1..=n as i64 {
            out.push(ratio(2 * a - (n as i64 + 1), 2));
        }
    }
    RationalVector(out)
}

/// `τ_d = σ_d / d̄`.
pub fn tau(d: &DimVector) -> RationalVector {
    let n = d.total();
    RationalVector(vec![ratio(1, n.max(1) as i64); n])
}

pub fn sigma(d: &DimVector) -> Weight {
    Weight(vec![1; d.total()])
}

pub fn one_d(d: &DimVector) -> Cocharacter {
    Cocharacter(vec![1; d.total()])
}

/// Coefficients nondecreasing in the slot index inside every vertex block.
pub fn is_dominant<C: Coordinates + ?Sized>(chi: &C, d: &DimVector) -> bool {
    chi.len() == d.total()
        && d
            .blocks()
            .into_iter()
            .all(|b| b.clone().skip(1).all(|p| chi.coord(p - 1) <= chi.coord(p)))
}

impl Cocharacter {
    pub fn is_antidominant(&self, d: &DimVector) -> bool {
        self.0.len() == d.total()
            && d
                .blocks()
                .into_iter()
                .all(|b| b.clone().skip(1).all(|p| self.0[p - 1] >= self.0[p]))
    }

    /// The ordered decomposition `d = d_1 + … + d_k` obtained by grouping
    /// slots by value, largest value first. `None` unless antidominant.
    pub fn associated_partition(&self, d: &DimVector) -> Option<Vec<DimVector>> {
        if !self.is_antidominant(d) {
            return None;
        }
        let mut values = self.0.clone();
        values.sort_unstable_by(|a, b| b.cmp(a));
        values.dedup();
        let owner = d.slot_vertices();
        Some(
            values
                .iter()
                .map(|&val| {
                    let mut part = vec![0u32; d.len()];
                    for (p, &x) in self.0.iter().enumerate() {
                        if x == val {
                            part[owner[p]] += 1;
                        }
                    }
                    DimVector::new(part)
                })
                .collect(),
        )
    }

    /// Antidominant cocharacter taking value `values[j]` on the slots of
    /// `parts[j]`; `values` must be strictly decreasing.
    pub fn from_parts(d: &DimVector, parts: &[&DimVector], values: &[i64]) -> Cocharacter {
        debug_assert_eq!(parts.len(), values.len());
        debug_assert!(values.windows(2).all(|w| w[0] > w[1]));
        let mut out = Vec::with_capacity(d.total());
        for i in 0..d.len() {
            for (part, &val) in parts.iter().zip(values) {
                out.extend(std::iter::repeat_n(val, part.entries()[i] as usize));
            }
        }
        debug_assert_eq!(out.len(), d.total());
        Cocharacter(out)
    }
}

/// `n_λ = Σ_{β∈A_R, ⟨λ,β⟩>0} ⟨λ,β⟩ − Σ_{α∈A_𝔤, ⟨λ,α⟩>0} ⟨λ,α⟩`.
///
/// The definition pairs `λ` with the duals of these weights; for a symmetric
/// quiver both multisets are negation-stable, so the two sums coincide.
pub fn n_lambda(q: &Quiver, d: &DimVector, lambda: &Cocharacter) -> Result<i64> {
    q.require_symmetric()?;
    q.check_dim(d)?;
    if lambda.0.len() != d.total() {
        return Err(Error::LengthMismatch {
            expected: d.total(),
            got: lambda.0.len(),
        });
    }
    let blocks = d.blocks();
    let lam = &lambda.0;
    let positive_gap = |bi: &std::ops::Range<usize>, bj: &std::ops::Range<usize>| -> i64 {
        bi.clone()
            .map(|a| bj.clone().map(|b| (lam[a] - lam[b]).max(0)).sum::<i64>())
            .sum()
    };
    let mut total = 0i64;
    for (i, bi) in blocks.iter().enumerate() {
        for (j, bj) in blocks.iter().enumerate() {
            let m = q.arrow_count(i, j) as i64;
            if m > 0 {
                total += m * positive_gap(bi, bj);
            }
        }
        total -= positive_gap(bi, bi);
    }
    Ok(total)
}

/// `ε_{λ,δ} = 1` iff `n_λ/2 + ⟨λ,δ⟩ ∈ ℤ`.
pub fn epsilon_lambda(
    q: &Quiver,
    d: &DimVector,
    lambda: &Cocharacter,
    delta: &CentralWeight,
) -> Result<bool> {
    if !lambda.is_antidominant(d) {
        return Err(Error::NotAntidominant);
    }
    let n = n_lambda(q, d, lambda)?;
    let value = ratio(n, 2) + pairing(lambda, &delta.expand(d)?)?;
    Ok(value.is_integer())
}

pub(crate) fn floor_i64(x: &BigRational) -> Result<i64> {
    i64::try_from(x.floor().to_integer()).map_err(|_| Error::Overflow("floor"))
}

pub(crate) fn ceil_i64(x: &BigRational) -> Result<i64> {
    i64::try_from(x.ceil().to_integer()).map_err(|_| Error::Overflow("ceil"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dv(v: &[u32]) -> DimVector {
        DimVector::new(v.to_vec())
    }

    #[test]
    fn rational_literals() {
        assert_eq!(parse_rational("3/6").unwrap(), ratio(1, 2));
        assert_eq!(parse_rational("-4").unwrap(), rat(-4));
        assert_eq!(parse_rational(" 2 / -4 ").unwrap(), ratio(-1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(format_rational(&ratio(-3, 6)), "-1/2");
    }

    #[test]
    fn pairing_examples() {
        for d in [dv(&[1]), dv(&[2, 3]), dv(&[4, 0, 1])] {
            assert_eq!(pairing(&one_d(&d), &tau(&d)).unwrap(), rat(1));
            assert_eq!(pairing(&one_d(&d), &rho(&d)).unwrap(), rat(0));
            assert_eq!(pairing(&one_d(&d), &sigma(&d)).unwrap(), rat(d.total() as i64));
        }
        let c = RationalVector(vec![ratio(5, 3), ratio(-7, 2)]);
        assert_eq!(pairing(&Cocharacter(vec![1, 0]), &c).unwrap(), ratio(5, 3));
        assert!(pairing(&Cocharacter(vec![1]), &c).is_err());
    }

    #[test]
    fn rho_examples() {
        assert_eq!(rho(&dv(&[2])).0, vec![ratio(-1, 2), ratio(1, 2)]);
        assert_eq!(rho(&dv(&[1, 1])).0, vec![rat(0), rat(0)]);
        assert_eq!(rho(&dv(&[3])).0, vec![rat(-1), rat(0), rat(1)]);
        assert!(is_dominant(&rho(&dv(&[4, 2])), &dv(&[4, 2])));
    }

    #[test]
    fn dominance() {
        assert!(is_dominant(&Weight(vec![0, 1]), &dv(&[2])));
        assert!(!is_dominant(&Weight(vec![1, 0]), &dv(&[2])));
        assert!(is_dominant(&Weight(vec![5, -3, 2]), &dv(&[1, 1, 1])));
        assert!(is_dominant(&Weight(vec![-1, -1, 2]), &dv(&[3])));
        // Across blocks there is no constraint.
        assert!(is_dominant(&Weight(vec![3, 0, 1]), &dv(&[1, 2])));
    }

    #[test]
    fn associated_partition() {
        let d = dv(&[2, 1]);
        let lam = Cocharacter(vec![5, 2, 5]);
        assert_eq!(
            lam.associated_partition(&d).unwrap(),
            vec![dv(&[1, 1]), dv(&[1, 0])]
        );
        assert!(Cocharacter(vec![2, 5, 5]).associated_partition(&d).is_none());
        let parts = [dv(&[1, 1]), dv(&[1, 0])];
        let refs: Vec<&DimVector> = parts.iter().collect();
        assert_eq!(Cocharacter::from_parts(&d, &refs, &[5, 2]), lam);
    }

    #[test]
    fn n_lambda_examples() {
        let d = dv(&[2]);
        assert_eq!(n_lambda(&Quiver::loops(3), &d, &Cocharacter(vec![1, 0])).unwrap(), 2);
        assert_eq!(n_lambda(&Quiver::loops(3), &d, &one_d(&d)).unwrap(), 0);
        for e in 1..6 {
            let q = Quiver::loops(2 * e + 1);
            assert_eq!(n_lambda(&q, &d, &Cocharacter(vec![1, 0])).unwrap(), 2 * e as i64);
        }
        let skew = Quiver::from_matrix(vec![vec![0, 1], vec![0, 0]]).unwrap();
        assert!(matches!(
            n_lambda(&skew, &dv(&[1, 1]), &Cocharacter(vec![1, 0])),
            Err(Error::Asymmetric { .. })
        ));
    }

    #[test]
    fn epsilon_examples() {
        let q = Quiver::loops(3);
        let d = dv(&[2]);
        let lam = Cocharacter(vec![1, 0]);
        assert!(!epsilon_lambda(&q, &d, &lam, &CentralWeight::from_v(1, &d).unwrap()).unwrap());
        assert!(epsilon_lambda(&q, &d, &lam, &CentralWeight::zero(1)).unwrap());
        for v in -3..4 {
            let delta = CentralWeight::from_v(v, &d).unwrap();
            assert!(epsilon_lambda(&q, &d, &one_d(&d), &delta).unwrap());
        }
        assert_eq!(
            epsilon_lambda(&q, &d, &Cocharacter(vec![0, 1]), &CentralWeight::zero(1)),
            Err(Error::NotAntidominant)
        );
    }

    #[test]
    fn central_weight_total() {
        let d = dv(&[2, 3]);
        let delta = CentralWeight::parse("1/2,-1/3").unwrap();
        assert_eq!(delta.total(&d), rat(0));
        assert_eq!(
            pairing(&one_d(&d), &delta.expand(&d).unwrap()).unwrap(),
            delta.total(&d)
        );
    }

    use proptest::prelude::*;

    fn lambda_for(d: &DimVector) -> impl Strategy<Value = Vec<i64>> {
        proptest::collection::vec(-5i64..=5, d.total())
    }

    proptest! {
        #[test]
        fn n_lambda_central_shift_and_homogeneity(
            loops in 0u32..5, cross in 0u32..3, a in 1u32..3, b in 0u32..3,
            raw in lambda_for(&DimVector::new(vec![2, 2])), c in -4i64..4, m in 1i64..4,
        ) {
            let q = Quiver::from_matrix(vec![vec![loops, cross], vec![cross, loops + 1]]).unwrap();
            let d = DimVector::new(vec![a, b]);
            let lam: Vec<i64> = raw[..d.total()].to_vec();
            let n = n_lambda(&q, &d, &Cocharacter(lam.clone())).unwrap();
            let shifted: Vec<i64> = lam.iter().map(|x| x + c).collect();
            prop_assert_eq!(n_lambda(&q, &d, &Cocharacter(shifted)).unwrap(), n);
            let scaled: Vec<i64> = lam.iter().map(|x| x * m).collect();
            prop_assert_eq!(n_lambda(&q, &d, &Cocharacter(scaled)).unwrap(), m * n);
            let negated: Vec<i64> = lam.iter().map(|x| -x).collect();
            prop_assert_eq!(n_lambda(&q, &d, &Cocharacter(negated)).unwrap(), n);
        }
    }
}
