//! The zonotope `W(d) = ½ Σ_{β∈A_R} [0, β]` with exact membership tests.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::quiver::{DimVector, Quiver};
use crate::simplex::{self, Feasibility};
use crate::weights::{ratio, Coordinates, RationalVector};
use crate::{Error, Result, INDICATOR_CUTOFF};

/// `mult` copies of the segment `[0, ½(e_plus − e_minus)]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Generator {
    pub plus: usize,
    pub minus: usize,
    pub mult: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Zonotope {
    dim: usize,
    generators: Vec<Generator>,
}

impl Zonotope {
    pub fn new(dim: usize, generators: Vec<Generator>) -> Self {
        assert!(generators
            .iter()
            .all(|g| g.plus < dim && g.minus < dim && g.plus != g.minus));
        let generators = generators.into_iter().filter(|g| g.mult > 0).collect();
        Zonotope { dim, generators }
    }

    /// `W(d)` for the representation space of `q` in dimension `d`.
    pub fn for_quiver(q: &Quiver, d: &DimVector) -> Result<Self> {
        let (rep, _) = q.weight_multisets(d)?;
        let generators = rep
            .nonzero()
            .map(|((p, q), mult)| Generator {
                plus: p,
                minus: q,
                mult,
            })
            .collect();
        Ok(Zonotope::new(d.total(), generators))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len != self.dim {
            return Err(Error::LengthMismatch {
                expected: self.dim,
                got: len,
            });
        }
        Ok(())
    }

    /// `h(λ) = Σ_β ½·max(0, ⟨λ, g_β⟩)`.
    pub fn support<C: Coordinates + ?Sized>(&self, lambda: &C) -> Result<BigRational> {
        self.check_len(lambda.len())?;
        let mut twice = BigRational::zero();
        for g in &self.generators {
            let gap = lambda.coord(g.plus) - lambda.coord(g.minus);
            if gap > BigRational::zero() {
                twice += gap * ratio(g.mult as i64, 1);
            }
        }
        Ok(twice / ratio(2, 1))
    }

    /// Per-coordinate `[−h(−e_p), h(e_p)]`.
    pub fn bounding_box(&self) -> Vec<(BigRational, BigRational)> {
        let mut lo = vec![0i64; self.dim];
        let mut hi = vec![0i64; self.dim];
        for g in &self.generators {
            hi[g.plus] += g.mult as i64;
            lo[g.minus] -= g.mult as i64;
        }
        lo.into_iter()
            .zip(hi)
            .map(|(l, h)| (ratio(l, 2), ratio(h, 2)))
            .collect()
    }

    /// Ground-truth membership: `x = Σ t_β g_β` with `t_β ∈ [0, mult/2]`,
    /// decided by the exact simplex. Boundary points are members.
    pub fn contains(&self, x: &RationalVector) -> Result<bool> {
        Ok(self.membership_witness(x)?.is_feasible())
    }

    pub fn membership_witness(&self, x: &RationalVector) -> Result<Feasibility> {
        self.check_len(x.len())?;
        let m = self.generators.len();
        let mut rows = vec![vec![BigRational::zero(); m]; self.dim];
        for (k, g) in self.generators.iter().enumerate() {
            rows[g.plus][k] = ratio(1, 1);
            rows[g.minus][k] = ratio(-1, 1);
        }
        let upper: Vec<Option<BigRational>> = self
            .generators
            .iter()
            .map(|g| Some(ratio(g.mult as i64, 2)))
            .collect();
        Ok(simplex::feasible(&rows, &x.0, &upper))
    }

    /// Indicator-inequality test `⟨±1_S, x⟩ ≤ h(±1_S)` over all subsets `S`.
    /// Always a necessary condition. Refuses dimensions above the default
    /// cutoff.
    pub fn contains_fast(&self, x: &RationalVector) -> Result<bool> {
        IndicatorTable::new(self, INDICATOR_CUTOFF)?.contains(x)
    }

    pub fn is_centrally_symmetric(&self) -> bool {
        self.generators.iter().all(|g| {
            let fwd: u32 = self
                .generators
                .iter()
                .filter(|h| h.plus == g.plus && h.minus == g.minus)
                .map(|h| h.mult)
                .sum();
            let back: u32 = self
                .generators
                .iter()
                .filter(|h| h.plus == g.minus && h.minus == g.plus)
                .map(|h| h.mult)
                .sum();
            fwd == back
        })
    }
}

/// Precomputed `2·h(1_S)` for every subset `S` of coordinates.
#[derive(Debug, Clone)]
pub struct IndicatorTable {
    dim: usize,
    doubled: Vec<i64>,
}

impl IndicatorTable {
    pub fn new(z: &Zonotope, cutoff: usize) -> Result<Self> {
        if z.dim > cutoff {
            return Err(Error::CutoffExceeded {
                what: "indicator dimension",
                value: z.dim,
                limit: cutoff,
            });
        }
        let n = z.dim;
        let mut doubled = vec![0i64; 1usize << n];
        for (s, slot) in doubled.iter_mut().enumerate() {
            *slot = z
                .generators
                .iter()
                .filter(|g| s >> g.plus & 1 == 1 && s >> g.minus & 1 == 0)
                .map(|g| g.mult as i64)
                .sum();
        }
        Ok(IndicatorTable { dim: n, doubled })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn contains(&self, x: &RationalVector) -> Result<bool> {
        if x.len() != self.dim {
            return Err(Error::LengthMismatch {
                expected: self.dim,
                got: x.len(),
            });
        }
        Ok(match scale_to_integers(x) {
            Some((ints, denom)) => self.contains_scaled(&ints, denom),
            None => self.contains_exact(x),
        })
    }

    /// `x = ints / denom`, `denom > 0`.
    pub fn contains_scaled(&self, ints: &[i128], denom: i128) -> bool {
        let full = (1usize << self.dim) - 1;
        let mut sum: i128 = 0;
        let mut gray = 0usize;
        // Walk subsets in Gray-code order so each step moves one coordinate.
        for k in 0..=full {
            if k > 0 {
                let bit = (k as u64).trailing_zeros() as usize;
                gray ^= 1 << bit;
                if gray >> bit & 1 == 1 {
                    sum += ints[bit];
                } else {
                    sum -= ints[bit];
                }
            }
            let pos = denom * self.doubled[gray] as i128;
            let neg = denom * self.doubled[full ^ gray] as i128;
            if 2 * sum > pos || -2 * sum > neg {
                return false;
            }
        }
        true
    }

    fn contains_exact(&self, x: &RationalVector) -> bool {
        let full = (1usize << self.dim) - 1;
        (0..=full).all(|s| {
            let sum = (0..self.dim)
                .filter(|p| s >> p & 1 == 1)
                .fold(BigRational::zero(), |acc, p| acc + &x.0[p]);
            let two = ratio(2, 1);
            &sum * &two <= ratio(self.doubled[s], 1) && -(&sum * &two) <= ratio(self.doubled[full ^ s], 1)
        })
    }
}

/// Common denominator scaling; `None` on `i128` overflow.
pub fn scale_to_integers(x: &RationalVector) -> Option<(Vec<i128>, i128)> {
    let denom = x
        .0
        .iter()
        .fold(BigInt::from(1), |acc, r| acc.lcm(r.denom()));
    let denom_small = denom.to_i128()?;
    // Leave headroom for the 2·sum comparisons.
    if denom_small > 1 << 40 {
        return None;
    }
    let ints = x
        .0
        .iter()
        .map(|r| (r.numer() * (&denom / r.denom())).to_i128())
        .collect::<Option<Vec<_>>>()?;
    if ints.iter().any(|v| v.abs() > 1 << 60) {
        return None;
    }
    Some((ints, denom_small))
}

/// How candidate points are tested for membership in `W(d)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MembershipMode {
    /// Exact simplex only.
    Lp,
    /// Indicator inequalities only.
    Indicator,
    /// Both; disagreement is an error.
    #[default]
    Checked,
}

/// A zonotope bundled with the precomputation its membership mode needs.
#[derive(Debug, Clone)]
pub struct Membership {
    zonotope: Zonotope,
    table: Option<IndicatorTable>,
    mode: MembershipMode,
}

impl Membership {
    /// In `Checked` mode an instance above the indicator cutoff silently
    /// degrades to the LP; in `Indicator` mode it is an error.
    pub fn new(zonotope: Zonotope, mode: MembershipMode) -> Result<Self> {
        let table = match mode {
            MembershipMode::Lp => None,
            MembershipMode::Indicator => Some(IndicatorTable::new(&zonotope, INDICATOR_CUTOFF)?),
            MembershipMode::Checked => IndicatorTable::new(&zonotope, INDICATOR_CUTOFF).ok(),
        };
        let mode = match (mode, &table) {
            (MembershipMode::Checked, None) => MembershipMode::Lp,
            (m, _) => m,
        };
        Ok(Membership {
            zonotope,
            table,
            mode,
        })
    }

    pub fn zonotope(&self) -> &Zonotope {
        &self.zonotope
    }

    pub fn mode(&self) -> MembershipMode {
        self.mode
    }

    pub fn contains(&self, x: &RationalVector) -> Result<bool> {
        match (self.mode, &self.table) {
            (MembershipMode::Lp, _) => self.zonotope.contains(x),
            (MembershipMode::Indicator, Some(t)) => t.contains(x),
            (MembershipMode::Checked, Some(t)) => {
                let fast = t.contains(x)?;
                let lp = self.zonotope.contains(x)?;
                if fast != lp {
                    return Err(Error::MembershipDisagreement(x.to_string()));
                }
                Ok(lp)
            }
            (_, None) => unreachable!("table built for indicator modes"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::{one_d, rat, Cocharacter};

    fn toric(g: u32) -> Zonotope {
        Zonotope::for_quiver(&Quiver::toric(g), &DimVector::new(vec![1, 1])).unwrap()
    }

    fn rv(xs: &[(i64, i64)]) -> RationalVector {
        RationalVector(xs.iter().map(|&(n, d)| ratio(n, d)).collect())
    }

    #[test]
    fn support_examples() {
        let z = toric(1);
        assert_eq!(z.support(&one_d(&DimVector::new(vec![1, 1]))).unwrap(), rat(0));
        assert_eq!(z.support(&Cocharacter(vec![1, -1])).unwrap(), rat(3));
        for e in 0..4 {
            let z = Zonotope::for_quiver(&Quiver::loops(2 * e + 1), &DimVector::new(vec![2])).unwrap();
            assert_eq!(
                z.support(&Cocharacter(vec![1, -1])).unwrap(),
                rat(2 * e as i64 + 1)
            );
        }
    }

    #[test]
    fn toric_membership() {
        let z = toric(1);
        assert!(z.contains(&rv(&[(3, 2), (-3, 2)])).unwrap());
        assert!(!z.contains(&rv(&[(2, 1), (-2, 1)])).unwrap());
        assert!(z.contains(&RationalVector::zeros(2)).unwrap());
        assert!(!z.contains(&rv(&[(1, 2), (0, 1)])).unwrap());
        assert!(z.contains_fast(&rv(&[(3, 2), (-3, 2)])).unwrap());
        assert!(!z.contains_fast(&rv(&[(2, 1), (-2, 1)])).unwrap());
        assert!(!z.contains_fast(&rv(&[(1, 2), (0, 1)])).unwrap());
    }

    #[test]
    fn boxes() {
        let z = Zonotope::for_quiver(&Quiver::loops(3), &DimVector::new(vec![2])).unwrap();
        assert_eq!(z.bounding_box(), vec![(ratio(-3, 2), ratio(3, 2)); 2]);
        assert_eq!(toric(1).bounding_box(), vec![(ratio(-3, 2), ratio(3, 2)); 2]);
        let empty = Zonotope::new(3, vec![]);
        assert_eq!(empty.bounding_box(), vec![(rat(0), rat(0)); 3]);
        assert!(empty.contains(&RationalVector::zeros(3)).unwrap());
        assert!(!empty.contains(&rv(&[(1, 1), (-1, 1), (0, 1)])).unwrap());
        let outside = rv(&[(2, 1), (0, 1)]);
        assert!(!z.contains_fast(&outside).unwrap());
    }

    #[test]
    fn zero_is_a_member() {
        for q in [Quiver::loops(1), Quiver::loops(4), Quiver::toric(2)] {
            for d in 1..4u32 {
                let dv = DimVector::new(vec![d; q.num_vertices()]);
                let z = Zonotope::for_quiver(&q, &dv).unwrap();
                assert!(z.contains(&RationalVector::zeros(dv.total())).unwrap());
            }
        }
    }

    #[test]
    fn indicator_cutoff() {
        let z = Zonotope::for_quiver(&Quiver::loops(1), &DimVector::new(vec![17])).unwrap();
        assert!(matches!(
            z.contains_fast(&RationalVector::zeros(17)),
            Err(Error::CutoffExceeded { .. })
        ));
        // Checked mode falls back to the LP.
        let m = Membership::new(z, MembershipMode::Checked).unwrap();
        assert_eq!(m.mode(), MembershipMode::Lp);
    }

    #[test]
    fn fast_agrees_with_lp_on_odd_loop_boxes() {
        // One vertex with 2e+1 loops, every half-integral point of the box.
        for e in 0..2u32 {
            for d in 1..=4u32 {
                let dv = DimVector::new(vec![d]);
                let z = Zonotope::for_quiver(&Quiver::loops(2 * e + 1), &dv).unwrap();
                let table = IndicatorTable::new(&z, INDICATOR_CUTOFF).unwrap();
                let bx = z.bounding_box();
                let ranges: Vec<(i64, i64)> = bx
                    .iter()
                    .map(|(l, h)| ((l * rat(2)).to_integer().try_into().unwrap(), (h * rat(2)).to_integer().try_into().unwrap()))
                    .collect();
                let mut point: Vec<i64> = ranges.iter().map(|r| r.0).collect();
                let mut checked = 0;
                'outer: loop {
                    if point.iter().sum::<i64>() == 0 || checked % 7 == 0 {
                        let x = RationalVector(point.iter().map(|&c| ratio(c, 2)).collect());
                        assert_eq!(table.contains(&x).unwrap(), z.contains(&x).unwrap(), "{x}");
                    }
                    checked += 1;
                    for k in 0..point.len() {
                        if point[k] < ranges[k].1 {
                            point[k] += 1;
                            continue 'outer;
                        }
                        point[k] = ranges[k].0;
                    }
                    break;
                }
            }
        }
    }

    use proptest::prelude::*;

    fn small_zonotope() -> impl Strategy<Value = (Quiver, DimVector)> {
        (0u32..4, 0u32..3, 0u32..4, 0u32..3, 0u32..3).prop_map(|(l1, c, l2, a, b)| {
            let q = Quiver::from_matrix(vec![vec![l1, 2 * c], vec![2 * c, l2]]).unwrap();
            (q, DimVector::new(vec![a + 1, b]))
        })
    }

    proptest! {
        #[test]
        fn membership_properties(
            (q, d) in small_zonotope(),
            nums in proptest::collection::vec(-12i64..=12, 5),
            den in 1i64..5,
            lam in proptest::collection::vec(-4i64..=4, 5),
            s in 0i64..=4,
        ) {
            let z = Zonotope::for_quiver(&q, &d).unwrap();
            prop_assert!(z.is_centrally_symmetric());
            let n = d.total();
            let mut coords: Vec<BigRational> = nums[..n].iter().map(|&v| ratio(v, den)).collect();
            // Project onto the sum-zero hyperplane so that membership is not trivially false.
            let total = coords.iter().fold(rat(0), |a, b| a + b);
            coords[0] -= total;
            let x = RationalVector(coords);
            let inside = z.contains(&x).unwrap();
            prop_assert_eq!(inside, z.contains(&x.neg()).unwrap());
            prop_assert_eq!(inside, z.contains_fast(&x).unwrap());
            if inside {
                let l = Cocharacter(lam[..n].to_vec());
                prop_assert!(crate::weights::pairing(&l, &x).unwrap() <= z.support(&l).unwrap());
                let shrunk = x.scale(&ratio(s, 4));
                prop_assert!(z.contains(&shrunk).unwrap());
            }
        }

        #[test]
        fn witnesses_are_valid((q, d) in small_zonotope(), nums in proptest::collection::vec(-6i64..=6, 5)) {
            let z = Zonotope::for_quiver(&q, &d).unwrap();
            let n = d.total();
            let mut coords: Vec<BigRational> = nums[..n].iter().map(|&v| ratio(v, 2)).collect();
            let total = coords.iter().fold(rat(0), |a, b| a + b);
            coords[0] -= total;
            let x = RationalVector(coords);
            if let Feasibility::Feasible(t) = z.membership_witness(&x).unwrap() {
                let mut sum = vec![rat(0); n];
                for (g, tk) in z.generators().iter().zip(&t) {
                    prop_assert!(*tk >= rat(0) && *tk <= ratio(g.mult as i64, 2));
                    sum[g.plus] += tk;
                    sum[g.minus] -= tk;
                }
                prop_assert_eq!(sum, x.0);
            }
        }
    }
}
