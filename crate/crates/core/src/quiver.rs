//! Quivers, dimension vectors and the weight multisets of `R(d)` and `𝔤(d)`.

use std::fmt;
use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Tag for the potential attached to a quiver. The potential itself is never
/// evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Potential {
    #[default]
    None,
    Tripled,
}

/// A quiver given by its vertex names and arrow-multiplicity matrix;
/// `arrows[a][b]` counts arrows `a → b` and the diagonal counts loops.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Vec<u32>>,
    #[serde(skip_serializing_if = "is_no_potential")]
    potential: Potential,
}

fn is_no_potential(p: &Potential) -> bool {
    *p == Potential::None
}

#[derive(Deserialize)]
struct RawQuiver {
    vertices: Vec<String>,
    arrows: Vec<Vec<i64>>,
    #[serde(default)]
    potential: Potential,
}

impl Quiver {
    pub fn new(vertices: Vec<String>, arrows: Vec<Vec<u32>>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::InvalidQuiver("no vertices".into()));
        }
        if arrows.len() != vertices.len() {
            return Err(Error::InvalidQuiver(format!(
                "arrows has {} rows but there are {} vertices",
                arrows.len(),
                vertices.len()
            )));
        }
        for (r, row) in arrows.iter().enumerate() {
            if row.len() != vertices.len() {
                return Err(Error::InvalidQuiver(format!(
                    "arrows[{r}] has {} entries, expected {}",
                    row.len(),
                    vertices.len()
                )));
            }
        }
        Ok(Quiver {
            vertices,
            arrows,
            potential: Potential::None,
        })
    }

    /// Quiver with vertices named `v1, v2, ...`.
    pub fn from_matrix(arrows: Vec<Vec<u32>>) -> Result<Self> {
        let names = (1..=arrows.len()).map(|i| format!("v{i}")).collect();
        Quiver::new(names, arrows)
    }

    /// One vertex with `loops` loops.
    pub fn loops(loops: u32) -> Self {
        Quiver::from_matrix(vec![vec![loops]]).expect("1x1 matrix")
    }

    /// Two vertices with one loop each and `2g+1` arrows in each direction.
    pub fn toric(g: u32) -> Self {
        let m = 2 * g + 1;
        Quiver::from_matrix(vec![vec![1, m], vec![m, 1]]).expect("2x2 matrix")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawQuiver =
            serde_json::from_str(text).map_err(|e| Error::InvalidQuiver(e.to_string()))?;
        let mut arrows = Vec::with_capacity(raw.arrows.len());
        for (r, row) in raw.arrows.iter().enumerate() {
            let mut out = Vec::with_capacity(row.len());
            for (c, &x) in row.iter().enumerate() {
                let x = u32::try_from(x).map_err(|_| {
                    Error::InvalidQuiver(format!("arrows[{r}][{c}] = {x} is not a valid count"))
                })?;
                out.push(x);
            }
            arrows.push(out);
        }
        let mut q = Quiver::new(raw.vertices, arrows)?;
        q.potential = raw.potential;
        Ok(q)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("quiver serializes")
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrows(&self) -> &[Vec<u32>] {
        &self.arrows
    }

    pub fn arrow_count(&self, from: usize, to: usize) -> u32 {
        self.arrows[from][to]
    }

    pub fn potential(&self) -> Potential {
        self.potential
    }

    pub fn with_potential(mut self, potential: Potential) -> Self {
        self.potential = potential;
        self
    }

    pub fn is_symmetric(&self) -> bool {
        self.asymmetry().is_none()
    }

    fn asymmetry(&self) -> Option<(usize, usize)> {
        let n = self.num_vertices();
        (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .find(|&(a, b)| self.arrows[a][b] != self.arrows[b][a])
    }

    /// Fails with [`Error::Asymmetric`] naming the first offending cell.
    pub fn require_symmetric(&self) -> Result<()> {
        match self.asymmetry() {
            None => Ok(()),
            Some((row, col)) => Err(Error::Asymmetric {
                row,
                col,
                forward: self.arrows[row][col],
                backward: self.arrows[col][row],
            }),
        }
    }

    /// The doubled quiver: every arrow gets a reversed partner.
    pub fn double(&self) -> Quiver {
        let n = self.num_vertices();
        let arrows = (0..n)
            .map(|a| (0..n).map(|b| self.arrows[a][b] + self.arrows[b][a]).collect())
            .collect();
        Quiver {
            vertices: self.vertices.clone(),
            arrows,
            potential: Potential::None,
        }
    }

    /// The tripled quiver: the double plus one loop at every vertex, tagged
    /// with the canonical potential.
    pub fn triple(&self) -> Quiver {
        let mut q = self.double();
        for (i, row) in q.arrows.iter_mut().enumerate() {
            row[i] += 1;
        }
        q.potential = Potential::Tripled;
        q
    }

    pub fn check_dim(&self, d: &DimVector) -> Result<()> {
        if d.len() != self.num_vertices() {
            return Err(Error::DimensionMismatch {
                expected: self.num_vertices(),
                got: d.len(),
            });
        }
        Ok(())
    }

    /// Multisets of `T(d)`-weights of `R(d)` and of the roots of `𝔤(d)`.
    pub fn weight_multisets(&self, d: &DimVector) -> Result<(WeightMultiset, WeightMultiset)> {
        self.check_dim(d)?;
        let blocks = d.blocks();
        let mut rep = Vec::new();
        for (i, bi) in blocks.iter().enumerate() {
            for (j, bj) in blocks.iter().enumerate() {
                let m = self.arrows[i][j];
                if m == 0 {
                    continue;
                }
                for p in bi.clone() {
                    for q in bj.clone() {
                        rep.push(((p, q), m));
                    }
                }
            }
        }
        let mut roots = Vec::new();
        for b in &blocks {
            for p in b.clone() {
                for q in b.clone() {
                    if p != q {
                        roots.push(((p, q), 1));
                    }
                }
            }
        }
        Ok((WeightMultiset { entries: rep }, WeightMultiset { entries: roots }))
    }
}

/// Dimension vector `d = (d^i)`, one entry per vertex.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DimVector(Vec<u32>);

impl DimVector {
    pub fn new(entries: Vec<u32>) -> Self {
        DimVector(entries)
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `d̄ = Σ d^i`.
    pub fn total(&self) -> usize {
        self.0.iter().map(|&x| x as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// Flat slot ranges of each vertex block.
    pub fn blocks(&self) -> Vec<Range<usize>> {
        let mut start = 0;
        self.0
            .iter()
            .map(|&n| {
                let r = start..start + n as usize;
                start = r.end;
                r
            })
            .collect()
    }

    /// Vertex owning each flat slot.
    pub fn slot_vertices(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &n)| std::iter::repeat_n(i, n as usize))
            .collect()
    }

    pub fn checked_sub(&self, other: &DimVector) -> Option<DimVector> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(DimVector)
    }

    pub fn add(&self, other: &DimVector) -> DimVector {
        DimVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Parses `"a,b,c"`.
    pub fn parse(text: &str) -> Result<Self> {
        text.split(',')
            .map(|s| {
                s.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidQuiver(format!("bad dimension entry `{s}`")))
            })
            .collect::<Result<Vec<_>>>()
            .map(DimVector)
    }
}

impl From<Vec<u32>> for DimVector {
    fn from(v: Vec<u32>) -> Self {
        DimVector(v)
    }
}

impl fmt::Display for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Multiset of weights `β_p − β_q` over flat slots. Entries with `p == q` are
/// zero weights kept so that cardinalities match `Σ arrows[i][j]·d^i·d^j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightMultiset {
    pub entries: Vec<((usize, usize), u32)>,
}

impl WeightMultiset {
    pub fn cardinality(&self) -> u64 {
        self.entries.iter().map(|&(_, m)| m as u64).sum()
    }

    pub fn multiplicity(&self, p: usize, q: usize) -> u32 {
        self.entries
            .iter()
            .filter(|&&(pq, _)| pq == (p, q))
            .map(|&(_, m)| m)
            .sum()
    }

    /// Nonzero weights only.
    pub fn nonzero(&self) -> impl Iterator<Item = ((usize, usize), u32)> + '_ {
        self.entries.iter().copied().filter(|&((p, q), _)| p != q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetry_examples() {
        assert!(Quiver::loops(3).is_symmetric());
        let q = Quiver::from_matrix(vec![vec![0, 1], vec![0, 0]]).unwrap();
        assert!(!q.is_symmetric());
        assert_eq!(
            q.require_symmetric(),
            Err(Error::Asymmetric {
                row: 0,
                col: 1,
                forward: 1,
                backward: 0
            })
        );
        assert!(Quiver::from_matrix(vec![vec![1, 3], vec![3, 1]])
            .unwrap()
            .is_symmetric());
    }

    #[test]
    fn doubling() {
        assert_eq!(Quiver::loops(1).double().arrows(), &[vec![2]]);
        let q = Quiver::from_matrix(vec![vec![0, 2], vec![0, 0]]).unwrap();
        assert_eq!(q.double().arrows(), &[vec![0, 2], vec![2, 0]]);
        for g in 0..5 {
            assert_eq!(Quiver::loops(g).double().arrows(), &[vec![2 * g]]);
        }
    }

    #[test]
    fn tripling() {
        let t = Quiver::loops(1).triple();
        assert_eq!(t.arrows(), &[vec![3]]);
        assert_eq!(t.potential(), Potential::Tripled);
        let empty = Quiver::from_matrix(vec![vec![0, 0], vec![0, 0]]).unwrap();
        assert_eq!(empty.triple().arrows(), &[vec![1, 0], vec![0, 1]]);
        assert_eq!(Quiver::loops(0).triple().arrows(), &[vec![1]]);
        let skew = Quiver::from_matrix(vec![vec![0, 3], vec![1, 2]]).unwrap();
        assert!(skew.triple().is_symmetric());
    }

    #[test]
    fn multisets_three_loops() {
        let q = Quiver::loops(3);
        let (rep, roots) = q.weight_multisets(&DimVector::new(vec![2])).unwrap();
        assert_eq!(rep.multiplicity(0, 1), 3);
        assert_eq!(rep.multiplicity(1, 0), 3);
        assert_eq!(rep.multiplicity(0, 0), 3);
        assert_eq!(rep.cardinality(), 12);
        assert_eq!(roots.entries, vec![((0, 1), 1), ((1, 0), 1)]);
    }

    #[test]
    fn multisets_toric() {
        let (rep, roots) = Quiver::toric(1)
            .weight_multisets(&DimVector::new(vec![1, 1]))
            .unwrap();
        assert_eq!(rep.multiplicity(0, 1), 3);
        assert_eq!(rep.multiplicity(1, 0), 3);
        assert_eq!(rep.multiplicity(0, 0) + rep.multiplicity(1, 1), 2);
        assert!(roots.entries.is_empty());
    }

    #[test]
    fn zero_block_has_no_slots() {
        let (rep, roots) = Quiver::toric(0)
            .weight_multisets(&DimVector::new(vec![2, 0]))
            .unwrap();
        assert!(rep.entries.iter().all(|&((p, q), _)| p < 2 && q < 2));
        assert_eq!(roots.cardinality(), 2);
    }

    #[test]
    fn mismatched_dimension() {
        assert!(matches!(
            Quiver::loops(1).weight_multisets(&DimVector::new(vec![1, 1])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn json_schema() {
        let q = Quiver::from_json(r#"{"vertices":["a","b"],"arrows":[[1,3],[3,1]]}"#).unwrap();
        assert_eq!(q, Quiver::toric(1).renamed(&["a", "b"]));
        let err = Quiver::from_json(r#"{"vertices":["a","b"],"arrows":[[1,-3],[3,1]]}"#)
            .unwrap_err()
            .to_string();
        assert!(err.contains("arrows[0][1]"), "{err}");
        let err = Quiver::from_json(r#"{"vertices":["a","b"],"arrows":[[1,3],[3]]}"#)
            .unwrap_err()
            .to_string();
        assert!(err.contains("arrows[1]"), "{err}");
        let back = Quiver::from_json(&q.to_json()).unwrap();
        assert_eq!(back, q);
    }

    impl Quiver {
        fn renamed(mut self, names: &[&str]) -> Self {
            self.vertices = names.iter().map(|s| s.to_string()).collect();
            self
        }
    }

    use proptest::prelude::*;

    fn small_quiver() -> impl Strategy<Value = Quiver> {
        (1usize..4).prop_flat_map(|n| {
            proptest::collection::vec(proptest::collection::vec(0u32..4, n), n)
                .prop_map(|m| Quiver::from_matrix(m).unwrap())
        })
    }

    proptest! {
        #[test]
        fn cardinalities(q in small_quiver(), seed in proptest::collection::vec(0u32..4, 3)) {
            let d = DimVector::new(seed[..q.num_vertices()].to_vec());
            let (rep, roots) = q.weight_multisets(&d).unwrap();
            let e = d.entries();
            let mut expect = 0u64;
            for i in 0..e.len() {
                for j in 0..e.len() {
                    expect += q.arrow_count(i, j) as u64 * e[i] as u64 * e[j] as u64;
                }
            }
            prop_assert_eq!(rep.cardinality(), expect);
            let g: u64 = e.iter().map(|&x| x as u64 * (x as u64).saturating_sub(1)).sum();
            prop_assert_eq!(roots.cardinality(), g);
        }

        #[test]
        fn doubled_is_negation_stable(q in small_quiver(), seed in proptest::collection::vec(0u32..3, 3)) {
            let dq = q.triple();
            prop_assert!(dq.is_symmetric());
            let d = DimVector::new(seed[..q.num_vertices()].to_vec());
            let (rep, _) = dq.weight_multisets(&d).unwrap();
            for &((p, qq), m) in &rep.entries {
                prop_assert_eq!(rep.multiplicity(qq, p), m);
            }
        }
    }
}
