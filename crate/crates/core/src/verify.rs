//! The reproduction table run by `qbps verify` and by the acceptance tests,
//! plus the slower oracle sweeps behind `verify --deep`.
//!
//! Every check reports a tally of the cases it examined and fails when any
//! case disagrees or when the wall time exceeds the limit pinned here.

use std::collections::BTreeMap;
use std::time::Instant;

use num_integer::gcd;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::bps::{
    bps_assembly_dim, ktheory_dim_from_bps, partition_count_p2, score_sequence_count, BlockDimTable,
    Flavor,
};
use crate::magic::{candidates, magic_dimension, magic_dimension_v, shifted_point, CountOptions};
use crate::oracle::{epsilon_sampling, lattice_count_naive, n_lambda_bruteforce, Sampled};
use crate::par::Exec;
use crate::partitions::{
    enumerate_vector_partitions, epsilon_partition, epsilon_partition_theta, find_delta, s_set,
    s_set_closed_form, SearchBounds, VectorPartition,
};
use crate::quiver::{DimVector, Quiver};
use crate::weights::{n_lambda, pairing, ratio, CentralWeight, Cocharacter, RationalVector};
use crate::zonotope::{IndicatorTable, Zonotope};
use crate::{Result, COUNT_CUTOFF, INDICATOR_CUTOFF, PARTITION_CUTOFF};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub anchor: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
    pub ms: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub checks: Vec<Check>,
    pub pass: bool,
}

impl RunReport {
    pub fn new(checks: Vec<Check>) -> Self {
        let pass = checks.iter().all(|c| c.pass);
        RunReport { checks, pass }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}

impl Check {
    /// `PASS name (ms): computed`.
    pub fn line(&self) -> String {
        format!(
            "{} {} [{} ms] expected: {}; computed: {}",
            if self.pass { "PASS" } else { "FAIL" },
            self.name,
            self.ms,
            self.expected,
            self.computed
        )
    }
}

/// Cases examined by one check and the first few failures.
#[derive(Debug, Default)]
struct Tally {
    cases: u64,
    failed: u64,
    examples: Vec<String>,
}

impl Tally {
    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failed += 1;
            if self.examples.len() < 4 {
                self.examples.push(describe());
            }
        }
    }

    fn summary(&self) -> String {
        let agree = self.cases - self.failed;
        if self.failed == 0 {
            format!("{agree}/{} cases agree", self.cases)
        } else {
            format!(
                "{agree}/{} cases agree; failures: {}",
                self.cases,
                self.examples.join(", ")
            )
        }
    }
}

fn timed(
    name: &str,
    anchor: &str,
    expected: &str,
    limit_ms: u64,
    body: impl FnOnce() -> Result<Tally>,
) -> Check {
    let start = Instant::now();
    let outcome = body();
    let ms = start.elapsed().as_millis() as u64;
    let (mut computed, mut pass) = match outcome {
        Ok(t) => (t.summary(), t.failed == 0 && t.cases > 0),
        Err(e) => (format!("error: {e}"), false),
    };
    if ms > limit_ms {
        computed.push_str(&format!("; took {ms} ms, limit {limit_ms} ms"));
        pass = false;
    }
    Check {
        name: name.into(),
        anchor: anchor.into(),
        expected: expected.into(),
        computed,
        pass,
        ms,
    }
}

fn dv(v: &[u32]) -> DimVector {
    DimVector::new(v.to_vec())
}

fn count(q: &Quiver, d: &DimVector, v: i64) -> Result<u64> {
    magic_dimension_v(q, d, v, &CountOptions::default())
}

/// Nonzero dimension vectors with `n` entries and total at most `max`.
fn dims_up_to(n: usize, max: u32) -> Vec<DimVector> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    loop {
        let total: u32 = cur.iter().sum();
        if total > 0 && total <= max {
            out.push(DimVector::new(cur.clone()));
        }
        let mut k = 0;
        loop {
            if k == n {
                out.sort_by_key(|d| d.total());
                return out;
            }
            cur[k] += 1;
            if cur[k] <= max {
                break;
            }
            cur[k] = 0;
            k += 1;
        }
    }
}

/// Quivers with odd loop counts and even cross counts, one and two vertices.
fn odd_even_family() -> Vec<Quiver> {
    let mut out: Vec<Quiver> = [1, 3, 5].into_iter().map(Quiver::loops).collect();
    for m in [vec![vec![1, 0], vec![0, 1]], vec![vec![1, 2], vec![2, 3]], vec![vec![3, 2], vec![2, 1]]] {
        out.push(Quiver::from_matrix(m).expect("valid matrix"));
    }
    out
}

fn even_loop_family() -> Vec<Quiver> {
    vec![Quiver::loops(2), Quiver::loops(4)]
}

pub fn toric_counts() -> Check {
    timed(
        "toric counts",
        "toric two-vertex quiver, d = (1,1): 2g+1 for odd v, 2g+2 for even v",
        "2g+1 for odd v, 2g+2 for even v, g ≤ 4, |v| ≤ 3",
        1_000,
        || {
            let mut t = Tally::default();
            let d = dv(&[1, 1]);
            for g in 0..=4u32 {
                for v in -3..=3i64 {
                    let want = if v.rem_euclid(2) == 1 { 2 * g + 1 } else { 2 * g + 2 } as u64;
                    let got = count(&Quiver::toric(g), &d, v)?;
                    t.record(got == want, || format!("g={g} v={v}: got {got}, expected {want}"));
                }
            }
            Ok(t)
        },
    )
}

pub fn odd_loop_rank_two() -> Check {
    timed(
        "odd loops, rank two",
        "one vertex with 2e+1 loops, d = 2, v = 1: e generators",
        "count = e for e ≤ 4",
        1_000,
        || {
            let mut t = Tally::default();
            for e in 1..=4u32 {
                let got = count(&Quiver::loops(2 * e + 1), &dv(&[2]), 1)?;
                t.record(got == e as u64, || format!("e={e}: got {got}"));
            }
            Ok(t)
        },
    )
}

pub fn one_loop_divisibility() -> Check {
    timed(
        "one loop divisibility",
        "one-loop quiver: count is 1 iff d divides v",
        "1 iff d | v, d ≤ 6, −6 ≤ v ≤ 12",
        1_000,
        || {
            let mut t = Tally::default();
            for d in 1..=6u32 {
                for v in -6..=12i64 {
                    let want = u64::from(v.rem_euclid(d as i64) == 0);
                    let got = count(&Quiver::loops(1), &dv(&[d]), v)?;
                    t.record(got == want, || format!("d={d} v={v}: got {got}"));
                }
            }
            Ok(t)
        },
    )
}

fn route_cases() -> Vec<(u32, u32, i64)> {
    let mut out = Vec::new();
    for g in 0..=2u32 {
        for d in 1..=5u32 {
            let n = d as i64;
            for v in (0..n).chain(n..=2 * n) {
                out.push((g, d, v));
            }
        }
    }
    out
}

pub fn route_agreement() -> Check {
    timed(
        "lattice count vs score sequences",
        "one vertex with 2g+1 loops: lattice count equals the number of score sequences",
        "equal for g ≤ 2, d ≤ 5, 0 ≤ v ≤ 2d",
        60_000,
        || {
            let mut t = Tally::default();
            for (g, d, v) in route_cases() {
                let lattice = count(&Quiver::loops(2 * g + 1), &dv(&[d]), v)?;
                let scores = score_sequence_count(g, d, v)?;
                t.record(lattice == scores, || format!("g={g} d={d} v={v}: {lattice} vs {scores}"));
            }
            Ok(t)
        },
    )
}

pub fn gcd_invariance() -> Check {
    timed(
        "gcd invariance",
        "one vertex with 2g+1 loops: the dimension depends only on gcd(d, v)",
        "both routes constant on each gcd class, g ≤ 2, d ≤ 5, 0 ≤ v ≤ 2d",
        60_000,
        || {
            let mut t = Tally::default();
            let mut seen: BTreeMap<(u32, u32, i64), (u64, u64, i64)> = BTreeMap::new();
            for (g, d, v) in route_cases() {
                let lattice = count(&Quiver::loops(2 * g + 1), &dv(&[d]), v)?;
                let scores = score_sequence_count(g, d, v)?;
                let key = (g, d, gcd(d as i64, v));
                let first = *seen.entry(key).or_insert((lattice, scores, v));
                t.record(first.0 == lattice && first.1 == scores, || {
                    format!("g={g} d={d}: v={} gives {}, v={v} gives {lattice}", first.2, first.0)
                });
            }
            Ok(t)
        },
    )
}

pub fn closed_forms() -> Check {
    timed(
        "partition set closed forms",
        "S^d_v: v·d̄_i/d̄ ∈ ℤ for odd loops and even cross arrows; the 2e-loop rule for one vertex",
        "generic S^d_v equals the closed form on every instance",
        30_000,
        || {
            let mut t = Tally::default();
            let mut cases: Vec<(Quiver, DimVector, i64)> = Vec::new();
            for q in odd_even_family() {
                for d in dims_up_to(q.num_vertices(), 5) {
                    for v in 0..=d.total() as i64 {
                        cases.push((q.clone(), d.clone(), v));
                    }
                }
            }
            for q in even_loop_family() {
                for n in 1..=5u32 {
                    for v in 0..=n as i64 {
                        cases.push((q.clone(), dv(&[n]), v));
                    }
                }
            }
            for (q, d, v) in cases {
                let delta = CentralWeight::from_v(v, &d)?;
                let generic = s_set(&q, &d, &delta, PARTITION_CUTOFF, Exec::Parallel)?;
                let closed = s_set_closed_form(&q, &d, v, PARTITION_CUTOFF)?;
                t.record(generic == closed, || {
                    format!(
                        "arrows {:?}, d={d}, v={v}: {} vs {} partitions",
                        q.arrows(),
                        generic.len(),
                        closed.len()
                    )
                });
            }
            Ok(t)
        },
    )
}

pub fn epsilon_oracles() -> Check {
    timed(
        "epsilon oracle equivalence",
        "ε through the block weights θ_i ∈ ½M(d_i) and by sampling cocharacters",
        "θ route equal everywhere; sampling with |values| ≤ 6 never refutes ε = 1, d̄ ≤ 4",
        60_000,
        || {
            let mut t = Tally::default();
            let mut quivers = odd_even_family();
            quivers.extend(even_loop_family());
            for q in quivers {
                for d in dims_up_to(q.num_vertices(), 4) {
                    for v in 0..=d.total() as i64 {
                        let delta = CentralWeight::from_v(v, &d)?;
                        for a in enumerate_vector_partitions(&d, PARTITION_CUTOFF)? {
                            let eps = epsilon_partition(&q, &d, &a, &delta)?;
                            let theta = epsilon_partition_theta(&q, &d, &a, &delta)?;
                            let sampled = epsilon_sampling(&q, &d, &a, &delta, 6);
                            let ok = eps == theta && !(eps && sampled == Sampled::Zero);
                            t.record(ok, || {
                                format!(
                                    "arrows {:?}, d={d}, v={v}, A={a}: ε={eps}, θ={theta}, sampled {sampled:?}",
                                    q.arrows()
                                )
                            });
                        }
                    }
                }
            }
            Ok(t)
        },
    )
}

pub fn p2_identity() -> Check {
    timed(
        "tripled one-loop assembly",
        "tripled one-loop quiver with one-dimensional blocks: p₂(n) at v = 0, 1 when gcd(n, v) = 1",
        "assembly = p₂(n) at v = 0 and 1 at gcd(n, v) = 1 for n ≤ 8; K-theory (p₂, p₂) and (p₂, 0)",
        5_000,
        || {
            let mut t = Tally::default();
            let q = Quiver::loops(1).triple();
            let blocks = BlockDimTable::tripled_one_loop();
            for n in 1..=8u32 {
                let d = dv(&[n]);
                let p2 = partition_count_p2(n as usize);
                let at = |v: i64| -> Result<u128> {
                    bps_assembly_dim(&q, &d, &CentralWeight::from_v(v, &d)?, &blocks, PARTITION_CUTOFF, Exec::Parallel)
                };
                let zero = at(0)?;
                t.record(zero == p2, || format!("n={n}, v=0: {zero} vs p₂ = {p2}"));
                let mf = ktheory_dim_from_bps(zero, blocks.monodromy(), Flavor::MatrixFactorization)?;
                t.record(mf == (p2, p2), || format!("n={n}: matrix factorization {mf:?}"));
                let pp = ktheory_dim_from_bps(zero, blocks.monodromy(), Flavor::Preprojective)?;
                t.record(pp == (p2, 0), || format!("n={n}: preprojective {pp:?}"));
                for v in -(n as i64)..=2 * n as i64 {
                    if gcd(n as i64, v) == 1 {
                        let got = at(v)?;
                        t.record(got == 1, || format!("n={n}, v={v}: {got}"));
                    }
                }
            }
            Ok(t)
        },
    )
}

/// `gcd(d, v) = 1` with `d ≢ 2 (mod 4)`, or `gcd(d, v) = 2` with `d ≡ 2 (mod 4)`.
pub fn parity_rule(d: u32, v: i64) -> bool {
    let g = gcd(d as i64, v);
    (g == 1 && d % 4 != 2) || (g == 2 && d % 4 == 2)
}

pub fn find_delta_parity() -> Check {
    timed(
        "find_delta parity rule",
        "generic δ for loop quivers: gcd(d,v)=1 and d ≢ 2 (mod 4), or gcd(d,v)=2 and d ≡ 2 (mod 4)",
        "3-loop quiver, d ≤ 8: v ∈ {0,1} obeying the parity rule, S^d_δ = {{d}}",
        10_000,
        || {
            let mut t = Tally::default();
            let q = Quiver::loops(3);
            for n in 1..=8u32 {
                let d = dv(&[n]);
                match find_delta(&q, &d, SearchBounds::for_dim(&d))? {
                    None => t.record(false, || format!("d={n}: nothing found")),
                    Some(found) => {
                        let plain = found.delta == CentralWeight::from_v(found.v, &d)?;
                        let s = s_set(&q, &d, &found.delta, PARTITION_CUTOFF, Exec::Parallel)?;
                        let generic = s == vec![VectorPartition::trivial(&d)];
                        let ok = plain && (0..=1).contains(&found.v) && parity_rule(n, found.v) && generic;
                        t.record(ok, || {
                            format!(
                                "d={n}: v={} (δ = {}), parity rule {}, S = {{d}} {}",
                                found.v,
                                found.delta,
                                if parity_rule(n, found.v) { "holds" } else { "fails" },
                                if generic { "holds" } else { "fails" }
                            )
                        });
                    }
                }
            }
            Ok(t)
        },
    )
}

fn property_family() -> Vec<(Quiver, Vec<DimVector>)> {
    let mut out = Vec::new();
    for loops in 0..=3u32 {
        out.push((Quiver::loops(loops), (1..=6).map(|n| dv(&[n])).collect()));
    }
    for g in 0..=2u32 {
        out.push((Quiver::toric(g), dims_up_to(2, 6)));
    }
    for m in [vec![vec![1, 2], vec![2, 3]], vec![vec![0, 1], vec![1, 2]]] {
        out.push((Quiver::from_matrix(m).expect("valid matrix"), dims_up_to(2, 4)));
    }
    out
}

fn random_instance(rng: &mut ChaCha8Rng) -> (Quiver, DimVector) {
    if rng.gen_bool(0.5) {
        let q = Quiver::loops(rng.gen_range(0..=4));
        (q, dv(&[rng.gen_range(1..=4)]))
    } else {
        let a = rng.gen_range(0..=3);
        let b = rng.gen_range(0..=3);
        let c = rng.gen_range(0..=3);
        let q = Quiver::from_matrix(vec![vec![a, b], vec![b, c]]).expect("valid matrix");
        loop {
            let d = dv(&[rng.gen_range(0..=2), rng.gen_range(0..=2)]);
            if !d.is_zero() {
                return (q, d);
            }
        }
    }
}

pub fn polytope_properties() -> Check {
    timed(
        "polytope properties",
        "zonotope W(d): LP and indicator membership, central symmetry, support function, shift and duality",
        "LP = indicator on every candidate for d̄ ≤ 6; 600 seeded random instances satisfy every property",
        120_000,
        || {
            let mut t = Tally::default();
            for (q, dims) in property_family() {
                for d in dims {
                    let z = Zonotope::for_quiver(&q, &d)?;
                    let table = IndicatorTable::new(&z, INDICATOR_CUTOFF)?;
                    for v in [0i64, 1] {
                        let delta = CentralWeight::from_v(v, &d)?;
                        for chi in candidates(&q, &d, &delta, COUNT_CUTOFF)? {
                            let x = shifted_point(&chi, &d, &delta)?;
                            let lp = z.contains(&x)?;
                            let ind = table.contains(&x)?;
                            t.record(lp == ind, || format!("arrows {:?}, d={d}, χ={:?}: LP {lp}, indicator {ind}", q.arrows(), chi.0));
                        }
                    }
                }
            }

            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_2024);
            for sample in 0..600 {
                let (q, d) = random_instance(&mut rng);
                let n = d.total();
                let z = Zonotope::for_quiver(&q, &d)?;
                t.record(z.is_centrally_symmetric(), || format!("sample {sample}: not centrally symmetric"));

                // A random point Σ t_β β with t_β ∈ [0, mult/2].
                let mut x = vec![ratio(0, 1); n];
                for g in z.generators() {
                    let tb = ratio(rng.gen_range(0..=3 * g.mult as i64), 6);
                    x[g.plus] += &tb;
                    x[g.minus] -= &tb;
                }
                let x = RationalVector(x);
                let neg = x.neg();
                t.record(z.contains(&x)? && z.contains(&neg)? && z.contains_fast(&x)?, || {
                    format!("sample {sample}: random member {x} rejected")
                });
                let lam: Vec<i64> = (0..n).map(|_| rng.gen_range(-3..=3)).collect();
                let lhs = pairing(lam.as_slice(), &x)?;
                let h = z.support(lam.as_slice())?;
                t.record(lhs <= h, || format!("sample {sample}: ⟨λ,x⟩ = {lhs} > h(λ) = {h}"));

                let v = rng.gen_range(-6..=6i64);
                let c = count(&q, &d, v)?;
                let shifted = count(&q, &d, v + n as i64)?;
                let dual = count(&q, &d, -v)?;
                t.record(c == shifted && c == dual, || {
                    format!("sample {sample}: arrows {:?}, d={d}, v={v}: {c}, shifted {shifted}, dual {dual}", q.arrows())
                });
            }
            Ok(t)
        },
    )
}

/// The acceptance table, in order.
pub fn acceptance() -> Vec<Check> {
    vec![
        toric_counts(),
        odd_loop_rank_two(),
        one_loop_divisibility(),
        route_agreement(),
        gcd_invariance(),
        closed_forms(),
        epsilon_oracles(),
        p2_identity(),
        find_delta_parity(),
        polytope_properties(),
    ]
}

pub fn n_lambda_oracle() -> Check {
    timed(
        "n_λ brute force",
        "n_λ from the expanded weights of R(d) and 𝔤(d)",
        "primary n_λ equals the brute-force expansion on 1000 random instances",
        60_000,
        || {
            let mut t = Tally::default();
            let mut rng = ChaCha8Rng::seed_from_u64(0x1a4bd);
            for sample in 0..1000 {
                let vertices = rng.gen_range(1..=3usize);
                let mut m = vec![vec![0u32; vertices]; vertices];
                for i in 0..vertices {
                    for j in i..vertices {
                        let k = rng.gen_range(0..=3);
                        m[i][j] = k;
                        m[j][i] = k;
                    }
                }
                let q = Quiver::from_matrix(m)?;
                let d = loop {
                    let d = DimVector::new((0..vertices).map(|_| rng.gen_range(0..=2)).collect());
                    if !d.is_zero() && d.total() <= 4 {
                        break d;
                    }
                };
                let lam = Cocharacter((0..d.total()).map(|_| rng.gen_range(-5..=5)).collect());
                let fast = n_lambda(&q, &d, &lam)?;
                let slow = n_lambda_bruteforce(&q, &d, &lam);
                t.record(fast == slow, || format!("sample {sample}: {fast} vs {slow}"));
            }
            Ok(t)
        },
    )
}

pub fn lattice_oracle() -> Check {
    timed(
        "lattice count brute force",
        "lattice points of the shifted zonotope by a full box scan",
        "magic_dimension equals the box scan on toric g ≤ 2 and on small loop quivers",
        120_000,
        || {
            let mut t = Tally::default();
            let mut cases: Vec<(Quiver, DimVector)> = (0..=2).map(|g| (Quiver::toric(g), dv(&[1, 1]))).collect();
            for n in 1..=3 {
                cases.push((Quiver::loops(3), dv(&[n])));
                cases.push((Quiver::loops(2), dv(&[n])));
            }
            cases.push((Quiver::from_matrix(vec![vec![1, 2], vec![2, 1]])?, dv(&[2, 1])));
            for (q, d) in cases {
                for v in -4..=4 {
                    let delta = CentralWeight::from_v(v, &d)?;
                    let fast = magic_dimension(&q, &d, &delta, &CountOptions::default())?;
                    let slow = lattice_count_naive(&q, &d, &delta, 1_000_000)?;
                    t.record(fast == slow, || format!("arrows {:?}, d={d}, v={v}: {fast} vs {slow}", q.arrows()));
                }
            }
            Ok(t)
        },
    )
}

pub fn indicator_exhaustive() -> Check {
    timed(
        "indicator vs LP on the full box",
        "indicator membership is exact on the sum-zero lattice of the bounding box",
        "agreement at every point, one vertex with 2e+1 loops, e ≤ 2, d ≤ 4",
        120_000,
        || {
            let mut t = Tally::default();
            for e in 0..=2u32 {
                for n in 1..=4u32 {
                    let d = dv(&[n]);
                    let z = Zonotope::for_quiver(&Quiver::loops(2 * e + 1), &d)?;
                    let table = IndicatorTable::new(&z, INDICATOR_CUTOFF)?;
                    let bbox = z.bounding_box();
                    let lo: Vec<i64> = bbox.iter().map(|(l, _)| l.ceil().to_integer().try_into().unwrap_or(0)).collect();
                    let hi: Vec<i64> = bbox.iter().map(|(_, h)| h.floor().to_integer().try_into().unwrap_or(0)).collect();
                    let k = n as usize;
                    let mut x = lo.clone();
                    'scan: loop {
                        if x.iter().sum::<i64>() == 0 {
                            let p = RationalVector(x.iter().map(|&c| ratio(c, 1)).collect());
                            let lp = z.contains(&p)?;
                            let ind = table.contains(&p)?;
                            t.record(lp == ind, || format!("e={e}, d={n}, x={x:?}: LP {lp}, indicator {ind}"));
                        }
                        let mut i = 0;
                        loop {
                            if i == k {
                                break 'scan;
                            }
                            if x[i] < hi[i] {
                                x[i] += 1;
                                break;
                            }
                            x[i] = lo[i];
                            i += 1;
                        }
                    }
                }
            }
            Ok(t)
        },
    )
}

pub fn partition_set_sizes() -> Check {
    timed(
        "partition set size",
        "3-loop quiver at v = 0: S^n_0 consists of all partitions of n",
        "|S^n_0| = p₂(n) for n ≤ 8",
        30_000,
        || {
            let mut t = Tally::default();
            for n in 1..=8u32 {
                let d = dv(&[n]);
                let s = s_set(&Quiver::loops(3), &d, &CentralWeight::zero(1), PARTITION_CUTOFF, Exec::Parallel)?;
                let p2 = partition_count_p2(n as usize);
                t.record(s.len() as u128 == p2, || format!("n={n}: {} vs {p2}", s.len()));
            }
            Ok(t)
        },
    )
}

/// Oracle sweeps run by `verify --deep`.
pub fn deep() -> Vec<Check> {
    vec![
        n_lambda_oracle(),
        lattice_oracle(),
        indicator_exhaustive(),
        partition_set_sizes(),
    ]
}

pub fn run(include_deep: bool) -> RunReport {
    let mut checks = acceptance();
    if include_deep {
        checks.extend(deep());
    }
    RunReport::new(checks)
}
