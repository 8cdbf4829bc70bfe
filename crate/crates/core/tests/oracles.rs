use qbps_core::oracle::{epsilon_sampling, Sampled};
use qbps_core::partitions::{enumerate_vector_partitions, epsilon_partition, epsilon_partition_theta};
use qbps_core::verify::{self, Check};
use qbps_core::{CentralWeight, DimVector, Quiver, PARTITION_CUTOFF};

fn report(check: Check) {
    println!("{}", check.line());
    assert!(check.pass, "{}", check.line());
}

#[test]
fn n_lambda_matches_expansion() {
    report(verify::n_lambda_oracle());
}

#[test]
fn lattice_count_matches_box_scan() {
    report(verify::lattice_oracle());
}

#[test]
fn indicator_matches_lp_on_full_box() {
    report(verify::indicator_exhaustive());
}

#[test]
fn zero_weight_partition_sets_are_complete() {
    report(verify::partition_set_sizes());
}

#[test]
fn theta_route_on_three_loops() {
    let q = Quiver::loops(3);
    for n in 1..=5u32 {
        let d = DimVector::new(vec![n]);
        for v in 0..=2 {
            let delta = CentralWeight::from_v(v, &d).unwrap();
            for a in enumerate_vector_partitions(&d, PARTITION_CUTOFF).unwrap() {
                let eps = epsilon_partition(&q, &d, &a, &delta).unwrap();
                assert_eq!(eps, epsilon_partition_theta(&q, &d, &a, &delta).unwrap(), "d={n} v={v} A={a}");
                if n <= 4 {
                    let sampled = epsilon_sampling(&q, &d, &a, &delta, 6);
                    // The sampler is a sound refuter and, for these linear
                    // forms, also confirms every positive verdict.
                    assert_eq!(sampled == Sampled::One, eps, "d={n} v={v} A={a}");
                }
            }
        }
    }
}

#[test]
fn theta_route_on_two_vertices() {
    for m in [vec![vec![1, 2], vec![2, 3]], vec![vec![0, 1], vec![1, 2]], vec![vec![2, 3], vec![3, 0]]] {
        let q = Quiver::from_matrix(m).unwrap();
        for a0 in 0..=3u32 {
            for a1 in 0..=(5 - a0).min(3) {
                let d = DimVector::new(vec![a0, a1]);
                if d.is_zero() {
                    continue;
                }
                for v in -1..=d.total() as i64 {
                    let delta = CentralWeight::from_v(v, &d).unwrap();
                    for a in enumerate_vector_partitions(&d, PARTITION_CUTOFF).unwrap() {
                        assert_eq!(
                            epsilon_partition(&q, &d, &a, &delta).unwrap(),
                            epsilon_partition_theta(&q, &d, &a, &delta).unwrap(),
                            "arrows {:?} d={d} v={v} A={a}",
                            q.arrows()
                        );
                    }
                }
            }
        }
    }
}
