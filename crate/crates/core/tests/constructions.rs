use std::collections::HashMap;

use covarray_core::combin::binomial;
use covarray_core::construct::{
    build_ca3_projective, build_ca4_full, build_ca4_half, ca3_projective_size, ca4_full_size,
    ca4_half_size, default_ingredient, generator_matrix, half_generators, CA3_RESTRICTED,
};
use covarray_core::geometry::{
    build_full_plane, build_ovoid, build_truncated_planes, check_anti_cocircular, run_lemma_suite,
};
use covarray_core::gf::FieldTower;
use covarray_core::verify::{
    cross_check, verify_coverage, verify_rank_cphf, verify_recursive_structure,
};

fn tower(q: u32, m: u32) -> FieldTower {
    let (p, e) = match q {
        4 => (2, 2),
        8 => (2, 3),
        9 => (3, 2),
        25 => (5, 2),
        _ => (q, 1),
    };
    FieldTower::build(p, e, m, None).unwrap()
}

#[test]
fn projective_pair_is_strength_three() {
    for q in [2u32, 3, 4, 5, 7] {
        let ca = build_ca3_projective(&tower(q, 3)).unwrap();
        let (n, k) = ca3_projective_size(q as u64);
        assert_eq!((ca.n() as u64, ca.k() as u64), (n, k));
        assert!(verify_coverage(&ca, 3, 1).unwrap().pass(), "q={q}");
    }
}

#[test]
fn half_array_brute_force() {
    for q in [3u32, 5, 7] {
        let t = tower(q, 4);
        let ca = build_ca4_half(&t).unwrap();
        assert_eq!((ca.n() as u64, ca.k() as u64), ca4_half_size(q as u64));
        let rep = cross_check(&ca, 4, &t, None).unwrap();
        assert!(
            rep.coverage.pass() && rep.structural.pass() && rep.matches_construction,
            "q={q}"
        );
    }
}

#[test]
fn half_generators_rank_certificate() {
    for q in [3u32, 5, 7, 9, 11, 13] {
        let t = tower(q, 4);
        let gens = half_generators(&t).unwrap();
        let cert = verify_rank_cphf(t.base(), &gens, 4, None).unwrap();
        let s = (q as u64 * q as u64).div_ceil(2);
        assert_eq!(cert.sets_checked, binomial(s, 4));
        assert!(cert.pass(), "q={q}: {:?}", cert.uncovered_sets.first());
    }
}

#[test]
fn full_ovoid_generator_has_strength_three() {
    for q in [3u32, 5, 7, 9] {
        let t = tower(q, 4);
        let n = q as usize * q as usize + 1;
        let g = generator_matrix(&t, q as i64 + 1, n).unwrap();
        assert!(
            verify_rank_cphf(t.base(), std::slice::from_ref(&g), 3, None)
                .unwrap()
                .pass()
        );
        if q <= 5 {
            let a = covarray_core::construct::span_array(t.base(), &g);
            assert!(covarray_core::verify::verify_matrix_coverage(&a, q, 3, 1)
                .unwrap()
                .pass());
        }
    }
}

#[test]
fn recursive_array_engines_agree() {
    for q in [3u32, 5] {
        let t = tower(q, 4);
        let r = default_ingredient(&t).unwrap();
        assert_eq!(r.provenance().construction, CA3_RESTRICTED);
        let ca = build_ca4_full(&t, &r, "default").unwrap();
        assert_eq!(
            (ca.n() as u64, ca.k() as u64),
            ca4_full_size(q as u64, 2 * (q as u64).pow(3) - 1)
        );
        let structural = verify_recursive_structure(&t, &r).unwrap();
        let brute = verify_coverage(&ca, 4, 1).unwrap();
        assert!(structural.pass() && brute.pass(), "q={q}");
    }
}

#[test]
fn recursive_structure_larger_q() {
    for q in [7u32, 9, 11] {
        let t = tower(q, 4);
        let r = default_ingredient(&t).unwrap();
        let rep = verify_recursive_structure(&t, &r).unwrap();
        assert!(rep.pass(), "q={q}: {rep:?}");
    }
}

#[test]
fn full_plane_design_counts() {
    for q in [3u32, 5, 7, 9] {
        let t = tower(q, 4);
        let plane = build_full_plane(&t).unwrap();
        let n = q as usize * q as usize + 1;
        assert_eq!(plane.circles().len(), q as usize * n);
        assert!(plane.circles().iter().all(|c| c.len() == q as usize + 1));
        // every 3-subset in exactly one circle
        let mut seen: HashMap<(u32, u32, u32), u32> = HashMap::new();
        for c in plane.circles() {
            for a in 0..c.len() {
                for b in a + 1..c.len() {
                    for d in b + 1..c.len() {
                        *seen.entry((c[a], c[b], c[d])).or_default() += 1;
                    }
                }
            }
        }
        assert_eq!(seen.len() as u64, binomial(n as u64, 3));
        assert!(seen.values().all(|&v| v == 1));
        assert_eq!(plane.circles_containing(&[0]), (q * (q + 1)) as usize);
    }
}

#[test]
fn ovoid_is_a_cap() {
    for q in [3u32, 5, 7] {
        let t = tower(q, 4);
        let o = build_ovoid(&t).unwrap();
        assert_eq!(o.len(), q as usize * q as usize + 1);
        assert_eq!(o.find_collinear(&t), None);
    }
}

#[test]
fn lemma_suites() {
    for q in [3u32, 5, 7, 9, 11] {
        let rep = run_lemma_suite(&tower(q, 4)).unwrap();
        for l in &rep.lemmas {
            assert!(l.pass, "q={q} {}: {:?}", l.name, l.counterexample);
            assert!(l.checked > 0, "q={q} {}", l.name);
        }
    }
}

#[test]
fn truncated_planes_anti_cocircular() {
    for q in [3u32, 5, 7, 9] {
        let t = tower(q, 4);
        let (m1, m2, mh) = build_truncated_planes(&build_full_plane(&t).unwrap()).unwrap();
        let rep = check_anti_cocircular(&m1, &m2, &mh).unwrap();
        assert!(rep.pass(), "q={q}: {rep:?}");
        assert_eq!(rep.max_intersection, 3);
    }
}

#[test]
fn truncated_planes_are_generator_zero_sets() {
    for q in [3u32, 5, 7] {
        let t = tower(q, 4);
        let (m1, m2, mh) = build_truncated_planes(&build_full_plane(&t).unwrap()).unwrap();
        let gens = half_generators(&t).unwrap();
        // Mhalf ~ G^{q+1}, M1 ~ G^{2(q+1)}, M2 ~ G^{4(q+1)}
        for (plane, g) in [(&mh, &gens[0]), (&m1, &gens[1]), (&m2, &gens[2])] {
            let cert = verify_rank_cphf(
                t.base(),
                std::slice::from_ref(g),
                4,
                Some(&(0..g.cols() as u32).map(|i| 2 * i).collect::<Vec<_>>()),
            )
            .unwrap();
            // a 4-set is rank-deficient iff it lies on a circle of the plane
            let mut on_circle = std::collections::BTreeSet::new();
            for c in plane.circles() {
                for a in 0..c.len() {
                    for b in a + 1..c.len() {
                        for d in b + 1..c.len() {
                            for e in d + 1..c.len() {
                                on_circle.insert(vec![c[a], c[b], c[d], c[e]]);
                            }
                        }
                    }
                }
            }
            let deficient: std::collections::BTreeSet<Vec<u32>> =
                cert.uncovered_sets.into_iter().collect();
            assert_eq!(deficient, on_circle, "q={q} {}", plane.variant());
        }
    }
}
