use proptest::prelude::*;

use covarray_core::construct::{
    build_ca3_projective, generator_matrix, span_array, CoveringArray, Provenance,
};
use covarray_core::gf::{CoordinateVector, FieldTower};
use covarray_core::verify::{rank_of, verify_coverage, verify_matrix_coverage};

fn towers() -> Vec<FieldTower> {
    vec![
        FieldTower::build(3, 1, 4, None).unwrap(),
        FieldTower::build(5, 1, 3, None).unwrap(),
        FieldTower::build(3, 2, 3, None).unwrap(),
        FieldTower::build(7, 1, 4, None).unwrap(),
    ]
}

proptest! {
    #[test]
    fn log_additivity(which in 0usize..4, a in any::<u32>(), b in any::<u32>()) {
        let t = &towers()[which];
        let n = t.group_order();
        let (a, b) = (a as u64 % n, b as u64 % n);
        prop_assert_eq!(t.mul(t.alpha_pow(a), t.alpha_pow(b)), t.alpha_pow((a + b) % n));
    }

    #[test]
    fn trace_is_linear(which in 0usize..4, a in any::<u32>(), b in any::<u32>(), c in any::<u8>()) {
        let t = &towers()[which];
        let n = t.group_order();
        let (x, y) = (t.alpha_pow(a as u64 % n), t.alpha_pow(b as u64 % n));
        let base = t.base();
        let c = c % t.q() as u8;
        let lhs = t.trace(t.add(t.mul(t.from_base(c), x), y));
        let rhs = base.add(base.mul(c, t.trace(x)), t.trace(y));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn frobenius_is_a_field_map(which in 0usize..4, a in any::<u32>(), b in any::<u32>()) {
        let t = &towers()[which];
        let n = t.group_order();
        let (x, y) = (t.alpha_pow(a as u64 % n), t.alpha_pow(b as u64 % n));
        prop_assert_eq!(t.frobenius(t.add(x, y)), t.add(t.frobenius(x), t.frobenius(y)));
        prop_assert_eq!(t.frobenius(t.mul(x, y)), t.mul(t.frobenius(x), t.frobenius(y)));
        prop_assert_eq!(t.frobenius(x), t.pow(x, t.q() as u64));
    }

    #[test]
    fn coordinates_round_trip(which in 0usize..4, j in any::<u32>()) {
        let t = &towers()[which];
        let j = j as u64 % t.group_order();
        let v = t.decompose(j);
        prop_assert_eq!(t.element(&v), t.alpha_pow(j));
        prop_assert_eq!(t.coords(t.alpha_pow(j)), v);
    }

    #[test]
    fn rank_ignores_vector_order(
        vs in prop::collection::vec(prop::collection::vec(0u8..5, 4), 1..=4),
        seed in any::<u64>(),
    ) {
        let t = FieldTower::build(5, 1, 4, None).unwrap();
        let cvs: Vec<CoordinateVector> = vs.iter().map(|v| CoordinateVector::new(v)).collect();
        let refs: Vec<&CoordinateVector> = cvs.iter().collect();
        let mut shuffled = refs.clone();
        let len = shuffled.len();
        let mut s = seed;
        for i in (1..len).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            shuffled.swap(i, (s >> 33) as usize % (i + 1));
        }
        prop_assert_eq!(rank_of(t.base(), &refs), rank_of(t.base(), &shuffled));
    }

    #[test]
    fn deleting_columns_keeps_strength(mask in 1u32..(1 << 13)) {
        let t = FieldTower::build(3, 1, 3, None).unwrap();
        let ca = build_ca3_projective(&t).unwrap();
        let keep: Vec<usize> = (0..13).filter(|c| mask >> c & 1 == 1).collect();
        let strength = 3.min(keep.len());
        let sub = CoveringArray::new(
            ca.matrix().select_columns(&keep),
            strength as u32,
            3,
            Provenance::new("ca3", &t, None),
        ).unwrap();
        prop_assert!(verify_coverage(&sub, strength, 1).unwrap().pass());
    }
}

#[test]
fn span_arrays_are_balanced_at_strength_two() {
    for t in towers() {
        let q = t.q() as u64;
        let m = t.m();
        for l in [1i64, -1, q as i64 + 1] {
            let k = 8.min(t.projective_points() as usize);
            let g = generator_matrix(&t, l, k).unwrap();
            let a = span_array(t.base(), &g);
            let rep = verify_matrix_coverage(&a, t.q(), 2, 1).unwrap();
            assert_eq!(rep.lambda_min, q.pow(m - 2), "q={q} m={m} l={l}");
        }
    }
}
