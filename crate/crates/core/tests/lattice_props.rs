mod common {
    pub mod lattice_check;
}

use cayrev::lattice::{functional_image_gcd, functional_witness, kernel_basis, IntegerMatrix, LatticeBasis};
use common::lattice_check::{check_all, random_matrix};
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn matrix(max_dim: usize, bound: i64) -> impl Strategy<Value = IntegerMatrix> {
    (1..=max_dim, 1..=max_dim).prop_flat_map(move |(r, c)| {
        proptest::collection::vec(proptest::collection::vec(-bound..=bound, c), r)
            .prop_map(|rows| IntegerMatrix::from_i64_rows(&rows).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn normal_forms_are_sound(m in matrix(6, 50)) {
        prop_assert_eq!(check_all(&m), Ok(()));
    }

    #[test]
    fn wide_entries(m in matrix(4, 1_000_000)) {
        prop_assert_eq!(check_all(&m), Ok(()));
    }

    #[test]
    fn membership_round_trip(m in matrix(5, 20), coeffs in proptest::collection::vec(-5i64..=5, 5)) {
        let k = kernel_basis(&m);
        let c: Vec<BigInt> = coeffs.iter().take(k.rank()).map(|&x| BigInt::from(x)).collect();
        prop_assume!(c.len() == k.rank());
        let v = k.combine(&c).unwrap();
        let back = k.coefficients_of(&v).unwrap().expect("combination lies in the lattice");
        prop_assert_eq!(k.combine(&back).unwrap(), v);
    }

    #[test]
    fn image_gcd_matches_witness(m in matrix(5, 9), f in proptest::collection::vec(-3i64..=3, 5)) {
        let k = kernel_basis(&m);
        let f: Vec<BigInt> = f.iter().cycle().take(m.cols()).map(|&x| BigInt::from(x)).collect();
        let d = functional_image_gcd(&k, &f).unwrap();
        match functional_witness(&k, &f).unwrap() {
            None => prop_assert!(d.is_zero()),
            Some((g, l)) => {
                prop_assert_eq!(&g, &d);
                let value: BigInt = l.iter().zip(&f).map(|(a, b)| a * b).sum();
                prop_assert_eq!(value, d);
                prop_assert!(m.mul_vec(&l).unwrap().iter().all(Zero::is_zero));
            }
        }
    }
}

#[test]
fn seeded_batch() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for i in 0..60 {
        let m = random_matrix(&mut rng, 12, 1_000_000);
        assert_eq!(check_all(&m), Ok(()), "matrix {i}: {m:?}");
    }
}

#[test]
fn degenerate_shapes() {
    let zero = IntegerMatrix::zeros(3, 4);
    assert_eq!(check_all(&zero), Ok(()));
    assert_eq!(kernel_basis(&zero).rank(), 4);
    let row = IntegerMatrix::from_i64_rows(&[vec![6, 10, 15]]).unwrap();
    assert_eq!(check_all(&row), Ok(()));
    let empty = LatticeBasis::new(3, vec![]).unwrap();
    assert!(
        functional_image_gcd(&empty, &[BigInt::from(1), BigInt::from(0), BigInt::from(0)])
            .unwrap()
            .is_zero()
    );
}
