mod common;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use schubhess::hessenberg::{f_poly, f_via_chain};

#[test]
fn nilcoxeter_relations() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..200 {
        let f = common::random_poly(&mut rng, 5, 6);
        let i = rng.gen_range(1..=4);
        assert!(f.divided_differences([i, i]).is_zero(), "{f}");
        if i <= 3 {
            assert_eq!(
                f.divided_differences([i, i + 1, i]),
                f.divided_differences([i + 1, i, i + 1]),
                "{f}"
            );
        }
        let j = rng.gen_range(1..=5);
        if i.abs_diff(j) >= 2 {
            assert_eq!(
                f.divided_differences([i, j]),
                f.divided_differences([j, i]),
                "{f}"
            );
        }
    }
}

#[test]
fn chain_reproduces_generators() {
    for n in 1..=6 {
        for i in 1..=n {
            for j in 1..=i {
                assert_eq!(
                    f_via_chain(i, j, n).unwrap(),
                    f_poly(i, j).unwrap(),
                    "({i},{j},{n})"
                );
            }
        }
    }
}

#[test]
fn generator_degrees() {
    for i in 1..=7 {
        for j in 1..=i {
            let f = f_poly(i, j).unwrap();
            assert!(f.is_homogeneous());
            assert_eq!(f.degree(), Some((i - j + 1) as u32));
        }
    }
}
