use alloc::vec::Vec;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::codes::AdditiveCode;
use crate::fields::{F4Vec, F4};

fn big(v: &[u64]) -> Vec<BigUint> {
    v.iter().map(|&x| BigUint::from(x)).collect()
}

fn code(n: usize, rows: &[&str]) -> AdditiveCode {
    AdditiveCode::from_generators(n, rows.iter().map(|r| r.parse().unwrap()).collect()).unwrap()
}

fn random_vec(rng: &mut ChaCha8Rng, n: usize) -> F4Vec {
    F4Vec::from_symbols(
        &(0..n)
            .map(|_| F4::from_index(rng.gen_range(0..4)))
            .collect::<Vec<_>>(),
    )
}

fn random_code(rng: &mut ChaCha8Rng, n: usize) -> AdditiveCode {
    let rows = rng.gen_range(0..=2 * n);
    let gens = (0..rows).map(|_| random_vec(rng, n)).collect();
    AdditiveCode::from_generators(n, gens).unwrap()
}

fn elements(c: &AdditiveCode) -> Vec<F4Vec> {
    (0u64..1 << c.dimension())
        .map(|mask| {
            let mut x = F4Vec::zeros(c.n());
            for (j, b) in c.basis().iter().enumerate() {
                if mask >> j & 1 == 1 {
                    x.add_assign(b);
                }
            }
            x
        })
        .collect()
}

#[test]
fn repetition_spectrum() {
    let rep = code(2, &["11", "ww"]);
    let w = weight_enumerator(&rep, &Budget::default()).unwrap();
    assert_eq!(w.coeffs(), big(&[1, 0, 3]).as_slice());
    assert_eq!(macwilliams_transform(&w).unwrap(), w);
}

#[test]
fn zero_code_transform_is_full_space() {
    let n = 5;
    let w = weight_enumerator(&AdditiveCode::zero(n), &Budget::default()).unwrap();
    let d = macwilliams_transform(&w).unwrap();
    // (X + 3Y)^5
    assert_eq!(d.coeffs(), big(&[1, 15, 90, 270, 405, 243]).as_slice());
    assert_eq!(d.log2_size(), 10);
}

#[test]
fn invalid_spectra_rejected() {
    // sums to 8 but transforms to a negative coefficient
    let w = WeightEnumerator::from_counts(2, 3, big(&[1, 0, 7])).unwrap();
    assert_eq!(
        macwilliams_transform(&w),
        Err(SpectrumError::InvalidSpectrum)
    );
    assert!(WeightEnumerator::from_counts(2, 2, big(&[1, 0, 2])).is_err());
    assert!(WeightEnumerator::from_counts(2, 2, big(&[2, 0, 2])).is_err());
    // some length-3 spectrum of valid total fails divisibility
    let mut divisibility_failure = false;
    for a1 in 0..=7u64 {
        for a2 in 0..=7 - a1 {
            let w = WeightEnumerator::from_counts(3, 3, big(&[1, a1, a2, 7 - a1 - a2])).unwrap();
            if let Err(e) = macwilliams_transform(&w) {
                assert_eq!(e, SpectrumError::InvalidSpectrum);
                divisibility_failure = true;
            }
        }
    }
    assert!(divisibility_failure);
}

#[test]
fn macwilliams_matches_enumerated_dual() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let b = Budget::default();
    for _ in 0..60 {
        let n = rng.gen_range(1..=8);
        let c = random_code(&mut rng, n);
        let w = weight_enumerator(&c, &b).unwrap();
        let total: BigUint = w.coeffs().iter().sum();
        assert_eq!(total, BigUint::from(1u64) << c.dimension());
        let wd = weight_enumerator(&c.trace_dual(), &b).unwrap();
        assert_eq!(macwilliams_transform(&w).unwrap(), wd);
        assert_eq!(macwilliams_transform(&wd).unwrap(), w);
        // brute-force weights
        let mut counts = alloc::vec![0u64; n + 1];
        for x in elements(&c) {
            counts[x.weight()] += 1;
        }
        assert_eq!(w.coeffs(), big(&counts).as_slice());
    }
}

#[test]
fn distances_agree_across_routes() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let b = Budget::default();
    for _ in 0..40 {
        let n = rng.gen_range(2..=9);
        let c = random_code(&mut rng, n);
        let direct = weight_enumerator(&c, &b).unwrap().min_weight();
        assert_eq!(min_distance(&c, &b).ok(), direct);
        let dual_direct = weight_enumerator(&c.trace_dual(), &b).unwrap().min_weight();
        assert_eq!(dual_distance(&c, &b).ok(), dual_direct);
    }
    assert_eq!(
        min_distance(&AdditiveCode::zero(3), &b),
        Err(SpectrumError::NoNonzeroWord)
    );
}

#[test]
fn cap_is_enforced() {
    let c = AdditiveCode::full(6);
    let small = Budget::new(5);
    assert_eq!(
        weight_enumerator(&c, &small),
        Err(SpectrumError::TooLarge { log2: 12, cap: 5 })
    );
    // the dual side is tiny, so distances remain available
    assert_eq!(min_distance(&c, &small), Ok(1));
}

#[test]
fn wt_diff_against_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let b = Budget::default();
    for _ in 0..80 {
        let n = rng.gen_range(1..=8);
        let outer = random_code(&mut rng, n);
        if outer.dimension() == 0 {
            continue;
        }
        let keep = rng.gen_range(0..outer.generators().len());
        let inner = outer
            .delete_rows(&crate::codes::RowSelection::Keep((0..keep).collect()))
            .unwrap();
        let brute = elements(&outer)
            .into_iter()
            .filter(|x| !inner.contains(x).unwrap())
            .map(|x| x.weight())
            .min();
        match brute {
            Some(d) => assert_eq!(wt_diff(&outer, &inner, &b), Ok(d)),
            None => assert_eq!(
                wt_diff(&outer, &inner, &b),
                Err(SpectrumError::EmptyDifference)
            ),
        }
        let zero = AdditiveCode::zero(n);
        assert_eq!(
            wt_diff(&outer, &zero, &b).ok(),
            min_distance(&outer, &b).ok()
        );
    }
    let c = code(2, &["11"]);
    assert_eq!(wt_diff(&c, &c, &b), Err(SpectrumError::EmptyDifference));
    assert_eq!(
        wt_diff(&c, &code(2, &["1w"]), &b),
        Err(SpectrumError::NotSubcode)
    );
}

#[test]
fn oa_small_cases() {
    let b = Budget::default();
    assert_eq!(oa_strength(&AdditiveCode::full(2), None, &b), Ok(2));
    let rep = code(2, &["11", "ww"]);
    assert_eq!(oa_strength(&rep, None, &b), Ok(1));
    assert_eq!(oa_strength(&rep, Some(&"1w".parse().unwrap()), &b), Ok(1));
}

#[test]
fn delsarte_on_random_codes() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let b = Budget::default();
    for _ in 0..40 {
        let n = rng.gen_range(1..=6);
        let c = random_code(&mut rng, n);
        let dd = dual_distance(&c, &b).unwrap_or(n + 1);
        let rep = random_vec(&mut rng, n);
        assert_eq!(oa_strength(&c, None, &b), Ok(dd - 1));
        assert_eq!(oa_strength(&c, Some(&rep), &b), Ok(dd - 1));
    }
}
