use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{Signed, Zero};

use super::{SpectrumError, WeightEnumerator};

fn binomials(n: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::from(1)]];
    for i in 1..=n {
        let prev = &rows[i - 1];
        let mut row = vec![BigInt::from(1); i + 1];
        for j in 1..i {
            row[j] = &prev[j - 1] + &prev[j];
        }
        rows.push(row);
    }
    rows
}

/// Spectrum of the trace dual: `B(X, Y) = W(X + 3Y, X - Y) / |C|`.
pub fn macwilliams_transform(w: &WeightEnumerator) -> Result<WeightEnumerator, SpectrumError> {
    let n = w.n();
    let l = w.log2_size();
    if 2 * n < l {
        return Err(SpectrumError::InvalidSpectrum);
    }
    let binom = binomials(n);
    let mut pow3 = vec![BigInt::from(1)];
    for t in 1..=n {
        let next = &pow3[t - 1] * 3;
        pow3.push(next);
    }
    let mut acc = vec![BigInt::zero(); n + 1];
    for (i, a) in w.coeffs().iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let a = BigInt::from_biguint(Sign::Plus, a.clone());
        // coefficient of Y^j in (1 + 3Y)^(n-i) (1 - Y)^i
        for t in 0..=n - i {
            let left = &binom[n - i][t] * &pow3[t] * &a;
            for s in 0..=i {
                let term = &left * &binom[i][s];
                if s % 2 == 0 {
                    acc[t + s] += term;
                } else {
                    acc[t + s] -= term;
                }
            }
        }
    }
    let mut out = Vec::with_capacity(n + 1);
    for b in acc {
        if b.is_negative() {
            return Err(SpectrumError::InvalidSpectrum);
        }
        let b: BigUint = b.magnitude().clone();
        if !b.is_zero() && b.trailing_zeros().unwrap_or(0) < l as u64 {
            return Err(SpectrumError::InvalidSpectrum);
        }
        out.push(b >> l);
    }
    WeightEnumerator::from_counts(n, 2 * n - l, out)
}
