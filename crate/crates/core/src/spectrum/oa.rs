use alloc::vec;
use alloc::vec::Vec;

use super::{Budget, SpectrumError};
use crate::codes::{AdditiveCode, CodeError};
use crate::fields::F4Vec;

/// Largest stored runs for the column scan.
const MAX_RUNS_LOG2: usize = 20;
/// Largest number of (subset, run) visits in the scan.
const MAX_SCAN: u128 = 1 << 34;

fn binom(n: usize, k: usize) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Advances `idx` to the next `t`-subset of `0..n` in lexicographic order.
fn next_subset(idx: &mut [usize], n: usize) -> bool {
    let t = idx.len();
    for i in (0..t).rev() {
        if idx[i] < n - t + i {
            idx[i] += 1;
            for j in i + 1..t {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Strength of the orthogonal array formed by the codewords (or by a coset `v + C`):
/// the largest `t` such that every `t` columns contain each of the `4^t` tuples equally often.
pub fn oa_strength(
    c: &AdditiveCode,
    coset_rep: Option<&F4Vec>,
    budget: &Budget,
) -> Result<usize, SpectrumError> {
    let n = c.n();
    let l = c.dimension();
    budget.require(l)?;
    if l > MAX_RUNS_LOG2 {
        return Err(SpectrumError::ScanTooLarge);
    }
    let shift = match coset_rep {
        Some(v) if v.len() != n => {
            return Err(CodeError::LengthMismatch {
                expected: n,
                found: v.len(),
            }
            .into())
        }
        Some(v) => v.clone(),
        None => F4Vec::zeros(n),
    };
    let mut runs: Vec<Vec<u8>> = Vec::with_capacity(1 << l);
    for mask in 0u64..(1 << l) {
        let mut x = shift.clone();
        for (j, b) in c.basis().iter().enumerate() {
            if mask >> j & 1 == 1 {
                x.add_assign(b);
            }
        }
        runs.push(x.symbols().map(|s| s.index()).collect());
    }
    let m = runs.len() as u128;
    let mut strength = 0;
    for t in 1..=n {
        if 2 * t > l {
            break;
        }
        if binom(n, t) * m > MAX_SCAN {
            return Err(SpectrumError::ScanTooLarge);
        }
        let lambda = (m >> (2 * t)) as u32;
        let mut idx: Vec<usize> = (0..t).collect();
        let mut counts = vec![0u32; 1 << (2 * t)];
        let balanced = loop {
            counts.iter_mut().for_each(|x| *x = 0);
            for r in &runs {
                let key = idx.iter().fold(0usize, |k, &i| (k << 2) | r[i] as usize);
                counts[key] += 1;
            }
            if counts.iter().any(|&x| x != lambda) {
                break false;
            }
            if !next_subset(&mut idx, n) {
                break true;
            }
        };
        if !balanced {
            break;
        }
        strength = t;
    }
    Ok(strength)
}
