use alloc::format;
use alloc::vec::Vec;

use super::ConstructionError;
use crate::codes::{AdditiveCode, LinearCode};
use crate::fields::{F4Vec, F4};

/// `[n, 1, n]` spanned by the all-ones word.
pub fn repetition_code(n: usize) -> LinearCode {
    let ones = F4Vec::from_symbols(&alloc::vec![F4::ONE; n]);
    LinearCode::from_generators(n, alloc::vec![ones])
        .unwrap()
        .with_provenance(format!("repetition n={n}"))
}

/// Additive code generated by the rows of `I_n`; self-dual with `d = 1`.
pub fn identity_code(n: usize) -> AdditiveCode {
    let rows = (0..n)
        .map(|i| {
            let mut v = F4Vec::zeros(n);
            v.set(i, F4::ONE);
            v
        })
        .collect();
    AdditiveCode::from_generators(n, rows)
        .unwrap()
        .with_provenance(format!("identity n={n}"))
}

const DODECACODE: [&str; 12] = [
    "000000111111",
    "000000wwwwww",
    "111111000000",
    "wwwwww000000",
    "0001wW0001wW",
    "000wW1000wW1",
    "1Ww0001Ww000",
    "w1W000w1W000",
    "0001WwwW1000",
    "000w1W1wW000",
    "1wW000000Ww1",
    "W1w0000001Ww",
];

/// The `(12, 2^12, 6)` additive dodecacode, generator rows in the printed order.
pub fn dodecacode() -> AdditiveCode {
    let rows = DODECACODE.iter().map(|r| r.parse().unwrap()).collect();
    AdditiveCode::from_generators(12, rows)
        .unwrap()
        .with_provenance("dodecacode")
}

/// MacDonald code: columns are the points of PG(k-1, 4) outside the coordinate
/// subspace spanned by the first `u` unit vectors, normalised so the first
/// nonzero coordinate is 1 and listed in lexicographic order.
pub fn macdonald_code(k: usize, u: usize) -> Result<LinearCode, ConstructionError> {
    if !(k > u && u > 0) || k > 8 {
        return Err(ConstructionError::MacDonaldParams { k, u });
    }
    let mut columns: Vec<Vec<F4>> = Vec::new();
    for idx in 0..4usize.pow(k as u32) {
        // most significant coordinate first, so numeric order is lexicographic
        let x: Vec<F4> = (0..k)
            .map(|i| F4::from_index((idx >> (2 * (k - 1 - i))) as u8 & 3))
            .collect();
        if x.iter().find(|s| !s.is_zero()) != Some(&F4::ONE) {
            continue;
        }
        if x[u..].iter().all(|s| s.is_zero()) {
            continue;
        }
        columns.push(x);
    }
    let n = columns.len();
    let rows = (0..k)
        .map(|i| F4Vec::from_symbols(&columns.iter().map(|c| c[i]).collect::<Vec<_>>()))
        .collect();
    Ok(LinearCode::from_generators(n, rows)?.with_provenance(format!("macdonald k={k} u={u}")))
}
