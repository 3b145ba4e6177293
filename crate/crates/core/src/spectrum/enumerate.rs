use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;

use super::{Budget, SpectrumError, WeightEnumerator};
use crate::codes::AdditiveCode;
use crate::fields::F4Vec;

fn walk_fixed<const W: usize, F: FnMut(u64, u32)>(rows: &[F4Vec], mut visit: F) {
    let planes: Vec<([u64; W], [u64; W])> = rows
        .iter()
        .map(|r| {
            let mut a = [0u64; W];
            let mut b = [0u64; W];
            a[..r.plane_words()].copy_from_slice(r.a_plane());
            b[..r.plane_words()].copy_from_slice(r.b_plane());
            (a, b)
        })
        .collect();
    let mut a = [0u64; W];
    let mut b = [0u64; W];
    let mut g = 0u64;
    visit(0, 0);
    for i in 1..(1u64 << rows.len()) {
        let j = i.trailing_zeros() as usize;
        let (ra, rb) = &planes[j];
        let mut w = 0;
        for t in 0..W {
            a[t] ^= ra[t];
            b[t] ^= rb[t];
            w += (a[t] | b[t]).count_ones();
        }
        g ^= 1 << j;
        visit(g, w);
    }
}

fn walk_dyn<F: FnMut(u64, u32)>(n: usize, rows: &[F4Vec], mut visit: F) {
    let mut cur = F4Vec::zeros(n);
    let mut g = 0u64;
    visit(0, 0);
    for i in 1..(1u64 << rows.len()) {
        let j = i.trailing_zeros() as usize;
        cur.add_assign(&rows[j]);
        g ^= 1 << j;
        visit(g, cur.weight() as u32);
    }
}

/// Visits every element of the span of `rows` in Gray-code order, passing the
/// Gray index (bit `j` set iff row `j` is in the combination) and the weight.
pub(crate) fn gray_walk<F: FnMut(u64, u32)>(n: usize, rows: &[F4Vec], visit: F) {
    assert!(rows.len() < 64, "gray walk needs fewer than 64 rows");
    match n.div_ceil(64) {
        0 | 1 => walk_fixed::<1, F>(rows, visit),
        2 => walk_fixed::<2, F>(rows, visit),
        3 => walk_fixed::<3, F>(rows, visit),
        4 => walk_fixed::<4, F>(rows, visit),
        _ => walk_dyn(n, rows, visit),
    }
}

/// Calls `visit` with the weight of every codeword of `c`, in Gray-code order.
pub fn for_each_codeword_weight<F: FnMut(u32)>(
    c: &AdditiveCode,
    budget: &Budget,
    mut visit: F,
) -> Result<(), SpectrumError> {
    budget.require(c.dimension())?;
    gray_walk(c.n(), c.basis(), |_, w| visit(w));
    Ok(())
}

/// Exact weight distribution by full traversal.
pub fn weight_enumerator(
    c: &AdditiveCode,
    budget: &Budget,
) -> Result<WeightEnumerator, SpectrumError> {
    let mut counts = vec![0u64; c.n() + 1];
    for_each_codeword_weight(c, budget, |w| counts[w as usize] += 1)?;
    Ok(WeightEnumerator::from_parts(
        c.n(),
        c.dimension(),
        counts.into_iter().map(BigUint::from).collect(),
    ))
}
