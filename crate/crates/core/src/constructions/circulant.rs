use alloc::format;
use alloc::vec::Vec;

use super::ConstructionError;
use crate::codes::AdditiveCode;
use crate::fields::{F4Vec, F4};

/// Rows `v, σv, σ²v, …` where `σ` shifts right by one with wrap-around.
fn development(v: &F4Vec) -> Vec<F4Vec> {
    let mut rows = Vec::with_capacity(v.len());
    let mut r = v.clone();
    for _ in 0..v.len() {
        let next = r.rotate_right();
        rows.push(r);
        r = next;
    }
    rows
}

fn concat(parts: &[&F4Vec]) -> F4Vec {
    let syms: Vec<F4> = parts.iter().flat_map(|p| p.symbols()).collect();
    F4Vec::from_symbols(&syms)
}

fn unit(m: usize, i: usize) -> F4Vec {
    let mut v = F4Vec::zeros(m);
    v.set(i, F4::ONE);
    v
}

fn constant(m: usize, c: F4) -> F4Vec {
    F4Vec::from_symbols(&alloc::vec![c; m])
}

/// The cyclic development of `v`.
pub fn circulant_code(v: &F4Vec) -> AdditiveCode {
    AdditiveCode::from_generators(v.len(), development(v))
        .unwrap()
        .with_provenance(format!("circulant v=({v})"))
}

/// `[I A; B I]` with `A`, `B` the developments of `a`, `b`.
pub fn four_circulant_code(a: &F4Vec, b: &F4Vec) -> Result<AdditiveCode, ConstructionError> {
    let m = a.len();
    if b.len() != m {
        return Err(ConstructionError::BadLength {
            expected: m,
            found: b.len(),
        });
    }
    let (ra, rb) = (development(a), development(b));
    let mut rows = Vec::with_capacity(2 * m);
    rows.extend(
        ra.iter()
            .enumerate()
            .map(|(i, r)| concat(&[&unit(m, i), r])),
    );
    rows.extend(
        rb.iter()
            .enumerate()
            .map(|(i, r)| concat(&[r, &unit(m, i)])),
    );
    Ok(AdditiveCode::from_generators(2 * m, rows)?
        .with_provenance(format!("four-circulant a=({a}) b=({b})")))
}

/// `[e 1 d; 1 I A; c B I]` with `d = (ω, …, ω)` and `c = dᵀ`.
pub fn bordered_four_circulant_code(
    e: F4,
    a: &F4Vec,
    b: &F4Vec,
) -> Result<AdditiveCode, ConstructionError> {
    let m = a.len();
    if b.len() != m {
        return Err(ConstructionError::BadLength {
            expected: m,
            found: b.len(),
        });
    }
    let (ra, rb) = (development(a), development(b));
    let one = constant(1, F4::ONE);
    let w = constant(1, F4::W);
    let mut rows = Vec::with_capacity(2 * m + 1);
    rows.push(concat(&[
        &constant(1, e),
        &constant(m, F4::ONE),
        &constant(m, F4::W),
    ]));
    rows.extend(
        ra.iter()
            .enumerate()
            .map(|(i, r)| concat(&[&one, &unit(m, i), r])),
    );
    rows.extend(
        rb.iter()
            .enumerate()
            .map(|(i, r)| concat(&[&w, r, &unit(m, i)])),
    );
    Ok(AdditiveCode::from_generators(2 * m + 1, rows)?
        .with_provenance(format!("bordered four-circulant e={e} a=({a}) b=({b})")))
}

/// A circulant-family generator matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CirculantSpec {
    Circulant { v: F4Vec },
    FourCirculant { a: F4Vec, b: F4Vec },
    Bordered { e: F4, a: F4Vec, b: F4Vec },
}

impl CirculantSpec {
    pub fn n(&self) -> usize {
        match self {
            CirculantSpec::Circulant { v } => v.len(),
            CirculantSpec::FourCirculant { a, .. } => 2 * a.len(),
            CirculantSpec::Bordered { a, .. } => 2 * a.len() + 1,
        }
    }

    pub fn build(&self) -> Result<AdditiveCode, ConstructionError> {
        match self {
            CirculantSpec::Circulant { v } => Ok(circulant_code(v)),
            CirculantSpec::FourCirculant { a, b } => four_circulant_code(a, b),
            CirculantSpec::Bordered { e, a, b } => bordered_four_circulant_code(*e, a, b),
        }
    }
}
