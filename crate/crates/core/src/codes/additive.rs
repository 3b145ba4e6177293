use alloc::string::String;
use alloc::vec::Vec;

use super::CodeError;
use crate::fields::{F4Vec, F4};

/// Reads bit `col` of the interleaved expansion `(a₁, b₁, a₂, b₂, …)`.
#[inline]
fn bit(v: &F4Vec, col: usize) -> bool {
    let i = col / 2;
    let plane = if col.is_multiple_of(2) {
        v.a_plane()
    } else {
        v.b_plane()
    };
    (plane[i / 64] >> (i % 64)) & 1 == 1
}

/// Gauss-Jordan elimination over F2; returns the reduced rows and their pivot columns.
fn rref(n: usize, mut rows: Vec<F4Vec>) -> (Vec<F4Vec>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..2 * n {
        if r == rows.len() {
            break;
        }
        let Some(i) = (r..rows.len()).find(|&i| bit(&rows[i], col)) else {
            continue;
        };
        rows.swap(r, i);
        let (head, tail) = rows.split_at_mut(r);
        let (pivot, rest) = tail.split_first_mut().unwrap();
        for row in head.iter_mut().chain(rest.iter_mut()) {
            if bit(row, col) {
                row.add_assign(pivot);
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

/// F2 null space of the rows under the plain dot product of interleaved expansions.
fn f2_nullspace(n: usize, rows: Vec<F4Vec>) -> Vec<F4Vec> {
    let (rows, pivots) = rref(n, rows);
    let mut out = Vec::new();
    let mut p = 0;
    for free in 0..2 * n {
        if p < pivots.len() && pivots[p] == free {
            p += 1;
            continue;
        }
        let mut x = F4Vec::zeros(n);
        let mut set = |col: usize| {
            let i = col / 2;
            let s = x.get(i);
            let flip = if col.is_multiple_of(2) {
                F4::ONE
            } else {
                F4::W
            };
            x.set(i, s + flip);
        };
        set(free);
        for (row, &pc) in rows.iter().zip(&pivots) {
            if bit(row, free) {
                set(pc);
            }
        }
        out.push(x);
    }
    out
}

/// Which generator rows to remove.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RowSelection {
    /// Delete the last `r` rows.
    Last(usize),
    /// Delete the rows at these 0-based indices.
    Delete(Vec<usize>),
    /// Keep only the rows at these 0-based indices.
    Keep(Vec<usize>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SelfDualType {
    TypeI,
    TypeII,
}

/// An F2-linear code in GF(4)^n of size `2^l`.
#[derive(Clone, Debug)]
pub struct AdditiveCode {
    n: usize,
    basis: Vec<F4Vec>,
    pivots: Vec<usize>,
    generators: Vec<F4Vec>,
    provenance: String,
}

impl PartialEq for AdditiveCode {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.basis == other.basis
    }
}

impl Eq for AdditiveCode {}

/// Canonical reduced echelon F2 basis of the span of `rows`; zero rows are dropped.
pub fn f2_row_reduce(n: usize, rows: &[F4Vec]) -> Result<AdditiveCode, CodeError> {
    AdditiveCode::from_generators(n, rows.to_vec())
}

impl AdditiveCode {
    pub fn from_generators(n: usize, generators: Vec<F4Vec>) -> Result<AdditiveCode, CodeError> {
        if let Some(g) = generators.iter().find(|g| g.len() != n) {
            return Err(CodeError::LengthMismatch {
                expected: n,
                found: g.len(),
            });
        }
        let (basis, pivots) = rref(n, generators.clone());
        Ok(AdditiveCode {
            n,
            basis,
            pivots,
            generators,
            provenance: String::new(),
        })
    }

    pub fn zero(n: usize) -> AdditiveCode {
        AdditiveCode::from_generators(n, Vec::new()).unwrap()
    }

    /// All of GF(4)^n.
    pub fn full(n: usize) -> AdditiveCode {
        let mut rows = Vec::with_capacity(2 * n);
        for i in 0..n {
            for s in [F4::ONE, F4::W] {
                let mut v = F4Vec::zeros(n);
                v.set(i, s);
                rows.push(v);
            }
        }
        AdditiveCode::from_generators(n, rows).unwrap()
    }

    pub fn with_provenance(mut self, p: impl Into<String>) -> AdditiveCode {
        self.provenance = p.into();
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// F2-dimension `l`.
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[F4Vec] {
        &self.basis
    }

    /// Generator rows in their original order.
    pub fn generators(&self) -> &[F4Vec] {
        &self.generators
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    fn check(&self, v: &F4Vec) -> Result<(), CodeError> {
        if v.len() != self.n {
            Err(CodeError::LengthMismatch {
                expected: self.n,
                found: v.len(),
            })
        } else {
            Ok(())
        }
    }

    /// Remainder of `v` after reduction against the canonical basis.
    pub fn reduce(&self, v: &F4Vec) -> Result<F4Vec, CodeError> {
        self.check(v)?;
        let mut r = v.clone();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if bit(&r, p) {
                r.add_assign(row);
            }
        }
        Ok(r)
    }

    pub fn contains(&self, v: &F4Vec) -> Result<bool, CodeError> {
        Ok(self.reduce(v)?.is_zero())
    }

    /// First generator row of `self` outside `other`, if any.
    pub fn witness_outside(&self, other: &AdditiveCode) -> Result<Option<F4Vec>, CodeError> {
        if self.n != other.n {
            return Err(CodeError::LengthMismatch {
                expected: other.n,
                found: self.n,
            });
        }
        for g in self.generators.iter().chain(&self.basis) {
            if !other.contains(g)? {
                return Ok(Some(g.clone()));
            }
        }
        Ok(None)
    }

    /// `self ⊆ other`.
    pub fn is_subcode_of(&self, other: &AdditiveCode) -> Result<bool, CodeError> {
        Ok(self.witness_outside(other)?.is_none())
    }

    /// `{u : ⟨u, c⟩_tr = 0 for all c ∈ C}`, of F2-dimension `2n - l`.
    pub fn trace_dual(&self) -> AdditiveCode {
        // ⟨u, c⟩_tr is the F2 dot product of u with c's planes exchanged.
        let swapped = self.basis.iter().map(F4Vec::swap_planes).collect();
        let null = f2_nullspace(self.n, swapped);
        let mut d = AdditiveCode::from_generators(self.n, null).unwrap();
        d.generators = d.basis.clone();
        d
    }

    pub fn is_self_orthogonal(&self) -> bool {
        self.basis
            .iter()
            .enumerate()
            .all(|(i, u)| self.basis[i + 1..].iter().all(|v| !u.trace_ip_unchecked(v)))
    }

    pub fn is_self_dual(&self) -> bool {
        2 * self.dimension() == 2 * self.n && self.is_self_orthogonal()
    }

    /// For a trace self-orthogonal code the weight parity is F2-linear, so the
    /// parity of the basis rows decides whether every codeword has even weight.
    pub fn classify_type(&self) -> Result<SelfDualType, CodeError> {
        if !self.is_self_dual() {
            return Err(CodeError::NotSelfDual);
        }
        if self.basis.iter().all(|b| b.weight() % 2 == 0) {
            Ok(SelfDualType::TypeII)
        } else {
            Ok(SelfDualType::TypeI)
        }
    }

    /// Span of the generator rows that survive the selection.
    pub fn delete_rows(&self, sel: &RowSelection) -> Result<AdditiveCode, CodeError> {
        let rows = self.generators.len();
        let keep: Vec<usize> = match sel {
            RowSelection::Last(r) => {
                if *r > rows {
                    return Err(CodeError::RowOutOfRange { index: *r, rows });
                }
                (0..rows - r).collect()
            }
            RowSelection::Delete(idx) => {
                if let Some(&i) = idx.iter().find(|&&i| i >= rows) {
                    return Err(CodeError::RowOutOfRange { index: i, rows });
                }
                (0..rows).filter(|i| !idx.contains(i)).collect()
            }
            RowSelection::Keep(idx) => {
                if let Some(&i) = idx.iter().find(|&&i| i >= rows) {
                    return Err(CodeError::RowOutOfRange { index: i, rows });
                }
                idx.clone()
            }
        };
        let gens = keep
            .into_iter()
            .map(|i| self.generators[i].clone())
            .collect();
        Ok(AdditiveCode::from_generators(self.n, gens)?.with_provenance(self.provenance.clone()))
    }
}
