use alloc::string::String;
use alloc::vec::Vec;

use super::{AdditiveCode, CodeError};
use crate::fields::{F4Vec, F4};

/// Gauss-Jordan elimination over GF(4) with monic pivots.
fn rref(n: usize, mut rows: Vec<F4Vec>) -> (Vec<F4Vec>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..n {
        if r == rows.len() {
            break;
        }
        let Some(i) = (r..rows.len()).find(|&i| !rows[i].get(col).is_zero()) else {
            continue;
        };
        rows.swap(r, i);
        let inv = rows[r].get(col).inv().unwrap();
        rows[r] = rows[r].scaled(inv);
        let (head, tail) = rows.split_at_mut(r);
        let (pivot, rest) = tail.split_first_mut().unwrap();
        for row in head.iter_mut().chain(rest.iter_mut()) {
            let c = row.get(col);
            row.add_scaled(pivot, c);
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

/// `{x : Σ x_i r_i = 0 for every row r}` over GF(4).
fn nullspace(n: usize, rows: Vec<F4Vec>) -> Vec<F4Vec> {
    let (rows, pivots) = rref(n, rows);
    let mut out = Vec::new();
    let mut p = 0;
    for free in 0..n {
        if p < pivots.len() && pivots[p] == free {
            p += 1;
            continue;
        }
        let mut x = F4Vec::zeros(n);
        x.set(free, F4::ONE);
        for (row, &pc) in rows.iter().zip(&pivots) {
            x.set(pc, row.get(free));
        }
        out.push(x);
    }
    out
}

/// A GF(4)-linear `[n, k]` code.
#[derive(Clone, Debug)]
pub struct LinearCode {
    n: usize,
    rows: Vec<F4Vec>,
    pivots: Vec<usize>,
    generators: Vec<F4Vec>,
    provenance: String,
}

impl PartialEq for LinearCode {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.rows == other.rows
    }
}

impl Eq for LinearCode {}

impl LinearCode {
    pub fn from_generators(n: usize, generators: Vec<F4Vec>) -> Result<LinearCode, CodeError> {
        if let Some(g) = generators.iter().find(|g| g.len() != n) {
            return Err(CodeError::LengthMismatch {
                expected: n,
                found: g.len(),
            });
        }
        let (rows, pivots) = rref(n, generators.clone());
        Ok(LinearCode {
            n,
            rows,
            pivots,
            generators,
            provenance: String::new(),
        })
    }

    pub fn zero(n: usize) -> LinearCode {
        LinearCode::from_generators(n, Vec::new()).unwrap()
    }

    pub fn full(n: usize) -> LinearCode {
        let rows = (0..n)
            .map(|i| {
                let mut v = F4Vec::zeros(n);
                v.set(i, F4::ONE);
                v
            })
            .collect();
        LinearCode::from_generators(n, rows).unwrap()
    }

    pub fn with_provenance(mut self, p: impl Into<String>) -> LinearCode {
        self.provenance = p.into();
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// GF(4)-dimension.
    pub fn k(&self) -> usize {
        self.rows.len()
    }

    /// Reduced echelon generator rows.
    pub fn rows(&self) -> &[F4Vec] {
        &self.rows
    }

    pub fn generators(&self) -> &[F4Vec] {
        &self.generators
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    /// The same code as an F2-module, generated by each row `g` and `ωg`.
    pub fn additive_view(&self) -> AdditiveCode {
        let mut gens = Vec::with_capacity(2 * self.k());
        for g in &self.rows {
            gens.push(g.clone());
            gens.push(g.scaled(F4::W));
        }
        AdditiveCode::from_generators(self.n, gens)
            .unwrap()
            .with_provenance(self.provenance.clone())
    }

    pub fn contains(&self, v: &F4Vec) -> Result<bool, CodeError> {
        if v.len() != self.n {
            return Err(CodeError::LengthMismatch {
                expected: self.n,
                found: v.len(),
            });
        }
        let mut r = v.clone();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = r.get(p);
            r.add_scaled(row, c);
        }
        Ok(r.is_zero())
    }

    pub fn is_subcode_of(&self, other: &LinearCode) -> Result<bool, CodeError> {
        for g in &self.rows {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn euclidean_dual(&self) -> LinearCode {
        LinearCode::from_generators(self.n, nullspace(self.n, self.rows.clone())).unwrap()
    }

    /// `{u : Σ u_i v_i² = 0 for all v ∈ C}`, checked against the trace dual of the additive view.
    pub fn hermitian_dual(&self) -> Result<LinearCode, CodeError> {
        let conj = self.rows.iter().map(F4Vec::conj).collect();
        let d = LinearCode::from_generators(self.n, nullspace(self.n, conj)).unwrap();
        if d.additive_view() != self.additive_view().trace_dual() {
            return Err(CodeError::DualMismatch);
        }
        Ok(d)
    }

    pub fn is_hermitian_self_orthogonal(&self) -> bool {
        self.rows.iter().enumerate().all(|(i, u)| {
            self.rows[i..]
                .iter()
                .all(|v| u.hermitian_ip(v).unwrap().is_zero())
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn lin(n: usize, rows: &[&str]) -> LinearCode {
        LinearCode::from_generators(n, rows.iter().map(|r| r.parse().unwrap()).collect()).unwrap()
    }

    fn random_linear(rng: &mut ChaCha8Rng, n: usize, rows: usize) -> LinearCode {
        let gens = (0..rows)
            .map(|_| {
                F4Vec::from_symbols(
                    &(0..n)
                        .map(|_| F4::from_index(rng.gen_range(0..4)))
                        .collect::<Vec<_>>(),
                )
            })
            .collect();
        LinearCode::from_generators(n, gens).unwrap()
    }

    #[test]
    fn rank_and_view() {
        let c = lin(3, &["1w0", "w W0", "0 0 1"]);
        assert_eq!(c.k(), 2);
        assert_eq!(c.additive_view().dimension(), 4);
    }

    #[test]
    fn duals_of_small_codes() {
        assert_eq!(
            LinearCode::full(4).hermitian_dual().unwrap(),
            LinearCode::zero(4)
        );
        let rep = lin(2, &["11"]);
        assert_eq!(rep.hermitian_dual().unwrap(), rep);
        assert!(rep.is_hermitian_self_orthogonal());
        assert!(!lin(3, &["111"]).is_hermitian_self_orthogonal());
        assert!(lin(6, &["111111"]).is_hermitian_self_orthogonal());
    }

    #[test]
    fn dual_orthogonality_brute() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..100 {
            let n = rng.gen_range(1..=30);
            let r = rng.gen_range(0..=n);
            let c = random_linear(&mut rng, n, r);
            let h = c.hermitian_dual().unwrap();
            let e = c.euclidean_dual();
            assert_eq!(c.k() + h.k(), n);
            assert_eq!(c.k() + e.k(), n);
            for u in h.rows() {
                for x in c.rows() {
                    assert!(u.hermitian_ip(x).unwrap().is_zero());
                }
            }
            for u in e.rows() {
                for x in c.rows() {
                    assert!(u.euclidean_ip(x).unwrap().is_zero());
                }
            }
            assert_eq!(h.hermitian_dual().unwrap(), c);
        }
    }
}
