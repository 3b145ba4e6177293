use alloc::vec;
use alloc::vec::Vec;

use super::ConstructionError;
use crate::fields::{ord4, ExtField, F4Poly};

/// Orbits of `Z_n` under multiplication by 4, ordered by smallest element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicCosets {
    n: usize,
    cosets: Vec<Vec<usize>>,
    owner: Vec<usize>,
}

impl CyclotomicCosets {
    pub fn new(n: usize) -> Result<CyclotomicCosets, ConstructionError> {
        if n.is_multiple_of(2) {
            return Err(ConstructionError::EvenLength(n));
        }
        let mut owner = vec![usize::MAX; n];
        let mut cosets = Vec::new();
        for r in 0..n {
            if owner[r] != usize::MAX {
                continue;
            }
            let mut orbit = Vec::new();
            let mut x = r;
            loop {
                owner[x] = cosets.len();
                orbit.push(x);
                x = x * 4 % n;
                if x == r {
                    break;
                }
            }
            orbit.sort_unstable();
            cosets.push(orbit);
        }
        Ok(CyclotomicCosets { n, cosets, owner })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cosets(&self) -> &[Vec<usize>] {
        &self.cosets
    }

    /// Index of the coset containing `i mod n`.
    pub fn coset_of(&self, i: usize) -> usize {
        self.owner[i % self.n]
    }
}

/// `x^n - 1 = Π_j f_j` with `f_j = Π_{i ∈ coset j} (x - α^i)`.
#[derive(Clone, Debug)]
pub struct Factorization {
    field: ExtField,
    alpha: u128,
    cosets: CyclotomicCosets,
    factors: Vec<F4Poly>,
}

impl Factorization {
    pub fn new(n: usize) -> Result<Factorization, ConstructionError> {
        let cosets = CyclotomicCosets::new(n)?;
        let field = ExtField::new(ord4(n) as u32)?;
        let alpha = field.root_of_unity(n)?;
        let mut factors = Vec::with_capacity(cosets.cosets().len());
        for c in cosets.cosets() {
            let roots: Vec<u128> = c.iter().map(|&i| field.pow(alpha, i as u128)).collect();
            factors.push(field.poly_from_roots(&roots)?);
        }
        let product = factors.iter().fold(F4Poly::one(), |acc, f| &acc * f);
        if product != F4Poly::xn_minus_1(n) {
            return Err(ConstructionError::NotDivisor);
        }
        Ok(Factorization {
            field,
            alpha,
            cosets,
            factors,
        })
    }

    pub fn n(&self) -> usize {
        self.cosets.n()
    }

    pub fn field(&self) -> &ExtField {
        &self.field
    }

    /// The chosen primitive `n`-th root of unity.
    pub fn alpha(&self) -> u128 {
        self.alpha
    }

    pub fn cosets(&self) -> &CyclotomicCosets {
        &self.cosets
    }

    /// Irreducible factors, aligned with `cosets().cosets()`.
    pub fn factors(&self) -> &[F4Poly] {
        &self.factors
    }

    /// Product of the factors whose indices are listed.
    pub fn product(&self, which: &[usize]) -> F4Poly {
        which
            .iter()
            .fold(F4Poly::one(), |acc, &j| &acc * &self.factors[j])
    }

    /// Coset indices of the irreducible factors dividing `g`.
    pub fn factor_indices(&self, g: &F4Poly) -> Vec<usize> {
        (0..self.factors.len())
            .filter(|&j| self.factors[j].divides(g))
            .collect()
    }

    /// Zero set `{i : g(α^i) = 0}` of a divisor of `x^n - 1`, as a membership mask.
    pub fn zero_mask(&self, g: &F4Poly) -> Vec<bool> {
        let mut mask = vec![false; self.n()];
        for j in self.factor_indices(g) {
            for &i in &self.cosets.cosets()[j] {
                mask[i] = true;
            }
        }
        mask
    }
}

/// Irreducible factors of `x^n - 1` over GF(4), one per cyclotomic coset.
pub fn factor_xn_minus_1(n: usize) -> Result<Vec<F4Poly>, ConstructionError> {
    Ok(Factorization::new(n)?.factors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::F4;

    fn p(s: &str) -> F4Poly {
        s.parse().unwrap()
    }

    fn sorted(mut v: Vec<F4Poly>) -> Vec<F4Poly> {
        v.sort();
        v
    }

    #[test]
    fn small_factorizations() {
        assert_eq!(
            sorted(factor_xn_minus_1(3).unwrap()),
            sorted(vec![p("1 1"), p("w 1"), p("W 1")])
        );
        assert_eq!(
            sorted(factor_xn_minus_1(5).unwrap()),
            sorted(vec![p("1 1"), p("1 w 1"), p("1 W 1")])
        );
        assert_eq!(
            sorted(factor_xn_minus_1(7).unwrap()),
            sorted(vec![p("1 1"), p("1 1 0 1"), p("1 0 1 1")])
        );
        assert!(factor_xn_minus_1(4).is_err());
    }

    // No root in GF(4) and no factor of degree ≤ deg/2 among monic polynomials.
    fn irreducible_brute(f: &F4Poly) -> bool {
        let d = f.degree().unwrap();
        for dg in 1..=d / 2 {
            for idx in 0..4usize.pow(dg as u32) {
                let mut c: Vec<F4> = (0..dg)
                    .map(|i| F4::from_index((idx >> (2 * i)) as u8 & 3))
                    .collect();
                c.push(F4::ONE);
                let g = F4Poly::from_coeffs(c);
                if g.divides(f) {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn factors_irreducible_small_n() {
        for n in (1..=21).step_by(2) {
            let f = Factorization::new(n).unwrap();
            for (poly, coset) in f.factors().iter().zip(f.cosets().cosets()) {
                assert_eq!(poly.degree(), Some(coset.len()));
                if coset.len() <= 6 {
                    assert!(irreducible_brute(poly), "n={n} {poly:?}");
                }
            }
        }
    }

    #[test]
    fn product_is_xn_minus_1_up_to_101() {
        for n in (1..=101).step_by(2) {
            let f = Factorization::new(n).unwrap();
            let prod = f.factors().iter().fold(F4Poly::one(), |a, g| &a * g);
            assert_eq!(prod, F4Poly::xn_minus_1(n));
            for (poly, coset) in f.factors().iter().zip(f.cosets().cosets()) {
                assert_eq!(poly.degree(), Some(coset.len()));
            }
        }
    }

    #[test]
    fn cosets_partition() {
        let c = CyclotomicCosets::new(15).unwrap();
        assert_eq!(c.cosets()[0], vec![0]);
        let total: usize = c.cosets().iter().map(Vec::len).sum();
        assert_eq!(total, 15);
        assert_eq!(c.coset_of(4), c.coset_of(1));
    }
}
