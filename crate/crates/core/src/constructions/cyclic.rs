use alloc::format;
use alloc::vec::Vec;

use super::{ConstructionError, Factorization};
use crate::codes::LinearCode;
use crate::fields::F4Poly;

/// A cyclic code of length `n` with monic generator `g | x^n - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicCode {
    n: usize,
    generator: F4Poly,
    code: LinearCode,
}

impl CyclicCode {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.code.k()
    }

    pub fn generator(&self) -> &F4Poly {
        &self.generator
    }

    /// Check polynomial `(x^n - 1) / g`.
    pub fn check_polynomial(&self) -> F4Poly {
        F4Poly::xn_minus_1(self.n)
            .exact_div(&self.generator)
            .expect("generator divides x^n - 1")
    }

    pub fn code(&self) -> &LinearCode {
        &self.code
    }

    /// `self ⊆ other`, decided by divisibility of generators.
    pub fn is_subcode_of(&self, other: &CyclicCode) -> bool {
        self.n == other.n && other.generator.divides(&self.generator)
    }

    /// Lower bound on the minimum distance from runs in the zero set.
    pub fn bch_bound(&self, f: &Factorization) -> usize {
        bch_bound(&f.zero_mask(&self.generator))
    }

    /// The same bound for the Hermitian dual, whose zero set is `Z_n \ (-2Z)`.
    pub fn hermitian_dual_bch_bound(&self, f: &Factorization) -> usize {
        let z = f.zero_mask(&self.generator);
        let n = self.n;
        // Z is closed under ×4, so i ∈ -2Z ⟺ -2i ∈ Z
        let dual: Vec<bool> = (0..n).map(|i| !z[(n - 2 * i % n) % n]).collect();
        bch_bound(&dual)
    }
}

/// Largest `δ` such that the mask contains `δ - 1` consecutive exponents
/// `a, a+b, …` for some step `b` coprime to `n`; at least 1.
pub fn bch_bound(zeros: &[bool]) -> usize {
    let n = zeros.len();
    if zeros.iter().all(|&z| z) {
        return n + 1;
    }
    let mut best = 0;
    for b in 1..n.max(2) {
        if gcd(b, n) != 1 {
            continue;
        }
        for a in 0..n {
            if !zeros[a] || zeros[(a + n - b % n) % n] {
                continue;
            }
            let mut len = 0;
            while len < n && zeros[(a + len * b) % n] {
                len += 1;
            }
            best = best.max(len);
        }
    }
    best + 1
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Code generated by the shifts `x^i g(x)`, `0 ≤ i < n - deg g`.
pub fn cyclic_code(n: usize, g: &F4Poly) -> Result<CyclicCode, ConstructionError> {
    if g.is_zero() || !g.divides(&F4Poly::xn_minus_1(n)) {
        return Err(ConstructionError::NotDivisor);
    }
    let g = g.monic();
    let deg = g.degree().unwrap();
    let rows = (0..n - deg)
        .map(|i| (&F4Poly::monomial(i, crate::fields::F4::ONE) * &g).to_vector(n))
        .collect();
    let code = LinearCode::from_generators(n, rows)?.with_provenance(format!("cyclic n={n} g={g}"));
    Ok(CyclicCode {
        n,
        generator: g,
        code,
    })
}

/// Narrow-sense BCH code: generator = lcm of the minimal polynomials of `α^1..α^(δ-1)`.
pub fn bch_code(f: &Factorization, delta: usize) -> Result<CyclicCode, ConstructionError> {
    let n = f.n();
    if delta < 2 || delta > n {
        return Err(ConstructionError::InvalidDelta { n, delta });
    }
    let mut which: Vec<usize> = (1..delta).map(|i| f.cosets().coset_of(i)).collect();
    which.sort_unstable();
    which.dedup();
    let mut c = cyclic_code(n, &f.product(&which))?;
    c.code = c.code.with_provenance(format!("bch n={n} delta={delta}"));
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::F4Vec;
    use crate::spectrum::{min_distance, Budget};

    fn p(s: &str) -> F4Poly {
        s.parse().unwrap()
    }

    #[test]
    fn repetition_and_full() {
        let g = F4Poly::xn_minus_1(5).exact_div(&p("1 1")).unwrap();
        let c = cyclic_code(5, &g).unwrap();
        assert_eq!(c.k(), 1);
        assert_eq!(c.code().rows()[0], "11111".parse::<F4Vec>().unwrap());
        assert_eq!(cyclic_code(6, &F4Poly::one()).unwrap().k(), 6);
        assert!(cyclic_code(5, &p("w 1")).is_err());
    }

    #[test]
    fn rows_are_cyclic() {
        let c = cyclic_code(7, &p("1 1 0 1")).unwrap();
        for r in c.code().rows() {
            assert!(c.code().contains(&r.rotate_right()).unwrap());
        }
    }

    #[test]
    fn nesting_equals_divisibility_small_n() {
        for n in (3..=21).step_by(2) {
            let f = Factorization::new(n).unwrap();
            let r = f.factors().len();
            if r > 7 {
                continue;
            }
            let codes: Vec<CyclicCode> = (0u32..1 << r)
                .map(|mask| {
                    let which: Vec<usize> = (0..r).filter(|j| mask >> j & 1 == 1).collect();
                    cyclic_code(n, &f.product(&which)).unwrap()
                })
                .collect();
            for a in &codes {
                for b in &codes {
                    assert_eq!(
                        a.code().is_subcode_of(b.code()).unwrap(),
                        a.is_subcode_of(b),
                        "n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn bch_examples() {
        let f27 = Factorization::new(27).unwrap();
        let c = bch_code(&f27, 2).unwrap();
        assert_eq!(c.k(), 18);
        let f31 = Factorization::new(31).unwrap();
        assert_eq!(bch_code(&f31, 4).unwrap().k(), 21);
        let f51 = Factorization::new(51).unwrap();
        assert_eq!(bch_code(&f51, 3).unwrap().k(), 43);
        assert!(bch_code(&f27, 1).is_err());
    }

    #[test]
    fn bch_bound_holds() {
        let b = Budget::default();
        for n in [5usize, 7, 9, 11, 13, 15, 17, 21] {
            let f = Factorization::new(n).unwrap();
            for delta in 2..=n {
                let c = bch_code(&f, delta).unwrap();
                if c.k() == 0 {
                    continue;
                }
                let d = min_distance(&c.code().additive_view(), &b).unwrap();
                assert!(d >= delta, "n={n} delta={delta} d={d}");
                assert!(d >= c.bch_bound(&f));
                let h = c.code().hermitian_dual().unwrap();
                if h.k() > 0 {
                    let dd = min_distance(&h.additive_view(), &b).unwrap();
                    assert!(dd >= c.hermitian_dual_bch_bound(&f), "n={n} delta={delta}");
                }
            }
        }
    }

    #[test]
    fn hermitian_dual_is_cyclic_with_expected_zeros() {
        let f = Factorization::new(15).unwrap();
        let c = cyclic_code(15, &f.product(&[1, 2])).unwrap();
        let h = c.code().hermitian_dual().unwrap();
        let zeros = f.zero_mask(c.generator());
        // generator of the dual from its zero set Z_n \ (-2Z)
        let n = 15;
        let dual_zeros: Vec<usize> = (0..n).filter(|&i| !zeros[(n - 2 * i % n) % n]).collect();
        let mut which: Vec<usize> = dual_zeros.iter().map(|&i| f.cosets().coset_of(i)).collect();
        which.sort_unstable();
        which.dedup();
        let g = f.product(&which);
        let d = cyclic_code(n, &g).unwrap();
        assert_eq!(d.code(), &h);
    }
}
