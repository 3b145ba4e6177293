//! Univariate polynomials over GF(4).

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::{self, Write};
use core::ops::{Add, Mul};
use core::str::FromStr;

use super::{F4Vec, FieldError, F4};

/// Polynomial with ascending coefficients, trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct F4Poly {
    coeffs: Vec<F4>,
}

impl F4Poly {
    pub fn zero() -> F4Poly {
        F4Poly { coeffs: Vec::new() }
    }

    pub fn one() -> F4Poly {
        F4Poly {
            coeffs: vec![F4::ONE],
        }
    }

    pub fn x() -> F4Poly {
        F4Poly::monomial(1, F4::ONE)
    }

    pub fn constant(c: F4) -> F4Poly {
        F4Poly::from_coeffs(vec![c])
    }

    pub fn monomial(deg: usize, c: F4) -> F4Poly {
        let mut coeffs = vec![F4::ZERO; deg + 1];
        coeffs[deg] = c;
        F4Poly::from_coeffs(coeffs)
    }

    /// `x - c` (equal to `x + c` in characteristic 2).
    pub fn linear(c: F4) -> F4Poly {
        F4Poly::from_coeffs(vec![c, F4::ONE])
    }

    /// `x^n - 1`.
    pub fn xn_minus_1(n: usize) -> F4Poly {
        let mut p = F4Poly::monomial(n, F4::ONE);
        p.coeffs[0] += F4::ONE;
        p.trim();
        p
    }

    pub fn from_coeffs(coeffs: Vec<F4>) -> F4Poly {
        let mut p = F4Poly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[F4] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> F4 {
        self.coeffs.get(i).copied().unwrap_or(F4::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the convention `-1` for zero.
    pub fn degree_signed(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn leading(&self) -> F4 {
        self.coeffs.last().copied().unwrap_or(F4::ZERO)
    }

    pub fn scale(&self, c: F4) -> F4Poly {
        F4Poly::from_coeffs(self.coeffs.iter().map(|&x| x * c).collect())
    }

    /// Scales to a monic polynomial; zero stays zero.
    pub fn monic(&self) -> F4Poly {
        match self.leading().inv() {
            Some(i) => self.scale(i),
            None => F4Poly::zero(),
        }
    }

    /// Coefficientwise conjugate.
    pub fn conj(&self) -> F4Poly {
        F4Poly::from_coeffs(self.coeffs.iter().map(|c| c.conj()).collect())
    }

    pub fn eval(&self, x: F4) -> F4 {
        self.coeffs
            .iter()
            .rev()
            .fold(F4::ZERO, |acc, &c| acc * x + c)
    }

    pub fn quotrem(&self, divisor: &F4Poly) -> Result<(F4Poly, F4Poly), FieldError> {
        let dg = divisor.degree().ok_or(FieldError::DivisionByZero)?;
        let inv = divisor
            .leading()
            .inv()
            .expect("nonzero leading coefficient");
        let mut r = self.coeffs.clone();
        let Some(fd) = self.degree() else {
            return Ok((F4Poly::zero(), F4Poly::zero()));
        };
        if fd < dg {
            return Ok((F4Poly::zero(), self.clone()));
        }
        let mut q = vec![F4::ZERO; fd - dg + 1];
        for i in (dg..=fd).rev() {
            let c = r[i] * inv;
            if c.is_zero() {
                continue;
            }
            q[i - dg] = c;
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                r[i - dg + j] += c * d;
            }
        }
        r.truncate(dg);
        Ok((F4Poly::from_coeffs(q), F4Poly::from_coeffs(r)))
    }

    /// True when `self` divides `other`. The zero polynomial divides only zero.
    pub fn divides(&self, other: &F4Poly) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other
            .quotrem(self)
            .map(|(_, r)| r.is_zero())
            .unwrap_or(false)
    }

    /// Exact quotient, failing when the division leaves a remainder.
    pub fn exact_div(&self, divisor: &F4Poly) -> Result<F4Poly, FieldError> {
        let (q, r) = self.quotrem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(FieldError::InexactDivision)
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &F4Poly) -> F4Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.quotrem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Monic least common multiple; zero if either argument is zero.
    pub fn lcm(&self, other: &F4Poly) -> F4Poly {
        if self.is_zero() || other.is_zero() {
            return F4Poly::zero();
        }
        let g = self.gcd(other);
        (self * &other.exact_div(&g).expect("gcd divides")).monic()
    }

    /// Coefficient vector padded to length `n`.
    pub fn to_vector(&self, n: usize) -> F4Vec {
        assert!(self.coeffs.len() <= n, "degree exceeds vector length");
        let mut v = F4Vec::zeros(n);
        for (i, &c) in self.coeffs.iter().enumerate() {
            v.set(i, c);
        }
        v
    }

    /// Human-readable form in descending powers, e.g. `x^2 + Wx + w`.
    pub fn to_expr(&self) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let mut s = String::new();
        for i in (0..self.coeffs.len()).rev() {
            let c = self.coeffs[i];
            if c.is_zero() {
                continue;
            }
            if !s.is_empty() {
                s.push_str(" + ");
            }
            let coef = if c == F4::ONE && i > 0 {
                String::new()
            } else {
                alloc::format!("{c}")
            };
            match i {
                0 => s.push_str(&coef),
                1 => {
                    let _ = write!(s, "{coef}x");
                }
                _ => {
                    let _ = write!(s, "{coef}x^{i}");
                }
            }
        }
        s
    }
}

impl Add for &F4Poly {
    type Output = F4Poly;
    fn add(self, rhs: &F4Poly) -> F4Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        F4Poly::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Mul for &F4Poly {
    type Output = F4Poly;
    fn mul(self, rhs: &F4Poly) -> F4Poly {
        if self.is_zero() || rhs.is_zero() {
            return F4Poly::zero();
        }
        let mut out = vec![F4::ZERO; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        F4Poly::from_coeffs(out)
    }
}

impl Add for F4Poly {
    type Output = F4Poly;
    fn add(self, rhs: F4Poly) -> F4Poly {
        &self + &rhs
    }
}

impl Mul for F4Poly {
    type Output = F4Poly;
    fn mul(self, rhs: F4Poly) -> F4Poly {
        &self * &rhs
    }
}

impl fmt::Display for F4Poly {
    /// Ascending coefficients separated by spaces; zero prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for F4Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_expr())
    }
}

impl FromStr for F4Poly {
    type Err = FieldError;
    fn from_str(s: &str) -> Result<F4Poly, FieldError> {
        let mut coeffs = Vec::new();
        for tok in s.split_whitespace() {
            coeffs.push(tok.parse::<F4>()?);
        }
        Ok(F4Poly::from_coeffs(coeffs))
    }
}
