//! Extension fields GF(2^(2m)) containing GF(4).

use alloc::vec;
use alloc::vec::Vec;

use super::{F4Poly, FieldError, F4};

/// Largest supported `m`; elements are held in a `u128` with one spare bit for reduction.
pub const MAX_EXT_M: u32 = 63;

/// Budget on trial divisions while factoring `2^(2m) - 1`.
const FACTOR_BUDGET: u64 = 200_000_000;

fn f2_deg(a: u128) -> i32 {
    127 - a.leading_zeros() as i32
}

fn f2_rem(mut a: u128, b: u128) -> u128 {
    let db = f2_deg(b);
    while f2_deg(a) >= db {
        a ^= b << (f2_deg(a) - db);
    }
    a
}

fn f2_gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let r = f2_rem(a, b);
        a = b;
        b = r;
    }
    a
}

/// `a·b mod f` for a modulus of degree `d`, operands below `2^d`.
fn mulmod(mut a: u128, mut b: u128, f: u128, d: u32) -> u128 {
    let top = 1u128 << d;
    let mut acc = 0;
    while b != 0 {
        if b & 1 == 1 {
            acc ^= a;
        }
        b >>= 1;
        a <<= 1;
        if a & top != 0 {
            a ^= f;
        }
    }
    acc
}

fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Rabin's test: `f` of degree `d` is irreducible iff `x^(2^d) ≡ x` and
/// `gcd(x^(2^(d/p)) - x, f) = 1` for every prime `p | d`.
pub fn is_irreducible_f2(f: u128) -> bool {
    let d = f2_deg(f);
    if d <= 0 {
        return false;
    }
    let d = d as u32;
    if d == 1 {
        return true;
    }
    let frob = |k: u32| {
        let mut y = 2u128;
        for _ in 0..k {
            y = mulmod(y, y, f, d);
        }
        y
    };
    if frob(d) != 2 {
        return false;
    }
    prime_divisors(d as u64)
        .into_iter()
        .all(|p| f2_gcd(f, frob(d / p as u32) ^ 2) == 1)
}

fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// Distinct prime factors of `2^d - 1`, via trial division of each cyclotomic value
/// `Φ_e(2)`, whose prime factors are `≡ 1 (mod lcm(e, 2))` or divide `e`.
fn mersenne_prime_factors(d: u32) -> Result<Vec<u128>, FieldError> {
    let mut phis: Vec<(u32, u128)> = Vec::new();
    for e in divisors(d) {
        let mut v = (1u128 << e) - 1;
        for &(f, pf) in &phis {
            if e % f == 0 {
                v /= pf;
            }
        }
        phis.push((e, v));
    }
    let mut primes: Vec<u128> = Vec::new();
    let mut budget = FACTOR_BUDGET;
    for &(e, phi) in &phis {
        let mut rem = phi;
        for p in prime_divisors(e as u64) {
            let p = p as u128;
            while rem % p == 0 {
                primes.push(p);
                rem /= p;
            }
        }
        let step = if e % 2 == 0 { e as u128 } else { 2 * e as u128 };
        let mut p = step + 1;
        while p * p <= rem {
            if rem % p == 0 {
                primes.push(p);
                while rem % p == 0 {
                    rem /= p;
                }
            }
            p += step;
            budget = budget.checked_sub(1).ok_or(FieldError::FactorBudget(d))?;
        }
        if rem > 1 {
            primes.push(rem);
        }
    }
    primes.sort_unstable();
    primes.dedup();
    Ok(primes)
}

/// Multiplicative order of 4 modulo an odd `n` (1 for `n = 1`).
pub fn ord4(n: usize) -> usize {
    assert!(n % 2 == 1, "ord4 needs odd n");
    if n == 1 {
        return 1;
    }
    let mut x = 4 % n;
    let mut k = 1;
    while x != 1 {
        x = x * 4 % n;
        k += 1;
    }
    k
}

/// GF(2^(2m)) as F2[x]/(modulus), with a primitive element and the embedded GF(4).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtField {
    m: u32,
    modulus: u128,
    omega: u128,
    primitive: u128,
    order_primes: Vec<u128>,
}

impl ExtField {
    /// Builds GF(4^m) with the smallest irreducible modulus of degree `2m`
    /// (by integer encoding) and the smallest primitive element.
    pub fn new(m: u32) -> Result<ExtField, FieldError> {
        if m == 0 || m > MAX_EXT_M {
            return Err(FieldError::ExtDegree(m));
        }
        let d = 2 * m;
        let top = 1u128 << d;
        let modulus = (0..top)
            .step_by(2)
            .map(|low| top | low | 1)
            .find(|&f| is_irreducible_f2(f))
            .ok_or(FieldError::NoModulus(m))?;
        let order_primes = mersenne_prime_factors(d)?;
        let mut field = ExtField {
            m,
            modulus,
            omega: 0,
            primitive: 0,
            order_primes,
        };
        let q1 = field.order_minus_one();
        field.primitive = (2..top)
            .find(|&g| {
                field
                    .order_primes
                    .iter()
                    .all(|&p| field.pow(g, q1 / p) != 1)
            })
            .ok_or(FieldError::NoModulus(m))?;
        field.omega = field.pow(field.primitive, q1 / 3);
        let w = field.omega;
        if field.add(field.add(field.mul(w, w), w), 1) != 0 {
            return Err(FieldError::Embedding);
        }
        Ok(field)
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// Degree over GF(2).
    pub fn degree(&self) -> u32 {
        2 * self.m
    }

    pub fn modulus(&self) -> u128 {
        self.modulus
    }

    pub fn omega(&self) -> u128 {
        self.omega
    }

    pub fn primitive(&self) -> u128 {
        self.primitive
    }

    /// `|GF(4^m)*| = 4^m - 1`.
    pub fn order_minus_one(&self) -> u128 {
        (1u128 << self.degree()) - 1
    }

    pub fn add(&self, x: u128, y: u128) -> u128 {
        x ^ y
    }

    pub fn mul(&self, x: u128, y: u128) -> u128 {
        mulmod(x, y, self.modulus, self.degree())
    }

    pub fn pow(&self, mut x: u128, mut e: u128) -> u128 {
        let mut acc = 1;
        while e != 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, x);
            }
            x = self.mul(x, x);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, x: u128) -> Option<u128> {
        (x != 0).then(|| self.pow(x, self.order_minus_one() - 1))
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, x: u128) -> Option<u128> {
        if x == 0 || x >> self.degree() != 0 {
            return None;
        }
        let mut ord = self.order_minus_one();
        for &p in &self.order_primes {
            while ord.is_multiple_of(p) && self.pow(x, ord / p) == 1 {
                ord /= p;
            }
        }
        Some(ord)
    }

    pub fn from_f4(&self, s: F4) -> u128 {
        (s.a() as u128) ^ if s.b() { self.omega } else { 0 }
    }

    pub fn to_f4(&self, x: u128) -> Option<F4> {
        F4::ALL.into_iter().find(|&s| self.from_f4(s) == x)
    }

    /// A primitive `n`-th root of unity, `g^((q-1)/n)` for the stored primitive `g`.
    pub fn root_of_unity(&self, n: usize) -> Result<u128, FieldError> {
        let q1 = self.order_minus_one();
        if n == 0 || !q1.is_multiple_of(n as u128) {
            return Err(FieldError::NoRootOfUnity { n, m: self.m });
        }
        Ok(self.pow(self.primitive, q1 / n as u128))
    }

    /// Evaluates a GF(4) polynomial at an extension element.
    pub fn eval(&self, f: &F4Poly, x: u128) -> u128 {
        f.coeffs()
            .iter()
            .rev()
            .fold(0, |acc, &c| self.mul(acc, x) ^ self.from_f4(c))
    }

    /// `Π (x - r)` over the given roots, mapped back into GF(4).
    pub fn poly_from_roots(&self, roots: &[u128]) -> Result<F4Poly, FieldError> {
        let mut c: Vec<u128> = vec![1];
        for &r in roots {
            let mut next = vec![0u128; c.len() + 1];
            for (i, &ci) in c.iter().enumerate() {
                next[i + 1] ^= ci;
                next[i] ^= self.mul(ci, r);
            }
            c = next;
        }
        let coeffs = c
            .into_iter()
            .map(|x| self.to_f4(x).ok_or(FieldError::NotInSubfield))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(F4Poly::from_coeffs(coeffs))
    }

    /// The orbit `{β, β^4, β^16, …}`.
    pub fn conjugates(&self, beta: u128) -> Vec<u128> {
        let mut orbit = vec![beta];
        let mut y = self.pow(beta, 4);
        while y != beta {
            orbit.push(y);
            y = self.pow(y, 4);
        }
        orbit
    }

    /// Monic minimal polynomial of `β` over GF(4).
    pub fn minimal_polynomial(&self, beta: u128) -> Result<F4Poly, FieldError> {
        self.poly_from_roots(&self.conjugates(beta))
    }
}

pub fn ext_field(m: u32) -> Result<ExtField, FieldError> {
    ExtField::new(m)
}

pub fn minimal_polynomial(field: &ExtField, beta: u128) -> Result<F4Poly, FieldError> {
    field.minimal_polynomial(beta)
}
