//! The four-element field.

use core::fmt;
use core::ops::{Add, AddAssign, Mul, MulAssign};
use core::str::FromStr;

use super::FieldError;

/// An element `a + b·ω` of GF(4), stored as the bit pair `(b << 1) | a`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct F4(u8);

const MUL: [[u8; 4]; 4] = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]];

impl F4 {
    pub const ZERO: F4 = F4(0);
    pub const ONE: F4 = F4(1);
    /// ω, a root of x² + x + 1.
    pub const W: F4 = F4(2);
    /// ω̄ = ω² = ω + 1.
    pub const WBAR: F4 = F4(3);
    pub const ALL: [F4; 4] = [F4::ZERO, F4::ONE, F4::W, F4::WBAR];

    pub const fn from_bits(a: bool, b: bool) -> F4 {
        F4((a as u8) | ((b as u8) << 1))
    }

    pub const fn from_index(i: u8) -> F4 {
        F4(i & 3)
    }

    pub const fn index(self) -> u8 {
        self.0
    }

    /// Coefficient of 1.
    pub const fn a(self) -> bool {
        self.0 & 1 != 0
    }

    /// Coefficient of ω.
    pub const fn b(self) -> bool {
        self.0 & 2 != 0
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Frobenius conjugate `x²`.
    pub const fn conj(self) -> F4 {
        let a = self.0 & 1;
        let b = (self.0 >> 1) & 1;
        F4((a ^ b) | (b << 1))
    }

    /// Absolute trace `x + x²` as a bit.
    pub const fn trace(self) -> bool {
        self.b()
    }

    pub const fn inv(self) -> Option<F4> {
        match self.0 {
            0 => None,
            1 => Some(F4::ONE),
            2 => Some(F4::WBAR),
            _ => Some(F4::W),
        }
    }

    pub const fn to_char(self) -> char {
        match self.0 {
            0 => '0',
            1 => '1',
            2 => 'w',
            _ => 'W',
        }
    }

    pub const fn from_char(c: char) -> Option<F4> {
        match c {
            '0' => Some(F4::ZERO),
            '1' => Some(F4::ONE),
            'w' => Some(F4::W),
            'W' => Some(F4::WBAR),
            _ => None,
        }
    }
}

pub fn f4_mul(x: F4, y: F4) -> F4 {
    F4(MUL[x.0 as usize][y.0 as usize])
}

pub fn f4_conj(x: F4) -> F4 {
    x.conj()
}

impl Add for F4 {
    type Output = F4;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: F4) -> F4 {
        F4(self.0 ^ rhs.0)
    }
}

impl AddAssign for F4 {
    #[allow(clippy::suspicious_op_assign_impl)]
    fn add_assign(&mut self, rhs: F4) {
        self.0 ^= rhs.0;
    }
}

impl Mul for F4 {
    type Output = F4;
    fn mul(self, rhs: F4) -> F4 {
        f4_mul(self, rhs)
    }
}

impl MulAssign for F4 {
    fn mul_assign(&mut self, rhs: F4) {
        *self = f4_mul(*self, rhs);
    }
}

impl fmt::Display for F4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

impl fmt::Debug for F4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

impl FromStr for F4 {
    type Err = FieldError;
    fn from_str(s: &str) -> Result<F4, FieldError> {
        let mut it = s.chars();
        match (it.next(), it.next()) {
            (Some(c), None) => F4::from_char(c).ok_or(FieldError::BadSymbol(c)),
            _ => Err(FieldError::BadToken),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // Multiplication from the defining relation ω² = ω + 1, independent of the table.
    fn mul_by_relation(x: F4, y: F4) -> F4 {
        let (a, b, c, d) = (x.a() as u8, x.b() as u8, y.a() as u8, y.b() as u8);
        // (a + bω)(c + dω) = ac + (ad + bc)ω + bd(ω + 1)
        let one = (a & c) ^ (b & d);
        let w = (a & d) ^ (b & c) ^ (b & d);
        F4::from_bits(one == 1, w == 1)
    }

    #[test]
    fn table_matches_relation() {
        for x in F4::ALL {
            for y in F4::ALL {
                assert_eq!(x * y, mul_by_relation(x, y));
                assert_eq!(x * y, y * x);
            }
        }
    }

    #[test]
    fn small_facts() {
        assert_eq!(F4::W * F4::W, F4::WBAR);
        assert_eq!(F4::W * F4::WBAR, F4::ONE);
        for x in F4::ALL {
            assert_eq!(F4::ONE * x, x);
            assert_eq!(x.conj(), x * x);
            assert_eq!(x.conj().conj(), x);
            let t = x + x * x;
            assert!(t == F4::ZERO || t == F4::ONE);
            assert_eq!(t == F4::ONE, x.trace());
            if let Some(i) = x.inv() {
                assert_eq!(x * i, F4::ONE);
            }
        }
        assert_eq!(f4_conj(F4::W), F4::WBAR);
        assert_eq!(F4::ZERO.conj(), F4::ZERO);
        assert_eq!(F4::ONE.conj(), F4::ONE);
    }

    #[test]
    fn associativity_and_distributivity() {
        for x in F4::ALL {
            for y in F4::ALL {
                for z in F4::ALL {
                    assert_eq!((x * y) * z, x * (y * z));
                    assert_eq!(x * (y + z), x * y + x * z);
                }
            }
        }
    }

    #[test]
    fn text_round_trip() {
        for x in F4::ALL {
            assert_eq!(F4::from_char(x.to_char()), Some(x));
            assert_eq!(x.to_char().to_string().parse::<F4>().unwrap(), x);
        }
        assert!("x".parse::<F4>().is_err());
        assert!("ww".parse::<F4>().is_err());
    }
}
