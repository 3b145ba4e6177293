//! Bit-packed vectors over GF(4).

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::{FieldError, F4};

/// A vector in GF(4)^n held as two bit-planes: `a` (coefficient of 1) and `b`
/// (coefficient of ω). Words `0..nw` are the a-plane, `nw..2nw` the b-plane.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct F4Vec {
    len: usize,
    words: Vec<u64>,
}

#[inline]
fn parity(x: u64) -> bool {
    x.count_ones() & 1 == 1
}

impl F4Vec {
    pub fn zeros(len: usize) -> F4Vec {
        F4Vec {
            len,
            words: vec![0; 2 * len.div_ceil(64)],
        }
    }

    pub fn from_symbols(symbols: &[F4]) -> F4Vec {
        let mut v = F4Vec::zeros(symbols.len());
        for (i, &s) in symbols.iter().enumerate() {
            v.set(i, s);
        }
        v
    }

    /// Builds a vector from its two planes given as little-endian words.
    pub fn from_planes(len: usize, a: &[u64], b: &[u64]) -> F4Vec {
        let mut v = F4Vec::zeros(len);
        let nw = v.plane_words();
        v.words[..nw].copy_from_slice(&a[..nw]);
        v.words[nw..].copy_from_slice(&b[..nw]);
        v.mask_tail();
        v
    }

    fn mask_tail(&mut self) {
        let nw = self.plane_words();
        let r = self.len % 64;
        if r != 0 {
            let m = (1u64 << r) - 1;
            self.words[nw - 1] &= m;
            self.words[2 * nw - 1] &= m;
        }
    }

    /// Truncates or pads with zeros to length `n`.
    pub fn resized(&self, n: usize) -> F4Vec {
        let mut out = F4Vec::zeros(n);
        for i in 0..n.min(self.len) {
            out.set(i, self.get(i));
        }
        out
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Number of 64-bit words per plane.
    pub fn plane_words(&self) -> usize {
        self.words.len() / 2
    }

    pub fn a_plane(&self) -> &[u64] {
        &self.words[..self.plane_words()]
    }

    pub fn b_plane(&self) -> &[u64] {
        &self.words[self.plane_words()..]
    }

    pub fn get(&self, i: usize) -> F4 {
        assert!(
            i < self.len,
            "index {i} out of range for length {}",
            self.len
        );
        let nw = self.plane_words();
        let (w, s) = (i / 64, i % 64);
        F4::from_bits(
            (self.words[w] >> s) & 1 != 0,
            (self.words[nw + w] >> s) & 1 != 0,
        )
    }

    pub fn set(&mut self, i: usize, x: F4) {
        assert!(
            i < self.len,
            "index {i} out of range for length {}",
            self.len
        );
        let nw = self.plane_words();
        let (w, s) = (i / 64, i % 64);
        let m = 1u64 << s;
        self.words[w] = (self.words[w] & !m) | ((x.a() as u64) << s);
        self.words[nw + w] = (self.words[nw + w] & !m) | ((x.b() as u64) << s);
    }

    pub fn symbols(&self) -> impl Iterator<Item = F4> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    pub fn to_symbols(&self) -> Vec<F4> {
        self.symbols().collect()
    }

    pub fn weight(&self) -> usize {
        let (a, b) = (self.a_plane(), self.b_plane());
        a.iter()
            .zip(b)
            .map(|(x, y)| (x | y).count_ones() as usize)
            .sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.len).filter(|&i| !self.get(i).is_zero()).collect()
    }

    /// `self += other`.
    pub fn add_assign(&mut self, other: &F4Vec) {
        assert_eq!(self.len, other.len, "length mismatch");
        for (x, y) in self.words.iter_mut().zip(&other.words) {
            *x ^= y;
        }
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, other: &F4Vec, c: F4) {
        match c.index() {
            0 => {}
            1 => self.add_assign(other),
            _ => self.add_assign(&other.scaled(c)),
        }
    }

    pub fn sum(&self, other: &F4Vec) -> F4Vec {
        let mut r = self.clone();
        r.add_assign(other);
        r
    }

    pub fn scaled(&self, c: F4) -> F4Vec {
        let nw = self.plane_words();
        let (a, b) = self.words.split_at(nw);
        let mut out = F4Vec::zeros(self.len);
        let (oa, ob) = out.words.split_at_mut(nw);
        for i in 0..nw {
            // (a + bω)·ω = b + (a + b)ω ; (a + bω)·ω̄ = (a + b) + aω
            let (x, y) = match c.index() {
                0 => (0, 0),
                1 => (a[i], b[i]),
                2 => (b[i], a[i] ^ b[i]),
                _ => (a[i] ^ b[i], a[i]),
            };
            oa[i] = x;
            ob[i] = y;
        }
        out
    }

    /// Coordinatewise Frobenius conjugate.
    pub fn conj(&self) -> F4Vec {
        let nw = self.plane_words();
        let mut out = self.clone();
        for i in 0..nw {
            out.words[i] ^= self.words[nw + i];
        }
        out
    }

    /// Cyclic shift to the right by one position (last symbol wraps to the front).
    pub fn rotate_right(&self) -> F4Vec {
        let mut out = F4Vec::zeros(self.len);
        if self.len == 0 {
            return out;
        }
        for i in 0..self.len {
            out.set((i + 1) % self.len, self.get(i));
        }
        out
    }

    /// Bit `j` of the interleaved F2 expansion `(a₁, b₁, a₂, b₂, …)`.
    pub fn f2_bit(&self, j: usize) -> bool {
        let s = self.get(j / 2);
        if j.is_multiple_of(2) {
            s.a()
        } else {
            s.b()
        }
    }

    /// Exchanges the two planes, mapping `a + bω` to `b + aω`.
    pub fn swap_planes(&self) -> F4Vec {
        let nw = self.plane_words();
        let mut out = self.clone();
        let (x, y) = out.words.split_at_mut(nw);
        x.swap_with_slice(y);
        out
    }

    fn check_len(&self, other: &F4Vec) -> Result<(), FieldError> {
        if self.len != other.len {
            Err(FieldError::LengthMismatch {
                left: self.len,
                right: other.len,
            })
        } else {
            Ok(())
        }
    }

    /// Trace-Hermitian form `Σ (u_i v_i² + u_i² v_i)`, evaluated as `Σ (a_i d_i + b_i c_i)`.
    pub fn trace_ip(&self, other: &F4Vec) -> Result<bool, FieldError> {
        self.check_len(other)?;
        Ok(self.trace_ip_unchecked(other))
    }

    #[inline]
    pub(crate) fn trace_ip_unchecked(&self, other: &F4Vec) -> bool {
        let (a, b) = (self.a_plane(), self.b_plane());
        let (c, d) = (other.a_plane(), other.b_plane());
        let mut acc = 0u64;
        for i in 0..a.len() {
            acc ^= (a[i] & d[i]) ^ (b[i] & c[i]);
        }
        parity(acc)
    }

    /// Hermitian form `Σ u_i v_i²`.
    pub fn hermitian_ip(&self, other: &F4Vec) -> Result<F4, FieldError> {
        self.check_len(other)?;
        let (a, b) = (self.a_plane(), self.b_plane());
        let (c, d) = (other.a_plane(), other.b_plane());
        let (mut one, mut w) = (0u64, 0u64);
        for i in 0..a.len() {
            // (a + bω)((c + d) + dω) = (ac + ad + bd) + (ad + bc)ω
            one ^= (a[i] & c[i]) ^ (a[i] & d[i]) ^ (b[i] & d[i]);
            w ^= (a[i] & d[i]) ^ (b[i] & c[i]);
        }
        Ok(F4::from_bits(parity(one), parity(w)))
    }

    /// Euclidean form `Σ u_i v_i`.
    pub fn euclidean_ip(&self, other: &F4Vec) -> Result<F4, FieldError> {
        self.check_len(other)?;
        let (a, b) = (self.a_plane(), self.b_plane());
        let (c, d) = (other.a_plane(), other.b_plane());
        let (mut one, mut w) = (0u64, 0u64);
        for i in 0..a.len() {
            one ^= (a[i] & c[i]) ^ (b[i] & d[i]);
            w ^= (a[i] & d[i]) ^ (b[i] & c[i]) ^ (b[i] & d[i]);
        }
        Ok(F4::from_bits(parity(one), parity(w)))
    }
}

pub fn trace_hermitian_ip(u: &F4Vec, v: &F4Vec) -> Result<bool, FieldError> {
    u.trace_ip(v)
}

pub fn hermitian_ip(u: &F4Vec, v: &F4Vec) -> Result<F4, FieldError> {
    u.hermitian_ip(v)
}

impl fmt::Display for F4Vec {
    /// Space-separated symbols, e.g. `W 1 w 0 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", self.get(i))?;
        }
        Ok(())
    }
}

impl fmt::Debug for F4Vec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for s in self.symbols() {
            write!(f, "{s}")?;
        }
        f.write_str("]")
    }
}

impl FromStr for F4Vec {
    type Err = FieldError;
    /// Accepts symbols separated by whitespace or commas, or packed without separators.
    fn from_str(s: &str) -> Result<F4Vec, FieldError> {
        let mut out = Vec::new();
        for c in s.chars() {
            if c.is_whitespace() || c == ',' {
                continue;
            }
            out.push(F4::from_char(c).ok_or(FieldError::BadSymbol(c))?);
        }
        Ok(F4Vec::from_symbols(&out))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn v(s: &str) -> F4Vec {
        s.parse().unwrap()
    }

    // Defining formula x·y² + x²·y evaluated with field operations only.
    fn tr_def(x: F4, y: F4) -> F4 {
        x * (y * y) + (x * x) * y
    }

    #[test]
    fn trace_closed_form_all_pairs() {
        for x in F4::ALL {
            for y in F4::ALL {
                let t = tr_def(x, y);
                assert!(t == F4::ZERO || t == F4::ONE);
                let closed = (x.a() & y.b()) ^ (x.b() & y.a());
                assert_eq!(t == F4::ONE, closed, "x={x} y={y}");
                let ux = F4Vec::from_symbols(&[x]);
                let uy = F4Vec::from_symbols(&[y]);
                assert_eq!(ux.trace_ip(&uy).unwrap(), t == F4::ONE);
                assert_eq!(ux.hermitian_ip(&uy).unwrap(), x * y.conj());
                assert_eq!(ux.euclidean_ip(&uy).unwrap(), x * y);
            }
        }
    }

    #[test]
    fn spot_values() {
        assert!(v("1").trace_ip(&v("w")).unwrap());
        assert!(v("w").trace_ip(&v("W")).unwrap());
        assert_eq!(v("11").hermitian_ip(&v("11")).unwrap(), F4::ZERO);
        assert_eq!(v("w").hermitian_ip(&v("w")).unwrap(), F4::ONE);
        assert_eq!(v("1wW0").hermitian_ip(&v("0001")).unwrap(), F4::ZERO);
        assert!(v("1w").trace_ip(&v("1")).is_err());
    }

    #[test]
    fn long_vectors_cross_word_boundary() {
        let n = 150;
        let mut u = F4Vec::zeros(n);
        let mut w = F4Vec::zeros(n);
        for i in 0..n {
            u.set(i, F4::from_index((i * 7 % 4) as u8));
            w.set(i, F4::from_index((i * 5 + 1) as u8 % 4));
        }
        let mut h = F4::ZERO;
        for i in 0..n {
            h += u.get(i) * w.get(i).conj();
        }
        assert_eq!(u.hermitian_ip(&w).unwrap(), h);
        assert_eq!(u.weight(), u.symbols().filter(|s| !s.is_zero()).count());
        assert_eq!(u.rotate_right().get(0), u.get(n - 1));
        assert_eq!(u.scaled(F4::W).get(3), u.get(3) * F4::W);
    }

    #[test]
    fn text_format() {
        let x = v("W 1 w 0 1");
        assert_eq!(x.len(), 5);
        assert_eq!(x.to_string(), "W 1 w 0 1");
        assert_eq!(v("W1w01"), x);
        assert!("1 2".parse::<F4Vec>().is_err());
    }

    fn arb_vec(n: usize) -> impl Strategy<Value = F4Vec> {
        proptest::collection::vec(0u8..4, n).prop_map(|s| {
            F4Vec::from_symbols(&s.into_iter().map(F4::from_index).collect::<Vec<_>>())
        })
    }

    proptest! {
        #[test]
        fn trace_bilinear_symmetric((u, v, w) in (1usize..200).prop_flat_map(|n| (arb_vec(n), arb_vec(n), arb_vec(n)))) {
            let lhs = u.sum(&v).trace_ip(&w).unwrap();
            let rhs = u.trace_ip(&w).unwrap() ^ v.trace_ip(&w).unwrap();
            prop_assert_eq!(lhs, rhs);
            prop_assert_eq!(u.trace_ip(&v).unwrap(), v.trace_ip(&u).unwrap());
            prop_assert!(!u.trace_ip(&u).unwrap());
        }

        #[test]
        fn hermitian_conjugate_symmetric((u, v) in (1usize..200).prop_flat_map(|n| (arb_vec(n), arb_vec(n)))) {
            prop_assert_eq!(u.hermitian_ip(&v).unwrap(), v.hermitian_ip(&u).unwrap().conj());
            // tr(⟨u,v⟩_H) = ⟨u,v⟩_tr
            prop_assert_eq!(u.hermitian_ip(&v).unwrap().trace(), u.trace_ip(&v).unwrap());
        }

        #[test]
        fn scaling_matches_symbolwise(u in (1usize..140).prop_flat_map(arb_vec), c in 0u8..4) {
            let c = F4::from_index(c);
            let s = u.scaled(c);
            for i in 0..u.len() {
                prop_assert_eq!(s.get(i), u.get(i) * c);
            }
            prop_assert_eq!(u.conj().conj(), u.clone());
        }
    }
}
