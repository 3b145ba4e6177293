//! Weight spectra, MacWilliams transforms, distances and classical bounds.

mod bounds;
mod enumerate;
mod macwilliams;
mod oa;

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

pub use bounds::{extremal_selfdual_bound, griesmer_check, BoundStatus, GriesmerCheck};
pub use enumerate::{for_each_codeword_weight, weight_enumerator};
pub use macwilliams::macwilliams_transform;
pub use oa::oa_strength;

use crate::codes::{AdditiveCode, CodeError, SelfDualType};

/// Largest `log2 |C|` that may be enumerated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_log2: usize,
}

impl Budget {
    pub const DEFAULT_LOG2: usize = 26;
    /// Hard ceiling imposed by 64-bit Gray-code indices.
    pub const CEILING_LOG2: usize = 62;

    pub fn new(max_log2: usize) -> Budget {
        Budget {
            max_log2: max_log2.min(Budget::CEILING_LOG2),
        }
    }

    pub fn allows(&self, log2: usize) -> bool {
        log2 <= self.max_log2
    }

    pub fn require(&self, log2: usize) -> Result<(), SpectrumError> {
        if self.allows(log2) {
            Ok(())
        } else {
            Err(SpectrumError::TooLarge {
                log2,
                cap: self.max_log2,
            })
        }
    }
}

impl Default for Budget {
    fn default() -> Budget {
        Budget::new(Budget::DEFAULT_LOG2)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpectrumError {
    /// `2^log2` codewords exceed the enumeration cap.
    TooLarge {
        log2: usize,
        cap: usize,
    },
    /// The coefficient vector is not the spectrum of any code of the stated size.
    InvalidSpectrum,
    /// The code has no nonzero codeword.
    NoNonzeroWord,
    NotSubcode,
    EmptyDifference,
    ScanTooLarge,
    Code(CodeError),
}

impl fmt::Display for SpectrumError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpectrumError::TooLarge { log2, cap } => {
                write!(
                    f,
                    "too large to enumerate: 2^{log2} codewords exceeds the cap 2^{cap}"
                )
            }
            SpectrumError::InvalidSpectrum => write!(f, "not a genuine code spectrum"),
            SpectrumError::NoNonzeroWord => write!(f, "code has no nonzero codeword"),
            SpectrumError::NotSubcode => write!(f, "second code is not a subcode of the first"),
            SpectrumError::EmptyDifference => write!(f, "set difference of the codes is empty"),
            SpectrumError::ScanTooLarge => write!(f, "orthogonal-array scan too large"),
            SpectrumError::Code(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for SpectrumError {}

impl From<CodeError> for SpectrumError {
    fn from(e: CodeError) -> Self {
        SpectrumError::Code(e)
    }
}

/// Exact counts `A_0..A_n` for a code of size `2^log2_size`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightEnumerator {
    n: usize,
    log2_size: usize,
    coeffs: Vec<BigUint>,
}

impl WeightEnumerator {
    /// Checks length, `A_0 = 1` and `Σ A_i = 2^log2_size`.
    pub fn from_counts(
        n: usize,
        log2_size: usize,
        coeffs: Vec<BigUint>,
    ) -> Result<WeightEnumerator, SpectrumError> {
        if coeffs.len() != n + 1 || !coeffs[0].is_one() {
            return Err(SpectrumError::InvalidSpectrum);
        }
        let total: BigUint = coeffs.iter().sum();
        if total != BigUint::one() << log2_size {
            return Err(SpectrumError::InvalidSpectrum);
        }
        Ok(WeightEnumerator {
            n,
            log2_size,
            coeffs,
        })
    }

    pub(crate) fn from_parts(n: usize, log2_size: usize, coeffs: Vec<BigUint>) -> WeightEnumerator {
        WeightEnumerator {
            n,
            log2_size,
            coeffs,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn log2_size(&self) -> usize {
        self.log2_size
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    pub fn count(&self, i: usize) -> &BigUint {
        &self.coeffs[i]
    }

    /// `(weight, count)` for every nonzero coefficient.
    pub fn support(&self) -> Vec<(usize, BigUint)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i, c.clone()))
            .collect()
    }

    /// Smallest positive weight present.
    pub fn min_weight(&self) -> Option<usize> {
        (1..=self.n).find(|&i| !self.coeffs[i].is_zero())
    }

    pub fn all_even(&self) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(i, c)| i % 2 == 0 || c.is_zero())
    }
}

/// Spectra of a code and of its trace dual.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spectra {
    pub primal: WeightEnumerator,
    pub dual: WeightEnumerator,
}

/// Enumerates whichever of `C`, `C^⊥tr` is smaller and transforms to the other.
pub fn spectra(c: &AdditiveCode, budget: &Budget) -> Result<Spectra, SpectrumError> {
    let l = c.dimension();
    let ld = 2 * c.n() - l;
    if l <= ld {
        budget.require(l)?;
        let primal = weight_enumerator(c, budget)?;
        let dual = macwilliams_transform(&primal)?;
        Ok(Spectra { primal, dual })
    } else {
        budget.require(ld)?;
        let dual = weight_enumerator(&c.trace_dual(), budget)?;
        let primal = macwilliams_transform(&dual)?;
        Ok(Spectra { primal, dual })
    }
}

pub fn min_distance(c: &AdditiveCode, budget: &Budget) -> Result<usize, SpectrumError> {
    spectra(c, budget)?
        .primal
        .min_weight()
        .ok_or(SpectrumError::NoNonzeroWord)
}

/// `d(C^⊥tr)`.
pub fn dual_distance(c: &AdditiveCode, budget: &Budget) -> Result<usize, SpectrumError> {
    spectra(c, budget)?
        .dual
        .min_weight()
        .ok_or(SpectrumError::NoNonzeroWord)
}

/// Type of a self-dual code from its spectrum.
pub fn classify_by_spectrum(
    c: &AdditiveCode,
    budget: &Budget,
) -> Result<SelfDualType, SpectrumError> {
    if !c.is_self_dual() {
        return Err(CodeError::NotSelfDual.into());
    }
    Ok(if spectra(c, budget)?.primal.all_even() {
        SelfDualType::TypeII
    } else {
        SelfDualType::TypeI
    })
}

/// `min { wt(c) : c ∈ C \ D }` for a subcode `D ⊆ C`.
pub fn wt_diff(
    c: &AdditiveCode,
    d: &AdditiveCode,
    budget: &Budget,
) -> Result<usize, SpectrumError> {
    if !d.is_subcode_of(c)? {
        return Err(SpectrumError::NotSubcode);
    }
    if d.dimension() == c.dimension() {
        return Err(SpectrumError::EmptyDifference);
    }
    budget.require(c.dimension())?;
    // Basis of C whose first l_D rows span D; a word lies outside D iff its
    // Gray index has a set bit at position ≥ l_D.
    let mut rows: Vec<_> = d.basis().to_vec();
    let mut span = d.clone();
    for b in c.basis() {
        if !span.contains(b)? {
            rows.push(b.clone());
            span = AdditiveCode::from_generators(c.n(), rows.clone())?;
        }
    }
    let ld = d.dimension();
    let mut best = u32::MAX;
    enumerate::gray_walk(c.n(), &rows, |g, w| {
        if g >> ld != 0 && w < best {
            best = w;
        }
    });
    Ok(best as usize)
}

#[cfg(test)]
mod tests;
