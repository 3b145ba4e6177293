//! Asymmetric quantum code parameters from nested classical codes.

mod params;
mod search;

use alloc::format;
use alloc::string::String;
use core::fmt;

pub use params::{singleton_check, AqeccParams, Construction, Provenance, SingletonStatus};
pub use search::{
    pareto_front, search_cyclic_pairs, search_row_deletions, CyclicSearch, DeletionSearch,
    MAX_DIVISORS,
};

use crate::codes::{AdditiveCode, CodeError, LinearCode, RowSelection};
use crate::constructions::{ConstructionError, CyclicCode};
use crate::fields::F4Vec;
use crate::spectrum::{dual_distance, min_distance, spectra, wt_diff, Budget, SpectrumError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AqeccError {
    /// A generator of the inner code lies outside the outer code.
    NotNested {
        witness: F4Vec,
    },
    NotSelfDual,
    NotSelfOrthogonal,
    /// The pairwise Hermitian test disagreed with the even-weight test.
    OrthogonalityCrossCheck,
    NotCyclicNested,
    LatticeTooLarge {
        divisors: u128,
    },
    Spectrum(SpectrumError),
    Code(CodeError),
    Construction(ConstructionError),
}

impl fmt::Display for AqeccError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AqeccError::NotNested { witness } => {
                write!(
                    f,
                    "inner code is not contained in outer code: row ({witness}) is not in outer"
                )
            }
            AqeccError::NotSelfDual => write!(f, "code is not trace self-dual"),
            AqeccError::NotSelfOrthogonal => write!(f, "code is not Hermitian self-orthogonal"),
            AqeccError::OrthogonalityCrossCheck => {
                write!(
                    f,
                    "Hermitian self-orthogonality disagrees with the even-weight test"
                )
            }
            AqeccError::NotCyclicNested => write!(
                f,
                "generator of the larger code does not divide that of the smaller"
            ),
            AqeccError::LatticeTooLarge { divisors } => {
                write!(
                    f,
                    "divisor lattice has {divisors} elements, above the limit {MAX_DIVISORS}"
                )
            }
            AqeccError::Spectrum(e) => write!(f, "{e}"),
            AqeccError::Code(e) => write!(f, "{e}"),
            AqeccError::Construction(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for AqeccError {}

impl From<SpectrumError> for AqeccError {
    fn from(e: SpectrumError) -> Self {
        AqeccError::Spectrum(e)
    }
}

impl From<CodeError> for AqeccError {
    fn from(e: CodeError) -> Self {
        AqeccError::Code(e)
    }
}

impl From<ConstructionError> for AqeccError {
    fn from(e: ConstructionError) -> Self {
        AqeccError::Construction(e)
    }
}

/// An additive pair `inner ⊆ outer`; `inner` plays the dual of the first code
/// and `outer` the second code of the nested construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NestedPair {
    inner: AdditiveCode,
    outer: AdditiveCode,
}

impl NestedPair {
    pub fn new(inner: AdditiveCode, outer: AdditiveCode) -> Result<NestedPair, AqeccError> {
        if let Some(witness) = inner.witness_outside(&outer)? {
            return Err(AqeccError::NotNested { witness });
        }
        Ok(NestedPair { inner, outer })
    }

    pub fn inner(&self) -> &AdditiveCode {
        &self.inner
    }

    pub fn outer(&self) -> &AdditiveCode {
        &self.outer
    }

    pub fn verified(&self) -> bool {
        true
    }

    pub fn log2_k(&self) -> usize {
        self.outer.dimension() - self.inner.dimension()
    }
}

fn label(c: &AdditiveCode) -> String {
    if c.provenance().is_empty() {
        format!("additive n={} l={}", c.n(), c.dimension())
    } else {
        String::from(c.provenance())
    }
}

/// `K = |outer| / |inner|`, `{dz, dx} = {d(inner^⊥tr), d(outer)}`.
pub fn from_nested_additive(pair: &NestedPair, budget: &Budget) -> Result<AqeccParams, AqeccError> {
    let d1 = dual_distance(&pair.inner, budget)?;
    let d2 = min_distance(&pair.outer, budget)?;
    Ok(AqeccParams::new(
        pair.outer.n(),
        pair.log2_k(),
        d1,
        d2,
        None,
        Provenance::new(
            Construction::NestedAdditive,
            label(&pair.inner),
            label(&pair.outer),
        ),
    ))
}

/// Exact set-difference distances `(wt(inner^⊥ \ outer^⊥), wt(outer \ inner))`, normalized.
pub fn refined_distances(pair: &NestedPair, budget: &Budget) -> Result<(usize, usize), AqeccError> {
    let dx = wt_diff(&pair.outer, &pair.inner, budget)?;
    let dz = wt_diff(&pair.inner.trace_dual(), &pair.outer.trace_dual(), budget)?;
    Ok((dz.max(dx), dz.min(dx)))
}

/// Parameters of a nested pair using the refined distances.
pub fn from_nested_additive_refined(
    pair: &NestedPair,
    budget: &Budget,
) -> Result<AqeccParams, AqeccError> {
    let (dz, dx) = refined_distances(pair, budget)?;
    Ok(AqeccParams::new(
        pair.outer.n(),
        pair.log2_k(),
        dz,
        dx,
        None,
        Provenance::new(
            Construction::NestedAdditiveRefined,
            label(&pair.inner),
            label(&pair.outer),
        ),
    ))
}

/// `[[n, 0, d/d]]` from a trace self-dual code.
pub fn from_selfdual(c: &AdditiveCode, budget: &Budget) -> Result<AqeccParams, AqeccError> {
    if !c.is_self_dual() {
        return Err(AqeccError::NotSelfDual);
    }
    let d = min_distance(c, budget)?;
    Ok(AqeccParams::new(
        c.n(),
        0,
        d,
        d,
        None,
        Provenance::new(Construction::SelfDual, label(c), label(c)),
    ))
}

/// `[[n, n - 2k, d⊥/d⊥]]` from a Hermitian self-orthogonal `[n, k]` code.
pub fn from_self_orthogonal_linear(
    c: &LinearCode,
    budget: &Budget,
) -> Result<AqeccParams, AqeccError> {
    let pairwise = c.is_hermitian_self_orthogonal();
    let view = c.additive_view();
    if budget.allows(view.dimension()) {
        let even = spectra(&view, budget)?.primal.all_even();
        if even != pairwise {
            return Err(AqeccError::OrthogonalityCrossCheck);
        }
    }
    if !pairwise {
        return Err(AqeccError::NotSelfOrthogonal);
    }
    let d = dual_distance(&view, budget)?;
    let log2_k = 2 * (c.n() - 2 * c.k());
    let name = if c.provenance().is_empty() {
        format!("linear n={} k={}", c.n(), c.k())
    } else {
        String::from(c.provenance())
    };
    Ok(AqeccParams::new(
        c.n(),
        log2_k,
        d,
        d,
        None,
        Provenance::new(Construction::SelfOrthogonalLinear, name.clone(), name),
    ))
}

/// Cyclic `C ⊆ D`: `[[n, k_D - k_C, dz/dx]]` with `{dz, dx} = {d(C^⊥H), d(D)}`.
pub fn from_nested_cyclic(
    c: &CyclicCode,
    d: &CyclicCode,
    budget: &Budget,
) -> Result<AqeccParams, AqeccError> {
    if !c.is_subcode_of(d) {
        return Err(AqeccError::NotCyclicNested);
    }
    let d1 = dual_distance(&c.code().additive_view(), budget)?;
    let d2 = min_distance(&d.code().additive_view(), budget)?;
    Ok(AqeccParams::new(
        c.n(),
        2 * (d.k() - c.k()),
        d1,
        d2,
        None,
        Provenance::new(
            Construction::NestedCyclic,
            format!("g=({})", c.generator()),
            format!("g=({})", d.generator()),
        ),
    ))
}

/// Which duality the CSS-type construction uses.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum DualKind {
    #[default]
    Hermitian,
    Euclidean,
}

fn linear_dual(c: &LinearCode, kind: DualKind) -> Result<LinearCode, AqeccError> {
    Ok(match kind {
        DualKind::Hermitian => c.hermitian_dual()?,
        DualKind::Euclidean => c.euclidean_dual(),
    })
}

/// CSS-type pair with `dual(Cx) ⊆ Cz`: `[[n, kx + kz - n]]`,
/// `dx = wt(Cx \ dual(Cz))`, `dz = wt(Cz \ dual(Cx))`.
pub fn css_linear(
    cx: &LinearCode,
    cz: &LinearCode,
    kind: DualKind,
    budget: &Budget,
) -> Result<AqeccParams, AqeccError> {
    let dual_x = linear_dual(cx, kind)?;
    let dual_z = linear_dual(cz, kind)?;
    let (ax, az) = (cx.additive_view(), cz.additive_view());
    let (adx, adz) = (dual_x.additive_view(), dual_z.additive_view());
    if let Some(witness) = adx.witness_outside(&az)? {
        return Err(AqeccError::NotNested { witness });
    }
    let dx = wt_diff(&ax, &adz, budget)?;
    let dz = wt_diff(&az, &adx, budget)?;
    let pure = dx == min_distance(&ax, budget)? && dz == min_distance(&az, budget)?;
    let k = cx.k() + cz.k() - cx.n();
    let name = |c: &LinearCode| {
        if c.provenance().is_empty() {
            format!("linear n={} k={}", c.n(), c.k())
        } else {
            String::from(c.provenance())
        }
    };
    Ok(AqeccParams::new(
        cx.n(),
        2 * k,
        dz,
        dx,
        Some(pure),
        Provenance::new(Construction::CssLinear, name(cx), name(cz)),
    ))
}

/// Nested pair obtained by deleting generator rows of `c`.
pub fn deletion_pair(c: &AdditiveCode, sel: &RowSelection) -> Result<NestedPair, AqeccError> {
    let d = c.delete_rows(sel)?;
    NestedPair::new(d, c.clone())
}
