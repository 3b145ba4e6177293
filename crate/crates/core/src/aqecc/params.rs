use alloc::string::String;
use core::fmt;

/// Which construction produced a parameter set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Construction {
    NestedAdditive,
    NestedAdditiveRefined,
    SelfDual,
    SelfOrthogonalLinear,
    NestedCyclic,
    CssLinear,
}

impl Construction {
    pub fn as_str(self) -> &'static str {
        match self {
            Construction::NestedAdditive => "nested-additive",
            Construction::NestedAdditiveRefined => "nested-additive-refined",
            Construction::SelfDual => "self-dual",
            Construction::SelfOrthogonalLinear => "self-orthogonal-linear",
            Construction::NestedCyclic => "nested-cyclic",
            Construction::CssLinear => "css-linear",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Provenance {
    pub construction: Construction,
    pub inner: String,
    pub outer: String,
}

impl Provenance {
    pub fn new(construction: Construction, inner: String, outer: String) -> Provenance {
        Provenance {
            construction,
            inner,
            outer,
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} <= {}",
            self.construction.as_str(),
            self.inner,
            self.outer
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SingletonStatus {
    Meets,
    Satisfies,
    Violates,
}

impl SingletonStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            SingletonStatus::Meets => "meets",
            SingletonStatus::Satisfies => "satisfies",
            SingletonStatus::Violates => "violates",
        }
    }
}

/// `k ≤ n - dx - dz + 2`, compared in units of half a qudit.
pub fn singleton_check(n: usize, log2_k: usize, dz: usize, dx: usize) -> SingletonStatus {
    let rhs = 2 * (n as i64 - dx as i64 - dz as i64 + 2);
    match (log2_k as i64).cmp(&rhs) {
        core::cmp::Ordering::Equal => SingletonStatus::Meets,
        core::cmp::Ordering::Less => SingletonStatus::Satisfies,
        core::cmp::Ordering::Greater => SingletonStatus::Violates,
    }
}

/// `[[n, k, dz/dx]]` over GF(4) with `K = 2^log2_k` and `dz ≥ dx`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AqeccParams {
    pub n: usize,
    pub log2_k: usize,
    pub dz: usize,
    pub dx: usize,
    pub pure_hint: Option<bool>,
    pub singleton: SingletonStatus,
    pub provenance: Provenance,
}

impl AqeccParams {
    /// Orders the two distances so that `dz ≥ dx`.
    pub fn new(
        n: usize,
        log2_k: usize,
        d1: usize,
        d2: usize,
        pure_hint: Option<bool>,
        provenance: Provenance,
    ) -> AqeccParams {
        let (dz, dx) = (d1.max(d2), d1.min(d2));
        AqeccParams {
            n,
            log2_k,
            dz,
            dx,
            pure_hint,
            singleton: singleton_check(n, log2_k, dz, dx),
            provenance,
        }
    }

    /// `k = log2_k / 2` with one decimal when half-integral.
    pub fn k_display(&self) -> String {
        if self.log2_k.is_multiple_of(2) {
            alloc::format!("{}", self.log2_k / 2)
        } else {
            alloc::format!("{}.5", self.log2_k / 2)
        }
    }

    pub fn triple(&self) -> (usize, usize, usize) {
        (self.log2_k, self.dz, self.dx)
    }
}

impl fmt::Display for AqeccParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{},{},{}/{}]]",
            self.n,
            self.k_display(),
            self.dz,
            self.dx
        )
    }
}
