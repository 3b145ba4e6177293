use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use super::{
    deletion_pair, from_nested_additive, AqeccError, AqeccParams, Construction, Provenance,
};
use crate::codes::{AdditiveCode, RowSelection};
use crate::constructions::{cyclic_code, Factorization};
use crate::spectrum::{spectra, Budget, SpectrumError};

/// Largest divisor lattice the cyclic search will walk.
pub const MAX_DIVISORS: u128 = 1 << 20;

fn dominates(a: &AqeccParams, b: &AqeccParams) -> bool {
    let (x, y) = (a.triple(), b.triple());
    x.0 >= y.0 && x.1 >= y.1 && x.2 >= y.2 && x != y
}

fn rank_key(p: &AqeccParams) -> (core::cmp::Reverse<(usize, usize, usize)>, &Provenance) {
    (core::cmp::Reverse(p.triple()), &p.provenance)
}

/// Nondominated results under `(log2_k, dz, dx)`, one per distinct triple
/// (the smallest provenance wins), sorted by `k`, `dz`, `dx` descending.
pub fn pareto_front(results: &[AqeccParams]) -> Vec<AqeccParams> {
    let mut best: BTreeMap<(usize, usize, usize), &AqeccParams> = BTreeMap::new();
    for p in results {
        best.entry(p.triple())
            .and_modify(|q| {
                if p.provenance < q.provenance {
                    *q = p;
                }
            })
            .or_insert(p);
    }
    let unique: Vec<&AqeccParams> = best.into_values().collect();
    let mut front: Vec<AqeccParams> = unique
        .iter()
        .filter(|p| !unique.iter().any(|q| dominates(q, p)))
        .map(|p| (*p).clone())
        .collect();
    front.sort_by(|a, b| rank_key(a).cmp(&rank_key(b)));
    front
}

/// Outcome of a cyclic pair search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicSearch {
    pub n: usize,
    /// Pareto front, ranked.
    pub results: Vec<AqeccParams>,
    /// Pairs whose parameters were computed.
    pub evaluated: usize,
    /// Pairs skipped because a distance exceeded the enumeration cap.
    pub skipped: usize,
}

impl CyclicSearch {
    pub fn partial(&self) -> bool {
        self.skipped > 0
    }
}

struct DivisorInfo {
    k: usize,
    /// `d(C)`, absent for the zero code or when infeasible.
    d: Option<usize>,
    /// `d(C^⊥H)`, absent when infeasible.
    dd: Option<usize>,
}

/// Every pair of cyclic codes `C ⊊ D` of length `n`, evaluated with the nested
/// cyclic construction, reduced to its Pareto front.
pub fn search_cyclic_pairs(n: usize, budget: &Budget) -> Result<CyclicSearch, AqeccError> {
    let f = Factorization::new(n)?;
    let r = f.factors().len();
    if r >= 128 || (1u128 << r) > MAX_DIVISORS {
        return Err(AqeccError::LatticeTooLarge {
            divisors: if r >= 128 { u128::MAX } else { 1u128 << r },
        });
    }
    let full = (1usize << r) - 1;
    let mut info = Vec::with_capacity(1 << r);
    let mut gens = Vec::with_capacity(1 << r);
    for mask in 0..=full {
        let which: Vec<usize> = (0..r).filter(|j| mask >> j & 1 == 1).collect();
        let g = f.product(&which);
        let c = cyclic_code(n, &g)?;
        let (d, dd) = match spectra(&c.code().additive_view(), budget) {
            Ok(s) => (s.primal.min_weight(), s.dual.min_weight()),
            Err(SpectrumError::TooLarge { .. }) => (None, None),
            Err(e) => return Err(e.into()),
        };
        info.push(DivisorInfo { k: c.k(), d, dd });
        gens.push(g);
    }
    let mut all = Vec::new();
    let mut skipped = 0;
    for mc in 1..=full {
        // proper subsets of the factor set of g_C give the strictly larger codes D
        let mut md = mc;
        loop {
            md = (md - 1) & mc;
            let (ci, di) = (&info[mc], &info[md]);
            match (ci.dd, di.d) {
                (Some(d1), Some(d2)) => all.push(AqeccParams::new(
                    n,
                    2 * (di.k - ci.k),
                    d1,
                    d2,
                    None,
                    Provenance::new(
                        Construction::NestedCyclic,
                        format!("g=({})", gens[mc]),
                        format!("g=({})", gens[md]),
                    ),
                )),
                _ => skipped += 1,
            }
            if md == 0 {
                break;
            }
        }
    }
    Ok(CyclicSearch {
        n,
        evaluated: all.len(),
        results: pareto_front(&all),
        skipped,
    })
}

/// Outcome of deleting the last rows of a self-dual generator matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeletionSearch {
    /// `(del, params)` for every feasible deletion count.
    pub results: Vec<(usize, AqeccParams)>,
    /// Deletion counts whose distances exceeded the cap.
    pub infeasible: Vec<usize>,
}

/// For `del = 1..=max_del`, pairs the code with its subcode spanned by all but the last `del` rows.
pub fn search_row_deletions(
    c: &AdditiveCode,
    max_del: usize,
    budget: &Budget,
) -> Result<DeletionSearch, AqeccError> {
    if !c.is_self_dual() {
        return Err(AqeccError::NotSelfDual);
    }
    let mut out = DeletionSearch {
        results: Vec::new(),
        infeasible: Vec::new(),
    };
    for del in 1..=max_del.min(c.generators().len()) {
        let mut pair = deletion_pair(c, &RowSelection::Last(del))?;
        pair.inner = pair
            .inner
            .clone()
            .with_provenance(format!("{} del={del}", c.provenance()));
        match from_nested_additive(&pair, budget) {
            Ok(p) => out.results.push((del, p)),
            Err(AqeccError::Spectrum(SpectrumError::TooLarge { .. })) => out.infeasible.push(del),
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}
