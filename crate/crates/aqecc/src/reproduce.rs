//! Regenerates fixture rows from their printed inputs and compares every field.

use std::collections::HashMap;
use std::fmt::{self, Display};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, Mutex, OnceLock};

use anyhow::{anyhow, Result};
use aqecc_core::aqecc::{
    from_nested_additive, from_nested_cyclic, from_self_orthogonal_linear, from_selfdual,
    AqeccError, AqeccParams, Construction, NestedPair, Provenance,
};
use aqecc_core::codes::{AdditiveCode, RowSelection, SelfDualType};
use aqecc_core::constructions::{bch_code, cyclic_code, CyclicCode, Factorization};
use aqecc_core::spectrum::{spectra, Budget, SpectrumError};
use serde::Serialize;

use crate::fixtures::{
    self, BchQeccRow, BchRow, CyclicRow, DeletionRow, ExampleRow, ExternalRow, QuantumParams,
    Route, TableId, Triple,
};
use crate::io::parse_poly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Status {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
    #[serde(rename = "INFEASIBLE")]
    Infeasible,
    #[serde(rename = "SKIPPED-EXTERNAL")]
    SkippedExternal,
    #[serde(rename = "FLAGGED")]
    Flagged,
}

impl Status {
    pub const ALL: [Status; 5] = [
        Status::Pass,
        Status::Fail,
        Status::Infeasible,
        Status::SkippedExternal,
        Status::Flagged,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Infeasible => "INFEASIBLE",
            Status::SkippedExternal => "SKIPPED-EXTERNAL",
            Status::Flagged => "FLAGGED",
        }
    }
}

impl Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One compared field. `computed` is a bound such as `>=5` when the exact
/// value was beyond the enumeration cap.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FieldCheck {
    pub field: String,
    pub expected: String,
    pub computed: String,
    pub ok: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RowReport {
    pub table: TableId,
    pub row: String,
    pub status: Status,
    pub expected: String,
    pub computed: String,
    pub checks: Vec<FieldCheck>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl RowReport {
    /// Fields that disagree.
    pub fn mismatches(&self) -> impl Iterator<Item = &FieldCheck> {
        self.checks.iter().filter(|c| c.ok == Some(false))
    }
}

/// A distance that is either exact or only bounded below.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dist {
    Exact(usize),
    AtLeast(usize),
}

impl Dist {
    fn exact(self) -> Option<usize> {
        match self {
            Dist::Exact(d) => Some(d),
            Dist::AtLeast(_) => None,
        }
    }
}

impl Display for Dist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dist::Exact(d) => write!(f, "{d}"),
            Dist::AtLeast(b) => write!(f, ">={b}"),
        }
    }
}

#[derive(Default)]
struct Checks {
    list: Vec<FieldCheck>,
    infeasible: bool,
    error: Option<String>,
}

impl Checks {
    fn eq<T: PartialEq + Display>(&mut self, field: &str, expected: T, computed: T) {
        self.list.push(FieldCheck {
            field: field.into(),
            expected: expected.to_string(),
            computed: computed.to_string(),
            ok: Some(expected == computed),
        });
    }

    /// A lower bound above the printed value is a proven mismatch; otherwise
    /// the field stays unchecked and the row infeasible.
    fn dist(&mut self, field: &str, expected: usize, computed: Dist) {
        let ok = match computed {
            Dist::Exact(d) => Some(d == expected),
            Dist::AtLeast(b) if b > expected => Some(false),
            Dist::AtLeast(_) => {
                self.infeasible = true;
                None
            }
        };
        self.list.push(FieldCheck {
            field: field.into(),
            expected: expected.to_string(),
            computed: computed.to_string(),
            ok,
        });
    }

    fn quantum(&mut self, expected: &QuantumParams, got: &AqeccParams) {
        self.eq("n", expected.n, got.n);
        self.eq("k", expected.k_display(), got.k_display());
        self.eq("dz", expected.dz, got.dz);
        self.eq("dx", expected.dx, got.dx);
    }

    fn status(&self) -> Status {
        if self.error.is_some() || self.list.iter().any(|c| c.ok == Some(false)) {
            Status::Fail
        } else if self.infeasible {
            Status::Infeasible
        } else {
            Status::Pass
        }
    }
}

fn report(
    table: TableId,
    row: impl Display,
    expected: impl Display,
    computed: String,
    checks: Checks,
) -> RowReport {
    let status = checks.status();
    RowReport {
        table,
        row: row.to_string(),
        status,
        expected: expected.to_string(),
        computed,
        checks: checks.list,
        note: checks.error,
    }
}

fn too_large(e: &AqeccError) -> bool {
    matches!(e, AqeccError::Spectrum(SpectrumError::TooLarge { .. }))
}

/// `(d(C), d(C^⊥tr))`, exact when the smaller side fits the budget.
fn distances(c: &AdditiveCode, budget: &Budget, bounds: (usize, usize)) -> Result<(Dist, Dist)> {
    match spectra(c, budget) {
        Ok(s) => {
            let d = s.primal.min_weight().map_or(Dist::Exact(0), Dist::Exact);
            let dd = s.dual.min_weight().map_or(Dist::Exact(0), Dist::Exact);
            Ok((d, dd))
        }
        Err(SpectrumError::TooLarge { .. }) => {
            Ok((Dist::AtLeast(bounds.0), Dist::AtLeast(bounds.1)))
        }
        Err(e) => Err(anyhow!("{e}")),
    }
}

struct BchEntry {
    lo: usize,
    hi: usize,
    code: CyclicCode,
    dists: OnceLock<Result<(Dist, Dist), String>>,
}

struct BchCatalog {
    f: Factorization,
    entries: Vec<BchEntry>,
}

impl BchCatalog {
    fn new(n: usize) -> Result<BchCatalog> {
        let f = Factorization::new(n)?;
        let mut entries: Vec<BchEntry> = Vec::new();
        for delta in 2..=n {
            let code = bch_code(&f, delta)?;
            match entries.last_mut() {
                Some(e) if e.code.generator() == code.generator() => e.hi = delta,
                _ => entries.push(BchEntry {
                    lo: delta,
                    hi: delta,
                    code,
                    dists: OnceLock::new(),
                }),
            }
        }
        Ok(BchCatalog { f, entries })
    }

    fn by_delta(&self, delta: usize) -> Option<&BchEntry> {
        self.entries.iter().find(|e| e.lo <= delta && delta <= e.hi)
    }

    fn by_k(&self, k: usize) -> Vec<&BchEntry> {
        self.entries.iter().filter(|e| e.code.k() == k).collect()
    }

    fn dists(&self, e: &BchEntry, budget: &Budget) -> Result<(Dist, Dist)> {
        e.dists
            .get_or_init(|| {
                let bounds = (
                    e.code.bch_bound(&self.f),
                    e.code.hermitian_dual_bch_bound(&self.f),
                );
                distances(&e.code.code().additive_view(), budget, bounds).map_err(|e| e.to_string())
            })
            .clone()
            .map_err(|e| anyhow!(e))
    }
}

/// Inclusive row filter on the numeric row label (or the 1-based position for
/// labels that are not numbers).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RowRange {
    pub lo: usize,
    pub hi: usize,
}

impl std::str::FromStr for RowRange {
    type Err = anyhow::Error;
    fn from_str(s: &str) -> Result<RowRange> {
        let parse = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| anyhow!("bad row range {s:?}; expected a..b or a"))
        };
        match s.split_once("..") {
            Some((a, b)) => {
                let r = RowRange {
                    lo: parse(a)?,
                    hi: parse(b.trim_start_matches('='))?,
                };
                if r.lo > r.hi {
                    return Err(anyhow!("empty row range {s:?}"));
                }
                Ok(r)
            }
            None => {
                let v = parse(s)?;
                Ok(RowRange { lo: v, hi: v })
            }
        }
    }
}

impl RowRange {
    fn contains(&self, label: &str, position: usize) -> bool {
        let digits: String = label.chars().take_while(|c| c.is_ascii_digit()).collect();
        let key = digits.parse().unwrap_or(position);
        self.lo <= key && key <= self.hi
    }
}

enum Job {
    Cyclic(CyclicRow),
    Bch(BchRow),
    BchQecc(BchQeccRow),
    Deletion(TableId, DeletionRow),
    Example(ExampleRow),
    External(ExternalRow),
}

impl Job {
    fn label(&self) -> String {
        match self {
            Job::Cyclic(r) => r.row.to_string(),
            Job::Bch(r) => r.row.to_string(),
            Job::BchQecc(r) => r.row.to_string(),
            Job::Deletion(_, r) => r.row.to_string(),
            Job::Example(r) => r.id.clone(),
            Job::External(r) => r.row.clone(),
        }
    }
}

/// Shared state for one reproduction run.
pub struct Reproducer {
    budget: Budget,
    bch: Mutex<HashMap<usize, Arc<BchCatalog>>>,
}

impl Reproducer {
    pub fn new(budget: Budget) -> Reproducer {
        Reproducer {
            budget,
            bch: Mutex::new(HashMap::new()),
        }
    }

    pub fn budget(&self) -> &Budget {
        &self.budget
    }

    fn catalog(&self, n: usize) -> Result<Arc<BchCatalog>> {
        if let Some(c) = self.bch.lock().unwrap().get(&n) {
            return Ok(c.clone());
        }
        // built outside the lock; a racing duplicate is discarded
        let built = Arc::new(BchCatalog::new(n)?);
        Ok(self.bch.lock().unwrap().entry(n).or_insert(built).clone())
    }

    fn jobs(table: TableId, rows: Option<RowRange>) -> Result<Vec<Job>> {
        let all: Vec<Job> = match table {
            TableId::Cyclic => fixtures::cyclic_rows()?
                .into_iter()
                .map(Job::Cyclic)
                .collect(),
            TableId::Bch => fixtures::bch_rows()?.into_iter().map(Job::Bch).collect(),
            TableId::BchQecc => fixtures::bch_qecc_rows()?
                .into_iter()
                .map(Job::BchQecc)
                .collect(),
            TableId::Circulant | TableId::Fourcirc | TableId::Bordered => {
                fixtures::deletion_rows(table)?
                    .into_iter()
                    .map(|r| Job::Deletion(table, r))
                    .collect()
            }
            TableId::Examples => fixtures::example_rows()?
                .into_iter()
                .map(Job::Example)
                .collect(),
            _ => fixtures::external_rows(table)?
                .into_iter()
                .map(Job::External)
                .collect(),
        };
        Ok(all
            .into_iter()
            .enumerate()
            .filter(|(i, j)| rows.is_none_or(|r| r.contains(&j.label(), i + 1)))
            .map(|(_, j)| j)
            .collect())
    }

    /// Reproduces the selected rows of `table` on up to `jobs` threads.
    /// The result is in fixture order whatever the schedule.
    pub fn run(
        &self,
        table: TableId,
        rows: Option<RowRange>,
        jobs: usize,
    ) -> Result<Vec<RowReport>> {
        let work = Reproducer::jobs(table, rows)?;
        let next = AtomicUsize::new(0);
        let slots: Vec<OnceLock<RowReport>> = (0..work.len()).map(|_| OnceLock::new()).collect();
        std::thread::scope(|s| {
            for _ in 0..jobs.clamp(1, work.len().max(1)) {
                s.spawn(|| loop {
                    let i = next.fetch_add(1, Ordering::Relaxed);
                    let Some(job) = work.get(i) else { break };
                    let _ = slots[i].set(self.eval(table, job));
                });
            }
        });
        Ok(slots
            .into_iter()
            .map(|s| s.into_inner().expect("every row evaluated"))
            .collect())
    }

    fn eval(&self, table: TableId, job: &Job) -> RowReport {
        let label = job.label();
        let outcome = match job {
            Job::Cyclic(r) => self.cyclic(r),
            Job::Bch(r) => self.bch_row(r),
            Job::BchQecc(r) => self.bch_qecc(r),
            Job::Deletion(t, r) => self.deletion(*t, r),
            Job::Example(r) => self.example(r),
            Job::External(r) => self.external(r),
        };
        outcome.unwrap_or_else(|e| {
            let checks = Checks {
                error: Some(format!("{e:#}")),
                ..Checks::default()
            };
            report(table, label, "", "error".into(), checks)
        })
    }

    fn cyclic(&self, r: &CyclicRow) -> Result<RowReport> {
        let n = r.c.n;
        let printed = cyclic_code(n, &parse_poly(&r.gen_c)?);
        let (c, note) = match (printed, &r.fix_c) {
            (Ok(c), _) => (c, None),
            (Err(e), Some(fix)) => {
                let c = cyclic_code(n, &parse_poly(fix)?)?;
                (
                    c,
                    Some(format!(
                        "printed generator of C is unusable ({e}); evaluated with {fix}"
                    )),
                )
            }
            (Err(e), None) => return Err(anyhow!("generator of C: {e}")),
        };
        let d =
            cyclic_code(n, &parse_poly(&r.gen_d)?).map_err(|e| anyhow!("generator of D: {e}"))?;
        let mut checks = Checks::default();
        let f = Factorization::new(n)?;
        let (dc, _) = distances(
            &c.code().additive_view(),
            &self.budget,
            (c.bch_bound(&f), 1),
        )?;
        let (dd, _) = distances(
            &d.code().additive_view(),
            &self.budget,
            (d.bch_bound(&f), 1),
        )?;
        checks.eq("C.n", r.c.n, c.n());
        checks.eq("C.k", r.c.k, c.k());
        checks.dist("C.d", r.c.d, dc);
        checks.eq("D.n", r.d.n, d.n());
        checks.eq("D.k", r.d.k, d.k());
        checks.dist("D.d", r.d.d, dd);
        let computed = match from_nested_cyclic(&c, &d, &self.budget) {
            Ok(q) => {
                checks.quantum(&r.q, &q);
                if r.bold {
                    checks.eq("singleton", "meets", q.singleton.as_str());
                }
                q.to_string()
            }
            Err(e) if too_large(&e) => {
                checks.infeasible = true;
                "infeasible".into()
            }
            Err(e) => return Err(e.into()),
        };
        let mut rep = report(TableId::Cyclic, r.row, r.q, computed, checks);
        if let Some(note) = note {
            rep.note = Some(format!(
                "{note}; {}",
                if rep.status == Status::Pass {
                    "all fields match"
                } else {
                    "mismatch"
                }
            ));
            rep.status = Status::Flagged;
        }
        Ok(rep)
    }

    fn bch_row(&self, r: &BchRow) -> Result<RowReport> {
        let cat = self.catalog(r.n)?;
        let e = cat
            .by_delta(r.delta.0)
            .ok_or_else(|| anyhow!("designed distance {} out of range", r.delta.0))?;
        let mut checks = Checks::default();
        let fmt_range = |lo: usize, hi: usize| {
            if lo == hi {
                lo.to_string()
            } else {
                format!("{lo}..{hi}")
            }
        };
        checks.eq(
            "delta",
            fmt_range(r.delta.0, r.delta.1),
            fmt_range(e.lo, e.hi),
        );
        checks.eq("k", r.code.k, e.code.k());
        let (d, dd) = cat.dists(e, &self.budget)?;
        checks.dist("d", r.code.d, d);
        checks.dist("dual d", r.dual_d, dd);
        let computed = format!("[{},{},{}] dual {}", r.n, e.code.k(), d, dd);
        Ok(report(
            TableId::Bch,
            r.row,
            format!("{} dual {}", r.code, r.dual_d),
            computed,
            checks,
        ))
    }

    fn bch_qecc(&self, r: &BchQeccRow) -> Result<RowReport> {
        let cat = self.catalog(r.n)?;
        let pick = |t: &Triple| -> Result<&BchEntry> {
            match cat.by_k(t.k).as_slice() {
                [e] => Ok(*e),
                [] => Err(anyhow!("no narrow-sense BCH code {t}")),
                _ => Err(anyhow!(
                    "several narrow-sense BCH codes of dimension {} at n={}",
                    t.k,
                    r.n
                )),
            }
        };
        let (inner, outer) = (pick(&r.inner)?, pick(&r.outer)?);
        let mut checks = Checks::default();
        checks.eq("nested", true, inner.code.is_subcode_of(&outer.code));
        let (di, ddi) = cat.dists(inner, &self.budget)?;
        let (d_o, _) = cat.dists(outer, &self.budget)?;
        checks.dist("inner.d", r.inner.d, di);
        checks.dist("outer.d", r.outer.d, d_o);
        let computed = match (ddi.exact(), d_o.exact()) {
            (Some(d1), Some(d2)) => {
                let q = AqeccParams::new(
                    r.n,
                    2 * (outer.code.k() - inner.code.k()),
                    d1,
                    d2,
                    None,
                    Provenance::new(
                        Construction::NestedCyclic,
                        format!("bch n={} delta={}", r.n, inner.lo),
                        format!("bch n={} delta={}", r.n, outer.lo),
                    ),
                );
                checks.quantum(&r.q, &q);
                q.to_string()
            }
            _ => {
                checks.infeasible = true;
                format!(
                    "[[{},{},?]] d(inner dual) {} d(outer) {}",
                    r.n,
                    outer.code.k() - inner.code.k(),
                    relation(ddi),
                    relation(d_o)
                )
            }
        };
        let mut rep = report(TableId::BchQecc, r.row, r.q, computed, checks);
        if let Some(why) = &r.flag {
            if rep.status != Status::Pass {
                rep.status = Status::Flagged;
                rep.note = Some(why.clone());
            }
        }
        Ok(rep)
    }

    fn deletion(&self, table: TableId, r: &DeletionRow) -> Result<RowReport> {
        let c = r.spec.build()?.additive();
        let mut checks = Checks::default();
        checks.eq("n(C)", r.n, c.n());
        checks.eq("self-dual", true, c.is_self_dual());
        let self_dual = c.is_self_dual();
        let pair = NestedPair::new(c.delete_rows(&RowSelection::Last(r.del))?, c)?;
        let mut computed = self.nested(&pair, &r.q, &mut checks)?;
        if checks.infeasible && self_dual {
            // C = C^⊥ ⊆ D^⊥, so d(D^⊥) is the smaller distance and bounds d(C) from below
            if let Ok(s) = spectra(pair.inner(), &self.budget) {
                let dx = s.dual.min_weight().unwrap_or(0);
                checks.eq("n", r.q.n, r.n);
                checks.eq("k", r.q.k_display(), k_text(pair.log2_k()));
                checks.eq("dx", r.q.dx, dx);
                checks.dist("dz", r.q.dz, Dist::AtLeast(dx));
                computed = format!("[[{},{},>={dx}/{dx}]]", r.n, k_text(pair.log2_k()));
            }
        }
        Ok(report(table, r.row, r.q, computed, checks))
    }

    fn nested(
        &self,
        pair: &NestedPair,
        expected: &QuantumParams,
        checks: &mut Checks,
    ) -> Result<String> {
        match from_nested_additive(pair, &self.budget) {
            Ok(q) => {
                checks.quantum(expected, &q);
                Ok(q.to_string())
            }
            Err(e) if too_large(&e) => {
                checks.infeasible = true;
                Ok("infeasible".into())
            }
            Err(e) => Err(e.into()),
        }
    }

    fn example(&self, r: &ExampleRow) -> Result<RowReport> {
        let outer = r.outer.build()?.additive();
        let inner = r.inner.build()?.additive();
        let mut checks = Checks::default();
        let pair = NestedPair::new(inner, outer)?;
        let computed = self.nested(&pair, &r.q, &mut checks)?;
        Ok(report(TableId::Examples, &r.id, r.q, computed, checks))
    }

    fn external(&self, r: &ExternalRow) -> Result<RowReport> {
        let expected = r.q.map(|q| q.to_string()).unwrap_or_default();
        let Some((route, spec)) = &r.build else {
            let mut rep = report(r.table, &r.row, &expected, String::new(), Checks::default());
            rep.status = Status::SkippedExternal;
            rep.note = Some(format!("{} from {}", r.code, r.source));
            return Ok(rep);
        };
        let built = spec.build()?;
        let mut checks = Checks::default();
        let q = match route {
            Route::SelfDual => {
                let c = built.additive();
                let want = match r.row.rsplit_once('-') {
                    Some((_, "I")) => Some(SelfDualType::TypeI),
                    Some((_, "II")) => Some(SelfDualType::TypeII),
                    _ => None,
                };
                if let (Some(want), Ok(got)) = (want, c.classify_type()) {
                    checks.eq("type", type_name(want), type_name(got));
                }
                from_selfdual(&c, &self.budget)
            }
            Route::SelfOrthogonal => {
                let lin = built
                    .linear()
                    .ok_or_else(|| anyhow!("{spec} is not a linear code"))?;
                if let Ok(t) = r.code.parse::<Triple>() {
                    let a = lin.additive_view();
                    let (d, _) = distances(&a, &self.budget, (1, 1))?;
                    checks.eq("C.n", t.n, lin.n());
                    checks.eq("C.k", t.k, lin.k());
                    checks.dist("C.d", t.d, d);
                }
                from_self_orthogonal_linear(lin, &self.budget)
            }
        };
        let computed = match (q, r.q) {
            (Ok(q), Some(exp)) => {
                checks.quantum(&exp, &q);
                q.to_string()
            }
            (Ok(q), None) => q.to_string(),
            (Err(e), _) if too_large(&e) => {
                checks.infeasible = true;
                "infeasible".into()
            }
            (Err(e), _) => return Err(e.into()),
        };
        let mut rep = report(r.table, &r.row, expected, computed, checks);
        rep.note = Some(format!("rebuilt from {spec}"));
        Ok(rep)
    }
}

fn type_name(t: SelfDualType) -> &'static str {
    match t {
        SelfDualType::TypeI => "I",
        SelfDualType::TypeII => "II",
    }
}

fn k_text(log2_k: usize) -> String {
    if log2_k.is_multiple_of(2) {
        (log2_k / 2).to_string()
    } else {
        format!("{}.5", log2_k / 2)
    }
}

fn relation(d: Dist) -> String {
    match d {
        Dist::Exact(v) => format!("= {v}"),
        Dist::AtLeast(b) => format!(">= {b}"),
    }
}

/// Counts per status.
pub fn tally(reports: &[RowReport]) -> Vec<(Status, usize)> {
    Status::ALL
        .iter()
        .map(|&s| (s, reports.iter().filter(|r| r.status == s).count()))
        .filter(|&(_, c)| c > 0)
        .collect()
}

/// Plain-text report with a diff line under each mismatching row.
pub fn render_text(reports: &[RowReport]) -> String {
    use std::fmt::Write as _;
    let mut out = String::new();
    let w = reports
        .iter()
        .map(|r| r.row.len())
        .max()
        .unwrap_or(0)
        .max(6);
    let indent = 16 + 1 + w + 2;
    let _ = writeln!(
        out,
        "{:<16} {:>w$}  {:<16} {:<22} computed",
        "table", "row", "status", "expected"
    );
    for r in reports {
        let _ = writeln!(
            out,
            "{:<16} {:>w$}  {:<16} {:<22} {}",
            r.table.as_str(),
            r.row,
            r.status.as_str(),
            r.expected,
            r.computed
        );
        for m in r.mismatches() {
            let _ = writeln!(
                out,
                "{:>indent$}{}: expected {}, computed {}",
                "", m.field, m.expected, m.computed
            );
        }
        if let Some(n) = &r.note {
            if !matches!(r.status, Status::Pass | Status::SkippedExternal) {
                let _ = writeln!(out, "{:>indent$}{n}", "");
            }
        }
    }
    out
}
