//! JSON and CSV renderings of code parameters and reproduction reports.

use aqecc_core::aqecc::AqeccParams;
use serde::Serialize;

use crate::reproduce::RowReport;

#[derive(Serialize)]
pub struct ProvenanceJson<'a> {
    pub construction: &'a str,
    pub inner: &'a str,
    pub outer: &'a str,
}

#[derive(Serialize)]
pub struct ParamsJson<'a> {
    pub schema: &'static str,
    pub n: usize,
    #[serde(rename = "log2K")]
    pub log2_k: usize,
    pub k: String,
    pub dz: usize,
    pub dx: usize,
    pub singleton: &'static str,
    pub pure: Option<bool>,
    pub provenance: ProvenanceJson<'a>,
}

impl<'a> ParamsJson<'a> {
    pub fn new(p: &'a AqeccParams) -> ParamsJson<'a> {
        ParamsJson {
            schema: crate::SCHEMA,
            n: p.n,
            log2_k: p.log2_k,
            k: p.k_display(),
            dz: p.dz,
            dx: p.dx,
            singleton: p.singleton.as_str(),
            pure: p.pure_hint,
            provenance: ProvenanceJson {
                construction: p.provenance.construction.as_str(),
                inner: &p.provenance.inner,
                outer: &p.provenance.outer,
            },
        }
    }
}

pub fn params_json(p: &AqeccParams) -> String {
    serde_json::to_string(&ParamsJson::new(p)).expect("plain data serializes")
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub const PARAMS_CSV_HEADER: &str = "n,log2K,k,dz,dx,singleton,construction,inner,outer";

pub fn params_csv_row(p: &AqeccParams) -> String {
    [
        p.n.to_string(),
        p.log2_k.to_string(),
        p.k_display(),
        p.dz.to_string(),
        p.dx.to_string(),
        p.singleton.as_str().to_string(),
        p.provenance.construction.as_str().to_string(),
        csv_field(&p.provenance.inner),
        csv_field(&p.provenance.outer),
    ]
    .join(",")
}

#[derive(Serialize)]
struct ReportJson<'a> {
    schema: &'static str,
    rows: &'a [RowReport],
}

pub fn reports_json(reports: &[RowReport]) -> String {
    serde_json::to_string_pretty(&ReportJson {
        schema: crate::SCHEMA,
        rows: reports,
    })
    .expect("plain data serializes")
}

pub fn reports_csv(reports: &[RowReport]) -> String {
    let mut out = String::from("table,row,status,expected,computed,mismatches,note\n");
    for r in reports {
        let diffs: Vec<String> = r
            .mismatches()
            .map(|m| format!("{}: {} vs {}", m.field, m.expected, m.computed))
            .collect();
        let line = [
            r.table.as_str().to_string(),
            csv_field(&r.row),
            r.status.as_str().to_string(),
            csv_field(&r.expected),
            csv_field(&r.computed),
            csv_field(&diffs.join("; ")),
            csv_field(r.note.as_deref().unwrap_or("")),
        ]
        .join(",");
        out.push_str(&line);
        out.push('\n');
    }
    out
}
