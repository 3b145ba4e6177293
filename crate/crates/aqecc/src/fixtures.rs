//! Embedded table fixtures.
//!
//! Each file is pipe-separated, one row per line, `#` for comments.
//! Expected values are kept as printed.

use std::fmt;
use std::str::FromStr;

use anyhow::{anyhow, bail, ensure, Context, Result};
use serde::Serialize;

use crate::spec::CodeSpec;

/// Fixture table identifiers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TableId {
    Selfdual,
    Classso,
    SelfdualLinear,
    Randso,
    Quasitwisted,
    Cyclic,
    Bch,
    BchQecc,
    Circulant,
    Fourcirc,
    Bordered,
    Examples,
}

impl TableId {
    pub const ALL: [TableId; 12] = [
        TableId::Selfdual,
        TableId::Classso,
        TableId::SelfdualLinear,
        TableId::Randso,
        TableId::Quasitwisted,
        TableId::Cyclic,
        TableId::Bch,
        TableId::BchQecc,
        TableId::Circulant,
        TableId::Fourcirc,
        TableId::Bordered,
        TableId::Examples,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TableId::Selfdual => "selfdual",
            TableId::Classso => "classso",
            TableId::SelfdualLinear => "selfdual_linear",
            TableId::Randso => "randso",
            TableId::Quasitwisted => "quasitwisted",
            TableId::Cyclic => "cyclic",
            TableId::Bch => "bch",
            TableId::BchQecc => "bch_qecc",
            TableId::Circulant => "circulant",
            TableId::Fourcirc => "fourcirc",
            TableId::Bordered => "bordered",
            TableId::Examples => "examples",
        }
    }

    pub fn is_external(self) -> bool {
        matches!(
            self,
            TableId::Selfdual
                | TableId::Classso
                | TableId::SelfdualLinear
                | TableId::Randso
                | TableId::Quasitwisted
        )
    }
}

impl fmt::Display for TableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TableId {
    type Err = anyhow::Error;
    fn from_str(s: &str) -> Result<TableId> {
        TableId::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| anyhow!("unknown table {s:?}; expected one of {}", table_names()))
    }
}

pub fn table_names() -> String {
    TableId::ALL
        .iter()
        .map(|t| t.as_str())
        .collect::<Vec<_>>()
        .join(", ")
}

/// A printed classical triple `[n,k,d]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Triple {
    pub n: usize,
    pub k: usize,
    pub d: usize,
}

impl FromStr for Triple {
    type Err = anyhow::Error;
    fn from_str(s: &str) -> Result<Triple> {
        let body = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .context("expected [n,k,d]")?;
        let v: Vec<usize> = body
            .split(',')
            .map(|x| x.trim().parse())
            .collect::<Result<_, _>>()
            .with_context(|| format!("bad triple {s}"))?;
        ensure!(v.len() == 3, "bad triple {s}");
        Ok(Triple {
            n: v[0],
            k: v[1],
            d: v[2],
        })
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{},{}]", self.n, self.k, self.d)
    }
}

/// A printed quantum code `[[n,k,dz/dx]]` with `k` a multiple of 1/2.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuantumParams {
    pub n: usize,
    pub log2_k: usize,
    pub dz: usize,
    pub dx: usize,
}

impl QuantumParams {
    pub fn k_display(&self) -> String {
        if self.log2_k.is_multiple_of(2) {
            format!("{}", self.log2_k / 2)
        } else {
            format!("{}.5", self.log2_k / 2)
        }
    }
}

impl FromStr for QuantumParams {
    type Err = anyhow::Error;
    fn from_str(s: &str) -> Result<QuantumParams> {
        let body = s
            .trim()
            .strip_prefix("[[")
            .and_then(|t| t.strip_suffix("]]"))
            .with_context(|| format!("expected [[n,k,dz/dx]], found {s}"))?;
        let parts: Vec<&str> = body.split(',').collect();
        ensure!(parts.len() == 3, "bad quantum code {s}");
        let n = parts[0].trim().parse()?;
        let k = parts[1].trim();
        let log2_k = match k.split_once('.') {
            None => 2 * k.parse::<usize>()?,
            Some((w, "5")) => 2 * w.parse::<usize>()? + 1,
            Some((w, "0")) => 2 * w.parse::<usize>()?,
            _ => bail!("dimension {k} is not a multiple of 1/2"),
        };
        let (dz, dx) = parts[2]
            .split_once('/')
            .with_context(|| format!("bad distances in {s}"))?;
        Ok(QuantumParams {
            n,
            log2_k,
            dz: dz.trim().parse()?,
            dx: dx.trim().parse()?,
        })
    }
}

impl fmt::Display for QuantumParams {
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

#[derive(Clone, Debug)]
pub struct CyclicRow {
    pub row: usize,
    pub c: Triple,
    pub gen_c: String,
    pub d: Triple,
    pub gen_d: String,
    pub q: QuantumParams,
    pub bold: bool,
    pub fix_c: Option<String>,
}

#[derive(Clone, Debug)]
pub struct BchRow {
    pub row: usize,
    pub n: usize,
    pub delta: (usize, usize),
    pub code: Triple,
    pub dual_d: usize,
}

#[derive(Clone, Debug)]
pub struct BchQeccRow {
    pub row: usize,
    pub n: usize,
    pub inner: Triple,
    pub outer: Triple,
    pub q: QuantumParams,
    pub flag: Option<String>,
}

/// A circulant-family code with the number of trailing rows deleted.
#[derive(Clone, Debug)]
pub struct DeletionRow {
    pub row: usize,
    pub n: usize,
    pub spec: CodeSpec,
    pub del: usize,
    pub q: QuantumParams,
}

#[derive(Clone, Debug)]
pub struct ExampleRow {
    pub id: String,
    pub outer: CodeSpec,
    pub inner: CodeSpec,
    pub q: QuantumParams,
}

/// How a constructible external row is rebuilt.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    SelfDual,
    SelfOrthogonal,
}

#[derive(Clone, Debug)]
pub struct ExternalRow {
    pub table: TableId,
    pub row: String,
    pub code: String,
    pub q: Option<QuantumParams>,
    pub source: String,
    pub build: Option<(Route, CodeSpec)>,
}

const CYCLIC: &str = include_str!("../fixtures/cyclic.txt");
const BCH: &str = include_str!("../fixtures/bch.txt");
const BCH_QECC: &str = include_str!("../fixtures/bch_qecc.txt");
const CIRCULANT: &str = include_str!("../fixtures/circulant.txt");
const FOURCIRC: &str = include_str!("../fixtures/fourcirc.txt");
const BORDERED: &str = include_str!("../fixtures/bordered.txt");
const EXAMPLES: &str = include_str!("../fixtures/examples.txt");
const EXTERNAL: &str = include_str!("../fixtures/external.txt");

fn records(text: &'static str) -> impl Iterator<Item = (usize, Vec<&'static str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.trim();
        (!l.is_empty() && !l.starts_with('#'))
            .then(|| (i + 1, l.split('|').map(str::trim).collect()))
    })
}

fn at<'a>(fields: &[&'a str], i: usize, line: usize) -> Result<&'a str> {
    fields
        .get(i)
        .copied()
        .with_context(|| format!("line {line}: missing field {}", i + 1))
}

fn range(s: &str) -> Result<(usize, usize)> {
    Ok(match s.split_once("..") {
        Some((a, b)) => (a.parse()?, b.parse()?),
        None => {
            let v = s.parse()?;
            (v, v)
        }
    })
}

pub fn cyclic_rows() -> Result<Vec<CyclicRow>> {
    records(CYCLIC)
        .map(|(line, f)| {
            let ctx = || format!("cyclic fixture line {line}");
            let mut row = CyclicRow {
                row: at(&f, 0, line)?.parse().with_context(ctx)?,
                c: at(&f, 1, line)?.parse().with_context(ctx)?,
                gen_c: at(&f, 2, line)?.to_string(),
                d: at(&f, 3, line)?.parse().with_context(ctx)?,
                gen_d: at(&f, 4, line)?.to_string(),
                q: at(&f, 5, line)?.parse().with_context(ctx)?,
                bold: false,
                fix_c: None,
            };
            for tag in &f[6..] {
                match tag.split_once('=') {
                    None if *tag == "bold" => row.bold = true,
                    Some(("fix-c", g)) => row.fix_c = Some(g.to_string()),
                    _ => bail!("{}: unknown tag {tag:?}", ctx()),
                }
            }
            Ok(row)
        })
        .collect()
}

pub fn bch_rows() -> Result<Vec<BchRow>> {
    records(BCH)
        .map(|(line, f)| {
            let ctx = || format!("bch fixture line {line}");
            let row = BchRow {
                row: at(&f, 0, line)?.parse().with_context(ctx)?,
                n: at(&f, 1, line)?.parse().with_context(ctx)?,
                delta: range(at(&f, 2, line)?).with_context(ctx)?,
                code: at(&f, 4, line)?.parse().with_context(ctx)?,
                dual_d: at(&f, 5, line)?.parse().with_context(ctx)?,
            };
            let d: usize = at(&f, 3, line)?.parse().with_context(ctx)?;
            ensure!(
                d == row.code.d && row.n == row.code.n,
                "{}: columns disagree",
                ctx()
            );
            Ok(row)
        })
        .collect()
}

pub fn bch_qecc_rows() -> Result<Vec<BchQeccRow>> {
    records(BCH_QECC)
        .map(|(line, f)| {
            let ctx = || format!("bch_qecc fixture line {line}");
            let mut flag = None;
            for tag in &f[5..] {
                match tag.split_once('=') {
                    Some(("flag", why)) => flag = Some(why.to_string()),
                    _ => bail!("{}: unknown tag {tag:?}", ctx()),
                }
            }
            Ok(BchQeccRow {
                row: at(&f, 0, line)?.parse().with_context(ctx)?,
                n: at(&f, 1, line)?.parse().with_context(ctx)?,
                inner: at(&f, 2, line)?.parse().with_context(ctx)?,
                outer: at(&f, 3, line)?.parse().with_context(ctx)?,
                q: at(&f, 4, line)?.parse().with_context(ctx)?,
                flag,
            })
        })
        .collect()
}

pub fn deletion_rows(table: TableId) -> Result<Vec<DeletionRow>> {
    let text = match table {
        TableId::Circulant => CIRCULANT,
        TableId::Fourcirc => FOURCIRC,
        TableId::Bordered => BORDERED,
        _ => bail!("{table} is not a deletion table"),
    };
    records(text)
        .map(|(line, f)| {
            let ctx = || format!("{table} fixture line {line}");
            let n: usize = at(&f, 1, line)?.parse().with_context(ctx)?;
            let (spec, rest) = match table {
                TableId::Circulant => (
                    CodeSpec::Circulant {
                        v: at(&f, 2, line)?.into(),
                        n: Some(n),
                    },
                    3,
                ),
                TableId::Fourcirc => (
                    CodeSpec::Fourcirc {
                        a: at(&f, 2, line)?.into(),
                        b: at(&f, 3, line)?.into(),
                    },
                    4,
                ),
                _ => (
                    CodeSpec::Bordered {
                        e: at(&f, 2, line)?.into(),
                        a: at(&f, 3, line)?.into(),
                        b: at(&f, 4, line)?.into(),
                    },
                    5,
                ),
            };
            Ok(DeletionRow {
                row: at(&f, 0, line)?.parse().with_context(ctx)?,
                n,
                spec,
                del: at(&f, rest, line)?.parse().with_context(ctx)?,
                q: at(&f, rest + 1, line)?.parse().with_context(ctx)?,
            })
        })
        .collect()
}

pub fn example_rows() -> Result<Vec<ExampleRow>> {
    records(EXAMPLES)
        .map(|(line, f)| {
            let ctx = || format!("examples fixture line {line}");
            Ok(ExampleRow {
                id: at(&f, 0, line)?.to_string(),
                outer: at(&f, 1, line)?.parse().with_context(ctx)?,
                inner: at(&f, 2, line)?.parse().with_context(ctx)?,
                q: at(&f, 3, line)?.parse().with_context(ctx)?,
            })
        })
        .collect()
}

pub fn external_rows(table: TableId) -> Result<Vec<ExternalRow>> {
    records(EXTERNAL)
        .filter(|(_, f)| f.first() == Some(&table.as_str()))
        .map(|(line, f)| {
            let ctx = || format!("external fixture line {line}");
            let q = at(&f, 3, line)?;
            let mut build = None;
            for tag in &f[5..] {
                let spec = tag
                    .strip_prefix("build=")
                    .with_context(|| format!("{}: unknown tag {tag:?}", ctx()))?;
                let (route, json) = spec.split_once(' ').with_context(ctx)?;
                let route = match route {
                    "selfdual" => Route::SelfDual,
                    "selforth" => Route::SelfOrthogonal,
                    _ => bail!("{}: unknown route {route:?}", ctx()),
                };
                build = Some((route, json.parse().with_context(ctx)?));
            }
            Ok(ExternalRow {
                table,
                row: at(&f, 1, line)?.to_string(),
                code: at(&f, 2, line)?.to_string(),
                q: if q.is_empty() {
                    None
                } else {
                    Some(q.parse().with_context(ctx)?)
                },
                source: at(&f, 4, line)?.to_string(),
                build,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_fixtures_parse() {
        assert_eq!(cyclic_rows().unwrap().len(), 65);
        assert_eq!(bch_rows().unwrap().len(), 71);
        assert_eq!(bch_qecc_rows().unwrap().len(), 149);
        assert_eq!(deletion_rows(TableId::Circulant).unwrap().len(), 38);
        assert_eq!(deletion_rows(TableId::Fourcirc).unwrap().len(), 2);
        assert_eq!(deletion_rows(TableId::Bordered).unwrap().len(), 5);
        assert_eq!(example_rows().unwrap().len(), 7);
        for t in TableId::ALL.into_iter().filter(|t| t.is_external()) {
            assert!(!external_rows(t).unwrap().is_empty(), "{t}");
        }
    }

    #[test]
    fn printed_forms() {
        let q: QuantumParams = "[[8,0.5,4/2]]".parse().unwrap();
        assert_eq!((q.n, q.log2_k, q.dz, q.dx), (8, 1, 4, 2));
        assert_eq!(q.to_string(), "[[8,0.5,4/2]]");
        assert!("[[8,0.25,4/2]]".parse::<QuantumParams>().is_err());
        let t: Triple = "[27,18,2]".parse().unwrap();
        assert_eq!(t, Triple { n: 27, k: 18, d: 2 });
        assert_eq!(range("4..6").unwrap(), (4, 6));
    }
}
