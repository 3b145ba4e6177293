//! JSON construction specs, e.g. `{"family":"bch","n":27,"delta":2}`.
//!
//! Row indices in `delete` specs are 1-based, counted in the printed
//! generator matrix of the code being trimmed.

use std::fmt;
use std::path::PathBuf;

use anyhow::{anyhow, bail, Context, Result};
use aqecc_core::codes::{AdditiveCode, LinearCode, RowSelection};
use aqecc_core::constructions::{
    bch_code, bordered_four_circulant_code, circulant_code, cyclic_code, dodecacode,
    four_circulant_code, identity_code, macdonald_code, repetition_code, CyclicCode, Factorization,
};
use aqecc_core::{F4Vec, F4};
use serde::{Deserialize, Serialize};

use crate::io::{parse_matrix, parse_poly};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum CodeSpec {
    /// Narrow-sense BCH code of designed distance `delta`.
    Bch {
        n: usize,
        delta: usize,
    },
    /// Cyclic code with generator `g` (expression in `x` or ascending coefficients).
    Cyclic {
        n: usize,
        g: String,
    },
    /// Cyclic development of `v`, zero-padded to `n` when given.
    Circulant {
        v: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        n: Option<usize>,
    },
    Fourcirc {
        a: String,
        b: String,
    },
    Bordered {
        e: String,
        a: String,
        b: String,
    },
    Macdonald {
        k: usize,
        u: usize,
    },
    Repetition {
        n: usize,
    },
    Identity {
        n: usize,
    },
    Dodecacode,
    /// Generator rows given inline or read from a matrix file.
    Matrix {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        path: Option<PathBuf>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        rows: Option<Vec<String>>,
    },
    /// Subcode spanned by the surviving generator rows of `of`.
    Delete {
        of: Box<CodeSpec>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        last: Option<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        rows: Option<Vec<usize>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        keep: Option<Vec<usize>>,
    },
    /// Trace-Hermitian dual of `of`.
    Dual {
        of: Box<CodeSpec>,
    },
}

impl fmt::Display for CodeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&serde_json::to_string(self).map_err(|_| fmt::Error)?)
    }
}

impl std::str::FromStr for CodeSpec {
    type Err = anyhow::Error;
    fn from_str(s: &str) -> Result<CodeSpec> {
        serde_json::from_str(s).with_context(|| format!("invalid code spec {s}"))
    }
}

/// A constructed code with whatever extra structure its family provides.
#[derive(Clone, Debug)]
pub enum Built {
    Additive(AdditiveCode),
    Linear(LinearCode),
    Cyclic(Box<CyclicBuilt>),
}

#[derive(Clone, Debug)]
pub struct CyclicBuilt {
    pub code: CyclicCode,
    /// BCH lower bounds on `d(C)` and `d(C^⊥H)`.
    pub bound: usize,
    pub dual_bound: usize,
}

impl Built {
    pub fn n(&self) -> usize {
        match self {
            Built::Additive(c) => c.n(),
            Built::Linear(c) => c.n(),
            Built::Cyclic(c) => c.code.n(),
        }
    }

    pub fn additive(&self) -> AdditiveCode {
        match self {
            Built::Additive(c) => c.clone(),
            Built::Linear(c) => c.additive_view(),
            Built::Cyclic(c) => c.code.code().additive_view(),
        }
    }

    pub fn linear(&self) -> Option<&LinearCode> {
        match self {
            Built::Additive(_) => None,
            Built::Linear(c) => Some(c),
            Built::Cyclic(c) => Some(c.code.code()),
        }
    }

    pub fn cyclic(&self) -> Option<&CyclicBuilt> {
        match self {
            Built::Cyclic(c) => Some(c),
            _ => None,
        }
    }
}

fn vec_of(s: &str) -> Result<F4Vec> {
    s.parse::<F4Vec>()
        .map_err(|e| anyhow!("bad vector {s:?}: {e}"))
}

fn symbol(s: &str) -> Result<F4> {
    s.trim()
        .parse::<F4>()
        .map_err(|e| anyhow!("bad symbol {s:?}: {e}"))
}

fn wrap_cyclic(code: CyclicCode) -> Result<Built> {
    let f = Factorization::new(code.n())?;
    let bound = code.bch_bound(&f);
    let dual_bound = code.hermitian_dual_bch_bound(&f);
    Ok(Built::Cyclic(Box::new(CyclicBuilt {
        code,
        bound,
        dual_bound,
    })))
}

fn to_zero_based(rows: &[usize], total: usize) -> Result<Vec<usize>> {
    rows.iter()
        .map(|&r| {
            if r == 0 || r > total {
                bail!("row {r} is out of range 1..={total}")
            }
            Ok(r - 1)
        })
        .collect()
}

impl CodeSpec {
    pub fn build(&self) -> Result<Built> {
        Ok(match self {
            CodeSpec::Bch { n, delta } => {
                let f = Factorization::new(*n)?;
                wrap_cyclic(bch_code(&f, *delta)?)?
            }
            CodeSpec::Cyclic { n, g } => wrap_cyclic(cyclic_code(*n, &parse_poly(g)?)?)?,
            CodeSpec::Circulant { v, n } => {
                let v = vec_of(v)?;
                let len = n.unwrap_or(v.len());
                if len < v.len() {
                    bail!("vector of length {} does not fit n={len}", v.len());
                }
                Built::Additive(circulant_code(&v.resized(len)))
            }
            CodeSpec::Fourcirc { a, b } => {
                Built::Additive(four_circulant_code(&vec_of(a)?, &vec_of(b)?)?)
            }
            CodeSpec::Bordered { e, a, b } => Built::Additive(bordered_four_circulant_code(
                symbol(e)?,
                &vec_of(a)?,
                &vec_of(b)?,
            )?),
            CodeSpec::Macdonald { k, u } => Built::Linear(macdonald_code(*k, *u)?),
            CodeSpec::Repetition { n } => {
                if *n == 0 {
                    bail!("repetition code needs n >= 1");
                }
                Built::Linear(repetition_code(*n))
            }
            CodeSpec::Identity { n } => Built::Additive(identity_code(*n)),
            CodeSpec::Dodecacode => Built::Additive(dodecacode()),
            CodeSpec::Matrix { path, rows } => {
                let m = match (path, rows) {
                    (Some(p), None) => {
                        let text = std::fs::read_to_string(p)
                            .with_context(|| format!("reading {}", p.display()))?;
                        parse_matrix(&text).with_context(|| format!("parsing {}", p.display()))?
                    }
                    (None, Some(r)) => parse_matrix(&r.join("\n"))?,
                    _ => bail!("matrix spec needs exactly one of \"path\" or \"rows\""),
                };
                let label = m
                    .comment
                    .clone()
                    .unwrap_or_else(|| format!("matrix n={}", m.n));
                Built::Additive(AdditiveCode::from_generators(m.n, m.rows)?.with_provenance(label))
            }
            CodeSpec::Delete {
                of,
                last,
                rows,
                keep,
            } => {
                let base = of.build()?.additive();
                let total = base.generators().len();
                let sel = match (last, rows, keep) {
                    (Some(r), None, None) => RowSelection::Last(*r),
                    (None, Some(r), None) => RowSelection::Delete(to_zero_based(r, total)?),
                    (None, None, Some(k)) => RowSelection::Keep(to_zero_based(k, total)?),
                    _ => bail!("delete spec needs exactly one of \"last\", \"rows\" or \"keep\""),
                };
                let label = format!("{} {}", base.provenance(), describe(&sel));
                Built::Additive(base.delete_rows(&sel)?.with_provenance(label))
            }
            CodeSpec::Dual { of } => {
                let base = of.build()?.additive();
                let label = format!("dual of {}", base.provenance());
                Built::Additive(base.trace_dual().with_provenance(label))
            }
        })
    }
}

fn describe(sel: &RowSelection) -> String {
    let list = |v: &[usize]| {
        v.iter()
            .map(|i| (i + 1).to_string())
            .collect::<Vec<_>>()
            .join(",")
    };
    match sel {
        RowSelection::Last(r) => format!("minus last {r} rows"),
        RowSelection::Delete(v) => format!("minus rows {}", list(v)),
        RowSelection::Keep(v) => format!("rows {}", list(v)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_shapes() {
        let s: CodeSpec = r#"{"family":"bch","n":27,"delta":2}"#.parse().unwrap();
        assert_eq!(s, CodeSpec::Bch { n: 27, delta: 2 });
        let c: CodeSpec = r#"{"family":"circulant","v":"W 1 w 0 1","n":8}"#.parse().unwrap();
        assert_eq!(
            c.to_string(),
            r#"{"family":"circulant","v":"W 1 w 0 1","n":8}"#
        );
        let d: CodeSpec = r#"{"family":"delete","of":{"family":"dodecacode"},"last":4}"#
            .parse()
            .unwrap();
        assert_eq!(d.build().unwrap().additive().dimension(), 8);
        assert!(r#"{"family":"nope"}"#.parse::<CodeSpec>().is_err());
    }

    #[test]
    fn builds() {
        let b = CodeSpec::Bch { n: 27, delta: 2 }.build().unwrap();
        assert_eq!(b.linear().unwrap().k(), 18);
        let c = CodeSpec::Cyclic {
            n: 7,
            g: "(x^3+x+1)(x+1)".into(),
        }
        .build()
        .unwrap();
        assert_eq!(c.cyclic().unwrap().code.k(), 3);
        let keep = CodeSpec::Delete {
            of: Box::new(CodeSpec::Dodecacode),
            last: None,
            rows: None,
            keep: Some(vec![1, 2]),
        };
        assert_eq!(keep.build().unwrap().additive().dimension(), 2);
        let bad = CodeSpec::Delete {
            of: Box::new(CodeSpec::Dodecacode),
            last: None,
            rows: Some(vec![13]),
            keep: None,
        };
        assert!(bad.build().is_err());
        let dual = CodeSpec::Dual {
            of: Box::new(CodeSpec::Repetition { n: 3 }),
        };
        assert_eq!(dual.build().unwrap().additive().dimension(), 4);
    }
}
