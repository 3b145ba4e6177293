//! Text formats: generator matrices, polynomials and weight enumerators.

use std::fmt::Write as _;

use anyhow::{anyhow, bail, ensure, Context, Result};
use aqecc_core::spectrum::WeightEnumerator;
use aqecc_core::{F4Poly, F4Vec, F4};
use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

/// Parses a polynomial written either as an expression in `x`
/// (`(x^21+1)/(x^2+Wx+w)`, `x^3 + wx + 1`) or as ascending coefficients (`w W 1`).
pub fn parse_poly(s: &str) -> Result<F4Poly> {
    if s.contains('x') {
        Expr::new(s).parse()
    } else {
        s.parse::<F4Poly>()
            .map_err(|e| anyhow!("bad polynomial {s:?}: {e}"))
    }
}

/// Recursive descent over
/// `expr := product ('/' product)*`, `product := group+ | sum`,
/// `group := '(' expr ')'`, `sum := term ('+' term)*`, `term := [coef] [x['^'int]]`.
/// Division must be exact.
struct Expr<'a> {
    src: &'a str,
    chars: Vec<char>,
    pos: usize,
}

impl<'a> Expr<'a> {
    fn new(src: &'a str) -> Expr<'a> {
        Expr {
            src,
            chars: src.chars().filter(|c| !c.is_whitespace()).collect(),
            pos: 0,
        }
    }

    fn parse(mut self) -> Result<F4Poly> {
        let p = self.expr()?;
        if self.pos != self.chars.len() {
            return Err(self.err("trailing input"));
        }
        Ok(p)
    }

    fn err(&self, what: &str) -> anyhow::Error {
        anyhow!(
            "bad polynomial {:?}: {what} at offset {}",
            self.src,
            self.pos
        )
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<F4Poly> {
        let mut p = self.product()?;
        while self.peek() == Some('/') {
            self.pos += 1;
            let q = self.product()?;
            p = p.exact_div(&q).map_err(|e| self.err(&e.to_string()))?;
        }
        Ok(p)
    }

    fn product(&mut self) -> Result<F4Poly> {
        if self.peek() != Some('(') {
            return self.sum();
        }
        let mut p = F4Poly::one();
        while self.peek() == Some('(') {
            self.pos += 1;
            let inner = self.expr()?;
            if self.peek() != Some(')') {
                return Err(self.err("expected ')'"));
            }
            self.pos += 1;
            p = &p * &inner;
        }
        Ok(p)
    }

    fn sum(&mut self) -> Result<F4Poly> {
        let mut p = self.term()?;
        while self.peek() == Some('+') {
            self.pos += 1;
            p = &p + &self.term()?;
        }
        Ok(p)
    }

    fn term(&mut self) -> Result<F4Poly> {
        let mut coef = None;
        if let Some(c) = self.peek().and_then(F4::from_char) {
            coef = Some(c);
            self.pos += 1;
        }
        if self.peek() != Some('x') {
            return coef
                .map(F4Poly::constant)
                .ok_or_else(|| self.err("expected a term"));
        }
        self.pos += 1;
        let mut deg = 1;
        if self.peek() == Some('^') {
            self.pos += 1;
            let start = self.pos;
            while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                self.pos += 1;
            }
            let digits: String = self.chars[start..self.pos].iter().collect();
            deg = digits
                .parse()
                .map_err(|_| self.err("expected an exponent"))?;
        }
        Ok(F4Poly::monomial(deg, coef.unwrap_or(F4::ONE)))
    }
}

/// A generator matrix as read from or written to a file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    pub n: usize,
    pub rows: Vec<F4Vec>,
    pub comment: Option<String>,
}

/// Parses the matrix format: `#` comments, an optional `n=<len> rows=<count>`
/// header, then one row per line (symbols packed or separated by spaces or commas).
pub fn parse_matrix(text: &str) -> Result<Matrix> {
    let mut n = None;
    let mut count = None;
    let mut rows: Vec<F4Vec> = Vec::new();
    let mut comment = None;
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if let Some(c) = line.strip_prefix('#') {
            if comment.is_none() && rows.is_empty() {
                comment = Some(c.trim().to_string());
            }
            continue;
        }
        if line.is_empty() {
            continue;
        }
        if line.starts_with("n=") {
            for field in line.split_whitespace() {
                let (k, v) = field
                    .split_once('=')
                    .with_context(|| format!("line {}: bad header", i + 1))?;
                let v: usize = v
                    .parse()
                    .with_context(|| format!("line {}: bad number", i + 1))?;
                match k {
                    "n" => n = Some(v),
                    "rows" => count = Some(v),
                    _ => bail!("line {}: unknown header field {k:?}", i + 1),
                }
            }
            continue;
        }
        let row: F4Vec = line.parse().map_err(|e| anyhow!("line {}: {e}", i + 1))?;
        if let Some(len) = n.or(rows.first().map(F4Vec::len)) {
            ensure!(
                row.len() == len,
                "line {}: row has length {}, expected {len}",
                i + 1,
                row.len()
            );
        }
        rows.push(row);
    }
    let n = n
        .or(rows.first().map(F4Vec::len))
        .context("matrix has neither rows nor an n= header")?;
    if let Some(c) = count {
        ensure!(
            c == rows.len(),
            "header declares {c} rows, found {}",
            rows.len()
        );
    }
    Ok(Matrix { n, rows, comment })
}

/// Writes a matrix in the format read by [`parse_matrix`], rows packed.
pub fn format_matrix(m: &Matrix) -> String {
    let mut out = String::new();
    if let Some(c) = &m.comment {
        for line in c.lines() {
            let _ = writeln!(out, "# {line}");
        }
    }
    let _ = writeln!(out, "n={} rows={}", m.n, m.rows.len());
    for r in &m.rows {
        let _ = writeln!(out, "{}", pack(r));
    }
    out
}

/// Symbols without separators, e.g. `W1w01000`.
pub fn pack(v: &F4Vec) -> String {
    v.symbols().map(|s| s.to_string()).collect()
}

/// Weight enumerator as JSON; coefficients are decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumeratorJson {
    pub schema: String,
    pub n: usize,
    pub l: usize,
    #[serde(rename = "A")]
    pub a: Vec<String>,
}

impl EnumeratorJson {
    pub fn from_enumerator(w: &WeightEnumerator) -> EnumeratorJson {
        EnumeratorJson {
            schema: crate::SCHEMA.to_string(),
            n: w.n(),
            l: w.log2_size(),
            a: w.coeffs().iter().map(|c| c.to_string()).collect(),
        }
    }

    pub fn to_enumerator(&self) -> Result<WeightEnumerator> {
        ensure!(
            self.schema == crate::SCHEMA,
            "unsupported schema {:?}",
            self.schema
        );
        let coeffs = self
            .a
            .iter()
            .map(|s| {
                s.parse::<BigUint>()
                    .with_context(|| format!("bad coefficient {s:?}"))
            })
            .collect::<Result<Vec<_>>>()?;
        ensure!(
            coeffs.len() == self.n + 1,
            "expected {} coefficients, found {}",
            self.n + 1,
            coeffs.len()
        );
        WeightEnumerator::from_counts(self.n, self.l, coeffs).map_err(|e| anyhow!("{e}"))
    }
}
