use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use aqecc::fixtures::{self, TableId};
use aqecc::io::{format_matrix, EnumeratorJson, Matrix};
use aqecc::output::{params_csv_row, params_json, reports_csv, reports_json, PARAMS_CSV_HEADER};
use aqecc::reproduce::{render_text, tally, Reproducer, RowRange, RowReport, Status};
use aqecc::spec::{Built, CodeSpec};
use aqecc_core::aqecc::{
    css_linear, from_nested_additive, from_nested_additive_refined, from_nested_cyclic,
    from_self_orthogonal_linear, from_selfdual, pareto_front, search_cyclic_pairs,
    search_row_deletions, AqeccError, AqeccParams, DualKind, NestedPair,
};
use aqecc_core::codes::AdditiveCode;
use aqecc_core::spectrum::{spectra, Budget, SpectrumError};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

const EXIT_MISMATCH: u8 = 2;
const EXIT_INFEASIBLE: u8 = 3;
const EXIT_BAD_INPUT: u8 = 4;

#[derive(Parser)]
#[command(
    name = "aqecc",
    version,
    about = "Additive GF(4) codes and asymmetric quantum code parameters"
)]
struct Cli {
    /// Largest log2 of a codeword set that may be enumerated.
    #[arg(long, global = true, env = "AQECC_ENUM_CAP", default_value_t = Budget::DEFAULT_LOG2)]
    cap: usize,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build a code and print its parameters.
    Construct {
        #[command(flatten)]
        code: CodeArgs,
        /// Write the generator matrix here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Weight enumerator of a code (or of its trace dual) as JSON.
    Spectrum {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long)]
        dual: bool,
    },
    /// Generator matrix of the trace dual.
    Dual {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Quantum parameters from a nested pair, a self-dual code, a self-orthogonal
    /// linear code or a CSS-type linear pair.
    Aqecc(AqeccArgs),
    /// Reproduce the embedded tables.
    Reproduce {
        /// Table id, or `all`.
        #[arg(long)]
        table: String,
        /// Inclusive row range `a..b`.
        #[arg(long)]
        rows: Option<RowRange>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Treat infeasible rows as failures of the gate.
        #[arg(long)]
        strict: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Pareto-ranked search over nested pairs of one family.
    Search(SearchArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args)]
struct CodeArgs {
    /// JSON construction spec.
    #[arg(long, conflicts_with = "family")]
    spec: Option<CodeSpec>,
    #[arg(long)]
    family: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    delta: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    u: Option<usize>,
    /// Generator polynomial of a cyclic code.
    #[arg(long)]
    g: Option<String>,
    #[arg(long)]
    v: Option<String>,
    #[arg(long)]
    a: Option<String>,
    #[arg(long)]
    b: Option<String>,
    #[arg(long)]
    e: Option<String>,
    /// Matrix file.
    #[arg(long)]
    path: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

fn need<T: Clone>(v: &Option<T>, flag: &str, family: &str) -> Result<T> {
    v.clone()
        .ok_or_else(|| anyhow!("--family {family} needs --{flag}"))
}

impl CodeArgs {
    fn spec(&self) -> Result<CodeSpec> {
        if let Some(s) = &self.spec {
            return Ok(s.clone());
        }
        let Some(f) = self.family.as_deref() else {
            bail!("give --spec or --family")
        };
        Ok(match f {
            "bch" => CodeSpec::Bch {
                n: need(&self.n, "n", f)?,
                delta: need(&self.delta, "delta", f)?,
            },
            "cyclic" => CodeSpec::Cyclic {
                n: need(&self.n, "n", f)?,
                g: need(&self.g, "g", f)?,
            },
            "circulant" => CodeSpec::Circulant {
                v: need(&self.v, "v", f)?,
                n: self.n,
            },
            "fourcirc" => CodeSpec::Fourcirc {
                a: need(&self.a, "a", f)?,
                b: need(&self.b, "b", f)?,
            },
            "bordered" => CodeSpec::Bordered {
                e: need(&self.e, "e", f)?,
                a: need(&self.a, "a", f)?,
                b: need(&self.b, "b", f)?,
            },
            "macdonald" => CodeSpec::Macdonald {
                k: need(&self.k, "k", f)?,
                u: need(&self.u, "u", f)?,
            },
            "repetition" => CodeSpec::Repetition {
                n: need(&self.n, "n", f)?,
            },
            "identity" => CodeSpec::Identity {
                n: need(&self.n, "n", f)?,
            },
            "dodecacode" => CodeSpec::Dodecacode,
            "matrix" => CodeSpec::Matrix {
                path: Some(need(&self.path, "path", f)?),
                rows: None,
            },
            other => bail!("unknown family {other:?}"),
        })
    }
}

#[derive(Args)]
struct AqeccArgs {
    /// Subcode of the nested pair.
    #[arg(long, requires = "outer")]
    inner: Option<CodeSpec>,
    #[arg(long, requires = "inner")]
    outer: Option<CodeSpec>,
    /// Use coset distances instead of the code distances.
    #[arg(long)]
    refined: bool,
    #[arg(long, conflicts_with_all = ["inner", "self_orthogonal", "cx"])]
    selfdual: Option<CodeSpec>,
    #[arg(long, conflicts_with_all = ["inner", "cx"])]
    self_orthogonal: Option<CodeSpec>,
    #[arg(long, requires = "cz", conflicts_with = "inner")]
    cx: Option<CodeSpec>,
    #[arg(long, requires = "cx")]
    cz: Option<CodeSpec>,
    #[arg(long, value_enum, default_value_t = DualArg::Hermitian)]
    dual: DualArg,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum DualArg {
    Hermitian,
    Euclidean,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SearchFamily {
    Cyclic,
    CirculantDel,
    FourcircDel,
    BorderedDel,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long, value_enum)]
    family: SearchFamily,
    #[arg(long)]
    n: Option<usize>,
    /// Generating vector of a circulant code.
    #[arg(long, alias = "seed-vector")]
    vector: Option<String>,
    #[arg(long)]
    a: Option<String>,
    #[arg(long)]
    b: Option<String>,
    #[arg(long)]
    e: Option<String>,
    /// Largest number of trailing rows to delete (default: all).
    #[arg(long)]
    max_del: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

/// Failure carrying its exit status.
struct Exit(u8, anyhow::Error);

fn classify(e: anyhow::Error) -> Exit {
    let infeasible = e.chain().any(|c| {
        matches!(
            c.downcast_ref::<SpectrumError>(),
            Some(SpectrumError::TooLarge { .. })
        ) || matches!(
            c.downcast_ref::<AqeccError>(),
            Some(AqeccError::Spectrum(SpectrumError::TooLarge { .. }))
        )
    });
    Exit(
        if infeasible {
            EXIT_INFEASIBLE
        } else {
            EXIT_BAD_INPUT
        },
        e,
    )
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_BAD_INPUT } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let budget = Budget::new(cli.cap);
    match run(cli.cmd, &budget) {
        Ok(code) => ExitCode::from(code),
        Err(Exit(code, e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(code)
        }
    }
}

fn run(cmd: Cmd, budget: &Budget) -> Result<u8, Exit> {
    match cmd {
        Cmd::Reproduce {
            table,
            rows,
            jobs,
            strict,
            format,
        } => reproduce(&table, rows, jobs, strict, format, budget),
        Cmd::Construct { code, out } => construct(&code, out, budget).map_err(classify),
        Cmd::Spectrum { code, dual } => spectrum(&code, dual, budget).map_err(classify),
        Cmd::Dual { code, out } => dual(&code, out).map_err(classify),
        Cmd::Aqecc(args) => aqecc(&args, budget).map_err(classify),
        Cmd::Search(args) => search(&args, budget).map_err(classify),
    }
}

fn emit(out: Option<PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(p) => std::fs::write(&p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// `d` as text: exact when enumerable, otherwise the designed bound of a cyclic code.
fn distance_text(built: &Built, c: &AdditiveCode, budget: &Budget) -> Result<String> {
    match spectra(c, budget) {
        Ok(s) => Ok(s.primal.min_weight().map_or("0".into(), |d| d.to_string())),
        Err(SpectrumError::TooLarge { .. }) => Ok(match built.cyclic() {
            Some(cb) => format!("d>={}", cb.bound),
            None => "d>=1".into(),
        }),
        Err(e) => Err(e.into()),
    }
}

#[derive(Serialize)]
struct ConstructJson {
    schema: &'static str,
    spec: CodeSpec,
    n: usize,
    l: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<usize>,
    d: String,
    self_dual: bool,
}

fn construct(args: &CodeArgs, out: Option<PathBuf>, budget: &Budget) -> Result<u8> {
    let spec = args.spec()?;
    let built = spec.build()?;
    let c = built.additive();
    let d = distance_text(&built, &c, budget)?;
    if let Some(p) = out {
        let m = Matrix {
            n: c.n(),
            rows: c.generators().to_vec(),
            comment: Some(spec.to_string()),
        };
        emit(Some(p), &format_matrix(&m))?;
    }
    let k = built.linear().map(|l| l.k());
    match args.format {
        Format::Json => {
            let j = ConstructJson {
                schema: aqecc::SCHEMA,
                spec,
                n: c.n(),
                l: c.dimension(),
                k,
                d,
                self_dual: c.is_self_dual(),
            };
            println!("{}", serde_json::to_string(&j)?);
        }
        _ => match k {
            Some(k) => println!("[{},{},{}]", c.n(), k, d),
            None => println!("({},2^{},{})", c.n(), c.dimension(), d),
        },
    }
    Ok(0)
}

fn spectrum(args: &CodeArgs, dual: bool, budget: &Budget) -> Result<u8> {
    let c = args.spec()?.build()?.additive();
    let s = spectra(&c, budget)?;
    let w = if dual { s.dual } else { s.primal };
    println!(
        "{}",
        serde_json::to_string(&EnumeratorJson::from_enumerator(&w))?
    );
    Ok(0)
}

fn dual(args: &CodeArgs, out: Option<PathBuf>) -> Result<u8> {
    let spec = args.spec()?;
    let c = spec.build()?.additive().trace_dual();
    let m = Matrix {
        n: c.n(),
        rows: c.generators().to_vec(),
        comment: Some(format!("trace dual of {spec}")),
    };
    emit(out, &format_matrix(&m))?;
    Ok(0)
}

fn nesting_context(e: AqeccError) -> anyhow::Error {
    match e {
        AqeccError::NotNested { witness } => {
            anyhow!(
                "inner code is not contained in outer code; witness {} lies outside",
                aqecc::io::pack(&witness)
            )
        }
        other => other.into(),
    }
}

fn aqecc(args: &AqeccArgs, budget: &Budget) -> Result<u8> {
    let params = if let (Some(i), Some(o)) = (&args.inner, &args.outer) {
        let (bi, bo) = (i.build()?, o.build()?);
        match (bi.cyclic(), bo.cyclic(), args.refined) {
            (Some(ci), Some(co), false) => {
                if !ci.code.is_subcode_of(&co.code) {
                    NestedPair::new(bi.additive(), bo.additive()).map_err(nesting_context)?;
                }
                from_nested_cyclic(&ci.code, &co.code, budget)?
            }
            _ => {
                let pair =
                    NestedPair::new(bi.additive(), bo.additive()).map_err(nesting_context)?;
                if args.refined {
                    from_nested_additive_refined(&pair, budget)?
                } else {
                    from_nested_additive(&pair, budget)?
                }
            }
        }
    } else if let Some(s) = &args.selfdual {
        from_selfdual(&s.build()?.additive(), budget)?
    } else if let Some(s) = &args.self_orthogonal {
        let b = s.build()?;
        let lin = b
            .linear()
            .ok_or_else(|| anyhow!("{s} is not a linear code"))?;
        from_self_orthogonal_linear(lin, budget)?
    } else if let (Some(x), Some(z)) = (&args.cx, &args.cz) {
        let (bx, bz) = (x.build()?, z.build()?);
        let lx = bx
            .linear()
            .ok_or_else(|| anyhow!("{x} is not a linear code"))?;
        let lz = bz
            .linear()
            .ok_or_else(|| anyhow!("{z} is not a linear code"))?;
        let kind = match args.dual {
            DualArg::Hermitian => DualKind::Hermitian,
            DualArg::Euclidean => DualKind::Euclidean,
        };
        css_linear(lx, lz, kind, budget).map_err(nesting_context)?
    } else {
        bail!("give --inner/--outer, --selfdual, --self-orthogonal or --cx/--cz");
    };
    print_params(&[params], args.format);
    Ok(0)
}

fn print_params(ps: &[AqeccParams], format: Format) {
    match format {
        Format::Json => {
            for p in ps {
                println!("{}", params_json(p));
            }
        }
        Format::Csv => {
            println!("{PARAMS_CSV_HEADER}");
            for p in ps {
                println!("{}", params_csv_row(p));
            }
        }
        Format::Text => {
            for p in ps {
                println!(
                    "{p} singleton={} {}",
                    p.singleton.as_str(),
                    p.provenance.construction.as_str()
                );
            }
        }
    }
}

fn reproduce(
    table: &str,
    rows: Option<RowRange>,
    jobs: usize,
    strict: bool,
    format: Format,
    budget: &Budget,
) -> Result<u8, Exit> {
    let tables: Vec<TableId> = if table == "all" {
        TableId::ALL.to_vec()
    } else {
        vec![table
            .parse()
            .map_err(|e: anyhow::Error| Exit(EXIT_BAD_INPUT, anyhow::anyhow!("{e}, or all")))?]
    };
    let rep = Reproducer::new(*budget);
    let mut all: Vec<RowReport> = Vec::new();
    for t in tables {
        all.extend(
            rep.run(t, rows, jobs)
                .map_err(|e| Exit(EXIT_BAD_INPUT, e))?,
        );
    }
    match format {
        Format::Text => {
            print!("{}", render_text(&all));
            let mut line = format!("{} rows:", all.len());
            for (s, c) in tally(&all) {
                let _ = write!(line, " {c} {s}");
            }
            println!("{line}");
        }
        Format::Json => println!("{}", reports_json(&all)),
        Format::Csv => print!("{}", reports_csv(&all)),
    }
    Ok(if all.iter().any(|r| r.status == Status::Fail) {
        EXIT_MISMATCH
    } else if strict && all.iter().any(|r| r.status == Status::Infeasible) {
        EXIT_INFEASIBLE
    } else {
        0
    })
}

#[derive(Serialize)]
struct SearchJson<'a> {
    schema: &'static str,
    family: &'static str,
    n: usize,
    partial: bool,
    evaluated: usize,
    skipped: usize,
    results: Vec<SearchHitJson<'a>>,
}

#[derive(Serialize)]
struct SearchHitJson<'a> {
    #[serde(skip_serializing_if = "Option::is_none")]
    source: Option<&'a str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    del: Option<usize>,
    pareto: bool,
    #[serde(flatten)]
    params: aqecc::output::ParamsJson<'a>,
}

struct Hit {
    source: Option<String>,
    del: Option<usize>,
    pareto: bool,
    params: AqeccParams,
}

/// Specs to search: the explicit vectors, or every code of that length in the fixtures.
fn deletion_specs(args: &SearchArgs) -> Result<Vec<CodeSpec>> {
    let explicit = match args.family {
        SearchFamily::CirculantDel => args
            .vector
            .clone()
            .map(|v| CodeSpec::Circulant { v, n: args.n }),
        SearchFamily::FourcircDel => match (&args.a, &args.b) {
            (Some(a), Some(b)) => Some(CodeSpec::Fourcirc {
                a: a.clone(),
                b: b.clone(),
            }),
            _ => None,
        },
        SearchFamily::BorderedDel => match (&args.e, &args.a, &args.b) {
            (Some(e), Some(a), Some(b)) => Some(CodeSpec::Bordered {
                e: e.clone(),
                a: a.clone(),
                b: b.clone(),
            }),
            _ => None,
        },
        SearchFamily::Cyclic => None,
    };
    if let Some(s) = explicit {
        return Ok(vec![s]);
    }
    let n = args
        .n
        .ok_or_else(|| anyhow!("give a generating vector or --n"))?;
    let table = match args.family {
        SearchFamily::CirculantDel => TableId::Circulant,
        SearchFamily::FourcircDel => TableId::Fourcirc,
        _ => TableId::Bordered,
    };
    let mut specs: Vec<CodeSpec> = Vec::new();
    for r in fixtures::deletion_rows(table)? {
        if r.n == n && !specs.contains(&r.spec) {
            specs.push(r.spec);
        }
    }
    if specs.is_empty() {
        bail!("no stored generating vector of length {n}; pass one explicitly");
    }
    Ok(specs)
}

fn search(args: &SearchArgs, budget: &Budget) -> Result<u8> {
    let (family, n, hits, evaluated, skipped) = if args.family == SearchFamily::Cyclic {
        let n = args.n.ok_or_else(|| anyhow!("--family cyclic needs --n"))?;
        let s = search_cyclic_pairs(n, budget)?;
        let hits = s
            .results
            .into_iter()
            .map(|p| Hit {
                source: None,
                del: None,
                pareto: true,
                params: p,
            })
            .collect();
        ("cyclic", n, hits, s.evaluated, s.skipped)
    } else {
        let mut hits: Vec<Hit> = Vec::new();
        let mut skipped = 0;
        let mut n = 0;
        for spec in deletion_specs(args)? {
            let c = spec.build()?.additive().with_provenance(spec.to_string());
            n = c.n();
            let max = args.max_del.unwrap_or(c.generators().len());
            let s = search_row_deletions(&c, max, budget)?;
            skipped += s.infeasible.len();
            hits.extend(s.results.into_iter().map(|(d, p)| Hit {
                source: Some(spec.to_string()),
                del: Some(d),
                pareto: false,
                params: p,
            }));
        }
        let all: Vec<AqeccParams> = hits.iter().map(|h| h.params.clone()).collect();
        let front: Vec<_> = pareto_front(&all).iter().map(AqeccParams::triple).collect();
        for h in &mut hits {
            h.pareto = front.contains(&h.params.triple());
        }
        hits.sort_by(|a, b| {
            let key = |h: &Hit| {
                (
                    std::cmp::Reverse(h.params.triple()),
                    h.source.clone(),
                    h.del,
                )
            };
            key(a).cmp(&key(b))
        });
        let name = match args.family {
            SearchFamily::CirculantDel => "circulant-del",
            SearchFamily::FourcircDel => "fourcirc-del",
            _ => "bordered-del",
        };
        let evaluated = hits.len();
        (name, n, hits, evaluated, skipped)
    };
    match args.format {
        Format::Csv => {
            println!("source,del,pareto,{PARAMS_CSV_HEADER}");
            for h in &hits {
                let src = h.source.as_deref().unwrap_or("");
                let src = if src.contains([',', '"']) {
                    format!("\"{}\"", src.replace('"', "\"\""))
                } else {
                    src.into()
                };
                let del = h.del.map(|d| d.to_string()).unwrap_or_default();
                println!("{src},{del},{},{}", h.pareto, params_csv_row(&h.params));
            }
            if skipped > 0 {
                println!("# partial: {skipped} candidates exceeded the enumeration cap");
            }
        }
        Format::Text => {
            for h in &hits {
                let mark = if h.pareto { "*" } else { " " };
                match h.del {
                    Some(d) => println!("{mark} {} del={d}", h.params),
                    None => println!("{mark} {} {}", h.params, h.params.provenance.outer),
                }
            }
            if skipped > 0 {
                println!("partial: {skipped} candidates exceeded the enumeration cap");
            }
        }
        Format::Json => {
            let j = SearchJson {
                schema: aqecc::SCHEMA,
                family,
                n,
                partial: skipped > 0,
                evaluated,
                skipped,
                results: hits
                    .iter()
                    .map(|h| SearchHitJson {
                        source: h.source.as_deref(),
                        del: h.del,
                        pareto: h.pareto,
                        params: aqecc::output::ParamsJson::new(&h.params),
                    })
                    .collect(),
            };
            println!("{}", serde_json::to_string_pretty(&j)?);
        }
    }
    Ok(0)
}
