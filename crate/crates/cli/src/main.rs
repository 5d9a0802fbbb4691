//! `jtlab`: Jordan types of linear forms on height-two complete intersections.
//!
//! Exit codes: 0 ok, 1 a realization check failed, 2 parse/shape/unknown id,
//! 3 partition does not match the given T, 4 not a CI Jordan type,
//! 5 quotient not Artinian, 70 internal inconsistency.

use std::collections::BTreeSet;
use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use jtlab::algebra::{annihilator, is_complete_intersection, quotient, GradedIdeal};
use jtlab::codes::{hook_code_direct, is_cijt, partition_to_branch_label};
use jtlab::hessians::{
    active_hessian_indices, nonvanishing_set, predicted_nonvanishing_set, predicted_rank_profile,
};
use jtlab::partition::{ci_hilbert_of, is_symmetric_jdt};
use jtlab::poly::parse_poly_list;
use jtlab::realize::{
    construct_ci, realize_all, verify_realization, LambdaSource, RealizationReport,
};
use jtlab::tables::{figure_table, jordan_table, FigureTable, IotaTable, JordanTable};
use jtlab::{BivariatePoly, Error, HilbertFunction, Partition};

#[derive(Parser)]
#[command(
    name = "jtlab",
    version,
    about = "Jordan types for graded complete intersections in k[x,y]"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Plain, global = true)]
    format: Format,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Cmd {
    /// All partitions with diagonal lengths T, e.g. "1,2,3^2,2,1".
    Enumerate {
        hilbert: String,
        #[arg(long)]
        cijt_only: bool,
    },
    /// Combinatorial and Hessian data of one partition.
    Classify {
        partition: String,
        /// Expected diagonal lengths.
        #[arg(long = "hilbert", short = 't')]
        hilbert: Option<String>,
    },
    /// Build a CI ideal with Jordan type P in the x direction and verify it.
    Realize {
        partition: Option<String>,
        /// Realize every CIJT partition of this T.
        #[arg(long, conflicts_with = "partition")]
        all: Option<String>,
        /// Seed for the free parameters; JTLAB_SEED, when set, takes precedence.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Use Λ_2 = 0.
        #[arg(long)]
        alpha_zero: bool,
    },
    /// Jordan type of a linear form on R/I.
    Jordan {
        /// Ideal generators separated by commas, or a dual generator F with --dual.
        ideal: String,
        #[arg(long, default_value = "x")]
        ell: String,
        /// Treat the argument as F in X,Y and use R/Ann F.
        #[arg(long)]
        dual: bool,
    },
    /// Reproduce a figure table: 2a-121, 2a-1221, 2a-12321, 3a:k, 9, 10.5:k, 11:k, 12:k.
    Table { id: String },
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::DiagonalMismatch { .. } => 3,
            Error::NotCijt(_) | Error::NotCijtWithDParts(_) => 4,
            Error::NotArtinian => 5,
            Error::InternalInconsistency(_) => 70,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        // a closed downstream pipe (e.g. `| head`) is not an error
        let code = if e.kind() == io::ErrorKind::BrokenPipe {
            0
        } else {
            74
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = io::stdout().lock();
    match run(cli, &mut out) {
        Ok(code) => ExitCode::from(code),
        Err(f) if f.code == 0 => ExitCode::SUCCESS,
        Err(f) => {
            let _ = out.flush();
            eprintln!("jtlab: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli, out: &mut impl Write) -> CliResult<u8> {
    let fmt = cli.format;
    match cli.cmd {
        Cmd::Enumerate { hilbert, cijt_only } => {
            let t: HilbertFunction = hilbert.parse()?;
            let table = jordan_table("enumerate", &t, cijt_only)?;
            write_jordan_table(out, &table, fmt)?;
        }
        Cmd::Classify { partition, hilbert } => {
            let p: Partition = partition.parse()?;
            if let Some(h) = hilbert {
                let t: HilbertFunction = h.parse()?;
                t.check_partition(&p)?;
            }
            write_classification(out, &classify(&p)?, fmt)?;
        }
        Cmd::Realize {
            partition,
            all,
            seed,
            alpha_zero,
        } => {
            let seed = match std::env::var("JTLAB_SEED") {
                Ok(v) => v.trim().parse().map_err(|_| Failure {
                    code: 2,
                    message: format!("JTLAB_SEED must be a non-negative integer, got {v:?}"),
                })?,
                Err(_) => seed,
            };
            let reports = match (partition, all) {
                (Some(p), None) => {
                    let p: Partition = p.parse()?;
                    let source = if alpha_zero {
                        LambdaSource::Zero
                    } else {
                        LambdaSource::Seed(seed)
                    };
                    vec![verify_realization(&construct_ci(&p, &source)?)]
                }
                (None, Some(t)) => {
                    let t: HilbertFunction = t.parse()?;
                    if alpha_zero {
                        jtlab::codes::enumerate_cijt(&t)?
                            .iter()
                            .map(|p| {
                                construct_ci(p, &LambdaSource::Zero).map(|r| verify_realization(&r))
                            })
                            .collect::<jtlab::Result<Vec<_>>>()?
                    } else {
                        realize_all(&t, seed)?.into_iter().map(|(_, r)| r).collect()
                    }
                }
                _ => {
                    return Err(Failure {
                        code: 2,
                        message: "give a partition or --all T".into(),
                    })
                }
            };
            write_reports(out, &reports, fmt)?;
            return Ok(if reports.iter().all(|r| r.all_passed()) {
                0
            } else {
                1
            });
        }
        Cmd::Jordan { ideal, ell, dual } => {
            let ell: BivariatePoly = ell.parse()?;
            let ideal = if dual {
                annihilator(&ideal.parse::<BivariatePoly>()?)?
            } else {
                GradedIdeal::new(parse_poly_list(&ideal)?)?
            };
            write_jordan_report(out, &jordan_report(&ideal, &ell)?, fmt)?;
        }
        Cmd::Table { id } => match figure_table(&id)? {
            FigureTable::Jordan(t) => write_jordan_table(out, &t, fmt)?,
            FigureTable::Iota(t) => write_iota_table(out, &t, fmt)?,
        },
    }
    Ok(0)
}

fn yn(b: bool) -> &'static str {
    if b {
        "Y"
    } else {
        "N"
    }
}

fn fmt_set(s: &BTreeSet<usize>) -> String {
    let v: Vec<String> = s.iter().map(|i| i.to_string()).collect();
    format!("{{{}}}", v.join(","))
}

fn csv_writer(out: &mut impl Write) -> csv::Writer<&mut dyn Write> {
    csv::Writer::from_writer(out as &mut dyn Write)
}

fn csv_err(e: csv::Error) -> Failure {
    match e.into_kind() {
        csv::ErrorKind::Io(io) => io.into(),
        other => Failure {
            code: 74,
            message: format!("{other:?}"),
        },
    }
}

fn json_line<T: Serialize>(out: &mut impl Write, v: &T) -> CliResult<()> {
    let s = serde_json::to_string_pretty(v).map_err(|e| Failure {
        code: 70,
        message: e.to_string(),
    })?;
    writeln!(out, "{s}")?;
    Ok(())
}

/// Pads each column to its widest cell.
fn write_aligned(out: &mut impl Write, rows: &[Vec<String>]) -> io::Result<()> {
    let ncols = rows.iter().map(|r| r.len()).max().unwrap_or(0);
    let widths: Vec<usize> = (0..ncols)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    for r in rows {
        let cells: Vec<String> = r
            .iter()
            .enumerate()
            .map(|(c, s)| format!("{s:<w$}", w = widths[c]))
            .collect();
        writeln!(out, "{}", cells.join("  ").trim_end())?;
    }
    Ok(())
}

fn jordan_table_cells(t: &JordanTable) -> Vec<Vec<String>> {
    let mut header = vec!["P".to_string(), "H(P)".into(), "b".into(), "h".into()];
    header.extend(t.orders.iter().map(|i| format!("rk{i}")));
    header.extend(["Sym".to_string(), "CIJT".into()]);
    let mut rows = vec![header];
    for r in &t.rows {
        let mut row = vec![
            r.partition.to_string(),
            r.hook_code.clone(),
            r.branch_label.clone(),
            r.subscripted_label.clone(),
        ];
        row.extend(r.rank_strings(t.orders.len()));
        row.extend([yn(r.symmetric).to_string(), yn(r.cijt).to_string()]);
        rows.push(row);
    }
    rows
}

fn write_jordan_table(out: &mut impl Write, t: &JordanTable, fmt: Format) -> CliResult<()> {
    match fmt {
        Format::Json => json_line(out, &FigureTable::Jordan(t.clone()))?,
        Format::Plain => {
            writeln!(out, "# {}  T=({})  rows={}", t.id, t.hilbert, t.rows.len())?;
            write_aligned(out, &jordan_table_cells(t))?;
        }
        Format::Csv => {
            let mut w = csv_writer(out);
            for row in jordan_table_cells(t) {
                w.write_record(&row).map_err(csv_err)?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

fn write_iota_table(out: &mut impl Write, t: &IotaTable, fmt: Format) -> CliResult<()> {
    let mut rows = vec![vec!["P".to_string(), "iota(P)".to_string()]];
    rows.extend(
        t.rows
            .iter()
            .map(|r| vec![r.partition.to_string(), r.image.to_string()]),
    );
    match fmt {
        Format::Json => json_line(out, &FigureTable::Iota(t.clone()))?,
        Format::Plain => {
            writeln!(out, "# {}  T=({})  rows={}", t.id, t.hilbert, t.rows.len())?;
            write_aligned(out, &rows)?;
        }
        Format::Csv => {
            let mut w = csv_writer(out);
            for row in rows {
                w.write_record(&row).map_err(csv_err)?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

#[derive(Serialize, Deserialize)]
struct RankRecord {
    u: usize,
    s: usize,
    rank: usize,
}

#[derive(Serialize, Deserialize)]
struct Classification {
    partition: Partition,
    hilbert: HilbertFunction,
    d: usize,
    k: usize,
    j: usize,
    cijt: bool,
    branch_label: String,
    hook_code: String,
    subscripted_label: String,
    symmetric: bool,
    predicted_nonvanishing: Option<Vec<usize>>,
    predicted_ranks: Option<Vec<RankRecord>>,
}

fn classify(p: &Partition) -> jtlab::Result<Classification> {
    let t = ci_hilbert_of(p)?;
    let cijt = is_cijt(p)?;
    let hook = hook_code_direct(p)?;
    let (nv, ranks) = if cijt {
        let nv = predicted_nonvanishing_set(p)?.into_iter().collect();
        let prof = predicted_rank_profile(p)?;
        let ranks = prof
            .ranks
            .iter()
            .map(|(&(u, s), &rank)| RankRecord { u, s, rank })
            .collect();
        (Some(nv), Some(ranks))
    } else {
        (None, None)
    };
    Ok(Classification {
        partition: p.clone(),
        d: t.d(),
        k: t.k(),
        j: t.j(),
        hilbert: t.clone(),
        cijt,
        branch_label: partition_to_branch_label(p)?.to_string(),
        hook_code: hook.traditional_string(),
        subscripted_label: hook.subscripted_string(),
        symmetric: is_symmetric_jdt(p, &t)?,
        predicted_nonvanishing: nv,
        predicted_ranks: ranks,
    })
}

fn classification_fields(c: &Classification) -> Vec<(String, String)> {
    let opt = |v: &Option<String>| v.clone().unwrap_or_else(|| "-".into());
    let nv = c
        .predicted_nonvanishing
        .as_ref()
        .map(|v| fmt_set(&v.iter().copied().collect()));
    let ranks = c.predicted_ranks.as_ref().map(|rs| {
        rs.iter()
            .map(|r| format!("({},{}):{}", r.u, r.s, r.rank))
            .collect::<Vec<_>>()
            .join(" ")
    });
    vec![
        ("partition".into(), c.partition.to_string()),
        ("hilbert".into(), c.hilbert.to_string()),
        ("d".into(), c.d.to_string()),
        ("k".into(), c.k.to_string()),
        ("j".into(), c.j.to_string()),
        ("cijt".into(), yn(c.cijt).into()),
        ("branch_label".into(), c.branch_label.clone()),
        ("hook_code".into(), c.hook_code.clone()),
        ("subscripted_label".into(), c.subscripted_label.clone()),
        ("symmetric".into(), yn(c.symmetric).into()),
        ("predicted_nonvanishing".into(), opt(&nv)),
        ("predicted_ranks".into(), opt(&ranks)),
    ]
}

fn write_fields(out: &mut impl Write, fields: Vec<(String, String)>, fmt: Format) -> CliResult<()> {
    match fmt {
        Format::Plain => {
            let rows: Vec<Vec<String>> = fields
                .into_iter()
                .map(|(k, v)| vec![format!("{k}:"), v])
                .collect();
            write_aligned(out, &rows)?;
        }
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["field", "value"]).map_err(csv_err)?;
            for (k, v) in fields {
                w.write_record([k, v]).map_err(csv_err)?;
            }
            w.flush()?;
        }
        Format::Json => unreachable!("json is written from the typed record"),
    }
    Ok(())
}

fn write_classification(out: &mut impl Write, c: &Classification, fmt: Format) -> CliResult<()> {
    match fmt {
        Format::Json => json_line(out, c),
        _ => write_fields(out, classification_fields(c), fmt),
    }
}

fn write_reports(
    out: &mut impl Write,
    reports: &[RealizationReport],
    fmt: Format,
) -> CliResult<()> {
    match fmt {
        Format::Json => json_line(out, &reports)?,
        Format::Plain => {
            for r in reports {
                writeln!(out, "P = {}", r.partition)?;
                writeln!(out, "I = ({})", r.generators.join(", "))?;
                let mut rows = Vec::new();
                for c in &r.checks {
                    let mut row = vec![
                        c.name.clone(),
                        if c.passed {
                            "pass".into()
                        } else {
                            "FAIL".into()
                        },
                    ];
                    if !c.passed {
                        row.push(format!("expected {} observed {}", c.expected, c.observed));
                    }
                    rows.push(row);
                }
                write_aligned(out, &rows)?;
            }
            let passed = reports.iter().filter(|r| r.all_passed()).count();
            writeln!(out, "{passed}/{} pass", reports.len())?;
        }
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record([
                "partition",
                "generators",
                "check",
                "passed",
                "expected",
                "observed",
            ])
            .map_err(csv_err)?;
            for r in reports {
                for c in &r.checks {
                    w.write_record([
                        r.partition.to_string(),
                        r.generators.join(", "),
                        c.name.clone(),
                        c.passed.to_string(),
                        c.expected.clone(),
                        c.observed.clone(),
                    ])
                    .map_err(csv_err)?;
                }
            }
            w.flush()?;
        }
    }
    Ok(())
}

#[derive(Serialize, Deserialize)]
struct StringRecord {
    start: usize,
    length: usize,
    multiplicity: usize,
}

#[derive(Serialize, Deserialize)]
struct JordanReport {
    ideal: Vec<String>,
    ell: String,
    hilbert: Vec<usize>,
    jordan_type: Partition,
    jordan_degree_type: Vec<StringRecord>,
    /// Present when the Hilbert function has CI shape.
    nonvanishing: Option<Vec<usize>>,
    hessian_ranks: Option<Vec<RankRecord>>,
}

fn jordan_report(ideal: &GradedIdeal, ell: &BivariatePoly) -> jtlab::Result<JordanReport> {
    let alg = quotient(ideal)?;
    let jt = alg.jordan_type(ell)?;
    let jdt = alg.jordan_degree_type(ell)?;
    // Hessian data only makes sense for a CI (hence Gorenstein) quotient
    let ci = is_complete_intersection(ideal)?.0;
    let (nonvanishing, ranks) = match HilbertFunction::new(alg.hilbert()) {
        Ok(t) if ci => {
            let j = t.j();
            let nv = nonvanishing_set(&alg, ell)?.into_iter().collect();
            let ranks = active_hessian_indices(&t)
                .into_iter()
                .map(|i| {
                    Ok(RankRecord {
                        u: i,
                        s: j - i,
                        rank: alg.rank_mult_power(ell, i as u32, (j - i) as u32)?,
                    })
                })
                .collect::<jtlab::Result<Vec<_>>>()?;
            (Some(nv), Some(ranks))
        }
        _ => (None, None),
    };
    Ok(JordanReport {
        ideal: ideal.generators().iter().map(|g| g.to_string()).collect(),
        ell: ell.to_string(),
        hilbert: alg.hilbert(),
        jordan_type: jt,
        jordan_degree_type: jdt
            .entries()
            .into_iter()
            .map(|(start, length, multiplicity)| StringRecord {
                start,
                length,
                multiplicity,
            })
            .collect(),
        nonvanishing,
        hessian_ranks: ranks,
    })
}

fn write_jordan_report(out: &mut impl Write, r: &JordanReport, fmt: Format) -> CliResult<()> {
    if let Format::Json = fmt {
        return json_line(out, r);
    }
    let strings: Vec<String> = r
        .jordan_degree_type
        .iter()
        .map(|s| format!("({},{})^{}", s.start, s.length, s.multiplicity))
        .collect();
    let nv = r
        .nonvanishing
        .as_ref()
        .map(|v| fmt_set(&v.iter().copied().collect()));
    let ranks = r.hessian_ranks.as_ref().map(|rs| {
        rs.iter()
            .map(|x| format!("({},{}):{}", x.u, x.s, x.rank))
            .collect::<Vec<_>>()
            .join(" ")
    });
    let hilbert: Vec<String> = r.hilbert.iter().map(|v| v.to_string()).collect();
    let fields = vec![
        ("ideal".into(), r.ideal.join(", ")),
        ("ell".into(), r.ell.clone()),
        ("hilbert".into(), hilbert.join(",")),
        ("jordan_type".into(), r.jordan_type.to_string()),
        ("jordan_degree_type".into(), strings.join(" ")),
        ("nonvanishing".into(), nv.unwrap_or_else(|| "-".into())),
        ("hessian_ranks".into(), ranks.unwrap_or_else(|| "-".into())),
    ];
    write_fields(out, fields, fmt)
}
