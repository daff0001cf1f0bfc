use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use delpezzo_core::chow::parse_class;
use delpezzo_core::cohomology::{classify_line_bundle, cohom};
use delpezzo_core::figure::{self, Bounds};
use delpezzo_core::json::{to_pretty, Big};
use delpezzo_core::report::{render_table, Format, Table, TableName};
use delpezzo_core::variety::Variety;
use delpezzo_core::verify::{verify, Scope};

#[derive(Parser)]
#[command(
    name = "delpezzo",
    version,
    about = "Cohomology, Chow rings and rank-2 aCM bundles on F and P2xP2"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// json, csv, markdown, svg or ascii (svg and ascii for regions only)
    #[arg(long, global = true)]
    format: Option<Format>,

    /// Write output to FILE instead of stdout
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Cohomology dimensions of O(a1, a2), optionally over a range of twists
    #[command(allow_negative_numbers = true)]
    Cohom {
        variety: Variety,
        a1: i64,
        a2: i64,
        /// First twist t of O(a1+t, a2+t)
        #[arg(long, requires = "to")]
        from: Option<i64>,
        /// Last twist
        #[arg(long, requires = "from")]
        to: Option<i64>,
    },
    /// aCM, initialized and Ulrich flags of O(a1, a2)
    #[command(allow_negative_numbers = true)]
    LineBundle { variety: Variety, a1: i64, a2: i64 },
    /// Normal form of a polynomial in the Chow ring, e.g. "(h1+h2)^3"
    #[command(allow_negative_numbers = true)]
    Chow {
        variety: Variety,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Plot of the cohomology regions on F
    #[command(allow_negative_numbers = true)]
    Regions {
        #[arg(long, default_value_t = -9)]
        min: i64,
        #[arg(long, default_value_t = 9)]
        max: i64,
    },
    /// One of the classification tables
    Table { name: TableName },
    /// Run the consistency checks
    Verify {
        #[arg(long, default_value = "all")]
        scope: Scope,
    },
}

enum Failure {
    Usage(String),
    Verify(String),
    Io(std::io::Error),
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn only(format: Format, allowed: &[Format], command: &str) -> Result<Format, Failure> {
    if allowed.contains(&format) {
        Ok(format)
    } else {
        Err(usage(format!("format `{format}` is not available for `{command}`")))
    }
}

fn render(table: &Table, format: Format) -> String {
    match format {
        Format::Csv => table.to_csv(),
        _ => table.to_markdown(),
    }
}

fn cohom_cmd(v: Variety, a1: i64, a2: i64, range: Option<(i64, i64)>, format: Format) -> Result<String, Failure> {
    let format = only(format, &[Format::Json, Format::Csv, Format::Markdown], "cohom")?;
    let twists = match range {
        Some((lo, hi)) if lo > hi => return Err(usage(format!("empty twist range {lo}..{hi}"))),
        Some((lo, hi)) => lo..=hi,
        None => 0..=0,
    };
    let tables: Vec<_> = twists.clone().map(|t| (t, cohom(v, a1 + t, a2 + t))).collect();
    if format == Format::Json {
        return Ok(match range {
            None => to_pretty(&tables[0].1),
            Some(_) => {
                let rows: Vec<_> = tables.iter().map(|(t, c)| json!({ "twist": t, "table": c })).collect();
                to_pretty(&rows)
            }
        });
    }
    let mut headers = vec!["twist".to_string(), "bundle".to_string()];
    headers.extend((0..=v.dimension()).map(|i| format!("h{i}")));
    let headers: Vec<&str> = headers.iter().map(String::as_str).collect();
    let mut table = Table::new(&headers);
    for (t, c) in &tables {
        let mut row = vec![t.to_string(), format!("({},{})", c.bundle.0, c.bundle.1)];
        row.extend(c.h.iter().map(|x| x.to_string()));
        table.rows.push(row);
    }
    Ok(render(&table, format))
}

fn line_bundle_cmd(v: Variety, a1: i64, a2: i64, format: Format) -> Result<String, Failure> {
    let format = only(format, &[Format::Json, Format::Csv, Format::Markdown], "line-bundle")?;
    let r = classify_line_bundle(v, a1, a2);
    if format == Format::Json {
        return Ok(to_pretty(&r));
    }
    let mut table = Table::new(&[
        "variety",
        "bundle",
        "h0",
        "aCM",
        "initial twist",
        "initialized",
        "Ulrich",
    ]);
    table.rows.push(vec![
        v.to_string(),
        format!("({a1},{a2})"),
        r.h0.to_string(),
        r.is_acm.to_string(),
        r.initial_twist.to_string(),
        r.is_initialized.to_string(),
        r.is_ulrich.to_string(),
    ]);
    Ok(render(&table, format))
}

fn chow_cmd(v: Variety, expr: &str, format: Format) -> Result<String, Failure> {
    let format = only(format, &[Format::Json, Format::Csv, Format::Markdown], "chow")?;
    let class = parse_class(expr, v).map_err(|e| usage(e.to_string()))?;
    let degree = class.degree().ok();
    if format == Format::Json {
        let degree = degree.as_ref().map(Big);
        return Ok(to_pretty(
            &json!({ "input": expr, "class": class, "normal_form": class.to_string(), "degree": degree }),
        ));
    }
    let mut table = Table::new(&["variety", "input", "normal form", "degree"]);
    table.rows.push(vec![
        v.to_string(),
        expr.to_string(),
        class.to_string(),
        degree.map_or_else(|| "-".into(), |d| d.to_string()),
    ]);
    Ok(render(&table, format))
}

fn run(cli: &Cli) -> Result<String, Failure> {
    match &cli.command {
        Command::Cohom {
            variety,
            a1,
            a2,
            from,
            to,
        } => {
            let range = from.zip(*to);
            cohom_cmd(*variety, *a1, *a2, range, cli.format.unwrap_or(Format::Json))
        }
        Command::LineBundle { variety, a1, a2 } => {
            line_bundle_cmd(*variety, *a1, *a2, cli.format.unwrap_or(Format::Json))
        }
        Command::Chow { variety, expr } => chow_cmd(*variety, expr, cli.format.unwrap_or(Format::Json)),
        Command::Regions { min, max } => {
            let b = Bounds::new(*min, *max).map_err(|e| usage(e.to_string()))?;
            match only(
                cli.format.unwrap_or(Format::Svg),
                &[Format::Svg, Format::Ascii],
                "regions",
            )? {
                Format::Svg => Ok(figure::svg(b)),
                _ => Ok(figure::ascii(b)),
            }
        }
        Command::Table { name } => {
            let format = only(
                cli.format.unwrap_or(Format::Markdown),
                &[Format::Json, Format::Csv, Format::Markdown],
                "table",
            )?;
            render_table(*name, format).map_err(|e| usage(e.to_string()))
        }
        Command::Verify { scope } => {
            let report = verify(*scope);
            let text = match cli.format {
                None => report.to_string(),
                Some(Format::Json) => to_pretty(&report),
                Some(f) => return Err(usage(format!("format `{f}` is not available for `verify`"))),
            };
            if report.overall {
                Ok(text)
            } else {
                emit(cli, &text).map_err(Failure::Io)?;
                Err(Failure::Verify("verification failed".into()))
            }
        }
    }
}

fn emit(cli: &Cli, text: &str) -> std::io::Result<()> {
    match &cli.out {
        Some(path) => std::fs::write(path, text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli).and_then(|text| emit(&cli, &text).map_err(Failure::Io)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verify(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
