//! `apery`: compute and cross-check invariants of numerical semigroups.
//!
//! Exit status is 0 on success, 1 when a verification finds a mismatch and
//! 2 for invalid parameters or usage.

mod commands;
mod output;

use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use apery_core::verify::{DRange, GeoGrid, VerifyOptions};
use clap::{Parser, Subcommand};

use commands::{parse_gens, parse_range, CoreItem, Gamma4Item, GeoItem};
use output::{Format, Report};

#[derive(Parser)]
#[command(name = "apery", version, about = "Apéry sets, Apéry tables and tangent cones of numerical semigroups")]
struct Cli {
    /// Output format; csv is available for tables only.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Write output to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Any numerical semigroup given by generators.
    Core {
        /// Comma-separated generators, e.g. 7,15,24,34.
        #[arg(long, value_parser = parse_gens)]
        // full path so clap takes one list instead of a repeated flag
        gens: std::vec::Vec<i64>,
        #[arg(value_enum)]
        what: CoreItem,
        /// Element to take the Apéry set with respect to (default: multiplicity).
        #[arg(long)]
        wrt: Option<i64>,
        /// Element to factor.
        #[arg(long)]
        x: Option<i64>,
        /// Search bound for Betti degrees.
        #[arg(long)]
        bound: Option<i64>,
    },
    /// The semigroup ⟨a, 2a+d, 3a+3d, 4a+6d⟩.
    Gamma4 {
        #[arg(long)]
        a: i64,
        #[arg(long)]
        d: i64,
        /// Cross-check every closed form against the oracle engine.
        #[arg(long)]
        verify: bool,
        /// List pseudo-Frobenius numbers as the maximal Apéry elements ω(i).
        #[arg(long)]
        apery_convention: bool,
        #[arg(value_enum)]
        what: Gamma4Item,
    },
    /// The semigroup ⟨a, ha+d, ha+rd, ..., ha+rⁿd⟩.
    Geo {
        #[arg(long)]
        a: i64,
        #[arg(long)]
        d: i64,
        #[arg(long)]
        r: i64,
        #[arg(long)]
        h: i64,
        #[arg(long)]
        n: i64,
        #[arg(long)]
        verify: bool,
        #[arg(value_enum)]
        what: GeoItem,
    },
    /// Verify a family over a parameter grid.
    Sweep {
        #[command(subcommand)]
        family: SweepFamily,
    },
}

#[derive(Subcommand)]
enum SweepFamily {
    Gamma4 {
        /// Inclusive range, e.g. 7..50.
        #[arg(long, value_parser = parse_range)]
        a: RangeInclusive<i64>,
        #[arg(long, value_parser = parse_range)]
        d: RangeInclusive<i64>,
        /// Also check the binomial generators and resolutions.
        #[arg(long)]
        ideal: bool,
        /// Also evaluate Gorenstein criteria for the tangent cone.
        #[arg(long)]
        gorenstein: bool,
    },
    Geo {
        #[arg(long, value_parser = parse_range)]
        a: RangeInclusive<i64>,
        #[arg(long, value_parser = parse_range)]
        r: RangeInclusive<i64>,
        #[arg(long, value_parser = parse_range)]
        h: RangeInclusive<i64>,
        #[arg(long, value_parser = parse_range)]
        n: RangeInclusive<i64>,
        /// `auto` (the 20 smallest admissible values) or a range.
        #[arg(long, default_value = "auto")]
        d: String,
    },
}

fn run(cli: &Cli) -> Result<Report, apery_core::Error> {
    Ok(match &cli.command {
        Command::Core { gens, what, wrt, x, bound } => commands::core(&commands::CoreArgs {
            gens: gens.clone(),
            item: *what,
            wrt: *wrt,
            x: *x,
            bound: *bound,
        })?,
        Command::Gamma4 { a, d, verify, apery_convention, what } => commands::gamma4(&commands::Gamma4Args {
            a: *a,
            d: *d,
            item: *what,
            verify: *verify,
            apery_convention: *apery_convention,
        })?,
        Command::Geo { a, d, r, h, n, verify, what } => commands::geo(&commands::GeoArgs {
            a: *a,
            d: *d,
            r: *r,
            h: *h,
            n: *n,
            item: *what,
            verify: *verify,
        })?,
        Command::Sweep { family } => match family {
            SweepFamily::Gamma4 { a, d, ideal, gorenstein } => commands::sweep_gamma4(
                a.clone(),
                d.clone(),
                VerifyOptions {
                    ideal: *ideal,
                    gorenstein: *gorenstein,
                },
            ),
            SweepFamily::Geo { a, r, h, n, d } => {
                let d = if d == "auto" {
                    DRange::Auto(20)
                } else {
                    DRange::Explicit(parse_range(d).map_err(apery_core::Error::Parameter)?)
                };
                commands::sweep_geo(GeoGrid {
                    a: a.clone(),
                    r: r.clone(),
                    h: h.clone(),
                    n: n.clone(),
                    d,
                })
            }
        },
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let rendered = match report.render(cli.format) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &rendered),
        None => {
            use std::io::Write;
            std::io::stdout().write_all(rendered.as_bytes())
        }
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    if report.has_failures() {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}
