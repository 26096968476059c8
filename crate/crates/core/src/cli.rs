//! Command-line surface of the `hexid` binary.
//!
//! [`run`] takes the argument vector and returns what the process should
//! print and its exit status, so every command is testable in-process.

use std::fmt::Write;

use clap::{Parser, Subcommand, ValueEnum};

use crate::claims::run_claims;
use crate::code::{CodeParams, WithoutSeparator};
use crate::density::{audit_any, to_decimal};
use crate::lattice::distance;
use crate::render::{render_svg, render_text};
use crate::verifier::{verify, VerificationReport, MAX_COUNTEREXAMPLES};
use crate::window::Window;

pub const MAX_CLI_RADIUS: i64 = 64;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "hexid", version, about = "Identifying codes on the hexagonal grid")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Exhaustively check the identifying property over one period.
    Verify {
        #[arg(long, value_parser = clap::value_parser!(i64).range(1..=MAX_CLI_RADIUS))]
        r: i64,
        /// Drop the separator rows (negative control; should fail).
        #[arg(long)]
        drop_cdprime: bool,
    },
    /// Tab-separated table of exact densities.
    Density {
        #[arg(long, allow_negative_numbers = true)]
        r_min: i64,
        #[arg(long, allow_negative_numbers = true)]
        r_max: i64,
        /// Append published comparison values.
        #[arg(long)]
        with_literature: bool,
    },
    /// Draw the code inside a window.
    Render {
        #[arg(long, value_parser = clap::value_parser!(i64).range(1..=MAX_CLI_RADIUS))]
        r: i64,
        #[arg(long, allow_negative_numbers = true)]
        x0: i64,
        #[arg(long, allow_negative_numbers = true)]
        x1: i64,
        #[arg(long, allow_negative_numbers = true)]
        y0: i64,
        #[arg(long, allow_negative_numbers = true)]
        y1: i64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run the distance-lemma and codeword-spacing suites.
    Claims {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max_k: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max_r: u64,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Svg,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn usage(msg: impl Into<String>) -> Self {
        Outcome { stdout: String::new(), stderr: msg.into(), code: EXIT_USAGE }
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { stdout: String::new(), stderr: text, code: EXIT_USAGE }
            } else {
                Outcome { stdout: text, stderr: String::new(), code: EXIT_OK }
            };
        }
    };
    match cli.command {
        Command::Verify { r, drop_cdprime } => cmd_verify(r, drop_cdprime),
        Command::Density { r_min, r_max, with_literature } => cmd_density(r_min, r_max, with_literature),
        Command::Render { r, x0, x1, y0, y1, format } => cmd_render(r, x0, x1, y0, y1, format),
        Command::Claims { max_k, max_r } => cmd_claims(max_k, max_r),
    }
}

pub fn format_report(report: &VerificationReport) -> String {
    let mut out = format!(
        "r={} valid={} vertices={} pairs={}\n",
        report.r, report.valid, report.vertices_checked, report.pairs_checked
    );
    let uncovered = report.coverage_failures.iter().map(|v| format!("uncovered {v}"));
    let confused = report.confusion_pairs.iter().map(|(u, v)| format!("confused {u} {v}"));
    for line in uncovered.chain(confused).take(MAX_COUNTEREXAMPLES) {
        out.push_str(&line);
        out.push('\n');
    }
    out
}

pub fn cmd_verify(r: i64, drop_separator: bool) -> Outcome {
    let p = match CodeParams::new(r) {
        Ok(p) => p,
        Err(e) => return Outcome::usage(format!("error: {e}\n")),
    };
    let mut stderr = String::new();
    if r == 1 {
        stderr.push_str("note: r=1 is below the radii the construction is designed for\n");
    }
    let report = if drop_separator { verify(&WithoutSeparator(&p)) } else { verify(&p) };
    let code = if report.valid { EXIT_OK } else { EXIT_VIOLATION };
    Outcome { stdout: format_report(&report), stderr, code }
}

/// Published new upper bounds and previously best known upper bounds.
fn literature(r: i64) -> (&'static str, &'static str) {
    match r {
        2 => ("", "4/19"),
        3 => ("", "1/6"),
        15 => ("1227/22528", "1/18"),
        16 => ("83/1632", "1/18"),
        17 => ("", "1/22"),
        18 => ("31/684", "1/22"),
        19 => ("387/8960", "1/22"),
        20 => ("103/2520", "1/22"),
        21 => ("", "1/26"),
        _ => ("", ""),
    }
}

pub fn density_row(r: u64, with_literature: bool) -> String {
    let a = audit_any(r).expect("radius is positive");
    let mut note = a.notes.clone();
    if r == 1 {
        note =
            if note.is_empty() { "r=1 below design range".into() } else { format!("r=1 below design range; {note}") };
    }
    let mut row = format!(
        "{}\t{}/{}\t{}\t{}\t{}",
        r,
        a.exact.numer(),
        a.exact.denom(),
        to_decimal(&a.exact, 4),
        if a.agrees_theorem { "yes" } else { "no" },
        note
    );
    if with_literature {
        let (table, previous) = literature(r as i64);
        write!(row, "\t{table}\t{previous}").unwrap();
    }
    row
}

pub fn cmd_density(r_min: i64, r_max: i64, with_literature: bool) -> Outcome {
    if r_min < 1 || r_max < r_min || r_max > MAX_CLI_RADIUS {
        return Outcome::usage(format!("error: need 1 <= r-min <= r-max <= {MAX_CLI_RADIUS}, got {r_min}..={r_max}\n"));
    }
    let mut stdout = String::new();
    for r in r_min..=r_max {
        stdout.push_str(&density_row(r as u64, with_literature));
        stdout.push('\n');
    }
    Outcome { stdout, stderr: String::new(), code: EXIT_OK }
}

pub fn cmd_render(r: i64, x0: i64, x1: i64, y0: i64, y1: i64, format: Format) -> Outcome {
    let rendered = CodeParams::new(r).and_then(|p| {
        let w = Window::new(x0, x1, y0, y1)?;
        match format {
            Format::Text => render_text(&p, &w),
            Format::Svg => render_svg(&p, &w),
        }
    });
    match rendered {
        Ok(stdout) => Outcome { stdout, stderr: String::new(), code: EXIT_OK },
        Err(e) => Outcome::usage(format!("error: {e}\n")),
    }
}

pub fn cmd_claims(max_k: u64, max_r: u64) -> Outcome {
    let results = run_claims(max_k, max_r, &distance);
    let mut stdout = String::new();
    for res in &results {
        stdout.push_str(&res.line());
        stdout.push('\n');
    }
    let code = if results.iter().all(|r| r.tally.passed()) { EXIT_OK } else { EXIT_VIOLATION };
    Outcome { stdout, stderr: String::new(), code }
}
