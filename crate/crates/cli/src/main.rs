use std::io::Read;
use std::process::ExitCode;

use clap::Parser;
use evoalg_cli::{exit, parse_job, run};

/// Runs one evoalg job. Options given here override the job's own `cmd`
/// flags.
#[derive(Parser)]
#[command(
    name = "evoalg",
    version,
    after_help = "Exit codes: 0 done, 2 parse error, 3 budget exceeded, 4 precondition violated."
)]
struct Args {
    /// Job file, or `-` for standard input.
    #[arg(required_unless_present = "expr", conflicts_with = "expr")]
    job: Option<String>,
    /// Job text given inline.
    #[arg(short = 'e', long = "expr", value_name = "JOB")]
    expr: Option<String>,
    /// grevlex or lex.
    #[arg(long)]
    order: Option<String>,
    /// saturation, monomial or fitting.
    #[arg(long)]
    strategy: Option<String>,
    /// Saturating element.
    #[arg(long, value_name = "POLY")]
    h: Option<String>,
    /// Reduction-step budget.
    #[arg(long)]
    budget: Option<String>,
    #[arg(long)]
    seed: Option<String>,
    #[arg(long)]
    p: Option<String>,
    #[arg(long)]
    d: Option<String>,
    /// GF(p) or QQ.
    #[arg(long)]
    field: Option<String>,
    /// Comma-separated curve exponents.
    #[arg(long)]
    exponents: Option<String>,
    /// Write the JSON report here; `-` for standard output.
    #[arg(long, value_name = "PATH")]
    out: Option<String>,
}

impl Args {
    fn overrides(&self) -> String {
        let pairs = [
            ("order", &self.order),
            ("strategy", &self.strategy),
            ("h", &self.h),
            ("budget", &self.budget),
            ("seed", &self.seed),
            ("p", &self.p),
            ("d", &self.d),
            ("field", &self.field),
            ("exponents", &self.exponents),
            ("out", &self.out),
        ];
        pairs
            .iter()
            .filter_map(|(k, v)| v.as_ref().map(|v| format!("--{k} {v}")))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

fn read_job(args: &Args) -> Result<String, String> {
    if let Some(text) = &args.expr {
        return Ok(text.clone());
    }
    match args.job.as_deref() {
        Some("-") => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| format!("cannot read standard input: {e}"))?;
            Ok(s)
        }
        Some(path) => std::fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}")),
        None => unreachable!("clap requires a job"),
    }
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() {
                exit::PARSE as u8
            } else {
                exit::DONE as u8
            });
        }
    };
    let text = match read_job(&args) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("{e}");
            return ExitCode::from(exit::IO as u8);
        }
    };
    let mut job = match parse_job(&text) {
        Ok(j) => j,
        Err(e) => {
            eprintln!("parse error at {e}");
            return ExitCode::from(exit::PARSE as u8);
        }
    };
    let overrides = args.overrides();
    if !overrides.is_empty() {
        if let Err(e) = job.apply_flags(&overrides) {
            eprintln!("bad option: {}", e.message);
            return ExitCode::from(exit::PARSE as u8);
        }
    }
    let report = run(&job);
    let json_to_stdout = job.flags.out.as_deref() == Some("-");
    for line in &report.summary {
        if json_to_stdout {
            eprintln!("{line}");
        } else {
            println!("{line}");
        }
    }
    match job.flags.out.as_deref() {
        Some("-") => println!("{}", report.to_pretty_json()),
        Some(path) => {
            if let Err(e) = std::fs::write(path, report.to_pretty_json() + "\n") {
                eprintln!("cannot write {path}: {e}");
                return ExitCode::from(exit::IO as u8);
            }
        }
        None => {}
    }
    ExitCode::from(report.exit_code as u8)
}
