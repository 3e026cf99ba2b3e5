//! Job files in, reports out. A job declares a ring, named ideals, matrices
//! and polynomials, and one command; [`run`] executes it and returns a JSON
//! report, a human summary and the process exit code.

mod commands;
pub mod job;
mod report;

pub use job::{parse_job, Command, FieldSpec, JobError, JobSpec};
pub use report::{exit, RunReport};

/// Executes a parsed job. Algebra failures still yield a report: the
/// sections finished before the failure, plus the error and its exit code.
pub fn run(job: &JobSpec) -> RunReport {
    let mut sections = report::Sections::default();
    let outcome = commands::dispatch(job, &mut sections);
    RunReport::assemble(job.to_string(), job.command.name(), sections, outcome.err())
}

/// Parses and runs job text.
pub fn run_text(text: &str) -> Result<RunReport, JobError> {
    Ok(run(&parse_job(text)?))
}
