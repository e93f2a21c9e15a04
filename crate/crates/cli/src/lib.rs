//! Command-line front end: evaluates spec documents and runs the
//! acceptance batteries.

pub mod resolve;
pub mod spec;
pub mod suites;
pub mod tasks;

use rayon::prelude::*;
use thiserror::Error;

use resolve::Env;
use spec::SpecDocument;

pub const DEFAULT_MAX_PRECISION: u32 = 64;

#[derive(Debug, Clone, Error)]
pub enum CliError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("line {line}: {msg}")]
    Resolve { line: usize, msg: String },
    /// A tail certificate could not be found; no value is reported.
    #[error("{0}")]
    Exhausted(String),
    #[error("{0}")]
    Invariant(String),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse { .. } | CliError::Usage(_) => 2,
            CliError::Resolve { .. } => 3,
            CliError::Exhausted(_) => 4,
            CliError::Invariant(_) => 5,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            CliError::Parse { .. } => "parse error",
            CliError::Usage(_) => "usage error",
            CliError::Resolve { .. } => "resolution error",
            CliError::Exhausted(_) => "precision exhausted",
            CliError::Invariant(_) => "invariant violation",
        }
    }
}

impl From<cgframe::Error> for CliError {
    fn from(e: cgframe::Error) -> Self {
        use cgframe::Error::*;
        match e {
            PrecisionExhausted { .. } => CliError::Exhausted(e.to_string()),
            // argument problems that only surface at evaluation time
            SpaceMismatch { .. } | IndexOutOfRange { .. } | UnsupportedField(_) | Invalid(_) => CliError::Resolve {
                line: 0,
                msg: e.to_string(),
            },
            NegativeSqrt { .. } | SpectralViolation(_) | InvariantViolation(_) => CliError::Invariant(e.to_string()),
        }
    }
}

#[derive(Clone, Debug)]
pub struct EvalOptions {
    /// 1-based index of the single task to run.
    pub task: Option<usize>,
    /// Overrides every task's precision.
    pub precision: Option<u32>,
    pub max_precision: u32,
    /// Worker threads; `None` lets the pool decide.
    pub threads: Option<usize>,
}

impl Default for EvalOptions {
    fn default() -> Self {
        EvalOptions {
            task: None,
            precision: None,
            max_precision: DEFAULT_MAX_PRECISION,
            threads: None,
        }
    }
}

/// The text of an evaluation and the first task failure in document order.
pub struct Report {
    pub text: String,
    pub failure: Option<CliError>,
}

impl Report {
    pub fn exit_code(&self) -> i32 {
        self.failure.as_ref().map_or(0, CliError::exit_code)
    }
}

/// Parses, resolves and runs a document. Parse and resolution errors abort
/// before any task runs; task failures are reported in place. Only the
/// precisions of the tasks that run are checked against the maximum.
pub fn eval(text: &str, opts: &EvalOptions) -> Result<Report, CliError> {
    let doc = SpecDocument::parse(text)?;
    if let Some(p) = opts.precision.filter(|&p| p > opts.max_precision) {
        return Err(CliError::Usage(format!(
            "precision {p} exceeds the maximum {}",
            opts.max_precision
        )));
    }
    let env = Env::build(&doc)?;
    let selected: Vec<usize> = match opts.task {
        Some(k) if k == 0 || k > doc.tasks.len() => {
            return Err(CliError::Usage(format!(
                "no task {k}; the document has {} tasks",
                doc.tasks.len()
            )))
        }
        Some(k) => vec![k - 1],
        None => (0..doc.tasks.len()).collect(),
    };
    let mut jobs = Vec::new();
    for &i in &selected {
        let t = &doc.tasks[i];
        let n = opts.precision.or(t.precision).ok_or_else(|| CliError::Parse {
            line: t.line,
            msg: "task has no precision= and none was given on the command line".into(),
        })?;
        if n > opts.max_precision && opts.precision.is_none() {
            return Err(CliError::Parse {
                line: t.line,
                msg: format!("precision {n} exceeds the maximum {}", opts.max_precision),
            });
        }
        jobs.push((env.task(i + 1, t)?, n));
    }
    // collect keeps document order whatever order the tasks finish in
    let results: Vec<(String, Option<CliError>)> = with_pool(opts.threads, || {
        jobs.par_iter()
            .map(|(task, n)| {
                let outcome = tasks::run(task, *n);
                (tasks::format_report(task, *n, &outcome), outcome.err())
            })
            .collect()
    })?;
    let failure = results.iter().find_map(|(_, f)| f.clone());
    let text = results.into_iter().map(|(t, _)| t).collect();
    Ok(Report { text, failure })
}

fn with_pool<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T, CliError> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = threads {
        builder = builder.num_threads(n);
    }
    let pool = builder
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start worker threads: {e}")))?;
    Ok(pool.install(f))
}

/// Runs a named suite, one line per criterion. The report ends with a
/// summary line; the flag is true when every criterion passed.
pub fn run_suite(name: &str, threads: Option<usize>) -> Result<(String, bool), CliError> {
    let numbers = suites::suite(name).ok_or_else(|| {
        CliError::Usage(format!(
            "unknown suite `{name}`; expected one of {}",
            suites::SUITES.join(", ")
        ))
    })?;
    let results = with_pool(threads, || {
        numbers
            .par_iter()
            .map(|&k| suites::run_criterion(&suites::CRITERIA[k - 1]))
            .collect::<Vec<_>>()
    })?;
    let mut text: String = results.iter().map(|r| format!("{r}\n")).collect();
    let failed = results.iter().filter(|r| !r.passed).count();
    text.push_str(&format!(
        "suite {name}: {} passed, {failed} failed\n",
        results.len() - failed
    ));
    Ok((text, failed == 0))
}
