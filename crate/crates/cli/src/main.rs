mod docs;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;

use qslab::census::{
    canonical_mpm_perm, census, classify, not3_family, run_suite, Suite, SuiteBounds,
    VerificationReport, DEFAULT_SEED,
};
use qslab::count::{ballot_b, ballot_g, catalan, count_q0, count_q1, count_q2, derangement};
use qslab::perm::parse_word;
use qslab::preimage::{
    count_preimages, preimages, preimages_oracle_with_cutoff, CountMethod, DEFAULT_ORACLE_CUTOFF,
};
use qslab::queuesort::run_queue_word;
use qslab::{Error, InjectiveWord};

use docs::{ApplyDoc, CensusDoc, PreimagesDoc, SequenceDoc};

const ORACLE_ENV: &str = "QSLAB_MAX_ORACLE";

#[derive(Parser)]
#[command(name = "qslab", version, about = "Sorting with a bypassable queue: images, preimages, counts")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Output {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ListMethod {
    Recursive,
    Oracle,
    Auto,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Recursive,
    Formula,
    Oracle,
    Auto,
}

#[derive(Clone, Copy, ValueEnum)]
enum Sequence {
    Q0,
    Q1,
    Q2,
    Catalan,
    Derangement,
    BallotB,
    BallotG,
}

#[derive(Subcommand)]
enum Command {
    /// Sort a word through the queue and print its image.
    Apply {
        /// The word, as compact digits (21543) or separated values (2 1 5 4 3).
        #[arg(required = true, num_args = 1..)]
        word: Vec<String>,
        /// Also print the Q/B/O operation sequence.
        #[arg(long)]
        trace: bool,
        #[command(flatten)]
        output: Output,
    },
    /// List the preimages of a word, in lexicographic order.
    Preimages {
        #[arg(required = true, num_args = 1..)]
        word: Vec<String>,
        /// Print only the number of preimages.
        #[arg(long)]
        count_only: bool,
        #[arg(long, value_enum, default_value_t = ListMethod::Auto)]
        method: ListMethod,
        #[command(flatten)]
        output: Output,
    },
    /// Count the preimages of a word.
    Count {
        #[arg(required = true, num_args = 1..)]
        word: Vec<String>,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
        #[command(flatten)]
        output: Output,
    },
    /// Tally how many permutations of length n have each number of preimages.
    Census {
        n: usize,
        #[command(flatten)]
        output: Output,
    },
    /// List the permutations of length n with exactly k preimages.
    Classify {
        n: usize,
        k: u64,
        #[command(flatten)]
        output: Output,
    },
    /// Print the first terms of a sequence (rows, for the triangles).
    Sequence {
        #[arg(value_enum)]
        name: Sequence,
        #[arg(long, default_value_t = 10)]
        terms: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Run a verification suite, or `all` of the non-exploratory ones.
    Verify {
        suite: String,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Random samples beyond the exhaustive range.
        #[arg(long)]
        samples: Option<usize>,
        /// Include exploratory suites in `all`.
        #[arg(long)]
        exploratory: bool,
        /// Exit 1 on findings from exploratory suites too.
        #[arg(long)]
        strict: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Print a canonical witness permutation.
    Witness {
        #[command(subcommand)]
        kind: Witness,
    },
}

#[derive(Subcommand)]
enum Witness {
    /// The canonical permutation of shape M1 P1 M2.
    Mpm {
        m1: usize,
        p1: usize,
        m2: usize,
        #[command(flatten)]
        output: Output,
    },
    /// The member of length n + 4 of the family with n + 2 preimages.
    Not3 {
        n: usize,
        #[command(flatten)]
        output: Output,
    },
}

/// Failure modes mapped onto exit codes: usage errors 2, failed checks 1.
enum Failure {
    Usage(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut stdout = io::stdout().lock();
    match run(cli.command, &mut stdout) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command, out: &mut impl Write) -> Result<(), Failure> {
    let (text, result) = match command {
        Command::Verify {
            suite,
            max_n,
            seed,
            samples,
            exploratory,
            strict,
            output,
        } => {
            let bounds = SuiteBounds {
                max_n,
                seed,
                samples,
            };
            verify(&suite, &bounds, exploratory, strict, output.format)?
        }
        other => (dispatch(other)?, Ok(())),
    };
    write!(out, "{text}").map_err(|e| Failure::Usage(e.to_string()))?;
    result
}

fn dispatch(command: Command) -> Outcome {
    match command {
        Command::Apply {
            word,
            trace,
            output,
        } => apply(&read_word(&word)?, trace, output.format),
        Command::Preimages {
            word,
            count_only,
            method,
            output,
        } => list_preimages(&read_word(&word)?, count_only, method, output.format),
        Command::Count {
            word,
            method,
            output,
        } => count(&read_word(&word)?, method, output.format),
        Command::Census { n, output } => {
            let doc = CensusDoc::new(&census(n)?);
            Ok(render(output.format, &doc, || doc.plain()))
        }
        Command::Classify { n, k, output } => {
            let members: Vec<Vec<u32>> = classify(n, k)?
                .into_iter()
                .map(|p| p.into_word().into_vec())
                .collect();
            Ok(render(output.format, &members, || lines(&members)))
        }
        Command::Sequence {
            name,
            terms,
            output,
        } => {
            let doc = sequence(name, terms)?;
            Ok(render(output.format, &doc, || doc.plain()))
        }
        Command::Witness { kind } => {
            let (p, format) = match kind {
                Witness::Mpm {
                    m1,
                    p1,
                    m2,
                    output,
                } => (canonical_mpm_perm(m1, p1, m2)?, output.format),
                Witness::Not3 { n, output } => (not3_family(n)?, output.format),
            };
            let values = p.values().to_vec();
            Ok(render(format, &values, || format!("{p}\n")))
        }
        Command::Verify { .. } => unreachable!("handled by run"),
    }
}

fn read_word(parts: &[String]) -> Result<InjectiveWord, Failure> {
    Ok(parse_word(&parts.join(" "))?)
}

fn oracle_cutoff() -> Result<usize, Failure> {
    match std::env::var(ORACLE_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("{ORACLE_ENV} must be a length, got {v:?}"))),
        Err(_) => Ok(DEFAULT_ORACLE_CUTOFF),
    }
}

fn render<T: serde::Serialize>(format: Format, doc: &T, plain: impl FnOnce() -> String) -> String {
    match format {
        Format::Plain => plain(),
        Format::Json => {
            let mut s = serde_json::to_string(doc).expect("serializable");
            s.push('\n');
            s
        }
    }
}

fn joined(values: &[u32]) -> String {
    values
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn lines(rows: &[Vec<u32>]) -> String {
    rows.iter().map(|r| joined(r) + "\n").collect()
}

fn apply(w: &InjectiveWord, trace: bool, format: Format) -> Outcome {
    let (image, ops) = run_queue_word(w);
    let doc = ApplyDoc {
        input: w.values().to_vec(),
        output: image.values().to_vec(),
        trace: trace.then(|| ops.to_string()),
    };
    Ok(render(format, &doc, || match &doc.trace {
        Some(t) => format!("{}\n{t}\n", joined(&doc.output)),
        None => format!("{}\n", joined(&doc.output)),
    }))
}

fn list_preimages(w: &InjectiveWord, count_only: bool, method: ListMethod, format: Format) -> Outcome {
    let set = match method {
        ListMethod::Oracle => preimages_oracle_with_cutoff(w, oracle_cutoff()?)?,
        ListMethod::Recursive | ListMethod::Auto => preimages(w),
    };
    let doc = PreimagesDoc {
        target: w.values().to_vec(),
        count: set.len().to_string(),
        members: (!count_only).then(|| set.iter().map(|m| m.values().to_vec()).collect()),
    };
    Ok(render(format, &doc, || match &doc.members {
        Some(members) => lines(members),
        None => format!("{}\n", doc.count),
    }))
}

fn count(w: &InjectiveWord, method: Method, format: Format) -> Outcome {
    let n: BigUint = match method {
        Method::Oracle => preimages_oracle_with_cutoff(w, oracle_cutoff()?)?.len().into(),
        Method::Recursive => count_preimages(w, CountMethod::Recursive)?,
        Method::Formula => count_preimages(w, CountMethod::Formula)?,
        Method::Auto => count_preimages(w, CountMethod::Auto)?,
    };
    let doc = PreimagesDoc {
        target: w.values().to_vec(),
        count: n.to_string(),
        members: None,
    };
    Ok(render(format, &doc, || format!("{}\n", doc.count)))
}

fn sequence(name: Sequence, terms: usize) -> Result<SequenceDoc, Failure> {
    let flat = |f: &dyn Fn(usize) -> Result<BigUint, Error>, start: usize| {
        (start..start + terms)
            .map(f)
            .collect::<Result<Vec<_>, _>>()
            .map(SequenceDoc::terms)
    };
    let doc = match name {
        Sequence::Q0 => flat(&count_q0, 1)?,
        Sequence::Q1 => flat(&count_q1, 1)?,
        Sequence::Q2 => flat(&|n| Ok(count_q2(n)), 0)?,
        Sequence::Catalan => flat(&|n| Ok(catalan(n)), 0)?,
        Sequence::Derangement => flat(&|n| Ok(derangement(n)), 0)?,
        Sequence::BallotB => SequenceDoc::rows(
            (1..=terms)
                .map(|n| (1..=n).map(|i| ballot_b(n, i)).collect())
                .collect::<Result<_, _>>()?,
        ),
        Sequence::BallotG => SequenceDoc::rows(
            (1..=terms)
                .map(|n| (2..=n + 1).map(|i| ballot_g(n, i)).collect())
                .collect::<Result<_, _>>()?,
        ),
    };
    Ok(doc)
}

const SHOWN_FAILURES: usize = 20;

fn report_text(report: &VerificationReport) -> String {
    let mut s = format!("suite: {}\n", report.suite);
    let params: Vec<String> = report
        .parameters
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect();
    s += &format!("parameters: {}\n", params.join(" "));
    for f in report.failures.iter().take(SHOWN_FAILURES) {
        s += &format!("  {}: expected {}, got {}\n", f.input, f.expected, f.actual);
    }
    if report.failures.len() > SHOWN_FAILURES {
        s += &format!("  ... {} more\n", report.failures.len() - SHOWN_FAILURES);
    }
    let status = match (report.passed(), report.is_exploratory()) {
        (true, _) => "PASS",
        (false, true) => "FINDINGS",
        (false, false) => "FAIL",
    };
    s += &format!(
        "{status} (cases: {}, failures: {})\n",
        report.cases,
        report.failures.len()
    );
    s
}

fn verify(
    name: &str,
    bounds: &SuiteBounds,
    exploratory: bool,
    strict: bool,
    format: Format,
) -> Result<(String, Result<(), Failure>), Failure> {
    let suites: Vec<Suite> = if name == "all" {
        Suite::ALL
            .into_iter()
            .filter(|s| exploratory || !s.is_exploratory())
            .collect()
    } else {
        vec![name.parse()?]
    };
    let reports: Vec<VerificationReport> = suites.iter().map(|&s| run_suite(s, bounds)).collect();
    let failed = reports
        .iter()
        .any(|r| !r.passed() && (strict || !r.is_exploratory()));
    let text = match format {
        Format::Plain => reports
            .iter()
            .map(report_text)
            .collect::<Vec<_>>()
            .join("\n"),
        Format::Json => {
            let docs: Vec<docs::ReportDoc> = reports.iter().map(docs::ReportDoc::from).collect();
            let mut s = serde_json::to_string(&docs).expect("serializable");
            s.push('\n');
            s
        }
    };
    let result = if failed {
        Err(Failure::Verification)
    } else {
        Ok(())
    };
    Ok((text, result))
}
