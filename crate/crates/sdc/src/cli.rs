//! The `sdc` command line.

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use sdiag_core::{from_term, from_term_frob, iso_check, serial, OpenHypergraph, Term};
use sdiag_rewrite::{decide_eq_seeded, graph_term, normalize, replay_trace, Mode, Theory, Verdict};
use sdiag_semantics::AnyModel;

use crate::diagnostic::Diagnostic;
use crate::source::SourceFile;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_UNKNOWN: i32 = 2;
pub const EXIT_USAGE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "sdc", about = "Check, draw, compare and evaluate string diagrams")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

/// `graph` is the line-based serialization, `dot` is Graphviz, `text` is
/// human-readable (terms, or verdicts with evidence).
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Dot,
    Graph,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse and type-check a file.
    Check { file: String },
    /// Print the hypergraph of a term.
    Graph {
        file: String,
        #[arg(long)]
        term: String,
        #[arg(long, value_enum, default_value_t = Format::Graph)]
        format: Format,
    },
    /// Decide whether two terms are equal.
    Eq {
        file: String,
        #[arg(long)]
        lhs: String,
        #[arg(long)]
        rhs: String,
        /// A theory name or sum `a+b`; `structural` compares hypergraphs only.
        #[arg(long)]
        theory: Option<String>,
        #[arg(long, default_value_t = 8)]
        budget: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// `text` appends the evidence to the verdict.
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Rewrite a term with the oriented rules of a theory.
    Normalize {
        file: String,
        #[arg(long)]
        term: String,
        #[arg(long)]
        theory: Option<String>,
        #[arg(long, default_value_t = 256)]
        cap: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Evaluate a term in a model.
    Eval {
        file: String,
        #[arg(long)]
        term: String,
        #[arg(long)]
        model: String,
        /// Sort sizes as `sort=n`, overriding the file's bindings.
        #[arg(long = "size", value_name = "SORT=N")]
        sizes: Vec<String>,
    },
    /// Replay a scripted derivation.
    Replay {
        file: String,
        #[arg(long)]
        script: String,
        /// Start term; defaults to the term named like the script.
        #[arg(long)]
        term: Option<String>,
        #[arg(long)]
        theory: Option<String>,
        /// Fail unless the result is isomorphic to this term.
        #[arg(long)]
        expect: Option<String>,
    },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn ok(stdout: String) -> Output {
        Output {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, stderr: impl Into<String>) -> Output {
        Output {
            code,
            stdout: String::new(),
            stderr: stderr.into(),
        }
    }
}

/// Parses arguments (including the program name) and runs the command.
pub fn run_args<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run_command(&cli.command),
        Err(e) => {
            let text = e.render().to_string();
            if matches!(e.kind(), clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion) {
                Output::ok(text)
            } else {
                Output::fail(EXIT_USAGE, text)
            }
        }
    }
}

pub fn run_command(cmd: &Command) -> Output {
    let file = match cmd {
        Command::Check { file }
        | Command::Graph { file, .. }
        | Command::Eq { file, .. }
        | Command::Normalize { file, .. }
        | Command::Eval { file, .. }
        | Command::Replay { file, .. } => file,
    };
    match std::fs::read_to_string(file) {
        Ok(src) => run(cmd, &src, file),
        Err(e) => Output::fail(EXIT_USAGE, format!("{file}: {e}\n")),
    }
}

fn render_all(ds: &[Diagnostic], file: &str) -> String {
    let mut out = String::new();
    for d in ds {
        out.push_str(&d.render(file));
        out.push('\n');
    }
    out
}

/// The graph a theory works on: Frobenius-mode theories read structural
/// generators as spiders.
pub fn graph_in(t: &Theory, term: &Term) -> OpenHypergraph {
    if t.mode == Mode::Frobenius {
        from_term_frob(term)
    } else {
        from_term(term)
    }
}

/// Runs a command on source text already read from `file`.
pub fn run(cmd: &Command, src: &str, file: &str) -> Output {
    let sf = match SourceFile::load(src) {
        Ok(sf) => sf,
        Err(ds) => return Output::fail(EXIT_USAGE, render_all(&ds, file)),
    };
    let term = |text: &str| sf.lookup(text).map_err(|ds| Output::fail(EXIT_USAGE, render_all(&ds, file)));
    let theory = |name: Option<&str>| {
        sf.build_theory(name).map_err(|e| Output::fail(EXIT_USAGE, format!("{file}: error: {e}\n")))
    };
    let result = (|| -> Result<Output, Output> {
        match cmd {
            Command::Check { .. } => Ok(Output::ok(check_summary(&sf))),
            Command::Graph { term: t, format, .. } => {
                let t = term(t)?;
                Ok(Output::ok(match format {
                    Format::Graph => serial::to_text(&from_term(&t)),
                    Format::Dot => serial::to_dot(&from_term(&t)),
                    Format::Text => format!("{t}\n"),
                }))
            }
            Command::Eq {
                lhs: left,
                rhs: right,
                theory: name,
                budget,
                seed,
                format,
                ..
            } => {
                let (a, b) = (term(left)?, term(right)?);
                if a.dom() != b.dom() || a.cod() != b.cod() {
                    return Err(Output::fail(
                        EXIT_USAGE,
                        format!(
                            "{file}: error: boundary mismatch: {} -> {} vs {} -> {}\n",
                            a.dom(),
                            a.cod(),
                            b.dom(),
                            b.cod()
                        ),
                    ));
                }
                let structural = name.as_deref() == Some("structural") || (name.is_none() && sf.theory.is_none());
                let (verdict, detail) = if structural {
                    let same = iso_check(&from_term(&a), &from_term(&b));
                    let v = if same { Verdict::Equal } else { Verdict::NotEqual };
                    (v, format!("{v} (structural: hypergraphs {}isomorphic)", if same { "" } else { "not " }))
                } else {
                    let t = theory(name.as_deref())?.expect("theory present");
                    let d = decide_eq_seeded(&t, &graph_in(&t, &a), &graph_in(&t, &b), *budget, *seed)
                        .map_err(|e| Output::fail(EXIT_USAGE, format!("{file}: error: {e}\n")))?;
                    (d.verdict, d.to_string())
                };
                let mut out = format!("{verdict}\n");
                if *format == Some(Format::Text) {
                    out = format!("{detail}\n");
                }
                Ok(Output {
                    code: match verdict {
                        Verdict::Equal => EXIT_OK,
                        Verdict::NotEqual => EXIT_FAIL,
                        Verdict::Unknown => EXIT_UNKNOWN,
                    },
                    stdout: out,
                    stderr: String::new(),
                })
            }
            Command::Normalize {
                term: t,
                theory: name,
                cap,
                format,
                ..
            } => {
                let t0 = term(t)?;
                let Some(th) = theory(name.as_deref())? else {
                    return Err(Output::fail(EXIT_USAGE, format!("{file}: error: no theory given\n")));
                };
                let (g, steps, capped) = normalize(&th, &graph_in(&th, &t0), *cap);
                let mut out = String::new();
                if capped {
                    writeln!(out, "capped after {steps} steps").expect("string write");
                } else {
                    writeln!(out, "steps {steps}").expect("string write");
                }
                match format {
                    Format::Text => writeln!(out, "{}", graph_term(&g)).expect("string write"),
                    Format::Graph => out.push_str(&serial::to_text(&g)),
                    Format::Dot => out = serial::to_dot(&g),
                }
                Ok(Output {
                    code: if capped { EXIT_UNKNOWN } else { EXIT_OK },
                    stdout: out,
                    stderr: String::new(),
                })
            }
            Command::Eval {
                term: t, model, sizes, ..
            } => {
                let t = term(t)?;
                let mut m = AnyModel::from_name(model).map_err(|e| Output::fail(EXIT_USAGE, format!("error: {e}\n")))?;
                for (s, n) in &sf.sizes {
                    m.bind_size(s, *n);
                }
                for kv in sizes {
                    let parsed = kv.split_once('=').and_then(|(s, n)| Some((s.trim(), n.trim().parse::<usize>().ok()?)));
                    let Some((s, n)) = parsed else {
                        return Err(Output::fail(EXIT_USAGE, format!("error: expected SORT=N, found `{kv}`\n")));
                    };
                    m.bind_size(s, n);
                }
                let v = m
                    .eval(&t)
                    .map_err(|e| Output::fail(EXIT_FAIL, format!("{file}: error: {e}\n")))?;
                Ok(Output::ok(format!("{v}\n")))
            }
            Command::Replay {
                script,
                term: start,
                theory: name,
                expect,
                ..
            } => {
                let Some(steps) = sf.script(script) else {
                    return Err(Output::fail(EXIT_USAGE, format!("{file}: error: no script named `{script}`\n")));
                };
                let t0 = term(start.as_deref().unwrap_or(script))?;
                let Some(th) = theory(name.as_deref())? else {
                    return Err(Output::fail(EXIT_USAGE, format!("{file}: error: no theory given\n")));
                };
                let expected = expect.as_deref().map(term).transpose()?;
                let trace = replay_trace(&th, &graph_in(&th, &t0), steps)
                    .map_err(|e| Output::fail(EXIT_FAIL, format!("{file}: error: {e}\n")))?;
                let mut out = String::new();
                writeln!(out, "start {}", graph_term(&trace[0])).expect("string write");
                for ((rule, idx), g) in steps.iter().zip(&trace[1..]) {
                    writeln!(out, "{rule}@{idx} {}", graph_term(g)).expect("string write");
                }
                let last = trace.last().expect("nonempty trace");
                if let Some(e) = expected {
                    if !iso_check(last, &graph_in(&th, &e)) {
                        return Ok(Output {
                            code: EXIT_FAIL,
                            stdout: out,
                            stderr: format!("{file}: error: result differs from `{e}`\n"),
                        });
                    }
                    writeln!(out, "matches {e}").expect("string write");
                }
                Ok(Output::ok(out))
            }
        }
    })();
    result.unwrap_or_else(|e| e)
}

fn check_summary(sf: &SourceFile) -> String {
    let mut out = String::new();
    if let Some(name) = &sf.sig_name {
        writeln!(
            out,
            "signature {name}: {} sorts, {} operations",
            sf.signature.objects().len(),
            sf.signature.operations().len()
        )
        .expect("string write");
    }
    for (name, t) in &sf.terms {
        writeln!(out, "term {name} : {} -> {}", t.dom(), t.cod()).expect("string write");
    }
    if let Some(spec) = &sf.theory {
        let rules = sf.build_theory(None).map(|t| t.map_or(0, |t| t.rules.len())).unwrap_or(0);
        writeln!(out, "theory {} ({rules} rules)", spec.name).expect("string write");
    }
    for (name, steps) in &sf.scripts {
        writeln!(out, "script {name}: {} steps", steps.len()).expect("string write");
    }
    out.push_str("ok\n");
    out
}
