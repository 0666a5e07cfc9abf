use std::path::{Path, PathBuf};

use clap::Parser;
use sdc::cli::{run, Cli, Command};

fn dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

fn file_of(cmd: &Command) -> &str {
    match cmd {
        Command::Check { file }
        | Command::Graph { file, .. }
        | Command::Eq { file, .. }
        | Command::Normalize { file, .. }
        | Command::Eval { file, .. }
        | Command::Replay { file, .. } => file,
    }
}

fn render(code: i32, stdout: &str, stderr: &str) -> String {
    format!("exit {code}\n--- stdout\n{stdout}--- stderr\n{stderr}")
}

/// Set `SDC_BLESS=1` to rewrite the expected outputs.
#[test]
fn golden_cases() {
    let cases = std::fs::read_to_string(dir().join("cases.txt")).unwrap();
    let bless = std::env::var_os("SDC_BLESS").is_some();
    let mut failures = Vec::new();
    for line in cases.lines().filter(|l| !l.trim().is_empty()) {
        let (name, args) = line.split_once(':').unwrap();
        let argv: Vec<&str> = std::iter::once("sdc").chain(args.split_whitespace()).collect();
        let cli = Cli::try_parse_from(&argv).unwrap();
        let file = file_of(&cli.command);
        let src = std::fs::read_to_string(dir().join(file)).unwrap();
        let out = run(&cli.command, &src, file);
        let got = render(out.code, &out.stdout, &out.stderr);
        let path = dir().join(format!("{name}.out"));
        if bless {
            std::fs::write(&path, &got).unwrap();
            continue;
        }
        let want = std::fs::read_to_string(&path).unwrap_or_default();
        if got != want {
            failures.push(format!("{name}:\n--- want\n{want}\n--- got\n{got}"));
        }
    }
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}
