use std::io::{IsTerminal, Write};
use std::process::ExitCode;

use constel::cli::{dispatch, Dispatch, EXIT_USAGE};
use constel::Verdict;

fn use_color() -> bool {
    std::env::var_os("NO_COLOR").is_none_or(|v| v.is_empty())
        && std::env::var("TERM").map_or(true, |t| t != "dumb")
        && std::io::stdout().is_terminal()
}

fn main() -> ExitCode {
    let code = match dispatch(std::env::args_os()) {
        Dispatch::Info(text) => {
            print!("{text}");
            0
        }
        Dispatch::Usage(text) => {
            eprint!("{text}");
            EXIT_USAGE
        }
        Dispatch::Run(run) => {
            let mut out = std::io::stdout().lock();
            let r = &run.report;
            let written = if run.json {
                out.write_all(r.to_json().as_bytes())
            } else if let Some(p) = &run.payload {
                out.write_all(p.as_bytes())
            } else {
                let (word, color) = match r.verdict {
                    Verdict::Pass => ("PASS", "32"),
                    Verdict::Fail => ("FAIL", "31"),
                    Verdict::Inconclusive => ("INCONCLUSIVE", "33"),
                };
                if use_color() {
                    writeln!(out, "\x1b[{color}m{word}\x1b[0m {}", r.message)
                } else {
                    writeln!(out, "{word} {}", r.message)
                }
            };
            // a closed pipe is not worth a panic
            if written.is_err() {
                return ExitCode::from(1);
            }
            run.exit_code()
        }
    };
    ExitCode::from(code as u8)
}
