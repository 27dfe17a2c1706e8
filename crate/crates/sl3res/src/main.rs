use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use sl3res::{exit_code, run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match run(&cli.command) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    let json = serde_json::to_string_pretty(&outcome.json).expect("reports serialise");
    let to_stdout = cli.command.common().json.as_deref().is_some_and(|p| p.as_os_str() == "-");
    let mut out = std::io::stdout().lock();
    let written = if to_stdout {
        writeln!(out, "{json}")
    } else {
        let r = write!(out, "{}", outcome.text);
        if let Some(path) = &cli.command.common().json {
            if let Err(e) = std::fs::write(path, format!("{json}\n")) {
                eprintln!("error: writing {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        r
    };
    if written.is_err() {
        return ExitCode::from(2);
    }
    ExitCode::from(exit_code(&outcome) as u8)
}
