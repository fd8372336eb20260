use std::io::Write;
use std::process::ExitCode;

use bek_cli::{execute, Cli};
use clap::Parser;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (code, out) = execute(&cli);
    if code == 0 {
        print!("{out}");
        let _ = std::io::stdout().flush();
    } else {
        eprint!("{out}");
    }
    ExitCode::from(code as u8)
}
