use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let cli = tm_cli::Cli::parse();
    match tm_cli::run(cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if let Err(e) = stdout.write_all(&out.stdout).and_then(|()| stdout.flush()) {
                eprintln!("tm: {e}");
                return ExitCode::from(2);
            }
            ExitCode::from(out.code as u8)
        }
        Err(e) => {
            eprintln!("tm: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
