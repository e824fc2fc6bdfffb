use std::io::Write;
use std::process::ExitCode;

use blowup_calc::Config;

fn main() -> ExitCode {
    let config = match Config::from_environment() {
        Ok(config) => config,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code());
        }
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let code = blowup_calc::cli::run(
        std::env::args_os(),
        &config,
        &mut out,
        &mut std::io::stderr(),
    );
    let _ = out.flush();
    ExitCode::from(code)
}
