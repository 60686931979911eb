use std::io::Write;
use std::process::ExitCode;

use legendre_hgf::cli::{self, Io};

fn main() -> ExitCode {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let (mut out, mut err) = (stdout.lock(), stderr.lock());
    let max_p = match cli::max_p_from_env() {
        Ok(v) => v,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            return ExitCode::from(cli::EXIT_USAGE as u8);
        }
    };
    let mut io = Io {
        out: &mut out,
        err: &mut err,
        max_p,
    };
    let code = cli::run_from(std::env::args_os(), &mut io);
    let _ = out.flush();
    ExitCode::from(code as u8)
}
