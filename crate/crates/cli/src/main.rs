use std::process::ExitCode;

fn main() -> ExitCode {
    let status = lumapal_cli::run(std::env::args_os(), &mut std::io::stdout().lock());
    ExitCode::from(status.code() as u8)
}
