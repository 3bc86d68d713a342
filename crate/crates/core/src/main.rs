use std::process::ExitCode;

fn main() -> ExitCode {
    let (code, out) = ncsym::cli::run(std::env::args_os());
    if code != 2 {
        print!("{}", out);
    } else {
        eprint!("{}", out);
    }
    ExitCode::from(code as u8)
}
