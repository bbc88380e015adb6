use std::io::Write;

fn main() {
    let outcome = weilauth::cli::run(std::env::args_os());
    std::io::stdout().write_all(outcome.stdout.as_bytes()).expect("write stdout");
    std::io::stderr().write_all(outcome.stderr.as_bytes()).expect("write stderr");
    std::process::exit(outcome.code);
}
