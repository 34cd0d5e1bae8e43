use std::io::Write;

fn main() {
    let result = hodge_cli::run(std::env::args_os());
    // A closed pipe (e.g. `| head`) is not an error worth a panic.
    let _ = writeln!(std::io::stdout().lock(), "{}", result.to_json());
    std::process::exit(result.exit_code());
}
