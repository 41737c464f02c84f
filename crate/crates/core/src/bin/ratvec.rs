fn main() { std::process::exit(ratvec::cli::run(std::env::args_os(), &mut std::io::stdout(), &mut std::io::stderr())) }
