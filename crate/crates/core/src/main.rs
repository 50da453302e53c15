fn main() {
    let argv: Vec<String> = std::env::args().collect();
    let code = idbench_core::cli::run(&argv, &mut std::io::stdout(), &mut std::io::stderr());
    std::process::exit(code);
}
