fn main() {
    let (code, out) = cauchy_roots_cli::run(std::env::args_os());
    print!("{out}");
    std::process::exit(code);
}
