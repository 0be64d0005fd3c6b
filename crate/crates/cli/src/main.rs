fn main() {
    std::process::exit(xi_harmonic_cli::run(std::env::args_os()));
}
