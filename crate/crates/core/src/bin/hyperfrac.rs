fn main() {
    std::process::exit(hyperfrac::cli::run(std::env::args_os()));
}
