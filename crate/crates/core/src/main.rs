fn main() {
    std::process::exit(gembed::cli::run(std::env::args_os()));
}
