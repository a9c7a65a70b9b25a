fn main() {
    std::process::exit(modpi::cli::run(std::env::args_os()));
}
