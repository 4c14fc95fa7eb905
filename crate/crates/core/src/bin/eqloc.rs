fn main() {
    std::process::exit(eqloc::cli::run(std::env::args_os().skip(1)));
}
