fn main() {
    std::process::exit(equivkit::cli::run(std::env::args_os()));
}
