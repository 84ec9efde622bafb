fn main() {
    std::process::exit(bruhatkit::cli::run(std::env::args_os()));
}
