fn main() {
    std::process::exit(eisenkit::cli::run(std::env::args_os()));
}
