fn main() {
    std::process::exit(mucrit::cli::run(std::env::args_os()));
}
