fn main() {
    std::process::exit(holomap::cli::run(std::env::args_os()));
}
