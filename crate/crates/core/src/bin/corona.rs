fn main() {
    std::process::exit(corona::cli::run(std::env::args_os()));
}
