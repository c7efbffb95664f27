fn main() {
    std::process::exit(cdr_engine::cli::run(std::env::args_os()));
}
