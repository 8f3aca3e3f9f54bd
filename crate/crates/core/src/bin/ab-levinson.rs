fn main() {
    std::process::exit(ab_levinson::cli::run(std::env::args_os()));
}
