fn main() {
    std::process::exit(pretzel::cli::main_with_args(std::env::args_os()));
}
