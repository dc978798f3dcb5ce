fn main() {
    std::process::exit(expzero::cli::main_with_args(std::env::args_os()));
}
