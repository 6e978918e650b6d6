fn main() {
    std::process::exit(spraylab::cli::main_with_args(std::env::args_os()))
}
