fn main() {
    std::process::exit(mtpkit::cli::main_with_args(std::env::args_os()));
}
