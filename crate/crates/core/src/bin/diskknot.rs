fn main() {
    std::process::exit(diskknot::cli::main_with_args(std::env::args_os()));
}
