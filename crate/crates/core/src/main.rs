fn main() {
    std::process::exit(cering::cli::dispatch(std::env::args_os()));
}
