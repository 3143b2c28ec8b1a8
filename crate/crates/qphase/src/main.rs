fn main() {
    std::process::exit(qphase::cli::cli_main(std::env::args_os()));
}
