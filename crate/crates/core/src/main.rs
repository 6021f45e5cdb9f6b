fn main() {
    std::process::exit(brickforge::cli::cli_main(std::env::args_os()));
}
