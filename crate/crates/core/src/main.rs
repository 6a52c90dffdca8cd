fn main() {
    std::process::exit(fpoly::harness::cli::cli_main(std::env::args().collect()));
}
