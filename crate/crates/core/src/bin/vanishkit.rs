fn main() {
    std::process::exit(vanishkit::toolkit::run_cli(std::env::args_os()));
}
