fn main() {
    std::process::exit(ordcalc_cli::run());
}
