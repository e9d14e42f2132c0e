fn main() {
    std::process::exit(qcert::cli::main());
}
