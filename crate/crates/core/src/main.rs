fn main() -> std::process::ExitCode {
    circulant_total::cli::main()
}
