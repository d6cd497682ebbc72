fn main() -> std::process::ExitCode {
    zforge::cli::main()
}
