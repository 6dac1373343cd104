fn main() {
    std::process::exit(doubled_hecke::cli::main_exit_code());
}
