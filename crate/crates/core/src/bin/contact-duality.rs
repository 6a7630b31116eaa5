fn main() {
    std::process::exit(contact_duality::cli::run());
}
