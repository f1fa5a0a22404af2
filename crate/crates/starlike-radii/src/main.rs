fn main() {
    std::process::exit(starlike_radii::cli::run(std::env::args_os()));
}
