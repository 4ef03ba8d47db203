fn main() {
    std::process::exit(planar_dp::cli::dispatch(std::env::args()));
}
