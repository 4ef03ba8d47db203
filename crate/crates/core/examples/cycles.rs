//! Fixed-length cycle enumeration and the forbidden-cycle profiles.
//!
//! cargo run --example cycles

use planar_dp::catalog::generate;
use planar_dp::graph::Profile;

fn main() {
    for name in ["cube", "dodecahedron", "theta:2,3,3"] {
        let g = generate(name).unwrap();
        let counts: Vec<String> = (3..=10)
            .map(|k| format!("{k}:{}", g.cycles_of_length(k).len()))
            .collect();
        println!("{name}: cycles by length {}", counts.join(" "));
        for profile in [Profile::No48, Profile::No46] {
            let r = g.check_profile(profile);
            println!("  {profile}: cycle conditions met = {}", r.cycles_ok());
            for failure in r.failures() {
                println!("    {failure}");
            }
        }
    }
}
