//! Reading and writing plain-text rotation systems.
//!
//! cargo run --example rotation_files

use planar_dp::catalog::generate;
use planar_dp::rotation::{parse_rotation_file, write_rotation_file};

fn main() {
    let text = write_rotation_file("k4", &generate("k4").unwrap());
    print!("{text}");
    let parsed = parse_rotation_file(&text).unwrap();
    assert_eq!(write_rotation_file(&parsed.name, &parsed.graph), text);
    println!("round trip ok: {} faces", parsed.graph.face_count());

    let broken = "planegraph broken\nn 3\nv 0: 1\nv 1: 0 2\nv 2:\n";
    match parse_rotation_file(broken) {
        Ok(_) => unreachable!(),
        Err(e) => println!("rejected: {e}"),
    }
}
