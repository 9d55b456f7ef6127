//! Moduli of closed spatial polygons with fixed side lengths: existence,
//! degenerations, dimension, and the walls crossed while deforming the side
//! lengths.

use rgit::polygons::{analyze, wall_crossing_path, SideLengths};
use rgit::rat::rat_to_string;

fn main() {
    for sides in ["1,1,1,1", "5,1,1,1", "2,1,1,1", "3,4,5", "1,1,2"] {
        let r = SideLengths::parse(sides).unwrap();
        let rep = analyze(&r).unwrap();
        println!(
            "sides {sides:10} exists: {:5} degenerate: {:5} dim: {:?}",
            rep.exists, rep.degenerate, rep.moduli_dim
        );
    }

    let from = SideLengths::parse("2,1,1,1").unwrap();
    let to = SideLengths::parse("1,1,1,3/2").unwrap();
    let crossings = wall_crossing_path(&from, &to).unwrap();
    println!("deforming 2,1,1,1 -> 1,1,1,3/2 crosses:");
    for c in &crossings {
        println!(
            "  t = {:6} walls {:?}",
            rat_to_string(&c.t),
            c.walls.iter().map(|w| w.key()).collect::<Vec<_>>()
        );
    }
}
