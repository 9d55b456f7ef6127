//! Render a 2-plane slice of the m = 4 effective polytope as SVG, with wall
//! traces and chamber-signature labels.

use rgit::qvec::QVec;
use rgit::rat::ratio;
use rgit::render::{render_slice, SliceSpec};

fn main() {
    let spec = SliceSpec::new(
        QVec::new(vec![ratio(2, 5), ratio(1, 2), ratio(1, 2), ratio(3, 5)]),
        QVec::from_ints(&[1, -1, 0, 0]),
        QVec::from_ints(&[1, 0, -1, 0]),
    )
    .unwrap();
    let svg = render_slice(&spec).unwrap();
    let path = std::env::temp_dir().join("rgit-slice.svg");
    std::fs::write(&path, &svg).unwrap();
    println!("wrote {} ({} bytes)", path.display(), svg.len());
    println!(
        "wall traces: {}, chamber labels: {}",
        svg.matches("<line").count(),
        svg.matches("text-anchor").count()
    );
}
