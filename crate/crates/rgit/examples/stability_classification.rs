//! Classify configurations of weighted points: on the projective line via
//! coincidence partitions, and in higher projective spaces via coordinate
//! matrices.

use rgit::linalg::QMatrix;
use rgit::partitions::SetPartition;
use rgit::rat::rat_to_string;
use rgit::stability::{sl2_classify, sln_classify, ConfigurationP1, SLnConfig, WeightVector};

fn main() {
    let w = WeightVector::parse("1/2,1/2,1/2,1/2", 2).unwrap();
    println!("weights {:?}", w.alpha());
    for s in ["1|2|3|4", "12|3|4", "123|4", "12|34"] {
        let cfg = ConfigurationP1::from_partition(SetPartition::parse(s, 4).unwrap());
        let v = sl2_classify(&cfg, &w).unwrap();
        println!(
            "  partition {s:8} -> {:20} sign {:+}, squared distance {}",
            v.class.as_str(),
            v.numerical.0,
            rat_to_string(&v.numerical.1)
        );
    }

    // four points in the plane P^2 with weights 3/4 each
    let w3 = WeightVector::parse("3/4,3/4,3/4,3/4", 3).unwrap();
    let generic = SLnConfig::new(QMatrix::from_int_rows(&[
        vec![1, 0, 0, 1],
        vec![0, 1, 0, 1],
        vec![0, 0, 1, 1],
    ]))
    .unwrap();
    println!(
        "generic 4 points in P^2 at weight 3/4: {}",
        sln_classify(&generic, &w3).unwrap().class.as_str()
    );

    // three collinear points cross the subspace inequality
    let collinear = SLnConfig::new(QMatrix::from_int_rows(&[
        vec![1, 1, 1, 0],
        vec![0, 1, 2, 0],
        vec![0, 0, 0, 1],
    ]))
    .unwrap();
    let v = sln_classify(&collinear, &w3).unwrap();
    println!(
        "three collinear points at weight 3/4: {} (witness subsets {:?})",
        v.class.as_str(),
        v.witnesses
            .iter()
            .map(|ws| ws.iter().map(|i| i + 1).collect::<Vec<_>>())
            .collect::<Vec<_>>()
    );
}
