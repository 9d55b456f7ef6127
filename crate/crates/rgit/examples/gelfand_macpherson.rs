//! The correspondence between torus orbits on the Grassmannian and group
//! orbits on point configurations, computed both ways: Pluecker coordinates,
//! matroid polytopes, and matching stability classes.

use rgit::linalg::QMatrix;
use rgit::moment::{hypersimplex, matroid_polytope, plucker};
use rgit::stability::{gm_check, sln_classify, torus_classify_in, SLnConfig, WeightVector};

fn main() {
    let cfg = SLnConfig::new(QMatrix::from_int_rows(&[
        vec![1, 0, 1, 1],
        vec![0, 1, 1, 2],
    ]))
    .unwrap();
    let pv = plucker(cfg.matrix()).unwrap();
    println!("Pluecker coordinates:");
    for (subset, value) in pv.entries() {
        let key: String = subset.iter().map(|i| (i + 1).to_string()).collect();
        println!("  p_{key} = {value}");
    }
    let poly = matroid_polytope(&pv);
    println!(
        "matroid polytope: {} vertices (the full hypersimplex: {})",
        poly.vertices().len(),
        poly == hypersimplex(4, 2).unwrap()
    );

    for weights in ["1/2,1/2,1/2,1/2", "1/6,1/2,2/3,2/3", "1,1/3,1/3,1/3"] {
        let w = WeightVector::parse(weights, 2).unwrap();
        let direct = sln_classify(&cfg, &w).unwrap();
        let torus = torus_classify_in(&poly, w.alpha(), w.m() - 1).unwrap();
        println!(
            "alpha = {weights:18} configuration: {:20} torus: {:20} agree: {}",
            direct.class.as_str(),
            torus.class.as_str(),
            gm_check(&cfg, &w).unwrap()
        );
    }

    // a degenerate configuration drops a matroid vertex
    let degenerate = SLnConfig::new(QMatrix::from_int_rows(&[
        vec![1, 2, 1, 1],
        vec![1, 2, 2, 3],
    ]))
    .unwrap();
    let dpoly = matroid_polytope(&plucker(degenerate.matrix()).unwrap());
    println!(
        "proportional columns 1,2: matroid polytope has {} vertices",
        dpoly.vertices().len()
    );
    let w = WeightVector::parse("1/2,1/2,1/2,1/2", 2).unwrap();
    println!(
        "  at the democratic weight both models report {}",
        sln_classify(&degenerate, &w).unwrap().class.as_str()
    );
}
