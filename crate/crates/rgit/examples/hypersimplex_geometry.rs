//! Build hypersimplices and inspect their exact facet structure: for every
//! m there are 2m facets, half of them weight-zero faces and half
//! weight-one faces.

use rgit::moment::hypersimplex;
use rgit::qvec::QVec;
use rgit::rat::{rat, rat_to_string};

fn main() {
    for m in 4..=6 {
        let h = hypersimplex(m, 2).unwrap();
        println!(
            "hypersimplex({m}, 2): {} vertices, affine dim {}, {} facets",
            h.vertices().len(),
            h.affine_dim(),
            h.facets().len()
        );
        for eq in h.hull_equalities() {
            println!(
                "  affine hull: <{:?}, a> = {}",
                eq.normal(),
                rat_to_string(eq.offset())
            );
        }
        let mut zero_faces = 0;
        let mut one_faces = 0;
        for i in 0..m {
            let lower = h.canonical_halfspace(QVec::unit(m, i).neg(), rat(0));
            let upper = h.canonical_halfspace(QVec::unit(m, i), rat(1));
            if h.facets().contains(&lower) {
                zero_faces += 1;
            }
            if h.facets().contains(&upper) {
                one_faces += 1;
            }
        }
        println!("  facet types: {zero_faces} of the form a_i = 0, {one_faces} of the form a_i = 1");

        // the two representations agree
        let recovered = h.vertices_from_hrep().unwrap();
        assert_eq!(recovered, h.vertices());
        println!("  H-rep round trip recovers all {} vertices", recovered.len());
    }
}
