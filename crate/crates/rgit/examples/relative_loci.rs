//! Relative semistable loci over the forgetful map: exact deformation
//! thresholds, verified product structure below the threshold, the first
//! violated wall above it, limit-mode classification, and the collapsing
//! facet case.

use rgit::rat::{rat_to_string, ratio};
use rgit::relative::{
    epsilon_threshold, facet_instance, forgetful_instance, forgetful_model, relative_classify,
    tensor_stabilization_bound, LinearizationMode, PairLinearization,
};
use rgit::stability::WeightVector;

fn main() {
    let base = WeightVector::parse("2/3,2/3,2/3", 2).unwrap();
    let threshold = epsilon_threshold(&base, 3).unwrap();
    println!(
        "base (2/3, 2/3, 2/3), forgetting point 4: threshold = {}",
        rat_to_string(&threshold)
    );

    let below = forgetful_instance(4, 3, &base, &ratio(1, 4)).unwrap();
    println!(
        "eps = 1/4: equality of loci verified: {} ({} semistable partitions)",
        below.equality_verified,
        below.semistable.len()
    );

    let above = forgetful_instance(4, 3, &base, &ratio(3, 5)).unwrap();
    println!(
        "eps = 3/5: equality verified: {}, first violated constraint: {:?}",
        above.equality_verified, above.violated
    );

    let n0 = tensor_stabilization_bound(&base, 3).unwrap();
    println!("finite pair linearizations stabilize at tensor power {n0}");

    let (model, _, total_parts) = forgetful_model(4, 3);
    for mode in [LinearizationMode::Finite(n0), LinearizationMode::Limit] {
        let verdict = relative_classify(
            &model,
            &PairLinearization {
                base: base.clone(),
                fiber: (),
                mode,
            },
        )
        .unwrap();
        let names: Vec<String> = verdict
            .semistable_set()
            .iter()
            .map(|&i| total_parts[i].to_string())
            .collect();
        println!("mode {mode:?}: semistable = stable = {names:?}");
    }

    // on the facet a_4 = 1 the quotient collapses: nothing is stable
    let facet = WeightVector::parse("1/3,1/3,1/3,1", 2).unwrap();
    let report = facet_instance(4, 3, &facet).unwrap();
    println!(
        "facet weight (1/3, 1/3, 1/3, 1): no stable partition: {}, coincidences with point 4 unstable: {}",
        report.no_stable_partition, report.coincidence_with_index_unstable
    );
}
