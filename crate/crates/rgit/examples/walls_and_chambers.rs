//! Enumerate the wall system and the open chambers of the effective slice,
//! then locate weight vectors and cross one wall.

use rgit::chambers::{adjacent, enumerate_chambers, locate, walls};
use rgit::stability::{StabilityClass, WeightVector};

fn main() {
    for m in [4, 5] {
        let ws = walls(m, 2).unwrap();
        let relevant = ws.iter().filter(|w| w.is_relevant()).count();
        println!(
            "m = {m}: {} canonical walls, {relevant} relevant, {} facet walls",
            ws.len(),
            ws.iter().filter(|w| w.is_facet()).count()
        );
        let chambers = enumerate_chambers(m, 2).unwrap();
        println!("  {} open chambers", chambers.len());
        let c = &chambers[0];
        let stable = c
            .classification_table
            .iter()
            .filter(|(_, cls)| *cls == StabilityClass::Stable)
            .count();
        println!(
            "  first chamber: witness {:?}, {stable}/{} partitions stable",
            c.witness,
            c.classification_table.len()
        );
    }

    let center = WeightVector::parse("1/2,1/2,1/2,1/2", 2).unwrap();
    let (_, on) = locate(&center).unwrap();
    println!(
        "the democratic weight sits on {} walls: {:?}",
        on.len(),
        on.iter().map(|w| w.key()).collect::<Vec<_>>()
    );

    let chambers = enumerate_chambers(4, 2).unwrap();
    let rel: Vec<_> = walls(4, 2)
        .unwrap()
        .into_iter()
        .filter(|w| w.is_relevant())
        .collect();
    let across = adjacent(4, 2, &chambers[0], &rel[0]).unwrap();
    match across {
        Some(nb) => println!(
            "crossing wall {} moves witness {:?} -> {:?}",
            rel[0].key(),
            chambers[0].witness,
            nb.witness
        ),
        None => println!("crossing wall {} leaves the effective slice", rel[0].key()),
    }
}
