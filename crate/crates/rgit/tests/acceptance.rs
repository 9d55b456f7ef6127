//! Acceptance suite: one test per criterion, each printing a pass line.
//! Run with `cargo test -p rgit --test acceptance -- --nocapture`.

use std::collections::BTreeSet;
use std::time::Instant;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use rgit::chambers::{
    chamber_count_naive, enumerate_chambers, locate, sign_vector_witness, walls, Wall,
};
use rgit::linalg::QMatrix;
use rgit::moment::{hypersimplex, matroid_polytope, plucker, WeightSet};
use rgit::partitions::{all_partitions, SetPartition};
use rgit::polygons::{analyze, SideLengths};
use rgit::polytope::Polytope;
use rgit::qvec::QVec;
use rgit::rat::{rat, ratio, sign, Rat};
use rgit::relative::{
    epsilon_threshold, facet_instance, forgetful_instance, forgetful_model, relative_classify,
    tensor_path_weights, tensor_stabilization_bound, LinearizationMode, PairLinearization,
};
use rgit::stability::{
    oracle_1ps, sl2_class, sln_classify, torus_class_in, torus_classify, SLnConfig, StabilityClass,
    WeightVector,
};

/// Runs every criterion in order, each with the whole machine, and prints
/// one pass/fail line per criterion; fails at the end if any criterion
/// failed.
#[test]
fn acceptance_gate() {
    let criteria: Vec<(u32, &str, fn())> = vec![
        (1, "hypersimplex structure", criterion_01_hypersimplex_structure),
        (2, "Gelfand-MacPherson equivalence", criterion_02_gelfand_macpherson_equivalence),
        (3, "oracle triangulation", criterion_03_oracle_triangulation),
        (4, "wall/chamber correctness", criterion_04_wall_chamber_correctness),
        (5, "relative GIT, forgetful map", criterion_05_forgetful_relative_git),
        (6, "facet degeneration", criterion_06_facet_degeneration),
        (7, "limit-mode consistency", criterion_07_limit_mode_consistency),
        (8, "polygon front", criterion_08_polygon_front),
        (9, "CLI determinism", criterion_09_cli_determinism),
    ];
    let mut failed = Vec::new();
    for (number, name, run) in criteria {
        let outcome = std::panic::catch_unwind(run);
        if let Err(payload) = outcome {
            let message = payload
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| payload.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".to_string());
            println!("criterion {number} FAIL - {name}: {message}");
            failed.push(number);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_rat(rng: &mut ChaCha8Rng, lo: i64, hi: i64, max_den: i64) -> Rat {
    let den = rng.gen_range(1..=max_den);
    let num = rng.gen_range(lo * den..=hi * den);
    ratio(num, den)
}

/// A random point of the `sum = n` slice: normalized positive integers.
/// Includes non-effective outcomes when some normalized entry exceeds one.
fn random_slice_point(rng: &mut ChaCha8Rng, m: usize, n: u32) -> WeightVector {
    let r: Vec<i64> = (0..m).map(|_| rng.gen_range(1..=24)).collect();
    let total: i64 = r.iter().sum();
    let coords: Vec<Rat> = r
        .iter()
        .map(|&x| ratio(i64::from(n) * x, total))
        .collect();
    WeightVector::new(QVec::new(coords), n).unwrap()
}

fn random_wall_free_interior(rng: &mut ChaCha8Rng, m: usize) -> WeightVector {
    loop {
        let w = random_slice_point(rng, m, 2);
        if !w.is_effective() {
            continue;
        }
        if w.alpha().iter().any(|a| a.is_integer()) {
            continue; // avoid 0 and 1 entries
        }
        match locate(&w) {
            Ok((_, on)) if on.is_empty() => return w,
            _ => continue,
        }
    }
}

fn criterion_01_hypersimplex_structure() {
    let start = Instant::now();
    for m in 4..=7usize {
        let h = hypersimplex(m, 2).unwrap();
        let choose = m * (m - 1) / 2;
        assert_eq!(h.vertices().len(), choose, "C({m},2) vertices");
        assert_eq!(h.facets().len(), 2 * m, "2m facets");
        assert_eq!(h.affine_dim(), m - 1);
        // the two facet types: a_i = 0 and a_i = 1, each once per index
        let mut expected = Vec::new();
        for i in 0..m {
            expected.push(h.canonical_halfspace(QVec::unit(m, i).neg(), rat(0)));
            expected.push(h.canonical_halfspace(QVec::unit(m, i), rat(1)));
        }
        expected.sort();
        expected.dedup();
        assert_eq!(h.facets(), &expected[..], "facet types for m = {m}");
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "took {elapsed:?}");
    println!("criterion 1 PASS - hypersimplex vertex and facet structure, m = 4..7 ({elapsed:?})");
}

fn criterion_02_gelfand_macpherson_equivalence() {
    let start = Instant::now();

    // n = 2: every realizable coincidence partition, 200 weights per m
    for m in 3..=6usize {
        let parts: Vec<SetPartition> = all_partitions(m)
            .into_iter()
            .filter(|p| p.blocks().len() >= 2) // one block has no rank-2 realization
            .collect();
        let realized: Vec<(SLnConfig, Polytope)> = parts
            .par_iter()
            .map(|p| {
                let cfg = SLnConfig::realize_partition(p).unwrap();
                let poly = matroid_polytope(&plucker(cfg.matrix()).unwrap());
                cfg.proper_flats();
                (cfg, poly)
            })
            .collect();
        let mut weights: Vec<WeightVector> = Vec::new();
        let mut r = rng(0xA11CE + m as u64);
        while weights.len() < 197 {
            weights.push(random_slice_point(&mut r, m, 2));
        }
        // deterministic boundary probes: a vertex, a wall point, the center
        weights.push(WeightVector::new(QVec::indicator(m, &[0, 1]), 2).unwrap());
        weights.push({
            // on the wall {1,2}: alpha_1 + alpha_2 = 1, the rest uniform
            let mut c = vec![ratio(1, (m - 2) as i64); m];
            c[0] = ratio(1, 3);
            c[1] = ratio(2, 3);
            WeightVector::new(QVec::new(c), 2).unwrap()
        });
        weights.push(WeightVector::new(QVec::new(vec![ratio(2, m as i64); m]), 2).unwrap());
        assert_eq!(weights.len(), 200);

        let disagreements: usize = weights
            .par_iter()
            .map(|w| {
                realized
                    .iter()
                    .filter(|(cfg, poly)| {
                        let direct = sln_classify(cfg, w).unwrap().class;
                        let torus = torus_class_in(poly, w.alpha(), m - 1).unwrap();
                        direct != torus
                    })
                    .count()
            })
            .sum();
        assert_eq!(disagreements, 0, "m = {m}");
    }

    // n = 3: 200 random matrix configurations, m in 4..6
    let mut r = rng(0xBEEF);
    let mut cases: Vec<(SLnConfig, WeightVector)> = Vec::new();
    while cases.len() < 200 {
        let m = r.gen_range(4..=6usize);
        let rows: Vec<Vec<i64>> = (0..3)
            .map(|_| (0..m).map(|_| r.gen_range(-3..=3)).collect())
            .collect();
        let mat = QMatrix::from_int_rows(&rows);
        if mat.rank() < 3 || (0..m).any(|j| mat.col(j).is_zero()) {
            continue;
        }
        let cfg = SLnConfig::new(mat).unwrap();
        let w = random_slice_point(&mut r, m, 3);
        cases.push((cfg, w));
    }
    cases.par_iter().for_each(|(cfg, w)| {
        assert!(
            rgit::stability::gm_check(cfg, w).unwrap(),
            "n=3 disagreement at {:?} / {:?}",
            cfg.matrix(),
            w.alpha()
        );
    });

    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 60.0, "took {elapsed:?}");
    println!("criterion 2 PASS - Gelfand-MacPherson class agreement, n = 2 exhaustive and n = 3 randomized ({elapsed:?})");
}

fn criterion_03_oracle_triangulation() {
    let start = Instant::now();
    let mut r = rng(0x0AC1E);
    let cases: Vec<(Vec<QVec>, QVec)> = (0..1000)
        .map(|case| {
            let dim = r.gen_range(2..=5usize);
            let count = r.gen_range(dim + 1..=dim + 5);
            let points: Vec<QVec> = (0..count)
                .map(|_| {
                    QVec::new((0..dim).map(|_| random_rat(&mut r, -3, 3, 3)).collect())
                })
                .collect();
            // probe interior-ish, vertex, and outside shifts
            let mu = match case % 3 {
                0 => {
                    let k = rat(points.len() as i64);
                    let mut c = QVec::zero(dim);
                    for p in &points {
                        c = c.add(p);
                    }
                    c.scale(&(rat(1) / k))
                }
                1 => points[r.gen_range(0..points.len())].clone(),
                _ => QVec::new((0..dim).map(|_| random_rat(&mut r, -5, 5, 2)).collect()),
            };
            (points, mu)
        })
        .collect();
    cases.par_iter().enumerate().for_each(|(case, (points, mu))| {
        let dim = mu.dim();
        let weights = WeightSet::new(points.clone()).unwrap();
        let hull = Polytope::convex_hull(points).unwrap();
        let via_classify = torus_classify(&hull, mu).unwrap().class;
        let via_membership = torus_class_in(&hull, mu, dim).unwrap();
        let via_oracle = oracle_1ps(&weights, mu, &[]).unwrap().class;
        assert_eq!(via_classify, via_membership, "case {case}");
        assert_eq!(
            via_classify, via_oracle,
            "case {case}: mu {mu:?} points {points:?}"
        );
    });
    let elapsed = start.elapsed();
    println!("criterion 3 PASS - torus classifier, membership map, and 1-PS oracle agree on 1000 instances ({elapsed:?})");
}

/// An exact random interior point of a chamber, found by walking from the
/// witness toward a random slice direction, half way to the first
/// constraint.
fn chamber_sample(
    rng: &mut ChaCha8Rng,
    m: usize,
    rel_walls: &[Wall],
    signs: &[i8],
    witness: &QVec,
) -> QVec {
    loop {
        let raw: Vec<i64> = (0..m).map(|_| rng.gen_range(-6..=6i64)).collect();
        let mean = ratio(raw.iter().sum::<i64>(), m as i64);
        let dir = QVec::new(raw.iter().map(|&x| rat(x) - &mean).collect());
        if dir.is_zero() {
            continue;
        }
        // strict constraints as (slack at witness, decrease rate along dir)
        let mut tmax: Option<Rat> = None;
        let mut shrink = |slack: Rat, rate: Rat| {
            if sign(&rate) > 0 {
                let t = slack / rate;
                if tmax.as_ref().is_none_or(|b| t < *b) {
                    tmax = Some(t);
                }
            }
        };
        for i in 0..m {
            shrink(witness[i].clone(), -dir[i].clone()); // alpha_i > 0
            shrink(rat(1) - &witness[i], dir[i].clone()); // alpha_i < 1
        }
        for (w, &s) in rel_walls.iter().zip(signs) {
            let coeffs = w.coefficients(m);
            let v = w.eval(witness);
            let rate = coeffs.dot(&dir);
            if s > 0 {
                shrink(v.clone(), -rate.clone());
            } else {
                shrink(-v, rate);
            }
        }
        let Some(t) = tmax else { continue };
        if t.is_zero() {
            continue;
        }
        return witness.add(&dir.scale(&(t / rat(2))));
    }
}

fn criterion_04_wall_chamber_correctness() {
    let start = Instant::now();
    for m in [4usize, 5] {
        let chambers = enumerate_chambers(m, 2).unwrap();
        let naive = chamber_count_naive(m, 2).unwrap();
        assert_eq!(chambers.len(), naive, "chamber counts m = {m}");

        let rel_walls: Vec<Wall> = walls(m, 2)
            .unwrap()
            .into_iter()
            .filter(|w| w.is_relevant())
            .collect();
        let parts = all_partitions(m);
        let mut r = rng(0xC4A3 + m as u64);
        for c in &chambers {
            let signs: Vec<i8> = rel_walls
                .iter()
                .map(|w| c.signature.sign_of(w).unwrap())
                .collect();
            let table: Vec<StabilityClass> =
                c.classification_table.iter().map(|(_, cls)| *cls).collect();
            // no strictly semistable partitions inside an open chamber
            assert!(table.iter().all(|&t| t != StabilityClass::StrictlySemistable));
            for _ in 0..10 {
                let sample = chamber_sample(&mut r, m, &rel_walls, &signs, &c.witness);
                let wv = WeightVector::new(sample.clone(), 2).unwrap();
                let (sig, on) = locate(&wv).unwrap();
                assert!(on.is_empty());
                assert_eq!(sig, c.signature);
                let sampled: Vec<StabilityClass> =
                    parts.iter().map(|p| sl2_class(p, &sample)).collect();
                assert_eq!(sampled, table, "classification differs inside chamber");
            }
        }

        // on each relevant wall: an interior wall point has a strictly
        // semistable partition (the wall subset glued)
        for w in &rel_walls {
            let (strict, weak) = wall_interior_system(m, w);
            let point = rgit::lp::strict_witness(m, &strict, &weak)
                .unwrap()
                .expect("relevant wall meets the interior");
            let glued = partition_with_block(m, w.indices());
            assert_eq!(
                sl2_class(&glued, &point),
                StabilityClass::StrictlySemistable
            );
        }

        // randomized coverage: generic samples locate into an enumerated
        // signature
        let sigs: BTreeSet<Vec<i8>> = chambers
            .iter()
            .map(|c| rel_walls.iter().map(|w| c.signature.sign_of(w).unwrap()).collect())
            .collect();
        let mut covered = 0;
        while covered < 1000 {
            let w = random_slice_point(&mut r, m, 2);
            if !w.is_effective() || w.alpha().iter().any(|a| a.is_integer()) {
                continue;
            }
            let Ok((sig, on)) = locate(&w) else { continue };
            if !on.is_empty() {
                continue;
            }
            let key: Vec<i8> = rel_walls.iter().map(|x| sig.sign_of(x).unwrap()).collect();
            assert!(sigs.contains(&key), "uncovered signature {key:?}");
            covered += 1;
        }
    }
    let elapsed = start.elapsed();
    println!("criterion 4 PASS - chamber enumeration matches the naive oracle; tables constant per chamber; walls carry strictly semistable partitions ({elapsed:?})");
}

fn wall_interior_system(m: usize, w: &Wall) -> (Vec<rgit::lp::Constraint>, Vec<rgit::lp::Constraint>) {
    use rgit::lp::Constraint;
    let mut strict = Vec::new();
    for i in 0..m {
        strict.push(Constraint::ge(QVec::unit(m, i), rat(0)));
        strict.push(Constraint::le(QVec::unit(m, i), rat(1)));
    }
    let weak = vec![
        Constraint::eq(QVec::new(vec![rat(1); m]), rat(2)),
        Constraint::eq(w.coefficients(m), rat(i64::from(w.level()))),
    ];
    (strict, weak)
}

fn partition_with_block(m: usize, block: &[usize]) -> SetPartition {
    let mut blocks = vec![block.to_vec()];
    for i in 0..m {
        if !block.contains(&i) {
            blocks.push(vec![i]);
        }
    }
    SetPartition::new(m, blocks).unwrap()
}

fn criterion_05_forgetful_relative_git() {
    let start = Instant::now();
    // pinned derived value
    let base = WeightVector::parse("2/3,2/3,2/3", 2).unwrap();
    assert_eq!(epsilon_threshold(&base, 3).unwrap(), ratio(1, 2));

    for m in [4usize, 5] {
        let mut r = rng(0xF03 + m as u64);
        let bases: Vec<WeightVector> = (0..50)
            .map(|_| random_wall_free_interior(&mut r, m - 1))
            .collect();
        for forget in 0..m {
            bases.par_iter().for_each(|base| {
                let threshold = epsilon_threshold(base, forget).unwrap();
                assert!(sign(&threshold) > 0);
                for frac in [ratio(1, 3), ratio(7, 8), ratio(99, 100)] {
                    let eps = &threshold * frac;
                    let rep = forgetful_instance(m, forget, base, &eps).unwrap();
                    assert!(
                        rep.equality_verified,
                        "m={m} forget={forget} eps={eps} base={:?}",
                        base.alpha()
                    );
                    assert!(rep.violated.is_none());
                }
                let rep =
                    forgetful_instance(m, forget, base, &(&threshold * ratio(3, 2))).unwrap();
                assert!(rep.violated.is_some(), "above-threshold report names a wall");
            });
        }
    }
    let elapsed = start.elapsed();
    println!("criterion 5 PASS - forgetful-map loci equal the base pullback below the exact threshold; m=4 uniform threshold = 1/2 ({elapsed:?})");
}

fn criterion_06_facet_degeneration() {
    let start = Instant::now();
    for m in [4usize, 5] {
        let mut r = rng(0xFACE7 + m as u64);
        for facet_index in 0..m {
            for _ in 0..3 {
                // interior facet weight: alpha_i = 1, the rest positive
                // summing to 1
                let rest: Vec<i64> = (0..m - 1).map(|_| r.gen_range(1..=9)).collect();
                let total: i64 = rest.iter().sum();
                let mut coords = Vec::new();
                let mut k = 0;
                for j in 0..m {
                    if j == facet_index {
                        coords.push(rat(1));
                    } else {
                        coords.push(ratio(rest[k], total));
                        k += 1;
                    }
                }
                let w = WeightVector::new(QVec::new(coords), 2).unwrap();
                let rep = facet_instance(m, facet_index, &w).unwrap();
                assert!(rep.no_stable_partition);
                assert!(rep.coincidence_with_index_unstable);
                assert_eq!(rep.table.len(), all_partitions(m).len());
            }
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 5.0, "took {elapsed:?}");
    println!("criterion 6 PASS - facet weights: no stable partitions, coincidences with the facet point unstable ({elapsed:?})");
}

fn criterion_07_limit_mode_consistency() {
    let start = Instant::now();
    for m in [4usize, 5] {
        let mut r = rng(0x11117 + m as u64);
        let (model, _, _) = forgetful_model(m, m - 1);
        for _ in 0..10 {
            let base = random_wall_free_interior(&mut r, m - 1);
            let n0 = tensor_stabilization_bound(&base, m - 1).unwrap();
            // limit loci via the model
            let limit = relative_classify(
                &model,
                &PairLinearization {
                    base: base.clone(),
                    fiber: (),
                    mode: LinearizationMode::Limit,
                },
            )
            .unwrap();
            let parts = all_partitions(m);
            let limit_classes: Vec<bool> = limit
                .points
                .iter()
                .map(|p| {
                    matches!(
                        p.combined,
                        rgit::relative::CombinedClass::Determined(StabilityClass::Stable)
                    )
                })
                .collect();
            for n in [n0, n0 + 1, n0 + 5] {
                // exact classification at the genuine finite linearization
                let w = tensor_path_weights(&base, m - 1, n).unwrap();
                let finite_classes: Vec<bool> = parts
                    .iter()
                    .map(|p| sl2_class(p, w.alpha()) == StabilityClass::Stable)
                    .collect();
                assert_eq!(finite_classes, limit_classes, "n = {n}");
                // the finite set never contains strictly semistables here
                assert!(parts
                    .iter()
                    .all(|p| sl2_class(p, w.alpha()) != StabilityClass::StrictlySemistable));
                // the abstract model agrees
                let finite = relative_classify(
                    &model,
                    &PairLinearization {
                        base: base.clone(),
                        fiber: (),
                        mode: LinearizationMode::Finite(n),
                    },
                )
                .unwrap();
                assert_eq!(finite.semistable_set(), limit.semistable_set());
                assert_eq!(finite.stable_set(), limit.stable_set());
            }
        }
        // BoundaryAmbiguous exactly on wall bases
        let wall_base = match m {
            4 => WeightVector::parse("1,1/2,1/2", 2).unwrap(),
            _ => WeightVector::parse("1/2,1/2,1/2,1/2", 2).unwrap(),
        };
        let err = relative_classify(
            &model,
            &PairLinearization {
                base: wall_base,
                fiber: (),
                mode: LinearizationMode::Limit,
            },
        )
        .unwrap_err();
        assert_eq!(err, rgit::error::Error::BoundaryAmbiguous);
    }
    let elapsed = start.elapsed();
    println!("criterion 7 PASS - limit mode equals finite mode above the reported stabilization bound; ambiguous exactly on wall bases ({elapsed:?})");
}

fn criterion_08_polygon_front() {
    let start = Instant::now();
    let rep = analyze(&SideLengths::parse("1,1,1,1").unwrap()).unwrap();
    assert!(rep.exists && rep.degenerate && rep.moduli_dim.is_none());

    let rep = analyze(&SideLengths::parse("5,1,1,1").unwrap()).unwrap();
    assert!(!rep.exists);

    let rep = analyze(&SideLengths::parse("2,1,1,1").unwrap()).unwrap();
    assert!(rep.exists && !rep.degenerate);
    assert_eq!(rep.moduli_dim, Some(1));

    let mut r = rng(0x9011900);
    for _ in 0..100 {
        let m = r.gen_range(3..=6usize);
        let sides: Vec<Rat> = (0..m).map(|_| random_rat(&mut r, 1, 9, 4)).collect();
        let k = random_rat(&mut r, 1, 7, 3);
        let a = analyze(&SideLengths::new(sides.clone()).unwrap()).unwrap();
        let b = analyze(
            &SideLengths::new(sides.iter().map(|s| s * &k).collect()).unwrap(),
        )
        .unwrap();
        assert_eq!(a.exists, b.exists);
        assert_eq!(a.degenerate, b.degenerate);
        assert_eq!(a.alpha, b.alpha);
        assert_eq!(a.moduli_dim, b.moduli_dim);
    }
    let elapsed = start.elapsed();
    println!("criterion 8 PASS - polygon existence, degeneracy, dimension, and scale invariance ({elapsed:?})");
}

fn criterion_09_cli_determinism() {
    let start = Instant::now();
    let bin = env!("CARGO_BIN_EXE_rgit");
    let cases: Vec<Vec<&str>> = vec![
        vec!["classify", "--weights", "1/2,1/2,1/2,1/2", "--partition", "12|3|4"],
        vec!["walls", "--m", "5", "--n", "2"],
        vec!["chambers", "--m", "4"],
        vec!["polygon", "analyze", "--sides", "2,1,1,1"],
        vec![
            "render",
            "--dir1",
            "1,-1,0,0",
            "--dir2",
            "1,0,-1,0",
            "--center",
            "2/5,1/2,1/2,3/5",
        ],
    ];
    for args in &cases {
        let mut outputs: Vec<Vec<u8>> = Vec::new();
        for threads in ["1", "8", "1", "8", "1", "8"] {
            let out = std::process::Command::new(bin)
                .args(args)
                .env("RGIT_THREADS", threads)
                .output()
                .expect("binary runs");
            assert!(out.status.success(), "{args:?} failed: {out:?}");
            outputs.push(out.stdout);
        }
        assert!(
            outputs.windows(2).all(|w| w[0] == w[1]),
            "outputs differ for {args:?}"
        );
    }
    let elapsed = start.elapsed();
    println!("criterion 9 PASS - byte-identical CLI output across repeated runs and thread counts 1/8 ({elapsed:?})");
}

// supporting checks for the same gate

#[test]
fn effective_cone_membership_drives_existence() {
    // the polygon existence predicate equals semistability of the generic
    // configuration
    let mut r = rng(0x5EED);
    for _ in 0..200 {
        let m = r.gen_range(3..=6usize);
        let sides: Vec<Rat> = (0..m).map(|_| random_rat(&mut r, 1, 9, 4)).collect();
        let lengths = SideLengths::new(sides).unwrap();
        let rep = analyze(&lengths).unwrap();
        let generic = SetPartition::discrete(m);
        let semistable =
            sl2_class(&generic, rep.alpha.alpha()) != StabilityClass::Unstable;
        assert_eq!(rep.exists, semistable);
    }
}

/// Heavy opt-in census: `cargo test -p rgit --test acceptance -- --ignored`.
#[test]
#[ignore = "several minutes of exact LP work"]
fn chambers_census_m6_has_1678_chambers() {
    let chambers = enumerate_chambers(6, 2).unwrap();
    assert_eq!(chambers.len(), 1678);
    let mut r = rng(0x6666);
    // random generic points all land in an enumerated chamber
    let rel: Vec<Wall> = walls(6, 2)
        .unwrap()
        .into_iter()
        .filter(|w| w.is_relevant())
        .collect();
    let sigs: BTreeSet<Vec<i8>> = chambers
        .iter()
        .map(|c| rel.iter().map(|w| c.signature.sign_of(w).unwrap()).collect())
        .collect();
    let mut covered = 0;
    while covered < 300 {
        let w = random_slice_point(&mut r, 6, 2);
        if !w.is_effective() || w.alpha().iter().any(|a| a.is_integer()) {
            continue;
        }
        let Ok((sig, on)) = locate(&w) else { continue };
        if !on.is_empty() {
            continue;
        }
        let key: Vec<i8> = rel.iter().map(|x| sig.sign_of(x).unwrap()).collect();
        assert!(sigs.contains(&key));
        covered += 1;
    }
}

#[test]
fn chambers_census_m5_has_76_chambers() {
    // frozen from the independent sign-vector oracle
    let chambers = enumerate_chambers(5, 2).unwrap();
    assert_eq!(chambers.len(), 76);
    // every signature feasible exactly once
    let rel: Vec<Wall> = walls(5, 2)
        .unwrap()
        .into_iter()
        .filter(|w| w.is_relevant())
        .collect();
    for c in &chambers {
        let signs: Vec<i8> = rel.iter().map(|w| c.signature.sign_of(w).unwrap()).collect();
        assert!(sign_vector_witness(5, 2, &rel, &signs).unwrap().is_some());
    }
}
