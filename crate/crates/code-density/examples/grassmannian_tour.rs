//! A tour of the finite-geometry layer: enumerating a Grassmannian,
//! canonical RREF forms, injection distances, and uniform sampling.
//!
//! ```bash
//! cargo run -p code-density --example grassmannian_tour
//! ```

use std::collections::BTreeMap;

use code_density::codespace::{
    enumerate_grassmannian, grassmannian_size, injection_distance, sample_subspace_uniform,
    Subspace,
};
use code_density::limits::WorkLimit;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let limit = WorkLimit::default();

    // G_2(2, 4): all 2-subspaces of F_2^4.
    let all = enumerate_grassmannian(2, 2, 4, &limit).unwrap();
    println!(
        "G_2(2,4) has {} subspaces (q-binomial says {})",
        all.len(),
        grassmannian_size(2, 2, 4).unwrap()
    );
    println!("first five canonical RREF forms:");
    for s in all.iter().take(5) {
        println!("  {s}");
    }
    println!();

    // Distance distribution from a fixed center: the ball sizes fall out.
    let center = &all[0];
    let mut by_distance: BTreeMap<u32, usize> = BTreeMap::new();
    for s in &all {
        *by_distance
            .entry(injection_distance(center, s).unwrap())
            .or_default() += 1;
    }
    println!("distance profile around {center}:");
    for (d, count) in &by_distance {
        println!("  distance {d}: {count} subspaces");
    }
    println!("(1 + 18 = 19 is the radius-1 ball; all 35 is the radius-2 ball)");
    println!();

    // Canonical forms make equality and parsing trivial.
    let x = Subspace::from_basis(2, 4, &[vec![1, 1, 0, 0], vec![0, 1, 1, 0]]).unwrap();
    let y = Subspace::from_basis(2, 4, &[vec![1, 0, 1, 0], vec![0, 1, 1, 0]]).unwrap();
    println!("two spanning sets, one subspace: {x} == {y}: {}", x == y);
    let round = Subspace::parse(2, &x.to_string()).unwrap();
    println!("text round-trip: {round} == {x}: {}", round == x);
    println!();

    // Uniform sampling by rank rejection: quick empirical look.
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut counts: BTreeMap<String, u32> = BTreeMap::new();
    let trials = 35_000;
    for _ in 0..trials {
        let s = sample_subspace_uniform(2, 2, 4, &mut rng).unwrap();
        *counts.entry(s.to_string()).or_default() += 1;
    }
    let (min, max) = counts
        .values()
        .fold((u32::MAX, 0), |(lo, hi), &c| (lo.min(c), hi.max(c)));
    println!(
        "{trials} uniform samples over the 35 subspaces: min {min}, expected {}, max {max}",
        trials / 35
    );
}
