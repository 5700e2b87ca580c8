//! Seeded Monte Carlo estimation with exact Clopper-Pearson intervals, and
//! the determinism contract: the result depends on (seed, trials) only,
//! never on how many workers ran the trials.
//!
//! ```bash
//! cargo run -p code-density --example monte_carlo_estimate
//! ```

use code_density::bounds::{HammingParams, SubspaceParams};
use code_density::estimator::{mc_density_hamming, mc_density_injection};
use code_density::report::decimal_string;
use num::{BigInt, BigRational};

fn main() {
    let confidence = BigRational::new(BigInt::from(99), BigInt::from(100));

    // delta(F_2^2, S=2, d=2) is exactly 1/3; estimate it.
    let params = HammingParams::new(2, 2, 2, 2u32).unwrap();
    let est = mc_density_hamming(&params, 200_000, 7, 0, &confidence).unwrap();
    println!("block codes (q=2, n=2, d=2, S=2), exact density 1/3:");
    println!("  trials    {}", est.trials);
    println!("  successes {}", est.successes);
    println!("  estimate  {}", decimal_string(&est.point_estimate));
    println!(
        "  99% CI    [{}, {}]",
        decimal_string(&est.ci_low),
        decimal_string(&est.ci_high)
    );
    println!();

    // delta(G_2(2,4), S=2, d=2) is exactly 8/17 = 0.4706...
    let params = SubspaceParams::new(2, 4, 2, 2, 2u32).unwrap();
    let est = mc_density_injection(&params, 100_000, 7, 0, &confidence).unwrap();
    println!("subspace codes (q=2, n=4, k=2, d=2, S=2), exact density 8/17:");
    println!("  estimate  {}", decimal_string(&est.point_estimate));
    println!(
        "  99% CI    [{}, {}]",
        decimal_string(&est.ci_low),
        decimal_string(&est.ci_high)
    );
    println!();

    // Worker-count independence: every trial derives its own stream from
    // (base seed, trial index), so partitioning across threads cannot
    // change the outcome.
    let params = HammingParams::new(2, 3, 2, 3u32).unwrap();
    let single = mc_density_hamming(&params, 50_000, 42, 1, &confidence).unwrap();
    let many = mc_density_hamming(&params, 50_000, 42, 8, &confidence).unwrap();
    assert_eq!(single, many);
    println!(
        "determinism: 1 worker and 8 workers both hit {} successes out of {}",
        single.successes, single.trials
    );
}
