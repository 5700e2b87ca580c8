//! Density bounds for block codes: what fraction of the size-S subsets of
//! F_q^n have minimum Hamming distance at least d?
//!
//! ```bash
//! cargo run -p code-density --example bounds_block_codes
//! ```

use code_density::bounds::{density_bounds_hamming, gamma_hamming, HammingParams};
use code_density::report::decimal_string;
use num::BigUint;

fn main() {
    println!("density of minimum-distance-d codes among size-S subsets of F_q^n");
    println!();
    println!("{:>4} {:>3} {:>3} {:>6}  {:>22} {:>22}", "q", "n", "d", "S", "lower", "upper");
    let cases: [(u64, u32, u32, u64); 7] = [
        (2, 2, 2, 2),
        (2, 3, 2, 3),
        (3, 4, 2, 4),
        (16, 4, 3, 4),
        (64, 4, 3, 8),
        (64, 4, 3, 4096),
        (101, 6, 4, 50),
    ];
    for (q, n, d, s) in cases {
        let params = HammingParams::new(q, n, d, BigUint::from(s)).unwrap();
        let interval = density_bounds_hamming(&params).unwrap();
        println!(
            "{q:>4} {n:>3} {d:>3} {s:>6}  {:>22} {:>22}",
            decimal_string(&interval.lower),
            decimal_string(&interval.upper),
        );
    }
    println!();

    // The raw formulas can leave [0, 1]; users see the clamped interval.
    let params = HammingParams::new(2, 3, 2, 3u32).unwrap();
    let interval = density_bounds_hamming(&params).unwrap();
    println!(
        "raw bounds for (q=2, n=3, d=2, S=3): [{}, {}] -> clamped [{}, {}]",
        interval.lower_raw, interval.upper_raw, interval.lower, interval.upper
    );
    println!();

    // The threshold cardinality separating dense from sparse: sqrt(q^(n-d+1)).
    for (q, n, d) in [(16u64, 4u32, 3u32), (64, 4, 3), (101, 6, 4)] {
        let gamma = gamma_hamming(q, n, d).unwrap();
        println!(
            "gamma(q={q}, n={n}, d={d}) = {q}^({}/{}) ~ {:.3}",
            gamma.exp_num,
            gamma.exp_den,
            gamma.approx_f64()
        );
    }
    println!();
    println!("codes much smaller than gamma are typically good (density -> 1);");
    println!("codes much larger are typically bad (density -> 0).");
}
