//! Sandwich check at desk scale: exhaustively enumerate every size-S code
//! of a tiny space, compute the exact density, and watch it land between
//! the two exact bounds.
//!
//! ```bash
//! cargo run -p code-density --example exact_vs_bounds
//! ```

use code_density::bounds::{
    density_bounds_hamming, density_bounds_injection, sandwich_holds, HammingParams,
    SubspaceParams,
};
use code_density::estimator::{exact_density_hamming, exact_density_injection};
use code_density::limits::WorkLimit;
use code_density::report::decimal_string;

fn main() {
    let limit = WorkLimit::default();

    println!("Hamming metric, q = 2 and 3:");
    println!(
        "{:>3} {:>3} {:>3} {:>3}  {:>16} {:>16} {:>16}  ok",
        "q", "n", "d", "S", "lower", "exact", "upper"
    );
    for q in [2u64, 3] {
        for (n, d, s) in [(3u32, 2u32, 3u32), (3, 3, 2), (4, 2, 4), (4, 3, 3)] {
            let params = HammingParams::new(q, n, d, s).unwrap();
            let bounds = density_bounds_hamming(&params).unwrap();
            let exact = exact_density_hamming(&params, &limit).unwrap();
            let ok = sandwich_holds(&bounds, &exact);
            println!(
                "{q:>3} {n:>3} {d:>3} {s:>3}  {:>16} {:>16} {:>16}  {}",
                decimal_string(&bounds.lower),
                decimal_string(&exact),
                decimal_string(&bounds.upper),
                if ok { "yes" } else { "NO" },
            );
            assert!(ok);
        }
    }
    println!();

    println!("injection metric, q = 2:");
    println!(
        "{:>3} {:>3} {:>3} {:>3}  {:>16} {:>16} {:>16}  ok",
        "n", "k", "d", "S", "lower", "exact", "upper"
    );
    for (n, k, d, s) in [
        (4u32, 2u32, 2u32, 2u32),
        (4, 2, 2, 3),
        (4, 2, 2, 5),
        (5, 2, 2, 3),
    ] {
        let params = SubspaceParams::new(2, n, k, d, s).unwrap();
        let bounds = density_bounds_injection(&params).unwrap();
        let exact = exact_density_injection(&params, &limit).unwrap();
        let ok = sandwich_holds(&bounds, &exact);
        println!(
            "{n:>3} {k:>3} {d:>3} {s:>3}  {:>16} {:>16} {:>16}  {}",
            decimal_string(&bounds.lower),
            decimal_string(&exact),
            decimal_string(&bounds.upper),
            if ok { "yes" } else { "NO" },
        );
        assert!(ok);
    }
    println!();
    println!("exact values worth remembering:");
    let p = HammingParams::new(2, 3, 2, 3u32).unwrap();
    println!("  delta(F_2^3, S=3, d=2)      = {}", exact_density_hamming(&p, &limit).unwrap());
    let p = SubspaceParams::new(2, 4, 2, 2, 2u32).unwrap();
    println!("  delta(G_2(2,4), S=2, d=2)   = {}", exact_density_injection(&p, &limit).unwrap());
}
