//! Density bounds for subspace codes in the injection metric, and the
//! orthogonal-complement duality that lets k > n-k reduce to k <= n-k.
//!
//! ```bash
//! cargo run -p code-density --example bounds_subspace_codes
//! ```

use code_density::bounds::{density_bounds_injection, gamma_injection, SubspaceParams};
use code_density::report::decimal_string;

fn main() {
    println!("density of minimum-injection-distance-d codes among size-S subsets of G_q(k,n)");
    println!();
    println!(
        "{:>4} {:>3} {:>3} {:>3} {:>6}  {:>22} {:>22}",
        "q", "n", "k", "d", "S", "lower", "upper"
    );
    for (q, n, k, d, s) in [
        (2u64, 4u32, 2u32, 2u32, 2u32),
        (2, 4, 2, 2, 3),
        (2, 6, 3, 2, 8),
        (3, 4, 2, 2, 5),
        (9, 4, 2, 2, 3),
        (16, 6, 2, 2, 50),
    ] {
        let params = SubspaceParams::new(q, n, k, d, s).unwrap();
        let interval = density_bounds_injection(&params).unwrap();
        println!(
            "{q:>4} {n:>3} {k:>3} {d:>3} {s:>6}  {:>22} {:>22}",
            decimal_string(&interval.lower),
            decimal_string(&interval.upper),
        );
    }
    println!();

    // Orthogonal complementation is a distance-preserving bijection between
    // G_q(k, n) and G_q(n-k, n): the two densities agree, so parameters are
    // canonicalized to k <= n-k on construction.
    let a = SubspaceParams::new(2, 5, 2, 2, 4u32).unwrap();
    let b = SubspaceParams::new(2, 5, 3, 2, 4u32).unwrap();
    assert_eq!(
        density_bounds_injection(&a).unwrap(),
        density_bounds_injection(&b).unwrap()
    );
    println!("duality: (q=2, n=5, k=2) and (q=2, n=5, k=3) give identical intervals");
    println!("         (k = {} is canonicalized from original k = {})", b.k(), b.original_k);
    println!();

    for (q, n, k, d) in [(2u64, 4u32, 2u32, 2u32), (3, 6, 2, 2), (2, 6, 3, 3)] {
        let gamma = gamma_injection(q, n, k, d).unwrap();
        println!(
            "gamma(q={q}, n={n}, k={k}, d={d}) = {q}^({}/{}) ~ {:.4}",
            gamma.exp_num,
            gamma.exp_den,
            gamma.approx_f64()
        );
    }
}
