//! Partial spreads: subspace codes with injection distance k (pairwise
//! trivial intersections). A spread of F_q^n has (q^n - 1)/(q^k - 1)
//! members; sweeping with exactly that cardinality shows random collections
//! are almost never spreads once q grows.
//!
//! ```bash
//! cargo run -p code-density --example spread_rarity
//! ```

use code_density::bounds::{spread_bounds, spread_size, SubspaceParams};
use code_density::estimator::{exact_count_injection, visit_codes_injection};
use code_density::limits::WorkLimit;
use code_density::report::decimal_string;
use num::ToPrimitive;

fn main() {
    println!("spread cardinalities (q^n - 1)/(q^k - 1):");
    for (q, n, k) in [(2u64, 4u32, 2u32), (3, 4, 2), (2, 6, 2), (2, 6, 3)] {
        println!("  q={q} n={n} k={k}: {}", spread_size(q, n, k).unwrap());
    }
    println!();

    println!("upper bound on the probability that a uniform spread-sized");
    println!("collection of 2-subspaces of F_q^4 is a partial spread:");
    println!("{:>5} {:>7} {:>16}", "q", "S", "upper");
    for q in [2u64, 3, 4, 5, 7, 8, 9, 11, 13] {
        let s = spread_size(q, 4, 2).unwrap();
        let interval = spread_bounds(q, 4, 2, s.clone()).unwrap();
        println!(
            "{:>5} {:>7} {:>16}",
            q,
            s,
            decimal_string(&interval.upper)
        );
    }
    println!();

    // At q = 2 the space is small enough to enumerate: a partial spread of
    // size 5 covers all 15 nonzero points, i.e. it is a spread of PG(3, 2).
    let limit = WorkLimit::default();
    let params = SubspaceParams::new(2, 4, 2, 2, 5u32).unwrap();
    let count = exact_count_injection(&params, &limit).unwrap();
    println!("exhaustive search over G_2(2,4): {count} spreads of size 5");

    let mut first = None;
    visit_codes_injection(&params, &limit, |code| {
        if first.is_none() {
            first = Some(code.to_string());
        }
        assert!(code.is_partial_spread().unwrap());
    })
    .unwrap();
    println!("one of them, as canonical RREF bases:");
    for line in first.unwrap().lines() {
        println!("  {line}");
    }

    let total = code_density::codespace::grassmannian_size(2, 2, 4).unwrap();
    let pairs = num::BigUint::from(324632u64); // C(35, 5)
    println!(
        "that is {count} out of C({}, 5) = {pairs} collections (~{:.2e})",
        total,
        count.to_f64().unwrap() / pairs.to_f64().unwrap()
    );
}
