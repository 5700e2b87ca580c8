//! Run the built-in brute-force verifications: class sizes of the pair
//! association, co-neighborhood counts, center-independence of ball sizes,
//! and the injection-side analogues.
//!
//! ```bash
//! cargo run -p code-density --example verify_formulas
//! ```

use code_density::estimator::all_match;
use code_density::limits::WorkLimit;
use code_density::report::{run_verify, VerifySuite};

fn main() {
    let limit = WorkLimit::default();
    for (name, suite) in [
        ("claim-a (pair-association class sizes)", VerifySuite::ClaimA),
        ("w-formula (co-neighborhood counts)", VerifySuite::WFormula),
        ("ball-sizes (center independence)", VerifySuite::BallSizes),
        ("injection-claims (Grassmannian class sizes)", VerifySuite::InjectionClaims),
    ] {
        let reports = run_verify(suite, &limit).unwrap();
        let ok = all_match(&reports);
        println!(
            "{:<45} {:>4} checks: {}",
            name,
            reports.len(),
            if ok { "all match" } else { "MISMATCH" }
        );
        if !ok {
            for r in reports.iter().filter(|r| !r.matches) {
                println!(
                    "  {}: formula {} but brute force {}",
                    r.quantity, r.formula_value, r.brute_force_value
                );
            }
            std::process::exit(1);
        }
    }
    println!();

    // A sample of what one report looks like.
    let sample = code_density::estimator::verify_claim_a(2, 3, 2, &limit).unwrap();
    println!("sample reports for (q=2, n=3, d=2):");
    for r in sample {
        println!(
            "  {:<32} formula {:>6}   brute force {:>6}",
            r.quantity, r.formula_value, r.brute_force_value
        );
    }
}
