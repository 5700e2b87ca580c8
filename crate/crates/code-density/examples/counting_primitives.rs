//! The exact counting layer: binomials, q-binomials, ball sizes,
//! Singleton-type maxima, and the leading-order behavior of the balls.
//!
//! ```bash
//! cargo run -p code-density --example counting_primitives
//! ```

use code_density::bounds::gv_cardinality_estimate;
use code_density::combinat::{
    binom, hamming_ball_asymptotic, hamming_ball_size, hamming_singleton_max,
    injection_ball_asymptotic, injection_ball_size, q_binom, subspace_singleton_max,
};
use num::ToPrimitive;

fn main() {
    println!("binomials:        C(5,2) = {}", binom(5u32, 2));
    println!("                  C(100,49) = {}", binom(100u32, 49));
    println!("q-binomials:      [4 2]_2 = {}  (2-subspaces of F_2^4)", q_binom(4, 2, 2).unwrap());
    println!("                  [6 3]_2 = {}", q_binom(6, 3, 2).unwrap());
    println!("                  [4 2]_3 = {}", q_binom(4, 2, 3).unwrap());
    println!();

    println!("Hamming ball |B(x, 2)| in F_3^4: {}", hamming_ball_size(3, 4, 2).unwrap());
    println!("injection ball |B(X, 1)| in G_2(2,4): {}", injection_ball_size(2, 4, 2, 1).unwrap());
    println!();

    println!("Singleton maxima (minimum distance d):");
    println!("  block codes, q=4 n=5 d=3:     {}", hamming_singleton_max(4, 5, 3).unwrap());
    println!("  subspace codes, q=2 n=6 k=3 d=3: {}", subspace_singleton_max(2, 6, 3, 3).unwrap());
    let gv = gv_cardinality_estimate(4, 3).unwrap();
    println!(
        "  Gilbert-Varshamov scale for n=4 d=3:  q^{} / {}  (= {} at q = 16)",
        gv.exponent,
        gv.divisor,
        gv.evaluate(16)
    );
    println!();

    // Leading terms: the Hamming ball of radius d-1 grows like
    // C(n, d-1) q^(d-1); the injection ball like q^((d-1)(n-d+1)).
    let form = hamming_ball_asymptotic(4, 3).unwrap();
    println!(
        "Hamming ball (n=4, d=3) leading term {} * q^{}; ratio ball/term:",
        form.coefficient, form.exponent
    );
    for q in [4u64, 16, 64, 128] {
        let ball = hamming_ball_size(q, 4, 2).unwrap();
        let term = form.leading_term(q);
        println!(
            "  q = {q:>3}: {:.6}",
            ball.to_f64().unwrap() / term.to_f64().unwrap()
        );
    }
    let form = injection_ball_asymptotic(4, 2, 2).unwrap();
    println!(
        "injection ball (n=4, k=2, d=2) leading term q^{}; ratio ball/term:",
        form.exponent
    );
    for q in [2u64, 4, 16, 64] {
        let ball = injection_ball_size(q, 4, 2, 1).unwrap();
        let term = form.leading_term(q);
        println!(
            "  q = {q:>3}: {:.6}",
            ball.to_f64().unwrap() / term.to_f64().unwrap()
        );
    }
}
