//! Density of block codes and subspace codes over large alphabets.
//!
//! A uniformly random set of S vectors in F_q^n (or of S k-subspaces of
//! F_q^n) has some probability of attaining minimum distance at least d.
//! This crate computes exact rational lower and upper bounds for that
//! probability in the Hamming and injection metrics, the sparseness/density
//! threshold cardinality `gamma`, and two independent oracles for checking
//! the bounds at desk scale: exhaustive enumeration on tiny spaces and
//! seeded Monte Carlo estimation on moderate ones.
//!
//! ## Module map
//!
//! - [`combinat`] — exact arbitrary-precision counting: binomials,
//!   q-binomials, ball sizes, Singleton-type maxima, leading-order forms.
//! - [`assoc`] — bounds on non-isolated vertices of association-regular
//!   bipartite graphs, working on abstract profiles only.
//! - [`bounds`] — the density bounds themselves, threshold descriptors,
//!   and the partial-spread specialization.
//! - [`codespace`] — vectors, codes, canonical RREF subspaces, distances,
//!   enumeration, and uniform sampling (bit-packed for q = 2).
//! - [`estimator`] — the two oracles plus brute-force verification of the
//!   class-size and co-neighborhood formulas.
//! - [`report`] — machine-readable records, sweeps, and configuration for
//!   the `code-density` binary.
//!
//! ## Examples
//!
//! One runnable example per capability; start with `exact_vs_bounds`:
//!
//! ```bash
//! cargo run -p code-density --example counting_primitives
//! cargo run -p code-density --example bounds_block_codes
//! cargo run -p code-density --example bounds_subspace_codes
//! cargo run -p code-density --example exact_vs_bounds
//! cargo run -p code-density --example monte_carlo_estimate
//! cargo run -p code-density --example threshold_sweep
//! cargo run -p code-density --example spread_rarity
//! cargo run -p code-density --example verify_formulas
//! cargo run -p code-density --example grassmannian_tour
//! ```
//!
//! The thin `code-density` binary exposes the same functionality as the
//! subcommands `bounds`, `exact`, `estimate`, `sweep`, and `verify`.

pub mod assoc;
pub mod bounds;
pub mod codespace;
pub mod combinat;
pub mod error;
pub mod estimator;
pub mod limits;
mod ratio;
pub mod report;

pub use error::{Error, Result};
pub use limits::WorkLimit;
