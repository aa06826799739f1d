//! Construct a Jack superpolynomial and print its monomial and
//! quasi-power-sum expansions.
//!
//! Usage: cargo run --release --example compute_jack -- "(0;1;0;)" 4

use superjack::sjack::{expand_monomial, expand_quasi, super_jack, JackRoute};
use superjack::spart::{SuperPartition, Variant};

fn main() {
    let mut args = std::env::args().skip(1);
    let label = args.next().unwrap_or_else(|| "(1;2,1,0;;)".into());
    let n: usize = args
        .next()
        .map(|s| s.parse().expect("N must be an integer"))
        .unwrap_or(5);
    let lam: SuperPartition = label.parse().expect("bad superpartition label");
    println!("Λ = {lam}   sector {}   N = {n}", lam.sector());

    let p = super_jack(&lam, n, Variant::SAA, JackRoute::Direct).expect("construction failed");
    println!("\nmonomial expansion:");
    let m = expand_monomial(&p, Variant::SAA).unwrap();
    for (lab, c) in &m.coeffs {
        println!("  m_{lab}  {c}");
    }
    println!("\nquasi-power-sum expansion:");
    let q = expand_quasi(&p).unwrap();
    for (lab, c) in &q.coeffs {
        println!("  q_{lab}  {c}");
    }
}
