//! Both orthogonality structures: the combinatorial Gram matrix and the
//! analytic Gram matrix at integer couplings, with the multinomial norm
//! ratio.

use superjack::inner::{verify_analytic_orthogonality, verify_comb_orthogonality};
use superjack::spart::{Sector, Variant};

fn main() {
    let sector = Sector::new(2, [1, 1, 1]);
    println!("combinatorial product on ({sector}) at N = 5:");
    let recs = verify_comb_orthogonality(sector, 5, Variant::SAA).unwrap();
    let bad = recs.iter().filter(|r| !r.vanished).count();
    println!("  {} off-diagonal pairs, {bad} nonzero\n", recs.len());

    for beta in [1u32, 2] {
        println!("analytic product at β = {beta} on ({sector}) at N = 3:");
        let recs = verify_analytic_orthogonality(sector, 3, beta, Variant::SAA).unwrap();
        for r in recs.iter().take(4) {
            println!("  ⟨{}|{}⟩ = {}  {}", r.left, r.right, r.value, if r.ok { "ok" } else { "BAD" });
        }
        let bad = recs.iter().filter(|r| !r.ok).count();
        println!("  ... {} checks, {bad} failures\n", recs.len());
    }
}
