//! The combinatorial norm: the closed form against ⟨P_Λ|P_Λ⟩ over a
//! sector, plus the worked large example.

use superjack::inner::{norm_conjecture, verify_norm};
use superjack::spart::{Sector, SuperPartition, Variant};

fn main() {
    let lam: SuperPartition = "(2,0;5,4,0;4,1,0;1)".parse().unwrap();
    println!("j_{lam} = {}\n", norm_conjecture(&lam, Variant::SAA));

    let sector = Sector::new(2, [1, 1, 1]);
    let n = 5;
    println!("sweep over ({sector}) at N = {n}:");
    for r in verify_norm(sector, n, Variant::SAA).unwrap() {
        println!(
            "  {}  {}  j = {}",
            r.label,
            if r.matched { "ok" } else { "MISMATCH" },
            r.conjectured
        );
    }
}
