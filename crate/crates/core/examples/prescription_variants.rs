//! The alternative prescribed symmetries: ASA and AAS variants remain
//! Hamiltonian eigenfunctions and orthogonal bases with the adjusted
//! norm formula.

use superjack::charges::{eigvals, hamiltonian, HamRoute};
use superjack::exact::AlphaRat;
use superjack::inner::{comb_scalar_variant, norm_conjecture};
use superjack::sjack::{super_jack, JackRoute};
use superjack::spart::{list_sector, Sector, Variant};

fn main() {
    let sector = Sector::new(2, [1, 1, 1]);
    let n = 5;
    for variant in [Variant::SAA, Variant::ASA, Variant::AAS] {
        println!("variant {}:", variant.name());
        for lam in list_sector(sector, n, variant).unwrap() {
            let p = super_jack(&lam, n, variant, JackRoute::Direct).unwrap();
            let data = eigvals(&lam, n);
            let eigen_ok = hamiltonian(&p, HamRoute::Direct).unwrap()
                == p.scale(&AlphaRat::from_poly(data.hamiltonian.clone()));
            let norm = comb_scalar_variant(&p, &p, variant).unwrap();
            let norm_ok = (&norm - &norm_conjecture(&lam, variant)).is_zero();
            println!(
                "  {lam}: eigenfunction {}, norm formula {}",
                if eigen_ok { "ok" } else { "BAD" },
                if norm_ok { "ok" } else { "BAD" }
            );
        }
    }
}
