//! The conserved charges: P_Λ as joint eigenfunctions of the gauged
//! Hamiltonian and the three extra charges, plus commutator samples.

use superjack::charges::{
    charge_i, eigvals, hamiltonian, verify_commutativity, HamRoute,
};
use superjack::exact::AlphaRat;
use superjack::sjack::{super_jack, JackRoute};
use superjack::spart::{list_sector, Sector, Variant};

fn main() {
    let sector = Sector::new(2, [1, 1, 1]);
    let n = 4;
    println!("sector ({sector}), N = {n}\n");
    for lam in list_sector(sector, n, Variant::SAA).unwrap() {
        let p = super_jack(&lam, n, Variant::SAA, JackRoute::Direct).unwrap();
        let data = eigvals(&lam, n);
        let hp = hamiltonian(&p, HamRoute::Direct).unwrap();
        assert_eq!(hp, p.scale(&AlphaRat::from_poly(data.hamiltonian.clone())));
        for k in 1..=3 {
            let ip = charge_i(k, &p).unwrap();
            assert_eq!(ip, p.scale(&AlphaRat::from_poly(data.charges[k - 1].clone())));
        }
        println!(
            "P_{lam}: ε = {}, ε^[k] = [{}, {}, {}]",
            data.hamiltonian, data.charges[0], data.charges[1], data.charges[2]
        );
    }

    let pairs = [(1, 0, 2, 0), (2, 0, 2, 1), (2, 1, 2, 3), (2, 2, 2, 3)];
    let report = verify_commutativity(sector, n, &pairs).unwrap();
    println!("\ncommutator samples:");
    for s in &report.samples {
        println!(
            "  [H^[{}]_{}, H^[{}]_{}] = {}",
            s.k,
            s.i,
            s.l,
            s.j,
            if s.commutes { "0" } else { "NONZERO" }
        );
    }
}
