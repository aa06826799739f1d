//! The evaluation at z = 1: operator route against the closed form.

use superjack::inner::{eval_conjecture, evaluate_at_one, verify_eval};
use superjack::sjack::super_jack_raw;
use superjack::spart::{Sector, SuperPartition, Variant};

fn main() {
    let lam: SuperPartition = "(2;2,0;1,0;3)".parse().unwrap();
    let n = 6;
    let p = super_jack_raw(&lam, n, Variant::SAA).unwrap();
    let op = evaluate_at_one(&p, &lam.sector(), Variant::SAA).unwrap();
    let formula = eval_conjecture(&lam, n, Variant::SAA).unwrap();
    println!("E_{{6,(1,2,2)}}[P_{lam}]");
    println!("  operator  {op}");
    println!("  formula   {formula}\n");

    for sec in [Sector::new(1, [1, 0, 1]), Sector::new(2, [1, 0, 1])] {
        for n in 3..=5 {
            let records = verify_eval(sec, n, Variant::SAA).unwrap();
            let ok = records.iter().all(|r| r.matched);
            println!(
                "sector ({sec}) at N = {n}: {} members, {}",
                records.len(),
                if ok { "all match" } else { "MISMATCH" }
            );
        }
    }
}
