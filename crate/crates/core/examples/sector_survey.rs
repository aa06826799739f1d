//! Superpartition combinatorics: sector listings, diagrams, core
//! partitions and dominance.

use superjack::spart::{
    dominance_compare, list_sector, render_diagram, Sector, SuperPartition, Variant,
};

fn main() {
    let sector = Sector::new(3, [2, 1, 0]);
    let n = 6;
    let members = list_sector(sector, n, Variant::SAA).unwrap();
    println!("sector ({sector}) with N = {n}: {} superpartitions\n", members.len());
    for lam in &members {
        println!("{lam}   cores {:?}", lam.core_quadruple());
    }

    let top = &members[0];
    let bottom = members.last().unwrap();
    println!(
        "\ndominance: {top} vs {bottom}: {:?}",
        dominance_compare(top, bottom).unwrap()
    );

    let lam: SuperPartition = "(4,2,0,0;4,2,0;3,2;3,1)".parse().unwrap();
    println!("\ndiagram of {lam}:");
    print!("{}", render_diagram(&lam, Variant::SAA));
}
