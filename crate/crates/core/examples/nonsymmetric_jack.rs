//! The non-symmetric building blocks: E_η, Dunkl eigenvalues, the
//! degenerate Hecke relations and the three-case swap law.

use superjack::nsjack::{
    dunkl_eigenvalue, nonsym_jack, verify_hecke, verify_swap_action, DunklSpectrum,
};

fn main() {
    let eta = [1u32, 0, 2];
    println!("η = {eta:?}");
    let spectrum = DunklSpectrum::of(&eta);
    for (i, v) in spectrum.values.iter().enumerate() {
        println!("  η̂_{} = {v}", i + 1);
        assert_eq!(*v, dunkl_eigenvalue(&eta, i + 1));
    }
    println!("\nE_η =");
    print!("{}", *nonsym_jack(&eta));

    let hecke = verify_hecke(3, 3);
    println!(
        "\nHecke relations on degree ≤ 3 monomials: {} checks, {}",
        hecke.checked,
        if hecke.passed() { "all hold" } else { "VIOLATED" }
    );
    let swap = verify_swap_action(&eta);
    println!(
        "swap law K_i E_η: {} checks, {}",
        swap.checked,
        if swap.passed() { "all hold" } else { "VIOLATED" }
    );
}
